#include <algorithm>
#include <vector>

#include "detail.hpp"
#include "pgsem/error.hpp"
#include "pgsem/pregroup.hpp"

namespace pgsem {

namespace detail {

std::vector<std::string> structural_problems(const ReductionDiagram& diagram,
                                             std::size_t type_count) {
  std::vector<std::string> problems;
  const std::size_t n = diagram.n;
  if (n != type_count) {
    problems.push_back("diagram covers " + std::to_string(n) +
                       " positions but there are " +
                       std::to_string(type_count) + " types");
    return problems;
  }

  std::vector<int> uses(n, 0);
  for (const auto& link : diagram.links) {
    if (link.left >= link.right || link.right >= n) {
      problems.push_back("link (" + std::to_string(link.left) + "," +
                         std::to_string(link.right) + ") out of range");
      continue;
    }
    ++uses[link.left];
    ++uses[link.right];
  }
  if (!std::is_sorted(diagram.links.begin(), diagram.links.end()))
    problems.push_back("links are not sorted by left endpoint");

  for (std::size_t i = 0; i < diagram.survivors.size(); ++i) {
    const std::size_t s = diagram.survivors[i];
    if (s >= n) {
      problems.push_back("survivor " + std::to_string(s) + " out of range");
      continue;
    }
    if (i > 0 && diagram.survivors[i - 1] >= s)
      problems.push_back("survivors are not strictly increasing");
    ++uses[s];
  }
  for (std::size_t p = 0; p < n; ++p) {
    if (uses[p] != 1) {
      problems.push_back("position " + std::to_string(p) + " used " +
                         std::to_string(uses[p]) + " times");
    }
  }

  for (const auto& [a, b] : diagram.links) {
    for (const auto& [c, d] : diagram.links) {
      if (a < c && c < b && b < d) {
        problems.push_back("links (" + std::to_string(a) + "," +
                           std::to_string(b) + ") and (" + std::to_string(c) +
                           "," + std::to_string(d) + ") cross");
      }
    }
    for (std::size_t s : diagram.survivors) {
      if (a < s && s < b) {
        problems.push_back("survivor " + std::to_string(s) +
                           " lies under link (" + std::to_string(a) + "," +
                           std::to_string(b) + ")");
      }
    }
  }
  return problems;
}

}  // namespace detail

std::vector<std::string> diagram_problems(const ReductionDiagram& diagram,
                                          std::span<const SimpleType> types,
                                          const TypePoset& poset,
                                          const PregroupType* target) {
  auto problems = detail::structural_problems(diagram, types.size());
  if (!problems.empty()) return problems;

  for (const auto& [a, b] : diagram.links) {
    if (!contracts(types[a], types[b], poset)) {
      problems.push_back("link (" + std::to_string(a) + "," +
                         std::to_string(b) +
                         ") joins types that do not contract");
    }
  }
  if (target != nullptr) {
    if (target->size() != diagram.survivors.size()) {
      problems.push_back("survivor count does not match target length");
    } else {
      for (std::size_t i = 0; i < diagram.survivors.size(); ++i) {
        if (!weakens_to(types[diagram.survivors[i]], target->simples[i],
                        poset))
          problems.push_back("survivor " +
                             std::to_string(diagram.survivors[i]) +
                             " does not match target element " +
                             std::to_string(i));
      }
    }
  }
  return problems;
}

GreedyReduction greedy_reduce(std::span<const SimpleType> types,
                              const TypePoset& poset) {
  GreedyReduction out;
  out.diagram.n = types.size();
  std::vector<std::size_t> stack;
  for (std::size_t i = 0; i < types.size(); ++i) {
    if (!stack.empty() && contracts(types[stack.back()], types[i], poset)) {
      out.diagram.links.push_back({stack.back(), i});
      stack.pop_back();
    } else {
      stack.push_back(i);
    }
  }
  std::sort(out.diagram.links.begin(), out.diagram.links.end());
  out.diagram.survivors = stack;
  for (std::size_t p : stack) out.residual.simples.push_back(types[p]);
  return out;
}

namespace {

// Tables for the interval DP.
//   nullable(i, j): half-open segment [i, j) reduces to 1.
//   placeable(p, q): suffix [p, n) reduces to target suffix [q, m).
class ReductionTables {
 public:
  ReductionTables(std::span<const SimpleType> types,
                  const PregroupType& target, const TypePoset& poset)
      : types_(types),
        target_(target),
        poset_(poset),
        n_(types.size()),
        m_(target.size()),
        nullable_((n_ + 1) * (n_ + 1), false),
        placeable_((n_ + 1) * (m_ + 1), false) {
    for (std::size_t i = 0; i <= n_; ++i) nullable_[idx(i, i)] = true;
    for (std::size_t len = 2; len <= n_; len += 2) {
      for (std::size_t i = 0; i + len <= n_; ++i) {
        const std::size_t j = i + len;
        for (std::size_t k = i + 1; k < j; k += 2) {
          if (links(i, k, j)) {
            nullable_[idx(i, j)] = true;
            break;
          }
        }
      }
    }

    placeable_[pidx(n_, m_)] = true;
    for (std::size_t p = n_; p-- > 0;) {
      for (std::size_t q = 0; q <= m_; ++q) {
        bool ok = q < m_ && survives(p, q) && placeable(p + 1, q + 1);
        for (std::size_t k = p + 1; !ok && k < n_; k += 2)
          ok = link_then_place(p, k, q);
        placeable_[pidx(p, q)] = ok;
      }
    }
  }

  bool nullable(std::size_t i, std::size_t j) const {
    return nullable_[idx(i, j)];
  }
  bool placeable(std::size_t p, std::size_t q) const {
    return placeable_[pidx(p, q)];
  }

  // i links k, inside (i, k) is nullable, and [k+1, j) is nullable.
  bool links(std::size_t i, std::size_t k, std::size_t j) const {
    return contracts(types_[i], types_[k], poset_) && nullable(i + 1, k) &&
           nullable(k + 1, j);
  }
  bool link_then_place(std::size_t p, std::size_t k, std::size_t q) const {
    return contracts(types_[p], types_[k], poset_) && nullable(p + 1, k) &&
           placeable(k + 1, q);
  }
  bool survives(std::size_t p, std::size_t q) const {
    return weakens_to(types_[p], target_.simples[q], poset_);
  }

  std::size_t n() const { return n_; }
  std::size_t m() const { return m_; }

 private:
  std::size_t idx(std::size_t i, std::size_t j) const {
    return i * (n_ + 1) + j;
  }
  std::size_t pidx(std::size_t p, std::size_t q) const {
    return p * (m_ + 1) + q;
  }

  std::span<const SimpleType> types_;
  const PregroupType& target_;
  const TypePoset& poset_;
  std::size_t n_;
  std::size_t m_;
  std::vector<bool> nullable_;
  std::vector<bool> placeable_;
};

struct Task {
  enum class Kind { Null, Place } kind;
  std::size_t a;  // segment start / position
  std::size_t b;  // segment end / target index
};

// Depth-first over the remaining tasks. The tables guarantee every branch
// taken here completes, so the first leaf reached is the preferred diagram.
class DiagramEnumerator {
 public:
  DiagramEnumerator(const ReductionTables& tables, std::size_t limit)
      : tables_(tables), limit_(limit) {}

  std::vector<ReductionDiagram> run() {
    if (limit_ == 0 || !tables_.placeable(0, 0)) return {};
    current_.n = tables_.n();
    std::vector<Task> tasks{{Task::Kind::Place, 0, 0}};
    step(tasks);
    return std::move(results_);
  }

 private:
  bool done() const { return results_.size() >= limit_; }

  void step(std::vector<Task>& tasks) {
    if (done()) return;
    if (tasks.empty()) {
      ReductionDiagram d = current_;
      std::sort(d.links.begin(), d.links.end());
      results_.push_back(std::move(d));
      return;
    }
    const Task task = tasks.back();
    tasks.pop_back();
    if (task.kind == Task::Kind::Null) {
      expand_null(task, tasks);
    } else {
      expand_place(task, tasks);
    }
    tasks.push_back(task);
  }

  void expand_null(const Task& task, std::vector<Task>& tasks) {
    const auto [i, j] = std::pair{task.a, task.b};
    if (i == j) {
      step(tasks);
      return;
    }
    for (std::size_t k = i + 1; k < j && !done(); k += 2) {
      if (!tables_.links(i, k, j)) continue;
      with_link({i, k}, tasks,
                {{Task::Kind::Null, k + 1, j}, {Task::Kind::Null, i + 1, k}});
    }
  }

  void expand_place(const Task& task, std::vector<Task>& tasks) {
    const auto [p, q] = std::pair{task.a, task.b};
    if (p == tables_.n()) {
      step(tasks);
      return;
    }
    for (std::size_t k = p + 1; k < tables_.n() && !done(); k += 2) {
      if (!tables_.link_then_place(p, k, q)) continue;
      with_link({p, k}, tasks,
                {{Task::Kind::Place, k + 1, q}, {Task::Kind::Null, p + 1, k}});
    }
    if (!done() && q < tables_.m() && tables_.survives(p, q) &&
        tables_.placeable(p + 1, q + 1)) {
      current_.survivors.push_back(p);
      tasks.push_back({Task::Kind::Place, p + 1, q + 1});
      step(tasks);
      tasks.pop_back();
      current_.survivors.pop_back();
    }
  }

  // Pushes `pending` in order, so the last element is processed first.
  void with_link(Link link, std::vector<Task>& tasks,
                 std::initializer_list<Task> pending) {
    current_.links.push_back(link);
    for (const auto& t : pending) tasks.push_back(t);
    step(tasks);
    tasks.resize(tasks.size() - pending.size());
    current_.links.pop_back();
  }

  const ReductionTables& tables_;
  std::size_t limit_;
  ReductionDiagram current_;
  std::vector<ReductionDiagram> results_;
};

}  // namespace

std::vector<ReductionDiagram> reduce_all(std::span<const SimpleType> types,
                                         const PregroupType& target,
                                         const TypePoset& poset,
                                         std::size_t limit) {
  ReductionTables tables(types, target, poset);
  return DiagramEnumerator(tables, limit).run();
}

std::optional<ReductionDiagram> reduce_to(std::span<const SimpleType> types,
                                          const PregroupType& target,
                                          const TypePoset& poset) {
  auto found = reduce_all(types, target, poset, 1);
  if (found.empty()) return std::nullopt;
  return std::move(found.front());
}

}  // namespace pgsem
