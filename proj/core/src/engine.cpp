#include "pgsem/engine.hpp"

#include <algorithm>
#include <cctype>

#include "pgsem/error.hpp"

namespace pgsem {

std::vector<std::string> tokenize(std::string_view sentence) {
  std::vector<std::string> out;
  std::size_t pos = 0;
  while (pos < sentence.size()) {
    while (pos < sentence.size() &&
           std::isspace(static_cast<unsigned char>(sentence[pos])))
      ++pos;
    std::size_t end = pos;
    while (end < sentence.size() &&
           !std::isspace(static_cast<unsigned char>(sentence[end])))
      ++end;
    if (end > pos) out.emplace_back(sentence.substr(pos, end - pos));
    pos = end;
  }
  return out;
}

namespace {

std::vector<const std::vector<LexiconEntry>*> lookup_all(
    std::span<const std::string> tokens, const Lexicon& lexicon) {
  if (tokens.empty()) throw Error(ErrorCode::NoReduction, "empty sentence");
  std::vector<const std::vector<LexiconEntry>*> options;
  for (const auto& token : tokens) {
    const auto* list = lexicon.lookup(token);
    if (list == nullptr || list->empty())
      throw Error(ErrorCode::UnknownWord, "'" + token + "'");
    options.push_back(list);
  }
  return options;
}

// Calls `visit` with each typing combination in depth-first lexicon order
// until it returns false.
template <typename Visit>
void for_each_typing(
    const std::vector<const std::vector<LexiconEntry>*>& options,
    Visit&& visit) {
  std::vector<std::size_t> pick(options.size(), 0);
  while (true) {
    if (!visit(pick)) return;
    std::size_t w = options.size();
    while (w > 0) {
      --w;
      if (++pick[w] < options[w]->size()) break;
      pick[w] = 0;
      if (w == 0) return;
    }
  }
}

Analysis make_analysis(std::span<const std::string> tokens,
                       const std::vector<const std::vector<LexiconEntry>*>& options,
                       const std::vector<std::size_t>& pick,
                       const PregroupType& target) {
  Analysis a;
  a.tokens.assign(tokens.begin(), tokens.end());
  a.target = target;
  for (std::size_t w = 0; w < options.size(); ++w) {
    const LexiconEntry& entry = (*options[w])[pick[w]];
    a.chosen.emplace_back(entry);
    a.offsets.push_back(a.flat_types.size());
    a.flat_types.insert(a.flat_types.end(), entry.typing.simples.begin(),
                        entry.typing.simples.end());
  }
  return a;
}

std::string joined(std::span<const std::string> tokens) {
  std::string out;
  for (const auto& t : tokens) out += (out.empty() ? "" : " ") + t;
  return out;
}

}  // namespace

Analysis analyze(std::span<const std::string> tokens, const Lexicon& lexicon,
                 const PregroupType& target) {
  auto found = analyze_all(tokens, lexicon, target, 1);
  if (found.empty()) {
    throw Error(ErrorCode::NoReduction,
                "'" + joined(tokens) + "' does not reduce to " +
                    format_type(target.simples, lexicon.registry()));
  }
  return std::move(found.front());
}

std::vector<Analysis> analyze_all(std::span<const std::string> tokens,
                                  const Lexicon& lexicon,
                                  const PregroupType& target,
                                  std::size_t limit) {
  const auto options = lookup_all(tokens, lexicon);
  std::vector<Analysis> out;
  if (limit == 0) return out;
  for_each_typing(options, [&](const std::vector<std::size_t>& pick) {
    Analysis base = make_analysis(tokens, options, pick, target);
    auto diagrams = reduce_all(base.flat_types, target, lexicon.poset(),
                               limit - out.size());
    for (auto& d : diagrams) {
      Analysis a = base;
      a.diagram = std::move(d);
      out.push_back(std::move(a));
    }
    return out.size() < limit;
  });
  return out;
}

MeaningResult compute_meaning(const Analysis& analysis,
                              const Lexicon& lexicon) {
  const auto& types = analysis.flat_types;
  const auto& diagram = analysis.diagram;

  std::vector<std::size_t> partner(types.size(), types.size());
  for (const auto& [a, b] : diagram.links) {
    partner[a] = b;
    partner[b] = a;
    if (types[a].base == types[b].base) continue;
    const auto da = lexicon.spaces().dim(types[a].base);
    const auto db = lexicon.spaces().dim(types[b].base);
    if (da != db) {
      throw Error(ErrorCode::DimMismatch,
                  "link (" + std::to_string(a) + "," + std::to_string(b) +
                      ") joins " +
                      format_simple(types[a], lexicon.registry()) + " and " +
                      format_simple(types[b], lexicon.registry()) +
                      " whose spaces differ in dimension");
    }
  }

  Tensor boundary = Tensor::scalar(lexicon.semiring().one(), lexicon.semiring());
  std::vector<std::size_t> open;  // global position of each boundary axis
  for (std::size_t w = 0; w < analysis.chosen.size(); ++w) {
    const Tensor& word = analysis.chosen[w].get().tensor;
    boundary = tensor_product(boundary, word);
    const std::size_t first = analysis.offsets[w];
    for (std::size_t k = 0; k < word.rank(); ++k) open.push_back(first + k);

    std::vector<AxisPair> pairs;
    for (std::size_t axis = 0; axis < open.size(); ++axis) {
      const std::size_t p = open[axis];
      if (p < first || partner[p] >= p) continue;  // right endpoints, new only
      const auto other = std::find(open.begin(), open.end(), partner[p]);
      pairs.emplace_back(static_cast<std::size_t>(other - open.begin()), axis);
    }
    if (pairs.empty()) continue;
    boundary = contract(boundary, pairs);
    std::vector<bool> closed(open.size(), false);
    for (const auto& [x, y] : pairs) closed[x] = closed[y] = true;
    std::vector<std::size_t> remaining;
    for (std::size_t axis = 0; axis < open.size(); ++axis)
      if (!closed[axis]) remaining.push_back(open[axis]);
    open = std::move(remaining);
  }

  return MeaningResult{std::move(boundary), analysis};
}

Tensor sentence_meaning(std::string_view sentence, const Lexicon& lexicon,
                        const PregroupType& target) {
  const auto tokens = tokenize(sentence);
  return compute_meaning(analyze(tokens, lexicon, target), lexicon).vector;
}

double similarity(std::span<const std::string> s1,
                  std::span<const std::string> s2, const Lexicon& lexicon,
                  const PregroupType& target, SimilarityMode mode) {
  if (mode == SimilarityMode::Cosine &&
      lexicon.semiring().kind() != SemiringKind::Real) {
    throw Error(ErrorCode::ModeUnsupported,
                "cosine similarity needs the real semiring");
  }
  const Tensor u = compute_meaning(analyze(s1, lexicon, target), lexicon).vector;
  const Tensor v = compute_meaning(analyze(s2, lexicon, target), lexicon).vector;
  const double raw = inner_product(u, v);
  if (mode == SimilarityMode::Raw) return raw;
  const double nu = norm(u);
  const double nv = norm(v);
  if (nu == 0.0 || nv == 0.0) {
    throw Error(ErrorCode::ZeroVector,
                "cosine similarity with a zero sentence meaning");
  }
  return raw / (nu * nv);
}

}  // namespace pgsem
