#pragma once

// Free pregroup over a finite poset of basic types.
//
// A simple type is a basic type together with an adjoint order z:
//   z = 0 plain, z = -1 left adjoint (p^l), z = +1 right adjoint (p^r),
//   z = -2 p^ll, z = +2 p^rr, and so on.
// Compound types are finite sequences of simple types; the empty sequence is
// the monoid unit.

#include <compare>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace pgsem {

inline constexpr int kMaxAdjointOrder = 8;

struct BasicTypeId {
  std::uint32_t value = 0;
  friend auto operator<=>(BasicTypeId, BasicTypeId) = default;
};

class TypeRegistry {
 public:
  // Throws MalformedToken for invalid names, DuplicateBasicType for repeats.
  BasicTypeId add(std::string_view name);
  std::optional<BasicTypeId> find(std::string_view name) const;
  const std::string& name(BasicTypeId id) const;
  std::size_t size() const noexcept { return names_.size(); }

  static bool is_valid_name(std::string_view name) noexcept;

 private:
  std::vector<std::string> names_;
};

// Partial order on basic types, kept as its reflexive-transitive closure.
class TypePoset {
 public:
  TypePoset() = default;
  explicit TypePoset(std::size_t type_count);

  // Records p <= q and re-closes. Grows to cover both ids if needed.
  void add_order(BasicTypeId p, BasicTypeId q);
  bool leq(BasicTypeId p, BasicTypeId q) const noexcept;
  std::size_t size() const noexcept { return size_; }
  bool is_discrete() const noexcept;

 private:
  void resize(std::size_t n);

  std::size_t size_ = 0;
  std::vector<bool> closure_;  // size_ x size_, row-major
};

struct SimpleType {
  BasicTypeId base;
  int z = 0;
  friend bool operator==(const SimpleType&, const SimpleType&) = default;
};

// Throws AdjointOrderOverflow when |z| exceeds kMaxAdjointOrder.
SimpleType make_simple(BasicTypeId base, int z);

struct PregroupType {
  std::vector<SimpleType> simples;

  bool is_unit() const noexcept { return simples.empty(); }
  std::size_t size() const noexcept { return simples.size(); }
  friend bool operator==(const PregroupType&, const PregroupType&) = default;
};

// Juxtaposition.
PregroupType operator*(const PregroupType& lhs, const PregroupType& rhs);

PregroupType parse_type(std::string_view text, const TypeRegistry& registry);
std::string format_simple(const SimpleType& t, const TypeRegistry& registry);
std::string format_type(std::span<const SimpleType> types,
                        const TypeRegistry& registry);

PregroupType left_adjoint(const PregroupType& t);
PregroupType right_adjoint(const PregroupType& t);

// a . b <= 1 : b.z == a.z + 1 and the bases are ordered in the direction the
// parity of a.z dictates (even: a <= b, odd: b <= a).
bool contracts(const SimpleType& a, const SimpleType& b,
               const TypePoset& poset) noexcept;

// Position type t may stand in for target element x: t.z == x.z and
// t <= x under the parity rule.
bool weakens_to(const SimpleType& t, const SimpleType& x,
                const TypePoset& poset) noexcept;

struct Link {
  std::size_t left = 0;
  std::size_t right = 0;
  friend auto operator<=>(const Link&, const Link&) = default;
};

struct ReductionDiagram {
  std::size_t n = 0;
  std::vector<Link> links;             // sorted by left endpoint
  std::vector<std::size_t> survivors;  // strictly increasing
  friend bool operator==(const ReductionDiagram&,
                         const ReductionDiagram&) = default;
};

// Empty result means the diagram is a valid reduction of `types`. When
// `target` is given, survivors must also weaken to it element-wise.
std::vector<std::string> diagram_problems(
    const ReductionDiagram& diagram, std::span<const SimpleType> types,
    const TypePoset& poset, const PregroupType* target = nullptr);

struct GreedyReduction {
  PregroupType residual;
  ReductionDiagram diagram;
};

GreedyReduction greedy_reduce(std::span<const SimpleType> types,
                              const TypePoset& poset);

// Interval DP over contraction-only reductions; O(n^3). Deterministic:
// scanning left to right, a position prefers linking (to its nearest valid
// partner) over surviving.
std::optional<ReductionDiagram> reduce_to(std::span<const SimpleType> types,
                                          const PregroupType& target,
                                          const TypePoset& poset);

// Every distinct diagram, in the same preference order as reduce_to, up to
// `limit` results.
std::vector<ReductionDiagram> reduce_all(std::span<const SimpleType> types,
                                         const PregroupType& target,
                                         const TypePoset& poset,
                                         std::size_t limit);

std::string render_ascii(const ReductionDiagram& diagram,
                         std::span<const SimpleType> types,
                         const TypeRegistry& registry);

// `sink_label` names the node survivors attach to; defaults to the survivor
// types themselves.
std::string render_dot(const ReductionDiagram& diagram,
                       std::span<const SimpleType> types,
                       const TypeRegistry& registry,
                       std::string_view sink_label = {});

}  // namespace pgsem
