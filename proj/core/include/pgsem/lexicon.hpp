#pragma once

#include <cstddef>
#include <filesystem>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "pgsem/error.hpp"
#include "pgsem/pregroup.hpp"
#include "pgsem/tensor.hpp"

namespace pgsem {

// Dimension of the space attached to each basic type. Adjoints share the
// space of their base.
class SpaceAssignment {
 public:
  void assign(BasicTypeId type, std::size_t dim);
  std::optional<std::size_t> dim(BasicTypeId type) const;
  // Throws ShapeMismatch when a base has no dimension.
  Shape shape_of(std::span<const SimpleType> types) const;
  std::size_t size() const noexcept { return dims_.size(); }

 private:
  std::vector<std::size_t> dims_;  // 0 = unassigned
};

struct LexiconEntry {
  std::string word;
  PregroupType typing;
  Tensor tensor;
};

struct Diagnostic {
  std::string word;
  ErrorCode code;
  std::string reason;
};

class Lexicon {
 public:
  explicit Lexicon(Semiring semiring = Semiring::real())
      : semiring_(semiring) {}

  BasicTypeId add_basic_type(std::string_view name, std::size_t dim);
  void add_order(std::string_view lower, std::string_view upper);
  // Appends a typing for `entry.word`; no validation (see validate()).
  void add_entry(LexiconEntry entry);
  // Replaces every typing of `word`.
  void replace_entries(const std::string& word, std::vector<LexiconEntry> list);

  // Convenience: parses `type_text` against the registry.
  PregroupType type(std::string_view type_text) const {
    return parse_type(type_text, registry_);
  }

  // nullptr when unknown.
  const std::vector<LexiconEntry>* lookup(std::string_view word) const;

  const TypeRegistry& registry() const noexcept { return registry_; }
  const TypePoset& poset() const noexcept { return poset_; }
  const SpaceAssignment& spaces() const noexcept { return spaces_; }
  Semiring semiring() const noexcept { return semiring_; }
  const std::map<std::string, std::vector<LexiconEntry>, std::less<>>&
  entries() const noexcept {
    return entries_;
  }
  std::size_t entry_count() const noexcept;
  // Declared (p, q) pairs, before closure.
  const std::vector<std::pair<BasicTypeId, BasicTypeId>>& order_pairs()
      const noexcept {
    return order_pairs_;
  }

 private:
  TypeRegistry registry_;
  TypePoset poset_;
  std::vector<std::pair<BasicTypeId, BasicTypeId>> order_pairs_;
  SpaceAssignment spaces_;
  Semiring semiring_;
  std::map<std::string, std::vector<LexiconEntry>, std::less<>> entries_;
};

// Parses and validates the JSON lexicon format. Throws Error with
// SchemaError, UnknownBasicType, ShapeMismatch, DuplicateBasicType or
// InvalidScalarForSemiring.
Lexicon load_lexicon(std::string_view json_text);
Lexicon load_lexicon_file(const std::filesystem::path& path);

// Inverse of load_lexicon; tensors are written sparse when that is shorter.
std::string serialize_lexicon(const Lexicon& lexicon);

std::vector<Diagnostic> validate(const Lexicon& lexicon);

// Tensor of shape [dim_subj, dim_sent, dim_obj] with T[i, :, j] = truth(i, j)
// and zero elsewhere.
Tensor build_relation_verb(
    std::size_t dim_subj, std::size_t dim_sent, std::size_t dim_obj,
    const std::map<std::pair<std::size_t, std::size_t>, Tensor>& truth,
    Semiring semiring);

// Entry (i, j, k, l) = 1 iff i == l and j == k.
Tensor build_does(std::size_t dim_v, std::size_t dim_j, Semiring semiring);

// Entry (i, a, b, l) = neg_map[a, b] iff i == l.
Tensor build_not(std::size_t dim_v, const Tensor& neg_map);

// ((0, 1), (1, 0)): swaps |0> and |1>.
Tensor logical_not_map(Semiring semiring);

}  // namespace pgsem
