#include "pgsem/lexicon.hpp"

#include <algorithm>
#include <cctype>
#include <fstream>
#include <set>
#include <sstream>

#include <nlohmann/json.hpp>

namespace pgsem {

using nlohmann::json;

void SpaceAssignment::assign(BasicTypeId type, std::size_t dim) {
  if (dim == 0) throw Error(ErrorCode::ShapeMismatch, "dimension must be >= 1");
  if (type.value >= dims_.size()) dims_.resize(type.value + 1, 0);
  dims_[type.value] = dim;
}

std::optional<std::size_t> SpaceAssignment::dim(BasicTypeId type) const {
  if (type.value >= dims_.size() || dims_[type.value] == 0) return std::nullopt;
  return dims_[type.value];
}

Shape SpaceAssignment::shape_of(std::span<const SimpleType> types) const {
  std::vector<std::size_t> dims;
  dims.reserve(types.size());
  for (const auto& t : types) {
    auto d = dim(t.base);
    if (!d) {
      throw Error(ErrorCode::ShapeMismatch,
                  "no space assigned to basic type #" +
                      std::to_string(t.base.value));
    }
    dims.push_back(*d);
  }
  return Shape(std::move(dims));
}

BasicTypeId Lexicon::add_basic_type(std::string_view name, std::size_t dim) {
  if (dim == 0) {
    throw Error(ErrorCode::SchemaError,
                "basic type '" + std::string(name) + "' needs dim >= 1");
  }
  const BasicTypeId id = registry_.add(name);
  spaces_.assign(id, dim);
  return id;
}

void Lexicon::add_order(std::string_view lower, std::string_view upper) {
  auto p = registry_.find(lower);
  auto q = registry_.find(upper);
  if (!p || !q) {
    throw Error(ErrorCode::UnknownBasicType,
                "order pair mentions unknown type '" +
                    std::string(!p ? lower : upper) + "'");
  }
  poset_.add_order(*p, *q);
  order_pairs_.emplace_back(*p, *q);
}

void Lexicon::add_entry(LexiconEntry entry) {
  auto& list = entries_[entry.word];
  list.push_back(std::move(entry));
}

void Lexicon::replace_entries(const std::string& word,
                              std::vector<LexiconEntry> list) {
  entries_[word] = std::move(list);
}

const std::vector<LexiconEntry>* Lexicon::lookup(std::string_view word) const {
  auto it = entries_.find(word);
  return it == entries_.end() ? nullptr : &it->second;
}

std::size_t Lexicon::entry_count() const noexcept {
  std::size_t n = 0;
  for (const auto& [word, list] : entries_) n += list.size();
  return n;
}

std::vector<Diagnostic> validate(const Lexicon& lexicon) {
  std::vector<Diagnostic> out;
  const Semiring sr = lexicon.semiring();
  for (const auto& [word, list] : lexicon.entries()) {
    for (const auto& entry : list) {
      if (entry.word.empty() ||
          std::any_of(entry.word.begin(), entry.word.end(),
                      [](unsigned char c) { return std::isspace(c); })) {
        out.push_back({entry.word, ErrorCode::SchemaError,
                       "word must be a non-empty token without whitespace"});
        continue;
      }
      if (entry.tensor.semiring() != sr) {
        const auto data = entry.tensor.data();
        const bool admissible = std::all_of(
            data.begin(), data.end(), [&](double v) { return sr.admits(v); });
        if (admissible) {
          out.push_back({word, ErrorCode::SemiringMismatch,
                         "tensor is tagged " +
                             std::string(entry.tensor.semiring().name()) +
                             ", lexicon is " + std::string(sr.name())});
        } else {
          out.push_back({word, ErrorCode::InvalidScalarForSemiring,
                         "tensor holds values outside the " +
                             std::string(sr.name()) + " semiring"});
        }
        continue;
      }
      const auto& simples = entry.typing.simples;
      auto unknown = std::find_if(simples.begin(), simples.end(), [&](auto& t) {
        return t.base.value >= lexicon.registry().size();
      });
      if (unknown != simples.end()) {
        out.push_back({word, ErrorCode::UnknownBasicType,
                       "typing uses unregistered basic type #" +
                           std::to_string(unknown->base.value)});
        continue;
      }
      const Shape expected = lexicon.spaces().shape_of(simples);
      if (entry.tensor.shape() != expected) {
        out.push_back({word, ErrorCode::ShapeMismatch,
                       "tensor shape " + entry.tensor.shape().to_string() +
                           " but typing '" +
                           format_type(simples, lexicon.registry()) +
                           "' needs " + expected.to_string()});
      }
    }
  }
  return out;
}

namespace {

[[noreturn]] void schema_error(const std::string& message) {
  throw Error(ErrorCode::SchemaError, message);
}

const json& require(const json& obj, const char* key, const std::string& ctx) {
  auto it = obj.find(key);
  if (it == obj.end()) schema_error(ctx + ": missing \"" + key + "\"");
  return *it;
}

std::size_t as_positive(const json& v, const std::string& ctx) {
  if (!v.is_number_unsigned() || v.get<std::size_t>() == 0)
    schema_error(ctx + ": expected a positive integer");
  return v.get<std::size_t>();
}

double as_scalar(const json& v, Semiring sr, const std::string& ctx) {
  if (!v.is_number()) schema_error(ctx + ": expected a number");
  const double x = v.get<double>();
  if (!sr.admits(x)) {
    throw Error(ErrorCode::InvalidScalarForSemiring,
                ctx + ": " + v.dump() + " is not a " + std::string(sr.name()) +
                    " scalar");
  }
  return x;
}

Tensor parse_matrix(const json& rows, Semiring sr, const std::string& ctx) {
  if (!rows.is_array() || rows.empty() || !rows.front().is_array())
    schema_error(ctx + ": neg_map must be a non-empty array of rows");
  const std::size_t r = rows.size();
  const std::size_t c = rows.front().size();
  if (c == 0) schema_error(ctx + ": neg_map rows are empty");
  std::vector<double> data;
  for (const auto& row : rows) {
    if (!row.is_array() || row.size() != c)
      schema_error(ctx + ": neg_map rows differ in length");
    for (const auto& v : row) data.push_back(as_scalar(v, sr, ctx));
  }
  return Tensor(Shape{r, c}, sr, std::move(data));
}

Tensor parse_builtin(const json& entry, const Shape& shape, Semiring sr,
                     const std::string& ctx) {
  const json& kind = require(entry, "builtin", ctx);
  if (!kind.is_string()) schema_error(ctx + ": builtin must be a string");
  const std::string name = kind.get<std::string>();
  if (name != "does" && name != "not")
    schema_error(ctx + ": unknown builtin '" + name + "'");
  if (name == "does" && entry.contains("neg_map"))
    schema_error(ctx + ": neg_map only applies to builtin \"not\"");
  if (shape.rank() != 4 || shape[0] != shape[3] || shape[1] != shape[2]) {
    throw Error(ErrorCode::ShapeMismatch,
                ctx + ": builtin '" + name + "' needs a typing whose spaces " +
                    "have the form V J J V, got " + shape.to_string());
  }
  if (name == "does") return build_does(shape[0], shape[1], sr);

  Tensor neg;
  if (entry.contains("neg_map")) {
    neg = parse_matrix(entry["neg_map"], sr, ctx);
  } else if (shape[1] == 2) {
    neg = logical_not_map(sr);
  } else {
    schema_error(ctx + ": builtin \"not\" over a space of dimension " +
                 std::to_string(shape[1]) + " requires neg_map");
  }
  if (neg.shape() != Shape{shape[1], shape[1]}) {
    throw Error(ErrorCode::ShapeMismatch,
                ctx + ": neg_map shape " + neg.shape().to_string() +
                    " does not match the space");
  }
  return build_not(shape[0], neg);
}

Tensor parse_tensor(const json& spec, const Shape& expected, Semiring sr,
                    const std::string& ctx) {
  if (!spec.is_object()) schema_error(ctx + ": tensor must be an object");
  const json& shape_json = require(spec, "shape", ctx);
  if (!shape_json.is_array()) schema_error(ctx + ": shape must be an array");
  std::vector<std::size_t> dims;
  for (const auto& d : shape_json) dims.push_back(as_positive(d, ctx + " shape"));
  Shape shape(std::move(dims));
  if (shape != expected) {
    throw Error(ErrorCode::ShapeMismatch,
                ctx + ": tensor shape " + shape.to_string() +
                    " but the typing needs " + expected.to_string());
  }

  const bool dense = spec.contains("dense");
  const bool sparse = spec.contains("sparse");
  if (dense == sparse)
    schema_error(ctx + ": tensor needs exactly one of \"dense\"/\"sparse\"");

  if (dense) {
    const json& values = spec["dense"];
    if (!values.is_array()) schema_error(ctx + ": dense must be an array");
    if (values.size() != shape.volume()) {
      throw Error(ErrorCode::ShapeMismatch,
                  ctx + ": dense has " + std::to_string(values.size()) +
                      " values, shape needs " +
                      std::to_string(shape.volume()));
    }
    std::vector<double> data;
    data.reserve(values.size());
    for (const auto& v : values) data.push_back(as_scalar(v, sr, ctx));
    return Tensor(shape, sr, std::move(data));
  }

  const json& items = spec["sparse"];
  if (!items.is_array()) schema_error(ctx + ": sparse must be an array");
  Tensor out(shape, sr);
  std::set<std::size_t> seen;
  for (const auto& item : items) {
    if (!item.is_object()) schema_error(ctx + ": sparse items are objects");
    const json& idx_json = require(item, "idx", ctx);
    if (!idx_json.is_array()) schema_error(ctx + ": idx must be an array");
    std::vector<std::size_t> idx;
    for (const auto& i : idx_json) {
      if (!i.is_number_unsigned()) schema_error(ctx + ": idx entries are >= 0");
      idx.push_back(i.get<std::size_t>());
    }
    if (idx.size() != shape.rank()) {
      throw Error(ErrorCode::ShapeMismatch,
                  ctx + ": sparse idx of rank " + std::to_string(idx.size()) +
                      " for shape " + shape.to_string());
    }
    for (std::size_t a = 0; a < idx.size(); ++a) {
      if (idx[a] >= shape[a]) {
        throw Error(ErrorCode::ShapeMismatch,
                    ctx + ": sparse idx " + idx_json.dump() +
                        " outside shape " + shape.to_string());
      }
    }
    if (!seen.insert(out.offset(idx)).second)
      schema_error(ctx + ": duplicate sparse idx " + idx_json.dump());
    out.set(idx, as_scalar(require(item, "val", ctx), sr, ctx));
  }
  return out;
}

Lexicon parse_document(const json& doc) {
  if (!doc.is_object()) schema_error("lexicon must be a JSON object");
  const json& sr_json = require(doc, "semiring", "lexicon");
  if (!sr_json.is_string()) schema_error("semiring must be a string");
  Lexicon lex(Semiring::parse(sr_json.get<std::string>()));

  const json& types = require(doc, "basic_types", "lexicon");
  if (!types.is_array()) schema_error("basic_types must be an array");
  for (const auto& t : types) {
    if (!t.is_object()) schema_error("basic_types items are objects");
    const json& name = require(t, "name", "basic type");
    if (!name.is_string()) schema_error("basic type name must be a string");
    const std::string ctx = "basic type '" + name.get<std::string>() + "'";
    lex.add_basic_type(name.get<std::string>(),
                       as_positive(require(t, "dim", ctx), ctx + " dim"));
  }

  if (auto it = doc.find("order"); it != doc.end()) {
    if (!it->is_array()) schema_error("order must be an array of pairs");
    for (const auto& pair : *it) {
      if (!pair.is_array() || pair.size() != 2 || !pair[0].is_string() ||
          !pair[1].is_string())
        schema_error("order items must be [\"p\", \"q\"] pairs");
      lex.add_order(pair[0].get<std::string>(), pair[1].get<std::string>());
    }
  }

  const json& entries = require(doc, "entries", "lexicon");
  if (!entries.is_array()) schema_error("entries must be an array");
  for (std::size_t i = 0; i < entries.size(); ++i) {
    const json& e = entries[i];
    std::string ctx = "entry #" + std::to_string(i);
    if (!e.is_object()) schema_error(ctx + ": expected an object");
    const json& word = require(e, "word", ctx);
    if (!word.is_string()) schema_error(ctx + ": word must be a string");
    ctx += " ('" + word.get<std::string>() + "')";
    const json& type_text = require(e, "type", ctx);
    if (!type_text.is_string()) schema_error(ctx + ": type must be a string");

    PregroupType typing;
    try {
      typing = lex.type(type_text.get<std::string>());
    } catch (const Error& err) {
      if (err.code() == ErrorCode::UnknownBasicType) throw;
      schema_error(ctx + ": " + err.what());
    }
    const Shape shape = lex.spaces().shape_of(typing.simples);

    const bool has_tensor = e.contains("tensor");
    const bool has_builtin = e.contains("builtin");
    if (has_tensor == has_builtin)
      schema_error(ctx + ": needs exactly one of \"tensor\"/\"builtin\"");
    Tensor tensor = has_tensor
                        ? parse_tensor(e["tensor"], shape, lex.semiring(), ctx)
                        : parse_builtin(e, shape, lex.semiring(), ctx);
    lex.add_entry({word.get<std::string>(), std::move(typing),
                   std::move(tensor)});
  }

  auto problems = validate(lex);
  if (!problems.empty()) {
    const auto& d = problems.front();
    throw Error(d.code, "'" + d.word + "': " + d.reason);
  }
  return lex;
}

json scalar_json(double v, Semiring sr) {
  if (sr.kind() == SemiringKind::Real) return v;
  return static_cast<std::uint64_t>(v);
}

}  // namespace

Lexicon load_lexicon(std::string_view json_text) {
  json doc;
  try {
    doc = json::parse(json_text.begin(), json_text.end());
  } catch (const json::exception& e) {
    throw Error(ErrorCode::SchemaError, std::string("invalid JSON: ") + e.what());
  }
  try {
    return parse_document(doc);
  } catch (const json::exception& e) {
    throw Error(ErrorCode::SchemaError, e.what());
  }
}

Lexicon load_lexicon_file(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) {
    throw Error(ErrorCode::SchemaError,
                "cannot read lexicon file '" + path.string() + "'");
  }
  std::ostringstream buf;
  buf << in.rdbuf();
  return load_lexicon(buf.str());
}

std::string serialize_lexicon(const Lexicon& lexicon) {
  const Semiring sr = lexicon.semiring();
  const auto& reg = lexicon.registry();
  json doc;
  doc["semiring"] = std::string(sr.name());
  doc["basic_types"] = json::array();
  for (std::uint32_t i = 0; i < reg.size(); ++i) {
    doc["basic_types"].push_back(
        {{"name", reg.name(BasicTypeId{i})},
         {"dim", lexicon.spaces().dim(BasicTypeId{i}).value_or(0)}});
  }
  if (!lexicon.order_pairs().empty()) {
    doc["order"] = json::array();
    for (const auto& [p, q] : lexicon.order_pairs())
      doc["order"].push_back({reg.name(p), reg.name(q)});
  }
  doc["entries"] = json::array();
  for (const auto& [word, list] : lexicon.entries()) {
    for (const auto& entry : list) {
      const Tensor& t = entry.tensor;
      json tensor;
      tensor["shape"] = std::vector<std::size_t>(t.shape().dims().begin(),
                                                 t.shape().dims().end());
      const auto data = t.data();
      const auto nonzero = static_cast<std::size_t>(
          std::count_if(data.begin(), data.end(),
                        [](double v) { return v != 0.0; }));
      if (nonzero * (t.rank() + 1) < data.size()) {
        json items = json::array();
        std::vector<std::size_t> idx(t.rank(), 0);
        for (std::size_t o = 0; o < data.size(); ++o) {
          if (data[o] != 0.0)
            items.push_back({{"idx", idx}, {"val", scalar_json(data[o], sr)}});
          for (std::size_t a = t.rank(); a-- > 0;) {
            if (++idx[a] < t.shape()[a]) break;
            idx[a] = 0;
          }
        }
        tensor["sparse"] = std::move(items);
      } else {
        json values = json::array();
        for (double v : data) values.push_back(scalar_json(v, sr));
        tensor["dense"] = std::move(values);
      }
      doc["entries"].push_back(
          {{"word", word},
           {"type", format_type(entry.typing.simples, reg)},
           {"tensor", std::move(tensor)}});
    }
  }
  return doc.dump(2) + "\n";
}

Tensor build_relation_verb(
    std::size_t dim_subj, std::size_t dim_sent, std::size_t dim_obj,
    const std::map<std::pair<std::size_t, std::size_t>, Tensor>& truth,
    Semiring semiring) {
  Tensor out(Shape{dim_subj, dim_sent, dim_obj}, semiring);
  for (const auto& [ij, value] : truth) {
    const auto [i, j] = ij;
    if (i >= dim_subj || j >= dim_obj) {
      throw Error(ErrorCode::IndexOutOfRange,
                  "pair (" + std::to_string(i) + "," + std::to_string(j) +
                      ") outside " + std::to_string(dim_subj) + "x" +
                      std::to_string(dim_obj));
    }
    if (value.semiring() != semiring) {
      throw Error(ErrorCode::SemiringMismatch,
                  "sentence vector semiring differs from the verb's");
    }
    if (value.shape() != Shape{dim_sent}) {
      throw Error(ErrorCode::ShapeMismatch,
                  "sentence vector shape " + value.shape().to_string() +
                      ", expected [" + std::to_string(dim_sent) + "]");
    }
    for (std::size_t s = 0; s < dim_sent; ++s) out.set({i, s, j}, value.at({s}));
  }
  return out;
}

Tensor build_does(std::size_t dim_v, std::size_t dim_j, Semiring semiring) {
  Tensor out(Shape{dim_v, dim_j, dim_j, dim_v}, semiring);
  for (std::size_t i = 0; i < dim_v; ++i)
    for (std::size_t j = 0; j < dim_j; ++j) out.set({i, j, j, i}, semiring.one());
  return out;
}

Tensor build_not(std::size_t dim_v, const Tensor& neg_map) {
  if (neg_map.rank() != 2 || neg_map.shape()[0] != neg_map.shape()[1]) {
    throw Error(ErrorCode::RankError,
                "negation map must be a square matrix, got shape " +
                    neg_map.shape().to_string());
  }
  const std::size_t d = neg_map.shape()[0];
  Tensor out(Shape{dim_v, d, d, dim_v}, neg_map.semiring());
  for (std::size_t i = 0; i < dim_v; ++i)
    for (std::size_t a = 0; a < d; ++a)
      for (std::size_t b = 0; b < d; ++b) out.set({i, a, b, i}, neg_map.at({a, b}));
  return out;
}

Tensor logical_not_map(Semiring semiring) {
  return Tensor(Shape{2, 2}, semiring, {0, 1, 1, 0});
}

}  // namespace pgsem
