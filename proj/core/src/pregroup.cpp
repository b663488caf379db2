#include "pgsem/pregroup.hpp"

#include <algorithm>
#include <cctype>
#include <cstdlib>

#include "pgsem/error.hpp"

namespace pgsem {

bool TypeRegistry::is_valid_name(std::string_view name) noexcept {
  if (name.empty() || name == "1") return false;
  return std::none_of(name.begin(), name.end(), [](unsigned char c) {
    return std::isspace(c) || c == '^';
  });
}

BasicTypeId TypeRegistry::add(std::string_view name) {
  if (!is_valid_name(name)) {
    throw Error(ErrorCode::MalformedToken,
                "invalid basic type name '" + std::string(name) + "'");
  }
  if (find(name)) {
    throw Error(ErrorCode::DuplicateBasicType,
                "basic type '" + std::string(name) + "' already registered");
  }
  names_.emplace_back(name);
  return BasicTypeId{static_cast<std::uint32_t>(names_.size() - 1)};
}

std::optional<BasicTypeId> TypeRegistry::find(std::string_view name) const {
  auto it = std::find(names_.begin(), names_.end(), name);
  if (it == names_.end()) return std::nullopt;
  return BasicTypeId{static_cast<std::uint32_t>(it - names_.begin())};
}

const std::string& TypeRegistry::name(BasicTypeId id) const {
  if (id.value >= names_.size()) {
    throw Error(ErrorCode::UnknownBasicType,
                "basic type id " + std::to_string(id.value));
  }
  return names_[id.value];
}

TypePoset::TypePoset(std::size_t type_count) { resize(type_count); }

void TypePoset::resize(std::size_t n) {
  if (n <= size_) return;
  std::vector<bool> next(n * n, false);
  for (std::size_t i = 0; i < size_; ++i)
    for (std::size_t j = 0; j < size_; ++j)
      next[i * n + j] = closure_[i * size_ + j];
  for (std::size_t i = 0; i < n; ++i) next[i * n + i] = true;
  closure_ = std::move(next);
  size_ = n;
}

void TypePoset::add_order(BasicTypeId p, BasicTypeId q) {
  resize(std::max<std::size_t>(p.value, q.value) + 1);
  closure_[p.value * size_ + q.value] = true;
  // Warshall
  for (std::size_t k = 0; k < size_; ++k)
    for (std::size_t i = 0; i < size_; ++i)
      if (closure_[i * size_ + k])
        for (std::size_t j = 0; j < size_; ++j)
          if (closure_[k * size_ + j]) closure_[i * size_ + j] = true;
}

bool TypePoset::leq(BasicTypeId p, BasicTypeId q) const noexcept {
  if (p == q) return true;
  if (p.value >= size_ || q.value >= size_) return false;
  return closure_[p.value * size_ + q.value];
}

bool TypePoset::is_discrete() const noexcept {
  for (std::size_t i = 0; i < size_; ++i)
    for (std::size_t j = 0; j < size_; ++j)
      if (i != j && closure_[i * size_ + j]) return false;
  return true;
}

SimpleType make_simple(BasicTypeId base, int z) {
  if (std::abs(z) > kMaxAdjointOrder) {
    throw Error(ErrorCode::AdjointOrderOverflow,
                "adjoint order " + std::to_string(z) + " exceeds +/-" +
                    std::to_string(kMaxAdjointOrder));
  }
  return SimpleType{base, z};
}

PregroupType operator*(const PregroupType& lhs, const PregroupType& rhs) {
  PregroupType out = lhs;
  out.simples.insert(out.simples.end(), rhs.simples.begin(),
                     rhs.simples.end());
  return out;
}

namespace {

SimpleType parse_token(std::string_view token, const TypeRegistry& registry) {
  auto caret = token.find('^');
  std::string_view base_name = token.substr(0, caret);
  if (base_name.empty()) {
    throw Error(ErrorCode::MalformedToken,
                "missing basic type in '" + std::string(token) + "'");
  }
  int z = 0;
  if (caret != std::string_view::npos) {
    std::string_view suffix = token.substr(caret + 1);
    if (suffix.empty()) {
      throw Error(ErrorCode::MalformedToken,
                  "empty adjoint suffix in '" + std::string(token) + "'");
    }
    const char dir = suffix.front();
    if ((dir != 'l' && dir != 'r') ||
        suffix.find_first_not_of(dir) != std::string_view::npos) {
      throw Error(ErrorCode::MalformedToken,
                  "adjoint suffix must be all 'l' or all 'r' in '" +
                      std::string(token) + "'");
    }
    const int k = static_cast<int>(suffix.size());
    if (k > kMaxAdjointOrder) {
      throw Error(ErrorCode::AdjointOrderOverflow,
                  "adjoint order of '" + std::string(token) + "' too large");
    }
    z = dir == 'l' ? -k : k;
  }
  auto id = registry.find(base_name);
  if (!id) {
    throw Error(ErrorCode::UnknownBasicType,
                "unknown basic type '" + std::string(base_name) + "'");
  }
  return SimpleType{*id, z};
}

}  // namespace

PregroupType parse_type(std::string_view text, const TypeRegistry& registry) {
  PregroupType out;
  std::size_t pos = 0;
  while (pos < text.size()) {
    while (pos < text.size() &&
           std::isspace(static_cast<unsigned char>(text[pos])))
      ++pos;
    std::size_t end = pos;
    while (end < text.size() &&
           !std::isspace(static_cast<unsigned char>(text[end])))
      ++end;
    if (end == pos) break;
    std::string_view token = text.substr(pos, end - pos);
    if (token != "1") out.simples.push_back(parse_token(token, registry));
    pos = end;
  }
  return out;
}

std::string format_simple(const SimpleType& t, const TypeRegistry& registry) {
  std::string out = registry.name(t.base);
  if (t.z != 0) {
    out += '^';
    out.append(static_cast<std::size_t>(std::abs(t.z)), t.z < 0 ? 'l' : 'r');
  }
  return out;
}

std::string format_type(std::span<const SimpleType> types,
                        const TypeRegistry& registry) {
  if (types.empty()) return "1";
  std::string out;
  for (const auto& t : types) {
    if (!out.empty()) out += ' ';
    out += format_simple(t, registry);
  }
  return out;
}

namespace {

PregroupType adjoint(const PregroupType& t, int step) {
  PregroupType out;
  out.simples.reserve(t.simples.size());
  for (auto it = t.simples.rbegin(); it != t.simples.rend(); ++it)
    out.simples.push_back(make_simple(it->base, it->z + step));
  return out;
}

bool is_odd(int z) noexcept { return z % 2 != 0; }

}  // namespace

PregroupType left_adjoint(const PregroupType& t) { return adjoint(t, -1); }
PregroupType right_adjoint(const PregroupType& t) { return adjoint(t, +1); }

bool contracts(const SimpleType& a, const SimpleType& b,
               const TypePoset& poset) noexcept {
  if (b.z != a.z + 1) return false;
  return is_odd(a.z) ? poset.leq(b.base, a.base) : poset.leq(a.base, b.base);
}

bool weakens_to(const SimpleType& t, const SimpleType& x,
                const TypePoset& poset) noexcept {
  if (t.z != x.z) return false;
  return is_odd(t.z) ? poset.leq(x.base, t.base) : poset.leq(t.base, x.base);
}

}  // namespace pgsem
