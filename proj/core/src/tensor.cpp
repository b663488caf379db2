#include "pgsem/tensor.hpp"

#include <cmath>
#include <numeric>

#include "pgsem/error.hpp"

namespace pgsem {

Semiring Semiring::parse(std::string_view name) {
  if (name == "real") return real();
  if (name == "boolean") return boolean();
  if (name == "natural") return natural();
  throw Error(ErrorCode::SchemaError,
              "unknown semiring '" + std::string(name) + "'");
}

std::string_view Semiring::name() const noexcept {
  switch (kind_) {
    case SemiringKind::Real: return "real";
    case SemiringKind::Boolean: return "boolean";
    case SemiringKind::Natural: return "natural";
  }
  return "real";
}

bool Semiring::admits(double v) const noexcept {
  switch (kind_) {
    case SemiringKind::Real: return std::isfinite(v);
    case SemiringKind::Boolean: return v == 0.0 || v == 1.0;
    case SemiringKind::Natural:
      return std::isfinite(v) && v >= 0.0 && std::floor(v) == v;
  }
  return false;
}

Shape::Shape(std::initializer_list<std::size_t> dims)
    : Shape(std::vector<std::size_t>(dims)) {}

Shape::Shape(std::vector<std::size_t> dims) : dims_(std::move(dims)) {
  for (std::size_t d : dims_) {
    if (d == 0) throw Error(ErrorCode::ShapeMismatch, "zero-sized dimension");
  }
}

std::size_t Shape::volume() const noexcept {
  return std::accumulate(dims_.begin(), dims_.end(), std::size_t{1},
                         std::multiplies<>());
}

std::string Shape::to_string() const {
  std::string out = "[";
  for (std::size_t i = 0; i < dims_.size(); ++i) {
    if (i > 0) out += ",";
    out += std::to_string(dims_[i]);
  }
  return out + "]";
}

Tensor::Tensor(Shape shape, Semiring semiring)
    : shape_(std::move(shape)),
      semiring_(semiring),
      data_(shape_.volume(), semiring.zero()) {}

Tensor::Tensor(Shape shape, Semiring semiring, std::vector<double> data)
    : shape_(std::move(shape)), semiring_(semiring), data_(std::move(data)) {
  if (data_.size() != shape_.volume()) {
    throw Error(ErrorCode::ShapeMismatch,
                "shape " + shape_.to_string() + " needs " +
                    std::to_string(shape_.volume()) + " entries, got " +
                    std::to_string(data_.size()));
  }
  for (double v : data_) {
    if (!semiring_.admits(v)) {
      throw Error(ErrorCode::InvalidScalarForSemiring,
                  std::to_string(v) + " is not a " +
                      std::string(semiring_.name()) + " scalar");
    }
  }
}

Tensor Tensor::scalar(double value, Semiring semiring) {
  return Tensor(Shape{}, semiring, {value});
}

std::size_t Tensor::offset(std::span<const std::size_t> index) const {
  if (index.size() != shape_.rank()) {
    throw Error(ErrorCode::IndexOutOfRange,
                "index of rank " + std::to_string(index.size()) +
                    " for tensor of shape " + shape_.to_string());
  }
  std::size_t off = 0;
  for (std::size_t axis = 0; axis < index.size(); ++axis) {
    if (index[axis] >= shape_[axis]) {
      throw Error(ErrorCode::IndexOutOfRange,
                  "index " + std::to_string(index[axis]) + " on axis " +
                      std::to_string(axis) + " of shape " +
                      shape_.to_string());
    }
    off = off * shape_[axis] + index[axis];
  }
  return off;
}

void Tensor::set(std::span<const std::size_t> index, double value) {
  if (!semiring_.admits(value)) {
    throw Error(ErrorCode::InvalidScalarForSemiring,
                std::to_string(value) + " is not a " +
                    std::string(semiring_.name()) + " scalar");
  }
  data_[offset(index)] = value;
}

namespace {

void require_same_semiring(const Tensor& a, const Tensor& b) {
  if (a.semiring() != b.semiring()) {
    throw Error(ErrorCode::SemiringMismatch,
                std::string(a.semiring().name()) + " vs " +
                    std::string(b.semiring().name()));
  }
}

void require_same_shape(const Tensor& a, const Tensor& b) {
  require_same_semiring(a, b);
  if (a.shape() != b.shape()) {
    throw Error(ErrorCode::ShapeMismatch,
                a.shape().to_string() + " vs " + b.shape().to_string());
  }
}

std::vector<std::size_t> strides_of(const Shape& shape) {
  std::vector<std::size_t> strides(shape.rank(), 1);
  for (std::size_t axis = shape.rank(); axis-- > 1;)
    strides[axis - 1] = strides[axis] * shape[axis];
  return strides;
}

}  // namespace

Tensor zeros(const Shape& shape, Semiring semiring) {
  return Tensor(shape, semiring);
}

Tensor basis_vector(std::size_t dim, std::size_t i, Semiring semiring) {
  if (i >= dim) {
    throw Error(ErrorCode::IndexOutOfRange,
                "basis index " + std::to_string(i) + " for dimension " +
                    std::to_string(dim));
  }
  Tensor out(Shape{dim}, semiring);
  out.set({i}, semiring.one());
  return out;
}

Tensor tensor_product(const Tensor& a, const Tensor& b) {
  require_same_semiring(a, b);
  std::vector<std::size_t> dims(a.shape().dims().begin(),
                                a.shape().dims().end());
  dims.insert(dims.end(), b.shape().dims().begin(), b.shape().dims().end());
  const Semiring sr = a.semiring();
  std::vector<double> data;
  data.reserve(a.size() * b.size());
  for (double x : a.data())
    for (double y : b.data()) data.push_back(sr.mul(x, y));
  return Tensor(Shape(std::move(dims)), sr, std::move(data));
}

Tensor eta(std::size_t dim, Semiring semiring) {
  Tensor out(Shape{dim, dim}, semiring);
  for (std::size_t i = 0; i < dim; ++i) out.set({i, i}, semiring.one());
  return out;
}

Tensor contract(const Tensor& a, std::span<const AxisPair> pairs) {
  const Shape& shape = a.shape();
  const std::size_t rank = shape.rank();
  std::vector<bool> paired(rank, false);
  for (const auto& [x, y] : pairs) {
    if (x >= rank || y >= rank || x == y || paired[x] || paired[y]) {
      throw Error(ErrorCode::AxisMismatch,
                  "bad axis pair (" + std::to_string(x) + "," +
                      std::to_string(y) + ") for rank " +
                      std::to_string(rank));
    }
    if (shape[x] != shape[y]) {
      throw Error(ErrorCode::DimMismatch,
                  "axes " + std::to_string(x) + " and " + std::to_string(y) +
                      " have extents " + std::to_string(shape[x]) + " and " +
                      std::to_string(shape[y]));
    }
    paired[x] = paired[y] = true;
  }
  if (pairs.empty()) return a;

  const auto in_strides = strides_of(shape);
  // One odometer digit per free axis, then one per pair.
  std::vector<std::size_t> extent;
  std::vector<std::size_t> step;
  std::vector<std::size_t> out_dims;
  for (std::size_t axis = 0; axis < rank; ++axis) {
    if (paired[axis]) continue;
    extent.push_back(shape[axis]);
    step.push_back(in_strides[axis]);
    out_dims.push_back(shape[axis]);
  }
  const std::size_t free_digits = extent.size();
  for (const auto& [x, y] : pairs) {
    extent.push_back(shape[x]);
    step.push_back(in_strides[x] + in_strides[y]);
  }

  Tensor out(Shape(std::move(out_dims)), a.semiring());
  const auto out_strides = strides_of(out.shape());
  const Semiring sr = a.semiring();
  const auto src = a.data();
  std::vector<double> acc(out.size(), sr.zero());

  std::vector<std::size_t> digit(extent.size(), 0);
  std::size_t in_off = 0;
  std::size_t out_off = 0;
  while (true) {
    acc[out_off] = sr.add(acc[out_off], src[in_off]);
    std::size_t d = extent.size();
    while (d > 0) {
      --d;
      if (++digit[d] < extent[d]) {
        in_off += step[d];
        if (d < free_digits) out_off += out_strides[d];
        break;
      }
      in_off -= step[d] * (extent[d] - 1);
      if (d < free_digits) out_off -= out_strides[d] * (extent[d] - 1);
      digit[d] = 0;
      if (d == 0) return Tensor(out.shape(), sr, std::move(acc));
    }
    if (extent.empty()) return Tensor(out.shape(), sr, std::move(acc));
  }
}

Tensor permute_axes(const Tensor& a, std::span<const std::size_t> perm) {
  const std::size_t rank = a.rank();
  if (perm.size() != rank) {
    throw Error(ErrorCode::AxisMismatch, "permutation of wrong length");
  }
  std::vector<bool> seen(rank, false);
  std::vector<std::size_t> dims(rank);
  for (std::size_t k = 0; k < rank; ++k) {
    if (perm[k] >= rank || seen[perm[k]])
      throw Error(ErrorCode::AxisMismatch, "not a permutation");
    seen[perm[k]] = true;
    dims[k] = a.shape()[perm[k]];
  }
  Tensor out(Shape(dims), a.semiring());
  const auto in_strides = strides_of(a.shape());
  std::vector<double> data(a.size());
  std::vector<std::size_t> idx(rank, 0);
  for (std::size_t o = 0; o < data.size(); ++o) {
    std::size_t in_off = 0;
    for (std::size_t k = 0; k < rank; ++k) in_off += idx[k] * in_strides[perm[k]];
    data[o] = a.data()[in_off];
    for (std::size_t k = rank; k-- > 0;) {
      if (++idx[k] < dims[k]) break;
      idx[k] = 0;
    }
  }
  return Tensor(out.shape(), a.semiring(), std::move(data));
}

double inner_product(const Tensor& u, const Tensor& v) {
  require_same_shape(u, v);
  const Semiring sr = u.semiring();
  double acc = sr.zero();
  for (std::size_t i = 0; i < u.size(); ++i)
    acc = sr.add(acc, sr.mul(u.data()[i], v.data()[i]));
  return acc;
}

Tensor add(const Tensor& a, const Tensor& b) {
  require_same_shape(a, b);
  const Semiring sr = a.semiring();
  std::vector<double> data(a.size());
  for (std::size_t i = 0; i < data.size(); ++i)
    data[i] = sr.add(a.data()[i], b.data()[i]);
  return Tensor(a.shape(), sr, std::move(data));
}

Tensor scale(double c, const Tensor& a) {
  const Semiring sr = a.semiring();
  if (!sr.admits(c)) {
    throw Error(ErrorCode::InvalidScalarForSemiring,
                std::to_string(c) + " is not a " + std::string(sr.name()) +
                    " scalar");
  }
  std::vector<double> data(a.size());
  for (std::size_t i = 0; i < data.size(); ++i)
    data[i] = sr.mul(c, a.data()[i]);
  return Tensor(a.shape(), sr, std::move(data));
}

Tensor map_to_state(const Tensor& m) {
  if (m.rank() != 2) {
    throw Error(ErrorCode::RankError,
                "map_to_state needs a matrix, got rank " +
                    std::to_string(m.rank()));
  }
  return m;
}

double norm(const Tensor& v) {
  if (v.semiring().kind() != SemiringKind::Real) {
    throw Error(ErrorCode::NotRealSemiring, "norm is defined over reals only");
  }
  return std::sqrt(inner_product(v, v));
}

Tensor normalize(const Tensor& v) {
  const double n = norm(v);
  if (n == 0.0) throw Error(ErrorCode::ZeroVector, "cannot normalize zero");
  return scale(1.0 / n, v);
}

}  // namespace pgsem
