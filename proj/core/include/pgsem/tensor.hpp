#pragma once

// Dense tensors over a commutative semiring.
//
// Storage is row-major (last index fastest). Scalars are held as doubles for
// every carrier; Boolean values are 0/1 and Natural values are non-negative
// integers, both exactly representable.

#include <cstddef>
#include <initializer_list>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace pgsem {

enum class SemiringKind { Real, Boolean, Natural };

class Semiring {
 public:
  constexpr Semiring() = default;
  constexpr explicit Semiring(SemiringKind kind) : kind_(kind) {}

  static Semiring real() { return Semiring(SemiringKind::Real); }
  static Semiring boolean() { return Semiring(SemiringKind::Boolean); }
  static Semiring natural() { return Semiring(SemiringKind::Natural); }
  // "real" | "boolean" | "natural"; throws SchemaError otherwise.
  static Semiring parse(std::string_view name);

  SemiringKind kind() const noexcept { return kind_; }
  std::string_view name() const noexcept;

  double zero() const noexcept { return 0.0; }
  double one() const noexcept { return 1.0; }
  double add(double a, double b) const noexcept {
    if (kind_ == SemiringKind::Boolean) return (a != 0.0 || b != 0.0) ? 1 : 0;
    return a + b;
  }
  double mul(double a, double b) const noexcept {
    if (kind_ == SemiringKind::Boolean) return (a != 0.0 && b != 0.0) ? 1 : 0;
    return a * b;
  }
  // Whether `v` is an element of the carrier.
  bool admits(double v) const noexcept;

  friend bool operator==(Semiring, Semiring) = default;

 private:
  SemiringKind kind_ = SemiringKind::Real;
};

class Shape {
 public:
  Shape() = default;  // rank 0
  // Throws ShapeMismatch when a dimension is zero.
  Shape(std::initializer_list<std::size_t> dims);
  explicit Shape(std::vector<std::size_t> dims);

  std::size_t rank() const noexcept { return dims_.size(); }
  std::size_t operator[](std::size_t axis) const { return dims_.at(axis); }
  std::span<const std::size_t> dims() const noexcept { return dims_; }
  std::size_t volume() const noexcept;
  std::string to_string() const;

  friend bool operator==(const Shape&, const Shape&) = default;

 private:
  std::vector<std::size_t> dims_;
};

using AxisPair = std::pair<std::size_t, std::size_t>;

class Tensor {
 public:
  Tensor() : Tensor(Shape{}, Semiring::real()) {}
  // Zero tensor.
  Tensor(Shape shape, Semiring semiring);
  // Throws ShapeMismatch unless data.size() == shape.volume(), and
  // InvalidScalarForSemiring for out-of-carrier values.
  Tensor(Shape shape, Semiring semiring, std::vector<double> data);

  static Tensor scalar(double value, Semiring semiring);

  const Shape& shape() const noexcept { return shape_; }
  std::size_t rank() const noexcept { return shape_.rank(); }
  Semiring semiring() const noexcept { return semiring_; }
  std::span<const double> data() const noexcept { return data_; }
  std::size_t size() const noexcept { return data_.size(); }

  // Throws IndexOutOfRange.
  std::size_t offset(std::span<const std::size_t> index) const;
  double at(std::span<const std::size_t> index) const {
    return data_[offset(index)];
  }
  double at(std::initializer_list<std::size_t> index) const {
    return at(std::span<const std::size_t>(index.begin(), index.size()));
  }
  void set(std::span<const std::size_t> index, double value);
  void set(std::initializer_list<std::size_t> index, double value) {
    set(std::span<const std::size_t>(index.begin(), index.size()), value);
  }

  friend bool operator==(const Tensor&, const Tensor&) = default;

 private:
  Shape shape_;
  Semiring semiring_;
  std::vector<double> data_;
};

Tensor zeros(const Shape& shape, Semiring semiring);
Tensor basis_vector(std::size_t dim, std::size_t i, Semiring semiring);

// Entry (I, J) = A[I] * B[J]; shape is the concatenation.
Tensor tensor_product(const Tensor& a, const Tensor& b);

// Sum_i e_i (x) e_i as a [dim, dim] tensor.
Tensor eta(std::size_t dim, Semiring semiring);

// Sums over equal values of each paired axis; remaining axes keep their
// original order. Throws AxisMismatch for repeated or out-of-range axes and
// DimMismatch for pairs of unequal extent.
Tensor contract(const Tensor& a, std::span<const AxisPair> pairs);
inline Tensor contract(const Tensor& a, std::initializer_list<AxisPair> pairs) {
  return contract(a, std::span<const AxisPair>(pairs.begin(), pairs.size()));
}

// Output axis k is input axis perm[k].
Tensor permute_axes(const Tensor& a, std::span<const std::size_t> perm);

double inner_product(const Tensor& u, const Tensor& v);
Tensor add(const Tensor& a, const Tensor& b);
Tensor scale(double c, const Tensor& a);

// Matrix of a map (axis 0 = input basis index, axis 1 = output) to the state
// Sum_i e_i (x) f(e_i). The stored data is unchanged.
Tensor map_to_state(const Tensor& m);

// Real semiring only.
double norm(const Tensor& v);
Tensor normalize(const Tensor& v);

}  // namespace pgsem
