// Copyright 2026 The hypalg Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

// Finite-dimensional commutative unitary algebras over R or C, given by
// structure constants c[i][j][k] with e_i * e_j = sum_k c[i][j][k] e_k.
// Basis index 0 is always the unit.

#ifndef HYPALG_ALGEBRA_HPP
#define HYPALG_ALGEBRA_HPP

#include <complex>
#include <cstddef>
#include <initializer_list>
#include <span>
#include <string>
#include <vector>

#include <Eigen/Core>

namespace hypalg {

/// Scalars are always stored as complex doubles; over the real field the
/// imaginary part is kept at exactly zero.
using Scalar = std::complex<double>;

enum class Field { Real, Complex };

const char* field_name(Field field) noexcept;

/// Coordinates of an algebra element in the defining basis. Carries no
/// reference to its algebra; every operation takes the table explicitly.
class Element {
 public:
  Element() = default;
  explicit Element(std::size_t dim) : coeffs_(dim) {}
  explicit Element(std::vector<Scalar> coeffs) : coeffs_(std::move(coeffs)) {}
  Element(std::initializer_list<Scalar> coeffs) : coeffs_(coeffs) {}

  static Element zero(std::size_t dim) { return Element(dim); }
  static Element unit(std::size_t dim) { return basis(dim, 0); }
  static Element basis(std::size_t dim, std::size_t k);

  std::size_t size() const noexcept { return coeffs_.size(); }
  Scalar& operator[](std::size_t k) { return coeffs_[k]; }
  const Scalar& operator[](std::size_t k) const { return coeffs_[k]; }

  std::span<Scalar> coeffs() noexcept { return coeffs_; }
  std::span<const Scalar> coeffs() const noexcept { return coeffs_; }
  Scalar* data() noexcept { return coeffs_.data(); }
  const Scalar* data() const noexcept { return coeffs_.data(); }

  friend bool operator==(const Element&, const Element&) = default;

 private:
  std::vector<Scalar> coeffs_;
};

class AlgebraTable {
 public:
  /// `constants` is the flat tensor, index (i*dim + j)*dim + k. Sizes are
  /// checked here; the algebra axioms are not (see verify_algebra).
  AlgebraTable(Field field, std::size_t dim, std::vector<std::string> basis_names,
               std::vector<Scalar> constants);

  Field field() const noexcept { return field_; }
  std::size_t dim() const noexcept { return dim_; }
  const std::vector<std::string>& basis_names() const noexcept { return names_; }

  const Scalar& constant(std::size_t i, std::size_t j, std::size_t k) const {
    return constants_[(i * dim_ + j) * dim_ + k];
  }
  /// Coordinates of e_i * e_j.
  std::span<const Scalar> product_row(std::size_t i, std::size_t j) const {
    return {constants_.data() + (i * dim_ + j) * dim_, dim_};
  }
  std::span<const Scalar> constants() const noexcept { return constants_; }

  Element unit() const { return Element::unit(dim_); }
  Element zero() const { return Element::zero(dim_); }
  Element basis(std::size_t k) const { return Element::basis(dim_, k); }

 private:
  Field field_;
  std::size_t dim_;
  std::vector<std::string> names_;
  std::vector<Scalar> constants_;
};

struct AxiomReport {
  double commutativity = 0.0;  // max |c[i][j][k] - c[j][i][k]|
  double unit_law = 0.0;       // max |c[0][j][k] - delta_jk|
  double associativity = 0.0;  // max |(e_i e_j) e_k - e_i (e_j e_k)| coordinatewise
  double realness = 0.0;       // max |Im c| for a real-field table
  double tolerance = 0.0;

  bool commutative() const noexcept { return commutativity <= tolerance; }
  bool unital() const noexcept { return unit_law <= tolerance; }
  bool associative() const noexcept { return associativity <= tolerance; }
  bool passed() const noexcept {
    return commutative() && unital() && associative() && realness <= tolerance;
  }
};

inline constexpr double kDefaultAxiomTolerance = 1e-9;

AxiomReport verify_algebra(const AlgebraTable& table, double tol_axiom = kDefaultAxiomTolerance);

// Vector-space structure. Operands must have equal length (DimensionMismatch).
Element add(const Element& a, const Element& b);
Element sub(const Element& a, const Element& b);
Element neg(const Element& a);
Element scalar_mul(Scalar s, const Element& a);

Element mul(const AlgebraTable& table, const Element& a, const Element& b);

/// a^n by repeated multiplication; a^0 is the unit.
Element power(const AlgebraTable& table, const Element& a, unsigned n);

using ScalarMatrix = Eigen::MatrixXcd;

/// Matrix of v -> a*v: column j holds the coordinates of a * e_j.
ScalarMatrix regular_representation(const AlgebraTable& table, const Element& a);

/// max_k |a_k|
double norm_inf(const Element& a);
double distance_inf(const Element& a, const Element& b);

/// Throws DimensionMismatch unless a has the table's dimension.
void require_dim(const AlgebraTable& table, const Element& a, const char* what);

/// Lexicographic order on coordinate vectors (all real parts, then all
/// imaginary parts), each value first rounded to a multiple of `quantum`.
bool canonical_less(const Element& a, const Element& b, double quantum = 1e-9);

}  // namespace hypalg

#endif  // HYPALG_ALGEBRA_HPP
