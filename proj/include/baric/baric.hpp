#pragma once

// Weight homomorphisms and the constructions built on them: gametization,
// the star transform and its inverse, the Jordan hull J(A) and the two
// unitization isomorphisms.

#include <cstddef>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "baric/algebra.hpp"
#include "baric/report.hpp"

namespace baric {

/// Values of a linear form on the basis.
class Weight {
 public:
  Weight() = default;
  Weight(const FieldSpec& field, std::vector<Scalar> values);
  Weight(const FieldSpec& field, std::initializer_list<long long> values);

  const FieldSpec& field() const { return field_; }
  std::size_t size() const { return values_.size(); }
  const Scalar& operator[](std::size_t i) const { return values_[i]; }
  const std::vector<Scalar>& values() const { return values_; }

  bool is_zero() const;
  Scalar operator()(const Element& x) const;
  /// 1 x n matrix of the form.
  Matrix as_row() const;
  Weight over(const FieldSpec& target) const;

  friend bool operator==(const Weight&, const Weight&);

 private:
  FieldSpec field_;
  std::vector<Scalar> values_;
};

struct WeightCheck {
  bool valid = false;
  /// First basis pair (i <= j) with w(e_i e_j) != w(e_i) w(e_j).
  std::optional<std::pair<std::size_t, std::size_t>> failing_pair;
  std::string message;
};

/// Nonzero and multiplicative on every basis pair.
WeightCheck validate_weight(const Algebra& a, const Weight& w);

/// An algebra together with a validated weight homomorphism.
class BaricAlgebra {
 public:
  /// Throws PreconditionError naming the failing pair if w is not a nonzero
  /// homomorphism.
  BaricAlgebra(Algebra algebra, Weight weight);

  const Algebra& algebra() const { return algebra_; }
  const Weight& weight() const { return weight_; }
  const FieldSpec& field() const { return algebra_.field(); }
  std::size_t dim() const { return algebra_.dim(); }

  /// ker w.
  Subspace kernel() const;
  BaricAlgebra over(const FieldSpec& target) const;

  friend bool operator==(const BaricAlgebra&, const BaricAlgebra&) = default;

 private:
  Algebra algebra_;
  Weight weight_;
};

/// x . y = (1 - gamma) x y + gamma/2 (w(x) y + w(y) x). Rejects gamma = 1.
BaricAlgebra gametize(const BaricAlgebra& b, const Scalar& gamma);

struct StarTransform {
  Algebra algebra;
  /// A^{*2}: span of all star products.
  Subspace square;
};

/// x * y = x y - 1/2 (w(x) y + w(y) x).
StarTransform star_transform(const BaricAlgebra& b);

/// x y = x * y + 1/2 (w(x) y + w(y) x). Requires w != 0 and A^{*2} in ker w;
/// a violation is reported with a product lying outside ker w.
BaricAlgebra star_inverse(const Algebra& star, const Weight& w);

/// J(B) = F1 + B with x . y = 3/4 w(x) w(y) 1 + x y, unit at coordinate 0.
Algebra jordanize(const BaricAlgebra& b);

class LinearMap {
 public:
  /// `matrix` has target.dim() rows and source.dim() columns; column j is
  /// the image of source basis element j.
  LinearMap(Algebra source, Algebra target, Matrix matrix);

  const Algebra& source() const { return source_; }
  const Algebra& target() const { return target_; }
  const Matrix& matrix() const { return matrix_; }

  Element operator()(const Element& x) const;

 private:
  Algebra source_;
  Algebra target_;
  Matrix matrix_;
};

/// phi: (B)^# -> (B_2)^#, 1 -> 1, x -> w(x) 1 - x.
LinearMap phi_unitization_iso(const BaricAlgebra& b);

/// Phi: (B)^# -> J(B_{-1}), 1 -> 1, x -> 1/4 w(x) 1 + 1/2 x.
LinearMap jordan_iso(const BaricAlgebra& b);

struct HomomorphismReport {
  IdentityReport report;
  std::size_t rank = 0;
  bool bijective = false;
};

/// Checks f(e_i e_j) = f(e_i) f(e_j) on all basis pairs i <= j.
HomomorphismReport is_algebra_homomorphism(const LinearMap& f);

}  // namespace baric
