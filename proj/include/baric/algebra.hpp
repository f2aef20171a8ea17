#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "baric/exactmath.hpp"

namespace baric {

/// Elements of an algebra are coordinate vectors in its basis.
using Element = Vector;

/// A finite-dimensional commutative algebra given by structure constants.
///
/// Only the products e_i e_j with i <= j are stored; e_j e_i reads the same
/// entry, so commutativity holds by construction. Unset products are zero.
class Algebra {
 public:
  Algebra() = default;
  /// The zero algebra of dimension `dim` (dim >= 1).
  Algebra(const FieldSpec& field, std::size_t dim,
          std::vector<std::string> names = {});

  const FieldSpec& field() const { return field_; }
  std::size_t dim() const { return dim_; }

  /// Basis labels; defaults to e0, e1, ...
  const std::vector<std::string>& names() const { return names_; }
  bool has_custom_names() const { return custom_names_; }

  /// e_i e_j, for any order of i and j.
  const Element& product(std::size_t i, std::size_t j) const;
  void set_product(std::size_t i, std::size_t j, Element value);

  Element zero() const { return Element(field_, dim_); }
  Element basis_element(std::size_t i) const;
  /// Element with the given integer coordinates.
  Element element(std::initializer_list<long long> coords) const;

  Element multiply(const Element& x, const Element& y) const;
  /// Left-normed principal power: x^1 = x, x^{k+1} = x^k x. Rejects n = 0.
  Element power(const Element& x, std::size_t n) const;

  /// Matrix of y -> x y (columns are images of the basis).
  Matrix left_multiplication(const Element& x) const;

  /// Span of all s t with s in S, t in T.
  Subspace product_span(const Subspace& s, const Subspace& t) const;
  /// Smallest subspace containing x and closed under the product.
  Subspace subalgebra_generated(const Element& x) const;

  Subspace full_space() const { return Subspace::full(field_, dim_); }

  /// Adjoins a unit at coordinate 0; the original basis moves to 1..n.
  Algebra unitize() const;

  /// Same table reinterpreted in another field (Q -> F_p reduction).
  Algebra over(const FieldSpec& target) const;

  /// Equality of field, dimension and structure constants; labels ignored.
  friend bool operator==(const Algebra& a, const Algebra& b);

  void require_element(const Element& x) const;

 private:
  std::size_t slot(std::size_t i, std::size_t j) const;

  FieldSpec field_;
  std::size_t dim_ = 0;
  std::vector<std::string> names_;
  bool custom_names_ = false;
  std::vector<Element> table_;
};

/// Human-readable linear combination such as "e + 1/2*u - v".
std::string format_element(const Algebra& a, const Element& x);

/// Parses either comma separated coordinates ("1,0,1/2") or a linear
/// combination of basis labels ("u1+s", "e - 1/2*u").
Element parse_element(const Algebra& a, const std::string& text);

}  // namespace baric
