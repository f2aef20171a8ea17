#pragma once

// Exact scalars over Q and F_p (p >= 5), dense vectors and matrices over
// them, and subspaces kept in canonical reduced row-echelon form.

#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <optional>
#include <iosfwd>
#include <span>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include <gmpxx.h>

#include "baric/errors.hpp"

namespace baric {

class FieldSpec {
 public:
  /// The rationals.
  FieldSpec() = default;

  static FieldSpec rationals() { return FieldSpec{}; }
  /// Throws FieldError unless p is a prime >= 5.
  static FieldSpec prime(std::uint64_t p);

  bool is_rational() const { return modulus_ == 0; }
  bool is_prime_field() const { return modulus_ != 0; }
  /// 0 for Q.
  std::uint64_t modulus() const { return modulus_; }
  /// Field characteristic; 0 for Q.
  std::uint64_t characteristic() const { return modulus_; }

  /// "Q" or "F_p".
  std::string name() const;

  friend bool operator==(const FieldSpec&, const FieldSpec&) = default;

 private:
  friend class Scalar;
  explicit FieldSpec(std::uint64_t p) : modulus_(p) {}
  std::uint64_t modulus_ = 0;
};

/// An exact element of a FieldSpec. Rationals are always fully reduced,
/// residues always lie in [0, p).
class Scalar {
 public:
  /// Rational zero.
  Scalar() = default;
  Scalar(const FieldSpec& field, long long value);
  /// Maps a rational into `field`; throws FieldError when the denominator is
  /// not invertible mod p.
  Scalar(const FieldSpec& field, const mpq_class& value);

  static Scalar zero(const FieldSpec& field) { return Scalar(field, 0); }
  static Scalar one(const FieldSpec& field) { return Scalar(field, 1); }
  static Scalar fraction(const FieldSpec& field, long long num, long long den);

  /// Parses "[+-]digits[/digits]".
  static Scalar parse(const FieldSpec& field, std::string_view text);

  FieldSpec field() const;
  bool is_zero() const;
  bool is_one() const;

  /// Canonical text: "-3/8" over Q, residue digits over F_p.
  std::string to_string() const;

  /// The rational value; only valid over Q.
  const mpq_class& rational() const;
  /// The residue; only valid over F_p.
  std::uint64_t residue() const;

  /// Re-expresses this value in `target`. Q -> F_p reduces; F_p -> F_p
  /// requires equal moduli; F_p -> Q is rejected.
  Scalar to_field(const FieldSpec& target) const;

  Scalar inverse() const;

  Scalar& operator+=(const Scalar& rhs);
  Scalar& operator-=(const Scalar& rhs);
  Scalar& operator*=(const Scalar& rhs);
  Scalar& operator/=(const Scalar& rhs);

  friend Scalar operator+(Scalar a, const Scalar& b) { return a += b; }
  friend Scalar operator-(Scalar a, const Scalar& b) { return a -= b; }
  friend Scalar operator*(Scalar a, const Scalar& b) { return a *= b; }
  friend Scalar operator/(Scalar a, const Scalar& b) { return a /= b; }
  Scalar operator-() const;

  /// Equality; throws FieldError for operands over different fields.
  friend bool operator==(const Scalar& a, const Scalar& b);

 private:
  struct Residue {
    std::uint64_t value;
    std::uint64_t modulus;
  };
  void require_same_field(const Scalar& other) const;

  std::variant<mpq_class, Residue> value_{mpq_class(0)};
};

std::ostream& operator<<(std::ostream& os, const Scalar& s);

/// Dense coordinate vector over a single field.
class Vector {
 public:
  Vector() = default;
  /// Zero vector of length n.
  Vector(const FieldSpec& field, std::size_t n);
  Vector(const FieldSpec& field, std::vector<Scalar> coords);
  Vector(const FieldSpec& field, std::initializer_list<long long> coords);

  static Vector unit(const FieldSpec& field, std::size_t n, std::size_t i);

  const FieldSpec& field() const { return field_; }
  std::size_t size() const { return coords_.size(); }
  const Scalar& operator[](std::size_t i) const { return coords_[i]; }
  Scalar& operator[](std::size_t i) { return coords_[i]; }
  const std::vector<Scalar>& coords() const { return coords_; }

  bool is_zero() const;
  Vector to_field(const FieldSpec& target) const;

  /// this += factor * other.
  void add_scaled(const Scalar& factor, const Vector& other);

  Vector& operator+=(const Vector& rhs);
  Vector& operator-=(const Vector& rhs);
  Vector& operator*=(const Scalar& factor);
  friend Vector operator+(Vector a, const Vector& b) { return a += b; }
  friend Vector operator-(Vector a, const Vector& b) { return a -= b; }
  friend Vector operator*(const Scalar& s, Vector v) { return v *= s; }
  Vector operator-() const;

  friend bool operator==(const Vector& a, const Vector& b);

 private:
  void require_compatible(const Vector& other) const;

  FieldSpec field_;
  std::vector<Scalar> coords_;
};

std::ostream& operator<<(std::ostream& os, const Vector& v);

/// Row-major dense matrix.
class Matrix {
 public:
  Matrix() = default;
  Matrix(const FieldSpec& field, std::size_t rows, std::size_t cols);
  static Matrix identity(const FieldSpec& field, std::size_t n);
  static Matrix from_rows(const FieldSpec& field, std::size_t cols,
                          std::span<const Vector> rows);
  static Matrix from_columns(const FieldSpec& field, std::size_t rows,
                             std::span<const Vector> cols);

  const FieldSpec& field() const { return field_; }
  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }

  const Scalar& operator()(std::size_t r, std::size_t c) const {
    return entries_[r * cols_ + c];
  }
  Scalar& operator()(std::size_t r, std::size_t c) {
    return entries_[r * cols_ + c];
  }

  Vector row(std::size_t r) const;
  Vector column(std::size_t c) const;
  Matrix transpose() const;

  Vector operator*(const Vector& v) const;
  Matrix operator*(const Matrix& m) const;
  Matrix operator-(const Matrix& m) const;

  std::size_t rank() const;
  /// Throws PreconditionError if the matrix is singular or not square.
  Matrix inverse() const;

  friend bool operator==(const Matrix&, const Matrix&);

 private:
  FieldSpec field_;
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<Scalar> entries_;
};

/// Result of Gauss-Jordan elimination: the nonzero rows of the reduced
/// row-echelon form and their pivot columns.
struct RowEchelon {
  Matrix reduced;
  std::vector<std::size_t> pivots;
};

RowEchelon row_reduce(const Matrix& m);

/// A linear subspace of F^n, stored by its unique reduced row-echelon basis,
/// so two subspaces are equal iff their basis matrices are equal entrywise.
class Subspace {
 public:
  Subspace() = default;
  /// The zero subspace of F^n.
  Subspace(const FieldSpec& field, std::size_t ambient_dim);

  static Subspace full(const FieldSpec& field, std::size_t n);
  static Subspace span(const FieldSpec& field, std::size_t n,
                       std::span<const Vector> vectors);

  const FieldSpec& field() const { return basis_.field(); }
  std::size_t ambient_dim() const { return basis_.cols(); }
  std::size_t dim() const { return basis_.rows(); }
  bool is_zero() const { return dim() == 0; }

  const Matrix& basis() const { return basis_; }
  std::vector<Vector> basis_vectors() const;
  const std::vector<std::size_t>& pivots() const { return pivots_; }

  bool contains(const Vector& v) const;
  bool contains(const Subspace& other) const;

  /// Coordinates of v in basis_vectors(); v must lie in the subspace.
  std::vector<Scalar> coordinates(const Vector& v) const;

  friend Subspace operator+(const Subspace& a, const Subspace& b);
  friend bool operator==(const Subspace&, const Subspace&);

 private:
  friend Subspace echelonize(const Matrix& m);
  Matrix basis_;
  std::vector<std::size_t> pivots_;
};

Subspace echelonize(const Matrix& m);
/// Null space {x : m x = 0} as a subspace of F^cols.
Subspace kernel(const Matrix& m);
/// kernel(m - lam * I); m must be square.
Subspace eigenspace(const Matrix& m, const Scalar& lam);
/// Intersection of two subspaces of the same ambient space.
Subspace intersect(const Subspace& a, const Subspace& b);

/// |F_p^n|, or nullopt if it exceeds `cap`. Throws FieldError over Q.
std::optional<std::uint64_t> space_size(const FieldSpec& field, std::size_t n,
                                        std::uint64_t cap);

/// Visits every vector of F_p^n in lexicographic order (coordinate 0 most
/// significant) until `visit` returns false.
template <class Visit>
void for_each_vector(const FieldSpec& field, std::size_t n, Visit&& visit) {
  if (!field.is_prime_field()) throw FieldError("enumeration needs a prime field");
  const auto p = static_cast<long long>(field.modulus());
  std::vector<long long> digits(n, 0);
  Vector v(field, n);
  while (true) {
    if (!visit(static_cast<const Vector&>(v))) return;
    std::size_t k = n;
    while (true) {
      if (k == 0) return;
      --k;
      if (++digits[k] < p) {
        v[k] = Scalar(field, digits[k]);
        break;
      }
      digits[k] = 0;
      v[k] = Scalar::zero(field);
    }
  }
}

}  // namespace baric
