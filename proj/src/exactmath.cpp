#include "baric/exactmath.hpp"

#include <algorithm>
#include <cctype>
#include <ostream>
#include <sstream>

namespace baric {

namespace {

using u128 = unsigned __int128;

std::uint64_t mod_mul(std::uint64_t a, std::uint64_t b, std::uint64_t p) {
  return static_cast<std::uint64_t>(static_cast<u128>(a) * b % p);
}

std::uint64_t mod_pow(std::uint64_t base, std::uint64_t exp, std::uint64_t p) {
  std::uint64_t result = 1 % p;
  base %= p;
  while (exp > 0) {
    if (exp & 1U) result = mod_mul(result, base, p);
    base = mod_mul(base, base, p);
    exp >>= 1U;
  }
  return result;
}

std::uint64_t reduce_signed(long long v, std::uint64_t p) {
  if (v >= 0) return static_cast<std::uint64_t>(v) % p;
  // -(v+1) avoids overflow at LLONG_MIN.
  std::uint64_t m = (static_cast<std::uint64_t>(-(v + 1)) + 1) % p;
  return m == 0 ? 0 : p - m;
}

std::uint64_t reduce_mpz(const mpz_class& z, std::uint64_t p) {
  mpz_class r = z % mpz_class(std::to_string(p));
  if (r < 0) r += mpz_class(std::to_string(p));
  return std::stoull(r.get_str());
}

}  // namespace

// FieldSpec

FieldSpec FieldSpec::prime(std::uint64_t p) {
  if (p < 5) {
    throw FieldError("prime field modulus must be at least 5, got " +
                     std::to_string(p));
  }
  mpz_class z(std::to_string(p));
  if (mpz_probab_prime_p(z.get_mpz_t(), 40) == 0) {
    throw FieldError("modulus " + std::to_string(p) + " is not prime");
  }
  // Residue products go through 128-bit intermediates.
  if (p >= (std::uint64_t{1} << 63)) {
    throw FieldError("modulus too large");
  }
  return FieldSpec(p);
}

std::string FieldSpec::name() const {
  return is_rational() ? "Q" : "F_" + std::to_string(modulus_);
}

// Scalar

Scalar::Scalar(const FieldSpec& field, long long value) {
  if (field.is_rational()) {
    value_ = mpq_class(mpz_class(std::to_string(value)));
  } else {
    value_ = Residue{reduce_signed(value, field.modulus()), field.modulus()};
  }
}

Scalar::Scalar(const FieldSpec& field, const mpq_class& value) {
  if (field.is_rational()) {
    mpq_class q = value;
    q.canonicalize();
    value_ = q;
    return;
  }
  const std::uint64_t p = field.modulus();
  const std::uint64_t den = reduce_mpz(value.get_den(), p);
  if (den == 0) {
    throw FieldError("denominator of " + value.get_str() +
                     " is not invertible in " + field.name());
  }
  const std::uint64_t num = reduce_mpz(value.get_num(), p);
  value_ = Residue{mod_mul(num, mod_pow(den, p - 2, p), p), p};
}

Scalar Scalar::fraction(const FieldSpec& field, long long num, long long den) {
  if (den == 0) throw std::domain_error("zero denominator");
  mpq_class q(mpz_class(std::to_string(num)), mpz_class(std::to_string(den)));
  q.canonicalize();
  return Scalar(field, q);
}

Scalar Scalar::parse(const FieldSpec& field, std::string_view text) {
  std::string s;
  for (char c : text) {
    if (!std::isspace(static_cast<unsigned char>(c))) s.push_back(c);
  }
  auto bad = [&]() {
    return PreconditionError("malformed scalar '" + std::string(text) + "'");
  };
  std::size_t pos = 0;
  bool negative = false;
  if (pos < s.size() && (s[pos] == '+' || s[pos] == '-')) {
    negative = s[pos] == '-';
    ++pos;
  }
  auto digits = [&](std::size_t from) {
    std::size_t end = from;
    while (end < s.size() && std::isdigit(static_cast<unsigned char>(s[end]))) {
      ++end;
    }
    return end;
  };
  std::size_t num_end = digits(pos);
  if (num_end == pos) throw bad();
  mpz_class num(s.substr(pos, num_end - pos));
  mpz_class den(1);
  if (num_end < s.size()) {
    if (s[num_end] != '/') throw bad();
    std::size_t den_end = digits(num_end + 1);
    if (den_end == num_end + 1 || den_end != s.size()) throw bad();
    den = mpz_class(s.substr(num_end + 1));
    if (den == 0) throw PreconditionError("zero denominator in '" + s + "'");
  }
  if (negative) num = -num;
  mpq_class q(num, den);
  q.canonicalize();
  return Scalar(field, q);
}

FieldSpec Scalar::field() const {
  if (const auto* r = std::get_if<Residue>(&value_)) {
    return FieldSpec(r->modulus);
  }
  return FieldSpec::rationals();
}

bool Scalar::is_zero() const {
  if (const auto* r = std::get_if<Residue>(&value_)) return r->value == 0;
  return sgn(std::get<mpq_class>(value_)) == 0;
}

bool Scalar::is_one() const {
  if (const auto* r = std::get_if<Residue>(&value_)) return r->value == 1;
  return std::get<mpq_class>(value_) == 1;
}

std::string Scalar::to_string() const {
  if (const auto* r = std::get_if<Residue>(&value_)) {
    return std::to_string(r->value);
  }
  return std::get<mpq_class>(value_).get_str();
}

const mpq_class& Scalar::rational() const {
  if (const auto* q = std::get_if<mpq_class>(&value_)) return *q;
  throw FieldError("rational() called on a prime-field scalar");
}

std::uint64_t Scalar::residue() const {
  if (const auto* r = std::get_if<Residue>(&value_)) return r->value;
  throw FieldError("residue() called on a rational scalar");
}

Scalar Scalar::to_field(const FieldSpec& target) const {
  if (const auto* q = std::get_if<mpq_class>(&value_)) {
    return Scalar(target, *q);
  }
  const auto& r = std::get<Residue>(value_);
  if (target.modulus() != r.modulus) {
    throw FieldError("cannot map an element of F_" + std::to_string(r.modulus) +
                     " into " + target.name());
  }
  return *this;
}

void Scalar::require_same_field(const Scalar& other) const {
  const auto* a = std::get_if<Residue>(&value_);
  const auto* b = std::get_if<Residue>(&other.value_);
  if ((a == nullptr) != (b == nullptr) ||
      (a != nullptr && a->modulus != b->modulus)) {
    throw FieldError("scalar operands over different fields: " +
                     field().name() + " and " + other.field().name());
  }
}

Scalar Scalar::inverse() const {
  if (is_zero()) throw std::domain_error("division by zero");
  Scalar out = *this;
  if (auto* r = std::get_if<Residue>(&out.value_)) {
    r->value = mod_pow(r->value, r->modulus - 2, r->modulus);
  } else {
    auto& q = std::get<mpq_class>(out.value_);
    q = 1 / q;
  }
  return out;
}

Scalar& Scalar::operator+=(const Scalar& rhs) {
  require_same_field(rhs);
  if (auto* r = std::get_if<Residue>(&value_)) {
    std::uint64_t s = r->value + std::get<Residue>(rhs.value_).value;
    r->value = s >= r->modulus ? s - r->modulus : s;
  } else {
    std::get<mpq_class>(value_) += std::get<mpq_class>(rhs.value_);
  }
  return *this;
}

Scalar& Scalar::operator-=(const Scalar& rhs) {
  require_same_field(rhs);
  if (auto* r = std::get_if<Residue>(&value_)) {
    std::uint64_t b = std::get<Residue>(rhs.value_).value;
    r->value = r->value >= b ? r->value - b : r->value + r->modulus - b;
  } else {
    std::get<mpq_class>(value_) -= std::get<mpq_class>(rhs.value_);
  }
  return *this;
}

Scalar& Scalar::operator*=(const Scalar& rhs) {
  require_same_field(rhs);
  if (auto* r = std::get_if<Residue>(&value_)) {
    r->value = mod_mul(r->value, std::get<Residue>(rhs.value_).value, r->modulus);
  } else {
    std::get<mpq_class>(value_) *= std::get<mpq_class>(rhs.value_);
  }
  return *this;
}

Scalar& Scalar::operator/=(const Scalar& rhs) {
  require_same_field(rhs);
  return *this *= rhs.inverse();
}

Scalar Scalar::operator-() const {
  Scalar out = *this;
  if (auto* r = std::get_if<Residue>(&out.value_)) {
    r->value = r->value == 0 ? 0 : r->modulus - r->value;
  } else {
    auto& q = std::get<mpq_class>(out.value_);
    q = -q;
  }
  return out;
}

bool operator==(const Scalar& a, const Scalar& b) {
  a.require_same_field(b);
  if (const auto* r = std::get_if<Scalar::Residue>(&a.value_)) {
    return r->value == std::get<Scalar::Residue>(b.value_).value;
  }
  return std::get<mpq_class>(a.value_) == std::get<mpq_class>(b.value_);
}

std::ostream& operator<<(std::ostream& os, const Scalar& s) {
  return os << s.to_string();
}

// Vector

Vector::Vector(const FieldSpec& field, std::size_t n)
    : field_(field), coords_(n, Scalar::zero(field)) {}

Vector::Vector(const FieldSpec& field, std::vector<Scalar> coords)
    : field_(field), coords_(std::move(coords)) {
  for (auto& c : coords_) c = c.to_field(field_);
}

Vector::Vector(const FieldSpec& field, std::initializer_list<long long> coords)
    : field_(field) {
  coords_.reserve(coords.size());
  for (long long c : coords) coords_.emplace_back(field, c);
}

Vector Vector::unit(const FieldSpec& field, std::size_t n, std::size_t i) {
  Vector v(field, n);
  v[i] = Scalar::one(field);
  return v;
}

bool Vector::is_zero() const {
  return std::all_of(coords_.begin(), coords_.end(),
                     [](const Scalar& s) { return s.is_zero(); });
}

Vector Vector::to_field(const FieldSpec& target) const {
  std::vector<Scalar> out;
  out.reserve(coords_.size());
  for (const auto& c : coords_) out.push_back(c.to_field(target));
  return Vector(target, std::move(out));
}

void Vector::require_compatible(const Vector& other) const {
  if (size() != other.size()) {
    throw DimensionError("vector length mismatch: " + std::to_string(size()) +
                         " vs " + std::to_string(other.size()));
  }
  if (!(field_ == other.field_)) {
    throw FieldError("vectors over different fields");
  }
}

void Vector::add_scaled(const Scalar& factor, const Vector& other) {
  require_compatible(other);
  if (factor.is_zero()) return;
  for (std::size_t i = 0; i < coords_.size(); ++i) {
    if (!other.coords_[i].is_zero()) coords_[i] += factor * other.coords_[i];
  }
}

Vector& Vector::operator+=(const Vector& rhs) {
  require_compatible(rhs);
  for (std::size_t i = 0; i < coords_.size(); ++i) coords_[i] += rhs.coords_[i];
  return *this;
}

Vector& Vector::operator-=(const Vector& rhs) {
  require_compatible(rhs);
  for (std::size_t i = 0; i < coords_.size(); ++i) coords_[i] -= rhs.coords_[i];
  return *this;
}

Vector& Vector::operator*=(const Scalar& factor) {
  for (auto& c : coords_) c *= factor;
  return *this;
}

Vector Vector::operator-() const {
  Vector out = *this;
  for (auto& c : out.coords_) c = -c;
  return out;
}

bool operator==(const Vector& a, const Vector& b) {
  return a.field_ == b.field_ && a.coords_ == b.coords_;
}

std::ostream& operator<<(std::ostream& os, const Vector& v) {
  os << '(';
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (i) os << ", ";
    os << v[i];
  }
  return os << ')';
}

// Matrix

Matrix::Matrix(const FieldSpec& field, std::size_t rows, std::size_t cols)
    : field_(field),
      rows_(rows),
      cols_(cols),
      entries_(rows * cols, Scalar::zero(field)) {}

Matrix Matrix::identity(const FieldSpec& field, std::size_t n) {
  Matrix m(field, n, n);
  for (std::size_t i = 0; i < n; ++i) m(i, i) = Scalar::one(field);
  return m;
}

Matrix Matrix::from_rows(const FieldSpec& field, std::size_t cols,
                         std::span<const Vector> rows) {
  Matrix m(field, rows.size(), cols);
  for (std::size_t r = 0; r < rows.size(); ++r) {
    if (rows[r].size() != cols) throw DimensionError("row length mismatch");
    for (std::size_t c = 0; c < cols; ++c) m(r, c) = rows[r][c].to_field(field);
  }
  return m;
}

Matrix Matrix::from_columns(const FieldSpec& field, std::size_t rows,
                            std::span<const Vector> cols) {
  Matrix m(field, rows, cols.size());
  for (std::size_t c = 0; c < cols.size(); ++c) {
    if (cols[c].size() != rows) throw DimensionError("column length mismatch");
    for (std::size_t r = 0; r < rows; ++r) m(r, c) = cols[c][r].to_field(field);
  }
  return m;
}

Vector Matrix::row(std::size_t r) const {
  std::vector<Scalar> out(entries_.begin() + static_cast<std::ptrdiff_t>(r * cols_),
                          entries_.begin() + static_cast<std::ptrdiff_t>((r + 1) * cols_));
  return Vector(field_, std::move(out));
}

Vector Matrix::column(std::size_t c) const {
  Vector out(field_, rows_);
  for (std::size_t r = 0; r < rows_; ++r) out[r] = (*this)(r, c);
  return out;
}

Matrix Matrix::transpose() const {
  Matrix t(field_, cols_, rows_);
  for (std::size_t r = 0; r < rows_; ++r) {
    for (std::size_t c = 0; c < cols_; ++c) t(c, r) = (*this)(r, c);
  }
  return t;
}

Vector Matrix::operator*(const Vector& v) const {
  if (v.size() != cols_) throw DimensionError("matrix-vector size mismatch");
  Vector out(field_, rows_);
  for (std::size_t r = 0; r < rows_; ++r) {
    Scalar acc = Scalar::zero(field_);
    for (std::size_t c = 0; c < cols_; ++c) {
      if (!v[c].is_zero()) acc += (*this)(r, c) * v[c];
    }
    out[r] = acc;
  }
  return out;
}

Matrix Matrix::operator*(const Matrix& m) const {
  if (cols_ != m.rows_) throw DimensionError("matrix product size mismatch");
  Matrix out(field_, rows_, m.cols_);
  for (std::size_t r = 0; r < rows_; ++r) {
    for (std::size_t k = 0; k < cols_; ++k) {
      const Scalar& a = (*this)(r, k);
      if (a.is_zero()) continue;
      for (std::size_t c = 0; c < m.cols_; ++c) out(r, c) += a * m(k, c);
    }
  }
  return out;
}

Matrix Matrix::operator-(const Matrix& m) const {
  if (rows_ != m.rows_ || cols_ != m.cols_) {
    throw DimensionError("matrix difference size mismatch");
  }
  Matrix out = *this;
  for (std::size_t i = 0; i < entries_.size(); ++i) out.entries_[i] -= m.entries_[i];
  return out;
}

std::size_t Matrix::rank() const { return row_reduce(*this).pivots.size(); }

Matrix Matrix::inverse() const {
  if (rows_ != cols_) throw PreconditionError("inverse of a non-square matrix");
  const std::size_t n = rows_;
  Matrix aug(field_, n, 2 * n);
  for (std::size_t r = 0; r < n; ++r) {
    for (std::size_t c = 0; c < n; ++c) aug(r, c) = (*this)(r, c);
    aug(r, n + r) = Scalar::one(field_);
  }
  RowEchelon ech = row_reduce(aug);
  if (ech.pivots.size() < n || ech.pivots[n - 1] != n - 1) {
    throw PreconditionError("matrix is singular");
  }
  Matrix inv(field_, n, n);
  for (std::size_t r = 0; r < n; ++r) {
    for (std::size_t c = 0; c < n; ++c) inv(r, c) = ech.reduced(r, n + c);
  }
  return inv;
}

bool operator==(const Matrix& a, const Matrix& b) {
  return a.field_ == b.field_ && a.rows_ == b.rows_ && a.cols_ == b.cols_ &&
         a.entries_ == b.entries_;
}

RowEchelon row_reduce(const Matrix& m) {
  Matrix work = m;
  std::vector<std::size_t> pivots;
  std::size_t lead_row = 0;
  for (std::size_t c = 0; c < work.cols() && lead_row < work.rows(); ++c) {
    std::size_t pr = lead_row;
    while (pr < work.rows() && work(pr, c).is_zero()) ++pr;
    if (pr == work.rows()) continue;
    if (pr != lead_row) {
      for (std::size_t k = 0; k < work.cols(); ++k) {
        std::swap(work(pr, k), work(lead_row, k));
      }
    }
    const Scalar inv = work(lead_row, c).inverse();
    for (std::size_t k = c; k < work.cols(); ++k) work(lead_row, k) *= inv;
    for (std::size_t r = 0; r < work.rows(); ++r) {
      if (r == lead_row || work(r, c).is_zero()) continue;
      const Scalar f = work(r, c);
      for (std::size_t k = c; k < work.cols(); ++k) {
        if (!work(lead_row, k).is_zero()) work(r, k) -= f * work(lead_row, k);
      }
    }
    pivots.push_back(c);
    ++lead_row;
  }
  Matrix reduced(m.field(), pivots.size(), m.cols());
  for (std::size_t r = 0; r < pivots.size(); ++r) {
    for (std::size_t c = 0; c < m.cols(); ++c) reduced(r, c) = work(r, c);
  }
  return {std::move(reduced), std::move(pivots)};
}

// Subspace

Subspace::Subspace(const FieldSpec& field, std::size_t ambient_dim)
    : basis_(field, 0, ambient_dim) {}

Subspace Subspace::full(const FieldSpec& field, std::size_t n) {
  return echelonize(Matrix::identity(field, n));
}

Subspace Subspace::span(const FieldSpec& field, std::size_t n,
                        std::span<const Vector> vectors) {
  return echelonize(Matrix::from_rows(field, n, vectors));
}

std::vector<Vector> Subspace::basis_vectors() const {
  std::vector<Vector> out;
  out.reserve(dim());
  for (std::size_t r = 0; r < dim(); ++r) out.push_back(basis_.row(r));
  return out;
}

std::vector<Scalar> Subspace::coordinates(const Vector& v) const {
  if (v.size() != ambient_dim()) throw DimensionError("vector/subspace mismatch");
  std::vector<Scalar> coords;
  Vector rest = v;
  for (std::size_t r = 0; r < dim(); ++r) {
    Scalar c = rest[pivots_[r]];
    coords.push_back(c);
    if (!c.is_zero()) rest.add_scaled(-c, basis_.row(r));
  }
  if (!rest.is_zero()) throw PreconditionError("vector not in subspace");
  return coords;
}

bool Subspace::contains(const Vector& v) const {
  if (v.size() != ambient_dim()) throw DimensionError("vector/subspace mismatch");
  Vector rest = v;
  for (std::size_t r = 0; r < dim(); ++r) {
    const Scalar c = rest[pivots_[r]];
    if (!c.is_zero()) rest.add_scaled(-c, basis_.row(r));
  }
  return rest.is_zero();
}

bool Subspace::contains(const Subspace& other) const {
  if (other.ambient_dim() != ambient_dim()) {
    throw DimensionError("subspaces in different ambient spaces");
  }
  for (std::size_t r = 0; r < other.dim(); ++r) {
    if (!contains(other.basis_.row(r))) return false;
  }
  return true;
}

Subspace operator+(const Subspace& a, const Subspace& b) {
  if (a.ambient_dim() != b.ambient_dim()) {
    throw DimensionError("subspaces in different ambient spaces");
  }
  std::vector<Vector> rows = a.basis_vectors();
  for (auto& v : b.basis_vectors()) rows.push_back(std::move(v));
  return Subspace::span(a.field(), a.ambient_dim(), rows);
}

bool operator==(const Subspace& a, const Subspace& b) {
  return a.basis_ == b.basis_;
}

Subspace echelonize(const Matrix& m) {
  RowEchelon ech = row_reduce(m);
  Subspace s(m.field(), m.cols());
  s.basis_ = std::move(ech.reduced);
  s.pivots_ = std::move(ech.pivots);
  return s;
}

Subspace kernel(const Matrix& m) {
  RowEchelon ech = row_reduce(m);
  const std::size_t n = m.cols();
  std::vector<bool> is_pivot(n, false);
  for (std::size_t p : ech.pivots) is_pivot[p] = true;
  std::vector<Vector> basis;
  for (std::size_t free = 0; free < n; ++free) {
    if (is_pivot[free]) continue;
    Vector v(m.field(), n);
    v[free] = Scalar::one(m.field());
    for (std::size_t r = 0; r < ech.pivots.size(); ++r) {
      v[ech.pivots[r]] = -ech.reduced(r, free);
    }
    basis.push_back(std::move(v));
  }
  return Subspace::span(m.field(), n, basis);
}

Subspace eigenspace(const Matrix& m, const Scalar& lam) {
  if (m.rows() != m.cols()) throw DimensionError("eigenspace of non-square matrix");
  Matrix shifted = m;
  const Scalar l = lam.to_field(m.field());
  for (std::size_t i = 0; i < m.rows(); ++i) shifted(i, i) -= l;
  return kernel(shifted);
}

Subspace intersect(const Subspace& a, const Subspace& b) {
  if (a.ambient_dim() != b.ambient_dim()) {
    throw DimensionError("subspaces in different ambient spaces");
  }
  // Solve sum_i s_i a_i = sum_j t_j b_j; the a-part of each solution spans
  // the intersection.
  const std::size_t da = a.dim();
  const std::size_t db = b.dim();
  Matrix system(a.field(), a.ambient_dim(), da + db);
  for (std::size_t r = 0; r < da; ++r) {
    for (std::size_t k = 0; k < a.ambient_dim(); ++k) system(k, r) = a.basis()(r, k);
  }
  for (std::size_t r = 0; r < db; ++r) {
    for (std::size_t k = 0; k < a.ambient_dim(); ++k) {
      system(k, da + r) = -b.basis()(r, k);
    }
  }
  std::vector<Vector> out;
  for (const auto& sol : kernel(system).basis_vectors()) {
    Vector v(a.field(), a.ambient_dim());
    for (std::size_t r = 0; r < da; ++r) v.add_scaled(sol[r], a.basis().row(r));
    out.push_back(std::move(v));
  }
  return Subspace::span(a.field(), a.ambient_dim(), out);
}

std::optional<std::uint64_t> space_size(const FieldSpec& field, std::size_t n,
                                        std::uint64_t cap) {
  if (!field.is_prime_field()) throw FieldError("enumeration needs a prime field");
  std::uint64_t total = 1;
  for (std::size_t i = 0; i < n; ++i) {
    if (total > cap / field.modulus()) return std::nullopt;
    total *= field.modulus();
  }
  if (total > cap) return std::nullopt;
  return total;
}

}  // namespace baric
