#include <doctest.h>

#include <random>

#include "baric/exactmath.hpp"

using namespace baric;

namespace {

const FieldSpec Q = FieldSpec::rationals();
const FieldSpec F5 = FieldSpec::prime(5);

Scalar q(long long n, long long d = 1) { return Scalar::fraction(Q, n, d); }

Matrix rows(const FieldSpec& f, std::size_t cols, std::initializer_list<std::initializer_list<long long>> r) {
  std::vector<Vector> v;
  for (auto row : r) v.emplace_back(f, row);
  return Matrix::from_rows(f, cols, v);
}

Scalar random_scalar(std::mt19937_64& rng, const FieldSpec& f) {
  std::uniform_int_distribution<long long> num(-20, 20), den(1, 9);
  if (f.is_rational()) return Scalar::fraction(f, num(rng), den(rng));
  return Scalar(f, num(rng));
}

Matrix random_matrix(std::mt19937_64& rng, const FieldSpec& f, std::size_t r, std::size_t c) {
  std::uniform_int_distribution<int> coin(0, 2);
  Matrix m(f, r, c);
  for (std::size_t i = 0; i < r; ++i) {
    for (std::size_t j = 0; j < c; ++j) {
      if (coin(rng)) m(i, j) = random_scalar(rng, f);
    }
  }
  return m;
}

}  // namespace

TEST_CASE("field specs") {
  CHECK(Q.is_rational());
  CHECK(F5.modulus() == 5);
  CHECK(F5.name() == "F_5");
  CHECK_THROWS_AS(FieldSpec::prime(3), FieldError);
  CHECK_THROWS_AS(FieldSpec::prime(2), FieldError);
  CHECK_THROWS_AS(FieldSpec::prime(9), FieldError);
  CHECK(FieldSpec::prime(1000003).modulus() == 1000003);
}

TEST_CASE("scalar arithmetic examples") {
  CHECK(q(1, 2) + q(1, 3) == q(5, 6));
  CHECK(Scalar(F5, 3) * Scalar(F5, 4) == Scalar(F5, 2));
  CHECK(q(3, 4) * q(4, 3) == q(1));
  CHECK(q(2, 4).to_string() == "1/2");
  CHECK(q(0, 7).to_string() == "0");
  CHECK(q(-6, -4).to_string() == "3/2");
  CHECK(Scalar(F5, -1).to_string() == "4");
}

TEST_CASE("scalar errors") {
  CHECK_THROWS_AS(q(1) / q(0), std::domain_error);
  CHECK_THROWS_AS(Scalar(F5, 0).inverse(), std::domain_error);
  CHECK_THROWS_AS(q(1) + Scalar(F5, 1), FieldError);
  CHECK_THROWS_AS((void)(q(1) == Scalar(F5, 1)), FieldError);
  CHECK_THROWS_AS(Scalar(F5, 2).to_field(Q), FieldError);
  CHECK_THROWS_AS(Scalar(F5, mpq_class(1, 5)), FieldError);
}

TEST_CASE("scalar parsing") {
  CHECK(Scalar::parse(Q, "-3/8") == q(-3, 8));
  CHECK(Scalar::parse(Q, " +12 ") == q(12));
  CHECK(Scalar::parse(Q, "6/4") == q(3, 2));
  CHECK(Scalar::parse(F5, "7") == Scalar(F5, 2));
  CHECK(Scalar::parse(F5, "1/2") == Scalar(F5, 3));
  CHECK_THROWS(Scalar::parse(Q, ""));
  CHECK_THROWS(Scalar::parse(Q, "1/"));
  CHECK_THROWS(Scalar::parse(Q, "1.5"));
  CHECK_THROWS(Scalar::parse(Q, "1/0"));
  CHECK_THROWS(Scalar::parse(Q, "a"));
  CHECK(q(1, 2).to_field(F5) == Scalar(F5, 3));
}

TEST_CASE("field axioms on random triples") {
  std::mt19937_64 rng(11);
  for (const FieldSpec& f : {Q, F5, FieldSpec::prime(101)}) {
    for (int t = 0; t < 200; ++t) {
      const Scalar a = random_scalar(rng, f), b = random_scalar(rng, f), c = random_scalar(rng, f);
      CHECK((a + b) + c == a + (b + c));
      CHECK((a * b) * c == a * (b * c));
      CHECK(a * (b + c) == a * b + a * c);
      CHECK(a + b == b + a);
      CHECK(a - a == Scalar::zero(f));
      if (!a.is_zero()) CHECK(a * a.inverse() == Scalar::one(f));
      CHECK(Scalar::parse(f, a.to_string()) == a);
    }
  }
}

TEST_CASE("echelonize examples") {
  CHECK(echelonize(rows(Q, 2, {{2, 0}, {0, 2}})).basis() == Matrix::identity(Q, 2));
  const Subspace s = echelonize(rows(Q, 2, {{1, 1}, {2, 2}}));
  CHECK(s.dim() == 1);
  CHECK(s.basis() == rows(Q, 2, {{1, 1}}));
  CHECK(echelonize(Matrix(Q, 3, 3)).dim() == 0);
}

TEST_CASE("kernel examples") {
  CHECK(kernel(Matrix::identity(Q, 3)).dim() == 0);
  const Subspace k = kernel(rows(Q, 2, {{1, 0}}));
  CHECK(k == Subspace::span(Q, 2, std::vector<Vector>{Vector(Q, {0, 1})}));
  const Subspace n = kernel(rows(Q, 7, {{1, 0, 0, 0, 0, 0, 0}}));
  CHECK(n.dim() == 6);
  for (std::size_t i = 1; i < 7; ++i) CHECK(n.contains(Vector::unit(Q, 7, i)));
}

TEST_CASE("eigenspace examples") {
  Matrix d(Q, 2, 2);
  d(0, 0) = q(1, 2);
  CHECK(eigenspace(d, q(1, 2)) == Subspace::span(Q, 2, std::vector<Vector>{Vector(Q, {1, 0})}));
  CHECK(eigenspace(d, q(1)).dim() == 0);
  CHECK_THROWS_AS(eigenspace(Matrix(Q, 2, 3), q(1)), DimensionError);
}

TEST_CASE("subspace operations") {
  const auto x = Subspace::span(Q, 2, std::vector<Vector>{Vector(Q, {1, 0})});
  const auto y = Subspace::span(Q, 2, std::vector<Vector>{Vector(Q, {0, 1})});
  CHECK(x + y == Subspace::full(Q, 2));
  const auto d = Subspace::span(Q, 2, std::vector<Vector>{Vector(Q, {1, 1})});
  CHECK(d.contains(Vector(Q, {2, 2})));
  CHECK_FALSE(d.contains(Vector(Q, {1, 2})));
  CHECK(Subspace::full(Q, 2).contains(d));
  CHECK_FALSE(x.contains(d));
  CHECK(intersect(x, y).dim() == 0);
  CHECK(intersect(x + d, y + d) == Subspace::full(Q, 2));
  CHECK_THROWS_AS(x + Subspace::full(Q, 3), DimensionError);
  CHECK_THROWS_AS((void)x.contains(Vector(Q, {1, 0, 0})), DimensionError);
  const auto c = d.coordinates(Vector(Q, {3, 3}));
  REQUIRE(c.size() == 1);
  CHECK(c[0] == q(3));
}

TEST_CASE("matrix inverse") {
  const Matrix m = rows(Q, 2, {{1, 2}, {3, 4}});
  CHECK(m * m.inverse() == Matrix::identity(Q, 2));
  CHECK_THROWS_AS(rows(Q, 2, {{1, 2}, {2, 4}}).inverse(), PreconditionError);
}

TEST_CASE("canonical form and rank-nullity on random matrices") {
  std::mt19937_64 rng(5);
  std::uniform_int_distribution<std::size_t> size(1, 6);
  for (const FieldSpec& f : {Q, F5}) {
    for (int t = 0; t < 150; ++t) {
      const Matrix m = random_matrix(rng, f, size(rng), size(rng));
      const Subspace row = echelonize(m);
      CHECK(echelonize(row.basis()) == row);
      CHECK(row.dim() == m.rank());
      const Subspace ker = kernel(m);
      CHECK(ker.dim() + m.rank() == m.cols());
      for (const auto& v : ker.basis_vectors()) CHECK((m * v).is_zero());
      for (std::size_t r = 0; r < m.rows(); ++r) CHECK(row.contains(m.row(r)));
      // the transpose has the same rank
      CHECK(m.transpose().rank() == m.rank());
    }
  }
}

TEST_CASE("vector enumeration") {
  std::vector<Vector> seen;
  for_each_vector(F5, 2, [&](const Vector& v) {
    seen.push_back(v);
    return true;
  });
  REQUIRE(seen.size() == 25);
  CHECK(seen[1] == Vector(F5, {0, 1}));
  CHECK(seen[5] == Vector(F5, {1, 0}));
  CHECK(space_size(F5, 3, 1000) == 125u);
  CHECK_FALSE(space_size(F5, 5, 1000).has_value());
  CHECK_THROWS_AS((void)space_size(Q, 2, 10), FieldError);
}
