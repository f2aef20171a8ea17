#include <doctest.h>

#include <random>

#include "baric/baric.hpp"
#include "baric/identities.hpp"
#include "baric/search.hpp"
#include "corpus.hpp"
#include "oracle.hpp"

using namespace baric;

namespace {

const FieldSpec Q = FieldSpec::rationals();
const FieldSpec F5 = FieldSpec::prime(5);

BaricAlgebra one_dim(const FieldSpec& f) {
  Algebra a(f, 1, {"e"});
  a.set_product(0, 0, a.basis_element(0));
  return BaricAlgebra(a, Weight(f, {1}));
}

Scalar random_gamma(std::mt19937_64& rng, const FieldSpec& f) {
  std::uniform_int_distribution<long long> n(-9, 9), d(1, 6);
  while (true) {
    Scalar g = f.is_rational() ? Scalar::fraction(f, n(rng), d(rng)) : Scalar(f, n(rng));
    if (!g.is_one()) return g;
  }
}

// Product table of the gametization computed from the defining formula.
Algebra gametize_oracle(const BaricAlgebra& b, const Scalar& g) {
  const FieldSpec f = b.field();
  const Algebra& a = b.algebra();
  Algebra out(f, a.dim());
  const Scalar half_g = g / Scalar(f, 2);
  for (std::size_t i = 0; i < a.dim(); ++i) {
    for (std::size_t j = i; j < a.dim(); ++j) {
      Element v = (Scalar::one(f) - g) * a.product(i, j);
      v += (half_g * b.weight()[i]) * a.basis_element(j);
      v += (half_g * b.weight()[j]) * a.basis_element(i);
      out.set_product(i, j, v);
    }
  }
  return out;
}

}  // namespace

TEST_CASE("weight validation") {
  const BaricAlgebra seven = corpus::baric_algebra("seven.alg");
  CHECK(validate_weight(seven.algebra(), seven.weight()).valid);
  CHECK(seven.weight()(parse_element(seven.algebra(), "e")).is_one());

  const WeightCheck zero = validate_weight(seven.algebra(), Weight(Q, {0, 0, 0, 0, 0, 0, 0}));
  CHECK_FALSE(zero.valid);
  CHECK_FALSE(zero.failing_pair.has_value());

  // w(t) = 1 clashes with t^2 = 0
  const WeightCheck bad = validate_weight(seven.algebra(), Weight(Q, {1, 0, 0, 0, 0, 0, 1}));
  CHECK_FALSE(bad.valid);
  REQUIRE(bad.failing_pair.has_value());
  const auto [i, j] = *bad.failing_pair;
  // oracle: the pair genuinely violates the law
  const Weight w(Q, {1, 0, 0, 0, 0, 0, 1});
  CHECK_FALSE(w(seven.algebra().product(i, j)) == w[i] * w[j]);
  CHECK_THROWS_AS(BaricAlgebra(seven.algebra(), w), PreconditionError);
}

TEST_CASE("gametization examples") {
  const BaricAlgebra t1 = corpus::baric_algebra("t1.alg");
  CHECK(gametize(gametize(t1, Scalar(Q, 2)), Scalar(Q, 2)) == t1);
  CHECK(gametize(t1, Scalar(Q, 0)) == t1);
  CHECK_THROWS_AS(gametize(t1, Scalar(Q, 1)), PreconditionError);
  CHECK(gametize(t1, Scalar(Q, -1)).algebra() == gametize_oracle(t1, Scalar(Q, -1)));
}

TEST_CASE("gametization composition and involution laws") {
  std::mt19937_64 rng(17);
  for (const FieldSpec& f : {Q, F5}) {
    for (const char* name : {"t1.alg", "seven.alg", "s2v.alg"}) {
      const BaricAlgebra b = corpus::baric_algebra(name).over(f);
      for (int t = 0; t < 10; ++t) {
        const Scalar g = random_gamma(rng, f), d = random_gamma(rng, f);
        const BaricAlgebra bg = gametize(b, g);
        CHECK(bg.algebra() == gametize_oracle(b, g));
        CHECK(validate_weight(bg.algebra(), bg.weight()).valid);
        CHECK(bg.weight() == b.weight());
        CHECK(gametize(bg, d) == gametize(b, g + d - g * d));
        if (!g.is_zero()) CHECK(gametize(bg, g / (g - Scalar::one(f))) == b);
      }
    }
  }
}

TEST_CASE("star transform") {
  const BaricAlgebra seven = corpus::baric_algebra("seven.alg");
  const StarTransform st = star_transform(seven);
  const Algebra& a = seven.algebra();
  std::vector<Vector> expected;
  for (const char* l : {"u3", "u4", "s", "t"}) expected.push_back(parse_element(a, l));
  CHECK(st.square == Subspace::span(Q, 7, expected));
  CHECK(seven.kernel().contains(st.square));
  // oracle: the square is the span of all star products
  CHECK(st.square == st.algebra.product_span(st.algebra.full_space(), st.algebra.full_space()));
  CHECK(star_inverse(st.algebra, seven.weight()) == seven);

  const StarTransform e = star_transform(one_dim(Q));
  CHECK(e.algebra.product(0, 0).is_zero());
  CHECK(e.square.is_zero());

  for (const char* name : {"t1.alg", "s2v.alg"}) {
    const BaricAlgebra b = corpus::baric_algebra(name);
    const StarTransform s = star_transform(b);
    CHECK(b.kernel().contains(s.square));
    CHECK(star_inverse(s.algebra, b.weight()) == b);
  }
}

TEST_CASE("star inverse") {
  // V + S^2(V) with dim V = 2 and a form vanishing on S^2(V)
  const Algebra s2 = structured_generator(Q, 2);
  const BaricAlgebra b = star_inverse(s2, Weight(Q, {1, 0, 0, 0, 0}));
  CHECK(validate_weight(b.algebra(), b.weight()).valid);
  CHECK(b == corpus::baric_algebra("s2v.alg"));
  CHECK(star_inverse(s2, Weight(Q, {2, -1, 0, 0, 0})).dim() == 5);

  const Algebra zero(Q, 2);
  const Weight w(Q, {1, 3});
  const BaricAlgebra z = star_inverse(zero, w);
  std::mt19937_64 rng(1);
  std::uniform_int_distribution<long long> d(-5, 5);
  for (int t = 0; t < 10; ++t) {
    const Element x = zero.element({d(rng), d(rng)}), y = zero.element({d(rng), d(rng)});
    Element expected = Scalar::fraction(Q, 1, 2) * (w(x) * y + w(y) * x);
    CHECK(z.algebra().multiply(x, y) == expected);
  }

  CHECK_THROWS_AS(star_inverse(s2, Weight(Q, {0, 0, 0, 0, 0})), PreconditionError);
  CHECK_THROWS_WITH_AS(star_inverse(s2, Weight(Q, {0, 0, 1, 0, 0})), doctest::Contains("v1"),
                       PreconditionError);
}

TEST_CASE("jordanize") {
  const Algebra j = jordanize(one_dim(Q));
  REQUIRE(j.dim() == 2);
  CHECK(j.product(1, 1) == Element(Q, {Scalar::fraction(Q, 3, 4), Scalar(Q, 1)}));
  CHECK(j.product(0, 0) == j.basis_element(0));
  CHECK(j.product(0, 1) == j.basis_element(1));

  const BaricAlgebra t1m = gametize(corpus::baric_algebra("t1.alg"), Scalar(Q, -1));
  CHECK(polarized_check(jordanize(t1m), IdentityId::jordan()).pass);
}

TEST_CASE("unitization isomorphism phi") {
  const BaricAlgebra t1 = corpus::baric_algebra("t1.alg");
  const LinearMap phi = phi_unitization_iso(t1);
  const Element one = phi.source().basis_element(0);
  CHECK(phi(one) == phi.target().basis_element(0));
  const HomomorphismReport h = is_algebra_homomorphism(phi);
  CHECK(h.report.pass);
  CHECK(h.bijective);
  CHECK(h.rank == 4);
  // phi composed with the same map for B_2 is the identity
  const LinearMap back = phi_unitization_iso(gametize(t1, Scalar(Q, 2)));
  CHECK(back.matrix() * phi.matrix() == Matrix::identity(Q, 4));
}

TEST_CASE("Jordan isomorphism Phi") {
  const BaricAlgebra t1 = corpus::baric_algebra("t1.alg");
  const LinearMap Phi = jordan_iso(t1);
  CHECK(Phi(Phi.source().basis_element(0)) == Phi.target().basis_element(0));
  const HomomorphismReport h = is_algebra_homomorphism(Phi);
  CHECK(h.report.pass);
  CHECK(h.rank == 4);

  // Phi(x)^2 = Phi(x^2) uses only x.x = 2x^2 - w(x)x, true in every A_{-1}, so
  // Phi is multiplicative with no identity assumed (seven fails OMEGA).
  const BaricAlgebra seven = corpus::baric_algebra("seven.alg");
  CHECK_FALSE(polarized_check(seven, IdentityId::omega()).pass);
  const HomomorphismReport s = is_algebra_homomorphism(jordan_iso(seven));
  CHECK(s.report.pass);
  CHECK(s.bijective);
  // and its codomain is then not Jordan
  CHECK_FALSE(polarized_check(jordan_iso(seven).target(), IdentityId::jordan()).pass);

  // oracle: J(A_{-1}) built by hand over F_5, Phi = (w/4, x/2) with 1/4 = 4, 1/2 = 3
  std::mt19937_64 rng(31);
  std::vector<oracle::Table> tables = {oracle::Table::from(seven.over(F5).algebra(), &seven.over(F5).weight())};
  for (int t = 0; t < 30; ++t) tables.push_back(oracle::random_table(rng, 5, 1 + t % 3, 1, 2, true));
  for (const auto& t : tables) {
    const int n = t.n;
    // J product on (scalar, vector) pairs
    auto jmul = [&](long long a, const oracle::Vec& x, long long b, const oracle::Vec& y) {
      const oracle::Vec xy = t.mul(x, y);
      const long long wx = t.weight(x), wy = t.weight(y);
      oracle::Vec v(n);
      for (int k = 0; k < n; ++k) v[k] = oracle::mod(2 * xy[k] - 3 * (wx * y[k] + wy * x[k]) + a * y[k] + b * x[k], 5);
      return std::make_pair(oracle::mod(a * b + 3 * 4 * wx * wy, 5), v);
    };
    auto phi = [&](const oracle::Vec& x) {
      oracle::Vec v(n);
      for (int k = 0; k < n; ++k) v[k] = oracle::mod(3 * x[k], 5);
      return std::make_pair(oracle::mod(4 * t.weight(x), 5), v);
    };
    for (int i = 0; i < n; ++i) {
      for (int j = 0; j < n; ++j) {
        oracle::Vec ei(n, 0), ej(n, 0);
        ei[i] = 1;
        ej[j] = 1;
        const auto pi = phi(ei), pj = phi(ej);
        CHECK(jmul(pi.first, pi.second, pj.first, pj.second) == phi(t.mul(ei, ej)));
      }
    }
    const BaricAlgebra b(t.to_algebra(), t.to_weight());
    CHECK(is_algebra_homomorphism(jordan_iso(b)).report.pass);
  }
}

TEST_CASE("homomorphism checks on trivial maps") {
  const Algebra a = corpus::algebra("seven.alg");
  const auto id = is_algebra_homomorphism(LinearMap(a, a, Matrix::identity(Q, 7)));
  CHECK(id.report.pass);
  CHECK(id.bijective);
  const auto zero = is_algebra_homomorphism(LinearMap(a, a, Matrix(Q, 7, 7)));
  CHECK(zero.report.pass);
  CHECK_FALSE(zero.bijective);
  CHECK(zero.rank == 0);
  CHECK_THROWS_AS(LinearMap(a, a, Matrix(Q, 6, 7)), DimensionError);
}
