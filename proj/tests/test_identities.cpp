#include <doctest.h>

#include <cstdlib>
#include <random>

#include "baric/identities.hpp"
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

std::string oracle_name(const IdentityId& id) {
  switch (id.kind()) {
    case IdentityKind::omega3: return "omega3";
    case IdentityKind::omega: return "omega";
    case IdentityKind::omegas: return "omegas";
    case IdentityKind::omega2s: return "omega2s";
    case IdentityKind::sqsq_zero: return "sqsq";
    case IdentityKind::jordan: return "jordan";
    case IdentityKind::general: return "general";
  }
  return "";
}

Element evaluate(const BaricAlgebra& b, const IdentityId& id, const std::vector<Element>& w) {
  return id.kind() == IdentityKind::jordan ? evaluate_identity_at(b, id, w.at(0), w.at(1))
                                           : evaluate_identity_at(b, id, w.at(0));
}

}  // namespace

TEST_CASE("identity names and parsing") {
  const auto catalog = identity_catalog();
  CHECK(catalog.size() == 6);
  for (const auto& id : catalog) CHECK(IdentityId::parse(id.name()).kind() == id.kind());
  const IdentityId g = IdentityId::parse("general:3,-3,1");
  CHECK(g.kind() == IdentityKind::general);
  CHECK(g.coefficients()[1] == Scalar(Q, -3));
  CHECK(IdentityId::parse("general:1/2,1/4,1/4").needs_weight());
  CHECK_FALSE(IdentityId::sqsq_zero().needs_weight());
  CHECK_FALSE(IdentityId::jordan().needs_weight());
  CHECK(IdentityId::jordan().degree() == 3);
  CHECK_THROWS_AS(IdentityId::parse("general:1,1,1"), PreconditionError);
  CHECK_THROWS_AS(IdentityId::parse("general:1,0"), PreconditionError);
  CHECK_THROWS_AS(IdentityId::parse("omega4"), PreconditionError);
}

TEST_CASE("worked examples") {
  const BaricAlgebra seven = corpus::baric_algebra("seven.alg");
  CHECK(polarized_check(seven, IdentityId::omega2s()).pass);
  const IdentityReport j = polarized_check(seven, IdentityId::jordan());
  CHECK_FALSE(j.pass);
  REQUIRE(j.residual.has_value());
  CHECK_FALSE(j.residual->is_zero());

  const Algebra& a = seven.algebra();
  CHECK(evaluate_identity_at(seven, IdentityId::jordan(), parse_element(a, "u1+s"),
                             parse_element(a, "u2")) == parse_element(a, "4*u3"));

  const Algebra six = corpus::algebra("sixdim.alg");
  CHECK(polarized_check(six, IdentityId::sqsq_zero()).pass);

  for (const auto& id : {IdentityId::omega3(), IdentityId::omega(), IdentityId::omegas(),
                         IdentityId::omega2s()}) {
    CHECK(polarized_check(one_dim(Q), id).pass);
  }
}

TEST_CASE("exhaustive examples") {
  const BaricAlgebra t1 = corpus::baric_algebra("t1.alg").over(F5);
  CHECK(exhaustive_check(t1, IdentityId::omega()).pass);
  const Algebra two = corpus::algebra("twodim.alg").over(F5);
  CHECK(exhaustive_check(two, IdentityId::sqsq_zero()).pass);
  CHECK_THROWS_AS(exhaustive_check(corpus::algebra("twodim.alg"), IdentityId::sqsq_zero()), FieldError);
  CHECK_THROWS_AS(exhaustive_check(t1, IdentityId::omega(), 100), BudgetExceeded);
  CHECK_THROWS_AS(exhaustive_check(t1, IdentityId::jordan(), 125 * 124), BudgetExceeded);
  CHECK(exhaustive_check(t1, IdentityId::jordan(), 125 * 125).pass);
}

TEST_CASE("evaluation points") {
  const BaricAlgebra t1 = corpus::baric_algebra("t1.alg");
  const Algebra& a = t1.algebra();
  for (const auto& id : identity_catalog()) {
    const auto y = id.kind() == IdentityKind::jordan ? std::optional<Element>(a.zero()) : std::nullopt;
    CHECK(evaluate_identity_at(t1, id, a.zero(), y).is_zero());
  }
  CHECK(evaluate_identity_at(t1, IdentityId::omega(), parse_element(a, "e+u")).is_zero());
  CHECK_THROWS_AS(evaluate_identity_at(t1, IdentityId::jordan(), a.zero()), PreconditionError);
  CHECK_THROWS_AS(evaluate_identity_at(t1, IdentityId::omega(), a.zero(), a.zero()), PreconditionError);
  CHECK_THROWS_AS(evaluate_identity_at(a, IdentityId::omega(), a.zero()), PreconditionError);
  CHECK_THROWS_AS(polarized_check(a, IdentityId::omega3()), PreconditionError);
}

TEST_CASE("homogeneity of the weighted identities") {
  std::mt19937_64 rng(23);
  std::uniform_int_distribution<long long> d(-3, 3);
  const BaricAlgebra seven = corpus::baric_algebra("seven.alg");
  const Algebra& a = seven.algebra();
  for (int t = 0; t < 20; ++t) {
    Element x = a.zero();
    for (std::size_t i = 0; i < a.dim(); ++i) x[i] = Scalar(Q, d(rng));
    const Scalar lam = Scalar::fraction(Q, d(rng), 2);
    const Scalar lam4 = lam * lam * lam * lam;
    for (const auto& id : {IdentityId::omega3(), IdentityId::omega(), IdentityId::omegas(),
                           IdentityId::omega2s()}) {
      CHECK(evaluate_identity_at(seven, id, lam * x) == lam4 * evaluate_identity_at(seven, id, x));
    }
  }
}

TEST_CASE("polarized and exhaustive verdicts agree with the oracle on random algebras") {
  std::mt19937_64 rng(2024);
  const int densities[][2] = {{1, 4}, {1, 2}, {1, 1}};
  int cases = 0;
  for (int round = 0; round < 24; ++round) {
    for (const auto& dens : densities) {
      for (int n = 1; n <= 3; ++n) {
        const bool baric = round % 2 == 0;
        const oracle::Table t = oracle::random_table(rng, 5, n, dens[0], dens[1], baric);
        const Algebra a = t.to_algebra();
        std::optional<BaricAlgebra> b;
        if (baric) b.emplace(a, t.to_weight());
        for (const auto& id : identity_catalog()) {
          if (id.needs_weight() && !b) continue;
          const bool truth = oracle::holds(t, oracle_name(id));
          const IdentityReport pol = b ? polarized_check(*b, id) : polarized_check(a, id);
          const IdentityReport exh = b ? exhaustive_check(*b, id) : exhaustive_check(a, id);
          CHECK(pol.pass == truth);
          CHECK(exh.pass == truth);
          for (const IdentityReport* r : {&pol, &exh}) {
            if (r->pass) continue;
            REQUIRE(r->residual.has_value());
            CHECK_FALSE(r->residual->is_zero());
            if (b && !r->multilinear_witness) {
              CHECK(evaluate(*b, id, r->witness) == *r->residual);
            } else if (!r->multilinear_witness && id.kind() == IdentityKind::jordan) {
              CHECK(evaluate_identity_at(a, id, r->witness.at(0), r->witness.at(1)) == *r->residual);
            } else if (!r->multilinear_witness) {
              CHECK(evaluate_identity_at(a, id, r->witness.at(0)) == *r->residual);
            }
            CHECK_FALSE(r->multilinear_witness);
          }
        }
        ++cases;
      }
    }
  }
  CHECK(cases >= 200);
}

TEST_CASE("general family coincides with the named identities") {
  std::mt19937_64 rng(99);
  struct Pair {
    const char* general;
    IdentityId named;
  };
  const Pair pairs[] = {{"general:1,0,0", IdentityId::omega()},
                        {"general:3,-3,1", IdentityId::omegas()},
                        {"general:2,-1,0", IdentityId::omega2s()},
                        {"general:0,0,1", IdentityId::omega3()}};
  std::vector<BaricAlgebra> tests = {corpus::baric_algebra("t1.alg"), corpus::baric_algebra("seven.alg"),
                                     corpus::baric_algebra("s2v.alg"), one_dim(Q)};
  for (int i = 0; i < 30; ++i) {
    const oracle::Table t = oracle::random_table(rng, 5, 1 + i % 3, 1, 2, true);
    tests.emplace_back(t.to_algebra(), t.to_weight());
  }
  for (const auto& b : tests) {
    for (const auto& p : pairs) {
      CHECK(polarized_check(b, IdentityId::parse(p.general)).pass == polarized_check(b, p.named).pass);
    }
  }
  // a genuinely new member checked against the oracle
  const IdentityId mid = IdentityId::parse("general:1/2,1/4,1/4");
  for (int i = 0; i < 30; ++i) {
    const oracle::Table t = oracle::random_table(rng, 5, 1 + i % 3, 1, 2, true);
    const BaricAlgebra b(t.to_algebra(), t.to_weight());
    // 1/2 = 3, 1/4 = 4 mod 5
    CHECK(polarized_check(b, mid).pass == oracle::holds(t, "general", 3, 4, 4));
  }
}

TEST_CASE("linearized consequences") {
  const BaricAlgebra t1 = corpus::baric_algebra("t1.alg");
  CHECK(verify_linearized_consequences(t1, ConsequenceSet::omega).pass);
  CHECK(verify_linearized_consequences(gametize(t1, Scalar(Q, -1)), ConsequenceSet::omega3).pass);
  const BaricAlgebra seven = corpus::baric_algebra("seven.alg");
  CHECK_FALSE(verify_linearized_consequences(seven, ConsequenceSet::omega).pass);
  // oracle: the parent identity fails exhaustively over F_5
  CHECK_FALSE(oracle::holds(oracle::Table::from(seven.over(F5).algebra(), &seven.over(F5).weight()), "omega"));

  // consequences hold whenever the parent identity does
  std::mt19937_64 rng(8);
  for (int i = 0; i < 40; ++i) {
    const oracle::Table t = oracle::random_table(rng, 5, 1 + i % 3, 1, 2, true);
    const BaricAlgebra b(t.to_algebra(), t.to_weight());
    if (oracle::holds(t, "omega")) CHECK(verify_linearized_consequences(b, ConsequenceSet::omega).pass);
    if (oracle::holds(t, "omega3")) CHECK(verify_linearized_consequences(b, ConsequenceSet::omega3).pass);
  }
}

TEST_CASE("gametization equivalences") {
  const GametizationEquivalence t1 = gametization_equivalences(corpus::baric_algebra("t1.alg"));
  CHECK(t1.omega.pass);
  CHECK(t1.omega3_minus_one.pass);
  CHECK(t1.omegas_two.pass);
  const GametizationEquivalence seven = gametization_equivalences(corpus::baric_algebra("seven.alg"));
  CHECK_FALSE(seven.omega.pass);
  CHECK_FALSE(seven.omega3_minus_one.pass);
  CHECK_FALSE(seven.omegas_two.pass);
  const GametizationEquivalence one = gametization_equivalences(one_dim(Q));
  CHECK((one.omega.pass && one.consistent()));

  std::mt19937_64 rng(77);
  for (int i = 0; i < 40; ++i) {
    const oracle::Table t = oracle::random_table(rng, 5, 1 + i % 3, 1, 2, true);
    CHECK(gametization_equivalences(BaricAlgebra(t.to_algebra(), t.to_weight())).consistent());
  }
}

TEST_CASE("budget from the environment") {
  CHECK(default_budget() > 0);
}
