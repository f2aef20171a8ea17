#include "baric/structure.hpp"

#include "baric/polarization.hpp"
#include "baric/random.hpp"

namespace baric {

namespace {

std::vector<Vector> standard_basis(const Algebra& a) {
  std::vector<Vector> out;
  for (std::size_t i = 0; i < a.dim(); ++i) out.push_back(a.basis_element(i));
  return out;
}

// First pair of basis vectors of s and t whose product leaves `target`.
IdentityReport containment_report(const Algebra& a, const Subspace& s, const Subspace& t,
                                  const Subspace& target, std::string subject) {
  const auto sb = s.basis_vectors();
  const auto tb = t.basis_vectors();
  for (const auto& x : sb) {
    for (const auto& y : tb) {
      Element p = a.multiply(x, y);
      if (!target.contains(p)) {
        IdentityReport r = IdentityReport::failed(CheckMethod::direct, std::move(subject),
                                                  "product leaves the target subspace");
        r.witness = {x, y};
        r.residual = std::move(p);
        return r;
      }
    }
  }
  return IdentityReport::passed(CheckMethod::direct, std::move(subject));
}

}  // namespace

bool is_idempotent(const Algebra& a, const Element& e) { return a.multiply(e, e) == e; }

Element idempotent_from_formula(const BaricAlgebra& b, const Element& x, IdentityKind id) {
  const Algebra& a = b.algebra();
  const FieldSpec& f = a.field();
  a.require_element(x);
  if (!b.weight()(x).is_one()) {
    throw PreconditionError("idempotent formula needs w(x) = 1, got w(x) = " +
                            b.weight()(x).to_string());
  }
  const Element x2 = a.power(x, 2);
  const Element x3 = a.multiply(x2, x);
  switch (id) {
    case IdentityKind::omega:
      return x3;
    case IdentityKind::omega3: {
      Element out = Scalar::fraction(f, 1, 4) * x3;
      out.add_scaled(Scalar::fraction(f, 3, 8), x2);
      out.add_scaled(Scalar::fraction(f, 3, 8), x);
      return out;
    }
    case IdentityKind::omegas: {
      Element out = x3;
      out.add_scaled(Scalar(f, -3), x2);
      out.add_scaled(Scalar(f, 3), x);
      return out;
    }
    default:
      throw PreconditionError("no idempotent formula for this identity");
  }
}

IdempotentScan idempotents_exhaustive(const Algebra& a, const Weight* w, std::uint64_t budget) {
  if (!space_size(a.field(), a.dim(), budget)) {
    throw BudgetExceeded("idempotent scan of dimension " + std::to_string(a.dim()) + " over " +
                         a.field().name() + " exceeds budget " + std::to_string(budget));
  }
  IdempotentScan scan;
  for_each_vector(a.field(), a.dim(), [&](const Vector& v) {
    if (!v.is_zero() && is_idempotent(a, v)) {
      scan.idempotents.push_back(v);
      if (w != nullptr && !(*w)(v).is_one()) scan.all_unit_weight = false;
    }
    return true;
  });
  return scan;
}

// Peirce

Subspace PeirceDecomposition::part(const Scalar& lambda) const {
  for (const auto& p : parts) {
    if (p.eigenvalue == lambda.to_field(kernel.field())) return p.space;
  }
  return Subspace(kernel.field(), kernel.ambient_dim());
}

std::vector<Scalar> default_peirce_eigenvalues(const FieldSpec& field) {
  return {Scalar(field, 0), Scalar::fraction(field, 1, 2), Scalar(field, 1),
          Scalar::fraction(field, -1, 2)};
}

PeirceDecomposition peirce_decompose(const BaricAlgebra& b, const Element& e,
                                     std::vector<Scalar> eigenvalues) {
  const Algebra& a = b.algebra();
  const FieldSpec& f = a.field();
  a.require_element(e);
  if (!is_idempotent(a, e)) throw PreconditionError("Peirce decomposition needs an idempotent");
  if (!b.weight()(e).is_one()) throw PreconditionError("Peirce decomposition needs w(e) = 1");
  if (eigenvalues.empty()) eigenvalues = default_peirce_eigenvalues(f);

  PeirceDecomposition dec;
  dec.e = e;
  dec.kernel = b.kernel();
  const Matrix le = a.left_multiplication(e);
  const std::size_t n = a.dim();
  Subspace total(f, n);
  for (const auto& raw : eigenvalues) {
    const Scalar lambda = raw.to_field(f);
    Matrix system(f, n + 1, n);
    for (std::size_t r = 0; r < n; ++r) {
      for (std::size_t c = 0; c < n; ++c) system(r, c) = le(r, c);
      system(r, r) -= lambda;
    }
    for (std::size_t c = 0; c < n; ++c) system(n, c) = b.weight()[c];
    Subspace part = kernel(system);
    total = total + part;
    dec.parts.push_back({lambda, std::move(part)});
  }
  dec.residual_dim = dec.kernel.dim() - total.dim();
  return dec;
}

IdentityReport peirce_verify_rules(const BaricAlgebra& b, const PeirceDecomposition& dec,
                                   PeirceCase which) {
  const Algebra& a = b.algebra();
  const FieldSpec& f = a.field();
  Scalar mu(f, 0);
  Scalar c(f, 1);
  std::string case_name = "omega";
  if (which == PeirceCase::omega3) {
    mu = Scalar::fraction(f, -1, 2);
    c = Scalar::fraction(f, 1, 2);
    case_name = "omega3";
  } else if (which == PeirceCase::omegas) {
    mu = Scalar(f, 1);
    c = Scalar(f, -1);
    case_name = "omegas";
  }
  const Scalar half = Scalar::fraction(f, 1, 2);

  if (dec.residual_dim != 0) {
    throw PreconditionError("Peirce decomposition has residual dimension " +
                            std::to_string(dec.residual_dim));
  }
  for (const auto& p : dec.parts) {
    if (!p.space.is_zero() && !(p.eigenvalue == half) && !(p.eigenvalue == mu)) {
      throw PreconditionError("eigenvalue " + p.eigenvalue.to_string() +
                              " does not belong to the " + case_name + " case");
    }
  }

  const Subspace u_space = dec.part(half);
  const Subspace v_space = dec.part(mu);
  const auto ub = u_space.basis_vectors();
  const auto vb = v_space.basis_vectors();
  const auto nb = dec.kernel.basis_vectors();
  auto mul = [&](const Element& x, const Element& y) { return a.multiply(x, y); };

  std::vector<IdentityReport> checks;
  checks.push_back(containment_report(a, u_space, u_space, v_space, "N(1/2)^2 in N(mu)"));
  checks.push_back(containment_report(a, v_space, v_space, v_space, "N(mu)^2 in N(mu)"));
  checks.push_back(containment_report(a, u_space, v_space, u_space, "N(1/2)N(mu) in N(1/2)"));
  for (const auto& check : checks) {
    if (!check.pass) return check;
  }

  struct Rule {
    std::string name;
    std::vector<PolarSlot> slots;
    MultiMap map;
  };
  const std::vector<Rule> rules = {
      {"x^3 = 0 on N(1/2)", {{ub, 3}},
       [&](std::span<const Vector> v) { return mul(mul(v[0], v[0]), v[0]); }},
      {"x^3 = 0 on N(mu)", {{vb, 3}},
       [&](std::span<const Vector> v) { return mul(mul(v[0], v[0]), v[0]); }},
      {"x^2(xy) = 0 on N", {{nb, 3}, {nb, 1}},
       [&](std::span<const Vector> v) { return mul(mul(v[0], v[0]), mul(v[0], v[1])); }},
      {"u^2v^2 = -2(uv)^2", {{ub, 2}, {vb, 2}},
       [&](std::span<const Vector> v) {
         Element uv = mul(v[0], v[1]);
         Element r = mul(mul(v[0], v[0]), mul(v[1], v[1]));
         r.add_scaled(Scalar(f, 2), mul(uv, uv));
         return r;
       }},
      {"u^2v = 2u(uv)", {{ub, 2}, {vb, 1}},
       [&](std::span<const Vector> v) {
         Element r = mul(mul(v[0], v[0]), v[1]);
         r.add_scaled(Scalar(f, -2), mul(v[0], mul(v[0], v[1])));
         return r;
       }},
      {"uv^2 = 2(uv)v", {{ub, 1}, {vb, 2}},
       [&](std::span<const Vector> v) {
         Element r = mul(v[0], mul(v[1], v[1]));
         r.add_scaled(Scalar(f, -2), mul(mul(v[0], v[1]), v[1]));
         return r;
       }},
  };
  for (const auto& rule : rules) {
    IdentityReport r = polarized_report(f, rule.slots, rule.map, rule.name);
    if (!r.pass) return r;
  }

  const Element& e = dec.e;
  IdentityReport family = polynomial_report(
      f, ub, 4,
      [&](const Vector& u) {
        Element x = e + u;
        x.add_scaled(c, mul(u, u));
        return mul(x, x) - x;
      },
      "e + u + " + c.to_string() + " u^2 idempotent");
  if (!family.pass) return family;

  return IdentityReport::passed(CheckMethod::polarize, "Peirce rules (" + case_name + ")");
}

// Solvability and powers

DerivedSeries derived_series(const Algebra& a) {
  DerivedSeries out;
  Subspace current = a.full_space();
  out.terms.push_back(current);
  while (!current.is_zero()) {
    Subspace next = a.product_span(current, current);
    if (next.dim() == current.dim()) return out;  // stabilized at a nonzero term
    out.terms.push_back(next);
    current = std::move(next);
  }
  out.solvable = true;
  out.depth = out.terms.size();
  return out;
}

NilReport nil_element_check(const Algebra& a, const Element& x, std::size_t bound) {
  if (bound < 2) throw PreconditionError("nil check bound must be at least 2");
  a.require_element(x);
  NilReport rep;
  Element current = x;
  for (std::size_t k = 1; k <= bound; ++k) {
    if (k > 1) current = a.multiply(current, x);
    if (current.is_zero()) {
      rep.powers.push_back(current);
      rep.status = NilStatus::nil;
      rep.zero_exponent = k;
      return rep;
    }
    for (std::size_t j = 0; j < rep.powers.size(); ++j) {
      if (rep.powers[j] == current) {
        rep.powers.push_back(current);
        rep.status = NilStatus::not_nil;
        rep.first_exponent = j + 1;
        rep.repeat_exponent = k;
        rep.stabilized_value = current;
        return rep;
      }
    }
    rep.powers.push_back(current);
  }
  return rep;
}

IdentityReport remark_check(const Algebra& a, std::size_t samples, std::uint64_t seed) {
  const FieldSpec& f = a.field();
  if (IdentityReport sq = polarized_check(a, IdentityId::sqsq_zero()); !sq.pass) {
    sq.subject = "(<x>^2)^2 = 0";
    sq.detail = "the algebra does not satisfy (x^2)^2 = 0";
    return sq;
  }
  std::mt19937_64 rng(seed);
  for (std::size_t s = 0; s < samples; ++s) {
    Element x = a.zero();
    for (std::size_t i = 0; i < a.dim(); ++i) {
      x[i] = Scalar(f, static_cast<long long>(uniform_below(rng, 7)) - 3);
    }
    const Subspace gen = a.subalgebra_generated(x);
    const Subspace gen2 = a.product_span(gen, gen);
    if (!a.product_span(gen2, gen2).is_zero()) {
      IdentityReport r = IdentityReport::failed(CheckMethod::direct, "(<x>^2)^2 = 0",
                                                "(<x>^2)^2 is nonzero");
      r.witness = {x};
      return r;
    }
    // span{x^n : n >= 2} stops growing as soon as one power is dependent.
    std::vector<Element> powers;
    Element p = a.multiply(x, x);
    Subspace pspan(f, a.dim());
    while (true) {
      powers.push_back(p);
      Subspace next = Subspace::span(f, a.dim(), powers);
      if (next.dim() == pspan.dim()) break;
      pspan = std::move(next);
      p = a.multiply(p, x);
    }
    if (!(pspan == gen2)) {
      IdentityReport r = IdentityReport::failed(CheckMethod::direct, "<x>^2 = span{x^n}",
                                                "<x>^2 differs from the span of x^n, n >= 2");
      r.witness = {x};
      return r;
    }
  }
  return IdentityReport::passed(CheckMethod::direct, "subalgebra remark");
}

IdentityReport power_associative_upto(const Algebra& a, int k) {
  if (k < 4 || k > 8) throw PreconditionError("power associativity degree must be in [4, 8]");
  const FieldSpec& f = a.field();
  if (f.is_prime_field() && f.modulus() <= static_cast<std::uint64_t>(k)) {
    throw FieldError("power associativity up to degree " + std::to_string(k) +
                     " needs characteristic > " + std::to_string(k));
  }
  const auto basis = standard_basis(a);
  // x^1 x^j = x^{j+1} holds by definition of principal powers.
  for (int i = 2; i <= k / 2; ++i) {
    for (int j = i; i + j <= k; ++j) {
      const PolarSlot slots[] = {{basis, i + j}};
      MultiMap map = [&, i, j](std::span<const Vector> v) {
        std::vector<Element> pw{v[0]};
        for (int m = 2; m <= i + j; ++m) pw.push_back(a.multiply(pw.back(), v[0]));
        return a.multiply(pw[static_cast<std::size_t>(i - 1)], pw[static_cast<std::size_t>(j - 1)]) -
               pw[static_cast<std::size_t>(i + j - 1)];
      };
      IdentityReport r = polarized_report(
          f, slots, map,
          "x^" + std::to_string(i) + " x^" + std::to_string(j) + " = x^" + std::to_string(i + j));
      if (!r.pass) return r;
    }
  }
  return IdentityReport::passed(CheckMethod::polarize,
                                "power associative up to degree " + std::to_string(k));
}

IdentityReport cube_square_check(const BaricAlgebra& b) {
  const Algebra& a = b.algebra();
  const PolarSlot slots[] = {{standard_basis(a), 6}};
  MultiMap map = [&](std::span<const Vector> v) {
    const Element& x = v[0];
    const Scalar wx = b.weight()(x);
    Element x3 = a.power(x, 3);
    Element r = a.multiply(x3, x3);
    r.add_scaled(-(wx * wx * wx), x3);
    return r;
  };
  return polarized_report(a.field(), slots, map, "x^3x^3 = w(x)^3 x^3");
}

}  // namespace baric
