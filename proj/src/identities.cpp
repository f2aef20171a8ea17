#include "baric/identities.hpp"

#include <cstdlib>
#include <sstream>

#include "baric/polarization.hpp"

namespace baric {

namespace {

std::string lower(std::string_view s) {
  std::string out(s);
  for (auto& c : out) c = static_cast<char>(std::tolower(static_cast<unsigned char>(c)));
  return out;
}

void require_target(const Algebra& a, const Weight* w, const IdentityId& id) {
  if (id.needs_weight() && w == nullptr) {
    throw PreconditionError("identity " + id.name() + " needs a weight (baric algebra)");
  }
  (void)a;
}

Element residual(const Algebra& a, const Weight* w, const IdentityId& id, const Element& x,
                 const Element* y) {
  const FieldSpec& f = a.field();
  const Element x2 = a.multiply(x, x);
  switch (id.kind()) {
    case IdentityKind::sqsq_zero:
      return a.multiply(x2, x2);
    case IdentityKind::jordan: {
      if (y == nullptr) throw PreconditionError("the Jordan identity needs a second point y");
      return a.multiply(a.multiply(x2, *y), x) - a.multiply(x2, a.multiply(*y, x));
    }
    default:
      break;
  }
  const Scalar wx = (*w)(x);
  const Scalar wx2 = wx * wx;
  const Scalar wx3 = wx2 * wx;
  const Element x3 = a.multiply(x2, x);
  Element r = a.multiply(x2, x2);
  switch (id.kind()) {
    case IdentityKind::omega3:
      r.add_scaled(-wx3, x);
      break;
    case IdentityKind::omega:
      r.add_scaled(-wx, x3);
      break;
    case IdentityKind::omegas:
      r.add_scaled(Scalar(f, -3) * wx, x3);
      r.add_scaled(Scalar(f, 3) * wx2, x2);
      r.add_scaled(-wx3, x);
      break;
    case IdentityKind::omega2s:
      r.add_scaled(Scalar(f, -2) * wx, x3);
      r.add_scaled(wx2, x2);
      break;
    case IdentityKind::general: {
      const auto& c = id.coefficients();
      r.add_scaled(-(c[0].to_field(f) * wx), x3);
      r.add_scaled(-(c[1].to_field(f) * wx2), x2);
      r.add_scaled(-(c[2].to_field(f) * wx3), x);
      break;
    }
    default:
      break;
  }
  return r;
}

std::vector<Vector> standard_basis(const Algebra& a) {
  std::vector<Vector> out;
  for (std::size_t i = 0; i < a.dim(); ++i) out.push_back(a.basis_element(i));
  return out;
}

IdentityReport polarized(const Algebra& a, const Weight* w, const IdentityId& id) {
  require_target(a, w, id);
  if (id.kind() == IdentityKind::general) {
    // Reject coefficients that do not live in the target field up front.
    for (const auto& c : id.coefficients()) (void)c.to_field(a.field());
  }
  if (id.kind() == IdentityKind::jordan) {
    const PolarSlot slots[] = {{standard_basis(a), 3}, {standard_basis(a), 1}};
    MultiMap map = [&](std::span<const Vector> args) {
      return residual(a, w, id, args[0], &args[1]);
    };
    return polarized_report(a.field(), slots, map, id.name());
  }
  const PolarSlot slots[] = {{standard_basis(a), 4}};
  MultiMap map = [&](std::span<const Vector> args) {
    return residual(a, w, id, args[0], nullptr);
  };
  return polarized_report(a.field(), slots, map, id.name());
}

IdentityReport exhaustive(const Algebra& a, const Weight* w, const IdentityId& id,
                          std::uint64_t budget) {
  require_target(a, w, id);
  if (!a.field().is_prime_field()) {
    throw FieldError("exhaustive checking needs a prime field, algebra is over " +
                     a.field().name());
  }
  const std::size_t points = id.kind() == IdentityKind::jordan ? 2 * a.dim() : a.dim();
  if (!space_size(a.field(), points, budget)) {
    throw BudgetExceeded("exhaustive " + id.name() + " check over " + a.field().name() +
                         " in dimension " + std::to_string(a.dim()) + " exceeds budget " +
                         std::to_string(budget));
  }
  IdentityReport report = IdentityReport::passed(CheckMethod::exhaustive, id.name());
  for_each_vector(a.field(), a.dim(), [&](const Vector& x) {
    if (id.kind() != IdentityKind::jordan) {
      Element r = residual(a, w, id, x, nullptr);
      if (r.is_zero()) return true;
      report = IdentityReport::failed(CheckMethod::exhaustive, id.name());
      report.witness = {x};
      report.residual = std::move(r);
      return false;
    }
    bool ok = true;
    for_each_vector(a.field(), a.dim(), [&](const Vector& y) {
      Element r = residual(a, w, id, x, &y);
      if (r.is_zero()) return true;
      report = IdentityReport::failed(CheckMethod::exhaustive, id.name());
      report.witness = {x, y};
      report.residual = std::move(r);
      ok = false;
      return false;
    });
    return ok;
  });
  return report;
}

Element evaluate(const Algebra& a, const Weight* w, const IdentityId& id, const Element& x,
                 const std::optional<Element>& y) {
  require_target(a, w, id);
  a.require_element(x);
  if ((id.kind() == IdentityKind::jordan) != y.has_value()) {
    throw PreconditionError(id.kind() == IdentityKind::jordan
                                ? "the Jordan identity needs a second point y"
                                : "identity " + id.name() + " takes a single point");
  }
  if (y) a.require_element(*y);
  return residual(a, w, id, x, y ? &*y : nullptr);
}

}  // namespace

// IdentityId

IdentityId IdentityId::general(const Scalar& alpha, const Scalar& beta, const Scalar& gamma) {
  const FieldSpec q = FieldSpec::rationals();
  IdentityId id(IdentityKind::general);
  id.coefficients_ = {alpha.to_field(q), beta.to_field(q), gamma.to_field(q)};
  if (!(alpha + beta + gamma == Scalar::one(q))) {
    throw PreconditionError("general identity coefficients must sum to 1, got " +
                            (alpha + beta + gamma).to_string());
  }
  return id;
}

IdentityId IdentityId::parse(std::string_view text) {
  const std::string t = lower(text);
  if (t == "omega3") return omega3();
  if (t == "omega") return omega();
  if (t == "omegas") return omegas();
  if (t == "omega2s") return omega2s();
  if (t == "sqsq" || t == "sqsq_zero") return sqsq_zero();
  if (t == "jordan") return jordan();
  if (t.rfind("general:", 0) == 0) {
    const FieldSpec q = FieldSpec::rationals();
    std::vector<Scalar> c;
    std::stringstream ss(t.substr(8));
    std::string item;
    while (std::getline(ss, item, ',')) c.push_back(Scalar::parse(q, item));
    if (c.size() != 3) throw PreconditionError("general identity needs three coefficients a,b,g");
    return general(c[0], c[1], c[2]);
  }
  throw PreconditionError("unknown identity '" + std::string(text) + "'");
}

bool IdentityId::needs_weight() const {
  return kind_ != IdentityKind::sqsq_zero && kind_ != IdentityKind::jordan;
}

std::string IdentityId::name() const {
  switch (kind_) {
    case IdentityKind::omega3: return "omega3";
    case IdentityKind::omega: return "omega";
    case IdentityKind::omegas: return "omegas";
    case IdentityKind::omega2s: return "omega2s";
    case IdentityKind::sqsq_zero: return "sqsq";
    case IdentityKind::jordan: return "jordan";
    case IdentityKind::general:
      return "general:" + coefficients_[0].to_string() + "," + coefficients_[1].to_string() +
             "," + coefficients_[2].to_string();
  }
  return "?";
}

std::vector<IdentityId> identity_catalog() {
  return {IdentityId::omega3(),  IdentityId::omega(),     IdentityId::omegas(),
          IdentityId::omega2s(), IdentityId::sqsq_zero(), IdentityId::jordan()};
}

std::uint64_t default_budget() {
  if (const char* env = std::getenv("BARIC_BUDGET")) {
    try {
      return std::stoull(env);
    } catch (const std::exception&) {
      throw PreconditionError(std::string("BARIC_BUDGET is not an integer: ") + env);
    }
  }
  return 100'000'000ULL;
}

Element evaluate_identity_at(const Algebra& a, const IdentityId& id, const Element& x,
                             const std::optional<Element>& y) {
  return evaluate(a, nullptr, id, x, y);
}

Element evaluate_identity_at(const BaricAlgebra& b, const IdentityId& id, const Element& x,
                             const std::optional<Element>& y) {
  return evaluate(b.algebra(), &b.weight(), id, x, y);
}

IdentityReport polarized_check(const Algebra& a, const IdentityId& id) {
  return polarized(a, nullptr, id);
}

IdentityReport polarized_check(const BaricAlgebra& b, const IdentityId& id) {
  return polarized(b.algebra(), &b.weight(), id);
}

IdentityReport exhaustive_check(const Algebra& a, const IdentityId& id, std::uint64_t budget) {
  return exhaustive(a, nullptr, id, budget);
}

IdentityReport exhaustive_check(const BaricAlgebra& b, const IdentityId& id,
                                std::uint64_t budget) {
  return exhaustive(b.algebra(), &b.weight(), id, budget);
}

IdentityReport verify_linearized_consequences(const BaricAlgebra& b, ConsequenceSet which) {
  const Algebra& a = b.algebra();
  const Weight& w = b.weight();
  const FieldSpec& f = a.field();
  const auto basis = standard_basis(a);
  auto mul = [&](const Element& p, const Element& q) { return a.multiply(p, q); };
  auto k = [&](long long v) { return Scalar(f, v); };

  struct Rule {
    std::string name;
    std::vector<PolarSlot> slots;
    MultiMap map;
  };
  std::vector<Rule> rules;

  if (which == ConsequenceSet::omega) {
    // 4x^2(xy) = w(y)x^3 + w(x)(2x(xy) + x^2y)
    rules.push_back({"4x^2(xy) = w(y)x^3 + w(x)(2x(xy)+x^2y)",
                     {{basis, 3}, {basis, 1}},
                     [&](std::span<const Vector> v) {
                       const Element& x = v[0];
                       const Element& y = v[1];
                       Element x2 = mul(x, x), xy = mul(x, y);
                       Element r = k(4) * mul(x2, xy);
                       r.add_scaled(-w(y), mul(x2, x));
                       r.add_scaled(-w(x), k(2) * mul(x, xy) + mul(x2, y));
                       return r;
                     }});
    // 2x^2y^2 + 4(xy)^2 = w(x)(2y(yx) + y^2x) + w(y)(2x(xy) + x^2y)
    rules.push_back({"2x^2y^2 + 4(xy)^2 = w(x)(2y(yx)+y^2x) + w(y)(2x(xy)+x^2y)",
                     {{basis, 2}, {basis, 2}},
                     [&](std::span<const Vector> v) {
                       const Element& x = v[0];
                       const Element& y = v[1];
                       Element x2 = mul(x, x), y2 = mul(y, y), xy = mul(x, y);
                       Element r = k(2) * mul(x2, y2) + k(4) * mul(xy, xy);
                       r.add_scaled(-w(x), k(2) * mul(y, xy) + mul(y2, x));
                       r.add_scaled(-w(y), k(2) * mul(x, xy) + mul(x2, y));
                       return r;
                     }});
    // 4x^2(yz) + 8(xy)(xz) = 2w(x)(x(zy) + z(xy) + y(xz))
    //                        + w(y)(2x(xz) + x^2z) + w(z)(2x(xy) + x^2y)
    rules.push_back({"4x^2(yz) + 8(xy)(xz) = 2w(x)(x(zy)+z(xy)+y(xz)) + w(y)(2x(xz)+x^2z) + "
                     "w(z)(2x(xy)+x^2y)",
                     {{basis, 2}, {basis, 1}, {basis, 1}},
                     [&](std::span<const Vector> v) {
                       const Element& x = v[0];
                       const Element& y = v[1];
                       const Element& z = v[2];
                       Element x2 = mul(x, x), xy = mul(x, y), xz = mul(x, z);
                       Element r = k(4) * mul(x2, mul(y, z)) + k(8) * mul(xy, xz);
                       r.add_scaled(-(k(2) * w(x)), mul(x, mul(z, y)) + mul(z, xy) + mul(y, xz));
                       r.add_scaled(-w(y), k(2) * mul(x, xz) + mul(x2, z));
                       r.add_scaled(-w(z), k(2) * mul(x, xy) + mul(x2, y));
                       return r;
                     }});
  } else {
    // 4x^2(xy) = 3<x^2|y>x + <x^2|x>y
    rules.push_back({"4x^2(xy) = 3<x^2|y>x + <x^2|x>y",
                     {{basis, 3}, {basis, 1}},
                     [&](std::span<const Vector> v) {
                       const Element& x = v[0];
                       const Element& y = v[1];
                       const Scalar wx = w(x);
                       Element x2 = mul(x, x);
                       Element r = k(4) * mul(x2, mul(x, y));
                       r.add_scaled(-(k(3) * wx * wx * w(y)), x);
                       r.add_scaled(-(wx * wx * wx), y);
                       return r;
                     }});
    // 4x(x^2y) = 3<x|y>x^2 + <x|x^2>y
    rules.push_back({"4x(x^2y) = 3<x|y>x^2 + <x|x^2>y",
                     {{basis, 3}, {basis, 1}},
                     [&](std::span<const Vector> v) {
                       const Element& x = v[0];
                       const Element& y = v[1];
                       const Scalar wx = w(x);
                       Element x2 = mul(x, x);
                       Element r = k(4) * mul(x, mul(x2, y));
                       r.add_scaled(-(k(3) * wx * w(y)), x2);
                       r.add_scaled(-(wx * wx * wx), y);
                       return r;
                     }});
  }

  for (const auto& rule : rules) {
    IdentityReport r = polarized_report(f, rule.slots, rule.map, rule.name);
    if (!r.pass) return r;
  }
  return IdentityReport::passed(CheckMethod::polarize, which == ConsequenceSet::omega
                                                           ? "omega linearizations"
                                                           : "omega3 linearizations");
}

GametizationEquivalence gametization_equivalences(const BaricAlgebra& b) {
  const FieldSpec& f = b.field();
  return {polarized_check(b, IdentityId::omega()),
          polarized_check(gametize(b, Scalar(f, -1)), IdentityId::omega3()),
          polarized_check(gametize(b, Scalar(f, 2)), IdentityId::omegas())};
}

}  // namespace baric
