#pragma once

// The closed catalog of identities and their exact verification, both by
// polarization (any supported field) and by exhaustive evaluation (F_p).

#include <array>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "baric/baric.hpp"
#include "baric/report.hpp"

namespace baric {

enum class IdentityKind { omega3, omega, omegas, omega2s, sqsq_zero, jordan, general };

/// An identity from the catalog. Residuals, with w = w(x):
///   omega3   x^2x^2 - w^3 x
///   omega    x^2x^2 - w x^3
///   omegas   x^2x^2 - 3w x^3 + 3w^2 x^2 - w^3 x
///   omega2s  x^2x^2 - 2w x^3 + w^2 x^2
///   sqsq     (x^2)^2
///   jordan   (x^2 y) x - x^2 (y x)
///   general  x^2x^2 - a w x^3 - b w^2 x^2 - c w^3 x, with a + b + c = 1
class IdentityId {
 public:
  static IdentityId omega3() { return IdentityId(IdentityKind::omega3); }
  static IdentityId omega() { return IdentityId(IdentityKind::omega); }
  static IdentityId omegas() { return IdentityId(IdentityKind::omegas); }
  static IdentityId omega2s() { return IdentityId(IdentityKind::omega2s); }
  static IdentityId sqsq_zero() { return IdentityId(IdentityKind::sqsq_zero); }
  static IdentityId jordan() { return IdentityId(IdentityKind::jordan); }
  /// Rational coefficients; throws PreconditionError unless they sum to 1.
  static IdentityId general(const Scalar& alpha, const Scalar& beta, const Scalar& gamma);

  /// "omega3", "omega", "omegas", "omega2s", "sqsq", "jordan" or
  /// "general:a,b,c".
  static IdentityId parse(std::string_view text);

  IdentityKind kind() const { return kind_; }
  bool needs_weight() const;
  /// Degree in x (3 for jordan, which is additionally linear in y).
  int degree() const { return kind_ == IdentityKind::jordan ? 3 : 4; }
  std::string name() const;
  /// (alpha, beta, gamma) of a general identity.
  const std::array<Scalar, 3>& coefficients() const { return coefficients_; }

 private:
  explicit IdentityId(IdentityKind kind) : kind_(kind) {}
  IdentityKind kind_;
  std::array<Scalar, 3> coefficients_{};
};

/// The six named identities.
std::vector<IdentityId> identity_catalog();

/// Exhaustive evaluation budget: BARIC_BUDGET if set, else 10^8.
std::uint64_t default_budget();

Element evaluate_identity_at(const Algebra& a, const IdentityId& id, const Element& x,
                             const std::optional<Element>& y = std::nullopt);
Element evaluate_identity_at(const BaricAlgebra& b, const IdentityId& id, const Element& x,
                             const std::optional<Element>& y = std::nullopt);

IdentityReport polarized_check(const Algebra& a, const IdentityId& id);
IdentityReport polarized_check(const BaricAlgebra& b, const IdentityId& id);

/// Evaluates at every vector (every pair for jordan). F_p only.
IdentityReport exhaustive_check(const Algebra& a, const IdentityId& id,
                                std::uint64_t budget = default_budget());
IdentityReport exhaustive_check(const BaricAlgebra& b, const IdentityId& id,
                                std::uint64_t budget = default_budget());

enum class ConsequenceSet {
  /// The three linearizations of x^2x^2 = w(x) x^3.
  omega,
  /// 4x^2(xy) = 3<x^2|y>x + <x^2|x>y and 4x(x^2y) = 3<x|y>x^2 + <x|x^2>y
  /// with <x|y> = w(x)w(y).
  omega3,
};

IdentityReport verify_linearized_consequences(const BaricAlgebra& b, ConsequenceSet which);

struct GametizationEquivalence {
  IdentityReport omega;             // B satisfies omega
  IdentityReport omega3_minus_one;  // B_{-1} satisfies omega3
  IdentityReport omegas_two;        // B_2 satisfies omegas
  bool consistent() const {
    return omega.pass == omega3_minus_one.pass && omega.pass == omegas_two.pass;
  }
};

GametizationEquivalence gametization_equivalences(const BaricAlgebra& b);

}  // namespace baric
