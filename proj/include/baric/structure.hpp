#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <vector>

#include "baric/baric.hpp"
#include "baric/identities.hpp"

namespace baric {

bool is_idempotent(const Algebra& a, const Element& e);

/// Closed-form idempotent built from x with w(x) = 1:
///   omega   x^3
///   omega3  1/4 x^3 + 3/8 x^2 + 3/8 x
///   omegas  x^3 - 3x^2 + 3x
/// The result is idempotent whenever B satisfies `id`.
Element idempotent_from_formula(const BaricAlgebra& b, const Element& x, IdentityKind id);

struct IdempotentScan {
  /// Nonzero idempotents in enumeration order.
  std::vector<Element> idempotents;
  /// With a weight supplied: whether every idempotent has weight 1.
  bool all_unit_weight = true;
};

/// Every nonzero e with e^2 = e, by enumeration of F_p^n.
IdempotentScan idempotents_exhaustive(const Algebra& a, const Weight* w = nullptr,
                                      std::uint64_t budget = default_budget());

struct PeircePart {
  Scalar eigenvalue;
  Subspace space;
};

struct PeirceDecomposition {
  Element e;
  /// N = ker w.
  Subspace kernel;
  std::vector<PeircePart> parts;
  /// dim N minus the dimension of the sum of the parts.
  std::size_t residual_dim = 0;

  /// N(lambda), or the zero subspace if lambda was not probed.
  Subspace part(const Scalar& lambda) const;
};

/// Probe set used when none is given: 0, 1/2, 1, -1/2.
std::vector<Scalar> default_peirce_eigenvalues(const FieldSpec& field);

/// N(lambda) = {x in ker w : e x = lambda x} for each probed lambda.
/// Requires e idempotent with w(e) = 1.
PeirceDecomposition peirce_decompose(const BaricAlgebra& b, const Element& e,
                                     std::vector<Scalar> eigenvalues = {});

enum class PeirceCase { omega, omega3, omegas };

/// Verifies the multiplication rules between N(1/2) and N(mu), where mu is
/// 0, -1/2 or 1 for the three cases, and that e + u + c u^2 is idempotent for
/// every u in N(1/2) (c = 1, 1/2, -1 respectively).
IdentityReport peirce_verify_rules(const BaricAlgebra& b, const PeirceDecomposition& dec,
                                   PeirceCase which);

struct DerivedSeries {
  /// A, A^2, (A^2)^2, ... until zero or stabilization.
  std::vector<Subspace> terms;
  bool solvable = false;
  /// 1-based index of the first zero term.
  std::optional<std::size_t> depth;
};

DerivedSeries derived_series(const Algebra& a);

enum class NilStatus { nil, not_nil, inconclusive };

struct NilReport {
  NilStatus status = NilStatus::inconclusive;
  /// First exponent with x^k = 0.
  std::optional<std::size_t> zero_exponent;
  /// x^repeat_exponent = x^first_exponent != 0 for the first repeat found.
  std::optional<std::size_t> first_exponent;
  std::optional<std::size_t> repeat_exponent;
  std::optional<Element> stabilized_value;
  /// x^1 .. x^k as computed.
  std::vector<Element> powers;
};

/// Principal powers up to `bound` (>= 2). A repeated nonzero value proves the
/// element is not nil, since the powers then cycle forever.
NilReport nil_element_check(const Algebra& a, const Element& x, std::size_t bound);

/// For sampled x: (<x>^2)^2 = 0 and <x>^2 = span{x^n : n >= 2}. Coordinates
/// are drawn from [-3, 3]; the algebra must satisfy (x^2)^2 = 0.
IdentityReport remark_check(const Algebra& a, std::size_t samples, std::uint64_t seed);

/// x^i x^j = x^{i+j} for all i + j <= k, 4 <= k <= 8; over F_p needs p > k.
IdentityReport power_associative_upto(const Algebra& a, int k);

/// x^3 x^3 = w(x)^3 x^3 as a degree-six identity.
IdentityReport cube_square_check(const BaricAlgebra& b);

}  // namespace baric
