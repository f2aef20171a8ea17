#pragma once

// Deciding polynomial identities by full polarization.
//
// A map P that is homogeneous of degree d_s in each argument slot s vanishes
// identically iff its full polarization vanishes on every non-decreasing
// tuple of basis vectors in every slot, provided the characteristic does not
// divide any d_s!. The polarization in one slot with tuple (x_1..x_d) is
//   sum over nonempty S of (-1)^(d-|S|) P(sum_{i in S} x_i).

#include <cstddef>
#include <functional>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "baric/report.hpp"

namespace baric {

/// One argument of a multihomogeneous map: homogeneous of `degree` in this
/// argument, which ranges over span(basis).
struct PolarSlot {
  std::vector<Vector> basis;
  int degree = 1;
};

/// Receives one vector per slot.
using MultiMap = std::function<Vector(std::span<const Vector>)>;
using PointMap = std::function<Vector(const Vector&)>;

struct PolarFailure {
  /// Per slot, non-decreasing indices into that slot's basis.
  std::vector<std::vector<std::size_t>> tuple;
  Vector value;
};

inline constexpr std::size_t kWitnessBudget = 10000;

/// The lexicographically least failing tuple, if any. Throws FieldError when
/// the characteristic divides some slot degree factorial.
std::optional<PolarFailure> find_polarization_failure(const FieldSpec& field,
                                                      std::span<const PolarSlot> slots,
                                                      const MultiMap& map);

/// Looks for a point where `map` is nonzero among combinations of the failing
/// tuple's basis vectors with coefficients in {0, +-1, +-2, 1/2}.
std::optional<std::vector<Vector>> find_small_witness(const FieldSpec& field,
                                                      std::span<const PolarSlot> slots,
                                                      const PolarFailure& failure,
                                                      const MultiMap& map,
                                                      std::size_t budget = kWitnessBudget);

/// Polarized check plus witness reconstruction.
IdentityReport polarized_report(const FieldSpec& field, std::span<const PolarSlot> slots,
                                const MultiMap& map, std::string subject);

/// Checks a single-slot polynomial map of degree <= max_degree that need not
/// be homogeneous. Its homogeneous components are recovered by interpolating
/// t -> map(t x) at t = 0..max_degree and each is checked by polarization.
IdentityReport polynomial_report(const FieldSpec& field, std::vector<Vector> basis,
                                 int max_degree, const PointMap& map, std::string subject);

}  // namespace baric
