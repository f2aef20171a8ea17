#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "baric/algebra.hpp"

namespace baric {

enum class CheckMethod { polarize, exhaustive, direct };

std::string to_string(CheckMethod m);

/// Verdict of a check. On failure `witness` holds the evaluation point(s)
/// and `residual` the nonzero value found there.
struct IdentityReport {
  bool pass = true;
  CheckMethod method = CheckMethod::direct;
  /// Name of the identity or rule that was checked.
  std::string subject;

  std::vector<Element> witness;
  std::optional<Element> residual;

  /// Set when no small witness was found and the witness is the failing
  /// multilinear tuple itself; `residual` then holds the polarized value.
  bool multilinear_witness = false;
  /// Basis indices of the failing polarization tuple, one list per slot.
  std::vector<std::vector<std::size_t>> failing_tuple;
  /// Failing basis pair for table-level checks (homomorphisms).
  std::optional<std::pair<std::size_t, std::size_t>> basis_pair;

  std::string detail;

  static IdentityReport passed(CheckMethod method, std::string subject) {
    IdentityReport r;
    r.pass = true;
    r.method = method;
    r.subject = std::move(subject);
    return r;
  }
  static IdentityReport failed(CheckMethod method, std::string subject,
                               std::string detail = {}) {
    IdentityReport r;
    r.pass = false;
    r.method = method;
    r.subject = std::move(subject);
    r.detail = std::move(detail);
    return r;
  }
};

}  // namespace baric
