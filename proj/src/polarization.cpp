#include "baric/polarization.hpp"

#include <algorithm>
#include <map>

namespace baric {

namespace {

void require_degree_ok(const FieldSpec& field, int degree) {
  if (degree < 1) throw PreconditionError("polarization slot degree must be positive");
  if (field.is_prime_field() && field.modulus() <= static_cast<std::uint64_t>(degree)) {
    throw FieldError("polarization of degree " + std::to_string(degree) +
                     " needs characteristic > " + std::to_string(degree) + ", field is " +
                     field.name());
  }
}

/// All non-decreasing index tuples of the given length over [0, n).
std::vector<std::vector<std::size_t>> nondecreasing_tuples(std::size_t n, int length) {
  std::vector<std::vector<std::size_t>> out;
  if (n == 0) return out;
  std::vector<std::size_t> cur(static_cast<std::size_t>(length), 0);
  while (true) {
    out.push_back(cur);
    int pos = length - 1;
    while (pos >= 0 && cur[static_cast<std::size_t>(pos)] == n - 1) --pos;
    if (pos < 0) break;
    std::size_t v = cur[static_cast<std::size_t>(pos)] + 1;
    for (int k = pos; k < length; ++k) cur[static_cast<std::size_t>(k)] = v;
  }
  return out;
}

/// Distinct subset sums of a tuple with their signed multiplicities.
struct Term {
  Vector point;
  Scalar coefficient;
};

std::vector<Term> polarization_terms(const FieldSpec& field, const PolarSlot& slot,
                                     const std::vector<std::size_t>& tuple) {
  const std::size_t d = tuple.size();
  // Subsets with the same multiset of basis indices give the same point.
  std::map<std::vector<std::size_t>, long long> grouped;
  for (std::size_t mask = 1; mask < (std::size_t{1} << d); ++mask) {
    std::vector<std::size_t> chosen;
    for (std::size_t i = 0; i < d; ++i) {
      if (mask & (std::size_t{1} << i)) chosen.push_back(tuple[i]);
    }
    const long long sign = ((d - chosen.size()) % 2 == 0) ? 1 : -1;
    grouped[chosen] += sign;
  }
  std::vector<Term> out;
  for (const auto& [chosen, coef] : grouped) {
    if (coef == 0) continue;
    Vector p(field, slot.basis.front().size());
    for (std::size_t idx : chosen) p += slot.basis[idx];
    out.push_back({std::move(p), Scalar(field, coef)});
  }
  return out;
}

Vector polarized_value(const FieldSpec& field, std::span<const PolarSlot> slots,
                       const std::vector<std::vector<std::size_t>>& tuple, const MultiMap& map) {
  std::vector<std::vector<Term>> terms;
  for (std::size_t s = 0; s < slots.size(); ++s) {
    terms.push_back(polarization_terms(field, slots[s], tuple[s]));
  }
  std::vector<std::size_t> pick(slots.size(), 0);
  std::vector<Vector> args(slots.size());
  std::optional<Vector> acc;
  while (true) {
    Scalar coef = Scalar::one(field);
    for (std::size_t s = 0; s < slots.size(); ++s) {
      args[s] = terms[s][pick[s]].point;
      coef *= terms[s][pick[s]].coefficient;
    }
    Vector v = map(args);
    if (!acc) acc = Vector(field, v.size());
    acc->add_scaled(coef, v);
    std::size_t s = slots.size();
    while (true) {
      if (s == 0) return *acc;
      --s;
      if (++pick[s] < terms[s].size()) break;
      pick[s] = 0;
    }
  }
}

std::vector<Scalar> witness_coefficients(const FieldSpec& field) {
  std::vector<Scalar> out;
  for (const Scalar& c : {Scalar(field, 0), Scalar(field, 1), Scalar(field, -1), Scalar(field, 2),
                          Scalar(field, -2), Scalar::fraction(field, 1, 2)}) {
    if (std::find(out.begin(), out.end(), c) == out.end()) out.push_back(c);
  }
  return out;
}

/// Candidate points for one slot, sparse ones first.
std::vector<Vector> slot_candidates(const FieldSpec& field, const PolarSlot& slot,
                                    const std::vector<std::size_t>& tuple, std::size_t cap) {
  std::vector<std::size_t> distinct(tuple.begin(), tuple.end());
  distinct.erase(std::unique(distinct.begin(), distinct.end()), distinct.end());
  if (slot.degree == 1) return {slot.basis[distinct.front()]};
  const auto coefs = witness_coefficients(field);
  std::vector<Vector> out;
  std::vector<std::size_t> digit(distinct.size(), 0);
  while (out.size() < cap) {
    std::size_t k = distinct.size();
    bool done = true;
    while (k > 0) {
      --k;
      if (++digit[k] < coefs.size()) {
        done = false;
        break;
      }
      digit[k] = 0;
    }
    if (done) break;
    Vector p(field, slot.basis.front().size());
    for (std::size_t i = 0; i < distinct.size(); ++i) {
      p.add_scaled(coefs[digit[i]], slot.basis[distinct[i]]);
    }
    out.push_back(std::move(p));
  }
  return out;
}

}  // namespace

std::optional<PolarFailure> find_polarization_failure(const FieldSpec& field,
                                                      std::span<const PolarSlot> slots,
                                                      const MultiMap& map) {
  std::vector<std::vector<std::vector<std::size_t>>> tuples;
  for (const auto& slot : slots) {
    require_degree_ok(field, slot.degree);
    tuples.push_back(nondecreasing_tuples(slot.basis.size(), slot.degree));
    // An empty slot space makes the map vacuously zero.
    if (tuples.back().empty()) return std::nullopt;
  }
  std::vector<std::size_t> pick(slots.size(), 0);
  std::vector<std::vector<std::size_t>> current(slots.size());
  while (true) {
    for (std::size_t s = 0; s < slots.size(); ++s) current[s] = tuples[s][pick[s]];
    Vector value = polarized_value(field, slots, current, map);
    if (!value.is_zero()) return PolarFailure{current, std::move(value)};
    std::size_t s = slots.size();
    while (true) {
      if (s == 0) return std::nullopt;
      --s;
      if (++pick[s] < tuples[s].size()) break;
      pick[s] = 0;
    }
  }
}

std::optional<std::vector<Vector>> find_small_witness(const FieldSpec& field,
                                                      std::span<const PolarSlot> slots,
                                                      const PolarFailure& failure,
                                                      const MultiMap& map, std::size_t budget) {
  std::vector<std::vector<Vector>> cands;
  for (std::size_t s = 0; s < slots.size(); ++s) {
    cands.push_back(slot_candidates(field, slots[s], failure.tuple[s], budget));
  }
  std::vector<std::size_t> pick(slots.size(), 0);
  std::vector<Vector> args(slots.size());
  for (std::size_t tried = 0; tried < budget; ++tried) {
    for (std::size_t s = 0; s < slots.size(); ++s) args[s] = cands[s][pick[s]];
    if (!map(args).is_zero()) return args;
    std::size_t s = slots.size();
    while (true) {
      if (s == 0) return std::nullopt;
      --s;
      if (++pick[s] < cands[s].size()) break;
      pick[s] = 0;
    }
  }
  return std::nullopt;
}

IdentityReport polarized_report(const FieldSpec& field, std::span<const PolarSlot> slots,
                                const MultiMap& map, std::string subject) {
  auto failure = find_polarization_failure(field, slots, map);
  if (!failure) return IdentityReport::passed(CheckMethod::polarize, std::move(subject));

  IdentityReport r = IdentityReport::failed(CheckMethod::polarize, std::move(subject));
  r.failing_tuple = failure->tuple;
  if (auto w = find_small_witness(field, slots, *failure, map)) {
    r.residual = map(*w);
    r.witness = std::move(*w);
  } else {
    r.multilinear_witness = true;
    for (std::size_t s = 0; s < slots.size(); ++s) {
      for (std::size_t idx : failure->tuple[s]) r.witness.push_back(slots[s].basis[idx]);
    }
    r.residual = failure->value;
    r.detail = "no small witness found; reporting the failing multilinear tuple";
  }
  return r;
}

IdentityReport polynomial_report(const FieldSpec& field, std::vector<Vector> basis,
                                 int max_degree, const PointMap& map, std::string subject) {
  if (max_degree < 0) throw PreconditionError("negative degree");
  if (field.is_prime_field() && field.modulus() <= static_cast<std::uint64_t>(max_degree)) {
    throw FieldError("splitting a degree " + std::to_string(max_degree) +
                     " polynomial needs more field elements than " + field.name() + " has");
  }
  if (basis.empty()) {
    // Only the constant term remains; evaluate at the origin of a zero space.
    return IdentityReport::passed(CheckMethod::polarize, std::move(subject));
  }
  const std::size_t nodes = static_cast<std::size_t>(max_degree) + 1;
  Matrix vandermonde(field, nodes, nodes);
  for (std::size_t t = 0; t < nodes; ++t) {
    Scalar power = Scalar::one(field);
    for (std::size_t d = 0; d < nodes; ++d) {
      vandermonde(t, d) = power;
      power *= Scalar(field, static_cast<long long>(t));
    }
  }
  const Matrix weights = vandermonde.inverse();  // weights(d, t)

  auto component = [&](std::size_t d) {
    return [&, d](const Vector& x) {
      std::optional<Vector> acc;
      for (std::size_t t = 0; t < nodes; ++t) {
        if (weights(d, t).is_zero()) continue;
        Vector v = map(Scalar(field, static_cast<long long>(t)) * x);
        if (!acc) acc = Vector(field, v.size());
        acc->add_scaled(weights(d, t), v);
      }
      return *acc;
    };
  };

  const Vector origin(field, basis.front().size());
  if (Vector c0 = map(origin); !c0.is_zero()) {
    IdentityReport r = IdentityReport::failed(CheckMethod::polarize, std::move(subject),
                                              "constant term is nonzero");
    r.witness = {origin};
    r.residual = std::move(c0);
    return r;
  }
  for (std::size_t d = 1; d < nodes; ++d) {
    auto comp = component(d);
    MultiMap multi = [&](std::span<const Vector> args) { return comp(args[0]); };
    const PolarSlot slots[] = {PolarSlot{basis, static_cast<int>(d)}};
    auto failure = find_polarization_failure(field, slots, multi);
    if (!failure) continue;

    IdentityReport r = IdentityReport::failed(CheckMethod::polarize, std::move(subject),
                                              "degree " + std::to_string(d) +
                                                  " component is nonzero");
    r.failing_tuple = failure->tuple;
    // A point where the component is nonzero has some multiple t x, t in
    // 0..max_degree, where the whole map is nonzero.
    if (auto w = find_small_witness(field, slots, *failure, multi)) {
      for (std::size_t t = 1; t < nodes; ++t) {
        Vector x = Scalar(field, static_cast<long long>(t)) * (*w)[0];
        Vector v = map(x);
        if (!v.is_zero()) {
          r.witness = {std::move(x)};
          r.residual = std::move(v);
          return r;
        }
      }
    }
    r.multilinear_witness = true;
    for (std::size_t idx : failure->tuple[0]) r.witness.push_back(basis[idx]);
    r.residual = failure->value;
    return r;
  }
  return IdentityReport::passed(CheckMethod::polarize, std::move(subject));
}

}  // namespace baric
