#include "baric/baric.hpp"

#include <algorithm>

namespace baric {

std::string to_string(CheckMethod m) {
  switch (m) {
    case CheckMethod::polarize: return "polarize";
    case CheckMethod::exhaustive: return "exhaustive";
    case CheckMethod::direct: return "direct";
  }
  return "?";
}

// Weight

Weight::Weight(const FieldSpec& field, std::vector<Scalar> values)
    : field_(field), values_(std::move(values)) {
  for (auto& v : values_) v = v.to_field(field_);
}

Weight::Weight(const FieldSpec& field, std::initializer_list<long long> values)
    : field_(field) {
  for (long long v : values) values_.emplace_back(field, v);
}

bool Weight::is_zero() const {
  return std::all_of(values_.begin(), values_.end(),
                     [](const Scalar& s) { return s.is_zero(); });
}

Scalar Weight::operator()(const Element& x) const {
  if (x.size() != values_.size()) throw DimensionError("weight/element size mismatch");
  Scalar acc = Scalar::zero(field_);
  for (std::size_t i = 0; i < values_.size(); ++i) {
    if (!x[i].is_zero() && !values_[i].is_zero()) acc += values_[i] * x[i];
  }
  return acc;
}

Matrix Weight::as_row() const {
  Matrix m(field_, 1, values_.size());
  for (std::size_t i = 0; i < values_.size(); ++i) m(0, i) = values_[i];
  return m;
}

Weight Weight::over(const FieldSpec& target) const {
  std::vector<Scalar> out;
  for (const auto& v : values_) out.push_back(v.to_field(target));
  return Weight(target, std::move(out));
}

bool operator==(const Weight& a, const Weight& b) {
  return a.field_ == b.field_ && a.values_ == b.values_;
}

WeightCheck validate_weight(const Algebra& a, const Weight& w) {
  WeightCheck out;
  if (w.size() != a.dim()) {
    out.message = "weight has " + std::to_string(w.size()) + " entries, algebra has dimension " +
                  std::to_string(a.dim());
    return out;
  }
  if (!(w.field() == a.field())) {
    out.message = "weight and algebra over different fields";
    return out;
  }
  if (w.is_zero()) {
    out.message = "weight is identically zero";
    return out;
  }
  for (std::size_t i = 0; i < a.dim(); ++i) {
    for (std::size_t j = i; j < a.dim(); ++j) {
      if (!(w(a.product(i, j)) == w[i] * w[j])) {
        out.failing_pair = std::make_pair(i, j);
        out.message = "basis pair (" + std::to_string(i) + ", " + std::to_string(j) + "): w(" + a.names()[i] + "*" + a.names()[j] + ") = " +
                      w(a.product(i, j)).to_string() + " but w(" + a.names()[i] +
                      ")w(" + a.names()[j] + ") = " + (w[i] * w[j]).to_string();
        return out;
      }
    }
  }
  out.valid = true;
  return out;
}

// BaricAlgebra

BaricAlgebra::BaricAlgebra(Algebra algebra, Weight weight)
    : algebra_(std::move(algebra)), weight_(std::move(weight)) {
  WeightCheck check = validate_weight(algebra_, weight_);
  if (!check.valid) throw PreconditionError("invalid weight: " + check.message);
}

Subspace BaricAlgebra::kernel() const { return baric::kernel(weight_.as_row()); }

BaricAlgebra BaricAlgebra::over(const FieldSpec& target) const {
  return BaricAlgebra(algebra_.over(target), weight_.over(target));
}

namespace {

// Rebuilds a table from x*y = lambda xy + mu (w(x) y + w(y) x).
Algebra deform(const Algebra& a, const Weight& w, const Scalar& lambda, const Scalar& mu) {
  Algebra out(a.field(), a.dim(), a.has_custom_names() ? a.names() : std::vector<std::string>{});
  for (std::size_t i = 0; i < a.dim(); ++i) {
    for (std::size_t j = i; j < a.dim(); ++j) {
      Element p = lambda * a.product(i, j);
      p[j] += mu * w[i];
      p[i] += mu * w[j];
      out.set_product(i, j, std::move(p));
    }
  }
  return out;
}

}  // namespace

BaricAlgebra gametize(const BaricAlgebra& b, const Scalar& gamma) {
  const FieldSpec& f = b.field();
  const Scalar g = gamma.to_field(f);
  const Scalar one = Scalar::one(f);
  if (g == one) throw PreconditionError("gametization parameter must differ from 1");
  const Scalar half = Scalar::fraction(f, 1, 2);
  return BaricAlgebra(deform(b.algebra(), b.weight(), one - g, half * g), b.weight());
}

StarTransform star_transform(const BaricAlgebra& b) {
  const FieldSpec& f = b.field();
  Algebra star = deform(b.algebra(), b.weight(), Scalar::one(f), -Scalar::fraction(f, 1, 2));
  Subspace sq = star.product_span(star.full_space(), star.full_space());
  return {std::move(star), std::move(sq)};
}

BaricAlgebra star_inverse(const Algebra& star, const Weight& w) {
  if (w.size() != star.dim()) throw DimensionError("weight/algebra size mismatch");
  if (w.is_zero()) throw PreconditionError("weight must be a nonzero linear form");
  for (std::size_t i = 0; i < star.dim(); ++i) {
    for (std::size_t j = i; j < star.dim(); ++j) {
      const Scalar v = w(star.product(i, j));
      if (!v.is_zero()) {
        throw PreconditionError("A^{*2} is not contained in ker w: w(" + star.names()[i] +
                                "*" + star.names()[j] + ") = " + v.to_string());
      }
    }
  }
  const FieldSpec& f = star.field();
  return BaricAlgebra(deform(star, w, Scalar::one(f), Scalar::fraction(f, 1, 2)), w);
}

Algebra jordanize(const BaricAlgebra& b) {
  const Algebra& a = b.algebra();
  const Weight& w = b.weight();
  const FieldSpec& f = a.field();
  const Scalar three_quarters = Scalar::fraction(f, 3, 4);
  Algebra j = a.unitize();
  for (std::size_t i = 0; i < a.dim(); ++i) {
    for (std::size_t k = i; k < a.dim(); ++k) {
      Element p = j.product(i + 1, k + 1);
      p[0] += three_quarters * w[i] * w[k];
      j.set_product(i + 1, k + 1, std::move(p));
    }
  }
  return j;
}

// LinearMap

LinearMap::LinearMap(Algebra source, Algebra target, Matrix matrix)
    : source_(std::move(source)), target_(std::move(target)), matrix_(std::move(matrix)) {
  if (matrix_.rows() != target_.dim() || matrix_.cols() != source_.dim()) {
    throw DimensionError("linear map matrix does not match its algebras");
  }
}

Element LinearMap::operator()(const Element& x) const {
  source_.require_element(x);
  return matrix_ * x;
}

LinearMap phi_unitization_iso(const BaricAlgebra& b) {
  const FieldSpec& f = b.field();
  const std::size_t n = b.dim();
  Algebra src = b.algebra().unitize();
  Algebra dst = gametize(b, Scalar(f, 2)).algebra().unitize();
  Matrix m(f, n + 1, n + 1);
  m(0, 0) = Scalar::one(f);
  for (std::size_t j = 0; j < n; ++j) {
    m(0, j + 1) = b.weight()[j];
    m(j + 1, j + 1) = -Scalar::one(f);
  }
  return LinearMap(std::move(src), std::move(dst), std::move(m));
}

LinearMap jordan_iso(const BaricAlgebra& b) {
  const FieldSpec& f = b.field();
  const std::size_t n = b.dim();
  Algebra src = b.algebra().unitize();
  Algebra dst = jordanize(gametize(b, Scalar(f, -1)));
  const Scalar quarter = Scalar::fraction(f, 1, 4);
  const Scalar half = Scalar::fraction(f, 1, 2);
  Matrix m(f, n + 1, n + 1);
  m(0, 0) = Scalar::one(f);
  for (std::size_t j = 0; j < n; ++j) {
    m(0, j + 1) = quarter * b.weight()[j];
    m(j + 1, j + 1) = half;
  }
  return LinearMap(std::move(src), std::move(dst), std::move(m));
}

HomomorphismReport is_algebra_homomorphism(const LinearMap& f) {
  HomomorphismReport out;
  out.rank = f.matrix().rank();
  out.bijective = f.source().dim() == f.target().dim() && out.rank == f.source().dim();
  out.report = IdentityReport::passed(CheckMethod::direct, "homomorphism");

  const Algebra& src = f.source();
  const Algebra& dst = f.target();
  std::vector<Element> images;
  for (std::size_t i = 0; i < src.dim(); ++i) images.push_back(f.matrix().column(i));
  for (std::size_t i = 0; i < src.dim(); ++i) {
    for (std::size_t j = i; j < src.dim(); ++j) {
      Element lhs = f(src.product(i, j));
      Element rhs = dst.multiply(images[i], images[j]);
      if (!(lhs == rhs)) {
        IdentityReport r = IdentityReport::failed(
            CheckMethod::direct, "homomorphism",
            "f(" + src.names()[i] + "*" + src.names()[j] + ") != f(" + src.names()[i] +
                ")*f(" + src.names()[j] + ")");
        r.basis_pair = std::make_pair(i, j);
        r.witness = {lhs, rhs};
        r.residual = lhs - rhs;
        out.report = std::move(r);
        return out;
      }
    }
  }
  return out;
}

}  // namespace baric
