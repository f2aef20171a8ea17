#include "baric/algebra.hpp"

#include <algorithm>
#include <cctype>
#include <sstream>

namespace baric {

Algebra::Algebra(const FieldSpec& field, std::size_t dim,
                 std::vector<std::string> names)
    : field_(field), dim_(dim), names_(std::move(names)) {
  if (dim == 0) throw DimensionError("algebra dimension must be at least 1");
  if (names_.empty()) {
    for (std::size_t i = 0; i < dim; ++i) names_.push_back("e" + std::to_string(i));
  } else {
    if (names_.size() != dim) {
      throw DimensionError("expected " + std::to_string(dim) + " basis labels, got " +
                           std::to_string(names_.size()));
    }
    custom_names_ = true;
  }
  table_.assign(dim * (dim + 1) / 2, Element(field, dim));
}

std::size_t Algebra::slot(std::size_t i, std::size_t j) const {
  if (i >= dim_ || j >= dim_) {
    throw DimensionError("basis index out of range");
  }
  if (i > j) std::swap(i, j);
  // Row-major upper triangle.
  return i * dim_ - i * (i - 1) / 2 + (j - i);
}

const Element& Algebra::product(std::size_t i, std::size_t j) const {
  return table_[slot(i, j)];
}

void Algebra::set_product(std::size_t i, std::size_t j, Element value) {
  require_element(value);
  table_[slot(i, j)] = std::move(value);
}

Element Algebra::basis_element(std::size_t i) const {
  return Element::unit(field_, dim_, i);
}

Element Algebra::element(std::initializer_list<long long> coords) const {
  Element x(field_, coords);
  require_element(x);
  return x;
}

void Algebra::require_element(const Element& x) const {
  if (x.size() != dim_) {
    throw DimensionError("element has " + std::to_string(x.size()) +
                         " coordinates, algebra has dimension " +
                         std::to_string(dim_));
  }
  if (!(x.field() == field_)) {
    throw FieldError("element over " + x.field().name() + ", algebra over " +
                     field_.name());
  }
}

Element Algebra::multiply(const Element& x, const Element& y) const {
  require_element(x);
  require_element(y);
  Element out = zero();
  for (std::size_t i = 0; i < dim_; ++i) {
    if (x[i].is_zero()) continue;
    for (std::size_t j = 0; j < dim_; ++j) {
      if (y[j].is_zero()) continue;
      out.add_scaled(x[i] * y[j], table_[slot(i, j)]);
    }
  }
  return out;
}

Element Algebra::power(const Element& x, std::size_t n) const {
  if (n == 0) throw PreconditionError("principal powers start at exponent 1");
  Element acc = x;
  for (std::size_t k = 1; k < n; ++k) acc = multiply(acc, x);
  return acc;
}

Matrix Algebra::left_multiplication(const Element& x) const {
  std::vector<Element> cols;
  cols.reserve(dim_);
  for (std::size_t j = 0; j < dim_; ++j) cols.push_back(multiply(x, basis_element(j)));
  return Matrix::from_columns(field_, dim_, cols);
}

Subspace Algebra::product_span(const Subspace& s, const Subspace& t) const {
  if (s.ambient_dim() != dim_ || t.ambient_dim() != dim_) {
    throw DimensionError("subspace does not live in this algebra");
  }
  std::vector<Element> products;
  const auto sb = s.basis_vectors();
  const auto tb = t.basis_vectors();
  for (const auto& a : sb) {
    for (const auto& b : tb) products.push_back(multiply(a, b));
  }
  return Subspace::span(field_, dim_, products);
}

Subspace Algebra::subalgebra_generated(const Element& x) const {
  require_element(x);
  const Element gens[] = {x};
  Subspace current = Subspace::span(field_, dim_, gens);
  // Each round either grows the dimension or stops.
  while (true) {
    Subspace next = current + product_span(current, current);
    if (next.dim() == current.dim()) return current;
    current = std::move(next);
  }
}

Algebra Algebra::unitize() const {
  std::vector<std::string> labels;
  labels.push_back("1");
  labels.insert(labels.end(), names_.begin(), names_.end());
  Algebra u(field_, dim_ + 1, std::move(labels));
  u.custom_names_ = custom_names_;
  for (std::size_t j = 0; j <= dim_; ++j) u.set_product(0, j, u.basis_element(j));
  for (std::size_t i = 0; i < dim_; ++i) {
    for (std::size_t j = i; j < dim_; ++j) {
      const Element& p = product(i, j);
      Element shifted(field_, dim_ + 1);
      for (std::size_t k = 0; k < dim_; ++k) shifted[k + 1] = p[k];
      u.set_product(i + 1, j + 1, std::move(shifted));
    }
  }
  return u;
}

Algebra Algebra::over(const FieldSpec& target) const {
  Algebra out(target, dim_, custom_names_ ? names_ : std::vector<std::string>{});
  for (std::size_t i = 0; i < dim_; ++i) {
    for (std::size_t j = i; j < dim_; ++j) {
      out.set_product(i, j, product(i, j).to_field(target));
    }
  }
  return out;
}

bool operator==(const Algebra& a, const Algebra& b) {
  return a.field_ == b.field_ && a.dim_ == b.dim_ && a.table_ == b.table_;
}

std::string format_element(const Algebra& a, const Element& x) {
  a.require_element(x);
  std::ostringstream os;
  bool first = true;
  for (std::size_t i = 0; i < x.size(); ++i) {
    if (x[i].is_zero()) continue;
    std::string c = x[i].to_string();
    bool negative = a.field().is_rational() && c.front() == '-';
    if (negative) c.erase(0, 1);
    if (first) {
      if (negative) os << '-';
    } else {
      os << (negative ? " - " : " + ");
    }
    if (c != "1") os << c << '*';
    os << a.names()[i];
    first = false;
  }
  if (first) os << '0';
  return os.str();
}

namespace {

std::string strip(const std::string& s) {
  auto b = s.find_first_not_of(" \t");
  if (b == std::string::npos) return {};
  auto e = s.find_last_not_of(" \t");
  return s.substr(b, e - b + 1);
}

}  // namespace

Element parse_element(const Algebra& a, const std::string& text) {
  const std::string t = strip(text);
  if (t.empty()) throw PreconditionError("empty element");

  // Coordinate list.
  bool looks_numeric = std::all_of(t.begin(), t.end(), [](char c) {
    return std::isdigit(static_cast<unsigned char>(c)) || c == ',' || c == '/' ||
           c == '-' || c == '+' || c == ' ';
  });
  if (looks_numeric && (t.find(',') != std::string::npos || a.dim() == 1)) {
    std::vector<Scalar> coords;
    std::stringstream ss(t);
    std::string item;
    while (std::getline(ss, item, ',')) coords.push_back(Scalar::parse(a.field(), item));
    if (coords.size() != a.dim()) {
      throw DimensionError("expected " + std::to_string(a.dim()) +
                           " coordinates, got " + std::to_string(coords.size()));
    }
    return Element(a.field(), std::move(coords));
  }

  // Linear combination of labels: term (('+'|'-') term)*, term = [coef '*'] label.
  Element out = a.zero();
  std::size_t pos = 0;
  bool negate = false;
  if (t[0] == '+' || t[0] == '-') {
    negate = t[0] == '-';
    pos = 1;
  }
  while (pos <= t.size()) {
    std::size_t next = t.find_first_of("+-", pos);
    // A sign directly after '/' or '*' belongs to a coefficient.
    while (next != std::string::npos && next > pos &&
           (t[next - 1] == '*' || t[next - 1] == '/')) {
      next = t.find_first_of("+-", next + 1);
    }
    std::string term = strip(t.substr(pos, next == std::string::npos ? std::string::npos
                                                                     : next - pos));
    if (term.empty()) throw PreconditionError("malformed element '" + text + "'");
    Scalar coef = Scalar::one(a.field());
    std::string label = term;
    if (auto star = term.find('*'); star != std::string::npos) {
      coef = Scalar::parse(a.field(), strip(term.substr(0, star)));
      label = strip(term.substr(star + 1));
    }
    auto it = std::find(a.names().begin(), a.names().end(), label);
    if (it == a.names().end()) {
      throw PreconditionError("unknown basis label '" + label + "'");
    }
    if (negate) coef = -coef;
    out[static_cast<std::size_t>(it - a.names().begin())] += coef;
    if (next == std::string::npos) break;
    negate = t[next] == '-';
    pos = next + 1;
  }
  return out;
}

}  // namespace baric
