#include "baric/algebra_file.hpp"

#include <fstream>
#include <set>
#include <sstream>

namespace baric {

using nlohmann::json;
using nlohmann::ordered_json;

namespace {

[[noreturn]] void fail(const std::string& where, const std::string& what) {
  throw ParseError(where + ": " + what);
}

const json& member(const json& obj, const char* key, const std::string& where) {
  auto it = obj.find(key);
  if (it == obj.end()) fail(where, std::string("missing \"") + key + "\"");
  return *it;
}

std::size_t index_value(const json& v, const std::string& where) {
  if (!v.is_number_integer() || v.get<long long>() < 0) {
    fail(where, "expected a non-negative integer, got " + v.dump());
  }
  return v.get<std::size_t>();
}

Scalar scalar_value(const FieldSpec& f, const json& v, const std::string& where) {
  try {
    if (v.is_string()) return Scalar::parse(f, v.get<std::string>());
    if (v.is_number_integer()) return Scalar(f, v.get<long long>());
  } catch (const std::exception& e) {
    fail(where, e.what());
  }
  fail(where, "expected a scalar string such as \"-3/8\", got " + v.dump());
}

FieldSpec field_value(const json& v) {
  try {
    if (v.is_string() && v.get<std::string>() == "Q") return FieldSpec::rationals();
    if (v.is_object() && v.size() == 1 && v.contains("Fp")) {
      const json& p = v["Fp"];
      if (!p.is_number_unsigned()) fail("field", "Fp must be a positive integer");
      return FieldSpec::prime(p.get<std::uint64_t>());
    }
  } catch (const FieldError& e) {
    fail("field", e.what());
  }
  fail("field", "expected \"Q\" or {\"Fp\": p}, got " + v.dump());
}

std::pair<std::size_t, std::size_t> line_column(const std::string& text, std::size_t offset) {
  std::size_t line = 1;
  std::size_t column = 1;
  for (std::size_t i = 0; i < offset && i < text.size(); ++i) {
    if (text[i] == '\n') {
      ++line;
      column = 1;
    } else {
      ++column;
    }
  }
  return {line, column};
}

}  // namespace

AlgebraData parse_algebra_raw(const std::string& text) {
  json doc;
  try {
    doc = json::parse(text);
  } catch (const json::parse_error& e) {
    // byte is the 1-based offset of the character that broke the parse
    const std::size_t offset = e.byte > 0 ? e.byte - 1 : 0;
    auto [line, column] = line_column(text, offset);
    throw ParseError("JSON syntax error at line " + std::to_string(line) + ", column " +
                         std::to_string(column) + ": " + e.what(),
                     line, column);
  }
  return parse_algebra_raw(doc);
}

AlgebraData parse_algebra_raw(const json& doc) {
  if (!doc.is_object()) fail("file", "top level must be an object");
  for (const auto& [key, value] : doc.items()) {
    (void)value;
    if (key != "field" && key != "dim" && key != "basis" && key != "products" &&
        key != "weight") {
      fail("file", "unknown key \"" + key + "\"");
    }
  }
  const FieldSpec field = field_value(member(doc, "field", "file"));
  const std::size_t dim = index_value(member(doc, "dim", "file"), "dim");
  if (dim == 0) fail("dim", "must be at least 1");

  std::vector<std::string> names;
  if (auto it = doc.find("basis"); it != doc.end()) {
    if (!it->is_array() || it->size() != dim) fail("basis", "expected " + std::to_string(dim) + " names");
    std::set<std::string> seen;
    for (std::size_t i = 0; i < dim; ++i) {
      const json& n = (*it)[i];
      if (!n.is_string() || n.get<std::string>().empty()) {
        fail("basis[" + std::to_string(i) + "]", "expected a nonempty string");
      }
      if (!seen.insert(n.get<std::string>()).second) {
        fail("basis[" + std::to_string(i) + "]", "duplicate name " + n.dump());
      }
      names.push_back(n.get<std::string>());
    }
  }

  AlgebraData out{Algebra(field, dim, names), std::nullopt};
  if (auto it = doc.find("products"); it != doc.end()) {
    if (!it->is_array()) fail("products", "expected an array");
    std::set<std::pair<std::size_t, std::size_t>> seen;
    for (std::size_t n = 0; n < it->size(); ++n) {
      const std::string where = "products[" + std::to_string(n) + "]";
      const json& entry = (*it)[n];
      if (!entry.is_object()) fail(where, "expected an object");
      const std::size_t i = index_value(member(entry, "i", where), where + ".i");
      const std::size_t j = index_value(member(entry, "j", where), where + ".j");
      if (i >= dim || j >= dim) fail(where, "index out of range for dimension " + std::to_string(dim));
      if (i > j) {
        fail(where, "i > j (i = " + std::to_string(i) + ", j = " + std::to_string(j) +
                        "); list each product once with i <= j");
      }
      if (!seen.insert({i, j}).second) {
        fail(where, "duplicate product (" + std::to_string(i) + ", " + std::to_string(j) + ")");
      }
      const json& terms = member(entry, "terms", where);
      if (!terms.is_array()) fail(where + ".terms", "expected an array");
      Element value(field, dim);
      std::set<std::size_t> ks;
      for (std::size_t t = 0; t < terms.size(); ++t) {
        const std::string tw = where + ".terms[" + std::to_string(t) + "]";
        if (!terms[t].is_object()) fail(tw, "expected an object");
        const std::size_t k = index_value(member(terms[t], "k", tw), tw + ".k");
        if (k >= dim) fail(tw, "index out of range for dimension " + std::to_string(dim));
        if (!ks.insert(k).second) fail(tw, "duplicate k = " + std::to_string(k));
        value[k] = scalar_value(field, member(terms[t], "c", tw), tw + ".c");
      }
      out.algebra.set_product(i, j, std::move(value));
    }
  }

  if (auto it = doc.find("weight"); it != doc.end()) {
    if (!it->is_array() || it->size() != dim) {
      fail("weight", "expected " + std::to_string(dim) + " scalars");
    }
    std::vector<Scalar> values;
    for (std::size_t i = 0; i < dim; ++i) {
      values.push_back(scalar_value(field, (*it)[i], "weight[" + std::to_string(i) + "]"));
    }
    out.weight = Weight(field, std::move(values));
  }
  return out;
}

std::variant<Algebra, BaricAlgebra> parse_algebra(const std::string& text) {
  AlgebraData data = parse_algebra_raw(text);
  if (!data.weight) return std::move(data.algebra);
  const WeightCheck check = validate_weight(data.algebra, *data.weight);
  if (!check.valid) throw ParseError("weight: " + check.message);
  return BaricAlgebra(std::move(data.algebra), std::move(*data.weight));
}

std::string read_text_file(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw ParseError("cannot open " + path.string());
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

ordered_json algebra_to_json(const Algebra& a, const Weight* w) {
  ordered_json out;
  if (a.field().is_rational()) {
    out["field"] = "Q";
  } else {
    out["field"] = ordered_json{{"Fp", a.field().modulus()}};
  }
  out["dim"] = a.dim();
  if (a.has_custom_names()) out["basis"] = a.names();
  ordered_json products = ordered_json::array();
  for (std::size_t i = 0; i < a.dim(); ++i) {
    for (std::size_t j = i; j < a.dim(); ++j) {
      const Element& p = a.product(i, j);
      if (p.is_zero()) continue;
      ordered_json terms = ordered_json::array();
      for (std::size_t k = 0; k < a.dim(); ++k) {
        if (!p[k].is_zero()) terms.push_back({{"k", k}, {"c", p[k].to_string()}});
      }
      products.push_back({{"i", i}, {"j", j}, {"terms", std::move(terms)}});
    }
  }
  out["products"] = std::move(products);
  if (w != nullptr) {
    ordered_json values = ordered_json::array();
    for (const auto& s : w->values()) values.push_back(s.to_string());
    out["weight"] = std::move(values);
  }
  return out;
}

std::string serialize(const Algebra& a, const Weight* w) { return algebra_to_json(a, w).dump(2) + "\n"; }

std::string serialize(const BaricAlgebra& b) { return serialize(b.algebra(), &b.weight()); }

}  // namespace baric
