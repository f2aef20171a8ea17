#pragma once

// JSON algebra files:
//
//   {
//     "field": "Q" | {"Fp": 7},
//     "dim": 3,
//     "basis": ["e", "u", "v"],                       optional
//     "products": [{"i": 0, "j": 1, "terms": [{"k": 1, "c": "1/2"}]}],
//     "weight": ["1", "0", "0"]                       optional
//   }
//
// Indices are 0-based, each product is listed with i <= j, and omitted
// products are zero. Scalars are strings in the usual "p/q" syntax; plain JSON
// integers are accepted as well, floats are not.

#include <cstddef>
#include <filesystem>
#include <optional>
#include <string>
#include <variant>

#include <json.hpp>

#include "baric/baric.hpp"

namespace baric {

/// Malformed or invalid file. For JSON syntax errors line and column are
/// 1-based positions of the offending character.
class ParseError : public Error {
 public:
  ParseError(const std::string& what, std::size_t line = 0, std::size_t column = 0)
      : Error(what), line_(line), column_(column) {}
  std::size_t line() const { return line_; }
  std::size_t column() const { return column_; }

 private:
  std::size_t line_;
  std::size_t column_;
};

/// File contents before the weight is validated.
struct AlgebraData {
  Algebra algebra;
  std::optional<Weight> weight;
};

AlgebraData parse_algebra_raw(const std::string& text);
AlgebraData parse_algebra_raw(const nlohmann::json& doc);

/// Validated result; a weight upgrades it to a BaricAlgebra. A weight that is
/// not a homomorphism is rejected naming the failing basis pair.
std::variant<Algebra, BaricAlgebra> parse_algebra(const std::string& text);

std::string read_text_file(const std::filesystem::path& path);

nlohmann::ordered_json algebra_to_json(const Algebra& a, const Weight* w = nullptr);

std::string serialize(const Algebra& a, const Weight* w = nullptr);
std::string serialize(const BaricAlgebra& b);

}  // namespace baric
