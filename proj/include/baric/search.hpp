#pragma once

// Searching small commutative algebras for (x^2)^2 = 0 without solvability.

#include <cstddef>
#include <cstdint>
#include <optional>
#include <random>
#include <string>
#include <vector>

#include <gmpxx.h>

#include "baric/algebra.hpp"
#include "baric/identities.hpp"

namespace baric {

/// Each c_ij^k (i <= j) is nonzero with probability `density`, its value
/// uniform in F_p minus 0.
Algebra random_commutative_algebra(std::uint64_t p, std::size_t dim, const mpq_class& density,
                                   std::mt19937_64& rng);

/// V + S^2(V) with v_a v_b = s_ab and every other product zero. Basis order:
/// v1..vn, then s_ab for a <= b in lexicographic order.
Algebra structured_generator(const FieldSpec& field, std::size_t dim_v);

/// Number of structure constants c_ij^k with i <= j.
std::size_t table_size(std::size_t dim);

/// Table number `index` of the exhaustive enumeration: the constants, ordered
/// by (i, j) then k, are the base-p digits of index, most significant first.
Algebra table_from_index(std::uint64_t p, std::size_t dim, std::uint64_t index);

enum class SearchMode { exhaustive, random, structured };

struct SearchConfig {
  std::uint64_t p = 5;
  std::size_t dim = 2;
  SearchMode mode = SearchMode::exhaustive;
  /// Random mode: number of algebras drawn.
  std::size_t samples = 1000;
  std::uint64_t seed = 0;
  mpq_class density{1, 2};
  std::optional<std::string> log_path;
  /// Log every tested algebra rather than only (x^2)^2 = 0 ones.
  bool log_all = false;
  std::size_t workers = 1;
  /// Exhaustive mode refuses more than this many tables.
  std::uint64_t budget = default_budget();
};

struct SearchRecord {
  std::uint64_t index = 0;
  Algebra algebra;
  bool sqsq = false;
  bool solvable = false;
  std::optional<std::size_t> depth;
  bool counterexample = false;
};

/// Decides (x^2)^2 = 0 (exhaustively when p^dim <= 10^4, else by
/// polarization) and the derived series.
SearchRecord classify(std::uint64_t index, Algebra algebra);

struct ScanSummary {
  std::uint64_t tested = 0;
  std::uint64_t satisfied_sqsq = 0;
  std::uint64_t solvable = 0;
  std::uint64_t counterexamples = 0;
  /// Logged records in index order.
  std::vector<SearchRecord> records;
};

/// One JSON Lines record.
std::string record_to_jsonl(const SearchRecord& r);

/// Random mode draws algebra i from an engine seeded by (seed, i), so results
/// do not depend on the number of workers. Structured mode scans V + S^2(V)
/// for dim V = 1..dim.
ScanSummary conjecture_scan(const SearchConfig& cfg);

}  // namespace baric
