#include "baric/search.hpp"

#include <algorithm>
#include <exception>
#include <fstream>
#include <thread>

#include "baric/algebra_file.hpp"
#include "baric/random.hpp"
#include "baric/structure.hpp"

namespace baric {

namespace {

constexpr std::uint64_t kExhaustiveSqsqLimit = 10000;

struct Chunk {
  std::vector<SearchRecord> records;
  std::uint64_t tested = 0;
  std::uint64_t sqsq = 0;
  std::uint64_t solvable = 0;
  std::uint64_t counterexamples = 0;
};

}  // namespace

Algebra random_commutative_algebra(std::uint64_t p, std::size_t dim, const mpq_class& density,
                                   std::mt19937_64& rng) {
  const FieldSpec f = FieldSpec::prime(p);
  if (density < 0 || density > 1) throw PreconditionError("density must lie in [0, 1]");
  const std::uint64_t num = density.get_num().get_ui();
  const std::uint64_t den = density.get_den().get_ui();
  Algebra a(f, dim);
  for (std::size_t i = 0; i < dim; ++i) {
    for (std::size_t j = i; j < dim; ++j) {
      Element value(f, dim);
      for (std::size_t k = 0; k < dim; ++k) {
        if (uniform_below(rng, den) < num) {
          value[k] = Scalar(f, static_cast<long long>(1 + uniform_below(rng, p - 1)));
        }
      }
      a.set_product(i, j, std::move(value));
    }
  }
  return a;
}

Algebra structured_generator(const FieldSpec& field, std::size_t dim_v) {
  if (dim_v == 0) throw PreconditionError("dim V must be at least 1");
  const std::size_t dim = dim_v + dim_v * (dim_v + 1) / 2;
  std::vector<std::string> names;
  for (std::size_t a = 0; a < dim_v; ++a) names.push_back("v" + std::to_string(a + 1));
  for (std::size_t a = 0; a < dim_v; ++a) {
    for (std::size_t b = a; b < dim_v; ++b) {
      names.push_back("s" + std::to_string(a + 1) + std::to_string(b + 1));
    }
  }
  Algebra out(field, dim, names);
  std::size_t s = dim_v;
  for (std::size_t a = 0; a < dim_v; ++a) {
    for (std::size_t b = a; b < dim_v; ++b) out.set_product(a, b, out.basis_element(s++));
  }
  return out;
}

std::size_t table_size(std::size_t dim) { return dim * dim * (dim + 1) / 2; }

Algebra table_from_index(std::uint64_t p, std::size_t dim, std::uint64_t index) {
  const FieldSpec f = FieldSpec::prime(p);
  std::vector<std::uint64_t> digits(table_size(dim));
  for (std::size_t d = digits.size(); d-- > 0;) {
    digits[d] = index % p;
    index /= p;
  }
  if (index != 0) throw PreconditionError("table index out of range");
  Algebra a(f, dim);
  std::size_t d = 0;
  for (std::size_t i = 0; i < dim; ++i) {
    for (std::size_t j = i; j < dim; ++j) {
      Element value(f, dim);
      for (std::size_t k = 0; k < dim; ++k) value[k] = Scalar(f, static_cast<long long>(digits[d++]));
      a.set_product(i, j, std::move(value));
    }
  }
  return a;
}

SearchRecord classify(std::uint64_t index, Algebra algebra) {
  SearchRecord r;
  r.index = index;
  const bool small = !algebra.field().is_rational() &&
                     space_size(algebra.field(), algebra.dim(), kExhaustiveSqsqLimit).has_value();
  r.sqsq = small ? exhaustive_check(algebra, IdentityId::sqsq_zero(), kExhaustiveSqsqLimit).pass
                 : polarized_check(algebra, IdentityId::sqsq_zero()).pass;
  const DerivedSeries series = derived_series(algebra);
  r.solvable = series.solvable;
  r.depth = series.depth;
  r.counterexample = r.sqsq && !r.solvable;
  r.algebra = std::move(algebra);
  return r;
}

std::string record_to_jsonl(const SearchRecord& r) {
  nlohmann::ordered_json j;
  j["index"] = r.index;
  j["algebra"] = algebra_to_json(r.algebra);
  j["sqsq"] = r.sqsq;
  j["solvable"] = r.solvable;
  j["depth"] = r.depth ? nlohmann::ordered_json(*r.depth) : nlohmann::ordered_json(nullptr);
  j["counterexample"] = r.counterexample;
  return j.dump();
}

ScanSummary conjecture_scan(const SearchConfig& cfg) {
  const FieldSpec f = FieldSpec::prime(cfg.p);
  if (cfg.dim == 0) throw PreconditionError("dimension must be at least 1");
  if (cfg.workers == 0) throw PreconditionError("workers must be at least 1");

  std::uint64_t count = 0;
  switch (cfg.mode) {
    case SearchMode::exhaustive: {
      auto n = space_size(f, table_size(cfg.dim), cfg.budget);
      if (!n) {
        throw BudgetExceeded("exhaustive scan of dimension " + std::to_string(cfg.dim) +
                             " over F_" + std::to_string(cfg.p) + " has " + std::to_string(cfg.p) +
                             "^" + std::to_string(table_size(cfg.dim)) +
                             " tables, over the budget of " + std::to_string(cfg.budget));
      }
      count = *n;
      break;
    }
    case SearchMode::random:
      count = cfg.samples;
      break;
    case SearchMode::structured:
      count = cfg.dim;
      break;
  }

  std::ofstream log;
  if (cfg.log_path) {
    log.open(*cfg.log_path, std::ios::binary | std::ios::trunc);
    if (!log) throw Error("cannot write log file " + *cfg.log_path);
  }

  auto make = [&](std::uint64_t index) {
    switch (cfg.mode) {
      case SearchMode::exhaustive:
        return table_from_index(cfg.p, cfg.dim, index);
      case SearchMode::random: {
        std::mt19937_64 rng = seeded_engine(cfg.seed, index);
        return random_commutative_algebra(cfg.p, cfg.dim, cfg.density, rng);
      }
      case SearchMode::structured:
        break;
    }
    return structured_generator(f, static_cast<std::size_t>(index) + 1);
  };

  auto run = [&](std::uint64_t begin, std::uint64_t end, Chunk& chunk) {
    for (std::uint64_t i = begin; i < end; ++i) {
      SearchRecord r = classify(i, make(i));
      ++chunk.tested;
      if (r.sqsq) ++chunk.sqsq;
      if (r.solvable) ++chunk.solvable;
      if (r.counterexample) ++chunk.counterexamples;
      if (r.sqsq || cfg.log_all) chunk.records.push_back(std::move(r));
    }
  };

  const std::size_t workers =
      static_cast<std::size_t>(std::min<std::uint64_t>(cfg.workers, std::max<std::uint64_t>(count, 1)));
  std::vector<Chunk> chunks(workers);
  if (workers == 1) {
    run(0, count, chunks[0]);
  } else {
    std::vector<std::exception_ptr> errors(workers);
    std::vector<std::thread> threads;
    for (std::size_t w = 0; w < workers; ++w) {
      const std::uint64_t begin = count * w / workers;
      const std::uint64_t end = count * (w + 1) / workers;
      threads.emplace_back([&, w, begin, end] {
        try {
          run(begin, end, chunks[w]);
        } catch (...) {
          errors[w] = std::current_exception();
        }
      });
    }
    for (auto& t : threads) t.join();
    for (auto& e : errors) {
      if (e) std::rethrow_exception(e);
    }
  }

  ScanSummary summary;
  for (auto& c : chunks) {
    summary.tested += c.tested;
    summary.satisfied_sqsq += c.sqsq;
    summary.solvable += c.solvable;
    summary.counterexamples += c.counterexamples;
    std::move(c.records.begin(), c.records.end(), std::back_inserter(summary.records));
  }
  std::sort(summary.records.begin(), summary.records.end(),
            [](const SearchRecord& a, const SearchRecord& b) { return a.index < b.index; });
  if (log.is_open()) {
    for (const auto& r : summary.records) log << record_to_jsonl(r) << '\n';
    if (!log) throw Error("failed writing log file " + *cfg.log_path);
  }
  return summary;
}

}  // namespace baric
