#include "baric/cli.hpp"

#include <algorithm>
#include <fstream>
#include <functional>
#include <map>
#include <optional>

#include <CLI11.hpp>
#include <json.hpp>

#include "baric/algebra_file.hpp"
#include "baric/identities.hpp"
#include "baric/search.hpp"
#include "baric/structure.hpp"

namespace baric::cli {

namespace {

using nlohmann::ordered_json;

/// Bad flags or flag combinations detected after parsing.
class UsageError : public Error {
 public:
  using Error::Error;
};

struct Options {
  std::string file;
  std::string identity;
  std::string method = "polarize";
  std::string gamma;
  bool json = false;
  std::size_t workers = 1;
  std::uint64_t seed = 0;
  std::optional<std::size_t> samples;
  std::optional<std::uint64_t> p;
  std::size_t dim = 2;
  std::string log;
  std::string output;
  bool inverse = false;
  std::string from;
  bool exhaustive = false;
  std::string e;
  std::string peirce_case;
  std::string x;
  std::size_t max = 10;
  std::string mode = "exhaustive";
  std::string density = "1/2";
  bool all = false;
};

struct Loaded {
  Algebra algebra;
  std::optional<BaricAlgebra> baric;
};

FieldSpec reduction_target(const FieldSpec& field, const Options& o) {
  if (!o.p) return field;
  const FieldSpec target = FieldSpec::prime(*o.p);
  if (field.is_prime_field() && !(field == target)) {
    throw UsageError("--p " + std::to_string(*o.p) + " does not match the file's field " +
                     field.name());
  }
  return target;
}

Loaded load(const Options& o) {
  auto parsed = parse_algebra(read_text_file(o.file));
  if (auto* b = std::get_if<BaricAlgebra>(&parsed)) {
    BaricAlgebra reduced = b->over(reduction_target(b->field(), o));
    return {reduced.algebra(), reduced};
  }
  const Algebra& a = std::get<Algebra>(parsed);
  return {a.over(reduction_target(a.field(), o)), std::nullopt};
}

const BaricAlgebra& need_baric(const Loaded& l, const std::string& command) {
  if (!l.baric) throw UsageError(command + " needs an algebra file with a weight");
  return *l.baric;
}

std::string span_text(const Algebra& a, const Subspace& s) {
  if (s.is_zero()) return "0";
  std::string out = "span{";
  const auto basis = s.basis_vectors();
  for (std::size_t i = 0; i < basis.size(); ++i) {
    if (i) out += ", ";
    out += format_element(a, basis[i]);
  }
  return out + "}";
}

ordered_json span_json(const Algebra& a, const Subspace& s) {
  ordered_json out = ordered_json::array();
  for (const auto& v : s.basis_vectors()) out.push_back(format_element(a, v));
  return out;
}

ordered_json report_json(const Algebra& a, const IdentityReport& r) {
  ordered_json j;
  j["subject"] = r.subject;
  j["pass"] = r.pass;
  j["method"] = to_string(r.method);
  ordered_json w = ordered_json::array();
  for (const auto& v : r.witness) w.push_back(format_element(a, v));
  j["witness"] = std::move(w);
  j["multilinear_witness"] = r.multilinear_witness;
  j["residual"] = r.residual ? ordered_json(format_element(a, *r.residual)) : ordered_json(nullptr);
  j["detail"] = r.detail;
  return j;
}

void print_report(std::ostream& out, const Algebra& a, const IdentityReport& r) {
  out << (r.pass ? "PASS " : "FAIL ") << r.subject << " (" << to_string(r.method) << ")\n";
  if (r.pass) return;
  if (!r.witness.empty()) {
    out << (r.multilinear_witness ? "  multilinear witness: " : "  witness: ");
    static const char* const kNames[] = {"x", "y"};
    for (std::size_t i = 0; i < r.witness.size(); ++i) {
      if (i) out << ", ";
      if (!r.multilinear_witness && r.witness.size() <= 2) {
        out << kNames[i] << " = ";
      } else {
        out << "x" << (i + 1) << " = ";
      }
      out << format_element(a, r.witness[i]);
    }
    out << '\n';
  }
  if (r.residual) out << "  residual: " << format_element(a, *r.residual) << '\n';
  if (!r.detail.empty()) out << "  " << r.detail << '\n';
}

void emit_algebra(const Options& o, std::ostream& out, const std::string& text,
                  const std::string& summary) {
  if (o.output.empty()) {
    out << text;
    return;
  }
  std::ofstream f(o.output, std::ios::binary | std::ios::trunc);
  if (!f || !(f << text)) throw Error("cannot write " + o.output);
  out << summary << "\nwritten to " << o.output << '\n';
}

int cmd_verify(const Options& o, std::ostream& out) {
  const Loaded l = load(o);
  const IdentityId id = IdentityId::parse(o.identity);
  IdentityReport r;
  if (o.method == "polarize") {
    r = l.baric ? polarized_check(*l.baric, id) : polarized_check(l.algebra, id);
  } else if (o.method == "exhaustive") {
    r = l.baric ? exhaustive_check(*l.baric, id) : exhaustive_check(l.algebra, id);
  } else {
    throw UsageError("--method must be polarize or exhaustive");
  }
  if (o.json) {
    out << report_json(l.algebra, r).dump(2) << '\n';
  } else {
    print_report(out, l.algebra, r);
  }
  return r.pass ? kExitPass : kExitFail;
}

int cmd_gametize(const Options& o, std::ostream& out) {
  const Loaded l = load(o);
  const BaricAlgebra& b = need_baric(l, "gametize");
  const Scalar gamma = Scalar::parse(b.field(), o.gamma);
  emit_algebra(o, out, serialize(gametize(b, gamma)), "gametized with gamma = " + gamma.to_string());
  return kExitPass;
}

int cmd_unitize(const Options& o, std::ostream& out) {
  const Loaded l = load(o);
  const Algebra u = l.algebra.unitize();
  emit_algebra(o, out, serialize(u), "unitization of dimension " + std::to_string(u.dim()));
  return kExitPass;
}

int cmd_jordanize(const Options& o, std::ostream& out) {
  const Loaded l = load(o);
  const Algebra j = jordanize(need_baric(l, "jordanize"));
  emit_algebra(o, out, serialize(j), "J(A) of dimension " + std::to_string(j.dim()));
  return kExitPass;
}

int cmd_star(const Options& o, std::ostream& out) {
  if (o.inverse) {
    // The input is a star algebra whose weight is not a homomorphism of it.
    AlgebraData data = parse_algebra_raw(read_text_file(o.file));
    if (!data.weight) throw UsageError("star --inverse needs a weight in the file");
    const FieldSpec f = reduction_target(data.algebra.field(), o);
    const BaricAlgebra b = star_inverse(data.algebra.over(f), data.weight->over(f));
    emit_algebra(o, out, serialize(b), "recovered baric algebra");
    return kExitPass;
  }
  const Loaded l = load(o);
  const BaricAlgebra& b = need_baric(l, "star");
  const StarTransform st = star_transform(b);
  // The weight is kept so that star --inverse can undo the transform.
  emit_algebra(o, out, serialize(st.algebra, &b.weight()),
               "A*2 = " + span_text(st.algebra, st.square));
  return kExitPass;
}

IdentityKind formula_kind(const std::string& text) {
  if (text.empty()) return IdentityKind::omega;
  const IdentityKind k = IdentityId::parse(text).kind();
  if (k != IdentityKind::omega && k != IdentityKind::omega3 && k != IdentityKind::omegas) {
    throw UsageError("--identity must be omega, omega3 or omegas for idempotent --from");
  }
  return k;
}

int cmd_idempotent(const Options& o, std::ostream& out) {
  if (o.from.empty() == !o.exhaustive) throw UsageError("give exactly one of --from and --exhaustive");
  const Loaded l = load(o);
  const Algebra& a = l.algebra;
  if (!o.from.empty()) {
    const BaricAlgebra& b = need_baric(l, "idempotent --from");
    const Element x = parse_element(a, o.from);
    const Element e = idempotent_from_formula(b, x, formula_kind(o.identity));
    const bool ok = is_idempotent(a, e);
    if (o.json) {
      ordered_json j;
      j["x"] = format_element(a, x);
      j["e"] = format_element(a, e);
      j["idempotent"] = ok;
      j["weight"] = b.weight()(e).to_string();
      out << j.dump(2) << '\n';
    } else {
      out << "e = " << format_element(a, e) << '\n'
          << "w(e) = " << b.weight()(e).to_string() << '\n'
          << "idempotent: " << (ok ? "yes" : "no") << '\n';
    }
    return ok ? kExitPass : kExitFail;
  }
  const IdempotentScan scan = idempotents_exhaustive(a, l.baric ? &l.baric->weight() : nullptr);
  if (o.json) {
    ordered_json j;
    ordered_json list = ordered_json::array();
    for (const auto& e : scan.idempotents) list.push_back(format_element(a, e));
    j["count"] = scan.idempotents.size();
    j["idempotents"] = std::move(list);
    if (l.baric) j["all_unit_weight"] = scan.all_unit_weight;
    out << j.dump(2) << '\n';
  } else {
    out << scan.idempotents.size() << " nonzero idempotent(s) over " << a.field().name() << '\n';
    for (const auto& e : scan.idempotents) out << "  " << format_element(a, e) << '\n';
    if (l.baric) out << "all of weight 1: " << (scan.all_unit_weight ? "yes" : "no") << '\n';
  }
  return kExitPass;
}

int cmd_peirce(const Options& o, std::ostream& out) {
  const Loaded l = load(o);
  const BaricAlgebra& b = need_baric(l, "peirce");
  const Algebra& a = l.algebra;
  const PeirceDecomposition dec = peirce_decompose(b, parse_element(a, o.e));
  std::optional<IdentityReport> rules;
  if (!o.peirce_case.empty()) {
    static const std::map<std::string, PeirceCase> kCases = {
        {"omega", PeirceCase::omega}, {"omega3", PeirceCase::omega3}, {"omegas", PeirceCase::omegas}};
    auto it = kCases.find(o.peirce_case);
    if (it == kCases.end()) throw UsageError("--case must be omega, omega3 or omegas");
    rules = peirce_verify_rules(b, dec, it->second);
  }
  if (o.json) {
    ordered_json j;
    j["e"] = format_element(a, dec.e);
    j["kernel"] = span_json(a, dec.kernel);
    ordered_json parts = ordered_json::array();
    for (const auto& p : dec.parts) {
      parts.push_back({{"eigenvalue", p.eigenvalue.to_string()}, {"basis", span_json(a, p.space)}});
    }
    j["parts"] = std::move(parts);
    j["residual_dim"] = dec.residual_dim;
    if (rules) j["rules"] = report_json(a, *rules);
    out << j.dump(2) << '\n';
  } else {
    out << "e = " << format_element(a, dec.e) << '\n'
        << "N = ker w, dim " << dec.kernel.dim() << '\n';
    for (const auto& p : dec.parts) {
      out << "N(" << p.eigenvalue.to_string() << ") = " << span_text(a, p.space) << " (dim "
          << p.space.dim() << ")\n";
    }
    out << "residual dim " << dec.residual_dim << '\n';
    if (rules) print_report(out, a, *rules);
  }
  return rules && !rules->pass ? kExitFail : kExitPass;
}

int cmd_solvable(const Options& o, std::ostream& out) {
  const Loaded l = load(o);
  const Algebra& a = l.algebra;
  const DerivedSeries ds = derived_series(a);
  if (o.json) {
    ordered_json j;
    ordered_json terms = ordered_json::array();
    for (const auto& t : ds.terms) terms.push_back(span_json(a, t));
    j["terms"] = std::move(terms);
    j["solvable"] = ds.solvable;
    j["depth"] = ds.depth ? ordered_json(*ds.depth) : ordered_json(nullptr);
    out << j.dump(2) << '\n';
  } else {
    for (std::size_t k = 0; k < ds.terms.size(); ++k) {
      out << "A(" << k + 1 << ") = "
          << (k == 0 ? "A" : span_text(a, ds.terms[k])) << " (dim " << ds.terms[k].dim() << ")\n";
    }
    if (ds.solvable) {
      out << "solvable, depth " << *ds.depth << '\n';
    } else {
      out << "not solvable: the series stabilizes at a nonzero term\n";
    }
  }
  return ds.solvable ? kExitPass : kExitFail;
}

int cmd_powers(const Options& o, std::ostream& out) {
  const Loaded l = load(o);
  const Algebra& a = l.algebra;
  const NilReport r = nil_element_check(a, parse_element(a, o.x), o.max);
  const char* status = r.status == NilStatus::nil       ? "nil"
                       : r.status == NilStatus::not_nil ? "not nil"
                                                        : "inconclusive";
  if (o.json) {
    ordered_json j;
    ordered_json powers = ordered_json::array();
    for (const auto& p : r.powers) powers.push_back(format_element(a, p));
    j["powers"] = std::move(powers);
    j["status"] = status;
    j["zero_exponent"] = r.zero_exponent ? ordered_json(*r.zero_exponent) : ordered_json(nullptr);
    j["first_exponent"] = r.first_exponent ? ordered_json(*r.first_exponent) : ordered_json(nullptr);
    j["repeat_exponent"] = r.repeat_exponent ? ordered_json(*r.repeat_exponent) : ordered_json(nullptr);
    j["stabilized_value"] =
        r.stabilized_value ? ordered_json(format_element(a, *r.stabilized_value)) : ordered_json(nullptr);
    out << j.dump(2) << '\n';
  } else {
    for (std::size_t k = 0; k < r.powers.size(); ++k) {
      out << "x^" << k + 1 << " = " << format_element(a, r.powers[k]) << '\n';
    }
    out << status;
    if (r.zero_exponent) out << ": x^" << *r.zero_exponent << " = 0";
    if (r.repeat_exponent) {
      out << ": x^" << *r.first_exponent << " = x^" << *r.repeat_exponent << " = "
          << format_element(a, *r.stabilized_value);
    }
    out << '\n';
  }
  return kExitPass;
}

int cmd_remark(const Options& o, std::ostream& out) {
  const Loaded l = load(o);
  const IdentityReport r = remark_check(l.algebra, o.samples.value_or(50), o.seed);
  if (o.json) {
    out << report_json(l.algebra, r).dump(2) << '\n';
  } else {
    print_report(out, l.algebra, r);
  }
  return r.pass ? kExitPass : kExitFail;
}

int cmd_scan(const Options& o, std::ostream& out) {
  SearchConfig cfg;
  cfg.p = o.p.value_or(5);
  cfg.dim = o.dim;
  if (o.mode == "exhaustive") {
    cfg.mode = SearchMode::exhaustive;
  } else if (o.mode == "random") {
    cfg.mode = SearchMode::random;
  } else if (o.mode == "structured") {
    cfg.mode = SearchMode::structured;
  } else {
    throw UsageError("--mode must be exhaustive, random or structured");
  }
  if (o.samples) cfg.samples = *o.samples;
  cfg.seed = o.seed;
  cfg.density = Scalar::parse(FieldSpec::rationals(), o.density).rational();
  if (!o.log.empty()) cfg.log_path = o.log;
  cfg.log_all = o.all;
  cfg.workers = o.workers;
  const ScanSummary s = conjecture_scan(cfg);
  if (o.json) {
    ordered_json j;
    j["mode"] = o.mode;
    j["p"] = cfg.p;
    j["dim"] = cfg.dim;
    j["tested"] = s.tested;
    j["satisfied_sqsq"] = s.satisfied_sqsq;
    j["solvable"] = s.solvable;
    j["counterexamples"] = s.counterexamples;
    out << j.dump(2) << '\n';
  } else {
    out << "mode " << o.mode << ", F_" << cfg.p << ", dim " << cfg.dim << '\n'
        << "tested " << s.tested << " structure-constant tables (not isomorphism classes)\n"
        << "satisfying (x^2)^2 = 0: " << s.satisfied_sqsq << '\n'
        << "solvable: " << s.solvable << '\n'
        << "counterexamples: " << s.counterexamples << '\n';
    if (s.counterexamples > 0) {
      out << "COUNTEREXAMPLE FOUND: (x^2)^2 = 0 holds but the algebra is not solvable\n";
      for (const auto& r : s.records) {
        if (r.counterexample) out << record_to_jsonl(r) << '\n';
      }
    }
  }
  return s.counterexamples > 0 ? kExitFail : kExitPass;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  Options o;
  CLI::App app{"Exact computations in baric algebras", "baric"};
  app.require_subcommand(1);

  auto file = [&](CLI::App* s) { s->add_option("file", o.file, "algebra file (JSON)")->required(); };
  auto common = [&](CLI::App* s) {
    s->add_flag("--json", o.json, "machine-readable report");
    s->add_option("--p", o.p, "reduce a rational file modulo this prime");
  };
  auto output = [&](CLI::App* s) { s->add_option("-o", o.output, "write the algebra here"); };

  std::map<std::string, std::function<int(const Options&, std::ostream&)>> handlers;
  auto sub = [&](const std::string& name, const std::string& help, auto handler) {
    CLI::App* s = app.add_subcommand(name, help);
    handlers[name] = handler;
    return s;
  };

  CLI::App* s = sub("verify", "check an identity", cmd_verify);
  file(s);
  common(s);
  s->add_option("--identity", o.identity,
                "omega3|omega|omegas|omega2s|sqsq|jordan|general:a,b,g")
      ->required();
  s->add_option("--method", o.method, "polarize|exhaustive");

  s = sub("gametize", "gamma-gametization", cmd_gametize);
  file(s);
  common(s);
  output(s);
  s->add_option("--gamma", o.gamma, "scalar, not 1")->required();

  s = sub("unitize", "adjoin a unit at coordinate 0", cmd_unitize);
  file(s);
  common(s);
  output(s);

  s = sub("jordanize", "J(A) = F1 + A", cmd_jordanize);
  file(s);
  common(s);
  output(s);

  s = sub("star", "star transform, or its inverse", cmd_star);
  file(s);
  common(s);
  output(s);
  s->add_flag("--inverse", o.inverse, "recover the baric algebra from a star algebra");

  s = sub("idempotent", "idempotent from the cubic formula, or all idempotents", cmd_idempotent);
  file(s);
  common(s);
  s->add_option("--from", o.from, "element x with w(x) = 1");
  s->add_option("--identity", o.identity, "omega|omega3|omegas (default omega)");
  s->add_flag("--exhaustive", o.exhaustive, "enumerate F_p^n");

  s = sub("peirce", "Peirce decomposition relative to an idempotent", cmd_peirce);
  file(s);
  common(s);
  s->add_option("--e", o.e, "idempotent with w(e) = 1")->required();
  s->add_option("--case", o.peirce_case, "omega|omega3|omegas: verify the multiplication rules");

  s = sub("solvable", "derived series", cmd_solvable);
  file(s);
  common(s);

  s = sub("powers", "principal powers and nil check", cmd_powers);
  file(s);
  common(s);
  s->add_option("--x", o.x, "element")->required();
  s->add_option("--max", o.max, "highest power (>= 2)");

  s = sub("remark", "sampled check of <x>^2 for (x^2)^2 = 0 algebras", cmd_remark);
  file(s);
  common(s);
  s->add_option("--samples", o.samples, "number of samples (default 50)");
  s->add_option("--seed", o.seed, "random seed");

  s = sub("scan", "search for non-solvable (x^2)^2 = 0 algebras", cmd_scan);
  s->add_flag("--json", o.json, "machine-readable summary");
  s->add_option("--p", o.p, "prime (default 5)");
  s->add_option("--dim", o.dim, "dimension (default 2)");
  s->add_option("--mode", o.mode, "exhaustive|random|structured");
  s->add_option("--samples", o.samples, "random mode sample count");
  s->add_option("--seed", o.seed, "random seed");
  s->add_option("--density", o.density, "fraction of nonzero constants (random mode)");
  s->add_option("--workers", o.workers, "worker threads");
  s->add_option("--log", o.log, "JSON Lines log path");
  s->add_flag("--all", o.all, "log every algebra, not only (x^2)^2 = 0 ones");

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kExitPass : kExitUsage;
  }

  const std::string name = app.get_subcommands().front()->get_name();
  try {
    return handlers.at(name)(o, out);
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return kExitUsage;
  }
}

}  // namespace baric::cli
