// arithtrace: command-line front end to the library.

#include <cstdlib>
#include <fstream>
#include <functional>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "arithtrace/acceptance.hpp"
#include "arithtrace/arithtrace.hpp"
#include "arithtrace/json_io.hpp"
#include "report.hpp"

namespace at = arithtrace;
using at::cli::ojson;
using at::io::json;

namespace {

int exit_code_for(at::ErrorCode c) {
  switch (c) {
    case at::ErrorCode::UnsupportedPrime: return 3;
    case at::ErrorCode::ReducibleRepresentation:
    case at::ErrorCode::NotZariskiDense: return 4;
    case at::ErrorCode::EnumerationOverflow: return 5;
    default: return 2;
  }
}

std::string one_line(std::string s) {
  for (auto& ch : s)
    if (ch == '\n' || ch == '\r') ch = ' ';
  return s;
}

int report_error(const std::string& code, int exit_code, const std::string& reason, bool as_json) {
  if (as_json) {
    ojson e;
    e["error"] = {{"code", code}, {"exit", exit_code}, {"reason", one_line(reason)}};
    std::cerr << e.dump() << "\n";
  } else {
    std::cerr << "error: code=" << code << " exit=" << exit_code << " reason=" << one_line(reason) << "\n";
  }
  return exit_code;
}

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) at::fail(at::ErrorCode::InvalidInput, "cannot read " + path);
  std::ostringstream os;
  os << in.rdbuf();
  return os.str();
}

json parse_json(const std::string& text, const std::string& what) {
  try {
    return json::parse(text);
  } catch (const json::exception& e) {
    at::fail(at::ErrorCode::InvalidInput, what + " is not valid JSON: " + e.what());
  }
}

/// Comma-separated integer coefficients, constant term first.
at::NumberField parse_field(const std::string& s) {
  std::string t = s;
  if (t.empty() || t.front() != '[') t = "[" + t + "]";
  return at::io::field_from_json(parse_json(t, "field"));
}

/// A rational, or a bracketed coordinate list in the field's power basis.
at::AlgebraicNumber parse_element(const std::string& s, const at::NumberField& K) {
  if (!s.empty() && s.front() == '[') return at::io::algebraic_from_json(parse_json(s, "element"), K);
  return K.from_rational(at::parse_rational(s));
}

std::string field_name(const at::NumberField& K) { return K.is_rational_field() ? "Q" : K.min_poly().to_string(); }

std::string interval_text(const at::RationalInterval& iv) {
  return "[" + at::to_string(iv.lo) + ", " + at::to_string(iv.hi) + "]";
}

std::string prime_label(const at::PrimeData& P) {
  if (P.field().degree() == 1) return P.p.get_str();
  return P.p.get_str() + ":" + P.factor.lift().to_string();
}

ojson ramification_json(const at::RamificationSet& r, const at::NumberField& K) {
  ojson out;
  out["real"] = ojson::array();
  for (const auto& rp : r.real_places)
    out["real"].push_back(K.is_rational_field() ? ojson("inf") : ojson{{"index", rp.index()}, {"interval", interval_text(rp.interval())}});
  out["finite"] = ojson::array();
  for (const auto& P : r.finite_places) out["finite"].push_back({{"p", P.p.get_str()}, {"factor", P.factor.lift().to_string()}});
  return out;
}

std::vector<std::string> ramified_labels(const at::RamificationSet& r, const at::NumberField& K) {
  std::vector<std::string> out;
  for (const auto& P : r.finite_places) out.push_back(prime_label(P));
  for (const auto& rp : r.real_places) out.push_back(K.is_rational_field() ? "inf" : "real#" + std::to_string(rp.index()));
  return out;
}

ojson symbol_json(const at::QuaternionAlgebraResult& q) {
  return {{"field", field_name(q.algebra.field())},
          {"a", q.algebra.a().to_string()},
          {"b", q.algebra.b().to_string()},
          {"g", at::word_to_string(q.g)},
          {"h", at::word_to_string(q.h)},
          {"verified", q.verified}};
}

std::vector<at::Integer> parse_prime_list(const std::string& s) {
  std::vector<at::Integer> out;
  std::stringstream ss(s);
  std::string item;
  while (std::getline(ss, item, ',')) {
    if (item.empty()) continue;
    at::Integer p = at::parse_rational(item).get_num();
    if (!at::is_prime(p)) at::fail(at::ErrorCode::InvalidInput, item + " is not prime");
    out.push_back(p);
  }
  return out;
}

/// Path text such as "a.c'.b" or "e0.e3'": edge names joined by dots, ' for reversed steps.
at::CombPath parse_path(const at::Digraph& g, const std::string& text) {
  std::vector<at::Step> steps;
  std::stringstream ss(text);
  std::string tok;
  while (std::getline(ss, tok, '.')) {
    if (tok.empty()) continue;
    bool rev = tok.back() == '\'';
    if (rev) tok.pop_back();
    int id = -1;
    for (int e = 0; e < g.edge_count(); ++e)
      if (g.edge_name(e) == tok) id = e;
    if (id < 0) at::fail(at::ErrorCode::InvalidInput, "unknown edge " + tok);
    steps.push_back({id, rev});
  }
  return at::CombPath(g, std::move(steps));
}

int default_precision() {
  if (const char* env = std::getenv("ARITHTRACE_PRECISION")) {
    try {
      int v = std::stoi(env);
      if (v >= 1) return v;
    } catch (const std::exception&) {
    }
    at::fail(at::ErrorCode::InvalidInput, std::string("ARITHTRACE_PRECISION is not a positive integer: ") + env);
  }
  return at::kDefaultPadicPrecision;
}

ojson laurent_json(const at::IntLaurentPoly& f) { return ojson(at::io::laurent_to_json(f)); }

// -- commands ---------------------------------------------------------------

struct HilbertArgs {
  std::string a, b, field;
};

void cmd_hilbert(const HilbertArgs& args, at::cli::Report& rep) {
  at::NumberField K = args.field.empty() ? at::NumberField() : parse_field(args.field);
  at::HilbertSymbolAlgebra alg(parse_element(args.a, K), parse_element(args.b, K));
  auto& r = rep.results;
  r["field"] = field_name(K);
  r["a"] = alg.a().to_string();
  r["b"] = alg.b().to_string();
  r["local_symbols"] = ojson::array();
  for (const auto& s : at::local_symbols(alg)) {
    ojson e;
    e["place"] = s.kind == at::LocalSymbol::Kind::Real && K.is_rational_field() ? std::string("inf") : s.label();
    e["symbol"] = s.symbol;
    if (s.from_product_formula) e["from_product_formula"] = true;
    r["local_symbols"].push_back(e);
  }
  auto ram = at::ramification_set(alg);
  r["ramified"] = ramified_labels(ram, K);
  r["ramification"] = ramification_json(ram, K);
  r["split_everywhere"] = ram.empty();
  r["parity_even"] = ram.size() % 2 == 0;
}

struct RepArgs {
  std::string file;
  std::string primes = "2,3,5,7";
  std::vector<std::string> only;
};

void cmd_rep(const RepArgs& args, at::cli::Report& rep) {
  std::string text = read_file(args.file);
  rep.inputs.push_back(text);
  json doc = parse_json(text, args.file);
  at::GroupRep g = at::io::rep_from_json(doc);
  auto primes = parse_prime_list(args.primes);
  const std::vector<std::string> sections{"flags", "trace-field", "invariant-trace-field", "symbol", "invariant-symbol", "boundedness"};
  for (const auto& s : args.only)
    if (std::find(sections.begin(), sections.end(), s) == sections.end())
      at::fail(at::ErrorCode::InvalidInput, "unknown report section " + s);
  bool explicit_request = !args.only.empty();
  auto wanted = [&](const std::string& s) {
    return !explicit_request || std::find(args.only.begin(), args.only.end(), s) != args.only.end();
  };
  auto& r = rep.results;
  r["field"] = field_name(g.field());
  r["rank"] = g.rank();
  // In a full report an unavailable invariant is recorded; when it was asked
  // for by name the error decides the exit code.
  auto section = [&](const std::string& key, const std::string& name, const std::function<ojson()>& fn) {
    if (!wanted(name)) return;
    try {
      r[key] = fn();
    } catch (const at::Error& e) {
      if (explicit_request) throw;
      r[key] = {{"unavailable", one_line(e.what())}};
    }
  };
  section("flags", "flags", [&] {
    auto irr = at::is_irreducible_rep(g);
    auto z = at::is_zariski_dense(g);
    ojson f;
    f["irreducible"] = irr.irreducible;
    f["zariski_dense"] = at::verdict_name(z.verdict);
    f["zariski_certificate"] = z.certificate;
    return f;
  });
  section("trace_field_min_poly", "trace-field", [&] { return ojson(at::trace_field(g).field().min_poly().to_string()); });
  section("invariant_trace_field_min_poly", "invariant-trace-field",
          [&] { return ojson(at::invariant_trace_field(g).field().min_poly().to_string()); });
  section("symbol", "symbol", [&] {
    auto q = at::quaternion_algebra_of_rep(g);
    ojson s = symbol_json(q);
    s["ramification"] = ramification_json(at::ramification_set(q.algebra), q.algebra.field());
    return s;
  });
  section("invariant_symbol", "invariant-symbol", [&] {
    auto q = at::invariant_quaternion_algebra(g);
    ojson s = symbol_json(q);
    s["ramification"] = ramification_json(at::ramification_set(q.algebra), q.algebra.field());
    return s;
  });
  section("boundedness", "boundedness", [&] {
    ojson b = ojson::object();
    for (const auto& p : primes)
      for (const auto& P : at::primes_above(g.field(), p, at::PrimeSearch::AlternativeModels))
        b[prime_label(P)] = at::is_bounded_at_prime(g, P);
    return b;
  });
  if (!g.relators().empty())
    r["note"] = "relators supplied; invariant data use the subgroup of the free group generated by squares";
}

struct DynamicsArgs {
  std::string graph, group, labels, weights, rewrite;
  int max_len = 4;
  std::optional<int> mod;
  std::size_t limit = at::kDefaultCycleLimit;
};

void cmd_dynamics(const DynamicsArgs& args, at::cli::Report& rep) {
  std::string gtext = read_file(args.graph);
  rep.inputs.push_back(gtext);
  at::Digraph g = at::io::graph_from_json(parse_json(gtext, args.graph));
  if (args.max_len < 1) at::fail(at::ErrorCode::InvalidInput, "--max-len must be at least 1");
  auto& r = rep.results;
  r["graph"] = {{"vertices", g.vertex_count()}, {"edges", g.edge_count()}, {"irreducible", at::is_irreducible(g)}};
  auto cycles = at::enumerate_dynamical_cycles(g, args.max_len, false, args.limit);
  std::vector<long> counts(static_cast<std::size_t>(args.max_len), 0);
  for (const auto& c : cycles) ++counts[c.length() - 1];
  r["cycle_counts"] = counts;
  std::vector<std::string> walks;
  for (int m = 1; m <= args.max_len; ++m) walks.push_back(at::closed_walk_count(g, m).get_str());
  r["closed_walks"] = walks;
  auto span = at::cycle_span_rank(g, args.max_len);
  r["span"] = {{"rank", span.rank}, {"betti", span.betti}, {"index", span.index ? ojson(span.index->get_str()) : ojson(nullptr)}};

  if (!args.group.empty() || !args.labels.empty()) {
    if (args.group.empty() || args.labels.empty()) at::fail(at::ErrorCode::InvalidInput, "--group and --labels go together");
    std::string gt = read_file(args.group), lt = read_file(args.labels);
    rep.inputs.push_back(gt);
    rep.inputs.push_back(lt);
    auto G = at::io::group_from_json(parse_json(gt, args.group));
    auto labels = at::io::labels_from_json(parse_json(lt, args.labels));
    std::map<at::DynamicalCycle, at::Integer> weights;
    if (!args.weights.empty()) {
      std::string wt = read_file(args.weights);
      rep.inputs.push_back(wt);
      weights = at::io::weights_from_json(parse_json(wt, args.weights), g);
    }
    int m = args.mod.value_or(args.max_len);
    auto census = at::orbit_class_census(g, labels, G, m, weights, 0, args.limit);
    ojson cs = ojson::array();
    for (const auto& [cls, n] : census) cs.push_back({{"class", cls}, {"count", n.get_str()}});
    r["census"] = {{"m", m}, {"classes", cs}};
  } else if (!args.weights.empty()) {
    at::fail(at::ErrorCode::InvalidInput, "--weights needs --group and --labels");
  }

  if (!args.rewrite.empty()) {
    at::CombPath path = parse_path(g, args.rewrite);
    auto nf = at::rewrite_to_dynamical_form(g, path);
    at::CyclePolynomial poly = at::detail::reduce_normal_form(g, nf.segments, nf.cycles);
    r["rewrite"] = {{"path", path.to_string(g)}, {"normal_form", nf.to_string(g)}, {"trace_polynomial", poly.to_string(g)}};
  }
}

struct AlexanderArgs {
  std::string matrix, file;
};

void cmd_alexander(const AlexanderArgs& args, at::cli::Report& rep) {
  if (args.matrix.empty() == args.file.empty()) at::fail(at::ErrorCode::InvalidInput, "give exactly one of --matrix and --file");
  json doc;
  if (!args.file.empty()) {
    std::string t = read_file(args.file);
    rep.inputs.push_back(t);
    doc = parse_json(t, args.file);
    if (doc.is_object()) doc = doc.at("matrix");
  } else {
    doc = parse_json(args.matrix, "--matrix");
  }
  auto m = at::io::integer_matrix_from_json(doc);
  for (const auto& row : m)
    if (row.size() != m.size()) at::fail(at::ErrorCode::SizeMismatch, "monodromy matrix must be square");
  auto raw = at::IntLaurentPoly::from_poly(at::to_zpoly(at::charpoly(m)));
  auto delta = at::alexander_from_monodromy(m);
  auto& r = rep.results;
  r["raw"] = raw.to_string();
  r["delta"] = delta.to_string();
  r["delta_coeffs"] = laurent_json(delta);
  try {
    r["monic_reciprocal"] = at::normalize_monic_reciprocal(delta).to_string();
  } catch (const at::Error& e) {
    r["monic_reciprocal"] = {{"unavailable", one_line(e.what())}};
  }
  auto tau = at::reidemeister_torsion(delta);
  r["torsion"] = {{"value", tau.to_string()}, {"numerator", laurent_json(tau.numerator)}, {"denominator", laurent_json(tau.denominator)}};
  bool monic = true;
  try {
    at::normalize_monic(delta);
  } catch (const at::Error&) {
    monic = false;
  }
  if (monic) {
    r["cyclotomic"] = at::is_cyclotomic_product(delta);
    auto off = at::has_root_off_unit_circle(delta);
    r["off_circle"] = off.off_circle;
    if (off.modulus_lower_bound) {
      std::ostringstream os;
      os.precision(6);
      os << std::fixed << *off.modulus_lower_bound;
      r["off_circle_bound"] = os.str();
    }
  } else {
    r["cyclotomic"] = false;
    r["off_circle"] = {{"unavailable", "leading coefficient is not a unit"}};
  }
}

struct BorelArgs {
  std::string matrices, file, field;
  std::optional<int> m;
};

void cmd_borel(const BorelArgs& args, at::cli::Report& rep) {
  if (args.matrices.empty() == args.file.empty()) at::fail(at::ErrorCode::InvalidInput, "give exactly one of --matrices and --file");
  json doc;
  if (!args.file.empty()) {
    std::string t = read_file(args.file);
    rep.inputs.push_back(t);
    doc = parse_json(t, args.file);
    if (doc.is_object()) doc = doc.at("matrices");
  } else {
    doc = parse_json(args.matrices, "--matrices");
  }
  if (!doc.is_array() || doc.empty()) at::fail(at::ErrorCode::InvalidInput, "expected a nonempty list of matrices");
  at::NumberField K = args.field.empty() ? at::NumberField() : parse_field(args.field);
  std::vector<at::Matrix<at::AlgebraicNumber>> xs;
  for (const auto& j : doc) xs.push_back(at::io::matrix_from_json(j, K));
  int m = args.m.value_or(static_cast<int>((xs.size() + 1) / 2));
  auto v = at::primitive_form_eval(xs, m);
  auto& r = rep.results;
  r["field"] = field_name(K);
  r["m"] = m;
  r["permutations"] = at::primitive_form_terms(m).get_str();
  r["value"] = at::io::algebraic_to_json(v);
}

struct PadicArgs {
  std::string base, exponent;
  long prime = 0;
  std::optional<int> precision;
};

void cmd_padic(const PadicArgs& args, at::cli::Report& rep) {
  at::Integer p(args.prime);
  int N = args.precision.value_or(default_precision());
  auto base = at::PadicApprox::from_rational(p, N, at::parse_rational(args.base));
  auto expo = at::PadicApprox::from_rational(p, N, at::parse_rational(args.exponent));
  auto v = at::padic_binomial_pow(base, expo);
  auto& r = rep.results;
  r["prime"] = p.get_str();
  r["precision"] = N;
  r["base"] = base.to_string();
  r["exponent"] = expo.to_string();
  r["value"] = v.to_string();
}

struct SelftestArgs {
  std::uint64_t seed = at::suites::kDefaultSeed;
  std::string filter;
  std::string inject;
};

/// Runs the suites; the report stays deterministic, timings go to stderr.
int cmd_selftest(const SelftestArgs& args, at::cli::Report& rep) {
  at::CyclotomicTable table;
  if (args.inject == "phi5") {
    // t^4 + t^3 + t^2 + t + 2 in place of Phi_5
    table.override_entry(5, at::ZPoly{at::Integer(2), at::Integer(1), at::Integer(1), at::Integer(1), at::Integer(1)});
  } else if (!args.inject.empty()) {
    at::fail(at::ErrorCode::InvalidInput, "unknown fault " + args.inject);
  }
  auto& r = rep.results;
  r["seed"] = std::to_string(args.seed);
  r["filter"] = args.filter;
  if (!args.inject.empty()) r["fault"] = args.inject;
  r["suites"] = ojson::array();
  int failed = 0, run = 0;
  double total = 0;
  for (const auto& s : at::suites::all_suites()) {
    if (!s.matches(args.filter)) continue;
    auto res = at::suites::run_suite(s, args.seed, &table);
    ++run;
    total += res.seconds;
    if (!res.passed) ++failed;
    r["suites"].push_back({{"id", res.id}, {"name", res.name}, {"status", res.passed ? "pass" : "fail"}, {"detail", res.detail}});
    std::ostringstream t;
    t.precision(3);
    t << std::fixed << "suite " << res.id << " " << res.name << ": " << res.seconds << " s (limit " << res.limit_seconds << " s)";
    std::cerr << t.str() << "\n";
  }
  if (total > at::suites::kTotalLimitSeconds) {
    r["total_time_exceeded"] = true;
    ++failed;
  }
  r["run"] = run;
  r["failed"] = failed;
  return failed ? 1 : 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact trace fields, quaternion algebras, symbolic dynamics and torsion polynomials"};
  app.set_version_flag("--version", at::cli::kVersion);
  app.require_subcommand(1);
  std::string format = "text";
  app.add_option("--format", format, "Report format")->check(CLI::IsMember({"text", "json"}));

  HilbertArgs hil;
  auto* h = app.add_subcommand("hilbert", "Hilbert symbol (a, b / F): local symbols and ramification");
  h->add_option("a", hil.a, "First entry: rational, or [c0, c1, ...] in the field's power basis")->required();
  h->add_option("b", hil.b, "Second entry")->required();
  h->add_option("--field", hil.field, "Monic minimal polynomial coefficients, constant term first (default Q)");

  RepArgs repa;
  auto* rp = app.add_subcommand("rep", "Invariants of an SL(2) representation read from a JSON file");
  rp->add_option("file", repa.file, "Representation file")->required();
  rp->add_option("--primes", repa.primes, "Rational primes for the boundedness report");
  rp->add_option("--only", repa.only, "Report only these sections: flags, trace-field, invariant-trace-field, symbol, invariant-symbol, boundedness")
      ->delimiter(',');

  DynamicsArgs dyn;
  auto* dy = app.add_subcommand("dynamics", "Cycles, spans and class censuses of a transition graph");
  dy->add_option("graph", dyn.graph, "Graph file")->required();
  dy->add_option("--max-len", dyn.max_len, "Longest cycle length enumerated");
  dy->add_option("--group", dyn.group, "Group table file");
  dy->add_option("--labels", dyn.labels, "Edge labels file (group element indices)");
  dy->add_option("--weights", dyn.weights, "Cycle weights file");
  dy->add_option("--mod", dyn.mod, "Cycle length m of the census (default --max-len)");
  dy->add_option("--limit", dyn.limit, "Cap on enumerated cycles");
  dy->add_option("--rewrite", dyn.rewrite, "Closed path to rewrite, e.g. \"a.c'.b\"");

  AlexanderArgs alx;
  auto* al = app.add_subcommand("alexander", "Alexander polynomial and torsion of a monodromy matrix");
  al->add_option("--matrix", alx.matrix, "Integer matrix as JSON, e.g. [[2,1],[1,1]]");
  al->add_option("--file", alx.file, "File with a matrix or {\"matrix\": ...}");

  BorelArgs bor;
  auto* bo = app.add_subcommand("borel", "Evaluate the primitive alternating form p_m");
  bo->add_option("--matrices", bor.matrices, "JSON list of 2m - 1 square matrices");
  bo->add_option("--file", bor.file, "File with the list or {\"matrices\": ...}");
  bo->add_option("--m", bor.m, "Degree m (default from the number of matrices)");
  bo->add_option("--field", bor.field, "Coefficient field polynomial, constant term first");

  PadicArgs pad;
  auto* pa = app.add_subcommand("padic", "lambda^a in Z_p for a principal unit lambda");
  pa->add_option("base", pad.base, "Base lambda, a p-integral rational")->required();
  pa->add_option("exponent", pad.exponent, "Exponent a, a p-integral rational")->required();
  pa->add_option("--prime", pad.prime, "The prime p")->required();
  pa->add_option("--precision", pad.precision, "Digits N (default ARITHTRACE_PRECISION or 16)");

  SelftestArgs st;
  auto* se = app.add_subcommand("selftest", "Run the acceptance suites");
  se->add_option("--seed", st.seed, "Seed for the randomized suites");
  se->add_option("--filter", st.filter, "Run only suites whose name or tag contains this text");
  se->add_option("--inject-fault", st.inject, "Corrupt a table before running (phi5)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::Success& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    return report_error("InvalidInput", 2, e.what(), format == "json");
  }

  bool as_json = format == "json";
  at::cli::Report rep;
  for (int i = 1; i < argc; ++i) {
    if (i > 1) rep.command += " ";
    rep.command += argv[i];
  }
  rep.inputs.assign(argv + 1, argv + argc);
  int code = 0;
  try {
    if (*h) cmd_hilbert(hil, rep);
    if (*rp) cmd_rep(repa, rep);
    if (*dy) cmd_dynamics(dyn, rep);
    if (*al) cmd_alexander(alx, rep);
    if (*bo) cmd_borel(bor, rep);
    if (*pa) cmd_padic(pad, rep);
    if (*se) code = cmd_selftest(st, rep);
  } catch (const at::Error& e) {
    return report_error(std::string(at::error_name(e.code())), exit_code_for(e.code()), e.what(), as_json);
  } catch (const std::exception& e) {
    return report_error("InvalidInput", 2, e.what(), as_json);
  }
  std::cout << rep.render(as_json);
  return code;
}
