#include "cli.hpp"

#include <omp.h>

#include <CLI11.hpp>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <optional>
#include <random>
#include <sstream>

#include "divgraph/acceptance.hpp"
#include "divgraph/arith.hpp"
#include "divgraph/error.hpp"
#include "divgraph/graph.hpp"
#include "divgraph/poset.hpp"
#include "divgraph/report.hpp"
#include "divgraph/spectra.hpp"

namespace divgraph::cli {
namespace {

using report::Json;
using arith::FactorizationType;

struct Options {
  std::optional<std::uint64_t> n;
  std::optional<std::string> type;
  std::vector<long> lambdas;
  std::optional<unsigned> omega_max;
  std::string format = "json";
  std::uint64_t seed = 0x5eed;
  int jobs = 0;
  std::string out_path;
  std::string check;
};

constexpr const char* kChecks[] = {"thm-main", "thm-main2", "mobius", "minus-one", "det-period",
                                   "mod6",     "kernel-pq", "poset-lift", "tables", "oeis"};

std::size_t max_vertices() {
  if (const char* env = std::getenv("DIVGRAPH_MAX_VERTICES")) {
    char* end = nullptr;
    const unsigned long long value = std::strtoull(env, &end, 10);
    if (end != env && *end == '\0' && value > 0) return static_cast<std::size_t>(value);
    throw PreconditionError("DIVGRAPH_MAX_VERTICES must be a positive integer");
  }
  return 8192;
}

std::vector<unsigned> parse_list(std::string text) {
  for (char& c : text)
    if (c == '(' || c == ')') c = ' ';
  return FactorizationType::parse(text).exponents();
}

// Keeps the caller's order, which matters for kernel-pq.
std::vector<unsigned> parse_raw_list(const std::string& text) {
  std::vector<unsigned> out;
  std::stringstream in(text);
  std::string item;
  while (std::getline(in, item, ',')) out.push_back(parse_list(item).at(0));
  return out;
}

struct Target {
  FactorizationType type;
  std::optional<std::uint64_t> n;
};

std::optional<Target> target(const Options& o, bool required) {
  if (o.n && o.type) throw CLI::ValidationError("--n and --type are mutually exclusive");
  if (o.n) {
    require(*o.n >= 1, "--n must be at least 1");
    return Target{arith::factorization_type(*o.n), o.n};
  }
  if (o.type) return Target{FactorizationType(parse_list(*o.type)), std::nullopt};
  if (required) throw CLI::ValidationError("one of --n or --type is required");
  return std::nullopt;
}

void check_size(const FactorizationType& t) {
  const std::size_t limit = max_vertices();
  guard(t.divisor_count() <= limit, "type " + t.to_string() + " has " + std::to_string(t.divisor_count()) +
                                        " vertices, above the limit " + std::to_string(limit));
}

exactla::Limits limits() {
  exactla::Limits l;
  const std::size_t cap = max_vertices();
  l.charpoly_max_dim = std::min(l.charpoly_max_dim, cap);
  l.determinant_max_dim = std::min(l.determinant_max_dim, cap);
  l.nullity_modular_max_dim = std::min(l.nullity_modular_max_dim, cap);
  l.nullity_exact_max_dim = std::min(l.nullity_exact_max_dim, cap);
  return l;
}

spectra::SpectrumOptions spectrum_options(const Options& o) {
  spectra::SpectrumOptions s;
  s.nullity.seed = o.seed;
  s.limits = limits();
  s.max_vertices = max_vertices();
  return s;
}

struct Output {
  std::string text;
  int code = kSuccess;
};

Output json_output(const Json& j, bool ok = true) { return {j.dump(2) + "\n", ok ? kSuccess : kVerificationFailed}; }

// Published values for squarefree types, used by `verify tables`.
const std::map<long, std::map<unsigned, std::size_t>>& known_tables() {
  static const std::map<long, std::map<unsigned, std::size_t>> tables = {
      {-2, {{2, 0}, {3, 2}, {4, 0}, {5, 10}, {6, 0}, {7, 42}, {8, 0}, {9, 170}}},
      {-1, {{2, 1}, {3, 3}, {4, 4}, {5, 10}, {6, 15}, {7, 35}, {8, 56}, {9, 126}}},
      {1, {{2, 0}, {3, 2}, {5, 5}, {7, 14}, {9, 42}}},
      {0, {{2, 1}, {4, 2}, {6, 5}, {8, 14}, {10, 42}}},
  };
  return tables;
}

std::vector<long> lambdas_or_default(const Options& o) {
  return o.lambdas.empty() ? std::vector<long>{-2, -1, 0, 1} : o.lambdas;
}

Output cmd_info(const Options& o) {
  const auto t = *target(o, true);
  check_size(t.type);
  return json_output(report::info(t.type, t.n));
}

Output cmd_charpoly(const Options& o) {
  const auto t = *target(o, true);
  check_size(t.type);
  const auto f = spectra::charpoly_of_type(t.type, limits());
  Json j;
  j["type"] = report::to_json(t.type);
  j["v"] = t.type.divisor_count();
  j["charpoly"] = report::to_json(f);
  j["text"] = f.to_string();
  return json_output(j);
}

Output cmd_spectrum(const Options& o) {
  const auto t = *target(o, true);
  check_size(t.type);
  const auto r = spectra::special_multiplicities(t.type, lambdas_or_default(o), spectrum_options(o));
  return json_output(report::to_json(r), r.consistent());
}

Output table_output(const Options& o, const std::vector<spectra::TableCell>& cells, Json extra = nullptr) {
  if (o.format == "csv") return {report::table_csv(cells), kSuccess};
  Json j;
  Json rows = Json::array();
  for (const auto& c : cells) rows.push_back(report::to_json(c));
  j["cells"] = std::move(rows);
  if (!extra.is_null()) j.update(extra);
  return json_output(j);
}

std::vector<spectra::TableCell> table_cells(const Options& o, unsigned default_max) {
  const unsigned omega_max = o.omega_max.value_or(default_max);
  auto options = spectrum_options(o);
  return spectra::multiplicity_table(lambdas_or_default(o), 2, omega_max, options);
}

Output cmd_table(const Options& o) {
  if (o.format != "json" && o.format != "csv") throw CLI::ValidationError("table supports --format json or csv");
  return table_output(o, table_cells(o, 8));
}

Output cmd_export(const Options& o) {
  const auto t = *target(o, true);
  check_size(t.type);
  if (o.format == "json") {
    const auto g = graph::DivGraph::build(t.type);
    Json j;
    j["type"] = report::to_json(t.type);
    j["vertices"] = g.vertices();
    Json edges = Json::array();
    for (std::size_t i = 0; i < g.order(); ++i)
      for (std::size_t k = i + 1; k < g.order(); ++k)
        if (g.adjacent(i, k)) edges.push_back({i, k});
    j["edges"] = std::move(edges);
    return json_output(j);
  }
  if (o.format != "dot") throw CLI::ValidationError("export supports --format dot or json");
  if (t.n) {
    const auto ig = graph::build_from_integer(*t.n);
    return {graph::to_dot(ig.graph, &ig.labels), kSuccess};
  }
  return {graph::to_dot(graph::DivGraph::build(t.type)), kSuccess};
}

Output verify_tables(const Options& o, bool oeis) {
  const auto cells = table_cells(o, oeis ? 9 : 8);
  Json mismatches = Json::array();
  bool ok = true;
  for (const auto& c : cells) {
    const auto& known = known_tables();
    auto table = known.find(c.lambda);
    if (table == known.end()) continue;
    auto value = table->second.find(c.omega);
    if (value == table->second.end()) continue;
    if (value->second != c.multiplicity || !c.certificate.basis_verified) {
      ok = false;
      mismatches.push_back({{"omega", c.omega}, {"lambda", c.lambda}, {"expected", value->second},
                            {"computed", c.multiplicity}});
    }
  }
  if (oeis) {
    const auto r = spectra::oeis_pattern_checks(cells);
    Json j;
    j["observations"] = report::to_json(r);
    return json_output(j, r.all_hold());
  }
  auto out = table_output(o, cells, Json{{"mismatches", mismatches}});
  if (!ok) out.code = kVerificationFailed;
  return out;
}

Output cmd_verify(const Options& o) {
  const std::string& c = o.check;
  if (c == "thm-main" || c == "thm-main2") {
    const auto t = *target(o, true);
    check_size(t.type.with_parts({1, 1}));
    const auto r = c == "thm-main" ? spectra::verify_f_divides(t.type, limits())
                                   : spectra::verify_f_squared_divides(t.type, limits());
    return json_output(report::to_json(r), r.ok());
  }
  if (c == "mobius") {
    const auto t = *target(o, true);
    check_size(t.type);
    std::uint64_t n = 0;
    if (t.n) {
      n = *t.n;
    } else {
      require(t.type.is_squarefree(), "mobius needs a squarefree type");
      const auto primes = arith::first_primes(t.type.length());
      n = arith::instantiate(t.type.parts(), primes);
    }
    const auto w = spectra::mobius_eigenvector(n);
    return json_output(report::to_json(w), w.verified);
  }
  if (c == "minus-one") {
    const auto t = *target(o, true);
    check_size(t.type);
    const auto w = spectra::minus_one_eigenvector(t.type);
    return json_output(report::to_json(w), w.verified);
  }
  if (c == "det-period") {
    const auto r = spectra::det_sequence_pq_power(o.omega_max.value_or(29));
    return json_output(report::to_json(r), r.ok());
  }
  if (c == "mod6") {
    exactla::NullityOptions options;
    options.seed = o.seed;
    Json rows = Json::array();
    bool ok = true;
    const unsigned a_max = o.omega_max.value_or(25);
    for (unsigned a = 0; a <= a_max; ++a) {
      check_size(FactorizationType({1, std::max(a, 1u)}));
      const auto z = spectra::zero_iff_mod6(a, options);
      ok = ok && z.ok();
      rows.push_back(report::to_json(z));
    }
    return json_output(Json{{"results", rows}, {"all_agree", ok}}, ok);
  }
  if (c == "kernel-pq") {
    if (!o.type) throw CLI::ValidationError("kernel-pq needs --type u,v");
    const auto uv = parse_raw_list(*o.type);
    if (uv.size() != 2) throw CLI::ValidationError("kernel-pq needs exactly two exponents");
    check_size(FactorizationType(uv));
    const auto w = spectra::kernel_vector_two_prime_powers(uv[0], uv[1]);
    Json j = report::to_json(w);
    Json six = Json::array();
    bool ok = w.verified;
    for (unsigned v : {uv[1]}) {
      const auto r = spectra::six_case_identities(v);
      ok = ok && r.ok();
      six.push_back(report::to_json(r));
    }
    j["block_identities"] = std::move(six);
    return json_output(j, ok);
  }
  if (c == "poset-lift") {
    Json results = Json::array();
    bool ok = true;
    if (auto t = target(o, false)) {
      const auto p = poset::divisor_poset(t->type.parts());
      const auto r = poset::verify_poset_lift(p);
      ok = r.ok();
      results.push_back(report::to_json(r));
    } else {
      std::mt19937_64 rng(o.seed);
      for (int k = 0; k < 20; ++k) {
        const auto p = poset::random_poset(1 + static_cast<std::size_t>(k % 8), 0.5, rng);
        const auto r = poset::verify_poset_lift(p);
        ok = ok && r.ok();
        results.push_back(report::to_json(r));
      }
    }
    return json_output(Json{{"results", results}, {"all_passed", ok}}, ok);
  }
  if (c == "tables") return verify_tables(o, false);
  if (c == "oeis") return verify_tables(o, true);
  throw CLI::ValidationError("unknown check '" + c + "'");
}

Output cmd_selftest(const Options& o, std::ostream& live) {
  auto scale = acceptance::Scale::reduced();
  scale.seed = o.seed;
  bool ok = true;
  acceptance::run_all(scale, [&](const acceptance::CriterionResult& r) {
    live << acceptance::format(r) << std::endl;
    ok = ok && r.passed;
  });
  return {ok ? "selftest passed\n" : "selftest FAILED\n", ok ? kSuccess : kVerificationFailed};
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Divisibility relation graphs: construction, invariants and spectral checks", "divgraph"};
  app.require_subcommand(1, 1);
  Options o;

  auto common = [&](CLI::App* sub, bool with_check) {
    if (with_check) {
      sub->add_option("check", o.check, "Check id")
          ->required()
          ->check(CLI::IsMember(std::vector<std::string>(std::begin(kChecks), std::end(kChecks))));
    }
    auto* n = sub->add_option("--n", o.n, "Integer n >= 1");
    auto* t = sub->add_option("--type", o.type, "Factorization type a1,a2,...");
    n->excludes(t);
    sub->add_option("--lambda", o.lambdas, "Eigenvalues")->delimiter(',')->allow_extra_args(false);
    sub->add_option("--omega-max", o.omega_max, "Largest omega (or a for det-period and mod6)");
    sub->add_option("--format", o.format, "json, csv or dot")->check(CLI::IsMember({"json", "csv", "dot"}));
    sub->add_option("--seed", o.seed, "Seed for prime selection");
    sub->add_option("--jobs", o.jobs, "Worker threads")->check(CLI::NonNegativeNumber);
    sub->add_option("--out", o.out_path, "Write the result to this file");
  };
  auto* info = app.add_subcommand("info", "Structural invariants");
  auto* charpoly = app.add_subcommand("charpoly", "Exact characteristic polynomial");
  auto* spectrum = app.add_subcommand("spectrum", "Certified multiplicities of integer eigenvalues");
  auto* verify = app.add_subcommand("verify", "Run one verification");
  auto* table = app.add_subcommand("table", "Multiplicity table over squarefree types");
  auto* exp = app.add_subcommand("export", "Graph export (DOT or JSON)");
  auto* selftest = app.add_subcommand("selftest", "Acceptance checks at reduced scale");
  for (auto* sub : {info, charpoly, spectrum, table, exp, selftest}) common(sub, false);
  common(verify, true);

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::CallForHelp& e) {
    out << app.help();
    return kSuccess;
  } catch (const CLI::ParseError& e) {
    err << "divgraph: " << e.what() << "\n";
    return kUsageError;
  }
  if (o.jobs > 0) omp_set_num_threads(o.jobs);

  std::ofstream file;
  std::ostream* sink = &out;
  if (!o.out_path.empty()) {
    file.open(o.out_path);
    if (!file) {
      err << "divgraph: cannot open " << o.out_path << "\n";
      return kUsageError;
    }
    sink = &file;
  }

  try {
    if (!table->parsed() && !exp->parsed() && o.format != "json")
      throw CLI::ValidationError("only table and export accept --format other than json");
    Output result;
    if (info->parsed()) result = cmd_info(o);
    else if (charpoly->parsed()) result = cmd_charpoly(o);
    else if (spectrum->parsed()) result = cmd_spectrum(o);
    else if (verify->parsed()) result = cmd_verify(o);
    else if (table->parsed()) result = cmd_table(o);
    else if (exp->parsed()) result = cmd_export(o);
    else result = cmd_selftest(o, *sink);
    *sink << result.text;
    return result.code;
  } catch (const CLI::ValidationError& e) {
    err << "divgraph: " << e.what() << "\n";
    return kUsageError;
  } catch (const PreconditionError& e) {
    err << "divgraph: " << e.what() << "\n";
    return kUsageError;
  } catch (const GuardError& e) {
    err << "divgraph: refused: " << e.what() << "\n";
    return kGuardRefused;
  } catch (const std::exception& e) {
    err << "divgraph: " << e.what() << "\n";
    return kVerificationFailed;
  }
}

}  // namespace divgraph::cli
