#include "divgraph/report.hpp"

#include <map>
#include <set>
#include <sstream>

#include "divgraph/planarity.hpp"

namespace divgraph::report {

Json to_json(const IntPolynomial& f) { return Json(f.to_decimal_strings()); }

Json to_json(const arith::FactorizationType& t) { return Json(t.exponents()); }

namespace {

Json big_vector(const std::vector<mpz_class>& v) {
  Json out = Json::array();
  for (const auto& x : v) out.push_back(x.get_str());
  return out;
}

}  // namespace

Json to_json(const exactla::NullityCertificate& c, bool include_basis) {
  Json j;
  j["nullity"] = c.nullity;
  j["method"] = exactla::to_string(c.method);
  j["primes"] = c.primes;
  j["lifting_primes"] = c.lifting_primes;
  j["seed"] = c.seed;
  j["basis_verified"] = c.basis_verified;
  if (include_basis) {
    Json basis = Json::array();
    for (const auto& v : c.basis) basis.push_back(big_vector(v));
    j["basis"] = std::move(basis);
  }
  return j;
}

Json to_json(const spectra::SpectrumReport& r) {
  Json j;
  j["type"] = to_json(r.type);
  j["v"] = r.vertices;
  j["e"] = r.edges;
  j["det"] = r.determinant ? Json(r.determinant->get_str()) : Json(nullptr);
  Json mult = Json::object();
  Json certs = Json::array();
  for (const auto& [lambda, cert] : r.multiplicities) {
    mult[std::to_string(lambda)] = cert.nullity;
    Json c = to_json(cert);
    c["lambda"] = lambda;
    certs.push_back(std::move(c));
  }
  j["multiplicities"] = std::move(mult);
  j["certificates"] = std::move(certs);
  Json checks = Json::array();
  for (const auto& c : r.consistency) checks.push_back({{"name", c.name}, {"holds", c.holds}});
  j["consistency"] = std::move(checks);
  return j;
}

Json to_json(const spectra::DivisibilityReport& r) {
  Json j;
  j["type"] = to_json(r.base);
  j["extended_type"] = to_json(r.extended);
  j["squared"] = r.squared;
  j["f_base"] = to_json(r.f_base);
  j["f_extended"] = to_json(r.f_extended);
  j["divides"] = r.divides;
  j["quotient"] = r.quotient ? to_json(*r.quotient) : Json(nullptr);
  j["quotient_text"] = r.quotient ? Json(r.quotient->to_string()) : Json(nullptr);
  j["integer_spot_check"] = r.integer_spot_check ? Json(*r.integer_spot_check) : Json(nullptr);
  return j;
}

Json to_json(const spectra::KernelWitness& w) {
  Json j;
  j["type"] = to_json(w.type);
  j["eigenvalue"] = w.eigenvalue;
  j["local_labels"] = w.local_labels;
  j["vector"] = big_vector(w.vector);
  j["to_canonical"] = w.to_canonical;
  j["verified"] = w.verified;
  return j;
}

Json to_json(const spectra::DetSequenceReport& r) {
  Json j;
  j["determinants"] = big_vector(r.determinants);
  j["base_matches"] = r.base_matches;
  j["periodic"] = r.periodic;
  j["m5_reproduced"] = r.m5_reproduced;
  j["m5_inverse_checked"] = r.m5_inverse_checked;
  return j;
}

Json to_json(const spectra::ZeroCriterion& z) {
  return {{"a", z.a}, {"has_zero", z.has_zero}, {"predicted", z.predicted}, {"certificate", to_json(z.certificate)}};
}

Json to_json(const spectra::SixCaseReport& r) {
  Json ids = Json::array();
  for (const auto& i : r.identities) ids.push_back({{"name", i.name}, {"holds", i.holds}});
  return {{"v", r.v}, {"s", r.s}, {"identities", std::move(ids)}};
}

Json to_json(const spectra::OeisReport& r) {
  Json out = Json::array();
  for (const auto& o : r.observations) {
    out.push_back({{"name", o.name},
                   {"omegas", o.omegas},
                   {"holds", o.holds},
                   {"first_mismatch", o.first_mismatch ? Json(*o.first_mismatch) : Json(nullptr)}});
  }
  return out;
}

Json to_json(const spectra::TableCell& c) {
  return {{"omega", c.omega}, {"lambda", c.lambda}, {"multiplicity", c.multiplicity},
          {"certificate", to_json(c.certificate)}};
}

Json to_json(const poset::PosetLiftReport& r) {
  Json checks = Json::array();
  for (const auto& c : r.eigen_checks) {
    checks.push_back({{"eigenvalue", c.eigenvalue},
                      {"multiplicity", c.multiplicity},
                      {"lifts_are_eigenvectors", c.all_lifts_are_eigenvectors},
                      {"lifted_rank", c.lifted_rank}});
  }
  return {{"f_base", to_json(r.f_base)},
          {"f_lifted", to_json(r.f_lifted)},
          {"divides", r.divides},
          {"quotient", r.quotient ? to_json(*r.quotient) : Json(nullptr)},
          {"eigen_checks", std::move(checks)}};
}

Json to_json(const poset::SquaredLiftReport& r) {
  return {{"base_divides", r.base_divides},
          {"squared_divides", r.squared_divides},
          {"squared_quotient", r.squared_quotient ? to_json(*r.squared_quotient) : Json(nullptr)}};
}

Json to_json(const graph::PlanarityClass& p, const graph::DivGraph& g) {
  Json j;
  j["planar"] = p.planar;
  j["reason"] = p.reason;
  j["offending_subtype"] = p.offending_subtype ? Json(*p.offending_subtype) : Json(nullptr);
  if (p.witness.kind != graph::WitnessKind::none) {
    auto vec = [&](std::size_t i) { return g.vertex(i); };
    Json branch = Json::array(), paths = Json::array();
    for (auto b : p.witness.branch) branch.push_back(vec(b));
    for (const auto& path : p.witness.paths) {
      Json jp = Json::array();
      for (auto x : path) jp.push_back(vec(x));
      paths.push_back(std::move(jp));
    }
    j["witness"] = {{"kind", graph::to_string(p.witness.kind)},
                    {"branch", std::move(branch)},
                    {"paths", std::move(paths)},
                    {"valid", graph::witness_is_valid(g, p.witness)}};
  } else {
    j["witness"] = nullptr;
  }
  return j;
}

Json info(const arith::FactorizationType& t, std::optional<std::uint64_t> n) {
  const auto g = graph::DivGraph::build(t);
  const auto c = graph::counts(t.parts());
  Json j;
  j["type"] = to_json(t);
  j["n"] = n ? Json(*n) : Json(nullptr);
  j["v"] = c.vertices;
  j["e"] = c.edges;
  j["big_omega"] = t.big_omega();
  j["mobius"] = t.mobius();

  const auto profile = graph::min_degree_analysis(t.parts());
  Json minimizers = Json::array();
  for (auto m : profile.minimizers) minimizers.push_back(g.vertex(m));
  j["min_degree"] = profile.min_degree;
  j["min_degree_vertices"] = std::move(minimizers);
  j["max_degree"] = g.order() > 1 ? static_cast<std::int64_t>(g.order() - 1) : 0;

  const auto clique = graph::clique_number(t.parts());
  const auto independence = graph::independence_number(t.parts());
  const auto coloring = graph::omega_coloring(t.parts());
  j["clique"] = clique.size;
  j["independence"] = independence.size;
  j["chromatic"] = coloring.colors_used;

  const auto conn = graph::connectivity_checks(t.parts());
  j["connected"] = conn.connected;
  j["middle_connected"] = conn.middle_connected;
  j["bipartite"] = conn.bipartite;
  j["diameter"] = conn.diameter;

  const auto planarity = graph::planarity_class(t.parts());
  j["planar"] = planarity.planar;
  j["planarity"] = to_json(planarity, g);
  if (g.order() <= graph::kPlanarityOracleMaxVertices) j["planarity"]["oracle"] = graph::planarity_oracle(g);
  return j;
}

std::string table_csv(const std::vector<spectra::TableCell>& cells) {
  std::set<long> lambdas;
  std::map<unsigned, std::map<long, std::size_t>> rows;
  for (const auto& c : cells) {
    lambdas.insert(c.lambda);
    rows[c.omega][c.lambda] = c.multiplicity;
  }
  std::ostringstream out;
  out << "omega";
  for (long l : lambdas) out << ",m_" << l;
  out << '\n';
  for (const auto& [omega, values] : rows) {
    out << omega;
    for (long l : lambdas) {
      out << ',';
      if (auto it = values.find(l); it != values.end()) out << it->second;
    }
    out << '\n';
  }
  return out.str();
}

}  // namespace divgraph::report
