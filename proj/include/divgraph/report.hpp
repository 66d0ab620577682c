#pragma once

#include <json.hpp>

#include <string>
#include <vector>

#include "divgraph/exactla.hpp"
#include "divgraph/graph.hpp"
#include "divgraph/poset.hpp"
#include "divgraph/spectra.hpp"

namespace divgraph::report {

using Json = nlohmann::ordered_json;

/// Decimal coefficient strings, constant term first.
Json to_json(const IntPolynomial& f);
Json to_json(const exactla::NullityCertificate& c, bool include_basis = false);
Json to_json(const spectra::SpectrumReport& r);
Json to_json(const spectra::DivisibilityReport& r);
Json to_json(const spectra::KernelWitness& w);
Json to_json(const spectra::DetSequenceReport& r);
Json to_json(const spectra::ZeroCriterion& z);
Json to_json(const spectra::SixCaseReport& r);
Json to_json(const spectra::OeisReport& r);
Json to_json(const spectra::TableCell& c);
Json to_json(const poset::PosetLiftReport& r);
Json to_json(const poset::SquaredLiftReport& r);
Json to_json(const graph::PlanarityClass& p, const graph::DivGraph& g);
Json to_json(const arith::FactorizationType& t);

/// Structural summary of D(t): counts, degrees, clique, independence,
/// colouring, connectivity and planarity.
Json info(const arith::FactorizationType& t, std::optional<std::uint64_t> n = std::nullopt);

/// CSV with header omega,m_<lambda>... and one row per omega.
std::string table_csv(const std::vector<spectra::TableCell>& cells);

}  // namespace divgraph::report
