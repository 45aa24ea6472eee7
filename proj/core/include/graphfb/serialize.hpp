#pragma once

#include <filesystem>
#include <iosfwd>
#include <string>
#include <utility>
#include <vector>

#include <nlohmann/json.hpp>

#include "graphfb/coarsen.hpp"
#include "graphfb/filter_design.hpp"
#include "graphfb/polyapprox.hpp"

namespace graphfb {

using Json = nlohmann::json;

// FilterBank: {kind, n, strategy, tie_adjusted, lipschitz, eigenvalues, h0,
// h1, g0, g1, y}; lipschitz is null when undefined.
Json bank_to_json(const FilterBank& bank);
FilterBank bank_from_json(const Json& j);

Json coarse_map_to_json(const CoarseMap& cm);

// {degree, domain_max, coefficients (monomial in lambda), chebyshev,
// sup_error, converged}. Parsing prefers the chebyshev array when present.
Json polynomial_to_json(const FilterPolynomial& p);
FilterPolynomial polynomial_from_json(const Json& j);

/// Metric value for JSON; infinities become the strings "inf" / "-inf".
Json metric_value(double v);

/// "metric,value" CSV with the same "inf" convention.
void format_metrics_csv(std::ostream& out, const std::vector<std::pair<std::string, double>>& rows);

Json read_json(const std::filesystem::path& path);
void write_json(const Json& j, const std::filesystem::path& path);

}  // namespace graphfb
