#pragma once

#include "nkji/coeffs.hpp"
#include "nkji/oracle.hpp"
#include "nkji/shocks.hpp"
#include "nkji/sim.hpp"
#include "nkji/statespace.hpp"

#include <json.hpp>

#include <ostream>
#include <string>
#include <vector>

namespace nkji {

// Shortest decimal form that parses back to the same double; "nan"/"inf"
// for non-finite values.
std::string format_number(double x);

// Writes "# schema: nkji.<name>/<version>" followed by the header row.
void write_csv_header(std::ostream& out, const std::string& schema, const std::vector<std::string>& columns);

void write_coeffs_csv(std::ostream& out, const ReducedForm& rf);
void write_shocks_csv(std::ostream& out, const ShockPath& path, bool transparent);
void write_path_csv(std::ostream& out, const EquilibriumPath& path);
void write_irf_csv(std::ostream& out, const IrfTable& table);
void write_sweep_csv(std::ostream& out, const std::vector<SweepCell>& grid);

nlohmann::json coeffs_json(const ReducedForm& rf);
nlohmann::json transparency_json(const TransparencyAudit& audit);
nlohmann::json determinacy_json(const DeterminacyReport& rep, int n_pre = -1);
nlohmann::json errata_json(const ErrataReport& rep);
nlohmann::json residuals_json(const ResidualReport& rep);

}  // namespace nkji
