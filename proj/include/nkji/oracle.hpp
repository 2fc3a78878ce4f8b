#pragma once

#include "nkji/coeffs.hpp"
#include "nkji/sim.hpp"

#include <Eigen/Dense>

#include <cstdint>
#include <random>
#include <string>
#include <vector>

namespace nkji {

using Loadings = Eigen::Matrix<double, n_reg, 1>;

// Unknowns of the matching system, each a full regressor loading vector.
enum class Unknown : int { y, yhat, r, c, S, I, L, pi, i, Epi, u, Eyhat, Eu };
inline constexpr int n_unknown = 13;

struct OracleSolution {
    ReducedForm rf;
    std::array<Loadings, n_unknown> full;
    double condition_number = 0.0;
    double max_equation_residual = 0.0;
    std::vector<std::string> warnings;

    const Loadings& operator[](Unknown u) const { return full[static_cast<int>(u)]; }
};

// Conditional expectation operator on loading vectors: E_t[b . x_{t+1}] = (F b) . x_t
// for private agents, who see every period-t quantity except the current
// potential-output innovation.
Eigen::Matrix<double, n_reg, n_reg> forecast_operator(const StructuralParams& p);

// Re-solves the structural system by undetermined coefficients. Throws
// SingularSystem when the matching system is singular and AnsatzInconsistent
// when the solution loads on regressors outside the reduced-form shapes.
OracleSolution solve_undetermined(const StructuralParams& p);

struct ResidualRow {
    std::string name;
    Eigen::VectorXd series;
    double max_abs = 0.0;
    double threshold = 0.0;
    bool pass = false;
    bool supplementary = false;  // reported, not part of the core equation set
};

struct ResidualReport {
    std::vector<ResidualRow> rows;
    const ResidualRow& operator[](std::string_view name) const;
    bool all_pass() const;  // core rows only
};

// Per-period residuals of the structural equations recomputed from the
// emitted series: IS curve, Okun, Phillips, Taylor, S = I, resource
// constraint, budget (balanced mode), plus investment and Fisher rows.
ResidualReport residuals(const EquilibriumPath& path, const StructuralParams& p, double threshold = 1e-9);

struct ErrataEntry {
    Var var = Var::r;
    int index = 0;
    double table = 0.0;
    double oracle = 0.0;
    double rel_diff = 0.0;
};

struct TypoVerdict {
    std::string label;        // which printed cell
    Var var = Var::r;
    int index = 0;
    double printed = 0.0;
    double variant = 0.0;     // the pattern-suggested replacement
    double implied = 0.0;     // structural relation applied to the table's own blocks
    double oracle = 0.0;
    bool printed_consistent = false;
    bool variant_consistent = false;
    bool variant_matches_oracle = false;
    std::string verdict;      // "typo", "as printed", "undecided"
};

struct ErrataReport {
    std::vector<ErrataEntry> entries;
    std::vector<TypoVerdict> typos;
    double condition_number = 0.0;
    std::vector<std::string> warnings;

    bool contains(Var v, int index) const;
};

// Relative difference with an absolute floor for near-zero entries.
bool coeff_close(double a, double b, double tol, double abs_floor = 1e-12);

ErrataReport compare(const ReducedForm& tables, const ReducedForm& oracle, double tol = 1e-6,
                     double abs_floor = 1e-12);

struct StructuralAuditEntry {
    std::string relation;
    int reg = 0;
    double residual = 0.0;
};

// Evaluates each structural relation in coefficient space on a single
// reduced form and lists the regressors where it fails.
std::vector<StructuralAuditEntry> structural_audit(const ReducedForm& rf, double tol = 1e-9);

// Random draw accepted only when the oracle system is well conditioned.
struct OracleDraw {
    StructuralParams params;
    OracleSolution solution;
};
OracleDraw oracle_draw(std::mt19937_64& rng, double max_condition = 1e10);

struct StabilityReport {
    int draws = 0;
    std::vector<std::pair<Var, int>> errata;  // from the first draw
    bool stable = true;                       // identical set and typo verdicts on every draw
    std::vector<std::string> typo_verdicts;   // "label: verdict" from the first draw
    double max_condition = 0.0;
};

StabilityReport errata_stability(std::uint64_t seed, int draws, double tol = 1e-8);

}  // namespace nkji
