#pragma once

#include "nkji/coeffs.hpp"
#include "nkji/shocks.hpp"

#include <Eigen/Dense>

#include <array>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace nkji {

enum class BudgetMode { independent, balanced };

std::string_view budget_name(BudgetMode m);
BudgetMode budget_from_name(std::string_view name);

struct EquilibriumPath {
    int T = 0;
    Eigen::VectorXd r, y, yhat, pi, c, I, i, u;
    Eigen::VectorXd Ey, Eyhat, Epi, Eu;  // one-step-ahead expectations formed at t
    Eigen::VectorXd JI;                  // job insecurity E_t[u_{t+1}] - z_0^u
    Eigen::VectorXd fe;                  // y_{t+1} - E_t y_{t+1}; NaN in the last period
    ShockPath shocks;                    // after budget-mode adjustment
    BudgetMode mode = BudgetMode::independent;
};

// Ties the tax process to spending (tax = g, tax innovation = spending
// innovation). Throws BudgetModeConflict unless rho_g == rho_tax.
ShockPath balance_budget(const ShockPath& path);

EquilibriumPath simulate(const ReducedForm& rf, const ShockPath& path,
                         BudgetMode mode = BudgetMode::independent);

// Time-t information as optional regressor values (layout of regressors.hpp).
using State = std::array<std::optional<double>, n_reg>;

State state_at(const ShockPath& path, int t);

struct Expectations {
    double Ey = 0.0;
    double Eyhat = 0.0;
    double Epi = 0.0;
    double Eu = 0.0;
};

// Throws MissingState naming the first symbol a required term lacks.
Expectations expectations(const ReducedForm& rf, const State& s);

// Expected unemployment deviation from z_0^u, summed term by term from the
// Eu block without its intercept.
double job_insecurity(const ReducedForm& rf, const State& s);

struct ForecastErrorStats {
    Eigen::VectorXd series;  // length T - 1
    double mean = 0.0;
    double se = 0.0;
    double lag1_autocorr = 0.0;
    double variance = 0.0;
};

ForecastErrorStats forecast_error(const EquilibriumPath& path);

// Variance of y_{t+1} - E_t y_{t+1} implied by the output block and the
// innovation scales, assuming independent fiscal innovations.
double forecast_error_variance(const ReducedForm& rf);

// Series reported by `irf`, in column order.
const std::vector<std::string>& irf_variables();

struct IrfTable {
    ShockKind kind = ShockKind::omega;
    int H = 0;
    double size = 1.0;
    Eigen::MatrixXd response;  // H rows (h = 0..H-1) x irf_variables() columns

    double at(int h, std::string_view variable) const;
};

// Response to a single innovation of `size` at h = 0, from the steady state.
IrfTable irf(const ReducedForm& rf, ShockKind kind, int H, double size = 1.0);

struct SignalEntry {
    Var var = Var::r;
    double z7 = 0.0, z8 = 0.0;
    int sign7 = 0, sign8 = 0;
    bool neutral = false;  // both signal coefficients vanish
    bool paradox = false;  // disclosure moves a welfare-relevant variable adversely
};

struct TransparencyAudit {
    std::vector<SignalEntry> entries;
    const SignalEntry& operator[](Var v) const;
};

TransparencyAudit transparency_audit(const ReducedForm& rf);

// Deterministic random search for a valid parameterization whose news
// innovation raises expected unemployment (z_8^Eu > 0).
std::optional<StructuralParams> paradox_search(std::uint64_t seed, int max_draws,
                                               const StructuralParams& base = defaults());

}  // namespace nkji
