#pragma once

#include "nkji/params.hpp"

#include <Eigen/Dense>

#include <array>
#include <cstdint>
#include <string>
#include <string_view>

namespace nkji {

enum class ShockKind : int { omega, eta, taxshock, lambda, xi, v, costpush, natu, noise };

inline constexpr int n_shock = 9;
inline constexpr std::array<ShockKind, n_shock> all_shocks{
    ShockKind::omega, ShockKind::eta,      ShockKind::taxshock, ShockKind::lambda, ShockKind::xi,
    ShockKind::v,     ShockKind::costpush, ShockKind::natu,     ShockKind::noise};

// Column names used in CSV output (omega, eta, L, lambda, xi, v, sigma_cp, T_natu, Xi).
std::string_view shock_name(ShockKind k);

// Accepts the CSV names and the long aliases (taxshock, costpush, natu, noise).
ShockKind shock_from_name(std::string_view name);

double shock_sd(const StructuralParams& p, ShockKind k);

// Values of the AR states before the first simulated period.
struct InitialLags {
    double ybar_l1 = 0.0;
    double ybar_l2 = 0.0;
    double omega_l1 = 0.0;
    double g_l1 = 0.0;
    double tax_l1 = 0.0;
    double chi_l1 = 0.0;
    double eps_l1 = 0.0;
    double ubar_l1 = 0.0;
};

enum class Innovation { gaussian, uniform, student_t };

struct DrawOptions {
    Innovation dist = Innovation::gaussian;
    double student_df = 5.0;  // must exceed 2 so the scaled draw has unit variance
    int burn = 0;
    InitialLags initial{};
};

struct ShockPath {
    int T = 0;
    StructuralParams params;  // persistences and scales that generated the path
    std::array<Eigen::VectorXd, n_shock> innov;
    Eigen::VectorXd chi, ybar, g, tax, eps, ubar;
    InitialLags initial;

    const Eigen::VectorXd& operator[](ShockKind k) const { return innov[static_cast<int>(k)]; }
    Eigen::VectorXd& operator[](ShockKind k) { return innov[static_cast<int>(k)]; }

    // The drift of potential output coincides with its level; see README.
    const Eigen::VectorXd& mu() const { return ybar; }

    // Lagged values reaching back into the initial state for t - lag < 0.
    double ybar_at(int t) const;
    double omega_at(int t) const;
    double g_at(int t) const;
    double tax_at(int t) const;
    double chi_at(int t) const;
    double eps_at(int t) const;
    double ubar_at(int t) const;

    // Regressor vector of period t (see regressors.hpp for the layout).
    Eigen::Matrix<double, 16, 1> regressors(int t) const;
};

// Accumulates the AR(1) states from given innovation sequences (each of
// length T) and initial lags.
ShockPath accumulate(const StructuralParams& p, std::array<Eigen::VectorXd, n_shock> innov,
                     const InitialLags& initial = {});

// Seeded draw. Each shock kind has its own generator keyed on (seed, kind
// index), so streams do not interact.
ShockPath draw(const StructuralParams& p, std::uint64_t seed, int T, const DrawOptions& opt = {});

// Disclosed signal: chi when transparent (or noiseless), chi + Xi otherwise.
Eigen::VectorXd signal(const ShockPath& path, bool transparent);

}  // namespace nkji
