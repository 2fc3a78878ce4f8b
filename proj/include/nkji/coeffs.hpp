#pragma once

#include "nkji/params.hpp"
#include "nkji/regressors.hpp"

#include <Eigen/Dense>

#include <array>
#include <map>
#include <string>

namespace nkji {

// Complete coefficient set of the common-knowledge reduced form: one block
// z_0..z_N per endogenous variable, laid out as in `block_reg`.
template <typename Scalar>
struct BasicReducedForm {
    using Block = Eigen::Matrix<Scalar, Eigen::Dynamic, 1>;
    using Loadings = Eigen::Matrix<Scalar, n_reg, 1>;

    std::array<Block, n_var> blocks;
    Scalar D{0};           // s1 - sigma [c1 (gamma2 + s2) + gamma2 s1]
    Scalar taylor_den{0};  // 1 - alpha_pi beta
    StructuralParams params;

    Block& operator[](Var v) { return blocks[static_cast<int>(v)]; }
    const Block& operator[](Var v) const { return blocks[static_cast<int>(v)]; }

    Scalar z(Var v, int idx) const { return (*this)[v](idx); }

    // Coefficients spread over the full regressor vector, including the
    // fixed unit loadings.
    Loadings loadings(Var v) const
    {
        Loadings out = Loadings::Zero();
        const Block& b = (*this)[v];
        for (int j = 0; j < b.size(); ++j)
            out(block_reg(v, j)) += b(j);
        for (int r = 0; r < n_reg; ++r)
            out(r) += Scalar(fixed_loading(v, r));
        return out;
    }

    void resize_blocks()
    {
        for (Var v : all_vars)
            (*this)[v] = Block::Zero(block_size(v));
    }
};

using ReducedForm = BasicReducedForm<double>;

// Evaluates every table formula at `p`. Entries of the derived tables are
// computed through their parent blocks, so the chain identities are exact.
template <typename Scalar>
BasicReducedForm<Scalar> compute_all(const StructuralParams& p)
{
    using S = Scalar;
    const S sigma = p.sigma, beta = p.beta, k = p.k, theta = p.theta;
    const S ap = p.alpha_pi, ay = p.alpha_y;
    const S c0 = p.c0, c1 = p.c1, c3 = p.c3, c4 = p.c4;
    const S s0 = p.s0, s1 = p.s1, s2 = p.s2, s3 = p.s3, s4 = p.s4;
    const S g1 = p.gamma1, g2 = p.gamma2, g3 = p.gamma3, g4 = p.gamma4, g5 = p.gamma5;
    const S f1 = p.phi1, f2 = p.phi2, f3 = p.phi3;
    const S ry = p.rho_ybar, rg = p.rho_g, rt = p.rho_tax, rx = p.rho_chi, re = p.rho_eps, ru = p.rho_u;

    BasicReducedForm<S> rf;
    rf.params = p;
    rf.resize_blocks();

    const S Q = c1 * (g2 + s2) + g2 * s1;
    const S D = s1 - sigma * Q;
    const S D2 = s1 * s1 - s1 * sigma * Q;   // the c- and y-table form s1 * D
    const S I0 = s0 * c1 - c0 * s1;          // intercept combination
    const S G = c1 * (g3 - s3) - c3 * s1 + g3 * s1 - s1;
    const S H = c1 * (g4 - s4) + s1 * c4 + s1 * g4;
    const S Gc = c1 * (g3 - s3) - c3 * s1;
    const S Hc = c1 * (g4 - s4) + s1 * c4;
    const S dc = c1 - s1;
    const S cs = c1 + s1;
    const S ry2 = ry * ry, ry3 = ry2 * ry;
    const S one_ry = S(1) - ry;
    rf.D = D;
    rf.taylor_den = S(1) - ap * beta;

    // Actual interest rate.
    auto& r = rf[Var::r];
    r(0) = sigma * I0 / D;
    r(1) = -(sigma * g1 * ry3 * cs) / (one_ry * D);
    r(2) = -(sigma * g1 * ry2 * cs) / (one_ry * D);
    r(3) = sigma * rg * G / D;
    r(4) = sigma * G / D;
    r(5) = sigma * rt * H / D;
    r(6) = sigma * H / D;
    r(7) = -(sigma * rx * dc * (g5 - f2)) / D;
    r(8) = -(sigma * dc * (g5 - f2)) / D;
    r(9) = sigma * f1 * dc / D;
    r(10) = sigma * f3 * dc / D;

    // Actual output.
    auto& y = rf[Var::y];
    y(0) = -I0 / D;
    y(1) = g1 * ry3 * cs / (one_ry * D);
    y(2) = g1 * ry2 * cs / (one_ry * D);
    y(3) = -(rg * c1 * (g3 - s3) - rg * c3 * s1 + rg * g3 * s1 - rg * s1) / D;
    y(4) = -G / D;
    y(5) = -(rt * c1 * (g4 - s4) + rt * s1 * c4 + rt * s1 * g4) / D;
    y(6) = -H / D;
    y(7) = ((sigma * rx * dc * (g5 - f2)) * Q + g5 * rx * dc * D - f2 * rx * dc * D) / D2;
    y(8) = ((sigma * dc * (g5 - f2)) * Q + g5 * dc * D - f2 * dc * D) / D2;
    y(9) = -(f1 * dc) / D;
    y(10) = -(f3 * dc) / D;

    // Output gap.
    auto& yh = rf[Var::yhat];
    yh = y;
    yh(1) = y(1) - ry2;
    yh(2) = y(2) - ry;

    // Expected output gap. Entry 0 is transcribed as printed (rho z_1),
    // although the pattern of the Eu table suggests z_0; see the errata audit.
    auto& eyh = rf[Var::Eyhat];
    eyh(0) = ry * yh(1);
    eyh(1) = ry * yh(1);
    eyh(2) = yh(1);
    eyh(3) = rg * yh(3);
    eyh(4) = yh(3);
    eyh(5) = rt * yh(5);
    eyh(6) = yh(5);
    eyh(7) = rx * yh(7);
    eyh(8) = yh(7);

    // Expected inflation.
    auto& epi = rf[Var::Epi];
    const S M = ap * k + ay + sigma;
    const S den = S(1) - ap * beta;
    epi(0) = y(0) * M / den;
    epi(1) = (y(1) - ry2) * M / den;
    epi(2) = (y(2) - ry) * M / den;
    for (int j = 3; j <= 10; ++j)
        epi(j) = y(j) * M / den;
    epi(11) = -(ap * k + ay) / den;
    epi(12) = re * ap / den;
    epi(13) = ap / den;

    // Actual inflation. Entry 4 is transcribed as printed (k z_5^y).
    auto& pi = rf[Var::pi];
    for (int j = 0; j <= 10; ++j)
        pi(j) = beta * epi(j) + k * y(j);
    pi(4) = beta * epi(4) + k * y(5);
    pi(11) = beta * epi(11) - k;
    pi(12) = beta * epi(12);
    pi(13) = beta * epi(13);

    // Household consumption.
    auto& c = rf[Var::c];
    const S ci = c1 * (g2 + s2);
    c(0) = (s0 * s1 * c1 - s0 * c1 * c1 * sigma * s2 - s0 * sigma * g2 * s1 - c0 * s1 * s1
            + c0 * s1 * c1 * sigma * s2 + c0 * sigma * g2 * s1 * s1)
           / D2;
    c(1) = (sigma * c1 * g1 * ry3 * cs * (g2 + s2) + g1 * c1 * ry3 * D) / (s1 * one_ry * D);
    c(2) = (sigma * c1 * g1 * ry2 * cs * (g2 + s2) + g1 * c1 * ry2 * D) / (s1 * one_ry * D);
    c(3) = (sigma * ci * rg * G + rg * Gc * D) / D2;
    c(4) = (sigma * ci * G + D * Gc) / D2;
    c(5) = (sigma * ci * rt * H + rt * Hc * D) / D2;
    c(6) = (sigma * ci * H + Hc * D) / D2;
    c(7) = (sigma * rx * ci * dc * (g5 - f2) - rx * (f2 * dc - c1 * g5) * D) / D2;
    c(8) = (sigma * ci * dc * (g5 - f2) + (c1 * g5 - f2 * dc) * D) / D2;
    c(9) = (sigma * f1 * ci * dc + f1 * dc * D) / D2;
    c(10) = (sigma * f3 * ci * dc + f3 * dc * D) / D2;

    // Investment.
    auto& inv = rf[Var::I];
    inv(0) = sigma * g2 * I0 / D;
    inv(1) = (g1 * ry3 * D + sigma * g1 * g2 * ry3 * cs) / (one_ry * D);
    inv(2) = (g1 * ry2 * D + sigma * g1 * g2 * ry2 * cs) / (one_ry * D);
    inv(3) = (g2 * (sigma * rg * G) + g3 * rg * D) / D;
    inv(4) = (sigma * g2 * G + g3 * D) / D;
    inv(5) = (sigma * g2 * rt * H + g4 * rt * D) / D;
    inv(6) = (sigma * g2 * H + g4 * D) / D;
    inv(7) = (sigma * g2 * rx * dc * (g5 - f2) + g5 * rx * D) / D;
    inv(8) = (sigma * g2 * dc * (g5 - f2) + g5 * D) / D;
    inv(9) = sigma * g2 * f1 * dc / D;
    inv(10) = sigma * g2 * f3 * dc / D;

    // Policy rate. The output gap carries -1 on the current potential-output
    // innovation (entry 11) and nothing on the cost-push terms.
    auto& i = rf[Var::i];
    for (int j = 0; j <= 13; ++j) {
        const S gap = j <= 10 ? yh(j) : (j == 11 ? S(-1) : S(0));
        i(j) = ap * pi(j) + ay * gap;
    }

    // Unemployment.
    auto& u = rf[Var::u];
    u(0) = -theta * y(0);
    u(1) = -theta * (y(1) - ry2);
    u(2) = -theta * (y(2) - ry);
    for (int j = 3; j <= 10; ++j)
        u(j) = -theta * y(j);
    u(11) = theta;
    u(12) = ru;

    // Expected unemployment.
    auto& eu = rf[Var::Eu];
    eu(0) = u(0);
    eu(1) = ry * u(1);
    eu(2) = u(1);
    eu(3) = rg * u(3);
    eu(4) = u(3);
    eu(5) = rt * u(5);
    eu(6) = u(5);
    eu(7) = rx * u(7);
    eu(8) = u(7);
    eu(9) = ru * u(12);
    eu(10) = u(12);

    return rf;
}

inline ReducedForm compute_all(const StructuralParams& p)
{
    return compute_all<double>(p);
}

// Steady-state values z_0^j of r, y, yhat, pi, c, I, i, u.
std::map<std::string, double> steady_state(const ReducedForm& rf);

// Copy with every intercept z_0 set to zero: responses in deviations from
// the steady state.
ReducedForm deviation_form(const ReducedForm& rf);

}  // namespace nkji
