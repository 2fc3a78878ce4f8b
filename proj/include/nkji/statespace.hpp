#pragma once

#include "nkji/coeffs.hpp"

#include <Eigen/Dense>

#include <array>
#include <complex>
#include <string>
#include <type_traits>
#include <vector>

namespace nkji {

inline constexpr int n_state = 9;

// Row order of the transition matrix.
inline constexpr std::array<const char*, n_state> state_rows{"r", "y", "yhat", "pi", "c", "I", "i", "u", "Psi"};
// Lag carriers the columns multiply.
inline constexpr std::array<const char*, n_state> state_cols{"ybar_l4", "ybar_l2", "ybar_l3", "g_l4",  "g_l2",
                                                             "g_l3",    "tax_l1",  "chi_l1",  "eps_l1"};
// Innovation carriers of the loading matrix B.
inline constexpr std::array<const char*, 8> input_cols{"omega_l3", "omega_l1", "eta_l3", "eta_l1",
                                                       "eta",      "taxshock", "lambda", "costpush"};

template <typename Scalar>
struct TransitionSystem {
    Eigen::Matrix<Scalar, n_state, n_state> A;
    Eigen::Matrix<Scalar, n_state, 8> B;
    Eigen::Matrix<Scalar, n_state, 1> intercept;
};

// Cell-for-cell transcription of the order-nine transition matrix. Row i
// (policy rate), column 2 is printed with rho_ybar^2 where every other row
// has rho_ybar; the printed form is kept.
template <typename Scalar>
TransitionSystem<Scalar> build(const BasicReducedForm<Scalar>& rf)
{
    using S = Scalar;
    const auto& p = rf.params;
    const S ry = p.rho_ybar, rg = p.rho_g, rt = p.rho_tax, rx = p.rho_chi, re = p.rho_eps;
    const std::array<Var, 8> rows{Var::r, Var::y, Var::yhat, Var::pi, Var::c, Var::I, Var::i, Var::u};

    TransitionSystem<S> sys;
    sys.A.setZero();
    sys.B.setZero();
    sys.intercept.setZero();
    for (int row = 0; row < 8; ++row) {
        const Var v = rows[row];
        const S z1 = rf.z(v, 1), z3 = rf.z(v, 3), z5 = rf.z(v, 5), z7 = rf.z(v, 7);
        sys.A(row, 0) = z1 * ry * ry * ry;
        sys.A(row, 1) = v == Var::i ? z1 * ry * ry : z1 * ry;
        sys.A(row, 2) = -z1 * ry * ry;
        sys.A(row, 3) = z3 * rg * rg * rg * rg;
        sys.A(row, 4) = z3 * rg * rg;
        sys.A(row, 5) = -z3 * rg * rg * rg;
        sys.A(row, 6) = rt * z5;
        sys.A(row, 7) = rx * z7;
        if (v == Var::pi || v == Var::i)
            sys.A(row, 8) = re * rf.z(v, 12);

        sys.B(row, 0) = z1 * ry * ry;
        sys.B(row, 1) = z1;
        sys.B(row, 2) = z3 * rg * rg * rg;
        sys.B(row, 3) = rg * z3;
        sys.B(row, 4) = z3;
        sys.B(row, 5) = z5;
        sys.B(row, 6) = z7;
        if (v == Var::pi || v == Var::i)
            sys.B(row, 7) = rf.z(v, 12);
        sys.intercept(row) = rf.z(v, 0);
    }
    sys.A(8, 7) = rx * rx;
    sys.B(8, 6) = S(1);
    return sys;
}

using EigenValues = Eigen::Matrix<std::complex<double>, n_state, 1>;

// Eigenvalues with a residual check on every eigenpair; throws
// ConvergenceFailure instead of returning NaN.
EigenValues eigen(const Eigen::Matrix<double, n_state, n_state>& A);

// Coefficients k_0..k_9 of det(A - aI) = sum k_i a^i, via the
// Faddeev-LeVerrier trace recursion (independent of the eigensolver). The
// recursion cancels heavily when A is nearly singular, so double input is
// processed in extended precision and rounded once at the end.
template <typename Scalar>
Eigen::Matrix<Scalar, n_state + 1, 1> char_poly(const Eigen::Matrix<Scalar, n_state, n_state>& A)
{
    using W = std::conditional_t<std::is_same_v<Scalar, double>, long double, Scalar>;
    using Mat = Eigen::Matrix<W, n_state, n_state>;
    constexpr int n = n_state;
    const Mat Aw = A.template cast<W>();
    // c holds det(aI - A) = a^n + c_{n-1} a^{n-1} + ... + c_0.
    Eigen::Matrix<W, n + 1, 1> c;
    c.setZero();
    c(n) = W(1);
    Mat M = Mat::Zero();
    for (int m = 1; m <= n; ++m) {
        M = (Aw * M).eval() + c(n - m + 1) * Mat::Identity();
        c(n - m) = -(Aw * M).trace() / W(m);
    }
    // det(A - aI) = (-1)^n det(aI - A)
    if constexpr (n % 2 != 0)
        c = -c;
    return c.template cast<Scalar>();
}

// Horner evaluation, carried out in extended precision.
std::complex<double> poly_eval(const Eigen::Matrix<double, n_state + 1, 1>& k, std::complex<double> a);

struct EigenCounts {
    int stable = 0;
    int unstable = 0;
    int borderline = 0;
};

EigenCounts count_eigs(const EigenValues& eigs, double tau = 1e-8);

enum class Verdict { determinate, indeterminate, no_equilibrium, borderline, invalid };

std::string_view verdict_name(Verdict v);

// Stable count against n_pre, as the classification rule is stated.
Verdict classify(const EigenValues& eigs, int n_pre, double tau = 1e-8);

// Unstable count against the 9 - n_pre forward-looking variables.
Verdict classify_standard(const EigenValues& eigs, int n_pre, double tau = 1e-8);

struct DeterminacyReport {
    EigenValues eigenvalues;
    Eigen::Matrix<double, n_state + 1, 1> k;
    EigenCounts counts;
    std::array<Verdict, n_state + 1> verdicts{};  // indexed by n_pre
    double tau = 1e-8;
    std::string rule = "stable-count";
};

DeterminacyReport determinacy(const Eigen::Matrix<double, n_state, n_state>& A, double tau = 1e-8);

struct Axis {
    std::string name;
    double lo = 0.0, hi = 0.0;
    int n = 1;
    double value(int j) const;
};

// Parses "name:lo:hi:n".
Axis parse_axis(const std::string& text);

struct SweepCell {
    double a1 = 0.0, a2 = 0.0;
    bool valid = false;
    EigenCounts counts;
    Verdict verdict = Verdict::invalid;
};

// Row-major grid (axis1 outer). Cells failing validation are marked invalid;
// results do not depend on `workers`.
std::vector<SweepCell> sweep(const StructuralParams& base, const Axis& axis1, const Axis& axis2, int n_pre,
                             double tau = 1e-8, int workers = 1);

}  // namespace nkji
