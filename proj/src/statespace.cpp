#include "nkji/statespace.hpp"

#include "nkji/errors.hpp"

#include <atomic>
#include <cmath>
#include <thread>

namespace nkji {

EigenValues eigen(const Eigen::Matrix<double, n_state, n_state>& A)
{
    if (!A.allFinite())
        throw ConvergenceFailure("transition matrix has non-finite entries");
    Eigen::EigenSolver<Eigen::Matrix<double, n_state, n_state>> es(A, true);
    if (es.info() != Eigen::Success)
        throw ConvergenceFailure("eigensolver did not converge");
    const EigenValues vals = es.eigenvalues();
    const auto vecs = es.eigenvectors();
    if (!vals.allFinite() || !vecs.allFinite())
        throw ConvergenceFailure("eigensolver returned non-finite values");

    const Eigen::Matrix<std::complex<double>, n_state, n_state> Ac = A.cast<std::complex<double>>();
    const double normA = A.norm();
    for (int j = 0; j < n_state; ++j) {
        const auto v = vecs.col(j);
        const double res = (Ac * v - vals(j) * v).norm();
        if (res > 1e-8 * normA * v.norm())
            throw ConvergenceFailure("eigenpair " + std::to_string(j) + " residual " + std::to_string(res)
                                     + " exceeds tolerance");
    }
    return vals;
}

std::complex<double> poly_eval(const Eigen::Matrix<double, n_state + 1, 1>& k, std::complex<double> a)
{
    using C = std::complex<long double>;
    const C x(a.real(), a.imag());
    C acc = static_cast<long double>(k(n_state));
    for (int i = n_state - 1; i >= 0; --i)
        acc = acc * x + static_cast<long double>(k(i));
    return {static_cast<double>(acc.real()), static_cast<double>(acc.imag())};
}

EigenCounts count_eigs(const EigenValues& eigs, double tau)
{
    EigenCounts c;
    for (const auto& a : eigs) {
        const double m = std::abs(a);
        if (m < 1.0 - tau)
            ++c.stable;
        else if (m > 1.0 + tau)
            ++c.unstable;
        else
            ++c.borderline;
    }
    return c;
}

std::string_view verdict_name(Verdict v)
{
    switch (v) {
    case Verdict::determinate: return "determinate";
    case Verdict::indeterminate: return "indeterminate";
    case Verdict::no_equilibrium: return "no_equilibrium";
    case Verdict::borderline: return "borderline";
    case Verdict::invalid: return "invalid";
    }
    return "?";
}

Verdict classify(const EigenValues& eigs, int n_pre, double tau)
{
    const EigenCounts c = count_eigs(eigs, tau);
    if (c.borderline > 0)
        return Verdict::borderline;
    if (c.stable == n_pre)
        return Verdict::determinate;
    return c.stable > n_pre ? Verdict::indeterminate : Verdict::no_equilibrium;
}

Verdict classify_standard(const EigenValues& eigs, int n_pre, double tau)
{
    const EigenCounts c = count_eigs(eigs, tau);
    if (c.borderline > 0)
        return Verdict::borderline;
    const int forward = n_state - n_pre;
    if (c.unstable == forward)
        return Verdict::determinate;
    // Too few explosive roots leaves a continuum of stable paths.
    return c.unstable < forward ? Verdict::indeterminate : Verdict::no_equilibrium;
}

DeterminacyReport determinacy(const Eigen::Matrix<double, n_state, n_state>& A, double tau)
{
    DeterminacyReport rep;
    rep.tau = tau;
    rep.eigenvalues = eigen(A);
    rep.k = char_poly(A);
    rep.counts = count_eigs(rep.eigenvalues, tau);
    for (int n = 0; n <= n_state; ++n)
        rep.verdicts[n] = classify(rep.eigenvalues, n, tau);
    return rep;
}

double Axis::value(int j) const
{
    if (n <= 1)
        return lo;
    return lo + (hi - lo) * static_cast<double>(j) / static_cast<double>(n - 1);
}

Axis parse_axis(const std::string& text)
{
    std::vector<std::string> parts;
    std::size_t start = 0;
    for (;;) {
        const auto pos = text.find(':', start);
        parts.push_back(text.substr(start, pos - start));
        if (pos == std::string::npos)
            break;
        start = pos + 1;
    }
    if (parts.size() != 4)
        throw Error("axis must look like name:lo:hi:n, got " + text);
    Axis a;
    a.name = parts[0];
    try {
        a.lo = std::stod(parts[1]);
        a.hi = std::stod(parts[2]);
        a.n = std::stoi(parts[3]);
    } catch (const std::exception&) {
        throw Error("axis has non-numeric bounds: " + text);
    }
    if (a.n < 1)
        throw Error("axis needs at least one point: " + text);
    return a;
}

std::vector<SweepCell> sweep(const StructuralParams& base, const Axis& axis1, const Axis& axis2, int n_pre,
                             double tau, int workers)
{
    for (const auto* a : {&axis1, &axis2})
        if (!find_field(a->name))
            throw ValidationError({{ViolationKind::UnknownParameter, a->name, "not a parameter name"}});
    if (n_pre < 0 || n_pre > n_state)
        throw Error("n_pre must lie in 0..9");

    const int n1 = axis1.n, n2 = axis2.n;
    std::vector<SweepCell> grid(static_cast<std::size_t>(n1) * n2);

    auto run_cell = [&](int i1, int i2) {
        SweepCell& cell = grid[static_cast<std::size_t>(i1) * n2 + i2];
        cell.a1 = axis1.value(i1);
        cell.a2 = axis2.value(i2);
        StructuralParams p = base;
        set_param(p, axis1.name, cell.a1);
        set_param(p, axis2.name, cell.a2);
        try {
            validate(p);
            const auto sys = build(compute_all(p));
            const EigenValues eigs = eigen(sys.A);
            cell.counts = count_eigs(eigs, tau);
            cell.verdict = classify(eigs, n_pre, tau);
            cell.valid = true;
        } catch (const ValidationError&) {
            cell.valid = false;
        } catch (const NumericalError&) {
            cell.valid = false;
        }
    };

    std::atomic<int> next_row{0};
    auto worker = [&] {
        for (int i1 = next_row++; i1 < n1; i1 = next_row++)
            for (int i2 = 0; i2 < n2; ++i2)
                run_cell(i1, i2);
    };
    const int w = std::max(1, std::min(workers, n1));
    if (w == 1) {
        worker();
    } else {
        std::vector<std::thread> pool;
        for (int j = 0; j < w; ++j)
            pool.emplace_back(worker);
        for (auto& th : pool)
            th.join();
    }
    return grid;
}

}  // namespace nkji
