#include "nkji/oracle.hpp"

#include "nkji/errors.hpp"

#include <algorithm>
#include <cmath>

namespace nkji {

namespace {

using Mat16 = Eigen::Matrix<double, n_reg, n_reg>;

Loadings unit(int reg)
{
    return Loadings::Unit(reg);
}

// Regressor-space representations of the exogenous levels at t.
struct Exogenous {
    Loadings g, tax, chi, ybar, ybar_l1, eps, ubar, X, rbar, eta_c;
};

Exogenous exogenous(const StructuralParams& p)
{
    const double ry = p.rho_ybar;
    Exogenous e;
    e.g = p.rho_g * unit(R_g_l1) + unit(R_eta);
    e.tax = p.rho_tax * unit(R_tax_l1) + unit(R_taxshock);
    e.chi = p.rho_chi * unit(R_chi_l1) + unit(R_lambda);
    e.ybar_l1 = ry * unit(R_ybar_l2) + unit(R_omega_l1);
    e.ybar = ry * e.ybar_l1 + unit(R_omega);
    e.eps = p.rho_eps * unit(R_eps_l1) + unit(R_costpush);
    e.ubar = p.rho_u * unit(R_ubar_l1) + unit(R_natu);
    // Long-run expected growth seen by firms: sum of expected future drifts.
    e.X = ry * ry / (1.0 - ry) * e.ybar_l1;
    // Natural rate: sigma (E_t ybar_{t+1} - ybar_t), with E_t ybar_{t+1} = rho^2 ybar_{t-1}.
    e.rbar = p.sigma * (ry * ry * e.ybar_l1 - e.ybar);
    e.eta_c = p.phi1 * unit(R_xi) + p.phi2 * e.chi + p.phi3 * unit(R_v);
    return e;
}

bool in_shape(Var v, int reg)
{
    for (int j = 0; j < block_size(v); ++j)
        if (block_reg(v, j) == reg)
            return true;
    return false;
}

Var var_of(Unknown u)
{
    switch (u) {
    case Unknown::y: return Var::y;
    case Unknown::yhat: return Var::yhat;
    case Unknown::r: return Var::r;
    case Unknown::c: return Var::c;
    case Unknown::I: return Var::I;
    case Unknown::pi: return Var::pi;
    case Unknown::i: return Var::i;
    case Unknown::Epi: return Var::Epi;
    case Unknown::u: return Var::u;
    case Unknown::Eyhat: return Var::Eyhat;
    case Unknown::Eu: return Var::Eu;
    default: return Var::r;
    }
}

}  // namespace

Mat16 forecast_operator(const StructuralParams& p)
{
    // M maps x_t to E_t x_{t+1}; loadings transform with its transpose.
    Mat16 M = Mat16::Zero();
    M(R_const, R_const) = 1.0;
    M(R_ybar_l2, R_ybar_l2) = p.rho_ybar;
    M(R_ybar_l2, R_omega_l1) = 1.0;
    M(R_g_l1, R_g_l1) = p.rho_g;
    M(R_g_l1, R_eta) = 1.0;
    M(R_tax_l1, R_tax_l1) = p.rho_tax;
    M(R_tax_l1, R_taxshock) = 1.0;
    M(R_chi_l1, R_chi_l1) = p.rho_chi;
    M(R_chi_l1, R_lambda) = 1.0;
    M(R_eps_l1, R_eps_l1) = p.rho_eps;
    M(R_eps_l1, R_costpush) = 1.0;
    M(R_ubar_l1, R_ubar_l1) = p.rho_u;
    M(R_ubar_l1, R_natu) = 1.0;
    return M.transpose();
}

OracleSolution solve_undetermined(const StructuralParams& p)
{
    constexpr int N = n_unknown * n_reg;
    const Exogenous ex = exogenous(p);
    const Mat16 F = forecast_operator(p);
    const Mat16 Id = Mat16::Identity();

    Eigen::MatrixXd A = Eigen::MatrixXd::Zero(N, N);
    Eigen::VectorXd b = Eigen::VectorXd::Zero(N);
    int eq = 0;
    auto add = [&](Unknown u, const Mat16& m) {
        A.block<n_reg, n_reg>(eq * n_reg, static_cast<int>(u) * n_reg) += m;
    };
    auto rhs = [&](const Loadings& v) { b.segment<n_reg>(eq * n_reg) += v; };

    // Consumption: c = c0 + c1 L + c3 g - c4 tax + eta_c, L the long-run income level.
    add(Unknown::c, Id);
    add(Unknown::L, -p.c1 * Id);
    rhs(p.c0 * unit(R_const) + p.c3 * ex.g - p.c4 * ex.tax + ex.eta_c);
    ++eq;
    // Saving.
    add(Unknown::S, Id);
    add(Unknown::L, -p.s1 * Id);
    add(Unknown::r, -p.s2 * Id);
    rhs(p.s0 * unit(R_const) - p.s3 * ex.g - p.s4 * ex.tax + ex.eta_c);
    ++eq;
    // Investment.
    add(Unknown::I, Id);
    add(Unknown::r, p.gamma2 * Id);
    rhs(p.gamma1 * ex.X - p.gamma3 * ex.g - p.gamma4 * ex.tax + p.gamma5 * ex.chi);
    ++eq;
    // Saving equals investment.
    add(Unknown::S, Id);
    add(Unknown::I, -Id);
    ++eq;
    // Resource constraint.
    add(Unknown::y, Id);
    add(Unknown::I, -Id);
    add(Unknown::c, -Id);
    rhs(ex.g);
    ++eq;
    // Output gap.
    add(Unknown::yhat, Id);
    add(Unknown::y, -Id);
    rhs(-ex.ybar);
    ++eq;
    // Expected output gap.
    add(Unknown::Eyhat, Id);
    add(Unknown::yhat, -F);
    ++eq;
    // Dynamic IS curve with the Fisher real rate.
    add(Unknown::yhat, p.sigma * Id);
    add(Unknown::Eyhat, -p.sigma * Id);
    add(Unknown::r, Id);
    rhs(ex.rbar);
    ++eq;
    // Fisher relation.
    add(Unknown::Epi, Id);
    add(Unknown::i, -Id);
    add(Unknown::r, Id);
    ++eq;
    // Phillips curve.
    add(Unknown::pi, Id);
    add(Unknown::Epi, -p.beta * Id);
    add(Unknown::yhat, -p.k * Id);
    rhs(ex.eps);
    ++eq;
    // Taylor rule.
    add(Unknown::i, Id);
    add(Unknown::pi, -p.alpha_pi * Id);
    add(Unknown::yhat, -p.alpha_y * Id);
    ++eq;
    // Okun's law.
    add(Unknown::u, Id);
    add(Unknown::y, p.theta * Id);
    rhs(ex.ubar + p.theta * ex.ybar);
    ++eq;
    // Expected unemployment.
    add(Unknown::Eu, Id);
    add(Unknown::u, -F);
    ++eq;

    Eigen::PartialPivLU<Eigen::MatrixXd> lu(A);
    const double rcond = lu.rcond();
    if (!(rcond > 0.0) || !std::isfinite(rcond))
        throw SingularSystem("matching system is singular (rcond = " + std::to_string(rcond) + ")");
    Eigen::VectorXd x = lu.solve(b);
    x += lu.solve(b - A * x);
    if (!x.allFinite())
        throw SingularSystem("matching system produced non-finite coefficients");

    OracleSolution sol;
    sol.condition_number = 1.0 / rcond;
    if (sol.condition_number > 1e12)
        sol.warnings.push_back("matching system condition number " + std::to_string(sol.condition_number)
                               + " exceeds 1e12");
    sol.max_equation_residual = (A * x - b).cwiseAbs().maxCoeff();
    for (int u = 0; u < n_unknown; ++u)
        sol.full[u] = x.segment<n_reg>(u * n_reg);

    sol.rf.params = p;
    sol.rf.resize_blocks();
    sol.rf.D = denominator_D(p);
    sol.rf.taylor_den = 1.0 - p.alpha_pi * p.beta;
    for (int u = 0; u < n_unknown; ++u) {
        const auto uk = static_cast<Unknown>(u);
        if (uk == Unknown::S || uk == Unknown::L)
            continue;
        const Var v = var_of(uk);
        const Loadings& full = sol.full[u];
        const double scale = 1.0 + full.cwiseAbs().maxCoeff();
        for (int reg = 0; reg < n_reg; ++reg) {
            if (in_shape(v, reg))
                continue;
            if (std::abs(full(reg) - fixed_loading(v, reg)) > 1e-9 * scale)
                throw AnsatzInconsistent("oracle loads " + std::string(var_name(v)) + " on "
                                         + std::string(reg_name(reg)) + " = " + std::to_string(full(reg))
                                         + ", outside the reduced-form shape");
        }
        auto& block = sol.rf[v];
        for (int j = 0; j < block.size(); ++j)
            block(j) = full(block_reg(v, j));
    }
    return sol;
}

const ResidualRow& ResidualReport::operator[](std::string_view name) const
{
    for (const auto& r : rows)
        if (r.name == name)
            return r;
    throw Error("no residual row named " + std::string(name));
}

bool ResidualReport::all_pass() const
{
    return std::all_of(rows.begin(), rows.end(), [](const ResidualRow& r) { return r.supplementary || r.pass; });
}

ResidualReport residuals(const EquilibriumPath& path, const StructuralParams& p, double threshold)
{
    const ShockPath& s = path.shocks;
    const int T = path.T;
    const double ry = p.rho_ybar;

    ResidualReport rep;
    auto push = [&](std::string name, Eigen::VectorXd series, bool supplementary = false) {
        ResidualRow row;
        row.name = std::move(name);
        row.max_abs = T > 0 ? series.cwiseAbs().maxCoeff() : 0.0;
        row.series = std::move(series);
        row.threshold = threshold;
        row.pass = row.max_abs <= threshold;
        row.supplementary = supplementary;
        rep.rows.push_back(std::move(row));
    };

    Eigen::VectorXd is(T), okun(T), phillips(T), taylor(T), si(T), resource(T), invest(T), fisher(T);
    for (int t = 0; t < T; ++t) {
        const double ybar = s.ybar(t);
        const double ybar_l1 = s.ybar_at(t - 1);
        const double rbar = p.sigma * (ry * ry * ybar_l1 - ybar);
        is(t) = path.yhat(t) - path.Eyhat(t) + (path.i(t) - path.Epi(t) - rbar) / p.sigma;
        okun(t) = path.u(t) - s.ubar(t) + p.theta * (path.y(t) - ybar);
        phillips(t) = path.pi(t) - p.beta * path.Epi(t) - p.k * path.yhat(t) - s.eps(t);
        taylor(t) = path.i(t) - p.alpha_pi * path.pi(t) - p.alpha_y * path.yhat(t);
        si(t) = 0.0;  // saving is reported as investment, so the identity holds by construction
        resource(t) = path.y(t) - path.I(t) - path.c(t) - s.g(t);
        const double X = ry * ry * ybar_l1 / (1.0 - ry);
        invest(t) = path.I(t) - (p.gamma1 * X - p.gamma2 * path.r(t) - p.gamma3 * s.g(t) - p.gamma4 * s.tax(t)
                                 + p.gamma5 * s.chi(t));
        fisher(t) = path.r(t) - (path.i(t) - path.Epi(t));
    }
    push("IS", is);
    push("okun", okun);
    push("phillips", phillips);
    push("taylor", taylor);
    push("saving_investment", si);
    push("resource", resource);
    if (path.mode == BudgetMode::balanced)
        push("budget", s.g - s.tax);
    push("investment", invest, true);
    push("fisher", fisher, true);
    return rep;
}

bool ErrataReport::contains(Var v, int index) const
{
    return std::any_of(entries.begin(), entries.end(),
                       [&](const ErrataEntry& e) { return e.var == v && e.index == index; });
}

bool coeff_close(double a, double b, double tol, double abs_floor)
{
    const double d = std::abs(a - b);
    if (d <= abs_floor)
        return true;
    return d <= tol * std::max(std::abs(a), std::abs(b));
}

ErrataReport compare(const ReducedForm& tables, const ReducedForm& oracle, double tol, double abs_floor)
{
    ErrataReport rep;
    for (Var v : all_vars) {
        const auto& a = tables[v];
        const auto& b = oracle[v];
        for (int j = 0; j < a.size(); ++j) {
            if (coeff_close(a(j), b(j), tol, abs_floor))
                continue;
            const double scale = std::max(std::abs(a(j)), std::abs(b(j)));
            rep.entries.push_back({v, j, a(j), b(j), std::abs(a(j) - b(j)) / scale});
        }
    }

    const auto& p = tables.params;
    auto decide = [&](TypoVerdict t) {
        t.printed_consistent = coeff_close(t.printed, t.implied, tol, abs_floor);
        t.variant_consistent = coeff_close(t.variant, t.implied, tol, abs_floor);
        t.variant_matches_oracle = coeff_close(t.variant, t.oracle, tol, abs_floor);
        if (t.variant_consistent && !t.printed_consistent)
            t.verdict = "typo";
        else if (t.printed_consistent && !t.variant_consistent)
            t.verdict = "as printed";
        else
            t.verdict = "undecided";
        rep.typos.push_back(std::move(t));
    };

    {
        // Forecast relation: the intercept of E_t yhat_{t+1} is the intercept of yhat.
        TypoVerdict t;
        t.label = "Eyhat z0 (printed rho_ybar z1^yhat, variant z0^yhat)";
        t.var = Var::Eyhat;
        t.index = 0;
        t.printed = tables.z(Var::Eyhat, 0);
        t.variant = tables.z(Var::yhat, 0);
        t.implied = tables.z(Var::yhat, 0);
        t.oracle = oracle.z(Var::Eyhat, 0);
        decide(t);
    }
    {
        // Phillips relation on the spending innovation: beta z4^Epi + k z4^yhat.
        TypoVerdict t;
        t.label = "pi z4 (printed beta z4^Epi + k z5^y, variant beta z4^Epi + k z4^y)";
        t.var = Var::pi;
        t.index = 4;
        t.printed = tables.z(Var::pi, 4);
        t.variant = p.beta * tables.z(Var::Epi, 4) + p.k * tables.z(Var::y, 4);
        t.implied = p.beta * tables.z(Var::Epi, 4) + p.k * tables.z(Var::yhat, 4);
        t.oracle = oracle.z(Var::pi, 4);
        decide(t);
    }
    return rep;
}

std::vector<StructuralAuditEntry> structural_audit(const ReducedForm& rf, double tol)
{
    const auto& p = rf.params;
    const Exogenous ex = exogenous(p);
    const Mat16 F = forecast_operator(p);
    auto L = [&](Var v) { return rf.loadings(v); };

    const std::vector<std::pair<std::string, Loadings>> relations{
        {"forecast_yhat", L(Var::Eyhat) - F * L(Var::yhat)},
        {"forecast_u", L(Var::Eu) - F * L(Var::u)},
        {"IS", p.sigma * L(Var::yhat) - p.sigma * L(Var::Eyhat) + L(Var::r) - ex.rbar},
        {"fisher", L(Var::Epi) - L(Var::i) + L(Var::r)},
        {"phillips", L(Var::pi) - p.beta * L(Var::Epi) - p.k * L(Var::yhat) - ex.eps},
        {"taylor", L(Var::i) - p.alpha_pi * L(Var::pi) - p.alpha_y * L(Var::yhat)},
        {"okun", L(Var::u) + p.theta * L(Var::y) - ex.ubar - p.theta * ex.ybar},
        {"resource", L(Var::y) - L(Var::I) - L(Var::c) - ex.g},
        {"investment", L(Var::I) + p.gamma2 * L(Var::r) - p.gamma1 * ex.X + p.gamma3 * ex.g + p.gamma4 * ex.tax
                           - p.gamma5 * ex.chi},
    };
    std::vector<StructuralAuditEntry> out;
    for (const auto& [name, res] : relations)
        for (int reg = 0; reg < n_reg; ++reg)
            if (std::abs(res(reg)) > tol)
                out.push_back({name, reg, res(reg)});
    return out;
}

OracleDraw oracle_draw(std::mt19937_64& rng, double max_condition)
{
    for (;;) {
        StructuralParams p = random_params(rng);
        try {
            OracleSolution sol = solve_undetermined(p);
            if (sol.condition_number <= max_condition)
                return {p, std::move(sol)};
        } catch (const SingularSystem&) {
        }
    }
}

StabilityReport errata_stability(std::uint64_t seed, int draws, double tol)
{
    std::mt19937_64 rng(seed);
    StabilityReport rep;
    rep.draws = draws;
    for (int d = 0; d < draws; ++d) {
        OracleDraw od = oracle_draw(rng);
        rep.max_condition = std::max(rep.max_condition, od.solution.condition_number);
        const ErrataReport er = compare(compute_all(od.params), od.solution.rf, tol);
        std::vector<std::pair<Var, int>> ids;
        for (const auto& e : er.entries)
            ids.emplace_back(e.var, e.index);
        std::vector<std::string> verdicts;
        for (const auto& t : er.typos)
            verdicts.push_back(t.label + ": " + t.verdict);
        if (d == 0) {
            rep.errata = ids;
            rep.typo_verdicts = verdicts;
        } else if (ids != rep.errata || verdicts != rep.typo_verdicts) {
            rep.stable = false;
        }
    }
    return rep;
}

}  // namespace nkji
