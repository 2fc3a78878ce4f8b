#include "nkji/sim.hpp"

#include "nkji/errors.hpp"

#include <cmath>
#include <limits>
#include <random>

namespace nkji {

std::string_view budget_name(BudgetMode m)
{
    return m == BudgetMode::balanced ? "balanced" : "independent";
}

BudgetMode budget_from_name(std::string_view name)
{
    if (name == "independent")
        return BudgetMode::independent;
    if (name == "balanced")
        return BudgetMode::balanced;
    throw Error("unknown budget mode: " + std::string(name));
}

ShockPath balance_budget(const ShockPath& path)
{
    const auto& p = path.params;
    if (p.rho_g != p.rho_tax)
        throw BudgetModeConflict(p.rho_g, p.rho_tax);
    ShockPath out = path;
    out[ShockKind::taxshock] = path[ShockKind::eta];
    out.tax = path.g;
    out.initial.tax_l1 = path.initial.g_l1;
    return out;
}

EquilibriumPath simulate(const ReducedForm& rf, const ShockPath& input, BudgetMode mode)
{
    EquilibriumPath out;
    out.mode = mode;
    out.shocks = mode == BudgetMode::balanced ? balance_budget(input) : input;
    const ShockPath& s = out.shocks;
    const int T = s.T;
    out.T = T;

    Eigen::MatrixXd X(T, n_reg);
    for (int t = 0; t < T; ++t)
        X.row(t) = s.regressors(t).transpose();

    out.r = X * rf.loadings(Var::r);
    out.y = X * rf.loadings(Var::y);
    out.yhat = X * rf.loadings(Var::yhat);
    out.pi = X * rf.loadings(Var::pi);
    out.c = X * rf.loadings(Var::c);
    out.I = X * rf.loadings(Var::I);
    out.i = X * rf.loadings(Var::i);
    out.u = X * rf.loadings(Var::u);
    out.Eyhat = X * rf.loadings(Var::Eyhat);
    out.Epi = X * rf.loadings(Var::Epi);
    out.Eu = X * rf.loadings(Var::Eu);

    // Job insecurity: the Eu block without its intercept.
    auto ji = rf.loadings(Var::Eu);
    ji(R_const) = 0.0;
    out.JI = X * ji;

    // Output expectation from current state levels.
    const auto& y = rf[Var::y];
    out.Ey.resize(T);
    for (int t = 0; t < T; ++t)
        out.Ey(t) = y(0) + y(1) * s.ybar_at(t - 1) + y(3) * s.g(t) + y(5) * s.tax(t) + y(7) * s.chi(t);

    out.fe.resize(T);
    for (int t = 0; t + 1 < T; ++t)
        out.fe(t) = out.y(t + 1) - out.Ey(t);
    out.fe(T - 1) = std::numeric_limits<double>::quiet_NaN();
    return out;
}

State state_at(const ShockPath& path, int t)
{
    const auto x = path.regressors(t);
    State s;
    for (int r = 0; r < n_reg; ++r)
        s[r] = x(r);
    return s;
}

namespace {

double need(const State& s, int reg)
{
    if (!s[reg])
        throw MissingState(std::string(reg_name(reg)));
    return *s[reg];
}

// Block evaluation skipping the intercept; every referenced symbol must be present.
double block_sum(const ReducedForm& rf, Var v, const State& s)
{
    const auto& b = rf[v];
    double acc = 0.0;
    for (int j = 1; j < b.size(); ++j)
        acc += b(j) * need(s, block_reg(v, j));
    return acc;
}

}  // namespace

Expectations expectations(const ReducedForm& rf, const State& s)
{
    const auto& p = rf.params;
    const auto& y = rf[Var::y];
    const double ybar_l1 = p.rho_ybar * need(s, R_ybar_l2) + need(s, R_omega_l1);
    const double g = p.rho_g * need(s, R_g_l1) + need(s, R_eta);
    const double tax = p.rho_tax * need(s, R_tax_l1) + need(s, R_taxshock);
    const double chi = p.rho_chi * need(s, R_chi_l1) + need(s, R_lambda);

    Expectations e;
    e.Ey = y(0) + y(1) * ybar_l1 + y(3) * g + y(5) * tax + y(7) * chi;
    e.Eyhat = rf.z(Var::Eyhat, 0) + block_sum(rf, Var::Eyhat, s);
    e.Epi = rf.z(Var::Epi, 0) + block_sum(rf, Var::Epi, s);
    e.Eu = rf.z(Var::Eu, 0) + block_sum(rf, Var::Eu, s);
    return e;
}

double job_insecurity(const ReducedForm& rf, const State& s)
{
    return block_sum(rf, Var::Eu, s);
}

ForecastErrorStats forecast_error(const EquilibriumPath& path)
{
    if (path.T < 2)
        throw Error("forecast errors need a horizon of at least 2");
    ForecastErrorStats st;
    const int n = path.T - 1;
    st.series = path.fe.head(n);
    st.mean = st.series.mean();
    const Eigen::VectorXd d = st.series.array() - st.mean;
    const double ss = d.squaredNorm();
    st.variance = n > 1 ? ss / (n - 1) : 0.0;
    st.se = std::sqrt(st.variance / n);
    st.lag1_autocorr = ss > 0.0 && n > 1 ? d.head(n - 1).dot(d.tail(n - 1)) / ss : 0.0;
    return st;
}

double forecast_error_variance(const ReducedForm& rf)
{
    const auto& p = rf.params;
    const auto& y = rf[Var::y];
    auto sq = [](double a) { return a * a; };
    return sq(y(2) * p.sd_omega) + sq(y(4) * p.sd_eta_g) + sq(y(6) * p.sd_taxshock) + sq(y(8) * p.sd_lambda)
           + sq(y(9) * p.sd_xi) + sq(y(10) * p.sd_v);
}

const std::vector<std::string>& irf_variables()
{
    static const std::vector<std::string> names{"r",   "y",     "yhat", "pi",  "c",  "I",   "i",
                                                "u",   "Ey",    "Eyhat", "Epi", "Eu", "JI",  "chi",
                                                "ybar", "g",    "tax",  "eps", "ubar", "Psi"};
    return names;
}

double IrfTable::at(int h, std::string_view variable) const
{
    const auto& names = irf_variables();
    for (std::size_t j = 0; j < names.size(); ++j)
        if (names[j] == variable)
            return response(h, static_cast<Eigen::Index>(j));
    throw Error("unknown IRF variable: " + std::string(variable));
}

IrfTable irf(const ReducedForm& rf, ShockKind kind, int H, double size)
{
    if (H < 1)
        throw Error("IRF horizon must be at least 1");
    std::array<Eigen::VectorXd, n_shock> innov;
    for (auto& e : innov)
        e = Eigen::VectorXd::Zero(H);
    innov[static_cast<int>(kind)](0) = size;
    const ShockPath path = accumulate(rf.params, std::move(innov));
    const EquilibriumPath eq = simulate(deviation_form(rf), path);

    IrfTable out;
    out.kind = kind;
    out.H = H;
    out.size = size;
    out.response.resize(H, static_cast<Eigen::Index>(irf_variables().size()));
    const Eigen::VectorXd psi = signal(path, false);
    const std::array<const Eigen::VectorXd*, 20> cols{&eq.r,   &eq.y,     &eq.yhat, &eq.pi,  &eq.c,
                                                      &eq.I,   &eq.i,     &eq.u,    &eq.Ey,  &eq.Eyhat,
                                                      &eq.Epi, &eq.Eu,    &eq.JI,   &path.chi, &path.ybar,
                                                      &path.g, &path.tax, &path.eps, &path.ubar, &psi};
    for (std::size_t j = 0; j < cols.size(); ++j)
        out.response.col(static_cast<Eigen::Index>(j)) = *cols[j];
    return out;
}

const SignalEntry& TransparencyAudit::operator[](Var v) const
{
    for (const auto& e : entries)
        if (e.var == v)
            return e;
    throw Error("variable missing from transparency audit");
}

namespace {

int sign_of(double x)
{
    constexpr double zero_tol = 1e-14;
    if (std::abs(x) <= zero_tol)
        return 0;
    return x > 0 ? 1 : -1;
}

// Index of the lagged-signal and news coefficients; Eu shares the layout.
constexpr int idx_chi = 7;
constexpr int idx_lambda = 8;

}  // namespace

TransparencyAudit transparency_audit(const ReducedForm& rf)
{
    TransparencyAudit a;
    for (Var v : all_vars) {
        SignalEntry e;
        e.var = v;
        e.z7 = rf.z(v, idx_chi);
        e.z8 = rf.z(v, idx_lambda);
        e.sign7 = sign_of(e.z7);
        e.sign8 = sign_of(e.z8);
        e.neutral = e.sign7 == 0 && e.sign8 == 0;
        switch (v) {
        case Var::u:
        case Var::Eu: e.paradox = e.sign8 > 0; break;
        case Var::y:
        case Var::c: e.paradox = e.sign8 < 0; break;
        default: break;
        }
        a.entries.push_back(e);
    }
    return a;
}

std::optional<StructuralParams> paradox_search(std::uint64_t seed, int max_draws, const StructuralParams& base)
{
    std::mt19937_64 rng(seed);
    for (int n = 0; n < max_draws; ++n) {
        const StructuralParams p = random_params(rng, base);
        if (transparency_audit(compute_all(p))[Var::Eu].paradox)
            return p;
    }
    return std::nullopt;
}

}  // namespace nkji
