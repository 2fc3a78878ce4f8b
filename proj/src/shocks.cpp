#include "nkji/shocks.hpp"

#include "nkji/errors.hpp"
#include "nkji/regressors.hpp"

#include <cmath>
#include <random>

namespace nkji {

namespace {

constexpr std::array<std::string_view, n_shock> csv_names{"omega", "eta",      "L",      "lambda", "xi",
                                                          "v",     "sigma_cp", "T_natu", "Xi"};
constexpr std::array<std::string_view, n_shock> long_names{"omega", "eta",      "taxshock", "lambda", "xi",
                                                           "v",     "costpush", "natu",     "noise"};

std::mt19937_64 substream(std::uint64_t seed, int kind)
{
    std::seed_seq seq{static_cast<std::uint32_t>(seed), static_cast<std::uint32_t>(seed >> 32),
                      static_cast<std::uint32_t>(kind)};
    return std::mt19937_64(seq);
}

Eigen::VectorXd unit_draws(std::mt19937_64& eng, int n, const DrawOptions& opt)
{
    Eigen::VectorXd x(n);
    switch (opt.dist) {
    case Innovation::gaussian: {
        std::normal_distribution<double> d(0.0, 1.0);
        for (int t = 0; t < n; ++t)
            x(t) = d(eng);
        break;
    }
    case Innovation::uniform: {
        const double a = std::sqrt(3.0);
        std::uniform_real_distribution<double> d(-a, a);
        for (int t = 0; t < n; ++t)
            x(t) = d(eng);
        break;
    }
    case Innovation::student_t: {
        if (!(opt.student_df > 2.0))
            throw Error("student-t innovations need more than 2 degrees of freedom");
        std::student_t_distribution<double> d(opt.student_df);
        const double scale = std::sqrt((opt.student_df - 2.0) / opt.student_df);
        for (int t = 0; t < n; ++t)
            x(t) = d(eng) * scale;
        break;
    }
    }
    return x;
}

// Lag lookup: path value for t >= 0, otherwise the supplied pre-sample value.
double at(const Eigen::VectorXd& v, int t, double pre)
{
    return t >= 0 ? v(t) : pre;
}

}  // namespace

std::string_view shock_name(ShockKind k)
{
    return csv_names[static_cast<int>(k)];
}

ShockKind shock_from_name(std::string_view name)
{
    for (int i = 0; i < n_shock; ++i)
        if (csv_names[i] == name || long_names[i] == name)
            return static_cast<ShockKind>(i);
    throw UnknownShockKind(std::string(name));
}

double shock_sd(const StructuralParams& p, ShockKind k)
{
    switch (k) {
    case ShockKind::omega: return p.sd_omega;
    case ShockKind::eta: return p.sd_eta_g;
    case ShockKind::taxshock: return p.sd_taxshock;
    case ShockKind::lambda: return p.sd_lambda;
    case ShockKind::xi: return p.sd_xi;
    case ShockKind::v: return p.sd_v;
    case ShockKind::costpush: return p.sd_costpush;
    case ShockKind::natu: return p.sd_natu;
    case ShockKind::noise: return p.sd_noise;
    }
    return 0.0;
}

double ShockPath::ybar_at(int t) const
{
    if (t >= 0)
        return ybar(t);
    return t == -1 ? initial.ybar_l1 : initial.ybar_l2;
}

double ShockPath::omega_at(int t) const { return at((*this)[ShockKind::omega], t, initial.omega_l1); }
double ShockPath::g_at(int t) const { return at(g, t, initial.g_l1); }
double ShockPath::tax_at(int t) const { return at(tax, t, initial.tax_l1); }
double ShockPath::chi_at(int t) const { return at(chi, t, initial.chi_l1); }
double ShockPath::eps_at(int t) const { return at(eps, t, initial.eps_l1); }
double ShockPath::ubar_at(int t) const { return at(ubar, t, initial.ubar_l1); }

Eigen::Matrix<double, 16, 1> ShockPath::regressors(int t) const
{
    Eigen::Matrix<double, 16, 1> x;
    x(R_const) = 1.0;
    x(R_ybar_l2) = ybar_at(t - 2);
    x(R_omega_l1) = omega_at(t - 1);
    x(R_g_l1) = g_at(t - 1);
    x(R_eta) = (*this)[ShockKind::eta](t);
    x(R_tax_l1) = tax_at(t - 1);
    x(R_taxshock) = (*this)[ShockKind::taxshock](t);
    x(R_chi_l1) = chi_at(t - 1);
    x(R_lambda) = (*this)[ShockKind::lambda](t);
    x(R_xi) = (*this)[ShockKind::xi](t);
    x(R_v) = (*this)[ShockKind::v](t);
    x(R_omega) = (*this)[ShockKind::omega](t);
    x(R_eps_l1) = eps_at(t - 1);
    x(R_costpush) = (*this)[ShockKind::costpush](t);
    x(R_ubar_l1) = ubar_at(t - 1);
    x(R_natu) = (*this)[ShockKind::natu](t);
    return x;
}

ShockPath accumulate(const StructuralParams& p, std::array<Eigen::VectorXd, n_shock> innov,
                     const InitialLags& initial)
{
    ShockPath s;
    s.T = static_cast<int>(innov[0].size());
    for (const auto& e : innov)
        if (e.size() != s.T)
            throw Error("innovation sequences must share one horizon");
    s.params = p;
    s.innov = std::move(innov);
    s.initial = initial;

    auto ar = [&](double rho, double pre, ShockKind k) {
        const Eigen::VectorXd& e = s[k];
        Eigen::VectorXd x(s.T);
        double prev = pre;
        for (int t = 0; t < s.T; ++t) {
            x(t) = rho * prev + e(t);
            prev = x(t);
        }
        return x;
    };
    s.ybar = ar(p.rho_ybar, initial.ybar_l1, ShockKind::omega);
    s.g = ar(p.rho_g, initial.g_l1, ShockKind::eta);
    s.tax = ar(p.rho_tax, initial.tax_l1, ShockKind::taxshock);
    s.chi = ar(p.rho_chi, initial.chi_l1, ShockKind::lambda);
    s.eps = ar(p.rho_eps, initial.eps_l1, ShockKind::costpush);
    s.ubar = ar(p.rho_u, initial.ubar_l1, ShockKind::natu);
    return s;
}

ShockPath draw(const StructuralParams& p, std::uint64_t seed, int T, const DrawOptions& opt)
{
    if (T < 1)
        throw Error("horizon T must be at least 1");
    if (opt.burn < 0)
        throw Error("burn-in must be non-negative");
    const int B = opt.burn;
    const int n = T + B;

    std::array<Eigen::VectorXd, n_shock> innov;
    for (int k = 0; k < n_shock; ++k) {
        const double sd = shock_sd(p, static_cast<ShockKind>(k));
        if (sd == 0.0) {
            innov[k] = Eigen::VectorXd::Zero(n);
        } else {
            auto eng = substream(seed, k);
            innov[k] = sd * unit_draws(eng, n, opt);
        }
    }
    ShockPath full = accumulate(p, std::move(innov), opt.initial);
    if (B == 0)
        return full;

    // Drop the burn-in and carry the last discarded states as lags.
    InitialLags lags;
    lags.ybar_l1 = full.ybar_at(B - 1);
    lags.ybar_l2 = full.ybar_at(B - 2);
    lags.omega_l1 = full.omega_at(B - 1);
    lags.g_l1 = full.g_at(B - 1);
    lags.tax_l1 = full.tax_at(B - 1);
    lags.chi_l1 = full.chi_at(B - 1);
    lags.eps_l1 = full.eps_at(B - 1);
    lags.ubar_l1 = full.ubar_at(B - 1);

    ShockPath s;
    s.T = T;
    s.params = p;
    s.initial = lags;
    for (int k = 0; k < n_shock; ++k)
        s.innov[k] = full.innov[k].tail(T);
    s.chi = full.chi.tail(T);
    s.ybar = full.ybar.tail(T);
    s.g = full.g.tail(T);
    s.tax = full.tax.tail(T);
    s.eps = full.eps.tail(T);
    s.ubar = full.ubar.tail(T);
    return s;
}

Eigen::VectorXd signal(const ShockPath& path, bool transparent)
{
    if (transparent || path.params.sd_noise == 0.0)
        return path.chi;
    return path.chi + path[ShockKind::noise];
}

}  // namespace nkji
