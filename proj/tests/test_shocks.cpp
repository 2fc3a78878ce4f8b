#include "nkji/errors.hpp"
#include "nkji/regressors.hpp"
#include "nkji/shocks.hpp"

#include <doctest.h>

#include <cmath>

using namespace nkji;

namespace {

double variance(const Eigen::VectorXd& x)
{
    const double m = x.mean();
    return (x.array() - m).square().sum() / static_cast<double>(x.size() - 1);
}

double lag1(const Eigen::VectorXd& x)
{
    const Eigen::ArrayXd d = x.array() - x.mean();
    const Eigen::Index n = d.size();
    return (d.head(n - 1) * d.tail(n - 1)).sum() / d.square().sum();
}

double corr(const Eigen::VectorXd& a, const Eigen::VectorXd& b)
{
    const Eigen::ArrayXd da = a.array() - a.mean();
    const Eigen::ArrayXd db = b.array() - b.mean();
    return (da * db).sum() / std::sqrt(da.square().sum() * db.square().sum());
}

StructuralParams zero_scales()
{
    StructuralParams p = defaults();
    p.sd_omega = p.sd_eta_g = p.sd_taxshock = p.sd_lambda = p.sd_xi = 0.0;
    p.sd_v = p.sd_costpush = p.sd_natu = p.sd_noise = 0.0;
    return p;
}

}  // namespace

TEST_CASE("names round-trip and unknown kinds throw")
{
    for (ShockKind k : all_shocks)
        CHECK(shock_from_name(shock_name(k)) == k);
    CHECK(shock_from_name("taxshock") == ShockKind::taxshock);
    CHECK(shock_from_name("natu") == ShockKind::natu);
    CHECK_THROWS_AS(shock_from_name("zeta"), UnknownShockKind);
}

TEST_CASE("zero scales and zero lags give identically zero paths")
{
    const ShockPath s = draw(zero_scales(), 1, 500);
    for (ShockKind k : all_shocks)
        CHECK(s[k].isZero(0.0));
    for (const Eigen::VectorXd* v : {&s.chi, &s.ybar, &s.g, &s.tax, &s.eps, &s.ubar})
        CHECK(v->isZero(0.0));
}

TEST_CASE("same seed reproduces the path bit for bit")
{
    const StructuralParams p = defaults();
    const ShockPath a = draw(p, 42, 1000);
    const ShockPath b = draw(p, 42, 1000);
    for (ShockKind k : all_shocks)
        CHECK(a[k] == b[k]);
    CHECK(a.chi == b.chi);
    CHECK(a.ubar == b.ubar);
    const ShockPath c = draw(p, 43, 1000);
    CHECK(a.chi != c.chi);
}

TEST_CASE("substreams are keyed by kind")
{
    // Silencing one kind must not disturb the others.
    StructuralParams p = defaults();
    const ShockPath a = draw(p, 9, 300);
    p.sd_xi = 0.0;
    const ShockPath b = draw(p, 9, 300);
    CHECK(b[ShockKind::xi].isZero(0.0));
    for (ShockKind k : all_shocks)
        if (k != ShockKind::xi)
            CHECK(a[k] == b[k]);
}

TEST_CASE("AR recursions hold exactly")
{
    InitialLags init;
    init.chi_l1 = 0.3;
    init.ybar_l1 = -0.2;
    init.g_l1 = 0.1;
    init.tax_l1 = 0.05;
    init.eps_l1 = -0.4;
    init.ubar_l1 = 0.7;
    DrawOptions opt;
    opt.initial = init;
    const StructuralParams p = defaults();
    const ShockPath s = draw(p, 5, 2000, opt);
    struct Law {
        const Eigen::VectorXd* x;
        double rho;
        ShockKind k;
        double pre;
    };
    const Law laws[] = {
        {&s.chi, p.rho_chi, ShockKind::lambda, init.chi_l1},  {&s.ybar, p.rho_ybar, ShockKind::omega, init.ybar_l1},
        {&s.g, p.rho_g, ShockKind::eta, init.g_l1},           {&s.tax, p.rho_tax, ShockKind::taxshock, init.tax_l1},
        {&s.eps, p.rho_eps, ShockKind::costpush, init.eps_l1}, {&s.ubar, p.rho_u, ShockKind::natu, init.ubar_l1},
    };
    for (const auto& law : laws) {
        double prev = law.pre;
        int mismatches = 0;
        for (int t = 0; t < s.T; ++t) {
            if ((*law.x)(t) != law.rho * prev + s[law.k](t))
                ++mismatches;
            prev = (*law.x)(t);
        }
        CHECK(mismatches == 0);
    }
    CHECK(s.mu() == s.ybar);
}

TEST_CASE("signal variance of chi matches the AR(1) formula")
{
    StructuralParams p = defaults();
    p.sd_lambda = 0.01;
    p.rho_chi = 0.5;
    const ShockPath s = draw(p, 2024, 100000);
    const double target = 0.0001 / (1.0 - 0.25);
    CHECK(std::abs(variance(s.chi) / target - 1.0) <= 0.03);
}

TEST_CASE("lag-1 autocorrelation of AR states is close to rho")
{
    StructuralParams p = defaults();
    p.rho_eps = 0.95;
    p.rho_u = -0.5;
    const ShockPath s = draw(p, 77, 100000);
    CHECK(std::abs(lag1(s.chi) - p.rho_chi) <= 0.02);
    CHECK(std::abs(lag1(s.ybar) - p.rho_ybar) <= 0.02);
    CHECK(std::abs(lag1(s.g) - p.rho_g) <= 0.02);
    CHECK(std::abs(lag1(s.tax) - p.rho_tax) <= 0.02);
    CHECK(std::abs(lag1(s.eps) - p.rho_eps) <= 0.02);
    CHECK(std::abs(lag1(s.ubar) - p.rho_u) <= 0.02);
}

TEST_CASE("innovation streams are pairwise uncorrelated")
{
    const int T = 100000;
    const ShockPath s = draw(defaults(), 31337, T);
    const double bound = 4.0 / std::sqrt(static_cast<double>(T));
    for (int a = 0; a < n_shock; ++a)
        for (int b = a + 1; b < n_shock; ++b) {
            CAPTURE(a);
            CAPTURE(b);
            CHECK(std::abs(corr(s.innov[a], s.innov[b])) <= bound);
        }
}

TEST_CASE("innovations have the configured scale")
{
    StructuralParams p = defaults();
    p.sd_omega = 0.03;
    for (Innovation dist : {Innovation::gaussian, Innovation::uniform, Innovation::student_t}) {
        DrawOptions opt;
        opt.dist = dist;
        opt.student_df = 8.0;
        const ShockPath s = draw(p, 8, 200000, opt);
        CHECK(std::abs(s[ShockKind::omega].mean()) <= 4.0 * 0.03 / std::sqrt(200000.0));
        CHECK(std::abs(variance(s[ShockKind::omega]) / (0.03 * 0.03) - 1.0) <= 0.03);
    }
    DrawOptions bad;
    bad.dist = Innovation::student_t;
    bad.student_df = 2.0;
    CHECK_THROWS(draw(p, 1, 10, bad));
}

TEST_CASE("disclosed signal")
{
    StructuralParams p = defaults();
    p.sd_noise = 0.02;
    const ShockPath s = draw(p, 3, 100000);
    CHECK(signal(s, true) == s.chi);
    const Eigen::VectorXd noisy = signal(s, false);
    CHECK(noisy == s.chi + s[ShockKind::noise]);
    CHECK(std::abs(variance(noisy) / (variance(s.chi) + 0.0004) - 1.0) <= 0.03);

    p.sd_noise = 0.0;
    const ShockPath q = draw(p, 3, 1000);
    CHECK(signal(q, false) == q.chi);
}

TEST_CASE("burn-in discards a prefix and carries the lags")
{
    const StructuralParams p = defaults();
    DrawOptions opt;
    opt.burn = 250;
    const ShockPath burned = draw(p, 12, 1000, opt);
    const ShockPath full = draw(p, 12, 1250);
    CHECK(burned.T == 1000);
    CHECK(burned.chi == full.chi.tail(1000));
    CHECK(burned[ShockKind::omega] == full[ShockKind::omega].tail(1000));
    CHECK(burned.initial.chi_l1 == full.chi(249));
    CHECK(burned.initial.ybar_l2 == full.ybar(248));
    CHECK(burned.initial.omega_l1 == full[ShockKind::omega](249));
    for (int t = 0; t < 1000; ++t)
        CHECK(burned.regressors(t) == full.regressors(t + 250));
}

TEST_CASE("regressor vector reads lags from the initial state")
{
    InitialLags init;
    init.ybar_l1 = 1.0;
    init.ybar_l2 = 2.0;
    init.omega_l1 = 3.0;
    init.g_l1 = 4.0;
    init.tax_l1 = 5.0;
    init.chi_l1 = 6.0;
    init.eps_l1 = 7.0;
    init.ubar_l1 = 8.0;
    DrawOptions opt;
    opt.initial = init;
    const ShockPath s = draw(zero_scales(), 0, 3, opt);
    const auto x0 = s.regressors(0);
    CHECK(x0(R_const) == 1.0);
    CHECK(x0(R_ybar_l2) == 2.0);
    CHECK(x0(R_omega_l1) == 3.0);
    CHECK(x0(R_g_l1) == 4.0);
    CHECK(x0(R_tax_l1) == 5.0);
    CHECK(x0(R_chi_l1) == 6.0);
    CHECK(x0(R_eps_l1) == 7.0);
    CHECK(x0(R_ubar_l1) == 8.0);
    const auto x1 = s.regressors(1);
    CHECK(x1(R_ybar_l2) == 1.0);
    CHECK(x1(R_chi_l1) == defaults().rho_chi * 6.0);
}
