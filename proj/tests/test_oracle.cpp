#include "nkji/oracle.hpp"

#include <doctest.h>

#include <cmath>

using namespace nkji;

namespace {

StructuralParams with_intercepts()
{
    StructuralParams p = defaults();
    p.c0 = 0.3;
    p.s0 = -0.2;
    return p;
}

}  // namespace

TEST_CASE("oracle solves a well-conditioned system")
{
    const OracleSolution sol = solve_undetermined(with_intercepts());
    CHECK(sol.condition_number > 1.0);
    CHECK(sol.condition_number < 1e12);
    CHECK(sol.max_equation_residual <= 1e-12);
    CHECK(sol.warnings.empty());
    for (Var v : all_vars)
        CHECK(sol.rf[v].allFinite());
}

TEST_CASE("oracle satisfies the Okun family exactly")
{
    std::mt19937_64 rng(21);
    for (int n = 0; n < 20; ++n) {
        const OracleDraw d = oracle_draw(rng);
        const ReducedForm& rf = d.solution.rf;
        const double theta = d.params.theta;
        for (int j = 0; j <= 10; ++j)
            CHECK(coeff_close(rf.z(Var::u, j), -theta * rf.z(Var::yhat, j), 1e-12));
        CHECK(coeff_close(rf.z(Var::u, 11), theta, 1e-12));
        CHECK(coeff_close(rf.z(Var::u, 12), d.params.rho_u, 1e-12));
    }
}

TEST_CASE("gamma1 = 0 removes potential-output lags in the oracle too")
{
    StructuralParams p = with_intercepts();
    p.gamma1 = 0.0;
    const ReducedForm rf = solve_undetermined(p).rf;
    CHECK(std::abs(rf.z(Var::y, 1)) <= 1e-12);
    CHECK(std::abs(rf.z(Var::y, 2)) <= 1e-12);
}

TEST_CASE("oracle passes its own structural audit")
{
    std::mt19937_64 rng(22);
    for (int n = 0; n < 20; ++n) {
        const OracleDraw d = oracle_draw(rng);
        CHECK(structural_audit(d.solution.rf).empty());
    }
}

TEST_CASE("forecast operator propagates the AR laws")
{
    const StructuralParams p = defaults();
    const auto F = forecast_operator(p);
    Loadings chi = Loadings::Zero();
    chi(R_chi_l1) = 1.0;  // next period's lagged signal is chi_t = rho chi_{t-1} + lambda_t
    const Loadings e = F * chi;
    CHECK(e(R_chi_l1) == p.rho_chi);
    CHECK(e(R_lambda) == 1.0);
    Loadings innov = Loadings::Zero();
    innov(R_xi) = 1.0;
    CHECK((F * innov).isZero(0.0));
    Loadings c = Loadings::Zero();
    c(R_const) = 1.0;
    CHECK(F * c == c);
}

TEST_CASE("comparison of the oracle with itself is empty")
{
    const ReducedForm rf = solve_undetermined(with_intercepts()).rf;
    const ErrataReport rep = compare(rf, rf);
    CHECK(rep.entries.empty());
}

TEST_CASE("coefficients depend on structure only, not shock scales")
{
    StructuralParams p = with_intercepts();
    const OracleSolution a = solve_undetermined(p);
    p.sd_omega *= 2;
    p.sd_eta_g *= 2;
    p.sd_taxshock *= 2;
    p.sd_lambda *= 2;
    p.sd_xi *= 2;
    p.sd_v *= 2;
    p.sd_costpush *= 2;
    p.sd_natu *= 2;
    p.sd_noise *= 2;
    const OracleSolution b = solve_undetermined(p);
    for (Var v : all_vars)
        CHECK(a.rf[v] == b.rf[v]);
}

TEST_CASE("oracle paths satisfy every structural equation")
{
    const StructuralParams p = with_intercepts();
    const ReducedForm rf = solve_undetermined(p).rf;
    const ResidualReport rep = residuals(simulate(rf, draw(p, 42, 10000)), p);
    CHECK(rep.all_pass());
    for (const auto& row : rep.rows) {
        CAPTURE(row.name);
        CHECK(row.max_abs <= 1e-9);
    }

    StructuralParams q = p;
    q.rho_tax = q.rho_g;
    const ReducedForm rq = solve_undetermined(q).rf;
    const ResidualReport bal = residuals(simulate(rq, draw(q, 7, 2000), BudgetMode::balanced), q);
    CHECK(bal["budget"].max_abs == 0.0);
    CHECK(bal.all_pass());
}

TEST_CASE("table paths keep the chain-built identities")
{
    const StructuralParams p = with_intercepts();
    const ResidualReport rep = residuals(simulate(compute_all(p), draw(p, 42, 10000)), p, 1e-12);
    CHECK(rep["okun"].pass);
    CHECK(rep["taylor"].pass);
    CHECK(rep["saving_investment"].pass);
}

TEST_CASE("a perturbed output coefficient breaks the resource constraint")
{
    StructuralParams p = with_intercepts();
    p.sd_eta_g = 1.0;  // unit-scale spending so the perturbation is visible
    ReducedForm rf = solve_undetermined(p).rf;
    CHECK(residuals(simulate(rf, draw(p, 3, 1000)), p)["resource"].pass);
    rf[Var::y](3) += 1e-3;
    const ResidualReport rep = residuals(simulate(rf, draw(p, 3, 1000)), p);
    CHECK(rep["resource"].max_abs > 1e-4);
    CHECK_FALSE(rep["resource"].pass);
    CHECK_FALSE(rep.all_pass());
}

TEST_CASE("suspected typo cells receive a verdict")
{
    const StructuralParams p = with_intercepts();
    const ErrataReport rep = compare(compute_all(p), solve_undetermined(p).rf);
    REQUIRE(rep.typos.size() == 2);
    for (const auto& t : rep.typos) {
        CAPTURE(t.label);
        CHECK(t.verdict == "typo");
        CHECK_FALSE(t.printed_consistent);
        CHECK(t.variant_consistent);
        // The replacement cell is still not the structural solution.
        CHECK_FALSE(t.variant_matches_oracle);
    }
    CHECK(rep.contains(Var::Eyhat, 0));
    CHECK(rep.contains(Var::pi, 4));
}

TEST_CASE("errata are structural, not numerical accidents")
{
    const StabilityReport st = errata_stability(123, 10, 1e-8);
    CHECK(st.draws == 10);
    CHECK(st.stable);
    CHECK_FALSE(st.errata.empty());
    CHECK(st.typo_verdicts.size() == 2);
    CHECK(st.max_condition < 1e10);
}

TEST_CASE("coefficient closeness")
{
    CHECK(coeff_close(1.0, 1.0 + 1e-9, 1e-8));
    CHECK_FALSE(coeff_close(1.0, 1.0 + 1e-7, 1e-8));
    CHECK(coeff_close(0.0, 1e-13, 1e-8));
    CHECK_FALSE(coeff_close(0.0, 1e-11, 1e-8));
}
