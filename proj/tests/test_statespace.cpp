#include "nkji/errors.hpp"
#include "nkji/io.hpp"
#include "nkji/statespace.hpp"

#include <doctest.h>

#include <sstream>

using namespace nkji;

namespace {

using Mat9 = Eigen::Matrix<double, n_state, n_state>;

StructuralParams no_persistence()
{
    StructuralParams p = defaults();
    p.rho_chi = p.rho_ybar = p.rho_g = p.rho_tax = p.rho_eps = p.rho_u = 0.0;
    return p;
}

EigenValues from_moduli(std::initializer_list<double> xs)
{
    EigenValues e;
    int j = 0;
    for (double x : xs)
        e(j++) = x;
    return e;
}

}  // namespace

TEST_CASE("no persistence gives a zero transition matrix")
{
    const auto sys = build(compute_all(no_persistence()));
    CHECK(sys.A.isZero(0.0));
    const EigenValues e = eigen(sys.A);
    CHECK(e.isZero(0.0));
    CHECK(classify(e, 9) == Verdict::determinate);
}

TEST_CASE("signal row and the cost-push column")
{
    std::mt19937_64 rng(4);
    for (int n = 0; n < 50; ++n) {
        const StructuralParams p = random_params(rng);
        const auto A = build(compute_all(p)).A;
        for (int c = 0; c < n_state; ++c)
            CHECK(A(8, c) == (c == 7 ? p.rho_chi * p.rho_chi : 0.0));
        for (int r = 0; r < n_state; ++r)
            if (r != 3 && r != 6)
                CHECK(A(r, 8) == 0.0);
    }
}

TEST_CASE("spot check against an independent transcription")
{
    const StructuralParams p = defaults();
    const ReducedForm rf = compute_all(p);
    const auto A = build(rf).A;
    const double ry = p.rho_ybar, rg = p.rho_g;
    const auto& r = rf[Var::r];
    const auto& pi = rf[Var::pi];
    const auto& i = rf[Var::i];
    const auto& u = rf[Var::u];
    CHECK(A(0, 0) == r(1) * ry * ry * ry);
    CHECK(A(0, 1) == r(1) * ry);
    CHECK(A(0, 2) == -r(1) * ry * ry);
    CHECK(A(0, 3) == r(3) * rg * rg * rg * rg);
    CHECK(A(3, 8) == p.rho_eps * pi(12));
    CHECK(A(6, 1) == i(1) * ry * ry);
    CHECK(A(7, 6) == p.rho_tax * u(5));
    CHECK(A(8, 7) == p.rho_chi * p.rho_chi);
}

TEST_CASE("unemployment row is -theta times the output-gap coefficients")
{
    std::mt19937_64 rng(8);
    for (int n = 0; n < 20; ++n) {
        const StructuralParams p = random_params(rng);
        const ReducedForm rf = compute_all(p);
        const auto A = build(rf).A;
        // Row 3 (yhat) and row 8 (u) share persistence factors.
        for (int c = 0; c < 8; ++c)
            CHECK(A(7, c) == doctest::Approx(-p.theta * A(2, c)).epsilon(1e-14).scale(1.0));
    }
}

TEST_CASE("eigenvalues of simple matrices")
{
    Mat9 D = Mat9::Zero();
    for (int j = 0; j < n_state; ++j)
        D(j, j) = 0.1 * (j + 1);
    EigenValues e = eigen(D);
    std::vector<double> re;
    for (int j = 0; j < n_state; ++j) {
        CHECK(e(j).imag() == 0.0);
        re.push_back(e(j).real());
    }
    std::sort(re.begin(), re.end());
    for (int j = 0; j < n_state; ++j)
        CHECK(re[j] == doctest::Approx(0.1 * (j + 1)).epsilon(1e-14));

    Mat9 bad = Mat9::Zero();
    bad(0, 0) = std::numeric_limits<double>::quiet_NaN();
    CHECK_THROWS_AS(eigen(bad), NumericalError);
}

TEST_CASE("characteristic polynomial")
{
    const auto k0 = char_poly<double>(Mat9::Zero());
    CHECK(k0(9) == -1.0);
    CHECK(k0.head(9).isZero(0.0));

    Mat9 D = Mat9::Zero();
    for (int j = 0; j < n_state; ++j)
        D(j, j) = 0.1 * (j + 1);
    const auto k = char_poly<double>(D);
    CHECK(k(9) == -1.0);
    for (int j = 0; j < n_state; ++j)
        CHECK(std::abs(poly_eval(k, D(j, j))) <= 1e-14);
    CHECK(k(0) == doctest::Approx(D.determinant()).epsilon(1e-12));

    const auto A = build(compute_all(defaults())).A;
    const auto kA = char_poly<double>(A);
    const EigenValues e = eigen(A);
    const double scale = kA.cwiseAbs().maxCoeff();
    for (int j = 0; j < n_state; ++j)
        CHECK(std::abs(poly_eval(kA, e(j))) <= 1e-6 * scale);
    CHECK(kA(9) == -1.0);
}

TEST_CASE("trace and determinant identities at the default calibration")
{
    const auto A = build(compute_all(defaults())).A;
    const EigenValues e = eigen(A);
    const double norm = A.norm();
    CHECK(std::abs(e.sum() - A.trace()) <= 1e-8 * std::max(std::abs(A.trace()), norm));
    // Relative check on the determinant, floored by the Hadamard bound so a
    // numerically singular A is compared on an absolute scale.
    const double hadamard = A.rowwise().norm().prod();
    const double det = A.determinant();
    CHECK(std::abs(e.prod() - det) <= 1e-8 * std::max(std::abs(det), hadamard));
}

TEST_CASE("classification rules")
{
    const EigenValues zeros = EigenValues::Zero();
    CHECK(classify(zeros, 9) == Verdict::determinate);
    CHECK(classify(zeros, 8) == Verdict::indeterminate);

    const EigenValues mixed = from_moduli({0.5, 0.6, 2, 3, 4, 5, 6, 7, 8});
    CHECK(classify(mixed, 1) == Verdict::indeterminate);
    CHECK(classify(mixed, 2) == Verdict::determinate);
    CHECK(classify(mixed, 3) == Verdict::no_equilibrium);

    const EigenValues all_unstable = from_moduli({2, 2, 3, 3, 4, 5, 6, 7, 8});
    CHECK(classify(all_unstable, 1) == Verdict::no_equilibrium);
    CHECK(classify(all_unstable, 0) == Verdict::determinate);

    EigenValues edge = mixed;
    edge(8) = std::polar(1.0 + 1e-10, 0.3);
    CHECK(classify(edge, 2) == Verdict::borderline);
    CHECK(classify_standard(edge, 2) == Verdict::borderline);
    const EigenCounts c = count_eigs(edge);
    CHECK(c.stable == 2);
    CHECK(c.unstable == 6);
    CHECK(c.borderline == 1);

    for (int n = 0; n <= 9; ++n) {
        CHECK(classify(mixed, n) == classify_standard(mixed, n));
        CHECK(classify(all_unstable, n) == classify_standard(all_unstable, n));
    }
}

TEST_CASE("determinacy report")
{
    const auto A = build(compute_all(defaults())).A;
    const DeterminacyReport rep = determinacy(A);
    CHECK(rep.counts.stable + rep.counts.unstable + rep.counts.borderline == 9);
    CHECK(rep.k(9) == -1.0);
    for (int n = 0; n <= 9; ++n)
        CHECK(rep.verdicts[n] == classify(rep.eigenvalues, n));
}

TEST_CASE("axis parsing")
{
    const Axis a = parse_axis("alpha_pi:0.5:2.5:51");
    CHECK(a.name == "alpha_pi");
    CHECK(a.lo == 0.5);
    CHECK(a.hi == 2.5);
    CHECK(a.n == 51);
    CHECK(a.value(0) == 0.5);
    CHECK(a.value(50) == 2.5);
    CHECK_THROWS(parse_axis("alpha_pi:0.5:2.5"));
    CHECK_THROWS(parse_axis("alpha_pi:a:2.5:3"));
    CHECK_THROWS(parse_axis("alpha_pi:0:1:0"));
}

TEST_CASE("sweep over the policy coefficients")
{
    const auto grid =
        sweep(defaults(), parse_axis("alpha_pi:0.5:2.5:51"), parse_axis("alpha_y:0:1:51"), 3, 1e-8, 2);
    CHECK(grid.size() == 51 * 51);
    int invalid = 0;
    for (const auto& c : grid)
        invalid += c.valid ? 0 : 1;
    CHECK(invalid == 0);
    CHECK(grid[51].a1 == grid[0].a1 + 0.04);
    CHECK(grid[1].a2 == 0.02);
}

TEST_CASE("singular cell is isolated")
{
    const Axis s1 = parse_axis("s1:-0.2:0.2:5");
    REQUIRE(s1.value(2) == 0.0);
    const auto grid = sweep(defaults(), s1, parse_axis("k:0.1:0.3:3"), 4);
    for (int j = 0; j < 3; ++j) {
        CHECK_FALSE(grid[2 * 3 + j].valid);
        CHECK(grid[2 * 3 + j].verdict == Verdict::invalid);
        CHECK(grid[1 * 3 + j].valid);
        CHECK(grid[3 * 3 + j].valid);
    }
    CHECK_THROWS_AS(sweep(defaults(), parse_axis("nope:0:1:2"), s1, 4), ValidationError);
}

TEST_CASE("sweep results do not depend on the worker count")
{
    const Axis a = parse_axis("alpha_pi:0.5:2.5:21");
    const Axis b = parse_axis("alpha_y:0:1:17");
    std::ostringstream serial, parallel;
    write_sweep_csv(serial, sweep(defaults(), a, b, 3, 1e-8, 1));
    write_sweep_csv(parallel, sweep(defaults(), a, b, 3, 1e-8, 4));
    CHECK(serial.str() == parallel.str());
}

TEST_CASE("eigenvalues move continuously")
{
    StructuralParams p = defaults();
    const EigenValues e0 = eigen(build(compute_all(p)).A);
    p.alpha_y += 1e-9;
    const EigenValues e1 = eigen(build(compute_all(p)).A);
    for (int j = 0; j < n_state; ++j) {
        double best = std::numeric_limits<double>::infinity();
        for (int m = 0; m < n_state; ++m)
            best = std::min(best, std::abs(e0(j) - e1(m)));
        CHECK(best <= 1e-5);
    }
}
