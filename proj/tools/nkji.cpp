// nkji: command-line front end for the reduced-form, simulation,
// state-space and audit machinery.
//
// Exit status: 0 success, 1 usage or input error, 2 parameter validation
// failure, 3 numerical failure.

#include "nkji/coeffs.hpp"
#include "nkji/errors.hpp"
#include "nkji/io.hpp"
#include "nkji/oracle.hpp"
#include "nkji/params.hpp"
#include "nkji/shocks.hpp"
#include "nkji/sim.hpp"
#include "nkji/statespace.hpp"

#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <memory>

namespace {

using namespace nkji;

struct RunConfig {
    std::string calib;
    std::vector<std::string> overrides;
    std::uint64_t seed = 42;
    int T = 1000;
    int burn = 0;
    std::string budget = "independent";
    int n_pre = -1;
    double tol = 1e-8;
    std::string out;
    std::string format;
    int workers = 1;
    int draws = 0;
    std::string axis1, axis2;
    std::string shock = "lambda";
    int H = 20;
    double size = 1.0;
    bool transparent = true;
    std::string dist = "gaussian";
    double df = 5.0;
};

StructuralParams load_params(const RunConfig& cfg)
{
    ParamMap raw;
    if (!cfg.calib.empty())
        raw = load_calibration(cfg.calib);
    for (const auto& o : cfg.overrides)
        apply_override(raw, o);
    std::vector<std::string> filled;
    StructuralParams p = validate(raw, &filled);
    if (!cfg.calib.empty() && !filled.empty()) {
        std::cerr << "notice: " << filled.size() << " field(s) missing from " << cfg.calib
                  << ", using defaults:";
        for (const auto& f : filled)
            std::cerr << ' ' << f;
        std::cerr << '\n';
    }
    return p;
}

class Output {
public:
    explicit Output(const std::string& path)
    {
        if (!path.empty()) {
            file_ = std::make_unique<std::ofstream>(path);
            if (!*file_)
                throw Error("cannot open output file: " + path);
        }
    }
    std::ostream& stream() { return file_ ? *file_ : std::cout; }

private:
    std::unique_ptr<std::ofstream> file_;
};

DrawOptions draw_options(const RunConfig& cfg)
{
    DrawOptions opt;
    opt.burn = cfg.burn;
    opt.student_df = cfg.df;
    if (cfg.dist == "gaussian")
        opt.dist = Innovation::gaussian;
    else if (cfg.dist == "uniform")
        opt.dist = Innovation::uniform;
    else
        opt.dist = Innovation::student_t;
    return opt;
}

int run_coeffs(const RunConfig& cfg)
{
    const ReducedForm rf = compute_all(load_params(cfg));
    Output out(cfg.out);
    if (cfg.format == "csv")
        write_coeffs_csv(out.stream(), rf);
    else
        out.stream() << coeffs_json(rf).dump(2) << '\n';
    return 0;
}

int run_shocks(const RunConfig& cfg)
{
    const StructuralParams p = load_params(cfg);
    const ShockPath path = draw(p, cfg.seed, cfg.T, draw_options(cfg));
    Output out(cfg.out);
    write_shocks_csv(out.stream(), path, cfg.transparent);
    return 0;
}

int run_simulate(const RunConfig& cfg)
{
    const StructuralParams p = load_params(cfg);
    const BudgetMode mode = budget_from_name(cfg.budget);
    if (mode == BudgetMode::balanced && p.rho_g != p.rho_tax)
        throw BudgetModeConflict(p.rho_g, p.rho_tax);
    const ShockPath path = draw(p, cfg.seed, cfg.T, draw_options(cfg));
    const EquilibriumPath eq = simulate(compute_all(p), path, mode);
    Output out(cfg.out);
    write_path_csv(out.stream(), eq);
    return 0;
}

int run_irf(const RunConfig& cfg)
{
    const ShockKind kind = shock_from_name(cfg.shock);
    const ReducedForm rf = compute_all(load_params(cfg));
    Output out(cfg.out);
    write_irf_csv(out.stream(), irf(rf, kind, cfg.H, cfg.size));
    return 0;
}

int run_transparency(const RunConfig& cfg)
{
    const ReducedForm rf = compute_all(load_params(cfg));
    Output out(cfg.out);
    out.stream() << transparency_json(transparency_audit(rf)).dump(2) << '\n';
    return 0;
}

int run_determinacy(const RunConfig& cfg)
{
    const ReducedForm rf = compute_all(load_params(cfg));
    const DeterminacyReport rep = determinacy(build(rf).A, cfg.tol);
    Output out(cfg.out);
    out.stream() << determinacy_json(rep, cfg.n_pre).dump(2) << '\n';
    return 0;
}

int run_sweep(const RunConfig& cfg)
{
    const StructuralParams base = load_params(cfg);
    const Axis a1 = parse_axis(cfg.axis1);
    const Axis a2 = parse_axis(cfg.axis2);
    const auto grid = sweep(base, a1, a2, cfg.n_pre, cfg.tol, cfg.workers);
    Output out(cfg.out);
    write_sweep_csv(out.stream(), grid);
    return 0;
}

int run_audit(const RunConfig& cfg)
{
    Output out(cfg.out);
    if (cfg.draws > 0) {
        const StabilityReport st = errata_stability(cfg.seed, cfg.draws, cfg.tol);
        nlohmann::json errata = nlohmann::json::array();
        for (const auto& [v, j] : st.errata)
            errata.push_back({{"variable", std::string(var_name(v))}, {"index", j}});
        out.stream() << nlohmann::json{{"draws", st.draws},
                                       {"seed", cfg.seed},
                                       {"stable", st.stable},
                                       {"errata", errata},
                                       {"suspected_typos", st.typo_verdicts},
                                       {"max_condition_number", st.max_condition}}
                            .dump(2)
                     << '\n';
        return 0;
    }

    const StructuralParams p = load_params(cfg);
    const BudgetMode mode = budget_from_name(cfg.budget);
    const ReducedForm tables = compute_all(p);
    const OracleSolution sol = solve_undetermined(p);
    ErrataReport er = compare(tables, sol.rf, cfg.tol);
    er.condition_number = sol.condition_number;
    er.warnings = sol.warnings;
    for (const auto& w : sol.warnings)
        std::cerr << "warning: " << w << '\n';

    const ShockPath path = draw(p, cfg.seed, cfg.T, draw_options(cfg));
    const ResidualReport res_oracle = residuals(simulate(sol.rf, path, mode), p);
    const ResidualReport res_tables = residuals(simulate(tables, path, mode), p);

    nlohmann::json audit = nlohmann::json::array();
    for (const auto& a : structural_audit(tables))
        audit.push_back({{"relation", a.relation}, {"regressor", std::string(reg_name(a.reg))}, {"residual", a.residual}});

    nlohmann::json doc = errata_json(er);
    doc["condition_number"] = sol.condition_number;
    doc["tol"] = cfg.tol;
    doc["table_structural_audit"] = audit;
    doc["residuals"] = {{"oracle", residuals_json(res_oracle)}, {"tables", residuals_json(res_tables)}};
    out.stream() << doc.dump(2) << '\n';
    return 0;
}

void add_common(CLI::App* sub, RunConfig& cfg)
{
    sub->add_option("--calib", cfg.calib, "calibration JSON (flat name -> number)");
    sub->add_option("--param", cfg.overrides, "override NAME=VALUE (repeatable)");
    sub->add_option("--out", cfg.out, "output path (default: standard output)");
}

void add_draw(CLI::App* sub, RunConfig& cfg)
{
    sub->add_option("--seed", cfg.seed, "root seed")->capture_default_str();
    sub->add_option("--T", cfg.T, "horizon")->check(CLI::PositiveNumber)->capture_default_str();
    sub->add_option("--burn", cfg.burn, "burn-in periods discarded")->check(CLI::NonNegativeNumber)->capture_default_str();
    sub->add_option("--dist", cfg.dist, "innovation distribution")
        ->check(CLI::IsMember({"gaussian", "uniform", "student_t"}))
        ->capture_default_str();
    sub->add_option("--df", cfg.df, "student_t degrees of freedom (> 2)")->capture_default_str();
}

}  // namespace

int main(int argc, char** argv)
{
    CLI::App app{"Reduced-form solution, simulation and determinacy analysis of a New Keynesian model "
                 "with job insecurity"};
    app.require_subcommand(1);
    RunConfig cfg;

    auto* coeffs = app.add_subcommand("coeffs", "evaluate every reduced-form coefficient");
    add_common(coeffs, cfg);
    coeffs->add_option("--format", cfg.format, "json or csv")->check(CLI::IsMember({"json", "csv"}))->default_str("json");

    auto* shocks = app.add_subcommand("shocks", "draw exogenous innovations and AR(1) states (CSV)");
    add_common(shocks, cfg);
    add_draw(shocks, cfg);
    shocks->add_option("--transparent", cfg.transparent, "signal equals chi (true) or chi + Xi (false)")
        ->capture_default_str();

    auto* simulate_cmd = app.add_subcommand("simulate", "simulate an equilibrium path (CSV)");
    add_common(simulate_cmd, cfg);
    add_draw(simulate_cmd, cfg);
    simulate_cmd->add_option("--budget", cfg.budget, "fiscal mode")
        ->check(CLI::IsMember({"independent", "balanced"}))
        ->capture_default_str();

    auto* irf_cmd = app.add_subcommand("irf", "impulse responses to one innovation (CSV)");
    add_common(irf_cmd, cfg);
    irf_cmd->add_option("--shock", cfg.shock, "omega, eta, L, lambda, xi, v, sigma_cp, T_natu or Xi")
        ->capture_default_str();
    irf_cmd->add_option("--H", cfg.H, "number of periods")->check(CLI::PositiveNumber)->capture_default_str();
    irf_cmd->add_option("--size", cfg.size, "innovation size")->capture_default_str();

    auto* transparency = app.add_subcommand("transparency", "signs of the signal coefficients (JSON)");
    add_common(transparency, cfg);

    auto* det = app.add_subcommand("determinacy", "eigenvalues, characteristic polynomial, verdicts (JSON)");
    add_common(det, cfg);
    det->add_option("--n-pre", cfg.n_pre, "number of predetermined variables")->check(CLI::Range(0, 9));
    det->add_option("--tol", cfg.tol, "borderline band around the unit circle")->capture_default_str();

    auto* sweep_cmd = app.add_subcommand("sweep", "determinacy verdicts over a parameter grid (CSV)");
    add_common(sweep_cmd, cfg);
    sweep_cmd->add_option("--axis1", cfg.axis1, "NAME:LO:HI:N")->required();
    sweep_cmd->add_option("--axis2", cfg.axis2, "NAME:LO:HI:N")->required();
    sweep_cmd->add_option("--n-pre", cfg.n_pre, "number of predetermined variables")
        ->check(CLI::Range(0, 9))
        ->required();
    sweep_cmd->add_option("--tol", cfg.tol, "borderline band around the unit circle")->capture_default_str();
    sweep_cmd->add_option("--workers", cfg.workers, "worker threads")->check(CLI::PositiveNumber)->capture_default_str();

    auto* audit = app.add_subcommand("audit", "compare the tables with the undetermined-coefficients oracle (JSON)");
    add_common(audit, cfg);
    add_draw(audit, cfg);
    audit->add_option("--tol", cfg.tol, "relative tolerance of the comparison")->default_str("1e-6");
    audit->add_option("--draws", cfg.draws, "run the errata stability check over N random draws")
        ->check(CLI::NonNegativeNumber);
    audit->add_option("--budget", cfg.budget, "fiscal mode of the residual path")
        ->check(CLI::IsMember({"independent", "balanced"}))
        ->capture_default_str();

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int rc = app.exit(e);
        return rc == 0 ? 0 : 1;
    }
    if (audit->parsed() && audit->count("--tol") == 0)
        cfg.tol = cfg.draws > 0 ? 1e-8 : 1e-6;

    try {
        if (coeffs->parsed())
            return run_coeffs(cfg);
        if (shocks->parsed())
            return run_shocks(cfg);
        if (simulate_cmd->parsed())
            return run_simulate(cfg);
        if (irf_cmd->parsed())
            return run_irf(cfg);
        if (transparency->parsed())
            return run_transparency(cfg);
        if (det->parsed())
            return run_determinacy(cfg);
        if (sweep_cmd->parsed())
            return run_sweep(cfg);
        if (audit->parsed())
            return run_audit(cfg);
    } catch (const ValidationError& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 2;
    } catch (const BudgetModeConflict& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 2;
    } catch (const NumericalError& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 3;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 1;
    }
    return 1;
}
