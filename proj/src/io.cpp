#include "nkji/io.hpp"

#include <charconv>
#include <cmath>

namespace nkji {

std::string format_number(double x)
{
    if (std::isnan(x))
        return "nan";
    if (std::isinf(x))
        return x > 0 ? "inf" : "-inf";
    char buf[64];
    const auto res = std::to_chars(buf, buf + sizeof buf, x);
    return std::string(buf, res.ptr);
}

void write_csv_header(std::ostream& out, const std::string& schema, const std::vector<std::string>& columns)
{
    out << "# schema: nkji." << schema << '\n';
    for (std::size_t j = 0; j < columns.size(); ++j)
        out << (j ? "," : "") << columns[j];
    out << '\n';
}

void write_coeffs_csv(std::ostream& out, const ReducedForm& rf)
{
    write_csv_header(out, "coeffs/1", {"variable", "index", "value"});
    for (Var v : all_vars) {
        const auto& b = rf[v];
        for (int j = 0; j < b.size(); ++j)
            out << var_name(v) << ',' << j << ',' << format_number(b(j)) << '\n';
    }
}

void write_shocks_csv(std::ostream& out, const ShockPath& s, bool transparent)
{
    write_csv_header(out, "shocks/1",
                     {"t", "omega", "eta", "L", "lambda", "xi", "v", "sigma_cp", "T_natu", "Xi", "chi", "mu",
                      "ybar", "g", "tax", "eps", "ubar", "Psi"});
    const Eigen::VectorXd psi = signal(s, transparent);
    for (int t = 0; t < s.T; ++t) {
        out << t;
        for (ShockKind k : all_shocks)
            out << ',' << format_number(s[k](t));
        for (const Eigen::VectorXd* v : {&s.chi, &s.mu(), &s.ybar, &s.g, &s.tax, &s.eps, &s.ubar, &psi})
            out << ',' << format_number((*v)(t));
        out << '\n';
    }
}

void write_path_csv(std::ostream& out, const EquilibriumPath& p)
{
    write_csv_header(out, "simulate/1",
                     {"t", "r", "y", "yhat", "pi", "c", "I", "i", "u", "Ey", "Eyhat", "Epi", "Eu", "JI", "fe_y"});
    const std::array<const Eigen::VectorXd*, 14> cols{&p.r,  &p.y,     &p.yhat, &p.pi, &p.c,  &p.I,  &p.i,
                                                      &p.u,  &p.Ey,    &p.Eyhat, &p.Epi, &p.Eu, &p.JI, &p.fe};
    for (int t = 0; t < p.T; ++t) {
        out << t;
        for (const auto* c : cols)
            out << ',' << format_number((*c)(t));
        out << '\n';
    }
}

void write_irf_csv(std::ostream& out, const IrfTable& table)
{
    write_csv_header(out, "irf/1", {"h", "variable", "response"});
    const auto& names = irf_variables();
    for (int h = 0; h < table.H; ++h)
        for (std::size_t j = 0; j < names.size(); ++j)
            out << h << ',' << names[j] << ','
                << format_number(table.response(h, static_cast<Eigen::Index>(j))) << '\n';
}

void write_sweep_csv(std::ostream& out, const std::vector<SweepCell>& grid)
{
    write_csv_header(out, "sweep/1", {"axis1", "axis2", "stable", "unstable", "borderline", "verdict"});
    for (const auto& c : grid) {
        out << format_number(c.a1) << ',' << format_number(c.a2) << ',';
        if (c.valid)
            out << c.counts.stable << ',' << c.counts.unstable << ',' << c.counts.borderline << ',';
        else
            out << ",,,";
        out << verdict_name(c.valid ? c.verdict : Verdict::invalid) << '\n';
    }
}

nlohmann::json coeffs_json(const ReducedForm& rf)
{
    nlohmann::json j = nlohmann::json::object();
    for (Var v : all_vars) {
        nlohmann::json block = nlohmann::json::object();
        const auto& b = rf[v];
        for (int i = 0; i < b.size(); ++i)
            block[std::to_string(i)] = b(i);
        j[std::string(var_name(v))] = block;
    }
    return j;
}

nlohmann::json transparency_json(const TransparencyAudit& audit)
{
    nlohmann::json j = nlohmann::json::object();
    for (const auto& e : audit.entries)
        j[std::string(var_name(e.var))] = {{"z7", e.z7},       {"z8", e.z8},           {"sign7", e.sign7},
                                           {"sign8", e.sign8}, {"neutral", e.neutral}, {"paradox", e.paradox}};
    return j;
}

nlohmann::json determinacy_json(const DeterminacyReport& rep, int n_pre)
{
    nlohmann::json eigs = nlohmann::json::array();
    for (const auto& a : rep.eigenvalues)
        eigs.push_back({{"re", a.real()}, {"im", a.imag()}, {"modulus", std::abs(a)}});
    nlohmann::json k = nlohmann::json::array();
    for (int i = 0; i <= n_state; ++i)
        k.push_back(rep.k(i));
    nlohmann::json verdicts = nlohmann::json::object();
    for (int n = 0; n <= n_state; ++n)
        verdicts[std::to_string(n)] = std::string(verdict_name(rep.verdicts[n]));
    nlohmann::json j = {
        {"eigenvalues", eigs},
        {"k", k},
        {"counts",
         {{"stable", rep.counts.stable}, {"unstable", rep.counts.unstable}, {"borderline", rep.counts.borderline}}},
        {"tau", rep.tau},
        {"rule", rep.rule},
        {"verdicts", verdicts},
    };
    if (n_pre >= 0) {
        j["n_pre"] = n_pre;
        j["verdict"] = std::string(verdict_name(rep.verdicts[n_pre]));
    }
    return j;
}

nlohmann::json errata_json(const ErrataReport& rep)
{
    nlohmann::json entries = nlohmann::json::array();
    for (const auto& e : rep.entries)
        entries.push_back({{"variable", std::string(var_name(e.var))},
                           {"index", e.index},
                           {"table", e.table},
                           {"oracle", e.oracle},
                           {"rel_diff", e.rel_diff}});
    nlohmann::json typos = nlohmann::json::array();
    for (const auto& t : rep.typos)
        typos.push_back({{"cell", t.label},
                         {"variable", std::string(var_name(t.var))},
                         {"index", t.index},
                         {"printed", t.printed},
                         {"variant", t.variant},
                         {"structurally_implied", t.implied},
                         {"oracle", t.oracle},
                         {"printed_consistent", t.printed_consistent},
                         {"variant_consistent", t.variant_consistent},
                         {"variant_matches_oracle", t.variant_matches_oracle},
                         {"verdict", t.verdict}});
    return {{"entries", entries}, {"suspected_typos", typos}, {"warnings", rep.warnings}};
}

nlohmann::json residuals_json(const ResidualReport& rep)
{
    nlohmann::json j = nlohmann::json::object();
    for (const auto& r : rep.rows)
        j[r.name] = {{"max_abs", r.max_abs},
                     {"threshold", r.threshold},
                     {"pass", r.pass},
                     {"supplementary", r.supplementary}};
    return j;
}

}  // namespace nkji
