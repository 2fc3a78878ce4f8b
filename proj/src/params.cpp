#include "nkji/params.hpp"

#include "nkji/errors.hpp"

#include <json.hpp>

#include <array>
#include <cmath>
#include <fstream>

namespace nkji {

namespace {

using P = StructuralParams;
constexpr auto S = FieldKind::Structural;
constexpr auto R = FieldKind::Persistence;
constexpr auto V = FieldKind::Scale;

const std::array<FieldInfo, 38> field_table{{
    {"sigma", &P::sigma, S},
    {"theta", &P::theta, S},
    {"beta", &P::beta, S},
    {"k", &P::k, S},
    {"alpha_pi", &P::alpha_pi, S},
    {"alpha_y", &P::alpha_y, S},
    {"c0", &P::c0, S},
    {"c1", &P::c1, S},
    {"c3", &P::c3, S},
    {"c4", &P::c4, S},
    {"s0", &P::s0, S},
    {"s1", &P::s1, S},
    {"s2", &P::s2, S},
    {"s3", &P::s3, S},
    {"s4", &P::s4, S},
    {"gamma1", &P::gamma1, S},
    {"gamma2", &P::gamma2, S},
    {"gamma3", &P::gamma3, S},
    {"gamma4", &P::gamma4, S},
    {"gamma5", &P::gamma5, S},
    {"phi1", &P::phi1, S},
    {"phi2", &P::phi2, S},
    {"phi3", &P::phi3, S},
    {"rho_chi", &P::rho_chi, R},
    {"rho_ybar", &P::rho_ybar, R},
    {"rho_g", &P::rho_g, R},
    {"rho_tax", &P::rho_tax, R},
    {"rho_eps", &P::rho_eps, R},
    {"rho_u", &P::rho_u, R},
    {"sd_omega", &P::sd_omega, V},
    {"sd_eta_g", &P::sd_eta_g, V},
    {"sd_taxshock", &P::sd_taxshock, V},
    {"sd_lambda", &P::sd_lambda, V},
    {"sd_xi", &P::sd_xi, V},
    {"sd_v", &P::sd_v, V},
    {"sd_costpush", &P::sd_costpush, V},
    {"sd_natu", &P::sd_natu, V},
    {"sd_noise", &P::sd_noise, V},
}};

}  // namespace

std::span<const FieldInfo> fields()
{
    return {field_table.data(), field_table.size()};
}

const FieldInfo* find_field(const std::string& name)
{
    for (const auto& f : field_table)
        if (name == f.name)
            return &f;
    return nullptr;
}

StructuralParams defaults()
{
    return StructuralParams{};
}

ParamMap to_map(const StructuralParams& p)
{
    ParamMap m;
    for (const auto& f : field_table)
        m[f.name] = p.*(f.member);
    return m;
}

void set_param(StructuralParams& p, const std::string& name, double value)
{
    const FieldInfo* f = find_field(name);
    if (!f)
        throw ValidationError({{ViolationKind::UnknownParameter, name, "not a parameter name"}});
    p.*(f->member) = value;
}

double get_param(const StructuralParams& p, const std::string& name)
{
    const FieldInfo* f = find_field(name);
    if (!f)
        throw ValidationError({{ViolationKind::UnknownParameter, name, "not a parameter name"}});
    return p.*(f->member);
}

double denominator_D(const StructuralParams& p)
{
    return p.s1 - p.sigma * (p.c1 * (p.gamma2 + p.s2) + p.gamma2 * p.s1);
}

StructuralParams validate(const StructuralParams& p)
{
    std::vector<Violation> bad;
    for (const auto& f : field_table) {
        const double x = p.*(f.member);
        if (!std::isfinite(x)) {
            bad.push_back({ViolationKind::OutOfDomain, f.name, "not finite"});
            continue;
        }
        if (f.kind == FieldKind::Persistence && !(std::abs(x) < 1.0))
            bad.push_back({ViolationKind::NonStationary, f.name, "|rho| must be < 1"});
        if (f.kind == FieldKind::Scale && x < 0.0)
            bad.push_back({ViolationKind::NegativeScale, f.name, "standard deviation must be >= 0"});
    }
    auto domain = [&](const char* name, double x, bool ok, const char* rule) {
        if (std::isfinite(x) && !ok)
            bad.push_back({ViolationKind::OutOfDomain, name, rule});
    };
    domain("sigma", p.sigma, p.sigma > 0.0, "must be > 0");
    domain("theta", p.theta, p.theta >= 0.0, "must be >= 0");
    domain("beta", p.beta, p.beta > 0.0 && p.beta < 1.0, "must lie in (0,1)");
    domain("k", p.k, p.k >= 0.0, "must be >= 0");

    // Denominators only make sense once the inputs are finite.
    if (bad.empty()) {
        const double D = denominator_D(p);
        if (!(std::abs(D) > eps_sing))
            bad.push_back({ViolationKind::SingularDenominator, "D",
                           "s1 - sigma[c1(gamma2+s2) + gamma2 s1] = " + std::to_string(D)});
        if (!(std::abs(p.s1) > eps_sing))
            bad.push_back({ViolationKind::SingularDenominator, "s1", "s1 multiplies D in the c and y tables"});
        const double taylor = 1.0 - p.alpha_pi * p.beta;
        if (!(std::abs(taylor) > eps_sing))
            bad.push_back({ViolationKind::SingularDenominator, "1-alpha_pi*beta",
                           "1 - alpha_pi*beta = " + std::to_string(taylor)});
    }
    if (!bad.empty())
        throw ValidationError(std::move(bad));
    return p;
}

StructuralParams validate(const ParamMap& raw, std::vector<std::string>* filled)
{
    std::vector<Violation> unknown;
    for (const auto& [name, value] : raw)
        if (!find_field(name))
            unknown.push_back({ViolationKind::UnknownParameter, name, "not a parameter name"});
    if (!unknown.empty())
        throw ValidationError(std::move(unknown));

    StructuralParams p = defaults();
    for (const auto& f : field_table) {
        auto it = raw.find(f.name);
        if (it != raw.end())
            p.*(f.member) = it->second;
        else if (filled)
            filled->push_back(f.name);
    }
    return validate(p);
}

ParamMap load_calibration(const std::string& path)
{
    std::ifstream in(path);
    if (!in)
        throw Error("cannot open calibration file: " + path);
    nlohmann::json doc;
    try {
        in >> doc;
    } catch (const nlohmann::json::exception& e) {
        throw Error("calibration file " + path + ": " + e.what());
    }
    if (!doc.is_object())
        throw Error("calibration file " + path + ": expected a JSON object");
    ParamMap m;
    for (const auto& [key, value] : doc.items()) {
        if (!value.is_number())
            throw ValidationError({{ViolationKind::OutOfDomain, key, "value must be a number"}});
        m[key] = value.get<double>();
    }
    return m;
}

void apply_override(ParamMap& raw, const std::string& assignment)
{
    const auto eq = assignment.find('=');
    if (eq == std::string::npos || eq == 0)
        throw Error("parameter override must look like name=value: " + assignment);
    const std::string name = assignment.substr(0, eq);
    const std::string text = assignment.substr(eq + 1);
    std::size_t used = 0;
    double value = 0.0;
    try {
        value = std::stod(text, &used);
    } catch (const std::exception&) {
        used = 0;
    }
    if (used == 0 || used != text.size())
        throw Error("parameter override has a non-numeric value: " + assignment);
    raw[name] = value;
}

StructuralParams random_params(std::mt19937_64& rng, const StructuralParams& base)
{
    auto U = [&](double lo, double hi) { return std::uniform_real_distribution<double>(lo, hi)(rng); };
    for (;;) {
        StructuralParams p = base;
        p.sigma = U(0.5, 3.0);
        p.beta = U(0.9, 0.999);
        p.k = U(0.05, 0.5);
        p.theta = U(0.2, 1.0);
        p.alpha_pi = U(1.2, 3.0);
        p.alpha_y = U(0.0, 1.0);
        p.c0 = U(-1.0, 1.0);
        p.c1 = U(0.2, 0.9);
        p.c3 = U(0.0, 0.5);
        p.c4 = U(0.0, 0.5);
        p.s0 = U(-1.0, 1.0);
        p.s1 = U(0.1, 0.6);
        p.s2 = U(0.0, 0.5);
        p.s3 = U(0.0, 0.5);
        p.s4 = U(0.0, 0.5);
        p.gamma1 = U(0.0, 0.5);
        p.gamma2 = U(0.1, 1.0);
        p.gamma3 = U(0.0, 0.5);
        p.gamma4 = U(0.0, 0.5);
        p.gamma5 = U(0.0, 0.5);
        p.phi1 = U(0.5, 1.5);
        p.phi2 = U(0.5, 1.5);
        p.phi3 = U(0.5, 1.5);
        p.rho_chi = U(0.0, 0.9);
        p.rho_ybar = U(0.0, 0.9);
        p.rho_g = U(0.0, 0.9);
        p.rho_tax = U(0.0, 0.9);
        p.rho_eps = U(0.0, 0.9);
        p.rho_u = U(0.0, 0.9);
        if (std::abs(denominator_D(p)) < 0.05)
            continue;
        if (std::abs(1.0 - p.alpha_pi * p.beta) < 0.05)
            continue;
        return validate(p);
    }
}

}  // namespace nkji
