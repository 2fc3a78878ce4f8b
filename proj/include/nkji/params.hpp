#pragma once

#include <cstdint>
#include <map>
#include <random>
#include <span>
#include <string>
#include <vector>

namespace nkji {

inline constexpr double eps_sing = 1e-10;

struct StructuralParams {
    double sigma = 1.0;
    double theta = 0.5;
    double beta = 0.99;
    double k = 0.3;
    double alpha_pi = 1.5;
    double alpha_y = 0.125;

    double c0 = 0.0, c1 = 0.6, c3 = 0.2, c4 = 0.2;
    double s0 = 0.0, s1 = 0.3, s2 = 0.2, s3 = 0.1, s4 = 0.1;
    double gamma1 = 0.5, gamma2 = 0.4, gamma3 = 0.1, gamma4 = 0.1, gamma5 = 0.2;
    double phi1 = 1.0, phi2 = 1.0, phi3 = 1.0;

    double rho_chi = 0.5;
    double rho_ybar = 0.9;
    double rho_g = 0.8;
    double rho_tax = 0.8;
    double rho_eps = 0.7;
    double rho_u = 0.9;

    double sd_omega = 0.01;
    double sd_eta_g = 0.01;
    double sd_taxshock = 0.01;
    double sd_lambda = 0.01;
    double sd_xi = 0.01;
    double sd_v = 0.01;
    double sd_costpush = 0.01;
    double sd_natu = 0.01;
    double sd_noise = 0.01;

    bool operator==(const StructuralParams&) const = default;
};

enum class FieldKind { Structural, Persistence, Scale };

struct FieldInfo {
    const char* name;
    double StructuralParams::*member;
    FieldKind kind;
};

// Every field in declaration order; the calibration schema.
std::span<const FieldInfo> fields();

const FieldInfo* find_field(const std::string& name);

using ParamMap = std::map<std::string, double>;

// Conventional New Keynesian values chosen inside every validity domain.
StructuralParams defaults();

ParamMap to_map(const StructuralParams& p);

// Throws ValidationError(UnknownParameter) for names outside the schema.
void set_param(StructuralParams& p, const std::string& name, double value);
double get_param(const StructuralParams& p, const std::string& name);

// Shared denominator of the real-block tables: s1 - sigma [c1 (g2 + s2) + g2 s1].
double denominator_D(const StructuralParams& p);

// Throws ValidationError listing every violated constraint.
StructuralParams validate(const StructuralParams& p);

// Builds a parameter set from a raw map. Keys absent from `raw` are taken
// from defaults() and reported through `filled` when provided.
StructuralParams validate(const ParamMap& raw, std::vector<std::string>* filled = nullptr);

// Reads a flat JSON object name -> number.
ParamMap load_calibration(const std::string& path);

// "name=value" override syntax used by the CLI.
void apply_override(ParamMap& raw, const std::string& assignment);

// Uniform draw over a documented box of economically sensible values,
// rejecting points close to the table singularities. Shock scales and
// persistences outside the box come from `base`.
StructuralParams random_params(std::mt19937_64& rng, const StructuralParams& base = defaults());

}  // namespace nkji
