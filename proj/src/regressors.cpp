#include "nkji/regressors.hpp"

#include <cassert>

namespace nkji {

namespace {

constexpr std::array<std::string_view, n_reg> reg_names{
    "const", "ybar_l2", "omega_l1", "g_l1",  "eta",     "tax_l1",   "taxshock", "chi_l1",
    "lambda", "xi",     "v",        "omega", "eps_l1",  "costpush", "ubar_l1",  "natu"};

constexpr std::array<std::string_view, n_var> var_names{"r",   "y", "yhat", "Eyhat", "Epi", "pi",
                                                        "c",   "I", "i",    "u",     "Eu"};

}  // namespace

std::string_view reg_name(int r)
{
    assert(r >= 0 && r < n_reg);
    return reg_names[r];
}

std::optional<int> reg_from_name(std::string_view name)
{
    for (int r = 0; r < n_reg; ++r)
        if (reg_names[r] == name)
            return r;
    return std::nullopt;
}

std::string_view var_name(Var v)
{
    return var_names[static_cast<int>(v)];
}

std::optional<Var> var_from_name(std::string_view name)
{
    for (Var v : all_vars)
        if (var_name(v) == name)
            return v;
    return std::nullopt;
}

int block_size(Var v)
{
    switch (v) {
    case Var::Eyhat: return 9;
    case Var::Epi:
    case Var::pi:
    case Var::i: return 14;
    case Var::u: return 13;
    default: return 11;
    }
}

int block_reg(Var v, int idx)
{
    assert(idx >= 0 && idx < block_size(v));
    if (v == Var::Eu && idx >= 9)
        return idx == 9 ? R_ubar_l1 : R_natu;
    if (v == Var::u && idx >= 11)
        return idx == 11 ? R_omega : R_ubar_l1;
    return idx;  // beyond 10: omega, eps_l1, costpush
}

double fixed_loading(Var v, int reg)
{
    if (v == Var::yhat && reg == R_omega)
        return -1.0;
    if (v == Var::u && reg == R_natu)
        return 1.0;
    return 0.0;
}

}  // namespace nkji
