#pragma once

#include <array>
#include <optional>
#include <string_view>

namespace nkji {

// Period-t regressors shared by every reduced-form equation.
enum Reg : int {
    R_const = 0,
    R_ybar_l2,    // potential output, two periods back
    R_omega_l1,   // potential-output innovation, one period back
    R_g_l1,
    R_eta,        // government-spending innovation
    R_tax_l1,
    R_taxshock,   // tax innovation
    R_chi_l1,
    R_lambda,     // news innovation
    R_xi,         // preference shock
    R_v,          // idiosyncratic shock
    R_omega,      // current potential-output innovation
    R_eps_l1,     // cost-push state, one period back
    R_costpush,   // cost-push innovation
    R_ubar_l1,    // natural unemployment, one period back
    R_natu,       // natural-unemployment innovation
};

inline constexpr int n_reg = 16;

std::string_view reg_name(int r);
std::optional<int> reg_from_name(std::string_view name);

// Endogenous variables carrying a reduced-form coefficient block.
enum class Var : int { r, y, yhat, Eyhat, Epi, pi, c, I, i, u, Eu };

inline constexpr int n_var = 11;
inline constexpr std::array<Var, n_var> all_vars{Var::r,  Var::y, Var::yhat, Var::Eyhat, Var::Epi, Var::pi,
                                                 Var::c, Var::I, Var::i,    Var::u,     Var::Eu};

std::string_view var_name(Var v);
std::optional<Var> var_from_name(std::string_view name);

// Number of coefficients z_0 .. z_N in the block of `v`.
int block_size(Var v);

// Regressor multiplied by coefficient `idx` of block `v`.
int block_reg(Var v, int idx);

// Unit loadings that sit outside the coefficient blocks: the output gap
// falls one-for-one with the current potential-output innovation, and
// unemployment moves one-for-one with the natural-rate innovation.
double fixed_loading(Var v, int reg);

}  // namespace nkji
