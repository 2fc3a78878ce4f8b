#include "nkji/coeffs.hpp"

namespace nkji {

std::map<std::string, double> steady_state(const ReducedForm& rf)
{
    std::map<std::string, double> out;
    for (Var v : {Var::r, Var::y, Var::yhat, Var::pi, Var::c, Var::I, Var::i, Var::u})
        out[std::string(var_name(v))] = rf.z(v, 0);
    return out;
}

ReducedForm deviation_form(const ReducedForm& rf)
{
    ReducedForm out = rf;
    for (auto& b : out.blocks)
        b(0) = 0.0;
    return out;
}

}  // namespace nkji
