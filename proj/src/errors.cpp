#include "nkji/errors.hpp"

#include <algorithm>

namespace nkji {

const char* to_string(ViolationKind k)
{
    switch (k) {
    case ViolationKind::NonStationary: return "NonStationary";
    case ViolationKind::SingularDenominator: return "SingularDenominator";
    case ViolationKind::NegativeScale: return "NegativeScale";
    case ViolationKind::OutOfDomain: return "OutOfDomain";
    case ViolationKind::UnknownParameter: return "UnknownParameter";
    }
    return "?";
}

namespace {

std::string join_violations(const std::vector<Violation>& v)
{
    std::string out = "invalid parameters:";
    for (const auto& x : v) {
        out += ' ';
        out += to_string(x.kind);
        out += "(" + x.name + ")";
        if (!x.detail.empty())
            out += " [" + x.detail + "]";
        out += ';';
    }
    return out;
}

}  // namespace

ValidationError::ValidationError(std::vector<Violation> v)
    : Error(join_violations(v)), violations_(std::move(v))
{
}

bool ValidationError::names(const std::string& field) const
{
    return std::any_of(violations_.begin(), violations_.end(),
                       [&](const Violation& x) { return x.name == field; });
}

BudgetModeConflict::BudgetModeConflict(double rho_g, double rho_tax)
    : Error("BudgetModeConflict: balanced budget needs rho_g == rho_tax (got "
            + std::to_string(rho_g) + " vs " + std::to_string(rho_tax) + ")")
{
}

MissingState::MissingState(std::string symbol)
    : Error("MissingState(" + symbol + ")"), symbol_(std::move(symbol))
{
}

UnknownShockKind::UnknownShockKind(const std::string& name)
    : Error("UnknownShockKind(" + name + ")")
{
}

}  // namespace nkji
