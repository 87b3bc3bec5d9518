#include "fsind/category_spec.hpp"

#include <stdexcept>

namespace fsind {

const char* family_name(Family f)
{
    switch (f) {
    case Family::NG1:
        return "NG1";
    case Family::NG1X:
        return "NG1X";
    case Family::NG2:
        return "NG2";
    case Family::HI:
        return "HI";
    }
    return "?";
}

Family parse_family(const std::string& name)
{
    if (name == "NG1")
        return Family::NG1;
    if (name == "NG1X")
        return Family::NG1X;
    if (name == "NG2")
        return Family::NG2;
    if (name == "HI")
        return Family::HI;
    throw std::invalid_argument("unknown family '" + name + "' (expected NG1, NG1X, NG2 or HI)");
}

Family CategorySpec::family() const
{
    return static_cast<Family>(params.index());
}

void CategorySpec::validate() const
{
    switch (family()) {
    case Family::NG1: {
        const auto& p = std::get<Ng1Params>(params);
        if (!group.is_cyclic())
            throw std::invalid_argument("NG1: G must be cyclic");
        if (prime_power_exponent(group.order() + 1, p.p) == 0)
            throw std::invalid_argument("NG1: |G| + 1 must be a power of p");
        break;
    }
    case Family::NG1X:
        if (!(group == FiniteAbelianGroup::cyclic(7)))
            throw std::invalid_argument("NG1X: G must be Z/7");
        break;
    case Family::NG2: {
        const auto& p = std::get<Ng2Params>(params);
        if (group.order() % 2 == 0)
            throw std::invalid_argument("NG2: |G| must be odd");
        if (p.group_prime.order() != group.order() + 4)
            throw std::invalid_argument("NG2: |G'| must equal |G| + 4");
        if (!(p.q.group() == group) || !(p.q_prime.group() == p.group_prime))
            throw std::invalid_argument("NG2: forms live on the wrong groups");
        if (!p.q.is_nondegenerate() || !p.q_prime.is_nondegenerate())
            throw std::invalid_argument("NG2: q and q' must be nondegenerate");
        break;
    }
    case Family::HI: {
        const auto& p = std::get<HiParams>(params);
        if (group.order() % 2 == 0)
            throw std::invalid_argument("HI: |G| must be odd");
        if (p.h_group.order() != group.order() * group.order() + 4)
            throw std::invalid_argument("HI: |H| must equal |G|^2 + 4");
        if (!(p.q_hi.group() == p.h_group))
            throw std::invalid_argument("HI: q'' lives on the wrong group");
        if (!p.q_hi.is_nondegenerate())
            throw std::invalid_argument("HI: q'' must be nondegenerate");
        if (p.sign != 1 && p.sign != -1)
            throw std::invalid_argument("HI: sign must be +1 or -1");
        if (p.omega_power < 0 || p.omega_power > 2)
            throw std::invalid_argument("HI: omega power must be 0, 1 or 2");
        break;
    }
    }
}

CategorySpec make_ng1_spec(std::string name, const FiniteAbelianGroup& group, std::int64_t p, QZValue zeta1)
{
    CategorySpec s{std::move(name), group, Ng1Params{p, zeta1}};
    s.validate();
    return s;
}

CategorySpec make_ng1x_spec(std::string name)
{
    return {std::move(name), FiniteAbelianGroup::cyclic(7), Ng1xParams{}};
}

CategorySpec make_ng2_spec(std::string name, const QuadraticForm& q, const QuadraticForm& q_prime,
                           std::string b_label, std::string c_label)
{
    CategorySpec s{std::move(name), q.group(),
                   Ng2Params{q, q_prime.group(), q_prime, std::move(b_label), std::move(c_label)}};
    s.validate();
    return s;
}

CategorySpec make_hi_spec(std::string name, const FiniteAbelianGroup& group, const QuadraticForm& q_hi, int sign,
                          int omega_power, std::string matrix_label)
{
    CategorySpec s{std::move(name), group, HiParams{q_hi.group(), q_hi, sign, omega_power, std::move(matrix_label)}};
    s.validate();
    return s;
}

FusionRing base_ring(const CategorySpec& spec)
{
    switch (spec.family()) {
    case Family::NG1:
        return make_near_group_ring(spec.group, spec.group.order() - 1);
    case Family::NG1X:
        return make_near_group_ring(spec.group, 6);
    case Family::NG2:
        return make_near_group_ring(spec.group, spec.group.order());
    case Family::HI:
        return make_hi_ring(spec.group);
    }
    throw std::logic_error("unreachable family");
}

CenterPresentation build_center(const CategorySpec& spec)
{
    spec.validate();
    switch (spec.family()) {
    case Family::NG1: {
        const auto& p = std::get<Ng1Params>(spec.params);
        return center_ng1(spec.group, p.p, p.zeta1);
    }
    case Family::NG1X:
        return center_ng1_exceptional7();
    case Family::NG2: {
        const auto& p = std::get<Ng2Params>(spec.params);
        return center_ng2(spec.group, p.q, p.group_prime, p.q_prime);
    }
    case Family::HI: {
        const auto& p = std::get<HiParams>(spec.params);
        return center_hi(spec.group, p.h_group, p.q_hi);
    }
    }
    throw std::logic_error("unreachable family");
}

std::string rho_target(const CategorySpec& spec)
{
    if (spec.family() == Family::HI)
        return grho_label(spec.group.identity());
    return rho_label();
}

std::string describe(const CategorySpec& spec)
{
    const std::string g = spec.group.to_string();
    switch (spec.family()) {
    case Family::NG1: {
        const auto& p = std::get<Ng1Params>(spec.params);
        return "NG1(" + g + ", p=" + std::to_string(p.p) + ", zeta1=" + p.zeta1.to_string() + ")";
    }
    case Family::NG1X:
        return "NG1X(Z/7, s=-1)";
    case Family::NG2: {
        const auto& p = std::get<Ng2Params>(spec.params);
        return "NG2(" + g + ", " + p.q.to_string() + "; " + p.group_prime.to_string() + ", " + p.q_prime.to_string() +
               ")";
    }
    case Family::HI: {
        const auto& p = std::get<HiParams>(spec.params);
        return std::string("HI(") + g + ", " + (p.sign > 0 ? "+" : "-") + ", w^" + std::to_string(p.omega_power) +
               ", " + (p.matrix_label.empty() ? "-" : p.matrix_label) + "; " + p.h_group.to_string() + ", " +
               p.q_hi.to_string() + ")";
    }
    }
    return "?";
}

} // namespace fsind
