#include "fsind/abelian.hpp"

#include <numeric>
#include <stdexcept>

namespace fsind {

namespace {

std::int64_t floor_mod(std::int64_t a, std::int64_t n)
{
    std::int64_t r = a % n;
    return r < 0 ? r + n : r;
}

} // namespace

std::string GroupElement::to_string() const
{
    std::string s = "(";
    for (std::size_t i = 0; i < residues.size(); ++i) {
        if (i)
            s += ',';
        s += std::to_string(residues[i]);
    }
    return s + ")";
}

FiniteAbelianGroup::FiniteAbelianGroup(std::vector<std::int64_t> cyclic_factors)
    : factors_(std::move(cyclic_factors))
{
    for (auto n : factors_) {
        if (n < 1)
            throw std::invalid_argument("FiniteAbelianGroup: cyclic factor orders must be >= 1");
        order_ *= n;
        exponent_ = std::lcm(exponent_, n);
    }
}

bool FiniteAbelianGroup::is_cyclic() const
{
    std::size_t nontrivial = 0;
    for (auto n : factors_)
        nontrivial += n > 1;
    return nontrivial <= 1;
}

bool FiniteAbelianGroup::contains(const GroupElement& a) const
{
    if (a.residues.size() != factors_.size())
        return false;
    for (std::size_t i = 0; i < factors_.size(); ++i)
        if (a.residues[i] < 0 || a.residues[i] >= factors_[i])
            return false;
    return true;
}

void FiniteAbelianGroup::check(const GroupElement& a) const
{
    if (!contains(a))
        throw std::invalid_argument("element " + a.to_string() + " does not belong to " + to_string());
}

GroupElement FiniteAbelianGroup::identity() const
{
    return GroupElement{std::vector<std::int64_t>(factors_.size(), 0)};
}

GroupElement FiniteAbelianGroup::element(std::vector<std::int64_t> residues) const
{
    if (residues.size() != factors_.size())
        throw std::invalid_argument("element has " + std::to_string(residues.size()) +
                                    " residues, group " + to_string() + " has " +
                                    std::to_string(factors_.size()) + " factors");
    for (std::size_t i = 0; i < residues.size(); ++i)
        residues[i] = floor_mod(residues[i], factors_[i]);
    return GroupElement{std::move(residues)};
}

GroupElement FiniteAbelianGroup::add(const GroupElement& a, const GroupElement& b) const
{
    check(a);
    check(b);
    GroupElement r = a;
    for (std::size_t i = 0; i < factors_.size(); ++i)
        r.residues[i] = (a.residues[i] + b.residues[i]) % factors_[i];
    return r;
}

GroupElement FiniteAbelianGroup::neg(const GroupElement& a) const
{
    check(a);
    GroupElement r = a;
    for (std::size_t i = 0; i < factors_.size(); ++i)
        r.residues[i] = floor_mod(-a.residues[i], factors_[i]);
    return r;
}

GroupElement FiniteAbelianGroup::scalar_mul(std::int64_t k, const GroupElement& a) const
{
    check(a);
    GroupElement r = a;
    for (std::size_t i = 0; i < factors_.size(); ++i)
        r.residues[i] = floor_mod(floor_mod(k, factors_[i]) * a.residues[i], factors_[i]);
    return r;
}

std::vector<GroupElement> FiniteAbelianGroup::elements() const
{
    std::vector<GroupElement> out;
    out.reserve(static_cast<std::size_t>(order_));
    for (std::size_t i = 0; i < static_cast<std::size_t>(order_); ++i)
        out.push_back(element_at(i));
    return out;
}

std::size_t FiniteAbelianGroup::index_of(const GroupElement& a) const
{
    check(a);
    std::size_t idx = 0;
    for (std::size_t i = 0; i < factors_.size(); ++i)
        idx = idx * static_cast<std::size_t>(factors_[i]) + static_cast<std::size_t>(a.residues[i]);
    return idx;
}

GroupElement FiniteAbelianGroup::element_at(std::size_t index) const
{
    if (index >= static_cast<std::size_t>(order_))
        throw std::out_of_range("element index out of range");
    GroupElement r{std::vector<std::int64_t>(factors_.size(), 0)};
    for (std::size_t i = factors_.size(); i-- > 0;) {
        const auto n = static_cast<std::size_t>(factors_[i]);
        r.residues[i] = static_cast<std::int64_t>(index % n);
        index /= n;
    }
    return r;
}

std::int64_t FiniteAbelianGroup::power_count(std::int64_t k, const GroupElement& h) const
{
    check(h);
    // The equation k g = h splits over factors: k g_i = h_i mod n_i has gcd(k, n_i)
    // solutions when gcd divides h_i and none otherwise.
    std::int64_t count = 1;
    for (std::size_t i = 0; i < factors_.size(); ++i) {
        const std::int64_t d = std::gcd(floor_mod(k, factors_[i]), factors_[i]);
        if (h.residues[i] % d != 0)
            return 0;
        count *= d;
    }
    return count;
}

QZValue FiniteAbelianGroup::character_value(const GroupElement& h, const GroupElement& g) const
{
    check(h);
    check(g);
    QZValue phase;
    for (std::size_t i = 0; i < factors_.size(); ++i)
        phase += QZValue(h.residues[i] * g.residues[i], factors_[i]);
    return phase;
}

FiniteAbelianGroup FiniteAbelianGroup::direct_product(const FiniteAbelianGroup& other) const
{
    std::vector<std::int64_t> f = factors_;
    f.insert(f.end(), other.factors_.begin(), other.factors_.end());
    return FiniteAbelianGroup(std::move(f));
}

std::string FiniteAbelianGroup::to_string() const
{
    if (factors_.empty())
        return "1";
    std::string s;
    for (std::size_t i = 0; i < factors_.size(); ++i) {
        if (i)
            s += 'x';
        s += "Z/" + std::to_string(factors_[i]);
    }
    return s;
}

} // namespace fsind
