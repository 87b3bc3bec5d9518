#include "fsind/center.hpp"

#include <cmath>
#include <numeric>
#include <stdexcept>

namespace fsind {

std::size_t CenterPresentation::count_prefix(const std::string& prefix) const
{
    std::size_t n = 0;
    for (const auto& o : objects)
        n += o.label.rfind(prefix, 0) == 0;
    return n;
}

const CenterObject& CenterPresentation::object(const std::string& label) const
{
    for (const auto& o : objects)
        if (o.label == label)
            return o;
    throw std::invalid_argument("no center object '" + label + "'");
}

std::int64_t CenterPresentation::twist_order() const
{
    std::int64_t l = 1;
    for (const auto& o : objects)
        l = std::lcm(l, o.twist.denominator());
    return l;
}

bool is_prime(std::int64_t n)
{
    if (n < 2)
        return false;
    for (std::int64_t d = 2; d * d <= n; ++d)
        if (n % d == 0)
            return false;
    return true;
}

std::int64_t prime_power_exponent(std::int64_t n, std::int64_t p)
{
    if (!is_prime(p) || n < p)
        return 0;
    std::int64_t l = 0;
    while (n % p == 0) {
        n /= p;
        ++l;
    }
    return n == 1 ? l : 0;
}

bool is_pair_representative(const FiniteAbelianGroup& group, const GroupElement& x)
{
    return group.index_of(x) <= group.index_of(group.neg(x));
}

namespace {

class Builder {
public:
    explicit Builder(FusionRing ring)
        : ring_(std::move(ring)), dims_(fp_dims(ring_)), global_(global_fpdim(ring_))
    {
    }

    std::vector<std::int64_t> empty() const { return std::vector<std::int64_t>(ring_.rank(), 0); }
    std::size_t at(const std::string& label) const { return ring_.index_of(label); }

    void add(std::string label, QZValue twist, std::vector<std::int64_t> mult)
    {
        double qdim = 0.0;
        for (std::size_t s = 0; s < mult.size(); ++s)
            qdim += static_cast<double>(mult[s]) * dims_[s];
        objects_.push_back({std::move(label), twist, qdim, std::move(mult)});
    }

    CenterPresentation finish(std::vector<std::string> provenance = {})
    {
        return {std::move(ring_), std::move(objects_), global_, std::move(provenance)};
    }

private:
    FusionRing ring_;
    std::vector<double> dims_;
    double global_;
    std::vector<CenterObject> objects_;
};

// A_g, Sigma and B_g^w rows shared by both m = |G| - 1 tables.
void add_ng1_common(Builder& b, const FiniteAbelianGroup& group)
{
    const auto elems = group.elements();
    const std::size_t rho = b.at(rho_label());
    for (const auto& g : elems) {
        auto m = b.empty();
        m[b.at(group_label(g))] = 1;
        b.add("A_" + g.to_string(), QZValue{}, std::move(m));
    }
    {
        auto m = b.empty();
        for (const auto& x : elems)
            m[b.at(group_label(x))] = 1;
        b.add("Sigma", QZValue{}, std::move(m));
    }
    // w ranges over the nontrivial characters chi_h, h != e.
    for (const auto& g : elems) {
        for (std::size_t hi = 1; hi < elems.size(); ++hi) {
            auto m = b.empty();
            m[rho] = 1;
            m[b.at(group_label(g))] += 1;
            b.add("B_" + g.to_string() + "^" + elems[hi].to_string(), -group.character_value(elems[hi], g),
                  std::move(m));
        }
    }
}

} // namespace

CenterPresentation center_ng1(const FiniteAbelianGroup& group, std::int64_t p, const QZValue& zeta1)
{
    if (!group.is_cyclic())
        throw std::invalid_argument("center_ng1: G must be cyclic");
    const std::int64_t l = prime_power_exponent(group.order() + 1, p);
    if (l == 0)
        throw std::invalid_argument("center_ng1: |G| + 1 = " + std::to_string(group.order() + 1) +
                                    " is not a power of p = " + std::to_string(p));

    Builder b(make_near_group_ring(group, group.order() - 1));
    add_ng1_common(b, group);

    // F_{p^l}^+ as (Z/p)^l; the field unit sits at coordinates (1, 0, ..., 0).
    const FiniteAbelianGroup additive(std::vector<std::int64_t>(static_cast<std::size_t>(l), p));
    GroupElement one = additive.identity();
    one.residues[0] = 1;
    const std::size_t rho = b.at(rho_label());
    for (const auto& psi : additive.elements()) {
        auto m = b.empty();
        m[rho] = 1;
        b.add("C^" + psi.to_string(), -(zeta1 + additive.character_value(psi, one)), std::move(m));
    }
    return b.finish({"zeta1 = exp(2 pi i " + zeta1.to_string() + ")"});
}

CenterPresentation center_ng1_exceptional7()
{
    const auto group = FiniteAbelianGroup::cyclic(7);
    Builder b(make_near_group_ring(group, 6));
    add_ng1_common(b, group);
    const std::size_t rho = b.at(rho_label());
    for (const auto& [label, twist] : {std::pair{"E_1", QZValue(1, 4)}, std::pair{"E_2", QZValue(3, 4)}}) {
        auto m = b.empty();
        m[rho] = 2;
        b.add(label, twist, std::move(m));
    }
    return b.finish({"|G| = 7, s = -1 table"});
}

CenterPresentation center_ng2(const FiniteAbelianGroup& group, const QuadraticForm& q,
                              const FiniteAbelianGroup& group_prime, const QuadraticForm& q_prime)
{
    if (group.order() % 2 == 0)
        throw std::invalid_argument("center_ng2: |G| must be odd");
    if (group_prime.order() != group.order() + 4)
        throw std::invalid_argument("center_ng2: |G'| must equal |G| + 4");
    if (!(q.group() == group) || !(q_prime.group() == group_prime))
        throw std::invalid_argument("center_ng2: forms are defined on the wrong groups");
    if (!q.is_nondegenerate() || !q_prime.is_nondegenerate())
        throw std::invalid_argument("center_ng2: q and q' must be nondegenerate");

    Builder b(make_near_group_ring(group, group.order()));
    const auto elems = group.elements();
    const std::size_t rho = b.at(rho_label());

    for (const auto& g : elems) {
        auto m = b.empty();
        m[b.at(group_label(g))] = 1;
        b.add("A_" + g.to_string(), q.value(g).scaled(2), std::move(m));
    }
    for (const auto& g : elems) {
        auto m = b.empty();
        m[rho] = 1;
        m[b.at(group_label(g))] += 1;
        b.add("B_" + g.to_string(), q.value(g).scaled(2), std::move(m));
    }
    for (std::size_t i = 0; i < elems.size(); ++i)
        for (std::size_t j = i + 1; j < elems.size(); ++j) {
            auto m = b.empty();
            m[rho] = 1;
            m[b.at(group_label(elems[i]))] += 1;
            m[b.at(group_label(elems[j]))] += 1;
            b.add("C_" + elems[i].to_string() + "," + elems[j].to_string(), q.boundary(elems[i], elems[j]),
                  std::move(m));
        }
    const auto prime_elems = group_prime.elements();
    for (const auto& g : elems)
        for (std::size_t xi = 1; xi < prime_elems.size(); ++xi) {
            const auto& x = prime_elems[xi];
            if (!is_pair_representative(group_prime, x))
                continue;
            auto m = b.empty();
            m[rho] = 1;
            b.add("E_" + g.to_string() + "," + x.to_string(), q.value(g).scaled(2) + q_prime.value(x).scaled(2),
                  std::move(m));
        }
    return b.finish();
}

CenterPresentation center_hi(const FiniteAbelianGroup& group, const FiniteAbelianGroup& h_group,
                             const QuadraticForm& q_hi)
{
    if (group.order() % 2 == 0)
        throw std::invalid_argument("center_hi: |G| must be odd");
    if (h_group.order() != group.order() * group.order() + 4)
        throw std::invalid_argument("center_hi: |H| must equal |G|^2 + 4");
    if (!(q_hi.group() == h_group))
        throw std::invalid_argument("center_hi: q'' is defined on the wrong group");
    const std::int64_t m_half = (h_group.order() - 1) / 2;

    Builder b(make_hi_ring(group));
    const auto elems = group.elements();
    auto all_grho = [&] {
        auto m = b.empty();
        for (const auto& g : elems)
            m[b.at(grho_label(g))] = 1;
        return m;
    };
    const std::size_t unit = b.at(group_label(group.identity()));

    {
        auto m = b.empty();
        m[unit] = 1;
        b.add("1", QZValue{}, std::move(m));
    }
    {
        auto m = all_grho();
        m[unit] += 1;
        b.add("B", QZValue{}, std::move(m));
    }
    for (std::size_t i = 1; i < elems.size(); ++i) {
        if (!is_pair_representative(group, elems[i]))
            continue;
        auto m = all_grho();
        m[unit] += 2;
        b.add("A_" + elems[i].to_string(), QZValue{}, std::move(m));
    }
    for (std::size_t i = 1; i < elems.size(); ++i) {
        const auto& h = elems[i];
        if (!is_pair_representative(group, h))
            continue;
        for (const auto& phi : elems) {
            auto m = all_grho();
            m[b.at(group_label(h))] += 1;
            m[b.at(group_label(group.neg(h)))] += 1;
            b.add("C^" + h.to_string() + "_" + phi.to_string(), group.character_value(phi, h), std::move(m));
        }
    }
    const auto h_elems = h_group.elements();
    for (std::size_t i = 1; i < h_elems.size(); ++i) {
        const auto& x = h_elems[i];
        if (!is_pair_representative(h_group, x))
            continue;
        b.add("D_" + x.to_string(), q_hi.value(x).scaled(m_half), all_grho());
    }
    return b.finish();
}

WeilModularData weil_modular_data(const FiniteAbelianGroup& group, const QuadraticForm& q)
{
    if (!(q.group() == group))
        throw std::invalid_argument("weil_modular_data: form is defined on the wrong group");
    if (!q.is_nondegenerate())
        throw std::invalid_argument("weil_modular_data: degenerate form gives a singular S");
    const auto elems = group.elements();
    const std::size_t n = elems.size();
    WeilModularData w{{n, n, std::vector<std::complex<double>>(n * n)}, {n, n, std::vector<std::complex<double>>(n * n)}};
    const double norm = 1.0 / std::sqrt(static_cast<double>(n));
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < n; ++j)
            w.s(i, j) = std::conj(q.bicharacter(elems[i], elems[j])) * norm;
        w.t(i, i) = q.value_at(i).to_complex();
    }
    return w;
}

} // namespace fsind
