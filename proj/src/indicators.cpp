#include "fsind/indicators.hpp"

#include <cmath>
#include <numeric>
#include <stdexcept>

namespace fsind {

namespace {

void require_positive(std::int64_t k)
{
    if (k < 1)
        throw std::invalid_argument("indicator degree k must be >= 1");
}

double half_power_count(const FiniteAbelianGroup& group, std::int64_t k)
{
    return 0.5 * static_cast<double>(group.power_count(k, group.identity()));
}

} // namespace

std::vector<kernels::CenterTerm> center_terms(const CenterPresentation& p, std::size_t target)
{
    std::vector<kernels::CenterTerm> terms;
    terms.reserve(p.objects.size());
    for (const auto& o : p.objects)
        terms.push_back({o.twist, o.qdim * static_cast<double>(o.mult.at(target))});
    return terms;
}

std::complex<double> nu_from_center(const CenterPresentation& p, const std::string& target, std::int64_t k)
{
    require_positive(k);
    const auto terms = center_terms(p, p.base_ring.index_of(target));
    return kernels::center_sum(terms, k) / p.global_qdim;
}

std::complex<double> Ng1Value::to_complex() const
{
    std::complex<double> v(static_cast<double>(integer_part), 0.0);
    if (root)
        v += root->to_complex();
    return v;
}

Ng1Value nu_ng1_exact(const FiniteAbelianGroup& group, std::int64_t p, const QZValue& zeta1, std::int64_t k)
{
    require_positive(k);
    if (!group.is_cyclic() || prime_power_exponent(group.order() + 1, p) == 0)
        throw std::invalid_argument("nu_ng1: G must be cyclic with |G| + 1 a power of p");
    Ng1Value v;
    v.integer_part = group.power_count(k, group.identity()) - 1;
    if (k % p == 0)
        v.root = (-zeta1).scaled(k);
    return v;
}

std::complex<double> nu_ng1_closed(const FiniteAbelianGroup& group, std::int64_t p, const QZValue& zeta1,
                                   std::int64_t k)
{
    return nu_ng1_exact(group, p, zeta1, k).to_complex();
}

std::complex<double> nu_ng1x_closed(std::int64_t k)
{
    require_positive(k);
    const auto g = FiniteAbelianGroup::cyclic(7);
    double v = static_cast<double>(g.power_count(k, g.identity()) - 1);
    if (k % 2 == 0)
        v += (k / 2) % 2 == 0 ? 1.0 : -1.0;
    return {v, 0.0};
}

std::complex<double> nu_ng2_omega(const FiniteAbelianGroup& group, const QuadraticForm& q,
                                  std::span<const QZValue> omegas, std::int64_t k)
{
    require_positive(k);
    const std::int64_t n = group.order();
    if (static_cast<std::int64_t>(omegas.size()) != n * (n + 3) / 2)
        throw std::invalid_argument("nu_ng2_omega: expected |G|(|G|+3)/2 twists");
    const FusionRing ring = make_near_group_ring(group, n);
    const double d_rho = fp_dims(ring).back();
    const double qdim = global_fpdim(ring);
    std::complex<double> omega_sum{};
    for (const auto& w : omegas)
        omega_sum += w.scaled(k).to_complex();
    const std::complex<double> gauss = std::sqrt(static_cast<double>(n)) / 2.0 * gauss_sum(q.scaled(2 * k));
    return half_power_count(group, k) + d_rho / qdim * (gauss + omega_sum);
}

std::complex<double> nu_ng2_closed(const FiniteAbelianGroup& group, const QuadraticForm& q,
                                   const FiniteAbelianGroup& group_prime, const QuadraticForm& q_prime,
                                   std::int64_t k)
{
    require_positive(k);
    if (group.order() % 2 == 0 || group_prime.order() != group.order() + 4)
        throw std::invalid_argument("nu_ng2_closed: need |G| odd and |G'| = |G| + 4");
    return half_power_count(group, k) +
           0.5 * gauss_sum(group, q.scaled(2 * k)) * gauss_sum(group_prime, q_prime.scaled(2 * k));
}

double nu_ng2_jacobi(const FiniteAbelianGroup& group, const FiniteAbelianGroup& group_prime, std::int64_t k)
{
    require_positive(k);
    const std::int64_t n = group.order() * group_prime.order();
    if (group.order() % 2 == 0)
        throw std::invalid_argument("nu_ng2_jacobi: |G| must be odd");
    if (std::gcd(k, n) != 1)
        throw std::invalid_argument("nu_ng2_jacobi: need gcd(k, |G||G'|) = 1");
    return 0.5 * (1.0 - jacobi_symbol(k, n));
}

std::complex<double> nu_hi_closed(const FiniteAbelianGroup& group, const FiniteAbelianGroup& h_group,
                                  const QuadraticForm& q_hi, std::int64_t k)
{
    require_positive(k);
    if (group.order() % 2 == 0 || h_group.order() != group.order() * group.order() + 4)
        throw std::invalid_argument("nu_hi_closed: need |G| odd and |H| = |G|^2 + 4");
    const std::int64_t m = (h_group.order() - 1) / 2;
    return half_power_count(group, k) + 0.5 * gauss_sum(h_group, q_hi.scaled(k * m));
}

std::complex<double> nu_closed(const CategorySpec& spec, std::int64_t k)
{
    switch (spec.family()) {
    case Family::NG1: {
        const auto& p = std::get<Ng1Params>(spec.params);
        return nu_ng1_closed(spec.group, p.p, p.zeta1, k);
    }
    case Family::NG1X:
        return nu_ng1x_closed(k);
    case Family::NG2: {
        const auto& p = std::get<Ng2Params>(spec.params);
        return nu_ng2_closed(spec.group, p.q, p.group_prime, p.q_prime, k);
    }
    case Family::HI: {
        const auto& p = std::get<HiParams>(spec.params);
        return nu_hi_closed(spec.group, p.h_group, p.q_hi, k);
    }
    }
    throw std::logic_error("unreachable family");
}

std::complex<double> nu_center(const CategorySpec& spec, std::int64_t k)
{
    return nu_from_center(build_center(spec), rho_target(spec), k);
}

Calibration calibrate(const CategorySpec& spec, double tol)
{
    Calibration c{spec, false, true, nu_closed(spec, 1), {}};
    if (std::abs(c.nu1) < tol)
        return c;

    const Family f = spec.family();
    if (f != Family::NG2 && f != Family::HI) {
        c.satisfied = false;
        c.note = "nu_1(rho) != 0 and the family has no orientation to flip";
        return c;
    }
    CategorySpec flipped = spec;
    std::string what;
    if (f == Family::NG2) {
        auto& p = std::get<Ng2Params>(flipped.params);
        p.q_prime = p.q_prime.negated();
        what = "q' -> -q'";
    } else {
        auto& p = std::get<HiParams>(flipped.params);
        p.q_hi = p.q_hi.negated();
        what = "q'' -> -q''";
    }
    const auto nu1 = nu_closed(flipped, 1);
    if (std::abs(nu1) < tol) {
        c.spec = std::move(flipped);
        c.flipped = true;
        c.nu1 = nu1;
        c.note = "calibrated: " + what;
        return c;
    }
    c.satisfied = false;
    c.note = "calibration failed: nu_1(rho) != 0 with either orientation (" + what + " tried)";
    return c;
}

CenterPresentation calibrated_center(const Calibration& c)
{
    CenterPresentation p = build_center(c.spec);
    if (!c.note.empty())
        p.provenance.push_back(c.note);
    return p;
}

std::int64_t indicator_period(const CategorySpec& spec)
{
    return std::lcm(build_center(spec).twist_order(), spec.group.exponent());
}

std::complex<double> IndicatorVector::at(std::int64_t k) const
{
    if (k < 1)
        throw std::invalid_argument("indicator degree k must be >= 1");
    const auto idx = static_cast<std::size_t>(k - 1);
    if (idx < values.size())
        return values[idx];
    // Values beyond the computed range repeat with the period.
    const auto wrapped = static_cast<std::size_t>((k - 1) % period);
    if (wrapped >= values.size())
        throw std::out_of_range("indicator vector does not cover k = " + std::to_string(k));
    return values[wrapped];
}

IndicatorVector indicator_vector(const CategorySpec& spec, IndicatorPath path, std::int64_t kmax)
{
    const CenterPresentation center = build_center(spec);
    IndicatorVector v{spec.name, std::lcm(center.twist_order(), spec.group.exponent()), {}};
    if (kmax <= 0)
        kmax = v.period;
    std::vector<std::int64_t> ks(static_cast<std::size_t>(kmax));
    std::iota(ks.begin(), ks.end(), 1);

    if (path == IndicatorPath::Center) {
        const auto terms = center_terms(center, center.base_ring.index_of(rho_target(spec)));
        v.values = kernels::center_sum_grid(terms, ks);
        for (auto& x : v.values)
            x /= center.global_qdim;
    } else {
        v.values.resize(ks.size());
#pragma omp parallel for schedule(dynamic)
        for (std::size_t i = 0; i < ks.size(); ++i)
            v.values[i] = nu_closed(spec, ks[i]);
    }
    return v;
}

IndicatorVector indicator_vector_serial(const CategorySpec& spec, std::int64_t kmax)
{
    const CenterPresentation center = build_center(spec);
    IndicatorVector v{spec.name, std::lcm(center.twist_order(), spec.group.exponent()), {}};
    if (kmax <= 0)
        kmax = v.period;
    std::vector<std::int64_t> ks(static_cast<std::size_t>(kmax));
    std::iota(ks.begin(), ks.end(), 1);
    const auto terms = center_terms(center, center.base_ring.index_of(rho_target(spec)));
    v.values = kernels::serial::center_sum_grid(terms, ks);
    for (auto& x : v.values)
        x /= center.global_qdim;
    return v;
}

} // namespace fsind
