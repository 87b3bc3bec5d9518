#include "fsind/fusion.hpp"

#include "fsind/kernels.hpp"

#include <cmath>
#include <sstream>
#include <stdexcept>

namespace fsind {

FusionRing::FusionRing(std::vector<std::string> labels, std::size_t unit, std::vector<std::size_t> dual,
                       std::vector<std::int64_t> structure)
    : labels_(std::move(labels)), unit_(unit), dual_(std::move(dual)), structure_(std::move(structure))
{
    const std::size_t r = labels_.size();
    if (r == 0 || unit_ >= r || dual_.size() != r || structure_.size() != r * r * r)
        throw std::invalid_argument("FusionRing: inconsistent sizes");
    for (auto d : dual_)
        if (d >= r)
            throw std::invalid_argument("FusionRing: dual index out of range");
    for (auto v : structure_)
        if (v < 0)
            throw std::invalid_argument("FusionRing: structure constants must be non-negative");
}

std::optional<std::size_t> FusionRing::find(const std::string& label) const
{
    for (std::size_t i = 0; i < labels_.size(); ++i)
        if (labels_[i] == label)
            return i;
    return std::nullopt;
}

std::size_t FusionRing::index_of(const std::string& label) const
{
    if (auto i = find(label))
        return *i;
    throw std::invalid_argument("unknown basis label '" + label + "'");
}

std::string group_label(const GroupElement& g) { return "g:" + g.to_string(); }
std::string grho_label(const GroupElement& g) { return "grho:" + g.to_string(); }

FusionRing make_near_group_ring(const FiniteAbelianGroup& group, std::int64_t m)
{
    if (m < 0)
        throw std::invalid_argument("near-group multiplicity m must be non-negative");
    const auto elems = group.elements();
    const std::size_t n = elems.size();
    const std::size_t r = n + 1;
    const std::size_t rho = n;

    std::vector<std::string> labels;
    for (const auto& g : elems)
        labels.push_back(group_label(g));
    labels.push_back(rho_label());

    std::vector<std::size_t> dual(r);
    for (std::size_t i = 0; i < n; ++i)
        dual[i] = group.index_of(group.neg(elems[i]));
    dual[rho] = rho;

    FusionRing ring(std::move(labels), 0, std::move(dual), std::vector<std::int64_t>(r * r * r, 0));
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < n; ++j)
            ring.set_n(i, j, group.index_of(group.add(elems[i], elems[j])), 1);
        ring.set_n(i, rho, rho, 1);
        ring.set_n(rho, i, rho, 1);
    }
    for (std::size_t h = 0; h < n; ++h)
        ring.set_n(rho, rho, h, 1);
    ring.set_n(rho, rho, rho, m);
    return ring;
}

namespace {

FusionRing hi_ring(const FiniteAbelianGroup& group, bool literal)
{
    const auto elems = group.elements();
    const std::size_t n = elems.size();
    const std::size_t r = 2 * n;
    auto grp = [](std::size_t i) { return i; };
    auto grho = [n](std::size_t i) { return n + i; };
    auto idx = [&](const GroupElement& g) { return group.index_of(g); };

    std::vector<std::string> labels;
    for (const auto& g : elems)
        labels.push_back(group_label(g));
    for (const auto& g : elems)
        labels.push_back(grho_label(g));

    std::vector<std::size_t> dual(r);
    for (std::size_t i = 0; i < n; ++i) {
        dual[grp(i)] = idx(group.neg(elems[i]));
        dual[grho(i)] = grho(i);
    }

    FusionRing ring(std::move(labels), 0, std::move(dual), std::vector<std::int64_t>(r * r * r, 0));
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < n; ++j) {
            const auto& g = elems[i];
            const auto& h = elems[j];
            ring.set_n(grp(i), grp(j), grp(idx(group.add(g, h))), 1);
            ring.set_n(grp(i), grho(j), grho(idx(group.add(g, h))), 1);
            // (h rho) g = (h - g) rho, here with h = elems[j], g = elems[i]
            ring.set_n(grho(j), grp(i), grho(idx(group.sub(h, g))), 1);
            ring.set_n(grho(i), grho(j), grp(idx(group.sub(g, h))), 1);
            if (literal) {
                ring.set_n(grho(i), grho(j), grho(i), static_cast<std::int64_t>(n));
            } else {
                for (std::size_t a = 0; a < n; ++a)
                    ring.set_n(grho(i), grho(j), grho(a), 1);
            }
        }
    }
    return ring;
}

} // namespace

FusionRing make_hi_ring(const FiniteAbelianGroup& group) { return hi_ring(group, false); }
FusionRing make_hi_ring_literal(const FiniteAbelianGroup& group) { return hi_ring(group, true); }

RingReport verify_ring(const FusionRing& ring, std::size_t max_listed)
{
    RingReport report;
    const std::size_t r = ring.rank();
    const std::size_t u = ring.unit();
    auto add = [&](const std::string& s) { report.violations.push_back(s); };

    for (std::size_t j = 0; j < r; ++j)
        for (std::size_t k = 0; k < r; ++k) {
            const std::int64_t delta = j == k ? 1 : 0;
            if (ring.n(u, j, k) != delta || ring.n(j, u, k) != delta) {
                add("unit: N[unit][" + ring.label(j) + "][" + ring.label(k) + "] or its mirror is not delta");
            }
        }

    const auto defects = kernels::associativity_defects(r, ring.structure());
    for (std::size_t i = 0; i < defects.size() && i < max_listed; ++i) {
        const auto& q = defects[i];
        add("associativity: (" + ring.label(q[0]) + " " + ring.label(q[1]) + ") " + ring.label(q[2]) +
            " differs at " + ring.label(q[3]));
    }
    if (defects.size() > max_listed)
        add("associativity: " + std::to_string(defects.size() - max_listed) + " further defects");

    if (ring.dual(u) != u)
        add("duality: unit is not self-dual");
    for (std::size_t i = 0; i < r; ++i) {
        if (ring.dual(ring.dual(i)) != i)
            add("duality: dual is not an involution at " + ring.label(i));
        for (std::size_t j = 0; j < r; ++j) {
            const std::int64_t expect = j == ring.dual(i) ? 1 : 0;
            if (ring.n(i, j, u) != expect)
                add("duality: N[" + ring.label(i) + "][" + ring.label(j) + "][unit] != delta");
        }
    }

    try {
        const auto d = fp_dims(ring);
        for (std::size_t i = 0; i < r; ++i) {
            if (d[i] < 1.0 - 1e-9)
                add("fpdim: d(" + ring.label(i) + ") < 1");
            for (std::size_t j = 0; j < r; ++j) {
                double rhs = 0.0;
                for (std::size_t k = 0; k < r; ++k)
                    rhs += static_cast<double>(ring.n(i, j, k)) * d[k];
                if (std::abs(d[i] * d[j] - rhs) > 1e-9 * std::max(1.0, rhs))
                    add("fpdim: d(" + ring.label(i) + ") d(" + ring.label(j) + ") is not multiplicative");
            }
        }
    } catch (const std::runtime_error& e) {
        add(std::string("fpdim: ") + e.what());
    }
    return report;
}

std::vector<double> fp_dims(const FusionRing& ring)
{
    // d is the Perron vector of A[j][k] = sum_i N[i][j][k]:
    //   (sum_i d_i) d_j = sum_k A[j][k] d_k.
    const std::size_t r = ring.rank();
    std::vector<double> a(r * r, 0.0);
    for (std::size_t i = 0; i < r; ++i)
        for (std::size_t j = 0; j < r; ++j)
            for (std::size_t k = 0; k < r; ++k)
                a[j * r + k] += static_cast<double>(ring.n(i, j, k));

    std::vector<double> v(r, 1.0);
    std::vector<double> next(r);
    constexpr int kMaxIterations = 100000;
    constexpr double kTolerance = 1e-12;
    // Once converged, polish toward machine precision for a bounded number of steps.
    constexpr double kPolish = 4e-16;
    constexpr int kPolishSteps = 2000;
    int polish = -1;
    for (int it = 0; it < kMaxIterations; ++it) {
        double norm = 0.0;
        for (std::size_t j = 0; j < r; ++j) {
            double s = 0.0;
            for (std::size_t k = 0; k < r; ++k)
                s += a[j * r + k] * v[k];
            next[j] = s;
            norm = std::max(norm, std::abs(s));
        }
        if (norm == 0.0)
            throw std::runtime_error("power iteration collapsed to zero");
        double change = 0.0;
        for (std::size_t j = 0; j < r; ++j) {
            next[j] /= norm;
            change = std::max(change, std::abs(next[j] - v[j]));
        }
        v.swap(next);
        if (polish < 0 && change < kTolerance)
            polish = 0;
        if (polish >= 0 && (change < kPolish || ++polish > kPolishSteps)) {
            const double unit = v[ring.unit()];
            if (unit <= 0.0)
                throw std::runtime_error("Perron vector has non-positive unit entry");
            for (auto& x : v)
                x /= unit;
            return v;
        }
    }
    throw std::runtime_error("power iteration did not converge");
}

double global_fpdim(const FusionRing& ring)
{
    double s = 0.0;
    for (double d : fp_dims(ring))
        s += d * d;
    return s;
}

} // namespace fsind
