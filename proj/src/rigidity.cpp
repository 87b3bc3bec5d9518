#include "fsind/indicators.hpp"

#include <cmath>
#include <numeric>
#include <stdexcept>

namespace fsind {

namespace {

std::optional<std::int64_t> first_difference(const IndicatorVector& a, const IndicatorVector& b,
                                             std::int64_t period, double tol)
{
    for (std::int64_t k = 1; k <= period; ++k)
        if (std::abs(a.at(k) - b.at(k)) >= tol)
            return k;
    return std::nullopt;
}

} // namespace

RigidityReport rigidity_report(std::span<const CategorySpec> specs, const FusionRing& ring, double tol,
                               std::int64_t kmax)
{
    for (const auto& s : specs)
        if (!(base_ring(s) == ring))
            throw std::invalid_argument("spec '" + s.name + "' does not have the given Grothendieck ring");

    RigidityReport report;
    for (const auto& s : specs)
        report.compared_period = std::lcm(report.compared_period, indicator_period(s));
    if (kmax > 0)
        report.compared_period = kmax;
    for (const auto& s : specs)
        report.vectors.push_back(indicator_vector(s, IndicatorPath::Center, report.compared_period));

    const std::size_t n = specs.size();
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = i + 1; j < n; ++j)
            report.pairs.push_back(
                {i, j, first_difference(report.vectors[i], report.vectors[j], report.compared_period, tol)});

    // Agreement within tol is an equivalence on the data we see (the values
    // are algebraic numbers either equal or far apart), so classes are built
    // against each class's first member.
    auto agree = [&](std::size_t i, std::size_t j) {
        if (i == j)
            return true;
        const auto a = std::min(i, j);
        const auto b = std::max(i, j);
        for (const auto& p : report.pairs)
            if (p.first == a && p.second == b)
                return !p.k.has_value();
        return false;
    };
    for (std::size_t i = 0; i < n; ++i) {
        bool placed = false;
        for (auto& cls : report.classes)
            if (agree(cls.front(), i)) {
                cls.push_back(i);
                placed = true;
                break;
            }
        if (!placed)
            report.classes.push_back({i});
    }
    return report;
}

} // namespace fsind
