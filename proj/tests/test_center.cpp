#include "fsind/category_spec.hpp"
#include "fsind/center.hpp"
#include "fsind/indicators.hpp"
#include "fsind/tables.hpp"

#include "doctest.h"
#include "oracles.hpp"

#include <cmath>

using namespace fsind;

namespace {

QuadraticForm cyclic_form(std::int64_t n, std::int64_t c)
{
    const std::int64_t coeffs[] = {c};
    return QuadraticForm::diagonal(FiniteAbelianGroup::cyclic(n), coeffs);
}

/// qdim(V) must equal sum_X dim Hom(F(V), X) d_X.
void check_dimensions(const CenterPresentation& p)
{
    const auto d = fp_dims(p.base_ring);
    double total = 0.0;
    for (const auto& o : p.objects) {
        double image = 0.0;
        for (std::size_t i = 0; i < d.size(); ++i)
            image += static_cast<double>(o.mult[i]) * d[i];
        CHECK_MESSAGE(std::abs(image - o.qdim) < 1e-9, o.label);
        total += o.qdim * o.qdim;
    }
    const double dim_c = global_fpdim(p.base_ring);
    CHECK(std::abs(p.global_qdim - dim_c) < 1e-9);
    CHECK(std::abs(total - dim_c * dim_c) < 1e-6 * dim_c * dim_c);
}

} // namespace

TEST_CASE("near group center with m = |G| - 1")
{
    const auto c = center_ng1(FiniteAbelianGroup::cyclic(2), 3, QZValue());
    CHECK(c.size() == 8);
    CHECK(c.count_prefix("A_") == 2);
    CHECK(c.count_prefix("B_") == 2);
    CHECK(c.count_prefix("C^") == 3);
    CHECK(c.object("Sigma").twist.is_zero());
    check_dimensions(c);

    for (std::int64_t n : {1, 3, 4, 6, 7, 8}) {
        std::int64_t p = 2;
        while ((n + 1) % p != 0)
            ++p;
        const auto center = center_ng1(FiniteAbelianGroup::cyclic(n), p, QZValue());
        CHECK(center.count_prefix("C^") == static_cast<std::size_t>(n + 1));
        check_dimensions(center);
    }
    CHECK_THROWS_AS(center_ng1(FiniteAbelianGroup::cyclic(5), 2, QZValue()), std::invalid_argument);
}

TEST_CASE("exceptional order seven center")
{
    const auto c = center_ng1_exceptional7();
    CHECK(c.size() == 52);
    CHECK(c.count_prefix("E_") == 2);
    check_dimensions(c);
}

TEST_CASE("near group center with m = |G|")
{
    const auto c = center_ng2(FiniteAbelianGroup::cyclic(3), cyclic_form(3, 1), FiniteAbelianGroup::cyclic(7),
                              cyclic_form(7, 1));
    CHECK(c.count_prefix("A_") == 3);
    CHECK(c.count_prefix("B_") == 3);
    CHECK(c.count_prefix("E_") == 9);
    check_dimensions(c);
    // A_g carries <g, g>.
    CHECK(c.object("A_(1)").twist == QZValue(2, 3));
}

TEST_CASE("haagerup izumi centers")
{
    const auto z3 = center_hi(FiniteAbelianGroup::cyclic(3), FiniteAbelianGroup::cyclic(13), cyclic_form(13, 1));
    CHECK(z3.count_prefix("D_") == 6);
    CHECK(z3.count_prefix("C^") == 3);
    check_dimensions(z3);

    const auto yl = center_hi(FiniteAbelianGroup(), FiniteAbelianGroup::cyclic(5), cyclic_form(5, 1));
    CHECK(yl.size() == 4);
    check_dimensions(yl);
    CHECK_THROWS_AS(center_hi(FiniteAbelianGroup::cyclic(3), FiniteAbelianGroup::cyclic(11), cyclic_form(11, 1)),
                    std::invalid_argument);
}

TEST_CASE("every builtin row has a consistent center")
{
    for (const auto& row : builtin_rows()) {
        const auto c = build_center(row.spec);
        check_dimensions(c);
        CHECK(c.twist_order() >= 1);
    }
}

TEST_CASE("pair representatives pick one of each {x, -x}")
{
    for (std::int64_t n = 1; n <= 12; ++n) {
        const auto g = FiniteAbelianGroup::cyclic(n);
        std::size_t reps = 0;
        for (const auto& x : g.elements())
            reps += is_pair_representative(g, x) ? 1 : 0;
        std::int64_t involutions = oracle::power_count({n}, 2);
        CHECK(static_cast<std::int64_t>(reps) == (n + involutions) / 2);
    }
}

TEST_CASE("prime helpers")
{
    CHECK(prime_power_exponent(27, 3) == 3);
    CHECK(prime_power_exponent(12, 2) == 0);
    CHECK(prime_power_exponent(1, 5) == 0);
    CHECK(is_prime(29));
    CHECK_FALSE(is_prime(1));
    CHECK_FALSE(is_prime(91));
}
