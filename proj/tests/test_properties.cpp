// Invariants checked exhaustively over small groups.

#include "fsind/center.hpp"
#include "fsind/fusion.hpp"
#include "fsind/qforms.hpp"

#include "doctest.h"
#include "oracles.hpp"

#include <map>

using namespace fsind;

namespace {

/// Every diagonal form sum c_i g_i^2 / n_i with 0 <= c_i < n_i on the given shape.
std::vector<QuadraticForm> diagonal_forms(const std::vector<std::int64_t>& shape)
{
    const FiniteAbelianGroup g(shape);
    std::vector<QuadraticForm> out;
    std::vector<std::int64_t> c(shape.size(), 0);
    while (true) {
        out.push_back(QuadraticForm::diagonal(g, c));
        std::size_t i = 0;
        while (i < c.size() && ++c[i] == shape[i])
            c[i++] = 0;
        if (i == c.size())
            break;
    }
    return out;
}

std::vector<std::vector<std::int64_t>> shapes_up_to(std::int64_t max_order)
{
    std::vector<std::vector<std::int64_t>> out;
    for (std::int64_t n = 1; n <= max_order; ++n)
        out.push_back({n});
    for (std::int64_t a = 2; a <= max_order; ++a)
        for (std::int64_t b = a; a * b <= max_order; ++b)
            out.push_back({a, b});
    return out;
}

std::vector<QuadraticForm> metric_forms(std::int64_t max_order)
{
    std::vector<QuadraticForm> out;
    for (const auto& s : shapes_up_to(max_order))
        for (auto& q : diagonal_forms(s))
            if (q.is_nondegenerate())
                out.push_back(std::move(q));
    return out;
}

} // namespace

TEST_CASE("gauss sums of metric groups have modulus one")
{
    const auto forms = metric_forms(32);
    REQUIRE(forms.size() > 100);
    for (const auto& q : forms) {
        const auto theta = gauss_sum(q);
        CHECK(std::abs(std::abs(theta) - 1.0) < 1e-9);
        std::vector<std::int64_t> shape(q.group().factors().begin(), q.group().factors().end());
        CHECK(std::abs(theta - oracle::diagonal_gauss_sum(shape, q.diagonal_coeffs())) < 1e-9);
    }
}

TEST_CASE("gauss sums are multiplicative over orthogonal sums")
{
    const auto forms = metric_forms(16);
    std::size_t pairs = 0;
    for (std::size_t i = 0; i < forms.size(); i += 2)
        for (std::size_t j = 0; j < forms.size(); j += 3) {
            const PreMetricGroup a(forms[i]);
            const PreMetricGroup b(forms[j]);
            const auto sum = orthogonal_sum(a, b);
            CHECK(sum.nondegenerate);
            CHECK(std::abs(gauss_sum(sum.form) - gauss_sum(a.form) * gauss_sum(b.form)) < 1e-9);
            ++pairs;
        }
    CHECK(pairs > 500);
}

TEST_CASE("scaling law for odd order")
{
    for (const auto& q : metric_forms(13)) {
        const std::int64_t n = q.group().order();
        if (n % 2 == 0)
            continue;
        for (std::int64_t k = 1; k <= 3 * n; ++k) {
            if (std::gcd(k, n) != 1)
                continue;
            CHECK(std::abs(gauss_sum(q.scaled(k)) - static_cast<double>(jacobi_symbol(k, n)) * gauss_sum(q)) < 1e-9);
        }
    }
}

TEST_CASE("boundary is bi-additive")
{
    for (const auto& s : shapes_up_to(16))
        for (const auto& q : diagonal_forms(s)) {
            const auto& g = q.group();
            if (g.order() > 8 && q.diagonal_coeffs()[0] > 2)
                continue;
            const auto elems = g.elements();
            for (const auto& a : elems)
                for (const auto& b : elems)
                    for (const auto& h : elems)
                        CHECK(q.boundary(g.add(a, b), h) == q.boundary(a, h) + q.boundary(b, h));
        }
}

TEST_CASE("forms on odd cyclic groups are determined by their boundary")
{
    for (std::int64_t n = 1; n <= 13; n += 2) {
        std::map<std::vector<QZValue>, std::int64_t> seen;
        const auto g = FiniteAbelianGroup::cyclic(n);
        for (std::int64_t c = 0; c < n; ++c) {
            const std::int64_t coeffs[] = {c};
            const auto q = QuadraticForm::diagonal(g, coeffs);
            std::vector<QZValue> table;
            for (const auto& a : g.elements())
                for (const auto& b : g.elements())
                    table.push_back(q.boundary(a, b));
            CHECK(seen.emplace(table, c).second);
        }
    }
}

TEST_CASE("weil S matrices are unitary and T is diagonal unitary")
{
    for (const auto& q : metric_forms(29)) {
        const auto& g = q.group();
        if (g.order() > 29 || g.order() % 2 == 0)
            continue;
        const auto data = weil_modular_data(g, q);
        const auto n = data.s.rows;
        double worst = 0.0;
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = 0; j < n; ++j) {
                std::complex<double> dot{};
                for (std::size_t l = 0; l < n; ++l)
                    dot += data.s(i, l) * std::conj(data.s(j, l));
                worst = std::max(worst, std::abs(dot - (i == j ? 1.0 : 0.0)));
                CHECK(data.s(i, j) == data.s(j, i));
                if (i != j)
                    CHECK(data.t(i, j) == 0.0);
            }
        CHECK(worst < 1e-9);
        for (std::size_t i = 0; i < n; ++i)
            CHECK(std::abs(std::abs(data.t(i, i)) - 1.0) < 1e-12);
    }
}

TEST_CASE("constructed fusion rings satisfy the ring axioms")
{
    for (std::int64_t n = 1; n <= 13; ++n) {
        const auto g = FiniteAbelianGroup::cyclic(n);
        for (std::int64_t m : {std::int64_t{0}, n - 1, n}) {
            const auto ring = make_near_group_ring(g, m);
            const auto report = verify_ring(ring);
            CHECK_MESSAGE(report.ok(), "NG(Z/", n, ", ", m, ")");
            const auto d = fp_dims(ring);
            CHECK(std::abs(d.back() - oracle::quadratic_root(static_cast<double>(m), static_cast<double>(n))) < 1e-9);
        }
        const auto hi = make_hi_ring(g);
        CHECK_MESSAGE(verify_ring(hi).ok(), "HI(Z/", n, ")");
        CHECK(std::abs(fp_dims(hi).back() - oracle::quadratic_root(static_cast<double>(n), 1.0)) < 1e-9);
    }
    for (const auto& shape : std::vector<std::vector<std::int64_t>>{{2, 2}, {3, 3}, {2, 4}, {2, 6}}) {
        const FiniteAbelianGroup g(shape);
        CHECK(verify_ring(make_near_group_ring(g, g.order())).ok());
        CHECK(verify_ring(make_near_group_ring(g, g.order() - 1)).ok());
        CHECK(verify_ring(make_hi_ring(g)).ok());
    }
}

TEST_CASE("constructed rings respect duality on structure constants")
{
    for (std::int64_t n = 1; n <= 9; ++n) {
        for (const auto& ring : {make_near_group_ring(FiniteAbelianGroup::cyclic(n), n),
                                 make_hi_ring(FiniteAbelianGroup::cyclic(n))}) {
            const auto r = ring.rank();
            for (std::size_t i = 0; i < r; ++i)
                for (std::size_t j = 0; j < r; ++j)
                    for (std::size_t k = 0; k < r; ++k)
                        CHECK(ring.n(i, j, k) == ring.n(ring.dual(j), ring.dual(i), ring.dual(k)));
        }
    }
}

TEST_CASE("the literal reading of the HI product is not associative beyond the trivial group")
{
    CHECK(verify_ring(make_hi_ring_literal(FiniteAbelianGroup())).ok());
    for (std::int64_t n = 2; n <= 7; ++n) {
        const auto report = verify_ring(make_hi_ring_literal(FiniteAbelianGroup::cyclic(n)));
        CHECK_FALSE(report.ok());
        bool assoc = false;
        for (const auto& v : report.violations)
            assoc = assoc || v.rfind("associativity", 0) == 0;
        CHECK(assoc);
    }
}
