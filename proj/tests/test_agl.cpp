#include "fsind/agl.hpp"
#include "fsind/center.hpp"

#include "doctest.h"
#include "oracles.hpp"

#include <cmath>

using namespace fsind;

namespace {

std::int64_t max_order(const AGLGroup& g)
{
    std::int64_t best = 1;
    for (const auto& x : g.elements())
        best = std::max(best, g.element_order(x));
    return best;
}

/// nu_k for AGL_1(F_q): [q | k] (q - 1) ... written in terms of counts only.
/// rho = Ind(eta) - trivial restricted to translations; this counts solutions directly.
std::int64_t closed_numerator(std::int64_t q, std::int64_t k)
{
    // nu_k = #{g : g^k = 1 in the translation part, b^k = 1} handled by the library; here we only use
    // the integer identity nu_k = (#{x in F_q^x : x^k = 1} - 1) + [p | k] for q prime.
    std::int64_t roots = 0;
    for (std::int64_t x = 1; x < q; ++x) {
        std::int64_t y = 1;
        for (std::int64_t i = 0; i < k; ++i)
            y = y * x % q;
        roots += y == 1 ? 1 : 0;
    }
    return roots - 1 + (k % q == 0 ? 1 : 0);
}

} // namespace

TEST_CASE("finite fields")
{
    for (std::int64_t q : {2, 3, 4, 5, 7, 8, 9, 16, 25, 27, 32, 49, 64}) {
        const FiniteField f(q);
        CHECK(f.order() == q);
        CHECK(prime_power_exponent(q, f.characteristic()) == f.degree());
        for (std::int64_t a = 1; a < q; ++a) {
            CHECK(f.mul(a, f.inv(a)) == 1);
            CHECK(f.add(a, f.neg(a)) == 0);
        }
        for (std::int64_t a = 0; a < q; ++a)
            for (std::int64_t b = 0; b < q; ++b) {
                if (a != 0 && b != 0)
                    CHECK(f.mul(a, b) != 0);
                CHECK(f.mul(a, b) == f.mul(b, a));
            }
    }
    CHECK_THROWS_AS(FiniteField(6), std::invalid_argument);
    CHECK_THROWS_AS(FiniteField(1), std::invalid_argument);
    CHECK_THROWS_AS(FiniteField(8192), std::invalid_argument);
    CHECK_THROWS_AS(build_agl(81), std::invalid_argument);
}

TEST_CASE("small affine groups")
{
    const auto s3 = build_agl(3);
    CHECK(s3.order() == 6);
    CHECK_FALSE(s3.is_abelian());
    CHECK(max_order(s3) == 3);

    const auto a4 = build_agl(4);
    CHECK(a4.order() == 12);
    CHECK_FALSE(a4.is_abelian());
    CHECK(max_order(a4) == 3);

    const auto z2 = build_agl(2);
    CHECK(z2.order() == 2);
    CHECK(z2.is_abelian());

    for (std::int64_t q : {5, 7, 8, 9}) {
        const auto g = build_agl(q);
        for (const auto& x : g.elements()) {
            CHECK(g.power(x, g.element_order(x)) == AGLGroup::Element{});
            CHECK(g.index_of(x) < g.order());
        }
    }
}

TEST_CASE("rho is irreducible of degree q - 1")
{
    for (std::int64_t q : {2, 3, 4, 5, 7, 8, 9, 16, 27}) {
        const auto g = build_agl(q);
        const AdditiveCharacter eta{std::vector<std::int64_t>(static_cast<std::size_t>(g.field().degree()), 0)};
        auto e = eta;
        e.coeffs[0] = 1;
        const auto chi = agl_rho_character(g, e);
        CHECK(chi[g.index_of({})] == q - 1);
        CHECK(character_norm(g, chi) == Rational::make(1, 1));
    }
}

TEST_CASE("brute force matches the induced-character oracle for prime q")
{
    for (std::int64_t p : {2, 3, 5, 7, 11, 13}) {
        for (std::int64_t k = 1; k <= 2 * p * (p - 1); ++k) {
            const auto v = nu_agl_bruteforce(p, k);
            CHECK(v.den == 1);
            CHECK(std::abs(v.to_double() - oracle::agl_prime_indicator(p, k)) < 1e-9);
            CHECK(v.num == closed_numerator(p, k));
        }
    }
}

TEST_CASE("brute force is independent of the additive character")
{
    for (std::int64_t q : {4, 8, 9, 25}) {
        const auto g = build_agl(q);
        const auto l = static_cast<std::size_t>(g.field().degree());
        const auto p = g.field().characteristic();
        std::vector<AdditiveCharacter> etas;
        for (std::int64_t code = 1; code < q; ++code) {
            AdditiveCharacter e{std::vector<std::int64_t>(l)};
            std::int64_t c = code;
            for (std::size_t i = 0; i < l; ++i, c /= p)
                e.coeffs[i] = c % p;
            etas.push_back(e);
        }
        for (std::int64_t k = 1; k <= 12; ++k) {
            const auto ref = nu_agl_bruteforce(g, etas.front(), k);
            for (const auto& e : etas)
                CHECK(nu_agl_bruteforce(g, e, k) == ref);
            CHECK(nu_agl_bruteforce_serial(g, etas.front(), k) == ref);
        }
    }
}

TEST_CASE("rationals")
{
    CHECK(Rational::make(4, -6) == Rational{-2, 3});
    CHECK(Rational::make(0, 5) == Rational{0, 1});
    CHECK(Rational::make(3, 1).to_string() == "3");
    CHECK(Rational::make(-1, 2).to_string() == "-1/2");
    CHECK_THROWS(Rational::make(1, 0));
}
