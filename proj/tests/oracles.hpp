#pragma once

// Brute-force reference computations used only by the tests. Nothing here
// calls into the library's evaluation paths.

#include <cmath>
#include <complex>
#include <cstdint>
#include <numbers>
#include <numeric>
#include <vector>

namespace oracle {

inline std::complex<double> expi(double turns)
{
    const double a = 2.0 * std::numbers::pi * turns;
    return {std::cos(a), std::sin(a)};
}

/// All residue vectors of Z/n_1 x ... x Z/n_r, last factor fastest.
inline std::vector<std::vector<std::int64_t>> elements(const std::vector<std::int64_t>& factors)
{
    std::vector<std::vector<std::int64_t>> out{{}};
    for (auto n : factors) {
        std::vector<std::vector<std::int64_t>> next;
        for (const auto& e : out)
            for (std::int64_t x = 0; x < n; ++x) {
                auto f = e;
                f.push_back(x);
                next.push_back(std::move(f));
            }
        out = std::move(next);
    }
    return out;
}

/// #{g : k g = 0} by enumeration.
inline std::int64_t power_count(const std::vector<std::int64_t>& factors, std::int64_t k)
{
    std::int64_t count = 0;
    for (const auto& g : elements(factors)) {
        bool zero = true;
        for (std::size_t i = 0; i < g.size(); ++i)
            zero = zero && (k * g[i]) % factors[i] == 0;
        count += zero ? 1 : 0;
    }
    return count;
}

/// |G|^{-1/2} sum_g exp(2 pi i sum_i c_i g_i^2 / n_i), evaluated in floating point.
inline std::complex<double> diagonal_gauss_sum(const std::vector<std::int64_t>& factors,
                                               const std::vector<std::int64_t>& coeffs)
{
    std::complex<double> s{};
    std::int64_t order = 0;
    for (const auto& g : elements(factors)) {
        double turns = 0.0;
        for (std::size_t i = 0; i < g.size(); ++i)
            turns += static_cast<double>(coeffs[i] * g[i] * g[i] % factors[i]) / static_cast<double>(factors[i]);
        s += expi(turns);
        ++order;
    }
    return s / std::sqrt(static_cast<double>(order));
}

/// Legendre symbol by residue enumeration, p an odd prime.
inline int legendre(std::int64_t a, std::int64_t p)
{
    a = ((a % p) + p) % p;
    if (a == 0)
        return 0;
    for (std::int64_t x = 1; x < p; ++x)
        if (x * x % p == a)
            return 1;
    return -1;
}

/// Jacobi symbol as the product of Legendre symbols over the prime factorization.
inline int jacobi(std::int64_t a, std::int64_t n)
{
    int r = 1;
    for (std::int64_t p = 3; n > 1; p += 2) {
        while (n % p == 0) {
            r *= legendre(a, p);
            n /= p;
        }
    }
    return r;
}

/// nu_k of the q - 1 dimensional irreducible of AGL_1(F_p), p prime, built from
/// the induced-character formula with complex exponentials.
inline double agl_prime_indicator(std::int64_t p, std::int64_t k)
{
    auto mul = [&](std::int64_t a, std::int64_t b) { return a * b % p; };
    auto inv = [&](std::int64_t a) {
        for (std::int64_t b = 1; b < p; ++b)
            if (mul(a, b) == 1)
                return b;
        return std::int64_t{0};
    };
    auto rho = [&](std::int64_t a, std::int64_t b) {
        if (b != 1)
            return std::complex<double>{};
        std::complex<double> s{};
        for (std::int64_t x = 0; x < p; ++x)
            for (std::int64_t y = 1; y < p; ++y)
                s += expi(static_cast<double>(mul(inv(y), a)) / static_cast<double>(p));
        return s / static_cast<double>(p);
    };
    std::complex<double> total{};
    for (std::int64_t a = 0; a < p; ++a)
        for (std::int64_t b = 1; b < p; ++b) {
            std::int64_t x = 0, y = 1;
            for (std::int64_t i = 0; i < k; ++i) {
                x = (x + y * a) % p;
                y = mul(y, b);
            }
            total += rho(x, y);
        }
    return total.real() / static_cast<double>(p * (p - 1));
}

/// Positive root of d^2 = m d + n.
inline double quadratic_root(double m, double n) { return (m + std::sqrt(m * m + 4.0 * n)) / 2.0; }

} // namespace oracle
