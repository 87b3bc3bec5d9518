#include "fsind/agl.hpp"

#include "fsind/center.hpp"
#include "fsind/kernels.hpp"

#include <numeric>
#include <stdexcept>

namespace fsind {

Rational Rational::make(std::int64_t num, std::int64_t den)
{
    if (den == 0)
        throw std::invalid_argument("Rational: zero denominator");
    if (den < 0) {
        num = -num;
        den = -den;
    }
    const std::int64_t g = std::gcd(num, den);
    return {num / g, den / g};
}

std::string Rational::to_string() const
{
    return den == 1 ? std::to_string(num) : std::to_string(num) + "/" + std::to_string(den);
}

namespace {

using Poly = std::vector<std::int64_t>; // lowest degree first

std::int64_t mod(std::int64_t a, std::int64_t p)
{
    a %= p;
    return a < 0 ? a + p : a;
}

Poly digits(std::int64_t a, std::int64_t p, std::int64_t l)
{
    Poly d(static_cast<std::size_t>(l), 0);
    for (auto& x : d) {
        x = a % p;
        a /= p;
    }
    return d;
}

std::int64_t from_digits(const Poly& d, std::int64_t p)
{
    std::int64_t a = 0;
    for (std::size_t i = d.size(); i-- > 0;)
        a = a * p + d[i];
    return a;
}

/// (a * b) mod `modulus` over F_p; a, b of degree < l, modulus monic of degree l.
Poly mulmod(const Poly& a, const Poly& b, const Poly& modulus, std::int64_t p)
{
    const std::size_t l = modulus.size() - 1;
    Poly prod(2 * l, 0);
    for (std::size_t i = 0; i < l; ++i)
        for (std::size_t j = 0; j < l; ++j)
            prod[i + j] = mod(prod[i + j] + a[i] * b[j], p);
    for (std::size_t deg = prod.size(); deg-- > l;) {
        const std::int64_t c = prod[deg];
        if (c == 0)
            continue;
        for (std::size_t i = 0; i <= l; ++i)
            prod[deg - l + i] = mod(prod[deg - l + i] - c * modulus[i], p);
    }
    prod.resize(l);
    return prod;
}

/// Monic polynomial of degree l over F_p with no root-free factorization; found
/// by exhaustive search for the first one whose quotient ring has no zero divisors.
Poly find_irreducible(std::int64_t p, std::int64_t l)
{
    if (l == 1)
        return {0, 1};
    std::int64_t q = 1;
    for (std::int64_t i = 0; i < l; ++i)
        q *= p;
    for (std::int64_t tail = 0; tail < q; ++tail) {
        Poly m = digits(tail, p, l);
        m.push_back(1);
        if (m[0] == 0)
            continue;
        bool field = true;
        for (std::int64_t a = 1; a < q && field; ++a)
            for (std::int64_t b = a; b < q; ++b) {
                const Poly c = mulmod(digits(a, p, l), digits(b, p, l), m, p);
                if (from_digits(c, p) == 0) {
                    field = false;
                    break;
                }
            }
        if (field)
            return m;
    }
    throw std::logic_error("no irreducible polynomial found");
}

} // namespace

FiniteField::FiniteField(std::int64_t q) : q_(q)
{
    if (q < 2 || q > 4096)
        throw std::invalid_argument("FiniteField: order must be in [2, 4096]");
    for (std::int64_t p = 2; p <= q; ++p) {
        if (q % p == 0) {
            p_ = p;
            break;
        }
    }
    l_ = prime_power_exponent(q, p_);
    if (l_ == 0)
        throw std::invalid_argument("FiniteField: " + std::to_string(q) + " is not a prime power");
    modulus_ = find_irreducible(p_, l_);

    const auto n = static_cast<std::size_t>(q_);
    add_.resize(n * n);
    mul_.resize(n * n);
    inv_.assign(n, 0);
    for (std::int64_t a = 0; a < q_; ++a) {
        const Poly da = digits(a, p_, l_);
        for (std::int64_t b = 0; b < q_; ++b) {
            const Poly db = digits(b, p_, l_);
            Poly s(da.size());
            for (std::size_t i = 0; i < s.size(); ++i)
                s[i] = (da[i] + db[i]) % p_;
            add_[index(a, b)] = from_digits(s, p_);
            mul_[index(a, b)] = from_digits(mulmod(da, db, modulus_, p_), p_);
        }
    }
    for (std::int64_t a = 1; a < q_; ++a)
        for (std::int64_t b = 1; b < q_; ++b)
            if (mul(a, b) == 1)
                inv_[static_cast<std::size_t>(a)] = b;
}

std::int64_t FiniteField::neg(std::int64_t a) const
{
    for (std::int64_t b = 0; b < q_; ++b)
        if (add(a, b) == 0)
            return b;
    throw std::logic_error("no additive inverse");
}

std::int64_t FiniteField::inv(std::int64_t a) const
{
    if (a == 0)
        throw std::domain_error("zero has no inverse");
    return inv_[static_cast<std::size_t>(a)];
}

std::vector<std::int64_t> FiniteField::coordinates(std::int64_t a) const { return digits(a, p_, l_); }

AGLGroup::AGLGroup(std::int64_t q) : field_(q)
{
    for (std::int64_t a = 0; a < q; ++a)
        for (std::int64_t b = 1; b < q; ++b)
            elements_.push_back({a, b});
}

std::size_t AGLGroup::index_of(const Element& x) const
{
    return static_cast<std::size_t>(x.a * (field_.order() - 1) + (x.b - 1));
}

AGLGroup::Element AGLGroup::mul(const Element& x, const Element& y) const
{
    return {field_.add(x.a, field_.mul(x.b, y.a)), field_.mul(x.b, y.b)};
}

AGLGroup::Element AGLGroup::power(Element x, std::int64_t k) const
{
    Element r{0, 1};
    while (k > 0) {
        if (k & 1)
            r = mul(r, x);
        x = mul(x, x);
        k >>= 1;
    }
    return r;
}

std::int64_t AGLGroup::element_order(const Element& x) const
{
    Element y = x;
    std::int64_t n = 1;
    while (!(y == Element{0, 1})) {
        y = mul(y, x);
        ++n;
    }
    return n;
}

bool AGLGroup::is_abelian() const
{
    for (const auto& x : elements_)
        for (const auto& y : elements_)
            if (!(mul(x, y) == mul(y, x)))
                return false;
    return true;
}

std::optional<std::string> agl_degeneracy_warning(std::int64_t q)
{
    if (q == 2)
        return "q = 2 is degenerate: G is trivial and rho is the sign character of Z/2";
    return std::nullopt;
}

AGLGroup build_agl(std::int64_t q)
{
    if (q > 64)
        throw std::invalid_argument("build_agl: q must be at most 64");
    return AGLGroup(q);
}

std::vector<std::int64_t> agl_rho_character(const AGLGroup& group, const AdditiveCharacter& eta)
{
    const FiniteField& f = group.field();
    const std::int64_t p = f.characteristic();
    const std::int64_t q = f.order();
    if (static_cast<std::int64_t>(eta.coeffs.size()) != f.degree())
        throw std::invalid_argument("additive character needs one coefficient per field coordinate");
    bool nontrivial = false;
    for (auto c : eta.coeffs)
        nontrivial |= mod(c, p) != 0;
    if (!nontrivial)
        throw std::invalid_argument("additive character must be nontrivial");

    auto eta_exponent = [&](std::int64_t x) {
        const auto c = f.coordinates(x);
        std::int64_t e = 0;
        for (std::size_t i = 0; i < c.size(); ++i)
            e += eta.coeffs[i] * c[i];
        return mod(e, p);
    };

    std::vector<std::int64_t> chi(group.order(), 0);
    for (std::size_t i = 0; i < group.order(); ++i) {
        const auto& g = group.elements()[i];
        if (g.b != 1)
            continue;
        // q * rho(a, 1) = sum over (x, y) of zeta_p^{eta(y^{-1} a)}, kept as exponent counts.
        std::vector<std::int64_t> counts(static_cast<std::size_t>(p), 0);
        for (std::int64_t y = 1; y < q; ++y)
            counts[static_cast<std::size_t>(eta_exponent(f.mul(f.inv(y), g.a)))] += q;
        // sum_j c_j zeta^j is rational iff c_1 = ... = c_{p-1}; its value is then c_0 - c_1.
        for (std::size_t j = 2; j < counts.size(); ++j)
            if (counts[j] != counts[1])
                throw std::logic_error("character value is not rational");
        const std::int64_t scaled = counts[0] - (p > 1 ? counts[1] : 0);
        if (scaled % q != 0)
            throw std::logic_error("character value is not an integer");
        chi[i] = scaled / q;
    }
    return chi;
}

namespace {

std::vector<std::size_t> power_indices(const AGLGroup& group, std::int64_t k)
{
    std::vector<std::size_t> idx(group.order());
    for (std::size_t i = 0; i < group.order(); ++i)
        idx[i] = group.index_of(group.power(group.elements()[i], k));
    return idx;
}

AdditiveCharacter default_eta(const AGLGroup& group)
{
    AdditiveCharacter eta{std::vector<std::int64_t>(static_cast<std::size_t>(group.field().degree()), 0)};
    eta.coeffs[0] = 1;
    return eta;
}

} // namespace

Rational nu_agl_bruteforce(const AGLGroup& group, const AdditiveCharacter& eta, std::int64_t k)
{
    if (k < 1)
        throw std::invalid_argument("indicator degree k must be >= 1");
    const auto chi = agl_rho_character(group, eta);
    const auto idx = power_indices(group, k);
    return Rational::make(kernels::power_class_sum(chi, idx), static_cast<std::int64_t>(group.order()));
}

Rational nu_agl_bruteforce_serial(const AGLGroup& group, const AdditiveCharacter& eta, std::int64_t k)
{
    if (k < 1)
        throw std::invalid_argument("indicator degree k must be >= 1");
    const auto chi = agl_rho_character(group, eta);
    const auto idx = power_indices(group, k);
    return Rational::make(kernels::serial::power_class_sum(chi, idx), static_cast<std::int64_t>(group.order()));
}

Rational nu_agl_bruteforce(std::int64_t q, std::int64_t k)
{
    const AGLGroup group = build_agl(q);
    return nu_agl_bruteforce(group, default_eta(group), k);
}

Rational character_norm(const AGLGroup& group, const std::vector<std::int64_t>& chi)
{
    // Integer-valued characters are real, so <chi, chi> = |G|^{-1} sum chi(g)^2.
    std::int64_t s = 0;
    for (auto v : chi)
        s += v * v;
    return Rational::make(s, static_cast<std::int64_t>(group.order()));
}

} // namespace fsind
