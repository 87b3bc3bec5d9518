#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace fsind {

/// Exact rational num/den with den > 0, reduced.
struct Rational {
    std::int64_t num = 0;
    std::int64_t den = 1;

    static Rational make(std::int64_t num, std::int64_t den);
    double to_double() const { return static_cast<double>(num) / static_cast<double>(den); }
    std::string to_string() const;
    friend bool operator==(const Rational&, const Rational&) = default;
};

/// F_q for q = p^l: elements are integers 0..q-1 read as base-p digit vectors
/// (digit i = coefficient of x^i) modulo a monic irreducible polynomial.
class FiniteField {
public:
    /// Throws std::invalid_argument unless q is a prime power in [2, 4096].
    explicit FiniteField(std::int64_t q);

    std::int64_t order() const { return q_; }
    std::int64_t characteristic() const { return p_; }
    std::int64_t degree() const { return l_; }
    /// Monic modulus coefficients, lowest degree first (size l + 1).
    const std::vector<std::int64_t>& modulus() const { return modulus_; }

    std::int64_t add(std::int64_t a, std::int64_t b) const { return add_[index(a, b)]; }
    std::int64_t mul(std::int64_t a, std::int64_t b) const { return mul_[index(a, b)]; }
    std::int64_t neg(std::int64_t a) const;
    std::int64_t inv(std::int64_t a) const;
    /// Base-p coordinate vector of a.
    std::vector<std::int64_t> coordinates(std::int64_t a) const;

private:
    std::size_t index(std::int64_t a, std::int64_t b) const
    {
        return static_cast<std::size_t>(a * q_ + b);
    }

    std::int64_t q_;
    std::int64_t p_ = 0;
    std::int64_t l_ = 0;
    std::vector<std::int64_t> modulus_;
    std::vector<std::int64_t> add_;
    std::vector<std::int64_t> mul_;
    std::vector<std::int64_t> inv_;
};

/// AGL_1(F_q) = F_q x| F_q^x with (a, b)(a', b') = (a + b a', b b').
class AGLGroup {
public:
    explicit AGLGroup(std::int64_t q);

    struct Element {
        std::int64_t a = 0;
        std::int64_t b = 1;
        friend bool operator==(const Element&, const Element&) = default;
    };

    const FiniteField& field() const { return field_; }
    std::size_t order() const { return elements_.size(); }
    const std::vector<Element>& elements() const { return elements_; }
    std::size_t index_of(const Element& x) const;

    Element mul(const Element& x, const Element& y) const;
    Element power(Element x, std::int64_t k) const;
    /// Order of the element in the group.
    std::int64_t element_order(const Element& x) const;
    bool is_abelian() const;

private:
    FiniteField field_;
    std::vector<Element> elements_;
};

AGLGroup build_agl(std::int64_t q);

/// A message for parameters that are valid but degenerate (q = 2: AGL_1 is Z/2
/// and rho is its sign character); empty otherwise.
std::optional<std::string> agl_degeneracy_warning(std::int64_t q);

/// Additive character eta_c(x) = exp(2 pi i <c, coords(x)> / p) for a nonzero
/// coefficient vector c. The default is c = (1, 0, ..., 0).
struct AdditiveCharacter {
    std::vector<std::int64_t> coeffs;
};

/// The degree q-1 character rho(a, b) = [b = 1] q^{-1} sum_{(x,y)} eta(y^{-1} a),
/// evaluated exactly in Z[zeta_p] and returned as integers in element order.
std::vector<std::int64_t> agl_rho_character(const AGLGroup& group, const AdditiveCharacter& eta);

/// nu_k(rho) = |G|^{-1} sum_g rho(g^k), exact.
Rational nu_agl_bruteforce(std::int64_t q, std::int64_t k);
Rational nu_agl_bruteforce(const AGLGroup& group, const AdditiveCharacter& eta, std::int64_t k);
/// Serial reference of the class sum, for kernel checks.
Rational nu_agl_bruteforce_serial(const AGLGroup& group, const AdditiveCharacter& eta, std::int64_t k);

/// <chi, chi> for an integer-valued class function given in element order.
Rational character_norm(const AGLGroup& group, const std::vector<std::int64_t>& chi);

} // namespace fsind
