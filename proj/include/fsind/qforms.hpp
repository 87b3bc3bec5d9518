#pragma once

#include "fsind/abelian.hpp"
#include "fsind/qz_value.hpp"

#include <complex>
#include <cstdint>
#include <span>
#include <string>
#include <vector>

namespace fsind {

struct PreMetricGroup;

/// One term coeff * g_factor^2 / n_factor of a monomial quadratic form.
struct MonomialTerm {
    std::size_t factor = 0;
    std::int64_t coeff = 0;
};

/// A quadratic form q: G -> Q/Z, stored densely in `G.elements()` order.
///
/// The associated bilinear form is taken with the sign
///     dq(g, h) = q(g + h) - q(g) - q(h),
/// so that <g, g> = exp(2 pi i * 2 q(g)).
class QuadraticForm {
public:
    /// Sum of coeff * g_i^2 / n_i over the given terms; always a valid form.
    static QuadraticForm monomial(const FiniteAbelianGroup& group, std::span<const MonomialTerm> terms);
    /// One coefficient per cyclic factor: sum_i coeffs[i] * g_i^2 / n_i.
    static QuadraticForm diagonal(const FiniteAbelianGroup& group, std::span<const std::int64_t> coeffs);
    static QuadraticForm zero(const FiniteAbelianGroup& group);
    /// Dense table; throws std::invalid_argument unless q(e) = 0, q(-g) = q(g)
    /// and dq is bi-additive.
    static QuadraticForm from_table(const FiniteAbelianGroup& group, std::vector<QZValue> values);

    const FiniteAbelianGroup& group() const { return group_; }
    std::span<const QZValue> values() const { return values_; }
    QZValue value(const GroupElement& g) const { return values_[group_.index_of(g)]; }
    QZValue value_at(std::size_t index) const { return values_[index]; }

    QZValue boundary(const GroupElement& g, const GroupElement& h) const;
    std::complex<double> bicharacter(const GroupElement& g, const GroupElement& h) const;

    /// Pointwise k * q. May be degenerate even if q is not.
    QuadraticForm scaled(std::int64_t k) const;
    QuadraticForm negated() const { return scaled(-1); }
    /// The form p with 2p = q; requires every value denominator to be odd.
    QuadraticForm halved() const;

    /// True iff h -> dq(., h) has trivial kernel.
    bool is_nondegenerate() const;

    /// Coefficients if the form was built as a diagonal monomial, for display.
    const std::vector<std::int64_t>& diagonal_coeffs() const { return diag_; }
    bool has_diagonal_coeffs() const { return !diag_.empty() || group_.rank() == 0; }

    /// "g^2/3", "(g^2-h^2)/3", or "table" for non-monomial forms.
    std::string to_string() const;

    friend bool operator==(const QuadraticForm& a, const QuadraticForm& b)
    {
        return a.group_ == b.group_ && a.values_ == b.values_;
    }

private:
    QuadraticForm(FiniteAbelianGroup group, std::vector<QZValue> values);
    void recompute_diagonal();

    friend struct PreMetricGroup;
    friend PreMetricGroup orthogonal_sum(const PreMetricGroup&, const PreMetricGroup&);

    FiniteAbelianGroup group_;
    std::vector<QZValue> values_;
    std::vector<std::int64_t> diag_;
};

QuadraticForm scale_form(std::int64_t k, const QuadraticForm& q);

/// (G, q) with nondegeneracy of dq computed at construction.
struct PreMetricGroup {
    explicit PreMetricGroup(QuadraticForm q);

    const FiniteAbelianGroup& group() const { return form.group(); }

    QuadraticForm form;
    bool nondegenerate = false;
};

/// G1 x G2 with q1(g1) + q2(g2).
PreMetricGroup orthogonal_sum(const PreMetricGroup& a, const PreMetricGroup& b);

/// Theta(G, q) = |G|^{-1/2} sum_g exp(2 pi i q(g)) by direct summation.
std::complex<double> gauss_sum(const QuadraticForm& q);
std::complex<double> gauss_sum(const FiniteAbelianGroup& group, const QuadraticForm& q);

/// Jacobi symbol (a/n) for odd n >= 1; throws std::invalid_argument for even n.
int jacobi_symbol(std::int64_t a, std::int64_t n);

/// Reads a phase off a unit complex number if it is exactly a root of unity
/// of order <= max_order (to tol); returns false otherwise.
bool recognize_root_of_unity(std::complex<double> z, QZValue& phase, std::int64_t max_order = 1024,
                             double tol = 1e-9);

} // namespace fsind
