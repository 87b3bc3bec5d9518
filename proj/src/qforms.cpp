#include "fsind/qforms.hpp"

#include "fsind/kernels.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <numeric>
#include <stdexcept>

namespace fsind {

QuadraticForm::QuadraticForm(FiniteAbelianGroup group, std::vector<QZValue> values)
    : group_(std::move(group)), values_(std::move(values))
{
    if (values_.size() != static_cast<std::size_t>(group_.order()))
        throw std::invalid_argument("QuadraticForm: table size does not match group order");
}

QuadraticForm QuadraticForm::monomial(const FiniteAbelianGroup& group, std::span<const MonomialTerm> terms)
{
    const auto factors = group.factors();
    for (const auto& t : terms)
        if (t.factor >= factors.size())
            throw std::invalid_argument("monomial term refers to factor " + std::to_string(t.factor) +
                                        " of " + group.to_string());
    std::vector<QZValue> values;
    values.reserve(static_cast<std::size_t>(group.order()));
    for (const auto& g : group.elements()) {
        QZValue v;
        for (const auto& t : terms) {
            const std::int64_t x = g.residues[t.factor];
            const std::int64_t n = factors[t.factor];
            v += QZValue(((t.coeff % n) * ((x * x) % n)) % n, n);
        }
        values.push_back(v);
    }
    QuadraticForm q(group, std::move(values));
    q.recompute_diagonal();
    return q;
}

QuadraticForm QuadraticForm::diagonal(const FiniteAbelianGroup& group, std::span<const std::int64_t> coeffs)
{
    if (coeffs.size() != group.rank())
        throw std::invalid_argument("diagonal form needs one coefficient per cyclic factor");
    std::vector<MonomialTerm> terms;
    for (std::size_t i = 0; i < coeffs.size(); ++i)
        terms.push_back({i, coeffs[i]});
    return monomial(group, terms);
}

QuadraticForm QuadraticForm::zero(const FiniteAbelianGroup& group)
{
    return monomial(group, std::span<const MonomialTerm>{});
}

QuadraticForm QuadraticForm::from_table(const FiniteAbelianGroup& group, std::vector<QZValue> values)
{
    QuadraticForm q(group, std::move(values));
    const auto elems = group.elements();
    if (!q.values_.empty() && !q.values_[0].is_zero())
        throw std::invalid_argument("quadratic form must vanish at the identity");
    for (const auto& g : elems)
        if (q.value(g) != q.value(group.neg(g)))
            throw std::invalid_argument("quadratic form must satisfy q(-g) = q(g)");
    for (const auto& g1 : elems)
        for (const auto& g2 : elems)
            for (const auto& h : elems)
                if (q.boundary(group.add(g1, g2), h) != q.boundary(g1, h) + q.boundary(g2, h))
                    throw std::invalid_argument("boundary of the form is not bi-additive");
    q.recompute_diagonal();
    return q;
}

void QuadraticForm::recompute_diagonal()
{
    // Recover coefficients a_i with q = sum a_i g_i^2 / n_i when that shape fits.
    diag_.clear();
    const auto factors = group_.factors();
    std::vector<std::int64_t> coeffs;
    for (std::size_t i = 0; i < factors.size(); ++i) {
        GroupElement unit = group_.identity();
        if (factors[i] > 1)
            unit.residues[i] = 1;
        const QZValue v = value(unit);
        coeffs.push_back(v.numerator() * (factors[i] / v.denominator()));
        if (factors[i] % v.denominator() != 0)
            return;
    }
    std::size_t idx = 0;
    for (const auto& g : group_.elements()) {
        QZValue v;
        for (std::size_t i = 0; i < factors.size(); ++i)
            v += QZValue((coeffs[i] % factors[i]) * ((g.residues[i] * g.residues[i]) % factors[i]), factors[i]);
        if (v != values_[idx++])
            return;
    }
    diag_ = std::move(coeffs);
}

QZValue QuadraticForm::boundary(const GroupElement& g, const GroupElement& h) const
{
    return value(group_.add(g, h)) - value(g) - value(h);
}

std::complex<double> QuadraticForm::bicharacter(const GroupElement& g, const GroupElement& h) const
{
    return boundary(g, h).to_complex();
}

QuadraticForm QuadraticForm::scaled(std::int64_t k) const
{
    std::vector<QZValue> v;
    v.reserve(values_.size());
    for (const auto& x : values_)
        v.push_back(x.scaled(k));
    QuadraticForm q(group_, std::move(v));
    q.recompute_diagonal();
    return q;
}

QuadraticForm QuadraticForm::halved() const
{
    std::int64_t den = 1;
    for (const auto& x : values_)
        den = std::lcm(den, x.denominator());
    if (den % 2 == 0)
        throw std::invalid_argument("cannot halve a form with even value denominators");
    return scaled((den + 1) / 2);
}

bool QuadraticForm::is_nondegenerate() const
{
    const auto elems = group_.elements();
    for (std::size_t hi = 1; hi < elems.size(); ++hi) {
        bool in_kernel = true;
        for (const auto& g : elems) {
            if (!boundary(g, elems[hi]).is_zero()) {
                in_kernel = false;
                break;
            }
        }
        if (in_kernel)
            return false;
    }
    return true;
}

std::string QuadraticForm::to_string() const
{
    if (!has_diagonal_coeffs())
        return "table";
    static constexpr const char* names[] = {"g", "h", "k", "l", "m", "n"};
    const auto factors = group_.factors();
    if (factors.empty())
        return "0";
    std::int64_t den = 1;
    for (auto n : factors)
        den = std::lcm(den, n);
    std::string body;
    bool any = false;
    for (std::size_t i = 0; i < factors.size(); ++i) {
        const std::int64_t n = factors[i];
        std::int64_t a = ((diag_[i] % n) + n) % n;
        if (a == 0)
            continue;
        // Prefer the representative closest to zero: -g^2/3 rather than 2g^2/3.
        if (2 * a > n)
            a -= n;
        const std::int64_t c = a * (den / n);
        const std::string var = i < 6 ? names[i] : "x" + std::to_string(i);
        if (c < 0)
            body += "-";
        else if (any)
            body += "+";
        if (std::abs(c) != 1)
            body += std::to_string(std::abs(c));
        body += var + "^2";
        any = true;
    }
    if (!any)
        return "0";
    const bool several = std::count(body.begin(), body.end(), '^') > 1;
    return (several ? "(" + body + ")" : body) + "/" + std::to_string(den);
}

QuadraticForm scale_form(std::int64_t k, const QuadraticForm& q) { return q.scaled(k); }

PreMetricGroup::PreMetricGroup(QuadraticForm q) : form(std::move(q)), nondegenerate(form.is_nondegenerate()) {}

PreMetricGroup orthogonal_sum(const PreMetricGroup& a, const PreMetricGroup& b)
{
    const FiniteAbelianGroup g = a.group().direct_product(b.group());
    std::vector<QZValue> values;
    values.reserve(static_cast<std::size_t>(g.order()));
    // Lexicographic order on the product is (index in a) * |b| + (index in b).
    for (const auto& x : a.form.values())
        for (const auto& y : b.form.values())
            values.push_back(x + y);
    QuadraticForm q(g, std::move(values));
    q.recompute_diagonal();
    return PreMetricGroup(std::move(q));
}

std::complex<double> gauss_sum(const QuadraticForm& q) { return kernels::gauss_sum(q.values()); }

std::complex<double> gauss_sum(const FiniteAbelianGroup& group, const QuadraticForm& q)
{
    if (!(group == q.group()))
        throw std::invalid_argument("gauss_sum: form is defined on " + q.group().to_string() + ", not " +
                                    group.to_string());
    return gauss_sum(q);
}

int jacobi_symbol(std::int64_t a, std::int64_t n)
{
    if (n < 1 || n % 2 == 0)
        throw std::invalid_argument("jacobi_symbol: modulus must be odd and positive");
    a %= n;
    if (a < 0)
        a += n;
    int t = 1;
    while (a != 0) {
        while (a % 2 == 0) {
            a /= 2;
            const std::int64_t r = n % 8;
            if (r == 3 || r == 5)
                t = -t;
        }
        std::swap(a, n);
        if (a % 4 == 3 && n % 4 == 3)
            t = -t;
        a %= n;
    }
    return n == 1 ? t : 0;
}

bool recognize_root_of_unity(std::complex<double> z, QZValue& phase, std::int64_t max_order, double tol)
{
    if (std::abs(std::abs(z) - 1.0) > tol)
        return false;
    double turns = std::arg(z) / (2.0 * std::numbers::pi);
    if (turns < 0)
        turns += 1.0;
    for (std::int64_t den = 1; den <= max_order; ++den) {
        const auto num = static_cast<std::int64_t>(std::llround(turns * static_cast<double>(den)));
        const QZValue candidate(num, den);
        if (std::abs(candidate.to_complex() - z) < tol) {
            phase = candidate;
            return true;
        }
    }
    return false;
}

} // namespace fsind
