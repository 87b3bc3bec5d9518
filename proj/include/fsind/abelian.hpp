#pragma once

#include "fsind/qz_value.hpp"

#include <cstddef>
#include <cstdint>
#include <span>
#include <string>
#include <vector>

namespace fsind {

/// Element of a product of cyclic groups, one reduced residue per factor.
struct GroupElement {
    std::vector<std::int64_t> residues;

    friend bool operator==(const GroupElement&, const GroupElement&) = default;
    friend auto operator<=>(const GroupElement&, const GroupElement&) = default;

    /// "(1,2)"; the trivial group's element prints as "()".
    std::string to_string() const;
};

/// Z/n_1 x ... x Z/n_r, written additively. Used exactly as presented:
/// no Smith normal form, so Z/3 x Z/3 and Z/9 are different presentations.
class FiniteAbelianGroup {
public:
    /// The trivial group (empty factor list).
    FiniteAbelianGroup() = default;
    explicit FiniteAbelianGroup(std::vector<std::int64_t> cyclic_factors);

    static FiniteAbelianGroup cyclic(std::int64_t n) { return FiniteAbelianGroup({n}); }

    std::span<const std::int64_t> factors() const { return factors_; }
    std::size_t rank() const { return factors_.size(); }
    std::int64_t order() const { return order_; }
    std::int64_t exponent() const { return exponent_; }
    bool is_cyclic() const;

    bool contains(const GroupElement& a) const;
    GroupElement identity() const;
    /// Reduces arbitrary integer residues into this group.
    GroupElement element(std::vector<std::int64_t> residues) const;

    GroupElement add(const GroupElement& a, const GroupElement& b) const;
    GroupElement neg(const GroupElement& a) const;
    GroupElement sub(const GroupElement& a, const GroupElement& b) const { return add(a, neg(b)); }
    GroupElement scalar_mul(std::int64_t k, const GroupElement& a) const;

    /// All elements in lexicographic residue order, identity first.
    std::vector<GroupElement> elements() const;
    /// Position of `a` in `elements()` (mixed radix, last factor fastest).
    std::size_t index_of(const GroupElement& a) const;
    GroupElement element_at(std::size_t index) const;

    /// |{g : k g = h}|
    std::int64_t power_count(std::int64_t k, const GroupElement& h) const;

    /// Phase of the standard pairing chi_h(g) = exp(2 pi i sum h_i g_i / n_i).
    QZValue character_value(const GroupElement& h, const GroupElement& g) const;

    FiniteAbelianGroup direct_product(const FiniteAbelianGroup& other) const;

    friend bool operator==(const FiniteAbelianGroup& a, const FiniteAbelianGroup& b)
    {
        return a.factors_ == b.factors_;
    }

    /// "Z/3", "Z/3xZ/3", "1" for the trivial group.
    std::string to_string() const;

private:
    void check(const GroupElement& a) const;

    std::vector<std::int64_t> factors_;
    std::int64_t order_ = 1;
    std::int64_t exponent_ = 1;
};

} // namespace fsind
