#pragma once

#include "fsind/abelian.hpp"

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace fsind {

/// A based ring with non-negative structure constants b_i b_j = sum_k N[i][j][k] b_k.
class FusionRing {
public:
    FusionRing(std::vector<std::string> labels, std::size_t unit, std::vector<std::size_t> dual,
               std::vector<std::int64_t> structure);

    std::size_t rank() const { return labels_.size(); }
    std::size_t unit() const { return unit_; }
    const std::vector<std::string>& labels() const { return labels_; }
    const std::string& label(std::size_t i) const { return labels_.at(i); }
    std::size_t dual(std::size_t i) const { return dual_.at(i); }
    const std::vector<std::size_t>& duals() const { return dual_; }

    std::int64_t n(std::size_t i, std::size_t j, std::size_t k) const
    {
        return structure_[(i * rank() + j) * rank() + k];
    }
    void set_n(std::size_t i, std::size_t j, std::size_t k, std::int64_t value)
    {
        structure_[(i * rank() + j) * rank() + k] = value;
    }
    const std::vector<std::int64_t>& structure() const { return structure_; }

    std::optional<std::size_t> find(const std::string& label) const;
    /// Throws std::invalid_argument for unknown labels.
    std::size_t index_of(const std::string& label) const;

    friend bool operator==(const FusionRing&, const FusionRing&) = default;

private:
    std::vector<std::string> labels_;
    std::size_t unit_;
    std::vector<std::size_t> dual_;
    std::vector<std::int64_t> structure_;
};

/// Canonical labels: "g:(1,2)" for group elements, "rho", "grho:(2)".
std::string group_label(const GroupElement& g);
std::string grho_label(const GroupElement& g);
inline const char* rho_label() { return "rho"; }

/// G u {rho}: rho g = g rho = rho, rho^2 = m rho + sum_h h.
FusionRing make_near_group_ring(const FiniteAbelianGroup& group, std::int64_t m);

/// {g} u {g rho}: g (h rho) = (g+h) rho, (h rho) g = (h-g) rho,
/// (g rho)(h rho) = (g-h) + sum_a a rho.
FusionRing make_hi_ring(const FiniteAbelianGroup& group);

/// The relation with the summand read literally as |G| copies of g rho, kept so
/// the report can show that this reading is not associative.
FusionRing make_hi_ring_literal(const FiniteAbelianGroup& group);

struct RingReport {
    std::vector<std::string> violations;
    bool ok() const { return violations.empty(); }
};

/// Checks unit, associativity, duality and existence of FP dimensions exhaustively.
/// Reports at most `max_listed` associativity defects individually.
RingReport verify_ring(const FusionRing& ring, std::size_t max_listed = 8);

/// Perron-Frobenius dimensions, d_unit = 1. Throws std::runtime_error if the
/// power iteration does not converge (tolerance 1e-12, at most 1e5 steps).
std::vector<double> fp_dims(const FusionRing& ring);
double global_fpdim(const FusionRing& ring);

} // namespace fsind
