#pragma once

#include "fsind/abelian.hpp"
#include "fsind/category_spec.hpp"
#include "fsind/center.hpp"
#include "fsind/kernels.hpp"
#include "fsind/qforms.hpp"
#include "fsind/qz_value.hpp"

#include <complex>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

namespace fsind {

inline constexpr double kDefaultTolerance = 1e-9;

// ---------------------------------------------------------------------------
// Center summation

/// Per-object terms theta_V and qdim(V) dim Hom(F(V), target).
std::vector<kernels::CenterTerm> center_terms(const CenterPresentation& p, std::size_t target);

/// nu_k(target) = qdim(C)^{-1} sum_V theta_V^k qdim(V) dim Hom(F(V), target).
/// Throws std::invalid_argument for an unknown label or k < 1.
std::complex<double> nu_from_center(const CenterPresentation& p, const std::string& target, std::int64_t k);

// ---------------------------------------------------------------------------
// Closed forms

/// Exact value (theta_k(e) - 1) + conj(zeta1)^k [p | k]: an integer plus
/// at most one root of unity.
struct Ng1Value {
    std::int64_t integer_part = 0;
    std::optional<QZValue> root;

    std::complex<double> to_complex() const;
    /// True when the value is an integer (no root, or the root is 1).
    bool is_integer() const { return !root || root->is_zero(); }
    std::int64_t as_integer() const { return integer_part + (root ? 1 : 0); }
};

Ng1Value nu_ng1_exact(const FiniteAbelianGroup& group, std::int64_t p, const QZValue& zeta1, std::int64_t k);
std::complex<double> nu_ng1_closed(const FiniteAbelianGroup& group, std::int64_t p, const QZValue& zeta1,
                                   std::int64_t k);
/// |G| = 7, s = -1: (theta_k(e) - 1) + (-1)^{k/2} [2 | k].
std::complex<double> nu_ng1x_closed(std::int64_t k);

/// m = |G| near group in terms of the E-object twists omega_j (one per E object).
std::complex<double> nu_ng2_omega(const FiniteAbelianGroup& group, const QuadraticForm& q,
                                  std::span<const QZValue> omegas, std::int64_t k);
/// 1/2 theta_k(e) + 1/2 Theta(G, 2kq) Theta(G', 2kq').
std::complex<double> nu_ng2_closed(const FiniteAbelianGroup& group, const QuadraticForm& q,
                                   const FiniteAbelianGroup& group_prime, const QuadraticForm& q_prime,
                                   std::int64_t k);
/// 1/2 (1 - (k / |G||G'|)); requires gcd(k, |G||G'|) = 1.
double nu_ng2_jacobi(const FiniteAbelianGroup& group, const FiniteAbelianGroup& group_prime, std::int64_t k);
/// 1/2 theta_k(e) + 1/2 Theta(H, k m q''), m = (|H| - 1) / 2.
std::complex<double> nu_hi_closed(const FiniteAbelianGroup& group, const FiniteAbelianGroup& h_group,
                                  const QuadraticForm& q_hi, std::int64_t k);

/// Closed form for the spec's family.
std::complex<double> nu_closed(const CategorySpec& spec, std::int64_t k);
/// Center sum for the spec's family at rho.
std::complex<double> nu_center(const CategorySpec& spec, std::int64_t k);

// ---------------------------------------------------------------------------
// Orientation calibration

/// Result of enforcing nu_1(rho) = 0 by at most one flip q' -> -q' (NG2) or
/// q'' -> -q'' (HI). NG1/NG1X are never touched.
struct Calibration {
    CategorySpec spec;
    bool flipped = false;
    /// nu_1(rho) = 0 holds for `spec` (after any flip).
    bool satisfied = true;
    std::complex<double> nu1;
    std::string note;
};

Calibration calibrate(const CategorySpec& spec, double tol = kDefaultTolerance);

/// Center of the calibrated spec with the calibration outcome in its provenance.
CenterPresentation calibrated_center(const Calibration& c);

// ---------------------------------------------------------------------------
// Indicator vectors

enum class IndicatorPath { Center, Closed };

/// Full period of k -> nu_k(rho): lcm of the center's twist denominators and exp(G).
std::int64_t indicator_period(const CategorySpec& spec);

struct IndicatorVector {
    std::string name;
    std::int64_t period = 1;
    /// values[k - 1] for k = 1..values.size()
    std::vector<std::complex<double>> values;

    std::complex<double> at(std::int64_t k) const;
};

/// nu_k(rho) for k = 1..kmax (kmax = 0 means one full period).
IndicatorVector indicator_vector(const CategorySpec& spec, IndicatorPath path, std::int64_t kmax = 0);
/// Same as `indicator_vector` for the center path, evaluated serially.
IndicatorVector indicator_vector_serial(const CategorySpec& spec, std::int64_t kmax = 0);

// ---------------------------------------------------------------------------
// Rigidity

struct Separation {
    std::size_t first = 0;
    std::size_t second = 0;
    /// Smallest k where the indicator vectors differ; empty if they agree on a full period.
    std::optional<std::int64_t> k;
};

struct RigidityReport {
    std::int64_t compared_period = 1;
    /// Equivalence classes of spec indices under full-period agreement.
    std::vector<std::vector<std::size_t>> classes;
    std::vector<Separation> pairs;
    std::vector<IndicatorVector> vectors;
};

/// Partitions specs by their indicator vectors over one common period
/// (or k = 1..kmax when kmax > 0).
/// Throws std::invalid_argument if a spec's base ring differs from `ring`.
RigidityReport rigidity_report(std::span<const CategorySpec> specs, const FusionRing& ring,
                               double tol = kDefaultTolerance, std::int64_t kmax = 0);

} // namespace fsind
