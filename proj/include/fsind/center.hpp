#pragma once

#include "fsind/abelian.hpp"
#include "fsind/fusion.hpp"
#include "fsind/qforms.hpp"
#include "fsind/qz_value.hpp"

#include <complex>
#include <cstdint>
#include <string>
#include <vector>

namespace fsind {

/// A simple object of the center: its twist, quantum dimension and the
/// decomposition of its image under the forgetful functor.
struct CenterObject {
    std::string label;
    QZValue twist;
    double qdim = 0.0;
    /// Dense multiplicities, indexed like the base ring's basis.
    std::vector<std::int64_t> mult;
};

/// Modular-data summary of Z(C): exactly what the center summation formula consumes.
struct CenterPresentation {
    FusionRing base_ring;
    std::vector<CenterObject> objects;
    double global_qdim = 0.0;
    /// Notes on how the presentation was built (e.g. orientation flips).
    std::vector<std::string> provenance;

    std::size_t size() const { return objects.size(); }
    /// Number of objects whose label starts with `prefix`.
    std::size_t count_prefix(const std::string& prefix) const;
    const CenterObject& object(const std::string& label) const;
    /// lcm of all twist denominators.
    std::int64_t twist_order() const;
};

/// Z(C) for K0(C) = NG(G, |G|-1) with G = Z/(p^l - 1), excluding |G| = 7, s = -1.
/// Objects A_g, Sigma, B_g^w (w nontrivial), C^psi (psi in the dual of F_{p^l}^+).
CenterPresentation center_ng1(const FiniteAbelianGroup& group, std::int64_t p, const QZValue& zeta1);

/// The |G| = 7, s = -1 center: A_g, Sigma, B_g^w and E_1, E_2 with F = 2 rho.
CenterPresentation center_ng1_exceptional7();

/// Z(C) for K0(C) = NG(G, |G|) with twists from (G, q) and (G', q').
/// `q` is the form with <g, h> = exp(2 pi i dq(g, h)); A_g and B_g carry <g, g>.
CenterPresentation center_ng2(const FiniteAbelianGroup& group, const QuadraticForm& q,
                              const FiniteAbelianGroup& group_prime, const QuadraticForm& q_prime);

/// Z(C) for K0(C) = HI(G) with D twists m q''(x), |H| = 2m + 1.
CenterPresentation center_hi(const FiniteAbelianGroup& group, const FiniteAbelianGroup& h_group,
                             const QuadraticForm& q_hi);

/// Dense row-major complex matrix.
struct ComplexMatrix {
    std::size_t rows = 0;
    std::size_t cols = 0;
    std::vector<std::complex<double>> data;

    std::complex<double>& operator()(std::size_t i, std::size_t j) { return data[i * cols + j]; }
    const std::complex<double>& operator()(std::size_t i, std::size_t j) const { return data[i * cols + j]; }
};

struct WeilModularData {
    ComplexMatrix s;
    ComplexMatrix t;
};

/// S = |G|^{-1/2} conj<g, h>_q, T = diag exp(2 pi i q(g)), in element order.
/// Throws std::invalid_argument if q is degenerate.
WeilModularData weil_modular_data(const FiniteAbelianGroup& group, const QuadraticForm& q);

/// Unordered-pair canonicalization: true iff index(x) <= index(-x).
bool is_pair_representative(const FiniteAbelianGroup& group, const GroupElement& x);

/// Smallest l >= 1 with p^l = n, or 0 when n is not a power of the prime p.
std::int64_t prime_power_exponent(std::int64_t n, std::int64_t p);
bool is_prime(std::int64_t n);

} // namespace fsind
