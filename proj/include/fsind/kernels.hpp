#pragma once

// Data-parallel inner loops. Each kernel has an OpenMP implementation and a
// plain serial reference in `kernels::serial`; the test suite checks that the
// two agree and `fsind_bench` times them against each other.
//
// Reductions are split into a fixed number of blocks that does not depend on
// the thread count, and the block partials are combined in order, so the
// parallel results are bit-identical for any OMP_NUM_THREADS.

#include "fsind/qz_value.hpp"

#include <array>
#include <complex>
#include <cstddef>
#include <cstdint>
#include <span>
#include <vector>

namespace fsind::kernels {

/// One center object's contribution to a fixed target's indicator sum:
/// theta^k * weight, weight = qdim(V) * dim Hom(F(V), target).
struct CenterTerm {
    QZValue twist;
    double weight = 0.0;
};

/// (i, j, k, l) with (b_i b_j) b_k != b_i (b_j b_k) in coefficient of b_l.
using Quadruple = std::array<std::size_t, 4>;

/// Unnormalized sum of exp(2 pi i v) over the values, divided by sqrt(size).
std::complex<double> gauss_sum(std::span<const QZValue> values);

/// sum_t theta_t^k * weight_t, with theta^k formed exactly as k * phase mod 1.
std::complex<double> center_sum(std::span<const CenterTerm> terms, std::int64_t k);

/// center_sum for every k in ks; parallel over k.
std::vector<std::complex<double>> center_sum_grid(std::span<const CenterTerm> terms,
                                                  std::span<const std::int64_t> ks);

/// All associativity defects of a rank-r structure tensor stored as N[(i*r + j)*r + k].
std::vector<Quadruple> associativity_defects(std::size_t rank, std::span<const std::int64_t> n);

/// sum over the table of f(x^k) where x^k is given by `power_index`; the AGL
/// class sum in exact integer arithmetic. values[i] is the character at
/// element i scaled to an integer.
std::int64_t power_class_sum(std::span<const std::int64_t> values, std::span<const std::size_t> power_index);

namespace serial {

std::complex<double> gauss_sum(std::span<const QZValue> values);
std::complex<double> center_sum(std::span<const CenterTerm> terms, std::int64_t k);
std::vector<std::complex<double>> center_sum_grid(std::span<const CenterTerm> terms,
                                                  std::span<const std::int64_t> ks);
std::vector<Quadruple> associativity_defects(std::size_t rank, std::span<const std::int64_t> n);
std::int64_t power_class_sum(std::span<const std::int64_t> values, std::span<const std::size_t> power_index);

} // namespace serial

/// Threads OpenMP would use, or 1 without OpenMP.
int max_threads();

} // namespace fsind::kernels
