#include "fsind/kernels.hpp"

#include <algorithm>
#include <cmath>

#ifdef FSIND_HAVE_OPENMP
#include <omp.h>
#endif

namespace fsind::kernels {

namespace {

constexpr std::size_t kBlocks = 64;

struct Block {
    std::size_t begin;
    std::size_t end;
};

Block block_range(std::size_t b, std::size_t n)
{
    return {b * n / kBlocks, (b + 1) * n / kBlocks};
}

std::complex<double> normalize(std::complex<double> s, std::size_t n)
{
    return n == 0 ? s : s / std::sqrt(static_cast<double>(n));
}

} // namespace

int max_threads()
{
#ifdef FSIND_HAVE_OPENMP
    return omp_get_max_threads();
#else
    return 1;
#endif
}

std::complex<double> gauss_sum(std::span<const QZValue> values)
{
    const std::size_t n = values.size();
    std::array<std::complex<double>, kBlocks> partial{};
#pragma omp parallel for schedule(static)
    for (std::size_t b = 0; b < kBlocks; ++b) {
        const auto [lo, hi] = block_range(b, n);
        std::complex<double> s{};
        for (std::size_t i = lo; i < hi; ++i)
            s += values[i].to_complex();
        partial[b] = s;
    }
    std::complex<double> total{};
    for (const auto& p : partial)
        total += p;
    return normalize(total, n);
}

std::complex<double> center_sum(std::span<const CenterTerm> terms, std::int64_t k)
{
    const std::size_t n = terms.size();
    std::array<std::complex<double>, kBlocks> partial{};
#pragma omp parallel for schedule(static)
    for (std::size_t b = 0; b < kBlocks; ++b) {
        const auto [lo, hi] = block_range(b, n);
        std::complex<double> s{};
        for (std::size_t i = lo; i < hi; ++i)
            if (terms[i].weight != 0.0)
                s += terms[i].twist.scaled(k).to_complex() * terms[i].weight;
        partial[b] = s;
    }
    std::complex<double> total{};
    for (const auto& p : partial)
        total += p;
    return total;
}

std::vector<std::complex<double>> center_sum_grid(std::span<const CenterTerm> terms,
                                                  std::span<const std::int64_t> ks)
{
    std::vector<std::complex<double>> out(ks.size());
#pragma omp parallel for schedule(dynamic)
    for (std::size_t i = 0; i < ks.size(); ++i)
        out[i] = serial::center_sum(terms, ks[i]);
    return out;
}

std::vector<Quadruple> associativity_defects(std::size_t rank, std::span<const std::int64_t> n)
{
    const std::size_t r = rank;
    auto at = [&](std::size_t i, std::size_t j, std::size_t k) { return n[(i * r + j) * r + k]; };
    std::vector<std::vector<Quadruple>> per_i(r);
#pragma omp parallel for schedule(dynamic)
    for (std::size_t i = 0; i < r; ++i) {
        for (std::size_t j = 0; j < r; ++j)
            for (std::size_t k = 0; k < r; ++k)
                for (std::size_t l = 0; l < r; ++l) {
                    std::int64_t left = 0;
                    std::int64_t right = 0;
                    for (std::size_t m = 0; m < r; ++m) {
                        left += at(i, j, m) * at(m, k, l);
                        right += at(j, k, m) * at(i, m, l);
                    }
                    if (left != right)
                        per_i[i].push_back({i, j, k, l});
                }
    }
    std::vector<Quadruple> out;
    for (auto& v : per_i)
        out.insert(out.end(), v.begin(), v.end());
    return out;
}

std::int64_t power_class_sum(std::span<const std::int64_t> values, std::span<const std::size_t> power_index)
{
    std::int64_t total = 0;
#pragma omp parallel for reduction(+ : total) schedule(static)
    for (std::size_t i = 0; i < power_index.size(); ++i)
        total += values[power_index[i]];
    return total;
}

namespace serial {

std::complex<double> gauss_sum(std::span<const QZValue> values)
{
    // Same blocking as the parallel kernel so both round identically.
    const std::size_t n = values.size();
    std::complex<double> total{};
    for (std::size_t b = 0; b < kBlocks; ++b) {
        const auto [lo, hi] = block_range(b, n);
        std::complex<double> s{};
        for (std::size_t i = lo; i < hi; ++i)
            s += values[i].to_complex();
        total += s;
    }
    return normalize(total, n);
}

std::complex<double> center_sum(std::span<const CenterTerm> terms, std::int64_t k)
{
    const std::size_t n = terms.size();
    std::complex<double> total{};
    for (std::size_t b = 0; b < kBlocks; ++b) {
        const auto [lo, hi] = block_range(b, n);
        std::complex<double> s{};
        for (std::size_t i = lo; i < hi; ++i)
            if (terms[i].weight != 0.0)
                s += terms[i].twist.scaled(k).to_complex() * terms[i].weight;
        total += s;
    }
    return total;
}

std::vector<std::complex<double>> center_sum_grid(std::span<const CenterTerm> terms,
                                                  std::span<const std::int64_t> ks)
{
    std::vector<std::complex<double>> out;
    out.reserve(ks.size());
    for (auto k : ks)
        out.push_back(serial::center_sum(terms, k));
    return out;
}

std::vector<Quadruple> associativity_defects(std::size_t rank, std::span<const std::int64_t> n)
{
    const std::size_t r = rank;
    auto at = [&](std::size_t i, std::size_t j, std::size_t k) { return n[(i * r + j) * r + k]; };
    std::vector<Quadruple> out;
    for (std::size_t i = 0; i < r; ++i)
        for (std::size_t j = 0; j < r; ++j)
            for (std::size_t k = 0; k < r; ++k)
                for (std::size_t l = 0; l < r; ++l) {
                    std::int64_t left = 0;
                    std::int64_t right = 0;
                    for (std::size_t m = 0; m < r; ++m) {
                        left += at(i, j, m) * at(m, k, l);
                        right += at(j, k, m) * at(i, m, l);
                    }
                    if (left != right)
                        out.push_back({i, j, k, l});
                }
    return out;
}

std::int64_t power_class_sum(std::span<const std::int64_t> values, std::span<const std::size_t> power_index)
{
    std::int64_t total = 0;
    for (auto idx : power_index)
        total += values[idx];
    return total;
}

} // namespace serial

} // namespace fsind::kernels
