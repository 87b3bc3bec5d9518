#pragma once

#include "fsind/category_spec.hpp"
#include "fsind/indicators.hpp"

#include <complex>
#include <cstdint>
#include <string>
#include <variant>
#include <vector>

namespace fsind {

/// (a + b sqrt(d)) / 2; a negative d means i sqrt(|d|).
struct QuadraticSurd {
    std::int64_t a = 0;
    std::int64_t b = 0;
    std::int64_t d = 1;
};

/// sum of coeff * exp(2 pi i phase).
struct CyclotomicSum {
    struct Term {
        std::int64_t coeff = 1;
        QZValue phase;
    };
    std::vector<Term> terms;
};

/// 1/2 (1 + sign (k / modulus)), a law in k rather than a single value.
struct JacobiLaw {
    int sign = -1;
    std::int64_t modulus = 1;
};

using ExpectedValue = std::variant<QuadraticSurd, CyclotomicSum, JacobiLaw>;

std::complex<double> evaluate(const ExpectedValue& v, std::int64_t k);
std::string to_string(const ExpectedValue& v);

struct Claim {
    std::int64_t k = 1;
    ExpectedValue expected;
};

struct TableRow {
    /// "ng3", "ng5", ..., "hi3", "hi5"
    std::string table_id;
    /// 1-based position within its table.
    int row_id = 0;
    CategorySpec spec;
    /// Forms exactly as listed in the source table, before any convention change.
    std::string printed_forms;
    std::vector<Claim> claims;
    std::string source;
    /// Transcription notes (typos corrected, conventions applied).
    std::string note;
};

/// All transcribed rows: 18 near-group and 8 Haagerup-Izumi, ordered by table then row.
const std::vector<TableRow>& builtin_rows();
std::vector<std::string> builtin_table_ids();
/// Rows of one table; throws std::invalid_argument for an unknown id.
std::vector<TableRow> table_rows(const std::string& table_id);
/// Row lookup by "ng9:2" style key.
const TableRow& find_row(const std::string& table_id, int row_id);

struct ClaimResult {
    Claim claim;
    std::complex<double> expected;
    std::complex<double> closed;
    std::complex<double> center;
    double deviation = 0.0;
    bool pass = false;
};

struct RowReport {
    const TableRow* row = nullptr;
    Calibration calibration;
    std::vector<ClaimResult> claims;
    double max_deviation = 0.0;

    bool pass() const;
};

/// Calibrates the row's spec, then evaluates every claim by the closed form
/// and the center sum; a claim passes iff both deviations are below tol.
RowReport verify_row(const TableRow& row, double tol = kDefaultTolerance);
/// Rows are verified in parallel; the result order is the input order.
std::vector<RowReport> verify_rows(std::span<const TableRow> rows, double tol = kDefaultTolerance);
std::vector<RowReport> verify_rows_serial(std::span<const TableRow> rows, double tol = kDefaultTolerance);

/// Spec families whose indicator vectors are compared for rigidity.
struct RigidityCase {
    std::string id;
    std::vector<CategorySpec> specs;
    /// True when every pair should be separated; false when all should agree.
    bool separated = true;
    /// Degree at which separation is expected, and the value each spec should take there.
    std::int64_t k = 0;
    std::vector<ExpectedValue> values_at_k;
};

std::vector<RigidityCase> builtin_rigidity_cases();

} // namespace fsind
