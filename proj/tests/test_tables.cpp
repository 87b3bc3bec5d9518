#include "fsind/report.hpp"
#include "fsind/tables.hpp"

#include "doctest.h"
#include "json.hpp"
#include "oracles.hpp"

#include <cmath>
#include <map>
#include <tuple>

using namespace fsind;

namespace {

struct Printed {
    const char* table;
    int row;
    std::int64_t k;
    double re;
    double im;
};

const double r3 = std::sqrt(3.0) / 2.0;
const double r5 = std::sqrt(5.0) / 2.0;
const double r7 = std::sqrt(7.0) / 2.0;
const double r11 = std::sqrt(11.0) / 2.0;
const double r13 = std::sqrt(13.0) / 2.0;
const double r15 = std::sqrt(15.0) / 2.0;
const double r17 = std::sqrt(17.0) / 2.0;
const double r29 = std::sqrt(29.0) / 2.0;

// Printed single values, transcribed independently of the library's table data.
const std::vector<Printed> kPrinted{
    {"ng3", 1, 3, 1.5, r3},        {"ng3", 1, 7, 0.5, r7},         {"ng3", 2, 3, 1.5, -r3},
    {"ng3", 2, 7, 0.5, -r7},       {"ng5", 1, 3, 0.5, -r3},        {"ng5", 1, 5, 2.5 + r5, 0},
    {"ng5", 1, 9, -1, 0},          {"ng5", 2, 3, 0.5, r3},         {"ng5", 2, 5, 2.5 + r5, 0},
    {"ng5", 2, 9, -1, 0},          {"ng5", 3, 3, -1, 0},           {"ng5", 3, 5, 2.5 - r5, 0},
    {"ng5", 3, 9, 2, 0},           {"ng7", 1, 7, 3.5, -r7},        {"ng7", 1, 11, 0.5, r11},
    {"ng7", 2, 7, 3.5, r7},        {"ng7", 2, 11, 0.5, -r11},      {"ng9", 1, 3, 1.5, -r3},
    {"ng9", 1, 9, 3, 0},           {"ng9", 1, 13, 0.5 + r13, 0},   {"ng9", 2, 3, 1.5, r3},
    {"ng9", 2, 9, 3, 0},           {"ng9", 2, 13, 0.5 + r13, 0},   {"ng9", 3, 3, 3, 0},
    {"ng9", 3, 9, 3, 0},           {"ng9", 3, 13, 0.5 + r13, 0},   {"ng11", 1, 3, 0.5, -r3},
    {"ng11", 1, 5, 0.5 + r5, 0},   {"ng11", 1, 11, 5.5, -r11},     {"ng11", 1, 15, 0.5, r15},
    {"ng11", 2, 3, 0.5, r3},       {"ng11", 2, 5, 0.5 - r5, 0},    {"ng11", 2, 11, 5.5, -r11},
    {"ng11", 2, 15, 0.5, r15},     {"ng11", 3, 3, 0.5, -r3},       {"ng11", 3, 5, 0.5 - r5, 0},
    {"ng11", 3, 11, 5.5, r11},     {"ng11", 3, 15, 0.5, -r15},     {"ng11", 4, 3, 0.5, r3},
    {"ng11", 4, 5, 0.5 + r5, 0},   {"ng11", 4, 11, 5.5, r11},      {"ng11", 4, 15, 0.5, -r15},
    {"ng13", 1, 13, 6.5 - r13, 0}, {"ng13", 1, 17, 0.5 + r17, 0},  {"ng13", 2, 13, 6.5 - r13, 0},
    {"ng13", 2, 17, 0.5 + r17, 0}, {"ng13", 3, 13, 6.5 + r13, 0},  {"ng13", 3, 17, 0.5 - r17, 0},
    {"ng13", 4, 13, 6.5 + r13, 0}, {"ng13", 4, 17, 0.5 - r17, 0},  {"hi3", 1, 3, 1, 0},
    {"hi3", 1, 13, 0.5 + r13, 0},  {"hi3", 2, 3, 1, 0},            {"hi3", 2, 13, 0.5 + r13, 0},
    {"hi3", 3, 3, 2, 0},           {"hi3", 3, 13, 0.5 + r13, 0},   {"hi3", 4, 3, 2, 0},
    {"hi3", 4, 13, 0.5 + r13, 0},  {"hi5", 1, 5, 2, 0},            {"hi5", 1, 29, 0.5 + r29, 0},
    {"hi5", 2, 5, 2, 0},           {"hi5", 2, 29, 0.5 + r29, 0},   {"hi5", 3, 5, 3, 0},
    {"hi5", 3, 29, 0.5 + r29, 0},  {"hi5", 4, 5, 3, 0},            {"hi5", 4, 29, 0.5 + r29, 0},
};

/// 1/2 theta_k(e) + 1/2 Theta(G, 2kq) Theta(G', 2kq') from raw coefficients, for cyclic presentations.
std::complex<double> ng2_oracle(const CategorySpec& spec, std::int64_t k)
{
    const auto& p = std::get<Ng2Params>(spec.params);
    auto theta = [&](const QuadraticForm& q) {
        std::vector<std::int64_t> factors(q.group().factors().begin(), q.group().factors().end());
        std::vector<std::int64_t> c = q.diagonal_coeffs();
        for (auto& x : c)
            x *= 2 * k;
        return oracle::diagonal_gauss_sum(factors, c);
    };
    std::vector<std::int64_t> factors(spec.group.factors().begin(), spec.group.factors().end());
    return 0.5 * static_cast<double>(oracle::power_count(factors, k)) + 0.5 * theta(p.q) * theta(p.q_prime);
}

} // namespace

TEST_CASE("builtin table shape")
{
    const auto& rows = builtin_rows();
    CHECK(rows.size() == 26);
    std::size_t ng = 0;
    for (const auto& r : rows)
        ng += r.spec.family() == Family::NG2 ? 1 : 0;
    CHECK(ng == 18);
    CHECK(builtin_table_ids() == std::vector<std::string>{"ng3", "ng5", "ng7", "ng9", "ng11", "ng13", "hi3", "hi5"});
    CHECK(table_rows("ng11").size() == 4);
    CHECK(find_row("ng9", 3).printed_forms.find("h^2") != std::string::npos);
    CHECK_THROWS_AS(table_rows("ng4"), std::invalid_argument);
    CHECK_THROWS(find_row("ng5", 9));
}

TEST_CASE("transcribed claims match the printed values")
{
    std::map<std::tuple<std::string, int, std::int64_t>, std::complex<double>> printed;
    for (const auto& p : kPrinted)
        printed[{p.table, p.row, p.k}] = {p.re, p.im};
    std::size_t seen = 0;
    for (const auto& row : builtin_rows()) {
        for (const auto& c : row.claims) {
            if (std::holds_alternative<JacobiLaw>(c.expected)) {
                const auto& law = std::get<JacobiLaw>(c.expected);
                CHECK(law.modulus == (row.table_id == "hi3" ? 13 : 29));
                const bool plus = std::get<HiParams>(row.spec.params).sign > 0;
                CHECK(law.sign == (plus ? -1 : 1));
                CHECK(std::abs(evaluate(c.expected, c.k) - 0.5 * (1.0 + law.sign * oracle::jacobi(c.k, law.modulus))) <
                      1e-12);
                continue;
            }
            const auto it = printed.find({row.table_id, row.row_id, c.k});
            REQUIRE_MESSAGE(it != printed.end(), row.table_id, ":", row.row_id, " k=", c.k);
            CHECK_MESSAGE(std::abs(evaluate(c.expected, c.k) - it->second) < 1e-12, row.table_id, ":", row.row_id,
                          " k=", c.k);
            ++seen;
        }
    }
    CHECK(seen == kPrinted.size());
}

TEST_CASE("center sum agrees with a raw Gauss sum oracle on every near group row")
{
    for (const auto& row : builtin_rows()) {
        if (row.spec.family() != Family::NG2)
            continue;
        const auto cal = calibrate(row.spec);
        CHECK(cal.satisfied);
        for (const auto& c : row.claims)
            CHECK(std::abs(nu_center(cal.spec, c.k) - ng2_oracle(cal.spec, c.k)) < 1e-9);
    }
}

TEST_CASE("expected value arithmetic")
{
    CHECK(std::abs(evaluate(QuadraticSurd{3, 1, -3}, 1) - std::complex<double>(1.5, r3)) < 1e-12);
    CHECK(std::abs(evaluate(QuadraticSurd{1, 1, 13}, 1) - (0.5 + r13)) < 1e-12);
    CHECK(std::abs(evaluate(CyclotomicSum{{{1, QZValue()}, {1, QZValue(2, 3)}}}, 1) -
                   std::complex<double>(0.5, -r3)) < 1e-12);
    CHECK(evaluate(JacobiLaw{-1, 13}, 2) == 1.0);
    CHECK(evaluate(JacobiLaw{-1, 13}, 3) == 0.0);
    CHECK(evaluate(JacobiLaw{-1, 13}, 13) == 0.5);
    CHECK_FALSE(to_string(QuadraticSurd{3, 1, -3}).empty());
}

TEST_CASE("a tampered claim is caught with the right deviation")
{
    TableRow row = find_row("ng3", 1);
    for (auto& c : row.claims)
        if (c.k == 7)
            c.expected = QuadraticSurd{1, -1, -7};
    const auto report = verify_row(row);
    CHECK_FALSE(report.pass());
    for (const auto& c : report.claims)
        if (c.claim.k == 7) {
            CHECK_FALSE(c.pass);
            CHECK(std::abs(c.deviation - std::sqrt(7.0)) < 1e-9);
        }
}

TEST_CASE("reports")
{
    const auto& rows = builtin_rows();
    const auto par = verify_rows(rows);
    const auto ser = verify_rows_serial(rows);
    const auto csv = emit_report(par, ReportFormat::Csv);
    CHECK(csv == emit_report(ser, ReportFormat::Csv));
    CHECK(csv == emit_report(verify_rows(rows), ReportFormat::Csv));
    CHECK(csv.rfind(std::string(kCsvHeader) + "\n", 0) == 0);

    std::size_t claims = 0;
    for (const auto& r : rows)
        claims += r.claims.size();
    CHECK(static_cast<std::size_t>(std::count(csv.begin(), csv.end(), '\n')) == claims + 1);

    const auto json = emit_report(par, ReportFormat::Json);
    CHECK(csv_report_to_json(csv) == json);
    const auto doc = nlohmann::json::parse(json);
    CHECK(doc["rows"] == 26);
    CHECK(doc["claims"] == claims);

    const auto ng9 = table_rows("ng9");
    const auto md = emit_report(verify_rows(ng9), ReportFormat::Markdown);
    CHECK(md.rfind("### ng9\n", 0) == 0);
    CHECK(md.find("| nu_3 | nu_9 | nu_13 |") != std::string::npos);
    CHECK(std::count(md.begin(), md.end(), '\n') == 2 + 2 + 3 + 1);
    CHECK(md.find("FAIL") == std::string::npos);

    CHECK_THROWS_AS(parse_report_format("xml"), std::invalid_argument);
    CHECK_THROWS_AS(csv_report_to_json("bad header\n"), std::invalid_argument);
}
