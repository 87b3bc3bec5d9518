#include "fsind/tables.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <sstream>
#include <stdexcept>

namespace fsind {

std::complex<double> evaluate(const ExpectedValue& v, std::int64_t k)
{
    if (const auto* s = std::get_if<QuadraticSurd>(&v)) {
        const double root = std::sqrt(static_cast<double>(std::abs(s->d)));
        const std::complex<double> radical = s->d < 0 ? std::complex<double>(0.0, root) : root;
        return (static_cast<double>(s->a) + static_cast<double>(s->b) * radical) / 2.0;
    }
    if (const auto* c = std::get_if<CyclotomicSum>(&v)) {
        std::complex<double> z{};
        for (const auto& t : c->terms)
            z += static_cast<double>(t.coeff) * t.phase.to_complex();
        return z;
    }
    const auto& law = std::get<JacobiLaw>(v);
    return 0.5 * (1.0 + law.sign * jacobi_symbol(k, law.modulus));
}

std::string to_string(const ExpectedValue& v)
{
    std::ostringstream out;
    if (const auto* s = std::get_if<QuadraticSurd>(&v)) {
        out << "(" << s->a;
        if (s->b != 0) {
            out << (s->b < 0 ? "-" : "+");
            if (std::abs(s->b) != 1)
                out << std::abs(s->b);
            out << (s->d < 0 ? "i" : "") << "sqrt(" << std::abs(s->d) << ")";
        }
        out << ")/2";
    } else if (const auto* c = std::get_if<CyclotomicSum>(&v)) {
        bool first = true;
        for (const auto& t : c->terms) {
            if (!first)
                out << (t.coeff < 0 ? "-" : "+");
            else if (t.coeff < 0)
                out << "-";
            first = false;
            const auto mag = std::abs(t.coeff);
            if (t.phase.is_zero()) {
                out << mag;
                continue;
            }
            if (mag != 1)
                out << mag;
            out << "e(" << t.phase.to_string() << ")";
        }
    } else {
        const auto& law = std::get<JacobiLaw>(v);
        out << "(1" << (law.sign < 0 ? "-" : "+") << "(k/" << law.modulus << "))/2";
    }
    return out.str();
}

namespace {

QuadraticForm cyclic_form(std::int64_t n, std::int64_t coeff)
{
    const std::int64_t c[] = {coeff};
    return QuadraticForm::diagonal(FiniteAbelianGroup::cyclic(n), c);
}

QuadraticForm product_form(std::vector<std::int64_t> factors, std::vector<std::int64_t> coeffs)
{
    return QuadraticForm::diagonal(FiniteAbelianGroup(std::move(factors)), coeffs);
}

ExpectedValue surd(std::int64_t a, std::int64_t b, std::int64_t d) { return QuadraticSurd{a, b, d}; }

ExpectedValue integer(std::int64_t n) { return CyclotomicSum{{{n, QZValue()}}}; }

/// constant + coeff * exp(2 pi i num/den)
ExpectedValue cyclotomic(std::int64_t constant, std::int64_t coeff, std::int64_t num, std::int64_t den)
{
    return CyclotomicSum{{{constant, QZValue()}, {coeff, QZValue(num, den)}}};
}

const char* kNg2Convention = "table forms are read as twist forms <g,g>; q = printed/2";

TableRow ng2_row(std::string table, int row, const QuadraticForm& printed_q, const QuadraticForm& printed_qp,
                 std::string b, std::string c, std::vector<Claim> claims, std::string note = {})
{
    const std::string name = table + ":" + std::to_string(row);
    TableRow r{std::move(table),
               row,
               make_ng2_spec(name, printed_q.halved(), printed_qp.halved(), std::move(b), std::move(c)),
               "q=" + printed_q.to_string() + "; q'=" + printed_qp.to_string(),
               std::move(claims),
               {},
               kNg2Convention};
    r.source = "near-group table |G|=" + std::to_string(r.spec.group.order()) + ", row " + std::to_string(row);
    if (!note.empty())
        r.note += "; " + note;
    return r;
}

TableRow hi_row(std::string table, int row, std::int64_t g_order, const QuadraticForm& q_hi, int sign,
                std::string label, std::vector<Claim> claims, std::string note = {})
{
    const std::string name = table + ":" + std::to_string(row);
    TableRow r{std::move(table),
               row,
               make_hi_spec(name, FiniteAbelianGroup::cyclic(g_order), q_hi, sign, 0, label),
               "q''=" + q_hi.to_string(),
               std::move(claims),
               "Haagerup-Izumi table G=Z/" + std::to_string(g_order) + ", " + label,
               std::move(note)};
    return r;
}

std::vector<Claim> jacobi_claims(int sign, std::int64_t modulus, std::initializer_list<std::int64_t> ks)
{
    std::vector<Claim> out;
    for (auto k : ks)
        out.push_back({k, JacobiLaw{sign, modulus}});
    return out;
}

std::vector<Claim> concat(std::vector<Claim> a, std::vector<Claim> b)
{
    a.insert(a.end(), b.begin(), b.end());
    std::sort(a.begin(), a.end(), [](const Claim& x, const Claim& y) { return x.k < y.k; });
    return a;
}

std::vector<TableRow> make_builtin_rows()
{
    std::vector<TableRow> rows;

    rows.push_back(ng2_row("ng3", 1, cyclic_form(3, 1), cyclic_form(7, 1), "-", "-",
                           {{3, surd(3, 1, -3)}, {7, surd(1, 1, -7)}}));
    rows.push_back(ng2_row("ng3", 2, cyclic_form(3, -1), cyclic_form(7, -1), "-", "-",
                           {{3, surd(3, -1, -3)}, {7, surd(1, -1, -7)}}));

    rows.push_back(ng2_row("ng5", 1, cyclic_form(5, 2), cyclic_form(9, 2), "-", "zeta_3",
                           {{3, cyclotomic(1, 1, 2, 3)}, {5, surd(5, 1, 5)}, {9, integer(-1)}}));
    rows.push_back(ng2_row("ng5", 2, cyclic_form(5, 2), cyclic_form(9, -2), "-", "conj(zeta_3)",
                           {{3, cyclotomic(1, 1, 1, 3)}, {5, surd(5, 1, 5)}, {9, integer(-1)}}));
    rows.push_back(ng2_row("ng5", 3, cyclic_form(5, 1), product_form({3, 3}, {1, 1}), "-", "1",
                           {{3, integer(-1)}, {5, surd(5, -1, 5)}, {9, integer(2)}}));

    rows.push_back(ng2_row("ng7", 1, cyclic_form(7, 1), cyclic_form(11, -2), "-", "-",
                           {{7, surd(7, -1, -7)}, {11, surd(1, 1, -11)}}));
    rows.push_back(ng2_row("ng7", 2, cyclic_form(7, -1), cyclic_form(11, 2), "-", "-",
                           {{7, surd(7, 1, -7)}, {11, surd(1, -1, -11)}}));

    rows.push_back(ng2_row("ng9", 1, cyclic_form(9, 1), cyclic_form(13, -2), "-", "-",
                           {{3, cyclotomic(1, -1, 1, 3)}, {9, integer(3)}, {13, surd(1, 1, 13)}}));
    rows.push_back(ng2_row("ng9", 2, cyclic_form(9, -1), cyclic_form(13, 2), "-", "-",
                           {{3, cyclotomic(1, -1, 2, 3)}, {9, integer(3)}, {13, surd(1, 1, 13)}}));
    rows.push_back(ng2_row("ng9", 3, product_form({3, 3}, {1, -1}), cyclic_form(13, 2), "-", "-",
                           {{3, integer(3)}, {9, integer(3)}, {13, surd(1, 1, 13)}}));

    rows.push_back(ng2_row("ng11", 1, cyclic_form(11, 1), cyclic_form(15, 2), "-", "zeta_12^7",
                           {{3, surd(1, -1, -3)}, {5, surd(1, 1, 5)}, {11, surd(11, -1, -11)}, {15, surd(1, 1, -15)}}));
    rows.push_back(ng2_row("ng11", 2, cyclic_form(11, 1), cyclic_form(15, 1), "-", "conj(zeta_12)",
                           {{3, surd(1, 1, -3)}, {5, surd(1, -1, 5)}, {11, surd(11, -1, -11)}, {15, surd(1, 1, -15)}}));
    rows.push_back(ng2_row("ng11", 3, cyclic_form(11, -1), cyclic_form(15, -1), "-", "zeta_12",
                           {{3, surd(1, -1, -3)}, {5, surd(1, -1, 5)}, {11, surd(11, 1, -11)}, {15, surd(1, -1, -15)}}));
    rows.push_back(ng2_row("ng11", 4, cyclic_form(11, -1), cyclic_form(15, -2), "-", "zeta_12^5",
                           {{3, surd(1, 1, -3)}, {5, surd(1, 1, 5)}, {11, surd(11, 1, -11)}, {15, surd(1, -1, -15)}}));

    rows.push_back(ng2_row("ng13", 1, cyclic_form(13, 1), cyclic_form(17, 3), "b_1", "-1",
                           {{13, surd(13, -1, 13)}, {17, surd(1, 1, 17)}}));
    rows.push_back(ng2_row("ng13", 2, cyclic_form(13, 1), cyclic_form(17, 3), "b_2", "-1",
                           {{13, surd(13, -1, 13)}, {17, surd(1, 1, 17)}}));
    rows.push_back(ng2_row("ng13", 3, cyclic_form(13, 2), cyclic_form(17, 1), "b_3", "1",
                           {{13, surd(13, 1, 13)}, {17, surd(1, -1, 17)}}));
    rows.push_back(ng2_row("ng13", 4, cyclic_form(13, 2), cyclic_form(17, 1), "b_4", "1",
                           {{13, surd(13, 1, 13)}, {17, surd(1, -1, 17)}},
                           "q' printed as g^2/15 on Z/17; stored as g^2/17"));

    const char* hi5_note = "H printed as Z/13 and law printed with (k/13); |H| = 29 forces Z/29 and (k/29)";
    rows.push_back(hi_row("hi3", 1, 3, cyclic_form(13, 1), +1, "A_1",
                          concat(jacobi_claims(-1, 13, {2, 5, 7, 11}), {{3, integer(1)}, {13, surd(1, 1, 13)}})));
    rows.push_back(hi_row("hi3", 2, 3, cyclic_form(13, 1), +1, "A_2",
                          concat(jacobi_claims(-1, 13, {2, 5, 7, 11}), {{3, integer(1)}, {13, surd(1, 1, 13)}})));
    rows.push_back(hi_row("hi3", 3, 3, cyclic_form(13, 2), -1, "A_3",
                          concat(jacobi_claims(+1, 13, {2, 5, 7, 11}), {{3, integer(2)}, {13, surd(1, 1, 13)}})));
    rows.push_back(hi_row("hi3", 4, 3, cyclic_form(13, 2), -1, "A_4",
                          concat(jacobi_claims(+1, 13, {2, 5, 7, 11}), {{3, integer(2)}, {13, surd(1, 1, 13)}})));
    rows.push_back(hi_row("hi5", 1, 5, cyclic_form(29, 1), +1, "A_6",
                          concat(jacobi_claims(-1, 29, {2, 3, 7, 11}), {{5, integer(2)}, {29, surd(1, 1, 29)}}),
                          hi5_note));
    rows.push_back(hi_row("hi5", 2, 5, cyclic_form(29, 1), +1, "A_7",
                          concat(jacobi_claims(-1, 29, {2, 3, 7, 11}), {{5, integer(2)}, {29, surd(1, 1, 29)}}),
                          hi5_note));
    rows.push_back(hi_row("hi5", 3, 5, cyclic_form(29, 2), -1, "A_8",
                          concat(jacobi_claims(+1, 29, {2, 3, 7, 11}), {{5, integer(3)}, {29, surd(1, 1, 29)}}),
                          hi5_note));
    rows.push_back(hi_row("hi5", 4, 5, cyclic_form(29, 2), -1, "A_9",
                          concat(jacobi_claims(+1, 29, {2, 3, 7, 11}), {{5, integer(3)}, {29, surd(1, 1, 29)}}),
                          hi5_note));
    return rows;
}

} // namespace

const std::vector<TableRow>& builtin_rows()
{
    static const std::vector<TableRow> rows = make_builtin_rows();
    return rows;
}

std::vector<std::string> builtin_table_ids()
{
    std::vector<std::string> ids;
    for (const auto& r : builtin_rows())
        if (ids.empty() || ids.back() != r.table_id)
            ids.push_back(r.table_id);
    return ids;
}

std::vector<TableRow> table_rows(const std::string& table_id)
{
    std::vector<TableRow> out;
    for (const auto& r : builtin_rows())
        if (r.table_id == table_id)
            out.push_back(r);
    if (out.empty())
        throw std::invalid_argument("unknown table id '" + table_id + "'");
    return out;
}

const TableRow& find_row(const std::string& table_id, int row_id)
{
    for (const auto& r : builtin_rows())
        if (r.table_id == table_id && r.row_id == row_id)
            return r;
    throw std::invalid_argument("no builtin row " + table_id + ":" + std::to_string(row_id));
}

bool RowReport::pass() const
{
    return std::all_of(claims.begin(), claims.end(), [](const ClaimResult& c) { return c.pass; });
}

RowReport verify_row(const TableRow& row, double tol)
{
    RowReport report{&row, calibrate(row.spec, tol), {}, 0.0};
    const CenterPresentation center = calibrated_center(report.calibration);
    const std::string target = rho_target(report.calibration.spec);
    for (const auto& claim : row.claims) {
        ClaimResult r{claim, evaluate(claim.expected, claim.k), nu_closed(report.calibration.spec, claim.k),
                      nu_from_center(center, target, claim.k), 0.0, false};
        r.deviation = std::max(std::abs(r.closed - r.expected), std::abs(r.center - r.expected));
        r.pass = r.deviation < tol;
        report.max_deviation = std::max(report.max_deviation, r.deviation);
        report.claims.push_back(std::move(r));
    }
    return report;
}

std::vector<RowReport> verify_rows(std::span<const TableRow> rows, double tol)
{
    std::vector<RowReport> out(rows.size());
#pragma omp parallel for schedule(dynamic)
    for (std::size_t i = 0; i < rows.size(); ++i)
        out[i] = verify_row(rows[i], tol);
    return out;
}

std::vector<RowReport> verify_rows_serial(std::span<const TableRow> rows, double tol)
{
    std::vector<RowReport> out;
    out.reserve(rows.size());
    for (const auto& r : rows)
        out.push_back(verify_row(r, tol));
    return out;
}

std::vector<RigidityCase> builtin_rigidity_cases()
{
    std::vector<RigidityCase> cases;
    const auto z = [](std::int64_t n) { return FiniteAbelianGroup::cyclic(n); };

    // nu_2 = s for |G| in {1, 3}: zeta_1^2 = s.
    for (std::int64_t n : {1, 3}) {
        RigidityCase c{"ng1-" + std::to_string(n),
                       {make_ng1_spec("s=+1", z(n), 2, QZValue()), make_ng1_spec("s=-1", z(n), 2, QZValue(1, 4))},
                       true,
                       2,
                       {integer(1), integer(-1)}};
        cases.push_back(std::move(c));
    }
    cases.push_back({"ng1-7",
                     {make_ng1_spec("s=+1", z(7), 2, QZValue()), make_ng1x_spec("s=-1")},
                     true,
                     2,
                     {integer(1), integer(-1)}});
    // |G| = 2: mu = 1 for Rep(S_3), mu = exp(+-2 pi i/3) with zeta_1 = exp(-+2 pi i/3).
    cases.push_back({"ng1-2",
                     {make_ng1_spec("mu=1", z(2), 3, QZValue()), make_ng1_spec("mu=e(1/3)", z(2), 3, QZValue(2, 3)),
                      make_ng1_spec("mu=e(2/3)", z(2), 3, QZValue(1, 3))},
                     true,
                     3,
                     {integer(1), cyclotomic(0, 1, 1, 3), cyclotomic(0, 1, 2, 3)}});

    auto pair = [&](const std::string& id, int a, int b) {
        const auto& table = id.substr(0, id.find(':'));
        RigidityCase c{id, {}, false, 0, {}};
        for (int r : {a, b})
            c.specs.push_back(calibrate(find_row(table, r).spec).spec);
        return c;
    };
    cases.push_back(pair("ng13:1-2", 1, 2));
    cases.push_back(pair("ng13:3-4", 3, 4));
    cases.push_back(pair("hi3:1-2", 1, 2));
    cases.push_back(pair("hi3:3-4", 3, 4));
    cases.push_back(pair("hi5:1-2", 1, 2));
    cases.push_back(pair("hi5:3-4", 3, 4));
    return cases;
}

} // namespace fsind
