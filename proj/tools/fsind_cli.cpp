// fsind: Frobenius-Schur indicators of near-group and Haagerup-Izumi categories.
//
// Exit codes: 0 success, 1 verification failure, 2 usage or parse error.

#include "fsind/agl.hpp"
#include "fsind/indicators.hpp"
#include "fsind/json_io.hpp"
#include "fsind/report.hpp"
#include "fsind/tables.hpp"

#include "CLI11.hpp"

#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>
#include <stdexcept>

using namespace fsind;

namespace {

constexpr int kOk = 0;
constexpr int kVerificationFailed = 1;
constexpr int kUsage = 2;

struct UsageError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

double tolerance_from_env()
{
    const char* env = std::getenv("FI_TOLERANCE");
    if (env == nullptr || *env == '\0')
        return kDefaultTolerance;
    char* end = nullptr;
    const double tol = std::strtod(env, &end);
    if (end == env || *end != '\0' || !(tol > 0.0) || tol > 1e-3)
        throw UsageError(std::string("FI_TOLERANCE must be a number in (0, 1e-3], got '") + env + "'");
    return tol;
}

/// Inline JSON, or @path to read it from a file.
Json read_json(const std::string& text, const char* what)
{
    std::string body = text;
    if (!text.empty() && text.front() == '@') {
        std::ifstream in(text.substr(1));
        if (!in)
            throw UsageError(std::string("cannot open ") + what + " file '" + text.substr(1) + "'");
        std::ostringstream ss;
        ss << in.rdbuf();
        body = ss.str();
    }
    try {
        return Json::parse(body);
    } catch (const nlohmann::json::parse_error& e) {
        throw UsageError(std::string("invalid JSON for ") + what + ": " + e.what());
    }
}

std::string number(double x)
{
    if (std::abs(x) < 1e-12)
        x = 0.0;
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.12g", x);
    return buf;
}

/// "builtin:ng3:1" selects a table row; anything else is a JSON spec (or a request
/// {"spec": ..., "k_max": N}).
struct SpecInput {
    CategorySpec spec;
    std::optional<std::int64_t> k_max;
};

SpecInput read_spec(const std::string& text)
{
    if (text.rfind("builtin:", 0) == 0) {
        const auto rest = text.substr(8);
        const auto colon = rest.find(':');
        if (colon == std::string::npos)
            throw UsageError("builtin specs are named builtin:<table>:<row>, e.g. builtin:ng3:1");
        try {
            return {find_row(rest.substr(0, colon), std::stoi(rest.substr(colon + 1))).spec, std::nullopt};
        } catch (const std::exception& e) {
            throw UsageError(e.what());
        }
    }
    const Json j = read_json(text, "spec");
    try {
        if (j.is_object() && j.contains("spec")) {
            SpecInput in{spec_from_json(j.at("spec")), std::nullopt};
            if (j.contains("k_max"))
                in.k_max = j.at("k_max").get<std::int64_t>();
            return in;
        }
        return {spec_from_json(j), std::nullopt};
    } catch (const std::exception& e) {
        throw UsageError(std::string("invalid spec: ") + e.what());
    }
}

std::int64_t parse_kmax(const std::string& text)
{
    if (text == "auto")
        return 0;
    try {
        std::size_t used = 0;
        const auto k = std::stoll(text, &used);
        if (used == text.size() && k >= 1)
            return k;
    } catch (const std::exception&) {
    }
    throw UsageError("--kmax must be a positive integer or 'auto', got '" + text + "'");
}

// ---------------------------------------------------------------------------

int cmd_gauss(const std::string& group_text, const std::vector<std::string>& form_args, std::int64_t scale)
{
    FiniteAbelianGroup group;
    QuadraticForm q = QuadraticForm::zero(group);
    try {
        group = group_from_json(read_json(group_text, "group"));
        if (form_args.empty()) {
            q = QuadraticForm::zero(group);
        } else {
            std::string text = form_args.back();
            if (form_args.size() == 2 && form_args.front() != "monomial" && form_args.front() != "table")
                throw UsageError("--form takes a form, optionally preceded by 'monomial' or 'table'");
            if (!text.empty() && (text.front() == '{' || text.front() == '@'))
                q = form_from_json(read_json(text, "form"), &group);
            else
                q = parse_form(group, text);
        }
    } catch (const UsageError&) {
        throw;
    } catch (const std::exception& e) {
        throw UsageError(e.what());
    }
    const auto theta = gauss_sum(group, q.scaled(scale));
    std::cout << number(theta.real()) << ' ' << number(theta.imag()) << '\n';
    QZValue phase;
    if (std::abs(std::abs(theta) - 1.0) < 1e-9 && recognize_root_of_unity(theta, phase))
        std::cout << "phase " << phase.to_string() << '\n';
    return kOk;
}

int cmd_indicators(const std::string& spec_text, const std::string& kmax_text, const std::string& path,
                   bool calibrate_spec, double tol)
{
    SpecInput in = read_spec(spec_text);
    std::int64_t kmax = in.k_max.value_or(0);
    if (!kmax_text.empty())
        kmax = parse_kmax(kmax_text);

    Calibration cal{in.spec, false, true, {}, {}};
    if (calibrate_spec)
        cal = calibrate(in.spec, tol);

    Json out{{"spec", describe(cal.spec)}, {"calibration", cal.note.empty() ? "none" : cal.note}, {"path", path}};
    int status = kOk;
    if (path == "both") {
        const auto center = indicator_vector(cal.spec, IndicatorPath::Center, kmax);
        const auto closed = indicator_vector(cal.spec, IndicatorPath::Closed, kmax);
        double worst = 0.0;
        Json values = Json::array();
        for (std::size_t i = 0; i < center.values.size(); ++i) {
            const double dev = std::abs(center.values[i] - closed.values[i]);
            worst = std::max(worst, dev);
            Json v = to_json(IndicatorVector{"", 1, {center.values[i]}}).at("values").at(0);
            v["k"] = i + 1;
            const auto c = to_json(IndicatorVector{"", 1, {closed.values[i]}}).at("values").at(0);
            v["closed_re"] = c.at("re");
            v["closed_im"] = c.at("im");
            v["deviation"] = std::stod(number(dev));
            values.push_back(std::move(v));
        }
        out["period"] = center.period;
        out["max_deviation"] = std::stod(number(worst));
        out["values"] = std::move(values);
        if (!(worst < tol))
            status = kVerificationFailed;
    } else {
        const auto v = indicator_vector(cal.spec, path == "center" ? IndicatorPath::Center : IndicatorPath::Closed,
                                        kmax);
        const Json j = to_json(v);
        out["period"] = j.at("period");
        out["values"] = j.at("values");
    }
    std::cout << out.dump(2) << '\n';
    return status;
}

ExpectedValue expected_from_json(const Json& j);

int cmd_verify_tables(const std::string& table, const std::string& format, const std::string& fixture, double tol)
{
    const ReportFormat fmt = [&] {
        try {
            return parse_report_format(format);
        } catch (const std::invalid_argument& e) {
            throw UsageError(e.what());
        }
    }();

    std::vector<TableRow> rows;
    if (!fixture.empty()) {
        // A bare argument is a path; '@path' and inline JSON are accepted too.
        const bool inline_or_at = fixture.front() == '@' || fixture.front() == '[';
        const Json j = read_json(inline_or_at ? fixture : "@" + fixture, "fixture");
        try {
            for (const auto& r : j) {
                TableRow row{r.at("table_id").get<std::string>(), r.at("row_id").get<int>(),
                             spec_from_json(r.at("spec")), r.value("forms", std::string{}), {}, "fixture", {}};
                for (const auto& c : r.at("claims"))
                    row.claims.push_back({c.at("k").get<std::int64_t>(), expected_from_json(c.at("expected"))});
                rows.push_back(std::move(row));
            }
        } catch (const std::exception& e) {
            throw UsageError(std::string("invalid fixture: ") + e.what());
        }
    } else if (!table.empty()) {
        try {
            rows = table_rows(table);
        } catch (const std::invalid_argument& e) {
            throw UsageError(e.what());
        }
    } else {
        rows = builtin_rows();
    }

    const auto reports = verify_rows(rows, tol);
    std::cout << emit_report(reports, fmt);
    for (const auto& r : reports)
        if (!r.pass())
            return kVerificationFailed;
    return kOk;
}

int cmd_rigidity(const std::string& specs_text, const std::string& kmax_text, double tol)
{
    std::vector<CategorySpec> specs;
    if (specs_text.rfind("builtin:", 0) == 0) {
        const auto id = specs_text.substr(8);
        bool found = false;
        for (auto& c : builtin_rigidity_cases())
            if (c.id == id) {
                specs = std::move(c.specs);
                found = true;
            }
        if (!found)
            try {
                for (const auto& r : table_rows(id))
                    specs.push_back(r.spec);
            } catch (const std::invalid_argument&) {
                throw UsageError("no builtin rigidity case or table named '" + id + "'");
            }
    } else {
        const Json j = read_json(specs_text, "specs");
        if (!j.is_array() || j.empty())
            throw UsageError("--specs must be a non-empty JSON list of specs");
        try {
            for (const auto& s : j)
                specs.push_back(spec_from_json(s));
        } catch (const std::exception& e) {
            throw UsageError(std::string("invalid spec: ") + e.what());
        }
    }
    for (auto& s : specs)
        s = calibrate(s, tol).spec;

    RigidityReport report;
    try {
        report = rigidity_report(specs, base_ring(specs.front()), tol, parse_kmax(kmax_text));
    } catch (const std::invalid_argument& e) {
        throw UsageError(e.what());
    }
    std::cout << to_json(report, specs).dump(2) << '\n';
    return kOk;
}

int cmd_agl(std::int64_t q, std::int64_t kmax, double tol)
{
    AGLGroup group = [&] {
        try {
            return build_agl(q);
        } catch (const std::invalid_argument& e) {
            throw UsageError(e.what());
        }
    }();
    const auto& field = group.field();
    if (const auto w = agl_degeneracy_warning(q))
        std::cerr << "warning: " << *w << '\n';

    const auto gq = FiniteAbelianGroup::cyclic(q - 1);
    const auto center = center_ng1(gq, field.characteristic(), QZValue());
    AdditiveCharacter eta{std::vector<std::int64_t>(static_cast<std::size_t>(field.degree()), 0)};
    eta.coeffs[0] = 1;

    std::cout << "# AGL_1(F_" << q << "), order " << group.order() << ", p = " << field.characteristic() << '\n';
    std::cout << "k\tbrute_force\tclosed_form\tcenter_sum\tdeviation\n";
    int status = kOk;
    for (std::int64_t k = 1; k <= kmax; ++k) {
        const Rational brute = nu_agl_bruteforce(group, eta, k);
        const Ng1Value closed = nu_ng1_exact(gq, field.characteristic(), QZValue(), k);
        const auto center_value = nu_from_center(center, rho_label(), k);
        const double dev = std::max(std::abs(brute.to_double() - closed.to_complex().real()),
                                    std::abs(std::complex<double>(brute.to_double()) - center_value));
        const bool exact = closed.is_integer() && brute == Rational::make(closed.as_integer(), 1);
        std::cout << k << '\t' << brute.to_string() << '\t'
                  << (closed.is_integer() ? std::to_string(closed.as_integer()) : "?") << '\t'
                  << number(center_value.real()) << '\t' << number(dev) << '\n';
        if (!exact || !(dev < tol))
            status = kVerificationFailed;
    }
    return status;
}

ExpectedValue expected_from_json(const Json& j)
{
    if (j.contains("surd")) {
        const auto v = j.at("surd").get<std::vector<std::int64_t>>();
        if (v.size() != 3)
            throw std::invalid_argument("surd needs [a, b, d]");
        return QuadraticSurd{v[0], v[1], v[2]};
    }
    if (j.contains("cyclotomic")) {
        CyclotomicSum s;
        for (const auto& t : j.at("cyclotomic"))
            s.terms.push_back({t.at(0).get<std::int64_t>(), QZValue::parse(t.at(1).get<std::string>())});
        return s;
    }
    if (j.contains("jacobi")) {
        const auto v = j.at("jacobi").get<std::vector<std::int64_t>>();
        if (v.size() != 2)
            throw std::invalid_argument("jacobi needs [sign, modulus]");
        return JacobiLaw{static_cast<int>(v[0]), v[1]};
    }
    throw std::invalid_argument("expected value needs 'surd', 'cyclotomic' or 'jacobi'");
}

} // namespace

int main(int argc, char** argv)
{
    CLI::App app{"Frobenius-Schur indicators of near-group and Haagerup-Izumi fusion categories"};
    app.require_subcommand(1);

    std::string group_text;
    std::vector<std::string> form_args;
    std::int64_t scale = 1;
    auto* gauss = app.add_subcommand("gauss", "Gauss sum of a quadratic form");
    gauss->add_option("--group", group_text, "group JSON, e.g. {\"cyclic_factors\":[3]}")->required();
    gauss->add_option("--form", form_args, "form: 'g^2/3', JSON, or 'monomial g^2/3'")->expected(1, 2);
    gauss->add_option("--scale", scale, "evaluate the Gauss sum of scale * q");

    std::string spec_text;
    std::string kmax_text;
    std::string path = "center";
    bool no_calibrate = false;
    auto* ind = app.add_subcommand("indicators", "nu_k(rho) for k = 1..kmax");
    ind->add_option("--spec", spec_text, "spec JSON, @file, or builtin:<table>:<row>")->required();
    ind->add_option("--kmax", kmax_text, "positive integer or 'auto' (one full period)");
    ind->add_option("--path", path, "center, closed or both")->check(CLI::IsMember({"center", "closed", "both"}));
    ind->add_flag("--no-calibrate", no_calibrate, "use the spec's forms as given");

    std::string table;
    std::string format = "csv";
    std::string fixture;
    auto* vt = app.add_subcommand("verify-tables", "check every tabulated indicator value");
    vt->add_option("--table", table, "ng3, ng5, ng7, ng9, ng11, ng13, hi3 or hi5");
    vt->add_option("--format", format, "csv, json or markdown");
    vt->add_option("--fixture", fixture, "JSON list of rows to verify instead of the builtin tables");

    std::string specs_text;
    std::string rig_kmax = "auto";
    auto* rig = app.add_subcommand("rigidity", "partition specs by their indicator vectors");
    rig->add_option("--specs", specs_text, "JSON list of specs, @file, or builtin:<case or table id>")->required();
    rig->add_option("--kmax", rig_kmax, "'auto' (one common period) or a positive integer");

    std::int64_t q = 0;
    std::int64_t agl_kmax = 0;
    auto* agl = app.add_subcommand("agl", "brute force over AGL_1(F_q) against the closed form");
    agl->add_option("--q", q, "prime power <= 64")->required();
    agl->add_option("--kmax", agl_kmax, "largest k")->required()->check(CLI::PositiveNumber);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? kOk : kUsage;
    }

    try {
        const double tol = tolerance_from_env();
        if (*gauss)
            return cmd_gauss(group_text, form_args, scale);
        if (*ind)
            return cmd_indicators(spec_text, kmax_text, path, !no_calibrate, tol);
        if (*vt)
            return cmd_verify_tables(table, format, fixture, tol);
        if (*rig)
            return cmd_rigidity(specs_text, rig_kmax, tol);
        if (*agl)
            return cmd_agl(q, agl_kmax, tol);
    } catch (const UsageError& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kUsage;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kUsage;
    }
    return kUsage;
}
