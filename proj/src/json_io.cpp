#include "fsind/json_io.hpp"

#include <cctype>
#include <cmath>
#include <cstring>
#include <numeric>
#include <optional>
#include <stdexcept>

namespace fsind {

namespace {

[[noreturn]] void fail(const std::string& what) { throw std::invalid_argument(what); }

const Json& require(const Json& j, const char* key)
{
    if (!j.is_object() || !j.contains(key))
        fail(std::string("missing key '") + key + "'");
    return j.at(key);
}

template <typename T>
T get_as(const Json& j, const char* what)
{
    try {
        return j.get<T>();
    } catch (const nlohmann::json::exception&) {
        fail(std::string("bad value for '") + what + "': " + j.dump());
    }
}

/// Values below this magnitude are written as exact zeros.
constexpr double kPrintZero = 1e-12;

double clean(double x) { return std::abs(x) < kPrintZero ? 0.0 : x; }

constexpr const char* kVariables = "ghklmn";

} // namespace

Json to_json(const FiniteAbelianGroup& group) { return {{"cyclic_factors", group.factors()}}; }

FiniteAbelianGroup group_from_json(const Json& j)
{
    const auto factors = get_as<std::vector<std::int64_t>>(require(j, "cyclic_factors"), "cyclic_factors");
    for (auto n : factors)
        if (n < 1)
            fail("cyclic factors must be >= 1");
    return FiniteAbelianGroup(factors);
}

QuadraticForm parse_form(const FiniteAbelianGroup& group, const std::string& text)
{
    std::string s;
    for (char c : text)
        if (!std::isspace(static_cast<unsigned char>(c)))
            s += c;
    if (s == "0")
        return QuadraticForm::zero(group);

    auto bad = [&]() -> QuadraticForm { fail("cannot read quadratic form '" + text + "'"); };

    const auto slash = s.rfind('/');
    if (slash == std::string::npos)
        return bad();
    std::int64_t den = 0;
    try {
        std::size_t used = 0;
        den = std::stoll(s.substr(slash + 1), &used);
        if (used != s.size() - slash - 1 || den < 1)
            return bad();
    } catch (const std::exception&) {
        return bad();
    }
    std::string num = s.substr(0, slash);
    if (num.size() >= 2 && num.front() == '(' && num.back() == ')')
        num = num.substr(1, num.size() - 2);

    const auto factors = group.factors();
    std::vector<MonomialTerm> terms;
    std::size_t i = 0;
    while (i < num.size()) {
        std::int64_t sign = 1;
        if (num[i] == '+' || num[i] == '-') {
            sign = num[i] == '-' ? -1 : 1;
            ++i;
        } else if (!terms.empty()) {
            return bad();
        }
        std::int64_t coeff = 1;
        const std::size_t start = i;
        while (i < num.size() && std::isdigit(static_cast<unsigned char>(num[i])))
            ++i;
        if (i > start)
            coeff = std::stoll(num.substr(start, i - start));
        if (i + 3 > num.size() || num.compare(i + 1, 2, "^2") != 0)
            return bad();
        const char* var = std::strchr(kVariables, num[i]);
        if (var == nullptr)
            return bad();
        const auto factor = static_cast<std::size_t>(var - kVariables);
        if (factor >= factors.size())
            fail("form '" + text + "' uses more variables than " + group.to_string() + " has factors");
        const std::int64_t n = factors[factor];
        // coeff x^2 / den is stored as c x^2 / n.
        if ((coeff * n) % den != 0)
            fail("form '" + text + "' cannot be written over " + group.to_string());
        terms.push_back({factor, sign * coeff * n / den});
        i += 3;
    }
    if (terms.empty())
        return bad();
    return QuadraticForm::monomial(group, terms);
}

Json to_json(const QuadraticForm& q)
{
    Json j{{"group", to_json(q.group())}};
    if (q.has_diagonal_coeffs()) {
        Json terms = Json::array();
        const auto& c = q.diagonal_coeffs();
        for (std::size_t i = 0; i < c.size(); ++i)
            if (c[i] != 0)
                terms.push_back({{"factor", i}, {"coeff", c[i]}});
        j["monomial"] = std::move(terms);
    } else {
        Json table = Json::array();
        for (const auto& v : q.values())
            table.push_back(v.to_string());
        j["table"] = std::move(table);
    }
    j["text"] = q.to_string();
    return j;
}

QuadraticForm form_from_json(const Json& j, const FiniteAbelianGroup* fallback)
{
    if (j.is_string()) {
        if (!fallback)
            fail("a form given as text needs a group");
        return parse_form(*fallback, j.get<std::string>());
    }
    if (!j.is_object())
        fail("a form must be a JSON object or a string");
    const FiniteAbelianGroup group = j.contains("group") ? group_from_json(j.at("group"))
                                     : fallback          ? *fallback
                                                         : (fail("form has no group"), FiniteAbelianGroup());
    QuadraticForm q = QuadraticForm::zero(group);
    if (j.contains("table")) {
        std::vector<QZValue> values;
        for (const auto& v : j.at("table")) {
            try {
                values.push_back(QZValue::parse(get_as<std::string>(v, "table")));
            } catch (const std::invalid_argument& e) {
                fail(std::string("bad table entry: ") + e.what());
            }
        }
        if (static_cast<std::int64_t>(values.size()) != group.order())
            fail("form table has " + std::to_string(values.size()) + " entries for a group of order " +
                 std::to_string(group.order()));
        q = QuadraticForm::from_table(group, std::move(values));
    } else if (j.contains("monomial")) {
        std::vector<MonomialTerm> terms;
        for (const auto& t : j.at("monomial"))
            terms.push_back({get_as<std::size_t>(require(t, "factor"), "factor"),
                             get_as<std::int64_t>(require(t, "coeff"), "coeff")});
        q = QuadraticForm::monomial(group, terms);
    } else if (j.contains("text")) {
        q = parse_form(group, get_as<std::string>(j.at("text"), "text"));
    } else {
        fail("form needs 'monomial', 'table' or 'text'");
    }
    if (j.contains("convention")) {
        const auto c = get_as<std::string>(j.at("convention"), "convention");
        if (c == "twist")
            q = q.halved();
        else if (c != "bilinear")
            fail("unknown form convention '" + c + "' (expected bilinear or twist)");
    }
    return q;
}

Json to_json(const CategorySpec& spec)
{
    Json j{{"name", spec.name}, {"family", family_name(spec.family())}, {"group", to_json(spec.group)}};
    std::visit(
        [&](const auto& p) {
            using P = std::decay_t<decltype(p)>;
            if constexpr (std::is_same_v<P, Ng1Params>) {
                j["p"] = p.p;
                j["zeta1"] = p.zeta1.to_string();
            } else if constexpr (std::is_same_v<P, Ng2Params>) {
                j["q"] = to_json(p.q);
                j["group_prime"] = to_json(p.group_prime);
                j["q_prime"] = to_json(p.q_prime);
                j["b"] = p.b_label;
                j["c"] = p.c_label;
            } else if constexpr (std::is_same_v<P, HiParams>) {
                j["h_group"] = to_json(p.h_group);
                j["q_hi"] = to_json(p.q_hi);
                j["sign"] = p.sign;
                j["omega_power"] = p.omega_power;
                j["label"] = p.matrix_label;
            }
        },
        spec.params);
    return j;
}

CategorySpec spec_from_json(const Json& j)
{
    if (!j.is_object())
        fail("a spec must be a JSON object");
    const Family family = parse_family(get_as<std::string>(require(j, "family"), "family"));
    const std::string name = j.contains("name") ? get_as<std::string>(j.at("name"), "name") : std::string{};
    auto group_or = [&](const char* key, std::optional<FiniteAbelianGroup> dflt) {
        if (j.contains(key))
            return group_from_json(j.at(key));
        if (!dflt)
            fail(std::string("missing key '") + key + "'");
        return *dflt;
    };

    CategorySpec spec;
    switch (family) {
    case Family::NG1: {
        const auto group = group_or("group", std::nullopt);
        const auto p = get_as<std::int64_t>(require(j, "p"), "p");
        QZValue zeta1;
        if (j.contains("zeta1"))
            zeta1 = QZValue::parse(get_as<std::string>(j.at("zeta1"), "zeta1"));
        spec = make_ng1_spec(name, group, p, zeta1);
        break;
    }
    case Family::NG1X:
        spec = make_ng1x_spec(name);
        break;
    case Family::NG2: {
        const auto group = group_or("group", std::nullopt);
        const auto q = form_from_json(require(j, "q"), &group);
        const std::optional<FiniteAbelianGroup> gp =
            j.contains("group_prime") ? std::optional(group_from_json(j.at("group_prime"))) : std::nullopt;
        const auto qp = form_from_json(require(j, "q_prime"), gp ? &*gp : nullptr);
        spec = make_ng2_spec(name, q, qp, j.value("b", std::string{}), j.value("c", std::string{}));
        break;
    }
    case Family::HI: {
        const auto group = group_or("group", std::nullopt);
        const auto h = group_or("h_group", std::nullopt);
        const auto q = form_from_json(require(j, "q_hi"), &h);
        spec = make_hi_spec(name, group, q, j.value("sign", 1), j.value("omega_power", 0),
                            j.value("label", std::string{}));
        break;
    }
    }
    spec.validate();
    return spec;
}

Json to_json(const FusionRing& ring)
{
    return {{"labels", ring.labels()}, {"unit", ring.unit()}, {"dual", ring.duals()}, {"structure", ring.structure()}};
}

Json to_json(const CenterPresentation& center)
{
    Json objects = Json::array();
    for (const auto& o : center.objects) {
        Json mult = Json::object();
        for (std::size_t i = 0; i < o.mult.size(); ++i)
            if (o.mult[i] != 0)
                mult[center.base_ring.label(i)] = o.mult[i];
        objects.push_back({{"label", o.label}, {"twist", o.twist.to_string()}, {"qdim", o.qdim}, {"mult", mult}});
    }
    return {{"base_ring", center.base_ring.labels()},
            {"global_qdim", center.global_qdim},
            {"objects", objects},
            {"provenance", center.provenance}};
}

Json to_json(const IndicatorVector& v)
{
    Json values = Json::array();
    for (std::size_t i = 0; i < v.values.size(); ++i)
        values.push_back({{"k", i + 1}, {"re", clean(v.values[i].real())}, {"im", clean(v.values[i].imag())}});
    return {{"name", v.name}, {"period", v.period}, {"values", values}};
}

Json to_json(const RigidityReport& report, std::span<const CategorySpec> specs)
{
    auto name = [&](std::size_t i) { return specs[i].name.empty() ? describe(specs[i]) : specs[i].name; };
    Json classes = Json::array();
    for (const auto& cls : report.classes) {
        Json members = Json::array();
        for (auto i : cls)
            members.push_back(name(i));
        classes.push_back(members);
    }
    Json pairs = Json::array();
    for (const auto& p : report.pairs) {
        Json e{{"first", name(p.first)}, {"second", name(p.second)}};
        if (p.k) {
            e["separating_k"] = *p.k;
            const auto a = report.vectors[p.first].at(*p.k);
            const auto b = report.vectors[p.second].at(*p.k);
            e["values"] = {{{"re", clean(a.real())}, {"im", clean(a.imag())}},
                           {{"re", clean(b.real())}, {"im", clean(b.imag())}}};
        } else {
            e["separating_k"] = nullptr;
        }
        pairs.push_back(std::move(e));
    }
    return {{"compared_period", report.compared_period}, {"classes", classes}, {"pairs", pairs}};
}

} // namespace fsind
