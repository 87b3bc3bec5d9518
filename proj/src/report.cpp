#include "fsind/report.hpp"

#include "json.hpp"

#include <cmath>
#include <cstdio>
#include <map>
#include <set>
#include <sstream>
#include <stdexcept>

namespace fsind {

namespace {

using nlohmann::ordered_json;

struct Record {
    std::string table_id;
    int row_id = 0;
    std::string family;
    std::string group;
    std::string form;
    std::int64_t k = 0;
    double expected_re = 0.0;
    double expected_im = 0.0;
    double computed_re = 0.0;
    double computed_im = 0.0;
    double deviation = 0.0;
    std::string calibrated;
    bool pass = false;
};

std::string fixed(double x)
{
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.12f", x);
    std::string s = buf;
    if (s.find_first_not_of("-0.") == std::string::npos)
        return "0.000000000000";
    return s;
}

std::string scientific(double x)
{
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.3e", x);
    return buf;
}

/// Values are rounded through their CSV text so that CSV and JSON agree exactly.
double canonical_fixed(double x) { return std::stod(fixed(x)); }
double canonical_scientific(double x) { return std::stod(scientific(x)); }

std::string calibration_label(const Calibration& c)
{
    if (c.flipped)
        return c.note;
    if (!c.satisfied)
        return c.note;
    return "none";
}

std::vector<Record> records(std::span<const RowReport> reports)
{
    std::vector<Record> out;
    for (const auto& r : reports) {
        const TableRow& row = *r.row;
        for (const auto& c : r.claims) {
            out.push_back({row.table_id, row.row_id, family_name(row.spec.family()), row.spec.group.to_string(),
                           row.printed_forms, c.claim.k, canonical_fixed(c.expected.real()),
                           canonical_fixed(c.expected.imag()), canonical_fixed(c.center.real()),
                           canonical_fixed(c.center.imag()), canonical_scientific(c.deviation),
                           calibration_label(r.calibration), c.pass});
        }
    }
    return out;
}

std::string csv_field(const std::string& s)
{
    if (s.find_first_of(",\"\n") == std::string::npos)
        return s;
    std::string q = "\"";
    for (char ch : s) {
        if (ch == '"')
            q += '"';
        q += ch;
    }
    return q + "\"";
}

std::vector<std::string> split_csv_line(const std::string& line)
{
    std::vector<std::string> fields(1);
    bool quoted = false;
    for (std::size_t i = 0; i < line.size(); ++i) {
        const char ch = line[i];
        if (quoted) {
            if (ch == '"' && i + 1 < line.size() && line[i + 1] == '"') {
                fields.back() += '"';
                ++i;
            } else if (ch == '"') {
                quoted = false;
            } else {
                fields.back() += ch;
            }
        } else if (ch == '"') {
            quoted = true;
        } else if (ch == ',') {
            fields.emplace_back();
        } else {
            fields.back() += ch;
        }
    }
    return fields;
}

std::string emit_csv(const std::vector<Record>& recs)
{
    std::ostringstream out;
    out << kCsvHeader << '\n';
    for (const auto& r : recs) {
        out << csv_field(r.table_id) << ',' << r.row_id << ',' << csv_field(r.family) << ',' << csv_field(r.group)
            << ',' << csv_field(r.form) << ',' << r.k << ',' << fixed(r.expected_re) << ',' << fixed(r.expected_im)
            << ',' << fixed(r.computed_re) << ',' << fixed(r.computed_im) << ',' << scientific(r.deviation) << ','
            << csv_field(r.calibrated) << ',' << (r.pass ? "true" : "false") << '\n';
    }
    return out.str();
}

std::string emit_json(const std::vector<Record>& recs)
{
    ordered_json doc;
    std::set<std::pair<std::string, int>> rows;
    bool all_pass = true;
    ordered_json arr = ordered_json::array();
    for (const auto& r : recs) {
        rows.insert({r.table_id, r.row_id});
        all_pass = all_pass && r.pass;
        arr.push_back({{"table_id", r.table_id},
                       {"row_id", r.row_id},
                       {"family", r.family},
                       {"group", r.group},
                       {"form", r.form},
                       {"k", r.k},
                       {"expected_re", r.expected_re},
                       {"expected_im", r.expected_im},
                       {"computed_re", r.computed_re},
                       {"computed_im", r.computed_im},
                       {"deviation", r.deviation},
                       {"calibrated", r.calibrated},
                       {"pass", r.pass}});
    }
    doc["rows"] = rows.size();
    doc["claims"] = recs.size();
    doc["all_pass"] = all_pass;
    doc["records"] = std::move(arr);
    return doc.dump(2) + "\n";
}

std::string complex_cell(double re, double im)
{
    // Values that print as zero are printed without a sign.
    if (std::abs(re) < 5e-7)
        re = 0.0;
    if (std::abs(im) < 5e-7)
        im = 0.0;
    char buf[96];
    std::snprintf(buf, sizeof buf, "%.6f%+.6fi", re, im);
    return buf;
}

std::string emit_markdown(std::span<const RowReport> reports)
{
    std::ostringstream out;
    std::vector<std::string> order;
    std::map<std::string, std::vector<const RowReport*>> by_table;
    for (const auto& r : reports) {
        if (!by_table.count(r.row->table_id))
            order.push_back(r.row->table_id);
        by_table[r.row->table_id].push_back(&r);
    }
    for (const auto& id : order) {
        const auto& rs = by_table[id];
        std::set<std::int64_t> ks;
        for (const auto* r : rs)
            for (const auto& c : r->claims)
                ks.insert(c.claim.k);
        out << "### " << id << "\n\n| row | category | forms | calibration |";
        for (auto k : ks)
            out << " nu_" << k << " |";
        out << "\n|---|---|---|---|";
        for (std::size_t i = 0; i < ks.size(); ++i)
            out << "---|";
        out << '\n';
        for (const auto* r : rs) {
            out << "| " << r->row->row_id << " | " << describe(r->row->spec) << " | " << r->row->printed_forms << " | "
                << calibration_label(r->calibration) << " |";
            for (auto k : ks) {
                const ClaimResult* hit = nullptr;
                for (const auto& c : r->claims)
                    if (c.claim.k == k)
                        hit = &c;
                if (hit)
                    out << ' ' << complex_cell(hit->center.real(), hit->center.imag())
                        << (hit->pass ? "" : " (FAIL, expected " + to_string(hit->claim.expected) + ")") << " |";
                else
                    out << " |";
            }
            out << '\n';
        }
        out << '\n';
    }
    return out.str();
}

} // namespace

ReportFormat parse_report_format(const std::string& name)
{
    if (name == "csv")
        return ReportFormat::Csv;
    if (name == "json")
        return ReportFormat::Json;
    if (name == "markdown")
        return ReportFormat::Markdown;
    throw std::invalid_argument("unknown report format '" + name + "' (expected csv, json or markdown)");
}

std::string emit_report(std::span<const RowReport> reports, ReportFormat format)
{
    switch (format) {
    case ReportFormat::Csv:
        return emit_csv(records(reports));
    case ReportFormat::Json:
        return emit_json(records(reports));
    case ReportFormat::Markdown:
        return emit_markdown(reports);
    }
    throw std::logic_error("unreachable report format");
}

std::string csv_report_to_json(const std::string& csv)
{
    std::istringstream in(csv);
    std::string line;
    if (!std::getline(in, line) || line != kCsvHeader)
        throw std::invalid_argument("CSV report has an unexpected header");
    std::vector<Record> recs;
    while (std::getline(in, line)) {
        if (line.empty())
            continue;
        const auto f = split_csv_line(line);
        if (f.size() != 13)
            throw std::invalid_argument("CSV report line has " + std::to_string(f.size()) + " fields, expected 13");
        recs.push_back({f[0], std::stoi(f[1]), f[2], f[3], f[4], std::stoll(f[5]), std::stod(f[6]), std::stod(f[7]),
                        std::stod(f[8]), std::stod(f[9]), std::stod(f[10]), f[11], f[12] == "true"});
    }
    return emit_json(recs);
}

} // namespace fsind
