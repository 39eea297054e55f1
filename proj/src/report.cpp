#include "lierine/report.hpp"

#include <algorithm>
#include <sstream>

namespace lierine {

using json = nlohmann::ordered_json;

bool Report::passed() const
{
    return std::all_of(verdicts.begin(), verdicts.end(), [](const Verdict& v) { return v.passed; });
}

int Report::exit_code() const
{
    return passed() ? 0 : 1;
}

json to_json(const PolyMatrix& m)
{
    json rows = json::array();
    for (std::size_t i = 0; i < m.rows(); ++i) {
        json row = json::array();
        for (std::size_t j = 0; j < m.cols(); ++j)
            row.push_back(m(i, j).to_string());
        rows.push_back(std::move(row));
    }
    return rows;
}

json to_json(const Form& form)
{
    json out = json::array();
    const auto subsets = form.basis_subsets();
    for (std::size_t k = 0; k < form.size(); ++k) {
        const PolyMatrix& v = form.value(k);
        if (v.is_zero())
            continue;
        json indices = json::array();
        for (unsigned i : subsets[k])
            indices.push_back(i + 1);
        json entry = json::object();
        entry["indices"] = std::move(indices);
        if (form.kind() == ValueKind::Scalar)
            entry["value"] = v(0, 0).to_string();
        else
            entry["value"] = to_json(v);
        out.push_back(std::move(entry));
    }
    return out;
}

json to_json(const ChernForm& ch)
{
    json out = json::array();
    for (std::size_t n = 0; n < ch.size(); ++n) {
        json entry = json::object();
        entry["n"] = n;
        entry["degree"] = ch.component(n).degree();
        entry["entries"] = to_json(ch.component(n));
        out.push_back(std::move(entry));
    }
    return out;
}

json to_json(const K0Element& element)
{
    json out = json::object();
    for (const auto& [label, n] : element.coefficients)
        out[label] = n;
    return out;
}

std::string render_json(const Report& report)
{
    json doc = json::object();
    doc["subcommand"] = report.subcommand;
    doc["inputs"] = report.inputs;
    doc["results"] = report.results;
    json verdicts = json::array();
    std::size_t passed = 0;
    for (const auto& v : report.verdicts) {
        verdicts.push_back({{"name", v.name}, {"passed", v.passed}});
        passed += v.passed ? 1 : 0;
    }
    doc["verdicts"] = std::move(verdicts);
    doc["summary"] = {{"passed", passed}, {"failed", report.verdicts.size() - passed}};
    doc["exit_code"] = report.exit_code();
    return doc.dump(2) + "\n";
}

namespace {

void render_value(std::ostringstream& out, const json& v, int indent)
{
    const std::string pad(static_cast<std::size_t>(indent) * 2, ' ');
    for (const auto& [key, value] : v.items()) {
        const bool nested = value.is_structured() && value.dump().size() > 72;
        if (!nested) {
            out << pad << key << ": " << (value.is_string() ? value.get<std::string>() : value.dump()) << "\n";
            continue;
        }
        out << pad << key << ":\n";
        if (value.is_object()) {
            render_value(out, value, indent + 1);
        } else {
            for (const auto& item : value)
                out << pad << "  - " << item.dump() << "\n";
        }
    }
}

} // namespace

std::string render_text(const Report& report)
{
    std::ostringstream out;
    out << "subcommand: " << report.subcommand << "\n";
    render_value(out, report.inputs, 0);
    out << "results:\n";
    render_value(out, report.results, 1);
    out << "verdicts:\n";
    std::size_t passed = 0;
    for (const auto& v : report.verdicts) {
        out << "  " << (v.passed ? "PASS " : "FAIL ") << v.name << "\n";
        passed += v.passed ? 1 : 0;
    }
    out << "summary: " << passed << "/" << report.verdicts.size() << " verdicts passed\n";
    out << "exit code: " << report.exit_code() << "\n";
    return out.str();
}

} // namespace lierine
