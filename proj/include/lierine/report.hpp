#pragma once

#include "lierine/chern.hpp"
#include "lierine/forms.hpp"
#include "lierine/k0ring.hpp"

#include "json.hpp"

#include <string>
#include <vector>

namespace lierine {

struct Verdict {
    std::string name;
    bool passed;
};

/// Outcome of one CLI subcommand. Both renderings are produced from the same
/// verdict list, so they always agree on pass/fail.
struct Report {
    std::string subcommand;
    nlohmann::ordered_json inputs = nlohmann::ordered_json::object();
    nlohmann::ordered_json results = nlohmann::ordered_json::object();
    std::vector<Verdict> verdicts;

    bool passed() const;
    /// 0 iff every verdict passed, 1 otherwise.
    int exit_code() const;
};

/// Nonzero values only: [{indices (1-based), value}], where value is a
/// polynomial string for scalar forms and a list of rows otherwise.
nlohmann::ordered_json to_json(const Form& form);
/// [{n, degree, entries}] with entries as for to_json(Form).
nlohmann::ordered_json to_json(const ChernForm& ch);
/// {label: coefficient}.
nlohmann::ordered_json to_json(const K0Element& element);
nlohmann::ordered_json to_json(const PolyMatrix& m);

std::string render_json(const Report& report);
std::string render_text(const Report& report);

} // namespace lierine
