#pragma once

#include "lierine/manifest.hpp"
#include "lierine/report.hpp"

#include <optional>
#include <string>
#include <vector>

namespace lierine {

struct RunOptions {
    /// Positional arguments after the subcommand (module labels, k0 expression).
    std::vector<std::string> args;
    /// "finite" or "degree:D".
    std::optional<std::string> regime;
    /// Coefficient module for `cohomology`; scalar coefficients when empty.
    std::optional<std::string> module;
};

const std::vector<std::string>& subcommands();

/// Runs one of check, curvature, chern, cohomology, compare, k0. Invalid
/// input (unknown labels, bad regime, wrong argument count) throws.
Report run_subcommand(const std::string& command, const Manifest& manifest, const RunOptions& options);

} // namespace lierine
