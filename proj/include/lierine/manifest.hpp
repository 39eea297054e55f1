#pragma once

#include "lierine/connection.hpp"
#include "lierine/lie_rinehart.hpp"

#include "json.hpp"

#include <cstdint>
#include <filesystem>
#include <string>
#include <vector>

namespace lierine {

/// A module entry of a manifest. Atoms carry Christoffel matrices; derived
/// entries name two earlier modules and are built with direct_sum or tensor.
struct ManifestModule {
    enum class Kind { Atom, Sum, Tensor };
    Kind kind = Kind::Atom;
    std::string name;
    std::vector<std::string> operands;
};

/// A validated manifest. `connections` holds one connection per module
/// entry, in file order, labelled by the module name.
struct Manifest {
    Algebra algebra;
    std::vector<ManifestModule> modules;
    std::vector<Connection> connections;

    const Connection& module(const std::string& name) const;
};

/// Largest algebra rank accepted: LIERINE_MAX_RANK if set (clamped to
/// kMaxAlgebraRank), otherwise kMaxAlgebraRank.
std::size_t max_algebra_rank();

Manifest parse_manifest(const std::filesystem::path& path);
Manifest parse_manifest_text(std::string_view text);
Manifest parse_manifest_json(const nlohmann::ordered_json& doc);

/// Canonical JSON form: fixed key order, polynomials re-printed, brackets
/// sorted, matrices as nested rows.
nlohmann::ordered_json serialize_manifest(const Manifest& manifest);

/// FNV-1a 64 of the compact canonical serialization, as 16 hex digits.
std::string manifest_digest(const Manifest& manifest);

} // namespace lierine
