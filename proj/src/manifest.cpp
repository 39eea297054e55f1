#include "lierine/manifest.hpp"

#include "lierine/connection_ops.hpp"
#include "lierine/errors.hpp"

#include <algorithm>
#include <array>
#include <cctype>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <set>
#include <sstream>

namespace lierine {

using json = nlohmann::ordered_json;

namespace {

[[noreturn]] void fail(const std::string& field, const std::string& what)
{
    throw ManifestError(field.empty() ? what : field + ": " + what);
}

const json& require(const json& obj, const std::string& key, const std::string& path)
{
    if (!obj.is_object())
        fail(path, "expected an object");
    auto it = obj.find(key);
    if (it == obj.end())
        throw ManifestError((path.empty() ? key : path + "." + key) + " required");
    return *it;
}

std::string child(const std::string& path, std::size_t index)
{
    return path + "[" + std::to_string(index) + "]";
}

std::size_t as_count(const json& v, const std::string& path)
{
    if (!v.is_number_integer() || v.get<long long>() < 0)
        fail(path, "expected a nonnegative integer");
    return v.get<std::size_t>();
}

Polynomial as_polynomial(const json& v, const Ring& ring, const std::string& path)
{
    std::string text;
    if (v.is_string())
        text = v.get<std::string>();
    else if (v.is_number_integer())
        text = std::to_string(v.get<long long>());
    else
        fail(path, "expected a polynomial string");
    try {
        return parse_polynomial(text, ring);
    } catch (const ParseError& e) {
        fail(path, e.what());
    }
}

const json& as_array(const json& v, const std::string& path, std::optional<std::size_t> size = {})
{
    if (!v.is_array())
        fail(path, "expected an array");
    if (size && v.size() != *size)
        fail(path, "expected " + std::to_string(*size) + " entries, got " + std::to_string(v.size()));
    return v;
}

PolyMatrix as_matrix(const json& v, const Ring& ring, std::size_t r, const std::string& path)
{
    as_array(v, path);
    PolyMatrix m(ring, r, r);
    const bool nested = !v.empty() && v.front().is_array();
    if (nested) {
        as_array(v, path, r);
        for (std::size_t i = 0; i < r; ++i) {
            const json& row = as_array(v[i], child(path, i), r);
            for (std::size_t j = 0; j < r; ++j)
                m(i, j) = as_polynomial(row[j], ring, child(child(path, i), j));
        }
    } else {
        as_array(v, path, r * r);
        for (std::size_t k = 0; k < r * r; ++k)
            m(k / r, k % r) = as_polynomial(v[k], ring, child(path, k));
    }
    return m;
}

bool valid_label(const std::string& name)
{
    if (name.empty() || !(std::isalpha(static_cast<unsigned char>(name[0])) || name[0] == '_'))
        return false;
    return std::all_of(name.begin(), name.end(),
                       [](char c) { return std::isalnum(static_cast<unsigned char>(c)) || c == '_'; });
}

Ring parse_ring(const json& doc)
{
    const json& ring = require(doc, "ring", "");
    const json& vars = as_array(require(ring, "variables", "ring"), "ring.variables");
    std::vector<std::string> names;
    for (std::size_t k = 0; k < vars.size(); ++k) {
        if (!vars[k].is_string())
            fail(child("ring.variables", k), "expected a variable name");
        names.push_back(vars[k].get<std::string>());
        if (!valid_label(names.back()))
            fail(child("ring.variables", k), "invalid variable name '" + names.back() + "'");
    }
    std::vector<std::optional<unsigned>> bounds(names.size());
    if (auto it = ring.find("truncation"); it != ring.end()) {
        if (!it->is_object())
            fail("ring.truncation", "expected an object {variable: bound}");
        for (const auto& [var, bound] : it->items()) {
            auto pos = std::find(names.begin(), names.end(), var);
            if (pos == names.end())
                fail("ring.truncation." + var, "unknown variable");
            std::size_t b = as_count(bound, "ring.truncation." + var);
            if (b == 0)
                fail("ring.truncation." + var, "bound must be at least 1");
            bounds[static_cast<std::size_t>(pos - names.begin())] = static_cast<unsigned>(b);
        }
    }
    try {
        return make_ring(std::move(names), std::move(bounds));
    } catch (const StructuralError& e) {
        fail("ring", e.what());
    }
}

Algebra parse_algebra(const json& doc, const Ring& ring)
{
    const json& alg = require(doc, "algebra", "");
    const std::size_t m = as_count(require(alg, "rank", "algebra"), "algebra.rank");
    if (m == 0)
        fail("algebra.rank", "must be at least 1");
    if (m > max_algebra_rank())
        fail("algebra.rank", std::to_string(m) + " exceeds the maximum rank " + std::to_string(max_algebra_rank()));
    const json& anchor = as_array(require(alg, "anchor", "algebra"), "algebra.anchor", m);
    std::vector<Derivation> derivations;
    for (std::size_t i = 0; i < m; ++i) {
        const std::string path = child("algebra.anchor", i);
        const json& row = as_array(anchor[i], path, ring->size());
        std::vector<Polynomial> coeffs;
        for (std::size_t v = 0; v < ring->size(); ++v)
            coeffs.push_back(as_polynomial(row[v], ring, child(path, v)));
        derivations.emplace_back(ring, std::move(coeffs));
    }
    std::vector<LieRinehartData::Bracket> brackets;
    std::set<std::pair<std::size_t, std::size_t>> seen;
    if (auto it = alg.find("brackets"); it != alg.end()) {
        as_array(*it, "algebra.brackets");
        for (std::size_t k = 0; k < it->size(); ++k) {
            const std::string path = child("algebra.brackets", k);
            const json& entry = (*it)[k];
            const std::size_t i = as_count(require(entry, "i", path), path + ".i");
            const std::size_t j = as_count(require(entry, "j", path), path + ".j");
            if (i < 1 || i > m || j < 1 || j > m)
                fail(path, "indices must lie in 1.." + std::to_string(m));
            if (i >= j)
                fail(path, "brackets must have i<j");
            if (!seen.insert({i, j}).second)
                fail(path, "duplicate bracket entry");
            const json& cs = as_array(require(entry, "coeffs", path), path + ".coeffs", m);
            std::vector<Polynomial> coeffs;
            for (std::size_t c = 0; c < m; ++c)
                coeffs.push_back(as_polynomial(cs[c], ring, child(path + ".coeffs", c)));
            brackets.push_back({i - 1, j - 1, std::move(coeffs)});
        }
    }
    try {
        return make_algebra(ring, m, std::move(derivations), std::move(brackets));
    } catch (const StructuralError& e) {
        fail("algebra", e.what());
    }
}

std::array<std::string, 2> operands(const json& v, const std::string& path)
{
    as_array(v, path, 2);
    if (!v[0].is_string() || !v[1].is_string())
        fail(path, "expected two module names");
    return {v[0].get<std::string>(), v[1].get<std::string>()};
}

std::string hex64(std::uint64_t h)
{
    char buf[17];
    std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(h));
    return buf;
}

} // namespace

const Connection& Manifest::module(const std::string& name) const
{
    for (const auto& c : connections)
        if (c.label() == name)
            return c;
    throw StructuralError("unknown module label '" + name + "'");
}

std::size_t max_algebra_rank()
{
    const char* env = std::getenv("LIERINE_MAX_RANK");
    if (!env || !*env)
        return kMaxAlgebraRank;
    char* end = nullptr;
    const unsigned long v = std::strtoul(env, &end, 10);
    if (*end != '\0' || v == 0)
        throw ManifestError("LIERINE_MAX_RANK must be a positive integer");
    return std::min<std::size_t>(v, kMaxAlgebraRank);
}

Manifest parse_manifest_json(const json& doc)
{
    if (!doc.is_object())
        fail("", "manifest must be a JSON object");
    Manifest out;
    Ring ring = parse_ring(doc);
    out.algebra = parse_algebra(doc, ring);
    const std::size_t m = out.algebra->rank();

    if (auto it = doc.find("modules"); it != doc.end()) {
        as_array(*it, "modules");
        for (std::size_t k = 0; k < it->size(); ++k) {
            const std::string path = child("modules", k);
            const json& entry = (*it)[k];
            const json& name_json = require(entry, "name", path);
            if (!name_json.is_string() || !valid_label(name_json.get<std::string>()))
                fail(path + ".name", "module names must be identifiers");
            ManifestModule mod;
            mod.name = name_json.get<std::string>();
            for (const auto& c : out.connections)
                if (c.label() == mod.name)
                    fail(path + ".name", "duplicate module name '" + mod.name + "'");

            const bool has_sum = entry.contains("sum");
            const bool has_tensor = entry.contains("tensor");
            if (has_sum || has_tensor) {
                if (has_sum && has_tensor)
                    fail(path, "give either sum or tensor, not both");
                mod.kind = has_sum ? ManifestModule::Kind::Sum : ManifestModule::Kind::Tensor;
                const std::string key = has_sum ? "sum" : "tensor";
                auto [a, b] = operands(entry.at(key), path + "." + key);
                mod.operands = {a, b};
                const Connection* ca = nullptr;
                const Connection* cb = nullptr;
                for (const auto& c : out.connections) {
                    if (c.label() == a)
                        ca = &c;
                    if (c.label() == b)
                        cb = &c;
                }
                if (!ca || !cb)
                    fail(path + "." + key, "operands must name earlier modules");
                Connection built = has_sum ? direct_sum(*ca, *cb) : tensor(*ca, *cb);
                out.connections.push_back(built.relabeled(
                    mod.name, {has_sum ? ConnectionOrigin::Kind::DirectSum : ConnectionOrigin::Kind::Tensor, {a, b}}));
            } else {
                const std::size_t r = as_count(require(entry, "rank", path), path + ".rank");
                if (r == 0)
                    fail(path + ".rank", "must be at least 1");
                const json& gamma = as_array(require(entry, "christoffel", path), path + ".christoffel", m);
                std::vector<PolyMatrix> mats;
                for (std::size_t j = 0; j < m; ++j)
                    mats.push_back(as_matrix(gamma[j], ring, r, child(path + ".christoffel", j)));
                out.connections.emplace_back(out.algebra, r, std::move(mats), mod.name);
            }
            out.modules.push_back(std::move(mod));
        }
    }
    return out;
}

Manifest parse_manifest_text(std::string_view text)
{
    json doc;
    try {
        doc = json::parse(text);
    } catch (const json::parse_error& e) {
        throw ManifestError(std::string("invalid JSON: ") + e.what());
    }
    return parse_manifest_json(doc);
}

Manifest parse_manifest(const std::filesystem::path& path)
{
    std::ifstream in(path, std::ios::binary);
    if (!in)
        throw ManifestError("cannot read manifest '" + path.string() + "'");
    std::ostringstream buf;
    buf << in.rdbuf();
    return parse_manifest_text(buf.str());
}

json serialize_manifest(const Manifest& manifest)
{
    const LieRinehartData& alg = *manifest.algebra;
    const RingSpec& ring = *alg.ring();
    const std::size_t m = alg.rank();

    json ring_json = json::object();
    ring_json["variables"] = ring.variables();
    if (ring.truncated()) {
        json trunc = json::object();
        for (std::size_t v = 0; v < ring.size(); ++v)
            if (ring.bound(v))
                trunc[ring.name(v)] = *ring.bound(v);
        ring_json["truncation"] = trunc;
    }

    json anchor = json::array();
    for (std::size_t i = 0; i < m; ++i) {
        json row = json::array();
        for (const auto& p : alg.anchor(i).coefficients())
            row.push_back(p.to_string());
        anchor.push_back(row);
    }
    json brackets = json::array();
    for (std::size_t i = 0; i < m; ++i)
        for (std::size_t j = i + 1; j < m; ++j)
            if (const auto* k = alg.bracket_coefficients(i, j)) {
                json coeffs = json::array();
                for (const auto& p : *k)
                    coeffs.push_back(p.to_string());
                brackets.push_back({{"i", i + 1}, {"j", j + 1}, {"coeffs", coeffs}});
            }
    json algebra = json::object();
    algebra["rank"] = m;
    algebra["anchor"] = anchor;
    algebra["brackets"] = brackets;

    json modules = json::array();
    for (std::size_t k = 0; k < manifest.modules.size(); ++k) {
        const ManifestModule& mod = manifest.modules[k];
        json entry = json::object();
        entry["name"] = mod.name;
        if (mod.kind == ManifestModule::Kind::Atom) {
            const Connection& c = manifest.connections[k];
            entry["rank"] = c.rank();
            json gamma = json::array();
            for (const auto& g : c.christoffel()) {
                json mat = json::array();
                for (std::size_t i = 0; i < g.rows(); ++i) {
                    json row = json::array();
                    for (std::size_t j = 0; j < g.cols(); ++j)
                        row.push_back(g(i, j).to_string());
                    mat.push_back(row);
                }
                gamma.push_back(mat);
            }
            entry["christoffel"] = gamma;
        } else {
            entry[mod.kind == ManifestModule::Kind::Sum ? "sum" : "tensor"] = mod.operands;
        }
        modules.push_back(entry);
    }

    json out = json::object();
    out["ring"] = ring_json;
    out["algebra"] = algebra;
    out["modules"] = modules;
    return out;
}

std::string manifest_digest(const Manifest& manifest)
{
    const std::string text = serialize_manifest(manifest).dump();
    std::uint64_t h = 0xcbf29ce484222325ULL;
    for (unsigned char c : text) {
        h ^= c;
        h *= 0x100000001b3ULL;
    }
    return hex64(h);
}

} // namespace lierine
