#include "doctest.h"

#include "lierine/cli.hpp"
#include "lierine/errors.hpp"
#include "lierine/manifest.hpp"
#include "lierine/report.hpp"
#include "lierine/sampling.hpp"

#include <cstdlib>
#include <fstream>
#include <random>
#include <sstream>

using namespace lierine;
using json = nlohmann::ordered_json;

namespace {

const std::string kData = LIERINE_DATA_DIR;

Manifest golden(const std::string& name)
{
    return parse_manifest(kData + "/manifests/" + name + ".json");
}

const char* kLine = R"({
  "ring": {"variables": ["x", "y"]},
  "algebra": {"rank": 2, "anchor": [["1", "0"], ["0", "1"]], "brackets": []},
  "modules": [{"name": "line", "rank": 1, "christoffel": [[["0"]], [["x"]]]}]
})";

std::string error_of(const std::string& text)
{
    try {
        parse_manifest_text(text);
    } catch (const ManifestError& e) {
        return e.what();
    }
    return "";
}

std::string with(std::string text, const std::string& from, const std::string& to)
{
    const auto pos = text.find(from);
    REQUIRE(pos != std::string::npos);
    return text.replace(pos, from.size(), to);
}

json verdicts_of_text(const std::string& text)
{
    json out = json::array();
    std::istringstream in(text);
    std::string line;
    while (std::getline(in, line)) {
        if (line.rfind("  PASS ", 0) == 0)
            out.push_back({{"name", line.substr(7)}, {"passed", true}});
        else if (line.rfind("  FAIL ", 0) == 0)
            out.push_back({{"name", line.substr(7)}, {"passed", false}});
    }
    return out;
}

} // namespace

TEST_CASE("parse_manifest examples")
{
    const Manifest m = parse_manifest_text(kLine);
    CHECK(m.algebra->rank() == 2);
    CHECK(m.algebra->ring()->variables() == std::vector<std::string>{"x", "y"});
    REQUIRE(m.connections.size() == 1);
    CHECK(m.module("line").rank() == 1);
    CHECK(m.module("line").christoffel(1)(0, 0) == parse_polynomial("x", m.algebra->ring()));
    CHECK_THROWS_AS(m.module("missing"), StructuralError);

    CHECK(error_of(with(kLine, R"("anchor": [["1", "0"], ["0", "1"]], )", "")) == "algebra.anchor required");
    const std::string bad_bracket =
        with(kLine, R"("brackets": [])", R"("brackets": [{"i": 2, "j": 1, "coeffs": ["0", "0"]}])");
    CHECK(error_of(bad_bracket).find("brackets must have i<j") != std::string::npos);
    CHECK(error_of(with(kLine, R"([["x"]])", R"([["x*"]])")).find("modules[0].christoffel[1]") != std::string::npos);
    CHECK(error_of(with(kLine, R"("rank": 2)", R"("rank": 3)")).find("anchor") != std::string::npos);
    CHECK(error_of("{").find("invalid JSON") != std::string::npos);
    CHECK(error_of("[]") != "");
    CHECK_THROWS_AS(parse_manifest(kData + "/manifests/does_not_exist.json"), ManifestError);
}

TEST_CASE("golden manifests parse")
{
    CHECK(golden("line_bundle").connections.size() == 6);
    CHECK(golden("sl2").algebra->rank() == 3);
    CHECK(golden("truncated_circle").algebra->ring()->finite());
    CHECK(golden("broken_jacobi").algebra->rank() == 3);
}

TEST_CASE("serialization is idempotent and the digest is stable")
{
    for (const char* name : {"line_bundle", "sl2", "truncated_circle", "broken_jacobi"}) {
        const Manifest m = golden(name);
        const json once = serialize_manifest(m);
        const json twice = serialize_manifest(parse_manifest_json(once));
        CHECK_MESSAGE(once.dump() == twice.dump(), name);
        CHECK(manifest_digest(m) == manifest_digest(parse_manifest_json(once)));
        CHECK(manifest_digest(m).size() == 16);
    }
    // Flat and nested matrices, integer and string polynomials canonicalize alike.
    const Manifest a = parse_manifest_text(kLine);
    const Manifest b = parse_manifest_text(with(with(kLine, R"([[["0"]], [["x"]]])", R"([["0"], ["x"]])"), R"("0", "1"]])", R"(0, 1]])"));
    CHECK(serialize_manifest(a).dump() == serialize_manifest(b).dump());
    CHECK(manifest_digest(a) != manifest_digest(golden("line_bundle")));
}

TEST_CASE("LIERINE_MAX_RANK caps the algebra rank")
{
    ::setenv("LIERINE_MAX_RANK", "2", 1);
    CHECK(max_algebra_rank() == 2);
    CHECK_THROWS_AS(golden("sl2"), ManifestError);
    CHECK_NOTHROW(golden("line_bundle"));
    ::setenv("LIERINE_MAX_RANK", "40", 1);
    CHECK(max_algebra_rank() == 12);
    ::setenv("LIERINE_MAX_RANK", "abc", 1);
    CHECK_THROWS_AS(max_algebra_rank(), ManifestError);
    ::unsetenv("LIERINE_MAX_RANK");
    CHECK(max_algebra_rank() == 12);
}

TEST_CASE("run_subcommand examples")
{
    const Manifest line = golden("line_bundle");
    const Report chern = run_subcommand("chern", line, {{"line"}, {}, {}});
    const json ch = chern.results["chern"];
    CHECK(ch[0]["entries"] == json::parse(R"([{"indices": [], "value": "1"}])"));
    CHECK(ch[1]["entries"] == json::parse(R"([{"indices": [1, 2], "value": "1"}])"));
    CHECK(chern.exit_code() == 0);
    CHECK(chern.verdicts.size() == 2);

    const Report broken = run_subcommand("check", golden("broken_jacobi"), {});
    CHECK(broken.exit_code() == 1);
    CHECK(broken.results["axioms"]["jacobi_violations"] == json::parse("[[1, 2, 3]]"));

    const Report sl2 = run_subcommand("cohomology", golden("sl2"), {{}, std::string("finite"), {}});
    CHECK(sl2.results["betti"] == json::parse("[1, 0, 0, 1]"));
    CHECK(sl2.exit_code() == 0);

    const Report circle = run_subcommand("cohomology", golden("truncated_circle"), {{}, {}, std::string("twist")});
    CHECK(circle.results["betti"] == json::parse("[0, 0]"));

    const Report cmp = run_subcommand("compare", line, {{"line", "line5"}, std::string("degree:3"), {}});
    CHECK(cmp.exit_code() == 0);
    CHECK(cmp.results["primitives"][0]["status"] == "found");

    const Report k0 = run_subcommand("k0", line, {{"(line+line2)*line5 - 2*sum + prod"}, {}, {}});
    CHECK(k0.results["chern"][0]["entries"][0]["value"] == "-1");
    CHECK(k0.results["chern"][1]["entries"][0]["value"] == "10");
    CHECK(k0.exit_code() == 0);

    const Report curv = run_subcommand("curvature", line, {{"line2"}, {}, {}});
    CHECK(curv.results["curvature"] == json::parse(R"([{"indices": [1, 2], "value": [["2"]]}])"));
    CHECK(curv.results["flat"] == false);
    CHECK(curv.exit_code() == 0);

    CHECK_THROWS_AS(run_subcommand("chern", line, {{"ghost"}, {}, {}}), StructuralError);
    CHECK_THROWS_AS(run_subcommand("cohomology", line, {{}, std::string("finite"), {}}), PreconditionError);
    CHECK_THROWS_AS(run_subcommand("cohomology", golden("sl2"), {{}, std::string("degree:x"), {}}), ParseError);
    CHECK_THROWS_AS(run_subcommand("frobnicate", line, {}), PreconditionError);
    CHECK_THROWS_AS(run_subcommand("compare", line, {{"line", "sum"}, {}, {}}), PreconditionError);
}

TEST_CASE("reports are deterministic and renderings agree")
{
    struct Case {
        const char* manifest;
        const char* cmd;
        RunOptions options;
    };
    const std::vector<Case> cases{
        {"line_bundle", "check", {}},
        {"line_bundle", "chern", {{"prod"}, {}, {}}},
        {"line_bundle", "compare", {{"line", "line2"}, {}, {}}},
        {"sl2", "cohomology", {}},
        {"truncated_circle", "compare", {{"trivial", "twist"}, {}, {}}},
        {"broken_jacobi", "check", {}},
    };
    for (const auto& c : cases) {
        const Report a = run_subcommand(c.cmd, golden(c.manifest), c.options);
        const Report b = run_subcommand(c.cmd, golden(c.manifest), c.options);
        CHECK(render_json(a) == render_json(b));
        CHECK(render_text(a) == render_text(b));
        const json doc = json::parse(render_json(a));
        CHECK(doc["verdicts"] == verdicts_of_text(render_text(a)));
        CHECK(doc["exit_code"] == a.exit_code());
        CHECK((doc["summary"]["failed"] == 0) == (a.exit_code() == 0));
    }
}

TEST_CASE("property: malformed manifests produce diagnostics")
{
    std::ifstream in(kData + "/manifests/line_bundle.json");
    std::stringstream buf;
    buf << in.rdbuf();
    const std::string base = buf.str();
    std::mt19937_64 rng(99);
    const std::string alphabet = "{}[]\",:0123456789xy*^-+ ";
    int diagnosed = 0;
    for (int k = 0; k < 400; ++k) {
        std::string text = base;
        const int edits = 1 + static_cast<int>(rng() % 3);
        for (int e = 0; e < edits; ++e) {
            const std::size_t pos = rng() % text.size();
            switch (rng() % 3) {
            case 0:
                text.erase(pos, 1);
                break;
            case 1:
                text.insert(pos, 1, alphabet[rng() % alphabet.size()]);
                break;
            default:
                text[pos] = alphabet[rng() % alphabet.size()];
            }
        }
        try {
            parse_manifest_text(text);
        } catch (const ManifestError&) {
            ++diagnosed;
        } catch (const std::exception& e) {
            FAIL_CHECK("non-diagnostic exception: " << e.what() << "\n" << text);
        }
    }
    CHECK(diagnosed > 0);
}
