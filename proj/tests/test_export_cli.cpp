#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <array>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <sstream>
#include <string>

#include <json.hpp>

#include "nk/export_doc.hpp"

// Integration tests driving the nk binary (path in NK_BIN) and the export
// document schema.

namespace {

struct RunResult {
    int exit_code;
    std::string out;
};

std::string nk_bin() {
    const char* p = std::getenv("NK_BIN");
    REQUIRE_MESSAGE(p != nullptr, "NK_BIN must point at the nk binary");
    return p;
}

RunResult run(const std::string& args) {
    std::string cmd = nk_bin() + " " + args + " 2>/dev/null";
    FILE* pipe = popen(cmd.c_str(), "r");
    REQUIRE(pipe != nullptr);
    std::string out;
    char buf[4096];
    size_t n;
    while ((n = fread(buf, 1, sizeof buf, pipe)) > 0) out.append(buf, n);
    int status = pclose(pipe);
    return {WIFEXITED(status) ? WEXITSTATUS(status) : -1, out};
}

std::string slurp(const std::string& path) {
    std::ifstream in(path);
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

}  // namespace

TEST_CASE("classify-plane reports and exit codes") {
    // P^+_0 spanning vectors -> alpha
    auto r = run("classify-plane 1 0 1 0 0 -1 0 -1");
    CHECK(r.exit_code == 0);
    CHECK(r.out.find("class: alpha") != std::string::npos);
    CHECK(r.out.find("totally_null: true") != std::string::npos);

    // double-null duals e1, e4: not_null
    auto r2 = run("classify-plane 1 0 0 0 0 0 0 1 --basis double-null");
    CHECK(r2.exit_code == 0);
    CHECK(r2.out.find("class: not_null") != std::string::npos);

    // arity error -> 2
    CHECK(run("classify-plane 1 0 1 0 0 -1 0").exit_code == 2);
    // rank-deficient -> 3
    CHECK(run("classify-plane 1 2 3 4 2 4 6 8").exit_code == 3);
}

TEST_CASE("beta command verdicts and domain violations") {
    auto r = run("beta --space lh3-torus --c1 1 --grid 20");
    CHECK(r.exit_code == 0);
    CHECK(r.out.find("verdict: beta") != std::string::npos);

    auto r2 = run("beta --space tn-sphere --c0 0 --grid 16");
    CHECK(r2.exit_code == 0);
    CHECK(r2.out.find("verdict: beta") != std::string::npos);

    // torus grid crossing sin u = 0 -> exit 3
    CHECK(run("beta --space lh3-torus --c1 1 --s0 -0.5 --s1 0.5 --grid 9").exit_code == 3);
    // hyperbolic grid leaving the disc -> exit 3
    CHECK(run("beta --space tn-hyperbolic --s0 -2 --s1 2 --grid 8").exit_code == 3);
    // missing required option -> 2
    CHECK(run("beta --grid 8").exit_code == 2);
}

TEST_CASE("verify exit codes and determinism") {
    auto r = run("verify flat --seed 7");
    CHECK(r.exit_code == 0);
    CHECK(r.out.find("failed: 0") != std::string::npos);

    auto a = run("verify tn --seed 7 --out /tmp/nk_rep_a.json");
    auto b = run("verify tn --seed 7 --out /tmp/nk_rep_b.json");
    CHECK(a.exit_code == 0);
    CHECK(a.out == b.out);
    CHECK(slurp("/tmp/nk_rep_a.json") == slurp("/tmp/nk_rep_b.json"));
    CHECK(!slurp("/tmp/nk_rep_a.json").empty());

    // NK_SEED env override
    auto s = run("verify flat");  // default seed 7
    CHECK(s.out.find("seed: 7") != std::string::npos);
    std::string cmd = "NK_SEED=9 " + nk_bin() + " verify flat 2>/dev/null";
    FILE* pipe = popen(cmd.c_str(), "r");
    REQUIRE(pipe != nullptr);
    std::string out;
    char buf[4096];
    size_t n;
    while ((n = fread(buf, 1, sizeof buf, pipe)) > 0) out.append(buf, n);
    pclose(pipe);
    CHECK(out.find("seed: 9") != std::string::npos);
}

TEST_CASE("config file with flag overrides") {
    {
        std::ofstream cfg("/tmp/nk_cfg.json");
        cfg << "{\"seed\": 21, \"grid\": [12, 12]}\n";
    }
    auto r = run("--config /tmp/nk_cfg.json verify flat");
    CHECK(r.out.find("seed: 21") != std::string::npos);
    auto r2 = run("--config /tmp/nk_cfg.json verify flat --seed 5");
    CHECK(r2.out.find("seed: 5") != std::string::npos);
}

TEST_CASE("export figure schema and determinism") {
    auto r = run("export-figure --c1 1 --arcs 12 --export /tmp/nk_fig_a.json");
    CHECK(r.exit_code == 0);
    auto r2 = run("export-figure --c1 1 --arcs 12 --export /tmp/nk_fig_b.json");
    CHECK(slurp("/tmp/nk_fig_a.json") == slurp("/tmp/nk_fig_b.json"));

    auto doc = nlohmann::json::parse(slurp("/tmp/nk_fig_a.json"));
    CHECK(doc["schema_version"] == "1");
    REQUIRE(doc["objects"].is_array());
    int circles = 0, polylines = 0;
    for (const auto& o : doc["objects"]) {
        std::string kind = o["kind"];
        CHECK((kind == "circle" || kind == "polyline" || kind == "points"));
        if (kind == "circle") ++circles;
        if (kind == "polyline") {
            ++polylines;
            CHECK(o["coordinates"].size() >= 2);
        }
        for (const auto& c : o["coordinates"]) {
            REQUIRE(c.size() == 3);
            for (const auto& v : c) CHECK(std::isfinite(v.get<double>()));
        }
    }
    CHECK(circles == 2);
    CHECK(polylines == 12);

    // geodesic arcs end on the boundary sphere, interior stays inside
    for (const auto& o : doc["objects"]) {
        if (o["kind"] != "polyline") continue;
        auto norm_of = [&](const nlohmann::json& c) {
            return std::hypot(c[0].get<double>(), c[1].get<double>(), c[2].get<double>());
        };
        CHECK(norm_of(o["coordinates"].front()) == doctest::Approx(1.0).epsilon(1e-10));
        CHECK(norm_of(o["coordinates"].back()) == doctest::Approx(1.0).epsilon(1e-10));
        for (size_t i = 1; i + 1 < o["coordinates"].size(); ++i)
            CHECK(norm_of(o["coordinates"][i]) < 1.0);
    }
}

TEST_CASE("export document validation rejects bad objects") {
    nk::expo::ExportDocument doc;
    doc.objects.push_back({"polyline", {{{0, 0, 0}}}, {}});
    CHECK_THROWS_AS(doc.validate(), std::invalid_argument);
    doc.objects.clear();
    doc.objects.push_back({"blob", {{{0, 0, 0}}}, {}});
    CHECK_THROWS_AS(doc.validate(), std::invalid_argument);
    doc.objects.clear();
    doc.objects.push_back(
        {"points", {{{std::numeric_limits<double>::infinity(), 0, 0}}}, {}});
    CHECK_THROWS_AS(doc.validate(), std::invalid_argument);
}

TEST_CASE("curvature command") {
    auto r = run("curvature --space tn-flat 0 0 0 0");
    CHECK(r.exit_code == 0);
    CHECK(r.out.find("weyl_plus_norm") != std::string::npos);

    // out-of-domain -> 3
    CHECK(run("curvature --space tn-hyperbolic 2 0 0 0").exit_code == 3);
    CHECK(run("curvature --space lh3 1 0 -1 0").exit_code == 3);  // anti-diagonal
    // arity -> 2
    CHECK(run("curvature --space tn-flat 0 0 0").exit_code == 2);
}

TEST_CASE("fuzzed malformed inputs keep the exit-code contract") {
    const char* bad[] = {
        "",                             // no subcommand
        "frobnicate",                   // unknown subcommand
        "classify-plane",               // no components
        "classify-plane a b c d e f g h",
        "beta --space nowhere",
        "beta --space tn-flat --grid 1",
        "verify nosuite",
        "curvature --space tn-flat 1 2 three 4",
    };
    for (const char* args : bad) {
        auto r = run(args);
        CHECK_MESSAGE(r.exit_code == 2, "args: ", args);
    }
}
