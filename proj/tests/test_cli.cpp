#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <json.hpp>

#include <cmath>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include "crosscycle/commands.hpp"
#include "crosscycle/config.hpp"
#include "crosscycle/registry.hpp"

using namespace crosscycle;

namespace {

// Circular center: H = x^2 + y^2 with the matching Hamiltonian field.
const char* kCircleCenter =
    R"("center":{"H":[[2,0,1],[0,2,1]],"Fx":[[0,1,2]],"Fy":[[1,0,-2]]})";

// Saddle side (x^2 + 2y^2 - 2)^2: its level set through the crossing
// candidate splits into two ellipses, so the candidate is no cycle.
const char* kTwoComponentSaddle =
    R"("saddle":{"H":[[4,0,1],[0,4,4],[2,2,4],[2,0,-4],[0,2,-8],[0,0,4]],
                 "Fx":[[2,1,8],[0,3,16],[0,1,-16]],
                 "Fy":[[3,0,-4],[1,2,-8],[1,0,8]]})";

std::string wrap(const std::string& body) { return "{\"schema\":1," + body + "}"; }

std::vector<std::string> split(const std::string& line, char sep) {
    std::vector<std::string> out;
    std::string cur;
    for (char c : line) {
        if (c == sep) {
            out.push_back(cur);
            cur.clear();
        } else {
            cur += c;
        }
    }
    out.push_back(cur);
    return out;
}

std::vector<std::vector<std::string>> csv_rows(const std::string& doc) {
    std::vector<std::vector<std::string>> rows;
    std::istringstream in(doc);
    std::string line;
    while (std::getline(in, line))
        if (!line.empty()) rows.push_back(split(line, ','));
    return rows;
}

std::filesystem::path temp_file(const char* name) {
    return std::filesystem::temp_directory_path() / name;
}

}  // namespace

TEST_CASE("minimal config applies defaults") {
    RunConfig cfg = parse_config(R"({"schema":1,"example":"N1"})");
    CHECK(cfg.example == "N1");
    CHECK_FALSE(cfg.system.has_value());
    CHECK(cfg.tol == 1e-9);
    CHECK(cfg.ode_tol == 1e-12);
    CHECK(cfg.format == "csv");
    CHECK_FALSE(cfg.box.has_value());
    CHECK(cfg.out_path.empty());
    CHECK_FALSE(cfg.zoom);
}

TEST_CASE("config rejections name the offending field") {
    CHECK_THROWS_WITH_AS(parse_config("{}"), "schema: expected 1", ConfigError);
    CHECK_THROWS_WITH_AS(parse_config(R"({"schema":2,"example":"N1"})"), "schema: expected 1",
                         ConfigError);
    CHECK_THROWS_WITH_AS(parse_config(R"({"schema":1,"example":"N1","extra":0})"),
                         "unknown field: extra", ConfigError);
    CHECK_THROWS_WITH_AS(parse_config(R"({"schema":1,"example":"Z9"})"),
                         "unknown example id: Z9", ConfigError);
    CHECK_THROWS_WITH_AS(parse_config(R"({"schema":1})"),
                         "missing system source: example or center+saddle", ConfigError);
    CHECK_THROWS_WITH_AS(
        parse_config(R"({"schema":1,"example":"N1","tol":-1})"), "tol: must be positive",
        ConfigError);
    CHECK_THROWS_WITH_AS(parse_config(R"({"schema":1,"example":"N1","box":[1,0,0,1]})"),
                         "box: bounds must satisfy x_lo < x_hi and y_lo < y_hi", ConfigError);
    CHECK_THROWS(parse_config("not json"));
}

TEST_CASE("inline family constraints surface the validation wording") {
    std::string omega_zero = wrap(
        R"("center":{"A":0,"B":0,"C":0,"omega":0},
           "saddle":{"family":"N1","params":{"a":1,"b":-1}})");
    CHECK_THROWS_WITH_AS(parse_config(omega_zero), "center: omega > 0", ConfigError);

    std::string singular = wrap(
        R"("center":{"A":0,"B":0,"C":0,"omega":1},
           "saddle":{"family":"N1","params":{"a":1,"b":-1},
                     "affine":{"a1":1,"b1":2,"alpha1":2,"beta1":4}})");
    CHECK_THROWS_WITH_AS(parse_config(singular), "saddle: b1*alpha1 - a1*beta1 != 0",
                         ConfigError);
}

TEST_CASE("coefficients must be exact: integers and quoted strings only") {
    std::string decimal = wrap(
        R"("center":{"A":0,"B":0,"C":0,"omega":0.5},"saddle":{"family":"N1"})");
    CHECK_THROWS_WITH_AS(parse_config(decimal),
                         "center.omega: expected an integer or a \"p/q\" / decimal string",
                         ConfigError);

    std::string quoted = wrap(
        R"("center":{"A":0,"B":0,"C":0,"omega":"1/2"},
           "saddle":{"family":"N1","params":{"a":"0.25","b":"-1"}})");
    RunConfig cfg = parse_config(quoted);
    REQUIRE(cfg.system.has_value());
    CHECK(cfg.system->saddle_params->a == frac(1, 4));
}

TEST_CASE("a transcription slip in explicit mode is rejected with the side named") {
    std::string bad = wrap(
        R"("center":{"H":[[2,0,1],[0,2,1]],"Fx":[[0,1,2]],"Fy":[[1,0,2]]},
           "saddle":{"H":[[4,0,1],[0,4,2]],"Fx":[[0,3,8]],"Fy":[[3,0,-4]]})");
    try {
        parse_config(bad);
        FAIL("expected ConfigError");
    } catch (const ConfigError& e) {
        CHECK(std::string(e.what()).find("center side") != std::string::npos);
    }
}

TEST_CASE("solve command reproduces the first example as CSV") {
    RunConfig cfg = parse_config(R"({"schema":1,"example":"N1"})");
    std::ostringstream out, err;
    CHECK(cmd_solve(cfg, out, err) == kExitOk);
    auto rows = csv_rows(out.str());
    REQUIRE(rows.size() == 5);
    CHECK(rows[0] ==
          std::vector<std::string>{"k", "x", "y", "residual_PL", "residual_Pi", "jacobian_det",
                                   "simple", "verified", "closure_residual"});
    const ExampleEntry& e = example_by_id("N1");
    for (int k = 0; k < 4; ++k) {
        REQUIRE(rows[k + 1].size() == 9);
        CHECK(std::stod(rows[k + 1][1]) == doctest::Approx(e.expected[k][0]).epsilon(1e-4));
        CHECK(std::stod(rows[k + 1][2]) == doctest::Approx(e.expected[k][1]).epsilon(1e-4));
        CHECK(rows[k + 1][6] == "1");
        CHECK(rows[k + 1][7] == "");
        CHECK(rows[k + 1][8] == "");
    }
}

TEST_CASE("solve output is byte-identical across runs and honors the box") {
    RunConfig cfg = parse_config(R"({"schema":1,"example":"N2"})");
    std::ostringstream a, b, err;
    CHECK(cmd_solve(cfg, a, err) == kExitOk);
    CHECK(cmd_solve(cfg, b, err) == kExitOk);
    CHECK(a.str() == b.str());

    RunConfig boxed = parse_config(R"({"schema":1,"example":"N2","box":[0,1,0,1]})");
    std::ostringstream c;
    CHECK(cmd_solve(boxed, c, err) == kExitOk);
    CHECK(csv_rows(c.str()).size() == 3);  // header + the two pairs below (1, 1)
}

TEST_CASE("solve reports the near-axis pair of the last example") {
    RunConfig cfg = parse_config(R"({"schema":1,"example":"N62","format":"json"})");
    std::ostringstream out, err;
    CHECK(cmd_solve(cfg, out, err) == kExitOk);
    auto doc = nlohmann::json::parse(out.str());
    REQUIRE(doc["solutions"].size() == 4);
    CHECK(doc["solutions"][0]["x"].get<double>() == doctest::Approx(0.765476).epsilon(1e-4));
    CHECK(doc["solutions"][0]["y"].get<double>() == doctest::Approx(0.0111834).epsilon(1e-3));
    CHECK(doc["schema"] == 1);
    CHECK(doc["command"] == "solve");
    CHECK(doc["example"] == "N62");
}

TEST_CASE("a shared component maps to the degeneracy exit code") {
    std::string common = wrap(std::string(kCircleCenter) +
                              R"(,"saddle":{"H":[[4,0,1],[2,2,2],[0,4,1]],
                                  "Fx":[[2,1,4],[0,3,4]],"Fy":[[3,0,-4],[1,2,-4]]})");
    RunConfig cfg = parse_config(common);
    std::ostringstream out, err;
    CHECK(cmd_solve(cfg, out, err) == kExitDegenerate);
    CHECK(err.str().find("non-isolated solution curve") != std::string::npos);
}

TEST_CASE("verify command confirms all four cycles of the first example") {
    RunConfig cfg = parse_config(R"({"schema":1,"example":"N1","format":"json"})");
    std::ostringstream out, err;
    CHECK(cmd_verify(cfg, out, err) == kExitOk);
    auto doc = nlohmann::json::parse(out.str());
    CHECK(doc["all_verified"] == true);
    REQUIRE(doc["solutions"].size() == 4);
    for (const auto& row : doc["solutions"]) {
        CHECK(row["verified"] == true);
        CHECK(row["closure_residual"].get<double>() <= 1e-5);
        CHECK(row["saddle_arc"]["h_drift"].get<double>() <= 1e-9);
        CHECK(row["center_arc"]["h_drift"].get<double>() <= 1e-9);
    }
}

TEST_CASE("a crossing solution on a split level set fails verification") {
    std::string split_level = wrap(std::string(kCircleCenter) + "," + kTwoComponentSaddle);
    RunConfig cfg = parse_config(split_level);
    std::ostringstream out, err;
    CHECK(cmd_solve(cfg, out, err) == kExitOk);
    auto rows = csv_rows(out.str());
    REQUIRE(rows.size() == 2);  // the candidate is a genuine crossing-system solution

    cfg.format = "json";
    std::ostringstream vout;
    CHECK(cmd_verify(cfg, vout, err) == kExitUnverified);
    auto doc = nlohmann::json::parse(vout.str());
    CHECK(doc["all_verified"] == false);
    CHECK(doc["solutions"][0]["verified"] == false);
    CHECK(doc["solutions"][0]["diagnostic"] == "closure residual above threshold");
    // Both arcs are clean; the two corner points just sit on different
    // components of the same level set.
    CHECK(doc["solutions"][0]["saddle_arc"]["region_violation"].get<double>() <= 1e-7);
    CHECK(doc["solutions"][0]["closure_residual"].get<double>() > 1e-2);
}

TEST_CASE("empty solution set: header-only table, success, no figure") {
    std::string empty = wrap(std::string(kCircleCenter) +
                             R"(,"saddle":{"H":[[4,0,1],[0,4,2]],"Fx":[[0,3,8]],
                                 "Fy":[[3,0,-4]]})");
    RunConfig cfg = parse_config(empty);
    auto svg = temp_file("crosscycle_empty.svg");
    std::filesystem::remove(svg);
    cfg.svg_path = svg.string();
    std::ostringstream out, err;
    CHECK(cmd_verify(cfg, out, err) == kExitOk);
    CHECK(csv_rows(out.str()).size() == 1);
    CHECK_FALSE(std::filesystem::exists(svg));
}

TEST_CASE("verify emits a two-panel figure with one closed curve per cycle") {
    RunConfig cfg = parse_config(R"({"schema":1,"example":"N31"})");
    auto svg = temp_file("crosscycle_n31.svg");
    std::filesystem::remove(svg);
    cfg.svg_path = svg.string();
    cfg.zoom = true;
    std::ostringstream out, err;
    CHECK(cmd_verify(cfg, out, err) == kExitOk);
    REQUIRE(std::filesystem::exists(svg));

    std::ifstream in(svg);
    std::string body((std::istreambuf_iterator<char>(in)), std::istreambuf_iterator<char>());
    CHECK(body.find("<svg ") != std::string::npos);
    CHECK(body.find("clip-zoom") != std::string::npos);
    CHECK(body.find("#1f6fb4") != std::string::npos);
    std::size_t polylines = 0;
    for (std::size_t pos = body.find("<polyline"); pos != std::string::npos;
         pos = body.find("<polyline", pos + 1))
        ++polylines;
    CHECK(polylines == 8);  // four cycles in each of the two panels
    std::filesystem::remove(svg);
}

TEST_CASE("appendix check rows are stable between single and full runs") {
    RunConfig cfg;
    cfg.format = "json";
    std::ostringstream one, all, err;
    CHECK(cmd_check_appendix(cfg, "N32", 11, 5, one, err) == kExitOk);
    CHECK(cmd_check_appendix(cfg, "all", 11, 5, all, err) == kExitOk);
    auto doc_one = nlohmann::json::parse(one.str());
    auto doc_all = nlohmann::json::parse(all.str());
    REQUIRE(doc_one["families"].size() == 1);
    REQUIRE(doc_all["families"].size() == 10);
    bool found = false;
    for (const auto& row : doc_all["families"])
        if (row["family"] == "N32") {
            CHECK(row == doc_one["families"][0]);
            found = true;
        }
    CHECK(found);
    CHECK(doc_one["families"][0]["max_rel_deviation"].get<double>() <= 1e-9);

    std::ostringstream bad;
    CHECK(cmd_check_appendix(cfg, "Q7", 11, 5, bad, err) == kExitConfig);
}

TEST_CASE("reproduce validates one example and writes the machine report") {
    RunConfig cfg;
    auto report = temp_file("crosscycle_reproduce.json");
    std::filesystem::remove(report);
    cfg.out_path = report.string();
    std::ostringstream out, err;
    CHECK(cmd_reproduce(cfg, "N2", out, err) == kExitOk);
    CHECK(out.str().find("N2") != std::string::npos);
    CHECK(out.str().find("ok") != std::string::npos);

    REQUIRE(std::filesystem::exists(report));
    std::ifstream in(report);
    auto doc = nlohmann::json::parse(in);
    CHECK(doc["all_ok"] == true);
    REQUIRE(doc["examples"].size() == 1);
    CHECK(doc["examples"][0]["id"] == "N2");
    CHECK(doc["examples"][0]["admissible_count"] == 4);
    CHECK(doc["examples"][0]["resultant_degree"] <= 8);
    CHECK(doc["examples"][0]["max_deviation"].get<double>() <= 1e-4);
    CHECK(doc["examples"][0]["verified_count"] == 4);
    std::filesystem::remove(report);

    std::ostringstream bad;
    CHECK(cmd_reproduce(cfg, "Z1", bad, err) == kExitConfig);
}

TEST_CASE("render requires a figure path") {
    RunConfig cfg = parse_config(R"({"schema":1,"example":"N1"})");
    std::ostringstream err;
    CHECK(cmd_render(cfg, err) == kExitConfig);
}
