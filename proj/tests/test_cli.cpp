#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <json.hpp>

#include <array>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <sstream>
#include <string>
#include <vector>

using nlohmann::json;

namespace {

struct RunResult {
    int code = -1;
    std::string out, err;
};

std::string slurp(const std::string& path) {
    std::ifstream f(path);
    std::stringstream ss;
    ss << f.rdbuf();
    return ss.str();
}

RunResult run(const std::string& args) {
    static int seq = 0;
    std::string so = "/tmp/tptspec_out_" + std::to_string(++seq);
    std::string se = so + ".err";
    std::string cmd = std::string(TPTSPEC_BIN) + " " + args + " >" + so +
                      " 2>" + se;
    int rc = std::system(cmd.c_str());
    RunResult r;
    r.code = WIFEXITED(rc) ? WEXITSTATUS(rc) : -1;
    r.out = slurp(so);
    r.err = slurp(se);
    std::remove(so.c_str());
    std::remove(se.c_str());
    return r;
}

std::vector<std::vector<std::string>> csv_rows(const std::string& text) {
    std::vector<std::vector<std::string>> rows;
    std::stringstream ss(text);
    std::string line;
    while (std::getline(ss, line)) {
        if (line.empty() || line[0] == '#') continue;
        std::vector<std::string> cells;
        std::stringstream ls(line);
        std::string cell;
        while (std::getline(ls, cell, ',')) cells.push_back(cell);
        rows.push_back(std::move(cells));
    }
    return rows;
}

} // namespace

TEST_CASE("classify reports both regimes") {
    auto r = run("classify --preset gray");
    REQUIRE(r.code == 0);
    auto rows = csv_rows(r.out);
    REQUIRE(rows.size() == 3);
    CHECK(rows[0] == std::vector<std::string>{"end", "g", "regime", "nu",
                                              "imaginary"});
    CHECK(rows[1][0] == "sin");
    CHECK(rows[1][2] == "weak-medium");
    CHECK(std::stod(rows[1][3]) == doctest::Approx(0.4));
    CHECK(rows[2][2] == "strong-repulsive");
    CHECK(std::stod(rows[2][3]) == doctest::Approx(2.5));
}

TEST_CASE("spectrum gray preset matches the ladder") {
    auto r = run("spectrum --preset gray --window 10");
    REQUIRE(r.code == 0);
    auto rows = csv_rows(r.out);
    REQUIRE(rows.size() >= 4);
    CHECK(rows[0] == std::vector<std::string>{"index", "sign", "value",
                                              "residual"});
    CHECK(rows[1][1] == "pos");
    CHECK(std::stod(rows[1][2]) == doctest::Approx(3.9));
    CHECK(std::stod(rows[2][2]) == doctest::Approx(5.9));
    CHECK(std::stod(rows[3][2]) == doctest::Approx(7.9));
}

TEST_CASE("spectrum table preset column 1 leads with the deep tower") {
    auto r = run("spectrum --table1 1 --window 8");
    REQUIRE(r.code == 0);
    auto rows = csv_rows(r.out);
    REQUIRE(rows.size() > 2);
    // energy order: deepest kappa first
    CHECK(rows[1][1] == "neg");
    CHECK(std::stod(rows[1][2]) == doctest::Approx(303.8148).epsilon(1e-5));
    // shallowest kappa of the tower
    size_t last_neg = 1;
    for (size_t i = 1; i < rows.size() && rows[i][1] == "neg"; ++i)
        last_neg = i;
    CHECK(std::stod(rows[last_neg][2]) ==
          doctest::Approx(3.929217).epsilon(1e-5));
}

TEST_CASE("json format parses and carries the manifest") {
    auto r = run("spectrum --preset gray --window 10 --format json");
    REQUIRE(r.code == 0);
    json doc = json::parse(r.out);
    REQUIRE(doc.contains("levels"));
    REQUIRE(doc.contains("manifest"));
    CHECK(doc["manifest"]["command"] == "spectrum");
    CHECK(doc["levels"][0]["sign"] == "pos");
    CHECK(doc["levels"][0]["value"].get<double>() == doctest::Approx(3.9));
}

TEST_CASE("missing phase datum is a validation error") {
    auto r = run("spectrum --gs -40.0 --gc 12");
    CHECK(r.code == 2);
    json err = json::parse(r.err);
    CHECK(err["kind"] == "validation");
    CHECK(err["error"].get<std::string>().find("theta") != std::string::npos);
}

TEST_CASE("unknown preset is a validation error") {
    auto r = run("spectrum --preset nosuch");
    CHECK(r.code == 2);
    json err = json::parse(r.err);
    CHECK(err["kind"] == "validation");
}

TEST_CASE("bad flag value is a validation error") {
    auto r = run("spectrum --table1 9");
    CHECK(r.code == 2);
    json err = json::parse(r.err);
    CHECK(err["kind"] == "validation");
}

TEST_CASE("doublewell exceptional preset reports the ordering") {
    auto r = run("doublewell --preset exceptional07 --format json --window 8");
    REQUIRE(r.code == 0);
    json doc = json::parse(r.out);
    REQUIRE(doc.contains("ordering"));
    CHECK(doc["ordering"]["anomaly"] == true);
    CHECK(doc["ordering"]["order"][0] == "even");
    CHECK(doc["ordering"]["order"][1] == "even");
    auto nodes = doc["ordering"]["expected_nodes"];
    CHECK(nodes[1].get<int>() == 2);
    CHECK(nodes[2].get<int>() == 1);
}

TEST_CASE("wavefunction emits a normalized sample") {
    auto r = run("wavefunction --preset gray --level 0 --samples 401 "
                 "--window 10");
    REQUIRE(r.code == 0);
    auto rows = csv_rows(r.out);
    REQUIRE(rows.size() == 402);
    CHECK(rows[0] == std::vector<std::string>{"x", "psi"});
    double s = 0.0;
    for (size_t i = 2; i < rows.size(); ++i) {
        double x0 = std::stod(rows[i - 1][0]), x1 = std::stod(rows[i][0]);
        double p0 = std::stod(rows[i - 1][1]), p1 = std::stod(rows[i][1]);
        s += 0.5 * (p0 * p0 + p1 * p1) * (x1 - x0);
    }
    CHECK(s == doctest::Approx(1.0).epsilon(1e-3));
}

TEST_CASE("file outputs are byte-stable across reruns") {
    std::string out1 = "/tmp/tptspec_det_1.csv";
    std::string out2 = "/tmp/tptspec_det_2.csv";
    auto r1 = run("spectrum --table1 2 --window 8 --out " + out1);
    auto r2 = run("spectrum --table1 2 --window 8 --out " + out2);
    REQUIRE(r1.code == 0);
    REQUIRE(r2.code == 0);
    std::string a = slurp(out1), b = slurp(out2);
    CHECK(!a.empty());
    CHECK(a == b);
    // the timestamped manifest lives in the side file, not the data file
    CHECK(a.find("timestamp") == std::string::npos);
    json m = json::parse(slurp(out1 + ".manifest.json"));
    CHECK(m["command"] == "spectrum");
    CHECK(m.contains("timestamp"));
    std::remove(out1.c_str());
    std::remove(out2.c_str());
    std::remove((out1 + ".manifest.json").c_str());
    std::remove((out2 + ".manifest.json").c_str());
}

TEST_CASE("validate cross-checks the gray ladder") {
    auto r = run("validate --preset gray --count 2 --format json --window 10");
    REQUIRE(r.code == 0);
    json doc = json::parse(r.out);
    auto rows = doc["comparison"];
    REQUIRE(rows.size() == 2);
    for (const auto& row : rows)
        CHECK(row["rel_delta"].get<double>() < 1e-6);
}
