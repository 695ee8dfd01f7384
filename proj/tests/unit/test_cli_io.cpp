#include <entvis/cli.hpp>
#include <entvis/errors.hpp>
#include <entvis/io.hpp>

#include <catch_amalgamated.hpp>
#include <nlohmann/json.hpp>

#include <algorithm>
#include <cmath>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>
#include <vector>

using namespace entvis;

namespace {

struct Run {
    int rc;
    std::string out;
    std::string err;
};

Run run(std::vector<std::string> args) {
    args.insert(args.begin(), "entvis");
    std::vector<const char*> argv;
    for (const auto& a : args) argv.push_back(a.c_str());
    std::ostringstream out;
    std::ostringstream err;
    const int rc = run_cli(static_cast<int>(argv.size()), argv.data(), out, err);
    return {rc, out.str(), err.str()};
}

} // namespace

TEST_CASE("angle tokens and grid sizes", "[cli]") {
    CHECK(parse_angle("pi/4") == pi / 4);
    CHECK(parse_angle("-3pi/8") == -3 * pi / 8);
    CHECK(parse_angle("0.3") == 0.3);
    CHECK_THROWS_AS(parse_angle("pi/5"), ConfigError);
    CHECK_THROWS_AS(parse_angle("0.3x"), ConfigError);
    CHECK(parse_grid_size("64x32") == std::pair<std::size_t, std::size_t>{64, 32});
    CHECK_THROWS_AS(parse_grid_size("1x8"), ConfigError);
    CHECK_THROWS_AS(parse_grid_size("8"), ConfigError);
}

TEST_CASE("fmt17 round-trips and ignores the locale", "[io]") {
    const double v = 0.1 + 0.2;
    CHECK(std::stod(fmt17(v)) == v);
    CHECK(num(std::nan("")).is_null());
}

TEST_CASE("grid command writes CSV and rejects empty grids", "[cli]") {
    const Run r = run({"grid", "--basis", "xx", "--a", "30", "--h1", "1", "--h2", "1", "--xi", "0", "--grid", "4x3"});
    REQUIRE(r.rc == 0);
    std::istringstream is(r.out);
    std::string line;
    std::getline(is, line);
    CHECK(line == "u,v,value");
    int rows = 0;
    while (std::getline(is, line)) ++rows;
    CHECK(rows == 12);
    CHECK(r.out.find('\r') == std::string::npos);

    CHECK(run({"grid", "--grid", "1x4"}).rc == 2);
    CHECK(run({"grid", "--figure", "fig2"}).rc == 2);
    CHECK(run({"grid", "--figure", "fig9", "--xi", "0"}).rc == 2);
    CHECK(run({"grid", "--a", "-1"}).rc == 2);
    CHECK(run({"grid", "--basis", "qq"}).rc == 2);
    CHECK(run({"bogus"}).rc == 2);
}

TEST_CASE("figure presets load the caption parameters", "[cli]") {
    const Run r = run({"grid", "--figure", "fig3", "--xi", "pi/4", "--grid", "3x3", "--format", "json"});
    REQUIRE(r.rc == 0);
    const auto j = nlohmann::json::parse(r.out);
    CHECK(j["grid"]["a"] == 30.0);
    CHECK(j["grid"]["h1"] == 1.0);
    CHECK(j["grid"]["h2"] == 2.0);
    CHECK(j["grid"]["quantity"] == "corrected_density");
    CHECK(j["values"].size() == 3);
    const auto j6 = nlohmann::json::parse(run({"grid", "--figure", "fig6", "--xi", "0", "--grid", "2x2",
                                               "--format", "json"})
                                              .out);
    CHECK(j6["grid"]["h2"] == 1.0);
    CHECK(j6["grid"]["basis"] == "kx");
}

TEST_CASE("report is internally consistent", "[cli]") {
    const Run r = run({"report", "--a", "30", "--h1", "1", "--h2", "2", "--xi", "0.3"});
    REQUIRE(r.rc == 0);
    const auto j = nlohmann::json::parse(r.out);
    const auto& v = j["visibility"];
    const double V = v["V"];
    const double D = v["D"];
    CHECK(std::abs(1 - V * V - D * D - v["epsilon"].get<double>()) <= 1e-15);
    for (const char* key : {"a", "h1", "h2", "xi", "rho_x", "rho_k_log10_abs", "rho_k_sign", "R", "S", "V2_plus_R2",
                            "V2_plus_S2", "rhox2_plus_V2", "rhok2_plus_V2", "detectability_flag"}) {
        CHECK(j["correlation"].contains(key));
    }
    CHECK(j["correlation"].size() == 14);

    const auto z = nlohmann::json::parse(run({"report", "--xi", "0"}).out);
    CHECK(z["visibility"]["V"] == 1.0);
    CHECK(z["visibility"]["D"] == 0.0);
    CHECK(z["visibility"]["epsilon"] == 0.0);
    CHECK(z["corrected"]["F"] == 0.0);
    CHECK(z["correlation"]["R"] == 0.0);

    const auto w = nlohmann::json::parse(run({"report", "--a", "1"}).out);
    CHECK(w["visibility"]["regime_warning"] == true);
}

TEST_CASE("sweep output is thread-count independent", "[cli]") {
    const Run r1 = run({"sweep", "--figure", "fig4", "--xi", "0.3", "--threads", "1"});
    const Run r4 = run({"sweep", "--figure", "fig4", "--xi", "0.3", "--threads", "4"});
    REQUIRE(r1.rc == 0);
    CHECK(r1.out == r4.out);
    CHECK(r1.out.rfind("a,V2_plus_D2,V2_plus_F2,V2_plus_R2,bound\n", 0) == 0);
    CHECK(std::count(r1.out.begin(), r1.out.end(), '\n') == 122);
    CHECK(run({"sweep", "--count", "1"}).rc == 2);
}

TEST_CASE("radon command and --out", "[cli]") {
    const auto path = std::filesystem::temp_directory_path() / "entvis_radon_test.csv";
    const Run r = run({"radon", "--observable", "s+", "--axis-points", "11", "--out", path.string()});
    REQUIRE(r.rc == 0);
    CHECK(r.out.empty());
    std::ifstream f(path, std::ios::binary);
    std::string first;
    std::getline(f, first);
    CHECK(first.rfind("# phi=", 0) == 0);
    CHECK(first.find("observable=s+") != std::string::npos);
    std::filesystem::remove(path);
    CHECK(run({"radon", "--phi", "0.2"}).rc == 2);
    CHECK(run({"radon", "--phi", "0.2", "--method", "numeric", "--axis-points", "5"}).rc == 0);
    CHECK(run({"radon", "--out", "/nonexistent/dir/x.csv"}).rc == 2);
}

TEST_CASE("validate exit codes", "[cli]") {
    CHECK(run({"validate", "--quick"}).rc == 0);
    const Run bad = run({"validate", "--quick", "--tol-scale", "0"});
    CHECK(bad.rc == 1);
    CHECK(bad.out.find("FAIL") != std::string::npos);
}
