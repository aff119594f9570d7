#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <sys/wait.h>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>
#include <vector>

namespace fs = std::filesystem;

namespace {

const std::string kCli = MLBEAM_CLI_PATH;

int run(const std::string& args) {
    const int rc = std::system((kCli + " " + args).c_str());
    if (rc == -1) return -1;
    return WIFEXITED(rc) ? WEXITSTATUS(rc) : -1;
}

fs::path scratch_dir() {
    static const fs::path dir = [] {
        fs::path d = fs::temp_directory_path() / ("mlbeam_cli_test_" + std::to_string(getpid()));
        fs::create_directories(d);
        return d;
    }();
    return dir;
}

std::string path_of(const std::string& name) { return (scratch_dir() / name).string(); }

void write_file(const std::string& path, const std::string& content) {
    std::ofstream out(path, std::ios::binary);
    out << content;
}

std::string slurp(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    std::stringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

// data rows (comments and header skipped), cells split on commas
std::vector<std::vector<std::string>> csv_rows(const std::string& path) {
    std::ifstream in(path);
    std::vector<std::vector<std::string>> rows;
    std::string line;
    bool header_seen = false;
    while (std::getline(in, line)) {
        if (line.empty() || line[0] == '#') continue;
        if (!header_seen) {
            header_seen = true;
            continue;
        }
        std::vector<std::string> cells;
        std::stringstream ss(line);
        std::string cell;
        while (std::getline(ss, cell, ',')) cells.push_back(cell);
        rows.push_back(std::move(cells));
    }
    return rows;
}

const char* kFastCollapseConfig = R"({
  "solver": {"grid_n": 200},
  "collapse": {"n_over_ne": [0.15, 0.25], "bracket_tol": 5e-3},
  "threads": 1
})";

}  // namespace

TEST_CASE("identical config produces byte-identical CSV, independent of threads") {
    const std::string cfg = path_of("collapse.json");
    write_file(cfg, kFastCollapseConfig);

    const std::string out1 = path_of("c1.csv");
    const std::string out2 = path_of("c2.csv");
    const std::string out3 = path_of("c3.csv");
    CHECK(run("collapse-load --config " + cfg + " --out " + out1) == 0);
    CHECK(run("collapse-load --config " + cfg + " --out " + out2) == 0);
    CHECK(run("collapse-load --config " + cfg + " --out " + out3 + " --threads 4") == 0);

    const std::string a = slurp(out1);
    CHECK(!a.empty());
    CHECK(a == slurp(out2));
    CHECK(a == slurp(out3));
    // the resolved configuration is recorded in the header
    CHECK(a.find("# config: {") != std::string::npos);
}

TEST_CASE("unknown and invalid config keys are rejected with their line") {
    const std::string cfg = path_of("bad.json");
    write_file(cfg, "{\n  \"solver\": {\n    \"grid_m\": 500\n  }\n}\n");
    const std::string err = path_of("bad.err");
    CHECK(run("collapse-load --config " + cfg + " --out " + path_of("bad.csv") + " 2> " + err) == 1);
    const std::string msg = slurp(err);
    CHECK(msg.find("unknown key 'grid_m'") != std::string::npos);
    CHECK(msg.find("config:3") != std::string::npos);

    write_file(cfg, "{\n\"solver\": {\"grid_n\": 10}\n}\n");
    CHECK(run("collapse-load --config " + cfg + " --out " + path_of("bad.csv") + " 2> " + err) == 1);
    CHECK(slurp(err).find("grid_n") != std::string::npos);

    write_file(cfg, "{ not json\n");
    CHECK(run("collapse-load --config " + cfg + " --out " + path_of("bad.csv") + " 2> " + err) == 1);
}

TEST_CASE("case-a-curves: fixed columns, zero family, and the 1/3.24 slope") {
    const std::string cfg = path_of("curves.json");
    write_file(cfg, R"({
      "case_a_curves": {"e_over_h": [0.0, 0.2], "n_over_gamma_max": 0.3,
                         "n_over_gamma": [0.1], "e_over_h_max": 0.3, "samples": 3},
      "threads": 1
    })");
    const std::string out = path_of("curves.csv");
    REQUIRE(run("case-a-curves --config " + cfg + " --out " + out) == 0);

    const auto rows = csv_rows(out);
    REQUIRE(rows.size() == 8);  // two families, samples+1 points each
    // first data row of the e = 0 family is all zeros
    CHECK(std::stod(rows[0][0]) == 0.0);
    CHECK(std::stod(rows[0][1]) == 0.0);
    CHECK(std::stod(rows[0][2]) == 0.0);
    CHECK(rows[0][3] == "ok");
    // e/h = 1/5 family: |f_a|/L = (1/3.24) |N|/gamma
    for (std::size_t i = 4; i < 8; ++i) {
        const double ng = std::stod(rows[i][1]);
        const double fa = std::stod(rows[i][2]);
        CHECK(fa == doctest::Approx(ng / 3.24).epsilon(1e-12));
    }
    // companion eccentricity-sweep file
    const auto rows_e = csv_rows(path_of("curves_vs_e.csv"));
    REQUIRE(rows_e.size() == 4);
    CHECK(std::stod(rows_e[0][1]) == 0.0);
    CHECK(std::stod(rows_e[0][2]) == 0.0);
}

TEST_CASE("pushover fails loudly beyond collapse unless --allow-partial") {
    const std::string cfg = path_of("push.json");
    write_file(cfg, R"({
      "solver": {"grid_n": 500},
      "pushover": {"alphabar": [9e-3], "samples": 10, "h_over_hmax_max": 0.9,
                    "include_geometric": true},
      "threads": 1
    })");
    const std::string out = path_of("push.csv");
    const std::string err = path_of("push.err");
    CHECK(run("pushover --config " + cfg + " --out " + out + " 2> " + err) == 2);
    CHECK(!fs::exists(out));
    CHECK(slurp(err).find("--allow-partial") != std::string::npos);

    REQUIRE(run("pushover --config " + cfg + " --out " + out + " --allow-partial --gnuplot") == 0);
    const std::string body = slurp(out);
    const bool has_failed_points = body.find("not_converged") != std::string::npos ||
                                   body.find("capacity_exceeded") != std::string::npos;
    CHECK(has_failed_points);
    CHECK(fs::exists(out + ".gp"));

    // the geometric column always reports at least the masonry deflection
    const auto rows = csv_rows(out);
    REQUIRE(rows.size() == 11);
    CHECK(rows[0][5] == "ok");  // H = 0 converges
}

TEST_CASE("geometric off removes the second-order column and always succeeds") {
    const std::string cfg = path_of("push_off.json");
    write_file(cfg, R"({
      "pushover": {"alphabar": [9e-3], "samples": 5, "h_over_hmax_max": 0.9},
      "threads": 1
    })");
    const std::string out = path_of("push_off.csv");
    REQUIRE(run("pushover --config " + cfg + " --out " + out + " --geometric off") == 0);
    const auto rows = csv_rows(out);
    REQUIRE(rows.size() == 6);
    for (const auto& r : rows) CHECK(r.size() == 5);  // no geometric column
}

TEST_CASE("frequency commands emit both ratio conventions") {
    const std::string cfg = path_of("freq.json");
    write_file(cfg, R"({
      "solver": {"grid_n": 500},
      "frequency_b": {"n_over_ne": [0.2], "h_over_hmax_max": 0.3, "samples": 4,
                       "include_geometric": false},
      "threads": 1
    })");
    const std::string out = path_of("freq.csv");
    REQUIRE(run("frequency-b --config " + cfg + " --out " + out) == 0);
    const auto rows = csv_rows(out);
    REQUIRE(rows.size() == 5);
    // at H = 0 the full ratio is sqrt(1 - 0.2), the stiffness ratio is 1
    CHECK(std::stod(rows[0][2]) == doctest::Approx(std::sqrt(0.8)).epsilon(1e-12));
    CHECK(std::stod(rows[0][3]) == doctest::Approx(1.0).epsilon(1e-12));
}

TEST_CASE("solver flag overrides are applied") {
    const std::string out = path_of("override.csv");
    const std::string cfg = path_of("override.json");
    write_file(cfg, kFastCollapseConfig);
    REQUIRE(run("collapse-load --config " + cfg + " --out " + out +
                " --epsilon 0.01 --max-iter 20 --grid-n 150") == 0);
    const std::string body = slurp(out);
    CHECK(body.find("\"epsilon\":0.01") != std::string::npos);
    CHECK(body.find("\"max_iter\":20") != std::string::npos);
    CHECK(body.find("\"grid_n\":150") != std::string::npos);
}
