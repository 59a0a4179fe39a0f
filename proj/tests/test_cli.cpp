#include <doctest.h>

#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include "cll/cli.hpp"
#include "cll/config.hpp"
#include "cll/io.hpp"

namespace fs = std::filesystem;

namespace {

const fs::path kScratch = "cli_scratch";

std::string scratch(const std::string& leaf) {
    fs::create_directories(kScratch);
    return (kScratch / leaf).string();
}

std::string write_config(const std::string& leaf, const std::string& body) {
    const std::string path = scratch(leaf);
    std::ofstream os(path);
    os << body;
    return path;
}

int run(std::vector<std::string> args) { return cll::cli::run(args); }

std::string slurp(const std::string& path) {
    std::ifstream is(path, std::ios::binary);
    REQUIRE(is.good());
    std::ostringstream os;
    os << is.rdbuf();
    return os.str();
}

std::string default_config() { return std::string(CLL_CONFIG_DIR) + "/default.cfg"; }
std::string carrier_config() { return std::string(CLL_CONFIG_DIR) + "/carrier_wave.cfg"; }

const std::string kSmallPlaneWave = R"(
[model]
preset = eq3
a = 1.0
b = 0.0
[grid]
x0 = 0.0
length = 6.283185307179586
n = 64
[initial]
profile = plane_wave
amplitude = 1.0
mode = 1
[series]
order = 8
[integrator]
dt = 1e-3
t_end = 0.25
[analysis]
times = 0.1, 0.25
orders = 4, 8
)";

}  // namespace

TEST_CASE("command-line surface errors") {
    CHECK(run({}) == 2);
    CHECK(run({"frobnicate", "--config", "x"}) == 2);
    CHECK(run({"expand"}) == 2);  // --config is required
    CHECK(run({"--help"}) == 0);
}

TEST_CASE("configuration failures exit with code 2") {
    CHECK(run({"expand", "--config", scratch("does_not_exist.cfg")}) == 2);

    const std::string bad_key = write_config("bad_key.cfg", R"(
[model]
preset = eq3
a = 1.0
b = 1.0
typo_key = 3
[grid]
x0 = 0.0
length = 10.0
n = 64
)");
    CHECK(run({"expand", "--config", bad_key}) == 2);

    const std::string bad_n = write_config("bad_n.cfg", R"(
[model]
preset = eq3
a = 1.0
b = 1.0
[grid]
x0 = 0.0
length = 10.0
n = 100
)");
    CHECK(run({"expand", "--config", bad_n}) == 2);

    const std::string bad_preset = write_config("bad_preset.cfg", R"(
[model]
preset = eq7
a = 1.0
b = 1.0
[grid]
x0 = 0.0
length = 10.0
n = 64
)");
    CHECK(run({"expand", "--config", bad_preset}) == 2);
}

TEST_CASE("expand: constant profile produces zero corrections") {
    const std::string cfg = write_config("const.cfg", R"(
[model]
preset = eq3
a = 5.0
b = 10.0
[grid]
x0 = -20.0
length = 40.0
n = 64
[initial]
profile = constant
value_re = 0.8
value_im = -0.25
[series]
order = 6
)");
    const std::string out = scratch("const_out");
    REQUIRE(run({"expand", "--config", cfg, "--out", out}) == 0);
    const std::string body = slurp(out + "/series.txt");
    CHECK(body.rfind("# [model]", 0) == 0);  // provenance header comes first

    // every sample at order >= 1 is exactly zero
    std::istringstream is(body);
    std::string line;
    int order = -1;
    int rows = 0;
    while (std::getline(is, line)) {
        if (line.rfind("# order=", 0) == 0) {
            order = std::stoi(line.substr(8));
            continue;
        }
        if (line.empty() || line[0] == '#') continue;
        std::istringstream row(line);
        double x, re, im;
        REQUIRE((row >> x >> re >> im));
        ++rows;
        if (order >= 1) {
            CHECK(re == 0.0);
            CHECK(im == 0.0);
        }
    }
    CHECK(rows == 7 * 64);
}

TEST_CASE("identical configs produce byte-identical outputs") {
    const std::string out1 = scratch("det1");
    const std::string out2 = scratch("det2");
    REQUIRE(run({"expand", "--config", default_config(), "--out", out1}) == 0);
    REQUIRE(run({"expand", "--config", default_config(), "--out", out2}) == 0);
    CHECK(slurp(out1 + "/series.txt") == slurp(out2 + "/series.txt"));

    REQUIRE(run({"radius", "--config", default_config(), "--out", out1}) == 0);
    REQUIRE(run({"radius", "--config", default_config(), "--out", out2}) == 0);
    CHECK(slurp(out1 + "/radius.csv") == slurp(out2 + "/radius.csv"));
    CHECK(slurp(out1 + "/divergence.txt") == slurp(out2 + "/divergence.txt"));
}

TEST_CASE("compare emits the error table and readable reference snapshots") {
    const std::string cfg = write_config("pw.cfg", kSmallPlaneWave);
    const std::string out = scratch("pw_out");
    REQUIRE(run({"compare", "--config", cfg, "--out", out}) == 0);

    const std::string table = slurp(out + "/error_table.csv");
    CHECK(table.find("t,order,sup_err,l2_err,err_abs_u,err_abs_u2\n") != std::string::npos);
    // 2 times x 2 orders = 4 data rows
    int data_rows = 0;
    std::istringstream is(table);
    std::string line;
    while (std::getline(is, line)) {
        if (!line.empty() && line[0] != '#' && line.find(',') != std::string::npos &&
            line[0] != 't') {
            ++data_rows;
        }
    }
    CHECK(data_rows == 4);

    const cll::GridSpec g = cll::make_grid(0.0, 6.283185307179586, 64);
    const auto snaps = cll::io::read_snapshots_file(out + "/reference.txt", g);
    REQUIRE(snaps.size() == 2);
    CHECK(snaps[0].t == doctest::Approx(0.1));
    CHECK(snaps[1].t == doctest::Approx(0.25));

    // the file-profile path can bootstrap from those snapshots
    const std::string file_cfg = write_config("from_file.cfg", R"(
[model]
preset = eq3
a = 1.0
b = 0.0
[grid]
x0 = 0.0
length = 6.283185307179586
n = 64
[initial]
profile = file
path = )" + out + R"(/reference.txt
[series]
order = 4
)");
    CHECK(run({"expand", "--config", file_cfg, "--out", scratch("from_file_out")}) == 0);
}

TEST_CASE("compare rejects times beyond the integration horizon") {
    std::string cfg_text = kSmallPlaneWave;
    cfg_text.replace(cfg_text.find("times = 0.1, 0.25"), 17, "times = 0.1, 0.60");
    const std::string cfg = write_config("pw_beyond.cfg", cfg_text);
    CHECK(run({"compare", "--config", cfg, "--out", scratch("pw_beyond_out")}) == 2);
}

TEST_CASE("numerical blow-up in compare exits with code 3") {
    const std::string cfg = write_config("unstable.cfg", R"(
[model]
preset = custom
alpha_re = -1.0
alpha_im = 0.0
beta_re = 0.0
beta_im = 0.0
[grid]
x0 = 0.0
length = 6.283185307179586
n = 64
[initial]
profile = plane_wave
amplitude = 1.0
mode = 2
[series]
order = 2
[integrator]
dt = 1.9e-3
t_end = 2.0
[analysis]
times = 2.0
)");
    CHECK(run({"compare", "--config", cfg, "--out", scratch("unstable_out")}) == 3);
}

TEST_CASE("soliton-validate: valid carrier, invalid perturbation, domain violation") {
    const std::string out = scratch("sol_out");
    REQUIRE(run({"soliton-validate", "--config", carrier_config(), "--out", out}) == 0);
    CHECK(slurp(out + "/soliton_residual.txt").find("verdict = VALID") != std::string::npos);

    std::string perturbed = slurp(carrier_config());
    perturbed.replace(perturbed.find("omega = -0.30922446315843466"), 28, "omega = 0.2");
    const std::string bad = write_config("carrier_bad.cfg", perturbed);
    const std::string out_bad = scratch("sol_bad_out");
    REQUIRE(run({"soliton-validate", "--config", bad, "--out", out_bad}) == 0);
    CHECK(slurp(out_bad + "/soliton_residual.txt").find("verdict = INVALID") !=
          std::string::npos);

    const std::string domain = write_config("sol_domain.cfg", R"(
[model]
preset = eq3
a = 5.0
b = 10.0
[grid]
x0 = -20.0
length = 40.0
n = 256
[soliton]
gamma = 0.1
eta = 1.0
lambda = 1.0
sign = -1
)");
    CHECK(run({"soliton-validate", "--config", domain, "--out", scratch("sol_domain_out")}) == 4);
}

TEST_CASE("iadm-check passes on a small plane-wave run") {
    const std::string cfg = write_config("iadm.cfg", kSmallPlaneWave);
    const std::string out = scratch("iadm_out");
    REQUIRE(run({"iadm-check", "--config", cfg, "--out", out}) == 0);
    CHECK(slurp(out + "/iadm_check.txt").find("verdict = PASS") != std::string::npos);
}

TEST_CASE("oracle: caps the comparison order at 4") {
    std::string cfg_text = kSmallPlaneWave;
    cfg_text += "[oracle]\ndt_fd = 1e-3\nmax_order = 5\n";
    const std::string cfg = write_config("oracle_bad.cfg", cfg_text);
    CHECK(run({"oracle", "--config", cfg, "--out", scratch("oracle_bad_out")}) == 2);

    std::string ok_text = kSmallPlaneWave;
    ok_text += "[oracle]\ndt_fd = 1e-3\nmax_order = 2\n";
    const std::string ok = write_config("oracle_ok.cfg", ok_text);
    const std::string out = scratch("oracle_out");
    REQUIRE(run({"oracle", "--config", ok, "--out", out}) == 0);
    const std::string body = slurp(out + "/oracle.csv");
    CHECK(body.find("j,rel_dev") != std::string::npos);
    std::istringstream is(body);
    std::string line;
    int rows = 0;
    while (std::getline(is, line)) {
        if (!line.empty() && line[0] != '#' && line[0] != 'j') {
            const double dev = std::stod(line.substr(line.find(',') + 1));
            CHECK(dev < 1e-3);
            ++rows;
        }
    }
    CHECK(rows == 2);
}

TEST_CASE("radius requires enough series orders for the tail window") {
    std::string cfg_text = kSmallPlaneWave;
    cfg_text.replace(cfg_text.find("order = 8"), 9, "order = 5");
    const std::string cfg = write_config("radius_short.cfg", cfg_text);
    CHECK(run({"radius", "--config", cfg, "--out", scratch("radius_short_out")}) == 2);
}

TEST_CASE("a non-commensurate carrier in the profile is a configuration error") {
    const std::string cfg = write_config("incommensurate.cfg", R"(
[model]
preset = eq3
a = 5.0
b = 10.0
[grid]
x0 = -200.0
length = 400.0
n = 256
[initial]
profile = sech_profile
gamma = 1.0
eta = 0.2
lambda = 0.25
k = 0.05
[series]
order = 4
)");
    CHECK(run({"expand", "--config", cfg, "--out", scratch("incomm_out")}) == 2);
}
