#include "doctest.h"

#include <cmath>
#include <stdexcept>
#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <numbers>
#include <string>

#include "json.hpp"
#include "qzak/config.hpp"
#include "qzak/dynamics.hpp"
#include "qzak/grid.hpp"
#include "qzak/io.hpp"
#include "qzak/rng.hpp"
#include "qzak/state.hpp"

using namespace qzak;
namespace fs = std::filesystem;

namespace {
std::string tmp_file(const char* name) {
    return (fs::temp_directory_path() / name).string();
}

std::string slurp(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    REQUIRE(in.good());
    return std::string(std::istreambuf_iterator<char>(in), {});
}
}  // namespace

TEST_CASE("g17 formatting survives a parse round trip for awkward doubles") {
    for (double v : {0.1, 1.0 / 3.0, std::numbers::pi, 1e300, 5e-324, -0.0, 123456789.123456789}) {
        const std::string s = format_g17(v);
        // strtod instead of stod: stod raises out_of_range on subnormals
        CHECK(std::strtod(s.c_str(), nullptr) == v);
        CHECK(s.find(',') == std::string::npos);  // locale-proof decimal point
    }
    CHECK(format_g17(1.0) == "1");
}

TEST_CASE("CSV writer emits the header immediately and enforces the column count") {
    const std::string path = tmp_file("qzak_test.csv");
    {
        CsvWriter w(path, {"a", "b", "c"});
        w.row_values({1.0, 2.5, -3.0});
        CHECK_THROWS_AS(w.row({"only", "two"}), std::runtime_error);
        w.row({"x", "y", "z"});
        w.close();
    }
    const std::string text = slurp(path);
    CHECK(text.rfind("a,b,c\n", 0) == 0);
    CHECK(text.find("1,2.5,-3\n") != std::string::npos);
    CHECK(text.find("x,y,z\n") != std::string::npos);
}

TEST_CASE("binary checkpoints round-trip every coefficient bit for bit") {
    SpectralGrid g = make_grid(64, 11.5);
    CounterRng rng(17, 4);
    PrimalState p;
    p.E = random_sobolev_data(g, 1.0, 1.0, false, rng);
    p.n = random_sobolev_data(g, 1.0, 0.5, true, rng);
    p.nt = random_sobolev_data(g, 0.5, 0.25, true, rng);
    p.t = 0.7253;

    const std::string path = tmp_file("qzak_test.qzk");
    write_checkpoint(path, g, 0.375, p);
    Checkpoint ck = read_checkpoint(path);
    CHECK(ck.size == 64);
    CHECK(ck.length == 11.5);
    CHECK(ck.eps == 0.375);
    CHECK(ck.t == 0.7253);
    for (int j = 0; j < g.n; ++j) {
        CHECK(ck.E.c[j] == p.E.c[j]);
        CHECK(ck.n.c[j] == p.n.c[j]);
        CHECK(ck.nt.c[j] == p.nt.c[j]);
    }
}

TEST_CASE("checkpoint reading rejects foreign or truncated files") {
    const std::string path = tmp_file("qzak_bad.qzk");
    {
        std::ofstream out(path, std::ios::binary);
        out << "NOPE this is not a checkpoint";
    }
    CHECK_THROWS_WITH_AS(read_checkpoint(path), doctest::Contains("magic"), std::runtime_error);
    {
        std::ofstream out(path, std::ios::binary);
        out << "QZK1";  // magic only, no payload
    }
    CHECK_THROWS_AS(read_checkpoint(path), std::runtime_error);
    CHECK_THROWS_AS(read_checkpoint(tmp_file("qzak_missing_file.qzk")), std::runtime_error);
}

TEST_CASE("the JSON mirror of a checkpoint carries the same record") {
    SpectralGrid g = make_grid(16, 2.0);
    PrimalState p;
    p.E = FourierField(g.n);
    p.n = FourierField(g.n);
    p.nt = FourierField(g.n);
    p.E.c[3] = cplx(0.25, -1.5);
    p.t = 2.0;
    const std::string path = tmp_file("qzak_test.json");
    write_checkpoint_json(path, g, 1.0, p);
    nlohmann::json j = nlohmann::json::parse(slurp(path));
    CHECK(j["grid_n"] == 16);
    CHECK(j["n"].is_array());  // the density field, not the grid size
    CHECK(j["length"] == 2.0);
    CHECK(j["eps"] == 1.0);
    CHECK(j["t"] == 2.0);
    CHECK(j["E"][3][0] == 0.25);
    CHECK(j["E"][3][1] == -1.5);
    CHECK(j["E"].size() == 16);
}

TEST_CASE("config parsing handles comments, whitespace and typed access") {
    ConfigMap cfg = ConfigMap::parse_string(
        "# run configuration\n"
        "simulate.grid_n = 128   # inline comment\n"
        "simulate.dt=5e-4\n"
        "simulate.verbose = true\n"
        "limits.eps_sequence = 0.5, 0.25, 0.125\n"
        "\n"
        "norms.label = window-a\n");
    CHECK(cfg.has("simulate.grid_n"));
    CHECK(!cfg.has("simulate.missing"));
    CHECK(cfg.get_int("simulate.grid_n", 0) == 128);
    CHECK(cfg.get_double("simulate.dt", 0.0) == 5e-4);
    CHECK(cfg.get_bool("simulate.verbose", false));
    CHECK(cfg.get_string("norms.label", "") == "window-a");
    CHECK(cfg.get_double("simulate.absent", 7.5) == 7.5);
    auto seq = cfg.get_double_list("limits.eps_sequence", {});
    REQUIRE(seq.size() == 3);
    CHECK(seq[0] == 0.5);
    CHECK(seq[2] == 0.125);
}

TEST_CASE("malformed config values raise errors that name the key") {
    ConfigMap cfg = ConfigMap::parse_string(
        "a.number = banana\n"
        "a.flag = maybe\n"
        "a.list = 1, two, 3\n");
    CHECK_THROWS_WITH_AS(cfg.get_double("a.number", 0.0), doctest::Contains("a.number"),
                         std::invalid_argument);
    CHECK_THROWS_WITH_AS(cfg.get_int("a.number", 0), doctest::Contains("a.number"),
                         std::invalid_argument);
    CHECK_THROWS_WITH_AS(cfg.get_bool("a.flag", true), doctest::Contains("a.flag"),
                         std::invalid_argument);
    CHECK_THROWS_WITH_AS(cfg.get_double_list("a.list", {}), doctest::Contains("a.list"),
                         std::invalid_argument);
}

TEST_CASE("config files parse the same way as in-memory text") {
    const std::string path = tmp_file("qzak_test.cfg");
    {
        std::ofstream out(path);
        out << "simulate.eps = 0.5\nsimulate.t_final = 2\n";
    }
    ConfigMap cfg = ConfigMap::parse_file(path);
    CHECK(cfg.get_double("simulate.eps", 0.0) == 0.5);
    CHECK(cfg.get_int("simulate.t_final", 0) == 2);
    CHECK_THROWS_AS(ConfigMap::parse_file(tmp_file("qzak_no_such.cfg")), std::invalid_argument);
    CHECK(cfg.entries().size() == 2);
}
