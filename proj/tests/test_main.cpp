#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <string>

#include "qzak/runner.hpp"

namespace fs = std::filesystem;

namespace {

std::string slurp(const fs::path& p) {
    std::ifstream in(p, std::ios::binary);
    REQUIRE(in.good());
    return std::string(std::istreambuf_iterator<char>(in), {});
}

fs::path fresh_dir(const char* tag) {
    fs::path d = fs::temp_directory_path() / (std::string("qzak_runner_") + tag);
    fs::remove_all(d);
    return d;
}

std::string write_config(const char* tag, const std::string& text) {
    fs::path p = fs::temp_directory_path() / (std::string("qzak_cfg_") + tag + ".cfg");
    std::ofstream out(p);
    out << text;
    out.close();
    return p.string();
}

}  // namespace

TEST_CASE("run_manifest rejects unknown command with a config error") {
    qzak::RunManifest m;
    m.command = "frobnicate";
    m.out_dir = fresh_dir("unknown").string();
    CHECK(qzak::run_manifest(m) == 1);
}

TEST_CASE("run_manifest simulate writes conservation CSV, checkpoint and summary") {
    qzak::RunManifest m;
    m.command = "simulate";
    m.config_path = write_config("sim", "simulate.grid_n = 64\n"
                                        "simulate.t_final = 0.02\n"
                                        "simulate.dt = 1e-3\n"
                                        "simulate.record_stride = 5\n");
    fs::path out = fresh_dir("sim");
    m.out_dir = out.string();
    CHECK(qzak::run_manifest(m) == 0);
    CHECK(fs::exists(out / "conservation.csv"));
    CHECK(fs::exists(out / "final.qzk"));
    CHECK(fs::exists(out / "final.json"));
    CHECK(fs::exists(out / "summary.json"));
    const std::string csv = slurp(out / "conservation.csv");
    CHECK(csv.rfind("t,mass,hamiltonian", 0) == 0);
}

TEST_CASE("run_manifest reports config errors by field name with exit code 1") {
    qzak::RunManifest m;
    m.command = "simulate";
    m.config_path = write_config("bad", "simulate.dt = -1\n");
    m.out_dir = fresh_dir("bad").string();
    CHECK(qzak::run_manifest(m) == 1);
}

TEST_CASE("run_manifest norms emits per-frame Sobolev and space-time rows") {
    qzak::RunManifest m;
    m.command = "norms";
    m.config_path = write_config("norms", "norms.grid_n = 64\n"
                                          "norms.frames = 8\n"
                                          "norms.window_t = 0.1\n"
                                          "norms.dt = 5e-3\n");
    fs::path out = fresh_dir("norms");
    m.out_dir = out.string();
    CHECK(qzak::run_manifest(m) == 0);
    const std::string csv = slurp(out / "norms.csv");
    CHECK(csv.find("sobolev_E") != std::string::npos);
    CHECK(csv.find("bourgain_E") != std::string::npos);
    CHECK(csv.find("bourgain_n_plus") != std::string::npos);
    CHECK(csv.find("bourgain_n_minus") != std::string::npos);
}

TEST_CASE("run_manifest estimates honours --which and writes scan artifacts") {
    qzak::RunManifest m;
    m.command = "estimates";
    m.config_path = write_config("est", "estimates.n_tau = 4\n"
                                        "estimates.n_xi = 4\n"
                                        "estimates.tau_abs_max = 10\n"
                                        "estimates.xi_max = 10\n"
                                        "estimates.include_case_boundaries = false\n"
                                        "estimates.emit_plots = false\n");
    m.which = "C2";
    fs::path out = fresh_dir("est");
    m.out_dir = out.string();
    CHECK(qzak::run_manifest(m) == 0);
    CHECK(fs::exists(out / "scan_c2.csv"));
    CHECK(fs::exists(out / "scan_c2_summary.json"));
    const std::string csv = slurp(out / "scan_c2.csv");
    CHECK(csv.rfind("tau,xi,kernel_value,prefactor,product", 0) == 0);
}

TEST_CASE("emit_plotdata writes the region polyline and the phase profiles") {
    fs::path out = fresh_dir("plots");
    fs::create_directories(out);
    qzak::emit_plotdata(out.string(), 1.0);
    const std::string boundary = slurp(out / "region_boundary.csv");
    CHECK(boundary.rfind("k,l", 0) == 0);
    // the corner of the lower region component must be on the polyline
    CHECK(boundary.find("-0.75,-0.75") != std::string::npos);
    const std::string prof = slurp(out / "f_profile.csv");
    CHECK(prof.rfind("case,tau,xi1,f_value", 0) == 0);
    CHECK(prof.find("small_tau") != std::string::npos);
    CHECK(prof.find("below_minus_two_gamma") != std::string::npos);
    CHECK(prof.find("order_one_window") != std::string::npos);
}
