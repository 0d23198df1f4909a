#include <doctest.h>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>

#include <sys/wait.h>

namespace fs = std::filesystem;

namespace {

int run(const std::string& args) {
  const std::string cmd =
      std::string(CORISIM_BINARY) + " " + args + " > /dev/null 2>&1";
  const int status = std::system(cmd.c_str());
  REQUIRE(status != -1);
  return WIFEXITED(status) ? WEXITSTATUS(status) : -1;
}

fs::path fresh_dir(const std::string& name) {
  const fs::path dir = fs::temp_directory_path() / ("corisim_test_" + name);
  fs::remove_all(dir);
  fs::create_directories(dir);
  return dir;
}

std::string slurp(const fs::path& path) {
  std::ifstream in(path);
  REQUIRE(in.good());
  std::stringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

void write(const fs::path& path, const std::string& text) {
  std::ofstream out(path);
  out << text;
}

const char* kSmallScan =
    "label = smoke\n"
    "T_ms = 180\n"
    "rate_xp_urad_per_s = 0\n"
    "scan_parameter = comp_rate_yp\n"
    "scan_start_urad_per_s = -165\n"
    "scan_stop_urad_per_s = 285\n"
    "scan_points = 7\n"
    "shots_per_point = 60\n"
    "bin_size = 20\n"
    "seed = 12\n";

}  // namespace

TEST_CASE("usage errors exit with code 1") {
  CHECK(run("") == 1);
  CHECK(run("frobnicate") == 1);
  CHECK(run("scan --no-such-flag") == 1);
  // A subcommand without --config/--preset is a configuration error.
  CHECK(run("scan") == 2);
}

TEST_CASE("configuration errors exit with code 2") {
  const fs::path dir = fresh_dir("cfgerr");
  CHECK(run("report --preset fig7 --out " + dir.string()) == 2);
  CHECK(run("scan --config /no/such/file --out " + dir.string()) == 2);
  CHECK(run("scan --preset table1 --config /no/such/file --out " +
            dir.string()) == 2);

  write(dir / "bad.cfg", "T_ms = banana\n");
  CHECK(run("report --config " + (dir / "bad.cfg").string() + " --out " +
            dir.string()) == 2);
}

TEST_CASE("scan writes the shot table, binned curve, and fit record") {
  const fs::path dir = fresh_dir("scan");
  write(dir / "scan.cfg", kSmallScan);
  CHECK(run("scan --config " + (dir / "scan.cfg").string() + " --out " +
            dir.string()) == 0);

  CHECK(fs::exists(dir / "smoke_shots.csv"));
  CHECK(fs::exists(dir / "smoke_binned.csv"));
  CHECK(fs::exists(dir / "smoke_fit.json"));
  CHECK(fs::exists(dir / "scan_fits.json"));

  const std::string shots = slurp(dir / "smoke_shots.csv");
  CHECK(shots.rfind("parameter_value,shot_index,pop_a", 0) == 0);
  const std::string fit = slurp(dir / "smoke_fit.json");
  CHECK(fit.find("\"center\"") != std::string::npos);
  CHECK(fit.find("\"packet_sigma_m\"") != std::string::npos);
}

TEST_CASE("seed override changes the data, rerun reproduces it") {
  const fs::path a = fresh_dir("seed_a");
  const fs::path b = fresh_dir("seed_b");
  const fs::path c = fresh_dir("seed_c");
  write(a / "scan.cfg", kSmallScan);

  const std::string cfg = (a / "scan.cfg").string();
  CHECK(run("scan --config " + cfg + " --seed 77 --out " + a.string()) == 0);
  CHECK(run("scan --config " + cfg + " --seed 77 --out " + b.string()) == 0);
  CHECK(run("scan --config " + cfg + " --seed 78 --out " + c.string()) == 0);

  CHECK(slurp(a / "smoke_shots.csv") == slurp(b / "smoke_shots.csv"));
  CHECK(slurp(a / "smoke_shots.csv") != slurp(c / "smoke_shots.csv"));
}

TEST_CASE("analyze reproduces the scan's own fit from the CSV") {
  const fs::path dir = fresh_dir("analyze");
  write(dir / "scan.cfg", kSmallScan);
  const std::string cfg = (dir / "scan.cfg").string();
  CHECK(run("scan --config " + cfg + " --out " + dir.string()) == 0);

  const fs::path rerun = fresh_dir("analyze_rerun");
  CHECK(run("analyze " + (dir / "smoke_shots.csv").string() + " --config " +
            cfg + " --out " + rerun.string()) == 0);
  CHECK(slurp(dir / "smoke_fit.json") == slurp(rerun / "smoke_fit.json"));
  CHECK(slurp(dir / "smoke_binned.csv") == slurp(rerun / "smoke_binned.csv"));
}

TEST_CASE("report writes the systematics record") {
  const fs::path dir = fresh_dir("report");
  CHECK(run("report --preset table1 --out " + dir.string()) == 0);
  const std::string report = slurp(dir / "report.json");
  CHECK(report.find("\"recoil_velocity_m_per_s\"") != std::string::npos);
  CHECK(report.find("\"differential_rad\"") != std::string::npos);
  CHECK(report.find("\"delta_g_over_g\"") != std::string::npos);
  CHECK(report.find("\"gravitational_area_phase_basis\"") != std::string::npos);
}

TEST_CASE("threads flag does not change scan output") {
  const fs::path a = fresh_dir("thr_a");
  const fs::path b = fresh_dir("thr_b");
  write(a / "scan.cfg", kSmallScan);
  const std::string cfg = (a / "scan.cfg").string();
  CHECK(run("scan --config " + cfg + " --threads 1 --out " + a.string()) == 0);
  CHECK(run("scan --config " + cfg + " --threads 4 --out " + b.string()) == 0);
  CHECK(slurp(a / "smoke_shots.csv") == slurp(b / "smoke_shots.csv"));
}
