// corisim: simulate and analyze Coriolis-compensated conjugate atom
// interferometers (rate/delay contrast scans, ellipse readout, phase and
// systematics report).

#include <chrono>
#include <cstdio>
#include <ctime>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <nlohmann/json.hpp>

#include "coriolis/config.hpp"
#include "coriolis/csv.hpp"
#include "coriolis/pipeline.hpp"

namespace {

constexpr int kExitOk = 0;
constexpr int kExitUsage = 1;
constexpr int kExitConfig = 2;
constexpr int kExitNumeric = 3;

struct CommonOptions {
  std::string config_path;
  std::string preset;
  std::string out_dir = ".";
  std::uint64_t seed = 0;
  bool seed_set = false;
  int shots = 0;
  bool shots_set = false;
  bool unweighted = false;
  int threads = 1;
};

void add_common(CLI::App* cmd, CommonOptions& opt, bool with_fit_options) {
  cmd->add_option("--config", opt.config_path,
                  "Configuration file (key = value, units in key names)");
  cmd->add_option("--preset", opt.preset,
                  "Built-in preset: table1, fig3, fig5-left, fig5-right");
  cmd->add_option("--out", opt.out_dir, "Output directory (default: .)");
  cmd->add_option("--seed", opt.seed, "Override the RNG seed")
      ->each([&opt](const std::string&) { opt.seed_set = true; });
  if (with_fit_options) {
    cmd->add_option("--shots", opt.shots, "Override shots per scan point")
        ->each([&opt](const std::string&) { opt.shots_set = true; });
    cmd->add_flag("--unweighted-fit", opt.unweighted,
                  "Fit scans without inverse-variance weights");
    cmd->add_option("--threads", opt.threads,
                    "Worker threads for shot generation (results are "
                    "independent of this value)");
  }
}

std::vector<coriolis::ExperimentConfig> load_jobs(const CommonOptions& opt) {
  if (!opt.config_path.empty() && !opt.preset.empty()) {
    throw coriolis::ConfigError("--config and --preset are mutually exclusive");
  }
  std::vector<coriolis::ExperimentConfig> jobs;
  if (!opt.preset.empty()) {
    jobs = coriolis::load_preset(opt.preset);
  } else if (!opt.config_path.empty()) {
    jobs.push_back(coriolis::load_config(opt.config_path));
  } else {
    throw coriolis::ConfigError("one of --config or --preset is required");
  }
  for (std::size_t i = 0; i < jobs.size(); ++i) {
    if (opt.seed_set) jobs[i].seed = opt.seed + i;
    if (opt.shots_set) jobs[i].scan.shots_per_point = opt.shots;
  }
  return jobs;
}

nlohmann::json meta_json(const std::string& command) {
  const auto now = std::chrono::system_clock::now();
  const std::time_t t = std::chrono::system_clock::to_time_t(now);
  char stamp[32];
  std::strftime(stamp, sizeof(stamp), "%Y-%m-%dT%H:%M:%SZ", std::gmtime(&t));
  return {{"tool", "corisim"}, {"command", command}, {"generated_at", stamp}};
}

void write_text(const std::filesystem::path& path, const std::string& text) {
  std::ofstream out(path, std::ios::trunc);
  if (!out) {
    throw coriolis::ConfigError("cannot write output file: " + path.string());
  }
  out << text;
}

int cmd_scan(const CommonOptions& opt) {
  const auto jobs = load_jobs(opt);
  std::filesystem::create_directories(opt.out_dir);
  const std::filesystem::path out(opt.out_dir);

  nlohmann::json combined;
  combined["meta"] = meta_json("scan");
  combined["results"] = nlohmann::json::array();

  for (const auto& job : jobs) {
    const auto result = coriolis::run_scan_job(job, !opt.unweighted, opt.threads);
    coriolis::write_shot_csv((out / (job.label + "_shots.csv")).string(),
                             result.points);
    coriolis::write_binned_csv((out / (job.label + "_binned.csv")).string(),
                               result.binned);
    const nlohmann::json fit = coriolis::scan_result_json(result);
    write_text(out / (job.label + "_fit.json"), fit.dump(2) + "\n");
    combined["results"].push_back(fit);
    std::cout << job.label << ": "
              << (result.fit ? "fit ok" : "no fit (too few points)") << "\n";
  }
  write_text(out / "scan_fits.json", combined.dump(2) + "\n");
  return kExitOk;
}

int cmd_report(const CommonOptions& opt) {
  const auto jobs = load_jobs(opt);
  std::filesystem::create_directories(opt.out_dir);

  nlohmann::json doc;
  doc["meta"] = meta_json("report");
  doc["report"] = coriolis::report_json(jobs.front());
  write_text(std::filesystem::path(opt.out_dir) / "report.json",
             doc.dump(2) + "\n");
  std::cout << doc["report"].dump(2) << "\n";
  return kExitOk;
}

int cmd_analyze(const CommonOptions& opt, const std::string& csv_path) {
  const auto jobs = load_jobs(opt);
  const auto config = jobs.front();
  std::filesystem::create_directories(opt.out_dir);
  const std::filesystem::path out(opt.out_dir);

  auto points = coriolis::read_shot_csv(csv_path);
  const auto result =
      coriolis::analyze_points(config, std::move(points), !opt.unweighted);
  coriolis::write_binned_csv((out / (config.label + "_binned.csv")).string(),
                             result.binned);
  const nlohmann::json fit = coriolis::scan_result_json(result);
  write_text(out / (config.label + "_fit.json"), fit.dump(2) + "\n");
  std::cout << fit.dump(2) << "\n";
  return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{
      "corisim: conjugate atom-interferometer simulator and analysis.\n"
      "Sign convention: a positive tip-tilt rate about either mirror axis\n"
      "opposes the drift from Earth's rotation, so full compensation uses\n"
      "positive rates (about 57.6 urad/s about y' at 37.87 deg latitude)."};
  app.require_subcommand(1);

  CommonOptions scan_opt, report_opt, analyze_opt;
  std::string csv_path;

  CLI::App* scan = app.add_subcommand("scan", "Simulate and fit a contrast scan");
  add_common(scan, scan_opt, true);

  CLI::App* report =
      app.add_subcommand("report", "Phase budget and systematics report");
  add_common(report, report_opt, false);

  CLI::App* analyze =
      app.add_subcommand("analyze", "Analyze a shot CSV produced by scan");
  analyze->add_option("csv", csv_path, "Shot table CSV")->required();
  add_common(analyze, analyze_opt, true);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return e.get_exit_code() == 0 ? kExitOk : kExitUsage;
  }

  try {
    if (scan->parsed()) return cmd_scan(scan_opt);
    if (report->parsed()) return cmd_report(report_opt);
    if (analyze->parsed()) return cmd_analyze(analyze_opt, csv_path);
    std::cerr << "no subcommand\n";
    return kExitUsage;
  } catch (const coriolis::ConfigError& e) {
    std::cerr << "config error: " << e.what() << "\n";
    return kExitConfig;
  } catch (const coriolis::CsvError& e) {
    std::cerr << "csv error: " << e.what() << "\n";
    return kExitConfig;
  } catch (const coriolis::FitError& e) {
    std::cerr << "fit error: " << e.what() << "\n";
    return kExitNumeric;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitNumeric;
  }
}
