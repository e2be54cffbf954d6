// Batch CLI for 2-uninorm verification, migrativity decisions and census
// audits. Every invocation that checks something doubles as a theorem check:
// the brute-force oracle always runs alongside the characterizations, and a
// nonzero exit means a failed check or a route disagreement, never merely a
// negative verdict.

#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <sstream>
#include <thread>

#include "unimig/run.hpp"

namespace {

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw unimig::IoError("cannot read config file '" + path + "'");
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"unimig - migrativity checks and exhaustive audits for 2-uninorms"};

  std::string command;
  std::string config_path;
  std::string out_path;
  std::string format = "human";
  std::string mode;
  int grid = 0;
  double budget_seconds = 0.0;
  int jobs = static_cast<int>(std::max(1u, std::thread::hardware_concurrency()));

  app.add_option("--command", command, "verify|migrative|sweep|enumerate|audit|heatmap")
      ->required();
  app.add_option("--config", config_path, "config file with operator definitions");
  app.add_option("--grid", grid, "grid subdivisions (overrides the config)");
  app.add_option("--mode", mode, "exact|float (overrides the config)");
  app.add_option("--out", out_path, "write the report here instead of stdout");
  app.add_option("--format", format, "json-lines|csv|human");
  app.add_option("--budget", budget_seconds, "time budget in seconds for enumerate/audit");
  app.add_option("--jobs", jobs, "worker threads for the audit");

  CLI11_PARSE(app, argc, argv);

  try {
    unimig::RunOptions opt;
    opt.command = unimig::parse_command(command);
    if (!config_path.empty()) opt.cfg = unimig::parse_config(read_file(config_path));
    if (grid > 0) opt.grid_override = grid;
    if (!mode.empty()) {
      if (mode == "exact") opt.mode_override = unimig::CompareMode::Exact;
      else if (mode == "float") opt.mode_override = unimig::CompareMode::Float;
      else throw unimig::ValidationError("mode must be exact or float");
    }
    if (budget_seconds > 0)
      opt.budget = std::chrono::milliseconds(static_cast<long>(budget_seconds * 1000));
    opt.jobs = std::max(1, jobs);

    const unimig::Report report = unimig::run_command(opt);
    const std::string text = unimig::emit_report(report, unimig::parse_format(format));
    if (out_path.empty()) {
      std::cout << text;
    } else {
      std::ofstream out(out_path, std::ios::binary);
      if (!out) throw unimig::IoError("cannot write '" + out_path + "'");
      out << text;
    }
    return report.failed ? 1 : 0;
  } catch (const unimig::Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
}
