// Command-line front end: evaluate catalog examples or manifold files,
// compare against closed forms, cross-check the jets, and run the full suite.

#include "hcx/errors.hpp"
#include "hcx/runner.hpp"

#include <CLI11.hpp>

#include <iostream>
#include <sstream>

namespace {

hcx::Point parse_point(const std::string& text) {
  hcx::Point p{};
  std::stringstream ss(text);
  std::string item;
  int n = 0;
  while (std::getline(ss, item, ',')) {
    if (n >= hcx::kDim) throw hcx::ValidationError("point '" + text + "' has more than four coordinates");
    std::size_t used = 0;
    try {
      p[n] = std::stod(item, &used);
    } catch (const std::exception&) {
      used = 0;
    }
    if (used == 0 || item.find_first_not_of(" \t", used) != std::string::npos)
      throw hcx::ValidationError("point '" + text + "': bad coordinate '" + item + "'");
    ++n;
  }
  if (n != hcx::kDim) throw hcx::ValidationError("point '" + text + "' needs four coordinates");
  return p;
}

std::vector<hcx::Point> parse_points(const std::vector<std::string>& items) {
  std::vector<hcx::Point> out;
  for (const auto& item : items) {
    std::stringstream ss(item);
    std::string one;
    while (std::getline(ss, one, ';'))
      if (one.find_first_not_of(" \t") != std::string::npos) out.push_back(parse_point(one));
  }
  return out;
}

} // namespace

int main(int argc, char** argv) {
  CLI::App app{"Invariants and classification of 4-dimensional almost hypercomplex pseudo-Hermitian manifolds"};
  app.set_help_flag("-h,--help", "Show help");

  hcx::RunConfig cfg;
  std::vector<std::string> point_items;
  std::string format = "table";
  bool list_only = false;
  std::string show_source;

  app.add_option("--example,-e", cfg.examples, "Catalog id (repeatable); default: all entries");
  app.add_option("--file,-f", cfg.manifold_file, "Declarative manifold file instead of catalog ids");
  app.add_option("--structure", cfg.structure, "Only this named structure");
  app.add_option("--points,-p", point_items, "Points 'x1,x2,x3,x4', several separated by ';' or repeated");
  app.add_option("--grid", cfg.grid, "N samples per axis over the example's box")->check(CLI::PositiveNumber);
  app.add_option("--random", cfg.random, "N seeded random points in the box and domain")->check(CLI::PositiveNumber);
  app.add_option("--seed", cfg.seed, "Seed for --random");
  app.add_option("--tol-zero", cfg.tol_zero, "Zero-test tolerance override");
  app.add_option("--tol-match", cfg.tol_match, "Relative match tolerance override");
  app.add_flag("--compare", cfg.compare, "Compare against the closed-form expectations");
  app.add_flag("--printed", cfg.printed, "With --compare, use the printed closed forms even where corrected");
  app.add_flag("--fd-check", cfg.fd_check, "Cross-check metric jets against finite differences");
  app.add_option("--format", format, "Output format")->check(CLI::IsMember({"table", "records"}));
  app.add_option("--threads", cfg.threads, "Worker threads (0 = hardware)");
  app.add_flag("--list", list_only, "List catalog ids and exit");
  app.add_option("--source", show_source, "Print the declarative source of a catalog entry and exit");

  auto* verify = app.add_subcommand("verify-all", "Run the whole catalog with compare, fd-check and theorem checks");
  hcx::VerifyOptions vopt;
  std::string vformat = "table";
  verify->add_option("--seed", vopt.seed, "Seed for the extra random points");
  verify->add_option("--random-points", vopt.random_points, "Random points per entry besides the defaults");
  verify->add_option("--threads", vopt.threads, "Worker threads (0 = hardware)");
  verify->add_option("--format", vformat, "Output format")->check(CLI::IsMember({"table", "records"}));

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 2;
  }

  try {
    if (list_only) {
      for (const auto& id : hcx::list()) std::cout << id << '\n';
      return 0;
    }
    if (!show_source.empty()) {
      std::cout << hcx::source(show_source);
      return 0;
    }
    if (*verify) {
      vopt.format = vformat == "records" ? hcx::OutputFormat::Records : hcx::OutputFormat::Table;
      return hcx::verify_all(vopt, std::cout).exit_code;
    }
    if (!cfg.examples.empty() && !cfg.manifold_file.empty()) {
      std::cerr << "error: --example and --file are mutually exclusive\n";
      return 2;
    }
    cfg.points = parse_points(point_items);
    cfg.format = format == "records" ? hcx::OutputFormat::Records : hcx::OutputFormat::Table;
    const hcx::RunResult result = hcx::run(cfg);
    if (cfg.format == hcx::OutputFormat::Records) hcx::write_records(std::cout, result);
    else hcx::write_table(std::cout, result);
    for (const auto& e : result.errors) std::cerr << "error: " << e << '\n';
    if (cfg.format == hcx::OutputFormat::Records)
      for (const auto& f : result.failures) std::cerr << "FAIL " << f << '\n';
    return result.exit_code();
  } catch (const hcx::Error& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 2;
  }
}
