#include <fstream>
#include <iostream>
#include <string>

#include <CLI11.hpp>

#include "staut/profunctors.hpp"
#include "staut/quantale.hpp"
#include "staut/suites.hpp"

namespace {

enum Exit { kPass = 0, kFail = 1, kInput = 2 };

struct Settings {
  staut::RunOptions run;
  std::string report_path;
  std::string format = "text";
  bool timings = false;
};

int emit(const staut::RunReport& r, const Settings& s, const std::string& preamble = {}) {
  const std::string structured = staut::to_json(r, s.timings);
  if (!s.report_path.empty()) {
    std::ofstream out(s.report_path);
    if (!out) {
      std::cerr << "error: cannot write " << s.report_path << "\n";
      return kInput;
    }
    out << structured;
  }
  if (s.format == "structured") {
    std::cout << structured;
  } else {
    std::cout << preamble << staut::to_text(r);
  }
  return r.pass() ? kPass : kFail;
}

staut::RunReport single(const std::string& command, staut::SuiteReport s, std::uint64_t seed) {
  staut::RunReport r;
  r.command = command;
  r.seed = seed;
  r.suites.push_back(std::move(s));
  return r;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Finite star-autonomous model checker"};
  app.require_subcommand(1);
  app.fallthrough();
  Settings s;
  app.add_option("--window", s.run.window, "Z-string window half-width")->check(CLI::PositiveNumber);
  app.add_option("--depth", s.run.depth, "probe-universe depth")->check(CLI::Range(1, 6));
  app.add_option("--seed", s.run.seed, "seed for every sampled check");
  app.add_option("--report", s.report_path, "write the structured report to this path");
  app.add_option("--format", s.format, "terminal output format")->check(CLI::IsMember({"text", "structured"}));
  app.add_flag("--timings", s.timings, "include durations in the structured report");

  std::string target;
  std::function<int()> action;

  auto* quantale = app.add_subcommand("quantale", "finite quantales")->require_subcommand(1);
  auto* qcheck = quantale->add_subcommand("check", "validate a quantale file or builtin");
  qcheck->add_option("model", target, "file path or builtin (rel:N, s3:<g>, 2prof:<poset>, zN:k, l3, bool)")->required();
  qcheck->callback([&] {
    action = [&] { return emit(single("quantale check " + target, staut::quantale_check(target, s.run), s.run.seed), s); };
  });

  auto* vec = app.add_subcommand("vec", "vector-space backend")->require_subcommand(1);
  vec->add_subcommand("scalar-table", "axiom profiles of λ·id for λ in {1, -1, 2, 1/2}")->callback([&] {
    action = [&] {
      std::vector<staut::ScalarRow> rows;
      auto rep = staut::vec_scalar_table(s.run, &rows);
      return emit(single("vec scalar-table", std::move(rep), s.run.seed), s, staut::format_scalar_table(rows));
    };
  });

  auto* prof = app.add_subcommand("prof", "quantale-enriched profunctors")->require_subcommand(1);
  auto* pcheck = prof->add_subcommand("check", "staut and cyclicity suites on Prof(c, c)");
  pcheck->add_option("vcat", target, "enriched category description file")->required();
  pcheck->callback([&] {
    action = [&] { return emit(single("prof check " + target, staut::prof_check(target, s.run), s.run.seed), s); };
  });

  auto* braided = app.add_subcommand("braided", "braided models")->require_subcommand(1);
  braided->add_subcommand("d2-suite", "braiding, stitch, twist and cycle checks on D(Z2)-modules")->callback([&] {
    action = [&] { return emit(single("braided d2-suite", staut::braided_d2_suite(s.run), s.run.seed), s); };
  });

  auto* zang = app.add_subcommand("zang", "strictification by Z-strings")->require_subcommand(1);
  auto* zsuite = zang->add_subcommand("suite", "strict negations, equivalence and F-strings");
  zsuite->add_option("backend", target, "vec, vec:<λ> or thin:<quantale>")->required();
  zsuite->callback([&] {
    action = [&] { return emit(single("zang suite " + target, staut::zang_suite(target, s.run), s.run.seed), s); };
  });

  auto* paper = app.add_subcommand("paper", "acceptance runs")->require_subcommand(1);
  paper->add_subcommand("all", "every acceptance criterion")->callback([&] {
    action = [&] { return emit(staut::paper_all(s.run), s); };
  });

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kPass : kInput;
  }
  try {
    return action();
  } catch (const staut::ParseError& e) {
    std::cerr << "parse error: " << e.what() << "\n";
  } catch (const staut::InputError& e) {
    std::cerr << "error: " << e.what() << "\n";
  } catch (const staut::QuantaleError& e) {
    std::cerr << "error: " << e.what() << "\n";
  } catch (const staut::ProfError& e) {
    std::cerr << "error: " << e.what() << "\n";
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << "\n";
  } catch (const std::exception& e) {
    // No verdict could be established, which counts as a failure rather than bad input.
    std::cerr << "internal error: " << e.what() << "\n";
    return kFail;
  }
  return kInput;
}
