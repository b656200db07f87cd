#include <iostream>
#include <string>

#include <CLI11.hpp>

#include "psrecon_cli/commands.hpp"

using namespace psrecon::cli;

int main(int argc, char** argv) {
  CLI::App app{"Reconstruct string multisets from prefix-suffix compositions"};
  app.require_subcommand(1);
  app.fallthrough();

  std::string format_name;
  Options opt;
  std::optional<int> n, h, wbar;
  app.add_option("--format", format_name, "Output format")
      ->check(CLI::IsMember({"json", "text"}));
  app.add_option("--jobs", opt.jobs, "Worker threads for enumeration")
      ->check(CLI::PositiveNumber);

  std::string path = "-";
  auto with_input = [&](CLI::App* sub) {
    sub->add_option("input", path, "Input file, '-' for stdin");
    return sub;
  };
  auto with_expect = [&](CLI::App* sub) {
    sub->add_option("--expect-n", n, "Assert string length");
    sub->add_option("--expect-h", h, "Assert number of strings");
    sub->add_option("--expect-wbar", wbar, "Assert string weight");
    return sub;
  };

  auto* compose = with_input(
      app.add_subcommand("compose", "Strings file to composition multiset"));
  auto* reconstruct = with_expect(with_input(app.add_subcommand(
      "reconstruct", "One compatible multiset (greedy)")));
  auto* enumerate = with_expect(with_input(app.add_subcommand(
      "enumerate", "All compatible multisets up to reversal")));
  enumerate->add_flag("--count-only", opt.count_only);
  auto* check = with_expect(with_input(app.add_subcommand(
      "check-unique", "Decide unique reconstruction (exit 0 unique, 3 not)")));
  auto* oracle = with_expect(with_input(
      app.add_subcommand("oracle", "Brute-force enumeration, desk scale only")));
  oracle->add_flag("--count-only", opt.count_only);

  int n_max = 6, h_max = 1;
  auto* self = app.add_subcommand("selftest", "Exhaustive oracle equivalence");
  self->add_option("--n-max", n_max)->capture_default_str();
  self->add_option("--h-max", h_max)->capture_default_str();

  BenchOptions bench;
  auto* bench_cmd = app.add_subcommand("bench", "Time reconstruct_one");
  bench_cmd->add_option("--seed", bench.seed)->capture_default_str();
  bench_cmd->add_option("--repeats", bench.repeats)
      ->check(CLI::PositiveNumber)
      ->capture_default_str();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kOk : kInvalidInput;
  }

  if (!format_name.empty()) opt.format = parse_format(format_name);
  opt.expect = {n, h, wbar};
  Streams io{std::cin, std::cout, std::cerr};

  if (*compose) return cmd_compose(path, opt, io);
  if (*reconstruct) return cmd_reconstruct(path, opt, io);
  if (*enumerate) return cmd_enumerate(path, opt, io);
  if (*check) return cmd_check_unique(path, opt, io);
  if (*oracle) return cmd_oracle(path, opt, io);
  if (*self) return cmd_selftest(n_max, h_max, opt, io);
  if (*bench_cmd) return cmd_bench(bench, opt, io);
  return kInvalidInput;
}
