// troplift: t-initial ideals, tropical membership and Puiseux lifting.
//
//   troplift tin  --omega "1,-1" --input ideal.txt
//   troplift lift --order 3 --omega "-1,-3/2" < example.txt
//
// Exit status: 0 on success, 1 when a computation is impossible for the
// given input, 2 on malformed input or usage.

#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <iterator>
#include <sstream>

#include "troplift/errors.hpp"
#include "troplift/lift.hpp"
#include "troplift/parse.hpp"
#include "troplift/report.hpp"
#include "troplift/tinitial.hpp"

namespace {

using namespace troplift;

constexpr std::uint64_t kDefaultSeed = 42;
constexpr int kDefaultOrder = 3;

struct Options {
  std::string input;
  std::string omega;
  int order = 0;
  std::uint64_t seed = kDefaultSeed;
  bool seed_given = false;
  std::size_t branch = 0;
  bool json = false;
};

std::string read_all(std::istream& in) {
  return {std::istreambuf_iterator<char>(in), std::istreambuf_iterator<char>()};
}

ProblemInput load(const Options& opt) {
  std::string text;
  if (opt.input.empty() || opt.input == "-") {
    text = read_all(std::cin);
  } else {
    std::ifstream f(opt.input);
    if (!f) throw ParseError(0, 0, "cannot open " + opt.input);
    text = read_all(f);
  }
  ProblemInput in = parse_input(text);
  if (!opt.omega.empty()) {
    in.omega = parse_weight(opt.omega);
    if (in.omega->size() != in.ctx.nvars())
      throw ParseError(0, 0, "--omega has " + std::to_string(in.omega->size()) + " entries, expected " +
                                 std::to_string(in.ctx.nvars()));
  }
  if (opt.order > 0) in.order = opt.order;
  if (opt.seed_given) in.seed = opt.seed;
  return in;
}

const WeightVector& need_omega(const ProblemInput& in) {
  if (!in.omega) throw ParseError(0, 0, "omega is required (file field 'omega:' or --omega)");
  return *in.omega;
}

int run(const std::string& cmd, const Options& opt) {
  ProblemInput in = load(opt);
  Ideal ideal{in.ctx, in.gens};
  if (cmd == "tin") {
    Ideal tin = t_initial_ideal(ideal, need_omega(in));
    std::cout << (opt.json ? ideal_json(tin) : format_ideal(tin)) << "\n";
  } else if (cmd == "trop") {
    bool member = trop_contains(ideal, need_omega(in));
    std::cout << (opt.json ? std::string(member ? "{\n  \"member\": true\n}" : "{\n  \"member\": false\n}")
                           : std::string(member ? "true" : "false"))
              << "\n";
  } else if (cmd == "dim") {
    int d = dimension(ideal, CoeffDomain::RationalFunctions);
    std::cout << (opt.json ? "{\n  \"dimension\": " + std::to_string(d) + "\n}" : std::to_string(d)) << "\n";
  } else if (cmd == "lift") {
    LiftResult r = lift_point(in.order.value_or(kDefaultOrder), ideal, need_omega(in),
                              in.seed.value_or(kDefaultSeed), opt.branch);
    std::cout << (opt.json ? lift_json(r, in.ctx.names) + "\n" : lift_text(r, in.ctx.names));
  } else if (cmd == "rdz") {
    RdzResult r = rdz(ideal, need_omega(in), in.seed.value_or(kDefaultSeed));
    std::cout << (opt.json ? rdz_json(r) + "\n" : rdz_text(r));
  }
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Tropical initial ideals and Puiseux-series lifting of tropical points"};
  app.require_subcommand(1, 1);
  Options opt;
  const std::vector<std::pair<std::string, std::string>> commands = {
      {"tin", "print the t-initial ideal at omega"},
      {"trop", "test whether omega lies in the tropical variety"},
      {"dim", "print the Krull dimension over Q(t)"},
      {"lift", "lift omega to a truncated Puiseux solution"},
      {"rdz", "cut a positive-dimensional prime down to dimension zero"},
  };
  for (const auto& [name, help] : commands) {
    CLI::App* sub = app.add_subcommand(name, help);
    sub->add_option("--input", opt.input, "ideal file (default: stdin)");
    sub->add_option("--omega", opt.omega, "weight vector, e.g. \"-1,-3/2\"");
    sub->add_flag("--json", opt.json, "machine-readable output");
    if (name == "lift") {
      sub->add_option("--order", opt.order, "number of recursion levels (default 3)")->check(CLI::PositiveNumber);
      sub->add_option("--branch", opt.branch, "pick the k-th zero of the first t-initial ideal");
    }
    if (name == "lift" || name == "rdz")
      sub->add_option("--seed", opt.seed, "seed for the random linear forms (default 42)")
          ->each([&](const std::string&) { opt.seed_given = true; });
  }
  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 2;
  }
  const std::string cmd = app.get_subcommands().front()->get_name();
  try {
    return run(cmd, opt);
  } catch (const ParseError& e) {
    std::cerr << "troplift: parse error: " << e.what() << "\n";
    return 2;
  } catch (const DomainError& e) {
    std::cerr << "troplift: " << e.what() << "\n";
    return 1;
  } catch (const std::invalid_argument& e) {
    std::cerr << "troplift: " << e.what() << "\n";
    return 1;
  }
}
