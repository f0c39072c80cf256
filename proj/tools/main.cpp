#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include <CLI11.hpp>

#include "maxsemi/cli.hpp"

int main(int argc, char** argv) {
  CLI::App app{
      "maxsemi: construct, sample and check max-semi-stable laws and their "
      "processes"};
  app.require_subcommand(1);

  std::string config_path;
  std::string out_dir;
  std::uint64_t seed = 0;
  int workers = 1;

  const std::vector<std::pair<std::string, std::string>> commands = {
      {"make-dist", "Validate a distribution config and emit its normal form"},
      {"eval", "Tabulate the cdf and quantile function"},
      {"sample", "Draw i.i.d. samples, optionally from the power F^tau"},
      {"verify", "Run the identity and validity check battery"},
      {"sim-ep", "Simulate extremal-process paths and check the marginals"},
      {"sim-compound-ep",
       "Simulate gamma-subordinated extremal paths and check the marginals"},
      {"sim-ar1", "Simulate the max-autoregression and check stationarity"},
      {"sim-ar1-mod",
       "Simulate the randomized max-autoregression and its geometric-max law"},
  };
  for (const auto& [name, description] : commands) {
    CLI::App* sub = app.add_subcommand(name, description);
    sub->add_option("--config", config_path, "JSON config file")->required();
    sub->add_option("--out", out_dir, "Directory for output artifacts")
        ->required();
    sub->add_option("--seed", seed, "Override the config seed");
    sub->add_option("--workers", workers,
                    "Worker threads for replicated simulations");
  }

  CLI11_PARSE(app, argc, argv);

  CLI::App* sub = app.get_subcommands().front();
  maxsemi::RunOptions options;
  options.config_path = config_path;
  options.out_dir = out_dir;
  if (sub->count("--seed") > 0) options.seed_override = seed;
  options.workers = workers;
  return maxsemi::run_command(sub->get_name(), options);
}
