#pragma once

#include <cstdint>
#include <optional>
#include <string>

namespace maxsemi {

struct RunOptions {
  std::string config_path;
  std::string out_dir;
  std::optional<std::uint64_t> seed_override;  // takes precedence over config
  int workers = 1;
};

// Executes one subcommand against a JSON config, writing artifacts into
// out_dir. Returns 0 when the command succeeds and every check passes, 1 on
// configuration or validation errors (an {"error": ...} object goes to
// stderr), and 2 when the command ran to completion but a check failed.
//
// Commands: make-dist, eval, sample, verify, sim-ep, sim-compound-ep,
// sim-ar1, sim-ar1-mod.
int run_command(const std::string& command, const RunOptions& options);

}  // namespace maxsemi
