#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace legmosaic {

/// Resolved runtime configuration. Precedence: command-line flags, then
/// LEGMOSAIC_* environment variables, then the --config key=value file, then
/// these defaults.
struct CliConfig {
  long long max_cells = 25;        // enumeration budget (cells)
  int crossing_cap = 24;           // skein complexity cap
  long long matrix_dim_cap = 1LL << 16;  // state-matrix dimension cap
  int workers = 1;
  std::string out_dir;
  std::string format = "json";  // json or csv
  bool deterministic = true;
};

/// Run one CLI invocation. argv excludes the program name. Returns the
/// process exit code: 0 success, 1 domain error, 2 usage error, 3 resource
/// limit. Errors print a single-line JSON diagnostic to `err`.
int run_cli(const std::vector<std::string>& argv, std::ostream& out,
            std::ostream& err);

}  // namespace legmosaic
