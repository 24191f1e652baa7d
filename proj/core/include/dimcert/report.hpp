// Run configuration, CSV emission and parsing, and the command driver
// shared by the command-line tool and the tests.

#pragma once

#include <iosfwd>
#include <map>
#include <optional>
#include <string>

#include "dimcert/scheme.hpp"

namespace dimcert {

struct RunConfig {
  std::string command;  // certify | regularity | refine | scan | salem |
                        // oracle | near-one
  std::vector<double> translations = {0.0, 1.0};
  std::vector<double> probabilities = {0.5, 0.5};
  double lambda_lo = 0.0;
  double lambda_hi = 0.0;
  double alpha = 0.5;
  double d1 = 0.0;
  double d2 = 1.0;
  double epsilon = 1e-2;
  std::int64_t cells = 40000;
  std::int64_t max_iters = 200;
  double theta = 1e-7;
  double threshold = 0.995;
  double margin = 0.1;
  double overlap = 0.1;
  std::int64_t intervals = 1;
  std::int64_t workers = 1;
  std::string poly_file;
  bool poly_palindromic_half = false;
  double delta = 1e-8;
  std::int64_t depth = 12;
  std::string out;  // empty = stdout

  /// Applies one `key=value` assignment; throws std::invalid_argument on
  /// unknown keys or malformed values.
  void assign(const std::string& key, const std::string& value);
};

/// Flat key=value text, one per line, '#' comments.
RunConfig parse_config(std::istream& in);

/// Bound-table CSV: header lambda_lo,lambda_hi,alpha,status,iterations,cells,
/// 12 significant digits, LF line endings, terminated by a `# complete`
/// trailer line.
void write_table(std::ostream& out, const BoundTable& table);
BoundTable parse_table(std::istream& in);

/// Executes a command. Returns 0 on success (inconclusive certificates are
/// rows, not failures), 2 on configuration errors, 3 on I/O errors.
/// Diagnostics go to `err`.
int run(const RunConfig& cfg, std::ostream& err);

}  // namespace dimcert
