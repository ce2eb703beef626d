#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "nilrep/representation.hpp"
#include "nilrep/scalar.hpp"

namespace nilrep {

/// One published column entry: dimension (nullopt where the published run
/// failed) and reported seconds (nullopt where none was reported).
struct PublishedEntry {
  Algorithm algorithm;
  std::optional<std::size_t> dim;
  std::optional<double> seconds;
};

struct PublishedRow {
  int table = 0;
  std::string label;
  std::string catalog;  // catalog spec, e.g. "utri:5"
  Field field;
  std::size_t algebra_dim = 0;
  std::vector<PublishedEntry> entries;
};

/// Published rows of table 1 (upper triangular), 2 (free nilpotent) or 3
/// (filiform family).
std::vector<PublishedRow> published_rows(int which);

struct TableOptions {
  std::uint64_t seed = 1;
  std::size_t retries = 10;
  /// Budget for Affine per row in seconds (0 = unlimited).
  double affine_time_limit = 0;
  /// Run this many rows concurrently.
  std::size_t jobs = 1;
};

struct ColumnOutcome {
  Algorithm algorithm;
  std::optional<std::size_t> published_dim;
  std::optional<double> published_seconds;
  std::optional<std::size_t> dim;  // nullopt when Affine failed
  double seconds = 0;
  bool verified = false;  // homomorphism and faithful
  std::string status;     // MATCH, DIFF(ours,published), AFFINE-FAIL, ...
  std::string note;
  /// True when the status is a dimension mismatch (counted in the exit code).
  bool is_diff = false;
};

struct RowOutcome {
  PublishedRow row;
  std::size_t algebra_dim = 0;
  std::vector<ColumnOutcome> columns;
};

RowOutcome run_row(const PublishedRow& row, const TableOptions& options);
std::vector<RowOutcome> run_table(int which, const TableOptions& options);

std::string format_row(const RowOutcome& r);
std::size_t diff_count(const std::vector<RowOutcome>& rows);

}  // namespace nilrep
