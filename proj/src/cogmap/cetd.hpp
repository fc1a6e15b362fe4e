#pragma once

#include <span>
#include <string>
#include <vector>

#include "cogmap/errors.hpp"

namespace cogmap {

/// Raw time-interval counts: one row per group (e.g. an age band) with the
/// interval length in years, one column per attribute.
struct RawDataTable {
  std::vector<std::string> row_labels;
  std::vector<std::string> col_labels;
  std::vector<std::vector<long>> counts;  // non-negative
  std::vector<double> intervals;          // > 0, one per row

  std::size_t rows() const { return row_labels.size(); }
  std::size_t cols() const { return col_labels.size(); }
};

void check_table(const RawDataTable& t);

struct ColumnStats {
  std::vector<double> mean;
  std::vector<double> stddev;  // population form (divide by the row count)
};

struct CetdOptions {
  /// Quantize the ATD matrix and the column stats to two decimals before
  /// banding, reproducing the published tables.  Exact double arithmetic
  /// is available behind this switch but disagrees with the published
  /// RTD matrices on knife-edge cells.
  bool published_precision = true;
};

/// a(i,j) = counts(i,j) / intervals(i).
std::vector<std::vector<double>> atd(const RawDataTable& raw, const CetdOptions& opt = {});

ColumnStats column_stats(const std::vector<std::vector<double>>& atd_matrix,
                         const CetdOptions& opt = {});

/// e(i,j) = -1 when a <= mean - alpha*sd; +1 when a > mean + alpha*sd;
/// 0 otherwise (the upper boundary falls in the 0 band).
std::vector<std::vector<int>> rtd(const std::vector<std::vector<double>>& atd_matrix,
                                  const ColumnStats& stats, double alpha);

struct CetdProfile {
  std::vector<std::vector<double>> atd;
  ColumnStats stats;
  std::vector<double> alphas;
  std::vector<std::vector<std::vector<int>>> rtds;  // one per alpha
  std::vector<std::vector<int>> cetd;               // entrywise sum over alphas
  std::vector<long> row_sums;
  std::vector<std::string> peak_labels;  // all rows tied at the maximum
};

/// Full pipeline: ATD, stats, one RTD per alpha, the CETD sum, the row
/// sums and the peak group(s).
CetdProfile cetd_profile(const RawDataTable& raw, std::span<const double> alphas,
                         const CetdOptions& opt = {});

}  // namespace cogmap
