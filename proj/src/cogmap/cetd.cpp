#include "cogmap/cetd.hpp"

#include <cmath>

namespace cogmap {

namespace {

// Round half-up to two decimals; pipeline values are never negative.
double quantize2(double x) { return std::floor(x * 100.0 + 0.5) / 100.0; }

}  // namespace

void check_table(const RawDataTable& t) {
  if (t.rows() == 0 || t.cols() == 0) fail(Errc::Validation, "raw data table is empty");
  if (t.counts.size() != t.rows() || t.intervals.size() != t.rows())
    fail(Errc::ShapeMismatch, "raw data table row count mismatch");
  for (std::size_t i = 0; i < t.rows(); ++i) {
    if (t.counts[i].size() != t.cols())
      fail(Errc::ShapeMismatch, "raw data row '" + t.row_labels[i] + "' has the wrong width");
    if (!(t.intervals[i] > 0.0))
      fail(Errc::Validation, "interval for row '" + t.row_labels[i] + "' must be positive");
    for (long c : t.counts[i])
      if (c < 0) fail(Errc::Validation, "negative count in row '" + t.row_labels[i] + "'");
  }
}

std::vector<std::vector<double>> atd(const RawDataTable& raw, const CetdOptions& opt) {
  check_table(raw);
  std::vector<std::vector<double>> out(raw.rows(), std::vector<double>(raw.cols()));
  for (std::size_t i = 0; i < raw.rows(); ++i)
    for (std::size_t j = 0; j < raw.cols(); ++j) {
      double v = static_cast<double>(raw.counts[i][j]) / raw.intervals[i];
      out[i][j] = opt.published_precision ? quantize2(v) : v;
    }
  return out;
}

ColumnStats column_stats(const std::vector<std::vector<double>>& atd_matrix,
                         const CetdOptions& opt) {
  if (atd_matrix.empty()) fail(Errc::Validation, "column stats over an empty table");
  const std::size_t m = atd_matrix.size();
  const std::size_t n = atd_matrix.front().size();
  ColumnStats stats;
  stats.mean.resize(n);
  stats.stddev.resize(n);
  for (std::size_t j = 0; j < n; ++j) {
    double sum = 0;
    for (std::size_t i = 0; i < m; ++i) sum += atd_matrix[i][j];
    double mu = sum / static_cast<double>(m);
    if (opt.published_precision) mu = quantize2(mu);
    double sq = 0;
    for (std::size_t i = 0; i < m; ++i) {
      double d = atd_matrix[i][j] - mu;
      sq += d * d;
    }
    double sd = std::sqrt(sq / static_cast<double>(m));
    if (opt.published_precision) sd = quantize2(sd);
    stats.mean[j] = mu;
    stats.stddev[j] = sd;
  }
  return stats;
}

std::vector<std::vector<int>> rtd(const std::vector<std::vector<double>>& atd_matrix,
                                  const ColumnStats& stats, double alpha) {
  if (alpha < 0.0 || alpha > 1.0) fail(Errc::Validation, "alpha must lie in [0, 1]");
  std::vector<std::vector<int>> out(atd_matrix.size(),
                                    std::vector<int>(atd_matrix.empty() ? 0 : atd_matrix[0].size()));
  for (std::size_t i = 0; i < atd_matrix.size(); ++i)
    for (std::size_t j = 0; j < atd_matrix[i].size(); ++j) {
      double a = atd_matrix[i][j];
      double lo = stats.mean[j] - alpha * stats.stddev[j];
      double hi = stats.mean[j] + alpha * stats.stddev[j];
      out[i][j] = a <= lo ? -1 : (a > hi ? 1 : 0);
    }
  return out;
}

CetdProfile cetd_profile(const RawDataTable& raw, std::span<const double> alphas,
                         const CetdOptions& opt) {
  if (alphas.empty()) fail(Errc::Validation, "cetd requires at least one alpha");
  CetdProfile p;
  p.atd = atd(raw, opt);
  p.stats = column_stats(p.atd, opt);
  p.alphas.assign(alphas.begin(), alphas.end());
  p.cetd.assign(raw.rows(), std::vector<int>(raw.cols(), 0));
  for (double a : alphas) {
    auto e = rtd(p.atd, p.stats, a);
    for (std::size_t i = 0; i < raw.rows(); ++i)
      for (std::size_t j = 0; j < raw.cols(); ++j) p.cetd[i][j] += e[i][j];
    p.rtds.push_back(std::move(e));
  }
  p.row_sums.resize(raw.rows());
  for (std::size_t i = 0; i < raw.rows(); ++i) {
    long s = 0;
    for (int v : p.cetd[i]) s += v;
    p.row_sums[i] = s;
  }
  long best = p.row_sums.front();
  for (long s : p.row_sums) best = std::max(best, s);
  for (std::size_t i = 0; i < raw.rows(); ++i)
    if (p.row_sums[i] == best) p.peak_labels.push_back(raw.row_labels[i]);
  return p;
}

}  // namespace cogmap
