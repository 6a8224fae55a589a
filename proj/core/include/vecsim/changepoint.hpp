#pragma once

#include <cstddef>
#include <optional>
#include <span>
#include <utility>
#include <vector>

namespace vecsim {

// Rounds (inclusive) in which the next change point is expected:
// [upsilon * mu_b - delta, upsilon * mu_b + delta], clipped to the horizon.
struct SearchWindow {
  long begin = 0;
  long end = 0;
  bool contains(long round) const { return round >= begin && round <= end; }
};

SearchWindow search_window(double mean_interarrival, double error_range, int upsilon,
                           long horizon);

// Likelihood ratio of "one mean shift after `split` samples" against "no
// change": (split SSE / pooled SSE)^(n/2), in [0, 1]. split counts samples in
// the first segment and must satisfy 5 <= split <= n - 5. A pooled SSE of 0
// (all samples identical) gives 1: no evidence of change.
double lrt_statistic(std::span<const double> samples, std::size_t split);

// -2 ln of the above, computed in log space so long series cannot underflow.
double lrt_log_statistic(std::span<const double> samples, std::size_t split);

// The admissible split minimizing the pooled split variance (equivalently
// minimizing Lambda); ties resolve to the smallest split. Requires at least
// 10 samples.
std::size_t best_split(std::span<const double> samples);

// Decision rule on the -2 ln(Lambda) scale.
struct ThresholdPolicy {
  double critical = 0.0;

  // Wilks' asymptotic threshold: the chi-square(1) quantile at 1 - alpha.
  // Valid for a single test at a fixed split; a sequential scan over all
  // splits needs the calibrated variant below (see the calibrate-lrt tool).
  static ThresholdPolicy wilks(double alpha);
  static ThresholdPolicy fixed(double critical);
};

// Sequential detector for one search window. Feed per-round costs in round
// order; the first round whose scan statistic exceeds the threshold is
// declared as the change. Testing starts once 10 samples have arrived.
class ChangePointDetector {
 public:
  ChangePointDetector(SearchWindow window, ThresholdPolicy threshold);

  // Returns the declared change round on the first threshold crossing,
  // nullopt otherwise. Rounds outside the window are ignored.
  std::optional<long> feed(long round, double cost);

  bool fired() const { return fired_; }
  bool exhausted(long current_round) const { return current_round > window_.end; }
  const SearchWindow& window() const { return window_; }
  std::size_t sample_count() const { return samples_.size(); }

 private:
  SearchWindow window_;
  ThresholdPolicy threshold_;
  std::vector<double> samples_;
  std::vector<double> prefix_sum_;
  std::vector<double> prefix_sq_;
  bool fired_ = false;
};

// Convenience batch form over an ordered (round, cost) stream.
std::optional<long> detect(std::span<const std::pair<long, double>> stream,
                           SearchWindow window, ThresholdPolicy threshold);

}  // namespace vecsim
