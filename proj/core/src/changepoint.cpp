#include "vecsim/changepoint.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>

#include "vecsim/stats.hpp"

namespace vecsim {

namespace {

constexpr std::size_t kEdgeGap = 5;   // split must stay 5 samples from each end
constexpr std::size_t kMinSamples = 2 * kEdgeGap;

void check_split(std::size_t n, std::size_t split) {
  if (n < kMinSamples) throw std::invalid_argument("LRT needs at least 10 samples");
  if (split < kEdgeGap || split > n - kEdgeGap) {
    throw std::invalid_argument("split must be at least 5 samples from each end");
  }
}

struct SseParts {
  double split_sse = 0.0;
  double pooled_sse = 0.0;
};

// SSEs from prefix sums; prefix_sum[i] holds the sum of the first i samples.
SseParts sse_parts(std::span<const double> prefix_sum, std::span<const double> prefix_sq,
                   std::size_t n, std::size_t split) {
  const double total = prefix_sum[n];
  const double total_sq = prefix_sq[n];
  const double left_n = static_cast<double>(split);
  const double right_n = static_cast<double>(n - split);
  const double left_sum = prefix_sum[split];
  const double right_sum = total - left_sum;
  SseParts parts;
  parts.pooled_sse = total_sq - total * total / static_cast<double>(n);
  parts.split_sse = (prefix_sq[split] - left_sum * left_sum / left_n) +
                    (total_sq - prefix_sq[split] - right_sum * right_sum / right_n);
  return parts;
}

void build_prefixes(std::span<const double> samples, std::vector<double>& prefix_sum,
                    std::vector<double>& prefix_sq) {
  prefix_sum.assign(samples.size() + 1, 0.0);
  prefix_sq.assign(samples.size() + 1, 0.0);
  for (std::size_t i = 0; i < samples.size(); ++i) {
    prefix_sum[i + 1] = prefix_sum[i] + samples[i];
    prefix_sq[i + 1] = prefix_sq[i] + samples[i] * samples[i];
  }
}

std::size_t best_split_from_prefixes(std::span<const double> prefix_sum,
                                     std::span<const double> prefix_sq, std::size_t n) {
  std::size_t best = kEdgeGap;
  double best_sse = sse_parts(prefix_sum, prefix_sq, n, kEdgeGap).split_sse;
  for (std::size_t split = kEdgeGap + 1; split <= n - kEdgeGap; ++split) {
    const double sse = sse_parts(prefix_sum, prefix_sq, n, split).split_sse;
    if (sse < best_sse) {
      best = split;
      best_sse = sse;
    }
  }
  return best;
}

double log_statistic(const SseParts& parts, std::size_t n) {
  if (parts.pooled_sse <= 0.0) return 0.0;  // identical samples: Lambda = 1
  if (parts.split_sse <= 0.0) return std::numeric_limits<double>::infinity();
  const double ratio = std::min(parts.split_sse / parts.pooled_sse, 1.0);
  return -static_cast<double>(n) * std::log(ratio);
}

}  // namespace

SearchWindow search_window(double mean_interarrival, double error_range, int upsilon,
                           long horizon) {
  if (upsilon < 1) throw std::invalid_argument("change-point index starts at 1");
  const double center = static_cast<double>(upsilon) * mean_interarrival;
  SearchWindow window;
  window.begin = std::max<long>(1, static_cast<long>(std::llround(center - error_range)));
  window.end = std::min<long>(horizon, static_cast<long>(std::llround(center + error_range)));
  return window;
}

double lrt_statistic(std::span<const double> samples, std::size_t split) {
  return std::exp(-0.5 * lrt_log_statistic(samples, split));
}

double lrt_log_statistic(std::span<const double> samples, std::size_t split) {
  check_split(samples.size(), split);
  std::vector<double> prefix_sum, prefix_sq;
  build_prefixes(samples, prefix_sum, prefix_sq);
  return log_statistic(sse_parts(prefix_sum, prefix_sq, samples.size(), split),
                       samples.size());
}

std::size_t best_split(std::span<const double> samples) {
  if (samples.size() < kMinSamples) {
    throw std::invalid_argument("best split needs at least 10 samples");
  }
  std::vector<double> prefix_sum, prefix_sq;
  build_prefixes(samples, prefix_sum, prefix_sq);
  return best_split_from_prefixes(prefix_sum, prefix_sq, samples.size());
}

ThresholdPolicy ThresholdPolicy::wilks(double alpha) {
  return ThresholdPolicy{chi2_quantile_1df(1.0 - alpha)};
}

ThresholdPolicy ThresholdPolicy::fixed(double critical) {
  return ThresholdPolicy{critical};
}

ChangePointDetector::ChangePointDetector(SearchWindow window, ThresholdPolicy threshold)
    : window_(window), threshold_(threshold) {
  prefix_sum_.push_back(0.0);
  prefix_sq_.push_back(0.0);
}

std::optional<long> ChangePointDetector::feed(long round, double cost) {
  if (fired_ || !window_.contains(round)) return std::nullopt;
  samples_.push_back(cost);
  prefix_sum_.push_back(prefix_sum_.back() + cost);
  prefix_sq_.push_back(prefix_sq_.back() + cost * cost);

  const std::size_t n = samples_.size();
  if (n < kMinSamples) return std::nullopt;
  const std::size_t split = best_split_from_prefixes(prefix_sum_, prefix_sq_, n);
  const double stat = log_statistic(sse_parts(prefix_sum_, prefix_sq_, n, split), n);
  if (stat > threshold_.critical) {
    fired_ = true;
    return round;
  }
  return std::nullopt;
}

std::optional<long> detect(std::span<const std::pair<long, double>> stream,
                           SearchWindow window, ThresholdPolicy threshold) {
  ChangePointDetector detector(window, threshold);
  for (const auto& [round, cost] : stream) {
    if (auto declared = detector.feed(round, cost)) return declared;
  }
  return std::nullopt;
}

}  // namespace vecsim
