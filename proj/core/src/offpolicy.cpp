#include "vecsim/offpolicy.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace vecsim {

int TargetPolicy::mode() const {
  int best = 0;
  for (int m = 1; m < static_cast<int>(probs.size()); ++m) {
    if (probs[static_cast<std::size_t>(m)] > probs[static_cast<std::size_t>(best)]) {
      best = m;
    }
  }
  return best;
}

double ips_value(std::span<const LogRecord> records, const TargetPolicy& target,
                 bool normalize) {
  double total = 0.0;
  for (const auto& rec : records) {
    if (rec.propensity <= 0.0) {
      throw std::invalid_argument("logged propensity must be positive (full support)");
    }
    total += target.probs.at(static_cast<std::size_t>(rec.arm)) / rec.propensity *
             rec.cost;
  }
  if (normalize && !records.empty()) total /= static_cast<double>(records.size());
  return total;
}

std::vector<double> per_arm_ips_cost(std::span<const LogRecord> records, int arms) {
  std::vector<double> sums(static_cast<std::size_t>(arms), 0.0);
  for (const auto& rec : records) {
    if (rec.propensity <= 0.0) {
      throw std::invalid_argument("logged propensity must be positive (full support)");
    }
    sums.at(static_cast<std::size_t>(rec.arm)) += rec.cost / rec.propensity;
  }
  return sums;
}

TargetPolicy optimize_target(std::span<const LogRecord> records, int arms,
                             double eps_floor) {
  if (eps_floor <= 0.0) {
    throw std::invalid_argument("probability floor must be strictly positive");
  }
  if (static_cast<double>(arms) * eps_floor > 1.0) {
    throw std::invalid_argument("M * eps_floor must not exceed 1");
  }

  std::vector<long> pulls(static_cast<std::size_t>(arms), 0);
  for (const auto& rec : records) pulls.at(static_cast<std::size_t>(rec.arm)) += 1;

  const std::vector<double> sums = per_arm_ips_cost(records, arms);
  int best = -1;
  for (int m = 0; m < arms; ++m) {
    if (pulls[static_cast<std::size_t>(m)] == 0) continue;  // unobserved: no estimate
    if (best < 0 || sums[static_cast<std::size_t>(m)] < sums[static_cast<std::size_t>(best)]) {
      best = m;
    }
  }
  if (best < 0) throw std::invalid_argument("no arm observed in the logged interval");

  TargetPolicy target;
  target.probs.assign(static_cast<std::size_t>(arms), eps_floor);
  target.probs[static_cast<std::size_t>(best)] =
      1.0 - static_cast<double>(arms - 1) * eps_floor;
  return target;
}

double policy_value(const TargetPolicy& target, std::span<const QueueModel> traffic) {
  double value = 0.0;
  for (std::size_t m = 0; m < traffic.size(); ++m) {
    value += target.probs.at(m) * expected_wait(traffic[m]);
  }
  return value;
}

namespace {

// Arm most pulled among records with round in [begin, end); ties -> lowest.
int mostly_selected(std::span<const LogRecord> records, int arms, long begin, long end) {
  std::vector<long> counts(static_cast<std::size_t>(arms), 0);
  for (const auto& rec : records) {
    if (rec.round >= begin && rec.round < end) {
      counts.at(static_cast<std::size_t>(rec.arm)) += 1;
    }
  }
  int best = 0;
  for (int m = 1; m < arms; ++m) {
    if (counts[static_cast<std::size_t>(m)] > counts[static_cast<std::size_t>(best)]) {
      best = m;
    }
  }
  return best;
}

std::vector<long> detect_boundaries(std::span<const LogRecord> records,
                                    const OffPolicyOptions& options) {
  std::vector<long> boundaries;
  long interval_start = 1;
  for (int upsilon = 1;; ++upsilon) {
    const double center = static_cast<double>(upsilon) * options.mean_interarrival;
    if (center - options.error_range > static_cast<double>(options.horizon)) break;
    SearchWindow window = search_window(options.mean_interarrival, options.error_range,
                                        upsilon, options.horizon);
    // Never look back into an already-closed interval.
    window.begin = std::max(window.begin, interval_start);
    if (window.begin > window.end) continue;

    long reference_end = std::min(window.begin, static_cast<long>(options.horizon) + 1);
    int watched = mostly_selected(records, options.arms, interval_start, reference_end);
    if (reference_end <= interval_start) {
      watched = mostly_selected(records, options.arms, interval_start, window.end + 1);
    }

    ChangePointDetector detector(window, options.threshold);
    std::optional<long> declared;
    for (const auto& rec : records) {
      if (rec.round < window.begin || rec.arm != watched) continue;
      if (rec.round > window.end) break;
      if ((declared = detector.feed(rec.round, rec.cost))) break;
    }
    const long boundary = declared.value_or(window.end);
    if (boundary > interval_start && boundary <= options.horizon) {
      boundaries.push_back(boundary);
      interval_start = boundary;
    }
  }
  return boundaries;
}

}  // namespace

OffPolicyResult run_offpolicy(std::span<const LogRecord> records,
                              const OffPolicyOptions& options) {
  if (options.arms < 1) throw std::invalid_argument("off-policy run needs arms >= 1");
  OffPolicyResult result;
  result.boundaries = options.oracle_boundaries
                          ? *options.oracle_boundaries
                          : detect_boundaries(records, options);
  std::sort(result.boundaries.begin(), result.boundaries.end());

  long begin = 1;
  std::vector<long> edges = result.boundaries;
  edges.push_back(options.horizon + 1);
  for (long edge : edges) {
    if (edge <= begin) continue;
    IntervalPolicy interval;
    interval.begin = begin;
    interval.end = edge;

    std::vector<LogRecord> slice;
    for (const auto& rec : records) {
      if (rec.round >= begin && rec.round < edge) slice.push_back(rec);
    }
    interval.policy = optimize_target(slice, options.arms, options.eps_floor);
    interval.ips_value = ips_value(slice, interval.policy, options.normalize);

    double truth = 0.0;
    for (const auto& rec : slice) truth += policy_value(interval.policy, rec.context);
    if (!slice.empty()) {
      truth /= static_cast<double>(slice.size());
      if (!options.normalize) truth *= static_cast<double>(slice.size());
    }
    interval.true_value = truth;

    result.intervals.push_back(std::move(interval));
    begin = edge;
  }

  for (const auto& interval : result.intervals) {
    result.average_ips += interval.ips_value;
    result.regret += interval.ips_value - interval.true_value;
  }
  if (!result.intervals.empty()) {
    result.average_ips /= static_cast<double>(result.intervals.size());
  }
  return result;
}

IntervalPolicyExecutor::IntervalPolicyExecutor(std::vector<IntervalPolicy> intervals)
    : intervals_(std::move(intervals)) {
  if (intervals_.empty()) {
    throw std::invalid_argument("executor needs at least one interval policy");
  }
}

int IntervalPolicyExecutor::select(long round, Rng& rng) {
  for (const auto& interval : intervals_) {
    if (round >= interval.begin && round < interval.end) {
      return interval.policy.sample(rng);
    }
  }
  // Rounds past the last detected boundary reuse the final policy.
  return intervals_.back().policy.sample(rng);
}

}  // namespace vecsim
