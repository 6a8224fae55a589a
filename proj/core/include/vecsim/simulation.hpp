#pragma once

#include <functional>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "vecsim/offpolicy.hpp"
#include "vecsim/policies.hpp"
#include "vecsim/scenario.hpp"

namespace vecsim {

// Everything runnable from the CLI: the five bandit policies plus the
// two-step off-policy pipeline.
enum class PolicyId {
  sw_ucb,
  d_ucb,
  ucb,
  eps_greedy,
  random_choice,
  off_policy,
};

std::string_view policy_id_name(PolicyId id);
PolicyId parse_policy_id(std::string_view name);

struct RoundMetrics {
  long round = 0;
  int interval = 0;
  int network = -1;
  int bs = -1;  // -1 when the task was computed locally
  double wait_s = 0.0;
  double regret_s = 0.0;
  double sojourn_s = 0.0;
  double offload_s = 0.0;
  double uplink_s = 0.0;
  bool offloaded = false;
  bool lost = false;
  bool lost_with_relay = false;
  bool relayed = false;
  bool available_all = false;
};

struct ReplicateContext {
  std::string_view policy;
  std::uint64_t seed = 0;
};

using RoundSink = std::function<void(const ReplicateContext&, const RoundMetrics&)>;

// Per-(policy, seed) outcome. Comparative statistics only count rounds where
// every network type covers the vehicle; "settled" variants additionally
// exclude the first 500 rounds after each change point.
struct ReplicateSummary {
  std::string policy;
  std::uint64_t seed = 0;
  long horizon = 0;
  RegretLedger regret;
  std::vector<std::vector<long>> selections;          // [interval][arm]
  std::vector<std::vector<long>> selections_settled;  // [interval][arm]
  std::vector<long> interval_rounds;                  // available, per interval
  std::vector<long> interval_rounds_settled;
  double total_wait_s = 0.0;
  long offloaded_rounds = 0;
  long available_rounds = 0;
  long losses = 0;
  long relay_losses = 0;
  long relays = 0;
  std::optional<OffPolicyResult> offpolicy;

  double final_avg_regret() const {
    return horizon > 0 ? regret.cumulative / static_cast<double>(horizon) : 0.0;
  }
};

struct PolicyAggregate {
  std::string policy;
  // Mean over seeds of cumulative regret / round, per round.
  std::vector<double> avg_regret_series;
  std::vector<double> final_avg_regret_per_seed;
  double final_avg_regret_mean = 0.0;
  double final_avg_regret_std = 0.0;
  std::vector<double> interval_avg_regret;              // per interval, seed mean
  std::vector<std::vector<double>> selection_fraction;  // [interval][arm]
  std::vector<double> optimal_fraction_settled;         // per interval
  double avg_wait_s = 0.0;
  long offloaded = 0;
  long losses = 0;
  long relay_losses = 0;
  double loss_rate = 0.0;
  double relay_loss_rate = 0.0;
};

struct ExperimentReport {
  std::string config_hash;
  long horizon = 0;
  std::vector<std::string> network_names;
  std::vector<long> change_points;
  std::vector<std::uint64_t> seeds;
  std::vector<PolicyAggregate> policies;
  std::vector<ReplicateSummary> replicates;
  std::vector<OffPolicyResult> offpolicy_runs;  // one per seed when run

  const PolicyAggregate& aggregate(std::string_view policy) const;
};

struct ExperimentOptions {
  std::vector<PolicyId> policies;
  int num_seeds = 10;
  RoundSink sink;  // optional per-round observer
  // When set, off-policy replicates also hand back the logging-pass records
  // (indexed by seed order).
  std::vector<std::vector<LogRecord>>* logging_records = nullptr;
};

// Seeds used for replication: sim.seed, sim.seed + 1, ...
std::vector<std::uint64_t> experiment_seeds(const ScenarioConfig& config, int count);

// Runs one policy for one seed over the configured horizon. For
// PolicyId::off_policy this is the full pipeline: smoothed SW-UCB logging
// pass, change-point detection plus per-interval target optimization, and an
// execution pass that samples the learned per-interval policies (whose rounds
// are what the summary reports).
ReplicateSummary run_replicate(const ScenarioConfig& config, PolicyId policy,
                               std::uint64_t seed, const RoundSink& sink = {},
                               std::vector<LogRecord>* logging_records = nullptr);

// All (policy, seed) replicates plus per-policy aggregation. Deterministic
// for a given (config, options.policies, options.num_seeds).
ExperimentReport run_experiment(const ScenarioConfig& config,
                                const ExperimentOptions& options);

// Threshold the simulation's detector runs at: the configured fixed critical
// value, falling back to Wilks at the configured significance.
ThresholdPolicy lrt_threshold(const ScenarioConfig& config);

}  // namespace vecsim
