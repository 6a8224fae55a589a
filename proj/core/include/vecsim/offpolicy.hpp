#pragma once

#include <optional>
#include <span>
#include <vector>

#include "vecsim/changepoint.hpp"
#include "vecsim/policies.hpp"
#include "vecsim/queue_model.hpp"
#include "vecsim/rng.hpp"

namespace vecsim {

// One logged decision of the logging policy.
struct LogRecord {
  long round = 0;
  std::vector<QueueModel> context;  // per-network (lambda, mu) in force
  int arm = -1;
  double cost = 0.0;
  double propensity = 0.0;  // logging probability of the chosen arm, > 0
};

// Per-interval stochastic network-selection policy.
struct TargetPolicy {
  std::vector<double> probs;

  int sample(Rng& rng) const { return rng.categorical(probs); }
  int mode() const;  // highest-probability arm, ties -> lowest index
};

// Importance-weighted value of `target` on the given records:
// sum_t [pi_w(m_t) / pi_0(m_t)] * cost_t, divided by the record count when
// `normalize` is set. Throws on a non-positive logged propensity (full
// support violation).
double ips_value(std::span<const LogRecord> records, const TargetPolicy& target,
                 bool normalize);

// Per-arm importance-weighted cost sums S_m = sum_{t: m_t = m} cost_t / pi_0.
std::vector<double> per_arm_ips_cost(std::span<const LogRecord> records, int arms);

// Exact solution of the floor-constrained linear program: probability
// 1 - (M - 1) * eps_floor on the arm with the smallest S_m (among arms that
// were actually logged; ties -> lowest index) and eps_floor elsewhere.
// Throws when eps_floor is not strictly positive, when M * eps_floor > 1, or
// when no arm was logged.
TargetPolicy optimize_target(std::span<const LogRecord> records, int arms,
                             double eps_floor);

struct OffPolicyOptions {
  double mean_interarrival = 5000.0;  // change-point prior mu_b
  double error_range = 500.0;         // prior half-width delta
  ThresholdPolicy threshold{};
  double eps_floor = 0.01;
  bool normalize = true;
  int arms = 0;
  long horizon = 0;
  // When set, detection is skipped and these rounds are used as interval
  // boundaries directly.
  std::optional<std::vector<long>> oracle_boundaries;
};

struct IntervalPolicy {
  long begin = 0;  // first round of the interval
  long end = 0;    // one past the last round
  TargetPolicy policy;
  double ips_value = 0.0;   // estimated value of `policy` on this interval
  double true_value = 0.0;  // value under the logged contexts
};

struct OffPolicyResult {
  std::vector<long> boundaries;  // declared change rounds, ascending
  std::vector<IntervalPolicy> intervals;
  double average_ips = 0.0;  // mean of per-interval IPS values
  double regret = 0.0;       // sum over intervals of (estimate - true value)
};

// The two-step off-policy pipeline: locate change points with the scheduled
// LRT windows (fed with the mostly-selected arm's logged costs), then solve
// the per-interval target-policy program from the enclosed records.
// A window that closes without a detection falls back to its upper edge as
// the boundary.
OffPolicyResult run_offpolicy(std::span<const LogRecord> records,
                              const OffPolicyOptions& options);

// Closed-form value of a policy under known traffic: sum_m pi(m) lambda_m mu_m.
double policy_value(const TargetPolicy& target, std::span<const QueueModel> traffic);

// Executes per-interval target policies: each round samples from the policy
// of the interval containing it. Used to replay an off-policy solution
// through the simulator.
class IntervalPolicyExecutor : public NetworkPolicy {
 public:
  explicit IntervalPolicyExecutor(std::vector<IntervalPolicy> intervals);

  int select(long round, Rng& rng) override;
  void observe(int /*arm*/, double /*cost*/, long /*round*/) override {}
  std::string_view name() const override { return "off-policy"; }

 private:
  std::vector<IntervalPolicy> intervals_;
};

}  // namespace vecsim
