#pragma once

#include <deque>
#include <memory>
#include <string>
#include <string_view>
#include <vector>

#include "vecsim/rng.hpp"
#include "vecsim/scenario.hpp"

namespace vecsim {

enum class PolicyKind { sw_ucb, d_ucb, ucb, eps_greedy, random_choice };

std::string_view policy_name(PolicyKind kind);
PolicyKind parse_policy(std::string_view name);  // throws on unknown name

struct PolicyParams {
  int window = 100;      // tau
  double beta = 0.8;     // exploration bound
  double xi = 0.2;       // exploration weight
  double discount = 0.9; // gamma
};

// Learning state shared by every index policy. update() maintains all three
// views of the history (sliding window, discounted, lifetime); each policy's
// index reads only its own.
struct PolicyState {
  explicit PolicyState(int arms);

  int arms() const { return static_cast<int>(window.size()); }
  int window_count(int arm) const {
    return static_cast<int>(window[static_cast<std::size_t>(arm)].size());
  }
  double window_mean(int arm) const;
  double lifetime_mean(int arm) const;
  double discounted_mean(int arm) const;
  double discounted_total() const;

  std::vector<std::deque<std::pair<long, double>>> window;  // (round, cost)
  std::vector<double> disc_sum;
  std::vector<double> disc_count;
  std::vector<double> life_sum;
  std::vector<long> life_count;
  long total_pulls = 0;  // C_t
};

// Records one observed cost: appends to the arm's window buffer (evicting
// entries older than round - tau across all arms), decays the discounted
// accumulators of every arm by gamma before crediting the pulled one, and
// adds to the lifetime sums.
void update(PolicyState& state, const PolicyParams& params, int arm, double cost,
            long round);

// SW-UCB cost index: windowed mean minus beta * sqrt(xi * ln(min(C_t, tau)) /
// C^m_t(tau)). Requires a pull inside the window.
double sw_ucb_index(const PolicyState& state, const PolicyParams& params, int arm);

// Discounted analog of the SW-UCB index with gamma-discounted counts.
double d_ucb_index(const PolicyState& state, const PolicyParams& params, int arm);

// Full-history index with the same (beta, xi) scaling, isolating the effect
// of the window.
double ucb_index(const PolicyState& state, const PolicyParams& params, int arm);

// Arm choice for the given policy. Index policies return the argmin of their
// index with never-pulled arms (within the window for SW-UCB) selected first;
// ties break toward the lowest arm index.
int select_arm(PolicyKind kind, const PolicyState& state, const PolicyParams& params,
               long round, Rng& rng);

// Expected extra wait of the chosen arm over the best arm at this round,
// taken from the true schedule.
double regret_increment(int chosen, const TrafficSchedule& schedule, long round);

struct RegretLedger {
  double cumulative = 0.0;
  std::vector<double> increments;
  std::vector<double> per_interval;  // summed per schedule interval

  void record(double increment, int interval);
};

// Uniform select/observe interface so the harness and the off-policy logger
// can drive any policy interchangeably.
class NetworkPolicy {
 public:
  virtual ~NetworkPolicy() = default;
  virtual int select(long round, Rng& rng) = 0;
  virtual void observe(int arm, double cost, long round) = 0;
  virtual std::string_view name() const = 0;
};

class BanditPolicy : public NetworkPolicy {
 public:
  BanditPolicy(PolicyKind kind, int arms, const PolicyParams& params);

  int select(long round, Rng& rng) override;
  void observe(int arm, double cost, long round) override;
  std::string_view name() const override { return policy_name(kind_); }
  const PolicyState& state() const { return state_; }

 private:
  PolicyKind kind_;
  PolicyParams params_;
  PolicyState state_;
};

// SW-UCB with an epsilon-smoothed selection distribution, so every arm keeps
// positive propensity and the logged data has full support:
// p(m) = (1 - s) * 1{m = ucb arm} + s / M.
class SmoothedSwUcbPolicy : public NetworkPolicy {
 public:
  SmoothedSwUcbPolicy(int arms, const PolicyParams& params, double smoothing);

  int select(long round, Rng& rng) override;
  void observe(int arm, double cost, long round) override;
  std::string_view name() const override { return "logging-sw-ucb"; }

  // Selection probability of `arm` at the time of the last select() call.
  double propensity(int arm) const;

 private:
  PolicyParams params_;
  PolicyState state_;
  double smoothing_;
  int last_greedy_ = -1;
};

std::unique_ptr<NetworkPolicy> make_policy(PolicyKind kind, int arms,
                                           const PolicyParams& params);

}  // namespace vecsim
