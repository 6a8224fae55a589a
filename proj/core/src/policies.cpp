#include "vecsim/policies.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>

namespace vecsim {

namespace {
// Discounted counts below this are treated as "never pulled": the decayed
// history carries no usable information and the exploration term would blow
// up anyway.
constexpr double kDiscountedCountFloor = 1e-12;
}  // namespace

std::string_view policy_name(PolicyKind kind) {
  switch (kind) {
    case PolicyKind::sw_ucb: return "sw-ucb";
    case PolicyKind::d_ucb: return "d-ucb";
    case PolicyKind::ucb: return "ucb";
    case PolicyKind::eps_greedy: return "eps-greedy";
    case PolicyKind::random_choice: return "random";
  }
  return "unknown";
}

PolicyKind parse_policy(std::string_view name) {
  if (name == "sw-ucb") return PolicyKind::sw_ucb;
  if (name == "d-ucb") return PolicyKind::d_ucb;
  if (name == "ucb") return PolicyKind::ucb;
  if (name == "eps-greedy") return PolicyKind::eps_greedy;
  if (name == "random") return PolicyKind::random_choice;
  throw std::invalid_argument("unknown policy: " + std::string(name));
}

PolicyState::PolicyState(int arms)
    : window(static_cast<std::size_t>(arms)),
      disc_sum(static_cast<std::size_t>(arms), 0.0),
      disc_count(static_cast<std::size_t>(arms), 0.0),
      life_sum(static_cast<std::size_t>(arms), 0.0),
      life_count(static_cast<std::size_t>(arms), 0) {
  if (arms < 1) throw std::invalid_argument("policy needs at least one arm");
}

double PolicyState::window_mean(int arm) const {
  const auto& buf = window[static_cast<std::size_t>(arm)];
  if (buf.empty()) throw std::logic_error("window mean of an arm with no samples");
  double sum = 0.0;
  for (const auto& [round, cost] : buf) sum += cost;
  return sum / static_cast<double>(buf.size());
}

double PolicyState::lifetime_mean(int arm) const {
  const auto idx = static_cast<std::size_t>(arm);
  if (life_count[idx] == 0) throw std::logic_error("lifetime mean of an unpulled arm");
  return life_sum[idx] / static_cast<double>(life_count[idx]);
}

double PolicyState::discounted_mean(int arm) const {
  const auto idx = static_cast<std::size_t>(arm);
  if (disc_count[idx] <= kDiscountedCountFloor) {
    throw std::logic_error("discounted mean of an unpulled arm");
  }
  return disc_sum[idx] / disc_count[idx];
}

double PolicyState::discounted_total() const {
  double total = 0.0;
  for (double c : disc_count) total += c;
  return total;
}

void update(PolicyState& state, const PolicyParams& params, int arm, double cost,
            long round) {
  if (cost < 0.0) throw std::invalid_argument("cost must be nonnegative");
  const auto idx = static_cast<std::size_t>(arm);

  // Sliding window: keep only rounds in (round - tau, round].
  state.window[idx].emplace_back(round, cost);
  const long cutoff = round - static_cast<long>(params.window);
  for (auto& buf : state.window) {
    while (!buf.empty() && buf.front().first <= cutoff) buf.pop_front();
  }

  // Discounted history: one decay step per observation round.
  for (std::size_t m = 0; m < state.disc_sum.size(); ++m) {
    state.disc_sum[m] *= params.discount;
    state.disc_count[m] *= params.discount;
  }
  state.disc_sum[idx] += cost;
  state.disc_count[idx] += 1.0;

  state.life_sum[idx] += cost;
  state.life_count[idx] += 1;
  state.total_pulls += 1;
}

double sw_ucb_index(const PolicyState& state, const PolicyParams& params, int arm) {
  const int count = state.window_count(arm);
  if (count == 0) throw std::logic_error("SW-UCB index of an arm outside the window");
  const double effective =
      static_cast<double>(std::min<long>(state.total_pulls, params.window));
  const double bonus =
      params.beta * std::sqrt(params.xi * std::log(effective) / static_cast<double>(count));
  return state.window_mean(arm) - bonus;
}

double d_ucb_index(const PolicyState& state, const PolicyParams& params, int arm) {
  const auto idx = static_cast<std::size_t>(arm);
  const double count = state.disc_count[idx];
  if (count <= kDiscountedCountFloor) {
    throw std::logic_error("D-UCB index of an arm with no discounted history");
  }
  const double bonus =
      params.beta * std::sqrt(params.xi * std::log(state.discounted_total()) / count);
  return state.disc_sum[idx] / count - bonus;
}

double ucb_index(const PolicyState& state, const PolicyParams& params, int arm) {
  const auto idx = static_cast<std::size_t>(arm);
  if (state.life_count[idx] == 0) throw std::logic_error("UCB index of an unpulled arm");
  const double bonus =
      params.beta * std::sqrt(params.xi * std::log(static_cast<double>(state.total_pulls)) /
                              static_cast<double>(state.life_count[idx]));
  return state.lifetime_mean(arm) - bonus;
}

namespace {

template <typename Pulled, typename Index>
int argmin_with_init_sweep(int arms, Pulled pulled, Index index) {
  for (int m = 0; m < arms; ++m) {
    if (!pulled(m)) return m;
  }
  int best = 0;
  double best_index = index(0);
  for (int m = 1; m < arms; ++m) {
    const double v = index(m);
    if (v < best_index) {
      best = m;
      best_index = v;
    }
  }
  return best;
}

}  // namespace

int select_arm(PolicyKind kind, const PolicyState& state, const PolicyParams& params,
               long round, Rng& rng) {
  const int arms = state.arms();
  if (arms < 2) throw std::invalid_argument("arm selection needs at least two arms");

  switch (kind) {
    case PolicyKind::sw_ucb:
      return argmin_with_init_sweep(
          arms, [&](int m) { return state.window_count(m) > 0; },
          [&](int m) { return sw_ucb_index(state, params, m); });
    case PolicyKind::d_ucb:
      return argmin_with_init_sweep(
          arms,
          [&](int m) {
            return state.disc_count[static_cast<std::size_t>(m)] > kDiscountedCountFloor;
          },
          [&](int m) { return d_ucb_index(state, params, m); });
    case PolicyKind::ucb:
      return argmin_with_init_sweep(
          arms, [&](int m) { return state.life_count[static_cast<std::size_t>(m)] > 0; },
          [&](int m) { return ucb_index(state, params, m); });
    case PolicyKind::eps_greedy: {
      for (int m = 0; m < arms; ++m) {
        if (state.life_count[static_cast<std::size_t>(m)] == 0) return m;
      }
      const double eps = 1.0 / static_cast<double>(std::max<long>(round, 1));
      if (rng.bernoulli(eps)) {
        return static_cast<int>(rng.uniform_index(static_cast<std::uint64_t>(arms)));
      }
      return argmin_with_init_sweep(
          arms, [](int) { return true; },
          [&](int m) { return state.lifetime_mean(m); });
    }
    case PolicyKind::random_choice:
      return static_cast<int>(rng.uniform_index(static_cast<std::uint64_t>(arms)));
  }
  throw std::logic_error("unreachable policy kind");
}

double regret_increment(int chosen, const TrafficSchedule& schedule, long round) {
  const int interval = schedule.interval_index(round);
  const auto& traffic = schedule.intervals[static_cast<std::size_t>(interval)].traffic;
  double best = std::numeric_limits<double>::infinity();
  for (const auto& qm : traffic) best = std::min(best, expected_wait(qm));
  return expected_wait(traffic[static_cast<std::size_t>(chosen)]) - best;
}

void RegretLedger::record(double increment, int interval) {
  cumulative += increment;
  increments.push_back(increment);
  if (per_interval.size() <= static_cast<std::size_t>(interval)) {
    per_interval.resize(static_cast<std::size_t>(interval) + 1, 0.0);
  }
  per_interval[static_cast<std::size_t>(interval)] += increment;
}

BanditPolicy::BanditPolicy(PolicyKind kind, int arms, const PolicyParams& params)
    : kind_(kind), params_(params), state_(arms) {}

int BanditPolicy::select(long round, Rng& rng) {
  return select_arm(kind_, state_, params_, round, rng);
}

void BanditPolicy::observe(int arm, double cost, long round) {
  update(state_, params_, arm, cost, round);
}

SmoothedSwUcbPolicy::SmoothedSwUcbPolicy(int arms, const PolicyParams& params,
                                         double smoothing)
    : params_(params), state_(arms), smoothing_(smoothing) {
  if (smoothing <= 0.0 || smoothing >= 1.0) {
    throw std::invalid_argument("smoothing must be in (0, 1)");
  }
}

int SmoothedSwUcbPolicy::select(long round, Rng& rng) {
  last_greedy_ = select_arm(PolicyKind::sw_ucb, state_, params_, round, rng);
  if (rng.bernoulli(1.0 - smoothing_)) return last_greedy_;
  return static_cast<int>(rng.uniform_index(static_cast<std::uint64_t>(state_.arms())));
}

void SmoothedSwUcbPolicy::observe(int arm, double cost, long round) {
  update(state_, params_, arm, cost, round);
}

double SmoothedSwUcbPolicy::propensity(int arm) const {
  if (last_greedy_ < 0) throw std::logic_error("propensity queried before any selection");
  const double base = smoothing_ / static_cast<double>(state_.arms());
  return arm == last_greedy_ ? 1.0 - smoothing_ + base : base;
}

std::unique_ptr<NetworkPolicy> make_policy(PolicyKind kind, int arms,
                                           const PolicyParams& params) {
  return std::make_unique<BanditPolicy>(kind, arms, params);
}

}  // namespace vecsim
