#include "vecsim/scenario.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>
#include <stdexcept>

namespace vecsim {

int TrafficSchedule::interval_index(long round) const {
  if (round < 1 || round > horizon) {
    throw std::out_of_range("round " + std::to_string(round) +
                            " outside schedule horizon [1, " +
                            std::to_string(horizon) + "]");
  }
  // Intervals are half-open [start, end); the final interval also owns
  // round == horizon.
  for (std::size_t i = 0; i < intervals.size(); ++i) {
    if (round < intervals[i].end || i + 1 == intervals.size()) {
      return static_cast<int>(i);
    }
  }
  throw std::out_of_range("schedule has no intervals");
}

const QueueModel& TrafficSchedule::params_at(long round, int network) const {
  const TrafficInterval& iv = intervals.at(static_cast<std::size_t>(interval_index(round)));
  return iv.traffic.at(static_cast<std::size_t>(network));
}

int TrafficSchedule::optimal_arm(int interval) const {
  const TrafficInterval& iv = intervals.at(static_cast<std::size_t>(interval));
  int best = 0;
  for (int m = 1; m < static_cast<int>(iv.traffic.size()); ++m) {
    if (expected_wait(iv.traffic[static_cast<std::size_t>(m)]) <
        expected_wait(iv.traffic[static_cast<std::size_t>(best)])) {
      best = m;
    }
  }
  return best;
}

TrafficSchedule make_schedule(long horizon, const std::vector<long>& change_points,
                              const std::vector<std::vector<QueueModel>>& per_network_rows,
                              double mean_interarrival, double error_range) {
  TrafficSchedule schedule;
  schedule.horizon = horizon;
  schedule.change_points = change_points;
  schedule.mean_interarrival = mean_interarrival;
  schedule.error_range = error_range;

  const std::size_t num_intervals = change_points.size() + 1;
  for (const auto& row : per_network_rows) {
    if (row.size() != num_intervals) {
      throw std::invalid_argument("traffic row length does not match interval count");
    }
  }

  long start = 1;
  for (std::size_t i = 0; i < num_intervals; ++i) {
    TrafficInterval iv;
    iv.start = start;
    iv.end = (i < change_points.size()) ? change_points[i] : horizon + 1;
    for (const auto& row : per_network_rows) {
      iv.traffic.push_back(row[i]);
    }
    schedule.intervals.push_back(std::move(iv));
    start = schedule.intervals.back().end;
  }
  return schedule;
}

void ScenarioConfig::validate() const {
  std::vector<std::string> errors;
  auto require = [&errors](bool ok, const std::string& message) {
    if (!ok) errors.push_back(message);
  };

  require(area_length_m > 0 && area_width_m > 0, "area dimensions must be positive");
  require(networks.size() >= 2, "at least two network classes are required");
  for (const auto& net : networks) {
    const std::string tag = "network '" + net.name + "': ";
    require(net.coverage_radius > net.bs_height, tag + "coverage radius must exceed BS height");
    require(net.bandwidth_hz > 0, tag + "bandwidth must be positive");
    require(net.compute_flops > 0, tag + "compute rate must be positive");
    require(!net.bs_positions.empty(), tag + "needs at least one base station");
  }
  require(vehicle.v_min > 0 && vehicle.v_max >= vehicle.v_min,
          "vehicle speed range must satisfy 0 < v_min <= v_max");
  require(vehicle.transmit_power_w > 0, "vehicle transmit power must be positive");
  require(vehicle.local_flops > 0, "vehicle compute rate must be positive");
  require(task.min_bytes > 0 && task.max_bytes >= task.min_bytes,
          "task size range must satisfy 0 < min <= max");
  require(task.download_ratio > 0, "download ratio must be positive");
  require(task.processing_flop_per_byte > 0 && task.collecting_flop_per_byte > 0,
          "task operation densities must be positive");
  require(task.processing_mix >= 0 && task.processing_mix <= 1,
          "application mix must be a probability");
  require(radio.noise_density_w_per_hz > 0, "noise density must be positive");
  require(radio.bs_transmit_power_w > 0, "BS transmit power must be positive");
  require(radio.background_interferers >= 0, "interferer count must be nonnegative");
  require(learning.window >= 1, "window length must be at least 1");
  require(learning.beta >= 0 && learning.xi >= 0, "exploration weights must be nonnegative");
  require(learning.discount > 0 && learning.discount <= 1, "discount must be in (0, 1]");
  require(learning.significance > 0 && learning.significance < 1,
          "significance level must be in (0, 1)");
  require(learning.eps_floor > 0, "probability floor must be strictly positive");
  require(networks.empty() || learning.eps_floor * static_cast<double>(networks.size()) <= 1.0,
          "probability floor too large: M * eps_floor must not exceed 1");
  require(learning.logging_smoothing > 0 && learning.logging_smoothing < 1,
          "logging smoothing must be in (0, 1)");
  require(relay.backhaul_s >= 0, "backhaul time must be nonnegative");
  require(sim.round_duration_s > 0, "round duration must be positive");
  require(!sim.bs_cap || *sim.bs_cap >= 1, "BS cap must be at least 1 when set");
  require(sim.background_occupancy >= 0, "background occupancy must be nonnegative");

  // Schedule: intervals must partition [1, horizon] and match network count.
  require(schedule.horizon >= 0, "horizon must be nonnegative");
  if (schedule.horizon > 0) {
    require(!schedule.intervals.empty(), "schedule has no intervals");
    long expect_start = 1;
    for (std::size_t i = 0; i < schedule.intervals.size(); ++i) {
      const auto& iv = schedule.intervals[i];
      if (iv.start != expect_start) {
        errors.push_back("schedule intervals do not partition the horizon");
        break;
      }
      require(iv.end > iv.start, "schedule interval is empty");
      require(iv.traffic.size() == networks.size(),
              "interval traffic row does not match network count");
      expect_start = iv.end;
    }
    if (!schedule.intervals.empty()) {
      require(schedule.intervals.back().end == schedule.horizon + 1,
              "last schedule interval must end at the horizon");
    }
    require(schedule.change_points.size() + 1 == schedule.intervals.size(),
            "change-point count must be interval count minus one");
    for (std::size_t i = 0; i < schedule.change_points.size(); ++i) {
      require(i + 1 < schedule.intervals.size() &&
                  schedule.change_points[i] == schedule.intervals[i + 1].start,
              "change points must coincide with interval boundaries");
    }
    for (const auto& iv : schedule.intervals) {
      for (const auto& qm : iv.traffic) {
        require(qm.arrival_rate >= 0, "arrival rate must be nonnegative");
        require(qm.mean_service > 0, "mean service time must be positive");
      }
    }
  }

  if (!errors.empty()) {
    std::ostringstream oss;
    oss << "invalid scenario config (" << errors.size() << " problem(s)):";
    for (const auto& e : errors) oss << "\n  - " << e;
    throw std::invalid_argument(oss.str());
  }
}

std::vector<Position> place_bs_row(int count, double length,
                                   const std::vector<double>& y_cycle) {
  std::vector<Position> out;
  out.reserve(static_cast<std::size_t>(count));
  for (int j = 0; j < count; ++j) {
    const double x = (static_cast<double>(j) + 0.5) * length / static_cast<double>(count);
    const double y = y_cycle[static_cast<std::size_t>(j) % y_cycle.size()];
    out.push_back({x, y});
  }
  return out;
}

ScenarioConfig paper_config() {
  ScenarioConfig config;
  config.area_length_m = 1000.0;
  config.area_width_m = 50.0;

  const double eu_flops = 15e9;
  NetworkClass macro{"macro", 500.0, 20.0, 1e7, 4 * eu_flops,
                     place_bs_row(2, config.area_length_m, {0.0, 50.0})};
  NetworkClass micro{"micro", 200.0, 6.0, 1e7, 3 * eu_flops,
                     place_bs_row(5, config.area_length_m, {0.0, 50.0})};
  NetworkClass pico{"pico", 100.0, 3.0, 1e7, 2 * eu_flops,
                    place_bs_row(10, config.area_length_m, {0.0, 50.0, 25.0})};
  config.networks = {macro, micro, pico};

  config.vehicle.v_min = 10.0;
  config.vehicle.v_max = 20.0;
  config.vehicle.transmit_power_w = 0.2;
  config.vehicle.local_flops = eu_flops;

  config.task = TaskParams{};

  const std::vector<std::vector<QueueModel>> rows = {
      // macro
      {{7, 0.4}, {3, 0.3}, {10, 0.5}, {3, 0.3}, {7, 0.4}},
      // micro
      {{3, 0.3}, {10, 0.5}, {7, 0.4}, {10, 0.5}, {10, 0.5}},
      // pico
      {{10, 0.5}, {7, 0.4}, {3, 0.3}, {7, 0.4}, {3, 0.3}},
  };
  config.schedule =
      make_schedule(25000, {5000, 10000, 15000, 20000}, rows, 5000.0, 500.0);

  config.radio = RadioParams{};
  config.learning = LearningParams{};
  // Scan-calibrated critical value for the sequential LRT (see the
  // calibrate-lrt tool); the raw chi-square(1) quantile is far too permissive
  // for a full-window scan.
  config.learning.lrt_critical = 26.3;
  config.relay = RelayParams{};
  config.sim = SimParams{};
  return config;
}

Task generate_task(Rng& rng, const TaskParams& params) {
  Task task;
  task.upload_bytes = rng.uniform(params.min_bytes, params.max_bytes);
  task.kind = rng.bernoulli(params.processing_mix) ? AppKind::processing
                                                   : AppKind::collecting;
  task.ops_per_byte = task.kind == AppKind::processing
                          ? params.processing_flop_per_byte
                          : params.collecting_flop_per_byte;
  task.download_bytes = task.upload_bytes / params.download_ratio;
  return task;
}

Vehicle spawn_vehicle(Rng& rng, const ScenarioConfig& config) {
  Vehicle v;
  v.pos.x = rng.uniform(0.0, config.area_length_m);
  v.pos.y = rng.uniform(0.0, config.area_width_m);
  v.velocity = rng.uniform(config.vehicle.v_min, config.vehicle.v_max);
  v.direction = rng.bernoulli(0.5) ? 1 : -1;
  v.transmit_power_w = config.vehicle.transmit_power_w;
  v.local_flops = config.vehicle.local_flops;
  return v;
}

}  // namespace vecsim
