#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "vecsim/queue_model.hpp"
#include "vecsim/rng.hpp"

namespace vecsim {

struct Position {
  double x = 0.0;
  double y = 0.0;
};

// Identifies one base station: network class index + BS index within it.
struct BsId {
  int network = -1;
  int bs = -1;
};

// A homogeneous tier of base stations (e.g. Macro/Micro/Pico). All BSs of a
// class share coverage radius, height, bandwidth and compute rate.
struct NetworkClass {
  std::string name;
  double coverage_radius = 0.0;           // R_m, meters
  double bs_height = 0.0;                 // meters
  double bandwidth_hz = 0.0;              // per-channel bandwidth
  double compute_flops = 0.0;             // edge server FLOP/s
  std::vector<Position> bs_positions;
};

struct Vehicle {
  Position pos;
  double velocity = 0.0;        // m/s, fixed for a run
  int direction = 1;            // +1 or -1 along the road axis
  double transmit_power_w = 0.2;
  double local_flops = 15e9;
};

enum class AppKind { processing, collecting };

struct Task {
  double upload_bytes = 0.0;
  double download_bytes = 0.0;
  double ops_per_byte = 0.0;  // FLOP needed per uploaded byte
  AppKind kind = AppKind::processing;
};

// One stationary segment of the piece-wise stationary traffic process.
// Rounds are 1-based; an interval covers [start, end).
struct TrafficInterval {
  long start = 1;
  long end = 1;
  std::vector<QueueModel> traffic;  // indexed by network
};

struct TrafficSchedule {
  long horizon = 0;                 // T, rounds
  std::vector<TrafficInterval> intervals;
  std::vector<long> change_points;  // interval boundaries, ascending
  double mean_interarrival = 0.0;   // expected change-point spacing (rounds)
  double error_range = 0.0;         // +/- uncertainty on each change point

  // Index of the interval containing `round`; throws std::out_of_range when
  // round is outside [1, horizon].
  int interval_index(long round) const;
  const QueueModel& params_at(long round, int network) const;
  // Arm with the smallest expected wait in the given interval (ties -> lowest
  // index).
  int optimal_arm(int interval) const;
  int num_networks() const {
    return intervals.empty() ? 0 : static_cast<int>(intervals.front().traffic.size());
  }
};

// Builds the interval list from per-network parameter rows, one row entry per
// interval delimited by `change_points` over [1, horizon].
TrafficSchedule make_schedule(long horizon, const std::vector<long>& change_points,
                              const std::vector<std::vector<QueueModel>>& per_network_rows,
                              double mean_interarrival, double error_range);

struct VehicleParams {
  double v_min = 10.0;
  double v_max = 20.0;
  double transmit_power_w = 0.2;
  double local_flops = 15e9;
};

struct TaskParams {
  double min_bytes = 1e6;
  double max_bytes = 5e6;
  double download_ratio = 5.0;             // upload / download
  double processing_flop_per_byte = 1e4;   // 10 GFLOP per MB
  double collecting_flop_per_byte = 1e3;   // 1 GFLOP per MB
  double processing_mix = 0.5;             // P(task is processing kind)
};

struct RadioParams {
  double noise_density_w_per_hz = 2e-21;  // N0; noise power is N0 * B
  double bs_transmit_power_w = 1.0;
  int background_interferers = 0;         // co-cell interferers per round
};

struct LearningParams {
  int window = 100;                  // SW-UCB tau
  double beta = 0.8;                 // exploration bound
  double xi = 0.2;                   // exploration weight
  double discount = 0.9;             // D-UCB gamma
  double significance = 0.05;        // LRT alpha
  double eps_floor = 0.01;           // target-policy probability floor
  double logging_smoothing = 0.05;   // logging-policy uniform mass
  // Critical value on the -2 ln(Lambda) scale for the sequential LRT scan.
  // When unset the chi-square(1) quantile at `significance` is used.
  std::optional<double> lrt_critical;
};

struct RelayParams {
  bool enabled = true;
  double backhaul_s = 0.05;  // BS-to-BS result forwarding time
};

struct SimParams {
  double round_duration_s = 1.0;
  std::uint64_t seed = 1;
  std::optional<int> bs_cap;          // max EUs per BS; unset = unconstrained
  double background_occupancy = 2.0;  // mean synthetic EUs per BS when capped
};

struct ScenarioConfig {
  double area_length_m = 1000.0;
  double area_width_m = 50.0;
  std::vector<NetworkClass> networks;
  VehicleParams vehicle;
  TaskParams task;
  TrafficSchedule schedule;
  RadioParams radio;
  LearningParams learning;
  RelayParams relay;
  SimParams sim;

  int num_networks() const { return static_cast<int>(networks.size()); }
  // Throws std::invalid_argument listing every violated constraint.
  void validate() const;
};

// The scenario of the reference experiment set: 1000x50 m road, three network
// classes, the five-interval traffic schedule, and the tuned learning
// parameters.
ScenarioConfig paper_config();

// Evenly spaced BS row: x_j = (j + 0.5) * length / count, y cycling through
// the given roadside offsets.
std::vector<Position> place_bs_row(int count, double length,
                                   const std::vector<double>& y_cycle);

Task generate_task(Rng& rng, const TaskParams& params);

Vehicle spawn_vehicle(Rng& rng, const ScenarioConfig& config);

}  // namespace vecsim
