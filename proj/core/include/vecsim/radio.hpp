#pragma once

#include <span>

#include "vecsim/scenario.hpp"

namespace vecsim {

// One co-cell interferer term for the uplink SINR.
struct Interferer {
  bool co_cell = false;     // contributes only when inside the serving cell
  double attenuation = 0.0; // path-loss factor toward the serving BS
  double power_w = 0.0;     // transmit power
};

struct LinkBudget {
  double pathloss_attenuation = 0.0;
  double interference_w = 0.0;
  double noise_w = 0.0;
  double uplink_bps = 0.0;
  double downlink_bps = 0.0;
};

struct OffloadTiming {
  double transmit_s = 0.0;
  double compute_s = 0.0;
  double wait_s = 0.0;
  double receive_s = 0.0;
  double total() const { return transmit_s + compute_s + wait_s + receive_s; }
};

// 140.7 + 36.7 log10(d / 1 km), the urban path-loss model in dB.
double pathloss_db(double distance_m);

// Linear power attenuation 10^(-PL_dB / 10). Throws std::domain_error on
// non-positive distance.
double pathloss_attenuation(double distance_m);

// Sum of indicator * attenuation * power over co-cell interferers.
double interference_power(std::span<const Interferer> interferers);

// Shannon rate B log2(1 + S / (I + N0 B)), bits/s.
double uplink_rate(double bandwidth_hz, double attenuation, double tx_power_w,
                   double interference_w, double noise_density);
// Same with no interference (orthogonal downlink channels).
double downlink_rate(double bandwidth_hz, double attenuation, double tx_power_w,
                     double noise_density);

// ops_per_byte * upload_bytes / flops.
double compute_time(const Task& task, double flops);

// Task sizes are stored in bytes; rates are bits per second.
double transmit_time(const Task& task, double uplink_bps);
double receive_time(const Task& task, double downlink_bps);

// transmit + compute + wait + receive.
double offload_time(const Task& task, double uplink_bps, double compute_flops,
                    double wait_s, double downlink_bps);

// As offload_time, with the result forwarded over the backhaul and received
// from the destination BS instead.
double relayed_offload_time(const Task& task, double uplink_bps, double compute_flops,
                            double wait_s, double backhaul_s, double dest_downlink_bps);

}  // namespace vecsim
