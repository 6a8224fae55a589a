#include "vecsim/radio.hpp"

#include <cmath>
#include <stdexcept>

namespace vecsim {

double pathloss_db(double distance_m) {
  return 140.7 + 36.7 * std::log10(distance_m / 1000.0);
}

double pathloss_attenuation(double distance_m) {
  if (distance_m <= 0.0) {
    throw std::domain_error("path loss requires positive distance");
  }
  return std::pow(10.0, -pathloss_db(distance_m) / 10.0);
}

double interference_power(std::span<const Interferer> interferers) {
  double total = 0.0;
  for (const auto& it : interferers) {
    if (it.co_cell) total += it.attenuation * it.power_w;
  }
  return total;
}

double uplink_rate(double bandwidth_hz, double attenuation, double tx_power_w,
                   double interference_w, double noise_density) {
  const double noise_w = noise_density * bandwidth_hz;
  const double sinr = attenuation * tx_power_w / (interference_w + noise_w);
  return bandwidth_hz * std::log2(1.0 + sinr);
}

double downlink_rate(double bandwidth_hz, double attenuation, double tx_power_w,
                     double noise_density) {
  return uplink_rate(bandwidth_hz, attenuation, tx_power_w, 0.0, noise_density);
}

double compute_time(const Task& task, double flops) {
  return task.ops_per_byte * task.upload_bytes / flops;
}

double transmit_time(const Task& task, double uplink_bps) {
  return 8.0 * task.upload_bytes / uplink_bps;
}

double receive_time(const Task& task, double downlink_bps) {
  return 8.0 * task.download_bytes / downlink_bps;
}

double offload_time(const Task& task, double uplink_bps, double compute_flops,
                    double wait_s, double downlink_bps) {
  return transmit_time(task, uplink_bps) + compute_time(task, compute_flops) +
         wait_s + receive_time(task, downlink_bps);
}

double relayed_offload_time(const Task& task, double uplink_bps, double compute_flops,
                            double wait_s, double backhaul_s, double dest_downlink_bps) {
  return transmit_time(task, uplink_bps) + compute_time(task, compute_flops) +
         wait_s + backhaul_s + receive_time(task, dest_downlink_bps);
}

}  // namespace vecsim
