#include "vecsim/bs_selection.hpp"

#include <cmath>
#include <limits>

namespace vecsim {

int select_bs(const NetworkClass& net, std::span<const int> candidates,
              const Vehicle& vehicle, std::optional<int> cap,
              std::span<const int> occupancy) {
  int best = -1;
  double best_sojourn = -std::numeric_limits<double>::infinity();
  for (std::size_t i = 0; i < candidates.size(); ++i) {
    if (cap && occupancy[i] >= *cap) continue;
    const int bs = candidates[i];
    const double x_prime =
        chord_half_length(net, vehicle.pos.y, net.bs_positions[static_cast<std::size_t>(bs)].y);
    const double sojourn =
        sojourn_distance(vehicle, net.bs_positions[static_cast<std::size_t>(bs)], x_prime);
    if (sojourn > best_sojourn) {
      best = bs;
      best_sojourn = sojourn;
    }
  }
  if (best < 0) throw NoBsAvailable();
  return best;
}

bool classify_loss(double sojourn_s, double offload_s) {
  return sojourn_s < offload_s;
}

bool classify_loss_relay(double sojourn_s, double uplink_s) {
  return sojourn_s < uplink_s;
}

std::optional<int> relay_destination(const Vehicle& vehicle, const NetworkClass& net,
                                     int origin_bs, double area_length) {
  const double dir = static_cast<double>(vehicle.direction);
  std::optional<int> best;
  double best_ahead = std::numeric_limits<double>::infinity();
  for (int bs = 0; bs < static_cast<int>(net.bs_positions.size()); ++bs) {
    if (bs == origin_bs) continue;
    const Position& pos = net.bs_positions[static_cast<std::size_t>(bs)];
    double x_prime;
    try {
      x_prime = chord_half_length(net, vehicle.pos.y, pos.y);
    } catch (const std::domain_error&) {
      continue;  // lane never crosses this BS's coverage
    }
    // Coverage entry point along the travel direction, wrapped to the road.
    const double entry_x = pos.x - dir * x_prime;
    double ahead = std::fmod(dir * (entry_x - vehicle.pos.x), area_length);
    if (ahead < 0.0) ahead += area_length;
    if (ahead == 0.0) ahead = area_length;
    if (ahead < best_ahead) {
      best = bs;
      best_ahead = ahead;
    }
  }
  return best;
}

}  // namespace vecsim
