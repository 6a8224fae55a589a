#pragma once

#include <optional>
#include <span>
#include <stdexcept>

#include "vecsim/geometry.hpp"
#include "vecsim/scenario.hpp"

namespace vecsim {

// Raised when no base station can serve the task; the caller computes the
// task locally.
class NoBsAvailable : public std::runtime_error {
 public:
  NoBsAvailable() : std::runtime_error("no base station available") {}
};

// Result of one offloading attempt.
struct OffloadOutcome {
  BsId bs;
  double sojourn_s = 0.0;
  double offload_s = 0.0;        // completion time of the mechanism in use
  bool lost = false;             // without relaying
  bool lost_with_relay = false;  // with the relaying mechanism
  bool relayed = false;
};

// The candidate BS with the largest remaining sojourn distance. When `cap`
// is set, candidates whose occupancy is already at the cap are excluded
// first. Throws NoBsAvailable when no candidate qualifies.
int select_bs(const NetworkClass& net, std::span<const int> candidates,
              const Vehicle& vehicle, std::optional<int> cap,
              std::span<const int> occupancy);

// Task is lost when the vehicle leaves coverage before the result returns;
// equality counts as delivered.
bool classify_loss(double sojourn_s, double offload_s);

// With relaying, a task is lost only when even the uplink transmission does
// not fit in the sojourn time.
bool classify_loss_relay(double sojourn_s, double uplink_s);

// The next BS of the same network whose coverage the vehicle enters along its
// direction of travel (wrapping at the road ends), excluding the origin.
// nullopt when no other BS of the network intersects the vehicle's lane.
std::optional<int> relay_destination(const Vehicle& vehicle, const NetworkClass& net,
                                     int origin_bs, double area_length);

}  // namespace vecsim
