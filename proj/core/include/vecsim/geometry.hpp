#pragma once

#include <span>
#include <vector>

#include "vecsim/scenario.hpp"

namespace vecsim {

// Derived in-coverage geometry of a vehicle relative to one BS.
struct SojournGeometry {
  double chord_half_length = 0.0;  // x': half the lane chord through the disc
  double sojourn_distance = 0.0;   // remaining in-coverage travel, meters
  double sojourn_time = 0.0;       // seconds at current speed
};

// 3-D EU-to-BS distance: sqrt(h^2 + dy^2 + dx^2).
double distance(const Position& vehicle_pos, const Position& bs_pos, double bs_height);

// Half-length of the chord the vehicle's lane cuts through the coverage
// sphere: sqrt(R^2 - h^2 - dy^2). Throws std::domain_error when the lane does
// not intersect the coverage (R^2 <= h^2 + dy^2).
double chord_half_length(double coverage_radius, double bs_height, double delta_y);
double chord_half_length(const NetworkClass& net, double vehicle_y, double bs_y);

// Remaining travel distance inside the coverage disc. Moving toward the BS's
// axial position: |dx| + x'; moving away (or directly underneath): x' - |dx|.
double sojourn_distance(const Vehicle& vehicle, const Position& bs_pos, double x_prime);

// delta / velocity. Throws std::domain_error on non-positive velocity.
double sojourn_time(double delta_m, double velocity);

SojournGeometry sojourn_geometry(const Vehicle& vehicle, const NetworkClass& net, int bs);

bool covers(const NetworkClass& net, int bs, const Position& vehicle_pos);

// BS indices of the selected network with d < R_m (strict). May be empty.
std::vector<int> candidate_bs_set(const Vehicle& vehicle,
                                  std::span<const NetworkClass> networks,
                                  int selected_network);

// Advances the vehicle by dt seconds along its direction, wrapping at the
// road ends so the mobility process stays stationary.
Vehicle advance(Vehicle vehicle, double dt, double area_length);

}  // namespace vecsim
