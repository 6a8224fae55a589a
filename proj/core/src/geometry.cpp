#include "vecsim/geometry.hpp"

#include <cmath>
#include <stdexcept>

namespace vecsim {

double distance(const Position& vehicle_pos, const Position& bs_pos, double bs_height) {
  const double dx = bs_pos.x - vehicle_pos.x;
  const double dy = bs_pos.y - vehicle_pos.y;
  return std::sqrt(bs_height * bs_height + dy * dy + dx * dx);
}

double chord_half_length(double coverage_radius, double bs_height, double delta_y) {
  const double under = coverage_radius * coverage_radius - bs_height * bs_height -
                       delta_y * delta_y;
  if (under <= 0.0) {
    throw std::domain_error("vehicle lane does not intersect BS coverage");
  }
  return std::sqrt(under);
}

double chord_half_length(const NetworkClass& net, double vehicle_y, double bs_y) {
  return chord_half_length(net.coverage_radius, net.bs_height, bs_y - vehicle_y);
}

double sojourn_distance(const Vehicle& vehicle, const Position& bs_pos, double x_prime) {
  const double dx = bs_pos.x - vehicle.pos.x;
  const bool toward = dx * static_cast<double>(vehicle.direction) > 0.0;
  return toward ? std::abs(dx) + x_prime : x_prime - std::abs(dx);
}

double sojourn_time(double delta_m, double velocity) {
  if (velocity <= 0.0) {
    throw std::domain_error("sojourn time requires positive velocity");
  }
  return delta_m / velocity;
}

SojournGeometry sojourn_geometry(const Vehicle& vehicle, const NetworkClass& net, int bs) {
  const Position& bs_pos = net.bs_positions.at(static_cast<std::size_t>(bs));
  SojournGeometry geo;
  geo.chord_half_length = chord_half_length(net, vehicle.pos.y, bs_pos.y);
  geo.sojourn_distance = sojourn_distance(vehicle, bs_pos, geo.chord_half_length);
  geo.sojourn_time = sojourn_time(geo.sojourn_distance, vehicle.velocity);
  return geo;
}

bool covers(const NetworkClass& net, int bs, const Position& vehicle_pos) {
  const Position& bs_pos = net.bs_positions.at(static_cast<std::size_t>(bs));
  return distance(vehicle_pos, bs_pos, net.bs_height) < net.coverage_radius;
}

std::vector<int> candidate_bs_set(const Vehicle& vehicle,
                                  std::span<const NetworkClass> networks,
                                  int selected_network) {
  const NetworkClass& net = networks[static_cast<std::size_t>(selected_network)];
  std::vector<int> out;
  for (int j = 0; j < static_cast<int>(net.bs_positions.size()); ++j) {
    if (covers(net, j, vehicle.pos)) out.push_back(j);
  }
  return out;
}

Vehicle advance(Vehicle vehicle, double dt, double area_length) {
  double x = vehicle.pos.x + static_cast<double>(vehicle.direction) * vehicle.velocity * dt;
  x = std::fmod(x, area_length);
  if (x < 0.0) x += area_length;
  vehicle.pos.x = x;
  return vehicle;
}

}  // namespace vecsim
