#pragma once

#include "vecsim/rng.hpp"

namespace vecsim {

// Poisson-Exponential congestion model of one network's edge servers within
// one stationary interval. The waiting time seen by an offloaded task is the
// backlog ahead of it: a Poisson(arrival_rate) number of queued tasks, each
// taking an Exponential(mean_service) time.
struct QueueModel {
  double arrival_rate = 0.0;  // tasks per round (lambda)
  double mean_service = 0.0;  // seconds per task (mu)
};

// lambda * mu; matches the expected per-round cost of the traffic tables.
inline double expected_wait(const QueueModel& model) {
  return model.arrival_rate * model.mean_service;
}

double sample_wait(const QueueModel& model, Rng& rng);

}  // namespace vecsim
