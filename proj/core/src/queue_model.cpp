#include "vecsim/queue_model.hpp"

namespace vecsim {

double sample_wait(const QueueModel& model, Rng& rng) {
  const long backlog = rng.poisson(model.arrival_rate);
  double wait = 0.0;
  for (long i = 0; i < backlog; ++i) {
    wait += rng.exponential(model.mean_service);
  }
  return wait;
}

}  // namespace vecsim
