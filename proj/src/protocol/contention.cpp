#include "locate/protocol/contention.hpp"

#include <cmath>
#include <stdexcept>
#include <string>

namespace locate::protocol {

void ProtocolParams::validate() const {
  auto fail = [](const char* key, const std::string& why) {
    throw std::invalid_argument(std::string(key) + ": " + why);
  };
  if (!(cw_min >= 0.0)) fail("cw_min", "must be >= 0");
  if (!(cw_max > cw_min)) fail("cw_max", "must exceed cw_min");
  if (!(gamma > 0.0)) fail("gamma", "must be > 0");
  if (!(r > 0.0)) fail("r", "must be > 0");
  if (!(dtn_dist >= 0.0)) fail("dtn_dist", "must be >= 0");
  if (!(p_start > 0.0 && p_start <= 1.0)) fail("p_start", "must be in (0, 1]");
  if (!(q_flood > 0.0 && q_flood <= 1.0)) fail("q_flood", "must be in (0, 1]");
  if (ttl_init < 0) fail("ttl_init", "must be >= 0");
  if (!(e_thr > 0.0)) fail("e_thr", "must be > 0");
}

double delta(double d, double gamma, double r) {
  if (!(d >= 0.0)) {
    throw std::invalid_argument("delta: negative distance");
  }
  return gamma * d / (1.0 + d / r);
}

double acceptance_window(double d, const ProtocolParams& params) {
  // -expm1(-x) == 1 - e^-x without cancellation near d = 0.
  return params.cw_max * -std::expm1(-delta(d, params.gamma, params.r));
}

double forwarding_window(double d, const ProtocolParams& params) {
  return params.cw_max * std::exp(-delta(d, params.gamma, params.r));
}

double dtn_probability(double p_start, std::size_t overheard) {
  if (!(p_start > 0.0 && p_start <= 1.0)) {
    throw std::invalid_argument("dtn_probability: p_start outside (0, 1]");
  }
  return std::pow(p_start, 1.0 / (1.0 + static_cast<double>(overheard)));
}

}  // namespace locate::protocol
