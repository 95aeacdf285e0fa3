#pragma once

namespace locate::protocol {

/// Protocol constants. Defaults are the evaluation parameter set.
struct ProtocolParams {
  double cw_min = 5.0;      // s, DTN rebroadcast lower bound
  double cw_max = 20.0;     // s, contention asymptote and guard interval
  double gamma = 0.005;     // 1/m, steepness
  double r = 500.0;         // m, approximate communication radius
  double dtn_dist = 50.0;   // m, displacement that unfreezes a DTN timer
  double p_start = 0.4;     // initial DTN retransmit probability
  double q_flood = 0.4;     // probabilistic-flooding retransmit probability
  int ttl_init = 16;        // hops
  double e_thr = 1800.0;    // s, resolution threshold for ERR

  /// Throws std::invalid_argument naming the offending field.
  void validate() const;
};

/// Freeze-poll period while a DTN timer is frozen.
inline constexpr double kFreezePollPeriod = 1.0;

}  // namespace locate::protocol
