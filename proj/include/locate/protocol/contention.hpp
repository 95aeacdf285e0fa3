#pragma once

#include <cstddef>

#include "locate/protocol/params.hpp"

namespace locate::protocol {

/// Distance bias: gamma * d / (1 + d / r). Increasing in d, bounded by gamma * r.
double delta(double d, double gamma, double r);

/// Acceptance contention window CW_max * (1 - e^-delta): short near the transmitter.
double acceptance_window(double d, const ProtocolParams& params);

/// Forwarding contention window CW_max * e^-delta: short far from the transmitter.
double forwarding_window(double d, const ProtocolParams& params);

/// DTN retransmit probability p_start^(1 / (1 + N)) after hearing N distinct neighbors.
double dtn_probability(double p_start, std::size_t overheard);

}  // namespace locate::protocol
