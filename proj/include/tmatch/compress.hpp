#pragma once

#include "tmatch/link_stream.hpp"

namespace tmatch {

/// Floor division, correct for negative times.
constexpr Time floor_div(Time a, Time b) {
    Time q = a / b;
    return (a % b != 0 && ((a < 0) != (b < 0))) ? q - 1 : q;
}

/// δ-compression: every instant t' maps to bucket floor(t'/δ); a pair is linked at
/// bucket t iff it is linked at some instant of [δt, δ(t+1)). Vertex set is kept.
/// Requires 1 < delta < |T|, otherwise throws std::invalid_argument.
LinkStream delta_compress(const LinkStream& stream, Time delta);

}  // namespace tmatch
