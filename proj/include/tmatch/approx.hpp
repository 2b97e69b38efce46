#pragma once

#include <cstddef>
#include <span>

#include "tmatch/link_stream.hpp"

namespace tmatch {

enum class MarkingPolicy {
    /// Occupancy is set only for γ-edges added to the matching. Yields a maximal
    /// matching for which the bottom-vertex property and the factor 2 hold.
    MarkAccepted,
    /// Occupancy is set for every scanned γ-edge, accepted or not. Not maximal in
    /// general (see tests); kept for comparison only.
    MarkOnReject,
};

struct GreedyOptions {
    MarkingPolicy marking = MarkingPolicy::MarkAccepted;
    /// Above this many (vertex, instant) cells the occupancy map is a hash set
    /// instead of a dense bitmap.
    std::size_t dense_cell_limit = 100'000'000;
};

/// Greedy maximal γ-matching scanning γ-edges in canonical order.
/// Throws std::invalid_argument if gamma < 1.
GammaMatching greedy_matching(const LinkStream& stream, int gamma, const GreedyOptions& options = {});

/// Same, over an already enumerated, canonically sorted γ-edge list of `stream`.
GammaMatching greedy_matching(const LinkStream& stream, std::span<const GammaEdge> sorted_gamma_edges, int gamma,
                              const GreedyOptions& options = {});

/// Last-instant temporal vertices of every member, sorted; size is 2|matching|.
std::vector<TemporalVertex> bottom_vertices(const GammaMatching& matching);

}  // namespace tmatch
