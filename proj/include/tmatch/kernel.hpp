#pragma once

#include <optional>
#include <span>

#include "tmatch/approx.hpp"
#include "tmatch/link_stream.hpp"

namespace tmatch {

enum class KernelVerdict { SolutionFound, NoSolution, Kernel };

enum class KernelMode {
    /// Answer directly when the greedy size decides the instance.
    Decide,
    /// Always build the pruned stream, whatever the greedy size.
    PruneOnly,
};

struct KernelOutcome {
    KernelVerdict verdict = KernelVerdict::Kernel;
    int k = 0;
    GammaMatching greedy;                // ℓ = greedy.size()
    std::optional<LinkStream> kernel;    // present iff a pool was built
    std::size_t pool_size = 0;           // distinct γ-edges kept
    std::size_t input_gamma_edges = 0;

    std::size_t greedy_size() const { return greedy.size(); }
};

/// Bound on the kernel's timed edges, 2(k-1)(2k-1)γ².
std::size_t kernel_edge_bound(int k, int gamma);
/// Bound on the pool of kept γ-edges, 2(k-1)(2k-1)γ.
std::size_t kernel_pool_bound(int k, int gamma);

/// Prunes `stream` to the timed edges of γ-edges incident to a bottom vertex of the
/// greedy matching, keeping per (start, vertex) at most 2k-1 of them (smallest partners
/// first). In Decide mode, returns SolutionFound if ℓ >= k and NoSolution if 2ℓ < k.
/// Throws std::invalid_argument if gamma < 1 or k < 1.
KernelOutcome kernelize(const LinkStream& stream, int gamma, int k, KernelMode mode = KernelMode::Decide);

/// Same, reusing the canonically sorted γ-edges of `stream` and its greedy matching.
KernelOutcome kernelize(const LinkStream& stream, std::span<const GammaEdge> sorted_gamma_edges,
                        const GammaMatching& greedy, int k, KernelMode mode = KernelMode::Decide);

/// |γ-edges(kernel)| / |γ-edges(input)|, with 0/0 taken as 1.
double kernel_gamma_edge_ratio(const LinkStream& input, const LinkStream& kernel, int gamma);

}  // namespace tmatch
