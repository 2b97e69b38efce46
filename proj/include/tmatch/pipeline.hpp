#pragma once

#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "tmatch/kernel.hpp"
#include "tmatch/link_stream.hpp"

namespace tmatch {

struct PipelineOptions {
    std::string label = "stream";
    std::optional<Time> delta;   // no compression when empty
    int gamma = 2;
    std::optional<int> k;        // defaults to the greedy size (at least 1)
    KernelMode kernel_mode = KernelMode::PruneOnly;
};

/// One row of the experiment tables. Times are wall-clock seconds.
struct ExperimentRecord {
    std::string label;
    Time delta = 0;              // 0 when not compressed
    int gamma = 0;
    std::size_t vertices = 0;
    Time duration = 0;
    std::size_t edges = 0;
    std::size_t gamma_edges = 0;
    std::size_t greedy = 0;      // ℓ
    int k = 0;
    std::string verdict;         // solution-found / no-solution / kernel
    std::size_t pool = 0;
    std::size_t kernel_edges = 0;
    std::size_t kernel_gamma_edges = 0;
    double approx_seconds = 0;
    double kernel_seconds = 0;
    double total_seconds = 0;
};

struct PipelineArtifacts {
    ExperimentRecord record;
    LinkStream input;            // after optional compression
    GammaMatching greedy;
    std::optional<LinkStream> kernel;
};

/// Compression (optional), γ-edge enumeration, greedy, kernelization.
PipelineArtifacts run_pipeline(const LinkStream& stream, const PipelineOptions& options);

/// ℓ / kernel γ-edge count; empty when the kernel has no γ-edges.
std::optional<double> approx_quality_ratio(const ExperimentRecord& record);
/// Kernel γ-edges over input γ-edges, 0/0 taken as 1.
double kernel_ratio(const ExperimentRecord& record);

std::string verdict_name(KernelVerdict verdict);

/// Runs every (delta, gamma) cell: the cross product, or pairwise when `zip` is set.
/// Rows come back sorted by (label, delta, gamma). A delta of 0 means no compression.
std::vector<ExperimentRecord> sweep(const LinkStream& stream, const std::string& label, const std::vector<Time>& deltas,
                                    const std::vector<int>& gammas, bool zip, std::optional<int> k = std::nullopt,
                                    KernelMode mode = KernelMode::PruneOnly);

void write_csv_header(std::ostream& out);
void write_csv_row(std::ostream& out, const ExperimentRecord& record);

}  // namespace tmatch
