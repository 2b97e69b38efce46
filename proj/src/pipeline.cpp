#include "tmatch/pipeline.hpp"

#include <algorithm>
#include <chrono>
#include <cstdio>
#include <ostream>
#include <tuple>

#include "tmatch/approx.hpp"
#include "tmatch/compress.hpp"

namespace tmatch {

namespace {

using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point start) {
    return std::chrono::duration<double>(Clock::now() - start).count();
}

std::string fixed3(double v) {
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.3f", v);
    return buf;
}

std::string ratio_text(std::optional<double> v) {
    if (!v) return "";
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.6f", *v);
    return buf;
}

}  // namespace

std::string verdict_name(KernelVerdict verdict) {
    switch (verdict) {
        case KernelVerdict::SolutionFound: return "solution-found";
        case KernelVerdict::NoSolution: return "no-solution";
        case KernelVerdict::Kernel: return "kernel";
    }
    return "unknown";
}

PipelineArtifacts run_pipeline(const LinkStream& stream, const PipelineOptions& options) {
    auto total_start = Clock::now();
    LinkStream input = stream;
    if (options.delta) {
        try {
            input = delta_compress(stream, *options.delta);
        } catch (const std::exception& e) {
            throw std::runtime_error(std::string("compress stage: ") + e.what());
        }
    }

    ExperimentRecord rec;
    rec.label = options.label;
    rec.delta = options.delta.value_or(0);
    rec.gamma = options.gamma;
    rec.vertices = input.vertex_count();
    rec.duration = input.duration();
    rec.edges = input.edge_count();

    auto approx_start = Clock::now();
    std::vector<GammaEdge> all;
    GammaMatching greedy;
    try {
        all = enumerate_gamma_edges(input, options.gamma);
        greedy = greedy_matching(input, all, options.gamma);
    } catch (const std::exception& e) {
        throw std::runtime_error(std::string("approx stage: ") + e.what());
    }
    rec.approx_seconds = seconds_since(approx_start);
    rec.gamma_edges = all.size();
    rec.greedy = greedy.size();

    int k = options.k.value_or(std::max<int>(1, static_cast<int>(greedy.size())));
    rec.k = k;
    auto kernel_start = Clock::now();
    KernelOutcome outcome;
    try {
        outcome = kernelize(input, all, greedy, k, options.kernel_mode);
    } catch (const std::exception& e) {
        throw std::runtime_error(std::string("kernel stage: ") + e.what());
    }
    std::size_t kernel_gamma_edges = outcome.kernel ? enumerate_gamma_edges(*outcome.kernel, options.gamma).size() : 0;
    rec.kernel_seconds = seconds_since(kernel_start);

    auto ell = static_cast<long long>(greedy.size());
    KernelVerdict decided = ell >= k ? KernelVerdict::SolutionFound
                            : 2 * ell < k ? KernelVerdict::NoSolution
                                          : KernelVerdict::Kernel;
    rec.verdict = verdict_name(decided);
    rec.pool = outcome.pool_size;
    rec.kernel_edges = outcome.kernel ? outcome.kernel->edge_count() : 0;
    rec.kernel_gamma_edges = kernel_gamma_edges;
    rec.total_seconds = seconds_since(total_start);
    return {rec, std::move(input), std::move(greedy), std::move(outcome.kernel)};
}

std::optional<double> approx_quality_ratio(const ExperimentRecord& record) {
    if (record.kernel_gamma_edges == 0) return std::nullopt;
    return static_cast<double>(record.greedy) / static_cast<double>(record.kernel_gamma_edges);
}

double kernel_ratio(const ExperimentRecord& record) {
    if (record.gamma_edges == 0) return record.kernel_gamma_edges == 0 ? 1.0 : 0.0;
    return static_cast<double>(record.kernel_gamma_edges) / static_cast<double>(record.gamma_edges);
}

std::vector<ExperimentRecord> sweep(const LinkStream& stream, const std::string& label, const std::vector<Time>& deltas,
                                    const std::vector<int>& gammas, bool zip, std::optional<int> k, KernelMode mode) {
    std::vector<std::pair<Time, int>> cells;
    if (zip) {
        if (deltas.size() != gammas.size()) throw std::invalid_argument("zipped sweep needs as many deltas as gammas");
        for (std::size_t i = 0; i < deltas.size(); ++i) cells.emplace_back(deltas[i], gammas[i]);
    } else {
        for (Time d : deltas)
            for (int g : gammas) cells.emplace_back(d, g);
    }
    std::vector<ExperimentRecord> rows;
    for (auto [delta, gamma] : cells) {
        PipelineOptions opt{label, delta > 0 ? std::optional<Time>(delta) : std::nullopt, gamma, k, mode};
        rows.push_back(run_pipeline(stream, opt).record);
    }
    std::stable_sort(rows.begin(), rows.end(), [](const ExperimentRecord& a, const ExperimentRecord& b) {
        return std::tie(a.label, a.delta, a.gamma) < std::tie(b.label, b.delta, b.gamma);
    });
    return rows;
}

void write_csv_header(std::ostream& out) {
    out << "dataset,delta,gamma,vertices,duration,edges,gamma_edges,greedy,k,verdict,pool,kernel_edges,"
           "kernel_gamma_edges,kernel_ratio,approx_ratio,approx_s,kernel_s,total_s\n";
}

void write_csv_row(std::ostream& out, const ExperimentRecord& r) {
    out << r.label << ',' << r.delta << ',' << r.gamma << ',' << r.vertices << ',' << r.duration << ',' << r.edges << ','
        << r.gamma_edges << ',' << r.greedy << ',' << r.k << ',' << r.verdict << ',' << r.pool << ',' << r.kernel_edges
        << ',' << r.kernel_gamma_edges << ',' << ratio_text(kernel_ratio(r)) << ',' << ratio_text(approx_quality_ratio(r))
        << ',' << fixed3(r.approx_seconds) << ',' << fixed3(r.kernel_seconds) << ',' << fixed3(r.total_seconds) << '\n';
}

}  // namespace tmatch
