// tmatch: command-line front end.
//
// Exit codes: 0 ok / answer yes, 1 answer no (or invalid input for `validate`), 2 error.
// Input paths that do not exist as given are looked up under $TMATCH_DATA_DIR.

#include <CLI11.hpp>
#include <json.hpp>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "tmatch/tmatch.hpp"

namespace fs = std::filesystem;
using namespace tmatch;

namespace {

constexpr int kOk = 0, kNo = 1, kError = 2;
constexpr const char* kDataDirVar = "TMATCH_DATA_DIR";

struct UsageError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

fs::path resolve(const std::string& name) {
    fs::path p(name);
    if (name == "-" || fs::exists(p) || p.is_absolute()) return p;
    if (const char* dir = std::getenv(kDataDirVar)) {
        fs::path q = fs::path(dir) / p;
        if (fs::exists(q)) return q;
    }
    return p;
}

StreamFile load(const std::string& name) {
    if (name == "-") return parse_stream(std::cin);
    return read_stream(resolve(name));
}

// Writes to `path`, or stdout when empty or "-".
template <typename Fn>
void emit(const std::string& path, Fn&& write) {
    if (path.empty() || path == "-") {
        write(std::cout);
        std::cout.flush();
        return;
    }
    std::ofstream out(path);
    if (!out) throw std::runtime_error("cannot write '" + path + "'");
    write(out);
    if (!out) throw std::runtime_error("write failed for '" + path + "'");
}

void require_gamma(int gamma) {
    if (gamma < 1) throw UsageError("--gamma must be >= 1");
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Temporal matching in link streams"};
    app.require_subcommand(1);
    app.footer(std::string("Input paths not found locally are searched under $") + kDataDirVar + ".");

    std::string input, output;
    int gamma = 2;

    // generate
    auto* gen = app.add_subcommand("generate", "Moving-particle link stream generator");
    GeneratorConfig cfg;
    std::string meta;
    gen->add_option("--groups", cfg.group_count, "number of groups (vertices)")->capture_default_str();
    gen->add_option("--particles", cfg.particle_count, "number of particles")->capture_default_str();
    gen->add_option("--radius", cfg.radius, "contact radius")->capture_default_str();
    gen->add_option("--friction", cfg.friction, "fraction of velocity kept per step")->capture_default_str();
    gen->add_option("--wind", cfg.wind, "max random velocity kick")->capture_default_str();
    gen->add_option("--max-speed", cfg.max_speed, "speed cap")->capture_default_str();
    gen->add_option("--width", cfg.arena_width, "arena width")->capture_default_str();
    gen->add_option("--height", cfg.arena_height, "arena height")->capture_default_str();
    gen->add_option("--duration", cfg.duration, "number of instants")->capture_default_str();
    gen->add_option("--seed", cfg.seed, "random seed")->capture_default_str();
    gen->add_option("-o,--output", output, "stream file (default stdout)");
    gen->add_option("--meta", meta, "JSON metadata file (default <output>.json when -o is given)");

    // compress
    auto* comp = app.add_subcommand("compress", "delta-compression of a stream");
    Time delta = 0;
    comp->add_option("--delta", delta, "bucket width, 1 < delta < |T|")->required();
    comp->add_option("input", input, "stream file or -")->required();
    comp->add_option("-o,--output", output, "output stream");

    // gamma-edges
    auto* gam = app.add_subcommand("gamma-edges", "list the gamma-edges of a stream");
    bool count_only = false;
    gam->add_option("--gamma", gamma, "gamma")->required();
    gam->add_flag("--count", count_only, "print only the number of gamma-edges");
    gam->add_option("input", input, "stream file or -")->required();
    gam->add_option("-o,--output", output, "output file");

    // approx
    auto* apx = app.add_subcommand("approx", "greedy 2-approximation of a maximum gamma-matching");
    apx->add_option("--gamma", gamma, "gamma")->required();
    apx->add_option("input", input, "stream file or -")->required();
    apx->add_option("-o,--output", output, "matching file");

    // kernelize
    auto* ker = app.add_subcommand("kernelize", "kernelization for the decision problem with parameter k");
    std::optional<int> k;
    bool prune_only = false;
    ker->add_option("--gamma", gamma, "gamma")->required();
    auto* kopt = ker->add_option("--k", k, "target matching size (default: greedy size)");
    ker->add_flag("--prune-only", prune_only, "always output the pruned stream")->excludes(kopt);
    ker->add_option("input", input, "stream file or -")->required();
    ker->add_option("-o,--output", output, "kernel stream");

    // exact
    auto* ex = app.add_subcommand("exact", "exact maximum gamma-matching or decision for k");
    std::uint64_t budget = kDefaultNodeBudget;
    std::size_t cap = 5000;
    bool force = false;
    ex->add_option("--gamma", gamma, "gamma")->required();
    ex->add_option("--k", k, "decide whether a matching of size k exists");
    ex->add_option("--budget", budget, "search node budget (0 = unlimited)")->capture_default_str();
    ex->add_option("--max-gamma-edges", cap, "refuse inputs with more gamma-edges")->capture_default_str();
    ex->add_flag("--force", force, "run even above --max-gamma-edges");
    ex->add_option("input", input, "stream file or -")->required();
    ex->add_option("-o,--output", output, "witness matching file");

    // reduce-sat
    auto* red = app.add_subcommand("reduce-sat", "3-SAT to gamma-matching reduction");
    std::string cnf;
    red->add_option("--gamma", gamma, "gamma (>= 2)")->required();
    red->add_option("file", cnf, "DIMACS CNF file")->required();
    red->add_option("-o,--output", output, "output stream");

    // sweep
    auto* sw = app.add_subcommand("sweep", "pipeline over a grid of (delta, gamma), CSV output");
    std::vector<Time> deltas;
    std::vector<int> gammas;
    bool zip = false;
    std::string label;
    sw->add_option("--deltas", deltas, "deltas (0 = no compression)")->required()->delimiter(',');
    sw->add_option("--gammas", gammas, "gammas")->required()->delimiter(',');
    sw->add_flag("--zip", zip, "pair deltas and gammas instead of the cross product");
    sw->add_option("--k", k, "kernel parameter (default: greedy size)");
    sw->add_option("--label", label, "dataset label (default: file stem)");
    sw->add_option("input", input, "stream file or -")->required();
    sw->add_option("-o,--output", output, "CSV file");

    // validate
    auto* val = app.add_subcommand("validate", "check a stream, and optionally a matching against it");
    std::string matching_file;
    std::optional<int> match_gamma;
    val->add_option("input", input, "stream file or -")->required();
    val->add_option("--matching", matching_file, "matching file");
    val->add_option("--gamma", match_gamma, "gamma of the matching (default: from its header)");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int rc = app.exit(e);
        return rc == 0 ? kOk : kError;
    }

    try {
        if (*gen) {
            cfg.check();
            auto s = generate(cfg);
            std::map<std::string, std::string> header{{"generator", "particles"}, {"seed", std::to_string(cfg.seed)},
                                                       {"rng", kRngName}};
            emit(output, [&](std::ostream& o) { serialize_stream(o, s, header); });
            if (meta.empty() && !output.empty() && output != "-") meta = output + ".json";
            if (!meta.empty()) {
                nlohmann::json j = {
                    {"generator", "particles"},
                    {"rng", kRngName},
                    {"config",
                     {{"groups", cfg.group_count}, {"particles", cfg.particle_count}, {"radius", cfg.radius},
                      {"friction", cfg.friction}, {"wind", cfg.wind}, {"max_speed", cfg.max_speed},
                      {"arena_width", cfg.arena_width}, {"arena_height", cfg.arena_height},
                      {"duration", cfg.duration}, {"seed", cfg.seed}}},
                    {"stats", {{"vertices", s.vertex_count()}, {"duration", s.duration()}, {"edges", s.edge_count()}}},
                };
                emit(meta, [&](std::ostream& o) { o << j.dump(2) << '\n'; });
            }
            return kOk;
        }

        if (*comp) {
            auto f = load(input);
            auto c = delta_compress(f.stream, delta);
            emit(output, [&](std::ostream& o) { serialize_stream(o, c, {{"delta", std::to_string(delta)}}); });
            return kOk;
        }

        if (*gam) {
            require_gamma(gamma);
            auto f = load(input);
            auto edges = enumerate_gamma_edges(f.stream, gamma);
            emit(output, [&](std::ostream& o) {
                if (count_only) {
                    o << edges.size() << '\n';
                    return;
                }
                serialize_matching(o, f.stream, GammaMatching{gamma, edges});
            });
            return kOk;
        }

        if (*apx) {
            require_gamma(gamma);
            auto f = load(input);
            auto m = greedy_matching(f.stream, gamma);
            emit(output, [&](std::ostream& o) { serialize_matching(o, f.stream, m); });
            std::cerr << "greedy size " << m.size() << '\n';
            return kOk;
        }

        if (*ker) {
            require_gamma(gamma);
            auto f = load(input);
            auto edges = enumerate_gamma_edges(f.stream, gamma);
            auto greedy = greedy_matching(f.stream, edges, gamma);
            int kk = k.value_or(std::max<int>(1, static_cast<int>(greedy.size())));
            if (kk < 1) throw UsageError("--k must be >= 1");
            auto out = kernelize(f.stream, edges, greedy, kk, prune_only ? KernelMode::PruneOnly : KernelMode::Decide);
            std::cerr << "greedy size " << out.greedy_size() << ", k " << kk << ", verdict "
                      << verdict_name(out.verdict) << '\n';
            switch (out.verdict) {
                case KernelVerdict::SolutionFound:
                    emit(output, [&](std::ostream& o) { serialize_matching(o, f.stream, out.greedy); });
                    return kOk;
                case KernelVerdict::NoSolution:
                    std::cout << "no-solution\n";
                    return kNo;
                case KernelVerdict::Kernel:
                    break;
            }
            std::map<std::string, std::string> header{{"gamma", std::to_string(gamma)},
                                                      {"k", std::to_string(kk)},
                                                      {"pool", std::to_string(out.pool_size)}};
            emit(output, [&](std::ostream& o) { serialize_stream(o, *out.kernel, header); });
            return kOk;
        }

        if (*ex) {
            require_gamma(gamma);
            auto f = load(input);
            auto count = enumerate_gamma_edges(f.stream, gamma).size();
            if (count > cap && !force) {
                std::cerr << "error: " << count << " gamma-edges exceed --max-gamma-edges " << cap
                          << "; pass --force to run anyway\n";
                return kError;
            }
            std::optional<std::uint64_t> nodes;
            if (budget > 0) nodes = budget;
            if (k) {
                if (*k < 0) throw UsageError("--k must be >= 0");
                bool yes = exact_decision(f.stream, gamma, static_cast<std::size_t>(*k), nodes);
                std::cout << (yes ? "yes" : "no") << '\n';
                return yes ? kOk : kNo;
            }
            auto r = exact_maximum(f.stream, gamma, nodes);
            std::cerr << "optimum " << r.optimum << " (" << r.explored_nodes << " nodes)\n";
            emit(output, [&](std::ostream& o) { serialize_matching(o, f.stream, r.witness); });
            return kOk;
        }

        if (*red) {
            std::ifstream in(resolve(cnf));
            if (!in) throw std::runtime_error("cannot open '" + cnf + "'");
            auto formula = parse_dimacs(in);
            auto inst = reduce(formula, gamma);
            std::map<std::string, std::string> header{{"gamma", std::to_string(gamma)},
                                                      {"target", std::to_string(inst.target)},
                                                      {"variables", std::to_string(formula.variable_count)},
                                                      {"clauses", std::to_string(formula.clauses.size())}};
            emit(output, [&](std::ostream& o) { serialize_stream(o, inst.stream, header); });
            return kOk;
        }

        if (*sw) {
            auto f = load(input);
            if (label.empty()) label = input == "-" ? "stdin" : fs::path(input).stem().string();
            auto rows = sweep(f.stream, label, deltas, gammas, zip, k);
            emit(output, [&](std::ostream& o) {
                write_csv_header(o);
                for (const auto& r : rows) write_csv_row(o, r);
            });
            return kOk;
        }

        if (*val) {
            std::optional<StreamFile> loaded;
            try {
                loaded = load(input);
            } catch (const ParseError& e) {
                std::cout << "invalid stream: " << e.what() << '\n';
                return kNo;
            }
            const auto& f = *loaded;
            std::cout << "stream ok: |V|=" << f.stream.vertex_count() << " |T|=" << f.stream.duration()
                      << " |E|=" << f.stream.edge_count() << '\n';
            if (matching_file.empty()) return kOk;
            std::ifstream in(resolve(matching_file));
            if (!in) throw std::runtime_error("cannot open '" + matching_file + "'");
            GammaMatching m;
            try {
                m = parse_matching(in, f.stream, match_gamma);
            } catch (const ParseError& e) {
                std::cout << "invalid matching: " << e.what() << '\n';
                return kNo;
            }
            auto report = validate_matching(f.stream, m);
            if (!report.ok()) {
                std::cout << "invalid matching:\n" << report.summary() << '\n';
                return kNo;
            }
            std::cout << "matching ok: " << m.size() << " gamma-edges, gamma=" << m.gamma << '\n';
            return kOk;
        }
    } catch (const BudgetExceeded& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kError;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kError;
    }
    return kError;
}
