#include "tmatch/generator.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <stdexcept>
#include <unordered_map>

namespace tmatch {

void GeneratorConfig::check() const {
    auto fail = [](const std::string& what) { throw std::invalid_argument("generator: " + what); };
    if (group_count < 1) fail("group_count must be >= 1");
    if (particle_count < group_count) fail("particle_count must be >= group_count");
    if (!(radius > 0)) fail("radius must be > 0");
    if (!(friction >= 0 && friction <= 1)) fail("friction must be in [0, 1]");
    if (!(wind >= 0)) fail("wind must be >= 0");
    if (!(max_speed > 0)) fail("max_speed must be > 0");
    if (!(arena_width > 0 && arena_height > 0)) fail("arena must have positive size");
    if (max_speed >= std::min(arena_width, arena_height)) fail("max_speed must be smaller than the arena");
    if (duration < 1) fail("duration must be >= 1");
}

namespace {

// 53 random bits into [0, 1); independent of the standard library's distributions.
double unit(Rng& rng) { return static_cast<double>(rng() >> 11) * 0x1.0p-53; }

void reflect(double& pos, double& vel, double extent) {
    if (pos < 0) {
        pos = -pos;
        vel = -vel;
    } else if (pos > extent) {
        pos = 2 * extent - pos;
        vel = -vel;
    }
    pos = std::clamp(pos, 0.0, extent);
}

}  // namespace

std::string group_name(int group) { return "P" + std::to_string(group + 1); }

ParticleState initial_state(const GeneratorConfig& config, Rng& rng) {
    ParticleState state(static_cast<std::size_t>(config.particle_count));
    for (std::size_t i = 0; i < state.size(); ++i) {
        state[i].x = unit(rng) * config.arena_width;
        state[i].y = unit(rng) * config.arena_height;
        state[i].group = static_cast<int>(i % static_cast<std::size_t>(config.group_count));
    }
    return state;
}

void step(ParticleState& state, const GeneratorConfig& config, Rng& rng) {
    for (auto& p : state) {
        double angle = unit(rng) * 2 * std::numbers::pi;
        double kick = unit(rng) * config.wind;
        p.vx = config.friction * p.vx + kick * std::cos(angle);
        p.vy = config.friction * p.vy + kick * std::sin(angle);
        double speed = std::hypot(p.vx, p.vy);
        if (speed > config.max_speed) {
            p.vx *= config.max_speed / speed;
            p.vy *= config.max_speed / speed;
        }
        p.x += p.vx;
        p.y += p.vy;
        reflect(p.x, p.vx, config.arena_width);
        reflect(p.y, p.vy, config.arena_height);
    }
}

std::vector<std::pair<int, int>> contacts(const ParticleState& state, const GeneratorConfig& config) {
    // Uniform grid with cell side = radius: contacts only between neighbouring cells.
    const double cell = config.radius;
    const auto cols = static_cast<long long>(std::floor(config.arena_width / cell)) + 1;
    auto cell_of = [&](const Particle& p) {
        return std::pair{static_cast<long long>(std::floor(p.x / cell)), static_cast<long long>(std::floor(p.y / cell))};
    };
    std::unordered_map<long long, std::vector<std::size_t>> grid;
    for (std::size_t i = 0; i < state.size(); ++i) {
        auto [cx, cy] = cell_of(state[i]);
        grid[cy * cols + cx].push_back(i);
    }

    const double r2 = config.radius * config.radius;
    std::vector<std::pair<int, int>> pairs;
    for (std::size_t i = 0; i < state.size(); ++i) {
        const auto& a = state[i];
        auto [cx, cy] = cell_of(a);
        for (long long dy = -1; dy <= 1; ++dy) {
            for (long long dx = -1; dx <= 1; ++dx) {
                auto it = grid.find((cy + dy) * cols + (cx + dx));
                if (it == grid.end() || cx + dx < 0 || cx + dx >= cols) continue;
                for (std::size_t j : it->second) {
                    if (j <= i) continue;
                    const auto& b = state[j];
                    if (a.group == b.group) continue;
                    double ddx = a.x - b.x, ddy = a.y - b.y;
                    if (ddx * ddx + ddy * ddy < r2) pairs.emplace_back(std::min(a.group, b.group), std::max(a.group, b.group));
                }
            }
        }
    }
    std::sort(pairs.begin(), pairs.end());
    pairs.erase(std::unique(pairs.begin(), pairs.end()), pairs.end());
    return pairs;
}

std::vector<NamedEdge> edges_at(const ParticleState& state, const GeneratorConfig& config, Time t) {
    std::vector<NamedEdge> out;
    for (auto [a, b] : contacts(state, config)) out.push_back({t, group_name(a), group_name(b)});
    return out;
}

LinkStream generate(const GeneratorConfig& config) {
    config.check();
    Rng rng(config.seed);
    auto state = initial_state(config, rng);

    std::vector<std::string> names;
    for (int g = 0; g < config.group_count; ++g) names.push_back(group_name(g));
    std::vector<NamedEdge> edges;
    for (int t = 0; t < config.duration; ++t) {
        if (t > 0) step(state, config, rng);
        for (auto& e : edges_at(state, config, t)) edges.push_back(std::move(e));
    }
    return LinkStream::build({TimeInterval{0, config.duration - 1}, std::move(names), std::move(edges)});
}

}  // namespace tmatch
