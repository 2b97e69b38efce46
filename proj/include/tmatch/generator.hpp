#pragma once

#include <cstdint>
#include <random>
#include <string>
#include <vector>

#include "tmatch/link_stream.hpp"

namespace tmatch {

/// Parameters of the moving-particle simulation. Defaults give roughly 2e5 timed
/// edges over 100 groups and 200 steps.
struct GeneratorConfig {
    int group_count = 100;
    int particle_count = 880;      // split round-robin over the groups
    double radius = 3.2;
    double friction = 0.9;         // fraction of velocity kept each step, in [0, 1]
    double wind = 0.5;             // max magnitude of the random velocity increment
    double max_speed = 1.8;
    double arena_width = 100.0;
    double arena_height = 100.0;
    int duration = 200;            // |T|
    std::uint64_t seed = 1;

    /// Throws std::invalid_argument when a parameter is out of range.
    void check() const;
};

using Rng = std::mt19937_64;
inline constexpr const char* kRngName = "mt19937_64";

struct Particle {
    double x = 0, y = 0;
    double vx = 0, vy = 0;
    int group = 0;
};

using ParticleState = std::vector<Particle>;

std::string group_name(int group);  // "P1".."Pn"

/// Uniform positions over the arena, zero velocities, round-robin groups.
ParticleState initial_state(const GeneratorConfig& config, Rng& rng);

/// One step: friction, random kick of magnitude <= wind, speed cap, move, reflect on walls.
void step(ParticleState& state, const GeneratorConfig& config, Rng& rng);

/// Group pairs with two particles closer than the radius (strict), as group index pairs (a < b).
std::vector<std::pair<int, int>> contacts(const ParticleState& state, const GeneratorConfig& config);

/// Timed edges at instant t, with vertex names from group_name.
std::vector<NamedEdge> edges_at(const ParticleState& state, const GeneratorConfig& config, Time t);

/// Stream over T = [0, duration-1] and V = all groups; deterministic per seed.
LinkStream generate(const GeneratorConfig& config);

}  // namespace tmatch
