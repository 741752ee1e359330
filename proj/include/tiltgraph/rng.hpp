#pragma once

#include <cstdint>
#include <random>
#include <span>
#include <string_view>

namespace tiltgraph {

/// Derives a child seed for a named stream from a root seed. Named streams keep
/// independent random sequences, so drawing from one stream never perturbs the
/// others (splitmix64 over root seed xor FNV-1a of the stream name).
std::uint64_t derive_stream_seed(std::uint64_t root_seed, std::string_view stream_name);

/// FNV-1a 64-bit hash; also used for input digests in CLI report headers.
std::uint64_t fnv1a64(std::string_view bytes);

/// Seeded random stream ("tiltgraph.rng.v1"): std::mt19937_64 engine with
/// hand-rolled samplers, so a given seed yields the same draws on every
/// platform (std distributions are implementation-defined and avoided).
class RngStream {
public:
    explicit RngStream(std::uint64_t seed) : engine_(seed) {}

    std::uint64_t next_u64() { return engine_(); }

    /// Uniform double in [0, 1), 53-bit resolution.
    double uniform01() { return static_cast<double>(engine_() >> 11) * 0x1.0p-53; }

    /// Uniform integer in [0, n), unbiased (rejection). n must be > 0.
    std::uint64_t uniform_below(std::uint64_t n);

    /// Index sampled proportionally to `weights` (nonnegative, sum > 0).
    std::size_t categorical(std::span<const double> weights);

    /// Poisson(mu) draw. Inversion by sequential search for mu <= 10,
    /// Hormann's PTRS transformed rejection above (exact, no normal
    /// approximation).
    std::uint64_t poisson(double mu);

private:
    std::mt19937_64 engine_;
};

} // namespace tiltgraph
