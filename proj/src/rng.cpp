#include "tiltgraph/rng.hpp"

#include "tiltgraph/errors.hpp"

#include <cmath>

namespace tiltgraph {

std::uint64_t fnv1a64(std::string_view bytes) {
    std::uint64_t h = 0xcbf29ce484222325ull;
    for (unsigned char c : bytes) {
        h ^= c;
        h *= 0x100000001b3ull;
    }
    return h;
}

namespace {

std::uint64_t splitmix64(std::uint64_t x) {
    x += 0x9e3779b97f4a7c15ull;
    x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ull;
    x = (x ^ (x >> 27)) * 0x94d049bb133111ebull;
    return x ^ (x >> 31);
}

} // namespace

std::uint64_t derive_stream_seed(std::uint64_t root_seed, std::string_view stream_name) {
    return splitmix64(root_seed ^ fnv1a64(stream_name));
}

std::uint64_t RngStream::uniform_below(std::uint64_t n) {
    if (n == 0) throw ConfigError("uniform_below(0)");
    const std::uint64_t limit = ~std::uint64_t{0} - (~std::uint64_t{0} % n);
    std::uint64_t x;
    do {
        x = engine_();
    } while (x >= limit);
    return x % n;
}

std::size_t RngStream::categorical(std::span<const double> weights) {
    double total = 0.0;
    for (double w : weights) {
        if (w < 0.0 || !std::isfinite(w)) throw ConfigError("categorical weight must be finite and nonnegative");
        total += w;
    }
    if (total <= 0.0) throw ConfigError("categorical weights must sum to > 0");
    double u = uniform01() * total;
    double acc = 0.0;
    for (std::size_t i = 0; i < weights.size(); ++i) {
        acc += weights[i];
        if (u < acc) return i;
    }
    // Rounding put u at the very top; return the last positive-weight index.
    for (std::size_t i = weights.size(); i-- > 0;) {
        if (weights[i] > 0.0) return i;
    }
    return weights.size() - 1;
}

std::uint64_t RngStream::poisson(double mu) {
    if (mu < 0.0 || !std::isfinite(mu)) throw ConfigError("poisson mean must be finite and >= 0");
    if (mu == 0.0) return 0;

    if (mu <= 10.0) {
        // Inversion by sequential search.
        const double u = uniform01();
        double p = std::exp(-mu);
        double cdf = p;
        std::uint64_t k = 0;
        const std::uint64_t cap = 40 + static_cast<std::uint64_t>(12.0 * mu);
        while (u > cdf && k < cap) {
            ++k;
            p *= mu / static_cast<double>(k);
            cdf += p;
        }
        return k;
    }

    // PTRS transformed rejection (Hormann 1993), exact for mu >= 10.
    const double b = 0.931 + 2.53 * std::sqrt(mu);
    const double a = -0.059 + 0.02483 * b;
    const double inv_alpha = 1.1239 + 1.1328 / (b - 3.4);
    const double v_r = 0.9277 - 3.6224 / (b - 2.0);
    const double log_mu = std::log(mu);

    for (;;) {
        const double u = uniform01() - 0.5;
        const double v = uniform01();
        const double us = 0.5 - std::abs(u);
        const double kf = std::floor((2.0 * a / us + b) * u + mu + 0.43);
        if (us >= 0.07 && v <= v_r) return static_cast<std::uint64_t>(kf);
        if (kf < 0.0 || (us < 0.013 && v > us)) continue;
        const double k = kf;
        if (std::log(v * inv_alpha / (a / (us * us) + b)) <=
            k * log_mu - mu - std::lgamma(k + 1.0)) {
            return static_cast<std::uint64_t>(kf);
        }
    }
}

} // namespace tiltgraph
