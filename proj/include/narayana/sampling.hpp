#pragma once

#include "narayana/sequences.hpp"

#include <cstddef>
#include <cstdint>
#include <random>
#include <string>
#include <string_view>
#include <vector>

namespace narayana {

// Value distributions for benchmark samples. Sampling only uses raw
// std::mt19937_64 output, whose sequence the standard fixes, so a seed gives
// the same samples on every platform.
struct Distribution {
    enum class Kind { Uniform, Zipf, Geometric };

    Kind kind = Kind::Uniform;
    Integer max_value = 1; // uniform and zipf support is [1, max_value]
    double exponent = 1.0; // zipf
    double p = 0.5;        // geometric success probability, support [1, inf)

    static Distribution uniform(Integer max_value);
    static Distribution zipf(double exponent, Integer max_value);
    static Distribution geometric(double p);

    // "uniform:K", "zipf:S:K" or "geometric:P".
    static Distribution parse(std::string_view text);

    [[nodiscard]] std::string name() const;
};

// Uniform in [0, bound) by rejection on 64-bit draws.
std::uint64_t uniform_below(std::mt19937_64& rng, std::uint64_t bound);

// Uniform in [0, 1) from the top 53 bits of a draw.
double unit_interval(std::mt19937_64& rng);

std::vector<Integer> draw_samples(const Distribution& dist, std::size_t count, std::uint64_t seed);

// Each value of a uniform distribution's support once, in order.
std::vector<Integer> enumerate_support(const Distribution& dist);

} // namespace narayana
