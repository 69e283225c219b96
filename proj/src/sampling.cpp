#include "narayana/sampling.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <limits>
#include <sstream>
#include <stdexcept>

namespace narayana {

namespace {

std::vector<std::string_view> split(std::string_view text, char sep)
{
    std::vector<std::string_view> parts;
    std::size_t start = 0;
    for (;;) {
        const auto pos = text.find(sep, start);
        parts.push_back(text.substr(start, pos == std::string_view::npos ? std::string_view::npos : pos - start));
        if (pos == std::string_view::npos) break;
        start = pos + 1;
    }
    return parts;
}

Integer parse_integer(std::string_view s)
{
    Integer v = 0;
    const auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
    if (ec != std::errc{} || ptr != s.data() + s.size()) {
        throw std::invalid_argument("expected an integer, got '" + std::string(s) + "'");
    }
    return v;
}

double parse_real(std::string_view s)
{
    // from_chars for double is missing from older libstdc++.
    std::istringstream in{std::string(s)};
    double v = 0.0;
    in >> v;
    if (!in || !in.eof()) throw std::invalid_argument("expected a number, got '" + std::string(s) + "'");
    return v;
}

} // namespace

Distribution Distribution::uniform(Integer max_value)
{
    if (max_value < 1) throw std::invalid_argument("uniform distribution needs K >= 1");
    return {Kind::Uniform, max_value, 1.0, 0.5};
}

Distribution Distribution::zipf(double exponent, Integer max_value)
{
    if (max_value < 1) throw std::invalid_argument("zipf distribution needs K >= 1");
    if (!(exponent > 0.0) || !std::isfinite(exponent)) throw std::invalid_argument("zipf exponent must be positive");
    if (max_value > (Integer{1} << 26)) throw std::invalid_argument("zipf support is limited to 2^26 values");
    return {Kind::Zipf, max_value, exponent, 0.5};
}

Distribution Distribution::geometric(double p)
{
    if (!(p > 0.0 && p <= 1.0)) throw std::invalid_argument("geometric p must lie in (0, 1]");
    return {Kind::Geometric, 1, 1.0, p};
}

Distribution Distribution::parse(std::string_view text)
{
    const auto parts = split(text, ':');
    if (parts[0] == "uniform" && parts.size() == 2) return uniform(parse_integer(parts[1]));
    if (parts[0] == "zipf" && parts.size() == 3) return zipf(parse_real(parts[1]), parse_integer(parts[2]));
    if (parts[0] == "geometric" && parts.size() == 2) return geometric(parse_real(parts[1]));
    throw std::invalid_argument("unknown distribution '" + std::string(text) +
                                "' (expected uniform:K, zipf:S:K or geometric:P)");
}

std::string Distribution::name() const
{
    std::ostringstream out;
    switch (kind) {
    case Kind::Uniform: out << "uniform:" << max_value; break;
    case Kind::Zipf: out << "zipf:" << exponent << ':' << max_value; break;
    case Kind::Geometric: out << "geometric:" << p; break;
    }
    return out.str();
}

std::uint64_t uniform_below(std::mt19937_64& rng, std::uint64_t bound)
{
    if (bound == 0) throw std::invalid_argument("uniform_below needs a positive bound");
    // Reject the top partial block so every residue is equally likely.
    const std::uint64_t limit = std::numeric_limits<std::uint64_t>::max() - std::numeric_limits<std::uint64_t>::max() % bound;
    std::uint64_t x = 0;
    do {
        x = rng();
    } while (x >= limit);
    return x % bound;
}

double unit_interval(std::mt19937_64& rng) { return static_cast<double>(rng() >> 11) * 0x1.0p-53; }

std::vector<Integer> draw_samples(const Distribution& dist, std::size_t count, std::uint64_t seed)
{
    std::mt19937_64 rng(seed);
    std::vector<Integer> out;
    out.reserve(count);
    switch (dist.kind) {
    case Distribution::Kind::Uniform:
        for (std::size_t i = 0; i < count; ++i) {
            out.push_back(1 + static_cast<Integer>(uniform_below(rng, static_cast<std::uint64_t>(dist.max_value))));
        }
        break;
    case Distribution::Kind::Zipf: {
        std::vector<double> cdf(static_cast<std::size_t>(dist.max_value));
        double total = 0.0;
        for (std::size_t k = 0; k < cdf.size(); ++k) {
            total += std::pow(static_cast<double>(k + 1), -dist.exponent);
            cdf[k] = total;
        }
        for (std::size_t i = 0; i < count; ++i) {
            const double u = unit_interval(rng) * total;
            const auto it = std::upper_bound(cdf.begin(), cdf.end(), u);
            const auto k = std::min<std::size_t>(static_cast<std::size_t>(it - cdf.begin()), cdf.size() - 1);
            out.push_back(static_cast<Integer>(k + 1));
        }
        break;
    }
    case Distribution::Kind::Geometric: {
        const double log_q = std::log1p(-dist.p);
        for (std::size_t i = 0; i < count; ++i) {
            if (dist.p == 1.0) {
                out.push_back(1);
                continue;
            }
            // 1 - u lies in (0, 1], so the log is finite.
            const double draw = std::floor(std::log(1.0 - unit_interval(rng)) / log_q) + 1.0;
            out.push_back(draw >= 9.2e18 ? kMaxEncodable : static_cast<Integer>(draw));
        }
        break;
    }
    }
    return out;
}

std::vector<Integer> enumerate_support(const Distribution& dist)
{
    if (dist.kind != Distribution::Kind::Uniform) {
        throw std::invalid_argument("only a uniform distribution has an enumerable support");
    }
    if (dist.max_value > (Integer{1} << 28)) throw std::invalid_argument("support too large to enumerate");
    std::vector<Integer> out(static_cast<std::size_t>(dist.max_value));
    for (std::size_t i = 0; i < out.size(); ++i) out[i] = static_cast<Integer>(i + 1);
    return out;
}

} // namespace narayana
