#include "narayana/sequences.hpp"

#include "narayana/error.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace narayana {

std::string to_string(WideInt value)
{
    if (value == 0) return "0";
    const bool negative = value < 0;
    auto magnitude = negative ? -static_cast<unsigned __int128>(value) : static_cast<unsigned __int128>(value);
    std::string digits;
    while (magnitude != 0) {
        digits.push_back(static_cast<char>('0' + static_cast<int>(magnitude % 10)));
        magnitude /= 10;
    }
    if (negative) digits.push_back('-');
    std::reverse(digits.begin(), digits.end());
    return digits;
}

std::string describe(const SequenceKind& k)
{
    struct Visitor {
        std::string operator()(const kind::Narayana&) const { return "narayana"; }
        std::string operator()(const kind::JSeries&) const { return "j-series"; }
        std::string operator()(const kind::General& g) const
        {
            return "general(" + std::to_string(g.a) + "," + std::to_string(g.b) + "," + std::to_string(g.c) + ")";
        }
        std::string operator()(const kind::Variant& v) const { return "variant(" + std::to_string(v.a) + ")"; }
        std::string operator()(const kind::Fibonacci&) const { return "fibonacci"; }
    };
    return std::visit(Visitor{}, k);
}

namespace {

struct Seeds {
    std::vector<WideInt> values;
    std::size_t lag = 3; // T(k) = T(k-1) + T(k-lag)
    bool bounded = true; // subject to capacity_limit
};

Seeds seeds_for(const SequenceKind& k)
{
    struct Visitor {
        Seeds operator()(const kind::Narayana&) const { return {{1, 1, 1}, 3, true}; }
        Seeds operator()(const kind::JSeries&) const { return {{1, 2, 3}, 3, true}; }
        Seeds operator()(const kind::General& g) const { return {{g.a, g.b, g.c}, 3, true}; }
        Seeds operator()(const kind::Variant& v) const
        {
            const WideInt a = v.a;
            return {{a, 3 - a, 1 - a}, 3, false};
        }
        Seeds operator()(const kind::Fibonacci&) const { return {{1, 2}, 2, true}; }
    };
    return std::visit(Visitor{}, k);
}

WideInt magnitude(WideInt v) { return v < 0 ? -v : v; }

} // namespace

SequenceTable::SequenceTable(SequenceKind kind, WideInt capacity_limit)
    : kind_(std::move(kind)), capacity_limit_(capacity_limit)
{
    if (capacity_limit_ < static_cast<WideInt>(kMaxEncodable)) {
        throw std::invalid_argument("capacity limit must be at least 2^63 - 1");
    }
    auto seeds = seeds_for(kind_);
    terms_ = std::move(seeds.values);
}

SequenceTable::SequenceTable(const SequenceTable& other) : kind_(other.kind_), capacity_limit_(other.capacity_limit_)
{
    std::lock_guard lock(other.mutex_);
    terms_ = other.terms_;
}

SequenceTable& SequenceTable::operator=(const SequenceTable& other)
{
    if (this == &other) return *this;
    std::scoped_lock lock(mutex_, other.mutex_);
    kind_ = other.kind_;
    capacity_limit_ = other.capacity_limit_;
    terms_ = other.terms_;
    return *this;
}

void SequenceTable::grow_locked(std::size_t k) const
{
    if (k < terms_.size()) return;
    const auto seeds = seeds_for(kind_);
    for (const auto& seed : terms_) {
        if (seeds.bounded && magnitude(seed) > capacity_limit_) {
            throw CapacityExceeded("seed of " + describe(kind_) + " exceeds the capacity limit");
        }
    }
    terms_.reserve(k + 1);
    while (terms_.size() <= k) {
        const std::size_t i = terms_.size();
        WideInt next = 0;
        if (__builtin_add_overflow(terms_[i - 1], terms_[i - seeds.lag], &next)) {
            throw CapacityExceeded("term " + std::to_string(i) + " of " + describe(kind_) +
                                   " overflows the 128-bit term range");
        }
        if (seeds.bounded && magnitude(next) > capacity_limit_) {
            throw CapacityExceeded("term " + std::to_string(i) + " of " + describe(kind_) +
                                   " exceeds the capacity limit " + to_string(capacity_limit_));
        }
        terms_.push_back(next);
    }
}

WideInt SequenceTable::term(std::size_t k) const
{
    std::lock_guard lock(mutex_);
    grow_locked(k);
    return terms_[k];
}

std::vector<WideInt> SequenceTable::prefix(std::size_t count) const
{
    std::lock_guard lock(mutex_);
    if (count == 0) return {};
    grow_locked(count - 1);
    return {terms_.begin(), terms_.begin() + static_cast<std::ptrdiff_t>(count)};
}

std::size_t SequenceTable::cached_size() const
{
    std::lock_guard lock(mutex_);
    return terms_.size();
}

WideInt term(const SequenceTable& table, std::size_t k) { return table.term(k); }

std::span<const Integer> j_series()
{
    static const std::vector<Integer> table = [] {
        std::vector<Integer> j{1, 2, 3};
        for (;;) {
            Integer next = 0;
            if (__builtin_add_overflow(j[j.size() - 1], j[j.size() - 3], &next)) break;
            j.push_back(next);
        }
        return j;
    }();
    return table;
}

Integer j_term(std::size_t k)
{
    const auto j = j_series();
    if (k >= j.size()) {
        throw CapacityExceeded("J(" + std::to_string(k) + ") exceeds 2^63 - 1");
    }
    return j[k];
}

std::size_t largest_j_index_leq(Integer n)
{
    if (n < 1) throw std::invalid_argument("largest_j_index_leq requires n >= 1");
    const auto j = j_series();
    const auto it = std::upper_bound(j.begin(), j.end(), n);
    return static_cast<std::size_t>(it - j.begin()) - 1;
}

WideInt variant_term(Integer a, std::size_t k)
{
    return SequenceTable(kind::Variant{a}).term(k);
}

WideInt general_term(Integer a, Integer b, Integer c, std::size_t k)
{
    return SequenceTable(kind::General{a, b, c}).term(k);
}

double narayana_ratio_limit(double tolerance)
{
    if (!(tolerance > 0.0)) throw std::invalid_argument("tolerance must be positive");

    constexpr int kIterationBudget = 200;
    auto f = [](double x) { return x * x * x - x * x - 1.0; };
    auto df = [](double x) { return 3.0 * x * x - 2.0 * x; };

    // f(1) = -1, f(2) = 3; f is increasing on [1, 2].
    double lo = 1.0;
    double hi = 2.0;
    int iterations = 0;
    for (; iterations < kIterationBudget && hi - lo > 1e-6; ++iterations) {
        const double mid = 0.5 * (lo + hi);
        (f(mid) < 0.0 ? lo : hi) = mid;
    }

    double x = 0.5 * (lo + hi);
    for (; iterations < kIterationBudget; ++iterations) {
        const double fx = f(x);
        if (std::abs(fx) < tolerance) return x;
        double next = x - fx / df(x);
        if (next <= lo || next >= hi) next = 0.5 * (lo + hi);
        (f(next) < 0.0 ? lo : hi) = next;
        if (next == x) break;
        x = next;
    }
    if (std::abs(f(x)) < tolerance) return x;
    throw NonConvergence("cubic root did not reach tolerance within " + std::to_string(kIterationBudget) +
                         " iterations");
}

std::vector<RatioSample> consecutive_ratios(std::size_t count)
{
    if (count < 2) throw std::invalid_argument("consecutive_ratios requires count >= 2");
    const SequenceTable table(kind::Narayana{});
    const auto terms = table.prefix(count);
    std::vector<RatioSample> samples;
    samples.reserve(count - 1);
    for (std::size_t k = 1; k < count; ++k) {
        const auto num = static_cast<long double>(terms[k]);
        const auto den = static_cast<long double>(terms[k - 1]);
        samples.push_back({k, static_cast<double>(num / den)});
    }
    return samples;
}

} // namespace narayana
