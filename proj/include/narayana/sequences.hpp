#pragma once

#include <cstddef>
#include <cstdint>
#include <limits>
#include <mutex>
#include <span>
#include <string>
#include <variant>
#include <vector>

namespace narayana {

// Values handed to the codecs: positive integers up to 2^63 - 1.
using Integer = std::int64_t;

// Sequence terms. Wider than Integer so ratio samples can run past the
// encodable range (N(200) is about 9.7e32).
using WideInt = __int128;

inline constexpr Integer kMaxEncodable = std::numeric_limits<Integer>::max();
inline constexpr WideInt kWideMax = static_cast<WideInt>(~static_cast<unsigned __int128>(0) >> 1);

std::string to_string(WideInt value);

namespace kind {
struct Narayana {
    bool operator==(const Narayana&) const = default;
};
// J(k) = N(k + 2): 1, 2, 3, 4, 6, 9, ...
struct JSeries {
    bool operator==(const JSeries&) const = default;
};
// Seeds a, b, c under T(k) = T(k-1) + T(k-3).
struct General {
    Integer a = 1;
    Integer b = 2;
    Integer c = 3;
    bool operator==(const General&) const = default;
};
// Seeds a, 3 - a, 1 - a under the Narayana recurrence. Only `a` is stored.
struct Variant {
    Integer a = 0;
    bool operator==(const Variant&) const = default;
};
// 1, 2, 3, 5, 8, ... (no duplicated 1).
struct Fibonacci {
    bool operator==(const Fibonacci&) const = default;
};
} // namespace kind

using SequenceKind = std::variant<kind::Narayana, kind::JSeries, kind::General, kind::Variant, kind::Fibonacci>;

std::string describe(const SequenceKind& k);

/// Lazily grown, append-only table of sequence terms.
///
/// Once an index is cached its value never changes. Growth is guarded by an
/// internal mutex, so a table may be shared between threads. Growth past the
/// capacity limit (or past the WideInt range) throws CapacityExceeded; variant
/// tables are only bounded by the WideInt range.
class SequenceTable {
public:
    explicit SequenceTable(SequenceKind kind, WideInt capacity_limit = kWideMax);

    SequenceTable(const SequenceTable& other);
    SequenceTable& operator=(const SequenceTable& other);

    [[nodiscard]] const SequenceKind& kind() const noexcept { return kind_; }
    [[nodiscard]] WideInt capacity_limit() const noexcept { return capacity_limit_; }

    [[nodiscard]] WideInt term(std::size_t k) const;

    // Copy of terms [0, count).
    [[nodiscard]] std::vector<WideInt> prefix(std::size_t count) const;

    [[nodiscard]] std::size_t cached_size() const;

private:
    void grow_locked(std::size_t k) const;

    SequenceKind kind_;
    WideInt capacity_limit_;
    mutable std::mutex mutex_;
    mutable std::vector<WideInt> terms_;
};

WideInt term(const SequenceTable& table, std::size_t k);

// Every J term that fits in Integer (indices 0..113), built once.
std::span<const Integer> j_series();

Integer j_term(std::size_t k);

// d with J(d) <= n < J(d + 1). Requires n >= 1.
std::size_t largest_j_index_leq(Integer n);

WideInt variant_term(Integer a, std::size_t k);

WideInt general_term(Integer a, Integer b, Integer c, std::size_t k);

// Real root of L^3 - L^2 - 1 = 0 (about 1.4655712318767680).
double narayana_ratio_limit(double tolerance = 1e-14);

struct RatioSample {
    std::size_t k = 0;
    double ratio = 0.0;
};

// N(k) / N(k - 1) for k = 1 .. count - 1.
std::vector<RatioSample> consecutive_ratios(std::size_t count);

} // namespace narayana
