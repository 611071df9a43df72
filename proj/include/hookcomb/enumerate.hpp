#pragma once

#include <cstdint>
#include <iterator>
#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "bigint.hpp"
#include "constraint_class.hpp"
#include "partition.hpp"

namespace hookcomb {

/// Adapts a generator with `std::optional<Partition> next()` to a
/// single-pass range usable in range-for.
template <class Generator>
class PartitionStream {
public:
    explicit PartitionStream(Generator gen) : gen_(std::move(gen)) {}

    class iterator {
    public:
        using value_type = Partition;
        using difference_type = std::ptrdiff_t;
        using iterator_category = std::input_iterator_tag;

        iterator() = default;
        explicit iterator(Generator* gen) : gen_(gen) { advance(); }

        const Partition& operator*() const { return *current_; }
        const Partition* operator->() const { return &*current_; }
        iterator& operator++() {
            advance();
            return *this;
        }
        void operator++(int) { advance(); }
        friend bool operator==(const iterator& it, std::default_sentinel_t) { return !it.current_; }

    private:
        void advance() { current_ = gen_->next(); }

        Generator* gen_ = nullptr;
        std::optional<Partition> current_;
    };

    iterator begin() { return iterator(&gen_); }
    std::default_sentinel_t end() const { return {}; }

    std::optional<Partition> next() { return gen_.next(); }

    std::vector<Partition> collect() {
        std::vector<Partition> out;
        for (auto p = gen_.next(); p; p = gen_.next()) out.push_back(std::move(*p));
        return out;
    }

private:
    Generator gen_;
};

/// Largest perimeter the word-based stream accepts (the middle letters must fit
/// a 64-bit mask).
inline constexpr Part kMaxEnumerablePerimeter = 64;

/// Walks the 2^(n-1) profile words with perimeter n, filtered by class.
///
/// Words are visited grouped by their number of Es (the largest part), from
/// n down to 1. Within a group the middle letters are read northeast to
/// southwest as a bitmask (E = 1, first letter most significant), and masks
/// of fixed popcount are visited in increasing order. Both orders coincide
/// with lexicographically decreasing parts.
class PerimeterGenerator {
public:
    PerimeterGenerator(Part n, ConstraintClass c) : n_(n), class_(c) {
        if (n < 1) throw std::invalid_argument("perimeter must be >= 1");
        if (n > kMaxEnumerablePerimeter)
            throw std::out_of_range("perimeter enumeration limited to n <= " + std::to_string(kMaxEnumerablePerimeter));
        largest_ = n + 1;
        width_ = static_cast<unsigned>(n - 1);
    }

    std::optional<Partition> next() {
        for (;;) {
            if (!advance_mask()) return std::nullopt;
            Partition p = decode();
            if (is_member(p, class_)) return p;
        }
    }

private:
    bool advance_mask() {
        if (started_group_) {
            if (mask_ != 0) {
                // Gosper's hack: next larger integer with the same popcount.
                const std::uint64_t c = mask_ & (~mask_ + 1);
                const std::uint64_t r = mask_ + c;
                mask_ = (((r ^ mask_) >> 2) / c) | r;
                if (width_ == 64 || mask_ < (std::uint64_t{1} << width_)) return true;
            }
        }
        if (--largest_ < 1) return false;
        const auto ones = static_cast<unsigned>(largest_ - 1);
        mask_ = ones == 0 ? 0 : (ones >= 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << ones) - 1);
        started_group_ = true;
        return true;
    }

    Partition decode() const {
        std::vector<Part> parts;
        parts.reserve(static_cast<std::size_t>(n_ + 1 - largest_));
        parts.push_back(largest_);
        Part east = 0;
        for (unsigned i = width_; i-- > 0;) {
            if ((mask_ >> i) & 1U) ++east;
            else parts.push_back(largest_ - east);
        }
        return make_partition(std::move(parts));
    }

    Part n_;
    ConstraintClass class_;
    Part largest_;
    unsigned width_;
    std::uint64_t mask_ = 0;
    bool started_group_ = false;
};

using PerimeterStream = PartitionStream<PerimeterGenerator>;

/// Partitions with perimeter n in class c, lexicographically decreasing.
inline PerimeterStream enumerate_by_perimeter(Part n, ConstraintClass c) {
    return PerimeterStream(PerimeterGenerator(n, c));
}

/// All partitions of 1, 2, ..., max_size (size ascending, lexicographically
/// decreasing within a size), optionally restricted to distinct parts.
class SizeGenerator {
public:
    SizeGenerator(Part max_size, bool distinct_only, Part min_size = 1)
        : max_size_(max_size), distinct_(distinct_only), size_(min_size - 1) {
        if (max_size < 1) throw std::invalid_argument("maximum size must be >= 1");
        if (min_size < 1) throw std::invalid_argument("minimum size must be >= 1");
    }

    std::optional<Partition> next() {
        if (!current_.empty() && step()) return make_partition(current_);
        if (size_ >= max_size_) return std::nullopt;
        current_.assign(1, ++size_);
        return make_partition(current_);
    }

private:
    // Lexicographically largest fill of `rest` with parts <= cap (< cap+1
    // and strictly decreasing when distinct_). False if impossible.
    bool fill(Part rest, Part cap) {
        while (rest > 0) {
            if (cap < 1) return false;
            const Part v = std::min(rest, cap);
            current_.push_back(v);
            rest -= v;
            if (distinct_) cap = v - 1;
            else cap = v;
        }
        return true;
    }

    bool fillable(Part rest, Part cap) const {
        if (!distinct_) return rest == 0 || cap >= 1;
        return cap >= 0 && rest <= cap * (cap + 1) / 2;
    }

    // Next partition of the same size in lexicographically decreasing order.
    bool step() {
        Part suffix = 0;
        for (std::size_t i = current_.size(); i-- > 0;) {
            suffix += current_[i];
            const Part v = current_[i] - 1;
            if (v < 1) continue;
            const Part rest = suffix - v;
            const Part cap = distinct_ ? v - 1 : v;
            if (!fillable(rest, cap)) continue;
            current_.resize(i);
            current_.push_back(v);
            fill(rest, cap);
            return true;
        }
        return false;
    }

    Part max_size_;
    bool distinct_;
    Part size_;
    std::vector<Part> current_;
};

using SizeStream = PartitionStream<SizeGenerator>;

inline SizeStream enumerate_by_size(Part max_size, bool distinct_only) {
    return SizeStream(SizeGenerator(max_size, distinct_only));
}

// ---------------------------------------------------------------------------
// Counting
// ---------------------------------------------------------------------------

/// c(n) = c(n-1) + c(n-d-1), c(1..d+1) = 1: coefficients of q/(1-q-q^{d+1}).
inline BigInt d_chain_count(Part n, Part d) {
    if (n < 1) return 0;
    std::vector<BigInt> c(static_cast<std::size_t>(n) + 1, 0);
    for (Part k = 1; k <= n; ++k) {
        const auto i = static_cast<std::size_t>(k);
        if (k <= d + 1) c[i] = 1;
        else c[i] = c[i - 1] + c[i - 1 - static_cast<std::size_t>(d)];
    }
    return c.back();
}

inline BigInt count_by_perimeter(Part n, const ConstraintClass& c) {
    if (n < 1) throw std::invalid_argument("perimeter must be >= 1");
    using K = ConstraintClass::Kind;
    switch (c.kind()) {
    case K::Unrestricted: return BigInt(1) << static_cast<unsigned>(n - 1);
    case K::Distinct:
    case K::Odd: return fibonacci(static_cast<std::uint64_t>(n));
    case K::DDistinct:
    case K::ModOne:
    case K::GClass: return d_chain_count(n, c.d());
    }
    return 0;
}

/// Length of the enumeration stream; the brute-force counterpart of
/// count_by_perimeter.
inline BigInt count_enumerated(Part n, const ConstraintClass& c) {
    BigInt total = 0;
    auto stream = enumerate_by_perimeter(n, c);
    for (auto p = stream.next(); p; p = stream.next()) ++total;
    return total;
}

struct RefinementKey {
    enum class Kind { LargestPart, NumParts, Rank };

    static RefinementKey largest_part(Part m) { return {Kind::LargestPart, m}; }
    static RefinementKey num_parts(Part k) { return {Kind::NumParts, k}; }
    static RefinementKey rank(Part k) { return {Kind::Rank, k}; }

    Kind kind;
    Part value;
};

inline Part statistic(const Partition& p, RefinementKey::Kind kind) {
    switch (kind) {
    case RefinementKey::Kind::LargestPart: return p.largest();
    case RefinementKey::Kind::NumParts: return static_cast<Part>(p.length());
    case RefinementKey::Kind::Rank: return p.rank();
    }
    return 0;
}

inline bool matches(const Partition& p, const RefinementKey& key) { return statistic(p, key.kind) == key.value; }

class RefinementError : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

/// Perimeter up to which count_refined falls back to enumeration when no
/// closed form is known.
inline constexpr Part kRefinedEnumerationLimit = 24;

namespace detail {

// A class whose profile words are E + (free sequence over two middle letters)
// + N. Each middle letter has a length and contributes dx to the largest part
// and dy to the number of parts.
struct MiddleLetter {
    Part length, dx, dy;
};

struct WordModel {
    MiddleLetter first, second;
};

inline std::optional<WordModel> word_model(const ConstraintClass& c) {
    using K = ConstraintClass::Kind;
    const Part d = c.d();
    switch (c.kind()) {
    case K::Unrestricted: return WordModel{{1, 1, 0}, {1, 0, 1}};           // E | N
    case K::Distinct:
    case K::DDistinct: return WordModel{{1, 1, 0}, {d + 1, d, 1}};          // E | N E^d
    case K::Odd:
    case K::ModOne: return WordModel{{1, 0, 1}, {d + 1, d + 1, 0}};         // N | E^{d+1}
    case K::GClass: return std::nullopt;
    }
    return std::nullopt;
}

// Solves  a*len1 + b*len2 = n-1,  a*c1 + b*c2 = rhs  for naturals a, b and
// counts the arrangements binom(a+b, a).
inline std::optional<BigInt> count_from_model(const WordModel& m, Part n, const RefinementKey& key) {
    Part c1 = 0, c2 = 0, rhs = 0;
    switch (key.kind) {
    case RefinementKey::Kind::LargestPart:
        c1 = m.first.dx, c2 = m.second.dx, rhs = key.value - 1;
        break;
    case RefinementKey::Kind::NumParts:
        c1 = m.first.dy, c2 = m.second.dy, rhs = key.value - 1;
        break;
    case RefinementKey::Kind::Rank:
        c1 = m.first.dx - m.first.dy, c2 = m.second.dx - m.second.dy, rhs = key.value;
        break;
    }
    const Part total = n - 1;
    const Part det = m.first.length * c2 - m.second.length * c1;
    if (det == 0) return std::nullopt;
    const Part a_num = total * c2 - m.second.length * rhs;
    const Part b_num = m.first.length * rhs - c1 * total;
    if (a_num % det != 0 || b_num % det != 0) return BigInt(0);
    const Part a = a_num / det, b = b_num / det;
    if (a < 0 || b < 0) return BigInt(0);
    return binomial(a + b, a);
}

}  // namespace detail

/// Number of partitions in class c with perimeter n and the given refined
/// statistic. Closed forms from the two-letter word model where the class has
/// one; otherwise enumeration up to kRefinedEnumerationLimit.
inline BigInt count_refined(Part n, const RefinementKey& key, const ConstraintClass& c) {
    if (n < 1) throw std::invalid_argument("perimeter must be >= 1");
    if (const auto model = detail::word_model(c)) {
        if (auto v = detail::count_from_model(*model, n, key)) return *v;
    }
    if (n > kRefinedEnumerationLimit)
        throw RefinementError("InvalidKeyForClass: no closed form for class " + to_string(c) +
                              " and enumeration is limited to perimeter " +
                              std::to_string(kRefinedEnumerationLimit));
    BigInt total = 0;
    for (const auto& p : enumerate_by_perimeter(n, c))
        if (matches(p, key)) ++total;
    return total;
}

/// (h_DE(n), h_DO(n)): distinct partitions with perimeter n and an even /
/// odd number of parts.
struct ParitySplit {
    BigInt even;
    BigInt odd;

    friend bool operator==(const ParitySplit&, const ParitySplit&) = default;
};

inline ParitySplit parity_split_binomial(Part n) {
    ParitySplit s{0, 0};
    for (Part k = 0; 4 * k + 1 <= n + 1; ++k) {
        s.even += binomial(n - 2 * k - 2, 2 * k + 1);
        s.odd += binomial(n - 2 * k - 1, 2 * k);
    }
    return s;
}

inline ParitySplit parity_split_recurrence(Part n) {
    if (n < 1) throw std::invalid_argument("perimeter must be >= 1");
    // (even, odd) at n-2 and n-1, seeded with the values at 1 and 2
    BigInt even2 = 0, odd2 = 1, even1 = 0, odd1 = 1;
    if (n <= 2) return {0, 1};
    for (Part k = 3; k <= n; ++k) {
        BigInt even = even1 + odd2;
        BigInt odd = odd1 + even2;
        even2 = std::move(even1);
        odd2 = std::move(odd1);
        even1 = std::move(even);
        odd1 = std::move(odd);
    }
    return {even1, odd1};
}

inline ParitySplit parity_split_enumerated(Part n) {
    ParitySplit s{0, 0};
    for (const auto& p : enumerate_by_perimeter(n, ConstraintClass::distinct())) {
        if (p.length() % 2 == 0) ++s.even;
        else ++s.odd;
    }
    return s;
}

/// Perimeter up to which count_parity_split also cross-checks by enumeration.
inline constexpr Part kParityEnumerationLimit = 16;

inline ParitySplit count_parity_split(Part n) {
    if (n < 1) throw std::invalid_argument("perimeter must be >= 1");
    ParitySplit by_recurrence = parity_split_recurrence(n);
    if (parity_split_binomial(n) != by_recurrence)
        throw std::logic_error("parity split: binomial sums disagree with recurrence at n=" + std::to_string(n));
    if (n <= kParityEnumerationLimit && parity_split_enumerated(n) != by_recurrence)
        throw std::logic_error("parity split: enumeration disagrees with recurrence at n=" + std::to_string(n));
    return by_recurrence;
}

/// h_DE(n) - h_DO(n) by its period-6 closed form.
inline int excess_e(Part n) {
    if (n < 1) throw std::invalid_argument("perimeter must be >= 1");
    switch (n % 6) {
    case 0:
    case 3: return 0;
    case 1:
    case 2: return -1;
    default: return 1;
    }
}

struct EvenOdd {
    std::int64_t even = 0;
    std::int64_t odd = 0;

    friend bool operator==(const EvenOdd&, const EvenOdd&) = default;
};

/// Distinct partitions of n with largest part + length = r, split by the
/// parity of the length.
inline EvenOdd q_eo(Part r, Part n) {
    if (r < 1 || n < 1) throw std::invalid_argument("q_eo arguments must be >= 1");
    EvenOdd out;
    SizeStream stream(SizeGenerator(n, true, n));
    for (auto p = stream.next(); p; p = stream.next()) {
        if (p->largest() + static_cast<Part>(p->length()) != r) continue;
        if (p->length() % 2 == 0) ++out.even;
        else ++out.odd;
    }
    return out;
}

}  // namespace hookcomb
