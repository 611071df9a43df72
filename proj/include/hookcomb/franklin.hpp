#pragma once

#include <optional>
#include <stdexcept>
#include <vector>

#include "partition.hpp"

namespace hookcomb {

class NotDistinctError : public std::invalid_argument {
public:
    NotDistinctError() : std::invalid_argument("Franklin's involution needs distinct parts") {}
};

/// Moved(partition) or FixedPoint.
class FranklinOutcome {
public:
    static FranklinOutcome fixed_point() { return FranklinOutcome(std::nullopt); }
    static FranklinOutcome moved(Partition p) { return FranklinOutcome(std::move(p)); }

    bool is_fixed_point() const noexcept { return !image_; }
    const Partition& image() const {
        if (!image_) throw std::logic_error("fixed point has no image");
        return *image_;
    }

    friend bool operator==(const FranklinOutcome&, const FranklinOutcome&) = default;

private:
    explicit FranklinOutcome(std::optional<Partition> image) : image_(std::move(image)) {}
    std::optional<Partition> image_;
};

/// Length of the maximal run p1, p1-1, p1-2, ... at the top of p.
inline std::size_t staircase_run(const Partition& p) {
    std::size_t r = 1;
    while (r < p.length() && p[r] == p[r - 1] - 1) ++r;
    return r;
}

/// Franklin's involution on distinct partitions.
///
/// With s the smallest part and r the top staircase run: if s <= r the
/// smallest part is removed and the s largest parts grow by one; otherwise
/// the r largest parts shrink by one and a new part r is appended. When the
/// run reaches the smallest part and s is r or r+1 neither move is possible
/// and p is a fixed point. Size and perimeter are preserved, the length
/// changes by one.
inline FranklinOutcome franklin(const Partition& p) {
    if (!has_distinct_parts(p)) throw NotDistinctError();
    const auto len = p.length();
    const auto s = static_cast<std::size_t>(p.smallest());
    const std::size_t r = staircase_run(p);
    const bool run_reaches_bottom = r == len;

    if (run_reaches_bottom && (s == r || s == r + 1)) return FranklinOutcome::fixed_point();

    std::vector<Part> parts = p.parts();
    if (s <= r) {
        parts.pop_back();
        for (std::size_t i = 0; i < s; ++i) ++parts[i];
    } else {
        for (std::size_t i = 0; i < r; ++i) --parts[i];
        parts.push_back(static_cast<Part>(r));
    }
    return FranklinOutcome::moved(make_partition(std::move(parts)));
}

}  // namespace hookcomb
