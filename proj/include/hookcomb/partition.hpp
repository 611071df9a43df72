#pragma once

#include <algorithm>
#include <cstdint>
#include <numeric>
#include <ostream>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

namespace hookcomb {

using Part = std::int64_t;

class PartitionError : public std::invalid_argument {
public:
    enum class Kind { EmptyPartition, NonPositivePart, NotWeaklyDecreasing };

    PartitionError(Kind kind, std::size_t index)
        : std::invalid_argument(describe(kind, index)), kind_(kind), index_(index) {}

    Kind kind() const noexcept { return kind_; }
    /// 0-based index of the first offending entry (0 for EmptyPartition).
    std::size_t index() const noexcept { return index_; }

private:
    static std::string describe(Kind kind, std::size_t index) {
        switch (kind) {
        case Kind::EmptyPartition: return "empty partition";
        case Kind::NonPositivePart: return "non-positive part at index " + std::to_string(index);
        case Kind::NotWeaklyDecreasing:
            return "parts not weakly decreasing at index " + std::to_string(index);
        }
        return "invalid partition";
    }

    Kind kind_;
    std::size_t index_;
};

/// A non-empty integer partition, parts stored largest first.
///
/// The empty partition is not representable; series that carry its constant
/// term 1 add it explicitly.
class Partition {
public:
    const std::vector<Part>& parts() const noexcept { return parts_; }
    Part operator[](std::size_t i) const { return parts_[i]; }

    Part largest() const noexcept { return parts_.front(); }
    Part smallest() const noexcept { return parts_.back(); }
    std::size_t length() const noexcept { return parts_.size(); }
    Part size() const noexcept { return std::accumulate(parts_.begin(), parts_.end(), Part{0}); }

    /// Largest hook length: the hook of the top-left cell.
    Part perimeter() const noexcept { return largest() + static_cast<Part>(length()) - 1; }
    Part rank() const noexcept { return largest() - static_cast<Part>(length()); }

    friend bool operator==(const Partition&, const Partition&) = default;
    friend auto operator<=>(const Partition& a, const Partition& b) { return a.parts_ <=> b.parts_; }

private:
    explicit Partition(std::vector<Part> parts) : parts_(std::move(parts)) {}
    friend Partition make_partition(std::vector<Part> parts);

    std::vector<Part> parts_;
};

inline Partition make_partition(std::vector<Part> parts) {
    using K = PartitionError::Kind;
    if (parts.empty()) throw PartitionError(K::EmptyPartition, 0);
    for (std::size_t i = 0; i < parts.size(); ++i) {
        if (parts[i] < 1) throw PartitionError(K::NonPositivePart, i);
        if (i > 0 && parts[i] > parts[i - 1]) throw PartitionError(K::NotWeaklyDecreasing, i);
    }
    return Partition(std::move(parts));
}

inline Partition make_partition(std::span<const Part> parts) {
    return make_partition(std::vector<Part>(parts.begin(), parts.end()));
}

inline Partition make_partition(std::initializer_list<Part> parts) {
    return make_partition(std::vector<Part>(parts));
}

/// Comma-joined parts, largest first, e.g. "6,5,4,3".
inline std::string to_string(const Partition& p) {
    std::string s;
    for (std::size_t i = 0; i < p.length(); ++i) {
        if (i) s += ',';
        s += std::to_string(p[i]);
    }
    return s;
}

inline std::ostream& operator<<(std::ostream& os, const Partition& p) {
    return os << '(' << to_string(p) << ')';
}

/// Hook length of every cell, row by row; row i has parts[i] entries.
inline std::vector<std::vector<Part>> hook_lengths(const Partition& p) {
    const auto& rows = p.parts();
    std::vector<std::vector<Part>> table(rows.size());
    for (std::size_t i = 0; i < rows.size(); ++i) {
        table[i].resize(static_cast<std::size_t>(rows[i]));
        // leg of column j = number of rows below i that reach column j
        std::size_t below = rows.size();
        for (Part j = 0; j < rows[i]; ++j) {
            while (below > i + 1 && rows[below - 1] <= j) --below;
            const Part arm = rows[i] - j - 1;
            const Part leg = static_cast<Part>(below - i - 1);
            table[i][static_cast<std::size_t>(j)] = arm + leg + 1;
        }
    }
    return table;
}

/// Transpose of the Young diagram.
inline Partition conjugate(const Partition& p) {
    std::vector<Part> cols(static_cast<std::size_t>(p.largest()), 0);
    for (Part row : p.parts())
        for (Part j = 0; j < row; ++j) ++cols[static_cast<std::size_t>(j)];
    return make_partition(std::move(cols));
}

inline bool has_distinct_parts(const Partition& p) {
    return std::adjacent_find(p.parts().begin(), p.parts().end()) == p.parts().end();
}

}  // namespace hookcomb
