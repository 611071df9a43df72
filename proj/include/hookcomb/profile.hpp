#pragma once

#include <algorithm>
#include <cstddef>
#include <functional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "partition.hpp"

namespace hookcomb {

enum class Letter : bool { E = false, N = true };

class ProfileError : public std::invalid_argument {
public:
    enum class Kind { EmptyWord, MustStartWithE, MustEndWithN, InvalidLetter };

    ProfileError(Kind kind, std::size_t position)
        : std::invalid_argument(describe(kind, position)), kind_(kind), position_(position) {}

    Kind kind() const noexcept { return kind_; }
    std::size_t position() const noexcept { return position_; }

private:
    static std::string describe(Kind kind, std::size_t pos) {
        switch (kind) {
        case Kind::EmptyWord: return "empty profile word";
        case Kind::MustStartWithE: return "profile word must start with E";
        case Kind::MustEndWithN: return "profile word must end with N (position " + std::to_string(pos) + ")";
        case Kind::InvalidLetter: return "invalid letter at position " + std::to_string(pos) + ", expected E or N";
        }
        return "invalid profile word";
    }

    Kind kind_;
    std::size_t position_;
};

/// E/N boundary word of a non-empty partition, read from the southwest corner
/// to the northeast corner. Always starts with E and ends with N.
class ProfileWord {
public:
    static ProfileWord from_letters(std::vector<bool> is_n) {
        using K = ProfileError::Kind;
        if (is_n.empty()) throw ProfileError(K::EmptyWord, 0);
        if (is_n.front()) throw ProfileError(K::MustStartWithE, 0);
        if (!is_n.back()) throw ProfileError(K::MustEndWithN, is_n.size() - 1);
        return ProfileWord(std::move(is_n));
    }

    static ProfileWord parse(std::string_view text) {
        std::vector<bool> bits;
        bits.reserve(text.size());
        for (std::size_t i = 0; i < text.size(); ++i) {
            if (text[i] == 'E') bits.push_back(false);
            else if (text[i] == 'N') bits.push_back(true);
            else throw ProfileError(ProfileError::Kind::InvalidLetter, i);
        }
        return from_letters(std::move(bits));
    }

    std::size_t size() const noexcept { return letters_.size(); }
    Letter operator[](std::size_t i) const { return letters_[i] ? Letter::N : Letter::E; }
    std::size_t count(Letter l) const {
        return static_cast<std::size_t>(std::count(letters_.begin(), letters_.end(), l == Letter::N));
    }

    std::string str() const {
        std::string s(letters_.size(), 'E');
        for (std::size_t i = 0; i < letters_.size(); ++i)
            if (letters_[i]) s[i] = 'N';
        return s;
    }

    friend bool operator==(const ProfileWord&, const ProfileWord&) = default;

private:
    explicit ProfileWord(std::vector<bool> bits) : letters_(std::move(bits)) {}

    std::vector<bool> letters_;  // true = N
};

inline std::string to_string(const ProfileWord& w) { return w.str(); }

inline ProfileWord to_profile(const Partition& p) {
    std::vector<bool> bits;
    bits.reserve(static_cast<std::size_t>(p.perimeter()) + 1);
    const auto& parts = p.parts();
    Part prev = 0;
    for (auto it = parts.rbegin(); it != parts.rend(); ++it) {
        bits.insert(bits.end(), static_cast<std::size_t>(*it - prev), false);
        bits.push_back(true);
        prev = *it;
    }
    return ProfileWord::from_letters(std::move(bits));
}

inline Partition from_profile(const ProfileWord& w) {
    std::vector<Part> parts;
    Part east = 0;
    for (std::size_t i = 0; i < w.size(); ++i) {
        if (w[i] == Letter::E) ++east;
        else parts.push_back(east);
    }
    std::reverse(parts.begin(), parts.end());
    return make_partition(std::move(parts));
}

inline Partition from_profile(std::string_view text) { return from_profile(ProfileWord::parse(text)); }

// ---------------------------------------------------------------------------
// Block grammar of the G_d class
//
//   Initial  = E N^j
//   TypeI    = E^{d+1} N^j
//   TypeII   = N E^d N^j
//   Terminal = N
//
// Middle blocks alternate I, II, I, ... starting with TypeI.
// ---------------------------------------------------------------------------

enum class BlockType { TypeI, TypeII };

struct MiddleBlock {
    BlockType type;
    std::size_t trailing;  // j, the number of trailing Ns

    friend bool operator==(const MiddleBlock&, const MiddleBlock&) = default;
};

struct BlockDecomposition {
    std::size_t initial = 0;  // j0
    std::vector<MiddleBlock> middles;

    friend bool operator==(const BlockDecomposition&, const BlockDecomposition&) = default;
};

/// Raised when a word is not the profile of a G_d partition.
class BlockGrammarError : public std::invalid_argument {
public:
    explicit BlockGrammarError(std::size_t position)
        : std::invalid_argument("word not in class: block grammar fails at letter " + std::to_string(position)),
          position_(position) {}

    /// 0-based index of the first letter after which no valid completion exists.
    std::size_t position() const noexcept { return position_; }

private:
    std::size_t position_;
};

namespace detail {

inline void check_block_parameter(Part d) {
    if (d < 1) throw std::invalid_argument("block grammar parameter d must be >= 1");
}

}  // namespace detail

/// Single left-to-right pass over maximal letter runs. An E-run has at most
/// two legal lengths in each state, the longer one being the merge with a
/// following TypeI block whose preceding block had j = 0.
inline BlockDecomposition decompose_blocks(const ProfileWord& w, Part d) {
    detail::check_block_parameter(d);
    const auto dd = static_cast<std::size_t>(d);
    const std::size_t len = w.size();
    std::size_t pos = 0;

    auto run = [&](Letter l) {
        const std::size_t start = pos;
        while (pos < len && w[pos] == l) ++pos;
        return pos - start;
    };
    // E-run of length got where only `shorter` or `longer` continue the parse.
    auto reject = [](std::size_t start, std::size_t got, std::size_t longer) -> BlockGrammarError {
        return BlockGrammarError(start + std::min(got, longer));
    };

    BlockDecomposition out;
    enum class State { TypeIEs, AfterTypeIEs, TypeIIEs } state;

    {
        const std::size_t start = pos;
        const std::size_t es = run(Letter::E);
        if (es == dd + 2) {
            out.middles.push_back({BlockType::TypeI, 0});
            state = State::AfterTypeIEs;
        } else if (es == 1) {
            const std::size_t ns = run(Letter::N);
            if (pos == len) {
                out.initial = ns - 1;
                return out;
            }
            out.initial = ns;
            state = State::TypeIEs;
        } else {
            throw reject(start, es, dd + 2);
        }
    }

    for (;;) {
        switch (state) {
        case State::TypeIEs: {
            const std::size_t start = pos;
            const std::size_t es = run(Letter::E);
            if (es != dd + 1) throw reject(start, es, dd + 1);
            out.middles.push_back({BlockType::TypeI, 0});
            state = State::AfterTypeIEs;
            break;
        }
        case State::AfterTypeIEs: {
            // The last N of the run is either the terminal block or the
            // leading N of the next TypeII block.
            const std::size_t ns = run(Letter::N);
            out.middles.back().trailing = ns - 1;
            if (pos == len) return out;
            state = State::TypeIIEs;
            break;
        }
        case State::TypeIIEs: {
            const std::size_t start = pos;
            const std::size_t es = run(Letter::E);
            if (es == 2 * dd + 1) {
                out.middles.push_back({BlockType::TypeII, 0});
                out.middles.push_back({BlockType::TypeI, 0});
                state = State::AfterTypeIEs;
            } else if (es == dd) {
                const std::size_t ns = run(Letter::N);
                if (pos == len) {
                    out.middles.push_back({BlockType::TypeII, ns - 1});
                    return out;
                }
                out.middles.push_back({BlockType::TypeII, ns});
                state = State::TypeIEs;
            } else {
                throw reject(start, es, 2 * dd + 1);
            }
            break;
        }
        }
    }
}

/// Reassembles the profile word of a block decomposition.
inline ProfileWord block_word(const BlockDecomposition& b, Part d) {
    detail::check_block_parameter(d);
    const auto dd = static_cast<std::size_t>(d);
    std::vector<bool> bits;
    bits.push_back(false);
    bits.insert(bits.end(), b.initial, true);
    for (std::size_t i = 0; i < b.middles.size(); ++i) {
        const auto& m = b.middles[i];
        const BlockType expected = i % 2 == 0 ? BlockType::TypeI : BlockType::TypeII;
        if (m.type != expected)
            throw std::invalid_argument("middle blocks must alternate TypeI, TypeII starting with TypeI");
        if (m.type == BlockType::TypeI) {
            bits.insert(bits.end(), dd + 1, false);
        } else {
            bits.push_back(true);
            bits.insert(bits.end(), dd, false);
        }
        bits.insert(bits.end(), m.trailing, true);
    }
    bits.push_back(true);
    return ProfileWord::from_letters(std::move(bits));
}

inline Partition blocks_to_partition(const BlockDecomposition& b, Part d) { return from_profile(block_word(b, d)); }

/// Every block decomposition whose word has length perimeter + 1, i.e. the
/// G_d partitions with that perimeter, generated from the grammar alone.
inline std::vector<BlockDecomposition> block_decompositions_with_perimeter(Part perimeter, Part d) {
    detail::check_block_parameter(d);
    std::vector<BlockDecomposition> out;
    if (perimeter < 1) return out;
    const auto total = static_cast<std::size_t>(perimeter) + 1;
    const auto dd = static_cast<std::size_t>(d);

    BlockDecomposition cur;
    // `left` letters remain for middle blocks.
    std::function<void(std::size_t)> extend = [&](std::size_t left) {
        if (left == 0) {
            out.push_back(cur);
            return;
        }
        const std::size_t head = dd + 1;  // both block types have d+1 fixed letters
        if (left < head) return;
        const BlockType next = cur.middles.size() % 2 == 0 ? BlockType::TypeI : BlockType::TypeII;
        for (std::size_t j = 0; head + j <= left; ++j) {
            cur.middles.push_back({next, j});
            extend(left - head - j);
            cur.middles.pop_back();
        }
    };
    for (std::size_t j0 = 0; j0 + 2 <= total; ++j0) {
        cur.initial = j0;
        extend(total - 2 - j0);
    }
    return out;
}

}  // namespace hookcomb
