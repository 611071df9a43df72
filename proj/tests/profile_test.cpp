#include <gtest/gtest.h>

#include <unordered_map>

#include "hookcomb/constraint_class.hpp"
#include "hookcomb/profile.hpp"
#include "oracles.hpp"

using namespace hookcomb;

namespace {

Partition P(std::initializer_list<Part> parts) { return make_partition(parts); }

// Every valid word (E first, N last) of the given length.
std::vector<std::string> words_of_length(std::size_t len) {
    std::vector<std::string> out;
    if (len < 2) return out;
    const std::size_t free = len - 2;
    for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << free); ++mask) {
        std::string w = "E";
        for (std::size_t i = 0; i < free; ++i) w += (mask >> (free - 1 - i)) & 1 ? 'N' : 'E';
        w += 'N';
        out.push_back(w);
    }
    return out;
}

// A prefix is viable when some completion E^a N^b or any short tail makes
// it a G_d word.
class Viability {
public:
    explicit Viability(Part d) : d_(d) {}

    bool operator()(const std::string& prefix) {
        const auto it = cache_.find(prefix);
        if (it != cache_.end()) return it->second;
        bool ok = false;
        for (std::size_t a = 0; a <= static_cast<std::size_t>(2 * d_ + 2) && !ok; ++a)
            for (std::size_t b = 0; b <= 2 && !ok; ++b)
                ok = oracle::g_class_by_regex(prefix + std::string(a, 'E') + std::string(b, 'N'), d_);
        for (std::size_t len = 1; len <= 4 && !ok; ++len)
            for (std::uint32_t m = 0; m < (1u << len) && !ok; ++m) {
                std::string tail;
                for (std::size_t i = 0; i < len; ++i) tail += (m >> i) & 1 ? 'N' : 'E';
                ok = oracle::g_class_by_regex(prefix + tail, d_);
            }
        return cache_[prefix] = ok;
    }

private:
    Part d_;
    std::unordered_map<std::string, bool> cache_;
};

}  // namespace

TEST(Profile, Examples) {
    EXPECT_EQ(to_profile(P({2, 2, 1})).str(), "ENENN");
    EXPECT_EQ(to_profile(P({1})).str(), "EN");
    EXPECT_EQ(to_profile(P({9, 9, 6, 6, 6, 4, 1, 1, 1})).str(), "ENNNEEENEENNNEEENN");
    EXPECT_EQ(from_profile("ENENN"), P({2, 2, 1}));
    EXPECT_EQ(from_profile("EN"), P({1}));
}

TEST(Profile, ParseErrors) {
    auto kind_of = [](const char* w) {
        try {
            ProfileWord::parse(w);
        } catch (const ProfileError& e) {
            return e.kind();
        }
        ADD_FAILURE() << w;
        return ProfileError::Kind::EmptyWord;
    };
    EXPECT_EQ(kind_of("NEN"), ProfileError::Kind::MustStartWithE);
    EXPECT_EQ(kind_of(""), ProfileError::Kind::EmptyWord);
    EXPECT_EQ(kind_of("ENE"), ProfileError::Kind::MustEndWithN);
    EXPECT_EQ(kind_of("EXN"), ProfileError::Kind::InvalidLetter);
    EXPECT_EQ(kind_of("en"), ProfileError::Kind::InvalidLetter);
}

TEST(Profile, ExhaustiveRoundTripsUpToSize20) {
    for (const auto& raw : oracle::partitions_up_to(20)) {
        const Partition p = make_partition(raw);
        const ProfileWord w = to_profile(p);
        ASSERT_EQ(w.str(), oracle::word(raw));
        ASSERT_EQ(from_profile(w), p);
        ASSERT_EQ(w.size(), static_cast<std::size_t>(p.perimeter()) + 1);
        ASSERT_EQ(w.count(Letter::E), static_cast<std::size_t>(p.largest()));
        ASSERT_EQ(w.count(Letter::N), p.length());

        std::string swapped = w.str();
        std::reverse(swapped.begin(), swapped.end());
        for (char& c : swapped) c = c == 'E' ? 'N' : 'E';
        ASSERT_EQ(to_profile(conjugate(p)).str(), swapped);
    }
}

TEST(Profile, EveryWordUpToLength12DecodesAndReencodes) {
    for (std::size_t len = 2; len <= 12; ++len)
        for (const auto& w : words_of_length(len)) {
            const Partition p = from_profile(w);
            ASSERT_EQ(to_profile(p).str(), w);
            ASSERT_EQ(static_cast<std::size_t>(p.perimeter()) + 1, len);
        }
}

TEST(Blocks, FigureExample) {
    const auto w = to_profile(P({9, 9, 6, 6, 6, 4, 1, 1, 1}));
    const auto b = decompose_blocks(w, 2);
    const BlockDecomposition expected{
        3, {{BlockType::TypeI, 0}, {BlockType::TypeII, 3}, {BlockType::TypeI, 1}}};
    EXPECT_EQ(b, expected);
    EXPECT_EQ(block_word(b, 2), w);
    EXPECT_EQ(blocks_to_partition(expected, 2), P({9, 9, 6, 6, 6, 4, 1, 1, 1}));
}

TEST(Blocks, SmallExamples) {
    EXPECT_EQ(decompose_blocks(ProfileWord::parse("EN"), 2), (BlockDecomposition{0, {}}));
    EXPECT_EQ(blocks_to_partition({0, {}}, 1), P({1}));
    EXPECT_EQ(blocks_to_partition({0, {{BlockType::TypeI, 0}}}, 2), P({4}));
    EXPECT_TRUE(is_member(P({4}), ConstraintClass::g_class(2)));

    try {
        decompose_blocks(to_profile(P({7})), 2);
        FAIL() << "(7) is not in G_2";
    } catch (const BlockGrammarError& e) {
        // EEEE is viable (initial E + TypeI EEE); the fifth E is not
        EXPECT_EQ(e.position(), 4u);
    }
    EXPECT_THROW(decompose_blocks(ProfileWord::parse("EN"), 0), std::invalid_argument);
    EXPECT_THROW(block_word({0, {{BlockType::TypeII, 0}}}, 2), std::invalid_argument);
    EXPECT_THROW(block_word({0, {{BlockType::TypeI, 0}, {BlockType::TypeI, 0}}}, 2), std::invalid_argument);
}

TEST(Blocks, ParserAgreesWithMembershipAndRegexUpToLength14) {
    for (Part d = 1; d <= 5; ++d) {
        const auto cls = ConstraintClass::g_class(d);
        for (std::size_t len = 2; len <= 14; ++len)
            for (const auto& w : words_of_length(len)) {
                const auto word = ProfileWord::parse(w);
                const Partition p = from_profile(word);
                const bool member = is_member(p, cls);
                ASSERT_EQ(member, oracle::g_class_by_regex(w, d)) << w << " d=" << d;
                ASSERT_EQ(member, oracle::g_class(p.parts(), d)) << w << " d=" << d;
                bool parsed = true;
                try {
                    const auto b = decompose_blocks(word, d);
                    ASSERT_EQ(block_word(b, d), word) << w;
                    ASSERT_EQ(blocks_to_partition(b, d), p) << w;
                } catch (const BlockGrammarError&) {
                    parsed = false;
                }
                ASSERT_EQ(parsed, member) << w << " d=" << d;
            }
    }
}

TEST(Blocks, ErrorPositionIsFirstNonViablePrefixUpToLength12) {
    for (Part d = 1; d <= 5; ++d) {
        Viability viable(d);
        for (std::size_t len = 2; len <= 12; ++len)
            for (const auto& w : words_of_length(len)) {
                if (oracle::g_class_by_regex(w, d)) continue;
                std::size_t expected = 0;
                while (viable(w.substr(0, expected + 1))) ++expected;
                try {
                    decompose_blocks(ProfileWord::parse(w), d);
                    FAIL() << w << " accepted for d=" << d;
                } catch (const BlockGrammarError& e) {
                    ASSERT_EQ(e.position(), expected) << w << " d=" << d;
                }
            }
    }
}

TEST(Blocks, GeneratedDecompositionsMatchOracleSets) {
    for (Part d = 1; d <= 4; ++d)
        for (Part n = 1; n <= 14; ++n) {
            std::set<std::vector<Part>> from_blocks, from_oracle;
            for (const auto& b : block_decompositions_with_perimeter(n, d)) {
                const auto p = blocks_to_partition(b, d);
                ASSERT_EQ(p.perimeter(), n);
                ASSERT_TRUE(from_blocks.insert(p.parts()).second) << "duplicate " << p;
                ASSERT_EQ(decompose_blocks(to_profile(p), d), b);
            }
            for (const auto& raw : oracle::partitions_with_perimeter(n))
                if (oracle::g_class(raw, d)) from_oracle.insert(raw);
            ASSERT_EQ(from_blocks, from_oracle) << "n=" << n << " d=" << d;
        }
}
