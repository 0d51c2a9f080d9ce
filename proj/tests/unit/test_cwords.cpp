#include <gtest/gtest.h>

#include <algorithm>
#include <set>

#include "../support/oracles.hpp"
#include "lpocode/cwords.hpp"
#include "lpocode/errors.hpp"
#include "lpocode/numeric.hpp"

using namespace lpocode;

TEST(Word, TextFormListsPositionZeroFirst)
{
    const Word w = Word::from_string("1100");
    EXPECT_EQ(w.length(), 4);
    EXPECT_EQ(w.weight(), 2);
    EXPECT_EQ(w.bits(), 0b0011u);
    EXPECT_EQ(w.ones(), (std::vector<int>{0, 1}));
    EXPECT_EQ(w.zeros(), (std::vector<int>{2, 3}));
    EXPECT_EQ(w.to_string(), "1100");
}

TEST(Word, RejectsInvalidWords)
{
    EXPECT_THROW(Word::from_string("0000"), ParameterError);
    EXPECT_THROW(Word::from_string("1111"), ParameterError);
    EXPECT_THROW(Word::from_string("10a1"), ParameterError);
    EXPECT_THROW(Word::from_string(""), ParameterError);
    EXPECT_THROW(Word(4, 0b10000), ParameterError);
    EXPECT_THROW(Word(65, 1), ParameterError);
    const std::vector<int> repeated{1, 1};
    EXPECT_THROW(Word::from_positions(4, repeated), ParameterError);
}

TEST(Word, FullLengthWords)
{
    const Word w(64, 0x00000000ffffffffULL);
    EXPECT_EQ(w.weight(), 32);
    EXPECT_EQ(rank(unrank(64, 32, 12345)), 12345u);
}

TEST(Enumerate, MatchesBruteForceMasksInOrder)
{
    for (int n = 2; n <= 10; ++n) {
        for (int w = 1; w < n; ++w) {
            const auto words = enumerate_words(n, w);
            const auto masks = oracle::masks(n, w);
            ASSERT_EQ(words.size(), masks.size());
            for (std::size_t i = 0; i < words.size(); ++i) {
                EXPECT_EQ(words[i].bits(), masks[i]);
                EXPECT_EQ(rank(words[i]), i);
                EXPECT_EQ(unrank(n, w, i), words[i]);
            }
        }
    }
}

TEST(Rank, UnrankOutOfRange)
{
    EXPECT_THROW(unrank(4, 2, 6), ParameterError);
}

TEST(Neighbors, AreExactlyTheDistanceTwoWords)
{
    const int n = 7;
    const int w = 3;
    for (const Word& word : enumerate_words(n, w)) {
        const auto near = neighbors(word);
        EXPECT_EQ(near.size(), static_cast<std::size_t>(w * (n - w)));
        std::set<Word> unique(near.begin(), near.end());
        EXPECT_EQ(unique.size(), near.size());
        std::size_t expected = 0;
        for (const Word& other : enumerate_words(n, w))
            if (hamming(word, other) == 2) {
                ++expected;
                EXPECT_TRUE(unique.count(other));
            }
        EXPECT_EQ(expected, near.size());
    }
}

TEST(Transpose, SwapsOneAndZero)
{
    const Word w = Word::from_string("10100");
    EXPECT_EQ(transpose(w, 0, 1).to_string(), "01100");
    EXPECT_THROW(transpose(w, 1, 3), ParameterError);
    EXPECT_THROW(transpose(w, 0, 2), ParameterError);
}

TEST(Complement, FlipsEveryBit)
{
    EXPECT_EQ(complement(Word::from_string("10100")).to_string(), "01011");
    EXPECT_THROW(hamming(Word::from_string("10"), Word::from_string("100")), ParameterError);
}
