#include <gtest/gtest.h>

#include <sstream>

#include "lpocode/codes.hpp"
#include "lpocode/errors.hpp"
#include "lpocode/io.hpp"

using namespace lpocode;

TEST(WordFile, ParsesCommentsAndBlankLines)
{
    std::istringstream in("# a code\n1100\n\n0011  # second\n");
    const auto words = read_words(in);
    ASSERT_EQ(words.size(), 2u);
    EXPECT_EQ(words[1].to_string(), "0011");
    std::ostringstream out;
    write_words(out, words);
    EXPECT_EQ(out.str(), "1100\n0011\n");
}

TEST(WordFile, RejectsMalformedInput)
{
    for (const char* text : {"", "# nothing\n", "1100\n110\n", "1100\n1110\n", "11x0\n", "0000\n"}) {
        std::istringstream in(text);
        EXPECT_THROW(read_words(in), InputError) << text;
    }
}

TEST(OrientationFile, RoundTrip)
{
    const auto code = construct_orbit(5, 1);
    std::ostringstream out;
    write_orientation(out, *code.witness);
    std::istringstream in(out.str());
    const auto file = read_orientation(in);
    EXPECT_EQ(file.n, 5);
    EXPECT_EQ(file.w, 2);
    EXPECT_EQ(orientation_from_arcs(code.witness->domain_ptr(), file.arcs), *code.witness);
}

TEST(OrientationFile, RejectsMalformedInput)
{
    for (const char* text : {"", "4\n", "4 2\n1100 0011\n", "4 2\n1100 -> 0011\n", "4 2\n1100 -> 1010 x\n",
                             "4 2\n1100 -> 11000\n"}) {
        std::istringstream in(text);
        EXPECT_THROW(read_orientation(in), InputError) << text;
    }
}

TEST(Csv, Formats)
{
    std::ostringstream bounds;
    const std::vector<BoundRecord> rows{{4, 2, 0, 2, 2, 2}, {7, 3, 0, 5, 7, std::nullopt}};
    write_bounds_csv(bounds, rows);
    EXPECT_EQ(bounds.str(), "n,w,W,lower,upper,exact\n4,2,0,2,2,2\n7,3,0,5,7,\n");

    std::ostringstream histogram;
    write_histogram_csv(histogram, wmw_distribution(4, 2));
    EXPECT_EQ(histogram.str(), "errors,count\n0,1\n1,1\n2,2\n3,1\n4,1\n");

    std::ostringstream type2;
    const std::vector<Type2Point> points{{12, 0.5}, {16, 0.125}};
    write_type2_csv(type2, points);
    EXPECT_EQ(type2.str(), "size,failure_proportion\n12,0.5\n16,0.125\n");
}
