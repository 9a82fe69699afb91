#include "gain_inertia/gain.hpp"

#include <gtest/gtest.h>

#include <cmath>
#include <numbers>

using namespace gain_inertia;

namespace {

const FourthRoot kRoots[] = {FourthRoot::One, FourthRoot::I, FourthRoot::MinusOne, FourthRoot::MinusI};

} // namespace

TEST(FourthRoot, MultiplicationMatchesComplex)
{
    for (auto a : kRoots) {
        for (auto b : kRoots) {
            const auto expected = to_complex(a) * to_complex(b);
            const auto got = to_complex(multiply(a, b));
            EXPECT_NEAR(std::abs(expected - got), 0.0, 1e-15);
        }
        EXPECT_EQ(to_complex(conjugate(a)), std::conj(to_complex(a)));
    }
}

TEST(FourthRoot, TokensRoundTrip)
{
    for (auto r : kRoots)
        EXPECT_EQ(parse_token(to_token(r)), r);
    EXPECT_EQ(parse_token("1"), FourthRoot::One);
    EXPECT_EQ(parse_token("i"), FourthRoot::I);
    EXPECT_FALSE(parse_token("+j").has_value());
    EXPECT_FALSE(parse_token("").has_value());
}

TEST(Gain, DefaultIsExactOne)
{
    Gain g;
    EXPECT_TRUE(g.is_exact());
    EXPECT_EQ(g.exact(), FourthRoot::One);
}

TEST(Gain, ComplexNearFourthRootSnaps)
{
    const auto g = Gain::from_complex({0.0, 1.0});
    EXPECT_EQ(g.exact(), FourthRoot::I);
    const auto h = Gain::from_degrees(180.0);
    EXPECT_EQ(h.exact(), FourthRoot::MinusOne);
    const auto k = Gain::from_degrees(-90.0);
    EXPECT_EQ(k.exact(), FourthRoot::MinusI);
}

TEST(Gain, GenericAngleStaysFloating)
{
    const auto g = Gain::from_degrees(30.0);
    EXPECT_FALSE(g.is_exact());
    EXPECT_NEAR(g.value().real(), std::sqrt(3.0) / 2, 1e-15);
    EXPECT_NEAR(g.value().imag(), 0.5, 1e-15);
}

TEST(Gain, RejectsNonUnitModulus)
{
    EXPECT_THROW(Gain::from_complex({2.0, 0.0}), GainError);
    EXPECT_THROW(Gain::from_complex({0.0, 0.0}), GainError);
    EXPECT_THROW(Gain::from_complex({std::nan(""), 0.0}), GainError);
    EXPECT_NO_THROW(Gain::from_complex({1.0 + 5e-10, 0.0}));
}

TEST(Gain, ProductAndConjugate)
{
    const auto a = Gain::from_degrees(40.0);
    const auto b = Gain::from_degrees(50.0);
    EXPECT_EQ((a * b).exact(), FourthRoot::I);
    EXPECT_TRUE((a * a.conj()).approx_equal(Gain{}));
    EXPECT_EQ((Gain{FourthRoot::I} * Gain{FourthRoot::I}).exact(), FourthRoot::MinusOne);
}

TEST(Gain, TextRoundTrip)
{
    for (auto r : kRoots)
        EXPECT_EQ(parse_gain(format_gain(Gain{r})).exact(), r);
    for (double deg : {1.0, 33.3, 123.456, -170.0}) {
        const auto g = Gain::from_degrees(deg);
        const auto back = parse_gain(format_gain(g));
        EXPECT_TRUE(back.approx_equal(g, 1e-15)) << format_gain(g);
    }
    EXPECT_EQ(parse_gain("angle:90").exact(), FourthRoot::I);
    EXPECT_EQ(parse_gain("c:-1,0").exact(), FourthRoot::MinusOne);
}

TEST(Gain, ParseRejectsGarbage)
{
    for (const char* bad : {"", "+j", "angle:", "angle:abc", "c:1", "c:1,2", "c:a,b", "2"})
        EXPECT_THROW(parse_gain(bad), GainError) << bad;
}
