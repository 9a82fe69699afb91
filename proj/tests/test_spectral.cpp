#include "gain_inertia/generators.hpp"
#include "gain_inertia/spectral.hpp"

#include "oracles.hpp"

#include <gtest/gtest.h>

using namespace gain_inertia;

namespace {

using Poly = std::vector<std::int64_t>;

GainGraph triangle(FourthRoot closing)
{
    return GainGraph::build(3, {{0, 1}, {1, 2}, {2, 0, closing}});
}

} // namespace

TEST(CharPoly, HandComputedValues)
{
    EXPECT_EQ(char_poly_exact(GainGraph::build(2, {{0, 1}})).coefficients, (Poly{-1, 0, 1}));
    EXPECT_EQ(char_poly_exact(triangle(FourthRoot::One)).coefficients, (Poly{-2, -3, 0, 1}));
    EXPECT_EQ(char_poly_exact(triangle(FourthRoot::I)).coefficients, (Poly{0, -3, 0, 1}));
    EXPECT_EQ(char_poly_exact(triangle(FourthRoot::MinusOne)).coefficients, (Poly{2, -3, 0, 1}));
    EXPECT_EQ(char_poly_exact(GainGraph::build(3, {})).coefficients, (Poly{0, 0, 0, 1}));
    EXPECT_EQ(char_poly_exact(GainGraph::build(0, {})).coefficients, (Poly{1}));
}

TEST(CharPoly, RejectsFloatingGains)
{
    EXPECT_THROW(char_poly_exact(GainGraph::build(2, {{0, 1, Degrees{30}}})), SpectralError);
}

TEST(CharPoly, MatchesPermutationExpansion)
{
    for (std::uint64_t seed = 0; seed < 200; ++seed) {
        const auto g = random_gain_graph(1 + seed % 7, 0.55, GainMode::FourthRoots, seed);
        EXPECT_EQ(char_poly_exact(g).coefficients, oracle::char_poly(g)) << seed;
    }
}

TEST(Inertia, FromPolynomialSigns)
{
    // (x-1)(x+2)x^2 = x^4 + x^3 - 2x^2
    EXPECT_EQ(inertia_from_char_poly({{0, 0, -2, 1, 1}}), (Inertia{1, 1, 2}));
    // (x-1)(x-2)(x-3)
    EXPECT_EQ(inertia_from_char_poly({{-6, 11, -6, 1}}), (Inertia{3, 0, 0}));
}

TEST(Inertia, SmallGraphs)
{
    EXPECT_EQ(inertia(GainGraph::build(2, {{0, 1}})), (Inertia{1, 1, 0}));
    EXPECT_EQ(inertia(triangle(FourthRoot::One)), (Inertia{1, 2, 0}));
    EXPECT_EQ(inertia(triangle(FourthRoot::MinusOne)), (Inertia{2, 1, 0}));
    EXPECT_EQ(inertia(triangle(FourthRoot::I)), (Inertia{1, 1, 1}));
    EXPECT_EQ(inertia(GainGraph::build(4, {})), (Inertia{0, 0, 4}));
    EXPECT_EQ(inertia(GainGraph::build(0, {})), (Inertia{0, 0, 0}));
    // C4 with all gains 1 has eigenvalues 2, 0, 0, -2.
    EXPECT_EQ(inertia(GainGraph::build(4, {{0, 1}, {1, 2}, {2, 3}, {3, 0}})), (Inertia{1, 1, 2}));
}

TEST(Inertia, FloatMatchesJacobi)
{
    for (auto mode : {GainMode::FourthRoots, GainMode::UniformAngle}) {
        for (std::uint64_t seed = 0; seed < 150; ++seed) {
            const auto g = random_gain_graph(2 + seed % 11, 0.35, mode, seed);
            const auto expected = oracle::inertia(g);
            const auto got = inertia_float(adjacency_matrix(g), default_zero_tolerance(g));
            EXPECT_EQ(got, expected) << to_string(mode) << " seed " << seed;
        }
    }
}

TEST(Inertia, ExactMatchesFloat)
{
    for (std::uint64_t seed = 0; seed < 300; ++seed) {
        const auto g = fuzz_graph(5, seed, 12, GainMode::FourthRoots);
        EXPECT_EQ(inertia_exact(g), inertia_float(adjacency_matrix(g), default_zero_tolerance(g))) << seed;
    }
}

TEST(Tridiagonal, PreservesTraceAndSpectrum)
{
    const auto g = random_gain_graph(9, 0.5, GainMode::UniformAngle, 3);
    const auto t = tridiagonalize(adjacency_matrix(g));
    ASSERT_EQ(t.diagonal.size(), 9u);
    ASSERT_EQ(t.off_diagonal.size(), 8u);
    double trace = 0;
    for (double d : t.diagonal)
        trace += d;
    EXPECT_NEAR(trace, 0.0, 1e-12);
    for (double e : t.off_diagonal)
        EXPECT_GE(e, 0.0);
    const auto eig = oracle::eigenvalues(g);
    for (std::size_t k = 0; k < eig.size(); ++k) {
        // Shift between consecutive distinct eigenvalues counts exactly k+1 below it.
        if (k + 1 < eig.size() && eig[k + 1] - eig[k] > 1e-6) {
            EXPECT_EQ(count_eigenvalues_below(t, (eig[k] + eig[k + 1]) / 2), k + 1);
        }
    }
}

TEST(HermitianMatrix, ValidatesInput)
{
    using C = std::complex<double>;
    EXPECT_THROW(HermitianMatrix(2, {C{0}, C{1}, C{1}}), SpectralError);
    EXPECT_THROW(HermitianMatrix(2, {C{0}, C{0, 1}, C{0, 1}, C{0}}), SpectralError);
    EXPECT_NO_THROW(HermitianMatrix(2, {C{0}, C{0, 1}, C{0, -1}, C{0}}));
    EXPECT_THROW(inertia_float(HermitianMatrix(2), 0.0), SpectralError);
}

TEST(Inertia, TypedCyclesMatchClosedForm)
{
    for (std::size_t n = 3; n <= 12; ++n) {
        for (auto t : {CycleType::A, CycleType::B, CycleType::C, CycleType::D, CycleType::E}) {
            if (!type_matches_parity(n, t))
                continue;
            const auto g = build_typed_cycle(n, t);
            EXPECT_EQ(inertia(g), cycle_inertia_closed_form(n, t)) << n << " " << to_string(t);
            EXPECT_EQ(oracle::inertia(g), cycle_inertia_closed_form(n, t)) << n << " " << to_string(t);
        }
    }
}
