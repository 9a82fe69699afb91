#pragma once

#include "gain_inertia/gain_graph.hpp"

#include <complex>
#include <cstdint>
#include <stdexcept>
#include <vector>

namespace gain_inertia {

class SpectralError : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

/// Dense row-major complex matrix that is Hermitian by construction.
class HermitianMatrix {
public:
    static constexpr double kSymmetryTolerance = 1e-10;

    explicit HermitianMatrix(std::size_t order = 0);
    /// Throws SpectralError if `entries` is not order*order or not Hermitian.
    HermitianMatrix(std::size_t order, std::vector<std::complex<double>> entries);

    std::size_t order() const noexcept { return order_; }
    std::complex<double> operator()(std::size_t i, std::size_t j) const { return entries_[i * order_ + j]; }
    const std::vector<std::complex<double>>& entries() const noexcept { return entries_; }
    double symmetry_residual() const noexcept;

private:
    std::size_t order_ = 0;
    std::vector<std::complex<double>> entries_;
};

struct Inertia {
    std::size_t positive = 0;
    std::size_t negative = 0;
    std::size_t zero = 0;

    std::size_t rank() const noexcept { return positive + negative; }
    std::size_t order() const noexcept { return positive + negative + zero; }
    bool operator==(const Inertia&) const = default;
};

HermitianMatrix adjacency_matrix(const GainGraph& g);

/// Real symmetric tridiagonal matrix: `diagonal` has order entries,
/// `off_diagonal` has order-1 non-negative entries.
struct Tridiagonal {
    std::vector<double> diagonal;
    std::vector<double> off_diagonal;
};

/// Householder reduction followed by a diagonal unitary scaling that makes the
/// off-diagonal real and non-negative. Preserves the spectrum.
Tridiagonal tridiagonalize(const HermitianMatrix& a);

/// Number of eigenvalues strictly below `shift` (Sturm count).
std::size_t count_eigenvalues_below(const Tridiagonal& t, double shift);

/// Eigenvalues above zero_tol are positive, below -zero_tol negative.
/// Throws SpectralError for non-Hermitian input or zero_tol <= 0.
Inertia inertia_float(const HermitianMatrix& a, double zero_tol);

/// |V| * 2^-52 * max(1, max degree).
double default_zero_tolerance(const GainGraph& g);

/// Integer polynomial, coefficients[k] multiplies lambda^k.
struct IntegerPolynomial {
    std::vector<std::int64_t> coefficients;

    std::size_t degree() const noexcept { return coefficients.empty() ? 0 : coefficients.size() - 1; }
    bool operator==(const IntegerPolynomial&) const = default;
};

/// det(lambda I - A) in exact Gaussian-integer arithmetic (Faddeev-LeVerrier).
/// Requires every gain to be a fourth root of unity; throws SpectralError
/// otherwise, or when an intermediate value would overflow 128 bits.
IntegerPolynomial char_poly_exact(const GainGraph& g);

/// Inertia from the characteristic polynomial: trailing zero coefficients give
/// the nullity, sign changes give the positive count (all roots are real).
Inertia inertia_from_char_poly(const IntegerPolynomial& poly);
Inertia inertia_exact(const GainGraph& g);

/// Exact path when all gains are exact tokens and the polynomial fits,
/// otherwise the floating path with default_zero_tolerance.
Inertia inertia(const GainGraph& g);

} // namespace gain_inertia
