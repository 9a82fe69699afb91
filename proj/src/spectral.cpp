#include "gain_inertia/spectral.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <string>

namespace gain_inertia {

HermitianMatrix::HermitianMatrix(std::size_t order)
    : order_(order)
    , entries_(order * order, {0.0, 0.0})
{
}

HermitianMatrix::HermitianMatrix(std::size_t order, std::vector<std::complex<double>> entries)
    : order_(order)
    , entries_(std::move(entries))
{
    if (entries_.size() != order_ * order_)
        throw SpectralError("matrix needs " + std::to_string(order_ * order_) + " entries, got "
                            + std::to_string(entries_.size()));
    if (symmetry_residual() > kSymmetryTolerance)
        throw SpectralError("matrix is not Hermitian (residual " + std::to_string(symmetry_residual()) + ")");
}

double HermitianMatrix::symmetry_residual() const noexcept
{
    double worst = 0.0;
    for (std::size_t i = 0; i < order_; ++i) {
        for (std::size_t j = i; j < order_; ++j)
            worst = std::max(worst, std::abs((*this)(i, j) - std::conj((*this)(j, i))));
    }
    return worst;
}

HermitianMatrix adjacency_matrix(const GainGraph& g)
{
    const std::size_t n = g.vertex_count();
    std::vector<std::complex<double>> a(n * n, {0.0, 0.0});
    for (const Edge& e : g.edges()) {
        const auto z = e.gain.value();
        a[e.u * n + e.v] = z;
        a[e.v * n + e.u] = std::conj(z);
    }
    return HermitianMatrix(n, std::move(a));
}

Tridiagonal tridiagonalize(const HermitianMatrix& m)
{
    using cd = std::complex<double>;
    const std::size_t n = m.order();
    std::vector<cd> a = m.entries();
    auto at = [&](std::size_t i, std::size_t j) -> cd& { return a[i * n + j]; };

    std::vector<cd> v(n), p(n);
    for (std::size_t k = 0; k + 2 < n; ++k) {
        const std::size_t len = n - k - 1;
        double norm = 0.0;
        for (std::size_t i = 0; i < len; ++i)
            norm = std::hypot(norm, std::abs(at(k + 1 + i, k)));
        if (norm == 0.0)
            continue;
        const cd x0 = at(k + 1, k);
        const cd phase = std::abs(x0) == 0.0 ? cd{1.0, 0.0} : x0 / std::abs(x0);
        const cd alpha = -phase * norm;

        for (std::size_t i = 0; i < len; ++i)
            v[i] = at(k + 1 + i, k);
        v[0] -= alpha;
        double vnorm = 0.0;
        for (std::size_t i = 0; i < len; ++i)
            vnorm = std::hypot(vnorm, std::abs(v[i]));
        if (vnorm == 0.0)
            continue;
        for (std::size_t i = 0; i < len; ++i)
            v[i] /= vnorm;

        // Trailing block B <- H B H with H = I - 2 v v^*.
        for (std::size_t i = 0; i < len; ++i) {
            cd s{0.0, 0.0};
            for (std::size_t j = 0; j < len; ++j)
                s += at(k + 1 + i, k + 1 + j) * v[j];
            p[i] = s;
        }
        cd vp{0.0, 0.0};
        for (std::size_t i = 0; i < len; ++i)
            vp += std::conj(v[i]) * p[i];
        const double kappa = vp.real();
        for (std::size_t i = 0; i < len; ++i)
            p[i] -= kappa * v[i];
        for (std::size_t i = 0; i < len; ++i) {
            for (std::size_t j = 0; j < len; ++j)
                at(k + 1 + i, k + 1 + j) -= 2.0 * (v[i] * std::conj(p[j]) + p[i] * std::conj(v[j]));
        }

        at(k + 1, k) = alpha;
        at(k, k + 1) = std::conj(alpha);
        for (std::size_t i = 1; i < len; ++i) {
            at(k + 1 + i, k) = 0.0;
            at(k, k + 1 + i) = 0.0;
        }
    }

    Tridiagonal t;
    t.diagonal.resize(n);
    for (std::size_t i = 0; i < n; ++i)
        t.diagonal[i] = at(i, i).real();
    if (n > 1) {
        t.off_diagonal.resize(n - 1);
        for (std::size_t i = 0; i + 1 < n; ++i)
            t.off_diagonal[i] = std::abs(at(i + 1, i));
    }
    return t;
}

std::size_t count_eigenvalues_below(const Tridiagonal& t, double shift)
{
    const std::size_t n = t.diagonal.size();
    double max_e2 = 1.0;
    for (double e : t.off_diagonal)
        max_e2 = std::max(max_e2, e * e);
    const double pivmin = std::numeric_limits<double>::min() * max_e2;

    std::size_t count = 0;
    double q = 1.0;
    for (std::size_t i = 0; i < n; ++i) {
        double next = t.diagonal[i] - shift;
        if (i > 0 && t.off_diagonal[i - 1] != 0.0)
            next -= t.off_diagonal[i - 1] * t.off_diagonal[i - 1] / q;
        if (std::abs(next) < pivmin)
            next = -pivmin;
        if (next < 0.0)
            ++count;
        q = next;
    }
    return count;
}

Inertia inertia_float(const HermitianMatrix& a, double zero_tol)
{
    if (!(zero_tol > 0.0))
        throw SpectralError("zero tolerance must be positive");
    if (a.symmetry_residual() > HermitianMatrix::kSymmetryTolerance)
        throw SpectralError("matrix is not Hermitian");
    const Tridiagonal t = tridiagonalize(a);
    const std::size_t n = a.order();
    const std::size_t below_neg = count_eigenvalues_below(t, -zero_tol);
    const std::size_t below_pos = count_eigenvalues_below(t, zero_tol);
    Inertia out;
    out.negative = below_neg;
    out.positive = n - below_pos;
    out.zero = below_pos - below_neg;
    return out;
}

double default_zero_tolerance(const GainGraph& g)
{
    const double n = static_cast<double>(std::max<std::size_t>(g.vertex_count(), 1));
    const double delta = std::max<double>(1.0, static_cast<double>(g.max_degree()));
    return n * std::ldexp(1.0, -52) * delta;
}

namespace {

using wide = __int128;

wide checked_add(wide a, wide b)
{
    wide r;
    if (__builtin_add_overflow(a, b, &r))
        throw SpectralError("characteristic polynomial overflow");
    return r;
}

wide checked_mul(wide a, wide b)
{
    wide r;
    if (__builtin_mul_overflow(a, b, &r))
        throw SpectralError("characteristic polynomial overflow");
    return r;
}

struct GaussianInt {
    wide re = 0;
    wide im = 0;

    friend GaussianInt operator+(GaussianInt a, GaussianInt b)
    {
        return {checked_add(a.re, b.re), checked_add(a.im, b.im)};
    }
    friend GaussianInt operator*(GaussianInt a, GaussianInt b)
    {
        return {checked_add(checked_mul(a.re, b.re), -checked_mul(a.im, b.im)),
                checked_add(checked_mul(a.re, b.im), checked_mul(a.im, b.re))};
    }
    bool is_zero() const noexcept { return re == 0 && im == 0; }
};

GaussianInt to_gaussian(FourthRoot r)
{
    switch (r) {
    case FourthRoot::One: return {1, 0};
    case FourthRoot::I: return {0, 1};
    case FourthRoot::MinusOne: return {-1, 0};
    case FourthRoot::MinusI: return {0, -1};
    }
    return {1, 0};
}

} // namespace

IntegerPolynomial char_poly_exact(const GainGraph& g)
{
    const std::size_t n = g.vertex_count();
    // Sparse rows of A: products A*M only touch nonzero entries.
    std::vector<std::vector<std::pair<std::size_t, GaussianInt>>> rows(n);
    for (const Edge& e : g.edges()) {
        const auto r = e.gain.exact();
        if (!r)
            throw SpectralError("exact characteristic polynomial needs gains in {1, -1, i, -i}");
        rows[e.u].push_back({e.v, to_gaussian(*r)});
        rows[e.v].push_back({e.u, to_gaussian(conjugate(*r))});
    }

    // Faddeev-LeVerrier: M_k = A M_{k-1} + c_{n-k+1} I, c_{n-k} = -tr(A M_k) / k.
    std::vector<wide> coeff(n + 1, 0);
    coeff[n] = 1;
    std::vector<GaussianInt> m(n * n), am(n * n);
    for (std::size_t k = 1; k <= n; ++k) {
        // am = A * m (m = M_{k-1}); M_0 = 0 so M_1 = I.
        if (k == 1) {
            std::fill(m.begin(), m.end(), GaussianInt{});
        } else {
            for (std::size_t i = 0; i < n; ++i) {
                for (std::size_t j = 0; j < n; ++j) {
                    GaussianInt s{};
                    for (const auto& [col, val] : rows[i])
                        s = s + val * m[col * n + j];
                    am[i * n + j] = s;
                }
            }
            m.swap(am);
        }
        for (std::size_t i = 0; i < n; ++i)
            m[i * n + i] = m[i * n + i] + GaussianInt{coeff[n - k + 1], 0};

        GaussianInt trace{};
        for (std::size_t i = 0; i < n; ++i) {
            for (const auto& [col, val] : rows[i])
                trace = trace + val * m[col * n + i];
        }
        if (trace.im != 0)
            throw SpectralError("characteristic polynomial has a non-real coefficient");
        const wide kk = static_cast<wide>(k);
        if (trace.re % kk != 0)
            throw SpectralError("characteristic polynomial coefficient is not an integer");
        coeff[n - k] = -(trace.re / kk);
    }

    IntegerPolynomial out;
    out.coefficients.reserve(n + 1);
    for (wide c : coeff) {
        if (c > std::numeric_limits<std::int64_t>::max() || c < std::numeric_limits<std::int64_t>::min())
            throw SpectralError("characteristic polynomial coefficient exceeds 64 bits");
        out.coefficients.push_back(static_cast<std::int64_t>(c));
    }
    return out;
}

Inertia inertia_from_char_poly(const IntegerPolynomial& poly)
{
    const auto& c = poly.coefficients;
    Inertia out;
    if (c.empty())
        return out;
    const std::size_t order = c.size() - 1;
    std::size_t trailing = 0;
    while (trailing < c.size() && c[trailing] == 0)
        ++trailing;
    out.zero = trailing;
    std::size_t changes = 0;
    int last_sign = 0;
    for (std::size_t k = c.size(); k-- > trailing;) {
        if (c[k] == 0)
            continue;
        const int sign = c[k] > 0 ? 1 : -1;
        if (last_sign != 0 && sign != last_sign)
            ++changes;
        last_sign = sign;
    }
    out.positive = changes;
    out.negative = order - out.zero - out.positive;
    return out;
}

Inertia inertia_exact(const GainGraph& g)
{
    return inertia_from_char_poly(char_poly_exact(g));
}

Inertia inertia(const GainGraph& g)
{
    if (g.all_gains_exact()) {
        try {
            return inertia_exact(g);
        } catch (const SpectralError&) {
            // Coefficients too large for the exact path; fall through.
        }
    }
    return inertia_float(adjacency_matrix(g), default_zero_tolerance(g));
}

} // namespace gain_inertia
