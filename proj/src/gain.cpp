#include "gain_inertia/gain.hpp"

#include <array>
#include <charconv>
#include <cmath>
#include <cstdio>
#include <numbers>

namespace gain_inertia {

namespace {

constexpr std::array<std::complex<double>, 4> kRootValues{
    std::complex<double>{1.0, 0.0}, std::complex<double>{0.0, 1.0},
    std::complex<double>{-1.0, 0.0}, std::complex<double>{0.0, -1.0}};

double parse_double(std::string_view text, std::string_view what)
{
    // std::from_chars for double is available in libstdc++ 11.
    double out = 0.0;
    const char* first = text.data();
    const char* last = text.data() + text.size();
    if (!text.empty() && *first == '+')
        ++first;
    auto [ptr, ec] = std::from_chars(first, last, out);
    if (ec != std::errc{} || ptr != last || first == last)
        throw GainError("malformed " + std::string(what) + ": '" + std::string(text) + "'");
    if (!std::isfinite(out))
        throw GainError("non-finite " + std::string(what) + ": '" + std::string(text) + "'");
    return out;
}

} // namespace

FourthRoot multiply(FourthRoot a, FourthRoot b) noexcept
{
    return static_cast<FourthRoot>((static_cast<unsigned>(a) + static_cast<unsigned>(b)) % 4U);
}

FourthRoot conjugate(FourthRoot a) noexcept
{
    return static_cast<FourthRoot>((4U - static_cast<unsigned>(a)) % 4U);
}

std::complex<double> to_complex(FourthRoot r) noexcept
{
    return kRootValues[static_cast<std::size_t>(r)];
}

std::string to_token(FourthRoot r)
{
    switch (r) {
    case FourthRoot::One: return "+1";
    case FourthRoot::I: return "+i";
    case FourthRoot::MinusOne: return "-1";
    case FourthRoot::MinusI: return "-i";
    }
    return "+1";
}

std::optional<FourthRoot> parse_token(std::string_view text)
{
    if (text == "+1" || text == "1")
        return FourthRoot::One;
    if (text == "-1")
        return FourthRoot::MinusOne;
    if (text == "+i" || text == "i")
        return FourthRoot::I;
    if (text == "-i")
        return FourthRoot::MinusI;
    return std::nullopt;
}

Gain Gain::from_complex(std::complex<double> z)
{
    if (!std::isfinite(z.real()) || !std::isfinite(z.imag()))
        throw GainError("gain is not finite");
    const double modulus = std::abs(z);
    if (std::abs(modulus - 1.0) > kModulusTolerance)
        throw GainError("gain modulus " + std::to_string(modulus) + " is not 1");
    z /= modulus;
    for (std::size_t k = 0; k < kRootValues.size(); ++k) {
        if (std::abs(z - kRootValues[k]) <= kSnapTolerance)
            return Gain(static_cast<FourthRoot>(k));
    }
    Gain g;
    g.exact_.reset();
    g.z_ = z;
    return g;
}

Gain Gain::from_degrees(double degrees)
{
    if (!std::isfinite(degrees))
        throw GainError("gain angle is not finite");
    // Multiples of 90 degrees are exact tokens without a trip through cos/sin.
    const double quarter = degrees / 90.0;
    if (quarter == std::floor(quarter) && std::abs(quarter) < 1e15) {
        const auto k = static_cast<long long>(quarter);
        return Gain(static_cast<FourthRoot>(((k % 4) + 4) % 4));
    }
    const double rad = degrees * std::numbers::pi / 180.0;
    return from_complex({std::cos(rad), std::sin(rad)});
}

Gain Gain::from_spec(const GainSpec& spec)
{
    return std::visit(
        [](const auto& s) -> Gain {
            using T = std::decay_t<decltype(s)>;
            if constexpr (std::is_same_v<T, FourthRoot>)
                return Gain(s);
            else if constexpr (std::is_same_v<T, Degrees>)
                return from_degrees(s.value);
            else
                return from_complex(s);
        },
        spec);
}

std::complex<double> Gain::value() const noexcept
{
    return exact_ ? to_complex(*exact_) : z_;
}

Gain Gain::conj() const noexcept
{
    if (exact_)
        return Gain(conjugate(*exact_));
    Gain g = *this;
    g.z_ = std::conj(z_);
    return g;
}

Gain operator*(const Gain& a, const Gain& b) noexcept
{
    if (a.exact_ && b.exact_)
        return Gain(multiply(*a.exact_, *b.exact_));
    std::complex<double> z = a.value() * b.value();
    z /= std::abs(z);
    for (std::size_t k = 0; k < kRootValues.size(); ++k) {
        if (std::abs(z - kRootValues[k]) <= Gain::kSnapTolerance)
            return Gain(static_cast<FourthRoot>(k));
    }
    Gain g;
    g.exact_.reset();
    g.z_ = z;
    return g;
}

bool Gain::approx_equal(const Gain& other, double tol) const noexcept
{
    if (exact_ && other.exact_)
        return *exact_ == *other.exact_;
    return std::abs(value() - other.value()) <= tol;
}

std::string format_gain(const Gain& g)
{
    if (auto r = g.exact())
        return to_token(*r);
    char buf[96];
    std::snprintf(buf, sizeof buf, "c:%.17g,%.17g", g.value().real(), g.value().imag());
    return buf;
}

Gain parse_gain(std::string_view text)
{
    if (auto r = parse_token(text))
        return Gain(*r);
    if (text.starts_with("angle:"))
        return Gain::from_degrees(parse_double(text.substr(6), "gain angle"));
    if (text.starts_with("c:")) {
        auto body = text.substr(2);
        auto comma = body.find(',');
        if (comma == std::string_view::npos)
            throw GainError("complex gain needs 'c:<re>,<im>': '" + std::string(text) + "'");
        return Gain::from_complex({parse_double(body.substr(0, comma), "gain real part"),
                                   parse_double(body.substr(comma + 1), "gain imaginary part")});
    }
    throw GainError("unknown gain token '" + std::string(text) + "'");
}

} // namespace gain_inertia
