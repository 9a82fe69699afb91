#pragma once

#include <complex>
#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <variant>

namespace gain_inertia {

/// Fourth roots of unity, stored as the exponent k in i^k.
enum class FourthRoot : std::uint8_t { One = 0, I = 1, MinusOne = 2, MinusI = 3 };

FourthRoot multiply(FourthRoot a, FourthRoot b) noexcept;
FourthRoot conjugate(FourthRoot a) noexcept;
std::complex<double> to_complex(FourthRoot r) noexcept;
/// Token text used by the graph file format: "+1", "-1", "+i", "-i".
std::string to_token(FourthRoot r);
std::optional<FourthRoot> parse_token(std::string_view text);

class GainError : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

/// Angle in degrees; used only as a construction spec.
struct Degrees {
    double value = 0.0;
};

using GainSpec = std::variant<FourthRoot, Degrees, std::complex<double>>;

/// A unit complex number. Fourth roots of unity are kept as exact tokens so
/// products and conjugates of exact gains never touch floating point.
class Gain {
public:
    static constexpr double kModulusTolerance = 1e-9;
    static constexpr double kSnapTolerance = 1e-12;

    constexpr Gain() noexcept = default;
    constexpr Gain(FourthRoot r) noexcept : exact_(r) {} // NOLINT(google-explicit-constructor)

    /// Throws GainError when | |z| - 1 | > kModulusTolerance. The value is
    /// normalized, and snapped to an exact token when within kSnapTolerance.
    static Gain from_complex(std::complex<double> z);
    static Gain from_degrees(double degrees);
    static Gain from_spec(const GainSpec& spec);

    bool is_exact() const noexcept { return exact_.has_value(); }
    std::optional<FourthRoot> exact() const noexcept { return exact_; }
    std::complex<double> value() const noexcept;

    Gain conj() const noexcept;
    friend Gain operator*(const Gain& a, const Gain& b) noexcept;

    /// Exact tokens compare exactly; otherwise |a - b| <= tol.
    bool approx_equal(const Gain& other, double tol = kSnapTolerance) const noexcept;

private:
    std::optional<FourthRoot> exact_ = FourthRoot::One;
    std::complex<double> z_{1.0, 0.0};
};

/// Gain text as written in the graph format: a token when exact, else
/// "c:<re>,<im>" with 17 significant digits.
std::string format_gain(const Gain& g);
/// Accepts "+1" "-1" "+i" "-i" (also "1" and "i"), "angle:<deg>", "c:<re>,<im>".
/// Throws GainError on malformed text or non-unit modulus.
Gain parse_gain(std::string_view text);

} // namespace gain_inertia
