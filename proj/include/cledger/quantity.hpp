#pragma once

#include "cledger/rational.hpp"

#include <array>
#include <string>

namespace cledger {

/// Largest exponent denominator accepted anywhere in the engine.
inline constexpr std::int64_t kMaxExponentDenominator = 12;

/// Dimension vector over the four cgs-Gaussian base dimensions
/// (mass, length, time, charge), each exponent an exact rational.
///
/// The Gaussian `esu` unit token folds into mechanical dimensions as
/// g^1/2 cm^3/2 s^-1, which is what makes e^2/r an energy and
/// e^2/(G m^2) dimensionless; the charge exponent slot is kept for
/// completeness of the base.
class Dimension {
public:
    Dimension() = default;
    Dimension(Rational mass, Rational length, Rational time, Rational charge);

    static Dimension dimensionless() { return Dimension(); }
    static Dimension mass() { return Dimension({1}, {0}, {0}, {0}); }
    static Dimension length() { return Dimension({0}, {1}, {0}, {0}); }
    static Dimension time() { return Dimension({0}, {0}, {1}, {0}); }
    /// Gaussian charge unit (esu), folded: g^1/2 cm^3/2 s^-1.
    static Dimension esu() { return Dimension({1, 2}, {3, 2}, {-1}, {0}); }

    const Rational& mass_exp() const { return exp_[0]; }
    const Rational& length_exp() const { return exp_[1]; }
    const Rational& time_exp() const { return exp_[2]; }
    const Rational& charge_exp() const { return exp_[3]; }

    bool is_dimensionless() const;
    Dimension operator*(const Dimension& o) const;
    Dimension operator/(const Dimension& o) const;
    Dimension pow(const Rational& r) const;
    bool operator==(const Dimension& o) const { return exp_ == o.exp_; }
    bool operator!=(const Dimension& o) const { return !(*this == o); }

    /// Unit-expr rendering, e.g. "g cm^2 s^-1" or "1" when dimensionless.
    std::string str() const;

private:
    std::array<Rational, 4> exp_{};
    void check_denominators() const;
};

/// A real magnitude in cgs-Gaussian units paired with its dimension.
/// Magnitudes are always finite; arithmetic that would overflow or
/// produce a non-real value throws.
class Quantity {
public:
    Quantity() = default;
    Quantity(double magnitude, Dimension dim = Dimension::dimensionless());

    double magnitude() const { return magnitude_; }
    const Dimension& dim() const { return dim_; }

    Quantity operator*(const Quantity& o) const;
    Quantity operator/(const Quantity& o) const;
    Quantity operator+(const Quantity& o) const;
    Quantity operator-(const Quantity& o) const;
    Quantity pow(const Rational& r) const;
    Quantity sqrt() const { return pow(Rational(1, 2)); }

    bool operator==(const Quantity& o) const {
        return magnitude_ == o.magnitude_ && dim_ == o.dim_;
    }

private:
    double magnitude_ = 0.0;
    Dimension dim_;
};

/// Order-of-magnitude distance |log10(|a|/|b|)| between two quantities of
/// equal dimension and equal sign.
double decade_gap(const Quantity& a, const Quantity& b);

/// Same metric on raw magnitudes, used for dimension-waived comparisons.
double decade_gap_magnitudes(double a, double b);

} // namespace cledger
