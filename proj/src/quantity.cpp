#include "cledger/quantity.hpp"

#include <cmath>

namespace cledger {

Rational Rational::parse(const std::string& text) {
    try {
        std::size_t pos = 0;
        const std::int64_t num = std::stoll(text, &pos);
        if (pos == text.size()) return Rational(num);
        if (text[pos] != '/') throw Error("malformed rational: " + text);
        const std::string den_part = text.substr(pos + 1);
        std::size_t pos2 = 0;
        const std::int64_t den = std::stoll(den_part, &pos2);
        if (pos2 != den_part.size()) throw Error("malformed rational: " + text);
        return Rational(num, den);
    } catch (const Error&) {
        throw;
    } catch (const std::exception&) {
        throw Error("malformed rational: " + text);
    }
}

Dimension::Dimension(Rational mass, Rational length, Rational time, Rational charge)
    : exp_{mass, length, time, charge} {
    check_denominators();
}

void Dimension::check_denominators() const {
    for (const auto& r : exp_)
        if (r.den() > kMaxExponentDenominator)
            throw Error("exponent denominator too large: " + r.str());
}

bool Dimension::is_dimensionless() const {
    for (const auto& r : exp_)
        if (!r.is_zero()) return false;
    return true;
}

Dimension Dimension::operator*(const Dimension& o) const {
    return Dimension(exp_[0] + o.exp_[0], exp_[1] + o.exp_[1],
                     exp_[2] + o.exp_[2], exp_[3] + o.exp_[3]);
}

Dimension Dimension::operator/(const Dimension& o) const {
    return Dimension(exp_[0] - o.exp_[0], exp_[1] - o.exp_[1],
                     exp_[2] - o.exp_[2], exp_[3] - o.exp_[3]);
}

Dimension Dimension::pow(const Rational& r) const {
    return Dimension(exp_[0] * r, exp_[1] * r, exp_[2] * r, exp_[3] * r);
}

std::string Dimension::str() const {
    if (is_dimensionless()) return "1";
    static const char* names[4] = {"g", "cm", "s", "esu"};
    std::string out;
    for (int i = 0; i < 4; ++i) {
        if (exp_[i].is_zero()) continue;
        if (!out.empty()) out += ' ';
        out += names[i];
        if (exp_[i] != Rational(1)) out += "^" + exp_[i].str();
    }
    return out;
}

Quantity::Quantity(double magnitude, Dimension dim)
    : magnitude_(magnitude), dim_(std::move(dim)) {
    if (std::isinf(magnitude_)) throw Error("magnitude overflow");
    if (std::isnan(magnitude_)) throw Error("non-real result");
}

Quantity Quantity::operator*(const Quantity& o) const {
    return Quantity(magnitude_ * o.magnitude_, dim_ * o.dim_);
}

Quantity Quantity::operator/(const Quantity& o) const {
    if (o.magnitude_ == 0.0) throw Error("division by zero magnitude");
    return Quantity(magnitude_ / o.magnitude_, dim_ / o.dim_);
}

Quantity Quantity::operator+(const Quantity& o) const {
    if (dim_ != o.dim_)
        throw Error("dimension mismatch inside a sum: " + dim_.str() + " vs " + o.dim_.str());
    return Quantity(magnitude_ + o.magnitude_, dim_);
}

Quantity Quantity::operator-(const Quantity& o) const {
    if (dim_ != o.dim_)
        throw Error("dimension mismatch inside a sum: " + dim_.str() + " vs " + o.dim_.str());
    return Quantity(magnitude_ - o.magnitude_, dim_);
}

Quantity Quantity::pow(const Rational& r) const {
    if (r.den() > kMaxExponentDenominator)
        throw Error("exponent denominator too large: " + r.str());
    double mag;
    if (magnitude_ < 0.0) {
        // Negative base only has a real root for odd reduced denominators;
        // the result is negative iff the numerator is odd.
        if (r.den() % 2 == 0) throw Error("non-real result");
        const double root = std::pow(-magnitude_, r.value());
        mag = (r.num() % 2 != 0) ? -root : root;
    } else {
        mag = std::pow(magnitude_, r.value());
    }
    return Quantity(mag, dim_.pow(r));
}

double decade_gap_magnitudes(double a, double b) {
    if (a == 0.0 || b == 0.0) throw Error("decade gap of zero magnitude");
    if ((a > 0.0) != (b > 0.0)) throw Error("decade gap of opposite-sign magnitudes");
    return std::fabs(std::log10(std::fabs(a) / std::fabs(b)));
}

double decade_gap(const Quantity& a, const Quantity& b) {
    if (a.dim() != b.dim())
        throw Error("dimension mismatch: " + a.dim().str() + " vs " + b.dim().str());
    return decade_gap_magnitudes(a.magnitude(), b.magnitude());
}

} // namespace cledger
