#include "cledger/quantity.hpp"

#include <doctest.h>

using namespace cledger;

TEST_CASE("rational canonical form and parsing") {
    CHECK(Rational(3, 6) == Rational(1, 2));
    CHECK(Rational(2, -4) == Rational(-1, 2));
    CHECK(Rational(0, 5).is_zero());
    CHECK(Rational(1, 2) + Rational(1, 3) == Rational(5, 6));
    CHECK(Rational(2, 3) * Rational(3, 4) == Rational(1, 2));
    CHECK(Rational(3, 7).inverse() == Rational(7, 3));
    CHECK(Rational::parse("3/2") == Rational(3, 2));
    CHECK(Rational::parse("-1") == Rational(-1));
    CHECK(Rational::parse("-3/2") == Rational(-3, 2));
    CHECK(Rational(5, 2).str() == "5/2");
    CHECK(Rational(4, 2).str() == "2");
    CHECK_THROWS_AS(Rational(1, 0), Error);
    CHECK_THROWS_AS(Rational::parse("1/x"), Error);
    CHECK_THROWS_AS(Rational(0).inverse(), Error);
}

TEST_CASE("dimension algebra and Gaussian charge folding") {
    // esu folds to g^1/2 cm^3/2 s^-1, so e^2/r is an energy and
    // e^2/(G m^2) is a pure number.
    const Dimension esu2 = Dimension::esu() * Dimension::esu();
    const Dimension energy =
        Dimension::mass() * Dimension::length().pow(Rational(2)) *
        Dimension::time().pow(Rational(-2));
    CHECK(esu2 / Dimension::length() == energy);

    const Dimension grav = Dimension::length().pow(Rational(3)) /
                           (Dimension::mass() * Dimension::time().pow(Rational(2)));
    CHECK((esu2 / (grav * Dimension::mass().pow(Rational(2)))).is_dimensionless());

    CHECK(Dimension::dimensionless().str() == "1");
    CHECK(Dimension::esu().str() == "g^1/2 cm^3/2 s^-1");
    CHECK(energy.str() == "g cm^2 s^-2");
}

TEST_CASE("exponent denominator cap") {
    CHECK_NOTHROW(Dimension::mass().pow(Rational(1, 12)));
    CHECK_THROWS_WITH_AS(Dimension::mass().pow(Rational(1, 13)),
                         doctest::Contains("exponent denominator too large"), Error);
    CHECK_THROWS_AS(Quantity(2.0).pow(Rational(1, 13)), Error);
    // 1/26 reduces against an even power but not against 13ths
    CHECK_NOTHROW(Dimension::mass().pow(Rational(2, 24)));
}

TEST_CASE("quantity arithmetic guards") {
    const Quantity len(2.0, Dimension::length());
    const Quantity mass(3.0, Dimension::mass());
    CHECK((len * mass).magnitude() == 6.0);
    CHECK((len / mass).dim() == Dimension::length() / Dimension::mass());
    CHECK_THROWS_WITH_AS(len + mass, doctest::Contains("dimension mismatch inside a sum"),
                         Error);
    CHECK_THROWS_WITH_AS(len - mass, doctest::Contains("dimension mismatch inside a sum"),
                         Error);
    CHECK_THROWS_WITH_AS(len / Quantity(0.0), doctest::Contains("division by zero"), Error);
    CHECK_THROWS_WITH_AS(Quantity(1e308) * Quantity(1e308),
                         doctest::Contains("magnitude overflow"), Error);
}

TEST_CASE("roots of negative magnitudes") {
    CHECK(Quantity(-8.0).pow(Rational(1, 3)).magnitude() == doctest::Approx(-2.0));
    CHECK(Quantity(-8.0).pow(Rational(2, 3)).magnitude() == doctest::Approx(4.0));
    CHECK_THROWS_WITH_AS(Quantity(-1.0).sqrt(), doctest::Contains("non-real result"), Error);
    CHECK(Quantity(4.0, Dimension::length().pow(Rational(2))).sqrt().dim() ==
          Dimension::length());
}

TEST_CASE("decade gap metric") {
    CHECK(decade_gap_magnitudes(1e40, 1e40) == 0.0);
    CHECK(decade_gap_magnitudes(5.6e37, 1e40) == doctest::Approx(2.2518119729937998));
    CHECK(decade_gap_magnitudes(1e40, 5.6e37) == doctest::Approx(2.2518119729937998));
    CHECK(decade_gap_magnitudes(-2.0, -1.0) == doctest::Approx(0.3010299956639812));
    CHECK_THROWS_WITH_AS(decade_gap_magnitudes(0.0, 1.0), doctest::Contains("zero magnitude"),
                         Error);
    CHECK_THROWS_WITH_AS(decade_gap_magnitudes(-1.0, 1.0),
                         doctest::Contains("opposite-sign"), Error);

    const Quantity a(1e28, Dimension::length());
    const Quantity b(1e27, Dimension::length());
    CHECK(decade_gap(a, b) == doctest::Approx(1.0));
    CHECK_THROWS_WITH_AS(decade_gap(a, Quantity(1e27, Dimension::time())),
                         doctest::Contains("dimension mismatch"), Error);
}
