#include "cledger/algebra.hpp"

#include <doctest.h>

#include <cmath>

using namespace cledger;

namespace {

const double kC = 2.99792458e10;
const double kMPi = 2.48806e-25;
const double kHbar = 1.054571817e-27;

} // namespace

TEST_CASE("pauli matrices multiply correctly") {
    const ComplexMatrix s1 = pauli(1), s2 = pauli(2), s3 = pauli(3);
    CHECK((s1 * s1) == ComplexMatrix::identity(2));
    CHECK((s2 * s2) == ComplexMatrix::identity(2));
    CHECK((s1 * s2) == s3 * Complex(0.0, 1.0));
    CHECK_THROWS_AS(pauli(0), Error);
    CHECK_THROWS_AS(pauli(4), Error);
}

TEST_CASE("both built-in gamma sets close exactly") {
    for (const auto& set : {build_dirac_set(), build_eq9_set()}) {
        const CliffordReport report = verify_clifford(set);
        INFO(report.label);
        CHECK(report.max_deviation == 0.0);
        CHECK(report.matches_declared);
        CHECK(report.pairs.size() == 10); // 4 diagonal + 6 off-diagonal pairs
        for (const auto& p : report.pairs) CHECK(p.deviation == 0.0);
    }
}

TEST_CASE("inferred signatures") {
    CHECK(verify_clifford(build_dirac_set()).inferred_signature ==
          std::vector<int>{1, -1, -1, -1});
    CHECK(verify_clifford(build_eq9_set()).inferred_signature ==
          std::vector<int>{1, 1, 1, 1});
}

TEST_CASE("a broken set is reported, not asserted") {
    CliffordSet set = build_dirac_set();
    set.gammas[1](0, 0) += Complex(0.5, 0.0);
    const CliffordReport report = verify_clifford(set);
    CHECK(report.max_deviation > 0.0);
}

TEST_CASE("deformation factor is exactly 2 at Compton parameters") {
    const double p = kMPi * kC;
    const double a = kHbar / p; // Compton wavelength as the fundamental length
    CHECK(snyder_deformation(p, a, kHbar) == 2.0);
    // and approaches 1 as the fundamental length vanishes
    CHECK(snyder_deformation(p, a * 1e-12, kHbar) == doctest::Approx(1.0).epsilon(1e-15));
    CHECK(snyder_deformation(p, 0.0, kHbar) == 1.0);
    // monotone in a
    CHECK(snyder_deformation(p, 2.0 * a, kHbar) == 5.0);
}

TEST_CASE("dirac operator determinant equals the on-shell polynomial") {
    const double mc = kMPi * kC;
    SUBCASE("on-shell momentum gives zero determinant and nullity 2") {
        const FourMomentum p{std::sqrt(2.0) * mc, mc, 0.0, 0.0};
        const double scale = std::sqrt(2.0) * mc * kC;
        const double scale4 = scale * scale * scale * scale;
        CHECK(std::abs(onshell_determinant(p, kMPi, kC)) / scale4 < 1e-12);
        CHECK(nullspace_dimension(p, kMPi, kC, 1e-8 * mc * kC) == 2);
    }
    SUBCASE("off-shell momentum gives the squared invariant and nullity 0") {
        const FourMomentum p{3.0 * mc, mc, mc, mc};
        const double p2c2 = (9.0 - 3.0) * mc * mc * kC * kC;
        const double expected = (p2c2 - mc * mc * kC * kC) * (p2c2 - mc * mc * kC * kC);
        const Complex det = onshell_determinant(p, kMPi, kC);
        CHECK(det.real() == doctest::Approx(expected).epsilon(1e-12));
        CHECK(std::abs(det.imag()) <= 1e-12 * expected);
        CHECK(nullspace_dimension(p, kMPi, kC, 1e-8 * mc * kC) == 0);
    }
    SUBCASE("momentum at rest") {
        const FourMomentum p{mc, 0.0, 0.0, 0.0};
        CHECK(nullspace_dimension(p, kMPi, kC, 1e-8 * mc * kC) == 2);
    }
}

TEST_CASE("lu determinant on small knowns") {
    CHECK(determinant(ComplexMatrix::identity(4)) == Complex(1.0, 0.0));
    ComplexMatrix m(2);
    m(0, 0) = 1.0; m(0, 1) = 2.0; m(1, 0) = 3.0; m(1, 1) = 4.0;
    CHECK(determinant(m).real() == doctest::Approx(-2.0));
    ComplexMatrix z(2); // singular
    z(0, 0) = 1.0; z(0, 1) = 1.0; z(1, 0) = 1.0; z(1, 1) = 1.0;
    CHECK(std::abs(determinant(z)) == doctest::Approx(0.0));
}
