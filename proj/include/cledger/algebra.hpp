#pragma once

#include "cledger/errors.hpp"

#include <complex>
#include <string>
#include <vector>

namespace cledger {

using Complex = std::complex<double>;

/// Dense square complex matrix, row-major. Sizes here are 2 or 4.
class ComplexMatrix {
public:
    ComplexMatrix() = default;
    explicit ComplexMatrix(std::size_t n) : n_(n), a_(n * n) {}

    static ComplexMatrix identity(std::size_t n);

    std::size_t size() const { return n_; }
    Complex& operator()(std::size_t i, std::size_t j) { return a_[i * n_ + j]; }
    const Complex& operator()(std::size_t i, std::size_t j) const { return a_[i * n_ + j]; }

    ComplexMatrix operator+(const ComplexMatrix& o) const;
    ComplexMatrix operator-(const ComplexMatrix& o) const;
    ComplexMatrix operator*(const ComplexMatrix& o) const;
    ComplexMatrix operator*(Complex s) const;

    /// Largest absolute value of any entry.
    double max_abs() const;

    bool operator==(const ComplexMatrix& o) const { return n_ == o.n_ && a_ == o.a_; }

private:
    std::size_t n_ = 0;
    std::vector<Complex> a_;
};

/// A family of square matrices with an expected Clifford metric signature.
struct CliffordSet {
    std::string label;
    std::vector<ComplexMatrix> gammas;
    std::vector<int> metric; // +1 / -1 per matrix
};

struct PairDeviation {
    std::size_t a = 0;
    std::size_t b = 0;
    double deviation = 0.0;
};

struct CliffordReport {
    std::string label;
    std::vector<PairDeviation> pairs;
    double max_deviation = 0.0;
    std::vector<int> inferred_signature;
    bool matches_declared = false;
};

/// Standard Pauli matrix sigma_i, i in 1..3.
ComplexMatrix pauli(int i);

/// The quantized-coordinate matrices t = diag(1,1,-1,-1),
/// x_i = offdiag(sigma_i, sigma_i). These close on the Euclidean
/// signature (+,+,+,+), which is what the verification reports.
CliffordSet build_eq9_set();

/// Standard Dirac gamma set, signature (+,-,-,-).
CliffordSet build_dirac_set();

/// Checks {G_a, G_b} = 2 eta_ab I entrywise. The built-in sets have
/// entries in {0, +-1, +-i}, so deviations are exactly zero.
CliffordReport verify_clifford(const CliffordSet& set);

/// Deformed-commutator scalar factor 1 + (a p / hbar)^2.
double snyder_deformation(double momentum, double length, double hbar);

struct FourMomentum {
    double p0 = 0.0; // E/c, g cm/s
    double p1 = 0.0;
    double p2 = 0.0;
    double p3 = 0.0;
};

/// gamma^mu p_mu c - m c^2 I in the standard Dirac representation.
ComplexMatrix dirac_operator(const FourMomentum& p, double mass, double c);

/// LU determinant with partial pivoting.
Complex determinant(const ComplexMatrix& m);

/// det(gamma^mu p_mu c - m c^2 I); equals (p^mu p_mu c^2 - m^2 c^4)^2.
Complex onshell_determinant(const FourMomentum& p, double mass, double c);

/// Rank deficiency of the Dirac operator by singular-value thresholding;
/// 2 on-shell, 0 off-shell.
int nullspace_dimension(const FourMomentum& p, double mass, double c, double tolerance);

} // namespace cledger
