#include "cledger/algebra.hpp"

#include <Eigen/Dense>
#include <Eigen/SVD>

#include <cmath>

namespace cledger {

namespace {
const Complex kI{0.0, 1.0};
}

ComplexMatrix ComplexMatrix::identity(std::size_t n) {
    ComplexMatrix m(n);
    for (std::size_t i = 0; i < n; ++i) m(i, i) = 1.0;
    return m;
}

ComplexMatrix ComplexMatrix::operator+(const ComplexMatrix& o) const {
    if (n_ != o.n_) throw Error("matrix size mismatch");
    ComplexMatrix out(n_);
    for (std::size_t k = 0; k < a_.size(); ++k) out.a_[k] = a_[k] + o.a_[k];
    return out;
}

ComplexMatrix ComplexMatrix::operator-(const ComplexMatrix& o) const {
    if (n_ != o.n_) throw Error("matrix size mismatch");
    ComplexMatrix out(n_);
    for (std::size_t k = 0; k < a_.size(); ++k) out.a_[k] = a_[k] - o.a_[k];
    return out;
}

ComplexMatrix ComplexMatrix::operator*(const ComplexMatrix& o) const {
    if (n_ != o.n_) throw Error("matrix size mismatch");
    ComplexMatrix out(n_);
    for (std::size_t i = 0; i < n_; ++i)
        for (std::size_t k = 0; k < n_; ++k) {
            const Complex v = (*this)(i, k);
            if (v == Complex{}) continue;
            for (std::size_t j = 0; j < n_; ++j) out(i, j) += v * o(k, j);
        }
    return out;
}

ComplexMatrix ComplexMatrix::operator*(Complex s) const {
    ComplexMatrix out(n_);
    for (std::size_t k = 0; k < a_.size(); ++k) out.a_[k] = a_[k] * s;
    return out;
}

double ComplexMatrix::max_abs() const {
    double m = 0.0;
    for (const auto& v : a_) m = std::max(m, std::abs(v));
    return m;
}

ComplexMatrix pauli(int i) {
    ComplexMatrix m(2);
    switch (i) {
    case 1:
        m(0, 1) = 1.0;
        m(1, 0) = 1.0;
        break;
    case 2:
        m(0, 1) = -kI;
        m(1, 0) = kI;
        break;
    case 3:
        m(0, 0) = 1.0;
        m(1, 1) = -1.0;
        break;
    default:
        throw Error("pauli index out of range: " + std::to_string(i));
    }
    return m;
}

namespace {

// 4x4 block matrix [[A, B], [C, D]] from 2x2 blocks; null block = zero.
ComplexMatrix blocks(const ComplexMatrix* a, const ComplexMatrix* b,
                     const ComplexMatrix* c, const ComplexMatrix* d) {
    ComplexMatrix m(4);
    const ComplexMatrix* parts[2][2] = {{a, b}, {c, d}};
    for (int bi = 0; bi < 2; ++bi)
        for (int bj = 0; bj < 2; ++bj) {
            if (!parts[bi][bj]) continue;
            for (std::size_t i = 0; i < 2; ++i)
                for (std::size_t j = 0; j < 2; ++j)
                    m(2 * bi + i, 2 * bj + j) = (*parts[bi][bj])(i, j);
        }
    return m;
}

} // namespace

CliffordSet build_eq9_set() {
    CliffordSet set;
    set.label = "quantized-coordinates";
    const ComplexMatrix id2 = ComplexMatrix::identity(2);
    const ComplexMatrix neg_id2 = id2 * Complex{-1.0, 0.0};
    set.gammas.push_back(blocks(&id2, nullptr, nullptr, &neg_id2)); // t
    for (int i = 1; i <= 3; ++i) {
        const ComplexMatrix s = pauli(i);
        set.gammas.push_back(blocks(nullptr, &s, &s, nullptr)); // x_i
    }
    set.metric = {1, 1, 1, 1};
    return set;
}

CliffordSet build_dirac_set() {
    CliffordSet set;
    set.label = "dirac-standard";
    const ComplexMatrix id2 = ComplexMatrix::identity(2);
    const ComplexMatrix neg_id2 = id2 * Complex{-1.0, 0.0};
    set.gammas.push_back(blocks(&id2, nullptr, nullptr, &neg_id2)); // gamma^0
    for (int i = 1; i <= 3; ++i) {
        const ComplexMatrix s = pauli(i);
        const ComplexMatrix neg_s = s * Complex{-1.0, 0.0};
        set.gammas.push_back(blocks(nullptr, &s, &neg_s, nullptr)); // gamma^i
    }
    set.metric = {1, -1, -1, -1};
    return set;
}

CliffordReport verify_clifford(const CliffordSet& set) {
    CliffordReport report;
    report.label = set.label;
    if (set.gammas.empty()) throw Error("empty Clifford set");
    const std::size_t n = set.gammas.front().size();
    for (const auto& g : set.gammas)
        if (g.size() != n) throw Error("size mismatch within Clifford set");
    const ComplexMatrix id = ComplexMatrix::identity(n);

    // Signature from the diagonal: G_a^2 must be +-I.
    for (const auto& g : set.gammas) {
        const ComplexMatrix sq = g * g;
        const int eta = sq(0, 0).real() >= 0.0 ? 1 : -1;
        report.inferred_signature.push_back(eta);
    }

    const std::size_t count = set.gammas.size();
    for (std::size_t a = 0; a < count; ++a)
        for (std::size_t b = a; b < count; ++b) {
            const ComplexMatrix anti = set.gammas[a] * set.gammas[b] +
                                       set.gammas[b] * set.gammas[a];
            const Complex expected = a == b ? Complex{2.0 * report.inferred_signature[a], 0.0}
                                            : Complex{};
            const double dev = (anti - id * expected).max_abs();
            report.pairs.push_back({a, b, dev});
            report.max_deviation = std::max(report.max_deviation, dev);
        }
    report.matches_declared = report.inferred_signature == set.metric;
    return report;
}

double snyder_deformation(double momentum, double length, double hbar) {
    if (momentum < 0.0) throw Error("momentum must be non-negative");
    if (length < 0.0) throw Error("length must be non-negative");
    if (!(hbar > 0.0)) throw Error("hbar must be positive");
    const double x = length * momentum / hbar;
    return 1.0 + x * x;
}

ComplexMatrix dirac_operator(const FourMomentum& p, double mass, double c) {
    static const CliffordSet dirac = build_dirac_set();
    const double cov[4] = {p.p0, -p.p1, -p.p2, -p.p3}; // lower the index
    ComplexMatrix m(4);
    for (int mu = 0; mu < 4; ++mu)
        m = m + dirac.gammas[mu] * Complex{cov[mu] * c, 0.0};
    return m - ComplexMatrix::identity(4) * Complex{mass * c * c, 0.0};
}

Complex determinant(const ComplexMatrix& m) {
    const std::size_t n = m.size();
    ComplexMatrix a = m;
    Complex det = 1.0;
    for (std::size_t col = 0; col < n; ++col) {
        std::size_t pivot = col;
        for (std::size_t r = col + 1; r < n; ++r)
            if (std::abs(a(r, col)) > std::abs(a(pivot, col))) pivot = r;
        if (a(pivot, col) == Complex{}) return Complex{};
        if (pivot != col) {
            for (std::size_t j = 0; j < n; ++j) std::swap(a(pivot, j), a(col, j));
            det = -det;
        }
        det *= a(col, col);
        for (std::size_t r = col + 1; r < n; ++r) {
            const Complex f = a(r, col) / a(col, col);
            for (std::size_t j = col; j < n; ++j) a(r, j) -= f * a(col, j);
        }
    }
    return det;
}

Complex onshell_determinant(const FourMomentum& p, double mass, double c) {
    return determinant(dirac_operator(p, mass, c));
}

int nullspace_dimension(const FourMomentum& p, double mass, double c, double tolerance) {
    if (!(tolerance > 0.0)) throw Error("tolerance must be positive");
    const ComplexMatrix d = dirac_operator(p, mass, c);
    Eigen::Matrix4cd m;
    for (int i = 0; i < 4; ++i)
        for (int j = 0; j < 4; ++j) m(i, j) = d(i, j);
    const Eigen::JacobiSVD<Eigen::Matrix4cd> svd(m);
    int null_dim = 0;
    for (int i = 0; i < 4; ++i)
        if (svd.singularValues()(i) < tolerance) ++null_dim;
    return null_dim;
}

} // namespace cledger
