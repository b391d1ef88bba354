#pragma once

#include <Eigen/Dense>

#include <cmath>
#include <complex>
#include <cstdint>
#include <random>
#include <stdexcept>

namespace jamsim {

using Complex = std::complex<double>;
using CMatrix = Eigen::MatrixXcd;
using CVector = Eigen::VectorXcd;
using Rng = std::mt19937_64;

// Numeric guard rails shared across the library.
inline constexpr double kConditionCap = 1e12;
inline constexpr double kHermitianTol = 1e-9;
inline constexpr double kSinrCeiling = 1e12;

namespace detail {

inline std::uint64_t splitmix64(std::uint64_t x) {
    x += 0x9e3779b97f4a7c15ULL;
    x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
    x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
    return x ^ (x >> 31);
}

}  // namespace detail

// Derives the seed for a per-trial random stream so that parallel trials
// stay decorrelated and a rerun with the same master seed is bit-identical.
inline std::uint64_t stream_seed(std::uint64_t master_seed, std::uint64_t index) {
    return detail::splitmix64(master_seed ^ (0x9e3779b97f4a7c15ULL * (index + 1)));
}

inline Rng make_stream(std::uint64_t master_seed, std::uint64_t index) {
    return Rng(stream_seed(master_seed, index));
}

// Uniform double in [0, 1) with 53 random bits.
inline double canonical(Rng& rng) {
    return static_cast<double>(rng() >> 11) * 0x1.0p-53;
}

// Circularly-symmetric complex Gaussian sample with the given total variance
// (real and imaginary parts carry variance/2 each). Box-Muller keeps the
// draw count fixed at two words per sample, so streams replay exactly.
inline Complex complex_gaussian(double variance, Rng& rng) {
    const double u1 = 1.0 - canonical(rng);  // (0, 1], keeps log() finite
    const double u2 = canonical(rng);
    const double radius = std::sqrt(-variance * std::log(u1));
    const double angle = 2.0 * M_PI * u2;
    return {radius * std::cos(angle), radius * std::sin(angle)};
}

inline CMatrix sample_complex_gaussian(Eigen::Index rows, Eigen::Index cols,
                                       double variance, Rng& rng) {
    if (rows <= 0 || cols <= 0) {
        throw std::invalid_argument("sample_complex_gaussian: empty shape");
    }
    if (variance < 0.0) {
        throw std::invalid_argument("sample_complex_gaussian: negative variance");
    }
    CMatrix out(rows, cols);
    for (Eigen::Index r = 0; r < rows; ++r) {
        for (Eigen::Index c = 0; c < cols; ++c) {
            out(r, c) = complex_gaussian(variance, rng);
        }
    }
    return out;
}

struct Eigenpair {
    double value = 0.0;
    CVector vector;
};

// Largest eigenvalue and a unit eigenvector of a Hermitian PSD matrix.
// Rejects input whose asymmetry exceeds the relative tolerance.
inline Eigenpair max_eigenpair(const CMatrix& a, double tol = kHermitianTol) {
    if (a.rows() != a.cols() || a.rows() == 0) {
        throw std::invalid_argument("max_eigenpair: matrix must be square");
    }
    if (!a.allFinite()) {
        throw std::invalid_argument("max_eigenpair: non-finite entries");
    }
    const double scale = std::max(a.norm(), 1.0);
    if ((a - a.adjoint()).norm() > tol * scale) {
        throw std::invalid_argument("max_eigenpair: matrix is not Hermitian");
    }
    Eigen::SelfAdjointEigenSolver<CMatrix> solver((a + a.adjoint()) * 0.5);
    if (solver.info() != Eigen::Success) {
        throw std::runtime_error("max_eigenpair: eigendecomposition failed");
    }
    const Eigen::Index last = a.rows() - 1;  // eigenvalues come back ascending
    Eigenpair pair;
    pair.value = std::max(solver.eigenvalues()(last), 0.0);
    pair.vector = solver.eigenvectors().col(last);
    return pair;
}

// (H^H H)^{-1} H^H for a tall full-column-rank H. The Gram matrix is
// diagonalized so rank deficiency shows up as an explicit error instead of
// amplified garbage.
inline CMatrix left_pinv(const CMatrix& h, double condition_cap = kConditionCap) {
    if (h.rows() < h.cols() || h.cols() == 0) {
        throw std::invalid_argument("left_pinv: need rows >= cols >= 1");
    }
    if (!h.allFinite()) {
        throw std::invalid_argument("left_pinv: non-finite entries");
    }
    const CMatrix gram = h.adjoint() * h;
    Eigen::SelfAdjointEigenSolver<CMatrix> solver(gram);
    if (solver.info() != Eigen::Success) {
        throw std::runtime_error("left_pinv: eigendecomposition failed");
    }
    const auto& evals = solver.eigenvalues();
    const double largest = evals(h.cols() - 1);
    const double smallest = evals(0);
    if (!(largest > 0.0) || smallest <= largest / condition_cap) {
        throw std::runtime_error("left_pinv: matrix is singular or ill-conditioned");
    }
    Eigen::VectorXd inv = evals.cwiseInverse();
    return solver.eigenvectors() * inv.asDiagonal() *
           solver.eigenvectors().adjoint() * h.adjoint();
}

// X^H (X X^H)^{-1} for a wide full-row-rank X.
inline CMatrix right_pinv(const CMatrix& x, double condition_cap = kConditionCap) {
    if (x.cols() < x.rows() || x.rows() == 0) {
        throw std::invalid_argument("right_pinv: need cols >= rows >= 1");
    }
    return left_pinv(x.adjoint(), condition_cap).adjoint();
}

}  // namespace jamsim
