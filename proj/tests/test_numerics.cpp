#include "jamsim/numerics.hpp"

#include <catch2/catch_amalgamated.hpp>

using namespace jamsim;

TEST_CASE("zero-variance sampling gives the zero matrix") {
    Rng rng(1);
    const CMatrix m = sample_complex_gaussian(2, 2, 0.0, rng);
    REQUIRE(m.norm() == 0.0);
}

TEST_CASE("per-entry power matches the requested variance") {
    Rng rng(42);
    double acc = 0.0;
    const long draws = 100000;
    for (long i = 0; i < draws; ++i) {
        const CMatrix m = sample_complex_gaussian(2, 2, 1.0, rng);
        acc += m.squaredNorm();
    }
    const double mean_power = acc / (4.0 * draws);
    REQUIRE(mean_power > 0.99);
    REQUIRE(mean_power < 1.01);
}

TEST_CASE("variance splits evenly between real and imaginary parts") {
    Rng rng(7);
    double sum = 0.0, sum_sq = 0.0;
    const long draws = 100000;
    for (long i = 0; i < draws; ++i) {
        const double re = sample_complex_gaussian(1, 1, 4.0, rng)(0, 0).real();
        sum += re;
        sum_sq += re * re;
    }
    const double mean = sum / draws;
    const double var = sum_sq / draws - mean * mean;
    REQUIRE(var == Catch::Approx(2.0).epsilon(0.02));
}

TEST_CASE("sampling rejects empty shapes") {
    Rng rng(1);
    REQUIRE_THROWS_AS(sample_complex_gaussian(0, 2, 1.0, rng), std::invalid_argument);
    REQUIRE_THROWS_AS(sample_complex_gaussian(2, 0, 1.0, rng), std::invalid_argument);
    REQUIRE_THROWS_AS(sample_complex_gaussian(2, 2, -1.0, rng), std::invalid_argument);
}

TEST_CASE("sampling is reproducible bit for bit") {
    Rng a(99), b(99);
    const CMatrix ma = sample_complex_gaussian(3, 5, 2.5, a);
    const CMatrix mb = sample_complex_gaussian(3, 5, 2.5, b);
    REQUIRE(ma == mb);
}

TEST_CASE("left pseudo-inverse basics") {
    const CMatrix eye = CMatrix::Identity(2, 2);
    REQUIRE((left_pinv(eye) - eye).norm() < 1e-14);

    CMatrix col(2, 1);
    col << Complex(2, 0), Complex(0, 0);
    const CMatrix pinv = left_pinv(col);
    REQUIRE(pinv.rows() == 1);
    REQUIRE(pinv.cols() == 2);
    REQUIRE(std::abs(pinv(0, 0) - Complex(0.5, 0)) < 1e-14);
    REQUIRE(std::abs(pinv(0, 1)) < 1e-14);
}

TEST_CASE("left pseudo-inverse satisfies pinv(H) H = I on random tall matrices") {
    Rng rng(3);
    for (int trial = 0; trial < 20; ++trial) {
        const CMatrix h = sample_complex_gaussian(4, 2, 1.0, rng);
        const CMatrix resid = left_pinv(h) * h - CMatrix::Identity(2, 2);
        REQUIRE(resid.norm() < 1e-10);
    }
}

TEST_CASE("left pseudo-inverse rejects singular input") {
    CMatrix h(2, 2);
    h << Complex(1, 0), Complex(2, 0), Complex(2, 0), Complex(4, 0);
    REQUIRE_THROWS_AS(left_pinv(h), std::runtime_error);
    REQUIRE_THROWS_AS(left_pinv(CMatrix::Zero(3, 2)), std::runtime_error);
    REQUIRE_THROWS_AS(left_pinv(CMatrix::Zero(2, 3)), std::invalid_argument);
}

TEST_CASE("right pseudo-inverse basics and residuals") {
    const CMatrix eye = CMatrix::Identity(2, 2);
    REQUIRE((right_pinv(eye) - eye).norm() < 1e-14);

    CMatrix row(1, 2);
    row << Complex(0, 0), Complex(3, 0);
    const CMatrix pinv = right_pinv(row);
    REQUIRE(std::abs(pinv(0, 0)) < 1e-14);
    REQUIRE(std::abs(pinv(1, 0) - Complex(1.0 / 3.0, 0)) < 1e-14);

    Rng rng(5);
    for (int trial = 0; trial < 20; ++trial) {
        const CMatrix x = sample_complex_gaussian(2, 8, 1.0, rng);
        const CMatrix resid = x * right_pinv(x) - CMatrix::Identity(2, 2);
        REQUIRE(resid.norm() < 1e-10);
    }
}

TEST_CASE("max eigenpair on a diagonal matrix") {
    CMatrix a(2, 2);
    a << Complex(3, 0), Complex(0, 0), Complex(0, 0), Complex(1, 0);
    const Eigenpair pair = max_eigenpair(a);
    REQUIRE(pair.value == Catch::Approx(3.0).margin(1e-12));
    REQUIRE(std::abs(pair.vector(0)) == Catch::Approx(1.0).margin(1e-12));
    REQUIRE(std::abs(pair.vector(1)) < 1e-10);
}

TEST_CASE("max eigenpair accepts a degenerate spectrum") {
    const Eigenpair pair = max_eigenpair(CMatrix::Identity(2, 2));
    REQUIRE(pair.value == Catch::Approx(1.0).margin(1e-12));
    REQUIRE(pair.vector.norm() == Catch::Approx(1.0).margin(1e-12));
}

TEST_CASE("max eigenpair matches the 2x2 characteristic polynomial root") {
    Rng rng(11);
    for (int trial = 0; trial < 20; ++trial) {
        const CMatrix c = sample_complex_gaussian(2, 2, 1.0, rng);
        const CMatrix b = c.adjoint() * c;
        const double tr = b.trace().real();
        const double det = (b(0, 0) * b(1, 1) - b(0, 1) * b(1, 0)).real();
        const double expected = (tr + std::sqrt(tr * tr - 4.0 * det)) / 2.0;
        const Eigenpair pair = max_eigenpair(b);
        REQUIRE(pair.value == Catch::Approx(expected).margin(1e-8));
        REQUIRE((b * pair.vector - pair.value * pair.vector).norm() < 1e-8);
        // The top eigenvalue is at least the average of the spectrum.
        REQUIRE(pair.value >= tr / 2.0 - 1e-12);
    }
}

TEST_CASE("max eigenpair rejects non-Hermitian input") {
    CMatrix a(2, 2);
    a << Complex(1, 0), Complex(2, 0), Complex(0, 0), Complex(1, 0);
    REQUIRE_THROWS_AS(max_eigenpair(a), std::invalid_argument);
}

TEST_CASE("stream seeds decorrelate while staying deterministic") {
    REQUIRE(stream_seed(1, 0) == stream_seed(1, 0));
    REQUIRE(stream_seed(1, 0) != stream_seed(1, 1));
    REQUIRE(stream_seed(1, 0) != stream_seed(2, 0));
}
