#include <doctest.h>

#include <cmath>
#include <limits>
#include <random>

#include "triband/operator.hpp"

using namespace triband;

namespace {
constexpr double kNan = std::numeric_limits<double>::quiet_NaN();
}

TEST_CASE("make_operator packs and validates parameters") {
    const auto op = make_operator({1, 0}, {2, 0});
    CHECK(op.r == Complex{1, 0});
    CHECK(op.s == Complex{2, 0});
    CHECK_FALSE(op.degenerate());

    CHECK_FALSE(make_operator({0, 0}, {1, 0}).degenerate());

    // s = 0 is representable but flagged; spectral routines reject it
    const auto diag = make_operator({2, 0}, {0, 0});
    CHECK(diag.degenerate());
    CHECK_THROWS_AS((void)char_roots(diag, {0, 0}), DegenerateOperatorError);

    CHECK_THROWS_AS((void)make_operator({kNan, 0}, {1, 0}), std::invalid_argument);
    CHECK_THROWS_AS((void)make_operator({0, 0}, {1, kNan}), std::invalid_argument);
}

TEST_CASE("char_roots at (r,s,lambda) = (0,1,3)") {
    const auto op = make_operator({0, 0}, {1, 0});
    const auto roots = char_roots(op, {3, 0});
    // roots of x^2 - 3x + 1, checked by substituting back
    CHECK(roots.alpha1.real() == doctest::Approx((3.0 - std::sqrt(5.0)) / 2.0).epsilon(1e-14));
    CHECK(roots.alpha2.real() == doctest::Approx((3.0 + std::sqrt(5.0)) / 2.0).epsilon(1e-14));
    CHECK(roots.alpha1.imag() == 0.0);
    CHECK_FALSE(roots.is_double_root);
    CHECK(std::abs(roots.ratio_q - Complex{-3, 0}) < 1e-15);
    for (const Complex a : {roots.alpha1, roots.alpha2}) {
        const Complex residual = a * a - 3.0 * a + 1.0;
        CHECK(std::abs(residual) <= 1e-12 * (std::abs(a * a) + 3.0 * std::abs(a) + 1.0));
    }
}

TEST_CASE("char_roots at lambda = r gives the unit roots ±i") {
    const auto op = make_operator({1.5, 0}, {-2, 0});
    const auto roots = char_roots(op, {1.5, 0});
    CHECK(std::abs(roots.alpha1) == doctest::Approx(1.0).epsilon(1e-14));
    CHECK(std::abs(roots.alpha2) == doctest::Approx(1.0).epsilon(1e-14));
    // the pair is {i, -i} in some order
    CHECK(std::abs(roots.alpha1 + roots.alpha2) < 1e-14);
    CHECK(std::min(std::abs(roots.alpha1 - Complex{0, 1}),
                   std::abs(roots.alpha1 - Complex{0, -1})) < 1e-14);
}

TEST_CASE("char_roots detects the double roots at the segment endpoints") {
    const auto op = make_operator({1, 0}, {2, 0});

    // lambda = r - 2s: q = +2, double root -1
    auto roots = char_roots(op, {-3, 0});
    CHECK(roots.is_double_root);
    CHECK(roots.alpha1 == Complex{-1, 0});
    CHECK(roots.alpha2 == Complex{-1, 0});

    // lambda = r + 2s: q = -2, double root +1
    roots = char_roots(op, {5, 0});
    CHECK(roots.is_double_root);
    CHECK(roots.alpha1 == Complex{1, 0});

    // |q| = 2 with q off the real axis is NOT a double root (q = 2i)
    const auto op2 = make_operator({0, 0}, {1, 0});
    roots = char_roots(op2, {0, -2});  // q = (0 - (-2i))/1 = 2i
    CHECK_FALSE(roots.is_double_root);
    CHECK(std::abs(roots.alpha1 * roots.alpha2 - 1.0) < 1e-12);
}

TEST_CASE("root product and polynomial residual over random parameters") {
    std::mt19937 rng(12021u);
    std::uniform_real_distribution<double> uni(-5.0, 5.0);
    for (int trial = 0; trial < 10000; ++trial) {
        const Complex r{uni(rng), uni(rng)};
        Complex s{uni(rng), uni(rng)};
        if (std::abs(s) < 1e-3) s += Complex{1.0, 0.0};
        const Complex lambda{uni(rng), uni(rng)};
        const auto roots = char_roots(make_operator(r, s), lambda);
        CHECK(std::abs(roots.alpha1 * roots.alpha2 - 1.0) <= 1e-10);
        CHECK(std::abs(roots.alpha1) <= std::abs(roots.alpha2));
        for (const Complex a : {roots.alpha1, roots.alpha2}) {
            const Complex residual = s * a * a + (r - lambda) * a + s;
            const double scale =
                std::abs(s * a * a) + std::abs((r - lambda) * a) + std::abs(s);
            CHECK(std::abs(residual) <= 1e-12 * scale);
        }
    }
}

TEST_CASE("truncation_matrix instances") {
    const auto laplacian = truncation_matrix(make_operator({0, 0}, {1, 0}), 3);
    const Complex expected[3][3] = {{0, 1, 0}, {1, 0, 1}, {0, 1, 0}};
    for (std::size_t i = 0; i < 3; ++i) {
        for (std::size_t j = 0; j < 3; ++j) {
            CHECK(laplacian.entry(i, j) == expected[i][j]);
        }
    }

    const auto shifted = truncation_matrix(make_operator({2, 0}, {1, 0}), 2, {1, 0});
    CHECK(shifted.entry(0, 0) == Complex{1, 0});
    CHECK(shifted.entry(0, 1) == Complex{1, 0});
    CHECK(shifted.entry(1, 0) == Complex{1, 0});
    CHECK(shifted.entry(1, 1) == Complex{1, 0});

    const auto single = truncation_matrix(make_operator({1, 0}, {2, 0}), 1);
    CHECK(single.entry(0, 0) == Complex{1, 0});

    CHECK_THROWS_AS(truncation_matrix(make_operator({1, 0}, {2, 0}), 0),
                    std::invalid_argument);
}

TEST_CASE("truncation matrices are symmetric with bandwidth 1") {
    std::mt19937 rng(777u);
    std::uniform_real_distribution<double> uni(-3.0, 3.0);
    for (int trial = 0; trial < 20; ++trial) {
        const auto op = make_operator({uni(rng), uni(rng)}, {uni(rng), uni(rng)});
        const auto m = truncation_matrix(op, 6, {uni(rng), uni(rng)});
        for (std::size_t i = 0; i < 6; ++i) {
            for (std::size_t j = 0; j < 6; ++j) {
                CHECK(m.entry(i, j) == m.entry(j, i));
                if (i > j + 1 || j > i + 1) CHECK(m.entry(i, j) == Complex{});
            }
        }
    }
}

TEST_CASE("apply: three-term rule with zero padding") {
    const auto op = make_operator({2, 0}, {1, 0});
    const auto image = apply(op, FiniteSequence::unit(1, 3));
    REQUIRE(image.size() == 4);
    CHECK(image[0] == Complex{1, 0});
    CHECK(image[1] == Complex{2, 0});
    CHECK(image[2] == Complex{1, 0});
    CHECK(image[3] == Complex{0, 0});

    CHECK(apply(op, FiniteSequence{}).empty());
    const auto zero_image = apply(op, FiniteSequence::zeros(4));
    for (const auto& z : zero_image) CHECK(z == Complex{});

    // hand evaluation for (r,s) = (0,1), x = (1,1,1):
    // y_0 = x_1 = 1, y_1 = x_0 + x_2 = 2, y_2 = x_1 = 1, y_3 = x_2 = 1
    const auto lap = make_operator({0, 0}, {1, 0});
    const auto y = apply(lap, FiniteSequence{{1, 0}, {1, 0}, {1, 0}});
    REQUIRE(y.size() == 4);
    CHECK(y[0] == Complex{1, 0});
    CHECK(y[1] == Complex{2, 0});
    CHECK(y[2] == Complex{1, 0});
    CHECK(y[3] == Complex{1, 0});
}

TEST_CASE("apply agrees exactly with the finite section away from the boundary row") {
    std::mt19937 rng(4242u);
    std::uniform_real_distribution<double> uni(-2.0, 2.0);
    for (int trial = 0; trial < 50; ++trial) {
        const auto op = make_operator({uni(rng), uni(rng)}, {uni(rng), uni(rng)});
        constexpr std::size_t n = 12;
        std::vector<Complex> x(n);
        for (auto& z : x) z = Complex{uni(rng), uni(rng)};

        const auto via_apply = apply(op, FiniteSequence(x));
        const auto via_matrix = truncation_matrix(op, n).multiply(x);
        for (std::size_t i = 0; i + 1 < n; ++i) {
            CHECK(via_apply[i] == via_matrix[i]);  // same arithmetic, bit-exact
        }
    }
}

TEST_CASE("FiniteSequence rejects non-finite entries and bad unit indices") {
    CHECK_THROWS_AS(FiniteSequence{Complex{kNan, 0}}, std::invalid_argument);
    CHECK_THROWS_AS(
        FiniteSequence{Complex{0, std::numeric_limits<double>::infinity()}},
        std::invalid_argument);
    CHECK_THROWS_AS(FiniteSequence::unit(3, 3), std::out_of_range);
    CHECK(FiniteSequence::unit(2, 5).at_or_zero(2) == Complex{1, 0});
    CHECK(FiniteSequence::unit(2, 5).at_or_zero(-1) == Complex{});
    CHECK(FiniteSequence::unit(2, 5).at_or_zero(17) == Complex{});
}
