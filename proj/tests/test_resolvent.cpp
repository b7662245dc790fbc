#include <doctest.h>

#include <cmath>
#include <random>

#include "triband/resolvent.hpp"
#include "triband/spectrum.hpp"

using namespace triband;

namespace {

const TriBandParams kLaplacian = make_operator({0, 0}, {1, 0});
constexpr Complex kLambda3{3.0, 0.0};

// alpha1 for (r,s,lambda) = (0,1,3): the small root of x^2 - 3x + 1
const double kAlpha1 = (3.0 - std::sqrt(5.0)) / 2.0;

// Row-k defining-equation residual for the column-n entries of `entry`.
template <typename EntryFn>
Complex residual(const TriBandParams& op, Complex lambda, EntryFn&& entry,
                 std::size_t k, std::size_t n) {
    const Complex d = op.r - lambda;
    Complex lhs;
    if (k == 1) {
        lhs = d * entry(1, n) + op.s * entry(2, n);
    } else {
        lhs = op.s * entry(k - 1, n) + d * entry(k, n) + op.s * entry(k + 1, n);
    }
    return lhs - (k == n ? Complex{1, 0} : Complex{});
}

}  // namespace

TEST_CASE("kernel entries match the banded-solve oracle at (0,1,3)") {
    const ResolventKernel kernel(kLaplacian, kLambda3);

    // frozen from the order-200 banded solve against unit vectors
    CHECK(kernel.entry(1, 1).real() == doctest::Approx(-0.3819660112501051).epsilon(1e-12));
    CHECK(kernel.entry(2, 2).real() == doctest::Approx(-0.4376941012509464).epsilon(1e-12));
    CHECK(kernel.entry(2, 1).real() == doctest::Approx(-0.1458980337503155).epsilon(1e-12));
    CHECK(kernel.entry(2, 1) == kernel.entry(1, 2));

    // and cross-checked against the oracle live
    for (std::size_t n : {std::size_t{1}, std::size_t{2}, std::size_t{7}}) {
        const auto x = solve_truncation(kLaplacian, kLambda3,
                                        FiniteSequence::unit(n - 1, n), 200);
        for (std::size_t k = 1; k <= 20; ++k) {
            CHECK(std::abs(kernel.entry(k, n) - x[k - 1]) <= 1e-12);
        }
    }
}

TEST_CASE("kernel-oracle equivalence for complex parameters") {
    const auto op = make_operator({1, 0}, {1, 1});
    // lambda with |alpha1| = 0.6 by construction
    const Complex a = std::polar(0.6, 1.0);
    const Complex lambda = op.r + op.s * (a + 1.0 / a);
    const ResolventKernel kernel(op, lambda);
    CHECK(std::abs(kernel.roots().alpha1) == doctest::Approx(0.6).epsilon(1e-12));
    for (std::size_t n = 1; n <= 30; ++n) {
        const auto x =
            solve_truncation(op, lambda, FiniteSequence::unit(n - 1, n), 300);
        for (std::size_t k = 1; k <= 30; ++k) {
            CHECK(std::abs(kernel.entry(k, n) - x[k - 1]) <= 1e-8);
        }
    }
}

TEST_CASE("kernel is symmetric") {
    const auto op = make_operator({2, 0}, {-1, 0});
    const Complex lambda{5.5, 0.25};
    const ResolventKernel kernel(op, lambda);
    for (std::size_t k = 1; k <= 50; ++k) {
        for (std::size_t n = 1; n <= 50; ++n) {
            CHECK(std::abs(kernel.entry(k, n) - kernel.entry(n, k)) <= 1e-14);
        }
    }
}

TEST_CASE("kernel satisfies every defining equation; whole-line kernel does not") {
    const ResolventKernel kernel(kLaplacian, kLambda3);
    const auto corr = [&](std::size_t k, std::size_t n) { return kernel.entry(k, n); };
    const auto lit = [&](std::size_t k, std::size_t n) {
        return whole_line_kernel_entry(kLaplacian, kLambda3, k, n);
    };

    for (std::size_t n = 1; n <= 30; ++n) {
        for (std::size_t k = 1; k <= 30; ++k) {
            CHECK(std::abs(residual(kLaplacian, kLambda3, corr, k, n)) <= 1e-12);
        }
    }

    // the two kernels coincide on row 1 and column 1 ...
    for (std::size_t j = 1; j <= 20; ++j) {
        CHECK(std::abs(corr(1, j) - lit(1, j)) <= 1e-14);
        CHECK(std::abs(corr(j, 1) - lit(j, 1)) <= 1e-14);
    }

    // ... but the whole-line kernel misses the diagonal jump (k = n >= 2,
    // residual alpha1^2) and the boundary row (k = 1, n >= 2, residual
    // alpha1^{n+1})
    CHECK(std::abs(residual(kLaplacian, kLambda3, lit, 2, 2)) ==
          doctest::Approx(kAlpha1 * kAlpha1).epsilon(1e-10));
    CHECK(std::abs(residual(kLaplacian, kLambda3, lit, 3, 3)) ==
          doctest::Approx(kAlpha1 * kAlpha1).epsilon(1e-10));
    CHECK(std::abs(residual(kLaplacian, kLambda3, lit, 1, 2)) ==
          doctest::Approx(std::pow(kAlpha1, 3)).epsilon(1e-10));
    CHECK(std::abs(residual(kLaplacian, kLambda3, lit, 1, 3)) ==
          doctest::Approx(std::pow(kAlpha1, 4)).epsilon(1e-10));

    // interior off-diagonal rows hold for any pure root-power kernel, which
    // is exactly why the failures sit on the diagonal and the boundary
    CHECK(std::abs(residual(kLaplacian, kLambda3, lit, 2, 3)) <= 1e-14);
    CHECK(std::abs(residual(kLaplacian, kLambda3, lit, 3, 2)) <= 1e-14);
}

TEST_CASE("resolvent refuses on-segment and near-segment points") {
    CHECK_THROWS_AS((void)kernel_entry(kLaplacian, {1.0, 0.0}, 1, 1),
                    ResolventUndefinedError);
    CHECK_THROWS_AS((void)kernel_entry(kLaplacian, {2.0, 0.0}, 1, 1),
                    ResolventUndefinedError);  // endpoint, double root
    CHECK_THROWS_AS((void)resolvent_norm_l1(kLaplacian, {0.5, 0.0}),
                    ResolventUndefinedError);

    // within the default margin band: refused normally, admitted when forced
    const Complex grazing{1.0, 1e-12};
    CHECK_THROWS_AS((void)kernel_entry(kLaplacian, grazing, 1, 1),
                    ResolventUndefinedError);
    const Complex forced = kernel_entry(kLaplacian, grazing, 1, 1, 0.0);
    CHECK(std::isfinite(forced.real()));
    CHECK(std::isfinite(forced.imag()));

    // the endpoint stays refused even when forced: no finite normalization
    CHECK_THROWS_AS((void)kernel_entry(kLaplacian, {2.0, 0.0}, 1, 1, 0.0),
                    ResolventUndefinedError);
}

TEST_CASE("apply_resolvent against frozen oracle values") {
    const auto x = apply_resolvent(kLaplacian, kLambda3, FiniteSequence{{1, 0}}, 3);
    REQUIRE(x.size() == 3);
    CHECK(x[0].real() == doctest::Approx(-0.3819660112501051).epsilon(1e-12));
    CHECK(x[1].real() == doctest::Approx(-0.1458980337503155).epsilon(1e-12));
    CHECK(x[2].real() == doctest::Approx(-0.0557280900008412).epsilon(1e-12));

    const auto zeros = apply_resolvent(kLaplacian, kLambda3, FiniteSequence::zeros(5), 4);
    for (const auto& z : zeros) CHECK(z == Complex{});

    // round trip: (U - lambda I) x = y on the retained rows
    std::mt19937 rng(31429u);
    std::uniform_real_distribution<double> uni(-1.0, 1.0);
    std::vector<Complex> entries(12);
    for (auto& z : entries) z = Complex{uni(rng), uni(rng)};
    const FiniteSequence y(entries);
    constexpr std::size_t K = 40;
    const auto sol = apply_resolvent(kLaplacian, kLambda3, y, K);
    for (std::size_t k = 1; k + 2 <= K; ++k) {
        const Complex xm1 = k >= 2 ? sol[k - 2] : Complex{};
        const Complex lhs = kLaplacian.s * xm1 + (kLaplacian.r - kLambda3) * sol[k - 1] +
                            kLaplacian.s * sol[k];
        const Complex yk = k - 1 < y.size() ? y[k - 1] : Complex{};
        CHECK(std::abs(lhs - yk) <= 1e-12);
    }
}

TEST_CASE("solve_truncation flags singular sections with a condition estimate") {
    // order-4 section of the free Laplacian has eigenvalues 2cos(j pi/5);
    // shifting by one of them is exactly singular
    const double golden = 2.0 * std::cos(std::acos(-1.0) / 5.0);
    try {
        (void)solve_truncation(kLaplacian, {golden, 0.0}, FiniteSequence::unit(0, 1), 4);
        FAIL("expected SingularTruncationError");
    } catch (const SingularTruncationError& e) {
        CHECK(e.condition_estimate() <= 1e-12);
    }

    // lambda = 0 is not among them: solvable
    const auto x = solve_truncation(kLaplacian, {0, 0}, FiniteSequence::unit(0, 1), 4);
    CHECK(x.size() == 4);

    // agreement with the kernel route on a generic instance
    const auto op = make_operator({1, 0}, {2, 0});
    const auto via_kernel =
        apply_resolvent(op, {10, 0}, FiniteSequence::unit(2, 3), 20);
    const auto via_solve =
        solve_truncation(op, {10, 0}, FiniteSequence::unit(2, 3), 100);
    for (std::size_t k = 0; k < 20; ++k) {
        CHECK(std::abs(via_kernel[k] - via_solve[k]) <= 1e-10);
    }
}

TEST_CASE("resolvent norms: closed-form tails, symmetry, growth toward the segment") {
    // column 1 of the kernel at (0,1,3) is -alpha1^k: geometric sum
    CHECK(resolvent_column_abs_sum(kLaplacian, kLambda3, 1) ==
          doctest::Approx(kAlpha1 / (1.0 - kAlpha1)).epsilon(1e-12));
    CHECK(resolvent_row_abs_sum(kLaplacian, kLambda3, 1) ==
          doctest::Approx(kAlpha1 / (1.0 - kAlpha1)).epsilon(1e-12));

    const double l1 = resolvent_norm_l1(kLaplacian, kLambda3);
    const double linf = resolvent_norm_linf(kLaplacian, kLambda3);
    CHECK(l1 == doctest::Approx(1.0).epsilon(1e-10));  // frozen: sup of column sums
    CHECK(std::abs(l1 - linf) <= 1e-12 * std::max(1.0, l1));

    const double far = resolvent_norm_l1(kLaplacian, {10, 0});
    const double near = resolvent_norm_l1(kLaplacian, {2.0001, 0});
    CHECK(std::isfinite(near));
    CHECK(near > l1);
    CHECK(l1 > far);

    // complex-parameter case converges too and stays symmetric
    const auto op = make_operator({1, 0}, {1, 1});
    const Complex a = std::polar(0.7, 0.9);
    const Complex lambda = op.r + op.s * (a + 1.0 / a);
    const double c_l1 = resolvent_norm_l1(op, lambda);
    const double c_linf = resolvent_norm_linf(op, lambda);
    CHECK(std::isfinite(c_l1));
    CHECK(std::abs(c_l1 - c_linf) <= 1e-12 * std::max(1.0, c_l1));
}

TEST_CASE("lp boundedness certificate") {
    const auto op = make_operator({1, 0}, {2, 0});
    const auto bounded = resolvent_in_lp_certificate(op, {6, 0});
    CHECK(bounded.lp_bounded);
    CHECK(std::isfinite(bounded.l1_norm));
    CHECK(std::isfinite(bounded.linf_norm));

    const auto on_segment = resolvent_in_lp_certificate(op, {0, 0});
    CHECK_FALSE(on_segment.lp_bounded);
    CHECK(std::isinf(on_segment.l1_norm));

    const auto endpoint = resolvent_in_lp_certificate(kLaplacian, {2, 0});
    CHECK_FALSE(endpoint.lp_bounded);
}
