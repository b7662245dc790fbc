#include "triband/resolvent.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <string>

#include "triband/detail/int_pow.hpp"
#include "triband/spectrum.hpp"
#include "triband/tridiag.hpp"

namespace triband {

using detail::int_pow;

namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();

}  // namespace

ResolventKernel::ResolventKernel(const TriBandParams& op, Complex lambda,
                                 double margin)
    : op_(op), lambda_(lambda), roots_(char_roots(op, lambda)) {
    const double a = std::abs(roots_.alpha1);
    if (margin > 0.0 && a > 1.0 - margin) {
        throw ResolventUndefinedError(
            "resolvent kernel: |alpha1| = " + std::to_string(a) +
            " exceeds 1 - margin; lambda is on or too close to the spectrum segment");
    }
    const Complex denom = op.s * (roots_.alpha1 * roots_.alpha1 - 1.0);
    if (denom == Complex{}) {
        throw ResolventUndefinedError(
            "resolvent kernel: normalization vanishes (segment endpoint)");
    }
    norm_ = 1.0 / denom;
}

Complex ResolventKernel::entry(std::size_t k, std::size_t n) const {
    if (k == 0 || n == 0) {
        throw std::out_of_range("ResolventKernel::entry: indices are 1-based");
    }
    const std::size_t gap = k > n ? k - n : n - k;
    const Complex a1 = roots_.alpha1;
    return (int_pow(a1, gap + 1) - int_pow(a1, k + n + 1)) * norm_;
}

Complex kernel_entry(const TriBandParams& op, Complex lambda, std::size_t k,
                     std::size_t n, double margin) {
    return ResolventKernel(op, lambda, margin).entry(k, n);
}

Complex whole_line_kernel_entry(const TriBandParams& op, Complex lambda,
                                std::size_t k, std::size_t n, double margin) {
    if (k == 0 || n == 0) {
        throw std::out_of_range("whole_line_kernel_entry: indices are 1-based");
    }
    const ResolventKernel kernel(op, lambda, margin);
    const Complex a1 = kernel.roots().alpha1;
    Complex t;
    if (k >= n) {
        t = int_pow(a1, k + 1 - n) - int_pow(a1, k + 3 - n);
    } else {
        t = int_pow(a1, n + 1 - k) - int_pow(a1, n + 3 - k);
    }
    return t * kernel.normalization();
}

FiniteSequence apply_resolvent(const TriBandParams& op, Complex lambda,
                               const FiniteSequence& y, std::size_t K,
                               double margin) {
    if (K == 0) throw std::invalid_argument("apply_resolvent: K must be >= 1");
    const ResolventKernel kernel(op, lambda, margin);
    std::vector<Complex> x(K);
    for (std::size_t j = 0; j < K; ++j) {
        Complex acc{};
        for (std::size_t m = 0; m < y.size(); ++m) {
            if (y[m] == Complex{}) continue;
            acc += kernel.entry(j + 1, m + 1) * y[m];
        }
        x[j] = acc;
    }
    return FiniteSequence(std::move(x));
}

FiniteSequence solve_truncation(const TriBandParams& op, Complex lambda,
                                const FiniteSequence& y, std::size_t N) {
    if (N == 0) throw std::invalid_argument("solve_truncation: N must be >= 1");
    if (op.degenerate()) {
        // still a valid (diagonal) linear solve, but out of scope here
        throw DegenerateOperatorError("solve_truncation: s = 0");
    }
    std::vector<Complex> rhs(N);
    for (std::size_t i = 0; i < N && i < y.size(); ++i) rhs[i] = y[i];

    const auto fac = factor_truncation(op.r, op.s, lambda, N);
    const double scale = std::abs(op.r - lambda) + 2.0 * std::abs(op.s);
    const double floor =
        4.0 * static_cast<double>(N) * std::numeric_limits<double>::epsilon() * scale;
    return FiniteSequence(fac.solve(std::move(rhs), floor));
}

namespace {

struct AbsSumScan {
    double a;     // |alpha1|
    double D;     // |s (alpha1^2 - 1)|
    Complex a1sq; // alpha1^2
};

AbsSumScan make_scan(const ResolventKernel& kernel) {
    const Complex a1 = kernel.roots().alpha1;
    return AbsSumScan{std::abs(a1), 1.0 / std::abs(kernel.normalization()), a1 * a1};
}

// Column sums converge to this limit as n grows: the head tends to
// a^2/(1-a) and the tail factor |1 - alpha1^{2n}| to 1.
double limit_abs_sum(const AbsSumScan& s) {
    return s.a * (1.0 + s.a) / ((1.0 - s.a) * s.D);
}

// For every m >= n the column (or row) sum is within this bound of the
// limit; decreasing in n once n >= 1/(1 - a).
double remainder_bound(const AbsSumScan& s, std::size_t n) {
    const double an = std::pow(s.a, static_cast<double>(n));
    return (static_cast<double>(n) * an * s.a * s.a + an * s.a +
            an * an * s.a) /
           ((1.0 - s.a) * s.D);
}

constexpr std::size_t kScanCap = 5'000'000;

}  // namespace

double resolvent_column_abs_sum(const TriBandParams& op, Complex lambda,
                                std::size_t n, double margin) {
    if (n == 0) throw std::out_of_range("resolvent_column_abs_sum: 1-based index");
    const ResolventKernel kernel(op, lambda, margin);
    const auto s = make_scan(kernel);
    if (s.a >= 1.0) return kInf;
    // head: rows k = 1..n-1, |G(k,n)| = a^{n-k+1} |1 - alpha1^{2k}|
    double head = 0.0;
    Complex w = s.a1sq;  // alpha1^{2k}
    for (std::size_t k = 1; k < n; ++k) {
        head += std::pow(s.a, static_cast<double>(n - k + 1)) * std::abs(1.0 - w);
        w *= s.a1sq;
    }
    // tail: rows k >= n sum to a geometric series with ratio a
    const Complex w_n = int_pow(kernel.roots().alpha1, 2 * n);
    const double tail = s.a / (1.0 - s.a) * std::abs(1.0 - w_n);
    return (head + tail) / s.D;
}

double resolvent_norm_l1(const TriBandParams& op, Complex lambda, double margin) {
    const ResolventKernel kernel(op, lambda, margin);
    const auto s = make_scan(kernel);
    if (s.a >= 1.0) return kInf;

    const double s_inf = limit_abs_sum(s);
    double best = 0.0;
    double head = 0.0;   // head of column n
    Complex w = s.a1sq;  // alpha1^{2n}
    for (std::size_t n = 1; n <= kScanCap; ++n) {
        const double t = std::abs(1.0 - w);
        const double col = (head + s.a / (1.0 - s.a) * t) / s.D;
        best = std::max(best, col);
        head = s.a * head + s.a * s.a * t;
        w *= s.a1sq;
        if (static_cast<double>(n) * (1.0 - s.a) >= 2.0 &&
            remainder_bound(s, n) <= 1e-13 * std::max(best, s_inf)) {
            break;
        }
    }
    return std::max(best, s_inf);
}

double resolvent_norm_linf(const TriBandParams& op, Complex lambda, double margin) {
    const ResolventKernel kernel(op, lambda, margin);
    const auto s = make_scan(kernel);
    if (s.a >= 1.0) return kInf;

    // Row sums assembled from kernel entries: |G(k+1,n)| = a |G(k,n)| for
    // n <= k, and the tail past the diagonal is |G(k,k)| * a/(1-a).
    const double r_inf = limit_abs_sum(s);
    double best = 0.0;
    double head = 0.0;  // sum over n < k of |G(k,n)|
    for (std::size_t k = 1; k <= kScanCap; ++k) {
        const double diag = std::abs(kernel.entry(k, k));
        const double row = head + diag / (1.0 - s.a);
        best = std::max(best, row);
        head = s.a * head + std::abs(kernel.entry(k + 1, k));
        if (static_cast<double>(k) * (1.0 - s.a) >= 2.0 &&
            remainder_bound(s, k) <= 1e-13 * std::max(best, r_inf)) {
            break;
        }
    }
    return std::max(best, r_inf);
}

LpBoundednessCertificate resolvent_in_lp_certificate(const TriBandParams& op,
                                                     Complex lambda) {
    const auto cls = classify_lambda(op, lambda);
    if (cls.kind == SpectralClass::ContinuousSpectrum) {
        return LpBoundednessCertificate{kInf, kInf, false};
    }
    // classify admits |alpha1| up to 1 - 1e-12, tighter than the default
    // evaluation margin, so evaluate without one
    const double l1 = resolvent_norm_l1(op, lambda, 0.0);
    const double linf = resolvent_norm_linf(op, lambda, 0.0);
    return LpBoundednessCertificate{l1, linf,
                                    std::isfinite(l1) && std::isfinite(linf)};
}

}  // namespace triband
