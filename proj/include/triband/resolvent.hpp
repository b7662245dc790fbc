#pragma once

#include <cstddef>

#include "triband/operator.hpp"
#include "triband/types.hpp"

namespace triband {

/// Closed-form Green's kernel of the resolvent (U - lambda*I)^{-1} on the
/// half-line, valid when |alpha1| < 1:
///
///     G(k,n) = (alpha1^{|k-n|+1} - alpha1^{k+n+1}) / (s (alpha1^2 - 1))
///
/// with 1-based indices k, n (external 0-based coordinates shift by one).
/// The first term is the translation-invariant part, the second the boundary
/// image enforcing the k = 1 row equation. G is symmetric and its rows and
/// columns decay geometrically, so large indices only ever take powers of a
/// number of modulus < 1.
class ResolventKernel {
public:
    static constexpr double kDefaultMargin = 1e-9;

    /// Throws ResolventUndefinedError when |alpha1| > 1 - margin, i.e. when
    /// lambda is on (or numerically too close to) the spectrum segment.
    /// margin <= 0 admits any |alpha1| < 1 for exploration runs.
    ResolventKernel(const TriBandParams& op, Complex lambda,
                    double margin = kDefaultMargin);

    Complex entry(std::size_t k, std::size_t n) const;  ///< 1-based indices

    const TriBandParams& op() const { return op_; }
    Complex shift() const { return lambda_; }
    const CharRoots& roots() const { return roots_; }
    Complex normalization() const { return norm_; }  ///< 1 / (s (alpha1^2 - 1))

private:
    TriBandParams op_;
    Complex lambda_;
    CharRoots roots_;
    Complex norm_;
};

/// One-shot kernel evaluation (1-based k, n).
Complex kernel_entry(const TriBandParams& op, Complex lambda, std::size_t k,
                     std::size_t n, double margin = ResolventKernel::kDefaultMargin);

/// The translation-invariant candidate kernel
///   t(k,n) = alpha1^{k+1-n} - alpha1^{k+3-n}   (k >= n)
///   t(k,n) = alpha1^{n+1-k} - alpha1^{n+3-k}   (k < n)
/// divided by the same normalization. Lacking the boundary image term it
/// satisfies only the interior off-diagonal row equations: the diagonal jump
/// rows (k = n >= 2) and the first row (n >= 2) fail with residuals
/// alpha1^2 and alpha1^{n+1}. It agrees with the true kernel on row and
/// column 1 only. Kept as a test witness; it is not the resolvent.
Complex whole_line_kernel_entry(const TriBandParams& op, Complex lambda,
                                std::size_t k, std::size_t n,
                                double margin = ResolventKernel::kDefaultMargin);

/// First K coordinates of (U - lambda*I)^{-1} y for finitely supported y
/// (0-based externally; x[j] = sum_n G(j+1, n) y[n-1]).
FiniteSequence apply_resolvent(const TriBandParams& op, Complex lambda,
                               const FiniteSequence& y, std::size_t K,
                               double margin = ResolventKernel::kDefaultMargin);

/// Independent oracle: solves the order-N finite section (U_N - lambda*I) x = y
/// by banded elimination with partial pivoting and returns all N entries.
/// Near-singular sections are reported with a condition estimate.
FiniteSequence solve_truncation(const TriBandParams& op, Complex lambda,
                                const FiniteSequence& y, std::size_t N);

/// Absolute column sum sum_k |G(k,n)| of the kernel; the geometric tail is
/// summed in closed form, there is no truncation knob.
double resolvent_column_abs_sum(const TriBandParams& op, Complex lambda,
                                std::size_t n,
                                double margin = ResolventKernel::kDefaultMargin);

/// Absolute row sum sum_n |G(k,n)|; equals the column sum by symmetry but is
/// evaluated through kernel entries as a separate route.
double resolvent_row_abs_sum(const TriBandParams& op, Complex lambda, std::size_t k,
                             double margin = ResolventKernel::kDefaultMargin);

/// Operator norm of the resolvent on l1: the supremum of absolute column
/// sums. The supremum over all columns is resolved analytically: column sums
/// converge geometrically to a closed-form limit, and scanning stops once the
/// remaining columns are provably within 1e-13 of it.
double resolvent_norm_l1(const TriBandParams& op, Complex lambda,
                         double margin = ResolventKernel::kDefaultMargin);

/// Operator norm of the resolvent on l_infinity: the supremum of absolute row
/// sums, evaluated from kernel entries (dual route to resolvent_norm_l1; the
/// two agree by kernel symmetry).
double resolvent_norm_linf(const TriBandParams& op, Complex lambda,
                           double margin = ResolventKernel::kDefaultMargin);

/// Boundedness certificate on lp, 1 < p < infinity: bounded on l1 and on
/// l_infinity interpolates to bounded on every lp. On-segment points yield
/// infinite norm markers and lp_bounded = false instead of an error.
struct LpBoundednessCertificate {
    double l1_norm;
    double linf_norm;
    bool lp_bounded;
};

LpBoundednessCertificate resolvent_in_lp_certificate(const TriBandParams& op,
                                                     Complex lambda);

}  // namespace triband
