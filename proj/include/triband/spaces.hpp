#pragma once

#include <cstddef>
#include <optional>
#include <vector>

#include "triband/operator.hpp"
#include "triband/types.hpp"

namespace triband {

enum class SpaceKind { SequenceLp, SequenceBVp };

/// A sequence space: lp (p-summable) or bv_p (differences p-summable),
/// 1 < p < infinity, with the conjugate exponent 1/p + 1/q = 1.
struct SpaceSpec {
    SpaceKind kind;
    double p;
    double q;

    static SpaceSpec lp(double p);
    static SpaceSpec bvp(double p);
};

/// (sum |x_k|^p)^(1/p), rescaled by the largest magnitude so no intermediate
/// power overflows.
double lp_norm(const FiniteSequence& x, double p);

/// lp norm of the backward-difference sequence (x_k - x_{k-1}) with x_{-1} = 0,
/// so the leading coordinate contributes |x_0|.
double bvp_norm(const FiniteSequence& x, double p);

/// lq norm of the suffix sums sum_{j>=k} a_j; the dual norm of bv_p.
double dq_norm(const FiniteSequence& a, double q);

/// Norm of x in the given space (dispatches to lp_norm or bvp_norm).
double space_norm(const FiniteSequence& x, const SpaceSpec& space);

/// Bounds on the operator norm. lower_bound is absent for bv_p, where only
/// the upper bound 2|s| + |r| is established; empirical is the largest ratio
/// ||Ux|| / ||x|| over the fixed sample family (see norm_sample_set).
struct NormReport {
    std::optional<double> lower_bound;
    double upper_bound;
    double empirical;
    SpaceSpec space;
};

/// The versioned sample family used for the empirical norm estimate:
/// unit vectors e^(0..4), sine-windowed cosines at 32 frequencies
/// (x_j = sin(pi (j+1)/(N+1)) cos(pi m j / 32), m = 1..32), and 100
/// mt19937-seeded random vectors with entries uniform in [-1, 1].
std::vector<FiniteSequence> norm_sample_set(std::size_t length);

NormReport operator_norm_bounds(const TriBandParams& op, const SpaceSpec& space);

/// Largest absolute column sum / row sum of a finite section.
double matrix_norm_l1(const TruncationMatrix& m);
double matrix_norm_linf(const TruncationMatrix& m);

/// Step sequence b^(k): 0 before index k, 1 from index k on (length n).
/// With coefficients x_k - x_{k-1} these reconstruct any finite sequence.
FiniteSequence basis_bk(std::size_t k, std::size_t n);

/// Backward differences d_k = x_k - x_{k-1} with x_{-1} = 0.
FiniteSequence delta_transform(const FiniteSequence& x);

/// Running prefix sums; the exact inverse of delta_transform.
FiniteSequence inverse_delta(const FiniteSequence& d);

/// Resolvent action on bv_p via the difference conjugation:
/// inverse_delta ∘ apply_resolvent ∘ delta_transform.
FiniteSequence resolvent_bvp(const TriBandParams& op, Complex lambda,
                             const FiniteSequence& y, std::size_t K,
                             double margin = 1e-9);

}  // namespace triband
