#pragma once

#include <cstddef>
#include <vector>

#include "triband/types.hpp"

namespace triband {

/// Defining scalars of the semi-infinite symmetric tri-band operator: a
/// constant diagonal r with constant entries s on the two adjacent diagonals.
///
///     [ r s 0 0 ... ]
///     [ s r s 0 ... ]
///     [ 0 s r s ... ]
///     [ ...     ... ]
///
/// s = 0 is accepted by the constructor but flagged degenerate; the spectral
/// routines reject such operators.
struct TriBandParams {
    Complex r;
    Complex s;

    bool degenerate() const { return s == Complex{}; }
};

/// Validates and packs the operator parameters. Rejects non-finite input.
TriBandParams make_operator(Complex r, Complex s);

/// Roots of the characteristic polynomial s*x^2 + (r - lambda)*x + s at a
/// query point lambda, ordered |alpha1| <= |alpha2|. The constant/leading
/// coefficients coincide, so alpha1 * alpha2 = 1; the dichotomy
/// |alpha1| < 1 < |alpha2| marks the resolvent set.
struct CharRoots {
    Complex lambda;
    Complex ratio_q;  ///< q = (r - lambda)/s, so the polynomial is x^2 + q x + 1
    Complex alpha1;
    Complex alpha2;
    bool is_double_root;  ///< q = ±2 within tolerance; then alpha1 = alpha2 = ∓1
};

/// Cancellation-safe root extraction: the larger-magnitude root comes from
/// the quadratic formula with sign-matched discriminant, the smaller from the
/// product relation alpha1 = 1/alpha2.
CharRoots char_roots(const TriBandParams& op, Complex lambda);

/// N x N leading principal submatrix of U(s,r,s) - lambda*I: symmetric,
/// bandwidth 1, Toeplitz. Entries off the band are exactly zero.
class TruncationMatrix {
public:
    TruncationMatrix(const TriBandParams& op, std::size_t order, Complex lambda = {});

    std::size_t order() const { return order_; }
    Complex diagonal_value() const { return diag_; }      ///< r - lambda
    Complex off_diagonal_value() const { return off_; }   ///< s
    Complex shift() const { return lambda_; }

    Complex entry(std::size_t i, std::size_t j) const {
        if (i == j) return diag_;
        if (i + 1 == j || j + 1 == i) return off_;
        return {};
    }

    /// Matrix-vector product, rows evaluated as s*x[i-1] + d*x[i] + s*x[i+1]
    /// with zero padding — the same arithmetic as apply(), so the two agree
    /// exactly away from the boundary row.
    std::vector<Complex> multiply(const std::vector<Complex>& x) const;

private:
    std::size_t order_;
    Complex diag_;
    Complex off_;
    Complex lambda_;
};

TruncationMatrix truncation_matrix(const TriBandParams& op, std::size_t order,
                                   Complex lambda = {});

/// Image of a finitely supported sequence: y_k = s*x_{k-1} + r*x_k + s*x_{k+1}
/// with x_{-1} = 0. The result has length len(x) + 1 (the trailing coordinate
/// s*x_{last} is retained); applying to the empty sequence yields the empty
/// sequence.
FiniteSequence apply(const TriBandParams& op, const FiniteSequence& x);

}  // namespace triband
