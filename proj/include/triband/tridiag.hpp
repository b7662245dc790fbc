#pragma once

#include <cstddef>
#include <vector>

#include "triband/types.hpp"

namespace triband {

/// LU factorization of a complex tridiagonal matrix with partial pivoting.
/// Row interchanges are between adjacent rows only, which fills in a second
/// superdiagonal; storage stays O(n).
///
/// Band layout after factorization:
///   sub[i]   multiplier L(i+1,i)         (i = 0..n-2)
///   diag[i]  pivot U(i,i)                (i = 0..n-1)
///   sup[i]   U(i,i+1)                    (i = 0..n-2)
///   sup2[i]  fill-in U(i,i+2)            (i = 0..n-3)
class TridiagonalFactorization {
public:
    /// Factors the matrix with subdiagonal `sub`, diagonal `diag` and
    /// superdiagonal `sup` (sizes n-1, n, n-1).
    TridiagonalFactorization(std::vector<Complex> sub, std::vector<Complex> diag,
                             std::vector<Complex> sup);

    std::size_t order() const { return diag_.size(); }

    /// True when some pivot vanished exactly; solves will refuse.
    bool singular() const { return singular_; }

    /// Smallest over largest pivot magnitude — a crude reciprocal condition
    /// indicator used in error reports.
    double condition_estimate() const;

    /// Solves A x = b. Throws SingularTruncationError when the factorization
    /// is singular or a pivot falls below pivot_floor (an absolute magnitude
    /// threshold; pass 0 to only refuse exact zeros).
    std::vector<Complex> solve(std::vector<Complex> b, double pivot_floor = 0.0) const;

    /// Solves A^H x = b (conjugate transpose) from the same factorization.
    std::vector<Complex> solve_adjoint(std::vector<Complex> b,
                                       double pivot_floor = 0.0) const;

    double min_pivot() const { return min_pivot_; }
    double max_pivot() const { return max_pivot_; }

private:
    void require_solvable(double pivot_floor) const;

    std::vector<Complex> sub_;
    std::vector<Complex> diag_;
    std::vector<Complex> sup_;
    std::vector<Complex> sup2_;
    std::vector<bool> swapped_;  // swapped_[i]: rows i, i+1 interchanged
    bool singular_ = false;
    double min_pivot_ = 0.0;
    double max_pivot_ = 0.0;
};

/// Factorization of the order-n finite section of U(s,r,s) - lambda*I.
TridiagonalFactorization factor_truncation(Complex r, Complex s, Complex lambda,
                                           std::size_t n);

}  // namespace triband
