#include "triband/tridiag.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <utility>

namespace triband {

TridiagonalFactorization::TridiagonalFactorization(std::vector<Complex> sub,
                                                   std::vector<Complex> diag,
                                                   std::vector<Complex> sup)
    : sub_(std::move(sub)), diag_(std::move(diag)), sup_(std::move(sup)) {
    const std::size_t n = diag_.size();
    if (n == 0) throw std::invalid_argument("TridiagonalFactorization: empty matrix");
    if (sub_.size() + 1 != n || sup_.size() + 1 != n) {
        if (!(n == 1 && sub_.empty() && sup_.empty())) {
            throw std::invalid_argument("TridiagonalFactorization: band size mismatch");
        }
    }
    sup2_.assign(n >= 2 ? n - 2 : 0, Complex{});
    swapped_.assign(n >= 1 ? n - 1 : 0, false);

    for (std::size_t i = 0; i + 1 < n; ++i) {
        if (std::abs(diag_[i]) >= std::abs(sub_[i])) {
            // no interchange
            if (diag_[i] != Complex{}) {
                const Complex fact = sub_[i] / diag_[i];
                sub_[i] = fact;
                diag_[i + 1] -= fact * sup_[i];
            } else if (sub_[i] == Complex{}) {
                singular_ = true;  // whole column vanished
                sub_[i] = Complex{};
            }
            if (i + 2 < n) sup2_[i] = Complex{};
        } else {
            // interchange rows i and i+1
            const Complex fact = diag_[i] / sub_[i];
            diag_[i] = sub_[i];
            sub_[i] = fact;
            const Complex temp = sup_[i];
            sup_[i] = diag_[i + 1];
            diag_[i + 1] = temp - fact * diag_[i + 1];
            if (i + 2 < n) {
                sup2_[i] = sup_[i + 1];
                sup_[i + 1] = -fact * sup_[i + 1];
            }
            swapped_[i] = true;
        }
    }

    min_pivot_ = std::numeric_limits<double>::infinity();
    max_pivot_ = 0.0;
    for (const Complex& d : diag_) {
        const double a = std::abs(d);
        min_pivot_ = std::min(min_pivot_, a);
        max_pivot_ = std::max(max_pivot_, a);
    }
    if (min_pivot_ == 0.0) singular_ = true;
}

double TridiagonalFactorization::condition_estimate() const {
    if (max_pivot_ == 0.0) return 0.0;
    return min_pivot_ / max_pivot_;
}

void TridiagonalFactorization::require_solvable(double pivot_floor) const {
    if (singular_ || min_pivot_ <= pivot_floor) {
        throw SingularTruncationError(
            "tridiagonal solve: finite section is singular or near-singular "
            "(condition estimate " +
                std::to_string(condition_estimate()) + ")",
            condition_estimate());
    }
}

std::vector<Complex> TridiagonalFactorization::solve(std::vector<Complex> b,
                                                     double pivot_floor) const {
    const std::size_t n = order();
    if (b.size() != n) throw std::invalid_argument("solve: rhs size mismatch");
    require_solvable(pivot_floor);

    // forward elimination, replaying the row interchanges
    for (std::size_t i = 0; i + 1 < n; ++i) {
        if (!swapped_[i]) {
            b[i + 1] -= sub_[i] * b[i];
        } else {
            const Complex temp = b[i];
            b[i] = b[i + 1];
            b[i + 1] = temp - sub_[i] * b[i];
        }
    }
    // back substitution through the three-band upper factor
    b[n - 1] /= diag_[n - 1];
    if (n >= 2) {
        b[n - 2] = (b[n - 2] - sup_[n - 2] * b[n - 1]) / diag_[n - 2];
    }
    for (std::size_t k = n; k-- > 2;) {
        const std::size_t i = k - 2;
        b[i] = (b[i] - sup_[i] * b[i + 1] - sup2_[i] * b[i + 2]) / diag_[i];
    }
    return b;
}

std::vector<Complex> TridiagonalFactorization::solve_adjoint(std::vector<Complex> b,
                                                             double pivot_floor) const {
    const std::size_t n = order();
    if (b.size() != n) throw std::invalid_argument("solve_adjoint: rhs size mismatch");
    require_solvable(pivot_floor);

    // A^H = U^H L^H P, so first solve U^H y = b (U^H is lower, bandwidth 2) ...
    std::vector<Complex> x(n);
    x[0] = b[0] / std::conj(diag_[0]);
    if (n >= 2) x[1] = (b[1] - std::conj(sup_[0]) * x[0]) / std::conj(diag_[1]);
    for (std::size_t i = 2; i < n; ++i) {
        x[i] = (b[i] - std::conj(sup_[i - 1]) * x[i - 1] -
                std::conj(sup2_[i - 2]) * x[i - 2]) /
               std::conj(diag_[i]);
    }
    // ... then L^H z = y, replaying interchanges in reverse
    for (std::size_t k = n - 1; k-- > 0;) {
        if (!swapped_[k]) {
            x[k] -= std::conj(sub_[k]) * x[k + 1];
        } else {
            const Complex temp = x[k + 1];
            x[k + 1] = x[k] - std::conj(sub_[k]) * temp;
            x[k] = temp;
        }
    }
    return x;
}

TridiagonalFactorization factor_truncation(Complex r, Complex s, Complex lambda,
                                           std::size_t n) {
    if (n == 0) throw std::invalid_argument("factor_truncation: n must be >= 1");
    std::vector<Complex> sub(n >= 1 ? n - 1 : 0, s);
    std::vector<Complex> diag(n, r - lambda);
    std::vector<Complex> sup(n >= 1 ? n - 1 : 0, s);
    return TridiagonalFactorization(std::move(sub), std::move(diag), std::move(sup));
}

}  // namespace triband
