#include "triband/operator.hpp"

#include <algorithm>
#include <cmath>
#include <utility>

namespace triband {

bool is_finite(Complex z) {
    return std::isfinite(z.real()) && std::isfinite(z.imag());
}

FiniteSequence::FiniteSequence(std::vector<Complex> entries)
    : entries_(std::move(entries)) {
    for (const Complex& z : entries_) {
        if (!is_finite(z)) {
            throw std::invalid_argument("FiniteSequence: entries must be finite");
        }
    }
}

FiniteSequence::FiniteSequence(std::initializer_list<Complex> entries)
    : FiniteSequence(std::vector<Complex>(entries)) {}

FiniteSequence FiniteSequence::zeros(std::size_t n) {
    return FiniteSequence(std::vector<Complex>(n));
}

FiniteSequence FiniteSequence::unit(std::size_t k, std::size_t n) {
    if (k >= n) throw std::out_of_range("FiniteSequence::unit: k must be < n");
    std::vector<Complex> e(n);
    e[k] = 1.0;
    return FiniteSequence(std::move(e));
}

FiniteSequence FiniteSequence::of_real(const std::vector<double>& entries) {
    std::vector<Complex> z(entries.begin(), entries.end());
    return FiniteSequence(std::move(z));
}

TriBandParams make_operator(Complex r, Complex s) {
    if (!is_finite(r) || !is_finite(s)) {
        throw std::invalid_argument("make_operator: parameters must be finite");
    }
    return TriBandParams{r, s};
}

namespace {

void require_not_degenerate(const TriBandParams& op, const char* where) {
    if (op.degenerate()) {
        throw DegenerateOperatorError(std::string(where) +
                                      ": off-diagonal s = 0 (diagonal operator)");
    }
}

}  // namespace

CharRoots char_roots(const TriBandParams& op, Complex lambda) {
    require_not_degenerate(op, "char_roots");
    if (!is_finite(lambda)) {
        throw std::invalid_argument("char_roots: lambda must be finite");
    }

    CharRoots out;
    out.lambda = lambda;
    const Complex q = (op.r - lambda) / op.s;
    out.ratio_q = q;

    // A genuine double root needs q = ±2, not just |q| = 2 (complex q on the
    // circle, e.g. q = 2i, still has distinct roots).
    const double tol = 1e-12 * std::max(1.0, std::abs(q));
    if (std::abs(q - 2.0) <= tol) {
        out.alpha1 = out.alpha2 = -1.0;
        out.is_double_root = true;
        return out;
    }
    if (std::abs(q + 2.0) <= tol) {
        out.alpha1 = out.alpha2 = 1.0;
        out.is_double_root = true;
        return out;
    }

    // Roots of x^2 + q x + 1. Sign-match the discriminant against q so the
    // sum q + disc never cancels, then recover the small root from the
    // product alpha1 * alpha2 = 1.
    const Complex disc = std::sqrt(q * q - 4.0);
    const Complex num = (std::real(std::conj(q) * disc) >= 0.0) ? q + disc : q - disc;
    Complex big = -num / 2.0;
    Complex small = 1.0 / big;
    if (std::abs(small) > std::abs(big)) std::swap(small, big);

    out.alpha1 = small;
    out.alpha2 = big;
    out.is_double_root = false;
    return out;
}

TruncationMatrix::TruncationMatrix(const TriBandParams& op, std::size_t order,
                                   Complex lambda)
    : order_(order), diag_(op.r - lambda), off_(op.s), lambda_(lambda) {
    if (order == 0) throw std::invalid_argument("TruncationMatrix: order must be >= 1");
    if (!is_finite(lambda)) {
        throw std::invalid_argument("TruncationMatrix: lambda must be finite");
    }
}

std::vector<Complex> TruncationMatrix::multiply(const std::vector<Complex>& x) const {
    if (x.size() != order_) {
        throw std::invalid_argument("TruncationMatrix::multiply: size mismatch");
    }
    std::vector<Complex> y(order_);
    const auto get = [&](std::ptrdiff_t k) -> Complex {
        if (k < 0 || static_cast<std::size_t>(k) >= order_) return {};
        return x[static_cast<std::size_t>(k)];
    };
    for (std::size_t i = 0; i < order_; ++i) {
        const auto k = static_cast<std::ptrdiff_t>(i);
        y[i] = off_ * get(k - 1) + diag_ * x[i] + off_ * get(k + 1);
    }
    return y;
}

TruncationMatrix truncation_matrix(const TriBandParams& op, std::size_t order,
                                   Complex lambda) {
    return TruncationMatrix(op, order, lambda);
}

FiniteSequence apply(const TriBandParams& op, const FiniteSequence& x) {
    if (x.empty()) return {};
    std::vector<Complex> y(x.size() + 1);
    for (std::size_t i = 0; i < y.size(); ++i) {
        const auto k = static_cast<std::ptrdiff_t>(i);
        y[i] = op.s * x.at_or_zero(k - 1) + op.r * x.at_or_zero(k) +
               op.s * x.at_or_zero(k + 1);
    }
    return FiniteSequence(std::move(y));
}

}  // namespace triband
