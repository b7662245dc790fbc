#pragma once

#include <complex>
#include <cstddef>
#include <initializer_list>
#include <stdexcept>
#include <string>
#include <vector>

namespace triband {

using Complex = std::complex<double>;

/// The off-diagonal parameter is zero: the operator collapses to a diagonal
/// one and the spectral routines do not apply.
class DegenerateOperatorError : public std::invalid_argument {
public:
    explicit DegenerateOperatorError(const std::string& what)
        : std::invalid_argument(what) {}
};

/// The resolvent does not exist (or is refused as too ill-conditioned) at the
/// requested point.
class ResolventUndefinedError : public std::domain_error {
public:
    explicit ResolventUndefinedError(const std::string& what)
        : std::domain_error(what) {}
};

/// A finite section was numerically singular; carries a crude reciprocal
/// condition estimate (smallest over largest pivot magnitude).
class SingularTruncationError : public std::runtime_error {
public:
    SingularTruncationError(const std::string& what, double condition_estimate)
        : std::runtime_error(what), condition_estimate_(condition_estimate) {}

    double condition_estimate() const { return condition_estimate_; }

private:
    double condition_estimate_;
};

/// Finitely supported sequence: the first size() coordinates of a sequence,
/// indexed from 0. Entries must be finite (no NaN or infinity).
class FiniteSequence {
public:
    FiniteSequence() = default;
    explicit FiniteSequence(std::vector<Complex> entries);
    FiniteSequence(std::initializer_list<Complex> entries);

    static FiniteSequence zeros(std::size_t n);
    /// Unit coordinate vector e^(k) of length n (requires k < n).
    static FiniteSequence unit(std::size_t k, std::size_t n);
    static FiniteSequence of_real(const std::vector<double>& entries);

    std::size_t size() const { return entries_.size(); }
    bool empty() const { return entries_.empty(); }

    const Complex& operator[](std::size_t k) const { return entries_[k]; }
    Complex& operator[](std::size_t k) { return entries_[k]; }

    /// Coordinate access where indices outside [0, size()) — including
    /// negative ones — read as zero.
    Complex at_or_zero(std::ptrdiff_t k) const {
        if (k < 0 || static_cast<std::size_t>(k) >= entries_.size()) return {};
        return entries_[static_cast<std::size_t>(k)];
    }

    const std::vector<Complex>& entries() const { return entries_; }

    auto begin() const { return entries_.begin(); }
    auto end() const { return entries_.end(); }

private:
    std::vector<Complex> entries_;
};

bool is_finite(Complex z);

}  // namespace triband
