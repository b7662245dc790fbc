#pragma once

#include "triband/operator.hpp"
#include "triband/spaces.hpp"
#include "triband/types.hpp"

namespace triband {

/// The complex line segment {r + 2s*t : t in [-1, 1]}, traced by the
/// parametrization lambda(theta) = r + 2s*cos(theta). Its midpoint is r and
/// its half-length vector is 2s; for real parameters it degenerates to the
/// real interval [r - 2s, r + 2s].
class SpectrumSegment {
public:
    SpectrumSegment(Complex low, Complex high) : low_(low), high_(high) {}

    Complex low() const { return low_; }    ///< r - 2s, the theta = pi end
    Complex high() const { return high_; }  ///< r + 2s, the theta = 0 end
    Complex midpoint() const { return (low_ + high_) / 2.0; }
    Complex half_vector() const { return (high_ - low_) / 2.0; }

    /// lambda(theta); at(0) == high(), at(pi) == low().
    Complex at(double theta) const;

    bool operator==(const SpectrumSegment&) const = default;

private:
    Complex low_;
    Complex high_;
};

/// Spectrum of the operator on lp and bv_p: the segment with endpoints r ± 2s.
SpectrumSegment spectrum_segment(const TriBandParams& op);

/// Every spectral point is continuous spectrum; no lambda is ever point or
/// residual spectrum, so classification is a two-way split.
enum class SpectralClass { ResolventSet, ContinuousSpectrum };

struct SpectralClassification {
    SpectralClass kind;
    CharRoots roots;
    Complex mu;               ///< (lambda - r) / (2s), segment coordinate
    double segment_distance;  ///< distance from lambda to the segment
};

/// Root-dichotomy test: ResolventSet iff |alpha1| < 1 - tol, otherwise
/// ContinuousSpectrum (|alpha1| = 1 within tolerance). Exhaustive because
/// alpha1*alpha2 = 1 forces |alpha1| <= 1.
SpectralClassification classify_lambda(const TriBandParams& op, Complex lambda,
                                       double tol = 1e-12);

/// Membership test in segment coordinates: mu = (lambda - r)/(2s) must have
/// |Im mu| <= tol and |Re mu| <= 1 + tol.
bool segment_membership(const TriBandParams& op, Complex lambda, double tol = 1e-12);

/// Distance from lambda to the segment in the complex plane.
double segment_distance(const TriBandParams& op, Complex lambda);

/// Fine-spectrum partition: the whole spectrum is continuous; the point and
/// residual parts (and the adjoint point spectrum) are empty. Identical for
/// lp and bv_p.
struct FineSpectrumReport {
    SpaceSpec space;
    SpectrumSegment spectrum;
    SpectrumSegment continuous_spectrum;
    bool point_spectrum_empty;
    bool residual_spectrum_empty;
    bool adjoint_point_spectrum_empty;
    // The resolvent set is the complement of the segment in the plane.
};

FineSpectrumReport fine_spectrum_report(const TriBandParams& op, const SpaceSpec& space);

}  // namespace triband
