#include "triband/spectrum.hpp"

#include <cmath>

namespace triband {

Complex SpectrumSegment::at(double theta) const {
    return midpoint() + half_vector() * std::cos(theta);
}

SpectrumSegment spectrum_segment(const TriBandParams& op) {
    if (op.degenerate()) {
        throw DegenerateOperatorError(
            "spectrum_segment: s = 0, spectrum degenerates to the single point r");
    }
    return SpectrumSegment(op.r - 2.0 * op.s, op.r + 2.0 * op.s);
}

SpectralClassification classify_lambda(const TriBandParams& op, Complex lambda,
                                       double tol) {
    if (tol <= 0.0) throw std::invalid_argument("classify_lambda: tol must be > 0");
    SpectralClassification out;
    out.roots = char_roots(op, lambda);
    out.mu = (lambda - op.r) / (2.0 * op.s);
    out.segment_distance = segment_distance(op, lambda);
    const double a = std::abs(out.roots.alpha1);
    out.kind = (a < 1.0 - tol) ? SpectralClass::ResolventSet
                               : SpectralClass::ContinuousSpectrum;
    return out;
}

bool segment_membership(const TriBandParams& op, Complex lambda, double tol) {
    if (op.degenerate()) {
        throw DegenerateOperatorError("segment_membership: s = 0");
    }
    const Complex mu = (lambda - op.r) / (2.0 * op.s);
    return std::abs(mu.imag()) <= tol && std::abs(mu.real()) <= 1.0 + tol;
}

double segment_distance(const TriBandParams& op, Complex lambda) {
    if (op.degenerate()) {
        throw DegenerateOperatorError("segment_distance: s = 0");
    }
    const Complex mu = (lambda - op.r) / (2.0 * op.s);
    // Distance of mu to the real interval [-1, 1], rescaled back by |2s|.
    const double u = std::abs(mu.real()) <= 1.0 ? 0.0 : std::abs(mu.real()) - 1.0;
    return std::hypot(u, mu.imag()) * std::abs(2.0 * op.s);
}

FineSpectrumReport fine_spectrum_report(const TriBandParams& op,
                                        const SpaceSpec& space) {
    const SpectrumSegment seg = spectrum_segment(op);
    return FineSpectrumReport{
        space,
        seg,
        seg,   // continuous part fills the whole spectrum
        true,  // point spectrum empty
        true,  // residual spectrum empty
        true,  // adjoint point spectrum empty (the matrix is symmetric)
    };
}

}  // namespace triband
