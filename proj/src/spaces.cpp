#include "triband/spaces.hpp"

#include <algorithm>
#include <cmath>
#include <random>
#include <string>

#include "triband/resolvent.hpp"

namespace triband {

namespace {

constexpr double kPi = 3.14159265358979323846;

void require_exponent(double p, const char* where) {
    if (!(p > 1.0) || !std::isfinite(p)) {
        throw std::invalid_argument(std::string(where) + ": exponent must be in (1, inf)");
    }
}

}  // namespace

SpaceSpec SpaceSpec::lp(double p) {
    require_exponent(p, "SpaceSpec::lp");
    return SpaceSpec{SpaceKind::SequenceLp, p, p / (p - 1.0)};
}

SpaceSpec SpaceSpec::bvp(double p) {
    require_exponent(p, "SpaceSpec::bvp");
    return SpaceSpec{SpaceKind::SequenceBVp, p, p / (p - 1.0)};
}

double lp_norm(const FiniteSequence& x, double p) {
    require_exponent(p, "lp_norm");
    double peak = 0.0;
    for (const Complex& z : x) peak = std::max(peak, std::abs(z));
    if (peak == 0.0) return 0.0;
    double acc = 0.0;
    for (const Complex& z : x) acc += std::pow(std::abs(z) / peak, p);
    return peak * std::pow(acc, 1.0 / p);
}

double bvp_norm(const FiniteSequence& x, double p) {
    return lp_norm(delta_transform(x), p);
}

double dq_norm(const FiniteSequence& a, double q) {
    require_exponent(q, "dq_norm");
    std::vector<Complex> suffix(a.size());
    Complex run{};
    for (std::size_t k = a.size(); k-- > 0;) {
        run += a[k];
        suffix[k] = run;
    }
    return lp_norm(FiniteSequence(std::move(suffix)), q);
}

double space_norm(const FiniteSequence& x, const SpaceSpec& space) {
    return space.kind == SpaceKind::SequenceLp ? lp_norm(x, space.p)
                                               : bvp_norm(x, space.p);
}

std::vector<FiniteSequence> norm_sample_set(std::size_t length) {
    if (length < 8) throw std::invalid_argument("norm_sample_set: length too small");
    std::vector<FiniteSequence> samples;
    samples.reserve(5 + 32 + 100);

    for (std::size_t k = 0; k < 5; ++k) samples.push_back(FiniteSequence::unit(k, length));

    // sine-windowed cosines: slowly modulated waves are near-extremal for the
    // operator norm; frequency pi (m = 32) alternates signs
    for (std::size_t m = 1; m <= 32; ++m) {
        std::vector<Complex> x(length);
        for (std::size_t j = 0; j < length; ++j) {
            const double window = std::sin(kPi * static_cast<double>(j + 1) /
                                           static_cast<double>(length + 1));
            x[j] = window * std::cos(kPi * static_cast<double>(m) *
                                     static_cast<double>(j) / 32.0);
        }
        samples.emplace_back(std::move(x));
    }

    std::mt19937 rng(0x5eed1234u);
    std::uniform_real_distribution<double> uni(-1.0, 1.0);
    for (int trial = 0; trial < 100; ++trial) {
        std::vector<Complex> x(length);
        for (auto& z : x) z = uni(rng);
        samples.emplace_back(std::move(x));
    }
    return samples;
}

NormReport operator_norm_bounds(const TriBandParams& op, const SpaceSpec& space) {
    NormReport report{std::nullopt, 0.0, 0.0, space};
    report.upper_bound = 2.0 * std::abs(op.s) + std::abs(op.r);
    if (space.kind == SpaceKind::SequenceLp) {
        // attained on e^(1), whose image is (s, r, s, 0, ...)
        report.lower_bound = std::pow(std::pow(std::abs(op.r), space.p) +
                                          2.0 * std::pow(std::abs(op.s), space.p),
                                      1.0 / space.p);
    }

    constexpr std::size_t kSampleLength = 512;
    double best = 0.0;
    for (const auto& x : norm_sample_set(kSampleLength)) {
        const double nx = space_norm(x, space);
        if (nx == 0.0) continue;
        best = std::max(best, space_norm(apply(op, x), space) / nx);
    }
    report.empirical = best;
    return report;
}

double matrix_norm_l1(const TruncationMatrix& m) {
    const std::size_t n = m.order();
    double best = 0.0;
    for (std::size_t j = 0; j < n; ++j) {
        double col = std::abs(m.entry(j, j));
        if (j > 0) col += std::abs(m.entry(j - 1, j));
        if (j + 1 < n) col += std::abs(m.entry(j + 1, j));
        best = std::max(best, col);
    }
    return best;
}

double matrix_norm_linf(const TruncationMatrix& m) {
    const std::size_t n = m.order();
    double best = 0.0;
    for (std::size_t i = 0; i < n; ++i) {
        double row = std::abs(m.entry(i, i));
        if (i > 0) row += std::abs(m.entry(i, i - 1));
        if (i + 1 < n) row += std::abs(m.entry(i, i + 1));
        best = std::max(best, row);
    }
    return best;
}

FiniteSequence basis_bk(std::size_t k, std::size_t n) {
    if (k >= n) throw std::out_of_range("basis_bk: requires k < n");
    std::vector<Complex> b(n);
    for (std::size_t j = k; j < n; ++j) b[j] = 1.0;
    return FiniteSequence(std::move(b));
}

FiniteSequence delta_transform(const FiniteSequence& x) {
    std::vector<Complex> d(x.size());
    for (std::size_t k = 0; k < x.size(); ++k) {
        d[k] = x[k] - x.at_or_zero(static_cast<std::ptrdiff_t>(k) - 1);
    }
    return FiniteSequence(std::move(d));
}

FiniteSequence inverse_delta(const FiniteSequence& d) {
    std::vector<Complex> x(d.size());
    Complex run{};
    for (std::size_t k = 0; k < d.size(); ++k) {
        run += d[k];
        x[k] = run;
    }
    return FiniteSequence(std::move(x));
}

FiniteSequence resolvent_bvp(const TriBandParams& op, Complex lambda,
                             const FiniteSequence& y, std::size_t K, double margin) {
    return inverse_delta(apply_resolvent(op, lambda, delta_transform(y), K, margin));
}

}  // namespace triband
