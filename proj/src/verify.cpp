#include "triband/verify.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <random>
#include <sstream>

#include "triband/eigen.hpp"
#include "triband/format.hpp"
#include "triband/operator.hpp"
#include "triband/resolvent.hpp"
#include "triband/spaces.hpp"
#include "triband/spectrum.hpp"

namespace triband {

namespace {

constexpr double kPi = 3.14159265358979323846;

const std::vector<TriBandParams> kParamSets = {
    {Complex{0, 0}, Complex{1, 0}},
    {Complex{1, 0}, Complex{2, 0}},
    {Complex{2, 0}, Complex{-1, 0}},
    {Complex{1, 0}, Complex{1, 1}},
};

/// Resolvent-set query points with |alpha1| = rho: lambda = r + s*(a + 1/a)
/// for a = rho*exp(i*phi).
std::vector<Complex> resolvent_points(const TriBandParams& op) {
    std::vector<Complex> points;
    for (double rho : {0.3, 0.5, 0.7, 0.9}) {
        for (int m = 0; m < 5; ++m) {
            const double phi = kPi * m / 5.0;
            const Complex a = std::polar(rho, phi);
            points.push_back(op.r + op.s * (a + 1.0 / a));
        }
    }
    return points;
}

/// Row-k residual of the defining equations for the column-n entries
/// produced by `entry` (1-based; row 1 is the boundary row).
template <typename EntryFn>
Complex defining_residual(const TriBandParams& op, Complex lambda, EntryFn&& entry,
                          std::size_t k, std::size_t n) {
    const Complex d = op.r - lambda;
    Complex lhs;
    if (k == 1) {
        lhs = d * entry(1, n) + op.s * entry(2, n);
    } else {
        lhs = op.s * entry(k - 1, n) + d * entry(k, n) + op.s * entry(k + 1, n);
    }
    return lhs - (k == n ? Complex{1.0, 0.0} : Complex{});
}

FiniteSequence random_sequence(std::mt19937& rng, std::size_t max_len, bool complex_entries) {
    std::uniform_int_distribution<std::size_t> len_dist(1, max_len);
    std::uniform_real_distribution<double> uni(-1.0, 1.0);
    std::vector<Complex> entries(len_dist(rng));
    for (auto& z : entries) {
        z = complex_entries ? Complex{uni(rng), uni(rng)} : Complex{uni(rng), 0.0};
    }
    return FiniteSequence(std::move(entries));
}

// ---------------------------------------------------------------- criteria

CriterionResult criterion_kernel_oracle() {
    double worst = 0.0;
    for (const auto& op : kParamSets) {
        for (const Complex lambda : resolvent_points(op)) {
            const ResolventKernel kernel(op, lambda);
            for (std::size_t n = 1; n <= 50; ++n) {
                const auto x =
                    solve_truncation(op, lambda, FiniteSequence::unit(n - 1, n), 400);
                for (std::size_t k = 1; k <= 50; ++k) {
                    worst = std::max(worst, std::abs(kernel.entry(k, n) - x[k - 1]));
                }
            }
        }
    }
    return {1, "kernel matches banded-solve oracle",
            worst <= 1e-8, "max |kernel - oracle| = " + format_g9(worst)};
}

CriterionResult criterion_defining_equation() {
    std::mt19937 rng(0xC200u);
    double worst = 0.0;
    constexpr std::size_t K = 100;
    for (const auto& op : kParamSets) {
        const Complex a = std::polar(0.55, 2.0 * kPi / 7.0);
        const Complex lambda = op.r + op.s * (a + 1.0 / a);
        for (int trial = 0; trial < 50; ++trial) {
            const auto y = random_sequence(rng, 40, true);
            const auto x = apply_resolvent(op, lambda, y, K);
            const Complex d = op.r - lambda;
            for (std::size_t k = 1; k + 2 <= K; ++k) {
                const Complex xm1 = k >= 2 ? x[k - 2] : Complex{};
                const Complex lhs = op.s * xm1 + d * x[k - 1] + op.s * x[k];
                const Complex yk = k - 1 < y.size() ? y[k - 1] : Complex{};
                worst = std::max(worst, std::abs(lhs - yk));
            }
        }
    }
    return {2, "resolvent defining-equation residual",
            worst <= 1e-10, "max residual = " + format_g9(worst)};
}

CriterionResult criterion_kernel_errata() {
    const TriBandParams op{Complex{0, 0}, Complex{1, 0}};
    const Complex lambda{3.0, 0.0};
    const ResolventKernel kernel(op, lambda);
    const double a1 = std::abs(kernel.roots().alpha1);

    const auto lit = [&](std::size_t k, std::size_t n) {
        return whole_line_kernel_entry(op, lambda, k, n);
    };
    const auto corr = [&](std::size_t k, std::size_t n) { return kernel.entry(k, n); };

    // the translation-invariant kernel must fail the column-3 equation block
    double lit_worst = 0.0;
    for (std::size_t k = 1; k <= 4; ++k) {
        lit_worst = std::max(lit_worst, std::abs(defining_residual(op, lambda, lit, k, 3)));
    }
    // while the boundary-corrected kernel satisfies every equation
    double corr_worst = 0.0;
    for (std::size_t n = 1; n <= 50; ++n) {
        for (std::size_t k = 1; k <= 50; ++k) {
            corr_worst =
                std::max(corr_worst, std::abs(defining_residual(op, lambda, corr, k, n)));
        }
    }
    const bool pass = lit_worst >= 0.1 * a1 && corr_worst <= 1e-10;
    return {3, "whole-line kernel fails, half-line kernel passes", pass,
            "whole-line residual = " + format_g9(lit_worst) +
                " (threshold " + format_g9(0.1 * a1) +
                "), corrected residual = " + format_g9(corr_worst)};
}

CriterionResult criterion_classification() {
    std::size_t mismatches = 0;
    std::size_t total = 0;
    std::mt19937 rng(0xC400u);
    std::uniform_real_distribution<double> u_re(-2.0, 2.0);
    std::uniform_real_distribution<double> u_im(-1.0, 1.0);
    for (const auto& op : {kParamSets[1], kParamSets[3]}) {
        std::size_t accepted = 0;
        std::size_t guard = 0;
        while (accepted < 10000 && guard < 200000) {
            ++guard;
            const Complex mu{u_re(rng), u_im(rng)};
            const Complex lambda = op.r + 2.0 * op.s * mu;
            if (segment_distance(op, lambda) <= 1e-6) continue;
            ++accepted;
            ++total;
            const bool resolvent =
                classify_lambda(op, lambda).kind == SpectralClass::ResolventSet;
            const bool member = segment_membership(op, lambda);
            if (resolvent == member) ++mismatches;
        }
    }
    return {4, "root dichotomy agrees with segment membership", mismatches == 0,
            "mismatches = " + std::to_string(mismatches) + " of " +
                std::to_string(total)};
}

CriterionResult criterion_empty_point_spectrum() {
    const TriBandParams op{Complex{0, 0}, Complex{1, 0}};
    double min_decades = std::numeric_limits<double>::infinity();
    bool all_verdicts = true;
    for (int i = 0; i < 50; ++i) {
        const double t = -0.95 + 1.9 * i / 49.0;
        const Complex lambda{2.0 * t, 0.0};
        const auto logs = partial_lp_log_norms(op, lambda, 2.0, {100, 10000});
        min_decades = std::min(min_decades, (logs[1] - logs[0]) / std::log(10.0));
        all_verdicts = all_verdicts && no_eigenvalue_verdict(op, lambda, SpaceSpec::lp(2.0));
    }

    // q = -2 endpoint: the formal eigenvector is exactly 1, 2, 3, ...
    bool exact = true;
    for (const auto& params : {kParamSets[0], kParamSets[1]}) {
        const Complex lambda = params.r + 2.0 * params.s;
        const auto x = formal_eigenvector(params, lambda, 10);
        for (std::size_t j = 0; j < x.size(); ++j) {
            exact = exact && x[j] == Complex{static_cast<double>(j + 1), 0.0};
        }
    }
    const bool pass = min_decades >= 0.9 && all_verdicts && exact;
    return {5, "formal eigenvectors leave lp (empty point spectrum)", pass,
            "min norm gain = " + format_g9(min_decades) +
                " decades (threshold 0.9), linear endpoint eigenvector exact = " +
                (exact ? "yes" : "no")};
}

CriterionResult criterion_norm_sandwich() {
    double worst_rel = 0.0;
    for (const auto& op : {kParamSets[0], kParamSets[1], kParamSets[2]}) {
        for (double p : {1.5, 2.0, 3.0}) {
            const auto image = apply(op, FiniteSequence::unit(1, 8));
            const double measured = lp_norm(image, p);
            const double closed = std::pow(
                std::pow(std::abs(op.r), p) + 2.0 * std::pow(std::abs(op.s), p), 1.0 / p);
            worst_rel = std::max(worst_rel, std::abs(measured - closed) /
                                                std::max(1.0, closed));
        }
    }

    bool upper_ok = true;
    double upper_slack = 0.0;
    for (const auto& op : {kParamSets[0], kParamSets[1], kParamSets[2]}) {
        for (double p : {2.0, 3.0}) {
            const auto report = operator_norm_bounds(op, SpaceSpec::lp(p));
            upper_slack = std::max(upper_slack, report.empirical - report.upper_bound);
            upper_ok = upper_ok && report.empirical <= report.upper_bound + 1e-12;
        }
    }

    const auto laplacian = operator_norm_bounds(kParamSets[0], SpaceSpec::lp(2.0));
    const bool pass = worst_rel <= 1e-14 && upper_ok && laplacian.empirical >= 1.99;
    return {6, "operator norm sandwich", pass,
            "e1 witness rel error = " + format_g9(worst_rel) +
                ", max empirical-over-upper = " + format_g9(upper_slack) +
                ", empirical(r=0,s=1,p=2) = " + format_g9(laplacian.empirical)};
}

CriterionResult criterion_finite_sections() {
    const TriBandParams op{Complex{0, 0}, Complex{1, 0}};
    double worst = 0.0;
    for (std::size_t n : {std::size_t{50}, std::size_t{200}}) {
        const auto closed = finite_section_eigenvalues(op, n);
        const auto direct =
            sturm_eigenvalues(std::vector<double>(n, 0.0), std::vector<double>(n - 1, 1.0));
        for (std::size_t j = 0; j < n; ++j) {
            worst = std::max(worst, std::abs(closed[j].real() - direct[j]));
        }
    }

    const auto big = finite_section_eigenvalues(op, 1000);
    bool inside = true;
    for (const auto& e : big) {
        inside = inside && std::abs(e.real()) <= 2.0 + 1e-12 && e.imag() == 0.0;
    }
    const double hull = hull_distance_to_segment(op, 1000);
    const bool pass = worst <= 1e-10 && inside && hull <= 1e-4;
    return {7, "finite-section eigenvalues converge to segment", pass,
            "max |closed-form - bisection| = " + format_g9(worst) +
                ", hull gap at N=1000 = " + format_g9(hull)};
}

CriterionResult criterion_bvp_conjugation() {
    std::mt19937 rng(0xC800u);
    double worst = 0.0;
    constexpr std::size_t K = 60;
    for (double p : {1.5, 2.0, 4.0}) {
        (void)SpaceSpec::bvp(p);  // validates the exponent
        for (int combo = 0; combo < 2; ++combo) {
            const auto& op = combo == 0 ? kParamSets[0] : kParamSets[1];
            const Complex lambda = combo == 0 ? Complex{3.0, 0.0} : Complex{6.0, 0.0};
            for (int trial = 0; trial < 100; ++trial) {
                const auto y = random_sequence(rng, 50, true);
                const auto lhs = delta_transform(resolvent_bvp(op, lambda, y, K));
                const auto rhs = apply_resolvent(op, lambda, delta_transform(y), K);
                for (std::size_t j = 0; j < K; ++j) {
                    worst = std::max(worst, std::abs(lhs[j] - rhs[j]));
                }
            }
        }
    }
    return {8, "difference conjugation on bv_p", worst <= 1e-12,
            "max |delta∘resolvent_bvp - resolvent∘delta| = " + format_g9(worst)};
}

CriterionResult criterion_basis_reconstruction() {
    std::mt19937 rng(0xC900u);
    std::uniform_int_distribution<int> val(-9, 9);
    std::uniform_int_distribution<std::size_t> len_dist(1, 100);
    bool exact = true;
    for (int trial = 0; trial < 100; ++trial) {
        const std::size_t n = len_dist(rng);
        std::vector<Complex> x(n);
        for (auto& z : x) z = static_cast<double>(val(rng));
        std::vector<Complex> acc(n);
        for (std::size_t k = 0; k < n; ++k) {
            const Complex coeff = x[k] - (k > 0 ? x[k - 1] : Complex{});
            const auto bk = basis_bk(k, n);
            for (std::size_t j = 0; j < n; ++j) acc[j] += coeff * bk[j];
        }
        for (std::size_t j = 0; j < n; ++j) exact = exact && acc[j] == x[j];
    }
    return {9, "step-basis reconstruction", exact,
            std::string("coordinatewise exact = ") + (exact ? "yes" : "no")};
}

CriterionResult criterion_norm_ladder() {
    const TriBandParams op{Complex{0, 0}, Complex{1, 0}};
    const double far = resolvent_norm_l1(op, Complex{10.0, 0.0});
    const double mid = resolvent_norm_l1(op, Complex{3.0, 0.0});
    const double near = resolvent_norm_l1(op, Complex{2.0001, 0.0});
    bool pass = std::isfinite(far) && std::isfinite(mid) && std::isfinite(near) &&
                near > mid && mid > far;
    double sym_gap = 0.0;
    for (const Complex lambda : {Complex{10.0, 0.0}, Complex{3.0, 0.0}, Complex{2.0001, 0.0}}) {
        const double l1 = resolvent_norm_l1(op, lambda);
        const double linf = resolvent_norm_linf(op, lambda);
        sym_gap = std::max(sym_gap, std::abs(l1 - linf) / std::max(1.0, l1));
        pass = pass && std::abs(l1 - linf) <= 1e-12 * std::max(1.0, l1);
    }
    return {10, "resolvent norm ladder and symmetry", pass,
            "l1 norms = {" + format_g9(far) + ", " + format_g9(mid) + ", " +
                format_g9(near) + "}, max l1/linf gap = " + format_g9(sym_gap)};
}

}  // namespace

std::vector<CriterionResult> run_acceptance_suite() {
    return {
        criterion_kernel_oracle(),        criterion_defining_equation(),
        criterion_kernel_errata(),        criterion_classification(),
        criterion_empty_point_spectrum(), criterion_norm_sandwich(),
        criterion_finite_sections(),      criterion_bvp_conjugation(),
        criterion_basis_reconstruction(), criterion_norm_ladder(),
    };
}

std::string render_verify_table(const std::vector<CriterionResult>& results) {
    std::ostringstream out;
    std::size_t passed = 0;
    for (const auto& r : results) {
        out << (r.pass ? "PASS" : "FAIL") << "  " << r.id << "  " << r.name << "  ["
            << r.measured << "]\n";
        if (r.pass) ++passed;
    }
    out << passed << "/" << results.size() << " criteria passed\n";
    return out.str();
}

}  // namespace triband
