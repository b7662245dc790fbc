#include "triband/eigen.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <cstdint>
#include <cstdlib>
#include <limits>
#include <random>
#include <string>
#include <thread>

#include "triband/detail/int_pow.hpp"
#include "triband/tridiag.hpp"

namespace triband {

using detail::int_pow;

namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();
constexpr double kPi = 3.14159265358979323846;

// |alpha2| beyond this is treated as genuine growth; below it the closed
// form is evaluated directly (magnitudes stay bounded at desk scale).
constexpr double kGrowthCut = 1.0 + 1e-12;

}  // namespace

RecurrenceSolution::RecurrenceSolution(const TriBandParams& op, Complex lambda,
                                       Complex x1) {
    if (x1 == Complex{}) {
        throw std::invalid_argument(
            "RecurrenceSolution: x1 = 0 forces the zero vector");
    }
    roots_ = char_roots(op, lambda);
    q_ = roots_.ratio_q;
    x1_ = x1;
    if (roots_.is_double_root) {
        kind_ = RecurrenceCase::DoubleRoot;
        // x_n = (c0 + c1 n) alpha^n with alpha = ±1:
        //   q = -2, alpha = +1: x_n = n x1
        //   q = +2, alpha = -1: x_n = (-1)^{n+1} n x1 = -(-1)^n n x1
        coef_a_ = Complex{};
        coef_b_ = (roots_.alpha1 == Complex{1.0, 0.0}) ? x1 : -x1;
    } else {
        kind_ = RecurrenceCase::DistinctRoots;
        coef_a_ = x1 / (roots_.alpha2 - roots_.alpha1);
        coef_b_ = -coef_a_;
    }
}

Complex RecurrenceSolution::entry(std::size_t n) const {
    if (n == 0) throw std::out_of_range("RecurrenceSolution::entry: 1-based index");
    const auto nn = static_cast<double>(n);
    if (kind_ == RecurrenceCase::DoubleRoot) {
        const Complex val = coef_a_ + coef_b_ * nn;
        const bool negate = roots_.alpha1 == Complex{-1.0, 0.0} && (n % 2 == 1);
        return negate ? -val : val;
    }
    const double la2 = std::log(std::abs(roots_.alpha2));
    if (nn * la2 > 706.0) {
        throw std::overflow_error(
            "RecurrenceSolution::entry: |x_n| exceeds double range; "
            "use log_abs_entry");
    }
    return coef_a_ * int_pow(roots_.alpha2, n) + coef_b_ * int_pow(roots_.alpha1, n);
}

double RecurrenceSolution::log_abs_entry(std::size_t n) const {
    if (n == 0) throw std::out_of_range("RecurrenceSolution::log_abs_entry");
    const auto nn = static_cast<double>(n);
    if (kind_ == RecurrenceCase::DoubleRoot) {
        return std::log(std::abs(coef_a_ + coef_b_ * nn));
    }
    const double a2 = std::abs(roots_.alpha2);
    if (a2 > kGrowthCut) {
        // factor out the dominant power: x_n = A alpha2^n (1 + (B/A) w^n),
        // w = alpha1/alpha2, |w| < 1
        const Complex w = int_pow(roots_.alpha1 / roots_.alpha2, n);
        const Complex corr = 1.0 + (coef_b_ / coef_a_) * w;
        return std::log(std::abs(coef_a_)) + nn * std::log(a2) +
               std::log(std::abs(corr));
    }
    return std::log(std::abs(entry(n)));
}

RecurrenceSolution RecurrenceSolution::differenced() const {
    RecurrenceSolution d;
    d.kind_ = kind_;
    d.q_ = q_;
    d.roots_ = roots_;
    if (kind_ == RecurrenceCase::DistinctRoots) {
        d.coef_a_ = coef_a_ * (1.0 - 1.0 / roots_.alpha2);
        d.coef_b_ = coef_b_ * (1.0 - 1.0 / roots_.alpha1);
    } else {
        // alpha^n (c0 + c1 n) - alpha^{n-1} (c0 + c1 (n-1))
        //   = alpha^n [ (c0 - (c0 - c1)/alpha) + (1 - 1/alpha) c1 n ]
        const Complex alpha = roots_.alpha1;
        d.coef_a_ = coef_a_ - (coef_a_ - coef_b_) / alpha;
        d.coef_b_ = (1.0 - 1.0 / alpha) * coef_b_;
    }
    d.x1_ = d.entry(1);
    return d;
}

RecurrenceSolution solve_eigen_recurrence(const TriBandParams& op, Complex lambda,
                                          Complex x1) {
    return RecurrenceSolution(op, lambda, x1);
}

FiniteSequence formal_eigenvector(const TriBandParams& op, Complex lambda,
                                  std::size_t n, Complex x1) {
    const RecurrenceSolution sol(op, lambda, x1);
    std::vector<Complex> out(n);
    for (std::size_t j = 0; j < n; ++j) out[j] = sol.entry(j + 1);
    return FiniteSequence(std::move(out));
}

namespace {

void require_exponent(double p, const char* where) {
    if (!(p > 1.0) || !std::isfinite(p)) {
        throw std::invalid_argument(std::string(where) + ": p must be in (1, inf)");
    }
}

}  // namespace

std::vector<double> partial_lp_log_norms(const TriBandParams& op, Complex lambda,
                                         double p,
                                         const std::vector<std::size_t>& checkpoints,
                                         bool differenced) {
    require_exponent(p, "partial_lp_log_norms");
    for (std::size_t i = 0; i + 1 < checkpoints.size(); ++i) {
        if (checkpoints[i] >= checkpoints[i + 1]) {
            throw std::invalid_argument(
                "partial_lp_log_norms: checkpoints must be strictly increasing");
        }
    }
    RecurrenceSolution sol(op, lambda, Complex{1.0, 0.0});
    if (differenced) sol = sol.differenced();

    std::vector<double> out;
    out.reserve(checkpoints.size());
    if (checkpoints.empty()) return out;

    // streaming log-sum-exp of p*ln|x_n|
    double peak = -kInf;
    double acc = 0.0;
    std::size_t next = 0;
    for (std::size_t n = 1; n <= checkpoints.back(); ++n) {
        const double l = p * sol.log_abs_entry(n);
        if (l != -kInf) {
            if (l > peak) {
                acc = acc * std::exp(peak - l) + 1.0;
                peak = l;
            } else {
                acc += std::exp(l - peak);
            }
        }
        while (next < checkpoints.size() && checkpoints[next] == n) {
            out.push_back(peak == -kInf ? -kInf : (peak + std::log(acc)) / p);
            ++next;
        }
    }
    return out;
}

std::vector<double> partial_lp_norms(const TriBandParams& op, Complex lambda,
                                     double p,
                                     const std::vector<std::size_t>& checkpoints) {
    auto logs = partial_lp_log_norms(op, lambda, p, checkpoints, false);
    for (double& v : logs) v = std::exp(v);
    return logs;
}

bool no_eigenvalue_verdict(const TriBandParams& op, Complex lambda,
                           const SpaceSpec& space) {
    const bool differenced = space.kind == SpaceKind::SequenceBVp;
    const auto logs = partial_lp_log_norms(op, lambda, space.p, {10, 100, 1000, 10000},
                                           differenced);
    const double decades = (logs[3] - logs[1]) / std::log(10.0);
    return decades >= 1.8 / space.p;
}

std::vector<Complex> finite_section_eigenvalues(const TriBandParams& op,
                                                std::size_t n) {
    if (n == 0) {
        throw std::invalid_argument("finite_section_eigenvalues: n must be >= 1");
    }
    std::vector<Complex> ev(n);
    for (std::size_t j = 1; j <= n; ++j) {
        ev[j - 1] = op.r + 2.0 * op.s *
                               std::cos(static_cast<double>(j) * kPi /
                                        static_cast<double>(n + 1));
    }
    std::sort(ev.begin(), ev.end(), [](Complex a, Complex b) {
        if (a.real() != b.real()) return a.real() < b.real();
        return a.imag() < b.imag();
    });
    return ev;
}

std::vector<double> sturm_eigenvalues(const std::vector<double>& diag,
                                      const std::vector<double>& off) {
    const std::size_t n = diag.size();
    if (n == 0) return {};
    if (off.size() + 1 != n && n > 1) {
        throw std::invalid_argument("sturm_eigenvalues: band size mismatch");
    }

    double lo = kInf, hi = -kInf, bnorm = 0.0;
    for (std::size_t i = 0; i < n; ++i) {
        const double radius = (i > 0 ? std::abs(off[i - 1]) : 0.0) +
                              (i + 1 < n ? std::abs(off[i]) : 0.0);
        lo = std::min(lo, diag[i] - radius);
        hi = std::max(hi, diag[i] + radius);
        bnorm = std::max(bnorm, std::abs(diag[i]) + radius);
    }
    const double eps = std::numeric_limits<double>::epsilon();
    const double pivmin =
        std::max(bnorm * eps * eps, std::numeric_limits<double>::min());

    // Sturm count: number of eigenvalues strictly below x, from the signs of
    // the LDL^T pivots.
    const auto count_below = [&](double x) {
        std::size_t count = 0;
        double q = diag[0] - x;
        if (q < 0.0) ++count;
        for (std::size_t i = 1; i < n; ++i) {
            if (std::abs(q) < pivmin) q = -pivmin;
            q = diag[i] - x - off[i - 1] * off[i - 1] / q;
            if (q < 0.0) ++count;
        }
        return count;
    };

    std::vector<double> ev(n);
    for (std::size_t j = 1; j <= n; ++j) {
        double a = lo, b = hi;
        for (int iter = 0; iter < 200; ++iter) {
            const double mid = 0.5 * (a + b);
            if (mid == a || mid == b) break;
            if (count_below(mid) >= j) {
                b = mid;
            } else {
                a = mid;
            }
            if (b - a <= 2.0 * eps * std::max({1.0, std::abs(a), std::abs(b)})) break;
        }
        ev[j - 1] = 0.5 * (a + b);
    }
    return ev;
}

namespace {

void require_real_params(const TriBandParams& op, const char* where) {
    if (op.r.imag() != 0.0 || op.s.imag() != 0.0) {
        throw std::invalid_argument(std::string(where) +
                                    ": requires real parameters r, s");
    }
}

}  // namespace

double hull_distance_to_segment(const TriBandParams& op, std::size_t n) {
    require_real_params(op, "hull_distance_to_segment");
    const auto ev = finite_section_eigenvalues(op, n);
    const double emin = ev.front().real();
    const double emax = ev.back().real();
    const double half = 2.0 * std::abs(op.s);
    const double lo = op.r.real() - half;
    const double hi = op.r.real() + half;
    return std::max(std::abs(emin - lo), std::abs(emax - hi));
}

namespace {

double singular_value_by_inverse_iteration(const TriBandParams& op, Complex lambda,
                                           std::size_t n, std::uint64_t seed) {
    TridiagonalFactorization fac = factor_truncation(op.r, op.s, lambda, n);
    if (fac.singular()) return 0.0;

    std::mt19937_64 rng(seed);
    std::uniform_real_distribution<double> uni(-1.0, 1.0);
    std::vector<Complex> v(n);
    for (auto& z : v) z = Complex{uni(rng), uni(rng)};
    double norm = 0.0;
    for (const auto& z : v) norm += std::norm(z);
    norm = std::sqrt(norm);
    for (auto& z : v) z /= norm;

    // power iteration on (A^H A)^{-1}: at the fixed point ||u|| = 1/sigma^2
    double sigma = kInf;
    for (int iter = 0; iter < 100; ++iter) {
        std::vector<Complex> u;
        try {
            auto w = fac.solve_adjoint(v, 0.0);
            u = fac.solve(std::move(w), 0.0);
        } catch (const SingularTruncationError&) {
            return 0.0;
        }
        double nu = 0.0;
        for (const auto& z : u) nu += std::norm(z);
        nu = std::sqrt(nu);
        if (!std::isfinite(nu)) return 0.0;  // solve overflowed: numerically singular
        if (nu == 0.0) return kInf;          // cannot happen for an invertible section
        const double next = 1.0 / std::sqrt(nu);
        const bool converged = std::isfinite(sigma) &&
                               std::abs(next - sigma) <= 1e-10 * std::max(next, 1e-300);
        sigma = next;
        for (auto& z : u) z /= nu;
        v = std::move(u);
        if (converged) break;
    }
    return sigma;
}

std::uint64_t mix_seed(std::uint64_t a, std::uint64_t b) {
    a ^= b + 0x9e3779b97f4a7c15ull + (a << 6) + (a >> 2);
    return a;
}

}  // namespace

double smallest_singular_value(const TriBandParams& op, Complex lambda,
                               std::size_t n) {
    if (n == 0) {
        throw std::invalid_argument("smallest_singular_value: n must be >= 1");
    }
    if (op.r.imag() == 0.0 && op.s.imag() == 0.0) {
        // the section is normal: sigma_min is the distance to its spectrum
        const auto ev = finite_section_eigenvalues(op, n);
        double best = kInf;
        for (const auto& e : ev) best = std::min(best, std::abs(lambda - e));
        return best;
    }
    std::uint64_t seed = mix_seed(0x7469626e64ull, n);
    seed = mix_seed(seed, std::bit_cast<std::uint64_t>(lambda.real()));
    seed = mix_seed(seed, std::bit_cast<std::uint64_t>(lambda.imag()));
    return singular_value_by_inverse_iteration(op, lambda, n, seed);
}

PseudospectrumGrid pseudospectrum_grid(const TriBandParams& op, Rectangle region,
                                       std::size_t resolution,
                                       std::size_t truncation_order) {
    PseudospectrumGrid grid;
    grid.region = region;
    grid.resolution = resolution;
    grid.truncation_order = truncation_order;
    if (resolution == 0) return grid;
    if (truncation_order == 0) {
        throw std::invalid_argument("pseudospectrum_grid: truncation order >= 1");
    }
    if (!(region.re_lo <= region.re_hi) || !(region.im_lo <= region.im_hi)) {
        throw std::invalid_argument("pseudospectrum_grid: malformed region");
    }

    const auto axis = [resolution](double lo, double hi) {
        std::vector<double> t(resolution);
        if (resolution == 1) {
            t[0] = lo;
        } else {
            for (std::size_t i = 0; i < resolution; ++i) {
                t[i] = lo + (hi - lo) * static_cast<double>(i) /
                                static_cast<double>(resolution - 1);
            }
        }
        return t;
    };
    grid.re = axis(region.re_lo, region.re_hi);
    grid.im = axis(region.im_lo, region.im_hi);
    grid.value.assign(resolution * resolution, 0.0);

    const bool normal_case = op.r.imag() == 0.0 && op.s.imag() == 0.0;
    std::vector<double> ev_real;
    if (normal_case) {
        for (const auto& e : finite_section_eigenvalues(op, truncation_order)) {
            ev_real.push_back(e.real());
        }
        // already ascending for real parameters
    }

    const auto point_value = [&](std::size_t ix, std::size_t iy) {
        const Complex lambda{grid.re[ix], grid.im[iy]};
        double sigma;
        if (normal_case) {
            // nearest eigenvalue by bisection on the sorted cloud
            const auto it =
                std::lower_bound(ev_real.begin(), ev_real.end(), lambda.real());
            sigma = kInf;
            if (it != ev_real.end()) {
                sigma = std::min(sigma, std::abs(lambda - Complex{*it, 0.0}));
            }
            if (it != ev_real.begin()) {
                sigma = std::min(sigma, std::abs(lambda - Complex{*(it - 1), 0.0}));
            }
        } else {
            std::uint64_t seed = mix_seed(0x67726964ull, iy * resolution + ix);
            seed = mix_seed(seed, truncation_order);
            sigma = singular_value_by_inverse_iteration(op, lambda, truncation_order,
                                                        seed);
        }
        return sigma == 0.0 ? kInf : 1.0 / sigma;
    };

    std::size_t threads = std::thread::hardware_concurrency();
    if (const char* env = std::getenv("TRIBAND_THREADS")) {
        const long parsed = std::strtol(env, nullptr, 10);
        if (parsed >= 1) threads = static_cast<std::size_t>(parsed);
    }
    threads = std::clamp<std::size_t>(threads, 1, resolution);

    const auto run_rows = [&](std::size_t begin, std::size_t end) {
        for (std::size_t iy = begin; iy < end; ++iy) {
            for (std::size_t ix = 0; ix < resolution; ++ix) {
                grid.value[iy * resolution + ix] = point_value(ix, iy);
            }
        }
    };
    if (threads == 1) {
        run_rows(0, resolution);
    } else {
        std::vector<std::thread> pool;
        const std::size_t chunk = (resolution + threads - 1) / threads;
        for (std::size_t t = 0; t < threads; ++t) {
            const std::size_t begin = t * chunk;
            const std::size_t end = std::min(resolution, begin + chunk);
            if (begin >= end) break;
            pool.emplace_back(run_rows, begin, end);
        }
        for (auto& th : pool) th.join();
    }
    return grid;
}

}  // namespace triband
