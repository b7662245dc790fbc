// triband — command-line front end: spectra, classification, resolvent
// evaluation, finite-section eigenvalues, pseudospectrum grids, and the
// self-verification suite. Reports are deterministic: fixed seeds, fixed
// 9-significant-digit formatting.

#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "triband/eigen.hpp"
#include "triband/format.hpp"
#include "triband/operator.hpp"
#include "triband/resolvent.hpp"
#include "triband/spaces.hpp"
#include "triband/spectrum.hpp"
#include "triband/verify.hpp"

namespace {

using nlohmann::ordered_json;
using namespace triband;

constexpr int kExitOk = 0;
constexpr int kExitInvalidParams = 2;
constexpr int kExitResolventUndefined = 3;
constexpr int kExitVerificationFailure = 4;

struct RunConfig {
    std::string r_lit = "0";
    std::string s_lit = "1";
    std::string lambda_lit;
    std::string p_lit = "2";
    std::string tol_lit = "1e-12";
    std::string space_name = "lp";
    std::string y_spec = "e0";
    std::string region_spec;
    std::string format;  // resolved per command when not given
    std::string out_path;
    std::string preset = "paper";
    std::size_t count_k = 20;
    std::size_t order_n = 200;
    std::size_t resolution = 50;
    std::optional<std::size_t> oracle_order;
    bool force = false;
};

double parse_real_literal(const std::string& text, const char* what) {
    const Complex z = parse_complex_literal(text);
    if (z.imag() != 0.0) {
        throw std::invalid_argument(std::string(what) + ": expected a real value");
    }
    return z.real();
}

TriBandParams operator_from(const RunConfig& cfg) {
    return make_operator(parse_complex_literal(cfg.r_lit),
                         parse_complex_literal(cfg.s_lit));
}

SpaceSpec space_from(const RunConfig& cfg) {
    const double p = parse_real_literal(cfg.p_lit, "--p");
    if (cfg.space_name == "lp") return SpaceSpec::lp(p);
    if (cfg.space_name == "bvp") return SpaceSpec::bvp(p);
    throw std::invalid_argument("--space must be lp or bvp");
}

FiniteSequence sequence_from_spec(const std::string& spec) {
    if (!spec.empty() && (spec[0] == 'e' || spec[0] == 'E')) {
        const std::string idx = spec.substr(1);
        if (!idx.empty() && idx.find_first_not_of("0123456789") == std::string::npos) {
            const std::size_t k = std::stoul(idx);
            return FiniteSequence::unit(k, k + 1);
        }
    }
    std::vector<Complex> entries;
    std::stringstream ss(spec);
    std::string token;
    while (std::getline(ss, token, ',')) {
        entries.push_back(parse_complex_literal(token));
    }
    if (entries.empty()) throw std::invalid_argument("--y: empty sequence spec");
    return FiniteSequence(std::move(entries));
}

Rectangle region_from_spec(const std::string& spec) {
    std::vector<double> vals;
    std::stringstream ss(spec);
    std::string token;
    while (std::getline(ss, token, ',')) {
        vals.push_back(parse_real_literal(token, "--region"));
    }
    if (vals.size() != 4) {
        throw std::invalid_argument("--region: expected re_lo,re_hi,im_lo,im_hi");
    }
    return Rectangle{vals[0], vals[1], vals[2], vals[3]};
}

ordered_json complex_json(Complex z) {
    return ordered_json{{"re", round9(z.real())}, {"im", round9(z.imag())}};
}

ordered_json segment_json(const SpectrumSegment& seg) {
    return ordered_json{{"low", complex_json(seg.low())},
                        {"high", complex_json(seg.high())},
                        {"midpoint", complex_json(seg.midpoint())},
                        {"half_vector", complex_json(seg.half_vector())}};
}

void emit(const RunConfig& cfg, const std::string& text) {
    if (cfg.out_path.empty()) {
        std::cout << text;
        return;
    }
    std::ofstream file(cfg.out_path, std::ios::binary);
    if (!file) throw std::invalid_argument("--out: cannot open " + cfg.out_path);
    file << text;
}

std::string envelope(const std::string& command, ordered_json params,
                     ordered_json result) {
    ordered_json doc;
    doc["schema"] = 1;
    doc["command"] = command;
    doc["params"] = std::move(params);
    doc["result"] = std::move(result);
    return doc.dump(2) + "\n";
}

// ------------------------------------------------------------ subcommands

int cmd_spectrum(const RunConfig& cfg) {
    const auto op = operator_from(cfg);
    const auto space = space_from(cfg);
    const auto report = fine_spectrum_report(op, space);

    ordered_json params{{"r", cfg.r_lit},
                        {"s", cfg.s_lit},
                        {"space", cfg.space_name},
                        {"p", cfg.p_lit}};
    if (resolved_format(cfg, "json") == "csv") {
        std::ostringstream csv;
        csv << "field,value\n";
        csv << "space," << cfg.space_name << "\n";
        csv << "p," << cfg.p_lit << "\n";
        csv << "segment_low," << format_complex_g9(report.spectrum.low()) << "\n";
        csv << "segment_high," << format_complex_g9(report.spectrum.high()) << "\n";
        csv << "sigma_p,empty\n";
        csv << "sigma_r,empty\n";
        csv << "sigma_c_low," << format_complex_g9(report.continuous_spectrum.low())
            << "\n";
        csv << "sigma_c_high," << format_complex_g9(report.continuous_spectrum.high())
            << "\n";
        csv << "adjoint_sigma_p,empty\n";
        csv << "resolvent_set,complement of segment\n";
        emit(cfg, csv.str());
        return kExitOk;
    }
    ordered_json result;
    result["space"] = cfg.space_name;
    result["p"] = round9(space.p);
    result["conjugate_q"] = round9(space.q);
    result["segment"] = segment_json(report.spectrum);
    result["sigma_p"] = "empty";
    result["sigma_r"] = "empty";
    result["sigma_c"] = segment_json(report.continuous_spectrum);
    result["adjoint_sigma_p"] = "empty";
    result["resolvent_set"] = "complement of segment";
    emit(cfg, envelope("spectrum", std::move(params), std::move(result)));
    return kExitOk;
}

int cmd_classify(const RunConfig& cfg) {
    const auto op = operator_from(cfg);
    const Complex lambda = parse_complex_literal(cfg.lambda_lit);
    const double tol = parse_real_literal(cfg.tol_lit, "--tol");
    const auto cls = classify_lambda(op, lambda, tol);

    ordered_json params{{"r", cfg.r_lit},
                        {"s", cfg.s_lit},
                        {"lambda", cfg.lambda_lit},
                        {"tol", cfg.tol_lit}};
    const std::string label = cls.kind == SpectralClass::ResolventSet
                                  ? "resolvent_set"
                                  : "continuous_spectrum";
    if (resolved_format(cfg, "json") == "csv") {
        std::ostringstream csv;
        csv << "field,value\n";
        csv << "class," << label << "\n";
        csv << "alpha1," << format_complex_g9(cls.roots.alpha1) << "\n";
        csv << "alpha2," << format_complex_g9(cls.roots.alpha2) << "\n";
        csv << "ratio_q," << format_complex_g9(cls.roots.ratio_q) << "\n";
        csv << "abs_alpha1," << format_g9(std::abs(cls.roots.alpha1)) << "\n";
        csv << "is_double_root," << (cls.roots.is_double_root ? "true" : "false")
            << "\n";
        csv << "segment_distance," << format_g9(cls.segment_distance) << "\n";
        csv << "mu," << format_complex_g9(cls.mu) << "\n";
        emit(cfg, csv.str());
        return kExitOk;
    }
    ordered_json result;
    result["class"] = label;
    result["alpha1"] = complex_json(cls.roots.alpha1);
    result["alpha2"] = complex_json(cls.roots.alpha2);
    result["ratio_q"] = complex_json(cls.roots.ratio_q);
    result["abs_alpha1"] = round9(std::abs(cls.roots.alpha1));
    result["is_double_root"] = cls.roots.is_double_root;
    result["segment_distance"] = round9(cls.segment_distance);
    result["mu"] = complex_json(cls.mu);
    emit(cfg, envelope("classify", std::move(params), std::move(result)));
    return kExitOk;
}

int cmd_resolve(const RunConfig& cfg) {
    const auto op = operator_from(cfg);
    const Complex lambda = parse_complex_literal(cfg.lambda_lit);
    const auto y = sequence_from_spec(cfg.y_spec);
    const double margin = cfg.force ? 0.0 : ResolventKernel::kDefaultMargin;
    const auto x = apply_resolvent(op, lambda, y, cfg.count_k, margin);

    std::optional<FiniteSequence> oracle;
    if (cfg.oracle_order) {
        if (*cfg.oracle_order < cfg.count_k) {
            throw std::invalid_argument("--oracle: order must be >= --k");
        }
        oracle = solve_truncation(op, lambda, y, *cfg.oracle_order);
    }

    ordered_json params{{"r", cfg.r_lit},     {"s", cfg.s_lit},
                        {"lambda", cfg.lambda_lit}, {"y", cfg.y_spec},
                        {"k", cfg.count_k},   {"force", cfg.force}};
    if (cfg.oracle_order) params["oracle"] = *cfg.oracle_order;

    if (resolved_format(cfg, "json") == "csv") {
        std::ostringstream csv;
        csv << (oracle ? "k,x_re,x_im,oracle_re,oracle_im,abs_diff\n"
                       : "k,x_re,x_im\n");
        for (std::size_t k = 0; k < x.size(); ++k) {
            csv << k << "," << format_g9(x[k].real()) << "," << format_g9(x[k].imag());
            if (oracle) {
                const Complex o = (*oracle)[k];
                csv << "," << format_g9(o.real()) << "," << format_g9(o.imag()) << ","
                    << format_g9(std::abs(x[k] - o));
            }
            csv << "\n";
        }
        emit(cfg, csv.str());
        return kExitOk;
    }
    ordered_json entries = ordered_json::array();
    for (std::size_t k = 0; k < x.size(); ++k) {
        ordered_json row{{"k", k}, {"x", complex_json(x[k])}};
        if (oracle) {
            row["oracle"] = complex_json((*oracle)[k]);
            row["abs_diff"] = round9(std::abs(x[k] - (*oracle)[k]));
        }
        entries.push_back(std::move(row));
    }
    ordered_json result;
    result["entries"] = std::move(entries);
    emit(cfg, envelope("resolve", std::move(params), std::move(result)));
    return kExitOk;
}

int cmd_eigs(const RunConfig& cfg) {
    const auto op = operator_from(cfg);
    const auto ev = finite_section_eigenvalues(op, cfg.order_n);

    ordered_json params{{"r", cfg.r_lit}, {"s", cfg.s_lit}, {"n", cfg.order_n}};
    if (resolved_format(cfg, "json") == "csv") {
        std::ostringstream csv;
        csv << "j,lambda_re,lambda_im\n";
        for (std::size_t j = 0; j < ev.size(); ++j) {
            csv << (j + 1) << "," << format_g9(ev[j].real()) << ","
                << format_g9(ev[j].imag()) << "\n";
        }
        emit(cfg, csv.str());
        return kExitOk;
    }
    ordered_json list = ordered_json::array();
    for (const auto& e : ev) list.push_back(complex_json(e));
    ordered_json result;
    result["eigenvalues"] = std::move(list);
    emit(cfg, envelope("eigs", std::move(params), std::move(result)));
    return kExitOk;
}

int cmd_pseudospec(const RunConfig& cfg) {
    const auto op = operator_from(cfg);
    const auto region = region_from_spec(cfg.region_spec);
    const auto grid = pseudospectrum_grid(op, region, cfg.resolution, cfg.order_n);

    if (resolved_format(cfg, "csv") == "json") {
        ordered_json params{{"r", cfg.r_lit},
                            {"s", cfg.s_lit},
                            {"region", cfg.region_spec},
                            {"res", cfg.resolution},
                            {"n", cfg.order_n}};
        ordered_json result;
        result["re"] = grid.re;
        result["im"] = grid.im;
        ordered_json vals = ordered_json::array();
        for (double v : grid.value) {
            if (std::isinf(v)) {
                vals.push_back("inf");
            } else {
                vals.push_back(round9(v));
            }
        }
        result["value"] = std::move(vals);
        emit(cfg, envelope("pseudospec", std::move(params), std::move(result)));
        return kExitOk;
    }
    std::ostringstream csv;
    csv << "lambda_re,lambda_im,value\n";
    for (std::size_t iy = 0; iy < grid.im.size(); ++iy) {
        for (std::size_t ix = 0; ix < grid.re.size(); ++ix) {
            csv << format_g9(grid.re[ix]) << "," << format_g9(grid.im[iy]) << ","
                << format_g9(grid.value[iy * grid.resolution + ix]) << "\n";
        }
    }
    emit(cfg, csv.str());
    return kExitOk;
}

int cmd_verify(const RunConfig& cfg) {
    if (cfg.preset != "paper") {
        throw std::invalid_argument("--preset: unknown preset '" + cfg.preset + "'");
    }
    const auto results = run_acceptance_suite();
    bool all_pass = true;
    for (const auto& r : results) all_pass = all_pass && r.pass;

    if (resolved_format(cfg, "text") == "json") {
        ordered_json list = ordered_json::array();
        std::size_t passed = 0;
        for (const auto& r : results) {
            list.push_back(ordered_json{{"id", r.id},
                                        {"name", r.name},
                                        {"pass", r.pass},
                                        {"measured", r.measured}});
            if (r.pass) ++passed;
        }
        ordered_json result;
        result["criteria"] = std::move(list);
        result["passed"] = passed;
        result["total"] = results.size();
        ordered_json params{{"preset", cfg.preset}};
        emit(cfg, envelope("verify", std::move(params), std::move(result)));
    } else {
        emit(cfg, render_verify_table(results));
    }
    return all_pass ? kExitOk : kExitVerificationFailure;
}

void add_output_options(CLI::App* sub, RunConfig& cfg,
                        const std::vector<std::string>& allowed) {
    sub->add_option("--format", cfg.format,
                    "Output format (default: " + allowed.front() + ")")
        ->check(CLI::IsMember(allowed));
    sub->add_option("--out", cfg.out_path, "Write the report to a file");
}

std::string resolved_format(const RunConfig& cfg, const char* fallback) {
    return cfg.format.empty() ? fallback : cfg.format;
}

void add_operator_options(CLI::App* sub, RunConfig& cfg) {
    sub->add_option("--r", cfg.r_lit, "Diagonal parameter (complex literal a, a+bi, a-bi)")
        ->required();
    sub->add_option("--s", cfg.s_lit, "Off-diagonal parameter (complex literal)")
        ->required();
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{
        "triband — spectra, resolvents and finite sections of the semi-infinite "
        "symmetric tri-band operator on lp and bv_p"};
    app.require_subcommand(1);

    RunConfig cfg;

    auto* spectrum = app.add_subcommand("spectrum", "Spectrum and fine parts");
    add_operator_options(spectrum, cfg);
    spectrum->add_option("--space", cfg.space_name, "Sequence space")
        ->check(CLI::IsMember({"lp", "bvp"}));
    spectrum->add_option("--p", cfg.p_lit, "Space exponent, 1 < p < inf");
    add_output_options(spectrum, cfg, {"json", "csv"});

    auto* classify = app.add_subcommand("classify", "Classify a point lambda");
    add_operator_options(classify, cfg);
    classify->add_option("--lambda", cfg.lambda_lit, "Query point")->required();
    classify->add_option("--tol", cfg.tol_lit, "Classification tolerance");
    add_output_options(classify, cfg, {"json", "csv"});

    auto* resolve = app.add_subcommand("resolve", "Apply the resolvent to y");
    add_operator_options(resolve, cfg);
    resolve->add_option("--lambda", cfg.lambda_lit, "Resolvent-set point")->required();
    resolve->add_option("--y", cfg.y_spec,
                        "Right-hand side: e<k> or comma-separated complex literals");
    resolve->add_option("--k", cfg.count_k, "Number of output coordinates");
    resolve->add_option("--oracle", cfg.oracle_order,
                        "Cross-check against a banded solve of this order");
    resolve->add_flag("--force", cfg.force,
                      "Evaluate even very close to the spectrum segment");
    add_output_options(resolve, cfg, {"json", "csv"});

    auto* eigs = app.add_subcommand("eigs", "Finite-section eigenvalues");
    add_operator_options(eigs, cfg);
    eigs->add_option("--n", cfg.order_n, "Section order")->required();
    add_output_options(eigs, cfg, {"json", "csv"});

    auto* pseudospec =
        app.add_subcommand("pseudospec", "Resolvent-norm grid for plotting");
    add_operator_options(pseudospec, cfg);
    pseudospec
        ->add_option("--region", cfg.region_spec, "re_lo,re_hi,im_lo,im_hi rectangle")
        ->required();
    pseudospec->add_option("--res", cfg.resolution, "Grid points per axis");
    pseudospec->add_option("--n", cfg.order_n, "Section order");
    add_output_options(pseudospec, cfg, {"csv", "json"});

    auto* verify = app.add_subcommand("verify", "Run the self-verification suite");
    verify->add_option("--preset", cfg.preset, "Verification preset");
    add_output_options(verify, cfg, {"text", "json"});

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        if (e.get_exit_code() == 0) return app.exit(e);  // --help
        app.exit(e);
        return kExitInvalidParams;
    }

    try {
        if (spectrum->parsed()) return cmd_spectrum(cfg);
        if (classify->parsed()) return cmd_classify(cfg);
        if (resolve->parsed()) return cmd_resolve(cfg);
        if (eigs->parsed()) return cmd_eigs(cfg);
        if (pseudospec->parsed()) return cmd_pseudospec(cfg);
        if (verify->parsed()) return cmd_verify(cfg);
        std::cerr << "error: no subcommand\n";
        return kExitInvalidParams;
    } catch (const ResolventUndefinedError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitResolventUndefined;
    } catch (const SingularTruncationError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitResolventUndefined;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitInvalidParams;
    }
}
