#include "ssd/bounds.hpp"
#include "ssd/code_ops.hpp"
#include "ssd/explorer.hpp"
#include "ssd/gleason.hpp"
#include "ssd/io.hpp"
#include "ssd/qr.hpp"
#include "ssd/report.hpp"
#include "ssd/series.hpp"
#include "ssd/weight_enumerator.hpp"

#include "CLI11.hpp"

#include <chrono>
#include <iostream>
#include <sstream>

using namespace ssd;

namespace {

template <typename T>
std::string str(const T& v) {
    std::ostringstream out;
    out << v;
    return out.str();
}

std::string vec_str(const std::vector<Rational>& v) {
    std::ostringstream out;
    out << '[';
    for (std::size_t i = 0; i < v.size(); ++i) out << (i ? ", " : "") << v[i];
    out << ']';
    return out.str();
}

std::string vec_str(const std::vector<BigInt>& v) {
    std::ostringstream out;
    out << '[';
    for (std::size_t i = 0; i < v.size(); ++i) out << (i ? ", " : "") << v[i];
    out << ']';
    return out.str();
}

std::string kind_str(BoundCertificate::Kind kind) {
    switch (kind) {
        case BoundCertificate::Kind::negative: return "negative epsilon";
        case BoundCertificate::Kind::non_integral: return "non-integral epsilon";
        case BoundCertificate::Kind::beyond_module: return "nonzero alpha past the basis";
    }
    return "?";
}

// distance within the cap, or a note naming the obstacle
std::string guarded_distance(const LinearCode& c, EnumOptions opts) {
    try {
        auto d = c.min_distance(opts);
        return d ? std::to_string(*d) : "undefined (zero code)";
    } catch (const enumeration_cap_error& e) {
        return std::string("not computed (") + e.what() + ")";
    }
}

void cmd_analyze(Report& report, const std::string& path, EnumOptions opts) {
    const LoadedCode loaded = read_code_file(path);
    const LinearCode& c = loaded.code;
    report.add("file", path);
    if (!loaded.warning.empty()) report.add("warning", loaded.warning);
    report.add("n", static_cast<long long>(c.length()));
    report.add("dim", static_cast<long long>(c.dim()));
    report.add_flag("self_orthogonal", c.is_self_orthogonal());
    report.add_flag("doubly_even", c.is_doubly_even());
    report.add_flag("contains_all_ones", c.contains_all_ones());
    report.add_flag("self_dual", c.is_self_dual());
    report.add_flag("semi_self_dual", c.is_semi_self_dual());
    report.add("min_distance", guarded_distance(c, opts));
    report.add("dual_distance", guarded_distance(c.dual(), opts));
    try {
        report.add("weight_enumerator", enumerate_weights(c, opts).to_string_at_one());
    } catch (const enumeration_cap_error& e) {
        report.add("weight_enumerator", std::string("not computed (") + e.what() + ")");
    }
    if (c.is_semi_self_dual() && !c.is_doubly_even()) {
        const GleasonDecomposition dec = gleason_decompose(build_B(c, opts));
        report.add("gleason_e", vec_str(dec.e));
        report.add("gleason_eps", vec_str(dec.eps));
        report.add_flag("eps_nonnegative_integers", dec.eps_nonnegative_integers());
        report.add("F", F_from_decomposition(dec).to_string_at_one());
        report.add_flag("shadow_agrees", shadow_F(c, opts) == F_from_decomposition(dec));
    }
}

void cmd_bound(Report& report, int n, bool doubly_even, bool prove) {
    const BoundReport table = theorem_bound(n, doubly_even);
    report.add("n", static_cast<long long>(n));
    report.add_flag("doubly_even", doubly_even);
    report.add("bound", static_cast<long long>(table.bound));
    report.add("rule", table.rule);
    if (prove) {
        const BoundReport proved = prove_bound(n);
        report.add("proved_bound", static_cast<long long>(proved.bound));
        report.add("proof_rule", proved.rule);
        if (proved.certificate) {
            report.add("certificate", proved.certificate->describe());
            report.add("certificate_kind", kind_str(proved.certificate->kind));
            report.add("certificate_alpha", str(proved.certificate->alpha_value));
            report.add_flag("certificate_verified", verify_certificate(proved));
        } else {
            report.add("certificate", "none: " + proved.rule);
        }
    }
}

void cmd_sharpness(Report& report, const SearchConfig& cfg, const std::string& out_path) {
    const SharpnessResult r = sharpness_search(cfg);
    report.add("n", static_cast<long long>(cfg.n));
    report.add("seed", static_cast<long long>(cfg.seed));
    report.add("steps", static_cast<long long>(cfg.max_steps));
    report.add_flag("doubly_even", cfg.doubly_even_only);
    report.add("bound", static_cast<long long>(r.bound.bound));
    report.add("best_dual_distance", static_cast<long long>(r.best_dual_distance));
    report.add_flag("sharp", r.sharp);
    report.add("steps_taken", r.steps_taken);
    report.add("codes_visited", r.codes_visited);
    if (r.best_dual_distance > 0) {
        const LinearCode& d = r.witness;
        report.add("witness_parameters",
                   "[" + std::to_string(d.length()) + "," + std::to_string(d.dim()) + "]");
        report.add("witness_dual_parameters",
                   "[" + std::to_string(d.length()) + "," + std::to_string(d.dual().dim()) +
                       "," + std::to_string(r.best_dual_distance) + "]");
        if (!out_path.empty()) {
            write_code_file(out_path, d);
            report.add("witness_written_to", out_path);
        }
    }
}

void cmd_involution(Report& report, int q, const std::string& code_path,
                    const std::string& perm_path, EnumOptions opts) {
    if (q > 0) {
        const InvolutionReport r = involution_pipeline(q, opts);
        report.add("q", static_cast<long long>(q));
        report.add("code_parameters", "[" + std::to_string(r.code.length()) + "," +
                                          std::to_string(r.code.dim()) + "," +
                                          std::to_string(r.code_distance) + "]");
        report.add("sigma", r.sigma.cycle_string());
        report.add("fixed_dim", static_cast<long long>(r.fixed.dim()));
        report.add_flag("free_module", r.free_module);
        report.add("pi_parameters", "[" + std::to_string(r.pi_image.length()) + "," +
                                        std::to_string(r.pi_image.dim()) + "," +
                                        std::to_string(r.pi_distance) + "]");
        report.add_flag("pi_self_dual", r.pi_image.is_self_dual());
        if (!r.warning.empty()) report.add("warning", r.warning);
        return;
    }
    const LoadedCode loaded = read_code_file(code_path);
    const Involution sigma = read_involution_file(perm_path);
    const LinearCode& c = loaded.code;
    report.add("code_file", code_path);
    report.add("perm_file", perm_path);
    if (!loaded.warning.empty()) report.add("warning", loaded.warning);
    if (sigma.size() != c.length())
        throw std::runtime_error("involution length does not match the code length");
    if (!c.is_self_dual()) throw std::runtime_error("code is not self-dual");
    if (!stabilizes(c, sigma)) throw std::runtime_error("permutation does not stabilize the code");
    if (!sigma.is_fixed_point_free()) throw std::runtime_error("involution has fixed points");
    report.add("sigma", sigma.cycle_string());
    const FreeModuleCheck fm = is_free_module(c, sigma);
    report.add("fixed_dim", static_cast<long long>(fixed_code(c, sigma).dim()));
    report.add_flag("free_module", fm.free_module);
    report.add("pi_parameters", "[" + std::to_string(fm.pi_image.length()) + "," +
                                    std::to_string(fm.pi_image.dim()) + "]");
    report.add_flag("pi_self_dual", fm.pi_image.is_self_dual());
}

void cmd_feasible(Report& report, int n, int d, long range_cap, long max_solutions) {
    FeasibilityOptions opts;
    opts.range_cap = range_cap;
    opts.max_solutions = static_cast<std::uint64_t>(max_solutions);
    const FeasibilityReport r = feasibility_search(n, d, opts);
    report.add("n", static_cast<long long>(n));
    report.add("d", static_cast<long long>(d));
    report.add("range_cap", static_cast<long long>(range_cap));
    report.add_flag("forced_prefix_ok", r.forced_ok);
    if (r.forced_violation) {
        report.add("forced_violation", r.forced_violation->describe());
        return;
    }
    report.add_flag("b_prefix_ok", r.b_prefix_ok);
    report.add("free_indices",
               std::to_string(r.free_lo) + ".." + std::to_string(r.free_hi));
    report.add("tuples_scanned", static_cast<long long>(r.tuples_scanned));
    report.add("solutions_found", static_cast<long long>(r.solutions_found));
    report.add_flag("truncated", r.truncated);
    if (!r.solutions.empty()) {
        const FeasibilitySolution& s = r.solutions.front();
        report.add("first_solution_eps", vec_str(s.eps_free));
        report.add_flag("first_solution_f_nonnegative", s.f_nonnegative);
        report.add_flag("first_solution_wd_nonnegative", s.wd_nonnegative);
        report.add_flag("first_solution_wdual_nonnegative", s.wdual_nonnegative);
        report.add("first_solution_F", s.f_poly.to_string_at_one());
    }
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"exact-arithmetic toolkit for semi self-dual binary codes"};
    app.require_subcommand(1);

    int threads = 1;
    int cap = 28;
    bool json = false;
    bool timing = false;
    app.add_option("--threads", threads, "worker threads for codeword sweeps")
        ->capture_default_str();
    app.add_option("--cap", cap, "enumeration cap in information bits")->capture_default_str();
    app.add_flag("--json", json, "machine-readable output");
    app.add_flag("--timing", timing, "append elapsed milliseconds (non-deterministic)");

    std::string analyze_path;
    CLI::App* analyze = app.add_subcommand("analyze", "inspect a code file");
    analyze->add_option("file", analyze_path, "code file")->required();

    int bound_n = 0;
    bool bound_de = false, bound_prove = false;
    CLI::App* bound = app.add_subcommand("bound", "dual-distance bound for a length");
    bound->add_option("n", bound_n, "code length")->required();
    bound->add_flag("--doubly-even", bound_de, "restrict to doubly-even codes");
    bound->add_flag("--prove", bound_prove, "re-derive the bound with a certificate");

    SearchConfig cfg;
    std::string sharp_out;
    CLI::App* sharp = app.add_subcommand("sharpness", "search for a bound-achieving code");
    sharp->add_option("n", cfg.n, "code length")->required();
    sharp->add_option("--seed", cfg.seed, "walk seed")->capture_default_str();
    sharp->add_option("--steps", cfg.max_steps, "neighbor steps")->capture_default_str();
    sharp->add_option("--hyperplanes", cfg.hyperplane_limit, "hyperplanes scanned per code")
        ->capture_default_str();
    sharp->add_flag("--doubly-even", cfg.doubly_even_only, "walk doubly-even codes only");
    sharp->add_option("--out", sharp_out, "write the witness code file here");

    int inv_q = 0;
    std::string inv_code, inv_perm;
    CLI::App* inv = app.add_subcommand("involution", "fixed-code projection pipeline");
    inv->add_option("q", inv_q, "prime with q = 7 (mod 8); builds the extended QR code");
    inv->add_option("--code", inv_code, "self-dual code file");
    inv->add_option("--perm", inv_perm, "involution file");

    CLI::App* series = app.add_subcommand("series", "series coefficients and parity facts");
    series->require_subcommand(1);
    int s_i = 0, s_n = 0, s_h = 0, s_k = 0;
    long s_mu = 0;
    CLI::App* s_alpha = series->add_subcommand("alpha", "forced decomposition coefficient");
    s_alpha->add_option("i", s_i, "index")->required();
    s_alpha->add_option("N", s_n, "half length")->required();
    CLI::App* s_gamma = series->add_subcommand("gamma", "change-of-basis coefficient");
    s_gamma->add_option("h_index", s_h, "row")->required();
    s_gamma->add_option("k", s_k, "column")->required();
    s_gamma->add_option("N", s_n, "half length")->required();
    CLI::App* s_parity = series->add_subcommand("parity", "parity of binom(5 mu - 1, mu - 1)");
    s_parity->add_option("mu", s_mu, "multiple of 24 under test")->required();

    int cov_limit = 153;
    CLI::App* cov = app.add_subcommand("coverage", "settled multiples of 24");
    cov->add_option("--limit", cov_limit, "largest multiple considered")->capture_default_str();

    int f_n = 0, f_d = 0;
    long f_cap = 64, f_max = 1000;
    CLI::App* feas = app.add_subcommand("feasible", "enumerator feasibility grid search");
    feas->add_option("n", f_n, "length, a multiple of 24")->required();
    feas->add_option("d", f_d, "assumed half dual distance")->required();
    feas->add_option("--range-cap", f_cap, "largest free epsilon tried")->capture_default_str();
    feas->add_option("--max-solutions", f_max, "stored solutions")->capture_default_str();

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : 2;
    }

    const EnumOptions opts{cap, threads};
    cfg.enum_opts = opts;

    Report report;
    const auto started = std::chrono::steady_clock::now();
    try {
        if (analyze->parsed()) {
            report.add("command", "analyze");
            cmd_analyze(report, analyze_path, opts);
        } else if (bound->parsed()) {
            report.add("command", "bound");
            cmd_bound(report, bound_n, bound_de, bound_prove);
        } else if (sharp->parsed()) {
            report.add("command", "sharpness");
            cmd_sharpness(report, cfg, sharp_out);
        } else if (inv->parsed()) {
            report.add("command", "involution");
            if (inv_q <= 0 && (inv_code.empty() || inv_perm.empty()))
                throw parse_error("involution: give q, or both --code and --perm");
            cmd_involution(report, inv_q, inv_code, inv_perm, opts);
        } else if (series->parsed()) {
            report.add("command", "series");
            if (s_alpha->parsed()) {
                report.add("alpha", str(alpha(s_i, s_n)));
                report.add_flag("buermann_check", alpha_by_buermann_check(s_i, s_n));
            } else if (s_gamma->parsed()) {
                report.add("gamma", str(gamma(s_h, s_k, s_n)));
                report.add_flag("series_oracle_agrees",
                                gamma(s_h, s_k, s_n) == gamma_series_oracle(s_h, s_k, s_n));
            } else {
                report.add("binomial", str(binomial(5 * s_mu - 1, s_mu - 1)));
                report.add("parity", binom_parity(s_mu) ? "odd" : "even");
            }
        } else if (cov->parsed()) {
            const CoverageReport r = coverage_report(cov_limit);
            report.add("command", "coverage");
            report.add("covered", r.fraction_display);
        } else if (feas->parsed()) {
            report.add("command", "feasible");
            cmd_feasible(report, f_n, f_d, f_cap, f_max);
        }
    } catch (const parse_error& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 2;
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 1;
    }

    if (timing) {
        const auto elapsed = std::chrono::steady_clock::now() - started;
        report.add("elapsed_ms",
                   std::chrono::duration_cast<std::chrono::milliseconds>(elapsed).count());
    }
    std::cout << (json ? report.to_json() : report.to_text());
    return 0;
}
