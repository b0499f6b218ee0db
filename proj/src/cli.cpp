#include "misoshift/cli.hpp"

#include <algorithm>
#include <iostream>
#include <ostream>

#include "CLI11.hpp"

#include "misoshift/json_io.hpp"

namespace misoshift {

namespace {

constexpr int exit_ok = 0;
constexpr int exit_io = 1;
constexpr int exit_precondition = 2;
constexpr int exit_numerical = 3;
constexpr int exit_false = 4;

struct JobConfig {
    std::string input;
    std::string output;
    int m = 0;
    long horizon = 0; // 0 selects the per-command default
    bool bilateral = false;
    double tol_scale = 1.0;
    std::string format = "text";
};

void rescale(IsometryReport& rep, double tol_scale) {
    if (tol_scale == 1.0) return;
    rep.tolerance *= tol_scale;
    rep.verdict = rep.max_residual <= rep.tolerance;
}

void emit(const JobConfig& cfg, const ordered_json& report, std::ostream& out,
          const std::string& summary) {
    if (!cfg.output.empty()) save_json_file(cfg.output, report);
    if (cfg.format == "json")
        out << report.dump(2) << '\n';
    else
        out << summary;
}

std::string verdict_line(const IsometryReport& rep) {
    std::string s = rep.verdict ? "verdict: true" : "verdict: false";
    s += " (max residual " + std::to_string(rep.max_residual) + ", tolerance " +
         std::to_string(rep.tolerance) + ")\n";
    return s;
}

int cmd_construct(const JobConfig& cfg, std::ostream& out) {
    const MatrixPolynomial p = polynomial_from_json(load_json_file(cfg.input));
    const long horizon = cfg.horizon > 0 ? cfg.horizon : (cfg.bilateral ? 32 : 64);
    ConstructionResult res = cfg.bilateral ? construct_bilateral(p, cfg.m, horizon)
                                           : construct_unilateral(p, cfg.m, horizon);
    rescale(res.report, cfg.tol_scale);

    std::string summary = cfg.bilateral ? "bilateral" : "unilateral";
    summary += " construction, m = " + std::to_string(cfg.m) + ", horizon " +
               std::to_string(horizon) + "\n";
    summary += "capacity estimate C(p) >= " + std::to_string(res.capacity_estimate) + "\n";
    summary += verdict_line(res.report);
    emit(cfg, to_json(res), out, summary);
    return res.report.verdict ? exit_ok : exit_false;
}

int cmd_verify(const JobConfig& cfg, std::ostream& out) {
    const WeightSequence w = weights_from_json(load_json_file(cfg.input));
    IsometryReport rep = verify_m_isometry(w, cfg.m);
    rescale(rep, cfg.tol_scale);

    std::string summary = "verify m = " + std::to_string(cfg.m) + " on " +
                          std::to_string(rep.block_residuals.size()) + " blocks\n";
    summary += verdict_line(rep);
    emit(cfg, to_json(rep), out, summary);
    return rep.verdict ? exit_ok : exit_false;
}

int cmd_complete(const JobConfig& cfg, std::ostream& out) {
    const auto prefix = prefix_from_json(load_json_file(cfg.input));
    const long horizon = cfg.horizon > 0 ? cfg.horizon : 32;
    CompletionResult res = complete_weights(prefix, horizon);
    rescale(res.report, cfg.tol_scale);

    std::string summary = "completion of " + std::to_string(prefix.size()) +
                          " prefix weights to horizon " + std::to_string(horizon) + "\n";
    summary += "alpha = " + std::to_string(res.alpha) + "\n";
    summary += verdict_line(res.report);
    emit(cfg, to_json(res), out, summary);
    return res.report.verdict ? exit_ok : exit_false;
}

const char* tri_name(TriVerdict v) {
    switch (v) {
        case TriVerdict::yes: return "true";
        case TriVerdict::no: return "false";
        default: return "indeterminate";
    }
}

int analyze_polynomial(const JobConfig& cfg, const ordered_json& in, std::ostream& out) {
    const MatrixPolynomial p = polynomial_from_json(in);
    const long horizon = cfg.horizon > 0 ? cfg.horizon : 32;
    const Side side = cfg.bilateral ? Side::bilateral : Side::unilateral;
    const PreconditionReport pre = check_preconditions(p, horizon, side);

    ordered_json report;
    report["input"] = "polynomial";
    report["preconditions"] = to_json(pre);

    std::string summary = "polynomial analysis, m = " + std::to_string(cfg.m) + "\n";
    summary += std::string("preconditions: ") + (pre.ok() ? "ok" : "failed") +
               ", capacity >= " + std::to_string(pre.capacity) + "\n";

    if (pre.ok()) {
        const CommutativityEquivalenceReport comm =
            commutativity_equivalence_check(p, cfg.m, horizon);
        report["commutativity"] = to_json(comm);
        summary += std::string("commutativity: all weights ") + tri_name(comm.all_weights) +
                   ", first m-1 weights " + tri_name(comm.first_weights) + ", coefficients " +
                   tri_name(comm.coefficients) + (comm.agree ? " (agree)" : " (DISAGREE)") + "\n";
    }

    const AdjointReport adj = adjoint_is_m_isometric(p, cfg.m);
    report["adjoint"] = to_json(adj);
    summary += std::string("adjoint m-isometric: ") +
               (adj.adjoint_is_m_isometric ? "true" : "false") + "\n";

    emit(cfg, report, out, summary);
    return exit_ok;
}

int analyze_weights(const JobConfig& cfg, const ordered_json& in, std::ostream& out) {
    const WeightSequence w = weights_from_json(in);
    IsometryReport iso = verify_m_isometry(w, cfg.m);
    rescale(iso, cfg.tol_scale);
    const CommutativityCheck comm = weights_commute(w);

    ordered_json report;
    report["input"] = "weights";
    report["isometry"] = to_json(iso);
    report["weights_commute"] = comm.commute;
    report["max_commutator"] = comm.max_commutator;

    std::string summary = "weight analysis, m = " + std::to_string(cfg.m) + "\n";
    summary += verdict_line(iso);
    summary += std::string("weights commute: ") + (comm.commute ? "true" : "false") + "\n";
    emit(cfg, report, out, summary);
    return exit_ok;
}

int cmd_analyze(const JobConfig& cfg, std::ostream& out) {
    const ordered_json in = load_json_file(cfg.input);
    if (in.contains("coeffs")) return analyze_polynomial(cfg, in, out);
    if (in.contains("weights")) return analyze_weights(cfg, in, out);
    throw IoError("analyze input must be a polynomial (coeffs) or a weight sequence (weights)");
}

int cmd_invert_poly(const JobConfig& cfg, std::ostream& out) {
    const MatrixPolynomial p = polynomial_from_json(load_json_file(cfg.input));
    std::string why;
    const auto inv = invert_in_degree(p, cfg.m - 1, &why);

    ordered_json report;
    report["invertible"] = inv.has_value();
    if (inv)
        report["inverse"] = to_json(*inv);
    else
        report["reason"] = why;

    std::string summary = std::string("invertible in degree <= ") + std::to_string(cfg.m - 1) +
                          ": " + (inv ? "true" : "false") + "\n";
    if (!inv) summary += "reason: " + why + "\n";
    emit(cfg, report, out, summary);
    return inv ? exit_ok : exit_false;
}

void add_common_flags(CLI::App* sub, JobConfig& cfg, bool needs_m) {
    sub->add_option("--input", cfg.input, "input JSON file")->required();
    sub->add_option("--output", cfg.output, "write the JSON report here");
    auto* m_opt = sub->add_option("--m", cfg.m, "isometry order m");
    if (needs_m) m_opt->required();
    sub->add_option("--horizon", cfg.horizon, "number of weights to build or check");
    sub->add_flag("--bilateral", cfg.bilateral, "treat the shift as bilateral");
    sub->add_option("--tol-scale", cfg.tol_scale, "global tolerance multiplier")
        ->check(CLI::PositiveNumber);
    sub->add_option("--format", cfg.format, "stdout format")
        ->check(CLI::IsMember({"json", "text"}));
}

} // namespace

int run_cli(std::vector<std::string> args, std::ostream& out, std::ostream& err) {
    CLI::App app{"m-isometric operator-weighted shifts"};
    app.require_subcommand(1);

    JobConfig cfg;
    auto* construct = app.add_subcommand("construct", "build weights from a polynomial");
    add_common_flags(construct, cfg, true);
    auto* verify = app.add_subcommand("verify", "check the beta_m blocks of a weight sequence");
    add_common_flags(verify, cfg, true);
    auto* complete = app.add_subcommand("complete", "extend a finite prefix to an (m+2)-isometry");
    add_common_flags(complete, cfg, false);
    auto* analyze = app.add_subcommand("analyze", "commutativity and adjoint analysis");
    add_common_flags(analyze, cfg, true);
    auto* invert = app.add_subcommand("invert-poly", "invert p in the degree-(m-1) algebra");
    add_common_flags(invert, cfg, true);

    try {
        std::reverse(args.begin(), args.end());
        app.parse(std::move(args));
    } catch (const CLI::CallForHelp& e) {
        out << app.help();
        return exit_ok;
    } catch (const CLI::ParseError& e) {
        err << e.what() << '\n';
        return exit_precondition;
    }

    try {
        if (construct->parsed()) return cmd_construct(cfg, out);
        if (verify->parsed()) return cmd_verify(cfg, out);
        if (complete->parsed()) return cmd_complete(cfg, out);
        if (analyze->parsed()) return cmd_analyze(cfg, out);
        return cmd_invert_poly(cfg, out);
    } catch (const IoError& e) {
        err << "error: " << e.what() << '\n';
        return exit_io;
    } catch (const PreconditionFailed& e) {
        err << "error: " << e.what() << '\n';
        return exit_precondition;
    } catch (const Singular& e) {
        err << "error: " << e.what() << '\n';
        return exit_precondition;
    } catch (const HorizonTooShort& e) {
        err << "error: " << e.what() << '\n';
        return exit_precondition;
    } catch (const InvalidMatrix& e) {
        err << "error: " << e.what() << '\n';
        return exit_precondition;
    } catch (const DimMismatch& e) {
        err << "error: " << e.what() << '\n';
        return exit_precondition;
    } catch (const Error& e) {
        err << "error: " << e.what() << '\n';
        return exit_numerical;
    }
}

int run_cli(int argc, char** argv) {
    return run_cli(std::vector<std::string>(argv + 1, argv + argc), std::cout, std::cerr);
}

} // namespace misoshift
