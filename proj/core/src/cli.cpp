#include "kerrneg/cli.hpp"

#include <CLI11.hpp>
#include <algorithm>
#include <charconv>
#include <cmath>
#include <fstream>
#include <optional>
#include <ostream>
#include <sstream>

#include "ascii_plot.hpp"
#include "kerrneg/audit.hpp"
#include "kerrneg/csv.hpp"
#include "kerrneg/entanglement.hpp"
#include "kerrneg/errors.hpp"
#include "kerrneg/figures.hpp"
#include "kerrneg/oracle.hpp"
#include "kerrneg/validation.hpp"

namespace kerrneg::cli {

namespace {

bool parse_plain_double(const std::string& text, double& value) {
    const char* first = text.data();
    const char* last = first + text.size();
    const auto res = std::from_chars(first, last, value);
    return res.ec == std::errc{} && res.ptr == last;
}

bool parse_plain_int(const std::string& text, long& value) {
    const char* first = text.data();
    const char* last = first + text.size();
    const auto res = std::from_chars(first, last, value);
    return res.ec == std::errc{} && res.ptr == last;
}

}  // namespace

double parse_angle(const std::string& text) {
    std::string s = text;
    s.erase(std::remove_if(s.begin(), s.end(),
                           [](unsigned char ch) { return std::isspace(ch); }),
            s.end());
    if (s.empty()) throw ValidationError("angle: empty value");

    double plain = 0.0;
    if (parse_plain_double(s, plain)) return plain;

    const std::size_t pos = s.find("pi");
    if (pos == std::string::npos)
        throw ValidationError("angle: cannot parse '" + text + "'");

    std::string prefix = s.substr(0, pos);
    const std::string suffix = s.substr(pos + 2);

    double sign = 1.0;
    if (!prefix.empty() && (prefix.front() == '-' || prefix.front() == '+')) {
        if (prefix.front() == '-') sign = -1.0;
        prefix.erase(prefix.begin());
    }
    long numerator = 1;
    if (!prefix.empty() && !parse_plain_int(prefix, numerator))
        throw ValidationError("angle: cannot parse '" + text + "'");
    long denominator = 1;
    if (!suffix.empty()) {
        if (suffix.front() != '/' ||
            !parse_plain_int(suffix.substr(1), denominator) || denominator <= 0)
            throw ValidationError("angle: cannot parse '" + text + "'");
    }
    return sign * static_cast<double>(numerator) * M_PI /
           static_cast<double>(denominator);
}

namespace {

struct Options {
    std::optional<int> n1, n2;
    std::optional<std::string> theta;
    std::optional<double> eta, zeta, t;
    std::optional<double> t_max;
    std::optional<int> samples;
    std::optional<std::string> axis1, axis2;
    std::string engine = "closed";
    std::optional<std::string> output;
    std::string format = "csv";
    std::uint64_t seed = 42;
    int threads = 0;
    std::string inject_fault;
};

void add_param_options(CLI::App* cmd, Options& opts) {
    cmd->add_option("--n1", opts.n1, "Initial photon number of mode 1");
    cmd->add_option("--n2", opts.n2, "Initial photon number of mode 2");
    cmd->add_option("--theta", opts.theta,
                    "Atomic superposition angle, radians; accepts pi tokens "
                    "like pi/4");
    cmd->add_option("--eta", opts.eta, "Scaled atom-field coupling (>= 0)");
    cmd->add_option("--zeta", opts.zeta, "Scaled Kerr coefficient");
    cmd->add_option("--t", opts.t, "Scaled time");
}

void add_output_options(CLI::App* cmd, Options& opts) {
    cmd->add_option("--engine", opts.engine,
                    "Evaluation engine: closed|oracle|both");
    cmd->add_option("--output", opts.output, "Output file (default stdout)");
    cmd->add_option("--format", opts.format, "Output format: csv|ascii");
    cmd->add_option("--threads", opts.threads,
                    "Worker threads for sweeps (0 = auto)");
}

Engine parse_engine(const std::string& name) {
    if (name == "closed") return Engine::closed_form;
    if (name == "oracle") return Engine::oracle;
    if (name == "both") return Engine::both;
    throw ValidationError("engine: must be closed|oracle|both, got '" + name +
                          "'");
}

SweepParameter parse_sweep_parameter(const std::string& name) {
    if (name == "T") return SweepParameter::t;
    if (name == "eta") return SweepParameter::eta;
    if (name == "zeta") return SweepParameter::zeta;
    if (name == "theta") return SweepParameter::theta;
    throw ValidationError("axis: parameter must be one of T|eta|zeta|theta, got '" +
                          name + "'");
}

AxisSpec parse_axis(const std::string& text) {
    std::vector<std::string> parts;
    std::stringstream ss(text);
    std::string part;
    while (std::getline(ss, part, ':')) parts.push_back(part);
    if (parts.size() != 4)
        throw ValidationError("axis: expected NAME:START:STOP:COUNT, got '" +
                              text + "'");
    AxisSpec axis;
    axis.parameter = parse_sweep_parameter(parts[0]);
    axis.start = parse_angle(parts[1]);
    axis.stop = parse_angle(parts[2]);
    long count = 0;
    if (!parse_plain_int(parts[3], count))
        throw ValidationError("axis: cannot parse count '" + parts[3] + "'");
    axis.count = static_cast<int>(count);
    return axis;
}

bool sweeps_parameter(const SweepSpec& spec, SweepParameter p) {
    return spec.axis1.parameter == p || (spec.axis2 && spec.axis2->parameter == p);
}

// Fixed-parameter overrides for figure commands; a parameter that the grid
// sweeps cannot also be fixed.
void apply_overrides(SweepSpec& spec, const Options& opts) {
    if (opts.n1) spec.fixed.n1 = *opts.n1;
    if (opts.n2) spec.fixed.n2 = *opts.n2;
    auto set_fixed = [&](SweepParameter p, const char* name, double value) {
        if (sweeps_parameter(spec, p))
            throw ValidationError(std::string(name) +
                                  ": parameter is swept by this grid and "
                                  "cannot also be fixed");
        switch (p) {
            case SweepParameter::t: spec.fixed_t = value; break;
            case SweepParameter::eta: spec.fixed.eta = value; break;
            case SweepParameter::zeta: spec.fixed.zeta = value; break;
            case SweepParameter::theta: spec.fixed.theta = value; break;
        }
    };
    if (opts.theta) set_fixed(SweepParameter::theta, "theta", parse_angle(*opts.theta));
    if (opts.eta) set_fixed(SweepParameter::eta, "eta", *opts.eta);
    if (opts.zeta) set_fixed(SweepParameter::zeta, "zeta", *opts.zeta);
    if (opts.t) set_fixed(SweepParameter::t, "t", *opts.t);

    if (opts.t_max) {
        if (spec.axis1.parameter != SweepParameter::t)
            throw ValidationError("t-max: this grid does not sweep T");
        spec.axis1.stop = *opts.t_max;
    }
    if (opts.samples) spec.axis1.count = *opts.samples;
    spec.engine = parse_engine(opts.engine);
}

int write_sweep_output(const SweepResult& result, const Options& opts,
                       std::ostream& out, std::ostream& err) {
    if (opts.format != "csv" && opts.format != "ascii")
        throw ValidationError("format: must be csv|ascii, got '" + opts.format +
                              "'");
    auto render = [&](std::ostream& sink) {
        if (opts.format == "csv") {
            write_csv(sink, result);
        } else {
            render_ascii(sink, result);
        }
    };
    if (!opts.output) {
        render(out);
        return kExitOk;
    }
    std::ofstream file(*opts.output, std::ios::binary);
    if (!file) {
        err << "error: cannot open output file '" << *opts.output << "'\n";
        return kExitIoError;
    }
    render(file);
    file.flush();
    if (!file) {
        err << "error: failed writing output file '" << *opts.output << "'\n";
        return kExitIoError;
    }
    return kExitOk;
}

int run_point(const Options& opts, std::ostream& out) {
    auto require = [](const auto& field, const char* name) {
        if (!field)
            throw ValidationError(std::string(name) +
                                  ": required for the point command");
    };
    require(opts.n1, "n1");
    require(opts.n2, "n2");
    require(opts.theta, "theta");
    require(opts.eta, "eta");
    require(opts.zeta, "zeta");
    require(opts.t, "t");

    ModelParams params{*opts.n1, *opts.n2, parse_angle(*opts.theta), *opts.eta,
                       *opts.zeta};
    validate(params);
    const Engine engine = parse_engine(opts.engine);
    const AmplitudeSet amps = engine == Engine::oracle
                                  ? amplitudes_oracle(params, *opts.t)
                                  : amplitudes(params, *opts.t);
    const ModeDensityMatrix rho = mode_density(amps, params.n1, params.n2);
    const NegativityResult result = negativity(rho);

    auto emit = [&](const char* key, double value) {
        out << key << '=' << format_double(value) << '\n';
    };
    out << "command=point\n";
    out << "n1=" << params.n1 << '\n';
    out << "n2=" << params.n2 << '\n';
    emit("eta", params.eta);
    emit("zeta", params.zeta);
    emit("theta", params.theta);
    emit("T", *opts.t);
    out << "engine=" << opts.engine << '\n';
    auto emit_complex = [&](const char* key, cxd value) {
        out << key << "_re=" << format_double(value.real()) << '\n'
            << key << "_im=" << format_double(value.imag()) << '\n';
    };
    emit_complex("a", amps.a);
    emit_complex("b", amps.b);
    emit_complex("c", amps.c);
    emit_complex("d", amps.d);
    emit("norm_sq", amps.norm_sq());
    emit("rho_0_0", rho.entries(0, 0).real());
    emit("rho_4_4", rho.entries(4, 4).real());
    emit("rho_8_8", rho.entries(8, 8).real());
    emit_complex("rho_0_4", rho.entries(0, 4));
    emit_complex("rho_4_8", rho.entries(4, 8));
    for (int i = 0; i < 9; ++i) {
        out << "pt_eigenvalue_" << i << '='
            << format_double(result.pt_eigenvalues[i]) << '\n';
    }
    emit("negativity", result.value);
    emit("negativity_closed_form", result.closed_form_value);
    emit("eigen_closed_gap", result.eigen_closed_gap);
    if (engine == Engine::both) {
        const AmplitudeSet oracle = amplitudes_oracle(params, *opts.t);
        const NegativityResult oracle_result =
            negativity(mode_density(oracle, params.n1, params.n2));
        emit("engine_gap", std::abs(result.value - oracle_result.value));
    }
    return kExitOk;
}

int run_figure(FigureId id, const Options& opts, std::ostream& out,
               std::ostream& err) {
    SweepSpec spec = figure_spec(id);
    apply_overrides(spec, opts);
    const SweepResult result = run_sweep(spec, opts.threads);
    return write_sweep_output(result, opts, out, err);
}

int run_generic_sweep(const Options& opts, std::ostream& out,
                      std::ostream& err) {
    if (!opts.axis1) throw ValidationError("axis: required for the sweep command");

    SweepSpec spec;
    spec.axis1 = parse_axis(*opts.axis1);
    if (opts.axis2) spec.axis2 = parse_axis(*opts.axis2);

    spec.fixed.n1 = opts.n1.value_or(0);
    spec.fixed.n2 = opts.n2.value_or(0);

    // Every non-swept continuous parameter must be given explicitly; a swept
    // one must not be.
    auto fix = [&](SweepParameter p, const char* name, bool provided,
                   double value, double& slot) {
        if (sweeps_parameter(spec, p)) {
            if (provided)
                throw ValidationError(std::string(name) +
                                      ": parameter is swept and cannot also be "
                                      "fixed");
            return;
        }
        if (!provided)
            throw ValidationError(std::string(name) +
                                  ": required (not swept by any axis)");
        slot = value;
    };
    fix(SweepParameter::theta, "theta", opts.theta.has_value(),
        opts.theta ? parse_angle(*opts.theta) : 0.0, spec.fixed.theta);
    fix(SweepParameter::eta, "eta", opts.eta.has_value(), opts.eta.value_or(0.0),
        spec.fixed.eta);
    fix(SweepParameter::zeta, "zeta", opts.zeta.has_value(),
        opts.zeta.value_or(0.0), spec.fixed.zeta);
    fix(SweepParameter::t, "t", opts.t.has_value(), opts.t.value_or(0.0),
        spec.fixed_t);

    spec.engine = parse_engine(opts.engine);
    const SweepResult result = run_sweep(spec, opts.threads);
    return write_sweep_output(result, opts, out, err);
}

int run_audit_command(const Options& opts, std::ostream& out,
                      std::ostream& err) {
    const AuditReport report = run_audit();
    write_audit_report(out, report);
    if (opts.output) {
        std::ofstream file(*opts.output, std::ios::binary);
        if (!file) {
            err << "error: cannot open output file '" << *opts.output << "'\n";
            return kExitIoError;
        }
        write_audit_csv(file, report);
        file.flush();
        if (!file) {
            err << "error: failed writing output file '" << *opts.output << "'\n";
            return kExitIoError;
        }
    }
    return kExitOk;
}

int run_validate(const Options& opts, std::ostream& out) {
    ValidationOptions vopts;
    vopts.seed = opts.seed;
    if (opts.samples) vopts.draws = *opts.samples;
    if (!opts.inject_fault.empty()) {
        if (opts.inject_fault == "g2-sign") {
            vopts.fault = FaultInjection::flip_g2_sign;
        } else {
            throw ValidationError("inject-fault: unknown fault '" +
                                  opts.inject_fault + "'");
        }
    }

    const std::vector<PropertyResult> results = run_validation_suite(vopts);
    for (const PropertyResult& r : results) {
        out << (r.passed ? "[PASS] " : "[FAIL] ") << r.name;
        for (std::size_t pad = r.name.size(); pad < 36; ++pad) out << ' ';
        out << " max violation " << format_double_shortest(r.max_violation)
            << " (threshold " << format_double_shortest(r.threshold) << ")\n";
    }
    const std::size_t failed =
        std::count_if(results.begin(), results.end(),
                      [](const PropertyResult& r) { return !r.passed; });
    out << (failed == 0 ? "all properties passed"
                        : std::to_string(failed) + " properties FAILED")
        << " (seed " << opts.seed << ", " << (opts.samples ? *opts.samples : 100)
        << " draws)\n";
    return failed == 0 ? kExitOk : kExitValidationFailed;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out,
        std::ostream& err) {
    CLI::App app{
        "Exact entanglement (negativity) dynamics of two cavity modes coupled "
        "to a two-level atom through a Kerr medium"};
    app.name("kerrneg");
    app.require_subcommand(1);

    Options opts;

    auto add_common = [&](CLI::App* cmd, bool with_grid_options) {
        add_param_options(cmd, opts);
        add_output_options(cmd, opts);
        if (with_grid_options) {
            cmd->add_option("--t-max", opts.t_max,
                            "Override the time-axis upper bound");
            cmd->add_option("--samples", opts.samples,
                            "Override the first axis sample count");
        }
        cmd->set_config("--config", "", "Plain key=value config file; flags win");
        return cmd;
    };

    CLI::App* point_cmd =
        add_common(app.add_subcommand("point", "Evaluate one parameter point"),
                   false);

    std::vector<std::pair<FigureId, CLI::App*>> figure_cmds;
    for (FigureId id :
         {FigureId::fig1a, FigureId::fig1b, FigureId::fig1c, FigureId::fig2a,
          FigureId::fig2b, FigureId::fig2c, FigureId::fig3, FigureId::fig4a,
          FigureId::fig4b, FigureId::fig4c}) {
        CLI::App* cmd = add_common(
            app.add_subcommand(figure_name(id),
                               std::string("Reproduce panel ") + figure_name(id)),
            true);
        figure_cmds.emplace_back(id, cmd);
    }

    CLI::App* sweep_cmd = add_common(
        app.add_subcommand("sweep", "Generic 1D/2D negativity sweep"), false);
    sweep_cmd->add_option("--axis", opts.axis1,
                          "First axis as NAME:START:STOP:COUNT with NAME in "
                          "T|eta|zeta|theta");
    sweep_cmd->add_option("--axis2", opts.axis2, "Optional second axis");

    CLI::App* audit_cmd = add_common(
        app.add_subcommand("audit",
                           "Compare the published amplitude formulas against "
                           "the corrected form and the brute-force engine"),
        false);

    CLI::App* validate_cmd = add_common(
        app.add_subcommand("validate", "Run the full invariant suite"), false);
    validate_cmd->add_option("--seed", opts.seed, "Random seed");
    validate_cmd
        ->add_option("--inject-fault", opts.inject_fault,
                     "Deliberately corrupt the closed form (test-of-tests)")
        ->group("");  // hidden

    try {
        std::vector<std::string> reversed(args.rbegin(), args.rend());
        app.parse(reversed);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e, out, err) == 0 ? kExitOk : kExitBadInput;
    } catch (const CLI::CallForAllHelp& e) {
        return app.exit(e, out, err) == 0 ? kExitOk : kExitBadInput;
    } catch (const CLI::ParseError& e) {
        app.exit(e, out, err);
        return kExitBadInput;
    }

    try {
        if (point_cmd->parsed()) return run_point(opts, out);
        for (const auto& [id, cmd] : figure_cmds) {
            if (cmd->parsed()) return run_figure(id, opts, out, err);
        }
        if (sweep_cmd->parsed()) return run_generic_sweep(opts, out, err);
        if (audit_cmd->parsed()) return run_audit_command(opts, out, err);
        if (validate_cmd->parsed()) return run_validate(opts, out);
        err << "error: no command selected\n";
        return kExitBadInput;
    } catch (const Error& e) {
        err << "error: " << e.what() << '\n';
        return kExitBadInput;
    }
}

}  // namespace kerrneg::cli
