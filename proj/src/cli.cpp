#include "greenbound/cli.hpp"

#include <cmath>
#include <fstream>
#include <iomanip>
#include <iostream>
#include <sstream>

#include "CLI11.hpp"
#include "json.hpp"

#include "greenbound/bounds.hpp"
#include "greenbound/dichotomy.hpp"
#include "greenbound/ensemble.hpp"
#include "greenbound/error.hpp"
#include "greenbound/green.hpp"
#include "greenbound/matrix_io.hpp"

namespace greenbound::cli {

using nlohmann::json;

namespace {

constexpr double kDominanceSlack = 1e-10;
constexpr double kAxisMargin = 0.05;
constexpr double kResidualStep = 1e-3;

class UsageError : public Error {
public:
    using Error::Error;
};

std::string format_complex(Complex z) { return format_double(z.real()) + "," + format_double(z.imag()); }

json number_or_null(double x) { return std::isfinite(x) ? json(x) : json(nullptr); }

std::string output_format(const RunConfig& config, const std::string& fallback) {
    const std::string f = config.format.value_or(fallback);
    if (f != "csv" && f != "json") {
        throw UsageError("--format must be csv or json");
    }
    return f;
}

ComplexMatrix load_matrix(const RunConfig& config) {
    if (!config.matrix_path) {
        throw UsageError("--matrix is required for '" + config.command + "'");
    }
    return read_matrix_file(*config.matrix_path);
}

std::vector<double> time_grid(const RunConfig& config) {
    if (config.t_min || config.t_max || config.steps > 0) {
        if (!config.t_min || !config.t_max || config.steps < 1) {
            throw UsageError("--t-min, --t-max and --steps must be given together");
        }
        return linspace(*config.t_min, *config.t_max, config.steps);
    }
    if (config.t) {
        return {*config.t};
    }
    throw UsageError("give --t or --t-min/--t-max/--steps");
}

// Drops t = 0, where Green's function is undefined.
std::vector<double> nonzero_times(const std::vector<double>& grid, std::ostream& err) {
    std::vector<double> out;
    for (double t : grid) {
        if (t == 0.0) {
            err << "skipping t=0 (Green's function is defined for t != 0)\n";
        } else {
            out.push_back(t);
        }
    }
    return out;
}

ComplexVector parse_vector(const std::optional<std::string>& text, Eigen::Index n) {
    if (!text) {
        return ComplexVector::Ones(n);
    }
    std::vector<Complex> values;
    std::stringstream stream(*text);
    std::string token;
    while (std::getline(stream, token, ',')) {
        const auto colon = token.find(':');
        try {
            std::size_t used = 0;
            const double re = std::stod(token.substr(0, colon), &used);
            double im = 0.0;
            if (colon != std::string::npos) {
                im = std::stod(token.substr(colon + 1));
            }
            values.emplace_back(re, im);
        } catch (const std::exception&) {
            throw UsageError("--vector entries must be numbers or re:im pairs, got '" + token + "'");
        }
    }
    if (static_cast<Eigen::Index>(values.size()) != n) {
        throw UsageError("--vector needs " + std::to_string(n) + " entries");
    }
    ComplexVector v(n);
    for (Eigen::Index i = 0; i < n; ++i) {
        v(i) = values[static_cast<std::size_t>(i)];
    }
    return v;
}

ForcingFn make_forcing(const RunConfig& config, Eigen::Index n) {
    ComplexVector v = parse_vector(config.vector, n);
    if (config.forcing == "constant") {
        return constant_forcing(std::move(v));
    }
    if (config.forcing == "sine") {
        return sine_forcing(config.omega, std::move(v));
    }
    if (config.forcing == "pulse") {
        return gaussian_pulse_forcing(std::move(v));
    }
    throw UsageError("--forcing must be constant, sine or pulse");
}

void write_matrix_csv(std::ostream& out, const std::string& label, const ComplexMatrix& g) {
    for (Eigen::Index i = 0; i < g.rows(); ++i) {
        for (Eigen::Index j = 0; j < g.cols(); ++j) {
            out << label << ',' << i << ',' << j << ',' << format_complex(g(i, j)) << '\n';
        }
    }
}

template <typename Fn>
int with_output(const RunConfig& config, std::ostream& out, Fn&& body) {
    if (!config.output_path) {
        return body(out);
    }
    std::ofstream file(*config.output_path);
    if (!file) {
        throw UsageError("cannot open output file " + *config.output_path);
    }
    return body(file);
}

}  // namespace

std::string format_double(double x) {
    std::ostringstream s;
    s << std::setprecision(17) << x;
    return s.str();
}

int cmd_spectrum(const RunConfig& config, std::ostream& out, std::ostream& err) {
    const ComplexMatrix a = load_matrix(config);
    const double norm = op_norm(a);
    const Spectrum spectrum = eigenvalues(a);
    return with_output(config, out, [&](std::ostream& os) {
        const bool as_json = config.format && output_format(config, "csv") == "json";
        DichotomyData d;
        try {
            d = split_spectrum(a);
        } catch (const DichotomyViolation& e) {
            if (!as_json) {
                os << "n=" << a.rows() << "\nnorm=" << format_double(norm) << '\n';
                for (const auto& z : spectrum.eigenvalues) {
                    os << "eigenvalue=" << format_complex(z) << '\n';
                }
            }
            err << e.what() << '\n';
            return static_cast<int>(kDichotomy);
        }
        if (as_json) {
            json eig = json::array();
            for (const auto& z : spectrum.eigenvalues) {
                eig.push_back({z.real(), z.imag()});
            }
            json doc{{"n", a.rows()},
                     {"norm", norm},
                     {"eigenvalues", eig},
                     {"k", d.k()},
                     {"m", d.m()},
                     {"gamma_plus", number_or_null(d.gamma_plus)},
                     {"gamma_minus", number_or_null(d.gamma_minus)}};
            os << doc.dump(2) << '\n';
        } else {
            os << "n=" << a.rows() << "\nnorm=" << format_double(norm) << '\n';
            for (const auto& z : spectrum.eigenvalues) {
                os << "eigenvalue=" << format_complex(z) << '\n';
            }
            os << "k=" << d.k() << " m=" << d.m() << " gamma+=" << format_double(d.gamma_plus)
               << " gamma-=" << format_double(d.gamma_minus) << '\n';
        }
        return static_cast<int>(kOk);
    });
}

int cmd_green(const RunConfig& config, std::ostream& out, std::ostream& err) {
    if (!config.t) {
        throw UsageError("green needs --t");
    }
    const double t = *config.t;
    const ComplexMatrix a = load_matrix(config);
    const DichotomyData d = split_spectrum(a);
    const std::string format = output_format(config, "json");

    return with_output(config, out, [&](std::ostream& os) {
        if (t == 0.0) {
            const ComplexMatrix plus = green_limit(a, d, TimeSign::positive);
            const ComplexMatrix minus = green_limit(a, d, TimeSign::negative);
            const ComplexMatrix jump = plus - minus;
            const double jump_error = op_norm(jump - identity(a.rows()));
            if (format == "json") {
                os << json{{"t", 0.0},
                           {"G_plus", matrix_to_json(plus)},
                           {"G_minus", matrix_to_json(minus)},
                           {"jump", matrix_to_json(jump)},
                           {"jump_identity_error", jump_error}}
                          .dump(2)
                   << '\n';
            } else {
                os << "label,row,col,re,im\n";
                write_matrix_csv(os, "G(0+)", plus);
                write_matrix_csv(os, "G(0-)", minus);
                write_matrix_csv(os, "jump", jump);
                err << "jump_identity_error=" << format_double(jump_error) << '\n';
            }
            return static_cast<int>(kOk);
        }
        const ComplexMatrix g = green_newton(a, d, t);
        const double discrepancy = op_norm(g - green_projector(a, d, t));
        if (format == "json") {
            os << json{{"t", t}, {"G", matrix_to_json(g)}, {"discrepancy", discrepancy}}.dump(2) << '\n';
        } else {
            os << "label,row,col,re,im\n";
            write_matrix_csv(os, "G", g);
            err << "discrepancy=" << format_double(discrepancy) << '\n';
        }
        return static_cast<int>(kOk);
    });
}

int cmd_bound(const RunConfig& config, std::ostream& out, std::ostream& err) {
    const std::vector<double> grid = nonzero_times(time_grid(config), err);
    const ComplexMatrix a = load_matrix(config);
    const DichotomyData d = split_spectrum(a);
    const std::string format = output_format(config, "csv");

    json rows = json::array();
    std::ostringstream csv;
    csv << "t,green_norm,bound,ratio\n";
    for (double t : grid) {
        const double norm = op_norm(green_newton(a, d, t));
        const double bound = green_bound(make_bound_params(a, d, t));
        const double ratio = bound > 0.0 ? norm / bound : 0.0;
        csv << format_double(t) << ',' << format_double(norm) << ',' << format_double(bound) << ','
            << format_double(ratio) << '\n';
        rows.push_back({{"t", t}, {"green_norm", norm}, {"bound", bound}, {"ratio", ratio}});
    }
    return with_output(config, out, [&](std::ostream& os) {
        if (format == "json") {
            os << rows.dump(2) << '\n';
        } else {
            os << csv.str();
        }
        return static_cast<int>(kOk);
    });
}

int cmd_verify(const RunConfig& config, std::ostream& out, std::ostream& /*err*/) {
    if (config.trials < 1) {
        throw UsageError("--trials must be at least 1");
    }
    if (config.dimension < 1) {
        throw UsageError("--dim must be at least 1");
    }
    const std::vector<double> grid = standard_time_grid();
    long long checks = 0;
    long long violations = 0;
    double worst_ratio = 0.0;
    double max_discrepancy = 0.0;
    for (int trial = 0; trial < config.trials; ++trial) {
        std::mt19937_64 gen(derive_seed(config.seed, static_cast<std::uint64_t>(trial)));
        const DichotomyMatrix sample = random_dichotomy_matrix(gen, config.dimension, kAxisMargin);
        for (double t : grid) {
            const ComplexMatrix g = green_newton(sample.a, sample.d, t);
            const double norm = op_norm(g);
            const double bound = green_bound(make_bound_params(sample.a, sample.d, t));
            ++checks;
            if (norm > bound * (1.0 + kDominanceSlack)) {
                ++violations;
            }
            if (bound > 0.0) {
                worst_ratio = std::max(worst_ratio, norm / bound);
            }
            const ComplexMatrix gp = green_projector(sample.a, sample.d, t);
            max_discrepancy = std::max(max_discrepancy, op_norm(g - gp) / (1.0 + op_norm(gp)));
        }
    }
    return with_output(config, out, [&](std::ostream& os) {
        if (config.format && output_format(config, "csv") == "json") {
            os << json{{"trials", config.trials},
                       {"dimension", config.dimension},
                       {"seed", config.seed},
                       {"checks", checks},
                       {"violations", violations},
                       {"worst_ratio", worst_ratio},
                       {"max_dual_path_discrepancy", max_discrepancy}}
                      .dump(2)
               << '\n';
        } else {
            os << "trials: " << config.trials << '\n'
               << "dimension: " << config.dimension << '\n'
               << "seed: " << config.seed << '\n'
               << "checks: " << checks << '\n'
               << "violations: " << violations << '\n'
               << "worst_ratio: " << format_double(worst_ratio) << '\n'
               << "max_dual_path_discrepancy: " << format_double(max_discrepancy) << '\n';
        }
        return static_cast<int>(violations == 0 ? kOk : kViolations);
    });
}

int cmd_solve(const RunConfig& config, std::ostream& out, std::ostream& err) {
    const std::vector<double> grid = time_grid(config);
    const ComplexMatrix a = load_matrix(config);
    const DichotomyData d = split_spectrum(a);
    const std::string format = output_format(config, "csv");
    ForcingFn forcing = make_forcing(config, a.rows());

    BoundedSolver solver(a, d, forcing, config.eps);
    solver.calibrate(grid);
    const auto x_eval = [&solver](double s) { return solver(s); };

    const Eigen::Index n = a.rows();
    json rows = json::array();
    std::ostringstream csv;
    csv << 't';
    for (Eigen::Index i = 1; i <= n; ++i) {
        csv << ",re_x" << i << ",im_x" << i;
    }
    csv << ",residual\n";
    for (double t : grid) {
        const ComplexVector x = solver(t);
        const double r = residual(a, x_eval, forcing, t, kResidualStep);
        csv << format_double(t);
        json xs = json::array();
        for (Eigen::Index i = 0; i < n; ++i) {
            csv << ',' << format_complex(x(i));
            xs.push_back({x(i).real(), x(i).imag()});
        }
        csv << ',' << format_double(r) << '\n';
        rows.push_back({{"t", t}, {"x", xs}, {"residual", r}});
    }
    err << "window=" << format_double(solver.window()) << " panels=" << solver.panels() << '\n';
    return with_output(config, out, [&](std::ostream& os) {
        if (format == "json") {
            os << rows.dump(2) << '\n';
        } else {
            os << csv.str();
        }
        return static_cast<int>(kOk);
    });
}

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    RunConfig config;
    CLI::App app{"Green's function of the bounded-solutions problem x' = Ax + f: evaluation and norm bounds"};
    app.name("greenbound");
    app.require_subcommand(1);

    auto add_matrix = [&](CLI::App* sub) {
        sub->add_option("--matrix", config.matrix_path, "matrix JSON file {\"n\":N,\"entries\":[[[re,im],...],...]}");
    };
    auto add_grid = [&](CLI::App* sub) {
        sub->add_option("--t", config.t, "single time point");
        sub->add_option("--t-min", config.t_min, "grid start");
        sub->add_option("--t-max", config.t_max, "grid end");
        sub->add_option("--steps", config.steps, "number of grid points");
    };
    auto add_output = [&](CLI::App* sub) {
        sub->add_option("--out", config.output_path, "write the report to a file");
        sub->add_option("--format", config.format, "csv or json");
    };

    CLI::App* spectrum = app.add_subcommand("spectrum", "eigenvalues, dichotomy split, gap constants and norm");
    add_matrix(spectrum);
    add_output(spectrum);

    CLI::App* green = app.add_subcommand("green", "Green's function G(t), with the projector-path discrepancy");
    add_matrix(green);
    green->add_option("--t", config.t, "time (t = 0 reports both one-sided limits)");
    add_output(green);

    CLI::App* bound = app.add_subcommand("bound", "||G(t)|| against the closed-form estimate over a time grid");
    add_matrix(bound);
    add_grid(bound);
    add_output(bound);

    CLI::App* verify = app.add_subcommand("verify", "seeded random campaign of dominance and dual-path checks");
    verify->add_option("--trials", config.trials, "number of random matrices");
    verify->add_option("--seed", config.seed, "campaign seed");
    verify->add_option("--dim", config.dimension, "matrix dimension");
    add_output(verify);

    CLI::App* solve = app.add_subcommand("solve", "bounded solution of x' = Ax + f with ODE residuals");
    add_matrix(solve);
    add_grid(solve);
    solve->add_option("--forcing", config.forcing, "constant, sine or pulse");
    solve->add_option("--omega", config.omega, "angular frequency of the sine forcing");
    solve->add_option("--vector", config.vector, "forcing direction, comma separated, re or re:im entries");
    solve->add_option("--eps", config.eps, "accuracy of the bounded solution");
    add_output(solve);

    try {
        std::vector<std::string> reversed(args.rbegin(), args.rend());
        app.parse(reversed);
    } catch (const CLI::CallForHelp&) {
        out << app.help();
        return kOk;
    } catch (const CLI::ParseError& e) {
        err << e.what() << '\n';
        return kUsage;
    }

    try {
        if (spectrum->parsed()) {
            config.command = "spectrum";
            return cmd_spectrum(config, out, err);
        }
        if (green->parsed()) {
            config.command = "green";
            return cmd_green(config, out, err);
        }
        if (bound->parsed()) {
            config.command = "bound";
            return cmd_bound(config, out, err);
        }
        if (verify->parsed()) {
            config.command = "verify";
            return cmd_verify(config, out, err);
        }
        config.command = "solve";
        return cmd_solve(config, out, err);
    } catch (const UsageError& e) {
        err << "usage error: " << e.what() << '\n';
        return kUsage;
    } catch (const InvalidInput& e) {
        err << "invalid input: " << e.what() << '\n';
        return kUsage;
    } catch (const DichotomyViolation& e) {
        err << e.what() << '\n';
        return kDichotomy;
    } catch (const std::exception& e) {
        err << "numerical failure: " << e.what() << '\n';
        return kNumerical;
    }
}

}  // namespace greenbound::cli
