// ptspec command-line front end: spectrum | boundary | dep | metric | lemma.
// Exit codes: 0 success, 1 domain/model error, 2 usage error.

#include <algorithm>
#include <charconv>
#include <complex>
#include <fstream>
#include <iostream>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "ptspec/boundary.hpp"
#include "ptspec/cubic.hpp"
#include "ptspec/emit.hpp"
#include "ptspec/matmodel.hpp"
#include "ptspec/metric.hpp"
#include "ptspec/spectrum.hpp"

namespace {

using nlohmann::json;

struct UsageError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct GridSpec {
    double start = 0.0;
    double stop = 0.0;
    int count = 0;
};

double parse_double_token(const std::string& tok, const char* what) {
    try {
        std::size_t used = 0;
        const double v = std::stod(tok, &used);
        if (used != tok.size()) throw std::invalid_argument(tok);
        return v;
    } catch (const std::exception&) {
        throw UsageError(std::string(what) + ": '" + tok + "' is not a number");
    }
}

int parse_count_token(const std::string& tok, const char* what) {
    int v = 0;
    const auto res = std::from_chars(tok.data(), tok.data() + tok.size(), v);
    if (res.ec != std::errc{} || res.ptr != tok.data() + tok.size())
        throw UsageError(std::string(what) + ": '" + tok + "' is not an integer");
    return v;
}

GridSpec parse_grid(const std::vector<std::string>& tokens, const char* what) {
    GridSpec g;
    g.start = parse_double_token(tokens[0], what);
    g.stop = parse_double_token(tokens[1], what);
    g.count = parse_count_token(tokens[2], what);
    if (g.count < 2)
        throw UsageError(std::string(what) + ": count must be >= 2, got " + tokens[2]);
    return g;
}

std::vector<double> linspace(const GridSpec& g) {
    std::vector<double> out;
    out.reserve(static_cast<std::size_t>(g.count));
    for (int k = 0; k < g.count; ++k)
        out.push_back(g.start + (g.stop - g.start) * k / (g.count - 1));
    return out;
}

void check_tol_flag(double tol) {
    if (tol < 1e-14)
        throw UsageError("--tol must be >= 1e-14 to stay honest in double precision");
}

json grid_json(const GridSpec& g) {
    return json{{"start", g.start}, {"stop", g.stop}, {"count", g.count}};
}

struct Output {
    std::ofstream file;
    std::ostream* os = nullptr;
};

Output open_output(const std::string& path) {
    Output out;
    if (path == "-") {
        out.os = &std::cout;
        return out;
    }
    out.file.open(path, std::ios::binary);
    if (!out.file)
        throw ptspec::ParameterError("cannot open output file '" + path + "'");
    out.os = &out.file;
    return out;
}

struct CommonFlags {
    std::string format = "csv";
    std::string output = "-";
};

void add_common(CLI::App* cmd, CommonFlags& flags) {
    cmd->add_option("--format", flags.format, "Output format")
        ->check(CLI::IsMember({"csv", "json", "svg"}));
    cmd->add_option("--output", flags.output, "Output path, or - for stdout");
}

void require_tabular(const CommonFlags& flags, const char* sub) {
    if (flags.format == "svg")
        throw UsageError(std::string("--format svg is only valid for the boundary "
                                     "subcommand, not ") + sub);
}

// ---- spectrum ----

struct SpectrumArgs {
    CommonFlags common;
    int dim = 2;
    double a = 0.0;
    double b = 0.0;
    double c = 0.0;
    std::vector<std::string> sweep_tokens;
};

int run_spectrum(const SpectrumArgs& args) {
    require_tabular(args.common, "spectrum");

    std::optional<GridSpec> sweep;
    std::string sweep_var;
    if (!args.sweep_tokens.empty()) {
        sweep_var = args.sweep_tokens[0];
        if (sweep_var != "a" && sweep_var != "b" && sweep_var != "c")
            throw UsageError("--sweep variable must be one of a, b, c; got '" +
                             sweep_var + "'");
        sweep = parse_grid({args.sweep_tokens[1], args.sweep_tokens[2],
                            args.sweep_tokens[3]}, "--sweep");
    }

    std::vector<ptspec::SpectrumRecord> records;
    const std::vector<double> values =
        sweep ? linspace(*sweep) : std::vector<double>{0.0};
    for (double v : values) {
        ptspec::ModelParams p{args.dim, args.a, args.b, args.c};
        if (sweep) {
            if (sweep_var == "a") p.a = v;
            else if (sweep_var == "b") p.b = v;
            else p.c = v;
        }
        const ptspec::SpectrumClassification sc = ptspec::classify(p);
        ptspec::SpectrumRecord rec;
        rec.a = p.a;
        rec.b = p.b;
        rec.c = p.c;
        rec.spectral_class = sc.spectral_class;
        rec.roots = sc.roots.expanded();
        std::sort(rec.roots.begin(), rec.roots.end(),
                  [](const std::complex<double>& lhs, const std::complex<double>& rhs) {
                      if (lhs.real() != rhs.real()) return lhs.real() < rhs.real();
                      return lhs.imag() < rhs.imag();
                  });
        rec.jordan_defect = sc.jordan_defect;
        records.push_back(std::move(rec));
    }

    Output out = open_output(args.common.output);
    if (args.common.format == "csv") {
        ptspec::write_spectrum_csv(*out.os, records, args.dim);
    } else {
        json config{{"subcommand", "spectrum"}, {"dim", args.dim}, {"a", args.a},
                    {"b", args.b},              {"c", args.c},     {"format", "json"}};
        if (sweep) {
            config["sweep"] = grid_json(*sweep);
            config["sweep"]["variable"] = sweep_var;
        }
        ptspec::write_json_document(*out.os, config, ptspec::spectrum_records_json(records));
    }
    return 0;
}

// ---- boundary ----

struct BoundaryArgs {
    CommonFlags common;
    std::string method;
    double c = 0.0;
    int resolution = 360;
    double tol = 1e-13;
};

int run_boundary(const BoundaryArgs& args) {
    if (args.resolution < 8)
        throw UsageError("--resolution must be >= 8, got " +
                         std::to_string(args.resolution));
    check_tol_flag(args.tol);
    if (args.method == "parametric" && args.c != 0.0)
        throw UsageError("--method parametric is a c = 0 closed form; "
                         "use --method bisect for c != 0");

    std::vector<ptspec::BoundaryCurve> curves;
    if (args.method == "parametric") {
        curves.push_back(ptspec::parametric_arc(1, 1, args.resolution));
        curves.push_back(ptspec::parametric_arc(-1, 1, args.resolution));
        curves.push_back(ptspec::parametric_arc(-1, -1, args.resolution));
        curves.push_back(ptspec::parametric_arc(1, -1, args.resolution));
    } else {
        curves.push_back(ptspec::bisect_curve(args.resolution, args.c, args.tol));
    }

    Output out = open_output(args.common.output);
    if (args.common.format == "csv") {
        ptspec::write_boundary_csv(*out.os, curves);
    } else if (args.common.format == "svg") {
        ptspec::write_boundary_svg(*out.os, curves);
    } else {
        const json config{{"subcommand", "boundary"}, {"method", args.method},
                          {"c", args.c},              {"resolution", args.resolution},
                          {"tol", args.tol},          {"format", "json"}};
        ptspec::write_json_document(*out.os, config, ptspec::boundary_records_json(curves));
    }
    return 0;
}

// ---- dep ----

struct DepArgs {
    CommonFlags common;
    double c = 0.0;
};

int run_dep(const DepArgs& args) {
    require_tabular(args.common, "dep");
    const std::vector<ptspec::DepPoint> points = ptspec::dep_points(args.c);
    Output out = open_output(args.common.output);
    if (args.common.format == "csv") {
        ptspec::write_dep_csv(*out.os, points);
    } else {
        const json config{{"subcommand", "dep"}, {"c", args.c}, {"format", "json"}};
        ptspec::write_json_document(*out.os, config, ptspec::dep_records_json(points));
    }
    return 0;
}

// ---- metric ----

struct MetricArgs {
    CommonFlags common;
    std::optional<double> a;
    std::optional<double> gamma;
    std::vector<std::string> a_grid_tokens;
    std::vector<std::string> gamma_grid_tokens;
    double scale = 1.0;
};

int run_metric(const MetricArgs& args) {
    require_tabular(args.common, "metric");
    if (!(args.scale > 0.0)) throw UsageError("--scale must be positive");
    if (args.a && !args.a_grid_tokens.empty())
        throw UsageError("give either --a or --a-grid, not both");
    if (args.gamma && !args.gamma_grid_tokens.empty())
        throw UsageError("give either --gamma or --gamma-grid, not both");
    if (!args.a && args.a_grid_tokens.empty())
        throw UsageError("metric needs --a VALUE or --a-grid START STOP COUNT");
    if (!args.gamma && args.gamma_grid_tokens.empty())
        throw UsageError("metric needs --gamma VALUE or --gamma-grid START STOP COUNT");

    std::optional<GridSpec> a_grid, gamma_grid;
    if (!args.a_grid_tokens.empty()) a_grid = parse_grid(args.a_grid_tokens, "--a-grid");
    if (!args.gamma_grid_tokens.empty())
        gamma_grid = parse_grid(args.gamma_grid_tokens, "--gamma-grid");
    const std::vector<double> a_values =
        a_grid ? linspace(*a_grid) : std::vector<double>{*args.a};
    const std::vector<double> gamma_values =
        gamma_grid ? linspace(*gamma_grid) : std::vector<double>{*args.gamma};

    std::vector<ptspec::MetricRecord> records;
    for (double a : a_values)
        for (double gamma : gamma_values) {
            const ptspec::MetricCandidate mc = ptspec::build_metric(a, gamma);
            ptspec::SquareMatrix theta = mc.theta;
            for (int i = 0; i < 2; ++i)
                for (int j = 0; j < 2; ++j) theta(i, j) *= args.scale;
            const ptspec::SquareMatrix h =
                ptspec::build_hamiltonian(ptspec::ModelParams::two_level(a));
            ptspec::MetricRecord rec;
            rec.a = a;
            rec.gamma = gamma;
            rec.theta = {theta(0, 0), theta(0, 1), theta(1, 0), theta(1, 1)};
            rec.det = theta(0, 0) * theta(1, 1) - theta(0, 1) * theta(1, 0);
            rec.min_eigenvalue = ptspec::positivity_certificate(theta).min_eigenvalue;
            rec.residual = ptspec::quasi_hermiticity_residual(h, theta);
            records.push_back(rec);
        }

    Output out = open_output(args.common.output);
    if (args.common.format == "csv") {
        ptspec::write_metric_csv(*out.os, records);
    } else {
        json config{{"subcommand", "metric"}, {"scale", args.scale}, {"format", "json"}};
        if (a_grid) config["a_grid"] = grid_json(*a_grid);
        else config["a"] = *args.a;
        if (gamma_grid) config["gamma_grid"] = grid_json(*gamma_grid);
        else config["gamma"] = *args.gamma;
        ptspec::write_json_document(*out.os, config, ptspec::metric_records_json(records));
    }
    return 0;
}

// ---- lemma ----

struct LemmaArgs {
    CommonFlags common;
    std::optional<double> b;
    std::vector<std::string> b_grid_tokens;
    double tol = 1e-13;
};

int run_lemma(const LemmaArgs& args) {
    require_tabular(args.common, "lemma");
    check_tol_flag(args.tol);
    if (args.b && !args.b_grid_tokens.empty())
        throw UsageError("give either --b or --b-grid, not both");
    if (!args.b && args.b_grid_tokens.empty())
        throw UsageError("lemma needs --b VALUE or --b-grid START STOP COUNT");

    std::optional<GridSpec> b_grid;
    if (!args.b_grid_tokens.empty()) b_grid = parse_grid(args.b_grid_tokens, "--b-grid");
    const std::vector<double> b_values =
        b_grid ? linspace(*b_grid) : std::vector<double>{*args.b};

    std::vector<ptspec::LemmaRecord> records;
    for (double b : b_values) {
        const double eta = ptspec::lemma_eta(b, args.tol);
        records.push_back(ptspec::LemmaRecord{b, eta, eta / (b * b)});
    }

    Output out = open_output(args.common.output);
    if (args.common.format == "csv") {
        ptspec::write_lemma_csv(*out.os, records);
    } else {
        json config{{"subcommand", "lemma"}, {"tol", args.tol}, {"format", "json"}};
        if (b_grid) config["b_grid"] = grid_json(*b_grid);
        else config["b"] = *args.b;
        ptspec::write_json_document(*out.os, config, ptspec::lemma_records_json(records));
    }
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Spectra, quasi-Hermiticity domain boundary, exceptional points, and "
                 "metric family of a PT-symmetric two- and three-level matrix model"};
    app.require_subcommand(1);

    SpectrumArgs spectrum_args;
    CLI::App* spectrum = app.add_subcommand(
        "spectrum", "Classify the spectrum at a point or along a one-parameter sweep");
    spectrum->add_option("--dim", spectrum_args.dim, "Model dimension")
        ->check(CLI::IsMember({2, 3}));
    spectrum->add_option("--a", spectrum_args.a, "Coupling a");
    spectrum->add_option("--b", spectrum_args.b, "Coupling b (dimension 3)");
    spectrum->add_option("--c", spectrum_args.c, "Diagonal shift c (dimension 3)");
    spectrum->add_option("--sweep", spectrum_args.sweep_tokens,
                         "Sweep: VAR START STOP COUNT with VAR in {a, b, c}")
        ->expected(4);
    add_common(spectrum, spectrum_args.common);

    BoundaryArgs boundary_args;
    CLI::App* boundary = app.add_subcommand(
        "boundary", "Trace the quasi-Hermiticity domain boundary in the (a, b) plane");
    boundary->add_option("--method", boundary_args.method, "parametric (c=0 only) or bisect")
        ->required()
        ->check(CLI::IsMember({"parametric", "bisect"}));
    boundary->add_option("--c", boundary_args.c, "Diagonal shift c");
    boundary->add_option("--resolution", boundary_args.resolution,
                         "Points per arc (parametric) or rays (bisect)");
    boundary->add_option("--tol", boundary_args.tol, "Bisection bracket width");
    add_common(boundary, boundary_args.common);

    DepArgs dep_args;
    CLI::App* dep = app.add_subcommand(
        "dep", "The four doubly exceptional points at diagonal shift c");
    dep->add_option("--c", dep_args.c, "Diagonal shift c");
    add_common(dep, dep_args.common);

    MetricArgs metric_args;
    CLI::App* metric = app.add_subcommand(
        "metric", "Members of the two-level metric family Theta(a, gamma)");
    metric->add_option("--a", metric_args.a, "Coupling a, |a| < 1");
    metric->add_option("--gamma", metric_args.gamma, "Ambiguity angle in [0, pi/2)");
    metric->add_option("--a-grid", metric_args.a_grid_tokens, "Grid: START STOP COUNT")
        ->expected(3);
    metric->add_option("--gamma-grid", metric_args.gamma_grid_tokens,
                       "Grid: START STOP COUNT")
        ->expected(3);
    metric->add_option("--scale", metric_args.scale, "Overall positive scale factor");
    add_common(metric, metric_args.common);

    LemmaArgs lemma_args;
    CLI::App* lemma = app.add_subcommand(
        "lemma", "Real-spectrum window growth eta(b) at fixed b, c = 0");
    lemma->add_option("--b", lemma_args.b, "Coupling b, 0 < |b| < sqrt(2)");
    lemma->add_option("--b-grid", lemma_args.b_grid_tokens, "Grid: START STOP COUNT")
        ->expected(3);
    lemma->add_option("--tol", lemma_args.tol, "Bisection bracket width");
    add_common(lemma, lemma_args.common);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        if (e.get_name() == "CallForHelp" || e.get_name() == "CallForAllHelp" ||
            e.get_name() == "CallForVersion")
            return app.exit(e);
        std::cerr << "usage error: " << e.what() << '\n';
        return 2;
    }

    try {
        if (app.got_subcommand(spectrum)) return run_spectrum(spectrum_args);
        if (app.got_subcommand(boundary)) return run_boundary(boundary_args);
        if (app.got_subcommand(dep)) return run_dep(dep_args);
        if (app.got_subcommand(metric)) return run_metric(metric_args);
        return run_lemma(lemma_args);
    } catch (const UsageError& e) {
        std::cerr << "usage error: " << e.what() << '\n';
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 1;
    }
}
