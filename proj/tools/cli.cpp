#include "cli.hpp"

#include <cstdio>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>

#if __has_include(<CLI11.hpp>)
#include <CLI11.hpp>
#else
#include <CLI/CLI.hpp>
#endif

#include "platocf/cf_calculus.hpp"
#include "platocf/cf_core.hpp"
#include "platocf/errors.hpp"
#include "platocf/geometry.hpp"
#include "platocf/mc_oracle.hpp"
#include "platocf/scattering.hpp"

namespace platocf::cli
{
namespace
{
//---------------------------------------------------------------------------//
//! Parsed command line shared by every subcommand.
struct RunConfig
{
    std::string command;
    std::vector<std::string> solids{"tetrahedron"};
    double edge{1};
    std::optional<double> grid_min;
    std::optional<double> grid_max;
    std::size_t count{101};
    bool log_grid{false};
    bool mc{false};
    std::uint64_t samples{100'000};
    std::optional<std::uint64_t> seed;
    std::string distribution{"poisson:4,1"};
    std::string output;
    bool normalize_dmax{false};
    bool derivatives{false};
    bool porod{false};
    bool scale_q0{false};
    std::string density_output;
    std::size_t density_points{2001};
    std::string what{"cf"};
    unsigned threads{0};
    ConstraintTolerances tol;
};

class UsageError : public std::runtime_error
{
  public:
    using std::runtime_error::runtime_error;
};

std::string format_number(double v)
{
    char buf[32];
    std::snprintf(buf, sizeof(buf), "%.17g", v);
    return buf;
}

//! Arguments as recorded in headers; output paths are left out so reruns
//! into different files stay byte-identical.
std::string join(std::vector<std::string> const& args)
{
    std::string s;
    for (std::size_t i = 0; i < args.size(); ++i)
    {
        auto const& a = args[i];
        if (a == "-o" || a == "--output" || a == "--emit-density")
        {
            ++i;
            continue;
        }
        if (a.starts_with("--output=") || a.starts_with("--emit-density="))
            continue;
        if (!s.empty())
            s += ' ';
        s += a;
    }
    return s;
}

//! A named output column.
struct Column
{
    std::string name;
    std::vector<double> values;
};

class CsvWriter
{
  public:
    CsvWriter(std::vector<std::string> const& args, std::optional<std::uint64_t> seed)
    {
        header_ << "# platocf " << version << '\n';
        header_ << "# command: " << join(args) << '\n';
        header_ << "# seed: " << (seed ? std::to_string(*seed) : "none") << '\n';
    }

    void comment(std::string const& line) { header_ << "# " << line << '\n'; }

    std::string render(std::vector<Column> const& columns) const
    {
        std::ostringstream os;
        os << header_.str();
        for (std::size_t c = 0; c < columns.size(); ++c)
            os << (c ? "," : "") << columns[c].name;
        os << '\n';
        std::size_t const rows = columns.empty() ? 0 : columns.front().values.size();
        for (std::size_t r = 0; r < rows; ++r)
        {
            for (std::size_t c = 0; c < columns.size(); ++c)
                os << (c ? "," : "") << format_number(columns[c].values[r]);
            os << '\n';
        }
        return os.str();
    }

  private:
    std::ostringstream header_;
};

void emit(std::string const& text, std::string const& path, std::ostream& out)
{
    if (path.empty())
    {
        out << text;
        return;
    }
    std::ofstream file(path, std::ios::binary);
    if (!file)
        throw UsageError("cannot open output file " + path);
    file << text;
}

//---------------------------------------------------------------------------//
struct Subject
{
    SolidKind kind;
    SolidSpec spec;
    bool mc;
};

SolidSpec shape_spec(SolidKind kind, double edge, bool normalize, bool gyration = false)
{
    SolidSpec s = gyration ? solid_metrics(kind, edge) : solid_shape(kind, edge);
    return normalize ? scale_to_unit_dmax(s) : s;
}

std::vector<Subject> resolve_subjects(RunConfig const& cfg, bool mc_only_when_needed)
{
    if (cfg.solids.empty())
        throw UsageError("no solid given");
    std::vector<Subject> subjects;
    for (auto const& name : cfg.solids)
    {
        auto kind = parse_solid_kind(name);
        if (!kind)
            throw UsageError("unknown solid '" + name + "'");
        bool const analytic = has_analytic_cf(*kind);
        bool const mc = mc_only_when_needed ? !analytic : cfg.mc;
        if (!analytic && !mc)
            throw UsageError("solid '" + name + "' has no closed form; use --mc");
        if (mc && !cfg.seed)
            throw UsageError("Monte Carlo mode requires --seed");
        subjects.push_back({*kind, shape_spec(*kind, cfg.edge, cfg.normalize_dmax), mc});
    }
    return subjects;
}

std::string column_name(std::string base, Subject const& s, bool multi)
{
    return multi ? base + "_" + std::string(to_string(s.kind)) : base;
}

std::vector<double> make_grid(RunConfig const& cfg, double default_max)
{
    double const lo = cfg.grid_min.value_or(cfg.log_grid ? 1e-3 : 0.0);
    double const hi = cfg.grid_max.value_or(default_max);
    if (cfg.count < 2)
        throw UsageError("grid count must be at least 2");
    if (!(lo < hi))
        throw UsageError("grid minimum must be below maximum");
    if (lo < 0)
        throw UsageError("grid minimum must be non-negative");
    if (cfg.log_grid && !(lo > 0))
        throw UsageError("logarithmic grid needs a positive minimum");
    return cfg.log_grid ? log_grid(lo, hi, cfg.count) : linear_grid(lo, hi, cfg.count);
}

TabulationOptions tabulation(RunConfig const& cfg)
{
    return {201, cfg.samples, cfg.seed.value_or(0)};
}

PiecewiseCF subject_cf(Subject const& s, RunConfig const& cfg)
{
    return cf_for(s.spec, tabulation(cfg));
}

//! Derivative for table output, choosing a stencil side at breakpoints.
double table_derivative(PiecewiseCF const& cf, double r, int order)
{
    double const dmax = cf.dmax();
    if (r > dmax)
        return 0;
    if (r >= dmax)
        return cf_derivative(cf, r, order, StencilSide::Left);
    if (r <= 0)
        return cf_derivative(cf, 0, order, StencilSide::Right);
    try
    {
        return cf_derivative(cf, r, order);
    }
    catch (DomainError const&)
    {
        return cf_derivative(cf, r, order, StencilSide::Right);
    }
}

//---------------------------------------------------------------------------//
int cmd_cf(RunConfig const& cfg,
           std::vector<std::string> const& args,
           std::ostream& out,
           bool mc_only_when_needed = false)
{
    auto subjects = resolve_subjects(cfg, mc_only_when_needed);
    double default_max = 0;
    for (auto const& s : subjects)
        default_max = std::max(default_max, s.spec.dmax);
    auto const grid = make_grid(cfg, default_max);
    bool const multi = subjects.size() > 1;

    CsvWriter csv(args, cfg.seed);
    std::vector<Column> columns{{"r", grid}};
    for (auto const& s : subjects)
    {
        if (s.mc)
        {
            auto table = tabulate_cf(s.spec, grid, cfg.samples, *cfg.seed,
                                     McParallel{cfg.threads});
            Column value{column_name("gamma", s, multi), {}};
            Column err{column_name("stderr", s, multi), {}};
            for (auto const& p : table)
            {
                value.values.push_back(p.value);
                err.values.push_back(p.std_error);
            }
            columns.push_back(std::move(value));
            columns.push_back(std::move(err));
            continue;
        }
        auto const cf = subject_cf(s, cfg);
        Column value{column_name("gamma", s, multi), {}};
        for (double r : grid)
            value.values.push_back(cf(r));
        columns.push_back(std::move(value));
        if (cfg.derivatives)
        {
            Column d1{column_name("dgamma", s, multi), {}};
            Column d2{column_name("d2gamma", s, multi), {}};
            for (double r : grid)
            {
                d1.values.push_back(table_derivative(cf, r, 1));
                d2.values.push_back(table_derivative(cf, r, 2));
            }
            columns.push_back(std::move(d1));
            columns.push_back(std::move(d2));
        }
    }
    emit(csv.render(columns), cfg.output, out);
    return exit_success;
}

//---------------------------------------------------------------------------//
int cmd_validate(RunConfig const& cfg, std::vector<std::string> const& args, std::ostream& out)
{
    if (cfg.solids.size() != 1)
        throw UsageError("validate takes exactly one solid");
    auto kind = parse_solid_kind(cfg.solids.front());
    if (!kind || (*kind != SolidKind::Tetrahedron && *kind != SolidKind::Octahedron))
        throw UsageError("validate supports tetrahedron and octahedron");
    SolidSpec const spec = shape_spec(*kind, cfg.edge, cfg.normalize_dmax, true);
    auto const report = validate_constraints(spec, cfg.tol);

    std::ostringstream os;
    os << "# platocf " << version << '\n';
    os << "# command: " << join(args) << '\n';
    os << "# solid: " << to_string(spec.kind) << " edge: " << format_number(spec.edge)
       << '\n';
    os << "# rg2: " << format_number(report.rg2)
       << " stderr: " << format_number(report.rg2_stderr) << '\n';
    os << "# rg2_seed: " << report.rg2_seed << " rg2_samples: " << report.rg2_samples
       << '\n';
    os << "# name expected actual error tol status\n";
    for (auto const& rec : report.records)
    {
        os << rec.name << ' ' << format_number(rec.expected) << ' '
           << format_number(rec.actual) << ' ' << format_number(rec.abs_error) << ' '
           << format_number(rec.tolerance) << ' ' << (rec.pass ? "PASS" : "FAIL")
           << '\n';
    }
    emit(os.str(), cfg.output, out);
    return report.all_pass() ? exit_success : exit_validation_failure;
}

//---------------------------------------------------------------------------//
//! Evaluate on the grid, prepending q = 0 when a normalized column is wanted.
template<class CurveFn>
void add_intensity_columns(std::vector<Column>& columns,
                           std::vector<double> const& grid,
                           RunConfig const& cfg,
                           std::string const& base,
                           Subject const& s,
                           bool multi,
                           CurveFn&& curve_fn)
{
    bool const prepend = cfg.scale_q0 && grid.front() >= 1e-6;
    std::vector<double> q = grid;
    if (prepend)
        q.insert(q.begin(), 0.0);
    IntensityCurve curve = curve_fn(q);
    if (curve.clamped)
    {
        std::cerr << "warning: " << curve.clamped
                  << " intensity values were negative and clamped\n";
    }
    auto strip = [&](std::vector<double> v) {
        if (prepend)
            v.erase(v.begin());
        return v;
    };
    columns.push_back({column_name(base, s, multi), strip(curve.values)});
    if (cfg.porod)
        columns.push_back({column_name("q4" + base, s, multi), strip(porod_curve(curve).values)});
    if (cfg.scale_q0)
    {
        std::string const name = base == "I" ? "normalized" : "scaled";
        columns.push_back({column_name(name, s, multi), strip(normalize_curve(curve).values)});
    }
}

int cmd_intensity(RunConfig const& cfg,
                  std::vector<std::string> const& args,
                  std::ostream& out,
                  bool mc_only_when_needed = false)
{
    auto subjects = resolve_subjects(cfg, mc_only_when_needed);
    auto const grid = make_grid(cfg, 50.0);
    bool const multi = subjects.size() > 1;
    CsvWriter csv(args, cfg.seed);
    std::vector<Column> columns{{"q", grid}};
    for (auto const& s : subjects)
    {
        auto const cf = subject_cf(s, cfg);
        add_intensity_columns(columns, grid, cfg, "I", s, multi, [&](auto const& q) {
            return intensity_curve(cf, q, {}, cfg.threads);
        });
    }
    emit(csv.render(columns), cfg.output, out);
    return exit_success;
}

//---------------------------------------------------------------------------//
int cmd_polydisperse(RunConfig const& cfg, std::vector<std::string> const& args, std::ostream& out)
{
    SizeDistribution dist = [&] {
        try
        {
            return SizeDistribution::parse(cfg.distribution);
        }
        catch (DomainError const& e)
        {
            throw UsageError(e.what());
        }
    }();
    auto subjects = resolve_subjects(cfg, false);
    auto const grid = make_grid(cfg, 50.0);
    bool const multi = subjects.size() > 1;
    CsvWriter csv(args, cfg.seed);
    csv.comment("distribution: " + dist.describe());
    std::vector<Column> columns{{"q", grid}};
    for (auto const& s : subjects)
    {
        auto const cf = subject_cf(s, cfg);
        add_intensity_columns(columns, grid, cfg, "I_poly", s, multi, [&](auto const& q) {
            return polydisperse_curve(cf, dist, q, {}, cfg.threads);
        });
    }
    emit(csv.render(columns), cfg.output, out);

    if (!cfg.density_output.empty())
    {
        if (dist.is_discrete())
            throw UsageError("--emit-density needs a continuous distribution");
        if (cfg.density_points < 2)
            throw UsageError("--density-n must be at least 2");
        double const cutoff = size_truncation(dist, {});
        auto const d = linear_grid(0, cutoff, cfg.density_points);
        Column p{"p", {}};
        for (double x : d)
            p.values.push_back(dist.density(x));
        CsvWriter density(args, cfg.seed);
        density.comment("distribution: " + dist.describe());
        emit(density.render({{"d", d}, std::move(p)}), cfg.density_output, out);
    }
    return exit_success;
}

//---------------------------------------------------------------------------//
int cmd_compare(RunConfig cfg, std::vector<std::string> const& args, std::ostream& out)
{
    cfg.solids = {"tetrahedron", "octahedron", "cube", "cylinder", "sphere"};
    cfg.normalize_dmax = true;
    if (cfg.what == "cf")
        return cmd_cf(cfg, args, out, true);
    if (cfg.what == "intensity")
        return cmd_intensity(cfg, args, out, true);
    throw UsageError("compare --what must be cf or intensity");
}

//---------------------------------------------------------------------------//
void add_solid_options(CLI::App* sub, RunConfig& cfg)
{
    sub->add_option("--solid", cfg.solids, "Solid name(s), comma separated")
        ->delimiter(',');
    sub->add_option("--edge", cfg.edge, "Edge length (diameter for sphere)")
        ->check(CLI::PositiveNumber);
    sub->add_flag("--normalize-dmax", cfg.normalize_dmax,
                  "Rescale every solid to unit maximal chord");
    sub->add_option("-o,--output", cfg.output, "Output file (default stdout)");
}

void add_mc_options(CLI::App* sub, RunConfig& cfg)
{
    sub->add_flag("--mc", cfg.mc, "Use Monte Carlo estimates");
    sub->add_option("--samples", cfg.samples, "Monte Carlo samples per point")
        ->check(CLI::Range(std::uint64_t{1000}, std::uint64_t{1} << 40));
    sub->add_option("--seed", cfg.seed, "Random seed");
    sub->add_option("--threads", cfg.threads, "Worker threads (0 = all cores)");
}

void add_grid_options(CLI::App* sub, RunConfig& cfg, std::string const& var)
{
    sub->add_option("--" + var + "min", cfg.grid_min, "Grid minimum");
    sub->add_option("--" + var + "max", cfg.grid_max, "Grid maximum");
    sub->add_option("--n", cfg.count, "Grid points");
    sub->add_flag("--log", cfg.log_grid, "Logarithmic spacing");
}

void add_intensity_flags(CLI::App* sub, RunConfig& cfg)
{
    sub->add_flag("--porod", cfg.porod, "Add q^4 I column");
    sub->add_flag("--scale-q0", cfg.scale_q0, "Add column scaled to 1 at q = 0");
}

}  // namespace

//---------------------------------------------------------------------------//
int run(std::vector<std::string> const& args, std::ostream& out, std::ostream& err)
{
    RunConfig cfg;
    CLI::App app{"Correlation functions and scattering of the regular "
                 "tetrahedron and octahedron"};
    app.require_subcommand(1);
    app.set_version_flag("--version", version);

    auto* cf = app.add_subcommand("cf", "Tabulate correlation functions");
    add_solid_options(cf, cfg);
    add_mc_options(cf, cfg);
    add_grid_options(cf, cfg, "r");
    cf->add_flag("--derivatives", cfg.derivatives, "Add first and second derivative");

    auto* validate = app.add_subcommand("validate", "Check the moment and endpoint identities");
    add_solid_options(validate, cfg);
    validate->add_option("--tol-gamma0", cfg.tol.gamma_at_0);
    validate->add_option("--tol-slope0", cfg.tol.slope_at_0);
    validate->add_option("--tol-dmax", cfg.tol.gamma_at_dmax);
    validate->add_option("--tol-slope-dmax", cfg.tol.slope_at_dmax);
    validate->add_option("--tol-volume", cfg.tol.volume_rel, "Relative tolerance");
    validate->add_option("--tol-gyration", cfg.tol.gyration_rel, "Relative tolerance");

    auto* inten = app.add_subcommand("intensity", "Tabulate scattering intensities");
    add_solid_options(inten, cfg);
    add_mc_options(inten, cfg);
    add_grid_options(inten, cfg, "q");
    add_intensity_flags(inten, cfg);

    auto* poly = app.add_subcommand("polydisperse", "Size-averaged intensities");
    add_solid_options(poly, cfg);
    add_mc_options(poly, cfg);
    add_grid_options(poly, cfg, "q");
    add_intensity_flags(poly, cfg);
    poly->add_option("--dist", cfg.distribution, "Size density, e.g. poisson:4,1");
    poly->add_option("--emit-density", cfg.density_output, "Write the d,p(d) table here");
    poly->add_option("--density-n", cfg.density_points, "Points in the density table");

    auto* compare = app.add_subcommand("compare", "All five reference solids at unit dmax");
    add_mc_options(compare, cfg);
    add_grid_options(compare, cfg, "x");
    add_intensity_flags(compare, cfg);
    compare->add_option("--what", cfg.what, "cf or intensity");
    compare->add_flag("--derivatives", cfg.derivatives);
    compare->add_option("-o,--output", cfg.output, "Output file (default stdout)");

    try
    {
        std::vector<std::string> reversed(args.rbegin(), args.rend());
        app.parse(reversed);
    }
    catch (CLI::CallForHelp const&)
    {
        out << app.help();
        return exit_success;
    }
    catch (CLI::CallForVersion const&)
    {
        out << version << '\n';
        return exit_success;
    }
    catch (CLI::ParseError const& e)
    {
        err << "error: " << e.what() << '\n';
        return exit_usage;
    }

    try
    {
        if (cf->parsed())
            return cmd_cf(cfg, args, out);
        if (validate->parsed())
            return cmd_validate(cfg, args, out);
        if (inten->parsed())
            return cmd_intensity(cfg, args, out);
        if (poly->parsed())
            return cmd_polydisperse(cfg, args, out);
        if (compare->parsed())
            return cmd_compare(cfg, args, out);
    }
    catch (UsageError const& e)
    {
        err << "error: " << e.what() << '\n';
        return exit_usage;
    }
    catch (DomainError const& e)
    {
        err << "error: " << e.what() << '\n';
        return exit_usage;
    }
    return exit_usage;
}

}  // namespace platocf::cli
