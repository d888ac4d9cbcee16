#include "spinor3/cli.hpp"

#include <charconv>
#include <cmath>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>

#include <CLI11.hpp>
#include <json.hpp>

#include "spinor3/calculus.hpp"
#include "spinor3/charts.hpp"
#include "spinor3/checks.hpp"
#include "spinor3/model_map.hpp"
#include "spinor3/proper_model.hpp"
#include "spinor3/pseudo_model.hpp"
#include "spinor3/transport.hpp"

namespace spinor3 {

namespace {

using json = nlohmann::ordered_json;

/// Shortest round-trip decimal representation; the determinism contract of
/// all tabular output rests on this.
std::string fmt_double(double v) {
    if (std::isnan(v)) return "nan";
    char buf[32];
    auto [ptr, ec] = std::to_chars(buf, buf + sizeof(buf), v);
    (void)ec;
    return std::string(buf, ptr);
}

struct CliConfig {
    std::string model = "pseudo";
    std::string chart = "cartesian";
    std::string variant = "vector";
    std::string grid;
    std::string path_file;
    std::string gamma_convention = "vector";
    double gamma_axis = 0.0;
    double gamma_lift = 0.0;
    double axis_tol = 1e-12;
    double tol = 1e-9;
    bool tol_set = false;
    std::string format = "csv";
    std::string out_file;
    std::uint64_t seed = 0x5EEDF00Dull;
};

BranchContext branch_context(const CliConfig& cfg) {
    BranchContext ctx;
    ctx.gamma_axis = cfg.gamma_axis;
    ctx.axis_tol = cfg.axis_tol;
    ctx.gamma_lift = cfg.gamma_lift;
    if (cfg.gamma_convention == "vector")
        ctx.mode = GammaMode::PrincipalVector;
    else if (cfg.gamma_convention == "extended")
        ctx.mode = GammaMode::PrincipalExtended;
    else if (cfg.gamma_convention == "lift")
        ctx.mode = GammaMode::RealLift;
    else
        throw ValidationError("unknown gamma convention: " + cfg.gamma_convention);
    return ctx;
}

Model model_of(const CliConfig& cfg) {
    if (cfg.model == "pseudo") return Model::Xi;
    if (cfg.model == "proper") return Model::Eta;
    throw ValidationError("unknown model: " + cfg.model);
}

struct GridAxis {
    std::string name;
    std::vector<double> values;
};

std::vector<std::string> grid_names_for(const std::string& chart) {
    if (chart == "spherical") return {"r", "theta", "phi"};
    if (chart == "cartesian") return {"x1", "x2", "x3"};
    if (chart == "cylpar" || chart == "parabolic") return {"y1", "y2", "y3"};
    throw ValidationError("unknown chart: " + chart);
}

/// Parses "name=start:stop:count[,...]"; every coordinate of the chart must
/// appear exactly once, axis order follows the chart's canonical order.
std::vector<GridAxis> parse_grid(const std::string& spec, const std::string& chart) {
    if (spec.empty()) throw ValidationError("missing --grid specification");
    const std::vector<std::string> names = grid_names_for(chart);
    std::vector<GridAxis> axes(names.size());
    std::vector<bool> seen(names.size(), false);
    std::stringstream ss(spec);
    std::string part;
    while (std::getline(ss, part, ',')) {
        const auto eq = part.find('=');
        if (eq == std::string::npos) throw ValidationError("malformed grid term: " + part);
        const std::string name = part.substr(0, eq);
        const std::string range = part.substr(eq + 1);
        const auto c1 = range.find(':');
        const auto c2 = range.find(':', c1 == std::string::npos ? 0 : c1 + 1);
        if (c1 == std::string::npos || c2 == std::string::npos)
            throw ValidationError("grid term needs start:stop:count: " + part);
        double start = 0, stop = 0;
        long count = 0;
        try {
            start = std::stod(range.substr(0, c1));
            stop = std::stod(range.substr(c1 + 1, c2 - c1 - 1));
            count = std::stol(range.substr(c2 + 1));
        } catch (const std::exception&) {
            throw ValidationError("unparsable grid term: " + part);
        }
        if (count < 1) throw ValidationError("grid count must be >= 1 in: " + part);
        auto it = std::find(names.begin(), names.end(), name);
        if (it == names.end())
            throw ValidationError("coordinate '" + name + "' does not belong to chart " + chart);
        const std::size_t idx = static_cast<std::size_t>(it - names.begin());
        if (seen[idx]) throw ValidationError("duplicate coordinate in grid: " + name);
        seen[idx] = true;
        axes[idx].name = name;
        for (long i = 0; i < count; ++i)
            axes[idx].values.push_back(
                count == 1 ? start : start + (stop - start) * double(i) / double(count - 1));
    }
    for (std::size_t i = 0; i < names.size(); ++i)
        if (!seen[i]) throw ValidationError("grid is missing coordinate: " + names[i]);
    return axes;
}

ChartId chart_id_of(const std::string& chart) {
    if (chart == "cylpar") return ChartId::CylindricalParabolic;
    if (chart == "parabolic") return ChartId::Parabolic;
    if (chart == "spherical") return ChartId::Spherical;
    throw ValidationError("unknown chart: " + chart);
}

DomainVariant variant_of(const std::string& v) {
    if (v == "vector") return DomainVariant::VectorG;
    if (v == "extended") return DomainVariant::ExtendedG;
    if (v == "gprime") return DomainVariant::SphericalGPrime;
    if (v == "gdoubleprime") return DomainVariant::SphericalGDoublePrime;
    throw ValidationError("unknown domain variant: " + v);
}

struct OutputSink {
    std::ostream& fallback;
    std::ofstream file;
    explicit OutputSink(std::ostream& os, const std::string& path) : fallback(os) {
        if (!path.empty()) {
            file.open(path, std::ios::binary);
            if (!file) throw ValidationError("cannot open output file: " + path);
        }
    }
    std::ostream& stream() { return file.is_open() ? file : fallback; }
};

void require_finite(const Spinor& s) {
    if (!std::isfinite(s.c1.real()) || !std::isfinite(s.c1.imag()) ||
        !std::isfinite(s.c2.real()) || !std::isfinite(s.c2.imag()))
        throw Error("field evaluation produced a non-finite value");
}

// -- sample -----------------------------------------------------------------

int cmd_sample(const CliConfig& cfg, std::ostream& out_stream) {
    const BranchContext ctx = branch_context(cfg);
    const Model model = model_of(cfg);
    const std::vector<GridAxis> axes = parse_grid(cfg.grid, cfg.chart);
    const bool cartesian = cfg.chart == "cartesian";
    const DomainVariant variant = variant_of(cfg.variant);

    json rows = json::array();
    std::ostringstream csv;
    csv << "y1,y2,y3,x1,x2,x3,sheet,re1,im1,re2,im2\n";
    for (double v1 : axes[0].values)
        for (double v2 : axes[1].values)
            for (double v3 : axes[2].values) {
                Vec3 x;
                Spinor s;
                int sheet = 1;
                if (cartesian) {
                    x = {v1, v2, v3};
                    s = model == Model::Xi ? xi_from_pseudo(PseudoVectorState{x}, ctx)
                                           : eta_from_proper(x, ctx);
                } else {
                    ChartPoint p{chart_id_of(cfg.chart), v1, v2, v3, variant};
                    x = to_cartesian(p);
                    s = model == Model::Xi ? xi_in_chart(p, ctx) : eta_in_chart(p, ctx);
                    sheet = static_cast<int>(sheet_of(p));
                }
                require_finite(s);
                if (cfg.format == "csv") {
                    csv << fmt_double(v1) << ',' << fmt_double(v2) << ',' << fmt_double(v3)
                        << ',' << fmt_double(x.x) << ',' << fmt_double(x.y) << ','
                        << fmt_double(x.z) << ',' << sheet << ',' << fmt_double(s.c1.real())
                        << ',' << fmt_double(s.c1.imag()) << ',' << fmt_double(s.c2.real())
                        << ',' << fmt_double(s.c2.imag()) << '\n';
                } else {
                    rows.push_back({{"y1", v1},
                                    {"y2", v2},
                                    {"y3", v3},
                                    {"x1", x.x},
                                    {"x2", x.y},
                                    {"x3", x.z},
                                    {"sheet", sheet},
                                    {"re1", s.c1.real()},
                                    {"im1", s.c1.imag()},
                                    {"re2", s.c2.real()},
                                    {"im2", s.c2.imag()}});
                }
            }
    if (cfg.format == "csv")
        out_stream << csv.str();
    else
        out_stream << rows.dump(2) << '\n';
    return 0;
}

// -- residuals ---------------------------------------------------------------

int cmd_residuals(const CliConfig& cfg, std::ostream& out_stream) {
    const Model model = model_of(cfg);
    const std::vector<GridAxis> axes = parse_grid(cfg.grid, "cartesian");
    json rows = json::array();
    std::ostringstream csv;
    csv << "x1,x2,x3,D1,D2,D3,D4,status\n";
    for (double v1 : axes[0].values)
        for (double v2 : axes[1].values)
            for (double v3 : axes[2].values) {
                std::optional<CRResidual> r;
                try {
                    if (model == Model::Xi)
                        r = cr_residual_xi(PseudoVectorState{v1, v2, v3});
                    else
                        r = cr_residual_eta({v1, v2, v3}, half_space_of(v3));
                } catch (const SingularPointError&) {
                    r.reset();
                }
                if (cfg.format == "csv") {
                    csv << fmt_double(v1) << ',' << fmt_double(v2) << ',' << fmt_double(v3)
                        << ',';
                    if (r)
                        csv << fmt_double(r->D1) << ',' << fmt_double(r->D2) << ','
                            << fmt_double(r->D3) << ',' << fmt_double(r->D4) << ",ok\n";
                    else
                        csv << ",,,,singular\n";
                } else {
                    json row = {{"x1", v1}, {"x2", v2}, {"x3", v3}};
                    if (r) {
                        row["D1"] = r->D1;
                        row["D2"] = r->D2;
                        row["D3"] = r->D3;
                        row["D4"] = r->D4;
                        row["status"] = "ok";
                    } else {
                        row["D1"] = nullptr;
                        row["D2"] = nullptr;
                        row["D3"] = nullptr;
                        row["D4"] = nullptr;
                        row["status"] = "singular";
                    }
                    rows.push_back(row);
                }
            }
    if (cfg.format == "csv")
        out_stream << csv.str();
    else
        out_stream << rows.dump(2) << '\n';
    return 0;
}

// -- transport ----------------------------------------------------------------

int cmd_transport(const CliConfig& cfg, std::ostream& out_stream) {
    if (cfg.path_file.empty()) throw ValidationError("missing --path file");
    std::ifstream in(cfg.path_file);
    if (!in) throw ValidationError("cannot open path file: " + cfg.path_file);
    json doc;
    try {
        in >> doc;
    } catch (const json::exception& e) {
        throw ValidationError(std::string("path file is not valid JSON: ") + e.what());
    }
    Path path;
    try {
        for (const auto& pt : doc.at("points"))
            path.points.push_back({pt.at(0).get<double>(), pt.at(1).get<double>(),
                                   pt.at(2).get<double>()});
        path.closed = doc.value("closed", false);
    } catch (const json::exception& e) {
        throw ValidationError(std::string("path file schema: ") + e.what());
    }
    const BranchContext ctx = branch_context(cfg);
    const TransportResult r = transport_spinor(path, model_of(cfg), ctx);
    require_finite(r.final);
    if (cfg.format == "csv") {
        out_stream << "winding,gamma_end,re1,im1,re2,im2,sign_flip\n";
        if (r.winding)
            out_stream << *r.winding;
        out_stream << ',' << fmt_double(r.gamma_end) << ',' << fmt_double(r.final.c1.real())
                   << ',' << fmt_double(r.final.c1.imag()) << ','
                   << fmt_double(r.final.c2.real()) << ',' << fmt_double(r.final.c2.imag())
                   << ',';
        if (r.winding)
            out_stream << (r.sign_flip ? "true" : "false");
        out_stream << '\n';
    } else {
        json rec;
        if (r.winding) rec["winding"] = *r.winding;
        rec["gamma_end"] = r.gamma_end;
        rec["final"] = {r.final.c1.real(), r.final.c1.imag(), r.final.c2.real(),
                        r.final.c2.imag()};
        if (r.winding) rec["sign_flip"] = r.sign_flip;
        out_stream << rec.dump(2) << '\n';
    }
    return 0;
}

// -- convert -------------------------------------------------------------------

int cmd_convert(const CliConfig& cfg, const std::string& direction,
                const std::string& spinor_csv, std::ostream& out_stream) {
    std::array<double, 4> comps{};
    std::stringstream ss(spinor_csv);
    std::string tok;
    std::size_t i = 0;
    while (std::getline(ss, tok, ',')) {
        if (i >= 4) throw ValidationError("--spinor takes exactly four numbers");
        try {
            comps[i++] = std::stod(tok);
        } catch (const std::exception&) {
            throw ValidationError("unparsable spinor component: " + tok);
        }
    }
    if (i != 4) throw ValidationError("--spinor takes exactly four numbers");
    const Spinor in{{comps[0], comps[1]}, {comps[2], comps[3]}};
    Spinor r;
    if (direction == "xi-to-eta")
        r = xi_to_eta(in);
    else if (direction == "eta-to-xi")
        r = eta_to_xi(in);
    else
        throw ValidationError("unknown direction: " + direction);
    require_finite(r);
    if (cfg.format == "csv") {
        out_stream << "re1,im1,re2,im2\n";
        out_stream << fmt_double(r.c1.real()) << ',' << fmt_double(r.c1.imag()) << ','
                   << fmt_double(r.c2.real()) << ',' << fmt_double(r.c2.imag()) << '\n';
    } else {
        json rec = {{"re1", r.c1.real()},
                    {"im1", r.c1.imag()},
                    {"re2", r.c2.real()},
                    {"im2", r.c2.imag()}};
        out_stream << rec.dump(2) << '\n';
    }
    return 0;
}

// -- check ----------------------------------------------------------------------

int cmd_check(const CliConfig& cfg, const std::string& suite, std::ostream& out_stream) {
    CheckOptions opt;
    opt.seed = cfg.seed;
    if (cfg.tol_set) opt.tol_override = cfg.tol;
    const std::vector<CheckResult> results = run_check_suite(suite, opt);
    bool all_pass = true;
    for (const CheckResult& r : results) {
        out_stream << (r.pass ? "PASS " : "FAIL ") << r.name
                   << " max_err=" << fmt_double(r.max_err) << " tol=" << fmt_double(r.tol)
                   << '\n';
        all_pass = all_pass && r.pass;
    }
    out_stream << (all_pass ? "OK" : "FAILED") << " (" << results.size() << " checks)\n";
    return all_pass ? 0 : 1;
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"spinor3: spatial spinor fields over a double-covered 3-space"};
    app.require_subcommand(1);

    CliConfig cfg;
    if (const char* env_tol = std::getenv("SPINOR3_TOL")) {
        try {
            cfg.tol = std::stod(env_tol);
            cfg.tol_set = true;
        } catch (const std::exception&) {
            err << "warning: ignoring unparsable SPINOR3_TOL\n";
        }
    }

    auto add_common = [&](CLI::App* sub) {
        sub->add_option("--gamma-convention", cfg.gamma_convention,
                        "gamma branch: vector | extended | lift");
        sub->add_option("--gamma-axis", cfg.gamma_axis, "mute angle on the x3 axis");
        sub->add_option("--gamma-lift", cfg.gamma_lift, "lifted gamma for --gamma-convention lift");
        sub->add_option("--axis-tol", cfg.axis_tol, "relative axis tube tolerance");
        sub->add_option("--tol", cfg.tol, "tolerance (default 1e-9 or $SPINOR3_TOL)")
            ->each([&](const std::string&) { cfg.tol_set = true; });
        sub->add_option("--format", cfg.format, "csv | json")
            ->check(CLI::IsMember({"csv", "json"}));
        sub->add_option("--out", cfg.out_file, "write output to file instead of stdout");
        sub->add_option("--seed", cfg.seed, "deterministic seed for check suites");
    };

    CLI::App* sample = app.add_subcommand("sample", "tabulate a spinor field over a grid");
    sample->add_option("--model", cfg.model, "pseudo | proper");
    sample->add_option("--chart", cfg.chart, "cartesian | cylpar | parabolic | spherical");
    sample->add_option("--variant", cfg.variant, "vector | extended | gprime | gdoubleprime");
    sample->add_option("--grid", cfg.grid, "per-coordinate name=start:stop:count");
    add_common(sample);

    CLI::App* residuals =
        app.add_subcommand("residuals", "modified Cauchy-Riemann residuals over a grid");
    residuals->add_option("--model", cfg.model, "pseudo | proper");
    residuals->add_option("--grid", cfg.grid, "x1=..,x2=..,x3=.. grid");
    add_common(residuals);

    CLI::App* transport =
        app.add_subcommand("transport", "continue a spinor along a path file");
    transport->add_option("--model", cfg.model, "pseudo | proper");
    transport->add_option("--path", cfg.path_file, "JSON path file {points, closed}");
    add_common(transport);

    std::string direction = "xi-to-eta", spinor_csv;
    CLI::App* convert = app.add_subcommand("convert", "map a spinor between the two models");
    convert->add_option("--direction", direction, "xi-to-eta | eta-to-xi");
    convert->add_option("--spinor", spinor_csv, "re1,im1,re2,im2");
    add_common(convert);

    std::string suite = "all";
    CLI::App* check = app.add_subcommand("check", "run module invariant suites");
    check->add_option("--suite", suite,
                      "algebra | pseudo | proper | map | calculus | charts | transport | all");
    add_common(check);

    std::vector<const char*> argv;
    argv.push_back("spinor3");
    for (const std::string& a : args) argv.push_back(a.c_str());

    try {
        app.parse(static_cast<int>(argv.size()), argv.data());
    } catch (const CLI::CallForHelp& e) {
        out << app.help();
        return 0;
    } catch (const CLI::ParseError& e) {
        err << e.what() << '\n';
        return 1;
    }

    try {
        if (!(cfg.tol > 0.0) || !(cfg.axis_tol > 0.0))
            throw ValidationError("tolerances must be positive");
        OutputSink sink(out, cfg.out_file);
        if (sample->parsed()) return cmd_sample(cfg, sink.stream());
        if (residuals->parsed()) return cmd_residuals(cfg, sink.stream());
        if (transport->parsed()) return cmd_transport(cfg, sink.stream());
        if (convert->parsed()) return cmd_convert(cfg, direction, spinor_csv, sink.stream());
        if (check->parsed()) return cmd_check(cfg, suite, sink.stream());
        err << "no subcommand selected\n";
        return 1;
    } catch (const ValidationError& e) {
        err << "error: " << e.what() << '\n';
        return 1;
    } catch (const ResolutionError& e) {
        err << "error: " << e.what() << '\n';
        return 1;
    } catch (const SingularPointError& e) {
        err << "numerical error: " << e.what() << '\n';
        return 2;
    } catch (const Error& e) {
        err << "numerical error: " << e.what() << '\n';
        return 2;
    }
}

}  // namespace spinor3
