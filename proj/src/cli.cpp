#include "casimir/cli.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <cstdio>
#include <fstream>
#include <span>
#include <sstream>

#include "casimir/cylinder.hpp"
#include "casimir/orbits.hpp"
#include "casimir/series.hpp"
#include "casimir/sphere.hpp"
#include "casimir/verification.hpp"
#include "casimir/wkb.hpp"

namespace casimir::cli {

namespace {

using json = nlohmann::ordered_json;

enum class Format { Json, Csv, Text };

struct Options {
    Format format = Format::Json;
    std::string out_path;
    int terms = 50;
    int richardson_order = 4;
    double tolerance = 1e-5;
    bool breakdown = false;
    std::string variant = "quadratic";
    int ell_max = 10;
    int n_max = 10;
    std::string bc = "both";
    int orbit_n_max = 8;
    bool em_only = false;
    std::vector<double> x_grid;
    double x_max = 30.0;
    int points = 61;
    std::string geometry = "sphere";
};

double rounded(double v) {
    return std::stod(format_number(v));
}

series::SeriesTailPlan plan_of(const Options& o) {
    return {o.terms, o.richardson_order, o.tolerance};
}

void emit_scalars(std::ostream& out, Format format, const json& doc) {
    switch (format) {
    case Format::Json:
        out << doc.dump(2) << '\n';
        return;
    case Format::Csv:
        out << "key,value\n";
        for (const auto& [key, value] : doc.items()) {
            if (!value.is_array()) {
                out << key << ',' << (value.is_string() ? value.get<std::string>() : value.dump()) << '\n';
            }
        }
        return;
    case Format::Text:
        for (const auto& [key, value] : doc.items()) {
            if (!value.is_array()) {
                out << key << " = " << (value.is_string() ? value.get<std::string>() : value.dump()) << '\n';
            }
        }
        return;
    }
}

int sphere_energy(const Options& o, std::ostream& out) {
    if (o.breakdown) {
        out << "n,diameter_term,generic_term\n";
        for (const auto& row : sphere::sphere_term_rows(o.terms)) {
            out << row.n << ',' << format_number(row.diameter_term) << ',' << format_number(row.generic_term) << '\n';
        }
        return kExitOk;
    }
    const auto sce = sphere::sphere_sce(plan_of(o));
    json doc;
    doc["diameter_sum"] = rounded(sce.diameter_sum);
    doc["generic_sum"] = rounded(sce.generic_sum);
    doc["total"] = rounded(sce.total);
    doc["tail_error"] = rounded(sce.tail_error);
    doc["explicit_terms"] = sce.explicit_terms_used;
    doc["richardson_order"] = o.richardson_order;
    doc["units"] = "hbar*c/R";
    doc["reference"] = sphere::kFieldTheoryReference;
    doc["ratio_to_reference"] = rounded(sce.total / sphere::kFieldTheoryReference);
    emit_scalars(out, o.format, doc);
    return kExitOk;
}

int cylinder_energy(const Options& o, std::ostream& out) {
    const auto variant = cylinder::parse_variant(o.variant);
    const auto sce = cylinder::cylinder_sce(variant, plan_of(o));
    if (o.breakdown) {
        out << "n,term,cumulative\n";
        const auto prefix = series::compensated_prefix_sums(sce.per_n_terms);
        for (std::size_t i = 0; i < sce.per_n_terms.size(); ++i) {
            out << i + 1 << ',' << format_number(sce.per_n_terms[i]) << ',' << format_number(prefix[i]) << '\n';
        }
        return kExitOk;
    }
    json doc;
    doc["variant"] = std::string(cylinder::to_string(sce.variant));
    doc["series_value"] = rounded(sce.series_value);
    doc["series_error"] = rounded(sce.series_error);
    doc["alpha_factor"] = rounded(sce.alpha_factor);
    doc["prefactor"] = rounded(sce.prefactor);
    doc["total"] = rounded(sce.total);
    doc["units"] = "hbar*c*L/R^2";
    doc["diffractive_n1"] = rounded(cylinder::cylinder_diffractive_n1());
    doc["reference"] = cylinder::kFieldTheoryReference;
    json terms = json::array();
    for (double t : sce.per_n_terms) {
        terms.push_back(rounded(t));
    }
    doc["per_n_terms"] = terms;
    emit_scalars(out, o.format, doc);
    return kExitOk;
}

int wkb_zeros(const Options& o, std::ostream& out) {
    std::vector<orbits::BoundaryCondition> bcs;
    if (o.bc == "D" || o.bc == "both") {
        bcs.push_back(orbits::BoundaryCondition::Dirichlet);
    }
    if (o.bc == "N" || o.bc == "both") {
        bcs.push_back(orbits::BoundaryCondition::Neumann);
    }
    out << "ell,n,bc,x_wkb,x_exact,rel_error,flag\n";
    for (auto bc : bcs) {
        for (const auto& r : wkb::spectrum_report(o.ell_max, o.n_max, bc)) {
            out << r.ell << ',' << r.n << ',' << orbits::to_string(r.bc) << ',' << format_number(r.x_wkb) << ','
                << format_number(r.x_exact) << ',' << (r.rel_error ? format_number(*r.rel_error) : "") << ','
                << (r.anomaly ? "anomaly" : "") << '\n';
        }
    }
    return kExitOk;
}

int orbit_table(const Options& o, std::ostream& out) {
    out << "n,w,z_bar,length_over_R,maslov_D,maslov_N,em_contributes\n";
    for (auto sector : orbits::enumerate_sectors(o.orbit_n_max, o.em_only)) {
        const auto g = orbits::describe(sector);
        out << sector.n << ',' << sector.w << ',' << format_number(g.stationary_z) << ','
            << format_number(g.length_over_r) << ',' << g.maslov_dirichlet << ',' << g.maslov_neumann << ','
            << (g.em_contributes ? "true" : "false") << '\n';
    }
    return kExitOk;
}

int alpha_integral(const Options& o, std::ostream& out) {
    std::vector<double> grid = o.x_grid;
    if (grid.empty()) {
        for (int i = 0; i < o.points; ++i) {
            grid.push_back(o.points == 1 ? 0.0 : o.x_max * i / (o.points - 1));
        }
    }
    out << "x,exact,semiclassical,exp_fit\n";
    for (const auto& row : cylinder::alpha_curve_table(grid)) {
        out << format_number(row.x) << ',' << format_number(row.exact) << ',' << format_number(row.semiclassical)
            << ',' << format_number(row.exp_fit) << '\n';
    }
    return kExitOk;
}

int convergence(const Options& o, std::ostream& out) {
    const auto plan = plan_of(o);
    plan.validate();
    std::vector<double> terms;
    std::size_t stride = 1;
    if (o.geometry == "sphere") {
        for (int n = 1; n <= o.terms; ++n) {
            terms.push_back(sphere::sphere_generic_term(n));
        }
    } else if (o.geometry == "cylinder") {
        for (int n = 1; n <= o.terms; ++n) {
            terms.push_back(cylinder::cylinder_n_term(n));
        }
        stride = 2;
    } else {
        throw std::invalid_argument("unknown geometry '" + o.geometry + "'");
    }
    const auto prefix = series::compensated_prefix_sums(terms);
    const int order = o.richardson_order;
    out << "N,partial_sum";
    for (int k = 1; k <= order; ++k) {
        out << ",order_" << k;
    }
    out << ",error_estimate\n";
    for (std::size_t count = 1; count <= prefix.size(); ++count) {
        out << count << ',' << format_number(prefix[count - 1]);
        const std::size_t needed = stride * static_cast<std::size_t>(order) + 1;
        if (count >= needed) {
            // Offsets from S_count, summed from the terms, as in the library.
            series::PartialSumSequence seq{count - stride * order, stride, {}};
            for (int i = 0; i <= order; ++i) {
                const std::size_t c = seq.first_count + stride * i;
                const std::span<const double> rest(terms.data() + c, count - c);
                seq.values.push_back(rest.empty() ? 0.0 : -series::compensated_sum(rest));
            }
            const auto table = series::richardson_table(seq, order);
            const double base = prefix[count - 1];
            for (int k = 1; k <= order; ++k) {
                out << ',' << format_number(base + table[k]);
            }
            out << ',' << format_number(series::richardson_limit(seq, {o.terms, order, o.tolerance}).error_estimate)
                << '\n';
        } else {
            for (int k = 0; k <= order; ++k) {
                out << ',';
            }
            out << '\n';
        }
    }
    return kExitOk;
}

int verify(std::ostream& out) {
    const auto results = verification::run_acceptance_suite();
    const bool all = verification::report(results, out);
    out << (all ? "all criteria passed" : "some criteria FAILED") << '\n';
    return all ? kExitOk : kExitComputationError;
}

}  // namespace

std::string format_number(double value) {
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.9g", value);
    return buf;
}

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"Periodic-orbit (semiclassical) Casimir self-energies of metallic spherical and "
                 "cylindrical shells",
                 "casimir-sce"};
    app.require_subcommand(1);
    Options o;
    const std::map<std::string, Format> formats{{"json", Format::Json}, {"csv", Format::Csv}, {"text", Format::Text}};

    auto add_common = [&](CLI::App* sub) {
        sub->add_option("--out", o.out_path, "Write output to this file instead of stdout");
    };
    auto add_plan = [&](CLI::App* sub) {
        sub->add_option("--terms", o.terms, "Explicitly summed terms")->capture_default_str()->check(CLI::PositiveNumber);
        sub->add_option("--richardson-order", o.richardson_order, "Richardson extrapolation order")
            ->capture_default_str()
            ->check(CLI::PositiveNumber);
        sub->add_option("--tolerance", o.tolerance, "Target tail tolerance")->capture_default_str();
    };
    auto add_format = [&](CLI::App* sub) {
        sub->add_option("--format", o.format, "Output format")
            ->transform(CLI::CheckedTransformer(formats, CLI::ignore_case))
            ->default_str("json");
    };

    auto* sphere_cmd = app.add_subcommand(
        "sphere-energy",
        "Sphere: sum_n 1/(16 pi n^4) + sum_{n>=2} 15 sqrt2/(256 n^4) sum_{w<n} cos(w pi/2n)/sin^2(w pi/2n), "
        "Richardson tail; coefficient of hbar c/R (0.04668)");
    add_plan(sphere_cmd);
    add_format(sphere_cmd);
    add_common(sphere_cmd);
    sphere_cmd->add_flag("--breakdown", o.breakdown, "Per-n term table as CSV");

    auto* cyl_cmd = app.add_subcommand(
        "cylinder-energy",
        "Cylinder: 15 sqrt2/(512 pi) sum_n (-1)^n (-1/2 + sum_w csc^2(w pi/2n))/n^4 x alpha factor; "
        "coefficient of hbar c L/R^2 (quadratic: 7 pi (7 pi^2 - 240)/276480)");
    cyl_cmd->add_option("--variant", o.variant, "Alpha-integral treatment")
        ->capture_default_str()
        ->check(CLI::IsMember({"quadratic", "expfit", "unbounded"}));
    add_plan(cyl_cmd);
    add_format(cyl_cmd);
    add_common(cyl_cmd);
    cyl_cmd->add_flag("--breakdown", o.breakdown, "Per-n term table as CSV");

    auto* wkb_cmd = app.add_subcommand(
        "wkb-zeros", "Disk WKB spectrum f_l(x) = sqrt(x^2-l^2) - l arccos(l/x) = pi(n + 1/2 +/- 1/4) vs exact "
                     "zeros of J_l (Dirichlet) and J'_l (Neumann)");
    wkb_cmd->add_option("--ell-max", o.ell_max, "Largest partial wave")->capture_default_str()->check(CLI::Range(0, 20));
    wkb_cmd->add_option("--n-max", o.n_max, "Largest radial index")->capture_default_str()->check(CLI::Range(0, 50));
    wkb_cmd->add_option("--bc", o.bc, "Boundary condition")->capture_default_str()->check(CLI::IsMember({"D", "N", "both"}));
    add_common(wkb_cmd);

    auto* orbit_cmd = app.add_subcommand(
        "orbit-table", "Periodic-orbit sectors (n,w): z = cos(w pi/n), L = 2 n R sin(w pi/n), Maslov 0 / 2n, "
                       "electromagnetic contribution iff n even");
    orbit_cmd->add_option("--n-max", o.orbit_n_max, "Largest reflection count")->capture_default_str()->check(CLI::Range(2, 10000));
    orbit_cmd->add_flag("--em-only", o.em_only, "Only sectors that contribute electromagnetically");
    add_common(orbit_cmd);

    auto* alpha_cmd = app.add_subcommand(
        "alpha-integral", "Longitudinal-momentum integral int_0^1 exp(-x sqrt(1-a^2)) da = (pi/2)(H_{-1}(ix) - I_1(x)) "
                          "vs its quadratic approximation and exp(-pi x/4)");
    alpha_cmd->add_option("--x", o.x_grid, "Explicit x values in [0, 30]");
    alpha_cmd->add_option("--x-max", o.x_max, "Upper end of a uniform grid")->capture_default_str()->check(CLI::Range(0.0, 30.0));
    alpha_cmd->add_option("--points", o.points, "Points on the uniform grid")->capture_default_str()->check(CLI::Range(1, 100000));
    add_common(alpha_cmd);

    auto* conv_cmd = app.add_subcommand(
        "convergence", "Partial sums and Richardson table in 1/N for the sphere generic sum or the cylinder "
                       "alternating series (same-parity partial sums)");
    conv_cmd->add_option("--geometry", o.geometry, "Which series")->capture_default_str()->check(CLI::IsMember({"sphere", "cylinder"}));
    add_plan(conv_cmd);
    add_common(conv_cmd);

    auto* verify_cmd = app.add_subcommand(
        "verify", "Run every acceptance criterion (closed-form anchors, both headline coefficients); exit 0 iff all pass");
    add_common(verify_cmd);

    std::vector<const char*> argv{"casimir-sce"};
    for (const auto& a : args) {
        argv.push_back(a.c_str());
    }
    try {
        app.parse(static_cast<int>(argv.size()), argv.data());
    } catch (const CLI::CallForHelp& e) {
        app.exit(e, out, err);
        return kExitOk;
    } catch (const CLI::CallForAllHelp& e) {
        app.exit(e, out, err);
        return kExitOk;
    } catch (const CLI::ParseError& e) {
        app.exit(e, out, err);
        return kExitUsage;
    }

    std::ostringstream buffer;
    int status = kExitOk;
    try {
        if (sphere_cmd->parsed()) {
            status = sphere_energy(o, buffer);
        } else if (cyl_cmd->parsed()) {
            status = cylinder_energy(o, buffer);
        } else if (wkb_cmd->parsed()) {
            status = wkb_zeros(o, buffer);
        } else if (orbit_cmd->parsed()) {
            status = orbit_table(o, buffer);
        } else if (alpha_cmd->parsed()) {
            status = alpha_integral(o, buffer);
        } else if (conv_cmd->parsed()) {
            status = convergence(o, buffer);
        } else if (verify_cmd->parsed()) {
            status = verify(buffer);
        }
    } catch (const std::invalid_argument& e) {
        err << "error: " << e.what() << '\n';
        return kExitUsage;
    } catch (const std::exception& e) {
        err << "error: " << e.what() << '\n';
        return kExitComputationError;
    }

    if (o.out_path.empty()) {
        out << buffer.str();
    } else {
        std::ofstream file(o.out_path);
        if (!file) {
            err << "error: cannot open " << o.out_path << '\n';
            return kExitComputationError;
        }
        file << buffer.str();
    }
    return status;
}

}  // namespace casimir::cli
