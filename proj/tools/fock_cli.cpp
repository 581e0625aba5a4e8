// Command-line front end: density profiles, interpolation residuals,
// frame-bound estimates, multiplicity reduction and the density phase scan.
// Machine-readable summaries go to JSON, tabular series to CSV; files land in
// the --out directory. Exit codes: 0 success, 2 validation error, 3 numeric
// failure.

#include "fock/config.hpp"
#include "fock/errors.hpp"
#include "fock/geometry.hpp"
#include "fock/interpolate.hpp"
#include "fock/kernels.hpp"
#include "fock/pointset_io.hpp"
#include "fock/potential.hpp"
#include "fock/reduction.hpp"
#include "fock/sampling.hpp"
#include "fock/weighted_ops.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <filesystem>
#include <fstream>
#include <iostream>

using json = nlohmann::json;
namespace fs = std::filesystem;

namespace {

struct CommonArgs {
    std::string set_file;
    std::string config_file;
    std::string out_dir = ".";
    long long seed = 0;
};

fock::Config load_config(const CommonArgs& args)
{
    fock::Config cfg;
    if (!args.config_file.empty()) cfg = fock::Config::from_file(args.config_file);
    return cfg;
}

fock::MultiSet load_set(const CommonArgs& args, const fock::Config& cfg)
{
    if (!args.set_file.empty()) return fock::read_pointset_file(args.set_file);
    if (cfg.has("set.file")) return fock::read_pointset_file(cfg.get_string("set.file", ""));
    if (cfg.has("set.spacing")) {
        return fock::MultiSet::lattice(cfg.get_double("set.spacing", 1.0),
                                       cfg.get_double("set.radius", 10.0),
                                       cfg.get_int("set.mult", 1));
    }
    throw fock::validation_error(
        "no point set: pass --set FILE or configure set.file / set.spacing");
}

fock::DiskRuleSpec quad_from_config(const fock::Config& cfg)
{
    fock::DiskRuleSpec spec;
    spec.n_radial = cfg.get_int("quad.nr", 64);
    spec.n_angular = cfg.get_int("quad.nt", 64);
    if (spec.n_radial < 4 || spec.n_angular < 4)
        throw fock::validation_error("quad.nr / quad.nt must be at least 4");
    return spec;
}

std::vector<std::string> with_common_keys(std::vector<std::string> keys)
{
    for (const auto& k : fock::weight_config_keys()) keys.push_back(k);
    for (const char* k : {"set.file", "set.spacing", "set.radius", "set.mult",
                          "quad.nr", "quad.nt", "seed"})
        keys.emplace_back(k);
    return keys;
}

void write_text(const fs::path& path, const std::string& text)
{
    std::ofstream out(path);
    if (!out) throw fock::validation_error("cannot write " + path.string());
    out << text;
}

void write_json(const fs::path& path, const json& j)
{
    write_text(path, j.dump(2) + "\n");
}

int cmd_density(const CommonArgs& args)
{
    const auto cfg = load_config(args);
    cfg.require_known(with_common_keys({"density.radii", "density.step_factor"}));
    const auto weight = fock::weight_from_config(cfg);
    const auto set = load_set(args, cfg);

    const auto radii = cfg.get_list("density.radii", {10.0, 20.0, 40.0});
    fock::ScanSpec scan;
    scan.step_factor = cfg.get_double("density.step_factor", 0.25);
    scan.quad = quad_from_config(cfg);

    if (set.empty())
        std::cerr << "warning: empty point set, densities are zero\n";
    const auto rep = fock::density_profile(set, *weight, radii, scan);

    std::string csv = "r,lower,upper\n";
    for (std::size_t i = 0; i < rep.radii.size(); ++i)
        csv += std::to_string(rep.radii[i]) + "," + std::to_string(rep.lower[i]) + "," +
               std::to_string(rep.upper[i]) + "\n";
    write_text(fs::path(args.out_dir) / "density.csv", csv);

    json j{{"radii", rep.radii},
           {"lower", rep.lower},
           {"upper", rep.upper},
           {"centers", rep.centers},
           {"headline_lower", rep.headline_lower},
           {"headline_upper", rep.headline_upper},
           {"headline", rep.headline},
           {"scan_note", rep.scan_note},
           {"points", set.size()},
           {"total_mass", set.total_mass()}};
    write_json(fs::path(args.out_dir) / "density.json", j);
    std::cout << "headline density " << rep.headline << " (lower " << rep.headline_lower
              << ", upper " << rep.headline_upper << ")\n";
    return 0;
}

int cmd_interp(const CommonArgs& args, const std::string& data_file)
{
    const auto cfg = load_config(args);
    cfg.require_known(with_common_keys({"interp.eps", "interp.global", "interp.n",
                                        "interp.radius", "interp.ridge"}));
    const auto weight = fock::weight_from_config(cfg);
    if (data_file.empty()) throw fock::validation_error("interp: pass --data FILE");
    const auto data = fock::read_interp_file(data_file);

    // With an explicit set, every constraint must respect the declared
    // multiplicity at its point.
    if (!args.set_file.empty() || cfg.has("set.file") || cfg.has("set.spacing")) {
        const auto set = load_set(args, cfg);
        for (const auto& p : data.points()) {
            bool found = false;
            for (std::size_t i = 0; i < set.size(); ++i) {
                if (set.point(i) == p.lambda) {
                    found = true;
                    if (static_cast<int>(p.values.size()) > set.mult(i))
                        throw fock::validation_error(
                            "interp: constraint order exceeds declared multiplicity at point");
                    break;
                }
            }
            if (!found)
                throw fock::validation_error("interp: data point not present in the set");
        }
    }

    const double eps = cfg.get_double("interp.eps", 0.5);
    json per_point = json::array();
    double max_residual = 0.0;
    for (const auto& p : data.points()) {
        const auto f = fock::build_local_interpolant(weight, p.lambda, eps, p.values);
        const auto ver = fock::verify_interpolant(f, *weight, p.values);
        double worst = 0.0;
        for (double r : ver.residuals) worst = std::max(worst, r);
        max_residual = std::max(max_residual, worst);
        per_point.push_back({{"re", p.lambda.real()},
                             {"im", p.lambda.imag()},
                             {"m", p.values.size()},
                             {"residuals", ver.residuals},
                             {"bound_ratio", f.bound_ratio(p.values)}});
    }

    json j{{"eps", eps}, {"max_residual", max_residual}, {"points", per_point}};
    if (cfg.get_int("interp.global", 0) != 0) {
        const int N = cfg.get_int("interp.n", 20);
        double R = cfg.get_double("interp.radius", 0.0);
        if (R <= 0.0) {
            double far = 0.0;
            for (const auto& p : data.points()) far = std::max(far, std::abs(p.lambda));
            R = far + 4.0;
        }
        fock::GlobalSolveOptions opts;
        opts.ridge = cfg.get_double("interp.ridge", 1e-10);
        opts.quad = quad_from_config(cfg);
        const auto sol = fock::global_interpolate_ls(data, *weight, N, R, opts);
        j["global"] = {{"n", N},
                       {"radius", R},
                       {"max_residual", sol.max_residual},
                       {"residuals", sol.residuals},
                       {"weighted_norm_sq", sol.weighted_norm_sq},
                       {"overdetermined", sol.overdetermined}};
    }
    write_json(fs::path(args.out_dir) / "interp.json", j);
    std::cout << "max local residual " << max_residual << "\n";
    return 0;
}

int cmd_sample(const CommonArgs& args)
{
    const auto cfg = load_config(args);
    cfg.require_known(with_common_keys({"sample.n", "sample.n_check", "sample.radius"}));
    const auto weight = fock::weight_from_config(cfg);
    const auto set = load_set(args, cfg);

    const int N = cfg.get_int("sample.n", 15);
    const int N2 = cfg.get_int("sample.n_check", std::max(5, N - 5));
    std::optional<double> R;
    if (cfg.has("sample.radius")) R = cfg.get_double("sample.radius", 0.0);

    const auto rep = fock::sampling_report(set, *weight, N, N2, R, quad_from_config(cfg));
    json j{{"A", rep.primary.A},
           {"B", rep.primary.B},
           {"N", rep.primary.N},
           {"R", rep.primary.R},
           {"check", {{"A", rep.check.A}, {"B", rep.check.B}, {"N", rep.check.N}}},
           {"consistent", rep.consistent},
           {"points", set.size()},
           {"total_mass", set.total_mass()}};
    if (rep.primary.spectrum.size() > 0) {
        j["spectrum"] = {{"min", rep.primary.spectrum(0)},
                         {"max", rep.primary.spectrum(rep.primary.spectrum.size() - 1)},
                         {"count", rep.primary.spectrum.size()}};
    }
    write_json(fs::path(args.out_dir) / "sample.json", j);
    std::cout << "A = " << rep.primary.A << ", B = " << rep.primary.B
              << " (N = " << N << ", consistent = " << (rep.consistent ? "yes" : "no")
              << ")\n";
    return 0;
}

int cmd_reduce(const CommonArgs& args)
{
    const auto cfg = load_config(args);
    cfg.require_known(with_common_keys({"reduce.epsilon", "reduce.rule", "reduce.n",
                                        "reduce.radii"}));
    const auto weight = fock::weight_from_config(cfg);
    const auto set = load_set(args, cfg);

    const double rho = fock::separation(set);
    double eps = cfg.get_double("reduce.epsilon", 0.0);
    if (eps <= 0.0) eps = 0.1 * std::min(rho / 2.0, 0.25);

    fock::DirectionRule rule = fock::DirectionRule::fixed_east;
    const std::string rule_name = cfg.get_string("reduce.rule", "east");
    if (rule_name == "radial") rule = fock::DirectionRule::radial;
    else if (rule_name == "seeded") rule = fock::DirectionRule::seeded;
    else if (rule_name != "east")
        throw fock::validation_error("reduce.rule must be east, radial or seeded");

    const auto plan = fock::reduce_set(set, eps, rule, static_cast<std::uint64_t>(args.seed));
    fock::write_pointset_file((fs::path(args.out_dir) / "reduced.csv").string(), plan.reduced);

    const auto radii = cfg.get_list("reduce.radii", {5.0, 10.0});
    fock::ScanSpec scan;
    scan.quad = quad_from_config(cfg);
    const auto before = fock::density_profile(set, *weight, radii, scan);
    const auto after = fock::density_profile(plan.reduced, *weight, radii, scan);
    double density_dev = 0.0;
    double tol = 0.0;
    for (std::size_t i = 0; i < radii.size(); ++i) {
        const double mid_b = 0.5 * (before.lower[i] + before.upper[i]);
        const double mid_a = 0.5 * (after.lower[i] + after.upper[i]);
        if (mid_b > 0.0)
            density_dev = std::max(density_dev, std::abs(mid_a - mid_b) / mid_b);
        tol = std::max(tol, fock::window_tolerance(*weight, radii[i], eps));
    }

    const int N = cfg.get_int("reduce.n", 20);
    const auto fb_before = fock::frame_bounds(set, *weight, N, std::nullopt, scan.quad);
    const auto fb_after = fock::frame_bounds(plan.reduced, *weight, N, std::nullopt, scan.quad);
    const double a_ratio = fb_before.A > 0.0 ? fb_after.A / fb_before.A : 0.0;

    json j{{"epsilon", eps},
           {"pairs", plan.pairs.size()},
           {"n_top", plan.n_top},
           {"mass_before", set.total_mass()},
           {"mass_after", plan.reduced.total_mass()},
           {"density_max_rel_dev", density_dev},
           {"density_window_tolerance", tol},
           {"density_match", density_dev <= tol},
           {"A_before", fb_before.A},
           {"A_after", fb_after.A},
           {"A_ratio", a_ratio},
           {"N", N}};
    write_json(fs::path(args.out_dir) / "reduce.json", j);
    std::cout << "reduced " << plan.pairs.size() << " points, mass " << set.total_mass()
              << " -> " << plan.reduced.total_mass() << ", A-ratio " << a_ratio << "\n";
    return 0;
}

int cmd_scan(const CommonArgs& args)
{
    const auto cfg = load_config(args);
    cfg.require_known(with_common_keys({"scan.spacings", "scan.mult", "scan.n",
                                        "scan.threshold", "scan.radius"}));

    const auto spacings = cfg.get_list("scan.spacings", {0.8, 0.9, 1.0, 1.1, 1.2, 1.3});
    const int mult = cfg.get_int("scan.mult", 1);
    const auto n_raw = cfg.get_list("scan.n", {15, 25});
    std::vector<int> n_list;
    for (double n : n_raw) n_list.push_back(static_cast<int>(n));
    const double alpha = cfg.get_double("weight.alpha", 3.14159265358979323846);
    if (cfg.get_string("weight.kind", "classical") != "classical")
        throw fock::validation_error("scan supports the classical weight only");

    fock::PhaseScanOptions opts;
    opts.quad = quad_from_config(cfg);
    if (cfg.has("scan.radius")) opts.R = cfg.get_double("scan.radius", 0.0);
    const auto table = fock::phase_scan(spacings, mult, alpha, n_list, opts);

    std::string csv = "s,density,A,B,N,R\n";
    for (const auto& row : table)
        csv += std::to_string(row.spacing) + "," + std::to_string(row.density) + "," +
               std::to_string(row.A) + "," + std::to_string(row.B) + "," +
               std::to_string(row.N) + "," + std::to_string(row.R) + "\n";
    write_text(fs::path(args.out_dir) / "phase.csv", csv);

    const double threshold = cfg.get_double("scan.threshold", 0.05);
    json intervals = json::array();
    for (int N : n_list) {
        std::vector<fock::PhasePoint> rows;
        for (const auto& row : table)
            if (row.N == N) rows.push_back(row);
        const auto ci = fock::locate_collapse(rows, threshold);
        intervals.push_back({{"N", N},
                             {"found", ci.found},
                             {"lo", ci.lo},
                             {"hi", ci.hi}});
        if (ci.found)
            std::cout << "N=" << N << ": A/B falls below " << threshold << " in ["
                      << ci.lo << ", " << ci.hi << "]\n";
        else
            std::cout << "N=" << N << ": no collapse in the scanned range\n";
    }
    json j{{"threshold", threshold}, {"mult", mult}, {"alpha", alpha},
           {"intervals", intervals}};
    write_json(fs::path(args.out_dir) / "scan.json", j);
    return 0;
}

} // namespace

int main(int argc, char** argv)
{
    CLI::App app{"weighted Fock space sampling and interpolation toolkit"};
    app.require_subcommand(1);

    CommonArgs args;
    std::string data_file;
    auto add_common = [&](CLI::App* sub) {
        sub->add_option("--set", args.set_file, "point-set CSV (re,im,mult)");
        sub->add_option("--config", args.config_file, "key=value config file");
        sub->add_option("--out", args.out_dir, "output directory");
        sub->add_option("--seed", args.seed, "seed for randomized choices");
    };

    auto* density = app.add_subcommand("density", "finite-radius weighted density profile");
    add_common(density);
    auto* interp = app.add_subcommand("interp", "local interpolant residuals");
    add_common(interp);
    interp->add_option("--data", data_file, "interpolation data CSV (re,im,j,c_re,c_im)");
    auto* sample = app.add_subcommand("sample", "finite-section frame bounds");
    add_common(sample);
    auto* reduce = app.add_subcommand("reduce", "multiplicity reduction");
    add_common(reduce);
    auto* scan = app.add_subcommand("scan", "density phase scan over lattice spacings");
    add_common(scan);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : 2;
    }

    try {
        if (!fs::exists(args.out_dir)) fs::create_directories(args.out_dir);
        if (density->parsed()) return cmd_density(args);
        if (interp->parsed()) return cmd_interp(args, data_file);
        if (sample->parsed()) return cmd_sample(args);
        if (reduce->parsed()) return cmd_reduce(args);
        if (scan->parsed()) return cmd_scan(args);
    } catch (const fock::validation_error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const fock::numeric_error& e) {
        std::cerr << "numeric error: " << e.what() << "\n";
        return 3;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 3;
    }
    return 0;
}
