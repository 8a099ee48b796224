// SPDX-License-Identifier: Apache-2.0
//
// risplan - RIS coverage planning and link-budget toolkit for mobile networks
// Copyright (C) 2026 The risplan authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
// http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.
// ------------------------------------------------------------------------

#include "risplan/comparison.hpp"
#include "risplan/dimensioning.hpp"
#include "risplan/errors.hpp"
#include "risplan/placement.hpp"
#include "risplan/propagation.hpp"
#include "risplan/report.hpp"
#include "risplan/scene.hpp"
#include "risplan/table.hpp"

#include <CLI11.hpp>

#include <cstdio>
#include <filesystem>
#include <string>
#include <vector>

namespace
{

using namespace risplan;
namespace fs = std::filesystem;

// Exit codes: 0 success, 2 usage, 3 validation/domain, 4 I/O.
constexpr int kExitUsage = 2;
constexpr int kExitValidation = 3;
constexpr int kExitIo = 4;

struct GlobalOptions
{
    std::string scene_path;
    std::string out_dir = ".";
    std::vector<std::string> formats; // empty = all
};

bool wants(const GlobalOptions &opts, const std::string &format)
{
    if (opts.formats.empty())
        return true;
    for (const auto &f : opts.formats)
        if (f == format)
            return true;
    return false;
}

Scene load_required_scene(const GlobalOptions &opts)
{
    if (opts.scene_path.empty())
        throw CLI::ValidationError("--scene", "a scene file is required for this command");
    return load_scene(opts.scene_path);
}

fs::path prepare_out_dir(const GlobalOptions &opts)
{
    const fs::path dir(opts.out_dir);
    std::error_code ec;
    fs::create_directories(dir, ec);
    if (ec)
        throw io_error("cannot create output directory " + dir.string() + ": " + ec.message());
    return dir;
}

std::string ghz_tag(double frequency_hz)
{
    return format_number(frequency_hz / 1.0e9) + "GHz";
}

CoverageGrid bs_only_coverage(const Scene &scene)
{
    CoverageGrid coverage;
    coverage.grid = scene.grid;
    const auto visible = los_grid(scene, scene.bs);
    coverage.labels.resize(visible.size());
    for (std::size_t i = 0; i < visible.size(); ++i)
        coverage.labels[i] = visible[i] ? kLabelBsLos : kLabelUncovered;
    return coverage;
}

void run_los_map(const GlobalOptions &opts)
{
    const Scene scene = load_required_scene(opts);
    const fs::path dir = prepare_out_dir(opts);
    const CoverageGrid coverage = bs_only_coverage(scene);
    if (wants(opts, "csv"))
        write_coverage_csv(coverage, dir / "los_map.csv");
    if (wants(opts, "pgm"))
        write_coverage_pgm(coverage, dir / "los_map.pgm");
    int covered = 0;
    for (const int label : coverage.labels)
        covered += label == kLabelBsLos ? 1 : 0;
    std::printf("bs covers %d of %d grid points\n", covered, scene.grid.size());
}

void run_place(const GlobalOptions &opts, int ris_count)
{
    const Scene scene = load_required_scene(opts);
    const fs::path dir = prepare_out_dir(opts);

    const PlacementPlan plan = greedy_place(scene, ris_count);
    const CoverageReport report = coverage_report(scene, plan);

    if (wants(opts, "json"))
        write_plan_json(plan, dir / "plan.json");
    if (wants(opts, "csv"))
        write_coverage_csv(report.grid, dir / "coverage.csv");
    if (wants(opts, "pgm"))
        write_coverage_pgm(report.grid, dir / "coverage.pgm");
    write_summary_text(plan, report.summary, dir / "summary.txt");

    std::fputs(summary_text(plan, report.summary).c_str(), stdout);
    if (plan.truncated)
        std::printf("note: only %zu candidate(s) available, plan truncated\n",
                    plan.placements.size());
}

struct DimensionArgs
{
    double frequency_hz = 6.0e9;
    std::string mode; // empty = both
    double fixed_tx_ris_m = 20.0;
    double blockage_db = 20.0;
    std::vector<std::int64_t> n_values;
    double dmin = -1.0, dmax = -1.0, dstep = -1.0;
};

void run_dimension(const GlobalOptions &opts, const DimensionArgs &args)
{
    const fs::path dir = prepare_out_dir(opts);

    LinkModelParams params = LinkModelParams::for_frequency(args.frequency_hz);
    params.blockage_db = args.blockage_db;

    // Element-count presets per band when none are given.
    std::vector<std::int64_t> n_values = args.n_values;
    if (n_values.empty())
        n_values = args.frequency_hz < 15.0e9 ? std::vector<std::int64_t>{121, 484}
                                              : std::vector<std::int64_t>{625, 2500};

    struct ModeSpec
    {
        GeometryMode mode;
        DistanceRange range;
    };
    std::vector<ModeSpec> specs;
    if (args.mode.empty() || args.mode == "symmetric")
        specs.push_back({GeometryMode::kSymmetric, {10.0, 150.0, 1.0}});
    if (args.mode.empty() || args.mode == "fixed-rho-t")
        specs.push_back({GeometryMode::kFixedTxRis, {20.0, 100.0, 1.0}});

    for (auto &spec : specs)
    {
        if (args.dmin > 0.0)
            spec.range.start_m = args.dmin;
        if (args.dmax > 0.0)
            spec.range.stop_m = args.dmax;
        if (args.dstep > 0.0)
            spec.range.step_m = args.dstep;

        DimensioningQuery query;
        query.params = params;
        query.mode = spec.mode;
        query.fixed_tx_ris_m = args.fixed_tx_ris_m;

        const std::string tag = spec.mode == GeometryMode::kSymmetric
                                    ? std::string("symmetric")
                                    : "rhot" + format_number(args.fixed_tx_ris_m);
        const std::string suffix = tag + "_" + ghz_tag(args.frequency_hz) + ".csv";
        if (wants(opts, "csv"))
        {
            write_csv(pathloss_curve(query, n_values, spec.range), dir / ("pathloss_" + suffix));
            write_csv(dimensioning_curve(query, spec.range), dir / ("dimensioning_" + suffix));
            std::printf("wrote pathloss_%s and dimensioning_%s\n", suffix.c_str(),
                        suffix.c_str());
        }
    }
}

struct CompareArgs
{
    std::vector<double> frequencies{6.0e9, 27.0e9};
    std::vector<std::int64_t> n_values{25, 250};
    bool with_ee = false;
    double overhead_w = 0.0;
    double d1_min = 20.0, d1_max = 120.0, d1_step = 1.0;
};

void run_compare(const GlobalOptions &opts, const CompareArgs &args)
{
    const fs::path dir = prepare_out_dir(opts);
    for (const double f : args.frequencies)
    {
        ComparisonSetup setup;
        setup.params = LinkModelParams::for_frequency(f);
        setup.d1_range = {args.d1_min, args.d1_max, args.d1_step};
        const Table table = power_sweep(setup, args.n_values, args.with_ee, args.overhead_w);
        if (wants(opts, "csv"))
        {
            const std::string name = "power_sweep_" + ghz_tag(f) + ".csv";
            write_csv(table, dir / name);
            std::printf("wrote %s\n", name.c_str());
        }
    }
}

void print_loss(double loss_db)
{
    std::printf("%s dB\n", format_number(loss_db).c_str());
}

} // namespace

int main(int argc, char **argv)
{
    CLI::App app{"risplan: LOS coverage planning, RIS dimensioning, and link budgets"};
    app.require_subcommand(1);
    app.fallthrough();

    GlobalOptions opts;
    app.add_option("--scene", opts.scene_path, "Scene JSON file");
    app.add_option("--out", opts.out_dir, "Output directory")->capture_default_str();
    app.add_option("--format", opts.formats, "Restrict outputs (csv, pgm, json)")
        ->check(CLI::IsMember({"csv", "pgm", "json"}));

    // los-map
    CLI::App *los = app.add_subcommand("los-map", "BS-only LOS coverage map");
    los->callback([&] { run_los_map(opts); });

    // place
    int ris_count = 1;
    CLI::App *place = app.add_subcommand("place", "Greedy multi-RIS placement");
    place->add_option("--k", ris_count, "Number of RIS to place")
        ->required()
        ->check(CLI::PositiveNumber);
    place->callback([&] { run_place(opts, ris_count); });

    // dimension
    DimensionArgs dim;
    CLI::App *dimension = app.add_subcommand("dimension", "RIS sizing curves");
    dimension->add_option("--freq", dim.frequency_hz, "Carrier frequency, Hz")
        ->capture_default_str();
    dimension->add_option("--mode", dim.mode, "Sweep geometry (default: both)")
        ->check(CLI::IsMember({"fixed-rho-t", "symmetric"}));
    dimension->add_option("--rho-t", dim.fixed_tx_ris_m, "Fixed Tx-RIS distance, m")
        ->capture_default_str();
    dimension->add_option("--blockage-db", dim.blockage_db, "Direct-path blockage, dB")
        ->capture_default_str();
    dimension->add_option("--n", dim.n_values, "RIS element counts (default per band)");
    dimension->add_option("--dmin", dim.dmin, "Sweep start, m");
    dimension->add_option("--dmax", dim.dmax, "Sweep stop, m");
    dimension->add_option("--dstep", dim.dstep, "Sweep step, m");
    dimension->callback([&] { run_dimension(opts, dim); });

    // compare
    CompareArgs cmp;
    CLI::App *compare = app.add_subcommand("compare", "SISO / relay / RIS transmit power");
    compare->add_option("--freq", cmp.frequencies, "Frequencies, Hz (default 6e9 27e9)");
    compare->add_option("--n", cmp.n_values, "RIS element counts (default 25 250)");
    compare->add_flag("--ee", cmp.with_ee, "Add energy-efficiency columns");
    compare->add_option("--overhead-w", cmp.overhead_w, "Static power overhead, W")
        ->capture_default_str();
    compare->add_option("--d1-min", cmp.d1_min, "UE sweep start, m")->capture_default_str();
    compare->add_option("--d1-max", cmp.d1_max, "UE sweep stop, m")->capture_default_str();
    compare->add_option("--d1-step", cmp.d1_step, "UE sweep step, m")->capture_default_str();
    compare->callback([&] { run_compare(opts, cmp); });

    // pathloss <model>
    CLI::App *pathloss = app.add_subcommand("pathloss", "Evaluate one propagation model");
    pathloss->require_subcommand(1);

    double f_hz = 0.0, lambda_m = 0.0, d_m = 0.0;
    const auto wavelength = [&]() -> double {
        if (lambda_m > 0.0)
            return lambda_m;
        if (f_hz > 0.0)
            return kSpeedOfLight / f_hz;
        throw CLI::ValidationError("pathloss", "provide --f or --lambda");
    };

    CLI::App *fspl = pathloss->add_subcommand("fspl", "Free-space path loss");
    fspl->add_option("--f", f_hz, "Frequency, Hz");
    fspl->add_option("--lambda", lambda_m, "Wavelength, m");
    fspl->add_option("--d", d_m, "Distance, m")->required();
    fspl->callback([&] { print_loss(gain_to_loss_db(fspl_gain(wavelength(), d_m))); });

    bool nlos = false;
    CLI::App *umi = pathloss->add_subcommand("umi", "Urban-micro street canyon");
    umi->add_option("--f", f_hz, "Frequency, Hz")->required();
    umi->add_option("--d", d_m, "Distance, m")->required();
    umi->add_flag("--nlos", nlos, "Use the NLOS branch");
    umi->callback([&] { print_loss(gain_to_loss_db(umi_path_gain(f_hz, d_m, !nlos))); });

    double h_tx = 10.0, h_rx = 1.5, gamma = -1.0;
    CLI::App *two_ray = pathloss->add_subcommand("two-ray", "Ground-reflection model");
    two_ray->add_option("--f", f_hz, "Frequency, Hz");
    two_ray->add_option("--lambda", lambda_m, "Wavelength, m");
    two_ray->add_option("--d", d_m, "Ground distance, m")->required();
    two_ray->add_option("--ht", h_tx, "Tx height, m")->capture_default_str();
    two_ray->add_option("--hr", h_rx, "Rx height, m")->capture_default_str();
    two_ray->add_option("--gamma", gamma, "Ground reflection coefficient")
        ->capture_default_str();
    two_ray->callback(
        [&] { print_loss(gain_to_loss_db(two_ray_gain(wavelength(), d_m, h_tx, h_rx, gamma))); });

    double v = 0.0, d1 = 0.0, d2 = 0.0, edge_h = 0.0;
    CLI::App *knife = pathloss->add_subcommand("knife", "Single knife-edge diffraction");
    CLI::Option *v_opt = knife->add_option("--v", v, "Fresnel parameter (direct)");
    knife->add_option("--f", f_hz, "Frequency, Hz");
    knife->add_option("--lambda", lambda_m, "Wavelength, m");
    CLI::Option *d1_opt = knife->add_option("--d1", d1, "Tx-edge distance, m");
    knife->add_option("--d2", d2, "Edge-Rx distance, m");
    knife->add_option("--edge-h", edge_h, "Edge height above the direct line, m");
    knife->callback([&] {
        if (v_opt->count())
        {
            print_loss(knife_edge_loss_from_v_db(v));
            return;
        }
        if (!d1_opt->count())
            throw CLI::ValidationError("knife",
                                       "provide --v, or --d1 --d2 --edge-h with --f/--lambda");
        print_loss(knife_edge_loss_db(wavelength(), d1, d2, edge_h));
    });

    std::int64_t n_elements = 1;
    double rho_t = 20.0, rho_r = 40.0, theta_i = 0.0, theta_r = 0.0, alpha = 1.0;
    double elem_size = 0.0;
    CLI::App *ris = pathloss->add_subcommand("ris", "RIS-assisted hop");
    ris->add_option("--f", f_hz, "Frequency, Hz")->required();
    ris->add_option("--n", n_elements, "Element count")->required();
    ris->add_option("--rho-t", rho_t, "Tx-RIS distance, m")->capture_default_str();
    ris->add_option("--rho-r", rho_r, "RIS-Rx distance, m")->capture_default_str();
    ris->add_option("--theta-i", theta_i, "Incidence angle, deg")->capture_default_str();
    ris->add_option("--theta-r", theta_r, "Departure angle, deg")->capture_default_str();
    ris->add_option("--alpha", alpha, "Unit-cell amplitude")->capture_default_str();
    ris->add_option("--elem-size", elem_size, "Element edge, m (default lambda/2)");
    ris->callback([&] {
        LinkModelParams params = LinkModelParams::for_frequency(f_hz);
        params.ris_elements = n_elements;
        params.ris_amplitude = alpha;
        if (elem_size > 0.0)
            params.element_size_m = elem_size;
        PathGeometry geom{1.0, rho_t, rho_r};
        print_loss(gain_to_loss_db(ris_path_gain(params, geom, theta_i, theta_r)));
    });

    try
    {
        app.parse(argc, argv);
    }
    catch (const CLI::ParseError &e)
    {
        const int code = app.exit(e);
        return code == 0 ? 0 : kExitUsage;
    }
    catch (const io_error &e)
    {
        std::fprintf(stderr, "error: %s\n", e.what());
        return kExitIo;
    }
    catch (const std::filesystem::filesystem_error &e)
    {
        std::fprintf(stderr, "error: %s\n", e.what());
        return kExitIo;
    }
    catch (const validation_error &e)
    {
        std::fprintf(stderr, "error: %s\n", e.what());
        return kExitValidation;
    }
    catch (const std::domain_error &e)
    {
        std::fprintf(stderr, "error: %s\n", e.what());
        return kExitValidation;
    }
    catch (const std::invalid_argument &e)
    {
        std::fprintf(stderr, "error: %s\n", e.what());
        return kExitValidation;
    }
    catch (const std::exception &e)
    {
        std::fprintf(stderr, "internal error: %s\n", e.what());
        return 1;
    }
    return 0;
}
