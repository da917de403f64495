#include "squiral/errors.hpp"
#include "squiral/factor.hpp"
#include "squiral/io.hpp"
#include "squiral/riesz.hpp"
#include "squiral/substitution.hpp"
#include "squiral/wiener.hpp"

#include <CLI11.hpp>

#include <cmath>
#include <fstream>
#include <iostream>
#include <sstream>

namespace {

using namespace squiral;

struct Common {
    std::string map_source = "builtin:squiral";
    int threads = 1;
    std::size_t memory_budget = 0; // 0 = env var / default
};

std::size_t budget(const Common& c) {
    return c.memory_budget ? c.memory_budget : default_memory_budget();
}

std::ofstream open_out(const std::string& path) {
    std::ofstream out(path);
    if (!out) throw input_error("cannot open output file '" + path + "'");
    return out;
}

std::string stamp_header(const std::string& tool, const std::string& args) {
    return "squiral " + tool + "\n" + args;
}

// ---------------------------------------------------------------- generate

int run_generate(const Common& common, int iterations, const std::string& out_path,
                 const std::string& format) {
    const BlockMap map = load_map(common.map_source);
    const SeedCycle cycle = find_seed_cycle(map);
    const LatticePatch patch = generate_fixed_patch(map, cycle, iterations, budget(common));

    std::ostringstream args;
    args << "map " << common.map_source << "\niterations " << iterations << "\nseed period "
         << cycle.period;
    const std::string stamp = stamp_header("generate", args.str());

    auto out = open_out(out_path);
    if (format == "csv")
        write_patch_csv(out, patch, stamp);
    else
        write_patch_pgm(out, patch, stamp);
    std::cout << "wrote " << out_path << " (" << patch.cells() << " cells, seed period "
              << cycle.period << ")\n";
    return 0;
}

// ---------------------------------------------------------------- autocorr

int run_autocorr(const Common& common, Int box, const std::string& out_path,
                 bool brute, Int brute_window) {
    const BlockMap map = load_map(common.map_source);

    std::ostringstream args;
    args << "map " << common.map_source << "\nbox " << box;

    auto out = open_out(out_path);
    if (!brute) {
        EtaTable table(recursion_coeffs(map));
        write_eta_csv(out, table, box, stamp_header("autocorr", args.str()));
    } else {
        // Choose the smallest n with K_i^n >= window + box on every axis, so
        // the centered patch covers the averaging window and all its shifts.
        const SeedCycle cycle = find_seed_cycle(map);
        int n = 1;
        for (int i = 0; i < map.dim(); ++i) {
            Int side = map.size[i];
            int ni = 1;
            while (side < brute_window + box) {
                side *= map.size[i];
                ++ni;
            }
            n = std::max(n, ni);
        }
        const LatticePatch patch = generate_fixed_patch(map, cycle, n, budget(common));
        args << "\nwindow " << brute_window << "\npatch iterations " << n;
        write_eta_brute_csv(out, patch, box, brute_window,
                            stamp_header("autocorr --brute", args.str()));
    }
    std::cout << "wrote " << out_path << "\n";
    return 0;
}

// ---------------------------------------------------------------- wiener

int run_wiener(const Common& common, int levels, const std::string& out_path) {
    const BlockMap map = load_map(common.map_source);
    EtaTable table(recursion_coeffs(map));
    const WienerReport report = wiener_sums(table, levels);

    std::ostringstream args;
    args << "map " << common.map_source << "\nlevels " << levels;
    auto out = open_out(out_path);
    write_wiener_csv(out, report, stamp_header("wiener", args.str()));
    std::cout << "wrote " << out_path << " (verdict " << to_string(report.verdict)
              << ", fitted exponent " << format_double(report.fitted_exponent) << ")\n";
    return 0;
}

// ---------------------------------------------------------------- classify

int run_classify(const Common& common, int levels) {
    const BlockMap map = load_map(common.map_source);
    const SpectralVerdict verdict = classify(map, levels);

    std::cout << "The diffraction spectrum of '" << common.map_source << "' is "
              << (verdict.purity == "pure" ? "spectrally pure and singular" : "unclassified")
              << "; the Wiener trend reads " << to_string(verdict.continuous) << ".\n";
    std::cout << "purity=" << verdict.purity << "\n";
    std::cout << "singular=" << (verdict.singular ? "true" : "false") << "\n";
    std::cout << "continuity_verdict=" << to_string(verdict.continuous) << "\n";
    std::cout << "conclusion=" << to_string(verdict.conclusion) << "\n";
    std::cout << "notes=" << verdict.notes << "\n";
    return 0;
}

// ---------------------------------------------------------------- riesz

int run_riesz(const Common& common, const std::string& what, int level, Int grid, Int order,
              int section, const std::string& out_path, const std::string& format) {
    const BlockMap map = load_map(common.map_source);
    CoeffTable coeffs = recursion_coeffs(map);
    if (section >= 0) {
        if (section >= coeffs.dim()) throw input_error("section axis out of range");
        coeffs = axis_section(coeffs, section);
    }

    std::ostringstream args;
    args << "map " << common.map_source << "\nquantity " << what << "\nlevel " << level
         << "\ngrid " << grid;
    if (section >= 0) args << "\nsection axis " << section;

    GridFunction result;
    if (what == "density") {
        result = density(build_kernel(coeffs), level, grid, common.threads);
    } else if (what == "distribution") {
        result = distribution(series_coeffs(coeffs, level, budget(common)), grid, common.threads);
    } else if (what == "distribution-via-eta") {
        EtaTable table(coeffs);
        args << "\norder " << order;
        result = distribution_via_eta(table, order, grid, common.threads);
    } else {
        throw input_error("unknown quantity '" + what +
                          "' (density, distribution, distribution-via-eta)");
    }

    const std::string stamp = stamp_header("riesz", args.str());
    auto out = open_out(out_path);
    if (format == "pgm") {
        const std::string scale = write_grid_pgm(out, result, stamp);
        auto side = open_out(out_path + ".scale");
        side << scale << "\n";
        std::cout << "wrote " << out_path << " and " << out_path << ".scale\n";
    } else {
        write_grid_csv(out, result, stamp);
        std::cout << "wrote " << out_path << "\n";
    }
    return 0;
}

// ---------------------------------------------------------------- factor

int run_factor(const Common& common, int iterations, const std::string& out_path,
               bool check_consistency, bool check_model_set, int fiber_samples,
               Int fiber_window) {
    const BlockMap map = load_map(common.map_source);
    if (map.dim() != 2 || map.size != Dims{3, 3})
        throw input_error("the factor pipeline is specific to 3x3 rules on Z^2");

    const SeedCycle cycle = find_seed_cycle(map);
    const LatticePatch patch = generate_fixed_patch(map, cycle, iterations, budget(common));
    const LatticePatch image = psi(patch);

    if (!out_path.empty()) {
        std::ostringstream args;
        args << "map " << common.map_source << "\niterations " << iterations
             << "\nsliding 2x2 product image";
        auto out = open_out(out_path);
        write_patch_pgm(out, image, stamp_header("factor", args.str()));
        std::cout << "wrote " << out_path << "\n";
    }

    if (check_consistency) {
        // On every legal seed window w: psi(rho^2 w) == sigma^2(psi w) where
        // sigma is the induced 3x3 inflation (compared on the common support).
        int checked = 0;
        for (const auto& values : legal_seed_windows(map)) {
            LatticePatch w;
            w.origin = {0, 0};
            w.shape = {2, 2};
            w.values = values;
            const LatticePatch lhs = psi(substitute(substitute(w, map), map));
            const LatticePatch rhs = induced_substitute(induced_substitute(psi(w)));
            // Compare on the support of the smaller (induced) side.
            const LatticePatch cut = restrict_to(lhs, rhs.origin, rhs.shape);
            if (!same_patch(cut, rhs))
                throw internal_error("factor semiconjugacy failed on a legal window");
            ++checked;
        }
        std::cout << "semiconjugacy check passed on " << checked << " legal windows\n";
    }

    if (check_model_set) {
        // Ground truth: compare psi(fixed patch) on its full support against
        // lambda membership, auto-detecting the branch at (-1,-1).
        const int sign_at_corner =
            image.at({-1, -1}) > 0 ? 1 : -1;
        const ModelSetBranch branch = sign_at_corner > 0 ? ModelSetBranch::A_plus_nonempty
                                                         : ModelSetBranch::A_minus_nonempty;
        Int agree = 0, total = 0;
        Point rel(2, 0);
        do {
            const Point p{image.origin[0] + rel[0], image.origin[1] + rel[1]};
            const int sign = image.at(p) > 0 ? 1 : -1;
            const bool in_plus = lambda_membership(p[0], p[1], 1, branch);
            const bool in_minus = lambda_membership(p[0], p[1], -1, branch);
            if (in_plus == !in_minus && in_plus == (sign > 0)) ++agree;
            ++total;
        } while (next_cell(rel, image.shape));
        std::cout << "model-set membership matches the factor image at " << agree << "/" << total
                  << " points (branch " << (sign_at_corner > 0 ? "A+" : "A-") << ")\n";
        if (agree != total) throw internal_error("model-set description disagrees with psi image");
        std::cout << "factor Fourier module: " << factor_fourier_module() << "\n";
    }

    if (fiber_samples > 0) {
        const FiberReport rep = fiber_statistics(patch, fiber_window, fiber_samples);
        std::cout << "fiber statistics: " << rep.exactly_two << "/" << rep.samples
                  << " windows with exactly 2 preimages (range " << rep.min_preimages
                  << ".." << rep.max_preimages << ", flip-closed "
                  << (rep.flip_closed ? "yes" : "no") << ")\n";
        if (rep.more_than_two > 0)
            std::cout << "note: " << rep.more_than_two
                      << " windows exceed 2 preimages; the factor map is not globally 2-to-1\n";
    }
    return 0;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"Exact autocorrelation and diffraction toolkit for binary block substitutions"};
    app.require_subcommand(1);
    app.fallthrough(); // accept the global options after the subcommand name too

    Common common;
    app.add_option("-m,--map", common.map_source,
                   "substitution source: builtin:squiral or a file path")
        ->capture_default_str();
    app.add_option("-t,--threads", common.threads, "worker threads (results are identical)")
        ->check(CLI::Range(1, 64))
        ->capture_default_str();
    app.add_option("--memory-budget", common.memory_budget,
                   "byte budget for large tables (default: SQUIRAL_MEMORY_BUDGET or 2 GiB)");

    // generate
    int gen_iterations = 2;
    std::string gen_out = "patch.csv", gen_format = "csv";
    auto* gen = app.add_subcommand("generate", "grow a fixed-point patch of the substitution");
    gen->add_option("-n,--iterations", gen_iterations, "inflation steps")
        ->check(CLI::Range(1, 32))
        ->capture_default_str();
    gen->add_option("-o,--out", gen_out, "output file")->capture_default_str();
    gen->add_option("--format", gen_format, "csv or pgm")
        ->check(CLI::IsMember({"csv", "pgm"}))
        ->capture_default_str();

    // autocorr
    Int ac_box = 10, ac_window = 729;
    std::string ac_out = "autocorr.csv";
    bool ac_brute = false;
    auto* ac = app.add_subcommand("autocorr", "exact autocorrelation coefficients on a box");
    ac->add_option("-b,--box", ac_box, "emit lags with |m_i| <= box")
        ->check(CLI::Range(Int{0}, Int{100000}))
        ->capture_default_str();
    ac->add_option("-o,--out", ac_out, "output CSV")->capture_default_str();
    ac->add_flag("--brute", ac_brute, "finite-window averages from a patch instead of exact values");
    ac->add_option("--window", ac_window, "averaging window side for --brute")
        ->check(CLI::Range(Int{1}, Int{100000}))
        ->capture_default_str();

    // wiener
    int wi_levels = 5;
    std::string wi_out = "wiener.csv";
    auto* wi = app.add_subcommand("wiener", "exact Wiener sums over inflation windows");
    wi->add_option("-l,--levels", wi_levels, "number of inflation levels")
        ->check(CLI::Range(2, 20))
        ->capture_default_str();
    wi->add_option("-o,--out", wi_out, "output CSV")->capture_default_str();

    // classify
    int cl_levels = 5;
    auto* cl = app.add_subcommand("classify", "spectral type of the diffraction measure");
    cl->add_option("-l,--levels", cl_levels, "Wiener levels for the continuity trend")
        ->check(CLI::Range(2, 20))
        ->capture_default_str();

    // riesz
    std::string rz_what = "density", rz_out = "riesz.csv", rz_format = "csv";
    int rz_level = 3, rz_section = -1;
    Int rz_grid = 243, rz_order = 81;
    auto* rz = app.add_subcommand("riesz", "density / distribution approximants on a grid");
    rz->add_option("-q,--quantity", rz_what, "density, distribution, or distribution-via-eta")
        ->check(CLI::IsMember({"density", "distribution", "distribution-via-eta"}))
        ->capture_default_str();
    rz->add_option("-l,--level", rz_level, "approximation level N")
        ->check(CLI::Range(0, 12))
        ->capture_default_str();
    rz->add_option("-g,--grid", rz_grid, "samples per axis")
        ->check(CLI::Range(Int{2}, Int{100000}))
        ->capture_default_str();
    rz->add_option("--order", rz_order, "lag truncation |m_i| <= order for the via-eta route")
        ->check(CLI::Range(Int{0}, Int{100000}))
        ->capture_default_str();
    rz->add_option("--section", rz_section, "restrict to one axis (1D section) before computing")
        ->check(CLI::Range(0, 7));
    rz->add_option("-o,--out", rz_out, "output file")->capture_default_str();
    rz->add_option("--format", rz_format, "csv or pgm (pgm writes a .scale sidecar)")
        ->check(CLI::IsMember({"csv", "pgm"}))
        ->capture_default_str();

    // factor
    int fa_iterations = 5, fa_samples = 0;
    Int fa_window = 5;
    std::string fa_out;
    bool fa_consistency = false, fa_model_set = false;
    auto* fa = app.add_subcommand("factor", "sliding 2x2 product factor and its model set");
    fa->add_option("-n,--iterations", fa_iterations, "inflation steps for the source patch")
        ->check(CLI::Range(1, 12))
        ->capture_default_str();
    fa->add_option("-o,--out", fa_out, "optional PGM of the factor image");
    fa->add_flag("--check-consistency", fa_consistency,
                 "verify the induced inflation semiconjugacy on all legal windows");
    fa->add_flag("--check-model-set", fa_model_set,
                 "verify model-set membership against the factor image");
    fa->add_option("--fiber-samples", fa_samples, "sample count for preimage statistics")
        ->check(CLI::Range(0, 100000));
    fa->add_option("--fiber-window", fa_window, "factor window side for preimage statistics")
        ->check(CLI::Range(Int{1}, Int{64}))
        ->capture_default_str();

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        if (e.get_exit_code() == 0) return app.exit(e); // --help
        app.exit(e);
        return 2;
    }

    try {
        if (gen->parsed()) return run_generate(common, gen_iterations, gen_out, gen_format);
        if (ac->parsed()) return run_autocorr(common, ac_box, ac_out, ac_brute, ac_window);
        if (wi->parsed()) return run_wiener(common, wi_levels, wi_out);
        if (cl->parsed()) return run_classify(common, cl_levels);
        if (rz->parsed())
            return run_riesz(common, rz_what, rz_level, rz_grid, rz_order, rz_section, rz_out,
                             rz_format);
        if (fa->parsed())
            return run_factor(common, fa_iterations, fa_out, fa_consistency, fa_model_set,
                              fa_samples, fa_window);
        std::cerr << "no subcommand selected\n";
        return 2;
    } catch (const squiral::input_error& e) {
        std::cerr << "input error: " << e.what() << "\n";
        return 3;
    } catch (const squiral::budget_error& e) {
        std::cerr << "budget exceeded: " << e.what() << "\n";
        return 4;
    } catch (const std::exception& e) {
        std::cerr << "internal error: " << e.what() << "\n";
        return 5;
    }
}
