#include <cstdlib>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>

#include <random>
#include <sstream>
#include <thread>

#include <CLI11.hpp>

#include "gca/json_io.hpp"
#include "gca/report_cache.hpp"

namespace {

using gca::Json;

constexpr const char* kBasisOrderVersion = "basis_v1";

struct CommandError : std::runtime_error {
    CommandError(const std::string& msg, int exit_code)
        : std::runtime_error(msg), code(exit_code) {}
    int code;
};

struct OutputOptions {
    std::string format = "json";
    std::string out_path;
};

void add_output_options(CLI::App* cmd, OutputOptions& opts) {
    cmd->add_option("--format", opts.format, "Output format")
        ->check(CLI::IsMember({"json", "csv", "pretty"}))
        ->capture_default_str();
    cmd->add_option("--out", opts.out_path, "Write the report to a file instead of stdout");
}

void emit(const OutputOptions& opts, const std::string& payload) {
    if (opts.out_path.empty()) {
        std::cout << payload;
        return;
    }
    std::ofstream out(opts.out_path, std::ios::trunc);
    if (!out) throw CommandError("cannot open output file " + opts.out_path, 2);
    out << payload;
}

std::string render_json(const Json& j) { return j.dump(2) + "\n"; }

Json read_json_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw CommandError("cannot read " + path, 2);
    try {
        return Json::parse(in);
    } catch (const std::exception& e) {
        throw CommandError(std::string("cannot parse ") + path + ": " + e.what(), 2);
    }
}

std::filesystem::path default_cache_dir() {
    if (const char* env = std::getenv("GCA_CACHE_DIR")) return env;
    return {};
}

// Exit code conventions: 0 pass, 1 verification failure, 2 usage error.
int run(int argc, char** argv) {
    CLI::App app{"Exact toolkit for the centrally extended planar Galilean conformal algebra"};
    app.require_subcommand(1);
    app.fallthrough();  // let --jobs appear after the subcommand
    int exit_code = 0;

    int jobs = static_cast<int>(std::thread::hardware_concurrency());
    app.add_option("--jobs", jobs, "Worker threads for trials and matrix rows")
        ->capture_default_str();

    // --- dim ---
    auto* dim_cmd = app.add_subcommand("dim", "Graded dimensions of the module");
    int dim_max_level = 5;
    OutputOptions dim_out;
    dim_cmd->add_option("--max-level", dim_max_level, "Largest level to report")
        ->capture_default_str();
    add_output_options(dim_cmd, dim_out);
    dim_cmd->callback([&]() {
        Json j;
        j["max_level"] = dim_max_level;
        Json dims = Json::array();
        for (int n = 0; n <= dim_max_level; ++n) dims.push_back(gca::pbw_basis(n).size());
        j["dims"] = dims;
        if (dim_out.format == "pretty") {
            std::string text = "level:";
            for (int n = 0; n <= dim_max_level; ++n) text += " " + std::to_string(n);
            text += "\ndim:  ";
            for (const auto& d : j["dims"]) text += " " + std::to_string(d.get<std::size_t>());
            emit(dim_out, text + "\n");
        } else if (dim_out.format == "csv") {
            std::string text = "level,dim\n";
            for (int n = 0; n <= dim_max_level; ++n) {
                text += std::to_string(n) + "," +
                        std::to_string(j["dims"][n].get<std::size_t>()) + "\n";
            }
            emit(dim_out, text);
        } else {
            emit(dim_out, render_json(j));
        }
    });

    // --- gram ---
    auto* gram_cmd = app.add_subcommand("gram", "Gram matrix of a level");
    int gram_level = 1;
    std::string gram_weights;
    std::string gram_cache_dir = default_cache_dir().string();
    bool gram_heavy = false;
    OutputOptions gram_out;
    gram_cmd->add_option("--level", gram_level, "Level")->required();
    gram_cmd->add_option("--weights", gram_weights,
                         "Evaluate at h=..,mu=..,rho1=..,rho2=..,alpha=..,beta=.. "
                         "(rational values; symbolic when omitted)");
    gram_cmd->add_option("--cache-dir", gram_cache_dir,
                         "Cache directory (default from GCA_CACHE_DIR)");
    gram_cmd->add_flag("--allow-heavy", gram_heavy, "Allow levels above 3");
    add_output_options(gram_cmd, gram_out);
    gram_cmd->callback([&]() {
        if (gram_level > 3 && !gram_heavy) {
            throw CommandError("level > 3 needs --allow-heavy", 2);
        }
        const gca::ReportCache cache{std::filesystem::path(gram_cache_dir)};
        const std::string request = std::string("gram|") + kBasisOrderVersion +
                                    "|level=" + std::to_string(gram_level) +
                                    "|weights=" + (gram_weights.empty() ? "symbolic" : gram_weights) +
                                    "|format=" + gram_out.format;
        if (auto hit = cache.load(request)) {
            emit(gram_out, *hit);
            return;
        }
        auto pretty_matrix = [&](const std::vector<std::vector<std::string>>& cells) {
            const auto basis = gca::pbw_basis(gram_level);
            std::string text = "level " + std::to_string(gram_level) + " basis:";
            for (const auto& b : basis) text += " " + b.str();
            text += "\n";
            for (const auto& row : cells) {
                for (std::size_t i = 0; i < row.size(); ++i) {
                    text += (i ? "  " : "") + row[i];
                }
                text += "\n";
            }
            return text;
        };
        std::string payload;
        if (gram_weights.empty()) {
            if (gram_out.format == "csv") {
                throw CommandError("csv needs --weights (symbolic entries are strings)", 2);
            }
            gca::VermaModule<gca::WeightPolynomial> module(gca::symbolic_weights());
            const auto entries = module.gram(gram_level);
            if (gram_out.format == "pretty") {
                std::vector<std::vector<std::string>> cells;
                for (const auto& row : entries) {
                    std::vector<std::string> line;
                    for (const auto& e : row) line.push_back(e.str());
                    cells.push_back(std::move(line));
                }
                payload = pretty_matrix(cells);
            } else {
                payload = render_json(gca::gram_to_json(gram_level, entries));
            }
        } else {
            const gca::WeightPoint point = gca::parse_weights(gram_weights);
            const gca::RationalMatrix m = gca::gram_evaluated(gram_level, point, jobs);
            if (gram_out.format == "csv") {
                payload = gca::gram_to_csv(m);
            } else if (gram_out.format == "pretty") {
                std::vector<std::vector<std::string>> cells;
                for (const auto& row : m) {
                    std::vector<std::string> line;
                    for (const auto& e : row) line.push_back(gca::to_string(e));
                    cells.push_back(std::move(line));
                }
                payload = pretty_matrix(cells);
            } else {
                payload = render_json(gca::gram_to_json(gram_level, m, point));
            }
        }
        cache.store(request, payload);
        emit(gram_out, payload);
    });

    // --- kac-power ---
    auto* power_cmd = app.add_subcommand("kac-power", "Determinant exponent by level");
    int power_level = 1;
    OutputOptions power_out;
    power_cmd->add_option("--level", power_level, "Level")->required();
    add_output_options(power_cmd, power_out);
    power_cmd->callback([&]() {
        const Json j = gca::to_json(gca::kac_power(power_level));
        if (power_out.format == "pretty") {
            emit(power_out, "level " + std::to_string(power_level) + ": power " +
                                j["power"].get<std::string>() + "\n");
        } else {
            emit(power_out, render_json(j));
        }
    });

    // --- kac-verify ---
    auto* verify_cmd = app.add_subcommand("kac-verify", "Determinant factorization harness");
    int verify_level = 1;
    int verify_trials = 5;
    std::uint64_t verify_seed = 1;
    bool verify_heavy = false;
    OutputOptions verify_out;
    verify_cmd->add_option("--level", verify_level, "Level")->required();
    verify_cmd->add_option("--trials", verify_trials, "Random weight draws")
        ->capture_default_str();
    verify_cmd->add_option("--seed", verify_seed, "Deterministic seed")->capture_default_str();
    verify_cmd->add_flag("--allow-heavy", verify_heavy, "Allow levels above 3");
    add_output_options(verify_cmd, verify_out);
    verify_cmd->callback([&]() {
        if (verify_level > 3 && !verify_heavy) {
            throw CommandError("level > 3 needs --allow-heavy", 2);
        }
        const gca::KacReport report =
            gca::verify_theorem(verify_level, verify_trials, verify_seed, jobs);
        if (!report.pass) exit_code = 1;
        if (verify_out.format == "pretty") {
            std::string text = "level " + std::to_string(report.level) + ": power " +
                               report.power.str() + ", K = " + gca::to_string(report.constant) +
                               (report.pass ? " [pass]" : " [FAIL]") + "\n";
            emit(verify_out, text);
        } else {
            emit(verify_out, render_json(gca::to_json(report)));
        }
    });

    // --- cocycle ---
    auto* cocycle_cmd = app.add_subcommand("cocycle", "Degree-zero central extensions");
    int cocycle_window = 6;
    OutputOptions cocycle_out;
    cocycle_cmd->add_option("--window", cocycle_window, "Mode window")->capture_default_str();
    add_output_options(cocycle_cmd, cocycle_out);
    cocycle_cmd->callback([&]() {
        const gca::CocycleReport report = gca::solve_cocycles(cocycle_window);
        // Pass when the Virasoro and current directions are present, the
        // coboundaries solve the system, and no P-P sector survives. The
        // dimension itself is reported, not asserted: the L-J sector
        // carries a third (mixed twist) direction.
        auto has_direction = [&report](const std::string& pair, int mode,
                                       const gca::Rational& value) {
            for (const auto& rep : report.representatives) {
                for (const auto& e : rep) {
                    if (e.pair == pair && e.mode == mode && e.value == value) return true;
                }
            }
            return false;
        };
        const bool ok = !report.exotic_possible && report.coboundaries_are_cocycles &&
                        has_direction("LL", 2, gca::Rational(1, 2)) &&
                        has_direction("JJ", 1, gca::Rational(1));
        if (!ok) exit_code = 1;
        if (cocycle_out.format == "pretty") {
            emit(cocycle_out, "window " + std::to_string(report.window) + ": dimension " +
                                  std::to_string(report.dimension) +
                                  (report.exotic_possible ? ", exotic sector present"
                                                          : ", no exotic sector") +
                                  (ok ? " [pass]" : " [FAIL]") + "\n");
        } else {
            emit(cocycle_out, render_json(gca::to_json(report)));
        }
    });

    // --- coad-apply ---
    auto* apply_cmd = app.add_subcommand("coad-apply", "Exact coadjoint action on a dual vector");
    std::string apply_current, apply_gamma;
    int apply_cap = gca::kDefaultTrigDegreeCap;
    OutputOptions apply_out;
    apply_cmd->add_option("--current", apply_current, "Current element JSON file")->required();
    apply_cmd->add_option("--gamma", apply_gamma, "Dual vector JSON file")->required();
    apply_cmd->add_option("--degree-cap", apply_cap, "Trig degree cap")->capture_default_str();
    add_output_options(apply_cmd, apply_out);
    apply_cmd->callback([&]() {
        if (apply_cap < 8) throw CommandError("--degree-cap must be at least 8", 2);
        const gca::CurrentElement x = gca::current_from_json(read_json_file(apply_current));
        const gca::DensityVector gamma = gca::density_from_json(read_json_file(apply_gamma));
        const gca::DensityVector moved = gca::coad_algebra(x, gamma, apply_cap);
        if (apply_out.format == "pretty") {
            emit(apply_out, "gamma0: " + moved.gamma0.str() + "\ngamma1: " + moved.gamma1.str() +
                                "\ngamma2: " + moved.gamma2.str() + "\ngamma3: " +
                                moved.gamma3.str() + "\n");
        } else {
            emit(apply_out, render_json(gca::to_json(moved)));
        }
    });

    // --- coad-check ---
    auto* check_cmd =
        app.add_subcommand("coad-check", "Randomized duality and representation checks");
    int check_trials = 100;
    std::uint64_t check_seed = 1;
    int check_degree = 3;
    OutputOptions check_out;
    check_cmd->add_option("--trials", check_trials, "Trials")->capture_default_str();
    check_cmd->add_option("--seed", check_seed, "Deterministic seed")->capture_default_str();
    check_cmd->add_option("--degree", check_degree, "Trig degree of random inputs")
        ->capture_default_str();
    add_output_options(check_cmd, check_out);
    check_cmd->callback([&]() {
        std::mt19937_64 rng(check_seed);
        auto rational = [&rng]() {
            return gca::Rational(static_cast<long>(rng() % 7) - 3,
                                 static_cast<long>(rng() % 3) + 1);
        };
        auto trig = [&](int degree) {
            gca::TrigPoly p(rational());
            for (int k = 1; k <= degree; ++k) {
                p.set_cos(k, rational());
                p.set_sin(k, rational());
            }
            return p;
        };
        int duality_failures = 0, representation_failures = 0;
        for (int t = 0; t < check_trials; ++t) {
            gca::CurrentElement x{trig(check_degree), trig(check_degree), trig(check_degree),
                                  trig(check_degree), rational(), rational()};
            gca::CurrentElement y{trig(check_degree), trig(check_degree), trig(check_degree),
                                  trig(check_degree), rational(), rational()};
            gca::DensityVector g{trig(check_degree), trig(check_degree), trig(check_degree),
                                 trig(check_degree), rational(), rational()};
            const int cap = 256;
            if (gca::pairing(gca::coad_algebra(x, g, cap), y, cap) !=
                -gca::pairing(g, gca::current_bracket(x, y, cap), cap)) {
                ++duality_failures;
            }
            const gca::DensityVector xy = gca::coad_algebra(x, gca::coad_algebra(y, g, cap), cap);
            const gca::DensityVector yx = gca::coad_algebra(y, gca::coad_algebra(x, g, cap), cap);
            const gca::DensityVector br =
                gca::coad_algebra(gca::current_bracket(x, y, cap), g, cap);
            const bool rep_ok = xy.gamma0 - yx.gamma0 == br.gamma0 &&
                                xy.gamma1 - yx.gamma1 == br.gamma1 &&
                                xy.gamma2 - yx.gamma2 == br.gamma2 &&
                                xy.gamma3 - yx.gamma3 == br.gamma3;
            if (!rep_ok) ++representation_failures;
        }
        Json j;
        j["trials"] = check_trials;
        j["seed"] = check_seed;
        j["degree"] = check_degree;
        j["duality_failures"] = duality_failures;
        j["representation_failures"] = representation_failures;
        j["pass"] = duality_failures == 0 && representation_failures == 0;
        if (!j["pass"].get<bool>()) exit_code = 1;
        if (check_out.format == "pretty") {
            emit(check_out, std::to_string(check_trials) + " trials: " +
                                (j["pass"].get<bool>() ? "all exact [pass]" : "FAIL") + "\n");
        } else {
            emit(check_out, render_json(j));
        }
    });

    // --- group-act ---
    auto* group_cmd = app.add_subcommand("group-act", "Group coadjoint action on the grid");
    std::string group_file, group_gamma_file;
    std::size_t group_grid = 1024;
    OutputOptions group_out;
    group_cmd->add_option("--group", group_file, "Group element JSON file")->required();
    group_cmd->add_option("--gamma", group_gamma_file, "Dual vector JSON file")->required();
    group_cmd->add_option("--grid", group_grid, "Grid size (power of two)")
        ->capture_default_str();
    add_output_options(group_cmd, group_out);
    group_cmd->callback([&]() {
        const gca::GroupElement g =
            gca::group_from_json(read_json_file(group_file), group_grid);
        const gca::DensityVector gamma =
            gca::density_from_json(read_json_file(group_gamma_file));
        const gca::GridDensity moved = gca::coad_group(g, gamma, group_grid);
        if (group_out.format == "csv") {
            std::string text = "theta,gamma0,gamma1,gamma2,gamma3\n";
            std::ostringstream line;
            line.precision(17);
            for (std::size_t k = 0; k < moved.g0.size(); ++k) {
                line.str("");
                line << moved.g0.theta(k) << "," << moved.g0.samples[k] << ","
                     << moved.g1.samples[k] << "," << moved.g2.samples[k] << ","
                     << moved.g3.samples[k] << "\n";
                text += line.str();
            }
            emit(group_out, text);
        } else if (group_out.format == "pretty") {
            std::ostringstream text;
            text << "grid " << group_grid << ", max |gamma0..3|: " << gca::max_abs(moved.g0)
                 << " " << gca::max_abs(moved.g1) << " " << gca::max_abs(moved.g2) << " "
                 << gca::max_abs(moved.g3) << "\n";
            emit(group_out, text.str());
        } else {
            emit(group_out, render_json(gca::to_json(moved)));
        }
    });

    // --- schwarzian ---
    auto* schwarz_cmd = app.add_subcommand("schwarzian", "Schwarzian derivative on the grid");
    std::string schwarz_file;
    std::size_t schwarz_grid = 1024;
    OutputOptions schwarz_out;
    schwarz_cmd->add_option("--p", schwarz_file, "Displacement trig polynomial JSON file")
        ->required();
    schwarz_cmd->add_option("--grid", schwarz_grid, "Grid size (power of two)")
        ->capture_default_str();
    add_output_options(schwarz_cmd, schwarz_out);
    schwarz_cmd->callback([&]() {
        const gca::TrigPoly p = gca::trig_from_json(read_json_file(schwarz_file));
        const gca::GridFunction s = gca::schwarzian(p, schwarz_grid);
        if (schwarz_out.format == "csv") {
            emit(schwarz_out, gca::grid_to_csv(s));
        } else if (schwarz_out.format == "pretty") {
            std::ostringstream text;
            text << "grid " << schwarz_grid << ", max |Schwarzian| = " << gca::max_abs(s) << "\n";
            emit(schwarz_out, text.str());
        } else {
            Json j;
            j["grid"] = schwarz_grid;
            j["samples"] = gca::to_json(s);
            emit(schwarz_out, render_json(j));
        }
    });

    // --- isotropy ---
    auto* iso_cmd = app.add_subcommand("isotropy", "Isotropy algebra of a dual vector");
    std::string iso_gamma;
    int iso_degree = 4;
    OutputOptions iso_out;
    iso_cmd->add_option("--gamma", iso_gamma, "Dual vector JSON file")->required();
    iso_cmd->add_option("--degree", iso_degree, "Trig truncation degree")->capture_default_str();
    add_output_options(iso_cmd, iso_out);
    iso_cmd->callback([&]() {
        const gca::DensityVector gamma = gca::density_from_json(read_json_file(iso_gamma));
        const gca::IsotropyReport report = gca::isotropy_solve(gamma, iso_degree);
        if (report.truncation_unstable) exit_code = 1;
        if (iso_out.format == "pretty") {
            emit(iso_out, "degree " + std::to_string(report.degree) + ": dimension " +
                              std::to_string(report.dimension) +
                              (report.truncation_unstable ? " [truncation unstable]" : "") + "\n");
        } else {
            emit(iso_out, render_json(gca::to_json(report)));
        }
    });

    // --- vf-check ---
    auto* vf_cmd = app.add_subcommand("vf-check", "Vector-field realization check");
    int vf_window = 4;
    OutputOptions vf_out;
    vf_cmd->add_option("--window", vf_window, "Mode window")->capture_default_str();
    add_output_options(vf_cmd, vf_out);
    vf_cmd->callback([&]() {
        const gca::VfReport report = gca::vf_realize_check(vf_window);
        if (!report.pass) exit_code = 1;
        if (vf_out.format == "pretty") {
            emit(vf_out, "window " + std::to_string(report.window) + ": " +
                             std::to_string(report.pairs_checked) + " pairs " +
                             (report.pass ? "[pass]" : "[FAIL]") + "\n");
        } else {
            emit(vf_out, render_json(gca::to_json(report)));
        }
    });

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : 2;
    }
    return exit_code;
}

}  // namespace

int main(int argc, char** argv) {
    try {
        return run(argc, argv);
    } catch (const CommandError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return e.code;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
}
