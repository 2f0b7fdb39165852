#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>

#include "CLI11.hpp"
#include "json.hpp"
#include "quotsing/center.hpp"
#include "quotsing/quiver.hpp"
#include "quotsing/report.hpp"

using namespace quotsing;

namespace {

constexpr int kExitFailedCheck = 1;
constexpr int kExitInput = 2;
constexpr int kExitResource = 3;

std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw Error(ErrorKind::MalformedInput, "cannot read " + path);
    std::ostringstream s;
    s << in.rdbuf();
    return s.str();
}

void write_file(const std::string& path, const std::string& text) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw Error(ErrorKind::MalformedInput, "cannot write " + path);
    out << text;
}

void add_limits(CLI::App* cmd, Limits& limits) {
    cmd->add_option("--max-order", limits.max_group_order, "Largest group order accepted")->capture_default_str();
    cmd->add_option("--max-box", limits.max_box_points, "Largest exponent box enumerated")->capture_default_str();
    cmd->add_option("--oracle-max-order", limits.oracle_max_order, "Largest |G| for the dense oracle")->capture_default_str();
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Abelian quotient singularities: quivers, contraction-algebra centers and singular loci"};
    app.require_subcommand(1);

    std::string spec_path, dot_path, out_path;
    int max_degree = -1;
    Limits limits;

    auto* analyze_cmd = app.add_subcommand("analyze", "Full JSON report for one group");
    analyze_cmd->add_option("spec", spec_path, "Group spec (JSON)")->required();
    analyze_cmd->add_option("--dot", dot_path, "Write the McKay quiver as DOT");
    analyze_cmd->add_option("--max-degree", max_degree, "Degree bound for the center (default 2|G|)");
    analyze_cmd->add_option("--out", out_path, "Write the report here instead of stdout");
    add_limits(analyze_cmd, limits);

    bool tamper = false, no_oracle = false;
    auto* verify_cmd = app.add_subcommand("verify", "Run the verification suite; exit 1 if any check fails");
    verify_cmd->add_option("spec", spec_path, "Group spec (JSON)")->required();
    verify_cmd->add_option("--max-degree", max_degree, "Degree bound for the per-monomial check (default 2|G|)");
    verify_cmd->add_flag("--no-oracle", no_oracle, "Skip the dense oracle");
    verify_cmd->add_flag("--tamper", tamper, "Negative control: corrupt one ideal before checking")->group("");
    add_limits(verify_cmd, limits);

    bool contracted = false;
    auto* quiver_cmd = app.add_subcommand("quiver", "Export a quiver as DOT");
    quiver_cmd->add_option("spec", spec_path, "Group spec (JSON)")->required();
    quiver_cmd->add_option("--dot", dot_path, "Output DOT file")->required();
    quiver_cmd->add_flag("--contraction", contracted, "Export the contracted quiver instead");
    add_limits(quiver_cmd, limits);

    auto* center_cmd = app.add_subcommand("center", "Hilbert functions of the center and reduced center");
    center_cmd->add_option("spec", spec_path, "Group spec (JSON)")->required();
    center_cmd->add_option("--max-degree", max_degree, "Degree bound")->required();
    add_limits(center_cmd, limits);

    SweepConfig sweep;
    std::size_t order_max = sweep.order_max;
    auto* census_cmd = app.add_subcommand("census", "Verify randomly sampled groups");
    census_cmd->add_option("--dim-min", sweep.dim_min, "Smallest dimension")->capture_default_str();
    census_cmd->add_option("--dim-max", sweep.dim_max, "Largest dimension")->required();
    census_cmd->add_option("--order-max", order_max, "Largest group order")->required();
    census_cmd->add_option("--samples", sweep.samples, "Number of groups")->required();
    census_cmd->add_option("--seed", sweep.seed, "RNG seed")->required();
    census_cmd->add_option("--max-degree", sweep.max_degree, "Degree bound (default 2|G| per group)");
    census_cmd->add_option("--threads", sweep.threads, "Worker threads (default QUOTSING_THREADS or all cores)");
    census_cmd->add_flag("--cyclic-only", sweep.cyclic_only, "Sample cyclic groups only");
    census_cmd->add_flag("--no-oracle", no_oracle, "Skip the dense oracle");
    census_cmd->add_option("--out", out_path, "Write the aggregate here instead of stdout");
    add_limits(census_cmd, limits);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? 0 : kExitInput;
    }

    try {
        if (*analyze_cmd) {
            AnalyzeOptions opts;
            opts.max_degree = max_degree;
            opts.limits = limits;
            auto result = analyze(parse_group_spec(read_file(spec_path)), opts);
            if (!dot_path.empty()) write_file(dot_path, result.mckay_dot);
            if (out_path.empty())
                std::cout << result.json;
            else
                write_file(out_path, result.json);
            return 0;
        }
        if (*verify_cmd) {
            VerifyOptions opts;
            opts.max_degree = max_degree;
            opts.limits = limits;
            opts.tamper = tamper;
            opts.run_oracle = !no_oracle;
            auto outcome = verify_group(parse_group_spec(read_file(spec_path)), opts);
            for (const auto& c : outcome.checks) std::cout << format_check(c) << "\n";
            std::cout << (outcome.passed() ? "verdict: pass" : "verdict: FAIL") << "\n";
            return outcome.passed() ? 0 : kExitFailedCheck;
        }
        if (*quiver_cmd) {
            AbelianGroup group = build_group(parse_group_spec(read_file(spec_path)), limits.max_group_order);
            Quiver q = build_mckay(group);
            if (contracted) q = contraction(q);
            write_file(dot_path, export_dot(group, q));
            nlohmann::json stats = {{"vertices", q.vertices.size()},
                                    {"arrows", q.arrows.size()},
                                    {"contracted", contracted},
                                    {"connected", is_connected(q).connected}};
            std::cout << stats.dump() << "\n";
            return 0;
        }
        if (*center_cmd) {
            AbelianGroup group = build_group(parse_group_spec(read_file(spec_path)), limits.max_group_order);
            MonomialTable table(group, limits.max_box_points);
            ContractionAlgebra algebra(table);
            CenterHilbert h = algebra.center_hilbert(max_degree);
            nlohmann::json out = {{"max_degree", h.max_degree},
                                  {"dim_z", h.dim_z},
                                  {"dim_r", h.dim_r},
                                  {"invariant_count", h.invariant_count},
                                  {"outside_count", h.outside_count}};
            std::cout << out.dump(2) << "\n";
            return 0;
        }
        if (*census_cmd) {
            sweep.order_max = order_max;
            sweep.limits = limits;
            sweep.run_oracle = !no_oracle;
            auto result = census(sweep);
            if (out_path.empty())
                std::cout << result.json;
            else
                write_file(out_path, result.json);
            std::cerr << "census: " << result.passed << " passed, " << result.failed << " failed\n";
            return result.failed == 0 ? 0 : kExitFailedCheck;
        }
    } catch (const Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        if (is_resource_error(e.kind())) return kExitResource;
        if (is_input_error(e.kind())) return kExitInput;
        return kExitFailedCheck;
    }
    return 0;
}
