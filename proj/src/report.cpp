#include "quotsing/report.hpp"

#include <algorithm>
#include <atomic>
#include <chrono>
#include <cstdlib>
#include <exception>
#include <mutex>
#include <random>
#include <sstream>
#include <thread>

#include "json.hpp"
#include "quotsing/center.hpp"
#include "quotsing/quiver.hpp"
#include "quotsing/singular_locus.hpp"

namespace quotsing {

using nlohmann::json;

namespace {

using Clock = std::chrono::steady_clock;

double ms_since(Clock::time_point t0) {
    return std::chrono::duration<double, std::milli>(Clock::now() - t0).count();
}

json exponent_json(const ExponentVector& v) {
    return json(std::vector<std::int32_t>(v.entries().begin(), v.entries().end()));
}

json gens_json(const std::vector<ExponentVector>& gens) {
    json a = json::array();
    for (const auto& g : gens) a.push_back(exponent_json(g));
    return a;
}

json family_json(const RadicalFamily& f) {
    json a = json::array();
    for (Support s : f.supports) a.push_back(support_to_list(s));
    return a;
}

json supports_json(const std::vector<Support>& ss) {
    json a = json::array();
    for (Support s : ss) a.push_back(support_to_list(s));
    return a;
}

json quiver_json(const AbelianGroup& group, const Quiver& q) {
    json vertices = json::array();
    for (Character c : q.vertices) vertices.push_back(group.coords(c));
    json arrows = json::array();
    for (const auto& a : q.arrows)
        arrows.push_back({{"source", group.coords(a.source)}, {"target", group.coords(a.target)}, {"label", a.label + 1}});
    auto conn = is_connected(q);
    return {{"vertex_count", q.vertices.size()}, {"arrow_count", q.arrows.size()}, {"vertices", vertices},
            {"arrows", arrows}, {"connected", conn.connected}, {"empty", conn.empty}};
}

std::string join_lists(const std::vector<Support>& ss) {
    std::ostringstream out;
    out << "[";
    for (std::size_t i = 0; i < ss.size(); ++i) {
        if (i) out << ",";
        out << "{";
        auto l = support_to_list(ss[i]);
        for (std::size_t j = 0; j < l.size(); ++j) out << (j ? "," : "") << l[j];
        out << "}";
    }
    out << "]";
    return out.str();
}

std::string join_dims(const std::vector<std::uint64_t>& v) {
    std::ostringstream out;
    for (std::size_t i = 0; i < v.size(); ++i) out << (i ? "," : "") << v[i];
    return out.str();
}

int resolve_degree(int requested, const AbelianGroup& group) {
    return requested >= 0 ? requested : default_max_degree(group);
}

// Bounded draw in [lo, hi] by rejection; independent of the standard
// library's distribution implementations.
std::uint64_t draw(std::mt19937_64& rng, std::uint64_t lo, std::uint64_t hi) {
    const std::uint64_t span = hi - lo + 1;
    if (span == 0) return rng();
    const std::uint64_t limit = std::numeric_limits<std::uint64_t>::max() - std::numeric_limits<std::uint64_t>::max() % span;
    std::uint64_t x;
    do x = rng();
    while (x >= limit);
    return lo + x % span;
}

json percentiles(std::vector<double> ms) {
    if (ms.empty()) return json::object();
    std::sort(ms.begin(), ms.end());
    auto at = [&](double q) { return ms[static_cast<std::size_t>(q * static_cast<double>(ms.size() - 1) + 0.5)]; };
    return {{"p50_ms", at(0.5)}, {"p90_ms", at(0.9)}, {"p99_ms", at(0.99)}, {"max_ms", ms.back()}};
}

}  // namespace

int default_max_degree(const AbelianGroup& group) { return static_cast<int>(2 * group.order()); }

AnalyzeResult analyze(const GroupSpec& spec, const AnalyzeOptions& options) {
    json timing = json::object();
    const auto t_start = Clock::now();
    auto t = Clock::now();

    AbelianGroup group = build_group(spec, options.limits.max_group_order);
    MonomialTable table(group, options.limits.max_box_points);
    timing["group_ms"] = ms_since(t);

    json report;
    json elements = json::array();
    for (const auto& e : group.elements()) elements.push_back(e);
    report["group"] = {{"dim", group.dim()},
                       {"order", group.order()},
                       {"exponent", group.exponent()},
                       {"invariant_factors", group.invariant_factors()},
                       {"special_linear", group.special_linear()},
                       {"elements", elements},
                       {"spec", json::parse(group_spec_to_json(spec))}};
    report["hilbert_basis"] = gens_json(table.hilbert_basis());

    t = Clock::now();
    Quiver mckay = build_mckay(group);
    Quiver con = contraction(mckay);
    report["quiver"] = {{"mckay", quiver_json(group, mckay)}, {"contraction", quiver_json(group, con)}};
    timing["quiver_ms"] = ms_since(t);

    t = Clock::now();
    SingularLocusReport locus = singular_locus_report(group);
    json pairs = json::array();
    for (const auto& p : locus.pairs) pairs.push_back({{"T", support_to_list(p.coords)}, {"H_order", p.stabilizer.order()}});
    RadicalFamily elementwise = singular_locus_elementwise(group);
    report["singular_locus"] = {{"pairs", pairs},
                                {"components", supports_json(locus.components)},
                                {"reduced_ideal", family_json(locus.reduced_ideal)},
                                {"tilde_g0_count", locus.tilde_g0.size()},
                                {"smooth", locus.pairs.empty()}};
    timing["singular_locus_ms"] = ms_since(t);

    t = Clock::now();
    ContractionAlgebra algebra(table);
    json chars = json::array();
    for (std::uint32_t c = 0; c < group.character_count(); ++c)
        chars.push_back({{"id", c},
                         {"coords", group.coords(Character{c})},
                         {"bar_ideal", gens_json(algebra.ideals().bar_ideals[c].gens)},
                         {"radical", family_json(algebra.ideals().radicals[c])}});
    report["characters"] = chars;
    ReconstructionReport recon = verify_reconstruction(group, algebra.ideals());
    report["reduced_center"] = family_json(recon.center_side);
    timing["ideals_ms"] = ms_since(t);

    t = Clock::now();
    const int d = resolve_degree(options.max_degree, group);
    CenterOptions copts;
    copts.throw_on_violation = false;
    CenterHilbert hilbert = algebra.center_hilbert(d, copts);
    report["center_hilbert"] = {{"max_degree", d},
                                {"dim_z", hilbert.dim_z},
                                {"dim_r", hilbert.dim_r},
                                {"invariant_count", hilbert.invariant_count},
                                {"outside_count", hilbert.outside_count},
                                {"theo22_violations", hilbert.theo22_violations}};
    timing["center_ms"] = ms_since(t);

    json verdicts = {{"reconstruction", recon.equal},
                     {"idem_spli", idem_spli_check(group, algebra.ideals())},
                     {"contraction_connected", is_connected(con).connected},
                     {"locus_routes_agree", radical_equal(locus.reduced_ideal, elementwise)},
                     {"theo22", hilbert.theo22_violations == 0}};
    if (!recon.equal)
        verdicts["reconstruction_diff"] = {{"only_center", supports_json(recon.only_center)},
                                           {"only_locus", supports_json(recon.only_locus)}};
    t = Clock::now();
    if (group.order() <= options.limits.oracle_max_order) {
        const int od = std::min(d, options.limits.oracle_max_degree);
        DenseOracleLimits ol{options.limits.oracle_max_order, options.limits.oracle_max_degree};
        auto dense = dense_center_oracle(group, od, ol);
        bool agree = std::equal(dense.begin(), dense.end(), hilbert.dim_z.begin());
        verdicts["dense_oracle"] = agree ? "pass" : "fail";
        verdicts["dense_oracle_degree"] = od;
    } else {
        verdicts["dense_oracle"] = "skipped";
    }
    timing["oracle_ms"] = ms_since(t);
    report["verdicts"] = verdicts;

    timing["total_ms"] = ms_since(t_start);
    report["timing"] = timing;
    return AnalyzeResult{report.dump(2) + "\n", export_dot(group, mckay)};
}

bool VerifyOutcome::passed() const {
    return std::none_of(checks.begin(), checks.end(), [](const CheckResult& c) { return c.status == CheckStatus::Fail; });
}

std::string format_check(const CheckResult& check) {
    std::string head = check.status == CheckStatus::Pass ? "PASS " : check.status == CheckStatus::Fail ? "FAIL " : "SKIP ";
    return head + check.name + (check.detail.empty() ? "" : ": " + check.detail);
}

VerifyOutcome verify_group(const GroupSpec& spec, const VerifyOptions& options) {
    VerifyOutcome out;
    auto add = [&](std::string name, bool ok, std::string detail = {}) {
        out.checks.push_back(CheckResult{std::move(name), ok ? CheckStatus::Pass : CheckStatus::Fail, std::move(detail)});
    };

    AbelianGroup group = build_group(spec, options.limits.max_group_order);
    MonomialTable table(group, options.limits.max_box_points);
    ContractionAlgebra algebra(table);

    CharIdealTable ideals = algebra.ideals();
    if (options.tamper && group.character_count() > 1 && !ideals.bar_ideals[1].gens.empty()) {
        auto& gens = ideals.bar_ideals[1].gens;
        gens.erase(gens.begin());
        ideals.radicals[1] = radical(group.dim(), ideals.bar_ideals[1]);
    }

    ReconstructionReport recon = verify_reconstruction(group, ideals);
    add("reconstruction", recon.equal,
        recon.equal ? join_lists(recon.locus_side.supports)
                    : "only_center=" + join_lists(recon.only_center) + " only_locus=" + join_lists(recon.only_locus));
    add("idem_spli", idem_spli_check(group, ideals));

    Quiver con = contraction(build_mckay(group));
    auto conn = is_connected(con);
    add("contraction_connected", conn.connected, conn.empty ? "empty quiver" : "");

    RadicalFamily cst = singular_locus_cst(group);
    RadicalFamily elem = singular_locus_elementwise(group);
    bool routes = radical_equal(cst, elem);
    add("locus_routes_agree", routes, routes ? "" : "cst=" + join_lists(cst.supports) + " elementwise=" + join_lists(elem.supports));

    const int d = resolve_degree(options.max_degree, group);
    CenterOptions copts;
    copts.throw_on_violation = false;
    CenterHilbert hilbert = algebra.center_hilbert(d, copts);
    add("theo22", hilbert.theo22_violations == 0,
        "D=" + std::to_string(d) + " violations=" + std::to_string(hilbert.theo22_violations));

    if (!options.run_oracle) {
        out.checks.push_back(CheckResult{"dense_oracle", CheckStatus::Skip, "disabled"});
    } else if (group.order() > options.limits.oracle_max_order) {
        out.checks.push_back(CheckResult{"dense_oracle", CheckStatus::Skip,
                                         "|G| > " + std::to_string(options.limits.oracle_max_order)});
    } else {
        const int od = std::min(d, options.limits.oracle_max_degree);
        DenseOracleLimits ol{options.limits.oracle_max_order, options.limits.oracle_max_degree};
        auto dense = dense_center_oracle(group, od, ol);
        std::vector<std::uint64_t> block(hilbert.dim_z.begin(), hilbert.dim_z.begin() + od + 1);
        add("dense_oracle", dense == block, "dense=" + join_dims(dense) + " blocks=" + join_dims(block));
    }
    return out;
}

unsigned worker_count() {
    if (const char* env = std::getenv("QUOTSING_THREADS")) {
        char* end = nullptr;
        long v = std::strtol(env, &end, 10);
        if (end != env && v > 0) return static_cast<unsigned>(v);
    }
    return std::max(1u, std::thread::hardware_concurrency());
}

void parallel_for(std::size_t count, unsigned threads, const std::function<void(std::size_t)>& fn) {
    threads = std::max(1u, std::min<unsigned>(threads, static_cast<unsigned>(std::max<std::size_t>(count, 1))));
    std::atomic<std::size_t> next{0};
    std::exception_ptr error;
    std::mutex error_mutex;
    auto worker = [&] {
        for (std::size_t i; (i = next.fetch_add(1)) < count;) {
            try {
                fn(i);
            } catch (...) {
                std::lock_guard lock(error_mutex);
                if (!error) error = std::current_exception();
                next = count;
            }
        }
    };
    if (threads == 1) {
        worker();
    } else {
        std::vector<std::thread> pool;
        for (unsigned t = 0; t < threads; ++t) pool.emplace_back(worker);
        for (auto& th : pool) th.join();
    }
    if (error) std::rethrow_exception(error);
}

std::vector<GroupSpec> sample_groups(const SweepConfig& config) {
    if (config.dim_min < 1 || config.dim_max < config.dim_min)
        throw Error(ErrorKind::MalformedInput, "empty dimension range");
    if (config.order_max < 2) throw Error(ErrorKind::MalformedInput, "order bound below 2");
    std::mt19937_64 rng(config.seed);
    std::vector<GroupSpec> out;
    const std::uint64_t max_attempts = 1000 * (config.samples + 1);
    for (std::uint64_t attempt = 0; out.size() < config.samples; ++attempt) {
        if (attempt > max_attempts) throw Error(ErrorKind::GroupTooLarge, "could not sample groups within the order bound");
        GroupSpec spec;
        spec.dim = static_cast<int>(draw(rng, static_cast<std::uint64_t>(config.dim_min), static_cast<std::uint64_t>(config.dim_max)));
        const int gens = config.cyclic_only ? 1 : static_cast<int>(draw(rng, 1, 2));
        for (int g = 0; g < gens; ++g) {
            GeneratorSpec gen;
            gen.order = static_cast<std::int64_t>(draw(rng, 2, config.order_max));
            std::int64_t sum = 0;
            for (int i = 0; i + 1 < spec.dim; ++i) {
                auto w = static_cast<std::int64_t>(draw(rng, 0, static_cast<std::uint64_t>(gen.order - 1)));
                gen.weights.push_back(w);
                sum += w;
            }
            gen.weights.push_back(((-sum) % gen.order + gen.order) % gen.order);
            spec.generators.push_back(std::move(gen));
        }
        try {
            AbelianGroup group = build_group(spec, config.order_max);
            if (group.is_trivial()) continue;
        } catch (const Error& e) {
            if (e.kind() == ErrorKind::GroupTooLarge) continue;
            throw;
        }
        out.push_back(std::move(spec));
    }
    return out;
}

CensusResult census(const SweepConfig& config) {
    const auto t_start = Clock::now();
    std::vector<GroupSpec> specs = sample_groups(config);
    std::vector<VerifyOutcome> outcomes(specs.size());
    std::vector<std::size_t> orders(specs.size());
    std::vector<double> ms(specs.size());
    VerifyOptions vopts;
    vopts.max_degree = config.max_degree;
    vopts.limits = config.limits;
    vopts.run_oracle = config.run_oracle;
    parallel_for(specs.size(), config.threads ? config.threads : worker_count(), [&](std::size_t i) {
        auto t = Clock::now();
        orders[i] = build_group(specs[i], config.limits.max_group_order).order();
        outcomes[i] = verify_group(specs[i], vopts);
        ms[i] = ms_since(t);
    });

    CensusResult result;
    json samples = json::array();
    json failures = json::array();
    for (std::size_t i = 0; i < specs.size(); ++i) {
        json failed = json::array();
        for (const auto& c : outcomes[i].checks)
            if (c.status == CheckStatus::Fail) failed.push_back(format_check(c));
        bool ok = outcomes[i].passed();
        json spec = json::parse(group_spec_to_json(specs[i]));
        samples.push_back({{"index", i}, {"spec", spec}, {"order", orders[i]}, {"passed", ok}, {"failed_checks", failed}});
        if (ok) {
            ++result.passed;
        } else {
            ++result.failed;
            failures.push_back(spec);
        }
    }
    json doc;
    doc["config"] = {{"dim_min", config.dim_min},     {"dim_max", config.dim_max},
                     {"order_max", config.order_max}, {"samples", config.samples},
                     {"seed", config.seed},           {"max_degree", config.max_degree},
                     {"cyclic_only", config.cyclic_only}, {"run_oracle", config.run_oracle}};
    doc["samples"] = samples;
    doc["passed"] = result.passed;
    doc["failed"] = result.failed;
    doc["failures"] = failures;
    json timing = percentiles(ms);
    timing["total_ms"] = ms_since(t_start);
    doc["timing"] = timing;
    result.json = doc.dump(2) + "\n";
    return result;
}

}  // namespace quotsing
