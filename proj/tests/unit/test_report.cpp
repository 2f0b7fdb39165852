#include <atomic>
#include <cstdlib>
#include <set>
#include <stdexcept>

#include "doctest.h"
#include "helpers.hpp"
#include "json.hpp"
#include "quotsing/report.hpp"

using namespace testing;
using nlohmann::json;

namespace {

json without_timing(const std::string& text) {
    auto j = json::parse(text);
    j.erase("timing");
    return j;
}

}  // namespace

TEST_SUITE("report") {
    TEST_CASE("analyze is deterministic apart from timing") {
        auto a = analyze(klein_spec());
        auto b = analyze(klein_spec());
        CHECK(without_timing(a.json) == without_timing(b.json));
        CHECK(a.mckay_dot == b.mckay_dot);
    }

    TEST_CASE("analyze report of the worked example") {
        AnalyzeOptions opts;
        opts.max_degree = 6;
        auto j = json::parse(analyze(klein_spec(), opts).json);
        CHECK(j["group"]["order"] == 4);
        CHECK(j["group"]["special_linear"] == true);
        CHECK(j["hilbert_basis"].size() == 4);
        CHECK(j["quiver"]["mckay"]["vertex_count"] == 4);
        CHECK(j["quiver"]["mckay"]["arrow_count"] == 12);
        CHECK(j["quiver"]["contraction"]["vertex_count"] == 3);
        CHECK(j["quiver"]["contraction"]["arrow_count"] == 6);
        CHECK(j["quiver"]["contraction"]["connected"] == true);
        CHECK(j["center_hilbert"]["dim_z"] == json::array({1, 0, 3, 0, 3, 0, 3}));
        CHECK(j["center_hilbert"]["dim_r"] == json::array({1, 0, 3, 0, 3, 0, 3}));
        CHECK(j["singular_locus"]["components"].size() == 3);
        CHECK(j["singular_locus"]["tilde_g0_count"] == 6);
        CHECK(j["characters"].size() == 4);
        for (const auto& key : {"reconstruction", "idem_spli", "contraction_connected", "locus_routes_agree", "theo22"})
            CHECK(j["verdicts"][key] == true);
        CHECK(j["verdicts"]["dense_oracle"] == "pass");
        CHECK(j.contains("timing"));
    }

    TEST_CASE("analyze of the trivial group") {
        auto j = json::parse(analyze(trivial_spec()).json);
        CHECK(j["group"]["order"] == 1);
        CHECK(j["singular_locus"]["smooth"] == true);
        CHECK(j["quiver"]["contraction"]["empty"] == true);
        CHECK(j["verdicts"]["reconstruction"] == true);
    }

    TEST_CASE("verify passes on the examples and fails under tampering") {
        for (const auto& spec : {klein_spec(), cyclic4_spec(), surface_spec(5), trivial_spec()}) {
            auto out = verify_group(spec);
            CHECK(out.passed());
            CHECK(out.checks.size() == 6);
            for (const auto& c : out.checks) CHECK(c.status != CheckStatus::Fail);
        }
        VerifyOptions bad;
        bad.tamper = true;
        auto out = verify_group(klein_spec(), bad);
        CHECK(!out.passed());
        CHECK(out.checks.front().name == "reconstruction");
        CHECK(out.checks.front().status == CheckStatus::Fail);
        CHECK(format_check(out.checks.front()).rfind("FAIL reconstruction", 0) == 0);
    }

    TEST_CASE("verify skips the oracle beyond its limits") {
        auto out = verify_group(surface_spec(9));
        CHECK(out.passed());
        CHECK(out.checks.back().name == "dense_oracle");
        CHECK(out.checks.back().status == CheckStatus::Skip);
        CHECK(format_check(out.checks.back()).rfind("SKIP dense_oracle", 0) == 0);
    }

    TEST_CASE("sample_groups honours the configuration") {
        SweepConfig cfg;
        cfg.dim_min = 2;
        cfg.dim_max = 4;
        cfg.order_max = 30;
        cfg.samples = 40;
        cfg.seed = 11;
        auto a = sample_groups(cfg);
        CHECK(a.size() == 40);
        CHECK(a == sample_groups(cfg));
        for (const auto& spec : a) {
            CHECK(spec.dim >= 2);
            CHECK(spec.dim <= 4);
            auto g = build_group(spec);
            CHECK(g.order() >= 2);
            CHECK(g.order() <= 30);
            CHECK(g.special_linear());
        }
        cfg.cyclic_only = true;
        for (const auto& spec : sample_groups(cfg)) CHECK(spec.generators.size() == 1);
        cfg.seed = 12;
        cfg.cyclic_only = false;
        CHECK(sample_groups(cfg) != a);
    }

    TEST_CASE("census is deterministic and reports every sample") {
        SweepConfig cfg;
        cfg.dim_max = 3;
        cfg.order_max = 12;
        cfg.samples = 12;
        cfg.seed = 5;
        cfg.threads = 2;
        auto a = census(cfg);
        cfg.threads = 1;
        auto b = census(cfg);
        CHECK(a.passed == 12);
        CHECK(a.failed == 0);
        CHECK(without_timing(a.json) == without_timing(b.json));
        auto j = json::parse(a.json);
        CHECK(j["samples"].size() == 12);
        CHECK(j["timing"].contains("p50_ms"));
    }

    TEST_CASE("parallel_for runs every index and propagates exceptions") {
        std::vector<std::atomic<int>> hits(100);
        parallel_for(100, 3, [&](std::size_t i) { ++hits[i]; });
        for (auto& h : hits) CHECK(h.load() == 1);
        CHECK_THROWS_AS(parallel_for(50, 3, [](std::size_t i) {
                            if (i == 17) throw std::runtime_error("boom");
                        }),
                        std::runtime_error);
        parallel_for(0, 4, [](std::size_t) { FAIL("no work expected"); });
    }

    TEST_CASE("worker_count reads the environment") {
        setenv("QUOTSING_THREADS", "3", 1);
        CHECK(worker_count() == 3);
        setenv("QUOTSING_THREADS", "0", 1);
        CHECK(worker_count() >= 1);
        unsetenv("QUOTSING_THREADS");
        CHECK(worker_count() >= 1);
    }

    TEST_CASE("resource limits surface as errors") {
        AnalyzeOptions opts;
        opts.limits.max_group_order = 3;
        try {
            analyze(klein_spec(), opts);
            FAIL("expected GroupTooLarge");
        } catch (const Error& e) {
            CHECK(e.kind() == ErrorKind::GroupTooLarge);
            CHECK(is_resource_error(e.kind()));
        }
    }
}
