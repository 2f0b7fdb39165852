#pragma once

// Whole-group pipelines behind the command-line tool: the analyze report,
// the verify suite and the randomized census. Reports are canonical JSON
// (sorted keys, fixed orderings); wall-clock numbers live only under the
// top-level "timing" key.

#include <cstddef>
#include <cstdint>
#include <functional>
#include <string>
#include <vector>

#include "quotsing/group.hpp"
#include "quotsing/monomial.hpp"

namespace quotsing {

struct Limits {
    std::size_t max_group_order = kDefaultMaxGroupOrder;
    std::uint64_t max_box_points = kDefaultMaxBoxPoints;
    std::size_t oracle_max_order = 6;
    int oracle_max_degree = 6;
};

/// Degree bound used when none is given: 2|G|.
int default_max_degree(const AbelianGroup& group);

struct AnalyzeOptions {
    int max_degree = -1;  // -1: default_max_degree
    Limits limits;
};

struct AnalyzeResult {
    std::string json;
    std::string mckay_dot;
};

AnalyzeResult analyze(const GroupSpec& spec, const AnalyzeOptions& options = {});

enum class CheckStatus { Pass, Fail, Skip };

struct CheckResult {
    std::string name;
    CheckStatus status = CheckStatus::Pass;
    std::string detail;
};

struct VerifyOptions {
    int max_degree = -1;  // -1: default_max_degree
    Limits limits;
    bool run_oracle = true;
    /// Negative control: drop the first generator of \bar I for the first
    /// nontrivial character before checking.
    bool tamper = false;
};

struct VerifyOutcome {
    std::vector<CheckResult> checks;
    bool passed() const;
};

VerifyOutcome verify_group(const GroupSpec& spec, const VerifyOptions& options = {});

/// "PASS name", "FAIL name: detail" or "SKIP name: detail".
std::string format_check(const CheckResult& check);

/// Threads to use: QUOTSING_THREADS if set and positive, else the hardware count.
unsigned worker_count();

/// Runs fn(i) for i in [0, count) on up to `threads` workers. The first
/// exception thrown by any task is rethrown after all workers stop.
void parallel_for(std::size_t count, unsigned threads, const std::function<void(std::size_t)>& fn);

struct SweepConfig {
    int dim_min = 2;
    int dim_max = 3;
    std::size_t order_max = 20;
    std::size_t samples = 50;
    std::uint64_t seed = 1;
    int max_degree = -1;  // -1: 2|G| per group
    unsigned threads = 0;  // 0: worker_count()
    bool cyclic_only = false;
    bool run_oracle = true;
    Limits limits;
};

/// The groups a census draws, in sample order; fully determined by the config.
std::vector<GroupSpec> sample_groups(const SweepConfig& config);

struct CensusResult {
    std::string json;
    std::size_t passed = 0;
    std::size_t failed = 0;
};

CensusResult census(const SweepConfig& config);

}  // namespace quotsing
