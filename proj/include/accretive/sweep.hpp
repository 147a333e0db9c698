#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "accretive/catalog.hpp"
#include "accretive/types.hpp"

namespace accretive {

struct SweepConfig {
    uint64_t master_seed = 0x5EED5EED5EED5EEDULL;
    int trials = 10000;
    std::vector<int> dims = {2, 3, 4, 5, 6};
    SweepSettings settings{};
    std::string case_filter;   // substring match on case id; empty = all
    int threads = 1;
    std::string fail_dir;      // where failing instances are dumped; empty = skip
};

struct CaseStats {
    std::string case_id;
    int trials = 0;
    int hypothesis_met = 0;
    int pass = 0;
    int fail = 0;
    bool has_min = false;
    double min_slack = 0.0;          // min normalized slack among hypothesis-met trials
    uint64_t argmin_seed = 0;        // trial seed attaining it
    std::vector<std::string> fail_files;
};

struct SweepReport {
    SweepConfig config;
    std::vector<CaseStats> cases;
    double elapsed_seconds = 0.0;
    int total_fail = 0;
};

/// Runs every registry case that matches the filter for config.trials
/// deterministic trials each. Trial t of case c is seeded by
/// trial_seed(master_seed, c, t) regardless of execution order or thread
/// count, and per-case statistics fold over trials in index order, so two
/// runs of one config produce identical reports byte for byte.
SweepReport run_sweep(const SweepConfig& config);

/// One row of the fixed worked-example table.
struct DemoRow {
    std::string name;
    double reference = 0.0;   // value quoted for the example
    double computed = 0.0;
    double diff = 0.0;
    bool ok = false;
    std::string note;
};

struct DemoReport {
    std::vector<DemoRow> rows;
    bool all_ok = false;
};

/// Recomputes the two worked examples end to end (transform entries,
/// accretivity via the disk criterion, norm and radius bounds) and compares
/// against their quoted values. Rows whose quoted source is known to carry a
/// misprint compare against the recomputation and say so in the note.
DemoReport demo_examples();

}  // namespace accretive
