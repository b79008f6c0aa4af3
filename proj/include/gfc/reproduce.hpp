#pragma once

#include <string>
#include <vector>

namespace gfc {

// One reference value that did not match the computed value.
struct CellDiff {
    std::string cell, expected, got;
};

struct ReproResult {
    std::string id;
    std::string rendered;         // human-readable report, deterministic
    std::vector<CellDiff> diffs;  // empty iff every reference cell matched
    bool ok() const { return diffs.empty(); }
};

// Built-in reproduction targets, each pinning published reference values
// against freshly computed ones:
//   t1     [9,5,3]_2 support weight distribution and hierarchy
//   t2     [12,5,6]_5 support weight distribution, hierarchy, dual parameters
//   t3     [12,6,6]_3 extended Golay verdict grid and its simplex-padded
//          extension at t=1 (formula row, brute-force verdicts)
//   t4     [28,5,14]_2 and [24,5,12]_2 Griesmer-code verdict grids (three
//          reference cells for the second code are known-bad; see rendered)
//   t5     [117,5,78]_3 and [116,5,77]_3 verdict grids
//   cyclic85  cyclic [85,8,40]_2: weight set and minimality cutoff at s = 3
//   abx37  ratio-violating extension of [28,5,14]_2 to [37,5,14]_2
//   abx33  ratio-violating extension of [26,5,12]_2 to [33,5,12]_2
std::vector<std::string> reproduction_ids();

ReproResult run_reproduction(const std::string& id, unsigned workers = 1);
std::vector<ReproResult> run_all_reproductions(unsigned workers = 1);

} // namespace gfc
