#pragma once

#include <string>
#include <vector>

namespace igr {

struct VerifyItem {
    std::string name;
    bool pass = false;
    bool indeterminate = false;
    std::string detail;
};

struct VerifyReport {
    std::vector<VerifyItem> items;
    bool pass() const;
    int exit_code() const;  // 0 pass, 2 mismatch, 3 indeterminate encountered
};

// The one-shot verification pipeline on IGr(3,9): Lefschetz bases for B1 and
// B2, the extremal Ext regression, block semiorthogonality of B1B2, the
// golden staircase complexes, the Euler pairings and ranks of E, F, H, the
// fullness engine (scripted replay and saturation) and the numerical
// invariants.
VerifyReport verify_paper(int threads = 1);

}  // namespace igr
