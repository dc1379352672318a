#pragma once

#include <string>
#include <vector>

#include "igr/oddcoh.hpp"

namespace igr {

// Ext groups between twisted Schur bundles, with the summand bookkeeping kept
// for reports.  Ext^.(A,B) = H^.(A* (x) B), summand by summand.
struct ExtResult {
    Verdict verdict = Verdict::Acyclic;
    GradedDim graded;     // valid when verdict == Exact (Acyclic => empty)
    long long euler = 0;  // always valid
    struct Summand {
        GLWeight weight;
        long long mult;
        Verdict verdict;
    };
    std::vector<Summand> summands;

    bool is_zero() const { return verdict != Verdict::Indeterminate && graded.is_zero(); }
};

ExtResult ext_groups(const OddSpace& space, const TwistedBundle& a, const TwistedBundle& b);

struct CollectionSpec {
    std::string name;
    std::vector<TwistedBundle> members;
};

// Named presets on IGr(3,9): B1, B2, B1B2 (the union in right-to-left
// lexicographic order), S1, S2, S.
CollectionSpec preset_collection(const std::string& name);
std::vector<std::string> preset_names();

struct PairResult {
    int i = 0;  // target member index
    int j = 0;  // source member index
    int twist = 0;
    Verdict verdict = Verdict::Acyclic;
    GradedDim graded;
    long long euler = 0;
    bool ok = false;
    std::string expected;  // "0" or "C[0]"
};

struct CheckReport {
    std::string kind;        // "lefschetz-basis" or "block-semiorthogonality"
    std::string collection;
    int index_w = 0;
    bool pass = false;
    bool any_indeterminate = false;
    std::vector<PairResult> pairs;  // ordered by (j, i, twist)

    std::vector<const PairResult*> failures() const;
    int exit_code() const;  // 0 pass, 2 fail, 3 indeterminate
};

// Lefschetz-basis criterion: members form an exceptional collection in the
// given order, and Ext^.(E_j(t), E_i) = 0 for i <= j and t = 1..w-1.
CheckReport check_lefschetz_basis(const OddSpace& space, const CollectionSpec& c, int w,
                                  int threads = 1);

// Ext^.(x(t), y) = 0 for all ordered pairs x, y and t = 1..w-1.
CheckReport check_block_semiorthogonality(const OddSpace& space, const CollectionSpec& c, int w,
                                          int threads = 1);

}  // namespace igr
