#pragma once

#include <set>
#include <string>
#include <vector>

#include "igr/weights.hpp"

namespace igr {

// U^{i,0,-j}(l) in the closure engine's shorthand.
struct Monomial {
    int i = 0;
    int j = 0;
    int l = 0;

    bool operator==(const Monomial&) const = default;
    // canonical order: twist, then i, then j
    bool operator<(const Monomial& o) const {
        if (l != o.l) return l < o.l;
        if (i != o.i) return i < o.i;
        return j < o.j;
    }
    std::string str() const;
    TwistedBundle bundle() const;
    Monomial dual() const { return {j, i, -l}; }
};

// S^{a,c}_b(l): the rightmost a+b+c+2 bundles of the staircase complex for
// U^{a,-b}, in monomial form.
struct SSet {
    int a = 0, b = 0, c = 0, l = 0;
    std::vector<Monomial> members;
};

SSet make_sset(int a, int b, int c, int l);

enum class RuleKind { Seed, Staircase, Chain, Symplectic };
const char* to_string(RuleKind k);

struct StepRecord {
    RuleKind rule = RuleKind::Seed;
    int a = 0, b = 0, c = 0;  // staircase / chain parameters
    int i = 0, j = 0;         // symplectic target
    int l = 0;                // twist parameter of the rule
    std::vector<Monomial> premises;
    std::vector<Monomial> additions;
};

std::vector<Monomial> universe_T(int n);                // twist 0
std::vector<Monomial> set_P(int b, int n, int l);       // {U^{i,-b}(l)}
std::vector<Monomial> set_N(int a, int n, int l);       // {U^{a,-i}(l)}
std::vector<Monomial> seed_B1B2(int n, int lo, int hi);

class ClosureState {
public:
    ClosureState(int n, int window_lo, int window_hi);

    int n() const { return n_; }
    int window_lo() const { return lo_; }
    int window_hi() const { return hi_; }
    bool in_window(int l) const { return l >= lo_ && l <= hi_; }
    bool in_universe(int i, int j) const { return i >= 0 && j >= 0 && i + j <= 2 * n_ - 2; }

    bool has(const Monomial& m) const { return present_.count(m) > 0; }
    bool has_all(const std::vector<Monomial>& ms) const;
    const std::set<Monomial>& present() const { return present_; }
    const std::vector<StepRecord>& log() const { return log_; }

    void add_seed(const std::vector<Monomial>& seed);

    // Staircase generation from S^{a,c}_b(l); both admissible targets.
    // Premises absent (or outside the window): no-op returning {}.
    std::vector<Monomial> rule_staircase(int a, int b, int c, int l);

    // Repeated staircase applications covering P_b(l) and N_b(l-b-1),
    // starting from any fully present S^{a,c}_b(l); logged as one Chain step.
    std::vector<Monomial> rule_chain(int b, int l);

    // Symplectic bundle relation: U^{i,-j}(l) from all lower and equal layers.
    // Throws if i+j <= n-2 (the relation carries no information there).
    std::vector<Monomial> rule_symplectic(int i, int j, int l);

    // Symplectic sweep over all applicable (p, l, i) in canonical order;
    // returns everything added until no rule fires.
    std::vector<Monomial> symplectic_saturate();

private:
    bool add(const Monomial& m);
    void record(StepRecord r) { log_.push_back(std::move(r)); }

    int n_, lo_, hi_;
    std::set<Monomial> present_;
    std::vector<StepRecord> log_;
};

ClosureState saturate(const std::vector<Monomial>& seed, int n, int window_lo, int window_hi);

bool final_check(const ClosureState& state, int n);

struct StepReport {
    int step = 0;
    bool ok = true;
    std::vector<std::string> notes;
};

struct ReplayReport {
    bool ok = false;
    bool final_ok = false;
    std::vector<StepReport> steps;
    ClosureState state;
};

// Replays the scripted nine-step schedule for n = 4: every S-set premise is
// asserted present before use and every claimed addition must be new.
ReplayReport replay_paper_steps(int n = 4);

// Triangular (i,j) grid; each cell lists the covered twists as ranges.
std::string diagram_ascii(const ClosureState& state);
std::string diagram_svg(const ClosureState& state);

}  // namespace igr
