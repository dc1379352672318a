#include "igr/fullness.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

namespace igr {

std::string Monomial::str() const {
    std::string s = "U[" + std::to_string(i) + ",0," + std::to_string(-j) + "]";
    if (l != 0) s += "(" + std::to_string(l) + ")";
    return s;
}

TwistedBundle Monomial::bundle() const { return TwistedBundle(GLWeight{i, 0, -j}, l); }

const char* to_string(RuleKind k) {
    switch (k) {
        case RuleKind::Seed: return "seed";
        case RuleKind::Staircase: return "staircase";
        case RuleKind::Chain: return "chain";
        case RuleKind::Symplectic: return "symplectic";
    }
    return "?";
}

SSet make_sset(int a, int b, int c, int l) {
    if (a < -1 || c < -1 || b < 0)
        throw std::invalid_argument("make_sset: requires a, c >= -1 and b >= 0");
    SSet s{a, b, c, l, {}};
    for (int i = 0; i <= a; ++i) s.members.push_back({i, b, l});
    for (int i = 0; i <= b - 1; ++i) s.members.push_back({i, b - 1 - i, l - i - 1});
    for (int i = 0; i <= c; ++i) s.members.push_back({b, i, l - b - 1});
    return s;
}

std::vector<Monomial> universe_T(int n) {
    std::vector<Monomial> out;
    for (int i = 0; i <= 2 * n - 2; ++i)
        for (int j = 0; i + j <= 2 * n - 2; ++j) out.push_back({i, j, 0});
    return out;
}

std::vector<Monomial> set_P(int b, int n, int l) {
    std::vector<Monomial> out;
    for (int i = 0; i <= 2 * n - 2 - b; ++i) out.push_back({i, b, l});
    return out;
}

std::vector<Monomial> set_N(int a, int n, int l) {
    std::vector<Monomial> out;
    for (int i = 0; i <= 2 * n - 2 - a; ++i) out.push_back({a, i, l});
    return out;
}

std::vector<Monomial> seed_B1B2(int n, int lo, int hi) {
    (void)n;
    const std::vector<std::pair<int, int>> gens = {{0, 2}, {0, 1}, {1, 1}, {2, 1},
                                                   {0, 0}, {1, 0}, {2, 0}, {3, 0}};
    std::vector<Monomial> out;
    for (int l = lo; l <= hi; ++l)
        for (const auto& [i, j] : gens) out.push_back({i, j, l});
    return out;
}

ClosureState::ClosureState(int n, int window_lo, int window_hi)
    : n_(n), lo_(window_lo), hi_(window_hi) {
    if (n < 2) throw std::invalid_argument("ClosureState: requires n >= 2");
}

bool ClosureState::has_all(const std::vector<Monomial>& ms) const {
    return std::all_of(ms.begin(), ms.end(), [&](const Monomial& m) { return has(m); });
}

bool ClosureState::add(const Monomial& m) {
    if (!in_universe(m.i, m.j) || !in_window(m.l))
        throw std::logic_error("ClosureState: addition outside universe or window");
    return present_.insert(m).second;
}

void ClosureState::add_seed(const std::vector<Monomial>& seed) {
    StepRecord r;
    r.rule = RuleKind::Seed;
    for (const Monomial& m : seed)
        if (!has(m)) {
            add(m);
            r.additions.push_back(m);
        }
    std::sort(r.additions.begin(), r.additions.end());
    if (!r.additions.empty()) record(std::move(r));
}

std::vector<Monomial> ClosureState::rule_staircase(int a, int b, int c, int l) {
    if (a + b + c != 2 * n_ - 3)
        throw std::invalid_argument("rule_staircase: requires a + b + c = 2n - 3");
    if (b > 2 * n_ - 2) throw std::invalid_argument("rule_staircase: b out of range");
    const SSet s = make_sset(a, b, c, l);
    for (const Monomial& m : s.members)
        if (!in_window(m.l) || !has(m)) return {};  // premises absent: no-op

    std::vector<Monomial> additions;
    if (c >= 0) {  // extend along the row: U^{a+1,-b}(l)
        const Monomial m{a + 1, b, l};
        if (in_universe(m.i, m.j) && in_window(m.l) && !has(m)) {
            add(m);
            additions.push_back(m);
        }
    }
    if (a >= 0) {  // dual end of the complex: U^{b,-c-1}(l-b-1)
        const Monomial m{b, c + 1, l - b - 1};
        if (in_universe(m.i, m.j) && in_window(m.l) && !has(m)) {
            add(m);
            additions.push_back(m);
        }
    }
    if (!additions.empty()) {
        StepRecord r;
        r.rule = RuleKind::Staircase;
        r.a = a;
        r.b = b;
        r.c = c;
        r.l = l;
        r.premises = s.members;
        r.additions = additions;
        record(std::move(r));
    }
    return additions;
}

std::vector<Monomial> ClosureState::rule_chain(int b, int l) {
    // locate a fully present S^{a,c}_b(l)
    int found_a = -2;
    for (int a = 2 * n_ - 2 - b; a >= -1; --a) {
        const int c = 2 * n_ - 3 - b - a;
        if (c < -1) continue;
        const SSet s = make_sset(a, b, c, l);
        bool present = true;
        for (const Monomial& m : s.members) present = present && in_window(m.l) && has(m);
        if (present) {
            found_a = a;
            break;
        }
    }
    if (found_a == -2) return {};
    const int a0 = found_a, c0 = 2 * n_ - 3 - b - a0;
    const SSet premises = make_sset(a0, b, c0, l);

    std::vector<Monomial> additions;
    // walk the row upward: (a, c) -> (a+1, c-1) while the second branch of
    // the staircase statement applies
    for (int a = a0, c = c0; c >= 0; ++a, --c) {
        const Monomial m{a + 1, b, l};
        if (in_universe(m.i, m.j) && in_window(m.l) && !has(m)) {
            add(m);
            additions.push_back(m);
        }
    }
    // walk the dual column: (a, c) -> (a-1, c+1)
    for (int a = a0, c = c0; a >= 0; --a, ++c) {
        const Monomial m{b, c + 1, l - b - 1};
        if (!in_window(m.l)) break;
        if (in_universe(m.i, m.j) && !has(m)) {
            add(m);
            additions.push_back(m);
        }
    }
    std::sort(additions.begin(), additions.end());
    if (!additions.empty()) {
        StepRecord r;
        r.rule = RuleKind::Chain;
        r.a = a0;
        r.b = b;
        r.c = c0;
        r.l = l;
        r.premises = premises.members;
        r.additions = additions;
        record(std::move(r));
    }
    return additions;
}

std::vector<Monomial> ClosureState::rule_symplectic(int i, int j, int l) {
    const int p = i + j;
    if (p <= n_ + 1 - 3)
        throw std::invalid_argument("rule_symplectic: inapplicable, needs i + j > n - 2");
    if (!in_universe(i, j) || !in_window(l)) return {};
    if (has({i, j, l})) return {};
    std::vector<Monomial> premises;
    for (int i2 = 0; i2 <= p; ++i2)
        for (int j2 = 0; i2 + j2 <= p; ++j2) {
            if (i2 == i && j2 == j) continue;
            premises.push_back({i2, j2, l});
        }
    if (!has_all(premises)) return {};
    const Monomial m{i, j, l};
    add(m);
    StepRecord r;
    r.rule = RuleKind::Symplectic;
    r.i = i;
    r.j = j;
    r.l = l;
    r.premises = std::move(premises);
    r.additions = {m};
    record(std::move(r));
    return {m};
}

std::vector<Monomial> ClosureState::symplectic_saturate() {
    std::vector<Monomial> all;
    bool changed = true;
    while (changed) {
        changed = false;
        for (int p = n_ - 1; p <= 2 * n_ - 2; ++p)
            for (int l = lo_; l <= hi_; ++l)
                for (int i = 0; i <= p; ++i) {
                    const auto added = rule_symplectic(i, p - i, l);
                    if (!added.empty()) {
                        changed = true;
                        all.insert(all.end(), added.begin(), added.end());
                    }
                }
    }
    return all;
}

ClosureState saturate(const std::vector<Monomial>& seed, int n, int window_lo, int window_hi) {
    ClosureState state(n, window_lo, window_hi);
    state.add_seed(seed);
    bool changed = true;
    while (changed) {
        changed = false;
        // staircase sweep by (b, l, a) ascending
        for (int b = 0; b <= 2 * n - 2; ++b)
            for (int l = window_lo; l <= window_hi; ++l)
                for (int a = -1; a <= 2 * n - 2 - b; ++a) {
                    const int c = 2 * n - 3 - b - a;
                    if (c < -1) continue;
                    if (!state.rule_staircase(a, b, c, l).empty()) changed = true;
                }
        // symplectic sweep by (p, l, i) ascending
        for (int p = n - 1; p <= 2 * n - 2; ++p)
            for (int l = window_lo; l <= window_hi; ++l)
                for (int i = 0; i <= p; ++i)
                    if (!state.rule_symplectic(i, p - i, l).empty()) changed = true;
    }
    return state;
}

bool final_check(const ClosureState& state, int n) {
    for (int l = state.window_lo(); l <= state.window_hi(); ++l)
        for (const Monomial& m : universe_T(n))
            if (!state.has({m.i, m.j, l})) return false;
    return true;
}

namespace {

struct ScriptChain {
    int a, b, c, l;
};

struct ScriptStep {
    std::vector<ScriptChain> chains;
    std::vector<std::pair<int, int>> claim_P;  // (b, l)
    std::vector<std::pair<int, int>> claim_N;  // (b, l)
    std::vector<Monomial> symplectic;          // claimed new bundles, in order
    bool symplectic_saturate = false;
};

std::vector<ScriptStep> nine_step_script() {
    std::vector<ScriptStep> steps(9);
    // 1: the b = 0 staircases, then U^{1,-2} at twists 0..5
    for (int l = 1; l <= 6; ++l) steps[0].chains.push_back({3, 0, 2, l});
    for (int l = 1; l <= 6; ++l) steps[0].claim_P.push_back({0, l});
    for (int l = 0; l <= 5; ++l) steps[0].claim_N.push_back({0, l});
    for (int l = 0; l <= 5; ++l) steps[0].symplectic.push_back({1, 2, l});
    // 2
    for (int l = 2; l <= 6; ++l) steps[1].chains.push_back({2, 1, 2, l});
    for (int l = 2; l <= 6; ++l) steps[1].claim_P.push_back({1, l});
    for (int l = 0; l <= 4; ++l) steps[1].claim_N.push_back({1, l});
    for (int l = 2; l <= 4; ++l) steps[1].symplectic.push_back({2, 2, l});
    // 3
    steps[2].chains = {{1, 2, 2, 5}, {2, 2, 1, 3}, {2, 2, 1, 4}};
    for (int l = 3; l <= 5; ++l) steps[2].claim_P.push_back({2, l});
    for (int l = 0; l <= 2; ++l) steps[2].claim_N.push_back({2, l});
    steps[2].symplectic = {{3, 1, 1}, {1, 3, 5}, {3, 2, 2}, {2, 3, 3}, {2, 3, 4}};
    // 4
    steps[3].chains = {{2, 3, 0, 4}, {1, 3, 1, 5}};
    steps[3].claim_P = {{3, 4}, {3, 5}};
    steps[3].claim_N = {{3, 0}, {3, 1}};
    steps[3].symplectic = {{4, 0, 0}, {4, 1, 1}, {1, 4, 5}, {2, 4, 4}};
    // 5
    steps[4].chains = {{1, 4, 0, 5}};
    steps[4].claim_P = {{4, 5}};
    steps[4].claim_N = {{4, 0}};
    steps[4].symplectic = {{5, 0, 0}, {1, 5, 5}};
    // 6
    steps[5].chains = {{0, 2, 3, 6}};
    steps[5].claim_P = {{2, 6}};
    steps[5].claim_N = {{2, 3}};
    steps[5].symplectic = {{0, 3, 6}, {3, 3, 3}};
    // 7
    steps[6].chains = {{0, 3, 2, 6}};
    steps[6].claim_P = {{3, 6}};
    steps[6].claim_N = {{3, 2}};
    steps[6].symplectic = {{0, 4, 6}, {4, 2, 2}};
    // 8: the twist-1 bundle completing layer 6 is U^{5,-1}(1)
    steps[7].chains = {{0, 4, 1, 6}};
    steps[7].claim_P = {{4, 6}};
    steps[7].claim_N = {{4, 1}};
    steps[7].symplectic = {{0, 5, 6}, {5, 1, 1}};
    // 9
    steps[8].chains = {{0, 5, 0, 6}};
    steps[8].claim_P = {{5, 6}};
    steps[8].claim_N = {{5, 0}};
    steps[8].symplectic_saturate = true;
    return steps;
}

}  // namespace

ReplayReport replay_paper_steps(int n) {
    if (n != 4)
        throw std::invalid_argument("replay_paper_steps: the scripted schedule is for n = 4");
    ReplayReport report{false, false, {}, ClosureState(n, 0, 2 * n - 2)};
    report.state.add_seed(seed_B1B2(n, 0, 2 * n - 2));

    const auto script = nine_step_script();
    report.ok = true;
    for (size_t s = 0; s < script.size(); ++s) {
        StepReport sr;
        sr.step = static_cast<int>(s) + 1;
        const ScriptStep& step = script[s];
        for (const ScriptChain& ch : step.chains) {
            const SSet sset = make_sset(ch.a, ch.b, ch.c, ch.l);
            for (const Monomial& m : sset.members)
                if (!report.state.has(m)) {
                    sr.ok = false;
                    sr.notes.push_back("missing premise " + m.str() + " of S^{" +
                                       std::to_string(ch.a) + "," + std::to_string(ch.c) + "}_" +
                                       std::to_string(ch.b) + "(" + std::to_string(ch.l) + ")");
                }
            report.state.rule_chain(ch.b, ch.l);
        }
        for (const auto& [b, l] : step.claim_P)
            for (const Monomial& m : set_P(b, n, l))
                if (!report.state.has(m)) {
                    sr.ok = false;
                    sr.notes.push_back("claimed element " + m.str() + " of P_" +
                                       std::to_string(b) + "(" + std::to_string(l) +
                                       ") not generated");
                }
        for (const auto& [b, l] : step.claim_N)
            for (const Monomial& m : set_N(b, n, l))
                if (!report.state.has(m)) {
                    sr.ok = false;
                    sr.notes.push_back("claimed element " + m.str() + " of N_" +
                                       std::to_string(b) + "(" + std::to_string(l) +
                                       ") not generated");
                }
        for (const Monomial& m : step.symplectic) {
            if (report.state.has(m)) {
                sr.ok = false;
                sr.notes.push_back("claimed addition " + m.str() + " was already present");
                continue;
            }
            const auto added = report.state.rule_symplectic(m.i, m.j, m.l);
            if (added.empty()) {
                sr.ok = false;
                sr.notes.push_back("symplectic rule did not fire for " + m.str());
            }
        }
        if (step.symplectic_saturate) report.state.symplectic_saturate();
        report.ok = report.ok && sr.ok;
        report.steps.push_back(std::move(sr));
    }
    report.final_ok = final_check(report.state, n);
    report.ok = report.ok && report.final_ok;
    return report;
}

namespace {

std::string twist_ranges(const std::vector<int>& sorted_twists, const char* dash) {
    if (sorted_twists.empty()) return "";
    std::ostringstream os;
    size_t s = 0;
    while (s < sorted_twists.size()) {
        size_t e = s;
        while (e + 1 < sorted_twists.size() && sorted_twists[e + 1] == sorted_twists[e] + 1) ++e;
        if (s > 0) os << ',';
        if (e == s)
            os << sorted_twists[s];
        else
            os << sorted_twists[s] << dash << sorted_twists[e];
        s = e + 1;
    }
    return os.str();
}

std::vector<int> covered_twists(const ClosureState& state, int i, int j) {
    std::vector<int> out;
    for (int l = state.window_lo(); l <= state.window_hi(); ++l)
        if (state.has({i, j, l})) out.push_back(l);
    return out;
}

}  // namespace

std::string diagram_ascii(const ClosureState& state) {
    const int n = state.n();
    const int side = 2 * n - 2;
    std::ostringstream os;
    os << "covered twists per bundle U^{i,-j}  (rows: j, columns: i)\n";
    os << "  j\\i";
    for (int i = 0; i <= side; ++i) os << "  " << i << "    ";
    os << "\n";
    for (int j = 0; j <= side; ++j) {
        os << "  " << j << "  ";
        for (int i = 0; i + j <= side; ++i) {
            std::string label = twist_ranges(covered_twists(state, i, j), "-");
            if (label.empty()) label = ".";
            os << ' ' << '[' << label << ']';
            for (size_t pad = label.size(); pad < 4; ++pad) os << ' ';
        }
        os << "\n";
    }
    return os.str();
}

std::string diagram_svg(const ClosureState& state) {
    const int n = state.n();
    const int side = 2 * n - 2;
    const int cell = 64, margin = 40;
    const int w = margin * 2 + cell * (side + 1) + cell / 2 * (side);
    const int h = margin * 2 + cell * (side + 1);
    std::ostringstream os;
    os << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << w << "\" height=\"" << h
       << "\" font-family=\"monospace\" font-size=\"12\">\n";
    os << "  <rect width=\"100%\" height=\"100%\" fill=\"white\"/>\n";
    for (int j = 0; j <= side; ++j) {
        for (int i = 0; i + j <= side; ++i) {
            // triangular layout: each row of constant i+j is a diagonal
            const int x = margin + i * cell + j * (cell / 2);
            const int y = margin + j * cell;
            const auto twists = covered_twists(state, i, j);
            const bool full =
                static_cast<int>(twists.size()) == state.window_hi() - state.window_lo() + 1;
            os << "  <rect x=\"" << x << "\" y=\"" << y << "\" width=\"" << cell - 6
               << "\" height=\"" << cell - 6 << "\" fill=\"" << (full ? "#cde7c8" : "#f3d9a4")
               << "\" stroke=\"black\"/>\n";
            os << "  <text x=\"" << x + 6 << "\" y=\"" << y + 20 << "\">U[" << i << ",-" << j
               << "]</text>\n";
            std::string label = twist_ranges(twists, "\xC3\xB7");  // l1/l2 range, paper style
            if (label.empty()) label = "-";
            os << "  <text x=\"" << x + 6 << "\" y=\"" << y + 42 << "\">" << label << "</text>\n";
        }
    }
    os << "</svg>\n";
    return os.str();
}

}  // namespace igr
