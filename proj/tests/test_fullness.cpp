#include <doctest.h>

#include <stdexcept>

#include <algorithm>
#include <set>

#include "igr/complexes.hpp"
#include "igr/fullness.hpp"

using namespace igr;

TEST_CASE("universe sizes") {
    CHECK(universe_T(4).size() == 28);
    CHECK(universe_T(2).size() == 6);
    const auto t = universe_T(4);
    CHECK(std::find(t.begin(), t.end(), Monomial{0, 0, 0}) != t.end());
}

TEST_CASE("both diagonal families partition the universe") {
    const int n = 4;
    std::set<Monomial> from_p, from_n;
    size_t total_p = 0, total_n = 0;
    for (int b = 0; b <= 2 * n - 2; ++b) {
        const auto p = set_P(b, n, 0);
        total_p += p.size();
        from_p.insert(p.begin(), p.end());
        const auto nn = set_N(b, n, 0);
        total_n += nn.size();
        from_n.insert(nn.begin(), nn.end());
    }
    const auto t = universe_T(n);
    CHECK(from_p == std::set<Monomial>(t.begin(), t.end()));
    CHECK(from_n == std::set<Monomial>(t.begin(), t.end()));
    CHECK(total_p == t.size());  // disjoint
    CHECK(total_n == t.size());
}

TEST_CASE("S-sets have the stated size") {
    for (int b = 0; b <= 6; ++b)
        for (int a = -1; a <= 7; ++a)
            for (int c = -1; a + b + c <= 7; ++c) {
                const SSet s = make_sset(a, b, c, 0);
                CHECK(static_cast<int>(s.members.size()) == a + b + c + 2);
            }
}

TEST_CASE("S-sets match the right ends of staircase complexes") {
    // for a, b >= 0 the set consists of the rightmost a+b+c+2 bundles of the
    // complex resolving U^{a,-b} on Gr(3, 2n+1)
    const int n = 4, m = 2 * n + 1;
    for (int a = 0; a + 1 <= 6; ++a)
        for (int b = 0; a + b <= 6; ++b) {
            const int c = 2 * n - 2 - a - b;  // full complex
            const SSet s = make_sset(a, b, c, 0);
            const FormalComplex stair = staircase(a, b, m);
            std::set<TwistedBundle> sset_bundles, stair_bundles;
            for (const Monomial& mm : s.members) sset_bundles.insert(mm.bundle());
            for (const auto& [d, slot] : stair.terms)
                for (const auto& [bundle, mult] : slot) stair_bundles.insert(bundle);
            CHECK(sset_bundles == stair_bundles);
        }
}

TEST_CASE("duality of S-sets") {
    for (int b = 0; b <= 6; ++b)
        for (int a = -1; a <= 7; ++a)
            for (int c = -1; a + b + c <= 7; ++c)
                for (int l = 0; l <= 2; ++l) {
                    const SSet s = make_sset(a, b, c, l);
                    std::set<Monomial> dualized;
                    for (const Monomial& m : s.members) dualized.insert(m.dual());
                    const SSet mirrored = make_sset(c, b, a, b + 1 - l);
                    const std::set<Monomial> expect(mirrored.members.begin(),
                                                    mirrored.members.end());
                    CHECK(dualized == expect);
                }
}

TEST_CASE("staircase rule requires its premises") {
    ClosureState state(4, 0, 6);
    CHECK(state.rule_staircase(3, 0, 2, 1).empty());  // nothing seeded yet
    state.add_seed(seed_B1B2(4, 0, 6));
    const auto added = state.rule_staircase(3, 0, 2, 1);
    REQUIRE(added.size() == 2);
    CHECK(added[0] == Monomial{4, 0, 1});
    CHECK(added[1] == Monomial{0, 3, 0});
    CHECK_THROWS_AS(state.rule_staircase(1, 1, 1, 0), std::invalid_argument);  // sum != 2n-3
}

TEST_CASE("symplectic rule fires only above the middle layer") {
    ClosureState state(4, 0, 6);
    CHECK_THROWS_AS(state.rule_symplectic(1, 1, 0), std::invalid_argument);  // p = 2 = n - 2
    state.add_seed(seed_B1B2(4, 0, 6));
    CHECK(state.rule_symplectic(1, 2, 0).empty());  // premises missing
}

TEST_CASE("chain covers both diagonal families") {
    ClosureState state(4, 0, 6);
    state.add_seed(seed_B1B2(4, 0, 6));
    const auto added = state.rule_chain(0, 1);
    CHECK_FALSE(added.empty());
    for (const Monomial& m : set_P(0, 4, 1)) CHECK(state.has(m));
    for (const Monomial& m : set_N(0, 4, 0)) CHECK(state.has(m));
    // log has exactly one seed and one chain record
    REQUIRE(state.log().size() == 2);
    CHECK(state.log()[0].rule == RuleKind::Seed);
    CHECK(state.log()[1].rule == RuleKind::Chain);
}

TEST_CASE("saturation from the eight generators covers the full window") {
    const ClosureState state = saturate(seed_B1B2(4, 0, 6), 4, 0, 6);
    CHECK(state.present().size() == 196);
    CHECK(final_check(state, 4));
}

TEST_CASE("saturation is monotone and the log replays exactly") {
    const ClosureState state = saturate(seed_B1B2(4, 0, 6), 4, 0, 6);

    // present sets grow strictly along the log
    size_t size = 0;
    for (const StepRecord& r : state.log()) {
        CHECK_FALSE(r.additions.empty());
        size += r.additions.size();
    }
    CHECK(size == state.present().size());

    // replay from the seed using only the recorded rules
    ClosureState replayed(4, 0, 6);
    for (const StepRecord& r : state.log()) {
        switch (r.rule) {
            case RuleKind::Seed: replayed.add_seed(r.additions); break;
            case RuleKind::Staircase: {
                CHECK(replayed.has_all(r.premises));
                const auto got = replayed.rule_staircase(r.a, r.b, r.c, r.l);
                CHECK(got == r.additions);
                break;
            }
            case RuleKind::Symplectic: {
                CHECK(replayed.has_all(r.premises));
                const auto got = replayed.rule_symplectic(r.i, r.j, r.l);
                CHECK(got == r.additions);
                break;
            }
            case RuleKind::Chain: FAIL("saturation must not emit chain records"); break;
        }
    }
    CHECK(replayed.present() == state.present());
}

TEST_CASE("saturation is deterministic run to run") {
    const ClosureState a = saturate(seed_B1B2(4, 0, 6), 4, 0, 6);
    const ClosureState b = saturate(seed_B1B2(4, 0, 6), 4, 0, 6);
    REQUIRE(a.log().size() == b.log().size());
    for (size_t t = 0; t < a.log().size(); ++t) {
        CHECK(a.log()[t].rule == b.log()[t].rule);
        CHECK(a.log()[t].additions == b.log()[t].additions);
        CHECK(a.log()[t].premises == b.log()[t].premises);
    }
}

TEST_CASE("degenerate saturations") {
    // seeding the whole universe leaves nothing to do
    std::vector<Monomial> full;
    for (int l = 0; l <= 6; ++l)
        for (const Monomial& m : universe_T(4)) full.push_back({m.i, m.j, l});
    const ClosureState state = saturate(full, 4, 0, 6);
    CHECK(state.log().size() == 1);  // only the seed record
    CHECK(final_check(state, 4));

    const ClosureState empty = saturate({}, 4, 0, 6);
    CHECK(empty.present().empty());
    CHECK(empty.log().empty());
    CHECK_FALSE(final_check(empty, 4));
}

TEST_CASE("the scripted nine steps replay cleanly") {
    const ReplayReport r = replay_paper_steps(4);
    CHECK(r.ok);
    CHECK(r.final_ok);
    REQUIRE(r.steps.size() == 9);
    for (const StepReport& s : r.steps) {
        CHECK(s.ok);
        for (const auto& note : s.notes) MESSAGE(note);
    }
    CHECK(r.state.present().size() == 196);
    CHECK_THROWS_AS(replay_paper_steps(3), std::invalid_argument);
}

TEST_CASE("saturation reaches at least the scripted replay") {
    const ReplayReport r = replay_paper_steps(4);
    const ClosureState s = saturate(seed_B1B2(4, 0, 6), 4, 0, 6);
    for (const Monomial& m : r.state.present()) CHECK(s.has(m));
}

TEST_CASE("diagrams mention every cell") {
    const ClosureState state = saturate(seed_B1B2(4, 0, 6), 4, 0, 6);
    const std::string ascii = diagram_ascii(state);
    CHECK(ascii.find("[0-6]") != std::string::npos);
    const std::string svg = diagram_svg(state);
    CHECK(svg.find("<svg") != std::string::npos);
    CHECK(svg.find("U[6,-0]") != std::string::npos);
    CHECK(svg.rfind("</svg>") != std::string::npos);
}
