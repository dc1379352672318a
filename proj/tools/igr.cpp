// igr: combinatorial computations on isotropic Grassmannians IGr(k,2n) and
// IGr(k,2n+1): Schur-bundle tensor decompositions, equivariant cohomology,
// Ext tables, staircase complexes, Lefschetz-collection checks and the
// fullness closure engine.

#include <CLI11.hpp>
#include <fstream>
#include <iostream>

#include "igr/complexes.hpp"
#include "igr/ext.hpp"
#include "igr/fullness.hpp"
#include "igr/invariants.hpp"
#include "igr/json_io.hpp"
#include "igr/verify.hpp"

using namespace igr;

namespace {

struct SpaceSpec {
    int k = 3;
    int m = 9;  // dim of the ambient vector space

    bool odd() const { return m % 2 == 1; }
    OddSpace odd_space() const { return OddSpace{k, (m - 1) / 2}; }
    EvenSpace even_space() const { return EvenSpace{k, m / 2}; }
};

SpaceSpec parse_space(const std::string& text) {
    int k = 0, m = 0;
    char c1 = 0, c2 = 0, c3 = 0, c4 = 0, c5 = 0;
    std::istringstream is(text);
    if (!(is >> c1 >> c2 >> c3 >> c4 >> k >> c5 >> m) || c1 != 'i' || c2 != 'g' || c3 != 'r' ||
        c4 != ':' || c5 != ':' || k < 1 || m < 2 * k)
        throw CLI::ValidationError("--space", "expected igr:k:m with 1 <= k and 2k <= m");
    return {k, m};
}

std::pair<int, int> parse_twist_range(const std::string& text) {
    const auto dots = text.find("..");
    if (dots == std::string::npos) {
        const int v = std::stoi(text);
        return {v, v};
    }
    return {std::stoi(text.substr(0, dots)), std::stoi(text.substr(dots + 2))};
}

std::string graded_str(const GradedDim& g) {
    if (g.is_zero()) return "0";
    std::ostringstream os;
    bool first = true;
    for (const auto& [deg, dim] : g.dims) {
        if (!first) os << " + ";
        first = false;
        if (dim != 1) os << dim << "*";
        os << "C[" << -deg << "]";
    }
    return os.str();
}

void emit(const Json& j) { std::cout << j.dump(2) << "\n"; }

FormalComplex named_complex(const std::string& name) {
    if (name == "E") return object_E();
    if (name == "F") return object_F();
    if (name == "H") return object_H();
    return single_term(parse_bundle(name));
}

// ---- subcommand bodies ----------------------------------------------------

int run_decompose(const std::string& a_text, const std::string& b_text, int twist, bool json) {
    const TwistedBundle a = parse_bundle(a_text).twist(twist);
    const TwistedBundle b = parse_bundle(b_text);
    const Decomposition d = tensor_product(a, b);
    if (json) {
        Json out = to_json(d);
        out["schema"] = "decomposition/1";
        emit(out);
    } else {
        for (const auto& [w, mult] : d.terms)
            std::cout << TwistedBundle(w).canonical_str() << "  x" << mult << "\n";
        std::cout << "# " << d.terms.size() << " distinct summands, total dim " << d.total_dim()
                  << "\n";
    }
    return 0;
}

int run_cohomology(const SpaceSpec& space, const std::string& bundle_text, bool json, bool page) {
    const TwistedBundle b = parse_bundle(bundle_text);
    if (!space.odd()) {
        const CohomologyResult r = bbw_even(space.even_space(), b);
        if (json) {
            emit(to_json(r));
        } else if (r.zero) {
            std::cout << "acyclic\n";
        } else {
            std::cout << "H^" << r.degree << " = Sp-rep " << r.rep.str() << ", dim " << r.dim
                      << "\n";
        }
        return 0;
    }
    const OddSpace X = space.odd_space();
    if (page) {
        const E1Page p = koszul_page(X, b);
        if (json) {
            emit(Json{{"schema", "page/1"}, {"page", to_json(p)}});
        } else {
            for (const auto& [pq, entries] : p.cells)
                for (const auto& e : entries)
                    std::cout << "p=" << pq.first << " q=" << pq.second << "  rep "
                              << e.rep.str() << "  mult " << e.mult << "  dim "
                              << e.mult * dim_sp(e.rep) << "\n";
            if (p.empty()) std::cout << "(empty page)\n";
        }
        return 0;
    }
    const CohomologyVerdict v = cohomology_odd(X, b);
    if (json) {
        emit(to_json(v));
    } else {
        switch (v.verdict) {
            case Verdict::Acyclic: std::cout << "acyclic\n"; break;
            case Verdict::Exact: std::cout << graded_str(v.graded) << "\n"; break;
            case Verdict::Indeterminate:
                std::cout << "indeterminate (" << v.page.cells.size()
                          << " occupied positions; euler " << v.euler() << ")\n";
                break;
        }
    }
    return 0;
}

int run_ext(const SpaceSpec& space, const std::string& a_text, const std::string& b_text,
            const std::string& twists, bool json) {
    if (!space.odd()) throw CLI::ValidationError("--space", "ext is computed on odd spaces");
    const OddSpace X = space.odd_space();
    const TwistedBundle a = parse_bundle(a_text), b = parse_bundle(b_text);
    const auto [lo, hi] = parse_twist_range(twists);
    Json rows = Json::array();
    for (int l = lo; l <= hi; ++l) {
        const ExtResult r = ext_groups(X, a.twist(l), b);
        if (json) {
            Json row = to_json(r);
            row["twist"] = l;
            rows.push_back(std::move(row));
        } else {
            std::cout << "Ext(" << a.twist(l).str() << ", " << b.str() << ") = ";
            if (r.verdict == Verdict::Indeterminate)
                std::cout << "indeterminate (euler " << r.euler << ")\n";
            else
                std::cout << graded_str(r.graded) << "\n";
        }
    }
    if (json) emit(Json{{"schema", "ext/1"}, {"results", rows}});
    return 0;
}

int run_staircase(int m, const std::string& weight_text, const std::string& trunc, bool json) {
    const TwistedBundle b = parse_bundle(weight_text);
    const GLWeight w = b.display_weight();
    if (w.rank() != 3 || w[1] != 0 || w[0] < 0 || w[2] > 0)
        throw CLI::ValidationError("--weight", "expected a weight of the form U[a,0,-b]");
    const int a = w[0], bb = -w[2];
    FormalComplex c = staircase(a, bb, m);
    if (b.display_twist() != 0) c = twist_complex(c, b.display_twist());
    if (!trunc.empty()) {
        // keep the untwisted right part (the printed truncation line)
        c = shift(truncate(c, -a, true), a);
    }
    if (json) {
        emit(to_json(c));
    } else {
        for (auto it = c.terms.rbegin(); it != c.terms.rend(); ++it)
            for (const auto& [bundle, mult] : it->second)
                std::cout << "deg " << it->first << ":  " << bundle.canonical_str() << "  x"
                          << mult << "\n";
    }
    return 0;
}

int run_pairing(const SpaceSpec& space, const std::string& left, const std::string& right,
                bool table, bool json) {
    if (!space.odd()) throw CLI::ValidationError("--space", "pairings live on odd spaces");
    const OddSpace X = space.odd_space();
    const FormalComplex c1 = named_complex(left), c2 = named_complex(right);
    const long long chi = euler_pairing(c1, c2, X);
    Json out{{"schema", "pairing/1"}, {"left", left}, {"right", right}, {"euler", chi}};
    if (table) out["table"] = to_json(ext_e1_table(c1, c2, X));
    if (json) {
        emit(out);
    } else {
        std::cout << "chi(" << left << ", " << right << ") = " << chi << "\n";
        if (table) {
            const TableVerdict v = ext_e1_table(c1, c2, X);
            std::cout << "first-page verdict: " << to_string(v.verdict);
            if (v.verdict == Verdict::Exact) std::cout << "  " << graded_str(v.graded);
            std::cout << "\n";
        }
    }
    return 0;
}

int check_collection_B(const OddSpace& X, int w, bool json) {
    // members: H then B1; bundle pairs use Ext of bundles, pairs involving H
    // go through the first-page table for formal complexes
    std::vector<std::pair<std::string, FormalComplex>> objects;
    objects.emplace_back("H", object_H());
    for (const TwistedBundle& b : preset_collection("B1").members)
        objects.emplace_back(b.str(), single_term(b));

    bool pass = true, any_indet = false;
    Json rows = Json::array();
    for (size_t j = 0; j < objects.size(); ++j)
        for (size_t i = 0; i <= j; ++i)
            for (int t = 0; t < w; ++t) {
                const FormalComplex src = twist_complex(objects[j].second, t);
                const TableVerdict v = ext_e1_table(src, objects[i].second, X);
                const bool expect_unit = (t == 0 && i == j);
                bool ok = false;
                if (v.verdict == Verdict::Indeterminate) {
                    any_indet = true;
                    // the Euler pairing is still exact evidence
                    ok = false;
                } else if (expect_unit) {
                    ok = v.graded.dims.size() == 1 && v.graded.at(0) == 1;
                } else {
                    ok = v.graded.is_zero();
                }
                pass = pass && ok;
                Json row{{"source", objects[j].first},  {"target", objects[i].first},
                         {"twist", t},                  {"verdict", to_string(v.verdict)},
                         {"euler", v.euler},            {"expected", expect_unit ? "C[0]" : "0"},
                         {"ok", ok}};
                rows.push_back(std::move(row));
            }
    Json out{{"schema", "check-report/1"}, {"kind", "lefschetz-basis"}, {"collection", "B"},
             {"index", w},                 {"pass", pass},              {"indeterminate", any_indet},
             {"pairs", rows}};
    if (json) {
        emit(out);
    } else {
        int printed = 0;
        for (const auto& row : out["pairs"])
            if (!row["ok"].get<bool>() && printed++ < 20)
                std::cout << "  " << row["source"].get<std::string>() << "("
                          << row["twist"].get<long long>() << ") -> "
                          << row["target"].get<std::string>() << ": "
                          << row["verdict"].get<std::string>() << ", euler "
                          << row["euler"].get<long long>() << "\n";
        std::cout << "collection B with index " << w << ": "
                  << (pass ? "pass"
                           : any_indet ? "not determined at the first-page level" : "fail")
                  << "\n";
    }
    if (pass) return 0;
    return any_indet ? 3 : 2;
}

int run_check_collection(const SpaceSpec& space, const std::string& preset, int w, int threads,
                         bool blocks_only, bool json) {
    if (!space.odd() || space.k != 3 || space.m != 9)
        throw CLI::ValidationError("--space", "collection presets are defined on igr:3:9");
    const OddSpace X = space.odd_space();
    if (preset == "B") return check_collection_B(X, w, json);

    const CollectionSpec c = preset_collection(preset);
    const CheckReport r = blocks_only ? check_block_semiorthogonality(X, c, w, threads)
                                      : check_lefschetz_basis(X, c, w, threads);
    if (json) {
        emit(to_json(r));
    } else {
        for (const PairResult* p : r.failures())
            std::cout << "  " << c.members[static_cast<size_t>(p->j)].str() << "(" << p->twist
                      << ") -> " << c.members[static_cast<size_t>(p->i)].str() << ": "
                      << (p->verdict == Verdict::Indeterminate ? "indeterminate"
                                                               : graded_str(p->graded))
                      << " (expected " << p->expected << ")\n";
        std::cout << "collection " << c.name << " with index " << w << ": "
                  << (r.pass ? "pass" : "fail") << " (" << r.pairs.size() << " pair checks)\n";
    }
    return r.exit_code();
}

int run_fullness(const SpaceSpec& space, const std::string& mode, const std::string& seed,
                 const std::string& log_path, const std::string& diagram_path, bool json) {
    if (!space.odd() || space.k != 3)
        throw CLI::ValidationError("--space", "the closure engine runs on igr:3:2n+1");
    const int n = space.odd_space().n;
    const int hi = 2 * n - 2;

    auto finish = [&](const ClosureState& state, const Json& extra, bool ok) {
        if (!log_path.empty()) {
            std::ofstream f(log_path);
            f << Json{{"schema", "fullness-log/1"}, {"log", to_json(state.log())}}.dump(2)
              << "\n";
        }
        if (!diagram_path.empty()) {
            std::ofstream f(diagram_path);
            f << (diagram_path.size() > 4 &&
                          diagram_path.compare(diagram_path.size() - 4, 4, ".svg") == 0
                      ? diagram_svg(state)
                      : diagram_ascii(state));
        }
        if (json) emit(extra);
        return ok ? 0 : 2;
    };

    if (mode == "replay") {
        if (n != 4) throw CLI::ValidationError("--mode", "the scripted replay requires igr:3:9");
        const ReplayReport r = replay_paper_steps(n);
        if (!json) {
            for (const auto& s : r.steps) {
                std::cout << "step " << s.step << ": " << (s.ok ? "ok" : "FAILED") << "\n";
                for (const auto& note : s.notes) std::cout << "    " << note << "\n";
            }
            std::cout << "final check: " << (r.final_ok ? "ok" : "FAILED") << " ("
                      << r.state.present().size() << " bundles)\n";
        }
        return finish(r.state, to_json(r), r.ok);
    }
    if (mode != "saturate") throw CLI::ValidationError("--mode", "expected saturate or replay");

    std::vector<Monomial> seeds;
    if (seed == "preset:B1B2")
        seeds = seed_B1B2(n, 0, hi);
    else if (seed == "preset:T")
        for (int l = 0; l <= hi; ++l)
            for (const Monomial& m : universe_T(n)) seeds.push_back({m.i, m.j, l});
    else
        throw CLI::ValidationError("--seed", "expected preset:B1B2 or preset:T");

    const ClosureState state = saturate(seeds, n, 0, hi);
    const bool ok = final_check(state, n);
    const size_t universe_size = universe_T(n).size() * static_cast<size_t>(hi + 1);
    if (!json) {
        std::cout << "covered " << state.present().size() << " of " << universe_size
                  << " bundles in " << state.log().size() << " logged steps; final check "
                  << (ok ? "passed" : "FAILED") << "\n";
    }
    return finish(state,
                  Json{{"schema", "saturate-report/1"},
                       {"covered", state.present().size()},
                       {"universe", universe_size},
                       {"final_check", ok},
                       {"steps", state.log().size()}},
                  ok);
}

int run_k0(const SpaceSpec& space, bool json) {
    const SpaceInvariants s = space.odd() ? invariants_odd(space.k, (space.m - 1) / 2)
                                          : invariants_even(space.k, space.m / 2);
    Json out = to_json(s);
    out["schema"] = "invariants/1";
    out["space"] = "igr:" + std::to_string(space.k) + ":" + std::to_string(space.m);
    if (space.odd() && space.k == 3) {
        const auto p = divisibility_check((space.m - 1) / 2);
        out["divisibility_p"] = p ? Json(*p) : Json(nullptr);
    }
    if (json) {
        emit(out);
    } else {
        std::cout << "dimension " << s.dimension << ", index " << s.index << ", K0 rank "
                  << s.k0_rank;
        if (s.lefschetz_length) std::cout << ", Lefschetz length " << *s.lefschetz_length;
        std::cout << "\n";
    }
    return 0;
}

int run_verify(int threads, bool json) {
    const VerifyReport r = verify_paper(threads);
    if (json) {
        Json items = Json::array();
        for (const auto& it : r.items)
            items.push_back(Json{{"name", it.name},
                                 {"pass", it.pass},
                                 {"indeterminate", it.indeterminate},
                                 {"detail", it.detail}});
        emit(Json{{"schema", "verify-report/1"},
                  {"pass", r.pass()},
                  {"exit_code", r.exit_code()},
                  {"items", items}});
    } else {
        for (const auto& it : r.items) {
            std::cout << (it.pass ? "[ ok ] " : "[FAIL] ") << it.name;
            if (!it.pass && !it.detail.empty()) std::cout << "  (" << it.detail << ")";
            std::cout << "\n";
        }
        std::cout << (r.pass() ? "all checks passed" : "checks FAILED") << "\n";
    }
    return r.exit_code();
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"equivariant bundles on isotropic Grassmannians: decompositions, cohomology,"
                 " Lefschetz collection checks and the fullness engine"};
    app.require_subcommand(1);

    std::string space_text = "igr:3:9";
    std::string a_text, b_text, weight_text, twists = "0", preset = "B1", mode = "saturate";
    std::string seed = "preset:B1B2", log_path, diagram_path, trunc, left, right;
    int twist = 0, m_dim = 9, index_w = 7, threads = 1;
    bool json = false, page = false, table = false, blocks_only = false;

    auto* decompose = app.add_subcommand("decompose", "tensor decomposition of two bundles");
    decompose->add_option("A", a_text, "first factor, e.g. U[2,0,0]")->required();
    decompose->add_option("B", b_text, "second factor")->required();
    decompose->add_option("--twist", twist, "extra twist applied to the product");
    decompose->add_flag("--json", json);

    auto* cohomology = app.add_subcommand("cohomology", "cohomology of U^lambda(t)");
    cohomology->add_option("--space", space_text);
    cohomology->add_option("bundle", weight_text, "e.g. U[0,0,-5] or U[0,0,-1](2)")->required();
    cohomology->add_flag("--json", json);
    cohomology->add_flag("--page", page, "dump the first page instead of the verdict");

    auto* ext = app.add_subcommand("ext", "Ext groups Ext(A(t), B) over a twist range");
    ext->add_option("A", a_text)->required();
    ext->add_option("B", b_text)->required();
    ext->add_option("--twists", twists, "single twist or range a..b");
    ext->add_option("--space", space_text);
    ext->add_flag("--json", json);

    auto* stair = app.add_subcommand("staircase", "staircase complex for U[a,0,-b] on Gr(3,m)");
    stair->add_option("--m", m_dim, "ambient dimension")->required();
    stair->add_option("--weight", weight_text)->required();
    stair->add_option("--truncate", trunc, "E or F: keep the untwisted right part")
        ->check(CLI::IsMember({"E", "F"}));
    stair->add_flag("--json", json);

    auto* pairing = app.add_subcommand("pairing", "Euler pairing between formal complexes");
    pairing->add_option("--left", left, "E, F, H or a bundle literal")->required();
    pairing->add_option("--right", right)->required();
    pairing->add_option("--space", space_text);
    pairing->add_flag("--table", table, "also report the first-page verdict");
    pairing->add_flag("--json", json);

    auto* check = app.add_subcommand("check-collection", "Lefschetz-basis check for a preset");
    check->add_option("--space", space_text);
    check->add_option("--preset", preset)->check(CLI::IsMember({"B1", "B2", "B", "B1B2"}));
    check->add_option("--index", index_w, "Fano index (number of twists checked)");
    check->add_option("--threads", threads);
    check->add_flag("--blocks", blocks_only,
                    "check block semiorthogonality only (twists 1..w-1, all pairs)");
    check->add_flag("--json", json);

    auto* fullness = app.add_subcommand("fullness", "closure engine: saturate or replay");
    fullness->add_option("--space", space_text);
    fullness->add_option("--mode", mode)->check(CLI::IsMember({"saturate", "replay"}));
    fullness->add_option("--seed", seed, "preset:B1B2 or preset:T");
    fullness->add_option("--log", log_path, "write the step log as JSON");
    fullness->add_option("--diagram", diagram_path, "write the coverage diagram (.txt or .svg)");
    fullness->add_flag("--json", json);

    auto* k0 = app.add_subcommand("k0", "dimension, index and K0 rank");
    k0->add_option("--space", space_text);
    k0->add_flag("--json", json);

    auto* verify = app.add_subcommand("verify-paper", "run the full verification pipeline");
    verify->add_option("--threads", threads);
    verify->add_flag("--json", json);

    CLI11_PARSE(app, argc, argv);

    try {
        const SpaceSpec space = parse_space(space_text);
        if (decompose->parsed()) return run_decompose(a_text, b_text, twist, json);
        if (cohomology->parsed()) return run_cohomology(space, weight_text, json, page);
        if (ext->parsed()) return run_ext(space, a_text, b_text, twists, json);
        if (stair->parsed()) return run_staircase(m_dim, weight_text, trunc, json);
        if (pairing->parsed()) return run_pairing(space, left, right, table, json);
        if (check->parsed())
            return run_check_collection(space, preset, index_w, threads, blocks_only, json);
        if (fullness->parsed())
            return run_fullness(space, mode, seed, log_path, diagram_path, json);
        if (k0->parsed()) return run_k0(space, json);
        if (verify->parsed()) return run_verify(threads, json);
    } catch (const CLI::ValidationError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
    return 1;
}
