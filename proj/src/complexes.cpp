#include "igr/complexes.hpp"

#include <stdexcept>

namespace igr {

void FormalComplex::add(int degree, const TwistedBundle& b, long long mult) {
    if (mult == 0) return;
    auto& slot = terms[degree];
    auto [it, inserted] = slot.emplace(b, mult);
    if (!inserted) {
        it->second += mult;
        if (it->second == 0) slot.erase(it);
    }
    if (slot.empty()) terms.erase(degree);
}

int FormalComplex::min_degree() const {
    if (terms.empty()) throw std::logic_error("empty complex");
    return terms.begin()->first;
}

int FormalComplex::max_degree() const {
    if (terms.empty()) throw std::logic_error("empty complex");
    return terms.rbegin()->first;
}

long long FormalComplex::term_count() const {
    long long n = 0;
    for (const auto& [d, slot] : terms) n += static_cast<long long>(slot.size());
    return n;
}

long long binomial(int n, int r) {
    if (r < 0 || r > n) return 0;
    r = std::min(r, n - r);
    long long out = 1;
    for (int i = 1; i <= r; ++i) out = out * (n - r + i) / i;
    return out;
}

GLWeight staircase_weight(int a, int b, int m, int i) {
    if (i < 0 || i > m - 2) throw std::invalid_argument("staircase_weight: index out of range");
    if (i <= a) return GLWeight{a - i, 0, -b};
    if (i <= a + b) return GLWeight{-1, a - i, -b};
    return GLWeight{-1, -b - 1, a - i};
}

FormalComplex staircase(int a, int b, int m) {
    if (a < 0 || b < 0) throw std::invalid_argument("staircase: a, b must be nonnegative");
    if (a + b > m - 3) throw std::invalid_argument("staircase: requires a + b <= m - 3");
    FormalComplex c;
    c.ambient = m;
    const int total = a - b;  // |lambda| for lambda = (a, 0, -b)
    for (int i = 0; i <= m - 2; ++i) {
        const GLWeight mu = staircase_weight(a, b, m, i);
        const int nu = total - mu.sum();
        c.add(-i, TwistedBundle(mu), binomial(m, nu));
    }
    return c;
}

FormalComplex truncate(const FormalComplex& c, int cut, bool keep_above) {
    if (c.terms.find(cut) == c.terms.end())
        throw std::invalid_argument("truncate: cut degree not within support");
    FormalComplex out;
    out.ambient = c.ambient;
    for (const auto& [d, slot] : c.terms) {
        if (keep_above ? d >= cut : d <= cut)
            for (const auto& [bundle, mult] : slot) out.add(d, bundle, mult);
    }
    return out;
}

FormalComplex shift(const FormalComplex& c, int s) {
    FormalComplex out;
    out.ambient = c.ambient;
    for (const auto& [d, slot] : c.terms)
        for (const auto& [bundle, mult] : slot) out.add(d + s, bundle, mult);
    return out;
}

FormalComplex twist_complex(const FormalComplex& c, int l) {
    FormalComplex out;
    out.ambient = c.ambient;
    for (const auto& [d, slot] : c.terms)
        for (const auto& [bundle, mult] : slot) out.add(d, bundle.twist(l), mult);
    return out;
}

FormalComplex dual_complex(const FormalComplex& c, int l) {
    FormalComplex out;
    out.ambient = c.ambient;
    for (const auto& [d, slot] : c.terms)
        for (const auto& [bundle, mult] : slot) out.add(-d, bundle.dual().twist(l), mult);
    return out;
}

long long rank_of(const FormalComplex& c) {
    long long r = 0;
    for (const auto& [d, slot] : c.terms) {
        const int sign = (d % 2 == 0) ? 1 : -1;
        for (const auto& [bundle, mult] : slot) r += sign * mult * dim_gl(bundle.absorbed());
    }
    return r;
}

bool restriction_split_check(int a, int b, int m) {
    if (a < 1) throw std::invalid_argument("restriction_split_check: requires a >= 1");
    if (b < 0 || a + b > m - 3)
        throw std::invalid_argument("restriction_split_check: requires 0 <= b and a + b <= m - 3");
    const FormalComplex big = staircase(a, b, m + 1);
    const FormalComplex part1 = staircase(a, b, m);
    const FormalComplex part2 = shift(staircase(a - 1, b, m), -1);

    FormalComplex merged;
    merged.ambient = m;
    for (const auto& [d, slot] : part1.terms)
        for (const auto& [bundle, mult] : slot) merged.add(d, bundle, mult);
    for (const auto& [d, slot] : part2.terms)
        for (const auto& [bundle, mult] : slot) merged.add(d, bundle, mult);

    return big.terms == merged.terms;
}

long long euler_pairing(const FormalComplex& c1, const FormalComplex& c2, const OddSpace& space) {
    long long chi = 0;
    for (const auto& [d1, slot1] : c1.terms)
        for (const auto& [t1, m1] : slot1)
            for (const auto& [d2, slot2] : c2.terms)
                for (const auto& [t2, m2] : slot2) {
                    const int sign = ((d2 - d1) % 2 == 0) ? 1 : -1;
                    chi += sign * m1 * m2 * ext_groups(space, t1, t2).euler;
                }
    return chi;
}

TableVerdict ext_e1_table(const FormalComplex& c1, const FormalComplex& c2,
                          const OddSpace& space) {
    TableVerdict out;
    bool indeterminate = false;
    std::map<std::pair<int, int>, long long> entries;  // (s, t) -> dim

    for (const auto& [d1, slot1] : c1.terms)
        for (const auto& [t1, m1] : slot1)
            for (const auto& [d2, slot2] : c2.terms)
                for (const auto& [t2, m2] : slot2) {
                    const ExtResult r = ext_groups(space, t1, t2);
                    const int sign = ((d2 - d1) % 2 == 0) ? 1 : -1;
                    out.euler += sign * m1 * m2 * r.euler;
                    if (r.verdict == Verdict::Indeterminate) {
                        indeterminate = true;
                        continue;
                    }
                    for (const auto& [t, dim] : r.graded.dims) {
                        long long& cell = entries[{d2 - d1, t}];
                        cell += m1 * m2 * dim;
                        if (cell == 0) entries.erase({d2 - d1, t});
                    }
                }

    if (indeterminate) {
        out.verdict = Verdict::Indeterminate;
        return out;
    }
    // hypercohomology differentials d_r: (s,t) -> (s+r, t-r+1), r >= 1
    for (auto it1 = entries.begin(); it1 != entries.end(); ++it1)
        for (auto it2 = entries.begin(); it2 != entries.end(); ++it2) {
            if (it1 == it2) continue;
            const int ds = it2->first.first - it1->first.first;
            const int dt = it2->first.second - it1->first.second;
            if (ds >= 1 && ds + dt == 1) {
                out.verdict = Verdict::Indeterminate;
                return out;
            }
        }
    for (const auto& [st, dim] : entries) out.graded.add(st.first + st.second, dim);
    out.verdict = out.graded.is_zero() ? Verdict::Acyclic : Verdict::Exact;
    return out;
}

FormalComplex object_E() {
    // untwisted right part of the staircase complex for U^{3,0,0} on Gr(3,9)
    return shift(truncate(staircase(3, 0, 9), -3, true), 3);
}

FormalComplex object_F() {
    // untwisted right part of the staircase complex for U^{2,0,-1} on Gr(3,9)
    return shift(truncate(staircase(2, 1, 9), -2, true), 2);
}

FormalComplex object_H() {
    // cone of the unique map F -> E: F[1] plus E
    const FormalComplex e = object_E();
    FormalComplex h = shift(object_F(), -1);
    for (const auto& [d, slot] : e.terms)
        for (const auto& [bundle, mult] : slot) h.add(d, bundle, mult);
    return h;
}

FormalComplex single_term(const TwistedBundle& b, int m) {
    FormalComplex c;
    c.ambient = m;
    c.add(0, b, 1);
    return c;
}

}  // namespace igr
