#include "igr/oddcoh.hpp"

#include <stdexcept>

namespace igr {

long long E1Page::dim_at(int p, int q) const {
    auto it = cells.find({p, q});
    if (it == cells.end()) return 0;
    long long s = 0;
    for (const auto& e : it->second) s += e.mult * dim_sp(e.rep);
    return s;
}

long long E1Page::total_dim() const {
    long long s = 0;
    for (const auto& [pq, entries] : cells)
        for (const auto& e : entries) s += e.mult * dim_sp(e.rep);
    return s;
}

long long E1Page::euler() const {
    long long s = 0;
    for (const auto& [pq, entries] : cells) {
        const int sign = ((pq.second - pq.first) % 2 == 0) ? 1 : -1;
        for (const auto& e : entries) s += sign * e.mult * dim_sp(e.rep);
    }
    return s;
}

void GradedDim::add(int degree, long long d) {
    if (d == 0) return;
    auto [it, inserted] = dims.emplace(degree, d);
    if (!inserted) {
        it->second += d;
        if (it->second == 0) dims.erase(it);
    }
}

long long GradedDim::at(int degree) const {
    auto it = dims.find(degree);
    return it == dims.end() ? 0 : it->second;
}

long long GradedDim::euler() const {
    long long s = 0;
    for (const auto& [d, v] : dims) s += (d % 2 == 0 ? 1 : -1) * v;
    return s;
}

long long GradedDim::total() const {
    long long s = 0;
    for (const auto& [d, v] : dims) s += v;
    return s;
}

const char* to_string(Verdict v) {
    switch (v) {
        case Verdict::Acyclic: return "acyclic";
        case Verdict::Exact: return "exact";
        case Verdict::Indeterminate: return "indeterminate";
    }
    return "?";
}

E1Page koszul_page(const OddSpace& space, const TwistedBundle& bundle) {
    if (bundle.rank() != space.k)
        throw std::invalid_argument("koszul_page: weight rank does not match the space");
    const int k = space.k;
    const EvenSpace ambient = space.ambient();

    E1Page page;
    page.source = bundle;
    for (int p = 0; p <= k; ++p) {
        // wedge^p of the tautological subbundle carries the weight (0^{k-p}, (-1)^p)
        std::vector<int> wedge(static_cast<size_t>(k), 0);
        for (int i = k - p; i < k; ++i) wedge[static_cast<size_t>(i)] = -1;
        const Decomposition dec = lr(bundle.absorbed(), GLWeight(wedge));
        for (const auto& [gamma, mult] : dec.terms) {
            const CohomologyResult r = bbw_even(ambient, gamma);
            if (r.zero) continue;
            page.cells[{p, r.degree}].push_back({r.rep, mult});
        }
    }
    return page;
}

bool page_has_possible_differential(const E1Page& page) {
    for (auto it1 = page.cells.begin(); it1 != page.cells.end(); ++it1) {
        for (auto it2 = page.cells.begin(); it2 != page.cells.end(); ++it2) {
            if (it1 == it2) continue;
            const int dp = it1->first.first - it2->first.first;   // source p - target p
            const int dq = it1->first.second - it2->first.second;  // source q - target q
            if (dp >= 1 && dq == dp - 1) return true;
        }
    }
    return false;
}

CohomologyVerdict cohomology_odd(const OddSpace& space, const TwistedBundle& bundle) {
    CohomologyVerdict out;
    out.page = koszul_page(space, bundle);
    if (out.page.empty()) {
        out.verdict = Verdict::Acyclic;
        return out;
    }
    if (page_has_possible_differential(out.page)) {
        out.verdict = Verdict::Indeterminate;
        return out;
    }
    out.verdict = Verdict::Exact;
    for (const auto& [pq, entries] : out.page.cells) {
        long long d = 0;
        for (const auto& e : entries) d += e.mult * dim_sp(e.rep);
        out.graded.add(pq.second - pq.first, d);
    }
    return out;
}

bool vanish_odd(const OddSpace& space, const GLWeight& lambda) {
    if (lambda.rank() != space.k)
        throw std::invalid_argument("vanish_odd: weight rank does not match the space");
    const int k = space.k, n = space.n;
    if (lambda[k - 1] >= 0) return false;
    if (lambda[0] < -2 * n + k - 1) return false;
    for (int i = 0; i + 1 < k; ++i)
        if (lambda[i] - lambda[i + 1] > 2 * (n + 1 - k)) return false;
    return true;
}

namespace {

bool jumps_at_most(const GLWeight& lambda, int bound) {
    for (int i = 0; i + 1 < lambda.rank(); ++i)
        if (lambda[i] - lambda[i + 1] > bound) return false;
    return true;
}

bool specialized(const GLWeight& lambda, int l, int plain_lower, int jump_bound,
                 int bounded_branch_threshold) {
    const int k = lambda.rank();
    if (!jumps_at_most(lambda, jump_bound)) return false;
    // plain criterion applied to lambda - (l,...,l)
    if (lambda[k - 1] - l < 0 && lambda[0] - l >= plain_lower) return true;
    // bounded-first-entry branch, valid for twists 0..6
    if (lambda[k - 1] < 0 && lambda[0] >= bounded_branch_threshold && l >= 0 && l <= 6) return true;
    return false;
}

}  // namespace

bool vanish_specialized(const OddSpace& space, const GLWeight& lambda, int l) {
    if (space.k != 3 || space.n != 4)
        throw std::invalid_argument("vanish_specialized: stated for IGr(3,9) only");
    return specialized(lambda, l, -6, 4, 0);
}

bool vanish_specialized(const EvenSpace& space, const GLWeight& lambda, int l) {
    if (space.k != 3 || space.n != 5)
        throw std::invalid_argument("vanish_specialized: stated for IGr(3,10) only");
    return specialized(lambda, l, -7, 5, -1);
}

}  // namespace igr
