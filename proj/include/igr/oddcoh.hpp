#pragma once

#include <map>
#include <utility>
#include <vector>

#include "igr/bbw.hpp"
#include "igr/schur.hpp"
#include "igr/weights.hpp"

namespace igr {

// The odd isotropic Grassmannian IGr(k, 2n+1), realized as a hyperplane
// section of the ambient even space IGr(k, 2n+2).
struct OddSpace {
    int k = 0;
    int n = 0;

    EvenSpace ambient() const { return EvenSpace{k, n + 1}; }
    long long dimension() const { return static_cast<long long>(k) * (4 * n - 3 * k + 3) / 2; }
    int index() const { return 2 * n + 2 - k; }
};

struct PageEntry {
    SpWeight rep;
    long long mult = 0;
};

// First page of the Koszul spectral sequence: column -p (p = 0..k) holds the
// even cohomology of the summands of U^lambda (x) wedge^p U.
struct E1Page {
    TwistedBundle source;
    std::map<std::pair<int, int>, std::vector<PageEntry>> cells;  // (p, q) -> entries

    bool empty() const { return cells.empty(); }
    long long dim_at(int p, int q) const;
    long long total_dim() const;
    // Alternating sum over the page; valid without any degeneration argument.
    long long euler() const;
};

// Finitely supported map degree -> dimension.
struct GradedDim {
    std::map<int, long long> dims;

    void add(int degree, long long d);
    bool is_zero() const { return dims.empty(); }
    long long at(int degree) const;
    long long euler() const;
    long long total() const;
    bool operator==(const GradedDim&) const = default;
};

enum class Verdict { Acyclic, Exact, Indeterminate };

const char* to_string(Verdict v);

// Exact graded answer when the page visibly degenerates, Acyclic when it is
// empty, Indeterminate (carrying the page) otherwise.
struct CohomologyVerdict {
    Verdict verdict = Verdict::Acyclic;
    GradedDim graded;  // populated when verdict == Exact
    E1Page page;

    long long euler() const { return page.euler(); }
};

E1Page koszul_page(const OddSpace& space, const TwistedBundle& bundle);

// True if some differential d_r (r >= 1) could connect two nonzero cells:
// positions (p1,q1), (p2,q2) with p1-p2 = r >= 1 and q1-q2 = r-1.
bool page_has_possible_differential(const E1Page& page);

CohomologyVerdict cohomology_odd(const OddSpace& space, const TwistedBundle& bundle);

// Acyclicity criterion on IGr(k, 2n+1): lambda_k < 0, lambda_1 >= -2n+k-1,
// jumps <= 2(n+1-k).
bool vanish_odd(const OddSpace& space, const GLWeight& lambda);

// Twist-aware criteria for IGr(3,9) and IGr(3,10): U^lambda(-l) is acyclic if
// the plain criterion holds for lambda-(l,..,l), or if lambda_1 is bounded
// below (0 resp. -1), lambda_k < 0, the jump bounds hold and 0 <= l <= 6.
bool vanish_specialized(const OddSpace& space, const GLWeight& lambda, int l);
bool vanish_specialized(const EvenSpace& space, const GLWeight& lambda, int l);

}  // namespace igr
