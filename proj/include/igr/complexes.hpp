#pragma once

#include <map>

#include "igr/ext.hpp"
#include "igr/oddcoh.hpp"
#include "igr/weights.hpp"

namespace igr {

// Graded multiset of twisted Schur bundles with integer multiplicities.  The
// multiplicity spaces wedge^nu V* enter as the plain dimensions C(m, nu).
struct FormalComplex {
    int ambient = 0;  // m = dim V
    std::map<int, std::map<TwistedBundle, long long>> terms;  // degree -> bundle -> mult

    void add(int degree, const TwistedBundle& b, long long mult);
    int min_degree() const;
    int max_degree() const;
    long long term_count() const;

    bool operator==(const FormalComplex&) const = default;
};

long long binomial(int n, int r);

// The exact complex on Gr(3,m) resolving U^{a,0,-b} by its twist: terms at
// degrees -i, i = 0..m-2, with the weight table mu_i and multiplicity
// C(m, |lambda| - |mu_i|).  Requires a, b >= 0 and a+b <= m-3.
FormalComplex staircase(int a, int b, int m);

// Weight at position i of the staircase table for (a, b); i = 0..m-2.
GLWeight staircase_weight(int a, int b, int m, int i);

// Keeps degrees >= cut (keep_above) or <= cut.
FormalComplex truncate(const FormalComplex& c, int cut, bool keep_above = true);
FormalComplex shift(const FormalComplex& c, int s);
FormalComplex twist_complex(const FormalComplex& c, int l);

// Term at degree d with weight w maps to degree -d with weight dual(w)+(l,..,l).
FormalComplex dual_complex(const FormalComplex& c, int l);

// Alternating sum of mult * dim_gl over the terms.
long long rank_of(const FormalComplex& c);

// Restriction splitting: the staircase complex for (a,b) on Gr(3,m+1),
// restricted along a hyperplane, matches staircase(a,b,m) plus
// staircase(a-1,b,m) shifted by [1], term by term (Pascal on the wedge
// multiplicities).  Requires a >= 1 and a+b <= m-3.
bool restriction_split_check(int a, int b, int m);

// chi(c1, c2) = sum over term pairs of (-1)^{d2-d1} mult1*mult2*chi(Ext).
long long euler_pairing(const FormalComplex& c1, const FormalComplex& c2, const OddSpace& space);

struct TableVerdict {
    Verdict verdict = Verdict::Acyclic;
    GradedDim graded;     // valid when Exact
    long long euler = 0;  // always valid
};

// First-page Ext table between formal complexes; Exact only when every term
// pair is determinate and no two nonzero entries could be connected by a
// differential.
TableVerdict ext_e1_table(const FormalComplex& c1, const FormalComplex& c2, const OddSpace& space);

// The two truncation objects and their cone, as formal complexes normalized
// so the object sits in cohomological degree 0 of its resolution.
FormalComplex object_E();  // right resolution, degrees 0..3, ambient 9
FormalComplex object_F();  // right resolution, degrees 0..2, ambient 9
FormalComplex object_H();  // cone of F -> E: F shifted by [1] plus E
FormalComplex single_term(const TwistedBundle& b, int m = 9);

}  // namespace igr
