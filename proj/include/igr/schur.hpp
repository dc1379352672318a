#pragma once

#include <map>

#include "igr/weights.hpp"

namespace igr {

// Multiplicity-graded set of dominant weights; the result of decomposing a
// tensor product of Schur bundles.
struct Decomposition {
    int rank = 0;
    std::map<GLWeight, long long, LexLess> terms;

    void add(const GLWeight& w, long long mult);
    long long multiplicity(const GLWeight& w) const;
    long long total_dim() const;  // sum of mult * dim_gl

    bool operator==(const Decomposition&) const = default;
};

// U^lambda (x) S^j U*: all gamma interleaving lambda with |gamma|-|lambda| = j.
Decomposition pieri_sym(const GLWeight& lambda, int j);

// U^lambda (x) wedge^j U*: gamma_i in {lambda_i, lambda_i+1}, |gamma|-|lambda| = j.
Decomposition pieri_wedge(const GLWeight& lambda, int j);

// Full Littlewood-Richardson decomposition of U^alpha (x) U^beta.  Negative
// entries are handled by determinant-shift normalization.
Decomposition lr(const GLWeight& alpha, const GLWeight& beta);

// Decomposition of A (x) B with twists absorbed.
Decomposition tensor_product(const TwistedBundle& a, const TwistedBundle& b);

// Dimension of the irreducible GL_k representation of highest weight lambda.
long long dim_gl(const GLWeight& lambda);

}  // namespace igr
