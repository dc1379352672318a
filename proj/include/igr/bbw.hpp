#pragma once

#include "igr/weights.hpp"

namespace igr {

// The even isotropic Grassmannian IGr(k, 2n).
struct EvenSpace {
    int k = 0;
    int n = 0;

    long long dimension() const { return static_cast<long long>(k) * (4 * n - 3 * k + 1) / 2; }
    int index() const { return 2 * n + 1 - k; }
};

// Cohomology of an equivariant bundle on the even space: zero, or a single
// degree carrying an irreducible Sp_2n representation.
struct CohomologyResult {
    bool zero = true;
    int degree = 0;
    SpWeight rep;
    long long dim = 0;

    static CohomologyResult make_zero() { return {}; }
};

// Dimension of the irreducible Sp_2n representation of highest weight mu.
long long dim_sp(const SpWeight& mu);

// Bott straightening for U^lambda on IGr(k, 2n): extend by zeros, add
// rho = (n, ..., 1); a zero entry or an absolute-value collision kills all
// cohomology, otherwise the unique straightening element contributes in the
// single degree given by its length.
CohomologyResult bbw_even(const EvenSpace& space, const GLWeight& absorbed_weight);
CohomologyResult bbw_even(const EvenSpace& space, const TwistedBundle& bundle);

// Number of positive C_n roots made negative: the length of the element
// straightening v.  Requires v regular (distinct nonzero absolute values).
int weyl_length_from_vector(const std::vector<int>& v);

// Acyclicity criterion on IGr(k, 2N) (stated for spaces of the form
// IGr(k, 2n+2), i.e. N = n+1): lambda_k < 0, lambda_1 >= -2N + k and all
// jumps lambda_i - lambda_{i+1} <= 2(N+1-k) - 1.
bool vanish_even(const EvenSpace& space, const GLWeight& lambda);

}  // namespace igr
