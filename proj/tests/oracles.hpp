#pragma once

#include <map>
#include <vector>

#include "igr/bbw.hpp"
#include "igr/schur.hpp"

// Independent recomputation routes used only by the test suite.
namespace oracles {

// Product of two rank-3 Schur functors through the determinantal h-expansion
// of the second factor and repeated horizontal-strip multiplication.  Checks
// that all signed contributions cancel to nonnegative multiplicities.
igr::Decomposition lr_jacobi_trudi3(const igr::GLWeight& alpha, const igr::GLWeight& beta);

// The hyperoctahedral group as signed permutations, with word lengths from a
// breadth-first search over the simple reflections (adjacent transpositions
// and the sign flip of the last coordinate).
class SignedPermTable {
public:
    explicit SignedPermTable(int n);

    int n() const { return n_; }
    int length(const std::vector<int>& element) const;
    const std::map<std::vector<int>, int>& all() const { return length_; }

private:
    int n_;
    std::map<std::vector<int>, int> length_;
};

// (g . v)_i = sgn(g_i) * v_{|g_i| - 1}
std::vector<int> apply(const std::vector<int>& g, const std::vector<int>& v);

// The element sorting a regular vector to strictly decreasing positive
// entries, written down directly from the absolute values.
std::vector<int> straightening_element(const std::vector<int>& v);

// Even cohomology recomputed through the group element rather than the
// closed-form root count.
igr::CohomologyResult bbw_by_group(const igr::EvenSpace& space, const igr::GLWeight& weight,
                                   const SignedPermTable& table);

}  // namespace oracles
