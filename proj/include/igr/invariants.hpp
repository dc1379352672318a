#pragma once

#include <optional>

namespace igr {

struct SpaceInvariants {
    long long dimension = 0;
    long long index = 0;
    long long k0_rank = 0;
    std::optional<long long> lefschetz_length;  // k0_rank / index when divisible
};

// IGr(k, 2n): d = k(4n-3k+1)/2, w = 2n+1-k, r = C(n,k) 2^k.
SpaceInvariants invariants_even(int k, int n);

// IGr(k, 2n+1): d = k(4n-3k+3)/2, w = 2n+2-k, r = C(n,k-1) 2^{k-1} (2n+2-k)/k.
SpaceInvariants invariants_odd(int k, int n);

// Feasibility of a rectangular Lefschetz collection on IGr(3, 2n+1): the
// index divides the rank iff n = 0 or 1 mod 3, and then p = 2n(n-1)/3.
std::optional<long long> divisibility_check(int n);

}  // namespace igr
