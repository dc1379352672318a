#include "igr/invariants.hpp"

#include <stdexcept>

#include "igr/complexes.hpp"

namespace igr {

namespace {

SpaceInvariants with_length(SpaceInvariants s) {
    if (s.index > 0 && s.k0_rank % s.index == 0) s.lefschetz_length = s.k0_rank / s.index;
    return s;
}

}  // namespace

SpaceInvariants invariants_even(int k, int n) {
    if (k < 1 || k > n) throw std::invalid_argument("invariants_even: requires 1 <= k <= n");
    SpaceInvariants s;
    s.dimension = static_cast<long long>(k) * (4 * n - 3 * k + 1) / 2;
    s.index = 2 * n + 1 - k;
    s.k0_rank = binomial(n, k) << k;
    return with_length(s);
}

SpaceInvariants invariants_odd(int k, int n) {
    if (k < 1 || k > n) throw std::invalid_argument("invariants_odd: requires 1 <= k <= n");
    SpaceInvariants s;
    s.dimension = static_cast<long long>(k) * (4 * n - 3 * k + 3) / 2;
    s.index = 2 * n + 2 - k;
    const long long num = binomial(n, k - 1) * (1LL << (k - 1)) * (2 * n + 2 - k);
    if (num % k != 0) throw std::logic_error("invariants_odd: rank formula not integral");
    s.k0_rank = num / k;
    return with_length(s);
}

std::optional<long long> divisibility_check(int n) {
    if (n < 2) throw std::invalid_argument("divisibility_check: requires n >= 2");
    if (n % 3 == 2) return std::nullopt;
    return 2LL * n * (n - 1) / 3;
}

}  // namespace igr
