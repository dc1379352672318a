#include "igr/bbw.hpp"

#include <algorithm>
#include <cstdlib>
#include <stdexcept>

#include "ratio_product.hpp"

namespace igr {

long long dim_sp(const SpWeight& mu) {
    const int n = mu.rank();
    // Weyl dimension formula over the positive roots e_i - e_j, e_i + e_j, 2 e_i
    std::vector<int> v(static_cast<size_t>(n)), rho(static_cast<size_t>(n));
    for (int i = 0; i < n; ++i) {
        rho[static_cast<size_t>(i)] = n - i;
        v[static_cast<size_t>(i)] = mu[i] + n - i;
    }
    std::vector<std::pair<long long, long long>> factors;
    for (int i = 0; i < n; ++i) {
        factors.emplace_back(v[static_cast<size_t>(i)], rho[static_cast<size_t>(i)]);
        for (int j = i + 1; j < n; ++j) {
            factors.emplace_back(v[static_cast<size_t>(i)] - v[static_cast<size_t>(j)],
                                 rho[static_cast<size_t>(i)] - rho[static_cast<size_t>(j)]);
            factors.emplace_back(v[static_cast<size_t>(i)] + v[static_cast<size_t>(j)],
                                 rho[static_cast<size_t>(i)] + rho[static_cast<size_t>(j)]);
        }
    }
    return detail::product_of_ratios(factors);
}

int weyl_length_from_vector(const std::vector<int>& v) {
    const int n = static_cast<int>(v.size());
    int len = 0;
    for (int i = 0; i < n; ++i) {
        if (v[static_cast<size_t>(i)] < 0) ++len;
        for (int j = i + 1; j < n; ++j) {
            if (v[static_cast<size_t>(i)] < v[static_cast<size_t>(j)]) ++len;
            if (v[static_cast<size_t>(i)] + v[static_cast<size_t>(j)] < 0) ++len;
        }
    }
    return len;
}

CohomologyResult bbw_even(const EvenSpace& space, const GLWeight& absorbed_weight) {
    if (absorbed_weight.rank() != space.k)
        throw std::invalid_argument("bbw_even: weight rank does not match the space");
    if (space.k > space.n) throw std::invalid_argument("bbw_even: requires k <= n");
    const int n = space.n;

    std::vector<int> v(static_cast<size_t>(n));
    for (int i = 0; i < n; ++i) {
        const int gamma_i = (i < space.k) ? absorbed_weight[i] : 0;
        v[static_cast<size_t>(i)] = gamma_i + (n - i);
    }

    // exact integer regularity test: no zero entry, no |.|-collision
    std::vector<int> abs_sorted(static_cast<size_t>(n));
    for (int i = 0; i < n; ++i) abs_sorted[static_cast<size_t>(i)] = std::abs(v[static_cast<size_t>(i)]);
    std::sort(abs_sorted.begin(), abs_sorted.end(), std::greater<int>());
    if (abs_sorted.back() == 0) return CohomologyResult::make_zero();
    for (size_t i = 0; i + 1 < abs_sorted.size(); ++i)
        if (abs_sorted[i] == abs_sorted[i + 1]) return CohomologyResult::make_zero();

    std::vector<int> rep(static_cast<size_t>(n));
    for (int i = 0; i < n; ++i) rep[static_cast<size_t>(i)] = abs_sorted[static_cast<size_t>(i)] - (n - i);

    CohomologyResult out;
    out.zero = false;
    out.degree = weyl_length_from_vector(v);
    out.rep = SpWeight(std::move(rep));
    out.dim = dim_sp(out.rep);
    return out;
}

CohomologyResult bbw_even(const EvenSpace& space, const TwistedBundle& bundle) {
    return bbw_even(space, bundle.absorbed());
}

bool vanish_even(const EvenSpace& space, const GLWeight& lambda) {
    if (lambda.rank() != space.k)
        throw std::invalid_argument("vanish_even: weight rank does not match the space");
    const int k = space.k, N = space.n;
    if (lambda[k - 1] >= 0) return false;
    if (lambda[0] < -2 * N + k) return false;
    for (int i = 0; i + 1 < k; ++i)
        if (lambda[i] - lambda[i + 1] > 2 * (N + 1 - k) - 1) return false;
    return true;
}

}  // namespace igr
