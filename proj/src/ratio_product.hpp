#pragma once

#include <cstdint>
#include <numeric>
#include <stdexcept>
#include <utility>
#include <vector>

namespace igr::detail {

// Exact product of integer ratios.  The final value must be an integer
// (Weyl dimension formulas); intermediates are reduced at every step so
// __int128 never overflows for the weight ranges handled here.
inline long long product_of_ratios(const std::vector<std::pair<long long, long long>>& factors) {
    __int128 num = 1, den = 1;
    auto reduce = [&] {
        long long a = num < 0 ? static_cast<long long>(-num) : static_cast<long long>(num);
        long long b = den < 0 ? static_cast<long long>(-den) : static_cast<long long>(den);
        // gcd on the int64 reductions is enough: values stay far below the
        // __int128 range once cancelled each step
        long long g = std::gcd(a, b);
        if (g > 1) {
            num /= g;
            den /= g;
        }
    };
    for (const auto& [n, d] : factors) {
        if (d == 0) throw std::invalid_argument("product_of_ratios: zero denominator");
        num *= n;
        den *= d;
        reduce();
    }
    if (den < 0) {
        num = -num;
        den = -den;
    }
    if (den != 1) throw std::logic_error("product_of_ratios: result is not an integer");
    if (num > INT64_MAX || num < -INT64_MAX) throw std::overflow_error("product_of_ratios: overflow");
    return static_cast<long long>(num);
}

}  // namespace igr::detail
