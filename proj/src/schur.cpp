#include "igr/schur.hpp"

#include <functional>
#include <stdexcept>

#include "ratio_product.hpp"

namespace igr {

void Decomposition::add(const GLWeight& w, long long mult) {
    if (mult == 0) return;
    auto [it, inserted] = terms.emplace(w, mult);
    if (!inserted) {
        it->second += mult;
        if (it->second == 0) terms.erase(it);
    }
}

long long Decomposition::multiplicity(const GLWeight& w) const {
    auto it = terms.find(w);
    return it == terms.end() ? 0 : it->second;
}

long long Decomposition::total_dim() const {
    long long s = 0;
    for (const auto& [w, m] : terms) s += m * dim_gl(w);
    return s;
}

Decomposition pieri_sym(const GLWeight& lambda, int j) {
    if (j < 0) throw std::invalid_argument("pieri_sym: negative strip size");
    const int k = lambda.rank();
    Decomposition out;
    out.rank = k;
    // gamma_1 >= lambda_1 >= gamma_2 >= lambda_2 >= ... >= lambda_k >= gamma_k
    std::vector<int> gamma(static_cast<size_t>(k));
    std::function<void(int, int)> rec = [&](int i, int placed) {
        if (i == k) {
            if (placed == j) out.add(GLWeight(gamma), 1);
            return;
        }
        const int lo = lambda[i];
        const int hi = (i == 0) ? lambda[0] + (j - placed) : lambda[i - 1];
        for (int v = lo; v <= hi; ++v) {
            if (placed + (v - lo) > j) break;
            gamma[static_cast<size_t>(i)] = v;
            rec(i + 1, placed + (v - lo));
        }
    };
    rec(0, 0);
    return out;
}

Decomposition pieri_wedge(const GLWeight& lambda, int j) {
    const int k = lambda.rank();
    if (j < 0 || j > k) throw std::invalid_argument("pieri_wedge: strip size out of range");
    Decomposition out;
    out.rank = k;
    std::vector<int> gamma(static_cast<size_t>(k));
    std::function<void(int, int)> rec = [&](int i, int placed) {
        if (placed > j || placed + (k - i) < j) return;
        if (i == k) {
            out.add(GLWeight(gamma), 1);
            return;
        }
        for (int add = 0; add <= 1; ++add) {
            const int v = lambda[i] + add;
            if (i > 0 && v > gamma[static_cast<size_t>(i - 1)]) continue;  // drop non-dominant
            gamma[static_cast<size_t>(i)] = v;
            rec(i + 1, placed + add);
        }
    };
    rec(0, 0);
    return out;
}

namespace {

// Enumerates Littlewood-Richardson tableaux of content beta on top of the
// partition alpha, as chains of horizontal strips: strip #t (boxes labelled
// t) is added row by row subject to
//   * one box per column: new row length <= the pre-strip length of the row
//     above,
//   * the ballot condition: #t's in rows <= i never exceeds #(t-1)'s in
//     rows <= i-1.
// Emits the resulting shape once per tableau, so multiplicities come out of
// repeated emission.
void lr_tableaux(const std::vector<int>& alpha, const std::vector<int>& beta,
                 const std::function<void(const std::vector<int>&)>& emit) {
    const int k = static_cast<int>(alpha.size());
    std::vector<int> shape = alpha;

    std::function<void(int, const std::vector<int>&)> place_letter =
        [&](int letter, const std::vector<int>& prev_strip) {
            if (letter == k) {
                emit(shape);
                return;
            }
            const int need = beta[static_cast<size_t>(letter)];
            const bool first = (letter == 0);
            const std::vector<int> base = shape;  // shape before this strip
            std::vector<int> strip(static_cast<size_t>(k), 0);

            std::function<void(int, int, int)> rows = [&](int row, int placed, int prev_pref) {
                if (placed == need) {
                    place_letter(letter + 1, strip);
                    return;
                }
                if (row == k) return;
                const size_t r = static_cast<size_t>(row);
                int cap = need - placed;
                if (row > 0) cap = std::min(cap, base[r - 1] - base[r]);
                if (!first) cap = std::min(cap, prev_pref - placed);
                for (int c = cap; c >= 0; --c) {
                    shape[r] = base[r] + c;
                    strip[r] = c;
                    rows(row + 1, placed + c, prev_pref + prev_strip[r]);
                    strip[r] = 0;
                    shape[r] = base[r];
                }
            };
            rows(0, 0, 0);
        };

    place_letter(0, std::vector<int>(static_cast<size_t>(k), 0));
}

}  // namespace

Decomposition lr(const GLWeight& alpha, const GLWeight& beta) {
    if (alpha.rank() != beta.rank()) throw std::invalid_argument("lr: rank mismatch");
    const int k = alpha.rank();
    const int sa = alpha[k - 1], sb = beta[k - 1];

    // shift both factors to partitions; the determinant twist is exact
    std::vector<int> a(static_cast<size_t>(k)), b(static_cast<size_t>(k));
    for (int i = 0; i < k; ++i) {
        a[static_cast<size_t>(i)] = alpha[i] - sa;
        b[static_cast<size_t>(i)] = beta[i] - sb;
    }

    Decomposition out;
    out.rank = k;
    lr_tableaux(a, b, [&](const std::vector<int>& gamma) {
        out.add(GLWeight(gamma).shifted(sa + sb), 1);
    });
    return out;
}

Decomposition tensor_product(const TwistedBundle& a, const TwistedBundle& b) {
    return lr(a.absorbed(), b.absorbed());
}

long long dim_gl(const GLWeight& lambda) {
    const int k = lambda.rank();
    std::vector<std::pair<long long, long long>> factors;
    for (int i = 0; i < k; ++i)
        for (int j = i + 1; j < k; ++j)
            factors.emplace_back(lambda[i] - lambda[j] + j - i, j - i);
    return detail::product_of_ratios(factors);
}

}  // namespace igr
