#ifndef POLYHARM_EXPANSION_HPP
#define POLYHARM_EXPANSION_HPP

#include <cstdint>
#include <stdexcept>
#include <vector>

#include <Eigen/Core>

namespace polyharm {

/// A composition h of n into m non-negative parts (sum h_i = n).
struct MultiIndex {
    Eigen::VectorXi h;
    int n = 0;
};

/// One term of the expansion of the n-th Laplacian power: multinomial
/// coefficient n!/prod(h_i!) together with per-coordinate derivative
/// orders 2*h_i.
struct ExpansionTerm {
    std::int64_t coefficient = 1;
    Eigen::VectorXi derivative_orders;
};

namespace detail {

inline std::int64_t checked_mul(std::int64_t a, std::int64_t b) {
    std::int64_t out;
    if (__builtin_mul_overflow(a, b, &out))
        throw std::overflow_error("multinomial coefficient exceeds 64-bit range");
    return out;
}

// C(n, k) by the incremental product; every intermediate division is exact.
inline std::int64_t binomial(int n, int k) {
    if (k < 0 || k > n) return 0;
    if (k > n - k) k = n - k;
    std::int64_t r = 1;
    for (int i = 1; i <= k; ++i) {
        r = checked_mul(r, n - k + i);
        r /= i;
    }
    return r;
}

} // namespace detail

/// All h with sum h_i = n, h_i >= 0, first coordinate descending
/// (lexicographic from (n,0,...,0) down to (0,...,0,n)).
inline std::vector<MultiIndex> enumerate_multi_indices(int n, int m) {
    if (m < 1) throw std::invalid_argument("enumerate_multi_indices: m must be >= 1");
    if (n < 0) throw std::invalid_argument("enumerate_multi_indices: n must be >= 0");

    std::vector<MultiIndex> out;
    Eigen::VectorXi h = Eigen::VectorXi::Zero(m);

    // Recursive descent over coordinates, largest leading entry first.
    auto fill = [&](auto&& self, int pos, int remaining) -> void {
        if (pos == m - 1) {
            h[pos] = remaining;
            out.push_back({h, n});
            return;
        }
        for (int v = remaining; v >= 0; --v) {
            h[pos] = v;
            self(self, pos + 1, remaining - v);
        }
    };
    fill(fill, 0, n);
    return out;
}

/// n! / prod(h_i!) computed as a product of binomials of partial sums.
inline std::int64_t multinomial_coefficient(const MultiIndex& idx) {
    std::int64_t coeff = 1;
    int partial = 0;
    for (int i = 0; i < idx.h.size(); ++i) {
        if (idx.h[i] < 0) throw std::invalid_argument("multinomial_coefficient: negative entry");
        partial += idx.h[i];
        coeff = detail::checked_mul(coeff, detail::binomial(partial, idx.h[i]));
    }
    if (partial != idx.n)
        throw std::invalid_argument("multinomial_coefficient: entries do not sum to n");
    return coeff;
}

/// The full expansion of the m-dimensional Laplacian raised to the n-th
/// power: each multi-index paired with its weight and the even derivative
/// orders 2*h_i it contributes. Coefficients sum to m^n.
inline std::vector<ExpansionTerm> expand_polyharmonic(int n, int m) {
    if (n < 1) throw std::invalid_argument("expand_polyharmonic: n must be >= 1");
    std::vector<ExpansionTerm> terms;
    for (const MultiIndex& idx : enumerate_multi_indices(n, m)) {
        ExpansionTerm t;
        t.coefficient = multinomial_coefficient(idx);
        t.derivative_orders = 2 * idx.h;
        terms.push_back(std::move(t));
    }
    return terms;
}

} // namespace polyharm

#endif
