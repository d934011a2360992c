#ifndef TOKENGRAPH_SUBSETS_HPP
#define TOKENGRAPH_SUBSETS_HPP

#include <bit>
#include <cstdint>
#include <vector>

#include "tokengraph/errors.hpp"

namespace tokengraph {

inline std::uint64_t binomial(int n, int k) {
    if (k < 0 || k > n) return 0;
    if (k > n - k) k = n - k;
    std::uint64_t r = 1;
    for (int i = 1; i <= k; ++i) {
        // exact at every step: r currently equals C(n-k+i-1, i-1) * ... pattern
        std::uint64_t num = static_cast<std::uint64_t>(n - k + i);
        if (r > UINT64_MAX / num) throw SizeError("binomial overflow");
        r = r * num / i;
    }
    return r;
}

// All k-subsets of {0,...,n-1} as bitmasks in colexicographic order, which
// coincides with increasing numeric order of the masks.
inline std::vector<std::uint64_t> k_subsets(int n, int k) {
    if (n < 0 || n > 63) throw SizeError("subset universe limited to 63 elements");
    if (k < 0 || k > n) throw DomainError("k out of range");
    std::vector<std::uint64_t> out;
    if (k == 0) {
        out.push_back(0);
        return out;
    }
    std::uint64_t v = (k == 64) ? ~0ull : ((1ull << k) - 1);
    std::uint64_t limit = 1ull << n;
    while (v < limit) {
        out.push_back(v);
        std::uint64_t t = v | (v - 1);  // Gosper's hack
        v = (t + 1) | (((~t & (t + 1)) - 1) >> (std::countr_zero(v) + 1));
    }
    return out;
}

inline std::vector<int> mask_to_vertices(std::uint64_t m) {
    std::vector<int> out;
    while (m) {
        out.push_back(std::countr_zero(m));
        m &= m - 1;
    }
    return out;
}

}  // namespace tokengraph

#endif
