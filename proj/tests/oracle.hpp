#pragma once

// Brute-force cross-checks kept independent of the library's linear algebra:
// additive spans by closure, abelian structure by torsion counting, group
// closure by pairwise-product fixpoint.

#include <array>
#include <cstdint>
#include <set>
#include <vector>

#include "lgdiv/matgroup.hpp"
#include "lgdiv/modring.hpp"

namespace oracle {

using VecSet = std::set<std::vector<uint64_t>>;

inline VecSet enumerate_span(const std::vector<std::vector<uint64_t>>& gens, size_t dim,
                             const lgdiv::Modulus& m) {
    VecSet out;
    out.insert(std::vector<uint64_t>(dim, 0));
    std::vector<std::vector<uint64_t>> queue(out.begin(), out.end());
    for (size_t qi = 0; qi < queue.size(); ++qi) {
        for (const auto& g : gens) {
            std::vector<uint64_t> next(dim);
            for (size_t k = 0; k < dim; ++k) next[k] = m.add(queue[qi][k], g[k]);
            if (out.insert(next).second) queue.push_back(std::move(next));
        }
    }
    return out;
}

// Structure of span(A)/span(B) read off the torsion counts
// |(A/B)[p^k]| = #{a in A : p^k a in B} / |B|.
inline std::vector<uint64_t> structure_by_counting(const VecSet& a, const VecSet& b, size_t dim,
                                                   const lgdiv::Modulus& m) {
    unsigned n = m.n();
    std::vector<uint64_t> torsion(n + 1, 0);
    for (unsigned k = 0; k <= n; ++k) {
        uint64_t pk = m.pow_p(k);
        uint64_t count = 0;
        for (const auto& v : a) {
            std::vector<uint64_t> w(dim);
            for (size_t t = 0; t < dim; ++t) w[t] = m.mul(v[t], pk);
            if (b.count(w)) ++count;
        }
        torsion[k] = count / b.size();
    }
    // log_p of the torsion ladder gives #(factors with exponent >= k)
    std::vector<unsigned> logs(n + 1, 0);
    for (unsigned k = 0; k <= n; ++k) {
        uint64_t t = torsion[k];
        unsigned e = 0;
        while (t > 1) {
            t /= m.p();
            ++e;
        }
        logs[k] = e;
    }
    std::vector<uint64_t> orders;
    for (unsigned k = 1; k <= n; ++k) {
        unsigned at_least_k = logs[k] - logs[k - 1];
        unsigned at_least_k1 = k < n ? logs[k + 1] - logs[k] : 0;
        for (unsigned c = at_least_k1; c < at_least_k; ++c) orders.push_back(m.pow_p(k));
    }
    std::sort(orders.begin(), orders.end());
    return orders;
}

inline std::vector<uint64_t> structure_by_counting(const VecSet& a, size_t dim,
                                                   const lgdiv::Modulus& m) {
    VecSet zero;
    zero.insert(std::vector<uint64_t>(dim, 0));
    return structure_by_counting(a, zero, dim, m);
}

// Set-based closure under pairwise products (both sides), independent of the
// generator-step BFS in the library.
inline std::set<std::array<uint64_t, 4>> naive_closure(const std::vector<lgdiv::Mat2>& gens,
                                                       const lgdiv::Modulus& m) {
    auto mul = [&m](const std::array<uint64_t, 4>& a, const std::array<uint64_t, 4>& b) {
        return std::array<uint64_t, 4>{m.add(m.mul(a[0], b[0]), m.mul(a[1], b[2])),
                                       m.add(m.mul(a[0], b[1]), m.mul(a[1], b[3])),
                                       m.add(m.mul(a[2], b[0]), m.mul(a[3], b[2])),
                                       m.add(m.mul(a[2], b[1]), m.mul(a[3], b[3]))};
    };
    std::set<std::array<uint64_t, 4>> out;
    std::vector<std::array<uint64_t, 4>> all;
    auto push = [&](const std::array<uint64_t, 4>& x) {
        if (out.insert(x).second) all.push_back(x);
    };
    push({1 % m.value(), 0, 0, 1 % m.value()});
    for (const auto& g : gens) push(g.e);
    for (size_t qi = 0; qi < all.size(); ++qi) {
        std::array<uint64_t, 4> x = all[qi];
        for (size_t t = 0; t < all.size(); ++t) {
            push(mul(x, all[t]));
            push(mul(all[t], x));
        }
    }
    return out;
}

} // namespace oracle
