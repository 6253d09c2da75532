#pragma once

// Random generators and independent reference computations shared by the
// unit and acceptance suites. Nothing here calls the series or lambda code:
// the oracles work on plain integer vectors and point evaluations.

#include <algorithm>
#include <cstdint>
#include <functional>
#include <random>
#include <vector>

#include "powstruct/finite_model.hpp"
#include "powstruct/polynomial.hpp"
#include "powstruct/series.hpp"

namespace powstruct::testing {

using Rng = std::mt19937_64;

inline Integer random_int(Rng& rng, int lo, int hi) {
    return Integer(std::uniform_int_distribution<int>(lo, hi)(rng));
}

// Up to `max_terms` terms of total degree <= max_degree, coefficients in [lo, hi].
inline Polynomial random_polynomial(Rng& rng, const Ring& ring, std::uint32_t max_degree, std::size_t max_terms,
                                    int lo = -9, int hi = 9) {
    Polynomial::TermMap terms;
    std::uniform_int_distribution<std::size_t> count(0, max_terms);
    const std::size_t n = count(rng);
    for (std::size_t i = 0; i < n; ++i) {
        ExponentVector e(ring.arity(), 0);
        std::uint32_t budget = std::uniform_int_distribution<std::uint32_t>(0, max_degree)(rng);
        for (std::size_t v = 0; v < e.size() && budget; ++v) {
            const auto d = std::uniform_int_distribution<std::uint32_t>(0, budget)(rng);
            e[v] = d;
            budget -= d;
        }
        if (!e.empty()) std::shuffle(e.begin(), e.end(), rng);
        terms[e] += random_int(rng, lo, hi);
    }
    return Polynomial(ring, std::move(terms));
}

// 1 + c_1 t + ... + c_N t^N with random coefficients.
inline Series random_unit_series(Rng& rng, const Ring& ring, std::size_t order, std::uint32_t max_degree,
                                 std::size_t max_terms, int lo = -3, int hi = 3) {
    std::vector<Polynomial> cs{Polynomial(ring, 1)};
    for (std::size_t j = 1; j <= order; ++j) cs.push_back(random_polynomial(rng, ring, max_degree, max_terms, lo, hi));
    return Series(ring, order, std::move(cs));
}

// Value of p at an integer point, by direct summation of terms.
inline Integer evaluate(const Polynomial& p, const std::vector<Integer>& point) {
    Integer total = 0;
    for (const auto& [e, c] : p.terms()) {
        Integer term = c;
        for (std::size_t i = 0; i < e.size(); ++i)
            for (std::uint32_t r = 0; r < e[i]; ++r) term *= point[i];
        total += term;
    }
    return total;
}

// Dense integer series arithmetic, written independently of Series.
using Dense = std::vector<Integer>;

inline Dense dense_mul(const Dense& a, const Dense& b) {
    Dense out(std::min(a.size(), b.size()), 0);
    for (std::size_t i = 0; i < out.size(); ++i)
        for (std::size_t j = 0; i + j < out.size(); ++j) out[i + j] += a[i] * b[j];
    return out;
}

// prod_{m=1..N} (1 - t^m)^{-1} as a dense list c_0..c_N, by expanding each
// geometric factor.
inline Dense dense_euler_product(std::size_t order) {
    Dense out(order + 1, 0);
    out[0] = 1;
    for (std::size_t m = 1; m <= order; ++m) {
        Dense f(order + 1, 0);
        for (std::size_t j = 0; j * m <= order; ++j) f[j * m] = 1;
        out = dense_mul(out, f);
    }
    return out;
}

inline Dense dense_pow(const Dense& a, unsigned n) {
    Dense out(a.size(), 0);
    out[0] = 1;
    for (unsigned i = 0; i < n; ++i) out = dense_mul(out, a);
    return out;
}

// Number of partitions of n, by recursive enumeration of nonincreasing parts.
inline std::uint64_t count_partitions(unsigned n) {
    std::function<std::uint64_t(unsigned, unsigned)> go = [&](unsigned rest, unsigned largest) -> std::uint64_t {
        if (rest == 0) return 1;
        std::uint64_t total = 0;
        for (unsigned p = std::min(rest, largest); p >= 1; --p) total += go(rest - p, p);
        return total;
    };
    return go(n, n);
}

inline Series integer_series(std::size_t order, const std::vector<long long>& cs) {
    std::vector<Integer> v(cs.begin(), cs.end());
    return Series::from_integers(Ring(), order, v);
}

// Every map {0..n-1} -> {0..q-1}.
inline std::vector<FiniteMap> all_maps(std::size_t n, std::size_t q) {
    std::vector<FiniteMap> out;
    std::vector<std::size_t> v(n, 0);
    if (n > 0 && q == 0) return out;
    while (true) {
        out.emplace_back(q, v);
        std::size_t i = 0;
        while (i < n && ++v[i] == q) v[i++] = 0;
        if (i == n) break;
    }
    return out;
}

// One map per isomorphism class of maps with |source| <= max_source and
// |target| <= max_target, built from nonincreasing fiber sizes.
inline std::vector<FiniteMap> map_classes(std::size_t max_source, std::size_t max_target) {
    std::vector<FiniteMap> out;
    std::vector<std::size_t> fibers;
    std::function<void(std::size_t, std::size_t, std::size_t)> go = [&](std::size_t q, std::size_t rest, std::size_t cap) {
        if (fibers.size() == q) {
            if (rest != 0) return;
            std::vector<std::size_t> values;
            for (std::size_t y = 0; y < q; ++y) values.insert(values.end(), fibers[y], y);
            out.emplace_back(q, std::move(values));
            return;
        }
        for (std::size_t f = std::min(rest, cap) + 1; f-- > 0;) {
            fibers.push_back(f);
            go(q, rest - f, f);
            fibers.pop_back();
        }
    };
    for (std::size_t q = 0; q <= max_target; ++q)
        for (std::size_t n = 0; n <= max_source; ++n)
            if (q > 0 || n == 0) go(q, n, n);
    return out;
}

}  // namespace powstruct::testing
