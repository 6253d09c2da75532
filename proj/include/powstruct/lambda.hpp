#pragma once

// Lambda-structures and the power structures they induce.
//
// A lambda-structure is an additive-to-multiplicative map a -> lambda_a(t)
// with lambda_a(t) = 1 + a t + O(t^2). Every unit series factors uniquely as
// A(t) = prod_{i>=1} lambda_{b_i}(t^i); the power structure is then
// A(t)^m = prod_i lambda_{m b_i}(t^i).

#include <cstddef>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "powstruct/polynomial.hpp"
#include "powstruct/series.hpp"

namespace powstruct {

enum class LambdaKind {
    // (1 - t)^{-a}, a an integer (constant polynomials only).
    Kapranov,
    // (1 + t)^a, a an integer (constant polynomials only).
    Binomial,
    // zeta_{-a}(-t) = prod_k (1 + u^k t)^{p_k} for a = sum_k p_k u^k.
    Opposite,
    // prod_k (1 - u^k t)^{-p_k} for a = sum_k p_k u^k; Kapranov on constants.
    PolyProduct,
};

std::string_view to_string(LambdaKind kind);
// Accepts the CLI spellings kapranov, binomial, opposite, poly-product.
std::optional<LambdaKind> parse_lambda_kind(std::string_view name);

// lambda_a(t) truncated at `order`. Throws UnsupportedLambdaError for
// Kapranov/Binomial with a non-constant argument.
Series lambda_series(LambdaKind kind, const Polynomial& a, std::size_t order);

// b_1..b_N of the factorization A = prod lambda_{b_i}(t^i) up to order N.
struct LogCoefficients {
    Ring ring;
    std::vector<Polynomial> entries;

    std::size_t order() const noexcept { return entries.size(); }
    const Polynomial& b(std::size_t i) const { return entries.at(i - 1); }

    friend bool operator==(const LogCoefficients&, const LogCoefficients&) = default;
};

LogCoefficients decompose_product(const Series& a, LambdaKind kind);

// prod_{k>=1} lambda_{b_k}(t^k), truncated at b.order().
Series exp_map(const LogCoefficients& b, LambdaKind kind);

inline LogCoefficients log_map(const Series& a, LambdaKind kind) { return decompose_product(a, kind); }

// A(t)^m through the lambda-structure.
Series power(const Series& a, const Polynomial& m, LambdaKind kind);

// A(t)^m for an integer m via the closed partition sum
//   [t^k] = sum_{sum i k_i = k} binom(m, s) * s!/prod k_i! * prod a_i^{k_i},  s = sum k_i,
// with every step exact in the coefficient ring.
Series integer_power_formula(const Series& a, const Integer& m);

}  // namespace powstruct
