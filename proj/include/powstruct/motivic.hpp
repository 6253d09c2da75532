#pragma once

// Generating series of symmetric powers and Hilbert schemes of points,
// realized through the Hodge-Deligne polynomial (ring Z[u,v]), the class of
// the affine line (ring Z[L]) and the Euler characteristic (ring Z).
//
// The class of the affine line mapped to a point and the class of its
// identity map agree under every realization here, so one variable L serves
// for both.

#include <cstddef>
#include <optional>
#include <string_view>

#include "powstruct/polynomial.hpp"
#include "powstruct/series.hpp"

namespace powstruct {

// Z[u,v]
const Ring& hodge_ring();
// Z[L]
const Ring& motivic_ring();

// e_X(u,v) = sum h^{ij} (-u)^i (-v)^j, an element of Z[u,v].
class HodgePolynomial {
public:
    // Constants from Z are lifted; anything else must already be over Z[u,v].
    explicit HodgePolynomial(const Polynomial& value);

    static HodgePolynomial point() { return HodgePolynomial(Polynomial(hodge_ring(), 1)); }
    // e(P^1) = 1 + uv
    static HodgePolynomial projective_line();

    const Polynomial& value() const noexcept { return value_; }
    Integer euler_characteristic() const;

private:
    Polynomial value_;
};

// A polynomial in the class L of the affine line.
class MotivicPolynomial {
public:
    explicit MotivicPolynomial(const Polynomial& value);

    const Polynomial& value() const noexcept { return value_; }
    HodgePolynomial hodge() const;

private:
    Polynomial value_;
};

// (1 - t)^{-e} in the power structure of Z[u,v]: [t^k] = e(S^k X).
Series hodge_zeta(const HodgePolynomial& e, std::size_t order);

// prod_{i=1..N} (1 - L^{i-1} t^i)^{-1} over Z[L], expanded directly:
// [t^k] is the class of the punctual Hilbert scheme of k points on a smooth
// surface germ.
Series hilb_local_surface(std::size_t order);

// hilb_local_surface with L -> uv, raised to the power e: [t^k] = e(Hilb^k X)
// for a smooth surface X with e_X = e.
Series hilb_surface(const HodgePolynomial& e, std::size_t order);

enum class Specialization {
    // u, v -> 1 : Z[u,v] -> Z
    Euler,
    // L -> uv : Z[L] -> Z[u,v]
    HodgeFromL,
};

std::string_view to_string(Specialization s);

// Throws ArityError when the input is not over the specialization's source ring.
Polynomial specialize(const Polynomial& p, Specialization s);
Series specialize_series(const Series& a, Specialization s);

}  // namespace powstruct
