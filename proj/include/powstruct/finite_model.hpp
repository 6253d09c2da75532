#pragma once

// Maps between explicit finite sets as a model of the Grothendieck ring of
// maps. Sets are {0, ..., n-1}; a map is its value table. The class of a map
// in the ring is the size of its source (cut both sides into points and every
// point-to-point map is the unit), so this model computes in Z.

#include <cstddef>
#include <cstdint>
#include <span>
#include <vector>

#include "powstruct/charge_profile.hpp"
#include "powstruct/polynomial.hpp"
#include "powstruct/series.hpp"

namespace powstruct {

class FiniteMap {
public:
    // Throws Error if some value is outside [0, target_size).
    FiniteMap(std::size_t target_size, std::vector<std::size_t> values);

    static FiniteMap identity(std::size_t n);
    // The map from an n-point set to a point.
    static FiniteMap to_point(std::size_t n);
    // The identity of a point, the multiplicative unit.
    static FiniteMap unit() { return identity(1); }

    std::size_t source_size() const noexcept { return values_.size(); }
    std::size_t target_size() const noexcept { return target_size_; }
    const std::vector<std::size_t>& values() const noexcept { return values_; }
    std::size_t operator()(std::size_t x) const { return values_.at(x); }

    friend bool operator==(const FiniteMap&, const FiniteMap&) = default;

private:
    std::size_t target_size_;
    std::vector<std::size_t> values_;
};

Integer class_of(const FiniteMap& f);

enum class MapCombine { DisjointUnion, CartesianProduct };

// Disjoint union places g after f on both sides. The product indexes the pair
// (x, y) as x * |source(g)| + y, and likewise on targets.
FiniteMap combine(const FiniteMap& f, const FiniteMap& g, MapCombine op);

// Multisets of size k over {0..n-1} as nondecreasing vectors, lexicographic.
std::vector<std::vector<std::uint32_t>> multisets(std::size_t n, std::size_t k);
// k-element subsets of {0..n-1} as increasing vectors, lexicographic.
std::vector<std::vector<std::uint32_t>> k_subsets(std::size_t n, std::size_t k);

// S^k f : S^k X -> S^k Y, indexed by multisets() on both sides.
FiniteMap symmetric_power_map(const FiniteMap& f, std::size_t k);
// B_k f : B_k X -> S^k Y, source indexed by k_subsets(), target by multisets().
FiniteMap config_space_map(const FiniteMap& f, std::size_t k);

// h2 . f == g . h1 with h1, h2 bijections.
bool is_equivalence(const FiniteMap& f, const FiniteMap& g, std::span<const std::size_t> source_bijection,
                    std::span<const std::size_t> target_bijection);

// An explicit equivalence between a power of f1 + f2 and the sum over i of
// products of the i-th power of f1 with the (k-i)-th power of f2.
struct DecompositionCheck {
    FiniteMap whole;
    FiniteMap pieces;
    std::vector<std::size_t> source_bijection;
    std::vector<std::size_t> target_bijection;
    bool verified = false;
};

// S^k(f1 + f2) ~ sum_{i=0..k} S^i f1 x S^{k-i} f2
DecompositionCheck check_symmetric_power_decomposition(const FiniteMap& f1, const FiniteMap& f2, std::size_t k);
// B_k(f1 + f2) ~ sum_{i=0..k} B_i f1 x B_{k-i} f2
DecompositionCheck check_config_space_decomposition(const FiniteMap& f1, const FiniteMap& f2, std::size_t k);

inline constexpr std::uint64_t kDefaultEnumerationBudget = 10'000'000;

struct ProfileTally {
    ChargeProfile profile;
    // |M|^s * prod |X_i|^{k_i}, the guarded quantity.
    Integer raw_bound;
    // Elements of (M^s minus the large diagonal) x prod X_i^{k_i}.
    Integer off_diagonal_tuples;
    Integer orbits;
    Integer particle_configurations;
    // Number of distinct target orbits hit by the induced map on quotients.
    Integer target_orbits;
    bool free_action = true;
    bool orbit_map_well_defined = true;
};

struct GeometricCoefficient {
    std::uint32_t degree = 0;
    Integer value;
    Integer particle_count;
    std::vector<ProfileTally> profiles;

    bool counts_agree() const;
    bool free_action() const;
    bool orbit_map_well_defined() const;
    bool consistent() const { return counts_agree() && free_action() && orbit_map_well_defined(); }
};

// Coefficient of t^k in (1 + [X_1 -> Y_1] t + [X_2 -> Y_2] t^2 + ...)^[M -> N],
// computed by explicit enumeration of orbits of the block-permutation action,
// and independently by enumerating charged particle configurations on M.
// coefficients[i - 1] is the map X_i -> Y_i; charges past the end are empty.
// Throws ResourceError when a profile's raw tuple bound exceeds `budget`.
GeometricCoefficient geometric_power_coefficient(const FiniteMap& exponent, std::span<const FiniteMap> coefficients,
                                                 std::uint32_t k,
                                                 std::uint64_t budget = kDefaultEnumerationBudget);

enum class FiniteSeriesKind { Zeta, Binomial };

// Zeta: [t^k] = class(S^k f). Binomial: [t^k] = class(B_k f). Over Z.
// Cross-checked internally against the power of (1-t)^{-1} resp. (1+t).
Series finite_series(const FiniteMap& f, FiniteSeriesKind kind, std::size_t order);

}  // namespace powstruct
