#pragma once

#include <cstddef>
#include <cstdint>
#include <string>
#include <vector>

#include "powstruct/polynomial.hpp"

namespace powstruct {

// A partition of k written as multiplicities: counts[i - 1] = k_i is the
// number of parts (particles) of size (charge) i, with sum_i i * k_i = k.
struct ChargeProfile {
    std::vector<std::uint32_t> counts;

    // sum_i i * k_i
    std::uint32_t weight() const;
    // sum_i k_i
    std::uint32_t parts() const;
    std::uint32_t count(std::uint32_t charge) const {
        return charge >= 1 && charge <= counts.size() ? counts[charge - 1] : 0;
    }
    // prod_i k_i!
    Integer stabilizer_order() const;
    // "{1:2, 3:1}"
    std::string to_string() const;

    friend bool operator==(const ChargeProfile&, const ChargeProfile&) = default;
};

// All profiles of total weight k, multiplicity vectors (k_1, ..., k_k) in
// lexicographic order. k = 0 yields the single empty profile.
std::vector<ChargeProfile> charge_profiles(std::uint32_t k);

// Generalized binomial coefficient a(a-1)...(a-j+1)/j!, exact for any integer a.
Integer binomial(const Integer& a, std::uint32_t j);

// s! / prod_i k_i! for the profile with s = parts().
Integer multinomial(const ChargeProfile& profile);

Integer factorial(std::uint32_t n);

}  // namespace powstruct
