#pragma once

// Formal power series in t truncated at a fixed order N, with coefficients in
// a polynomial Ring. A series of order N stores exactly N + 1 coefficients
// c_0..c_N; binary operations truncate to the smaller order.

#include <cstddef>
#include <cstdint>
#include <vector>

#include "powstruct/polynomial.hpp"

namespace powstruct {

class Series {
public:
    // The series 1 over `ring`.
    Series(Ring ring, std::size_t order);
    // Coefficients are padded with zeros or truncated to exactly order + 1.
    Series(Ring ring, std::size_t order, std::vector<Polynomial> coefficients);

    static Series one(const Ring& ring, std::size_t order) { return Series(ring, order); }
    static Series zero(const Ring& ring, std::size_t order);
    // Integer coefficients, lifted into `ring`.
    static Series from_integers(const Ring& ring, std::size_t order, const std::vector<Integer>& coefficients);

    const Ring& ring() const noexcept { return ring_; }
    std::size_t order() const noexcept { return coeffs_.size() - 1; }
    const std::vector<Polynomial>& coefficients() const noexcept { return coeffs_; }
    const Polynomial& operator[](std::size_t j) const { return coeffs_.at(j); }
    Polynomial& operator[](std::size_t j) { return coeffs_.at(j); }

    // c_0 == 1, i.e. an element of 1 + tR[[t]].
    bool is_unit() const;

    // Same series stored at a smaller order.
    Series truncated(std::size_t order) const;

    Series operator-() const;
    Series& operator+=(const Series& other);
    Series& operator-=(const Series& other);
    friend Series operator+(Series a, const Series& b) { return a += b; }
    friend Series operator-(Series a, const Series& b) { return a -= b; }
    friend Series operator*(const Series& a, const Series& b);
    Series& operator*=(const Series& other) { return *this = *this * other; }
    // Coefficientwise scaling by a ring element.
    Series scaled(const Polynomial& factor) const;

    friend bool operator==(const Series& a, const Series& b) {
        return a.ring_ == b.ring_ && a.coeffs_ == b.coeffs_;
    }

private:
    void require_compatible(const Series& other, const char* op) const;

    Ring ring_;
    std::vector<Polynomial> coeffs_;
};

// Multiplicative inverse of a series with constant term 1; NonUnitError otherwise.
Series invert(const Series& a);

// A(t) -> A(t^k), kept at the order of `a`.
Series rescale(const Series& a, std::uint32_t k);

// Ordinary integer power; negative exponents go through invert().
Series int_pow(const Series& a, long long n);

// Coefficients of t^0..t^{k-1} agree. Requires k <= min order + 1.
bool eq_mod(const Series& a, const Series& b, std::size_t k);

// Coefficientwise image under the substitution homomorphism into `target`.
Series substitute(const Series& a, const Bindings& bindings, const Ring& target);

}  // namespace powstruct
