#pragma once

// Exact integers and sparse multivariate integer polynomials.
//
// Every ring element in the library is a Polynomial over an explicit, ordered
// variable list; the integers are the ring with no variables. Two polynomial
// rings with different variable lists never mix implicitly, the only bridge
// between them is substitute().

#include <cstddef>
#include <cstdint>
#include <map>
#include <memory>
#include <optional>
#include <ostream>
#include <string>
#include <string_view>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

namespace powstruct {

using Integer = boost::multiprecision::number<boost::multiprecision::cpp_int_backend<>, boost::multiprecision::et_off>;

// Exponent of each ring variable, in the order of Ring::variables().
using ExponentVector = std::vector<std::uint32_t>;

std::uint32_t total_degree(const ExponentVector& e);

// Graded order used for storage and for printing: lower total degree first,
// ties broken lexicographically with the larger exponent of the earliest
// variable first (u^2, u*v, v^2).
struct MonomialOrder {
    bool operator()(const ExponentVector& a, const ExponentVector& b) const;
};

class Ring {
public:
    // The integers.
    Ring();
    explicit Ring(std::vector<std::string> variables);

    static Ring integers() { return Ring(); }

    std::size_t arity() const noexcept { return vars_->size(); }
    bool is_integers() const noexcept { return vars_->empty(); }
    const std::vector<std::string>& variables() const noexcept { return *vars_; }
    std::optional<std::size_t> index_of(std::string_view name) const;

    // "Z" or "Z[u,v]".
    std::string name() const;

    friend bool operator==(const Ring& a, const Ring& b) {
        return a.vars_ == b.vars_ || *a.vars_ == *b.vars_;
    }

private:
    std::shared_ptr<const std::vector<std::string>> vars_;
};

bool is_identifier(std::string_view name);

class Polynomial {
public:
    using TermMap = std::map<ExponentVector, Integer, MonomialOrder>;

    // Zero of the integers.
    Polynomial();
    explicit Polynomial(Ring ring);
    Polynomial(Ring ring, Integer constant);
    // Zero coefficients are dropped; every key must have the ring's arity.
    Polynomial(Ring ring, TermMap terms);

    static Polynomial constant(Ring ring, Integer value) { return Polynomial(std::move(ring), std::move(value)); }
    static Polynomial variable(const Ring& ring, std::string_view name);
    static Polynomial monomial(const Ring& ring, ExponentVector exponents, Integer coefficient = 1);

    const Ring& ring() const noexcept { return ring_; }
    const TermMap& terms() const noexcept { return terms_; }
    std::size_t term_count() const noexcept { return terms_.size(); }

    bool is_zero() const noexcept { return terms_.empty(); }
    bool is_constant() const;
    Integer constant_term() const;
    // The value when the polynomial is constant.
    std::optional<Integer> as_integer() const;
    Integer coefficient(const ExponentVector& exponents) const;
    std::uint32_t degree() const;

    Polynomial operator-() const;
    Polynomial& operator+=(const Polynomial& other);
    Polynomial& operator-=(const Polynomial& other);
    Polynomial& operator*=(const Polynomial& other);
    Polynomial& operator*=(const Integer& factor);

    friend Polynomial operator+(Polynomial a, const Polynomial& b) { return a += b; }
    friend Polynomial operator-(Polynomial a, const Polynomial& b) { return a -= b; }
    friend Polynomial operator*(const Polynomial& a, const Polynomial& b);
    friend Polynomial operator*(Polynomial a, const Integer& b) { return a *= b; }
    friend Polynomial operator*(const Integer& a, Polynomial b) { return b *= a; }

    // Fused this += a * b, the inner step of series convolution.
    void add_product(const Polynomial& a, const Polynomial& b);

    Polynomial pow(std::uint32_t exponent) const;

    friend bool operator==(const Polynomial& a, const Polynomial& b) {
        return a.ring_ == b.ring_ && a.terms_ == b.terms_;
    }

    // Normal form: graded order, explicit '*' and '^', e.g. "1 - u + 3*u^2*v".
    std::string to_string() const;

private:
    void require_same_ring(const Polynomial& other, const char* op) const;

    Ring ring_;
    TermMap terms_;
};

std::ostream& operator<<(std::ostream& os, const Polynomial& p);

using Bindings = std::map<std::string, Polynomial, std::less<>>;

// Image of p under the ring homomorphism sending each variable of p's ring to
// its binding. All bindings must live in `target`; every variable of p's ring
// must be bound. Throws UnboundVariableError / ArityError.
Polynomial substitute(const Polynomial& p, const Bindings& bindings, const Ring& target);
// Same, with the target ring taken from the bindings (which must be nonempty
// unless p is over the integers, in which case the result is over Z).
Polynomial substitute(const Polynomial& p, const Bindings& bindings);

// Image of an integer polynomial in another ring (the unique map from Z).
Polynomial lift_constant(const Polynomial& integer_value, const Ring& target);

}  // namespace powstruct
