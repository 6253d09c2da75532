#include "powstruct/motivic.hpp"

#include "powstruct/errors.hpp"
#include "powstruct/lambda.hpp"

namespace powstruct {

const Ring& hodge_ring() {
    static const Ring ring({"u", "v"});
    return ring;
}

const Ring& motivic_ring() {
    static const Ring ring({"L"});
    return ring;
}

namespace {

Polynomial into(const Polynomial& p, const Ring& ring, const char* what) {
    if (p.ring() == ring) return p;
    if (p.is_constant()) return lift_constant(p, ring);
    throw ArityError(std::string(what) + " must be over " + ring.name() + ", got a polynomial over " +
                     p.ring().name());
}

const Ring& source_ring(Specialization s) {
    return s == Specialization::Euler ? hodge_ring() : motivic_ring();
}

}  // namespace

HodgePolynomial::HodgePolynomial(const Polynomial& value) : value_(into(value, hodge_ring(), "Hodge polynomial")) {}

HodgePolynomial HodgePolynomial::projective_line() {
    return HodgePolynomial(Polynomial(hodge_ring(), 1) + Polynomial::monomial(hodge_ring(), {1, 1}));
}

Integer HodgePolynomial::euler_characteristic() const {
    return *specialize(value_, Specialization::Euler).as_integer();
}

MotivicPolynomial::MotivicPolynomial(const Polynomial& value)
    : value_(into(value, motivic_ring(), "motivic polynomial")) {}

HodgePolynomial MotivicPolynomial::hodge() const {
    return HodgePolynomial(specialize(value_, Specialization::HodgeFromL));
}

Series hodge_zeta(const HodgePolynomial& e, std::size_t order) {
    const Ring& ring = hodge_ring();
    const Series geometric = Series::from_integers(ring, order, std::vector<Integer>(order + 1, 1));
    return power(geometric, e.value(), LambdaKind::PolyProduct);
}

Series hilb_local_surface(std::size_t order) {
    const Ring& ring = motivic_ring();
    Series out = Series::one(ring, order);
    for (std::size_t i = 1; i <= order; ++i) {
        // (1 - L^{i-1} t^i)^{-1} = sum_j L^{(i-1) j} t^{i j}
        std::vector<Polynomial> cs(order + 1, Polynomial(ring));
        for (std::size_t j = 0; i * j <= order; ++j)
            cs[i * j] = Polynomial::monomial(ring, {static_cast<std::uint32_t>((i - 1) * j)});
        out *= Series(ring, order, std::move(cs));
    }
    return out;
}

Series hilb_surface(const HodgePolynomial& e, std::size_t order) {
    const Series local = specialize_series(hilb_local_surface(order), Specialization::HodgeFromL);
    return power(local, e.value(), LambdaKind::PolyProduct);
}

std::string_view to_string(Specialization s) {
    return s == Specialization::Euler ? "euler" : "hodge-from-L";
}

Polynomial specialize(const Polynomial& p, Specialization s) {
    if (!(p.ring() == source_ring(s)))
        throw ArityError(std::string(to_string(s)) + " specialization needs a polynomial over " +
                         source_ring(s).name() + ", got " + p.ring().name());
    if (s == Specialization::Euler) {
        const Ring z;
        return substitute(p, {{"u", Polynomial(z, 1)}, {"v", Polynomial(z, 1)}}, z);
    }
    return substitute(p, {{"L", Polynomial::monomial(hodge_ring(), {1, 1})}}, hodge_ring());
}

Series specialize_series(const Series& a, Specialization s) {
    std::vector<Polynomial> cs;
    cs.reserve(a.order() + 1);
    for (const auto& c : a.coefficients()) cs.push_back(specialize(c, s));
    const Ring target = s == Specialization::Euler ? Ring() : hodge_ring();
    return Series(target, a.order(), std::move(cs));
}

}  // namespace powstruct
