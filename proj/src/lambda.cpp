#include "powstruct/lambda.hpp"

#include <map>

#include "powstruct/charge_profile.hpp"
#include "powstruct/errors.hpp"

namespace powstruct {

std::string_view to_string(LambdaKind kind) {
    switch (kind) {
        case LambdaKind::Kapranov: return "kapranov";
        case LambdaKind::Binomial: return "binomial";
        case LambdaKind::Opposite: return "opposite";
        case LambdaKind::PolyProduct: return "poly-product";
    }
    return "?";
}

std::optional<LambdaKind> parse_lambda_kind(std::string_view name) {
    if (name == "kapranov") return LambdaKind::Kapranov;
    if (name == "binomial") return LambdaKind::Binomial;
    if (name == "opposite") return LambdaKind::Opposite;
    if (name == "poly-product") return LambdaKind::PolyProduct;
    return std::nullopt;
}

namespace {

// [t^j] (1 - t)^{-p} = (-1)^j binom(-p, j)
Integer zeta_coefficient(const Integer& p, std::uint32_t j) {
    Integer c = binomial(-p, j);
    return (j % 2) ? Integer(-c) : c;
}

// (1 - x t)^{-p} (zeta = true) or (1 + x t)^p (zeta = false) for a monomial x.
Series monomial_factor(const Ring& ring, const ExponentVector& x, const Integer& p, bool zeta, std::size_t order) {
    std::vector<Polynomial> cs;
    cs.reserve(order + 1);
    ExponentVector e(x.size(), 0);
    for (std::uint32_t j = 0; j <= order; ++j) {
        for (std::size_t v = 0; v < x.size(); ++v) e[v] = x[v] * j;
        Integer c = zeta ? zeta_coefficient(p, j) : binomial(p, j);
        cs.push_back(Polynomial::monomial(ring, e, std::move(c)));
    }
    return Series(ring, order, std::move(cs));
}

Integer constant_argument(LambdaKind kind, const Polynomial& a) {
    auto value = a.as_integer();
    if (!value)
        throw UnsupportedLambdaError(std::string(to_string(kind)) + " lambda needs a constant argument, got " +
                                     a.to_string() + " (use poly-product or opposite)");
    return *value;
}

// lambda_a(t^k) as a series of the given order.
Series lambda_rescaled(LambdaKind kind, const Polynomial& a, std::uint32_t k, std::size_t order) {
    Series base = lambda_series(kind, a, order / k);
    std::vector<Polynomial> cs(order + 1, Polynomial(a.ring()));
    for (std::size_t j = 0; j <= base.order(); ++j) cs[j * k] = base[j];
    return Series(a.ring(), order, std::move(cs));
}

}  // namespace

Series lambda_series(LambdaKind kind, const Polynomial& a, std::size_t order) {
    const Ring& ring = a.ring();
    switch (kind) {
        case LambdaKind::Kapranov: {
            const Integer c = constant_argument(kind, a);
            return monomial_factor(ring, ExponentVector(ring.arity(), 0), c, true, order);
        }
        case LambdaKind::Binomial: {
            const Integer c = constant_argument(kind, a);
            return monomial_factor(ring, ExponentVector(ring.arity(), 0), c, false, order);
        }
        case LambdaKind::Opposite:
        case LambdaKind::PolyProduct: {
            const bool zeta = kind == LambdaKind::PolyProduct;
            Series out = Series::one(ring, order);
            for (const auto& [e, p] : a.terms()) out *= monomial_factor(ring, e, p, zeta, order);
            return out;
        }
    }
    throw Error("unknown lambda kind");
}

LogCoefficients decompose_product(const Series& a, LambdaKind kind) {
    if (!a.is_unit())
        throw NonUnitError("cannot factor a series with constant term " + a[0].to_string());
    const std::size_t order = a.order();
    LogCoefficients out{a.ring(), {}};
    out.entries.reserve(order);
    Series quotient = a;
    for (std::size_t k = 1; k <= order; ++k) {
        // quotient = 1 + b_k t^k + O(t^{k+1}) here.
        Polynomial b = quotient[k];
        if (kind == LambdaKind::Kapranov || kind == LambdaKind::Binomial) constant_argument(kind, b);
        if (!b.is_zero())
            quotient *= lambda_rescaled(kind, -b, static_cast<std::uint32_t>(k), order);
        out.entries.push_back(std::move(b));
    }
    return out;
}

Series exp_map(const LogCoefficients& b, LambdaKind kind) {
    const std::size_t order = b.order();
    Series out = Series::one(b.ring, order);
    for (std::size_t k = 1; k <= order; ++k) {
        const Polynomial& bk = b.b(k);
        if (!(bk.ring() == b.ring)) throw ArityError("Exp: coefficient over " + bk.ring().name());
        if (bk.is_zero()) continue;
        out *= lambda_rescaled(kind, bk, static_cast<std::uint32_t>(k), order);
    }
    return out;
}

Series power(const Series& a, const Polynomial& m, LambdaKind kind) {
    Polynomial exponent = m;
    if (!(m.ring() == a.ring())) {
        if (!m.ring().is_integers())
            throw ArityError("exponent over " + m.ring().name() + " for a series over " + a.ring().name());
        exponent = lift_constant(m, a.ring());
    }
    LogCoefficients b = decompose_product(a, kind);
    for (auto& bi : b.entries) bi = bi * exponent;
    return exp_map(b, kind);
}

Series integer_power_formula(const Series& a, const Integer& m) {
    if (!a.is_unit()) throw NonUnitError("integer power formula needs constant term 1, got " + a[0].to_string());
    const std::size_t order = a.order();
    const Ring& ring = a.ring();
    std::map<std::pair<std::uint32_t, std::uint32_t>, Polynomial> powers;
    auto coefficient_power = [&](std::uint32_t i, std::uint32_t e) -> const Polynomial& {
        auto key = std::make_pair(i, e);
        auto it = powers.find(key);
        if (it == powers.end()) it = powers.emplace(key, a[i].pow(e)).first;
        return it->second;
    };
    std::vector<Polynomial> cs(order + 1, Polynomial(ring));
    cs[0] = Polynomial(ring, 1);
    for (std::uint32_t k = 1; k <= order; ++k) {
        Polynomial sum(ring);
        for (const auto& profile : charge_profiles(k)) {
            const Integer weight = binomial(m, profile.parts()) * multinomial(profile);
            if (weight == 0) continue;
            Polynomial term(ring, weight);
            for (std::uint32_t i = 1; i <= k; ++i) {
                const auto ki = profile.count(i);
                if (ki) term *= coefficient_power(i, ki);
                if (term.is_zero()) break;
            }
            sum += term;
        }
        cs[k] = std::move(sum);
    }
    return Series(ring, order, std::move(cs));
}

}  // namespace powstruct
