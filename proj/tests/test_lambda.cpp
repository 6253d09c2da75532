#include <doctest.h>

#include "powstruct/charge_profile.hpp"
#include "powstruct/errors.hpp"
#include "powstruct/lambda.hpp"
#include "test_support.hpp"

using namespace powstruct;
using namespace powstruct::testing;

namespace {

const Ring uv({"u", "v"});
const Ring z;

Polynomial uvmono(std::uint32_t a, std::uint32_t b, long long c = 1) { return Polynomial::monomial(uv, {a, b}, c); }

Polynomial zc(long long x) { return Polynomial(z, x); }

}  // namespace

TEST_CASE("charge profiles") {
    CHECK(charge_profiles(0).size() == 1);
    for (unsigned k = 1; k <= 12; ++k) {
        const auto ps = charge_profiles(k);
        CHECK(ps.size() == count_partitions(k));
        for (const auto& p : ps) CHECK(p.weight() == k);
        for (std::size_t i = 1; i < ps.size(); ++i) CHECK(ps[i - 1].counts < ps[i].counts);
    }
    const ChargeProfile p{{2, 0, 1}};
    CHECK(p.parts() == 3);
    CHECK(p.weight() == 5);
    CHECK(p.stabilizer_order() == 2);
    CHECK(multinomial(p) == 3);
    CHECK(p.to_string() == "{1:2, 3:1}");
}

TEST_CASE("generalized binomial") {
    CHECK(binomial(5, 2) == 10);
    CHECK(binomial(2, 5) == 0);
    CHECK(binomial(-1, 3) == -1);
    CHECK(binomial(-3, 2) == 6);
    CHECK(binomial(7, 0) == 1);
}

TEST_CASE("lambda series examples") {
    CHECK(lambda_series(LambdaKind::Kapranov, zc(2), 3) == integer_series(3, {1, 2, 3, 4}));
    CHECK(lambda_series(LambdaKind::Binomial, zc(3), 4) == integer_series(4, {1, 3, 3, 1, 0}));
    CHECK(lambda_series(LambdaKind::Binomial, zc(-1), 3) == integer_series(3, {1, -1, 1, -1}));

    const Series pp = lambda_series(LambdaKind::PolyProduct, uvmono(1, 1), 2);
    CHECK(pp == Series(uv, 2, {Polynomial(uv, 1), uvmono(1, 1), uvmono(2, 2)}));

    const Ring zu({"u"});
    const auto u = Polynomial::variable(zu, "u");
    CHECK(lambda_series(LambdaKind::Opposite, u, 2) == Series(zu, 2, {Polynomial(zu, 1), u, Polynomial(zu)}));

    CHECK_THROWS_AS(lambda_series(LambdaKind::Kapranov, uvmono(1, 0), 3), UnsupportedLambdaError);
    CHECK_THROWS_AS(lambda_series(LambdaKind::Binomial, uvmono(0, 1), 3), UnsupportedLambdaError);
    // Constants are fine in a polynomial ring; poly-product restricts to Kapranov there.
    CHECK(lambda_series(LambdaKind::Kapranov, Polynomial(uv, 2), 4) ==
          lambda_series(LambdaKind::PolyProduct, Polynomial(uv, 2), 4));
}

TEST_CASE("lambda structures are additive-to-multiplicative") {
    Rng rng(17);
    for (auto kind : {LambdaKind::PolyProduct, LambdaKind::Opposite}) {
        for (int i = 0; i < 20; ++i) {
            const auto a = random_polynomial(rng, uv, 2, 3, -3, 3);
            const auto b = random_polynomial(rng, uv, 2, 3, -3, 3);
            const auto la = lambda_series(kind, a, 6);
            CHECK(la[0] == Polynomial(uv, 1));
            CHECK(la[1] == a);
            CHECK(lambda_series(kind, a + b, 6) == la * lambda_series(kind, b, 6));
        }
    }
    for (auto kind : {LambdaKind::Kapranov, LambdaKind::Binomial})
        for (int a = -4; a <= 4; ++a)
            for (int b = -4; b <= 4; ++b)
                CHECK(lambda_series(kind, zc(a + b), 6) == lambda_series(kind, zc(a), 6) * lambda_series(kind, zc(b), 6));
}

TEST_CASE("decompose_product examples") {
    const auto one_minus_t = decompose_product(integer_series(5, {1, -1}), LambdaKind::Kapranov);
    CHECK(one_minus_t.entries == std::vector<Polynomial>{zc(-1), zc(0), zc(0), zc(0), zc(0)});

    // Oracle: (1-t)^{-1} (1-t^2) multiplied out by ordinary series arithmetic.
    const auto product = int_pow(integer_series(5, {1, -1}), -1) * rescale(integer_series(5, {1, -1}), 2);
    CHECK(product == integer_series(5, {1, 1}));
    const auto one_plus_t = decompose_product(integer_series(5, {1, 1}), LambdaKind::Kapranov);
    CHECK(one_plus_t.entries == std::vector<Polynomial>{zc(1), zc(-1), zc(0), zc(0), zc(0)});

    const auto geometric = decompose_product(integer_series(4, {1, 1, 1, 1, 1}), LambdaKind::Kapranov);
    CHECK(geometric.entries == std::vector<Polynomial>{zc(1), zc(0), zc(0), zc(0)});

    CHECK_THROWS_AS(decompose_product(integer_series(3, {2, 1}), LambdaKind::Kapranov), NonUnitError);
    CHECK_THROWS_AS(log_map(integer_series(3, {0, 1}), LambdaKind::Binomial), NonUnitError);
}

TEST_CASE("exp and log") {
    CHECK(exp_map(LogCoefficients{z, {zc(1), zc(0), zc(0), zc(0)}}, LambdaKind::Kapranov) ==
          integer_series(4, {1, 1, 1, 1, 1}));
    CHECK(exp_map(LogCoefficients{z, std::vector<Polynomial>(5, zc(0))}, LambdaKind::Kapranov) ==
          Series::one(z, 5));
    CHECK(log_map(Series::one(uv, 6), LambdaKind::PolyProduct).entries == std::vector<Polynomial>(6, Polynomial(uv)));

    Rng rng(31);
    for (auto kind : {LambdaKind::PolyProduct, LambdaKind::Opposite}) {
        for (int i = 0; i < 15; ++i) {
            LogCoefficients b{uv, {}}, c{uv, {}}, sum{uv, {}};
            for (int k = 0; k < 8; ++k) {
                b.entries.push_back(random_polynomial(rng, uv, 1, 2, -2, 2));
                c.entries.push_back(random_polynomial(rng, uv, 1, 2, -2, 2));
                sum.entries.push_back(b.entries.back() + c.entries.back());
            }
            const auto eb = exp_map(b, kind);
            const auto ec = exp_map(c, kind);
            CHECK(exp_map(sum, kind) == eb * ec);
            CHECK(log_map(eb, kind) == b);
            CHECK(exp_map(log_map(eb * ec, kind), kind) == eb * ec);
            LogCoefficients lsum = log_map(eb, kind);
            const auto lc = log_map(ec, kind);
            for (std::size_t k = 0; k < 8; ++k) lsum.entries[k] += lc.entries[k];
            CHECK(log_map(eb * ec, kind) == lsum);
        }
    }
}

TEST_CASE("power examples") {
    Rng rng(41);
    const auto a = random_unit_series(rng, uv, 6, 2, 3);
    CHECK(power(a, Polynomial(uv, 1), LambdaKind::PolyProduct) == a);
    CHECK(power(a, Polynomial(uv, 1), LambdaKind::Opposite) == a);
    CHECK(power(integer_series(3, {1, 1}), zc(3), LambdaKind::Kapranov) == integer_series(3, {1, 3, 3, 1}));

    // lambda_{uv}(t) * lambda_{-uv}(t^2) = (1 - uv t)^{-1} (1 - uv t^2)
    const Series one_plus_t(uv, 2, {Polynomial(uv, 1), Polynomial(uv, 1)});
    const Series expected(uv, 2, {Polynomial(uv, 1), uvmono(1, 1), uvmono(2, 2) - uvmono(1, 1)});
    CHECK(power(one_plus_t, uvmono(1, 1), LambdaKind::PolyProduct) == expected);

    // Integer exponents lift into the series ring.
    CHECK(power(one_plus_t, zc(2), LambdaKind::PolyProduct) ==
          Series(uv, 2, {Polynomial(uv, 1), Polynomial(uv, 2), Polynomial(uv, 1)}));
    CHECK_THROWS_AS(power(one_plus_t, Polynomial::variable(Ring({"x"}), "x"), LambdaKind::PolyProduct), ArityError);
    CHECK_THROWS_AS(power(integer_series(3, {-1, 1}), zc(2), LambdaKind::Kapranov), NonUnitError);
}

TEST_CASE("opposite and poly-product are different power structures") {
    // Regression witness: (1 + t)^{uv}. Under the opposite structure 1 + t = lambda_1(t).
    const Series one_plus_t(uv, 2, {Polynomial(uv, 1), Polynomial(uv, 1)});
    const auto pp = power(one_plus_t, uvmono(1, 1), LambdaKind::PolyProduct);
    const auto op = power(one_plus_t, uvmono(1, 1), LambdaKind::Opposite);
    CHECK(op == Series(uv, 2, {Polynomial(uv, 1), uvmono(1, 1), Polynomial(uv)}));
    CHECK_FALSE(pp == op);
}

TEST_CASE("integer power formula examples") {
    CHECK(integer_power_formula(integer_series(3, {1, 2}), 3) == integer_series(3, {1, 6, 12, 8}));
    CHECK(integer_power_formula(integer_series(3, {1, 1}), -1) == integer_series(3, {1, -1, 1, -1}));

    const Ring ab({"a", "b"});
    const auto a = Polynomial::variable(ab, "a");
    const auto b = Polynomial::variable(ab, "b");
    const Series s(ab, 4, {Polynomial(ab, 1), a, b});
    const auto sq = integer_power_formula(s, 2);
    CHECK(sq[2] == a * a + Polynomial(ab, 2) * b);
    CHECK(sq == s * s);
    CHECK_THROWS_AS(integer_power_formula(integer_series(2, {3, 1}), 2), NonUnitError);
}

TEST_CASE("all integer routes agree") {
    Rng rng(51);
    for (int i = 0; i < 20; ++i) {
        const auto a = random_unit_series(rng, z, 10, 0, 1, -4, 4);
        for (int m = -5; m <= 5; ++m) {
            const auto expected = int_pow(a, m);
            CHECK(integer_power_formula(a, m) == expected);
            CHECK(power(a, zc(m), LambdaKind::Kapranov) == expected);
            CHECK(power(a, zc(m), LambdaKind::Binomial) == expected);
            CHECK(power(a, zc(m), LambdaKind::Opposite) == expected);
        }
    }
}

TEST_CASE("finitely determined") {
    Rng rng(61);
    for (int i = 0; i < 20; ++i) {
        const auto a = random_unit_series(rng, uv, 8, 1, 2, -2, 2);
        const auto m = random_polynomial(rng, uv, 1, 2, -2, 2);
        const std::size_t k = std::uniform_int_distribution<std::size_t>(1, 8)(rng);
        Series perturbed = a;
        for (std::size_t j = k; j <= 8; ++j) perturbed[j] += random_polynomial(rng, uv, 1, 2, -2, 2);
        CHECK(eq_mod(power(a, m, LambdaKind::PolyProduct), power(perturbed, m, LambdaKind::PolyProduct), k));
        CHECK(eq_mod(power(a, m, LambdaKind::Opposite), power(perturbed, m, LambdaKind::Opposite), k));
    }
}

TEST_CASE("effectiveness over the integers") {
    Rng rng(71);
    for (int i = 0; i < 30; ++i) {
        const auto a = random_unit_series(rng, z, 8, 0, 1, 0, 5);
        const long long m = std::uniform_int_distribution<int>(0, 6)(rng);
        for (const auto& c : power(a, zc(m), LambdaKind::Kapranov).coefficients()) CHECK(c.constant_term() >= 0);
    }
}
