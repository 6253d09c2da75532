#include <doctest.h>

#include "powstruct/errors.hpp"
#include "powstruct/polynomial.hpp"
#include "test_support.hpp"

using namespace powstruct;
using namespace powstruct::testing;

namespace {

const Ring uv({"u", "v"});

Polynomial u() { return Polynomial::variable(uv, "u"); }
Polynomial v() { return Polynomial::variable(uv, "v"); }
Polynomial c(long long x) { return Polynomial(uv, x); }

}  // namespace

TEST_CASE("arithmetic examples") {
    CHECK((c(1) + u() * v()) + (-(u() * v())) == c(1));
    const Ring zu({"u"});
    const auto x = Polynomial::variable(zu, "u");
    const auto one = Polynomial(zu, 1);
    CHECK((one + x) * (one - x) == one - x.pow(2));
    Rng rng(7);
    for (int i = 0; i < 10; ++i) CHECK((c(0) * random_polynomial(rng, uv, 4, 6)).is_zero());
}

TEST_CASE("mismatched variable lists are rejected") {
    const Ring other({"v", "u"});
    const auto w = Polynomial::variable(other, "u");
    CHECK_THROWS_AS(u() + w, ArityError);
    CHECK_THROWS_AS(u() * w, ArityError);
    CHECK_THROWS_AS(u() - Polynomial(Ring(), 1), ArityError);
}

TEST_CASE("normal form and formatting") {
    CHECK(c(0).to_string() == "0");
    CHECK((c(1) + u() * v()).to_string() == "1 + u*v");
    CHECK((u().pow(2) * v() - u() * v()).to_string() == "-u*v + u^2*v");
    CHECK((c(1) - u() - v() + u() * v()).to_string() == "1 - u - v + u*v");
    CHECK((u().pow(2) + v().pow(2) + c(20) * u() * v()).to_string() == "u^2 + 20*u*v + v^2");
    CHECK(c(-7).to_string() == "-7");
    CHECK(Ring().name() == "Z");
    CHECK(uv.name() == "Z[u,v]");
}

TEST_CASE("terms map normalization is idempotent") {
    Polynomial::TermMap raw;
    raw[{1, 0}] = 3;
    raw[{0, 1}] = 0;
    raw[{2, 2}] = -1;
    const Polynomial p(uv, raw);
    CHECK(p.term_count() == 2);
    CHECK(Polynomial(uv, p.terms()) == p);
    Polynomial::TermMap bad;
    bad[{1}] = 1;
    CHECK_THROWS_AS(Polynomial(uv, bad), ArityError);
}

TEST_CASE("ring axioms on random triples") {
    Rng rng(2024);
    for (int i = 0; i < 200; ++i) {
        const auto a = random_polynomial(rng, uv, 4, 5);
        const auto b = random_polynomial(rng, uv, 4, 5);
        const auto d = random_polynomial(rng, uv, 4, 5);
        CHECK((a + b) + d == a + (b + d));
        CHECK((a * b) * d == a * (b * d));
        CHECK(a + b == b + a);
        CHECK(a * b == b * a);
        CHECK(a * (b + d) == a * b + a * d);
        CHECK(a - a == c(0));
        CHECK(a * c(1) == a);
    }
}

TEST_CASE("substitute examples") {
    const Ring zl({"L"});
    const auto L = Polynomial::variable(zl, "L");
    const auto p = Polynomial(zl, 1) + L + L.pow(2);
    const auto image = substitute(p, {{"L", u() * v()}}, uv);
    CHECK(image == c(1) + u() * v() + (u() * v()).pow(2));

    const Ring z;
    const auto chi = substitute(c(1) + u() * v(), {{"u", Polynomial(z, 1)}, {"v", Polynomial(z, 1)}}, z);
    CHECK(chi == Polynomial(z, 2));

    CHECK_THROWS_AS(substitute(u(), {{"v", u()}}, uv), UnboundVariableError);
    CHECK_THROWS_AS(substitute(u(), {{"u", L}, {"v", L}}, uv), ArityError);
}

TEST_CASE("substitute is a ring homomorphism") {
    // Oracle: evaluate at random integer points, with the bindings evaluated first.
    const Ring abc({"a", "b", "c"});
    Rng rng(99);
    for (int i = 0; i < 100; ++i) {
        const auto p = random_polynomial(rng, uv, 3, 4);
        const auto q = random_polynomial(rng, uv, 3, 4);
        Bindings bind{{"u", random_polynomial(rng, abc, 2, 3)}, {"v", random_polynomial(rng, abc, 2, 3)}};
        const auto s = [&](const Polynomial& x) { return substitute(x, bind, abc); };
        CHECK(s(p * q) == s(p) * s(q));
        CHECK(s(p + q) == s(p) + s(q));
        CHECK(s(c(1)) == Polynomial(abc, 1));
        CHECK(s(c(0)).is_zero());

        const std::vector<Integer> point{random_int(rng, -4, 4), random_int(rng, -4, 4), random_int(rng, -4, 4)};
        const std::vector<Integer> image_point{evaluate(bind.at("u"), point), evaluate(bind.at("v"), point)};
        CHECK(evaluate(s(p * q), point) == evaluate(p, image_point) * evaluate(q, image_point));
    }
}

TEST_CASE("large coefficients stay exact") {
    const Ring z;
    const auto two = Polynomial(z, 2);
    CHECK(two.pow(100).to_string() == "1267650600228229401496703205376");
}
