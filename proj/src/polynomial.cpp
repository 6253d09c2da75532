#include "powstruct/polynomial.hpp"

#include <algorithm>
#include <numeric>
#include <set>
#include <sstream>

#include "powstruct/errors.hpp"

namespace powstruct {

std::uint32_t total_degree(const ExponentVector& e) {
    return std::accumulate(e.begin(), e.end(), std::uint32_t{0});
}

bool MonomialOrder::operator()(const ExponentVector& a, const ExponentVector& b) const {
    const auto da = total_degree(a);
    const auto db = total_degree(b);
    if (da != db) return da < db;
    return std::lexicographical_compare(b.begin(), b.end(), a.begin(), a.end());
}

bool is_identifier(std::string_view name) {
    if (name.empty()) return false;
    auto alpha = [](char c) { return (c >= 'A' && c <= 'Z') || (c >= 'a' && c <= 'z'); };
    auto digit = [](char c) { return c >= '0' && c <= '9'; };
    if (!alpha(name.front())) return false;
    return std::all_of(name.begin() + 1, name.end(), [&](char c) { return alpha(c) || digit(c) || c == '_'; });
}

namespace {

const std::shared_ptr<const std::vector<std::string>>& no_variables() {
    static const auto empty = std::make_shared<const std::vector<std::string>>();
    return empty;
}

}  // namespace

Ring::Ring() : vars_(no_variables()) {}

Ring::Ring(std::vector<std::string> variables) {
    std::set<std::string> seen;
    for (const auto& v : variables) {
        if (!is_identifier(v)) throw Error("invalid variable name '" + v + "'");
        if (!seen.insert(v).second) throw Error("duplicate variable '" + v + "'");
    }
    vars_ = variables.empty() ? no_variables()
                              : std::make_shared<const std::vector<std::string>>(std::move(variables));
}

std::optional<std::size_t> Ring::index_of(std::string_view name) const {
    const auto& vs = *vars_;
    for (std::size_t i = 0; i < vs.size(); ++i)
        if (vs[i] == name) return i;
    return std::nullopt;
}

std::string Ring::name() const {
    if (vars_->empty()) return "Z";
    std::string out = "Z[";
    for (std::size_t i = 0; i < vars_->size(); ++i) {
        if (i) out += ',';
        out += (*vars_)[i];
    }
    return out + "]";
}

Polynomial::Polynomial() = default;

Polynomial::Polynomial(Ring ring) : ring_(std::move(ring)) {}

Polynomial::Polynomial(Ring ring, Integer constant) : ring_(std::move(ring)) {
    if (constant != 0) terms_.emplace(ExponentVector(ring_.arity(), 0), std::move(constant));
}

Polynomial::Polynomial(Ring ring, TermMap terms) : ring_(std::move(ring)), terms_(std::move(terms)) {
    for (auto it = terms_.begin(); it != terms_.end();) {
        if (it->first.size() != ring_.arity())
            throw ArityError("exponent vector of length " + std::to_string(it->first.size()) + " in ring " +
                             ring_.name());
        it = it->second == 0 ? terms_.erase(it) : std::next(it);
    }
}

Polynomial Polynomial::variable(const Ring& ring, std::string_view name) {
    const auto idx = ring.index_of(name);
    if (!idx) throw UnboundVariableError("variable '" + std::string(name) + "' is not in ring " + ring.name());
    ExponentVector e(ring.arity(), 0);
    e[*idx] = 1;
    return monomial(ring, std::move(e));
}

Polynomial Polynomial::monomial(const Ring& ring, ExponentVector exponents, Integer coefficient) {
    TermMap t;
    t.emplace(std::move(exponents), std::move(coefficient));
    return Polynomial(ring, std::move(t));
}

bool Polynomial::is_constant() const {
    return terms_.empty() || (terms_.size() == 1 && total_degree(terms_.begin()->first) == 0);
}

Integer Polynomial::constant_term() const {
    if (terms_.empty()) return 0;
    const auto& [e, c] = *terms_.begin();
    return total_degree(e) == 0 ? c : Integer(0);
}

std::optional<Integer> Polynomial::as_integer() const {
    if (!is_constant()) return std::nullopt;
    return constant_term();
}

Integer Polynomial::coefficient(const ExponentVector& exponents) const {
    auto it = terms_.find(exponents);
    return it == terms_.end() ? Integer(0) : it->second;
}

std::uint32_t Polynomial::degree() const {
    return terms_.empty() ? 0 : total_degree(terms_.rbegin()->first);
}

void Polynomial::require_same_ring(const Polynomial& other, const char* op) const {
    if (!(ring_ == other.ring_))
        throw ArityError(std::string("cannot ") + op + " polynomials over " + ring_.name() + " and " +
                         other.ring_.name());
}

Polynomial Polynomial::operator-() const {
    Polynomial out = *this;
    for (auto& [e, c] : out.terms_) c = -c;
    return out;
}

Polynomial& Polynomial::operator+=(const Polynomial& other) {
    require_same_ring(other, "add");
    for (const auto& [e, c] : other.terms_) {
        auto [it, inserted] = terms_.try_emplace(e, c);
        if (!inserted) {
            it->second += c;
            if (it->second == 0) terms_.erase(it);
        }
    }
    return *this;
}

Polynomial& Polynomial::operator-=(const Polynomial& other) {
    require_same_ring(other, "subtract");
    for (const auto& [e, c] : other.terms_) {
        auto [it, inserted] = terms_.try_emplace(e, -c);
        if (!inserted) {
            it->second -= c;
            if (it->second == 0) terms_.erase(it);
        }
    }
    return *this;
}

void Polynomial::add_product(const Polynomial& a, const Polynomial& b) {
    require_same_ring(a, "multiply");
    require_same_ring(b, "multiply");
    const std::size_t n = ring_.arity();
    ExponentVector e(n);
    Integer prod;
    for (const auto& [ea, ca] : a.terms_) {
        for (const auto& [eb, cb] : b.terms_) {
            for (std::size_t i = 0; i < n; ++i) e[i] = ea[i] + eb[i];
            prod = ca * cb;
            auto [it, inserted] = terms_.try_emplace(e, prod);
            if (!inserted) {
                it->second += prod;
                if (it->second == 0) terms_.erase(it);
            }
        }
    }
}

Polynomial operator*(const Polynomial& a, const Polynomial& b) {
    a.require_same_ring(b, "multiply");
    Polynomial out(a.ring_);
    out.add_product(a, b);
    return out;
}

Polynomial& Polynomial::operator*=(const Polynomial& other) {
    *this = *this * other;
    return *this;
}

Polynomial& Polynomial::operator*=(const Integer& factor) {
    if (factor == 0) {
        terms_.clear();
        return *this;
    }
    for (auto& [e, c] : terms_) c *= factor;
    return *this;
}

Polynomial Polynomial::pow(std::uint32_t exponent) const {
    Polynomial result(ring_, 1);
    Polynomial base = *this;
    while (exponent) {
        if (exponent & 1u) result *= base;
        exponent >>= 1u;
        if (exponent) base *= base;
    }
    return result;
}

std::string Polynomial::to_string() const {
    if (terms_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (const auto& [e, c] : terms_) {
        const bool negative = c < 0;
        if (first) {
            if (negative) os << '-';
        } else {
            os << (negative ? " - " : " + ");
        }
        first = false;
        const Integer magnitude = negative ? Integer(-c) : c;
        const bool has_vars = total_degree(e) > 0;
        bool need_star = false;
        if (!has_vars || magnitude != 1) {
            os << magnitude;
            need_star = true;
        }
        for (std::size_t i = 0; i < e.size(); ++i) {
            if (e[i] == 0) continue;
            if (need_star) os << '*';
            os << ring_.variables()[i];
            if (e[i] > 1) os << '^' << e[i];
            need_star = true;
        }
    }
    return os.str();
}

std::ostream& operator<<(std::ostream& os, const Polynomial& p) { return os << p.to_string(); }

Polynomial substitute(const Polynomial& p, const Bindings& bindings, const Ring& target) {
    const auto& vars = p.ring().variables();
    for (const auto& [name, image] : bindings) {
        if (!(image.ring() == target))
            throw ArityError("binding for '" + name + "' lives in " + image.ring().name() + ", expected " +
                             target.name());
    }
    std::vector<const Polynomial*> images;
    images.reserve(vars.size());
    for (const auto& v : vars) {
        auto it = bindings.find(v);
        if (it == bindings.end()) throw UnboundVariableError("variable '" + v + "' is not bound");
        images.push_back(&it->second);
    }
    // Powers of each image are cached since exponents repeat across terms.
    std::vector<std::map<std::uint32_t, Polynomial>> power_cache(vars.size());
    auto image_power = [&](std::size_t i, std::uint32_t k) -> const Polynomial& {
        auto it = power_cache[i].find(k);
        if (it == power_cache[i].end()) it = power_cache[i].emplace(k, images[i]->pow(k)).first;
        return it->second;
    };
    Polynomial out(target);
    for (const auto& [e, c] : p.terms()) {
        Polynomial term(target, c);
        for (std::size_t i = 0; i < e.size(); ++i)
            if (e[i]) term *= image_power(i, e[i]);
        out += term;
    }
    return out;
}

Polynomial substitute(const Polynomial& p, const Bindings& bindings) {
    if (bindings.empty()) {
        if (!p.ring().is_integers())
            throw UnboundVariableError("no bindings given for polynomial over " + p.ring().name());
        return p;
    }
    return substitute(p, bindings, bindings.begin()->second.ring());
}

Polynomial lift_constant(const Polynomial& integer_value, const Ring& target) {
    const auto value = integer_value.as_integer();
    if (!value) throw ArityError("cannot lift non-constant polynomial over " + integer_value.ring().name());
    return Polynomial(target, *value);
}

}  // namespace powstruct
