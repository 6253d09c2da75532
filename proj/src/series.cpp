#include "powstruct/series.hpp"

#include <algorithm>

#include "powstruct/errors.hpp"

namespace powstruct {

Series::Series(Ring ring, std::size_t order) : ring_(std::move(ring)), coeffs_(order + 1, Polynomial(ring_)) {
    coeffs_[0] = Polynomial(ring_, 1);
}

Series::Series(Ring ring, std::size_t order, std::vector<Polynomial> coefficients)
    : ring_(std::move(ring)), coeffs_(std::move(coefficients)) {
    coeffs_.resize(order + 1, Polynomial(ring_));
    for (const auto& c : coeffs_)
        if (!(c.ring() == ring_))
            throw ArityError("series coefficient over " + c.ring().name() + " in a series over " + ring_.name());
}

Series Series::zero(const Ring& ring, std::size_t order) {
    return Series(ring, order, std::vector<Polynomial>(order + 1, Polynomial(ring)));
}

Series Series::from_integers(const Ring& ring, std::size_t order, const std::vector<Integer>& coefficients) {
    std::vector<Polynomial> cs;
    cs.reserve(coefficients.size());
    for (const auto& c : coefficients) cs.emplace_back(ring, c);
    return Series(ring, order, std::move(cs));
}

bool Series::is_unit() const { return coeffs_[0] == Polynomial(ring_, 1); }

Series Series::truncated(std::size_t order) const {
    if (order > this->order()) throw Error("cannot extend a truncated series");
    return Series(ring_, order, std::vector<Polynomial>(coeffs_.begin(), coeffs_.begin() + order + 1));
}

void Series::require_compatible(const Series& other, const char* op) const {
    if (!(ring_ == other.ring_))
        throw ArityError(std::string("cannot ") + op + " series over " + ring_.name() + " and " +
                         other.ring_.name());
}

Series Series::operator-() const {
    Series out = *this;
    for (auto& c : out.coeffs_) c = -c;
    return out;
}

Series& Series::operator+=(const Series& other) {
    require_compatible(other, "add");
    coeffs_.resize(std::min(coeffs_.size(), other.coeffs_.size()), Polynomial(ring_));
    for (std::size_t j = 0; j < coeffs_.size(); ++j) coeffs_[j] += other.coeffs_[j];
    return *this;
}

Series& Series::operator-=(const Series& other) {
    require_compatible(other, "subtract");
    coeffs_.resize(std::min(coeffs_.size(), other.coeffs_.size()), Polynomial(ring_));
    for (std::size_t j = 0; j < coeffs_.size(); ++j) coeffs_[j] -= other.coeffs_[j];
    return *this;
}

Series operator*(const Series& a, const Series& b) {
    a.require_compatible(b, "multiply");
    const std::size_t order = std::min(a.order(), b.order());
    std::vector<Polynomial> out(order + 1, Polynomial(a.ring_));
    for (std::size_t i = 0; i <= order; ++i) {
        if (a.coeffs_[i].is_zero()) continue;
        for (std::size_t j = 0; i + j <= order; ++j) {
            if (b.coeffs_[j].is_zero()) continue;
            out[i + j].add_product(a.coeffs_[i], b.coeffs_[j]);
        }
    }
    return Series(a.ring_, order, std::move(out));
}

Series Series::scaled(const Polynomial& factor) const {
    Series out = *this;
    for (auto& c : out.coeffs_) c = c * factor;
    return out;
}

Series invert(const Series& a) {
    if (!a.is_unit()) throw NonUnitError("series with constant term " + a[0].to_string() + " is not a unit");
    const std::size_t order = a.order();
    std::vector<Polynomial> inv(order + 1, Polynomial(a.ring()));
    inv[0] = Polynomial(a.ring(), 1);
    // c_0 = 1 gives inv_j = -sum_{i=1..j} a_i inv_{j-i}.
    for (std::size_t j = 1; j <= order; ++j) {
        Polynomial acc(a.ring());
        for (std::size_t i = 1; i <= j; ++i) {
            if (a[i].is_zero() || inv[j - i].is_zero()) continue;
            acc.add_product(a[i], inv[j - i]);
        }
        inv[j] = -acc;
    }
    return Series(a.ring(), order, std::move(inv));
}

Series rescale(const Series& a, std::uint32_t k) {
    if (k == 0) throw Error("rescale factor must be positive");
    const std::size_t order = a.order();
    std::vector<Polynomial> out(order + 1, Polynomial(a.ring()));
    for (std::size_t j = 0; j * k <= order; ++j) out[j * k] = a[j];
    return Series(a.ring(), order, std::move(out));
}

Series int_pow(const Series& a, long long n) {
    if (n == 0) return Series::one(a.ring(), a.order());
    Series base = n < 0 ? invert(a) : a;
    unsigned long long e = n < 0 ? static_cast<unsigned long long>(-(n + 1)) + 1 : static_cast<unsigned long long>(n);
    Series result = Series::one(a.ring(), a.order());
    while (e) {
        if (e & 1u) result *= base;
        e >>= 1u;
        if (e) base *= base;
    }
    return result;
}

bool eq_mod(const Series& a, const Series& b, std::size_t k) {
    if (k > std::min(a.order(), b.order()) + 1)
        throw Error("eq_mod: k = " + std::to_string(k) + " exceeds the known coefficients");
    if (!(a.ring() == b.ring())) throw ArityError("eq_mod: series over different rings");
    for (std::size_t j = 0; j < k; ++j)
        if (!(a[j] == b[j])) return false;
    return true;
}

Series substitute(const Series& a, const Bindings& bindings, const Ring& target) {
    std::vector<Polynomial> cs;
    cs.reserve(a.order() + 1);
    for (const auto& c : a.coefficients()) cs.push_back(substitute(c, bindings, target));
    return Series(target, a.order(), std::move(cs));
}

}  // namespace powstruct
