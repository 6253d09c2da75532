#include "powstruct/charge_profile.hpp"

#include <sstream>

namespace powstruct {

std::uint32_t ChargeProfile::weight() const {
    std::uint32_t w = 0;
    for (std::size_t i = 0; i < counts.size(); ++i) w += static_cast<std::uint32_t>(i + 1) * counts[i];
    return w;
}

std::uint32_t ChargeProfile::parts() const {
    std::uint32_t s = 0;
    for (auto c : counts) s += c;
    return s;
}

Integer ChargeProfile::stabilizer_order() const {
    Integer out = 1;
    for (auto c : counts) out *= factorial(c);
    return out;
}

std::string ChargeProfile::to_string() const {
    std::ostringstream os;
    os << '{';
    bool first = true;
    for (std::size_t i = 0; i < counts.size(); ++i) {
        if (!counts[i]) continue;
        if (!first) os << ", ";
        first = false;
        os << (i + 1) << ':' << counts[i];
    }
    os << '}';
    return os.str();
}

namespace {

// Fills counts[charge - 1 .. k - 1] so that the remaining weight is used up.
void extend(std::vector<std::uint32_t>& counts, std::uint32_t charge, std::uint32_t remaining,
            std::vector<ChargeProfile>& out) {
    const auto k = static_cast<std::uint32_t>(counts.size());
    if (charge > k) {
        if (remaining == 0) out.push_back(ChargeProfile{counts});
        return;
    }
    for (std::uint32_t c = 0; c * charge <= remaining; ++c) {
        counts[charge - 1] = c;
        extend(counts, charge + 1, remaining - c * charge, out);
    }
    counts[charge - 1] = 0;
}

}  // namespace

std::vector<ChargeProfile> charge_profiles(std::uint32_t k) {
    std::vector<ChargeProfile> out;
    if (k == 0) {
        out.push_back(ChargeProfile{});
        return out;
    }
    std::vector<std::uint32_t> counts(k, 0);
    extend(counts, 1, k, out);
    return out;
}

Integer factorial(std::uint32_t n) {
    Integer out = 1;
    for (std::uint32_t i = 2; i <= n; ++i) out *= i;
    return out;
}

Integer binomial(const Integer& a, std::uint32_t j) {
    Integer out = 1;
    // out = binom(a, r) after step r; binom(a, r-1) * (a - r + 1) is divisible by r.
    for (std::uint32_t r = 1; r <= j; ++r) {
        out *= a - (r - 1);
        out /= r;
    }
    return out;
}

Integer multinomial(const ChargeProfile& profile) {
    return factorial(profile.parts()) / profile.stabilizer_order();
}

}  // namespace powstruct
