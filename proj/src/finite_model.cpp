#include "powstruct/finite_model.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <unordered_map>

#include "powstruct/errors.hpp"
#include "powstruct/lambda.hpp"

namespace powstruct {

FiniteMap::FiniteMap(std::size_t target_size, std::vector<std::size_t> values)
    : target_size_(target_size), values_(std::move(values)) {
    for (std::size_t x = 0; x < values_.size(); ++x)
        if (values_[x] >= target_size_)
            throw Error("finite map value " + std::to_string(values_[x]) + " at " + std::to_string(x) +
                        " is outside a target of size " + std::to_string(target_size_));
}

FiniteMap FiniteMap::identity(std::size_t n) {
    std::vector<std::size_t> v(n);
    for (std::size_t i = 0; i < n; ++i) v[i] = i;
    return FiniteMap(n, std::move(v));
}

FiniteMap FiniteMap::to_point(std::size_t n) { return FiniteMap(1, std::vector<std::size_t>(n, 0)); }

Integer class_of(const FiniteMap& f) { return Integer(f.source_size()); }

FiniteMap combine(const FiniteMap& f, const FiniteMap& g, MapCombine op) {
    std::vector<std::size_t> values;
    if (op == MapCombine::DisjointUnion) {
        values = f.values();
        for (auto y : g.values()) values.push_back(f.target_size() + y);
        return FiniteMap(f.target_size() + g.target_size(), std::move(values));
    }
    values.reserve(f.source_size() * g.source_size());
    for (auto a : f.values())
        for (auto b : g.values()) values.push_back(a * g.target_size() + b);
    return FiniteMap(f.target_size() * g.target_size(), std::move(values));
}

namespace {

using Tuple = std::vector<std::uint32_t>;

void collect(std::size_t n, std::size_t k, std::uint32_t next, bool repeat, Tuple& cur, std::vector<Tuple>& out) {
    if (cur.size() == k) {
        out.push_back(cur);
        return;
    }
    for (std::uint32_t x = next; x < n; ++x) {
        cur.push_back(x);
        collect(n, k, repeat ? x : x + 1, repeat, cur, out);
        cur.pop_back();
    }
}

std::map<Tuple, std::size_t> index_of(const std::vector<Tuple>& tuples) {
    std::map<Tuple, std::size_t> idx;
    for (std::size_t i = 0; i < tuples.size(); ++i) idx.emplace(tuples[i], i);
    return idx;
}

FiniteMap power_map(const FiniteMap& f, std::size_t k, bool distinct) {
    const auto sources = distinct ? k_subsets(f.source_size(), k) : multisets(f.source_size(), k);
    const auto targets = multisets(f.target_size(), k);
    const auto target_index = index_of(targets);
    std::vector<std::size_t> values;
    values.reserve(sources.size());
    Tuple image;
    for (const auto& s : sources) {
        image.clear();
        for (auto x : s) image.push_back(static_cast<std::uint32_t>(f(x)));
        std::sort(image.begin(), image.end());
        values.push_back(target_index.at(image));
    }
    return FiniteMap(targets.size(), std::move(values));
}

struct Indexed {
    std::vector<Tuple> tuples;
    std::map<Tuple, std::size_t> index;
};

Indexed indexed(std::vector<Tuple> tuples) {
    auto idx = index_of(tuples);
    return {std::move(tuples), std::move(idx)};
}

// Offsets of block i in sum_i P_i x Q_i, where block i has sizes p[i] * q[i].
std::vector<std::size_t> block_offsets(const std::vector<Indexed>& p, const std::vector<Indexed>& q) {
    std::vector<std::size_t> off(p.size() + 1, 0);
    for (std::size_t i = 0; i < p.size(); ++i) off[i + 1] = off[i] + p[i].tuples.size() * q[i].tuples.size();
    return off;
}

// Splits a tuple over X1 + X2 (X2 shifted by n1) into its two parts.
std::pair<Tuple, Tuple> split(const Tuple& t, std::size_t n1) {
    Tuple a, b;
    for (auto x : t) {
        if (x < n1) a.push_back(x);
        else b.push_back(static_cast<std::uint32_t>(x - n1));
    }
    return {std::move(a), std::move(b)};
}

DecompositionCheck check_decomposition(const FiniteMap& f1, const FiniteMap& f2, std::size_t k, bool distinct) {
    const FiniteMap sum = combine(f1, f2, MapCombine::DisjointUnion);
    FiniteMap whole = power_map(sum, k, distinct);
    FiniteMap pieces(0, {});
    for (std::size_t i = 0; i <= k; ++i) {
        FiniteMap piece = combine(power_map(f1, i, distinct), power_map(f2, k - i, distinct), MapCombine::CartesianProduct);
        pieces = combine(pieces, piece, MapCombine::DisjointUnion);
    }

    auto source_tuples = [&](std::size_t n, std::size_t j) { return distinct ? k_subsets(n, j) : multisets(n, j); };
    std::vector<Indexed> src1, src2, tgt1, tgt2;
    for (std::size_t i = 0; i <= k; ++i) {
        src1.push_back(indexed(source_tuples(f1.source_size(), i)));
        src2.push_back(indexed(source_tuples(f2.source_size(), k - i)));
        tgt1.push_back(indexed(multisets(f1.target_size(), i)));
        tgt2.push_back(indexed(multisets(f2.target_size(), k - i)));
    }
    const auto src_off = block_offsets(src1, src2);
    const auto tgt_off = block_offsets(tgt1, tgt2);

    auto place = [&](const Tuple& t, std::size_t n1, const std::vector<Indexed>& first,
                     const std::vector<Indexed>& second, const std::vector<std::size_t>& off) {
        auto [a, b] = split(t, n1);
        const std::size_t i = a.size();
        return off[i] + first[i].index.at(a) * second[i].tuples.size() + second[i].index.at(b);
    };

    DecompositionCheck out{whole, pieces, {}, {}, false};
    for (const auto& t : source_tuples(sum.source_size(), k))
        out.source_bijection.push_back(place(t, f1.source_size(), src1, src2, src_off));
    for (const auto& t : multisets(sum.target_size(), k))
        out.target_bijection.push_back(place(t, f1.target_size(), tgt1, tgt2, tgt_off));
    out.verified = is_equivalence(out.whole, out.pieces, out.source_bijection, out.target_bijection);
    return out;
}

bool is_bijection(std::span<const std::size_t> h, std::size_t n) {
    if (h.size() != n) return false;
    std::vector<bool> hit(n, false);
    for (auto y : h) {
        if (y >= n || hit[y]) return false;
        hit[y] = true;
    }
    return true;
}

}  // namespace

std::vector<std::vector<std::uint32_t>> multisets(std::size_t n, std::size_t k) {
    std::vector<Tuple> out;
    Tuple cur;
    collect(n, k, 0, true, cur, out);
    return out;
}

std::vector<std::vector<std::uint32_t>> k_subsets(std::size_t n, std::size_t k) {
    std::vector<Tuple> out;
    Tuple cur;
    collect(n, k, 0, false, cur, out);
    return out;
}

FiniteMap symmetric_power_map(const FiniteMap& f, std::size_t k) { return power_map(f, k, false); }

FiniteMap config_space_map(const FiniteMap& f, std::size_t k) { return power_map(f, k, true); }

bool is_equivalence(const FiniteMap& f, const FiniteMap& g, std::span<const std::size_t> source_bijection,
                    std::span<const std::size_t> target_bijection) {
    if (f.source_size() != g.source_size() || f.target_size() != g.target_size()) return false;
    if (!is_bijection(source_bijection, f.source_size()) || !is_bijection(target_bijection, f.target_size()))
        return false;
    for (std::size_t x = 0; x < f.source_size(); ++x)
        if (target_bijection[f(x)] != g(source_bijection[x])) return false;
    return true;
}

DecompositionCheck check_symmetric_power_decomposition(const FiniteMap& f1, const FiniteMap& f2, std::size_t k) {
    return check_decomposition(f1, f2, k, false);
}

DecompositionCheck check_config_space_decomposition(const FiniteMap& f1, const FiniteMap& f2, std::size_t k) {
    return check_decomposition(f1, f2, k, true);
}

bool GeometricCoefficient::counts_agree() const {
    if (value != particle_count) return false;
    return std::all_of(profiles.begin(), profiles.end(),
                       [](const ProfileTally& p) { return p.orbits == p.particle_configurations; });
}

bool GeometricCoefficient::free_action() const {
    return std::all_of(profiles.begin(), profiles.end(), [](const ProfileTally& p) { return p.free_action; });
}

bool GeometricCoefficient::orbit_map_well_defined() const {
    return std::all_of(profiles.begin(), profiles.end(), [](const ProfileTally& p) { return p.orbit_map_well_defined; });
}

namespace {

// Orbits of prod_i S_{k_i} acting on (M^s minus diagonal) x prod_i X_i^{k_i}.
// Slot j carries a pair (point of M, state of X_{charge(j)}); permutations act
// inside each block of equal charge, so sorting every block picks the orbit
// representative.
class OrbitEnumerator {
public:
    OrbitEnumerator(const FiniteMap& exponent, std::span<const FiniteMap> coefficients, const ChargeProfile& profile)
        : exponent_(exponent), coefficients_(coefficients) {
        for (std::uint32_t i = 1; i <= profile.counts.size(); ++i) {
            const auto ki = profile.count(i);
            if (!ki) continue;
            blocks_.push_back({slot_charge_.size(), slot_charge_.size() + ki});
            for (std::uint32_t r = 0; r < ki; ++r) slot_charge_.push_back(i);
        }
        slots_.resize(slot_charge_.size());
        used_.assign(exponent.source_size(), false);
        expected_orbit_size_ = profile.stabilizer_order();
    }

    void run(ProfileTally& tally) {
        for (const auto c : slot_charge_)
            if (c > coefficients_.size() || coefficients_[c - 1].source_size() == 0) return finish(tally);
        descend(0);
        finish(tally);
    }

private:
    struct Orbit {
        std::uint64_t size = 0;
        std::vector<std::uint32_t> target;
    };

    using Pair = std::pair<std::uint32_t, std::uint32_t>;

    const FiniteMap& coefficient(std::size_t slot) const { return coefficients_[slot_charge_[slot] - 1]; }

    void descend(std::size_t j) {
        if (j == slots_.size()) return visit();
        const auto& xi = coefficient(j);
        for (std::uint32_t p = 0; p < exponent_.source_size(); ++p) {
            if (used_[p]) continue;
            used_[p] = true;
            for (std::uint32_t s = 0; s < xi.source_size(); ++s) {
                slots_[j] = {p, s};
                descend(j + 1);
            }
            used_[p] = false;
        }
    }

    void canonicalize(std::vector<Pair>& v) const {
        for (const auto& [b, e] : blocks_) std::sort(v.begin() + b, v.begin() + e);
    }

    void visit() {
        ++tuples_;
        canonical_ = slots_;
        canonicalize(canonical_);
        // Mixed-radix code of the representative; fits since the raw bound is budgeted.
        std::uint64_t key = 0;
        for (std::size_t j = 0; j < canonical_.size(); ++j) {
            const auto states = coefficient(j).source_size();
            key = key * (exponent_.source_size() * states) + canonical_[j].first * states + canonical_[j].second;
        }
        image_.resize(slots_.size());
        for (std::size_t j = 0; j < slots_.size(); ++j)
            image_[j] = {static_cast<std::uint32_t>(exponent_(slots_[j].first)),
                         static_cast<std::uint32_t>(coefficient(j)(slots_[j].second))};
        canonicalize(image_);
        target_.clear();
        for (const auto& [a, b] : image_) {
            target_.push_back(a);
            target_.push_back(b);
        }
        auto [it, inserted] = orbits_.try_emplace(key);
        if (inserted) it->second.target = target_;
        else if (it->second.target != target_) well_defined_ = false;
        ++it->second.size;
    }

    void finish(ProfileTally& tally) {
        tally.off_diagonal_tuples = Integer(tuples_);
        tally.orbits = Integer(orbits_.size());
        std::set<std::vector<std::uint32_t>> targets;
        for (const auto& [key, orbit] : orbits_) {
            if (Integer(orbit.size) != expected_orbit_size_) tally.free_action = false;
            targets.insert(orbit.target);
        }
        tally.target_orbits = Integer(targets.size());
        tally.orbit_map_well_defined = well_defined_;
    }

    const FiniteMap& exponent_;
    std::span<const FiniteMap> coefficients_;
    std::vector<std::uint32_t> slot_charge_;
    std::vector<std::pair<std::size_t, std::size_t>> blocks_;
    std::vector<Pair> slots_, canonical_, image_;
    std::vector<std::uint32_t> target_;
    std::vector<bool> used_;
    Integer expected_orbit_size_;
    std::uint64_t tuples_ = 0;
    bool well_defined_ = true;
    std::unordered_map<std::uint64_t, Orbit> orbits_;
};

// Maps psi: M -> X_0 + X_1 + ... (X_0 a point) of total charge k, bucketed by
// the charge profile of the particles they place.
class ParticleEnumerator {
public:
    ParticleEnumerator(std::size_t points, std::span<const FiniteMap> coefficients, std::uint32_t k)
        : points_(points), coefficients_(coefficients), k_(k), counts_(k, 0) {}

    std::map<std::vector<std::uint32_t>, std::uint64_t> run() {
        descend(0, k_);
        return tally_;
    }

private:
    void descend(std::size_t x, std::uint32_t remaining) {
        if (x == points_) {
            if (remaining == 0) ++tally_[counts_];
            return;
        }
        const std::size_t left = points_ - x;
        // Every remaining point carries charge at most `remaining`; prune dead ends.
        if (remaining > left * std::min<std::size_t>(k_, coefficients_.size())) return;
        descend(x + 1, remaining);
        for (std::uint32_t i = 1; i <= remaining && i <= coefficients_.size(); ++i) {
            const auto states = coefficients_[i - 1].source_size();
            ++counts_[i - 1];
            for (std::size_t s = 0; s < states; ++s) descend(x + 1, remaining - i);
            --counts_[i - 1];
        }
    }

    std::size_t points_;
    std::span<const FiniteMap> coefficients_;
    std::uint32_t k_;
    std::vector<std::uint32_t> counts_;
    std::map<std::vector<std::uint32_t>, std::uint64_t> tally_;
};

}  // namespace

GeometricCoefficient geometric_power_coefficient(const FiniteMap& exponent, std::span<const FiniteMap> coefficients,
                                                 std::uint32_t k, std::uint64_t budget) {
    if (k == 0) throw Error("geometric power coefficient needs a positive degree");
    GeometricCoefficient out;
    out.degree = k;
    const auto profiles = charge_profiles(k);
    for (const auto& profile : profiles) {
        ProfileTally tally;
        tally.profile = profile;
        Integer bound = 1;
        for (std::uint32_t r = 0; r < profile.parts(); ++r) bound *= exponent.source_size();
        for (std::uint32_t i = 1; i <= k; ++i) {
            const auto ki = profile.count(i);
            const std::size_t states = i <= coefficients.size() ? coefficients[i - 1].source_size() : 0;
            for (std::uint32_t r = 0; r < ki; ++r) bound *= states;
        }
        tally.raw_bound = bound;
        if (bound > budget)
            throw ResourceError("profile " + profile.to_string() + " needs " + bound.str() +
                                " raw tuples, over the budget of " + std::to_string(budget));
        out.profiles.push_back(std::move(tally));
    }
    for (auto& tally : out.profiles) {
        OrbitEnumerator(exponent, coefficients, tally.profile).run(tally);
        out.value += tally.orbits;
    }
    const auto particles = ParticleEnumerator(exponent.source_size(), coefficients, k).run();
    for (auto& tally : out.profiles) {
        auto it = particles.find(tally.profile.counts);
        tally.particle_configurations = it == particles.end() ? Integer(0) : Integer(it->second);
        out.particle_count += tally.particle_configurations;
    }
    return out;
}

Series finite_series(const FiniteMap& f, FiniteSeriesKind kind, std::size_t order) {
    const Ring z;
    std::vector<Integer> cs;
    for (std::size_t k = 0; k <= order; ++k) {
        const FiniteMap g = kind == FiniteSeriesKind::Zeta ? symmetric_power_map(f, k) : config_space_map(f, k);
        cs.push_back(class_of(g));
    }
    Series out = Series::from_integers(z, order, cs);
    Series base = kind == FiniteSeriesKind::Zeta
                      ? Series::from_integers(z, order, std::vector<Integer>(order + 1, 1))
                      : Series::from_integers(z, order, {1, 1});
    if (!(out == power(base, Polynomial(z, class_of(f)), LambdaKind::Kapranov)))
        throw Error("finite series of a map disagrees with the power structure on its class");
    return out;
}

}  // namespace powstruct
