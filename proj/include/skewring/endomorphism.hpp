#pragma once

#include <map>
#include <span>
#include <utility>

#include "skewring/finite_ring.hpp"

namespace skewring {

/// A validated unital ring endomorphism given as a finite mapping on
/// element indices, with precomputed power-cycle data: the minimal
/// (preperiod p, period c) with sigma^(p+c) = sigma^p as functions.
/// The cycle makes quantification over all powers sigma^k a finite scan.
class Endomorphism {
public:
    /// Checks the homomorphism laws without constructing. The verdict's
    /// witness is the pair breaking additivity/multiplicativity, or the
    /// unit when sigma(1) != 1.
    static PropertyVerdict check(const RingPtr& ring, std::span<const Elem> map) {
        const std::size_t n = ring->order();
        if (map.size() != n)
            return verdict_fail("endomorphism", {}, "map not total: size mismatch");
        for (Elem a = 0; a < n; ++a)
            if (map[a] >= n)
                return verdict_fail("endomorphism", {a}, "map not total: image out of range");
        if (map[ring->one()] != ring->one())
            return verdict_fail("endomorphism", {ring->one()}, "sigma(1) != 1");
        for (Elem a = 0; a < n; ++a) {
            for (Elem b = 0; b < n; ++b) {
                if (map[ring->add(a, b)] != ring->add(map[a], map[b]))
                    return verdict_fail("endomorphism", {a, b}, "additivity");
                if (map[ring->mul(a, b)] != ring->mul(map[a], map[b]))
                    return verdict_fail("endomorphism", {a, b}, "multiplicativity");
            }
        }
        return verdict_ok("endomorphism");
    }

    /// Precondition: `map` passed check(). Use make_endomorphism below.
    Endomorphism(RingPtr ring, std::vector<Elem> map, std::string label)
        : ring_(std::move(ring)), label_(std::move(label)) {
        // iterate composition until a power repeats
        std::map<std::vector<Elem>, std::size_t> seen;
        std::vector<Elem> cur(ring_->order());
        for (Elem a = 0; a < ring_->order(); ++a) cur[a] = a;  // sigma^0 = id
        for (std::size_t k = 0;; ++k) {
            auto [it, inserted] = seen.emplace(cur, k);
            if (!inserted) {
                preperiod_ = it->second;
                period_ = k - it->second;
                break;
            }
            powers_.push_back(cur);
            for (Elem a = 0; a < ring_->order(); ++a) cur[a] = map[powers_[k][a]];
        }
        map_ = map;
    }

    const RingPtr& ring() const { return ring_; }
    const std::string& label() const { return label_; }
    const std::vector<Elem>& map() const { return map_; }
    std::size_t preperiod() const { return preperiod_; }
    std::size_t period() const { return period_; }

    Elem apply(Elem a) const { return map_[a]; }

    /// sigma^k(a), with k reduced through the power cycle.
    Elem apply_power(Elem a, std::size_t k) const {
        if (k >= preperiod_ + period_) k = preperiod_ + (k - preperiod_) % period_;
        return powers_[k][a];
    }

    bool is_identity() const { return preperiod_ == 0 && period_ == 1; }

    friend bool operator==(const Endomorphism& a, const Endomorphism& b) {
        return a.ring_ == b.ring_ && a.map_ == b.map_;
    }

private:
    RingPtr ring_;
    std::string label_;
    std::vector<Elem> map_;
    std::vector<std::vector<Elem>> powers_;  // sigma^0 .. sigma^(p+c-1)
    std::size_t preperiod_ = 0, period_ = 1;
};

/// Validates and constructs; throws build_error with the failing law on a
/// map that is not a unital endomorphism.
inline EndoPtr make_endomorphism(const RingPtr& ring, std::vector<Elem> map, std::string label) {
    auto v = Endomorphism::check(ring, map);
    if (!v.holds)
        throw build_error("invalid endomorphism '" + label + "' on " + ring->label() + ": " +
                          v.detail);
    return std::make_shared<Endomorphism>(ring, std::move(map), std::move(label));
}

inline EndoPtr identity_endo(const RingPtr& ring) {
    std::vector<Elem> map(ring->order());
    for (Elem a = 0; a < ring->order(); ++a) map[a] = a;
    return std::make_shared<Endomorphism>(ring, std::move(map), "id");
}

/// Spec operation: (preperiod, period) of a validated endomorphism.
inline std::pair<std::size_t, std::size_t> endo_power_cycle(const Endomorphism& sigma) {
    return {sigma.preperiod(), sigma.period()};
}

}  // namespace skewring
