#pragma once

#include <algorithm>
#include <random>
#include <set>

#include "skewring/finite_ring.hpp"

namespace skewring {

/// Knobs for exhaustive-vs-sampled scans. Exhaustive triple scans run up
/// to `exhaustive_triple_cap`; beyond that `samples` uniform triples are
/// drawn from a fixed-seed generator and the verdict is marked sampled.
struct ScanPolicy {
    std::size_t exhaustive_triple_cap = 32;    // max order for O(n^3) ring axiom scan
    std::size_t pair_cap = 4096;               // max order for O(n^2)-outer property scans
    std::size_t triple_cap = 256;              // max order for O(n^3) property scans
    std::size_t samples = 100000;
    std::uint64_t seed = 0;
    bool allow_sampling = true;
};

/// Checks all unital ring axioms. Exhaustive over triples for small
/// orders, sampled beyond. The verdict's detail names the violated axiom
/// and the witness is the offending element tuple.
inline PropertyVerdict validate_ring(const FiniteRing& R, const ScanPolicy& policy = {}) {
    const std::size_t n = R.order();
    const Elem z = R.zero(), o = R.one();

    bool sampled_pairs = false;
    for (Elem a = 0; a < n; ++a) {
        if (R.neg(a) >= n) return verdict_fail("ring-axioms", {a}, "neg not total");
        if (R.add(a, z) != a) return verdict_fail("ring-axioms", {a}, "zero not additive identity");
        if (R.add(a, R.neg(a)) != z) return verdict_fail("ring-axioms", {a}, "neg not inverse");
        if (R.mul(a, o) != a || R.mul(o, a) != a)
            return verdict_fail("ring-axioms", {a}, "one not multiplicative identity");
    }
    auto check_pair = [&](Elem a, Elem b) -> PropertyVerdict {
        if (R.add(a, b) >= n) return verdict_fail("ring-axioms", {a, b}, "add not total");
        if (R.mul(a, b) >= n) return verdict_fail("ring-axioms", {a, b}, "mul not total");
        if (R.add(a, b) != R.add(b, a))
            return verdict_fail("ring-axioms", {a, b}, "addition not commutative");
        return verdict_ok("ring-axioms");
    };
    if (n <= policy.pair_cap) {
        for (Elem a = 0; a < n; ++a)
            for (Elem b = 0; b < n; ++b)
                if (auto v = check_pair(a, b); !v.holds) return v;
    } else {
        if (!policy.allow_sampling)
            return verdict_fail("ring-axioms", {},
                                "order exceeds exhaustive cap and sampling is disabled");
        sampled_pairs = true;
        std::mt19937_64 rng(policy.seed + 1);
        std::uniform_int_distribution<Elem> dist(0, static_cast<Elem>(n - 1));
        for (std::size_t i = 0; i < policy.samples; ++i) {
            if (auto v = check_pair(dist(rng), dist(rng)); !v.holds) {
                v.sampled = true;
                return v;
            }
        }
    }

    auto check_triple = [&](Elem a, Elem b, Elem c) -> PropertyVerdict {
        if (R.add(R.add(a, b), c) != R.add(a, R.add(b, c)))
            return verdict_fail("ring-axioms", {a, b, c}, "addition not associative");
        if (R.mul(R.mul(a, b), c) != R.mul(a, R.mul(b, c)))
            return verdict_fail("ring-axioms", {a, b, c}, "multiplication not associative");
        if (R.mul(a, R.add(b, c)) != R.add(R.mul(a, b), R.mul(a, c)))
            return verdict_fail("ring-axioms", {a, b, c}, "left distributivity");
        if (R.mul(R.add(a, b), c) != R.add(R.mul(a, c), R.mul(b, c)))
            return verdict_fail("ring-axioms", {a, b, c}, "right distributivity");
        return verdict_ok("ring-axioms");
    };

    if (n <= policy.exhaustive_triple_cap) {
        for (Elem a = 0; a < n; ++a)
            for (Elem b = 0; b < n; ++b)
                for (Elem c = 0; c < n; ++c)
                    if (auto v = check_triple(a, b, c); !v.holds) return v;
        auto v = verdict_ok("ring-axioms");
        v.sampled = sampled_pairs;
        return v;
    }
    if (!policy.allow_sampling)
        return verdict_fail("ring-axioms", {},
                            "order exceeds exhaustive cap and sampling is disabled");
    std::mt19937_64 rng(policy.seed);
    std::uniform_int_distribution<Elem> dist(0, static_cast<Elem>(n - 1));
    for (std::size_t i = 0; i < policy.samples; ++i) {
        if (auto v = check_triple(dist(rng), dist(rng), dist(rng)); !v.holds) {
            v.sampled = true;
            return v;
        }
    }
    auto v = verdict_ok("ring-axioms");
    v.sampled = true;
    return v;
}

/// All e with e*e = e, ascending. Always contains zero and one.
inline std::vector<Elem> idempotents(const FiniteRing& R) {
    std::vector<Elem> out;
    for (Elem e = 0; e < R.order(); ++e)
        if (R.mul(e, e) == e) out.push_back(e);
    return out;
}

enum class Side { Left, Right };

/// Right: {a | xa = 0 for all x in X}; left: {a | ax = 0 for all x in X}.
inline std::vector<Elem> annihilator(const FiniteRing& R, const std::vector<Elem>& X, Side side) {
    std::vector<Elem> out;
    for (Elem a = 0; a < R.order(); ++a) {
        bool ok = true;
        for (Elem x : X) {
            Elem p = side == Side::Right ? R.mul(x, a) : R.mul(a, x);
            if (p != R.zero()) { ok = false; break; }
        }
        if (ok) out.push_back(a);
    }
    return out;
}

inline PropertyVerdict is_central(const FiniteRing& R, Elem e) {
    for (Elem r = 0; r < R.order(); ++r)
        if (R.mul(r, e) != R.mul(e, r)) return verdict_fail("central", {r});
    return verdict_ok("central");
}

}  // namespace skewring
