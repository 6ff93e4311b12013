#pragma once

#include <map>

#include "skewring/endomorphism.hpp"
#include "skewring/ring_ops.hpp"

namespace skewring {

namespace detail {

/// eRa scan: whether x*r*y = 0 for all r.
inline bool sandwich_all_zero(const FiniteRing& R, Elem x, Elem y) {
    for (Elem r = 0; r < R.order(); ++r)
        if (R.mul(R.mul(x, r), y) != R.zero()) return false;
    return true;
}

inline Elem sandwich_witness(const FiniteRing& R, Elem x, Elem y) {
    for (Elem r = 0; r < R.order(); ++r)
        if (R.mul(R.mul(x, r), y) != R.zero()) return r;
    return 0;
}

}  // namespace detail

/// Every idempotent is central. Witness: (e, r) with re != er.
inline PropertyVerdict is_abelian(const FiniteRing& R) {
    for (Elem e : idempotents(R))
        for (Elem r = 0; r < R.order(); ++r)
            if (R.mul(r, e) != R.mul(e, r)) return verdict_fail("abelian", {e, r});
    return verdict_ok("abelian");
}

/// aRb = 0 implies bRa = 0. Witness: (a, b, r) with aRb = 0, b*r*a != 0.
inline PropertyVerdict is_reflexive(const FiniteRing& R, const ScanPolicy& policy = {}) {
    auto check = [&](Elem a, Elem b) -> bool {
        return !(detail::sandwich_all_zero(R, a, b) && !detail::sandwich_all_zero(R, b, a));
    };
    if (R.order() <= policy.triple_cap) {
        for (Elem a = 0; a < R.order(); ++a)
            for (Elem b = 0; b < R.order(); ++b)
                if (!check(a, b))
                    return verdict_fail("reflexive", {a, b, detail::sandwich_witness(R, b, a)});
        return verdict_ok("reflexive");
    }
    if (!policy.allow_sampling)
        return verdict_fail("reflexive", {}, "order exceeds triple cap and sampling is disabled");
    std::mt19937_64 rng(policy.seed);
    std::uniform_int_distribution<Elem> dist(0, static_cast<Elem>(R.order() - 1));
    PropertyVerdict v = verdict_ok("reflexive");
    v.sampled = true;
    for (std::size_t i = 0; i < policy.samples; ++i) {
        Elem a = dist(rng), b = dist(rng);
        if (!check(a, b)) {
            v = verdict_fail("reflexive", {a, b, detail::sandwich_witness(R, b, a)});
            v.sampled = true;
            return v;
        }
    }
    return v;
}

/// Left: eRa = 0 implies aRe = 0 for idempotent e; right is the converse
/// direction; both = left-then-right, first failure wins.
inline PropertyVerdict is_idempotent_reflexive(const FiniteRing& R, Side side) {
    const char* name = side == Side::Left ? "idem-reflexive-left" : "idem-reflexive-right";
    for (Elem e : idempotents(R)) {
        for (Elem a = 0; a < R.order(); ++a) {
            bool eRa = detail::sandwich_all_zero(R, e, a);
            bool aRe = detail::sandwich_all_zero(R, a, e);
            if (side == Side::Left && eRa && !aRe)
                return verdict_fail(name, {e, a, detail::sandwich_witness(R, a, e)});
            if (side == Side::Right && aRe && !eRa)
                return verdict_fail(name, {e, a, detail::sandwich_witness(R, e, a)});
        }
    }
    return verdict_ok(name);
}

inline PropertyVerdict is_idempotent_reflexive_both(const FiniteRing& R) {
    auto left = is_idempotent_reflexive(R, Side::Left);
    if (!left.holds) {
        left.property = "idem-reflexive";
        left.detail = "left direction";
        return left;
    }
    auto right = is_idempotent_reflexive(R, Side::Right);
    if (!right.holds) {
        right.property = "idem-reflexive";
        right.detail = "right direction";
        return right;
    }
    return verdict_ok("idem-reflexive");
}

/// ab = 0 iff a*sigma(b) = 0, both directions for all pairs.
inline PropertyVerdict is_sigma_compatible(const FiniteRing& R, const Endomorphism& s) {
    for (Elem a = 0; a < R.order(); ++a)
        for (Elem b = 0; b < R.order(); ++b) {
            bool ab = R.mul(a, b) == R.zero();
            bool asb = R.mul(a, s.apply(b)) == R.zero();
            if (ab && !asb) return verdict_fail("sigma-compatible", {a, b}, "ab=0, a sigma(b)!=0");
            if (asb && !ab) return verdict_fail("sigma-compatible", {a, b}, "a sigma(b)=0, ab!=0");
        }
    return verdict_ok("sigma-compatible");
}

/// Condition (C_sigma): a*sigma(b) = 0 implies ab = 0.
inline PropertyVerdict satisfies_c_sigma(const FiniteRing& R, const Endomorphism& s) {
    for (Elem a = 0; a < R.order(); ++a)
        for (Elem b = 0; b < R.order(); ++b)
            if (R.mul(a, s.apply(b)) == R.zero() && R.mul(a, b) != R.zero())
                return verdict_fail("c-sigma", {a, b});
    return verdict_ok("c-sigma");
}

/// sigma(Re) contained in Re for every idempotent e. Witness: (e, r).
inline PropertyVerdict sigma_preserves_Re(const FiniteRing& R, const Endomorphism& s) {
    for (Elem e : idempotents(R)) {
        std::vector<bool> in_Re(R.order(), false);
        for (Elem r = 0; r < R.order(); ++r) in_Re[R.mul(r, e)] = true;
        for (Elem r = 0; r < R.order(); ++r)
            if (!in_Re[s.apply(R.mul(r, e))]) return verdict_fail("sigma-preserves-re", {e, r});
    }
    return verdict_ok("sigma-preserves-re");
}

/// ab = 0 implies aRb = 0. Witness: (a, b, r).
inline PropertyVerdict is_semicommutative(const FiniteRing& R, const ScanPolicy& policy = {}) {
    auto scan = [&](Elem a, Elem b) -> std::optional<Elem> {
        if (R.mul(a, b) != R.zero()) return std::nullopt;
        for (Elem r = 0; r < R.order(); ++r)
            if (R.mul(R.mul(a, r), b) != R.zero()) return r;
        return std::nullopt;
    };
    if (R.order() <= policy.triple_cap) {
        for (Elem a = 0; a < R.order(); ++a)
            for (Elem b = 0; b < R.order(); ++b)
                if (auto r = scan(a, b)) return verdict_fail("semicommutative", {a, b, *r});
        return verdict_ok("semicommutative");
    }
    if (!policy.allow_sampling)
        return verdict_fail("semicommutative", {},
                            "order exceeds triple cap and sampling is disabled");
    std::mt19937_64 rng(policy.seed);
    std::uniform_int_distribution<Elem> dist(0, static_cast<Elem>(R.order() - 1));
    for (std::size_t i = 0; i < policy.samples; ++i) {
        Elem a = dist(rng), b = dist(rng);
        if (auto r = scan(a, b)) {
            auto v = verdict_fail("semicommutative", {a, b, *r});
            v.sampled = true;
            return v;
        }
    }
    auto v = verdict_ok("semicommutative");
    v.sampled = true;
    return v;
}

/// Conjunctions with sigma-compatibility. The witness delegates to the
/// first failing conjunct; left-then-right for the two-sided variant.
inline PropertyVerdict composite_property(const FiniteRing& R, const Endomorphism& s,
                                          const std::string& name) {
    auto conj = [&](PropertyVerdict base) -> PropertyVerdict {
        if (!base.holds) {
            base.detail = base.detail.empty() ? "via " + base.property : base.detail;
            base.property = name;
            return base;
        }
        auto compat = is_sigma_compatible(R, s);
        if (!compat.holds) {
            compat.detail = "via sigma-compatible: " + compat.detail;
            compat.property = name;
            return compat;
        }
        return verdict_ok(name);
    };
    if (name == "sigma-abelian") return conj(is_abelian(R));
    if (name == "sigma-idem-reflexive-left") return conj(is_idempotent_reflexive(R, Side::Left));
    if (name == "sigma-idem-reflexive-right") return conj(is_idempotent_reflexive(R, Side::Right));
    if (name == "sigma-idem-reflexive") return conj(is_idempotent_reflexive_both(R));
    throw build_error("unknown composite property: " + name);
}

/// Every property decision procedure, keyed by its CLI name.
using PropertyFn = std::function<PropertyVerdict(const RingPtr&, const EndoPtr&)>;

inline const std::vector<std::pair<std::string, PropertyFn>>& property_table() {
    static const std::vector<std::pair<std::string, PropertyFn>> table = {
        {"abelian", [](const RingPtr& R, const EndoPtr&) { return is_abelian(*R); }},
        {"reflexive", [](const RingPtr& R, const EndoPtr&) { return is_reflexive(*R); }},
        {"idem-reflexive-left",
         [](const RingPtr& R, const EndoPtr&) {
             return is_idempotent_reflexive(*R, Side::Left);
         }},
        {"idem-reflexive-right",
         [](const RingPtr& R, const EndoPtr&) {
             return is_idempotent_reflexive(*R, Side::Right);
         }},
        {"idem-reflexive",
         [](const RingPtr& R, const EndoPtr&) { return is_idempotent_reflexive_both(*R); }},
        {"sigma-compatible",
         [](const RingPtr& R, const EndoPtr& s) { return is_sigma_compatible(*R, *s); }},
        {"c-sigma", [](const RingPtr& R, const EndoPtr& s) { return satisfies_c_sigma(*R, *s); }},
        {"semicommutative",
         [](const RingPtr& R, const EndoPtr&) { return is_semicommutative(*R); }},
        {"sigma-preserves-re",
         [](const RingPtr& R, const EndoPtr& s) { return sigma_preserves_Re(*R, *s); }},
        {"sigma-abelian",
         [](const RingPtr& R, const EndoPtr& s) {
             return composite_property(*R, *s, "sigma-abelian");
         }},
        {"sigma-idem-reflexive-left",
         [](const RingPtr& R, const EndoPtr& s) {
             return composite_property(*R, *s, "sigma-idem-reflexive-left");
         }},
        {"sigma-idem-reflexive-right",
         [](const RingPtr& R, const EndoPtr& s) {
             return composite_property(*R, *s, "sigma-idem-reflexive-right");
         }},
        {"sigma-idem-reflexive",
         [](const RingPtr& R, const EndoPtr& s) {
             return composite_property(*R, *s, "sigma-idem-reflexive");
         }},
    };
    return table;
}

inline const PropertyFn* find_property(std::string_view name) {
    for (const auto& [n, fn] : property_table())
        if (n == name) return &fn;
    return nullptr;
}

}  // namespace skewring
