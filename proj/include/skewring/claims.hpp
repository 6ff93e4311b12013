#pragma once

#include <chrono>
#include <thread>

#include <json.hpp>

#include "skewring/generate.hpp"
#include "skewring/properties.hpp"
#include "skewring/skew_search.hpp"

namespace skewring {

using Json = nlohmann::ordered_json;

/// Bounded interpretation knobs: exact idempotent/polynomial degree cap
/// d and truncation order m for the power-series surrogate.
struct Bounds {
    std::size_t degree = 1;
    std::size_t trunc = 2;
};

enum class ClaimStatus { Pass, Fail, NotApplicable, SurrogatePass };

inline std::string to_string(ClaimStatus s) {
    switch (s) {
        case ClaimStatus::Pass: return "pass";
        case ClaimStatus::Fail: return "fail";
        case ClaimStatus::NotApplicable: return "not-applicable";
        case ClaimStatus::SurrogatePass: return "surrogate-pass";
    }
    return "?";
}

/// Result of checking one claim against one registry entry at bounds.
/// status surrogate-pass means the pass relied (at least partly) on the
/// truncated ring standing in for the skew power series ring; a fail
/// witness always replays to a genuine violation of the bounded
/// conclusion.
struct ClaimReport {
    std::string claim;
    std::string entry;
    Bounds bounds;
    ClaimStatus status = ClaimStatus::Pass;
    Json witness;  // null when passing
    std::string detail;
    double elapsed_ms = 0.0;
};

inline Json report_to_json(const ClaimReport& r, bool include_timing = false) {
    Json j;
    j["claim"] = r.claim;
    j["entry"] = r.entry;
    j["bounds"] = {{"d", r.bounds.degree}, {"m", r.bounds.trunc}};
    j["status"] = to_string(r.status);
    j["witness"] = r.witness.is_null() ? Json() : r.witness;
    j["elapsed_ms"] = include_timing ? Json(r.elapsed_ms) : Json();
    if (!r.detail.empty()) j["detail"] = r.detail;
    return j;
}

namespace detail {

inline Json poly_json(const SkewPoly& p) {
    Json j;
    j["poly"] = p.str();
    j["coeffs"] = p.coeffs();
    return j;
}

inline Json elem_json(const FiniteRing& R, Elem a) {
    Json j;
    j["elem"] = R.format(a);
    j["index"] = a;
    return j;
}

/// All polynomials of degree <= d, in lexicographic coefficient order.
inline std::vector<SkewPoly> all_polys(const RingPtr& ring, const EndoPtr& sigma, std::size_t d) {
    std::vector<SkewPoly> out;
    std::vector<Elem> tuple(d + 1, 0);
    const std::size_t n = ring->order();
    for (;;) {
        SkewPoly p(ring, sigma, tuple);
        // each normalized poly arises from exactly one padded tuple
        if (p.coeffs().size() == tuple.size() ||
            std::all_of(tuple.begin() + p.coeffs().size(), tuple.end(),
                        [&](Elem c) { return c == ring->zero(); }))
            out.push_back(std::move(p));
        std::size_t i = 0;
        while (i <= d && ++tuple[i] == n) tuple[i++] = 0;
        if (i > d) break;
    }
    return out;
}

/// Collects sub-check outcomes for one claim run.
struct ClaimRun {
    ClaimReport report;
    bool used_surrogate = false;

    explicit ClaimRun(std::string claim, const RegistryEntry& entry, const Bounds& b) {
        report.claim = std::move(claim);
        report.entry = entry.name;
        report.bounds = b;
    }
    bool failed() const { return report.status == ClaimStatus::Fail; }
    void fail(Json witness, std::string detail) {
        if (failed()) return;
        report.status = ClaimStatus::Fail;
        report.witness = std::move(witness);
        report.detail = std::move(detail);
    }
    void not_applicable(std::string detail) {
        report.status = ClaimStatus::NotApplicable;
        report.detail = std::move(detail);
    }
    ClaimReport finish() {
        if (report.status == ClaimStatus::Pass && used_surrogate)
            report.status = ClaimStatus::SurrogatePass;
        return std::move(report);
    }
};

/// Bounded claim "the skew polynomial ring is left/right idempotent
/// reflexive": over all exact bounded idempotents e and all bounded f,
/// sandwich-zero in one order must imply it in the other.
inline void check_exact_side(ClaimRun& run, const RegistryEntry& entry, const Bounds& b,
                             Side side) {
    auto idems = find_idempotents_bounded(entry.ring, entry.sigma, b.degree);
    auto polys = all_polys(entry.ring, entry.sigma, b.degree);
    for (const auto& e : idems) {
        for (const auto& f : polys) {
            bool ef = sandwich_zero(e, f).holds;
            bool fe = sandwich_zero(f, e).holds;
            bool ok = side == Side::Left ? (!ef || fe) : (!fe || ef);
            if (!ok) {
                Json w;
                w["e"] = poly_json(e);
                w["f"] = poly_json(f);
                run.fail(std::move(w), side == Side::Left
                                           ? "e R[x;s] f = 0 but f R[x;s] e != 0"
                                           : "f R[x;s] e = 0 but e R[x;s] f != 0");
                return;
            }
        }
    }
}

/// Surrogate claim: the truncated skew ring has the side property.
inline void check_trunc_side(ClaimRun& run, const RegistryEntry& entry, const Bounds& b,
                             Side side) {
    run.used_surrogate = true;
    auto T = truncated_skew_ring(entry.ring, entry.sigma, b.trunc);
    auto v = is_idempotent_reflexive(*T.ring, side);
    if (!v.holds) {
        Json w;
        w["truncated_ring"] = T.ring->label();
        w["e"] = elem_json(*T.ring, v.witness[0]);
        w["a"] = elem_json(*T.ring, v.witness[1]);
        run.fail(std::move(w), "truncated surrogate is not " + v.property);
    }
}

/// Witness lifting for the converse claims: an idempotent
/// reflexivity failure (e, a) of R, as constants, must violate both the
/// sandwich conditions in R[x;sigma] and the property in the truncated
/// ring. Vacuous when R has the property.
inline void check_lift_side(ClaimRun& run, const RegistryEntry& entry, const Bounds& b,
                            Side side) {
    auto v = is_idempotent_reflexive(*entry.ring, side);
    if (v.holds) {
        if (run.report.detail.empty())
            run.report.detail = "base ring has the property; converse holds vacuously";
        return;
    }
    Elem e = v.witness[0], a = v.witness[1];
    auto ce = SkewPoly::constant(entry.ring, entry.sigma, e);
    auto ca = SkewPoly::constant(entry.ring, entry.sigma, a);
    // left failure: eRa = 0, aRe != 0; right failure: aRe = 0, eRa != 0
    const SkewPoly& first = side == Side::Left ? ce : ca;
    const SkewPoly& second = side == Side::Left ? ca : ce;
    bool lifted_zero = sandwich_zero(first, second).holds;
    bool lifted_nonzero = !sandwich_zero(second, first).holds;
    run.used_surrogate = true;
    auto T = truncated_skew_ring(entry.ring, entry.sigma, b.trunc);
    Elem te = T.constant(e), ta = T.constant(a);
    bool t_zero = side == Side::Left ? sandwich_all_zero(*T.ring, te, ta)
                                     : sandwich_all_zero(*T.ring, ta, te);
    bool t_nonzero = side == Side::Left ? !sandwich_all_zero(*T.ring, ta, te)
                                        : !sandwich_all_zero(*T.ring, te, ta);
    if (!(lifted_zero && lifted_nonzero && t_zero && t_nonzero)) {
        Json w;
        w["e"] = elem_json(*entry.ring, e);
        w["a"] = elem_json(*entry.ring, a);
        run.fail(std::move(w), "base-ring witness did not lift to the extensions");
        return;
    }
    Json w;
    w["e"] = elem_json(*entry.ring, e);
    w["a"] = elem_json(*entry.ring, a);
    run.report.witness = std::move(w);
    run.report.detail = "base-ring failure witnessed and lifted to both extensions";
}

}  // namespace detail

/// One executable claim: a bounded check over (registry entry, bounds)
/// gated by hypotheses (property names from the property table; entries
/// failing a hypothesis report not-applicable, never pass).
struct Claim {
    std::string id;
    std::string statement;
    std::vector<std::string> hypotheses;
    std::function<void(detail::ClaimRun&, const RegistryEntry&, const Bounds&)> check;
};

inline const std::vector<Claim>& claim_catalog() {
    using detail::ClaimRun;
    static const std::vector<Claim> catalog = [] {
        std::vector<Claim> c;
        c.push_back({"C1",
                     "If sigma(Re) is contained in Re for every idempotent e and R is left "
                     "idempotent reflexive, the skew polynomial ring and the truncated skew "
                     "power series ring are left idempotent reflexive.",
                     {"idem-reflexive-left", "sigma-preserves-re"},
                     [](ClaimRun& run, const RegistryEntry& en, const Bounds& b) {
                         detail::check_exact_side(run, en, b, Side::Left);
                         if (!run.failed()) detail::check_trunc_side(run, en, b, Side::Left);
                     }});
        c.push_back({"C2",
                     "If sigma(Re) is contained in Re for every idempotent e and R is not "
                     "right idempotent reflexive, neither extension is: the base failure "
                     "witness lifts.",
                     {"sigma-preserves-re"},
                     [](ClaimRun& run, const RegistryEntry& en, const Bounds& b) {
                         detail::check_lift_side(run, en, b, Side::Right);
                     }});
        c.push_back({"C3",
                     "If R is sigma-compatible and right idempotent reflexive, the skew "
                     "polynomial ring and the truncated skew power series ring are right "
                     "idempotent reflexive.",
                     {"sigma-compatible", "idem-reflexive-right"},
                     [](ClaimRun& run, const RegistryEntry& en, const Bounds& b) {
                         detail::check_exact_side(run, en, b, Side::Right);
                         if (!run.failed()) detail::check_trunc_side(run, en, b, Side::Right);
                     }});
        c.push_back({"C4",
                     "If R is sigma-compatible and not left idempotent reflexive, neither "
                     "extension is: the base failure witness lifts.",
                     {"sigma-compatible"},
                     [](ClaimRun& run, const RegistryEntry& en, const Bounds& b) {
                         detail::check_lift_side(run, en, b, Side::Left);
                     }});
        c.push_back({"C5",
                     "For sigma-compatible R, each one-sided idempotent reflexivity holds in "
                     "R exactly when it holds in the skew polynomial ring and in the "
                     "truncated skew power series ring.",
                     {"sigma-compatible"},
                     [](ClaimRun& run, const RegistryEntry& en, const Bounds& b) {
                         for (Side side : {Side::Left, Side::Right}) {
                             if (run.failed()) return;
                             if (is_idempotent_reflexive(*en.ring, side).holds) {
                                 detail::check_exact_side(run, en, b, side);
                                 if (!run.failed()) detail::check_trunc_side(run, en, b, side);
                             } else {
                                 detail::check_lift_side(run, en, b, side);
                             }
                         }
                     }});
        c.push_back({"C6",
                     "If R is sigma-idempotent reflexive, the skew polynomial ring and the "
                     "truncated skew power series ring are idempotent reflexive on both "
                     "sides.",
                     {"sigma-idem-reflexive"},
                     [](ClaimRun& run, const RegistryEntry& en, const Bounds& b) {
                         for (Side side : {Side::Left, Side::Right}) {
                             if (run.failed()) return;
                             detail::check_exact_side(run, en, b, side);
                             if (!run.failed()) detail::check_trunc_side(run, en, b, side);
                         }
                     }});
        c.push_back({"C7",
                     "Over an abelian R with sigma(Re) contained in Re, every bounded "
                     "idempotent e of the skew extensions satisfies e*e_0 = e_0 and "
                     "e_0*e = e, with e_i = e_0 e_i = e_i e_0 and e_i sigma^i(e_0) = 0 for "
                     "i >= 1.",
                     {"abelian", "sigma-preserves-re"},
                     [](ClaimRun& run, const RegistryEntry& en, const Bounds& b) {
                         const FiniteRing& R = *en.ring;
                         auto check_poly = [&](const SkewPoly& e) -> std::string {
                             if (e.is_zero()) return "";
                             Elem e0 = e.coeff(0);
                             auto c0 = SkewPoly::constant(en.ring, en.sigma, e0);
                             if (!(skew_mul(e, c0) == c0)) return "e*e_0 != e_0";
                             if (!(skew_mul(c0, e) == e)) return "e_0*e != e";
                             for (std::size_t i = 1; i <= static_cast<std::size_t>(
                                                              std::max(e.degree(), 0));
                                  ++i) {
                                 Elem ei = e.coeff(i);
                                 if (R.mul(ei, en.sigma->apply_power(e0, i)) != R.zero())
                                     return "e_i sigma^i(e_0) != 0";
                                 if (R.mul(e0, ei) != ei || R.mul(ei, e0) != ei)
                                     return "e_i != e_0 e_i = e_i e_0";
                             }
                             return "";
                         };
                         for (const auto& e :
                              find_idempotents_bounded(en.ring, en.sigma, b.degree)) {
                             if (auto msg = check_poly(e); !msg.empty()) {
                                 Json w;
                                 w["e"] = detail::poly_json(e);
                                 run.fail(std::move(w), msg);
                                 return;
                             }
                         }
                         // same identities for idempotents of the truncated surrogate
                         run.used_surrogate = true;
                         auto T = truncated_skew_ring(en.ring, en.sigma, b.trunc);
                         for (Elem v : idempotents(*T.ring)) {
                             Elem v0 = T.constant(T.decode(v)[0]);
                             if (T.ring->mul(v, v0) != v0 || T.ring->mul(v0, v) != v) {
                                 Json w;
                                 w["e"] = detail::elem_json(*T.ring, v);
                                 run.fail(std::move(w), "truncated idempotent fails "
                                                        "e*e_0 = e_0 or e_0*e = e");
                                 return;
                             }
                         }
                     }});
        c.push_back({"C8",
                     "If R satisfies the condition (C_sigma), sigma fixes every idempotent "
                     "of R.",
                     {"c-sigma"},
                     [](ClaimRun& run, const RegistryEntry& en, const Bounds&) {
                         for (Elem e : idempotents(*en.ring)) {
                             if (en.sigma->apply(e) != e) {
                                 Json w;
                                 w["e"] = detail::elem_json(*en.ring, e);
                                 w["sigma(e)"] =
                                     detail::elem_json(*en.ring, en.sigma->apply(e));
                                 run.fail(std::move(w), "sigma(e) != e");
                                 return;
                             }
                         }
                     }});
        c.push_back({"C9",
                     "Under (C_sigma), R is abelian exactly when every bounded idempotent "
                     "of the skew polynomial ring is a constant commuting with all "
                     "constants and with x, and exactly when the truncated skew power "
                     "series ring is abelian.",
                     {"c-sigma"},
                     [](ClaimRun& run, const RegistryEntry& en, const Bounds& b) {
                         bool lhs = is_abelian(*en.ring).holds;
                         bool rhs = true;
                         Json rhs_witness;
                         auto x1 = SkewPoly::monomial(en.ring, en.sigma, en.ring->one(), 1);
                         for (const auto& e :
                              find_idempotents_bounded(en.ring, en.sigma, b.degree)) {
                             bool central = e.is_constant();
                             if (central && !(skew_mul(e, x1) == skew_mul(x1, e)))
                                 central = false;
                             for (Elem cc = 0; central && cc < en.ring->order(); ++cc) {
                                 auto c = SkewPoly::constant(en.ring, en.sigma, cc);
                                 if (!(skew_mul(e, c) == skew_mul(c, e))) central = false;
                             }
                             if (!central) {
                                 rhs = false;
                                 rhs_witness = detail::poly_json(e);
                                 break;
                             }
                         }
                         run.used_surrogate = true;
                         auto T = truncated_skew_ring(en.ring, en.sigma, b.trunc);
                         bool surrogate = is_abelian(*T.ring).holds;
                         if (lhs != rhs || lhs != surrogate) {
                             Json w;
                             w["abelian_base"] = lhs;
                             w["abelian_bounded_skew"] = rhs;
                             w["abelian_truncated"] = surrogate;
                             if (!rhs_witness.is_null()) w["noncentral_idempotent"] = rhs_witness;
                             run.fail(std::move(w), "abelian property did not transfer both ways");
                         }
                     }});
        c.push_back({"C10",
                     "If R has exactly the idempotents 0 and 1, so does the skew polynomial "
                     "ring (up to the degree bound).",
                     {},
                     [](ClaimRun& run, const RegistryEntry& en, const Bounds& b) {
                         auto ids = idempotents(*en.ring);
                         if (ids.size() != 2) {
                             run.not_applicable("ring has " + std::to_string(ids.size()) +
                                                " idempotents, not 2");
                             return;
                         }
                         auto found = find_idempotents_bounded(en.ring, en.sigma, b.degree);
                         for (const auto& e : found) {
                             bool is_zero = e.is_zero();
                             bool is_one = e.is_constant() && e.coeff(0) == en.ring->one();
                             if (!is_zero && !is_one) {
                                 Json w;
                                 w["e"] = detail::poly_json(e);
                                 run.fail(std::move(w),
                                          "unexpected idempotent beyond {0, 1}");
                                 return;
                             }
                         }
                         if (found.size() != 2)
                             run.fail(Json(), "expected exactly the idempotents {0, 1}");
                     }});
        c.push_back({"C11",
                     "Over Z_2 x Z_2 with the swap, e = (1,0)+(0,1)x and f = (0,1)+(0,1)x "
                     "are idempotent and (0,1)*e = (0,1)x differs from e*(0,1) = 0, so the "
                     "skew polynomial ring is not abelian.",
                     {},
                     [](ClaimRun& run, const RegistryEntry& en, const Bounds& b) {
                         if (en.name != "ex3") {
                             run.not_applicable("claim is specific to entry ex3");
                             return;
                         }
                         Elem ten = *en.ring->parse("(1,0)"), oen = *en.ring->parse("(0,1)");
                         SkewPoly e(en.ring, en.sigma, {ten, oen});
                         SkewPoly f(en.ring, en.sigma, {oen, oen});
                         auto found = find_idempotents_bounded(en.ring, en.sigma,
                                                               std::max<std::size_t>(b.degree, 1));
                         auto contains = [&](const SkewPoly& p) {
                             return std::find(found.begin(), found.end(), p) != found.end();
                         };
                         auto c01 = SkewPoly::constant(en.ring, en.sigma, oen);
                         auto left = skew_mul(c01, e);   // expect (0,1)x
                         auto right = skew_mul(e, c01);  // expect 0
                         auto expect_left = SkewPoly::monomial(en.ring, en.sigma, oen, 1);
                         if (!contains(e) || !contains(f) || !(left == expect_left) ||
                             !right.is_zero() || left == right) {
                             Json w;
                             w["e"] = detail::poly_json(e);
                             w["f"] = detail::poly_json(f);
                             run.fail(std::move(w), "expected counterexample not reproduced");
                             return;
                         }
                         Json w;
                         w["e"] = detail::poly_json(e);
                         w["f"] = detail::poly_json(f);
                         w["(0,1)*e"] = detail::poly_json(left);
                         w["e*(0,1)"] = detail::poly_json(right);
                         run.report.witness = std::move(w);
                         run.report.detail = "noncentral idempotent reproduced";
                     }});
        c.push_back({"C12",
                     "Over the two-block 4x4 ring with the block swap, the skew extensions "
                     "are not abelian: a constant idempotent fails to commute with x.",
                     {},
                     [](ClaimRun& run, const RegistryEntry& en, const Bounds& b) {
                         if (en.name != "ex4") {
                             run.not_applicable("claim is specific to entry ex4");
                             return;
                         }
                         auto x1 = SkewPoly::monomial(en.ring, en.sigma, en.ring->one(), 1);
                         for (Elem e : idempotents(*en.ring)) {
                             auto ce = SkewPoly::constant(en.ring, en.sigma, e);
                             auto xe = skew_mul(x1, ce), ex = skew_mul(ce, x1);
                             if (!(xe == ex)) {
                                 Json w;
                                 w["e"] = detail::elem_json(*en.ring, e);
                                 w["x*e"] = detail::poly_json(xe);
                                 w["e*x"] = detail::poly_json(ex);
                                 run.report.witness = std::move(w);
                                 run.report.detail = "constant idempotent is not central in "
                                                     "the skew extension";
                                 return;
                             }
                         }
                         for (const auto& e :
                              find_idempotents_bounded(en.ring, en.sigma, b.degree)) {
                             if (!e.is_constant()) {
                                 Json w;
                                 w["e"] = detail::poly_json(e);
                                 run.report.witness = std::move(w);
                                 run.report.detail = "nonconstant bounded idempotent found";
                                 return;
                             }
                         }
                         run.fail(Json(), "no witness found: skew extension looks abelian "
                                          "at these bounds");
                     }});
        return c;
    }();
    return catalog;
}

inline const Claim* find_claim(std::string_view id) {
    for (const auto& c : claim_catalog())
        if (c.id == id) return &c;
    return nullptr;
}

inline ClaimReport run_claim(const std::string& claim_id, const RegistryEntry& entry,
                             const Bounds& bounds) {
    const Claim* claim = find_claim(claim_id);
    if (!claim) throw build_error("unknown claim id: " + claim_id);
    auto t0 = std::chrono::steady_clock::now();
    detail::ClaimRun run(claim->id, entry, bounds);
    bool applicable = true;
    for (const auto& hyp : claim->hypotheses) {
        const PropertyFn* fn = find_property(hyp);
        if (!fn) throw build_error("claim hypothesis references unknown property: " + hyp);
        auto v = (*fn)(entry.ring, entry.sigma);
        if (!v.holds) {
            run.not_applicable("hypothesis '" + hyp + "' fails");
            applicable = false;
            break;
        }
    }
    if (applicable) claim->check(run, entry, bounds);
    auto report = run.finish();
    report.elapsed_ms =
        std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - t0).count();
    return report;
}

/// Runs every claim against every registry entry. Reports are ordered by
/// claim catalog position, then entry name; each grid cell is pure, so
/// the worker count never changes the output.
inline std::vector<ClaimReport> verify_paper(const Bounds& bounds, unsigned workers = 1) {
    const auto& claims = claim_catalog();
    std::vector<const RegistryEntry*> entries;
    for (const auto& e : registry()) entries.push_back(&e);
    std::sort(entries.begin(), entries.end(),
              [](const RegistryEntry* a, const RegistryEntry* b) { return a->name < b->name; });

    std::vector<ClaimReport> reports(claims.size() * entries.size());
    auto work = [&](unsigned worker) {
        for (std::size_t cell = worker; cell < reports.size(); cell += workers) {
            const Claim& c = claims[cell / entries.size()];
            const RegistryEntry& e = *entries[cell % entries.size()];
            reports[cell] = run_claim(c.id, e, bounds);
        }
    };
    if (workers <= 1) {
        work(0);
    } else {
        std::vector<std::thread> pool;
        for (unsigned w = 0; w < workers; ++w) pool.emplace_back(work, w);
        for (auto& t : pool) t.join();
    }
    return reports;
}

inline bool any_failed(const std::vector<ClaimReport>& reports) {
    return std::any_of(reports.begin(), reports.end(),
                       [](const ClaimReport& r) { return r.status == ClaimStatus::Fail; });
}

}  // namespace skewring
