#include <catch2/catch_amalgamated.hpp>

#include "skewring/skew_search.hpp"
#include "skewring/zoo.hpp"

using namespace skewring;

namespace {

/// Brute-force oracle for "e*g*f = 0 for all g": by distributivity it is
/// enough to range over monomials, but unlike the production procedure
/// this scans exponents far beyond the sigma power cycle.
bool sandwich_oracle(const SkewPoly& e, const SkewPoly& f, std::size_t extra = 6) {
    const auto& s = *e.sigma();
    const std::size_t kmax = s.preperiod() + s.period() + extra;
    for (std::size_t k = 0; k <= kmax; ++k)
        for (Elem b = 0; b < e.ring()->order(); ++b) {
            auto g = SkewPoly::monomial(e.ring(), e.sigma(), b, k);
            if (!skew_mul(skew_mul(e, g), f).is_zero()) return false;
        }
    return true;
}

std::vector<SkewPoly> polys_up_to_deg1(const RingPtr& R, const EndoPtr& s) {
    std::vector<SkewPoly> out;
    for (Elem a = 0; a < R->order(); ++a)
        for (Elem b = 0; b < R->order(); ++b) out.emplace_back(R, s, std::vector<Elem>{a, b});
    return out;
}

}  // namespace

TEST_CASE("sandwich_zero agrees with the all-monomial oracle, exhaustively") {
    for (const auto& entry : registry()) {
        INFO(entry.name);
        auto polys = polys_up_to_deg1(entry.ring, entry.sigma);
        for (const auto& e : polys)
            for (const auto& f : polys) {
                auto v = sandwich_zero(e, f);
                REQUIRE(v.holds == sandwich_oracle(e, f));
                if (!v.holds) {
                    // the witness (b, k) must replay to a nonzero product
                    auto g = SkewPoly::monomial(entry.ring, entry.sigma, v.witness[0],
                                                v.witness[1]);
                    REQUIRE_FALSE(skew_mul(skew_mul(e, g), f).is_zero());
                }
            }
    }
}

TEST_CASE("sandwich_zero trivia") {
    auto e = *find_registry_entry("ex3");
    auto zero = SkewPoly::zero(e.ring, e.sigma);
    auto one = SkewPoly::constant(e.ring, e.sigma, e.ring->one());
    CHECK(sandwich_zero(zero, one).holds);
    CHECK(sandwich_zero(one, zero).holds);
    CHECK_FALSE(sandwich_zero(one, one).holds);
}

TEST_CASE("cascade replay on a compatible entry") {
    // ex1 is abelian + sigma-compatible; every sandwich-zero pair with an
    // idempotent e must replay through the coefficient cascade
    auto entry = *find_registry_entry("ex1");
    auto idems = find_idempotents_bounded(entry.ring, entry.sigma, 1);
    auto polys = polys_up_to_deg1(entry.ring, entry.sigma);
    std::size_t replayed = 0;
    for (const auto& e : idems)
        for (const auto& f : polys) {
            if (e.is_zero()) continue;
            if (sandwich_zero(e, f).holds) {
                auto rep = replay_cascade(e, f, Side::Right);
                INFO("e=" << e.str() << " f=" << f.str());
                REQUIRE(rep.ok);
                ++replayed;
            }
            if (sandwich_zero(f, e).holds) {
                auto rep = replay_cascade(e, f, Side::Left);
                REQUIRE(rep.ok);
            }
        }
    REQUIRE(replayed > 0);
}

TEST_CASE("cascade surfaces the failing membership on the swap example") {
    // e = (1,0) + (0,1)x: e_1 = (0,1) lies outside R e_0 R = {(a,0)},
    // which is exactly the membership the derivation needs and the swap
    // breaks (f = 0 keeps the sandwich precondition trivially true)
    auto entry = *find_registry_entry("ex3");
    Elem e10 = *entry.ring->parse("(1,0)"), e01 = *entry.ring->parse("(0,1)");
    SkewPoly e(entry.ring, entry.sigma, {e10, e01});
    REQUIRE(skew_mul(e, e) == e);
    SkewPoly f = SkewPoly::zero(entry.ring, entry.sigma);
    REQUIRE(sandwich_zero(e, f).holds);
    auto rep = replay_cascade(e, f, Side::Right);
    REQUIRE_FALSE(rep.ok);
    const CascadeStep* bad = rep.first_failure();
    REQUIRE(bad != nullptr);
    REQUIRE(bad->name == "e_1 in R e_0 R");
}

TEST_CASE("cascade preconditions are enforced") {
    auto entry = *find_registry_entry("z4");
    auto one = SkewPoly::constant(entry.ring, entry.sigma, 1);
    auto two = SkewPoly::constant(entry.ring, entry.sigma, 2);
    // 2 is not idempotent in Z4
    CHECK_THROWS_AS(replay_cascade(two, one), build_error);
    // 1*R*1 is not zero
    CHECK_THROWS_AS(replay_cascade(one, one), build_error);
}
