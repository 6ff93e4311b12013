#include <catch2/catch_amalgamated.hpp>
#include <random>

#include "skewring/skew_search.hpp"
#include "skewring/truncated.hpp"
#include "skewring/zoo.hpp"

using namespace skewring;

namespace {

SkewPoly random_poly(const RingPtr& R, const EndoPtr& s, std::mt19937_64& rng, std::size_t dmax) {
    std::uniform_int_distribution<std::size_t> dlen(0, dmax + 1);  // 0 = zero poly
    std::uniform_int_distribution<Elem> delem(0, static_cast<Elem>(R->order() - 1));
    std::vector<Elem> c(dlen(rng));
    for (auto& x : c) x = delem(rng);
    return SkewPoly(R, s, std::move(c));
}

/// Plain untwisted convolution, written independently of skew_mul.
SkewPoly convolve(const SkewPoly& f, const SkewPoly& g) {
    const FiniteRing& R = *f.ring();
    if (f.is_zero() || g.is_zero()) return SkewPoly::zero(f.ring(), f.sigma());
    std::vector<Elem> out(f.coeffs().size() + g.coeffs().size() - 1, R.zero());
    for (std::size_t n = 0; n < out.size(); ++n)
        for (std::size_t i = 0; i <= n; ++i) out[n] = R.add(out[n], R.mul(f.coeff(i), g.coeff(n - i)));
    return SkewPoly(f.ring(), f.sigma(), std::move(out));
}

}  // namespace

TEST_CASE("normalization and accessors") {
    auto R = ring_Z(4);
    auto s = identity_endo(R);
    SkewPoly p(R, s, {1, 2, 0, 0});
    CHECK(p.degree() == 1);
    CHECK(p.coeff(0) == 1);
    CHECK(p.coeff(7) == 0);
    CHECK(SkewPoly::zero(R, s).degree() == -1);
    CHECK(SkewPoly::monomial(R, s, 3, 2).str() == "3*x^2");
    CHECK(SkewPoly(R, s, {0, 0}).is_zero());
}

TEST_CASE("Ore rule: x * r = sigma(r) * x") {
    for (const char* name : {"ex1", "ex3", "ex2t", "ex4"}) {
        auto e = *find_registry_entry(name);
        INFO(name);
        auto x = SkewPoly::monomial(e.ring, e.sigma, e.ring->one(), 1);
        for (Elem r = 0; r < e.ring->order(); ++r) {
            auto cr = SkewPoly::constant(e.ring, e.sigma, r);
            auto sr = SkewPoly::constant(e.ring, e.sigma, e.sigma->apply(r));
            REQUIRE(skew_mul(x, cr) == skew_mul(sr, x));
        }
    }
}

TEST_CASE("skew_mul with identity sigma equals plain convolution") {
    // 10^4+ random pairs across a commutative and a noncommutative ring
    std::mt19937_64 rng(12345);
    for (const auto& R : {ring_Z(6), ring_mat(2, ring_Z(2))}) {
        auto s = identity_endo(R);
        for (int i = 0; i < 6000; ++i) {
            auto f = random_poly(R, s, rng, 4), g = random_poly(R, s, rng, 4);
            REQUIRE(skew_mul(f, g) == convolve(f, g));
        }
    }
}

TEST_CASE("skew ring laws on random samples") {
    std::mt19937_64 rng(99);
    for (const char* name : {"ex1", "ex3", "ex2t"}) {
        auto e = *find_registry_entry(name);
        INFO(name);
        for (int i = 0; i < 400; ++i) {
            auto f = random_poly(e.ring, e.sigma, rng, 3);
            auto g = random_poly(e.ring, e.sigma, rng, 3);
            auto h = random_poly(e.ring, e.sigma, rng, 3);
            REQUIRE(skew_mul(skew_mul(f, g), h) == skew_mul(f, skew_mul(g, h)));
            REQUIRE(skew_mul(f, skew_add(g, h)) == skew_add(skew_mul(f, g), skew_mul(f, h)));
            REQUIRE(skew_mul(skew_add(f, g), h) == skew_add(skew_mul(f, h), skew_mul(g, h)));
            REQUIRE(skew_add(f, skew_neg(f)).is_zero());
        }
    }
}

TEST_CASE("bounded idempotent search equals the unpruned scan") {
    // oracle: enumerate every coefficient tuple and test e*e == e directly
    auto unpruned = [](const RingPtr& R, const EndoPtr& s, std::size_t d) {
        std::vector<SkewPoly> out;
        std::vector<Elem> tuple(d + 1, 0);
        for (;;) {
            SkewPoly e(R, s, tuple);
            if (skew_mul(e, e) == e) out.push_back(e);
            std::size_t i = 0;
            while (i <= d && ++tuple[i] == R->order()) tuple[i++] = 0;
            if (i > d) break;
        }
        std::sort(out.begin(), out.end(), [d](const SkewPoly& a, const SkewPoly& b) {
            for (std::size_t i = 0; i <= d; ++i)
                if (a.coeff(i) != b.coeff(i)) return a.coeff(i) < b.coeff(i);
            return false;
        });
        return out;
    };
    struct Case { RingPtr ring; EndoPtr sigma; };
    std::vector<Case> cases;
    cases.push_back({ring_Z(4), identity_endo(ring_Z(4))});
    cases.push_back({ring_Z(3), identity_endo(ring_Z(3))});
    auto ex3 = find_registry_entry("ex3");
    cases.push_back({ex3->ring, ex3->sigma});
    cases.push_back({ex3->ring, identity_endo(ex3->ring)});
    for (const auto& c : cases) {
        INFO(c.ring->label() << " sigma=" << c.sigma->label());
        for (std::size_t d = 0; d <= 2; ++d) {
            auto fast = find_idempotents_bounded(c.ring, c.sigma, d);
            auto slow = unpruned(c.ring, c.sigma, d);
            REQUIRE(fast.size() == slow.size());
            for (std::size_t i = 0; i < fast.size(); ++i) REQUIRE(fast[i] == slow[i]);
        }
    }
}

TEST_CASE("bounded idempotent counts on the registry") {
    auto count = [](const char* name, std::size_t d) {
        auto e = *find_registry_entry(name);
        return find_idempotents_bounded(e.ring, e.sigma, d).size();
    };
    CHECK(count("ex3", 1) == 8);
    CHECK(count("ex_ut2", 1) == 10);
    CHECK(count("mat2z2", 1) == 20);
    CHECK(count("ex4", 1) == 18);
    CHECK(count("z4", 1) == 2);
    CHECK(count("ex1", 1) == 2);
}

TEST_CASE("search cap") {
    auto R = ring_mat(2, ring_Z(5));  // order 625: 625^3 > 2^24 at d = 2
    auto s = identity_endo(R);
    REQUIRE_THROWS_AS(find_idempotents_bounded(R, s, 2), build_error);
    REQUIRE_NOTHROW(find_idempotents_bounded(R, s, 1));
}

TEST_CASE("truncated skew ring is the quotient by x^m") {
    auto e = *find_registry_entry("ex3");
    auto T = truncated_skew_ring(e.ring, e.sigma, 3);
    REQUIRE(T.ring->order() == 64);
    REQUIRE(validate_ring(*T.ring).holds);
    // multiplication agrees with skew_mul followed by truncation
    for (Elem a = 0; a < T.ring->order(); ++a)
        for (Elem b = 0; b < T.ring->order(); ++b) {
            auto full = skew_mul(T.to_poly(a), T.to_poly(b));
            std::vector<Elem> digits(3);
            for (std::size_t i = 0; i < 3; ++i) digits[i] = full.coeff(i);
            REQUIRE(T.ring->mul(a, b) == T.encode(digits));
        }
    // x^m = 0 in the quotient
    Elem x = T.x();
    REQUIRE(T.ring->mul(T.ring->mul(x, x), x) == T.ring->zero());
    // encode/decode round-trip
    for (Elem a = 0; a < T.ring->order(); ++a) REQUIRE(T.encode(T.decode(a)) == a);
}

TEST_CASE("idempotent of the first worked example: E11 + E12 x") {
    auto e = *find_registry_entry("ex_ut2");
    Elem e11 = *e.ring->parse("[[1,0],[0,0]]");
    Elem e12 = *e.ring->parse("[[0,1],[0,0]]");
    SkewPoly p(e.ring, e.sigma, {e11, e12});
    REQUIRE(skew_mul(p, p) == p);
    auto found = find_idempotents_bounded(e.ring, e.sigma, 1);
    REQUIRE(std::find(found.begin(), found.end(), p) != found.end());
}
