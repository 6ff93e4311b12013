// Acceptance gate: one line per criterion, PASS/FAIL, nonzero exit on
// any failure. Criterion 5 shells out to the CLI binary (path injected
// at build time) to compare whole-process output bytes.

#include <chrono>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <random>
#include <sstream>

#include "skewring/claims.hpp"
#include "skewring/spec_parser.hpp"

using namespace skewring;
using Clock = std::chrono::steady_clock;

namespace {

int g_failures = 0;

void report(int n, bool ok, const std::string& what) {
    std::cout << "criterion " << n << ": " << (ok ? "PASS" : "FAIL") << " - " << what << "\n";
    if (!ok) ++g_failures;
}

double seconds_since(Clock::time_point t0) {
    return std::chrono::duration<double>(Clock::now() - t0).count();
}

unsigned workers() {
    // at least 2 so the multi-worker code path is exercised even on one core
    return std::max(2u, std::thread::hardware_concurrency());
}

// --- criterion 1: reproduction of the worked examples ----------------------

bool criterion1(std::string& what) {
    auto t0 = Clock::now();
    bool ok = true;
    {
        auto e = *find_registry_entry("ex1");
        ok = ok && is_abelian(*e.ring).holds;
        ok = ok && is_sigma_compatible(*e.ring, *e.sigma).holds;
        ok = ok && composite_property(*e.ring, *e.sigma, "sigma-idem-reflexive").holds;
    }
    {
        auto e = *find_registry_entry("ex_ut2");
        SkewPoly p(e.ring, e.sigma,
                   {*e.ring->parse("[[1,0],[0,0]]"), *e.ring->parse("[[0,1],[0,0]]")});
        ok = ok && skew_mul(p, p) == p;
    }
    {
        auto e = *find_registry_entry("ex3");
        auto idem = *parse_poly_literal(e.ring, e.sigma, "(1,0) + (0,1)*x");
        auto f = *parse_poly_literal(e.ring, e.sigma, "(0,1) + (0,1)*x");
        ok = ok && skew_mul(idem, idem) == idem && skew_mul(f, f) == f;
        auto c = SkewPoly::constant(e.ring, e.sigma, *e.ring->parse("(0,1)"));
        auto left = skew_mul(c, idem), right = skew_mul(idem, c);
        ok = ok && left == *parse_poly_literal(e.ring, e.sigma, "(0,1)*x");
        ok = ok && right.is_zero() && !(left == right);
    }
    {
        auto e = *find_registry_entry("ex4");
        ok = ok && !satisfies_c_sigma(*e.ring, *e.sigma).holds;
        Elem d = *e.ring->parse("[[1,0,0,0],[0,1,0,0],[0,0,0,0],[0,0,0,0]]");
        ok = ok && e.ring->mul(d, d) == d && e.sigma->apply(d) != d;
    }
    {
        auto e = *find_registry_entry("ex2t");
        ok = ok && !is_sigma_compatible(*e.ring, *e.sigma).holds;
        Elem t = *e.ring->parse("t");
        ok = ok && e.ring->mul(t, t) != e.ring->zero();
        ok = ok && e.ring->mul(t, e.sigma->apply(t)) == e.ring->zero();
    }
    double secs = seconds_since(t0);
    ok = ok && secs < 10.0;
    std::ostringstream os;
    os << "worked examples reproduced exactly (" << secs << "s)";
    what = os.str();
    return ok;
}

// --- criterion 2: claim suite ----------------------------------------------

bool criterion2(std::string& what) {
    auto t0 = Clock::now();
    auto low = verify_paper(Bounds{1, 2}, workers());
    double low_secs = seconds_since(t0);
    bool ok = low.size() == 12 * registry().size() && !any_failed(low);
    auto witness_pass = [&](const char* claim, const char* entry) {
        for (const auto& r : low)
            if (r.claim == claim && r.entry == entry)
                return r.status == ClaimStatus::Pass && !r.witness.is_null();
        return false;
    };
    ok = ok && witness_pass("C11", "ex3") && witness_pass("C12", "ex4");
    ok = ok && low_secs < 60.0;

    auto t1 = Clock::now();
    auto high = verify_paper(Bounds{2, 3}, workers());
    double high_secs = seconds_since(t1);
    ok = ok && !any_failed(high) && high_secs < 600.0;

    std::ostringstream os;
    os << low.size() << " reports at d=1,m=2 with zero failures (" << low_secs
       << "s); zero failures at d=2,m=3 (" << high_secs << "s)";
    what = os.str();
    return ok;
}

// --- criterion 3: oracle equivalences ---------------------------------------

bool criterion3(std::string& what) {
    bool ok = true;
    std::size_t sandwich_pairs = 0;
    // (i) sandwich_zero vs monomial scan far beyond the sigma cycle
    for (const auto& entry : registry()) {
        auto oracle = [&](const SkewPoly& e, const SkewPoly& f) {
            std::size_t kmax = entry.sigma->preperiod() + entry.sigma->period() + 6;
            for (std::size_t k = 0; k <= kmax; ++k)
                for (Elem b = 0; b < entry.ring->order(); ++b) {
                    auto g = SkewPoly::monomial(entry.ring, entry.sigma, b, k);
                    if (!skew_mul(skew_mul(e, g), f).is_zero()) return false;
                }
            return true;
        };
        const std::size_t n = entry.ring->order();
        for (Elem a0 = 0; a0 < n && ok; ++a0)
            for (Elem a1 = 0; a1 < n && ok; ++a1)
                for (Elem b0 = 0; b0 < n && ok; ++b0)
                    for (Elem b1 = 0; b1 < n && ok; ++b1) {
                        SkewPoly e(entry.ring, entry.sigma, {a0, a1});
                        SkewPoly f(entry.ring, entry.sigma, {b0, b1});
                        ok = sandwich_zero(e, f).holds == oracle(e, f);
                        ++sandwich_pairs;
                    }
    }
    // (ii) pruned idempotent search vs unpruned scan
    std::vector<std::pair<RingPtr, EndoPtr>> cases;
    for (std::size_t k = 2; k <= 4; ++k)
        cases.emplace_back(ring_Z(k), identity_endo(ring_Z(k)));
    auto ex3 = find_registry_entry("ex3");
    cases.emplace_back(ex3->ring, ex3->sigma);
    for (const auto& [R, s] : cases)
        for (std::size_t d = 0; d <= 2 && ok; ++d) {
            auto fast = find_idempotents_bounded(R, s, d);
            std::vector<SkewPoly> slow;
            std::vector<Elem> tuple(d + 1, 0);
            for (;;) {
                SkewPoly e(R, s, tuple);
                if (skew_mul(e, e) == e) slow.push_back(e);
                std::size_t i = 0;
                while (i <= d && ++tuple[i] == R->order()) tuple[i++] = 0;
                if (i > d) break;
            }
            ok = ok && fast.size() == slow.size();
            for (const auto& e : slow)
                ok = ok && std::find(fast.begin(), fast.end(), e) != fast.end();
        }
    // (iii) skew_mul with identity sigma vs independent convolution
    std::mt19937_64 rng(777);
    std::size_t conv_pairs = 0;
    for (const auto& R : {ring_Z(6), ring_mat(2, ring_Z(2))}) {
        auto s = identity_endo(R);
        std::uniform_int_distribution<Elem> de(0, static_cast<Elem>(R->order() - 1));
        std::uniform_int_distribution<std::size_t> dl(0, 5);
        for (int i = 0; i < 5500 && ok; ++i, ++conv_pairs) {
            std::vector<Elem> fc(dl(rng)), gc(dl(rng));
            for (auto& x : fc) x = de(rng);
            for (auto& x : gc) x = de(rng);
            SkewPoly f(R, s, fc), g(R, s, gc);
            std::vector<Elem> out(fc.size() + gc.size(), R->zero());
            for (std::size_t a = 0; a < fc.size(); ++a)
                for (std::size_t b = 0; b < gc.size(); ++b)
                    out[a + b] = R->add(out[a + b], R->mul(fc[a], gc[b]));
            ok = ok && skew_mul(f, g) == SkewPoly(R, s, out);
        }
    }
    std::ostringstream os;
    os << "oracle agreement: sandwich (" << sandwich_pairs << " pairs), idempotent scans, "
       << conv_pairs << " convolution pairs, zero disagreements";
    what = os.str();
    return ok && conv_pairs >= 10000;
}

// --- criterion 4: invariant suites ------------------------------------------

bool criterion4(std::string& what) {
    bool ok = true;
    for (const auto& e : registry()) {
        auto v = validate_ring(*e.ring);
        ok = ok && v.holds && !v.sampled;
    }
    // skew law samples
    std::mt19937_64 rng(5);
    for (const auto& e : registry()) {
        std::uniform_int_distribution<Elem> de(0, static_cast<Elem>(e.ring->order() - 1));
        for (int i = 0; i < 200 && ok; ++i) {
            auto rnd = [&] {
                std::vector<Elem> c(3);
                for (auto& x : c) x = de(rng);
                return SkewPoly(e.ring, e.sigma, c);
            };
            auto f = rnd(), g = rnd(), h = rnd();
            ok = ok && skew_mul(skew_mul(f, g), h) == skew_mul(f, skew_mul(g, h));
            ok = ok && skew_mul(f, skew_add(g, h)) == skew_add(skew_mul(f, g), skew_mul(f, h));
            ok = ok && skew_mul(skew_add(f, g), h) == skew_add(skew_mul(f, h), skew_mul(g, h));
        }
    }
    // implication chains over registry + generated pairs
    auto pairs = generate_pairs(16);
    std::vector<RegistryEntry> all(registry().begin(), registry().end());
    all.insert(all.end(), pairs.begin(), pairs.end());
    ok = ok && all.size() >= 57;
    std::size_t violations = 0;
    for (const auto& e : all) {
        const FiniteRing& R = *e.ring;
        bool semicomm = is_semicommutative(R).holds;
        bool abelian = is_abelian(R).holds;
        bool reflexive = is_reflexive(R).holds;
        bool idem_refl = is_idempotent_reflexive_both(R).holds;
        bool compat = is_sigma_compatible(R, *e.sigma).holds;
        bool csigma = satisfies_c_sigma(R, *e.sigma).holds;
        bool pres = sigma_preserves_Re(R, *e.sigma).holds;
        bool fixes = true;
        for (Elem id : idempotents(R)) fixes = fixes && e.sigma->apply(id) == id;
        if (semicomm && !abelian) ++violations;
        if (abelian && !idem_refl) ++violations;
        if (reflexive && !idem_refl) ++violations;
        if (compat && !csigma) ++violations;
        if (csigma && !fixes) ++violations;
        if (fixes && !pres) ++violations;
    }
    ok = ok && violations == 0;
    std::ostringstream os;
    os << "ring axioms exhaustive, skew laws sampled, implication chains over " << all.size()
       << " (ring, sigma) pairs with " << violations << " violations";
    what = os.str();
    return ok;
}

// --- criterion 5: determinism of the CLI ------------------------------------

std::string run_cli(const std::string& args, const std::filesystem::path& out) {
    std::string cmd = std::string("\"") + SKEWRING_CLI_PATH + "\" " + args + " > " +
                      out.string() + " 2>/dev/null";
    if (std::system(cmd.c_str()) != 0) return {};
    std::ifstream in(out, std::ios::binary);
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

bool criterion5(std::string& what) {
    auto dir = std::filesystem::temp_directory_path();
    auto a = run_cli("verify-paper --json --threads 1", dir / "skewring_a.json");
    auto b = run_cli("verify-paper --json --threads 1", dir / "skewring_b.json");
    auto c = run_cli("verify-paper --json --threads " + std::to_string(workers()),
                     dir / "skewring_c.json");
    bool ok = !a.empty() && a == b && a == c;
    std::ostringstream os;
    os << "verify-paper --json byte-identical across repeated runs and 1 vs " << workers()
       << " workers (" << a.size() << " bytes)";
    what = os.str();
    return ok;
}

}  // namespace

int main() {
    std::string what;
    report(1, criterion1(what), what);
    report(2, criterion2(what), what);
    report(3, criterion3(what), what);
    report(4, criterion4(what), what);
    report(5, criterion5(what), what);
    if (g_failures == 0) {
        std::cout << "acceptance: all criteria PASS\n";
        return 0;
    }
    std::cout << "acceptance: " << g_failures << " criteria FAILED\n";
    return 1;
}
