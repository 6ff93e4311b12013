#pragma once

#include "skewring/zoo.hpp"

namespace skewring {

/// All unital ring endomorphisms of a small ring, found by choosing
/// images for a greedy additive generating set, extending additively,
/// and keeping the maps that satisfy both homomorphism laws. Feasible
/// for order <= 16 (at most order^|gens| candidates).
inline std::vector<EndoPtr> enumerate_endomorphisms(const RingPtr& ring) {
    const FiniteRing& R = *ring;
    const std::size_t n = R.order();

    // greedy additive generators; record each element as a word in them
    std::vector<Elem> gens;
    std::vector<std::vector<std::size_t>> word(n);  // multiplicities per generator
    std::vector<bool> spanned(n, false);
    spanned[R.zero()] = true;
    auto respan = [&](Elem g) {
        // add multiples of g to everything already spanned
        bool grew = true;
        while (grew) {
            grew = false;
            for (Elem x = 0; x < n; ++x) {
                if (!spanned[x]) continue;
                Elem y = R.add(x, g);
                if (!spanned[y]) {
                    spanned[y] = true;
                    word[y] = word[x];
                    word[y].resize(gens.size(), 0);
                    ++word[y][gens.size() - 1];
                    grew = true;
                }
            }
        }
    };
    for (Elem x = 0; x < n; ++x) {
        if (spanned[x]) continue;
        gens.push_back(x);
        word[x].resize(gens.size(), 0);
        word[x][gens.size() - 1] = 1;
        respan(x);
    }

    std::vector<EndoPtr> out;
    std::vector<Elem> images(gens.size(), 0);
    std::vector<Elem> map(n);
    auto emit_candidate = [&]() {
        for (Elem x = 0; x < n; ++x) {
            Elem v = R.zero();
            for (std::size_t gi = 0; gi < gens.size(); ++gi)
                for (std::size_t rep = 0; rep < (gi < word[x].size() ? word[x][gi] : 0); ++rep)
                    v = R.add(v, images[gi]);
            map[x] = v;
        }
        if (map[R.one()] != R.one()) return;
        for (Elem a = 0; a < n; ++a)
            for (Elem b = 0; b < n; ++b) {
                if (map[R.mul(a, b)] != R.mul(map[a], map[b])) return;
                if (map[R.add(a, b)] != R.add(map[a], map[b])) return;
            }
        out.push_back(std::make_shared<Endomorphism>(ring, map,
                                                     "endo#" + std::to_string(out.size())));
    };
    auto dfs = [&](auto&& self, std::size_t gi) -> void {
        if (gi == gens.size()) {
            emit_candidate();
            return;
        }
        for (Elem img = 0; img < n; ++img) {
            images[gi] = img;
            self(self, gi + 1);
        }
    };
    dfs(dfs, 0);
    return out;
}

/// Deterministic catalog of small (ring, sigma) pairs for property
/// sweeps and counterexample searches. Families: zn, prod, ut2c, ut2,
/// mat, truncpoly, registry, all. Rings of order <= endo_order_cap get
/// every unital endomorphism; larger ones only the identity.
inline std::vector<RegistryEntry> generate_pairs(std::size_t max_order,
                                                 const std::string& family = "all",
                                                 std::size_t endo_order_cap = 16) {
    std::vector<RingPtr> rings;
    auto want = [&](const std::string& f) { return family == "all" || family == f; };
    if (want("zn"))
        for (std::size_t k = 2; k <= max_order; ++k) rings.push_back(ring_Z(k));
    if (want("prod"))
        for (std::size_t a = 2; a * 2 <= max_order; ++a)
            for (std::size_t b = a; a * b <= max_order; ++b)
                rings.push_back(ring_prod(ring_Z(a), ring_Z(b)));
    if (want("ut2c"))
        for (std::size_t k = 2; k * k <= max_order; ++k) rings.push_back(ring_ut2c(ring_Z(k)));
    if (want("ut2"))
        for (std::size_t k = 2; k * k * k <= max_order; ++k) rings.push_back(ring_ut2(ring_Z(k)));
    if (want("mat"))
        for (std::size_t k = 2; k * k * k * k <= max_order; ++k)
            rings.push_back(ring_mat(2, ring_Z(k)));
    if (want("truncpoly"))
        for (std::size_t p : {2, 3, 5, 7})
            for (std::size_t m = 2; std::pow(double(p), double(m)) <= double(max_order); ++m)
                rings.push_back(ring_truncpoly(ring_Z(p), m));
    std::vector<RegistryEntry> out;
    if (want("registry"))
        for (const auto& e : registry())
            if (e.ring->order() <= max_order) out.push_back(e);
    for (const auto& ring : rings) {
        if (ring->order() > max_order) continue;
        std::vector<EndoPtr> endos;
        if (ring->order() <= endo_order_cap)
            endos = enumerate_endomorphisms(ring);
        else
            endos = {identity_endo(ring)};
        for (std::size_t i = 0; i < endos.size(); ++i)
            out.push_back({ring->label() + "#" + std::to_string(i), ring, endos[i],
                           "generated pair"});
    }
    return out;
}

}  // namespace skewring
