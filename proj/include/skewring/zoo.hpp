#pragma once

#include <numeric>

#include "skewring/ring_ops.hpp"
#include "skewring/truncated.hpp"

namespace skewring {

namespace detail {

inline std::optional<std::vector<std::string>> split_top_level(std::string_view text, char sep) {
    std::vector<std::string> out;
    int depth = 0;
    std::string cur;
    for (char ch : text) {
        if (ch == '(' || ch == '[') ++depth;
        if (ch == ')' || ch == ']') --depth;
        if (depth < 0) return std::nullopt;
        if (ch == sep && depth == 0) {
            out.push_back(cur);
            cur.clear();
        } else {
            cur.push_back(ch);
        }
    }
    if (depth != 0) return std::nullopt;
    out.push_back(cur);
    return out;
}

struct MatShape {
    RingPtr base;
    std::size_t k;
    std::vector<Elem> decode(Elem x) const {
        std::vector<Elem> v(k * k);
        for (auto& d : v) {
            d = static_cast<Elem>(x % base->order());
            x = static_cast<Elem>(x / base->order());
        }
        return v;
    }
    Elem encode(const std::vector<Elem>& v) const {
        Elem x = 0;
        for (std::size_t i = k * k; i-- > 0;)
            x = static_cast<Elem>(x * base->order() + v[i]);
        return x;
    }
};

}  // namespace detail

// ---------------------------------------------------------------------------
// Ring constructors
// ---------------------------------------------------------------------------

/// Z(n): integers modulo n. Element literals are decimal residues.
inline RingPtr ring_Z(std::size_t n) {
    if (n == 0) throw build_error("Z(0) is not a ring");
    if (n > FiniteRing::kOrderCap) throw build_error("Z(n) exceeds order cap");
    auto st = std::make_shared<RingStructure>();
    st->kind = "Z";
    st->params = {n};
    const Elem en = static_cast<Elem>(n);
    auto parse = [en](std::string_view text) -> std::optional<Elem> {
        if (text.empty()) return std::nullopt;
        std::uint64_t v = 0;
        for (char ch : text) {
            if (ch < '0' || ch > '9') return std::nullopt;
            v = v * 10 + static_cast<std::uint64_t>(ch - '0');
            if (v > 10u * FiniteRing::kOrderCap) return std::nullopt;
        }
        return static_cast<Elem>(v % en);
    };
    return std::make_shared<FiniteRing>(
        n, [en](Elem a, Elem b) { return (a + b) % en; },
        [en](Elem a, Elem b) { return static_cast<Elem>((std::uint64_t(a) * b) % en); },
        [en](Elem a) { return (en - a) % en; }, 0, 1 % en, "Z(" + std::to_string(n) + ")",
        FiniteRing::Formatter{}, parse, st);
}

/// prod(A, B): direct product with componentwise operations. Element
/// index is a*|B|+b; literals are tuples "(x,y)".
inline RingPtr ring_prod(const RingPtr& A, const RingPtr& B) {
    const std::size_t n = A->order() * B->order();
    if (A->order() != 0 && n / A->order() != B->order())
        throw build_error("product order overflow");
    if (n > FiniteRing::kOrderCap) throw build_error("product exceeds order cap");
    auto st = std::make_shared<RingStructure>();
    st->kind = "prod";
    st->args = {A, B};
    const Elem bn = static_cast<Elem>(B->order());
    auto enc = [bn](Elem a, Elem b) { return a * bn + b; };
    auto format = [A, B, bn](Elem x) {
        return "(" + A->format(x / bn) + "," + B->format(x % bn) + ")";
    };
    auto parse = [A, B, bn](std::string_view text) -> std::optional<Elem> {
        std::string t = detail::trim(text);
        if (t.size() < 2 || t.front() != '(' || t.back() != ')') return std::nullopt;
        auto parts = detail::split_top_level(t.substr(1, t.size() - 2), ',');
        if (!parts || parts->size() != 2) return std::nullopt;
        auto a = A->parse(detail::trim((*parts)[0]));
        auto b = B->parse(detail::trim((*parts)[1]));
        if (!a || !b) return std::nullopt;
        return *a * bn + *b;
    };
    return std::make_shared<FiniteRing>(
        n,
        [A, B, bn, enc](Elem x, Elem y) {
            return enc(A->add(x / bn, y / bn), B->add(x % bn, y % bn));
        },
        [A, B, bn, enc](Elem x, Elem y) {
            return enc(A->mul(x / bn, y / bn), B->mul(x % bn, y % bn));
        },
        [A, B, bn, enc](Elem x) { return enc(A->neg(x / bn), B->neg(x % bn)); },
        enc(A->zero(), B->zero()), enc(A->one(), B->one()),
        "prod(" + A->label() + "," + B->label() + ")", format, parse, st);
}

/// mat(k, A): full k-by-k matrix ring over A, stored row-major (entry
/// (r,c) is digit r*k+c of a mixed-radix index). Literals are row-major
/// bracketed lists "[[a,b],[c,d]]".
inline RingPtr ring_mat(std::size_t k, const RingPtr& A) {
    if (k == 0) throw build_error("mat(0, R) is not unital");
    double ord = std::pow(static_cast<double>(A->order()), static_cast<double>(k * k));
    if (ord > static_cast<double>(FiniteRing::kOrderCap))
        throw build_error("matrix ring exceeds order cap");
    const std::size_t n = static_cast<std::size_t>(ord + 0.5);
    auto st = std::make_shared<RingStructure>();
    st->kind = "mat";
    st->args = {A};
    st->params = {k};
    auto sh = std::make_shared<detail::MatShape>(detail::MatShape{A, k});
    auto add = [sh](Elem x, Elem y) {
        auto vx = sh->decode(x), vy = sh->decode(y);
        for (std::size_t i = 0; i < vx.size(); ++i) vx[i] = sh->base->add(vx[i], vy[i]);
        return sh->encode(vx);
    };
    auto mul = [sh](Elem x, Elem y) {
        auto vx = sh->decode(x), vy = sh->decode(y);
        std::vector<Elem> out(vx.size(), sh->base->zero());
        const std::size_t k2 = sh->k;
        for (std::size_t r = 0; r < k2; ++r)
            for (std::size_t t = 0; t < k2; ++t) {
                Elem left = vx[r * k2 + t];
                if (left == sh->base->zero()) continue;
                for (std::size_t c = 0; c < k2; ++c)
                    out[r * k2 + c] =
                        sh->base->add(out[r * k2 + c], sh->base->mul(left, vy[t * k2 + c]));
            }
        return sh->encode(out);
    };
    auto neg = [sh](Elem x) {
        auto v = sh->decode(x);
        for (auto& d : v) d = sh->base->neg(d);
        return sh->encode(v);
    };
    auto format = [sh](Elem x) {
        auto v = sh->decode(x);
        std::string out = "[";
        for (std::size_t r = 0; r < sh->k; ++r) {
            if (r) out += ",";
            out += "[";
            for (std::size_t c = 0; c < sh->k; ++c) {
                if (c) out += ",";
                out += sh->base->format(v[r * sh->k + c]);
            }
            out += "]";
        }
        return out + "]";
    };
    auto parse = [sh](std::string_view text) -> std::optional<Elem> {
        std::string t = detail::trim(text);
        if (t.size() < 2 || t.front() != '[' || t.back() != ']') return std::nullopt;
        auto rows = detail::split_top_level(t.substr(1, t.size() - 2), ',');
        if (!rows || rows->size() != sh->k) return std::nullopt;
        std::vector<Elem> v(sh->k * sh->k);
        for (std::size_t r = 0; r < sh->k; ++r) {
            std::string row = detail::trim((*rows)[r]);
            if (row.size() < 2 || row.front() != '[' || row.back() != ']') return std::nullopt;
            auto cells = detail::split_top_level(row.substr(1, row.size() - 2), ',');
            if (!cells || cells->size() != sh->k) return std::nullopt;
            for (std::size_t c = 0; c < sh->k; ++c) {
                auto e = sh->base->parse(detail::trim((*cells)[c]));
                if (!e) return std::nullopt;
                v[r * sh->k + c] = *e;
            }
        }
        return sh->encode(v);
    };
    std::vector<Elem> onev(k * k, A->zero());
    for (std::size_t r = 0; r < k; ++r) onev[r * k + r] = A->one();
    std::vector<Elem> zerov(k * k, A->zero());
    return std::make_shared<FiniteRing>(n, add, mul, neg, sh->encode(zerov), sh->encode(onev),
                                        "mat(" + std::to_string(k) + "," + A->label() + ")",
                                        format, parse, st);
}

/// truncpoly(A, m): the commutative truncated polynomial ring
/// A[t]/(t^m). Literals are polynomials in t over A's literals.
inline RingPtr ring_truncpoly(const RingPtr& A, std::size_t m) {
    return truncated_skew_ring(A, identity_endo(A), m, "t").ring;
}

/// sub(P; g1, ..., gk): the subring of P generated by {0, 1, g1..gk}
/// under +, *, and negation. Elements are re-indexed 0..order-1 in
/// ascending order of their parent index; literals delegate to P.
inline RingPtr ring_sub(const RingPtr& P, const std::vector<Elem>& gens, std::string label = {}) {
    std::vector<bool> in(P->order(), false);
    std::vector<Elem> members;
    auto insert = [&](Elem x) {
        if (!in[x]) {
            in[x] = true;
            members.push_back(x);
        }
    };
    insert(P->zero());
    insert(P->one());
    for (Elem g : gens) {
        if (g >= P->order()) throw build_error("sub generator out of range");
        insert(g);
    }
    for (std::size_t head = 0; head < members.size();) {
        std::size_t snapshot = members.size();
        for (std::size_t i = 0; i < snapshot; ++i) {
            insert(P->neg(members[i]));
            for (std::size_t j = 0; j < snapshot; ++j) {
                insert(P->add(members[i], members[j]));
                insert(P->mul(members[i], members[j]));
            }
        }
        if (members.size() == snapshot) break;
        head = snapshot;
        if (members.size() > FiniteRing::kOrderCap)
            throw build_error("sub closure exceeds order cap");
    }
    std::sort(members.begin(), members.end());
    constexpr Elem kOutside = static_cast<Elem>(-1);
    std::vector<Elem> index(P->order(), kOutside);
    for (std::size_t i = 0; i < members.size(); ++i) index[members[i]] = static_cast<Elem>(i);

    auto st = std::make_shared<RingStructure>();
    st->kind = "sub";
    st->args = {P};
    st->members = members;
    auto mem = std::make_shared<std::vector<Elem>>(members);
    auto idx = std::make_shared<std::vector<Elem>>(index);
    if (label.empty()) label = "sub(" + P->label() + ")";
    auto format = [P, mem](Elem a) { return P->format((*mem)[a]); };
    auto parse = [P, idx](std::string_view text) -> std::optional<Elem> {
        auto p = P->parse(text);
        if (!p || (*idx)[*p] == static_cast<Elem>(-1)) return std::nullopt;
        return (*idx)[*p];
    };
    return std::make_shared<FiniteRing>(
        members.size(),
        [P, mem, idx](Elem a, Elem b) { return (*idx)[P->add((*mem)[a], (*mem)[b])]; },
        [P, mem, idx](Elem a, Elem b) { return (*idx)[P->mul((*mem)[a], (*mem)[b])]; },
        [P, mem, idx](Elem a) { return (*idx)[P->neg((*mem)[a])]; }, index[P->zero()],
        index[P->one()], std::move(label), format, parse, st);
}

/// ut2c(A): matrices [[a,b],[0,a]] over A, as a subring of mat(2, A).
inline RingPtr ring_ut2c(const RingPtr& A) {
    auto M = ring_mat(2, A);
    auto e12 = M->parse("[[0,1],[0,0]]");
    return ring_sub(M, {*e12}, "ut2c(" + A->label() + ")");
}

/// ut2(A): full upper triangular 2x2 matrices over A.
inline RingPtr ring_ut2(const RingPtr& A) {
    auto M = ring_mat(2, A);
    return ring_sub(M, {*M->parse("[[1,0],[0,0]]"), *M->parse("[[0,1],[0,0]]")},
                    "ut2(" + A->label() + ")");
}

// ---------------------------------------------------------------------------
// Named endomorphisms
// ---------------------------------------------------------------------------

/// swap on prod(A, A): (a, b) -> (b, a).
inline EndoPtr endo_swap(const RingPtr& R) {
    auto st = R->structure();
    if (!st || st->kind != "prod" || st->args[0]->order() != st->args[1]->order() ||
        st->args[0]->label() != st->args[1]->label())
        throw build_error("swap requires a product of two equal rings");
    const Elem bn = static_cast<Elem>(st->args[1]->order());
    std::vector<Elem> map(R->order());
    for (Elem x = 0; x < R->order(); ++x) map[x] = (x % bn) * bn + x / bn;
    return make_endomorphism(R, std::move(map), "swap");
}

/// negb on ut2c-shaped subrings of mat(2, A): [[a,b],[0,a]] -> [[a,-b],[0,a]].
inline EndoPtr endo_negb(const RingPtr& R) {
    auto st = R->structure();
    if (!st || st->kind != "sub") throw build_error("negb requires a ut2c(...) ring");
    auto pst = st->args[0]->structure();
    if (!pst || pst->kind != "mat" || pst->params[0] != 2)
        throw build_error("negb requires a subring of mat(2, A)");
    detail::MatShape sh{pst->args[0], 2};
    std::vector<Elem> map(R->order());
    for (Elem i = 0; i < R->order(); ++i) {
        auto v = sh.decode(st->members[i]);
        v[1] = sh.base->neg(v[1]);
        Elem target = sh.encode(v);
        auto it = std::lower_bound(st->members.begin(), st->members.end(), target);
        if (it == st->members.end() || *it != target)
            throw build_error("negb image leaves the subring");
        map[i] = static_cast<Elem>(it - st->members.begin());
    }
    return make_endomorphism(R, std::move(map), "negb");
}

/// eval0 on truncated polynomial rings: f -> f(0) (the constant term).
inline EndoPtr endo_eval0(const RingPtr& R) {
    auto st = R->structure();
    if (!st || st->kind != "trunc") throw build_error("eval0 requires a truncpoly(...) ring");
    TruncatedSkewRing sh{R, st->args[0], st->twist, st->params[0]};
    std::vector<Elem> map(R->order());
    for (Elem x = 0; x < R->order(); ++x) map[x] = sh.constant(sh.decode(x)[0]);
    return make_endomorphism(R, std::move(map), "eval0");
}

/// blockswap on the 4x4 two-block ring (see make_ex4): exchanges the
/// (a,b) block with the (u,v) block.
inline EndoPtr endo_blockswap(const RingPtr& R) {
    auto st = R->structure();
    if (!st || st->kind != "sub") throw build_error("blockswap requires the ex4 ring");
    auto pst = st->args[0]->structure();
    if (!pst || pst->kind != "mat" || pst->params[0] != 4)
        throw build_error("blockswap requires a subring of mat(4, F)");
    detail::MatShape sh{pst->args[0], 4};
    std::vector<Elem> map(R->order());
    for (Elem i = 0; i < R->order(); ++i) {
        auto v = sh.decode(st->members[i]);
        Elem a = v[0], b = v[1], u = v[10], vv = v[11];
        std::vector<Elem> w(16, sh.base->zero());
        w[0] = w[5] = u;
        w[1] = vv;
        w[10] = w[15] = a;
        w[11] = b;
        Elem target = sh.encode(w);
        auto it = std::lower_bound(st->members.begin(), st->members.end(), target);
        if (it == st->members.end() || *it != target)
            throw build_error("blockswap image leaves the subring");
        map[i] = static_cast<Elem>(it - st->members.begin());
    }
    return make_endomorphism(R, std::move(map), "blockswap");
}

/// table(i:j, ...): a map given by explicit image pairs, completed
/// additively (images of sums follow from images of the listed
/// elements), then validated as a unital endomorphism.
inline EndoPtr endo_table(const RingPtr& R, const std::vector<std::pair<Elem, Elem>>& pairs) {
    const std::size_t n = R->order();
    constexpr Elem kUnset = static_cast<Elem>(-1);
    std::vector<Elem> map(n, kUnset);
    for (auto [from, to] : pairs) {
        if (from >= n || to >= n) throw build_error("table entry out of range");
        if (map[from] != kUnset && map[from] != to)
            throw build_error("table assigns two images to one element");
        map[from] = to;
    }
    // additive completion to a fixpoint
    for (bool changed = true; changed;) {
        changed = false;
        for (Elem a = 0; a < n; ++a) {
            if (map[a] == kUnset) continue;
            for (Elem b = 0; b <= a; ++b) {
                if (map[b] == kUnset) continue;
                Elem sum = R->add(a, b), img = R->add(map[a], map[b]);
                if (map[sum] == kUnset) {
                    map[sum] = img;
                    changed = true;
                } else if (map[sum] != img) {
                    throw build_error("table is not additively consistent");
                }
            }
        }
    }
    for (Elem a = 0; a < n; ++a)
        if (map[a] == kUnset)
            throw build_error("table does not determine the image of element " +
                              std::to_string(a));
    return make_endomorphism(R, std::move(map), "table");
}

// ---------------------------------------------------------------------------
// Registry
// ---------------------------------------------------------------------------

struct RegistryEntry {
    std::string name;
    RingPtr ring;
    EndoPtr sigma;
    std::string provenance;
};

/// The 4x4 two-block ring over Z_p: block diag([[a,b],[0,a]], [[u,v],[0,u]])
/// with sigma exchanging the blocks. Built by subring closure and checked
/// for the expected order p^4; errors loudly if the closure disagrees.
inline RegistryEntry make_ex4(std::size_t p = 2) {
    if (p > 7) throw build_error("ex4 field size limited to primes <= 7");
    auto M = ring_mat(4, ring_Z(p));
    auto g = [&](const char* lit) { return *M->parse(lit); };
    auto R = ring_sub(M,
                      {g("[[1,0,0,0],[0,1,0,0],[0,0,0,0],[0,0,0,0]]"),
                       g("[[0,1,0,0],[0,0,0,0],[0,0,0,0],[0,0,0,0]]"),
                       g("[[0,0,0,0],[0,0,0,0],[0,0,1,0],[0,0,0,1]]"),
                       g("[[0,0,0,0],[0,0,0,0],[0,0,0,1],[0,0,0,0]]")},
                      "ex4(Z(" + std::to_string(p) + "))");
    if (R->order() != p * p * p * p)
        throw build_error("ex4 closure has unexpected order " + std::to_string(R->order()));
    return {"ex4", R, endo_blockswap(R),
            "two-block 4x4 matrices diag([[a,b],[0,a]],[[u,v],[0,u]]) over Z_" +
                std::to_string(p) + " with sigma swapping the blocks"};
}

/// The named example rings plus two control entries. Every entry's sigma
/// is validated at construction.
inline std::vector<RegistryEntry> build_registry() {
    std::vector<RegistryEntry> out;
    {
        auto R = ring_ut2c(ring_Z(4));
        out.push_back({"ex1", R, endo_negb(R),
                       "matrices [[a,b],[0,a]] over Z_4 with sigma negating b"});
    }
    {
        auto R = ring_ut2(ring_Z(2));
        out.push_back({"ex_ut2", R, identity_endo(R),
                       "full upper triangular 2x2 matrices over Z_2, identity sigma"});
    }
    {
        auto R = ring_prod(ring_Z(2), ring_Z(2));
        out.push_back({"ex3", R, endo_swap(R), "Z_2 x Z_2 with the coordinate swap"});
    }
    out.push_back(make_ex4());
    {
        auto R = ring_truncpoly(ring_Z(2), 3);
        out.push_back({"ex2t", R, endo_eval0(R),
                       "Z_2[t]/(t^3) with sigma(f) = f(0); finite surrogate for K[t]"});
    }
    {
        auto R = ring_Z(4);
        out.push_back({"z4", R, identity_endo(R), "control: Z_4 with identity sigma"});
    }
    {
        auto R = ring_mat(2, ring_Z(2));
        out.push_back({"mat2z2", R, identity_endo(R),
                       "control: full 2x2 matrices over Z_2 with identity sigma"});
    }
    return out;
}

inline const std::vector<RegistryEntry>& registry() {
    static const std::vector<RegistryEntry> reg = build_registry();
    return reg;
}

inline const RegistryEntry* find_registry_entry(std::string_view name) {
    for (const auto& e : registry())
        if (e.name == name) return &e;
    return nullptr;
}

}  // namespace skewring
