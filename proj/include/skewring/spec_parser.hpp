#pragma once

#include <cctype>

#include "skewring/generate.hpp"

namespace skewring {

/// Syntax diagnostic for the ring/endo spec DSL: byte offset into the
/// input plus the token class the parser wanted there.
struct ParseError : build_error {
    std::size_t offset;
    std::string expected;
    ParseError(std::size_t off, std::string exp)
        : build_error("syntax error at offset " + std::to_string(off) + ": expected " + exp),
          offset(off),
          expected(std::move(exp)) {}
};

namespace detail {

/// Recursive-descent reader for
///   ring := "Z(" INT ")" | "prod(" ring "," ring ")" | "mat(" INT "," ring ")"
///         | "truncpoly(" ring "," INT ")" | "sub(" ring ";" elem ("," elem)* ")"
///         | NAME
/// Whitespace is insignificant between tokens. Element literals inside
/// sub(...) are delegated to the just-parsed ring's own parser.
class SpecReader {
public:
    explicit SpecReader(std::string_view text) : text_(text) {}

    RingPtr read_ring_complete() {
        auto r = ring_expr();
        end_of_input();
        return r;
    }

    EndoPtr read_endo_complete(const RingPtr& ring) {
        auto e = endo_expr(ring);
        end_of_input();
        return e;
    }

private:
    std::string_view text_;
    std::size_t pos_ = 0;

    void skip_ws() {
        while (pos_ < text_.size() && (text_[pos_] == ' ' || text_[pos_] == '\t')) ++pos_;
    }
    bool peek_is(char c) {
        skip_ws();
        return pos_ < text_.size() && text_[pos_] == c;
    }
    bool eat(char c) {
        if (!peek_is(c)) return false;
        ++pos_;
        return true;
    }
    void expect(char c) {
        if (!eat(c)) throw ParseError(pos_, std::string("'") + c + "'");
    }
    void end_of_input() {
        skip_ws();
        if (pos_ != text_.size()) throw ParseError(pos_, "end of input");
    }

    std::size_t read_int() {
        skip_ws();
        if (pos_ >= text_.size() || !std::isdigit(static_cast<unsigned char>(text_[pos_])))
            throw ParseError(pos_, "INT");
        std::size_t v = 0;
        while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) {
            v = v * 10 + static_cast<std::size_t>(text_[pos_] - '0');
            if (v > FiniteRing::kOrderCap * 10) throw ParseError(pos_, "smaller INT");
            ++pos_;
        }
        return v;
    }

    std::string read_name() {
        skip_ws();
        std::size_t start = pos_;
        auto ok = [](char c) {
            return std::isalnum(static_cast<unsigned char>(c)) || c == '_';
        };
        while (pos_ < text_.size() && ok(text_[pos_])) ++pos_;
        if (pos_ == start) throw ParseError(pos_, "NAME");
        return std::string(text_.substr(start, pos_ - start));
    }

    /// Raw text up to the next top-level ',' ';' or ')'.
    std::string read_balanced_chunk() {
        skip_ws();
        std::size_t start = pos_;
        int depth = 0;
        while (pos_ < text_.size()) {
            char c = text_[pos_];
            if (c == '(' || c == '[') ++depth;
            if (c == ')' || c == ']') {
                if (depth == 0) break;
                --depth;
            }
            if (depth == 0 && (c == ',' || c == ';')) break;
            ++pos_;
        }
        return trim(text_.substr(start, pos_ - start));
    }

    RingPtr ring_expr() {
        skip_ws();
        std::size_t start = pos_;
        std::string name = read_name();
        if (name == "Z") {
            expect('(');
            std::size_t n = read_int();
            expect(')');
            return ring_Z(n);
        }
        if (name == "prod") {
            expect('(');
            auto a = ring_expr();
            expect(',');
            auto b = ring_expr();
            expect(')');
            return ring_prod(a, b);
        }
        if (name == "mat") {
            expect('(');
            std::size_t k = read_int();
            expect(',');
            auto a = ring_expr();
            expect(')');
            return ring_mat(k, a);
        }
        if (name == "truncpoly") {
            expect('(');
            auto a = ring_expr();
            expect(',');
            std::size_t m = read_int();
            expect(')');
            return ring_truncpoly(a, m);
        }
        if (name == "sub") {
            expect('(');
            auto parent = ring_expr();
            expect(';');
            std::vector<Elem> gens;
            for (;;) {
                skip_ws();
                std::size_t at = pos_;
                std::string lit = read_balanced_chunk();
                auto e = parent->parse(lit);
                if (!e)
                    throw ParseError(at, "element literal of " + parent->label());
                gens.push_back(*e);
                if (!eat(',')) break;
            }
            expect(')');
            return ring_sub(parent, gens);
        }
        if (name == "ut2c" || name == "ut2") {  // convenience aliases for the named families
            expect('(');
            auto a = ring_expr();
            expect(')');
            return name == "ut2c" ? ring_ut2c(a) : ring_ut2(a);
        }
        if (const RegistryEntry* entry = find_registry_entry(name)) return entry->ring;
        throw ParseError(start, "ring constructor or registry name");
    }

    EndoPtr endo_expr(const RingPtr& ring) {
        skip_ws();
        std::size_t start = pos_;
        std::string name = read_name();
        if (name == "id") return identity_endo(ring);
        if (name == "table") {
            expect('(');
            std::vector<std::pair<Elem, Elem>> pairs;
            for (;;) {
                Elem from = static_cast<Elem>(read_int());
                expect(':');
                Elem to = static_cast<Elem>(read_int());
                pairs.emplace_back(from, to);
                if (!eat(',')) break;
            }
            expect(')');
            return endo_table(ring, pairs);
        }
        if (name == "swap") return endo_swap(ring);
        if (name == "negb") return endo_negb(ring);
        if (name == "eval0") return endo_eval0(ring);
        if (name == "blockswap") return endo_blockswap(ring);
        // a registry name also selects that entry's sigma, provided the
        // ring is the same registry ring
        if (const RegistryEntry* entry = find_registry_entry(name)) {
            if (entry->ring == ring) return entry->sigma;
            throw ParseError(start, "endomorphism compatible with " + ring->label());
        }
        throw ParseError(start, "endomorphism spec (id, table(i:j,...), or a named map)");
    }
};

}  // namespace detail

/// Evaluates a ring spec. Throws ParseError on malformed syntax (with
/// byte offset and expectation) and build_error on semantic failures
/// (cap violations, bad subring generators, ...).
inline RingPtr parse_ring_spec(std::string_view text) {
    return detail::SpecReader(text).read_ring_complete();
}

/// Evaluates an endo spec against an already-built ring.
inline EndoPtr parse_endo_spec(std::string_view text, const RingPtr& ring) {
    return detail::SpecReader(text).read_endo_complete(ring);
}

/// Polynomial literal "c0 + c1*x + c2*x^2" with base-ring coefficient
/// literals; no degree limit.
inline std::optional<SkewPoly> parse_poly_literal(const RingPtr& ring, const EndoPtr& sigma,
                                                  std::string_view text,
                                                  const std::string& var = "x") {
    auto terms = detail::split_top_level_plus(text);
    if (!terms) return std::nullopt;
    std::vector<Elem> coeffs;
    for (const auto& term : *terms) {
        auto kv = detail::parse_poly_term(*ring, term, var);
        if (!kv) return std::nullopt;
        if (kv->first >= coeffs.size()) coeffs.resize(kv->first + 1, ring->zero());
        coeffs[kv->first] = ring->add(coeffs[kv->first], kv->second);
    }
    return SkewPoly(ring, sigma, std::move(coeffs));
}

}  // namespace skewring
