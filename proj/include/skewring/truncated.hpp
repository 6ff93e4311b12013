#pragma once

#include <cmath>

#include "skewring/skew_poly.hpp"

namespace skewring {

/// The finite quotient R[x;sigma]/(x^m), presented as a FiniteRing of
/// order |R|^m whose elements are coefficient tuples (a_0..a_{m-1}) in
/// mixed radix, a_0 least significant. A declared finite surrogate for
/// the skew power series ring; truncation creates new zero divisors, so
/// its idempotents relate to exact polynomial idempotents only
/// heuristically.
struct TruncatedSkewRing {
    RingPtr ring;
    RingPtr base;
    EndoPtr sigma;
    std::size_t m = 1;

    std::vector<Elem> decode(Elem x) const {
        std::vector<Elem> out(m);
        for (std::size_t i = 0; i < m; ++i) {
            out[i] = static_cast<Elem>(x % base->order());
            x = static_cast<Elem>(x / base->order());
        }
        return out;
    }
    Elem encode(const std::vector<Elem>& digits) const {
        Elem x = 0;
        for (std::size_t i = m; i-- > 0;)
            x = static_cast<Elem>(x * base->order() + (i < digits.size() ? digits[i] : 0));
        return x;
    }
    /// Lift a base element as the constant a_0 = c.
    Elem constant(Elem c) const {
        std::vector<Elem> d(m, base->zero());
        d[0] = c;
        return encode(d);
    }
    /// The class of the indeterminate; zero when m = 1.
    Elem x() const {
        std::vector<Elem> d(m, base->zero());
        if (m >= 2) d[1] = base->one();
        return encode(d);
    }
    SkewPoly to_poly(Elem v) const { return SkewPoly(base, sigma, decode(v)); }
};

namespace detail {

std::optional<std::vector<std::string>> split_top_level_plus(std::string_view text);

inline std::string trim(std::string_view s) {
    std::size_t b = s.find_first_not_of(" \t");
    if (b == std::string_view::npos) return "";
    std::size_t e = s.find_last_not_of(" \t");
    return std::string(s.substr(b, e - b + 1));
}

/// Parses "c", "c*v^k", "v^k", "v" against a base ring; returns (k, coeff).
inline std::optional<std::pair<std::size_t, Elem>> parse_poly_term(const FiniteRing& base,
                                                                   std::string_view term,
                                                                   const std::string& var) {
    std::string t = trim(term);
    if (t.empty()) return std::nullopt;
    // locate the variable occurrence at top level (t may start with it)
    std::size_t k = 0;
    std::string coeff_text;
    std::size_t star = t.rfind("*" + var);
    if (t == var || (t.rfind(var, 0) == 0 && (t.size() == var.size() || t[var.size()] == '^'))) {
        coeff_text = "";
        k = 1;
        if (t.size() > var.size()) {
            if (t[var.size()] != '^') return std::nullopt;
            try { k = std::stoul(t.substr(var.size() + 1)); } catch (...) { return std::nullopt; }
        }
    } else if (star != std::string::npos &&
               (t.size() == star + 1 + var.size() || t[star + 1 + var.size()] == '^')) {
        coeff_text = trim(t.substr(0, star));
        k = 1;
        std::size_t after = star + 1 + var.size();
        if (t.size() > after) {
            try { k = std::stoul(t.substr(after + 1)); } catch (...) { return std::nullopt; }
        }
    } else {
        coeff_text = t;  // constant term
        k = 0;
    }
    Elem c;
    if (coeff_text.empty()) {
        c = base.one();
    } else {
        auto parsed = base.parse(coeff_text);
        // allow a disambiguating paren wrapper, e.g. "(2)*t"
        if (!parsed && coeff_text.size() >= 2 && coeff_text.front() == '(' &&
            coeff_text.back() == ')')
            parsed = base.parse(trim(coeff_text.substr(1, coeff_text.size() - 2)));
        if (!parsed) return std::nullopt;
        c = *parsed;
    }
    return std::make_pair(k, c);
}

}  // namespace detail

inline TruncatedSkewRing truncated_skew_ring(const RingPtr& base, const EndoPtr& sigma,
                                             std::size_t m, const std::string& var = "x") {
    if (m < 1) throw build_error("truncation order must be >= 1");
    double ord = std::pow(static_cast<double>(base->order()), static_cast<double>(m));
    if (ord > static_cast<double>(FiniteRing::kOrderCap))
        throw build_error("truncated ring order exceeds cap");
    const std::size_t n = static_cast<std::size_t>(ord + 0.5);
    const std::size_t bn = base->order();

    auto st = std::make_shared<RingStructure>();
    st->kind = "trunc";
    st->args = {base};
    st->params = {m};
    st->twist = sigma;
    st->var = var;

    auto shell = std::make_shared<TruncatedSkewRing>();
    shell->base = base;
    shell->sigma = sigma;
    shell->m = m;

    auto add = [shell, bn](Elem a, Elem b) {
        auto va = shell->decode(a), vb = shell->decode(b);
        for (std::size_t i = 0; i < shell->m; ++i) va[i] = shell->base->add(va[i], vb[i]);
        return shell->encode(va);
    };
    auto mul = [shell](Elem a, Elem b) {
        auto va = shell->decode(a), vb = shell->decode(b);
        std::vector<Elem> out(shell->m, shell->base->zero());
        for (std::size_t i = 0; i < shell->m; ++i) {
            if (va[i] == shell->base->zero()) continue;
            for (std::size_t j = 0; i + j < shell->m; ++j)
                out[i + j] = shell->base->add(
                    out[i + j], shell->base->mul(va[i], shell->sigma->apply_power(vb[j], i)));
        }
        return shell->encode(out);
    };
    auto neg = [shell](Elem a) {
        auto va = shell->decode(a);
        for (std::size_t i = 0; i < shell->m; ++i) va[i] = shell->base->neg(va[i]);
        return shell->encode(va);
    };
    auto format = [shell, var](Elem a) {
        auto v = shell->decode(a);
        std::string out;
        for (std::size_t i = 0; i < shell->m; ++i) {
            if (v[i] == shell->base->zero()) continue;
            if (!out.empty()) out += " + ";
            if (i == 0 || v[i] != shell->base->one()) {
                std::string c = shell->base->format(v[i]);
                if (c.find('+') != std::string::npos && c.front() != '(') c = "(" + c + ")";
                out += c;
                if (i >= 1) out += "*";
            }
            if (i == 1) out += var;
            else if (i > 1) out += var + "^" + std::to_string(i);
        }
        return out.empty() ? shell->base->format(shell->base->zero()) : out;
    };
    auto parse = [shell, var](std::string_view text) -> std::optional<Elem> {
        auto terms = detail::split_top_level_plus(text);
        if (!terms) return std::nullopt;
        std::vector<Elem> digits(shell->m, shell->base->zero());
        for (const auto& term : *terms) {
            auto kv = detail::parse_poly_term(*shell->base, term, var);
            if (!kv) return std::nullopt;
            if (kv->first >= shell->m) return std::nullopt;
            digits[kv->first] = shell->base->add(digits[kv->first], kv->second);
        }
        return shell->encode(digits);
    };

    std::string label = base->label() + "[" + var +
                        (sigma->is_identity() ? "" : ";" + sigma->label()) + "]/(" + var + "^" +
                        std::to_string(m) + ")";
    std::vector<Elem> zero_digits(m, base->zero()), one_digits(m, base->zero());
    one_digits[0] = base->one();
    const Elem zero = shell->encode(zero_digits);
    const Elem one = shell->encode(one_digits);
    shell->ring =
        std::make_shared<FiniteRing>(n, add, mul, neg, zero, one, label, format, parse, st);
    return *shell;
}

namespace detail {
inline std::optional<std::vector<std::string>> split_top_level_plus(std::string_view text) {
    std::vector<std::string> out;
    int depth = 0;
    std::string cur;
    for (char ch : text) {
        if (ch == '(' || ch == '[') ++depth;
        if (ch == ')' || ch == ']') --depth;
        if (depth < 0) return std::nullopt;
        if (ch == '+' && depth == 0) {
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
}  // namespace detail

}  // namespace skewring
