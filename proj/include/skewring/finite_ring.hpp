#pragma once

#include <cstdint>
#include <functional>
#include <memory>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace skewring {

/// Index of an element in a ring's element table. Each ring element has
/// exactly one index, so two elements are equal iff their indices are.
using Elem = std::uint32_t;

class Endomorphism;
class FiniteRing;
using RingPtr = std::shared_ptr<const FiniteRing>;
using EndoPtr = std::shared_ptr<const Endomorphism>;

/// Outcome of a property check. When `holds` is false the witness contains
/// the element tuple falsifying the property, re-checkable by plugging it
/// back into the defining condition. `detail` names the violated axiom or
/// the failing direction where the property name alone is ambiguous.
struct PropertyVerdict {
    std::string property;
    bool holds = true;
    std::vector<Elem> witness;
    std::string detail;
    bool sampled = false;
};

inline PropertyVerdict verdict_ok(std::string property) {
    return PropertyVerdict{std::move(property), true, {}, {}, false};
}

inline PropertyVerdict verdict_fail(std::string property, std::vector<Elem> witness,
                                    std::string detail = {}) {
    return PropertyVerdict{std::move(property), false, std::move(witness), std::move(detail), false};
}

/// Thrown by constructors and builders on malformed input (order caps,
/// bad specs, invalid endomorphism tables).
struct build_error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// Structural metadata attached to rings built by the zoo constructors.
/// Lets named endomorphisms (swap, negb, eval0, blockswap) and element
/// literal parsers recover the construction a ring came from.
struct RingStructure {
    std::string kind;                 // "Z", "prod", "mat", "trunc", "sub"
    std::vector<RingPtr> args;        // component rings
    std::vector<std::size_t> params;  // Z: {n}; mat: {k}; trunc: {m}
    std::vector<Elem> members;        // sub: parent element ids, ascending
    EndoPtr twist;                    // trunc: the twisting endomorphism
    std::string var = "x";            // trunc: variable name for literals
};

/// A finite unital ring as a first-class value. Operations are given as
/// total functions on element indices; for small orders they are cached
/// into dense tables at construction. Immutable after construction.
class FiniteRing : public std::enable_shared_from_this<FiniteRing> {
public:
    using BinOp = std::function<Elem(Elem, Elem)>;
    using UnOp = std::function<Elem(Elem)>;
    using Formatter = std::function<std::string(Elem)>;
    using Parser = std::function<std::optional<Elem>(std::string_view)>;

    static constexpr std::size_t kOrderCap = 65536;
    static constexpr std::size_t kTableThreshold = 256;

    FiniteRing(std::size_t order, BinOp add, BinOp mul, UnOp neg, Elem zero, Elem one,
               std::string label, Formatter format = {}, Parser parse = {},
               std::shared_ptr<const RingStructure> structure = {})
        : order_(order),
          add_fn_(std::move(add)),
          mul_fn_(std::move(mul)),
          neg_fn_(std::move(neg)),
          zero_(zero),
          one_(one),
          label_(std::move(label)),
          format_(std::move(format)),
          parse_(std::move(parse)),
          structure_(std::move(structure)) {
        if (order_ == 0)
            throw build_error("ring order must be positive");
        if (order_ > kOrderCap)
            throw build_error("ring order " + std::to_string(order_) + " exceeds cap " +
                              std::to_string(kOrderCap));
        if (zero_ >= order_ || one_ >= order_)
            throw build_error("zero/one outside element range of " + label_);
        if (order_ <= kTableThreshold) {
            add_table_.resize(order_ * order_);
            mul_table_.resize(order_ * order_);
            neg_table_.resize(order_);
            for (Elem a = 0; a < order_; ++a) {
                neg_table_[a] = neg_fn_(a);
                for (Elem b = 0; b < order_; ++b) {
                    add_table_[a * order_ + b] = add_fn_(a, b);
                    mul_table_[a * order_ + b] = mul_fn_(a, b);
                }
            }
        }
    }

    std::size_t order() const { return order_; }
    Elem zero() const { return zero_; }
    Elem one() const { return one_; }
    const std::string& label() const { return label_; }
    const std::shared_ptr<const RingStructure>& structure() const { return structure_; }

    Elem add(Elem a, Elem b) const {
        return add_table_.empty() ? add_fn_(a, b) : add_table_[a * order_ + b];
    }
    Elem mul(Elem a, Elem b) const {
        return mul_table_.empty() ? mul_fn_(a, b) : mul_table_[a * order_ + b];
    }
    Elem neg(Elem a) const { return neg_table_.empty() ? neg_fn_(a) : neg_table_[a]; }
    Elem sub(Elem a, Elem b) const { return add(a, neg(b)); }

    std::string format(Elem a) const {
        return format_ ? format_(a) : std::to_string(a);
    }

    /// Parses a constructor-specific element literal; nullopt on failure.
    std::optional<Elem> parse(std::string_view text) const {
        if (parse_) return parse_(text);
        // fallback: bare decimal index
        Elem v = 0;
        if (text.empty()) return std::nullopt;
        for (char ch : text) {
            if (ch < '0' || ch > '9') return std::nullopt;
            v = v * 10 + static_cast<Elem>(ch - '0');
            if (v >= order_) return std::nullopt;
        }
        return v;
    }

private:
    std::size_t order_;
    BinOp add_fn_, mul_fn_;
    UnOp neg_fn_;
    Elem zero_, one_;
    std::string label_;
    Formatter format_;
    Parser parse_;
    std::shared_ptr<const RingStructure> structure_;
    std::vector<Elem> add_table_, mul_table_, neg_table_;
};

}  // namespace skewring
