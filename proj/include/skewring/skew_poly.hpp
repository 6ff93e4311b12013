#pragma once

#include <sstream>

#include "skewring/endomorphism.hpp"
#include "skewring/finite_ring.hpp"

namespace skewring {

/// A polynomial over a finite ring with multiplication twisted by the
/// Ore rule x*r = sigma(r)*x, i.e. the coefficient of x^n in f*g is
/// sum over i+j=n of f_i * sigma^i(g_j). Coefficients are stored little
/// endian with no trailing zeros; the zero polynomial is the empty
/// sequence (degree -1).
class SkewPoly {
public:
    SkewPoly(RingPtr ring, EndoPtr sigma, std::vector<Elem> coeffs = {})
        : ring_(std::move(ring)), sigma_(std::move(sigma)), coeffs_(std::move(coeffs)) {
        normalize();
    }

    static SkewPoly zero(RingPtr ring, EndoPtr sigma) {
        return SkewPoly(std::move(ring), std::move(sigma));
    }
    static SkewPoly constant(RingPtr ring, EndoPtr sigma, Elem c) {
        return SkewPoly(std::move(ring), std::move(sigma), {c});
    }
    static SkewPoly monomial(RingPtr ring, EndoPtr sigma, Elem c, std::size_t k) {
        std::vector<Elem> coeffs(k + 1, ring->zero());
        coeffs[k] = c;
        return SkewPoly(std::move(ring), std::move(sigma), std::move(coeffs));
    }

    const RingPtr& ring() const { return ring_; }
    const EndoPtr& sigma() const { return sigma_; }
    const std::vector<Elem>& coeffs() const { return coeffs_; }
    bool is_zero() const { return coeffs_.empty(); }
    /// -1 for the zero polynomial.
    int degree() const { return static_cast<int>(coeffs_.size()) - 1; }
    Elem coeff(std::size_t i) const { return i < coeffs_.size() ? coeffs_[i] : ring_->zero(); }
    bool is_constant() const { return coeffs_.size() <= 1; }

    friend bool operator==(const SkewPoly& a, const SkewPoly& b) {
        return a.coeffs_ == b.coeffs_;
    }

    std::string str() const {
        if (coeffs_.empty()) return ring_->format(ring_->zero());
        std::ostringstream os;
        bool first = true;
        for (std::size_t i = 0; i < coeffs_.size(); ++i) {
            if (coeffs_[i] == ring_->zero()) continue;
            if (!first) os << " + ";
            first = false;
            if (i == 0 || coeffs_[i] != ring_->one()) {
                std::string c = ring_->format(coeffs_[i]);
                if (c.find('+') != std::string::npos && c.front() != '(') c = "(" + c + ")";
                os << c;
                if (i >= 1) os << "*";
            }
            if (i == 1) os << "x";
            else if (i > 1) os << "x^" << i;
        }
        return os.str();
    }

private:
    void normalize() {
        while (!coeffs_.empty() && coeffs_.back() == ring_->zero()) coeffs_.pop_back();
    }

    RingPtr ring_;
    EndoPtr sigma_;
    std::vector<Elem> coeffs_;
};

namespace detail {
inline void require_same_context(const SkewPoly& f, const SkewPoly& g) {
    if (f.ring() != g.ring() || !(f.sigma() == g.sigma() || *f.sigma() == *g.sigma()))
        throw build_error("skew polynomial operands over different (ring, sigma)");
}
}  // namespace detail

inline SkewPoly skew_add(const SkewPoly& f, const SkewPoly& g) {
    detail::require_same_context(f, g);
    const FiniteRing& R = *f.ring();
    std::vector<Elem> out(std::max(f.coeffs().size(), g.coeffs().size()), R.zero());
    for (std::size_t i = 0; i < out.size(); ++i) out[i] = R.add(f.coeff(i), g.coeff(i));
    return SkewPoly(f.ring(), f.sigma(), std::move(out));
}

inline SkewPoly skew_neg(const SkewPoly& f) {
    const FiniteRing& R = *f.ring();
    std::vector<Elem> out(f.coeffs().size());
    for (std::size_t i = 0; i < out.size(); ++i) out[i] = R.neg(f.coeff(i));
    return SkewPoly(f.ring(), f.sigma(), std::move(out));
}

inline SkewPoly skew_mul(const SkewPoly& f, const SkewPoly& g) {
    detail::require_same_context(f, g);
    if (f.is_zero() || g.is_zero()) return SkewPoly::zero(f.ring(), f.sigma());
    const FiniteRing& R = *f.ring();
    const Endomorphism& s = *f.sigma();
    std::vector<Elem> out(f.coeffs().size() + g.coeffs().size() - 1, R.zero());
    for (std::size_t i = 0; i < f.coeffs().size(); ++i) {
        if (f.coeff(i) == R.zero()) continue;
        for (std::size_t j = 0; j < g.coeffs().size(); ++j)
            out[i + j] = R.add(out[i + j], R.mul(f.coeff(i), s.apply_power(g.coeff(j), i)));
    }
    return SkewPoly(f.ring(), f.sigma(), std::move(out));
}

}  // namespace skewring
