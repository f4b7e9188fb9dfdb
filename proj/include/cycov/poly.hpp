#pragma once

#include <algorithm>
#include <initializer_list>
#include <vector>

#include "cycov/rational.hpp"

namespace cycov {

/// Dense univariate polynomial over the rationals, coefficients low-to-high.
/// The zero polynomial is the empty vector; nonzero polynomials keep a
/// nonzero leading coefficient.
class Poly {
  public:
    Poly() = default;
    Poly(std::initializer_list<Rat> coeffs) : c_(coeffs) { trim(); }
    explicit Poly(std::vector<Rat> coeffs) : c_(std::move(coeffs)) { trim(); }
    static Poly constant(const Rat& v) { return Poly({v}); }
    static Poly x() { return Poly({Rat(0), Rat(1)}); }

    bool is_zero() const { return c_.empty(); }
    long long degree() const { return static_cast<long long>(c_.size()) - 1; }  // -1 for zero
    const std::vector<Rat>& coeffs() const { return c_; }
    Rat coeff(long long k) const {
        return (k >= 0 && k < static_cast<long long>(c_.size())) ? c_[k] : Rat(0);
    }
    Rat leading() const { return c_.empty() ? Rat(0) : c_.back(); }

    Rat operator()(const Rat& v) const {
        Rat acc(0);
        for (auto it = c_.rbegin(); it != c_.rend(); ++it) acc = acc * v + *it;
        return acc;
    }

    Poly& operator+=(const Poly& o) {
        if (c_.size() < o.c_.size()) c_.resize(o.c_.size(), Rat(0));
        for (size_t k = 0; k < o.c_.size(); ++k) c_[k] += o.c_[k];
        trim();
        return *this;
    }
    Poly& operator-=(const Poly& o) {
        if (c_.size() < o.c_.size()) c_.resize(o.c_.size(), Rat(0));
        for (size_t k = 0; k < o.c_.size(); ++k) c_[k] -= o.c_[k];
        trim();
        return *this;
    }
    friend Poly operator+(Poly a, const Poly& b) { return a += b; }
    friend Poly operator-(Poly a, const Poly& b) { return a -= b; }
    friend Poly operator*(const Poly& a, const Poly& b) {
        if (a.is_zero() || b.is_zero()) return {};
        std::vector<Rat> out(a.c_.size() + b.c_.size() - 1, Rat(0));
        for (size_t i = 0; i < a.c_.size(); ++i)
            for (size_t j = 0; j < b.c_.size(); ++j) out[i + j] += a.c_[i] * b.c_[j];
        return Poly(std::move(out));
    }
    friend Poly operator*(const Rat& s, Poly p) {
        for (auto& v : p.c_) v *= s;
        p.trim();
        return p;
    }
    friend bool operator==(const Poly& a, const Poly& b) { return a.c_ == b.c_; }

    Poly derivative() const {
        if (c_.size() <= 1) return {};
        std::vector<Rat> out(c_.size() - 1);
        for (size_t k = 1; k < c_.size(); ++k) out[k - 1] = Rat(static_cast<long long>(k)) * c_[k];
        return Poly(std::move(out));
    }

    /// Quotient and remainder; divisor must be nonzero.
    std::pair<Poly, Poly> divmod(const Poly& d) const {
        if (d.is_zero()) throw SpecError("polynomial division by zero");
        Poly rem = *this;
        std::vector<Rat> quo;
        long long dd = d.degree();
        if (rem.degree() >= dd) quo.assign(rem.degree() - dd + 1, Rat(0));
        while (!rem.is_zero() && rem.degree() >= dd) {
            long long shift = rem.degree() - dd;
            Rat factor = rem.leading() / d.leading();
            quo[shift] = factor;
            for (long long k = 0; k <= dd; ++k) rem.c_[shift + k] -= factor * d.c_[k];
            rem.trim();
        }
        return {Poly(std::move(quo)), rem};
    }

    /// Order of vanishing at x = a (0 if p(a) != 0); -1 convention is not
    /// used: the zero polynomial is rejected.
    long long order_at(const Rat& a) const {
        if (is_zero()) throw SpecError("order_at of zero polynomial");
        Poly p = *this;
        Poly lin({-a, Rat(1)});
        long long ord = 0;
        while (p(a) == 0) {
            auto [q, r] = p.divmod(lin);
            p = q;
            ++ord;
        }
        return ord;
    }

  private:
    std::vector<Rat> c_;
    void trim() {
        while (!c_.empty() && c_.back() == 0) c_.pop_back();
    }
};

/// Π (x − r)^mult.
inline Poly poly_from_roots(const std::vector<std::pair<Rat, long long>>& roots) {
    Poly p = Poly::constant(Rat(1));
    for (const auto& [r, mult] : roots) {
        Poly lin({-r, Rat(1)});
        for (long long i = 0; i < mult; ++i) p = p * lin;
    }
    return p;
}

inline Poly poly_pow(const Poly& p, long long e) {
    Poly acc = Poly::constant(Rat(1));
    for (long long i = 0; i < e; ++i) acc = acc * p;
    return acc;
}

}  // namespace cycov
