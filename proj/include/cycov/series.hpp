#pragma once

#include <string>
#include <vector>

#include "cycov/poly.hpp"
#include "cycov/rational.hpp"

namespace cycov {

/// Truncated Laurent series in one variable over the rationals.
///
/// Coefficients are exact for every exponent in the window [lo, hi) and
/// exactly zero below lo; nothing is known from hi upward. Every operation
/// propagates the guaranteed-valid window, so reading a coefficient can
/// only ever succeed with the true value or fail with TruncationError —
/// never silently return a wrong zero.
class Series {
  public:
    Series() : lo_(0), hi_(0) {}
    Series(long long lo, long long hi, std::vector<Rat> coeffs)
        : lo_(lo), hi_(hi), c_(std::move(coeffs)) {
        if (hi_ < lo_ || c_.size() != static_cast<size_t>(hi_ - lo_))
            throw SpecError("inconsistent series window");
    }

    static Series zero(long long hi) { return Series(hi, hi, {}); }
    static Series constant(const Rat& v, long long hi) {
        if (hi <= 0) return zero(hi);
        std::vector<Rat> c(static_cast<size_t>(hi), Rat(0));
        c[0] = v;
        return Series(0, hi, std::move(c));
    }
    /// y^k, valid up to hi.
    static Series monomial(long long k, long long hi) {
        if (hi <= k) return zero(hi);
        std::vector<Rat> c(static_cast<size_t>(hi - k), Rat(0));
        c[0] = Rat(1);
        return Series(k, hi, std::move(c));
    }

    long long lo() const { return lo_; }
    long long order() const { return hi_; }  // exclusive upper bound of validity

    Rat coeff(long long k) const {
        if (k >= hi_)
            throw TruncationError(static_cast<int>(k + 1),
                                  "series coefficient " + std::to_string(k) +
                                      " beyond valid order " + std::to_string(hi_));
        if (k < lo_) return Rat(0);
        return c_[static_cast<size_t>(k - lo_)];
    }

    /// Coefficient of y^{-1}; throws if the window does not certify it.
    Rat residue() const { return coeff(-1); }

    /// Smallest exponent with nonzero coefficient. If everything stored is
    /// zero the series is zero to its order and we report hi (caller decides
    /// whether that is acceptable).
    long long valuation() const {
        for (long long k = lo_; k < hi_; ++k)
            if (c_[static_cast<size_t>(k - lo_)] != 0) return k;
        return hi_;
    }
    bool is_zero_to_order() const { return valuation() == hi_; }

    Series truncated(long long new_hi) const {
        if (new_hi >= hi_) return *this;
        if (new_hi <= lo_) return Series(new_hi, new_hi, {});
        std::vector<Rat> c(c_.begin(), c_.begin() + static_cast<size_t>(new_hi - lo_));
        return Series(lo_, new_hi, std::move(c));
    }

    /// Multiply by y^k.
    Series shifted(long long k) const { return Series(lo_ + k, hi_ + k, c_); }

    friend Series operator+(const Series& a, const Series& b) {
        long long hi = std::min(a.hi_, b.hi_);
        long long lo = std::min(std::min(a.lo_, b.lo_), hi);
        std::vector<Rat> c(static_cast<size_t>(hi - lo), Rat(0));
        for (long long k = lo; k < hi; ++k) {
            Rat v(0);
            if (k >= a.lo_ && k < a.hi_) v += a.c_[static_cast<size_t>(k - a.lo_)];
            if (k >= b.lo_ && k < b.hi_) v += b.c_[static_cast<size_t>(k - b.lo_)];
            c[static_cast<size_t>(k - lo)] = v;
        }
        return Series(lo, hi, std::move(c));
    }
    friend Series operator-(const Series& a, const Series& b) { return a + (Rat(-1) * b); }
    friend Series operator*(const Rat& s, Series a) {
        for (auto& v : a.c_) v *= s;
        return a;
    }

    /// Product window: exponent e is exact iff every split e = u + v with
    /// u >= a.lo, v >= b.lo has u < a.hi and v < b.hi.
    friend Series operator*(const Series& a, const Series& b) {
        long long lo = a.lo_ + b.lo_;
        long long hi = std::min(a.hi_ + b.lo_, b.hi_ + a.lo_);
        if (hi <= lo) return Series(hi, hi, {});
        std::vector<Rat> c(static_cast<size_t>(hi - lo), Rat(0));
        for (long long i = a.lo_; i < a.hi_; ++i) {
            const Rat& ai = a.c_[static_cast<size_t>(i - a.lo_)];
            if (ai == 0) continue;
            for (long long j = b.lo_; j < b.hi_ && i + j < hi; ++j)
                c[static_cast<size_t>(i + j - lo)] += ai * b.c_[static_cast<size_t>(j - b.lo_)];
        }
        return Series(lo, hi, std::move(c));
    }

    /// Multiplicative inverse. Requires the leading (valuation) coefficient
    /// to be present and nonzero in the window.
    Series inverse() const {
        long long v = valuation();
        if (v == hi_)
            throw TruncationError(static_cast<int>(hi_ + 1),
                                  "cannot invert a series that is zero to its valid order");
        long long len = hi_ - v;  // relative precision is preserved
        std::vector<Rat> a(c_.begin() + static_cast<size_t>(v - lo_), c_.end());
        std::vector<Rat> r(static_cast<size_t>(len), Rat(0));
        r[0] = Rat(1) / a[0];
        for (long long k = 1; k < len; ++k) {
            Rat acc(0);
            for (long long j = 1; j <= k; ++j)
                acc += a[static_cast<size_t>(j)] * r[static_cast<size_t>(k - j)];
            r[static_cast<size_t>(k)] = -acc / a[0];
        }
        return Series(-v, -v + len, std::move(r));
    }

    friend Series operator/(const Series& a, const Series& b) { return a * b.inverse(); }

    /// d/dy.
    Series derivative() const {
        std::vector<Rat> c(c_.size());
        for (long long k = lo_; k < hi_; ++k)
            c[static_cast<size_t>(k - lo_)] = Rat(k) * c_[static_cast<size_t>(k - lo_)];
        Series out(lo_ - 1, hi_ - 1, std::move(c));
        return out;
    }

    std::string str() const {
        std::string s;
        bool first = true;
        for (long long k = lo_; k < hi_; ++k) {
            const Rat& v = c_[static_cast<size_t>(k - lo_)];
            if (v == 0) continue;
            if (!first) s += " + ";
            s += rat_to_string(v) + "*y^" + std::to_string(k);
            first = false;
        }
        if (first) s += "0";
        s += " + O(y^" + std::to_string(hi_) + ")";
        return s;
    }

  private:
    long long lo_, hi_;
    std::vector<Rat> c_;
};

/// p(s) by Horner; window handling is inherited from the series ops.
/// Intended for s with nonnegative valuation (substitution into a chart).
inline Series poly_eval(const Poly& p, const Series& s) {
    long long hi = s.order();
    if (p.is_zero()) return Series::zero(hi);
    const auto& c = p.coeffs();
    Series acc = Series::constant(c.back(), hi);
    for (auto it = c.rbegin() + 1; it != c.rend(); ++it)
        acc = acc * s + Series::constant(*it, acc.order());
    return acc;
}

}  // namespace cycov
