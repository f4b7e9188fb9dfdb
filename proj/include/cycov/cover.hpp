#pragma once

#include <compare>
#include <map>
#include <numeric>
#include <optional>
#include <vector>

#include "cycov/poly.hpp"
#include "cycov/rational.hpp"

namespace cycov {

/// A point of P^1 with exact rational coordinate, or the point at infinity.
struct Coord {
    bool infinite = false;
    Rat v = 0;

    static Coord infinity() { return Coord{true, Rat(0)}; }
    static Coord at(const Rat& x) { return Coord{false, x}; }

    friend bool operator==(const Coord& a, const Coord& b) {
        return a.infinite == b.infinite && (a.infinite || a.v == b.v);
    }
    friend bool operator<(const Coord& a, const Coord& b) {
        if (a.infinite != b.infinite) return b.infinite;  // finite sorts first
        if (a.infinite) return false;
        return a.v < b.v;
    }
    std::string str() const { return infinite ? "inf" : rat_to_string(v); }
    static Coord parse(std::string_view s) {
        if (s == "inf" || s == "oo" || s == "infinity") return infinity();
        return at(rat_from_string(s));
    }
};

struct BranchPoint {
    Coord x;
    long long mult = 1;   // multiplicity of the branch divisor at x
    bool moving = false;  // whether this point varies in the family
};

struct RamificationPoint {
    long long over;           // index into the branch list
    long long index;          // ramification index e
    long long local_y_order;  // valuation of y at the point
};

/// The superelliptic curve y^n = f(x) = prod (x - b_j)^{a_j} together with
/// the branched-cover data of x : C -> P^1. Immutable after construction;
/// construction validates the branch data.
class CyclicCoverSpec {
  public:
    CyclicCoverSpec(long long n, std::vector<BranchPoint> branch)
        : n_(n), branch_(std::move(branch)) {
        if (n_ < 2) throw SpecError("covering degree must satisfy n >= 2");
        if (branch_.empty()) throw SpecError("branch divisor is empty");
        long long total = 0;
        long long inf_count = 0;
        for (size_t j = 0; j < branch_.size(); ++j) {
            if (branch_[j].mult < 1) throw SpecError("branch multiplicity must be >= 1");
            total += branch_[j].mult;
            if (branch_[j].x.infinite) ++inf_count;
            for (size_t l = j + 1; l < branch_.size(); ++l)
                if (branch_[j].x == branch_[l].x)
                    throw SpecError("branch point locations must be pairwise distinct");
        }
        if (inf_count > 1) throw SpecError("at most one branch point at infinity");
        if (total % n_ != 0)
            throw SpecError("n must divide the degree of the branch divisor (n | sum a_j)");
        std::vector<std::pair<Rat, long long>> roots;
        for (const auto& b : branch_)
            if (!b.x.infinite) roots.emplace_back(b.x.v, b.mult);
        f_ = poly_from_roots(roots);
    }

    long long n() const { return n_; }
    const std::vector<BranchPoint>& branch() const { return branch_; }
    long long m() const { return static_cast<long long>(branch_.size()); }
    const Poly& f() const { return f_; }
    long long deg_f() const { return std::max<long long>(f_.degree(), 0); }

    /// Multiplicity of the branch divisor at infinity (0 when unbranched there).
    long long inf_mult() const {
        for (const auto& b : branch_)
            if (b.x.infinite) return b.mult;
        return 0;
    }

    bool is_reduced() const {
        for (const auto& b : branch_)
            if (b.mult != 1) return false;
        return true;
    }

    std::vector<long long> moving_indices() const {
        std::vector<long long> out;
        for (size_t j = 0; j < branch_.size(); ++j)
            if (branch_[j].moving) out.push_back(static_cast<long long>(j));
        return out;
    }
    long long moving_count() const { return static_cast<long long>(moving_indices().size()); }

    /// Number of points of C over branch point j.
    long long fiber_size(long long j) const { return std::gcd(n_, branch_.at(j).mult); }
    /// Ramification index over branch point j.
    long long ram_index(long long j) const { return n_ / fiber_size(j); }
    /// Valuation of y at any point over branch point j.
    long long y_order(long long j) const { return branch_.at(j).mult / fiber_size(j); }
    bool totally_ramified(long long j) const { return fiber_size(j) == 1; }

    // Infinity, seen as a (possibly unbranched) fiber of x.
    long long fiber_size_inf() const { return std::gcd(n_, inf_mult()); }  // gcd(n,0) = n
    long long ram_index_inf() const { return n_ / fiber_size_inf(); }
    /// -v(y) at any point over infinity.
    long long y_pole_inf() const { return deg_f() / fiber_size_inf(); }
    std::optional<long long> inf_branch_index() const {
        for (size_t j = 0; j < branch_.size(); ++j)
            if (branch_[j].x.infinite) return static_cast<long long>(j);
        return std::nullopt;
    }

    /// One ramification point per totally ramified branch point.
    std::vector<RamificationPoint> ramification_points() const {
        std::vector<RamificationPoint> out;
        for (long long j = 0; j < m(); ++j)
            if (totally_ramified(j))
                out.push_back({j, ram_index(j), y_order(j)});
        return out;
    }

  private:
    long long n_;
    std::vector<BranchPoint> branch_;
    Poly f_;
};

/// Effective (or signed, for twisting) divisor on C of the shape we handle:
/// multiples of rational points over totally ramified branch points, plus
/// the pullback of a divisor on P^1.
struct CurveDivisor {
    std::map<long long, long long> ram;  // branch index -> coefficient
    std::map<Coord, long long> pullback; // base point -> coefficient on P^1

    CurveDivisor& add_ram(long long branch_idx, long long c) {
        if (c != 0) ram[branch_idx] += c;
        if (ram.count(branch_idx) && ram[branch_idx] == 0) ram.erase(branch_idx);
        return *this;
    }
    CurveDivisor& add_pullback(const Coord& x, long long c) {
        if (c != 0) pullback[x] += c;
        if (pullback.count(x) && pullback[x] == 0) pullback.erase(x);
        return *this;
    }

    long long degree(const CyclicCoverSpec& spec) const {
        long long d = 0;
        for (const auto& [j, c] : ram) {
            if (!spec.totally_ramified(j))
                throw SpecError("divisor supported over a branch point that is not totally ramified");
            d += c;
        }
        for (const auto& [x, c] : pullback) d += spec.n() * c;
        return d;
    }

    bool effective() const {
        for (const auto& [j, c] : ram)
            if (c < 0) return false;
        for (const auto& [x, c] : pullback)
            if (c < 0) return false;
        return true;
    }

    CurveDivisor negated() const {
        CurveDivisor out;
        for (const auto& [j, c] : ram) out.ram[j] = -c;
        for (const auto& [x, c] : pullback) out.pullback[x] = -c;
        return out;
    }

    friend CurveDivisor operator+(const CurveDivisor& a, const CurveDivisor& b) {
        CurveDivisor out = a;
        for (const auto& [j, c] : b.ram) out.add_ram(j, c);
        for (const auto& [x, c] : b.pullback) out.add_pullback(x, c);
        return out;
    }

    /// a <= b coefficientwise (over the union of supports).
    static bool leq(const CurveDivisor& a, const CurveDivisor& b) {
        for (const auto& [j, c] : a.ram) {
            auto it = b.ram.find(j);
            if (c > (it == b.ram.end() ? 0 : it->second)) return false;
        }
        for (const auto& [x, c] : a.pullback) {
            auto it = b.pullback.find(x);
            if (c > (it == b.pullback.end() ? 0 : it->second)) return false;
        }
        return true;
    }
};

/// Genus by Riemann–Hurwitz over P^1:
/// 2g - 2 = -2n + sum_j fiber_size(j) * (e_j - 1).
inline long long genus(const CyclicCoverSpec& spec) {
    long long rh = -2 * spec.n();
    for (long long j = 0; j < spec.m(); ++j)
        rh += spec.fiber_size(j) * (spec.ram_index(j) - 1);
    if (rh % 2 != 0) throw SpecError("inconsistent ramification data: 2g-2 is odd");
    long long g = rh / 2 + 1;
    if (g < 0) throw SpecError("inconsistent ramification data: negative genus");
    return g;
}

/// R = sum (e_j - 1) p_j over all ramification points. Requires every branch
/// point (and infinity, if branched) to be totally ramified so that the
/// points are individually addressable.
inline CurveDivisor ramification_divisor(const CyclicCoverSpec& spec) {
    CurveDivisor r;
    for (long long j = 0; j < spec.m(); ++j) {
        if (!spec.totally_ramified(j))
            throw SpecError("ramification divisor needs totally ramified branch points");
        r.add_ram(j, spec.ram_index(j) - 1);
    }
    return r;
}

/// D = sum over moving branch points of (e_j - 1) p_j; in the reduced case
/// D = (n-1)(p_1 + ... + p_k).
inline CurveDivisor variable_ramification_divisor(const CyclicCoverSpec& spec) {
    auto moving = spec.moving_indices();
    if (moving.empty())
        throw SpecError("no moving branch points: the family is isotrivial");
    CurveDivisor d;
    for (long long j : moving) {
        if (!spec.totally_ramified(j))
            throw SpecError("moving branch points must be totally ramified");
        d.add_ram(j, spec.ram_index(j) - 1);
    }
    return d;
}

/// Riemann–Hurwitz for an abstract cover: each profile entry is the cycle
/// type (a partition of deg) over one branch point.
inline long long riemann_hurwitz(long long deg, long long base_genus,
                                 const std::vector<std::vector<long long>>& profile) {
    if (deg < 1) throw SpecError("cover degree must be >= 1");
    long long rh = deg * (2 * base_genus - 2);
    for (const auto& part : profile) {
        long long sum = 0;
        for (long long piece : part) {
            if (piece < 1) throw SpecError("cycle type entries must be >= 1");
            sum += piece;
            rh += piece - 1;
        }
        if (sum != deg) throw SpecError("cycle type is not a partition of the degree");
    }
    if (rh % 2 != 0) throw SpecError("inconsistent profile: 2g-2 is odd");
    long long g = rh / 2 + 1;
    if (g < 0) throw SpecError("inconsistent profile: negative genus");
    return g;
}

/// x -> (a x + b) / (c x + d), ad - bc != 0, acting on P^1(Q).
struct Mobius {
    Rat a = 1, b = 0, c = 0, d = 1;

    void check() const {
        if (a * d - b * c == 0) throw SpecError("degenerate Moebius map");
    }
    Coord apply(const Coord& p) const {
        check();
        if (p.infinite) {
            if (c == 0) return Coord::infinity();
            return Coord::at(a / c);
        }
        Rat den = c * p.v + d;
        if (den == 0) return Coord::infinity();
        return Coord::at((a * p.v + b) / den);
    }
    Mobius inverse() const {
        check();
        return Mobius{d, -b, -c, a};
    }
};

/// The unique map sending (p, q, r) to (0, 1, inf).
inline Mobius mobius_to_standard(const Coord& p, const Coord& q, const Coord& r) {
    if (p == q || q == r || p == r) throw SpecError("Moebius normalization needs distinct points");
    // Cross-ratio map (x - p)(q - r) / ((x - r)(q - p)), specialized at infinities.
    if (p.infinite) return Mobius{Rat(0), q.v - r.v, Rat(1), -r.v};        // (q-r)/(x-r)
    if (q.infinite) return Mobius{Rat(1), -p.v, Rat(1), -r.v};             // (x-p)/(x-r)
    if (r.infinite) return Mobius{Rat(1), -p.v, Rat(0), q.v - p.v};        // (x-p)/(q-p)
    return Mobius{q.v - r.v, -p.v * (q.v - r.v), q.v - p.v, -r.v * (q.v - p.v)};
}

/// Transport of the whole spec along a Moebius change of coordinate on P^1.
inline CyclicCoverSpec apply_mobius(const CyclicCoverSpec& spec, const Mobius& mu) {
    std::vector<BranchPoint> branch = spec.branch();
    for (auto& b : branch) b.x = mu.apply(b.x);
    return CyclicCoverSpec(spec.n(), std::move(branch));
}

/// A coordinate change making every moving branch point finite (identity if
/// none is at infinity). Picks a rational value not colliding with branches.
inline Mobius normalize_moving_finite(const CyclicCoverSpec& spec) {
    bool inf_moving = false;
    for (const auto& b : spec.branch())
        if (b.x.infinite && b.moving) inf_moving = true;
    if (!inf_moving) return Mobius{};
    // x -> 1/(x - t) sends infinity to 0 and t to infinity; choose t rational
    // and distinct from every finite branch coordinate.
    Rat t(0);
    auto collides = [&](const Rat& v) {
        for (const auto& b : spec.branch())
            if (!b.x.infinite && b.x.v == v) return true;
        return false;
    };
    while (collides(t)) t += 1;
    return Mobius{Rat(0), Rat(1), Rat(1), -t};
}

}  // namespace cycov
