#pragma once

#include <limits>
#include <map>
#include <vector>

#include "cycov/cover.hpp"
#include "cycov/poly.hpp"

namespace cycov {

/// h^0(P^1, O(d)).
inline long long h0_p1(long long d) { return d >= 0 ? d + 1 : 0; }

/// Degrees d_0..d_{n-1} of the line-bundle summands of pi_* O_C twisted by
/// O(twist): d_i = twist - i * (sum a_j)/n + sum_j floor(i * a_j / n).
/// The trivial summand gives d_0 = twist.
inline std::vector<long long> pushforward_degrees(const CyclicCoverSpec& spec, long long twist = 0) {
    long long n = spec.n();
    long long total = 0;
    for (const auto& b : spec.branch()) total += b.mult;
    std::vector<long long> d(static_cast<size_t>(n));
    for (long long i = 0; i < n; ++i) {
        long long v = twist - i * (total / n);
        for (const auto& b : spec.branch()) v += floor_div(i * b.mult, n);
        d[static_cast<size_t>(i)] = v;
    }
    return d;
}

/// h^0(C, pi^* O_{P^1}(E)) for a divisor E on the base of degree deg_e,
/// computed through the pushforward splitting.
inline long long h0_pullback(const CyclicCoverSpec& spec, long long deg_e) {
    long long h = 0;
    for (long long d : pushforward_degrees(spec)) h += h0_p1(deg_e + d);
    return h;
}

/// One mu_n-eigenspace of H^0(C, omega^{w}(D)): sections g(x) y^{-i} (dx)^w
/// with g in an explicit function space on P^1.
struct EigenSpace {
    long long i = 0;
    std::map<Coord, long long> pole_bound;  // finite marked x -> max pole order of g (neg = forced zero)
    long long pole_bound_inf = 0;           // max pole order of g at infinity
    long long dim = 0;
    // Basis of the g-space when dim > 0: x^s * zeros / poles, 0 <= s <= max_power.
    Poly zeros;   // forced vanishing factors
    Poly poles;   // allowed denominator
    long long max_power = -1;
};

namespace detail {

struct MarkedData {
    long long e = 1;        // ramification index of x over this base point
    long long alpha = 0;    // valuation of y at points over it
    long long c = 0;        // divisor coefficient on the ramification point
    long long u = 0;        // pullback coefficient
    bool branch = false;
};

/// Collects per-base-point local data for the divisor D (finite points only;
/// infinity is handled separately).
inline std::map<Coord, MarkedData> finite_marked(const CyclicCoverSpec& spec, const CurveDivisor& d) {
    std::map<Coord, MarkedData> m;
    for (long long j = 0; j < spec.m(); ++j) {
        const auto& b = spec.branch()[static_cast<size_t>(j)];
        if (b.x.infinite) continue;
        MarkedData md;
        md.e = spec.ram_index(j);
        md.alpha = spec.y_order(j);
        md.branch = true;
        m[b.x] = md;
    }
    for (const auto& [j, c] : d.ram) {
        if (!spec.totally_ramified(j))
            throw SpecError("divisor supported over a branch point that is not totally ramified");
        const auto& b = spec.branch()[static_cast<size_t>(j)];
        if (b.x.infinite) continue;
        m[b.x].c = c;
    }
    for (const auto& [x, u] : d.pullback) {
        if (x.infinite) continue;
        auto it = m.find(x);
        if (it == m.end()) m[x] = MarkedData{1, 0, 0, u, false};
        else it->second.u = u;
    }
    return m;
}

struct InfData {
    long long e = 1;
    long long beta = 0;  // pole order of y at points over infinity
    long long c = 0;
    long long u = 0;
};

inline InfData inf_marked(const CyclicCoverSpec& spec, const CurveDivisor& d) {
    InfData inf;
    inf.e = spec.ram_index_inf();
    inf.beta = spec.y_pole_inf();
    if (auto j = spec.inf_branch_index()) {
        auto it = d.ram.find(*j);
        if (it != d.ram.end()) inf.c = it->second;
    }
    auto it = d.pullback.find(Coord::infinity());
    if (it != d.pullback.end()) inf.u = it->second;
    return inf;
}

}  // namespace detail

/// Eigenspace decomposition of H^0(C, omega_C^{(x) w} (D)) for divisors D
/// supported on totally ramified points plus pullbacks.
///
/// In the i-th eigenspace a section is g(x) y^{-i} (dx)^w; bounding its
/// valuation at every point of C reduces to pole bounds for g on P^1:
///   finite marked b: ord_b(g) >= -u - floor((c + w(e-1) - i*alpha) / e)
///   infinity:        ord_oo(g) >= -u - floor((c + i*beta - w(e+1)) / e)
/// and the space of such g is an explicit h^0 on P^1.
inline std::vector<EigenSpace> section_spaces(const CyclicCoverSpec& spec, long long w,
                                              const CurveDivisor& d) {
    auto marked = detail::finite_marked(spec, d);
    auto inf = detail::inf_marked(spec, d);
    std::vector<EigenSpace> out;
    for (long long i = 0; i < spec.n(); ++i) {
        EigenSpace es;
        es.i = i;
        long long deg_total = 0;
        for (const auto& [x, md] : marked) {
            long long M = md.u + floor_div(md.c + w * (md.e - 1) - i * md.alpha, md.e);
            es.pole_bound[x] = M;
            deg_total += M;
        }
        es.pole_bound_inf = inf.u + floor_div(inf.c + i * inf.beta - w * (inf.e + 1), inf.e);
        deg_total += es.pole_bound_inf;
        es.dim = std::max<long long>(0, deg_total + 1);
        if (es.dim > 0) {
            std::vector<std::pair<Rat, long long>> zero_roots, pole_roots;
            for (const auto& [x, M] : es.pole_bound) {
                if (M < 0) zero_roots.emplace_back(x.v, -M);
                if (M > 0) pole_roots.emplace_back(x.v, M);
            }
            es.zeros = poly_from_roots(zero_roots);
            es.poles = poly_from_roots(pole_roots);
            es.max_power = deg_total;
        }
        out.push_back(std::move(es));
    }
    return out;
}

/// h^0(C, omega^{w}(D)) by eigenspace reduction.
inline long long h0_line_bundle(const CyclicCoverSpec& spec, long long w, const CurveDivisor& d) {
    long long h = 0;
    for (const auto& es : section_spaces(spec, w, d)) h += es.dim;
    return h;
}

struct LinearSeriesReport {
    long long h0 = 0;
    long long r = -1;        // dim |D| = h0 - 1
    long long cliff = 0;     // deg D - 2 r(D), reported raw
    bool rigid = false;      // h0 == 1
};

/// Exact h^0(O_C(D)) for effective D supported on totally ramified points
/// plus pullbacks, with the derived linear-series invariants.
inline LinearSeriesReport h0_ram_divisor(const CyclicCoverSpec& spec, const CurveDivisor& d) {
    if (!d.effective()) throw SpecError("h0_ram_divisor needs an effective divisor");
    LinearSeriesReport rep;
    rep.h0 = h0_line_bundle(spec, 0, d);
    rep.r = rep.h0 - 1;
    rep.cliff = d.degree(spec) - 2 * rep.r;
    rep.rigid = (rep.h0 == 1);
    return rep;
}

/// dim H^0(C, T_C(D)); zero is the minimal-support hypothesis for the
/// deformations we certify.
inline long long h0_twisted_tangent(const CyclicCoverSpec& spec, const CurveDivisor& d) {
    if (!d.effective()) throw SpecError("h0_twisted_tangent needs an effective divisor");
    return h0_line_bundle(spec, -1, d);
}

/// Dimension of the span of D inside the bicanonical space P^{3g-4}:
/// (3g-4) - h^0(omega^2(-D)), which must equal deg D - 1 for deg D < 2g-2.
inline long long span_dim(const CyclicCoverSpec& spec, const CurveDivisor& d) {
    long long g = genus(spec);
    if (g < 2) throw SpecError("span_dim needs genus >= 2");
    if (!d.effective()) throw SpecError("span_dim needs an effective divisor");
    long long deg = d.degree(spec);
    if (deg >= 2 * g - 2) throw SpecError("span_dim needs deg D < 2g-2");
    long long s = (3 * g - 4) - h0_line_bundle(spec, 2, d.negated());
    if (s != deg - 1)
        throw OracleMismatch("span dimension disagrees with Riemann-Roch value deg D - 1");
    return s;
}

/// Whether omega^2(-D) is base point free. Degree forces this for
/// deg D <= 2g-4; otherwise the base locus can only sit over branch points,
/// the support of the pullback part, or infinity, and each of those is
/// tested exactly.
inline bool base_point_free_bicanonical(const CyclicCoverSpec& spec, const CurveDivisor& d) {
    long long g = genus(spec);
    if (g < 2) throw SpecError("base_point_free_bicanonical needs genus >= 2");
    if (!d.effective()) throw SpecError("base_point_free_bicanonical needs an effective divisor");
    long long deg = d.degree(spec);
    long long h0 = h0_line_bundle(spec, 2, d.negated());
    if (h0 == 0) return false;
    if (deg <= 2 * g - 4) return true;

    auto spaces = section_spaces(spec, 2, d.negated());
    auto marked = detail::finite_marked(spec, d);
    auto inf = detail::inf_marked(spec, d);

    // Minimal valuation attained by sections at points over x0; on P^1 every
    // nonzero complete system attains its extreme order at every point, so
    // the minimum runs over eigenspaces of positive dimension.
    auto has_base_point_over = [&](const Coord& x0) {
        long long forced;  // coefficient of the bundle twist -D at such a point
        long long best = std::numeric_limits<long long>::max();
        if (x0.infinite) {
            forced = inf.c + inf.u * inf.e;
            for (const auto& es : spaces) {
                if (es.dim == 0) continue;
                long long v = -inf.e * es.pole_bound_inf + es.i * inf.beta - 2 * (inf.e + 1);
                best = std::min(best, v);
            }
        } else {
            auto md = marked.at(x0);
            forced = md.c + md.u * md.e;
            for (const auto& es : spaces) {
                if (es.dim == 0) continue;
                long long v = -md.e * es.pole_bound.at(x0) - es.i * md.alpha + 2 * (md.e - 1);
                best = std::min(best, v);
            }
        }
        return best > forced;  // every section vanishes beyond the forced order
    };

    for (const auto& [x, md] : marked)
        if (has_base_point_over(x)) return false;
    if (has_base_point_over(Coord::infinity())) return false;
    return true;
}

struct IncidenceDims {
    long long dim_x_d;        // 2d - 1
    long long dim_degenerate; // 2d - 2
};

inline IncidenceDims incidence_dims(long long g, long long d) {
    if (d < 1 || d > g) throw SpecError("incidence_dims needs 1 <= d <= g");
    return {2 * d - 1, 2 * d - 2};
}

}  // namespace cycov
