#pragma once

#include <vector>

#include "cycov/cohomology.hpp"
#include "cycov/oracle.hpp"

namespace cycov {

namespace detail {

/// Crude per-point pole caps for the eigencomponents of sections of
/// omega^w(D), from valuation arithmetic alone: g(x) y^{-i} (dx)^w in
/// omega^w(D) forces
///   ord(g)    >= -(u + floor((c + w(e-1)) / e))          at a finite marked point,
///   ord_oo(g) >= -(u + floor((c + i beta - w(e+1)) / e)) at infinity.
struct BruteBounds {
    std::map<Coord, long long> t;  // finite marked point -> pole cap of g
    std::vector<long long> s;      // per-eigenspace cap at infinity
    long long t_sum = 0;           // degree of the common denominator
    long long required = 0;        // certifying numerator-degree bound
};

inline BruteBounds brute_bounds(const CyclicCoverSpec& spec, const CurveDivisor& d, long long w) {
    auto marked = finite_marked(spec, d);
    auto inf = inf_marked(spec, d);
    BruteBounds bb;
    for (const auto& [x, md] : marked) {
        long long t = md.u + floor_div(md.c + w * (md.e - 1), md.e);
        bb.t[x] = t;
        bb.t_sum += std::max<long long>(t, 0);
    }
    for (long long i = 0; i < spec.n(); ++i) {
        bb.s.push_back(inf.u + floor_div(inf.c + i * inf.beta - w * (inf.e + 1), inf.e));
        bb.required = std::max(bb.required, bb.t_sum + bb.s.back());
    }
    return bb;
}

inline Series series_int_pow(const Series& s, long long w) {
    Series acc = Series::constant(Rat(1), s.order());
    Series base = w < 0 ? s.inverse() : s;
    for (long long i = 0; i < (w < 0 ? -w : w); ++i) acc = acc * base;
    return acc;
}

}  // namespace detail

/// The numerator-degree bound that certifies completeness of the candidate
/// set used by brute_force_h0.
inline long long brute_force_required_bound(const CyclicCoverSpec& spec, const CurveDivisor& d,
                                            long long w = 0) {
    return detail::brute_bounds(spec, d, w).required;
}

/// Independent computation of h^0(omega^w(D)): enumerate candidates
/// x^s W(x)^{-1} y^{-i} (dx)^w for the explicit denominator W collecting the
/// crude pole caps, impose the pole constraints of D as exact linear
/// conditions (Newton expansions at simple branch points, Taylor
/// coefficients at multiple ones), and count the solution space. Must agree
/// with the eigenspace route wherever both are defined.
inline long long brute_force_h0(const CyclicCoverSpec& spec, const CurveDivisor& d,
                                long long search_bound, long long w = 0) {
    if (!d.effective()) throw SpecError("brute_force_h0 needs an effective divisor");
    if (w == 0 && search_bound < d.degree(spec))
        throw SpecError("brute_force_h0 needs search_bound >= deg D");
    auto bb = detail::brute_bounds(spec, d, w);
    if (search_bound < bb.required)
        throw SpecError("search bound too small to certify completeness; need >= " +
                        std::to_string(bb.required));

    auto marked = detail::finite_marked(spec, d);

    std::vector<std::pair<Rat, long long>> pole_roots;
    for (const auto& [x, t] : bb.t)
        if (t > 0) pole_roots.emplace_back(x.v, t);
    Poly denom = poly_from_roots(pole_roots);

    long long h0 = 0;
    for (long long i = 0; i < spec.n(); ++i) {
        // Candidates x^s, 0 <= s <= max_s; the cap encodes the infinity
        // constraint exactly (deg W - s >= -s_i).
        long long max_s = bb.t_sum + bb.s[static_cast<size_t>(i)];
        if (max_s < 0) continue;
        long long ncand = max_s + 1;
        RatMatrix rows;

        for (const auto& [x0, md] : marked) {
            long long t0 = std::max<long long>(bb.t.at(x0), 0);
            long long j = -1;
            for (long long jj = 0; jj < spec.m(); ++jj) {
                const auto& bp = spec.branch()[static_cast<size_t>(jj)];
                if (!bp.x.infinite && bp.x == x0) j = jj;
            }
            bool simple = (j >= 0 && spec.branch()[static_cast<size_t>(j)].mult == 1);

            if (simple) {
                // Coefficients of y^m must vanish for m < -(c + u e); the
                // window of the expanded candidate bounds the rows from below.
                long long m_high = -(md.c + md.u * md.e);
                long long order =
                    2 * md.e * t0 + i + std::max<long long>(2 * std::abs(w) * md.e, 0) + spec.n() + 6;
                for (int attempt = 0;; ++attempt) {
                    try {
                        LocalChart chart = local_expansion(spec, j, order);
                        Series winv = poly_eval(denom, chart.x).inverse();
                        Series frame = detail::series_int_pow(chart.dx, w);
                        Series xp = Series::constant(Rat(1), chart.x.order());
                        std::vector<Series> cand;
                        for (long long s = 0; s <= max_s; ++s) {
                            cand.push_back((xp * winv * frame).shifted(-i));
                            xp = xp * chart.x;
                        }
                        long long m_low = cand.front().lo();
                        for (long long m = m_low; m < m_high; ++m) {
                            std::vector<Rat> row(static_cast<size_t>(ncand));
                            for (long long s = 0; s <= max_s; ++s)
                                row[static_cast<size_t>(s)] = cand[static_cast<size_t>(s)].coeff(m);
                            rows.push_back(std::move(row));
                        }
                        break;
                    } catch (const TruncationError&) {
                        if (attempt >= 8) throw;
                        order *= 2;
                    }
                }
            } else {
                // ord_b(P) >= z, i.e. the Taylor coefficients of P at b of
                // order < z all vanish.
                long long z =
                    t0 + ceil_div(i * md.alpha - md.c - md.u * md.e - w * (md.e - 1), md.e);
                for (long long t = 0; t < z; ++t) {
                    std::vector<Rat> row(static_cast<size_t>(ncand), Rat(0));
                    Rat binom(1);
                    for (long long s = t; s <= max_s; ++s) {
                        if (s > t) binom = binom * Rat(s) / Rat(s - t);
                        Rat pw(1);
                        for (long long q = 0; q < s - t; ++q) pw *= x0.v;
                        row[static_cast<size_t>(s)] = binom * pw;
                    }
                    rows.push_back(std::move(row));
                }
            }
        }

        long long rank = rows.empty() ? 0 : matrix_rank(rows);
        h0 += ncand - rank;
    }
    return h0;
}

}  // namespace cycov
