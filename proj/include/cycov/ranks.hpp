#pragma once

#include <numeric>
#include <optional>

#include "cycov/cohomology.hpp"
#include "cycov/cover.hpp"
#include "cycov/oracle.hpp"

namespace cycov {

/// dim ker(cup xi) bounds for a deformation minimally supported on a divisor
/// of degree deg_d with r(D) = r_d:
///   g - (deg D - r(D))  <=  dim ker  <=  g - Cliff(D).
/// For rigid D (r = 0) the two collapse to g - deg D.
struct KernelBounds {
    long long lower = 0;
    long long upper = 0;
    bool equal = false;
};

inline KernelBounds kernel_bounds(long long g, long long deg_d, long long r_d) {
    if (deg_d < 0 || r_d < 0) throw SpecError("kernel_bounds needs deg D >= 0 and r(D) >= 0");
    KernelBounds kb;
    kb.lower = g - (deg_d - r_d);
    kb.upper = g - (deg_d - 2 * r_d);
    kb.equal = (r_d == 0);
    return kb;
}

inline long long rigid_family_rank(long long g, long long d) {
    if (d <= 0 || d > g) throw SpecError("rigid_family_rank needs 0 < d <= g");
    return g - d;
}

struct RankReport {
    long long n = 0, m = 0, k = 0;
    long long g = 0;
    long long rk_K = 0;
    long long rk_U_upper = 0;                  // floor((g+1)/2)
    std::optional<long long> rk_U_exact;       // only when equality is certified
    bool strict_inclusion = false;             // certified U strictly inside K
    long long singular_fibers = 0;             // k(m-1)
    long long base_genus = 0;
    bool monodromy_finite_claimed = true;
    bool non_isotrivial = true;
    bool certified_by_oracle = false;
};

/// Genus of the base curve B -> P^1, the degree-n cyclic cover branched over
/// the k(m-1) collision points plus k * infinity.
inline long long base_curve_genus(long long n, long long m, long long k) {
    std::vector<std::vector<long long>> profile(static_cast<size_t>(k * (m - 1)),
                                                std::vector<long long>{n});
    long long gc = std::gcd(n, k);
    if (gc != n) {
        std::vector<long long> over_inf(static_cast<size_t>(gc), n / gc);
        profile.push_back(over_inf);
    }
    return riemann_hurwitz(n, 0, profile);
}

/// The rank numerology of the family obtained by moving k of the m branch
/// points of a reduced degree-n cyclic cover.
inline RankReport cyclic_rank_report(long long n, long long m, long long k) {
    if (n < 2) throw SpecError("violated: n >= 2");
    if (m % n != 0) throw SpecError("violated: n must divide m");
    if (k < 1) throw SpecError("violated: k >= 1 (some branch point must move)");
    if (!(k * n < m)) throw SpecError("violated: k < m/n");
    long long g = (n - 1) * (m - 2) / 2;
    if (((n - 1) * (m - 2)) % 2 != 0) throw SpecError("violated: (n-1)(m-2) must be even");
    if (g < 2) throw SpecError("violated: genus >= 2");

    RankReport rep;
    rep.n = n;
    rep.m = m;
    rep.k = k;
    rep.g = g;
    rep.rk_K = g - (n - 1) * k;
    if (2 * rep.rk_K != (n - 1) * (m - 2 - 2 * k))
        throw OracleMismatch("rank identity g-(n-1)k = (n-1)(m-2-2k)/2 failed");
    rep.rk_U_upper = floor_div(g + 1, 2);
    rep.strict_inclusion = 4 * (n - 1) * k < m * n - 2 * n - m;  // k < (g-1)/(2(n-1))
    if (rep.strict_inclusion && !(rep.rk_U_upper < rep.rk_K))
        throw OracleMismatch("strict inclusion criterion inconsistent with rank bound");
    rep.singular_fibers = k * (m - 1);
    rep.base_genus = base_curve_genus(n, m, k);
    rep.monodromy_finite_claimed = true;
    rep.non_isotrivial = true;
    return rep;
}

/// Numbers of the 4-point cyclic coverings in the standard case
/// (gcd(n,6) = 1): three simple branch points, one of multiplicity n-3.
/// Here U = K and the flat rank attains the lower bound
/// floor((2g+1)/3) resp. floor((2g-2)/3).
struct CdStandardReport {
    long long n = 0;
    long long g = 0;         // n - 1
    long long q = 0;         // irregularity = genus of the base = (n-1)/2
    long long r_d = 0;       // r((n-1)P) = floor(n/3)
    long long rk_K_upper = 0;  // 2 r(D)
    long long rk_U = 0;        // = rk_K, exact
    long long h0_nP = 0;       // floor(n/3) + 2
};

inline CdStandardReport cd_standard_report(long long n) {
    if (n < 4) throw SpecError("violated: n >= 4");
    if (std::gcd(n, static_cast<long long>(6)) != 1)
        throw SpecError("violated: gcd(n, 6) = 1 (standard case)");
    CdStandardReport rep;
    rep.n = n;
    rep.g = n - 1;
    rep.q = (n - 1) / 2;
    rep.r_d = n / 3;
    rep.rk_K_upper = 2 * rep.r_d;
    long long g = rep.g;
    rep.rk_U = (n % 3 == 1) ? floor_div(2 * g + 1, 3) : floor_div(2 * g - 2, 3);
    rep.h0_nP = rep.r_d + 2;
    if (rep.rk_U > rep.rk_K_upper)
        throw OracleMismatch("flat rank exceeds the kernel rank bound 2 r(D)");
    return rep;
}

/// The curve of the standard 4-point family: y^n = x^{n-3}(x-1)(x-2) with
/// the moving branch point at 2 and the remaining branch at infinity.
inline CyclicCoverSpec cd_cover_spec(long long n) {
    if (n < 4) throw SpecError("violated: n >= 4");
    std::vector<BranchPoint> branch;
    branch.push_back({Coord::at(Rat(0)), n - 3, false});
    branch.push_back({Coord::at(Rat(1)), 1, false});
    branch.push_back({Coord::at(Rat(2)), 1, true});
    branch.push_back({Coord::infinity(), 1, false});
    return CyclicCoverSpec(n, std::move(branch));
}

/// Reduced cover with branch points given explicitly, or seeded at
/// 0, 1, ..., m-1; the first k points move.
inline CyclicCoverSpec reduced_cover_spec(long long n, long long m, long long k,
                                          const std::vector<Rat>& xs = {}) {
    if (k < 0 || k > m) throw SpecError("moving count must satisfy 0 <= k <= m");
    if (!xs.empty() && static_cast<long long>(xs.size()) != m)
        throw SpecError("branch list length must equal m");
    std::vector<BranchPoint> branch;
    for (long long j = 0; j < m; ++j) {
        Rat x = xs.empty() ? Rat(j) : xs[static_cast<size_t>(j)];
        branch.push_back({Coord::at(x), 1, j < k});
    }
    return CyclicCoverSpec(n, std::move(branch));
}

/// Full certification pipeline for a concrete reduced cover: the variable
/// ramification divisor must be rigid (h^0 = 1) and minimal (H^0(T_C(D))=0),
/// and the kernel dimension of the exact cup-product matrix must reproduce
/// the formula rank. A disagreement there is a hard error: it would falsify
/// the implementation, not the input.
inline RankReport certify_rank(const CyclicCoverSpec& spec) {
    if (!spec.is_reduced())
        throw SpecError("certify_rank handles reduced covers; use the components directly otherwise");
    long long k = spec.moving_count();
    if (k == 0) throw SpecError("violated: the family must move at least one branch point");
    RankReport rep = cyclic_rank_report(spec.n(), spec.m(), k);

    CurveDivisor d = variable_ramification_divisor(spec);
    auto series_rep = h0_ram_divisor(spec, d);
    if (!series_rep.rigid)
        throw SpecError("rigidity certification failed: h0(O(D)) = " +
                        std::to_string(series_rep.h0));
    if (h0_twisted_tangent(spec, d) != 0)
        throw SpecError("minimality certification failed: H0(T_C(D)) != 0");

    long long deg = d.degree(spec);
    auto kb = kernel_bounds(rep.g, deg, series_rep.r);
    if (!(kb.equal && kb.lower == rep.rk_K))
        throw OracleMismatch("kernel bounds do not collapse onto the formula rank");

    // The residue oracle expands at finite moving points; the kernel
    // dimension is a Moebius invariant, so normalize if infinity moves.
    CyclicCoverSpec oracle_spec = apply_mobius(spec, normalize_moving_finite(spec));
    CurveDivisor oracle_d = variable_ramification_divisor(oracle_spec);
    CupMatrix b = cup_matrix(oracle_spec);
    long long oracle_dim = kernel_dimension(b);
    if (oracle_dim != rep.rk_K)
        throw OracleMismatch("cup-product kernel dimension " + std::to_string(oracle_dim) +
                             " disagrees with formula rank " + std::to_string(rep.rk_K));
    if (!kernel_containment_check(oracle_spec, oracle_d, b))
        throw OracleMismatch("H0(omega(-D)) is not contained in the cup-product kernel");
    rep.certified_by_oracle = true;
    return rep;
}

}  // namespace cycov
