#pragma once

#include <vector>

#include "cycov/cohomology.hpp"
#include "cycov/cover.hpp"
#include "cycov/matrix.hpp"
#include "cycov/series.hpp"

namespace cycov {

/// Exact local chart at the ramification point over a simple (multiplicity
/// one) finite branch point: y is a uniformizer there and x(y) solves
/// y^n = f(x(y)), x(0) = b.
struct LocalChart {
    long long branch_idx = -1;
    Rat b;
    Series x;   // x(y), exact on [0, order)
    Series dx;  // dx/dy
};

/// Newton iteration for x(y) over exact rationals. The residual
/// y^n - f(x(y)) is checked to vanish identically to the requested order,
/// and the leading behaviour x(y) = b + y^n / f'(b) + ... is asserted.
inline LocalChart local_expansion(const CyclicCoverSpec& spec, long long j, long long order) {
    const auto& bp = spec.branch().at(static_cast<size_t>(j));
    if (bp.x.infinite)
        throw SpecError("local expansion needs a finite branch point (normalize first)");
    if (bp.mult != 1)
        throw SpecError("local expansion needs a simple branch point (f'(b) != 0)");
    long long n = spec.n();
    if (order < n + 2) order = n + 2;
    const Poly& f = spec.f();
    Poly fp = f.derivative();
    Rat b = bp.x.v;
    if (fp(b) == 0) throw SpecError("branch points are not distinct: f'(b) = 0");

    Series x = Series::constant(b, order);
    Series yn = Series::monomial(n, order);
    for (int it = 0;; ++it) {
        Series residual = poly_eval(f, x) - yn;
        if (residual.is_zero_to_order()) break;
        if (it > 64) throw SpecError("Newton iteration failed to converge (invalid branch data)");
        x = x - residual / poly_eval(fp, x);
    }
    // Leading term certification: v(x - b) = n with coefficient 1/f'(b).
    Series diff = x - Series::constant(b, order);
    if (diff.valuation() != n || diff.coeff(n) != Rat(1) / fp(b))
        throw OracleMismatch("local chart has wrong leading behaviour");
    LocalChart chart;
    chart.branch_idx = j;
    chart.b = b;
    chart.dx = x.derivative();
    chart.x = std::move(x);
    return chart;
}

/// A mu_n-eigenvector form num/den * (dx)^w / y^i; the weight w is implied
/// by context (w=1 for the holomorphic basis, w=2 for quadratic
/// differentials).
struct EigenForm {
    long long i = 0;
    Poly num;
    Poly den = Poly::constant(Rat(1));
};

inline EigenForm operator*(const EigenForm& a, const EigenForm& b) {
    return EigenForm{a.i + b.i, a.num * b.num, a.den * b.den};
}

/// Explicit basis of H^0(C, omega^w(D)) in eigencoordinates.
inline std::vector<EigenForm> form_basis(const CyclicCoverSpec& spec, long long w,
                                         const CurveDivisor& d) {
    std::vector<EigenForm> out;
    for (const auto& es : section_spaces(spec, w, d)) {
        for (long long s = 0; s < es.dim; ++s) {
            EigenForm ef;
            ef.i = es.i;
            ef.num = poly_pow(Poly::x(), s) * es.zeros;
            ef.den = es.poles.is_zero() ? Poly::constant(Rat(1)) : es.poles;
            out.push_back(std::move(ef));
        }
    }
    return out;
}

/// Basis of the holomorphic 1-forms, certified before use: the element count
/// must equal the genus and every element must expand with nonnegative
/// valuation at the ramification points over simple branch points.
inline std::vector<EigenForm> holomorphic_basis(const CyclicCoverSpec& spec, bool certify = true) {
    auto basis = form_basis(spec, 1, CurveDivisor{});
    long long g = genus(spec);
    if (static_cast<long long>(basis.size()) != g)
        throw OracleMismatch("holomorphic basis count differs from the genus");
    if (certify) {
        long long order = 3 * spec.n() + 4;
        for (long long j = 0; j < spec.m(); ++j) {
            const auto& bp = spec.branch()[static_cast<size_t>(j)];
            if (bp.x.infinite || bp.mult != 1) continue;
            LocalChart chart = local_expansion(spec, j, order);
            for (const auto& ef : basis) {
                Series s = (poly_eval(ef.num, chart.x) / poly_eval(ef.den, chart.x)) * chart.dx;
                s = s.shifted(-ef.i);
                if (s.valuation() < 0)
                    throw OracleMismatch("holomorphic basis element has a pole at a ramification point");
            }
        }
    }
    return basis;
}

/// Cech representative of the Kodaira-Spencer class of moving branch point
/// b_j at unit speed, as the coefficient of d/dx on a punctured
/// neighbourhood of p_j:
///   rho_j = f(x) / ((x - b_j) f'(x)),
/// the implicit-function cocycle of the family y^n = f(x)(x-b_j-t)/(x-b_j).
/// rho_j(p_j) = 1, so the vector field rho_j d/dx has a pole of order
/// exactly e_j - 1 at p_j, matching the variable ramification divisor.
struct KSCocycle {
    long long branch_idx = -1;
    Poly num;
    Poly den;
};

inline std::vector<KSCocycle> ks_cocycle(const CyclicCoverSpec& spec) {
    std::vector<KSCocycle> out;
    Poly fp = spec.f().derivative();
    for (long long j : spec.moving_indices()) {
        const auto& bp = spec.branch()[static_cast<size_t>(j)];
        if (bp.x.infinite)
            throw SpecError("moving branch point at infinity: apply a Moebius normalization first");
        if (bp.mult != 1)
            throw SpecError("moving branch points must be simple");
        KSCocycle ks;
        ks.branch_idx = j;
        ks.num = spec.f();
        ks.den = Poly({-bp.x.v, Rat(1)}) * fp;
        out.push_back(std::move(ks));
    }
    return out;
}

/// Serre-duality pairing of the Kodaira-Spencer class with a quadratic
/// differential q = num/den * dx^2 / y^e: the contraction with rho_j d/dx
/// leaves the 1-form rho_j * num/den * dx / y^e, and the pairing is the sum
/// of its residues at the moving ramification points. Exact; truncation
/// orders escalate automatically until the residue is certified.
inline Rat pairing(const CyclicCoverSpec& spec, const EigenForm& q, const Rat& cocycle_scale = Rat(1),
                   long long min_order = 0) {
    Rat total(0);
    for (const auto& ks : ks_cocycle(spec)) {
        long long order = std::max(3 * spec.n() + q.i + 6, min_order);
        for (int attempt = 0;; ++attempt) {
            try {
                LocalChart chart = local_expansion(spec, ks.branch_idx, order);
                Series rho = poly_eval(ks.num, chart.x) / poly_eval(ks.den, chart.x);
                Series top = rho * poly_eval(q.num, chart.x) * chart.dx;
                Series den = poly_eval(q.den, chart.x);
                Series one_form = (top / den).shifted(-q.i);
                total += cocycle_scale * one_form.residue();
                break;
            } catch (const TruncationError&) {
                if (attempt >= 8) throw;
                order *= 2;
            }
        }
    }
    return total;
}

/// Convenience overload for monomial quadratic differentials x^c dx^2 / y^e.
inline Rat pairing(const CyclicCoverSpec& spec, long long c, long long e) {
    return pairing(spec, EigenForm{e, poly_pow(Poly::x(), c), Poly::constant(Rat(1))});
}

/// The g x g matrix B_{uv} = <xi, omega_u omega_v> of the cup product with
/// the Kodaira-Spencer class in the certified holomorphic basis. Symmetric
/// by construction; its kernel computes ker(cup xi).
struct CupMatrix {
    long long g = 0;
    RatMatrix entries;
};

inline CupMatrix cup_matrix(const CyclicCoverSpec& spec, const Rat& cocycle_scale = Rat(1)) {
    auto basis = holomorphic_basis(spec);
    long long g = static_cast<long long>(basis.size());
    CupMatrix b;
    b.g = g;
    b.entries.assign(static_cast<size_t>(g), std::vector<Rat>(static_cast<size_t>(g), Rat(0)));
    for (size_t u = 0; u < basis.size(); ++u)
        for (size_t v = u; v < basis.size(); ++v) {
            Rat val = pairing(spec, basis[u] * basis[v], cocycle_scale);
            b.entries[u][v] = val;
            b.entries[v][u] = val;
        }
    return b;
}

inline long long kernel_dimension(const CupMatrix& b) { return b.g - matrix_rank(b.entries); }

/// Exact check that H^0(omega(-D)) lies in ker B, elementwise, by expanding
/// each element in the holomorphic basis coordinates.
inline bool kernel_containment_check(const CyclicCoverSpec& spec, const CurveDivisor& d,
                                     const CupMatrix& b) {
    if (!d.effective()) throw SpecError("kernel_containment_check needs an effective divisor");
    auto omega_spaces = section_spaces(spec, 1, CurveDivisor{});
    auto sub_basis = form_basis(spec, 1, d.negated());
    // Offsets of each eigenspace block inside the holomorphic basis.
    std::vector<long long> offset(static_cast<size_t>(spec.n()) + 1, 0);
    for (const auto& es : omega_spaces) offset[static_cast<size_t>(es.i) + 1] = es.dim;
    for (size_t i = 1; i < offset.size(); ++i) offset[i] += offset[i - 1];

    for (const auto& ef : sub_basis) {
        const auto& es = omega_spaces[static_cast<size_t>(ef.i)];
        if (es.dim == 0)
            throw OracleMismatch("omega(-D) element in an empty eigenspace of omega");
        if (ef.den.degree() != 0)
            throw OracleMismatch("omega(-D) element unexpectedly has finite poles");
        // Coordinates: num must be divisible by the eigenspace's forced-zero
        // factor, and the quotient's coefficients are the coordinates.
        Poly zer = es.zeros.is_zero() ? Poly::constant(Rat(1)) : es.zeros;
        auto [quo, rem] = ef.num.divmod(zer);
        if (!rem.is_zero() || quo.degree() > es.max_power)
            throw OracleMismatch("omega(-D) element does not expand in the holomorphic basis");
        std::vector<Rat> coords(static_cast<size_t>(b.g), Rat(0));
        for (long long a = 0; a <= quo.degree(); ++a)
            coords[static_cast<size_t>(offset[static_cast<size_t>(ef.i)] + a)] = quo.coeff(a);
        if (!is_zero_vector(mat_vec(b.entries, coords))) return false;
    }
    return true;
}

}  // namespace cycov
