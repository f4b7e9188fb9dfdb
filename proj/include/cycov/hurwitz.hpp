#pragma once

#include <map>
#include <queue>
#include <set>
#include <string>
#include <vector>

#include "cycov/cover.hpp"
#include "cycov/permutation.hpp"

namespace cycov {

/// A branched cover of P^1 in the Riemann-existence dictionary: a tuple of
/// permutations with product one whose group acts transitively. The first
/// moving_count positions are the moving branch points.
struct HurwitzTuple {
    int symbols = 0;
    std::vector<Perm> sigmas;
    int moving_count = 0;

    friend bool operator==(const HurwitzTuple& a, const HurwitzTuple& b) {
        return a.symbols == b.symbols && a.sigmas == b.sigmas;
    }
    friend bool operator<(const HurwitzTuple& a, const HurwitzTuple& b) {
        return a.sigmas < b.sigmas;
    }
};

inline bool product_one(const HurwitzTuple& t) {
    Perm acc(t.symbols);
    for (const auto& s : t.sigmas) acc = acc * s;
    return acc.is_identity();
}

inline bool transitive(const HurwitzTuple& t) {
    if (t.symbols <= 0) return false;
    std::vector<bool> seen(static_cast<size_t>(t.symbols), false);
    std::vector<int> stack{0};
    seen[0] = true;
    int count = 1;
    while (!stack.empty()) {
        int v = stack.back();
        stack.pop_back();
        for (const auto& s : t.sigmas) {
            for (int w : {s(v), s.inverse()(v)}) {
                if (!seen[static_cast<size_t>(w)]) {
                    seen[static_cast<size_t>(w)] = true;
                    ++count;
                    stack.push_back(w);
                }
            }
        }
    }
    return count == t.symbols;
}

inline bool validate(const HurwitzTuple& t) { return product_one(t) && transitive(t); }

/// Genus by Riemann-Hurwitz from the cycle types over base genus 0.
inline long long genus_of(const HurwitzTuple& t) {
    if (!validate(t)) throw SpecError("invalid tuple: product-one or transitivity fails");
    std::vector<std::vector<long long>> profile;
    for (const auto& s : t.sigmas) profile.push_back(s.cycle_type());
    return riemann_hurwitz(t.symbols, 0, profile);
}

/// m copies of the standard n-cycle; the monodromy of y^n = f(x) with m
/// simple branch points. Needs n | m for the product to close up.
inline HurwitzTuple cyclic_tuple(long long n, long long m, int moving_count = 0) {
    if (n < 2) throw SpecError("violated: n >= 2");
    if (m % n != 0) throw SpecError("violated: n must divide m");
    HurwitzTuple t;
    t.symbols = static_cast<int>(n);
    t.sigmas.assign(static_cast<size_t>(m), Perm::full_cycle(static_cast<int>(n)));
    t.moving_count = moving_count;
    return t;
}

/// Elementary braid move at position i (1-based, 1 <= i < m):
/// (sigma_i, sigma_{i+1}) -> (sigma_i sigma_{i+1} sigma_i^{-1}, sigma_i).
inline HurwitzTuple hurwitz_move(const HurwitzTuple& t, int i) {
    int m = static_cast<int>(t.sigmas.size());
    if (i < 1 || i >= m) throw SpecError("move index out of range 1 <= i < m");
    HurwitzTuple out = t;
    const Perm& a = t.sigmas[static_cast<size_t>(i - 1)];
    const Perm& b = t.sigmas[static_cast<size_t>(i)];
    out.sigmas[static_cast<size_t>(i - 1)] = a * b * a.inverse();
    out.sigmas[static_cast<size_t>(i)] = a;
    return out;
}

inline HurwitzTuple hurwitz_move_inverse(const HurwitzTuple& t, int i) {
    int m = static_cast<int>(t.sigmas.size());
    if (i < 1 || i >= m) throw SpecError("move index out of range 1 <= i < m");
    HurwitzTuple out = t;
    const Perm& a = t.sigmas[static_cast<size_t>(i - 1)];
    const Perm& b = t.sigmas[static_cast<size_t>(i)];
    out.sigmas[static_cast<size_t>(i - 1)] = b;
    out.sigmas[static_cast<size_t>(i)] = b.inverse() * a * b;
    return out;
}

inline HurwitzTuple conjugate_tuple(const HurwitzTuple& t, const Perm& s) {
    HurwitzTuple out = t;
    for (auto& sig : out.sigmas) sig = sig.conjugated_by(s);
    return out;
}

/// Lexicographically minimal representative under simultaneous conjugation,
/// by brute force over Sym(symbols). Guarded to desk scale.
inline HurwitzTuple canonical_form(const HurwitzTuple& t) {
    if (t.symbols > 8) throw SpecError("canonical form is brute force; symbols <= 8 only");
    std::vector<int> img(static_cast<size_t>(t.symbols));
    std::iota(img.begin(), img.end(), 0);
    HurwitzTuple best = t;
    do {
        HurwitzTuple cand = conjugate_tuple(t, Perm(img));
        if (cand < best) best = cand;
    } while (std::next_permutation(img.begin(), img.end()));
    return best;
}

/// A braid word: elementary moves applied right to left, with inverses.
using BraidWord = std::vector<std::pair<int, bool>>;  // (position, inverted)

inline HurwitzTuple apply_word(const HurwitzTuple& t, const BraidWord& w) {
    HurwitzTuple out = t;
    for (auto it = w.rbegin(); it != w.rend(); ++it)
        out = it->second ? hurwitz_move_inverse(out, it->first) : hurwitz_move(out, it->first);
    return out;
}

inline BraidWord inverse_word(const BraidWord& w) {
    BraidWord out;
    for (auto it = w.rbegin(); it != w.rend(); ++it) out.emplace_back(it->first, !it->second);
    return out;
}

/// Full twist of strand i around strand j (the pure braid generator
/// A_{ij} = (s_{j-1} ... s_{i+1}) s_i^2 (s_{j-1} ... s_{i+1})^{-1}).
inline BraidWord pure_braid_word(int i, int j) {
    if (i >= j) throw SpecError("pure braid word needs i < j");
    BraidWord conj;
    for (int p = j - 1; p > i; --p) conj.emplace_back(p, false);
    BraidWord w = conj;
    w.emplace_back(i, false);
    w.emplace_back(i, false);
    BraidWord tail = inverse_word(conj);
    w.insert(w.end(), tail.begin(), tail.end());
    return w;
}

/// Which loops in the configuration of the k moving points generate the
/// monodromy action. The choice is a modelling decision and is recorded in
/// the orbit report.
enum class BraidPolicy {
    moving,  // adjacent exchanges within the moving block + loops of moving around fixed
    pure,    // pure braids only: full twists of each moving strand around every other strand
    full,    // every elementary braid (the classical full Hurwitz action)
};

inline std::string policy_name(BraidPolicy p) {
    switch (p) {
        case BraidPolicy::moving: return "moving";
        case BraidPolicy::pure: return "pure";
        case BraidPolicy::full: return "full";
    }
    return "?";
}

inline BraidPolicy policy_from_name(const std::string& s) {
    if (s == "moving") return BraidPolicy::moving;
    if (s == "pure") return BraidPolicy::pure;
    if (s == "full") return BraidPolicy::full;
    throw SpecError("unknown braid policy '" + s + "' (moving|pure|full)");
}

inline std::vector<BraidWord> generator_words(int m, int k, BraidPolicy policy) {
    std::vector<BraidWord> gens;
    switch (policy) {
        case BraidPolicy::full:
            for (int i = 1; i < m; ++i) gens.push_back({{i, false}});
            break;
        case BraidPolicy::moving:
            for (int i = 1; i < k; ++i) gens.push_back({{i, false}});
            for (int i = 1; i <= k; ++i)
                for (int j = k + 1; j <= m; ++j)
                    if (i < j) gens.push_back(pure_braid_word(i, j));
            break;
        case BraidPolicy::pure:
            for (int i = 1; i <= k; ++i)
                for (int j = i + 1; j <= m; ++j) gens.push_back(pure_braid_word(i, j));
            break;
    }
    return gens;
}

/// The finite monodromy data of moving branch points: the orbit of the
/// cover class under the chosen braid generators, and the induced
/// representation on the N cover classes.
struct MonodromyAction {
    std::vector<HurwitzTuple> cover_classes;       // sorted canonical forms
    std::vector<std::vector<int>> generators;      // class index -> class index
    long long n_classes = 0;                       // N
    long long image_order = 0;                     // |rho(pi_1)|
    long long kernel_index = 0;                    // [pi_1 : G] = image order
    std::string policy;
};

/// Order of the permutation group generated by gens on {0..npoints-1}
/// (orbit sizes times recursive stabilizer order, by Schreier's lemma).
inline long long perm_group_order(std::vector<std::vector<int>> gens, int npoints) {
    // Drop identities and duplicates.
    std::set<std::vector<int>> uniq;
    for (auto& g : gens) {
        bool id = true;
        for (int i = 0; i < npoints; ++i)
            if (g[static_cast<size_t>(i)] != i) id = false;
        if (!id) uniq.insert(g);
    }
    if (uniq.empty()) return 1;
    std::vector<std::vector<int>> gs(uniq.begin(), uniq.end());

    int base = -1;
    for (int p = 0; p < npoints && base < 0; ++p)
        for (const auto& g : gs)
            if (g[static_cast<size_t>(p)] != p) {
                base = p;
                break;
            }

    // Orbit of the base point with transversal representatives.
    std::map<int, std::vector<int>> transversal;
    std::vector<int> idperm(static_cast<size_t>(npoints));
    std::iota(idperm.begin(), idperm.end(), 0);
    transversal[base] = idperm;
    std::queue<int> frontier;
    frontier.push(base);
    auto compose = [&](const std::vector<int>& p, const std::vector<int>& q) {
        std::vector<int> out(q.size());
        for (size_t i = 0; i < q.size(); ++i) out[i] = p[static_cast<size_t>(q[i])];
        return out;
    };
    auto invert = [&](const std::vector<int>& p) {
        std::vector<int> out(p.size());
        for (size_t i = 0; i < p.size(); ++i) out[static_cast<size_t>(p[i])] = static_cast<int>(i);
        return out;
    };
    while (!frontier.empty()) {
        int x = frontier.front();
        frontier.pop();
        for (const auto& g : gs) {
            int y = g[static_cast<size_t>(x)];
            if (!transversal.count(y)) {
                transversal[y] = compose(g, transversal[x]);
                frontier.push(y);
            }
        }
    }

    // Schreier generators for the stabilizer of the base point.
    std::set<std::vector<int>> stab;
    for (const auto& [x, ux] : transversal)
        for (const auto& g : gs) {
            auto s = compose(invert(transversal[g[static_cast<size_t>(x)]]), compose(g, ux));
            bool id = true;
            for (int i = 0; i < npoints; ++i)
                if (s[static_cast<size_t>(i)] != i) id = false;
            if (!id) stab.insert(std::move(s));
        }
    return static_cast<long long>(transversal.size()) *
           perm_group_order(std::vector<std::vector<int>>(stab.begin(), stab.end()), npoints);
}

/// BFS over cover classes. The orbit set is deterministic (canonical forms,
/// sorted at the end) regardless of traversal order.
inline MonodromyAction braid_orbit(const HurwitzTuple& t, BraidPolicy policy = BraidPolicy::moving,
                                   long long cap = 1000000) {
    if (!validate(t)) throw SpecError("invalid tuple: product-one or transitivity fails");
    int m = static_cast<int>(t.sigmas.size());
    int k = t.moving_count;
    if (k < 0 || k > m) throw SpecError("moving count out of range");
    auto gens = generator_words(m, k, policy);

    std::set<HurwitzTuple> seen;
    std::queue<HurwitzTuple> frontier;
    HurwitzTuple start = canonical_form(t);
    seen.insert(start);
    frontier.push(start);
    while (!frontier.empty()) {
        HurwitzTuple cur = frontier.front();
        frontier.pop();
        for (const auto& w : gens) {
            for (bool inv : {false, true}) {
                HurwitzTuple next = canonical_form(apply_word(cur, inv ? inverse_word(w) : w));
                if (!seen.count(next)) {
                    if (static_cast<long long>(seen.size()) >= cap)
                        throw SpecError("orbit exceeds the configured cap of " + std::to_string(cap));
                    seen.insert(next);
                    frontier.push(next);
                }
            }
        }
    }

    MonodromyAction action;
    action.cover_classes.assign(seen.begin(), seen.end());
    action.n_classes = static_cast<long long>(action.cover_classes.size());
    action.policy = policy_name(policy);

    std::map<HurwitzTuple, int> index;
    for (size_t i = 0; i < action.cover_classes.size(); ++i)
        index[action.cover_classes[i]] = static_cast<int>(i);
    for (const auto& w : gens) {
        std::vector<int> perm(action.cover_classes.size());
        std::vector<bool> hit(action.cover_classes.size(), false);
        for (size_t i = 0; i < action.cover_classes.size(); ++i) {
            HurwitzTuple img = canonical_form(apply_word(action.cover_classes[i], w));
            auto it = index.find(img);
            if (it == index.end()) throw OracleMismatch("braid image escaped the computed orbit");
            perm[i] = it->second;
            if (hit[static_cast<size_t>(it->second)])
                throw OracleMismatch("braid generator does not act bijectively on classes");
            hit[static_cast<size_t>(it->second)] = true;
        }
        action.generators.push_back(std::move(perm));
    }
    action.image_order = perm_group_order(action.generators, static_cast<int>(action.n_classes));
    action.kernel_index = action.image_order;
    return action;
}

/// Tuple literal: cycle notation per position, positions separated by ';'.
inline HurwitzTuple parse_tuple(const std::string& text, int symbols, int moving_count) {
    if (symbols < 1) throw SpecError("symbol count must be >= 1");
    HurwitzTuple t;
    t.symbols = symbols;
    t.moving_count = moving_count;
    size_t pos = 0;
    while (pos <= text.size()) {
        size_t semi = text.find(';', pos);
        std::string part = text.substr(pos, semi == std::string::npos ? std::string::npos : semi - pos);
        t.sigmas.push_back(parse_cycles(part, symbols));
        if (semi == std::string::npos) break;
        pos = semi + 1;
    }
    if (t.moving_count > static_cast<int>(t.sigmas.size()))
        throw SpecError("moving count exceeds the number of branch points");
    return t;
}

}  // namespace cycov
