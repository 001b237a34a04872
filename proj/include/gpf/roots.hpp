#pragma once
// Real-root isolation (Sturm sequences) over Q, small-degree factorization
// (linear factors by exact identification inside isolating intervals,
// quadratic factors by undetermined coefficients + resultant elimination),
// and root extraction in Q or a quadratic extension.

#include "gpf/poly.hpp"

#include <functional>

namespace gpf {

using PolyQ = Poly<Rat>;

// ---------------------------------------------------------------------------
// Sturm machinery

inline std::vector<PolyQ> sturm_chain(const PolyQ& p) {
    std::vector<PolyQ> chain;
    if (p.is_zero()) return chain;
    chain.push_back(p);
    PolyQ d = p.derivative();
    if (!d.is_zero()) chain.push_back(d);
    while (chain.size() >= 2 && chain.back().deg() > 0) {
        PolyQ r = chain[chain.size() - 2] % chain.back();
        if (r.is_zero()) break;
        chain.push_back(-r);
    }
    return chain;
}

inline int sign_changes_at(const std::vector<PolyQ>& chain, const Rat& x) {
    int changes = 0, last = 0;
    for (const auto& f : chain) {
        Rat v = f.eval(x);
        int s = mpq_sgn(v.get_mpq_t());
        if (s != 0) {
            if (last != 0 && s != last) ++changes;
            last = s;
        }
    }
    return changes;
}

// Cauchy bound: all real roots lie in (-B, B)
inline Rat root_bound(const PolyQ& p) {
    Rat B(1);
    for (long i = 0; i < p.deg(); ++i) {
        Rat q = abs(p.coeff(i) / p.lc());
        if (q > B) B = q;
    }
    return B + 1;
}

struct RootInterval {
    Rat lo, hi;      // lo < root <= hi  (half-open from the Sturm count)
    int multiplicity;
};

// Yun's squarefree decomposition: p = lc * prod A_i^i with A_i squarefree,
// pairwise coprime, monic.  Returns pairs (A_i, i) with deg A_i > 0.
inline std::vector<std::pair<PolyQ, int>> squarefree_decomp(const PolyQ& p) {
    std::vector<std::pair<PolyQ, int>> out;
    if (p.deg() < 1) return out;
    PolyQ f = p.monic();
    PolyQ g = poly_gcd(f, f.derivative());
    PolyQ w = f / g;
    int i = 1;
    while (w.deg() > 0) {
        PolyQ y = poly_gcd(w, g);
        PolyQ factor = w / y;
        if (factor.deg() > 0) out.emplace_back(factor.monic(), i);
        w = y;
        g = g / y;
        ++i;
    }
    return out;
}

// Isolate the distinct real roots of a *squarefree* p in (lo, hi];
// each interval is bisected until its width is below `width`.
inline std::vector<std::pair<Rat, Rat>> isolate_squarefree(
    const PolyQ& p, Rat lo, Rat hi, const Rat& width) {
    std::vector<std::pair<Rat, Rat>> out;
    if (p.deg() < 1 || lo >= hi) return out;
    auto chain = sturm_chain(p);
    std::function<void(Rat, Rat, int, int)> rec = [&](Rat a, Rat b, int va, int vb) {
        int n = va - vb;
        if (n <= 0) return;
        if (n == 1 && b - a < width) {
            out.emplace_back(a, b);
            return;
        }
        Rat m = (a + b) / 2;
        int vm = sign_changes_at(chain, m);
        rec(a, m, va, vm);
        rec(m, b, vm, vb);
    };
    rec(lo, hi, sign_changes_at(chain, lo), sign_changes_at(chain, hi));
    std::sort(out.begin(), out.end());
    return out;
}

// Spec contract: disjoint intervals, one distinct root each, multiplicity
// from the squarefree decomposition.
inline std::vector<RootInterval> isolate_real_roots(const PolyQ& p, const Rat& lo,
                                                    const Rat& hi) {
    std::vector<RootInterval> out;
    Rat width = Rat(1) / Rat(Int(1) << 64);
    for (auto& [f, mult] : squarefree_decomp(p)) {
        for (auto& [a, b] : isolate_squarefree(f, lo, hi, width))
            out.push_back({a, b, mult});
    }
    std::sort(out.begin(), out.end(),
              [](const RootInterval& x, const RootInterval& y) { return x.lo < y.lo; });
    return out;
}

// Shrink an isolating interval of squarefree p (sign change across it) down
// to the given width by bisection.
inline std::pair<Rat, Rat> refine_interval(const PolyQ& p, Rat a, Rat b, const Rat& width) {
    int sa = mpq_sgn(Rat(p.eval(a)).get_mpq_t());
    while (b - a > width) {
        Rat m = (a + b) / 2;
        Rat v = p.eval(m);
        int sm = mpq_sgn(v.get_mpq_t());
        if (sm == 0) {  // landed exactly on the root
            Rat eps = (b - a) / 4;
            if (eps > width / 4) eps = width / 4;
            return {m - eps, m + eps};
        }
        if (sm == sa) a = m; else b = m;
    }
    return {a, b};
}

// Try to identify an exact rational root inside an isolating interval of a
// squarefree polynomial.  Refines adaptively; gives up below width 2^-256.
inline std::optional<Rat> rational_root_in(const PolyQ& p, Rat a, Rat b) {
    Rat width = Rat(1) / Rat(Int(1) << 64);
    Rat floor_w = Rat(1) / Rat(Int(1) << 256);
    while (true) {
        std::tie(a, b) = refine_interval(p, a, b, width);
        Rat cand = simplest_between(a, b);
        if (p.eval(cand) == 0) return cand;
        if (width <= floor_w) return std::nullopt;
        width = width * width;  // 2^-64 -> 2^-128 -> 2^-256
    }
}

// ---------------------------------------------------------------------------
// factor_small: degree 1 and 2 factors over Q plus a flagged cofactor

struct Factorization {
    Rat unit;                       // leading scalar
    std::vector<std::pair<PolyQ, int>> factors;  // monic irreducible deg 1-2
    PolyQ cofactor;                 // monic; 1 if fully factored; flagged if deg > 0
    bool complete() const { return cofactor.deg() < 1; }

    PolyQ product() const {
        PolyQ out{unit};
        for (auto& [f, m] : factors)
            for (int i = 0; i < m; ++i) out *= f;
        out *= cofactor;
        return out;
    }
};

namespace detail {

// remainder of monic-in-z division of p by z^2 + u z + v with (u, v)
// symbolic: returns (R1(u,v), R0(u,v)) as bivariate polys, inner var u,
// outer var v.
using PolyUV = Poly<Poly<Rat>>;  // coefficients in Q[u], variable v

inline std::pair<PolyUV, PolyUV> quadratic_remainder(const PolyQ& p) {
    // work with coefficients in Q[u][v]; divisor z^2 + u z + v
    long n = p.deg();
    std::vector<PolyUV> r(n + 1);
    for (long i = 0; i <= n; ++i) r[i] = PolyUV(Poly<Rat>(p.coeff(i)));
    PolyUV u_poly{Poly<Rat>::var()};                    // u as element of Q[u] ⊂ Q[u][v]
    PolyUV v_poly = PolyUV::var();                      // v
    for (long i = n; i >= 2; --i) {
        PolyUV lead = r[i];
        r[i] = PolyUV();
        r[i - 1] -= lead * u_poly;
        r[i - 2] -= lead * v_poly;
    }
    return {r[1], r[0]};
}

// resultant in the outer variable of two bivariate polys, by evaluation of
// the inner variable at rational points and Lagrange interpolation.
inline PolyQ resultant_outer_by_interp(const PolyUV& A, const PolyUV& B) {
    if (A.is_zero() || B.is_zero()) return PolyQ();
    long degInnerA = 0, degInnerB = 0;
    for (auto& c : A.c) degInnerA = std::max(degInnerA, c.deg());
    for (auto& c : B.c) degInnerB = std::max(degInnerB, c.deg());
    long bound = degInnerA * B.deg() + degInnerB * A.deg() + 1;
    std::vector<Rat> xs, ys;
    long t = 0;
    while (static_cast<long>(xs.size()) < bound) {
        Rat u0(t++);
        // specialize; skip points where either leading coefficient drops
        // (they would break the degree bookkeeping of the interpolation)
        if (A.lc().eval(u0) == 0 || B.lc().eval(u0) == 0) continue;
        PolyQ a, b;
        for (auto& c : A.c) a.c.push_back(c.eval(u0));
        for (auto& c : B.c) b.c.push_back(c.eval(u0));
        a.trim(); b.trim();
        xs.push_back(u0);
        ys.push_back(resultant(a, b));
        if (t > 16 * bound + 64) break;  // safety
    }
    // Lagrange interpolation
    PolyQ out;
    for (size_t i = 0; i < xs.size(); ++i) {
        PolyQ li{Rat(1)};
        Rat denom(1);
        for (size_t j = 0; j < xs.size(); ++j) {
            if (i == j) continue;
            li *= PolyQ::linear(-xs[j], Rat(1));
            denom *= xs[i] - xs[j];
        }
        out += li * (ys[i] / denom);
    }
    return out;
}

}  // namespace detail

// All rational roots of p (with multiplicity folded out by the caller);
// p squarefree.  Uses isolation + smallest-denominator identification.
inline std::vector<Rat> rational_roots_squarefree(const PolyQ& p) {
    std::vector<Rat> out;
    Rat B = root_bound(p);
    for (auto& [a, b] : isolate_squarefree(p, -B, B, Rat(1) / Rat(Int(1) << 64)))
        if (auto r = rational_root_in(p, a, b)) out.push_back(*r);
    return out;
}

inline Factorization factor_small(const PolyQ& input) {
    if (input.deg() > 12) throw std::domain_error("factor_small: degree > 12");
    Factorization out;
    out.unit = input.is_zero() ? Rat(0) : input.lc();
    out.cofactor = PolyQ{Rat(1)};
    if (input.deg() < 1) return out;

    for (auto& [sq, mult] : squarefree_decomp(input)) {
        PolyQ rem = sq;
        // linear factors
        for (const Rat& r : rational_roots_squarefree(rem)) {
            PolyQ lin = PolyQ::linear(-r, Rat(1));
            rem = rem / lin;
            out.factors.emplace_back(lin, mult);
        }
        // quadratic factors z^2 + u z + v via resultant elimination
        while (rem.deg() >= 2) {
            auto [R1, R0] = detail::quadratic_remainder(rem);
            bool found = false;
            PolyQ G = detail::resultant_outer_by_interp(R1, R0);  // in u
            if (!G.is_zero()) {
                auto us = rational_roots_squarefree(G / poly_gcd(G, G.derivative()));
                for (const Rat& u0 : us) {
                    // candidate v values: common roots of R1(u0, v), R0(u0, v)
                    PolyQ r1v, r0v;
                    for (auto& c : R1.c) r1v.c.push_back(c.eval(u0));
                    for (auto& c : R0.c) r0v.c.push_back(c.eval(u0));
                    r1v.trim(); r0v.trim();
                    PolyQ g = r1v.is_zero() ? r0v : (r0v.is_zero() ? r1v : poly_gcd(r1v, r0v));
                    if (g.deg() < 1) continue;
                    for (const Rat& v0 : rational_roots_squarefree(g / poly_gcd(g, g.derivative()))) {
                        PolyQ quad(std::vector<Rat>{v0, u0, Rat(1)});
                        auto [q2, r2] = divmod(rem, quad);
                        if (r2.is_zero()) {
                            // keep only irreducible quadratics: a rational-rooted
                            // quadratic would have been peeled above
                            out.factors.emplace_back(quad, mult);
                            rem = q2;
                            found = true;
                            break;
                        }
                    }
                    if (found) break;
                }
            }
            if (!found) break;
        }
        if (rem.deg() == 1) {  // can happen only if identification failed upstream
            out.factors.emplace_back(rem.monic(), mult);
            rem = PolyQ{Rat(1)};
        }
        for (int i = 0; i < mult; ++i) out.cofactor *= rem.monic();
    }
    return out;
}

// ---------------------------------------------------------------------------
// roots of a FieldElem-coefficient polynomial that lie in Q or Q(sqrt D)

using PolyF = Poly<Fe>;

inline PolyQ to_rational_poly(const PolyF& p) {
    PolyQ out;
    for (auto& c : p.c) {
        if (!c.is_rational()) throw std::domain_error("coefficient not rational");
        out.c.push_back(c.a);
    }
    out.trim();
    return out;
}

inline PolyF from_rational_poly(const PolyQ& p) {
    PolyF out;
    for (auto& c : p.c) out.c.push_back(Fe(c));
    out.trim();
    return out;
}

inline PolyF conj_poly(const PolyF& p) {
    PolyF out;
    for (auto& c : p.c) out.c.push_back(c.conj());
    out.trim();
    return out;
}

// All roots of p lying in the working field (Q, or Q(sqrt D) for the D
// carried by the coefficients / by `Dhint`).  `complete` reports whether
// every root of p was accounted for this way.
struct FieldRoots {
    std::vector<Fe> roots;  // with multiplicity
    bool complete;
};

inline FieldRoots field_roots(const PolyF& p, long Dhint = 0) {
    FieldRoots out{{}, true};
    if (p.deg() < 1) return out;
    long D = Dhint;
    for (auto& c : p.c)
        if (!c.is_rational()) D = Fe::join(D, c.D);

    // reduce to a rational-coefficient polynomial: p * conj(p)
    PolyF pc = conj_poly(p);
    PolyQ N = (D == 0) ? to_rational_poly(p) : to_rational_poly(p * pc);

    Factorization f = factor_small(N);
    if (!f.complete()) out.complete = false;
    std::vector<Fe> candidates;
    for (auto& [fac, mult] : f.factors) {
        (void)mult;
        if (fac.deg() == 1) {
            candidates.push_back(Fe(-fac.coeff(0)));
        } else if (fac.deg() == 2) {
            // z^2 + u z + v; roots (-u ± sqrt(u^2-4v)) / 2
            Rat u = fac.coeff(1), v = fac.coeff(0);
            Fe disc{u * u - 4 * v};
            if (auto s = sqrt_exact_fe(disc)) {
                if (D != 0 && !s->is_rational() && s->D != D) continue;  // wrong field
                candidates.push_back((Fe(-u) + *s) / Fe(2));
                candidates.push_back((Fe(-u) - *s) / Fe(2));
            } else {
                out.complete = false;
            }
        }
    }
    // verify candidates against p itself and extract multiplicities
    PolyF rem = p;
    for (const Fe& cand : candidates) {
        try {
            while (rem.deg() >= 1 && rem.eval(cand) == Fe(0)) {
                rem = rem / PolyF::linear(-cand, Fe(1));
                out.roots.push_back(cand);
            }
        } catch (const field_mismatch&) {
            // root lives in a different quadratic extension than the one the
            // computation has already committed to
            out.complete = false;
        }
    }
    if (rem.deg() > 0) out.complete = false;
    return out;
}

}  // namespace gpf
