#pragma once

#include <array>
#include <cmath>
#include <map>
#include <string>
#include <vector>

#include "jsrforge/mat2.hpp"
#include "jsrforge/poly5.hpp"
#include "jsrforge/word.hpp"

namespace jsrforge {

namespace detail {

inline const Poly5& poly_x() { static const Poly5 p = Poly5::variable(0); return p; }
inline const Poly5& poly_y() { static const Poly5 p = Poly5::variable(1); return p; }
inline const Poly5& poly_z() { static const Poly5 p = Poly5::variable(2); return p; }
inline const Poly5& poly_u() { static const Poly5 p = Poly5::variable(3); return p; }
inline const Poly5& poly_v() { static const Poly5 p = Poly5::variable(4); return p; }
inline const Poly5& poly_xy_minus_z() {
    static const Poly5 p = poly_x() * poly_y() - poly_z();
    return p;
}
inline const Poly5& poly_yu() { static const Poly5 p = poly_y() * poly_u(); return p; }

}  // namespace detail

/// A product of A's and B's written on the Cayley-Hamilton basis:
/// w(A, B) = c0*I + c1*A + c2*B + c3*AB, with coefficients polynomial in
/// (tr A, tr B, tr AB, det A, det B). Right-multiplication stays on the
/// basis via A^2 = xA - uI, B^2 = yB - vI and
/// BA = yA + xB - (xy - z)I - AB.
struct LinearRep {
    Poly5 c0, c1, c2, c3;

    static LinearRep identity() {
        LinearRep r;
        r.c0 = Poly5(1);
        return r;
    }

    void mul_a() {
        using namespace detail;
        Poly5 n0 = -(poly_u() * c1) - poly_xy_minus_z() * c2 - poly_yu() * c3;
        Poly5 n1 = c0 + poly_x() * c1 + poly_y() * c2 + poly_z() * c3;
        Poly5 n2 = poly_x() * c2 + poly_u() * c3;
        Poly5 n3 = -c2;
        c0 = std::move(n0);
        c1 = std::move(n1);
        c2 = std::move(n2);
        c3 = std::move(n3);
    }

    void mul_b() {
        using namespace detail;
        Poly5 n0 = -(poly_v() * c2);
        Poly5 n1 = -(poly_v() * c3);
        Poly5 n2 = c0 + poly_y() * c2;
        Poly5 n3 = c1 + poly_y() * c3;
        c0 = std::move(n0);
        c1 = std::move(n1);
        c2 = std::move(n2);
        c3 = std::move(n3);
    }

    void mul_letter(char letter) { letter == 'a' ? mul_a() : mul_b(); }

    /// tr(c0*I + c1*A + c2*B + c3*AB) = 2 c0 + x c1 + y c2 + z c3.
    Poly5 trace() const {
        using namespace detail;
        return 2 * c0 + poly_x() * c1 + poly_y() * c2 + poly_z() * c3;
    }
};

inline LinearRep linear_rep(const Word& w) {
    LinearRep rep = LinearRep::identity();
    for (char c : w.str()) rep.mul_letter(c);
    return rep;
}

/// The unique integer polynomial with
/// tr w(A, B) = F_w(tr A, tr B, tr AB, det A, det B) for all 2x2 pairs.
inline Poly5 fricke_polynomial(const Word& w) { return linear_rep(w).trace(); }

/// F_w with both determinants set to 1.
inline Poly5 reduced_fricke(const Word& w) { return fricke_polynomial(w).substitute_uv1(); }

/// Words are 2-isospectral iff their trace polynomials agree identically;
/// unequal letter counts settle it immediately.
inline bool is_2_isospectral(const Word& w1, const Word& w2) {
    if (w1.count_a() != w2.count_a() || w1.count_b() != w2.count_b()) return false;
    return fricke_polynomial(w1) == fricke_polynomial(w2);
}

inline double eval_trace(const Word& w, const Tuple5& t) {
    return fricke_polynomial(w).eval(t.as_array());
}

struct SpectrumEval {
    double rho = 0.0;         // spectral radius of w(A, B)
    double normalized = 0.0;  // rho^(1/|w|)
};

/// Spectral radius of w(A, B) at a tuple, from the trace via the Fricke
/// polynomial and the determinant via multiplicativity: det = u^(#a) v^(#b).
inline SpectrumEval eval_product_spectrum(const Word& w, const Tuple5& t) {
    const double tau = eval_trace(w, t);
    const double delta = std::pow(t.u, static_cast<double>(w.count_a())) *
                         std::pow(t.v, static_cast<double>(w.count_b()));
    SpectrumEval out;
    out.rho = rho_from_trace_det(tau, delta);
    out.normalized = std::pow(out.rho, 1.0 / static_cast<double>(w.length()));
    return out;
}

/// Keeps one representative per 2-isospectrality class, keyed on the exact
/// polynomial; earlier entries win.
inline std::vector<Word> dedup_isospectral(const std::vector<Word>& words) {
    std::vector<Word> out;
    std::map<Poly5::TermMap, bool> seen;
    for (const Word& w : words) {
        const Poly5 p = fricke_polynomial(w);
        auto [it, inserted] = seen.emplace(p.terms(), true);
        if (inserted) out.push_back(w);
    }
    return out;
}

}  // namespace jsrforge
