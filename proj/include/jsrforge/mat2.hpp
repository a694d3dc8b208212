#pragma once

#include <array>
#include <cmath>
#include <complex>
#include <stdexcept>
#include <utility>
#include <vector>

#include "jsrforge/word.hpp"

namespace jsrforge {

struct Vec2 {
    double x = 0.0;
    double y = 0.0;

    friend Vec2 operator+(Vec2 l, Vec2 r) { return {l.x + r.x, l.y + r.y}; }
    friend Vec2 operator-(Vec2 l, Vec2 r) { return {l.x - r.x, l.y - r.y}; }
    friend Vec2 operator*(double s, Vec2 v) { return {s * v.x, s * v.y}; }
    Vec2 operator-() const { return {-x, -y}; }
};

inline double dot(Vec2 l, Vec2 r) { return l.x * r.x + l.y * r.y; }
inline double cross(Vec2 l, Vec2 r) { return l.x * r.y - l.y * r.x; }
inline double norm(Vec2 v) { return std::hypot(v.x, v.y); }
inline double distance(Vec2 l, Vec2 r) { return norm(l - r); }

/// Real 2x2 matrix, row-major entries.
struct Mat2 {
    double a11 = 0.0, a12 = 0.0, a21 = 0.0, a22 = 0.0;

    static Mat2 identity() { return {1.0, 0.0, 0.0, 1.0}; }

    double trace() const { return a11 + a22; }
    double det() const { return a11 * a22 - a12 * a21; }
    Mat2 transpose() const { return {a11, a21, a12, a22}; }

    friend Mat2 operator*(const Mat2& l, const Mat2& r) {
        return {l.a11 * r.a11 + l.a12 * r.a21, l.a11 * r.a12 + l.a12 * r.a22,
                l.a21 * r.a11 + l.a22 * r.a21, l.a21 * r.a12 + l.a22 * r.a22};
    }
    friend Mat2 operator+(const Mat2& l, const Mat2& r) {
        return {l.a11 + r.a11, l.a12 + r.a12, l.a21 + r.a21, l.a22 + r.a22};
    }
    friend Mat2 operator-(const Mat2& l, const Mat2& r) {
        return {l.a11 - r.a11, l.a12 - r.a12, l.a21 - r.a21, l.a22 - r.a22};
    }
    friend Mat2 operator*(double s, const Mat2& m) {
        return {s * m.a11, s * m.a12, s * m.a21, s * m.a22};
    }
    friend Vec2 operator*(const Mat2& m, Vec2 v) {
        return {m.a11 * v.x + m.a12 * v.y, m.a21 * v.x + m.a22 * v.y};
    }
};

/// Complex 2x2 matrix.
struct CMat2 {
    using C = std::complex<double>;
    C a11, a12, a21, a22;

    static CMat2 from_real(const Mat2& m) { return {m.a11, m.a12, m.a21, m.a22}; }

    C trace() const { return a11 + a22; }
    C det() const { return a11 * a22 - a12 * a21; }

    friend CMat2 operator*(const CMat2& l, const CMat2& r) {
        return {l.a11 * r.a11 + l.a12 * r.a21, l.a11 * r.a12 + l.a12 * r.a22,
                l.a21 * r.a11 + l.a22 * r.a21, l.a21 * r.a12 + l.a22 * r.a22};
    }
    friend CMat2 operator*(C s, const CMat2& m) {
        return {s * m.a11, s * m.a12, s * m.a21, s * m.a22};
    }
};

using CVec2 = std::array<std::complex<double>, 2>;

inline CVec2 operator*(const CMat2& m, const CVec2& v) {
    return {m.a11 * v[0] + m.a12 * v[1], m.a21 * v[0] + m.a22 * v[1]};
}

/// The five scalars (tr A, tr B, tr AB, det A, det B) attached to a pair.
struct Tuple5 {
    double x = 0.0, y = 0.0, z = 0.0, u = 0.0, v = 0.0;

    std::array<double, 5> as_array() const { return {x, y, z, u, v}; }
};

/// Largest eigenvalue modulus of a 2x2 matrix with trace `tau` and
/// determinant `delta`, via the closed-form quadratic roots.
inline double rho_from_trace_det(double tau, double delta) {
    const double disc = tau * tau - 4.0 * delta;
    if (disc >= 0.0) return (std::abs(tau) + std::sqrt(disc)) / 2.0;
    return std::sqrt(delta);  // conjugate pair; delta > tau^2/4 >= 0
}

inline double spectral_radius(const Mat2& m) { return rho_from_trace_det(m.trace(), m.det()); }

inline double spectral_radius(const CMat2& m) {
    const std::complex<double> tau = m.trace();
    const std::complex<double> disc = std::sqrt(tau * tau - 4.0 * m.det());
    return std::max(std::abs((tau + disc) / 2.0), std::abs((tau - disc) / 2.0));
}

/// Spectral (operator 2-) norm from the singular values of a 2x2 matrix.
inline double spectral_norm(const Mat2& m) {
    const double g = m.a11 * m.a11 + m.a12 * m.a12 + m.a21 * m.a21 + m.a22 * m.a22;
    const double d = m.det();
    const double disc = std::max(g * g - 4.0 * d * d, 0.0);
    return std::sqrt((g + std::sqrt(disc)) / 2.0);
}

/// Signed dominant eigenvalue of a matrix with a simple real leading
/// eigenvalue. Throws std::domain_error when the leading eigenvalue is
/// complex or not strictly dominant in modulus.
inline double dominant_eigenvalue(const Mat2& m) {
    const double tau = m.trace(), delta = m.det();
    const double disc = tau * tau - 4.0 * delta;
    if (disc <= 0.0)
        throw std::domain_error("dominant_eigenvalue: leading eigenvalue not real and simple");
    const double s = std::sqrt(disc);
    const double l1 = (tau + s) / 2.0, l2 = (tau - s) / 2.0;
    if (std::abs(l1) == std::abs(l2))
        throw std::domain_error("dominant_eigenvalue: eigenvalues have equal modulus");
    return std::abs(l1) > std::abs(l2) ? l1 : l2;
}

/// Unit eigenvector for the dominant eigenvalue, sign-fixed so that the
/// first coordinate of nonnegligible size is positive.
inline Vec2 leading_eigenvector(const Mat2& m) {
    const double lambda = dominant_eigenvalue(m);
    const Vec2 c1{m.a12, lambda - m.a11};
    const Vec2 c2{lambda - m.a22, m.a21};
    Vec2 v = norm(c1) >= norm(c2) ? c1 : c2;
    const double n = norm(v);
    if (n == 0.0) throw std::domain_error("leading_eigenvector: degenerate eigenvector");
    v = (1.0 / n) * v;
    const bool flip = (std::abs(v.x) > 1e-12) ? (v.x < 0.0) : (v.y < 0.0);
    return flip ? -v : v;
}

/// The matrix product obtained by substituting A for 'a' and B for 'b'.
inline Mat2 evaluate_word(const Word& w, const Mat2& A, const Mat2& B) {
    Mat2 p = (w[0] == 'a') ? A : B;
    for (std::size_t i = 1; i < w.length(); ++i) p = p * ((w[i] == 'a') ? A : B);
    return p;
}

inline CMat2 evaluate_word(const Word& w, const CMat2& A, const CMat2& B) {
    CMat2 p = (w[0] == 'a') ? A : B;
    for (std::size_t i = 1; i < w.length(); ++i) p = p * ((w[i] == 'a') ? A : B);
    return p;
}

inline Tuple5 invariants_of_pair(const Mat2& A, const Mat2& B) {
    return Tuple5{A.trace(), B.trace(), (A * B).trace(), A.det(), B.det()};
}

inline double commutator_cube_trace(const Mat2& A, const Mat2& B) {
    const Mat2 c = A * B - B * A;
    return (c * c * c).trace();
}

struct JsrBounds {
    double lower = 0.0;
    double upper = 0.0;
};

/// Squeeze bounds on the joint spectral radius: normalized spectral radii of
/// primitive class representatives up to length k from below, normalized
/// spectral norms of all length-k products from above.
inline JsrBounds jsr_bounds(const Mat2& A, const Mat2& B, int k) {
    if (k < 1 || k > 20) throw std::invalid_argument("jsr_bounds: k must be in [1,20]");
    JsrBounds out;
    for (const Word& w : lyndon_words(k)) {
        const double r = spectral_radius(evaluate_word(w, A, B));
        out.lower = std::max(out.lower, std::pow(r, 1.0 / static_cast<double>(w.length())));
    }
    // Depth-first over all 2^k products, reusing prefix products.
    std::vector<Mat2> prefix(static_cast<std::size_t>(k) + 1);
    prefix[0] = Mat2::identity();
    std::vector<int> choice(static_cast<std::size_t>(k), 0);
    int depth = 0;
    double best = 0.0;
    while (true) {
        if (depth == k) {
            best = std::max(best, spectral_norm(prefix[static_cast<std::size_t>(k)]));
            while (depth > 0 && choice[static_cast<std::size_t>(depth - 1)] == 1) {
                choice[static_cast<std::size_t>(--depth)] = 0;
            }
            if (depth == 0) break;
            choice[static_cast<std::size_t>(depth - 1)] = 1;
            prefix[static_cast<std::size_t>(depth)] =
                prefix[static_cast<std::size_t>(depth - 1)] * B;
            continue;
        }
        prefix[static_cast<std::size_t>(depth + 1)] = prefix[static_cast<std::size_t>(depth)] *
                                                      (choice[static_cast<std::size_t>(depth)] == 0 ? A : B);
        ++depth;
    }
    out.upper = std::pow(best, 1.0 / static_cast<double>(k));
    return out;
}

/// Symmetric 3x3 matrix whose failure to be positive definite characterizes
/// the tuples attainable by a real pair.
inline std::array<std::array<double, 3>, 3> gram_matrix(const Tuple5& t) {
    return {{{t.u, t.x / 2.0, t.z / 2.0},
             {t.x / 2.0, 1.0, t.y / 2.0},
             {t.z / 2.0, t.y / 2.0, t.v}}};
}

/// min(4u - x^2, 4uv - z^2 - v x^2 - u y^2 + x y z); realizable iff <= 0.
inline double realizability_margin(const Tuple5& t) {
    const double m1 = 4.0 * t.u - t.x * t.x;
    const double m2 = 4.0 * t.u * t.v - t.z * t.z - t.v * t.x * t.x - t.u * t.y * t.y +
                      t.x * t.y * t.z;
    return std::min(m1, m2);
}

inline bool realizable(const Tuple5& t) { return realizability_margin(t) <= 0.0; }

/// Constructs a real pair (A, B) with the prescribed traces and
/// determinants. Throws std::domain_error when the tuple is not realizable.
inline std::pair<Mat2, Mat2> realize(const Tuple5& t) {
    if (!realizable(t)) throw std::domain_error("realize: tuple is not realizable over the reals");
    const double dx = t.x * t.x - 4.0 * t.u;
    const double dy = t.y * t.y - 4.0 * t.v;
    if (dx >= 0.0) {
        // A triangular with real eigenvalues; companion-form B keeps the
        // lower-left entry at 1, so the linear solve for the corner never
        // degenerates.
        const double s = std::sqrt(dx);
        const double l1 = (t.x + s) / 2.0, l2 = (t.x - s) / 2.0;
        const double mu = t.z - l2 * t.y;
        const Mat2 A{l1, mu, 0.0, l2};
        const Mat2 B{0.0, -t.v, 1.0, t.y};
        return {A, B};
    }
    if (dy >= 0.0) {
        const double s = std::sqrt(dy);
        const double n1 = (t.y + s) / 2.0, n2 = (t.y - s) / 2.0;
        const double mu = t.z - n2 * t.x;
        const Mat2 A{0.0, -t.u, 1.0, t.x};
        const Mat2 B{n1, mu, 0.0, n2};
        return {A, B};
    }
    // Both quadratics are elliptic; rotation-like forms with one free
    // off-diagonal scale. Realizability forces the discriminant
    // (z - xy/2)^2 - 4 (u - x^2/4)(v - y^2/4) to be nonnegative.
    const double p = std::sqrt(t.u - t.x * t.x / 4.0);
    const double q = std::sqrt(t.v - t.y * t.y / 4.0);
    const double a = p * q;
    const double b = t.z - t.x * t.y / 2.0;
    const double disc = std::max(b * b - 4.0 * a * a, 0.0);
    const double sq = std::sqrt(disc);
    const double mu = (b >= 0.0) ? (-b - sq) / (2.0 * a) : (-b + sq) / (2.0 * a);
    const Mat2 A{t.x / 2.0, -p, p, t.x / 2.0};
    const Mat2 B{t.y / 2.0, -q / mu, mu * q, t.y / 2.0};
    return {A, B};
}

}  // namespace jsrforge
