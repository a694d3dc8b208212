#pragma once

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>
#include <stdexcept>
#include <vector>

#include "jsrforge/mat2.hpp"

namespace jsrforge {

inline constexpr double kCollinearEps = 1e-12;

/// Counterclockwise convex hull with strictly convex vertices: points making
/// a turn of |cross| <= eps are dropped. Andrew's monotone chain.
inline std::vector<Vec2> strict_convex_hull(std::vector<Vec2> pts, double eps = kCollinearEps) {
    std::sort(pts.begin(), pts.end(), [](Vec2 l, Vec2 r) {
        return l.x < r.x || (l.x == r.x && l.y < r.y);
    });
    pts.erase(std::unique(pts.begin(), pts.end(),
                          [](Vec2 l, Vec2 r) { return l.x == r.x && l.y == r.y; }),
              pts.end());
    const std::size_t n = pts.size();
    if (n < 3) return pts;
    std::vector<Vec2> hull(2 * n);
    std::size_t k = 0;
    for (std::size_t i = 0; i < n; ++i) {  // lower
        while (k >= 2 && cross(hull[k - 1] - hull[k - 2], pts[i] - hull[k - 2]) <= eps) --k;
        hull[k++] = pts[i];
    }
    const std::size_t lower = k + 1;
    for (std::size_t i = n - 1; i-- > 0;) {  // upper
        while (k >= lower && cross(hull[k - 1] - hull[k - 2], pts[i] - hull[k - 2]) <= eps) --k;
        hull[k++] = pts[i];
    }
    hull.resize(k - 1);
    return hull;
}

/// A full-dimensional, centrally symmetric, strictly convex polygon given by
/// its cyclically (counterclockwise) ordered vertices. Vertex i + m is the
/// opposite of vertex i, where 2m is the vertex count. The origin lies in
/// the interior, so the polygon induces a norm (its Minkowski gauge).
class SymmetricPolygon {
public:
    SymmetricPolygon() = default;

    explicit SymmetricPolygon(std::vector<Vec2> ccw_vertices) : verts_(std::move(ccw_vertices)) {
        const std::size_t n = verts_.size();
        if (n < 4 || n % 2 != 0)
            throw std::invalid_argument("SymmetricPolygon: need an even vertex count >= 4");
        for (std::size_t i = 0; i < n; ++i) {
            const Vec2 e0 = verts_[i] - verts_[(i + n - 1) % n];
            const Vec2 e1 = verts_[(i + 1) % n] - verts_[i];
            if (cross(e0, e1) <= kCollinearEps)
                throw std::invalid_argument("SymmetricPolygon: vertices not in strictly convex position");
        }
        const std::size_t m = n / 2;
        for (std::size_t i = 0; i < m; ++i) {
            if (distance(verts_[i + m], -verts_[i]) > 1e-9)
                throw std::invalid_argument("SymmetricPolygon: not centrally symmetric");
        }
    }

    bool valid() const { return !verts_.empty(); }
    std::size_t size() const { return verts_.size(); }
    const std::vector<Vec2>& vertices() const { return verts_; }
    const Vec2& operator[](std::size_t i) const { return verts_[i]; }

    /// Minkowski gauge: the factor by which the polygon must be scaled to
    /// reach q. gauge < 1 inside, = 1 on the boundary, > 1 outside.
    double gauge(Vec2 q) const {
        require_valid();
        double g = 0.0;
        const std::size_t n = verts_.size();
        for (std::size_t i = 0; i < n; ++i) {
            const Vec2 d = verts_[(i + 1) % n] - verts_[i];
            const Vec2 nrm{d.y, -d.x};  // outward for CCW
            const double h = dot(nrm, verts_[i]);
            g = std::max(g, dot(nrm, q) / h);
        }
        return g;
    }

    /// Euclidean distance from q to the boundary, positive inside and
    /// negative outside.
    double signed_boundary_distance(Vec2 q) const {
        require_valid();
        double d = std::numeric_limits<double>::infinity();
        const std::size_t n = verts_.size();
        for (std::size_t i = 0; i < n; ++i) {
            const Vec2 e = verts_[(i + 1) % n] - verts_[i];
            const Vec2 nrm{e.y, -e.x};
            const double len = norm(nrm);
            d = std::min(d, (dot(nrm, verts_[i]) - dot(nrm, q)) / len);
        }
        return d;
    }

    double support(Vec2 dir) const {
        require_valid();
        double s = -std::numeric_limits<double>::infinity();
        for (const Vec2& v : verts_) s = std::max(s, dot(v, dir));
        return s;
    }

    /// Index of the nearest vertex to q and the distance to it.
    std::pair<std::size_t, double> nearest_vertex(Vec2 q) const {
        require_valid();
        std::size_t best = 0;
        double bd = std::numeric_limits<double>::infinity();
        for (std::size_t i = 0; i < verts_.size(); ++i) {
            const double d = distance(verts_[i], q);
            if (d < bd) { bd = d; best = i; }
        }
        return {best, bd};
    }

    double max_interior_angle_deg() const {
        require_valid();
        const std::size_t n = verts_.size();
        double worst = 0.0;
        for (std::size_t i = 0; i < n; ++i) {
            const Vec2 e0 = verts_[i] - verts_[(i + n - 1) % n];
            const Vec2 e1 = verts_[(i + 1) % n] - verts_[i];
            const double turn = std::atan2(cross(e0, e1), dot(e0, e1));
            worst = std::max(worst, 180.0 - turn * 180.0 / std::numbers::pi);
        }
        return worst;
    }

    /// Polar dual: the unit ball of the norm v -> support(v). Vertex i of
    /// the polar is the intersection of the support lines at vertices i
    /// and i + 1.
    SymmetricPolygon polar() const {
        require_valid();
        const std::size_t n = verts_.size();
        std::vector<Vec2> pv(n);
        for (std::size_t i = 0; i < n; ++i) {
            const Vec2 a = verts_[i], b = verts_[(i + 1) % n];
            const double det = cross(a, b);
            if (std::abs(det) < kCollinearEps)
                throw std::invalid_argument("SymmetricPolygon::polar: degenerate edge");
            pv[i] = Vec2{(b.y - a.y) / det, (a.x - b.x) / det};
        }
        return SymmetricPolygon(std::move(pv));
    }

private:
    void require_valid() const {
        if (verts_.empty()) throw std::invalid_argument("SymmetricPolygon: empty polygon");
    }

    std::vector<Vec2> verts_;
};

struct ConvexityReport {
    bool ok = false;
    double max_interior_angle_deg = 180.0;
};

/// Strict convex-position check over a cyclic vertex list, reporting the
/// largest interior angle (180 when a collinear or reflex triple exists).
inline ConvexityReport check_convex_position(const std::vector<Vec2>& ccw_vertices) {
    const std::size_t n = ccw_vertices.size();
    if (n < 3) return {false, 180.0};
    double worst = 0.0;
    bool ok = true;
    for (std::size_t i = 0; i < n; ++i) {
        const Vec2 e0 = ccw_vertices[i] - ccw_vertices[(i + n - 1) % n];
        const Vec2 e1 = ccw_vertices[(i + 1) % n] - ccw_vertices[i];
        const double c = cross(e0, e1);
        if (c <= kCollinearEps) {
            ok = false;
            worst = 180.0;
        } else {
            const double turn = std::atan2(c, dot(e0, e1));
            worst = std::max(worst, 180.0 - turn * 180.0 / std::numbers::pi);
        }
    }
    return {ok, worst};
}

inline ConvexityReport check_convex_position(const SymmetricPolygon& poly) {
    return check_convex_position(poly.vertices());
}

}  // namespace jsrforge
