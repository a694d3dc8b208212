#pragma once

#include <cmath>
#include <complex>
#include <deque>
#include <limits>
#include <numbers>
#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "jsrforge/mat2.hpp"
#include "jsrforge/polygon.hpp"
#include "jsrforge/word.hpp"

namespace jsrforge {

inline constexpr double kVertexMatchTol = 1e-7;  // image counts as a vertex hit
inline constexpr double kJoinTol = 1e-9;         // image counts as outside
inline constexpr double kInteriorTol = 1e-9;     // required clearance of interior images
inline constexpr int kDefaultBudget = 192;       // max vertex pairs per build

/// Directed edge of the vertex graph: gen('a'|'b') applied to representative
/// `from` lands on sign * representative `to`.
struct GraphEdge {
    int from = 0;
    char gen = 'a';
    int sign = 1;
    int to = 0;

    friend bool operator==(const GraphEdge& l, const GraphEdge& r) {
        return l.from == r.from && l.gen == r.gen && l.sign == r.sign && l.to == r.to;
    }
};

struct VertexGraph {
    int nodes = 0;
    std::vector<GraphEdge> edges;
};

namespace detail {

inline Vec2 sign_normalize(Vec2 v, int* sign_out = nullptr) {
    const bool flip = (std::abs(v.x) > 1e-12) ? (v.x < 0.0) : (v.y < 0.0);
    if (sign_out) *sign_out = flip ? -1 : 1;
    return flip ? -v : v;
}

/// Nearest representative to q, testing both signs. Returns (index, sign,
/// distance); sign satisfies q ~ sign * reps[index].
inline std::tuple<int, int, double> nearest_signed(const std::vector<Vec2>& reps, Vec2 q) {
    int best = -1, sign = 1;
    double bd = std::numeric_limits<double>::infinity();
    for (std::size_t j = 0; j < reps.size(); ++j) {
        const double dp = distance(q, reps[j]);
        const double dm = distance(q, -reps[j]);
        if (dp < bd) { bd = dp; best = static_cast<int>(j); sign = 1; }
        if (dm < bd) { bd = dm; best = static_cast<int>(j); sign = -1; }
    }
    return {best, sign, bd};
}

}  // namespace detail

/// Outcome of one invariant-polytope construction.
struct PolytopeBuild {
    bool ok = false;
    std::string reason;

    std::vector<Vec2> reps;   // sign-normalized representatives; polygon = hull of +-reps
    SymmetricPolygon polygon; // all 2m vertices in counterclockwise order
    std::vector<int> ccw_rep;  // polygon vertex i = ccw_sign[i] * reps[ccw_rep[i]]
    std::vector<int> ccw_sign;
    VertexGraph graph;        // over representatives
    std::vector<int> seeds;   // representative index of each cycle eigenvector
    double min_margin = 0.0;  // least boundary clearance among interior images
};

struct ImageCheck {
    bool ok = false;
    double min_margin = 0.0;
    std::string detail;
};

namespace detail {

/// Classifies the images of every representative against the polygon:
/// vertex hits become graph edges, everything else must be strictly
/// interior.
inline ImageCheck analyze_images(const std::vector<Vec2>& reps, const SymmetricPolygon& poly,
                                 const Mat2& A, const Mat2& B, VertexGraph* graph_out) {
    ImageCheck res;
    res.min_margin = std::numeric_limits<double>::infinity();
    VertexGraph graph;
    graph.nodes = static_cast<int>(reps.size());
    for (std::size_t i = 0; i < reps.size(); ++i) {
        for (char gen : {'a', 'b'}) {
            const Vec2 q = (gen == 'a' ? A : B) * reps[i];
            auto [j, sign, dist] = nearest_signed(reps, q);
            if (dist <= kVertexMatchTol) {
                graph.edges.push_back(GraphEdge{static_cast<int>(i), gen, sign, j});
                continue;
            }
            const double margin = poly.signed_boundary_distance(q);
            if (margin <= kInteriorTol) {
                res.detail = std::string("image of vertex ") + std::to_string(i) + " under " +
                             gen + (margin < -kJoinTol ? " escapes the polygon"
                                                       : " is not strictly interior");
                if (graph_out) *graph_out = std::move(graph);
                return res;
            }
            res.min_margin = std::min(res.min_margin, margin);
        }
    }
    res.ok = true;
    if (!std::isfinite(res.min_margin)) res.min_margin = 0.0;  // all images were vertex hits
    if (graph_out) *graph_out = std::move(graph);
    return res;
}

}  // namespace detail

/// Re-derives the images of every polygon representative and verifies they
/// match the expected graph exactly, with all remaining images strictly
/// interior.
inline ImageCheck check_images(const SymmetricPolygon& poly, const Mat2& A, const Mat2& B,
                               const VertexGraph& expected, const std::vector<Vec2>& reps) {
    VertexGraph found;
    ImageCheck res = detail::analyze_images(reps, poly, A, B, &found);
    if (!res.ok) return res;
    if (found.edges.size() != expected.edges.size()) {
        res.ok = false;
        res.detail = "vertex-hit set differs from the declared graph";
        return res;
    }
    for (const GraphEdge& e : expected.edges) {
        if (std::find(found.edges.begin(), found.edges.end(), e) == found.edges.end()) {
            res.ok = false;
            res.detail = "declared edge missing";
            return res;
        }
    }
    return res;
}

/// Grows the symmetric invariant polygon for the rescaled pair (A, B).
///
/// Seeds one scaled leading eigenvector per cycle and repeatedly applies
/// +-A, +-B to every vertex: an image that coincides with a vertex becomes a
/// graph edge, an image strictly outside joins the vertex set, and interior
/// images are dropped. Terminates when the set is invariant or the budget
/// of vertex pairs is exceeded.
inline PolytopeBuild build_polytope(const Mat2& A, const Mat2& B, const std::vector<Word>& cycles,
                                    const std::vector<double>& ratios, int budget = kDefaultBudget) {
    PolytopeBuild out;
    if (cycles.empty() || ratios.size() != cycles.size()) {
        out.reason = "cycles and ratios must be nonempty and of equal length";
        return out;
    }
    std::vector<Vec2> reps;
    std::vector<int> seed_indices;
    for (std::size_t c = 0; c < cycles.size(); ++c) {
        const Mat2 prod = evaluate_word(cycles[c], A, B);
        const double rho = spectral_radius(prod);
        if (std::abs(rho - 1.0) > 1e-6) {
            out.reason = "cycle '" + cycles[c].str() + "' is not normalized to spectral radius 1";
            return out;
        }
        Vec2 seed;
        try {
            seed = leading_eigenvector(prod);
        } catch (const std::domain_error& e) {
            out.reason = e.what();
            return out;
        }
        seed = ratios[c] * seed;
        auto [j, sign, dist] = detail::nearest_signed(reps, seed);
        if (j >= 0 && dist <= kVertexMatchTol) {
            out.reason = "cycle eigenvectors collide";
            return out;
        }
        seed_indices.push_back(static_cast<int>(reps.size()));
        reps.push_back(detail::sign_normalize(seed));
    }

    std::deque<std::size_t> queue;
    for (std::size_t i = 0; i < reps.size(); ++i) queue.push_back(i);
    std::vector<double> join_gaps;

    auto rebuild_hull = [&]() {
        std::vector<Vec2> pts;
        pts.reserve(2 * reps.size());
        for (const Vec2& r : reps) {
            pts.push_back(r);
            pts.push_back(-r);
        }
        return strict_convex_hull(std::move(pts));
    };
    std::vector<Vec2> hull = rebuild_hull();

    while (!queue.empty()) {
        const std::size_t p = queue.front();
        queue.pop_front();
        for (char gen : {'a', 'b'}) {
            const Vec2 q = (gen == 'a' ? A : B) * reps[p];
            auto [j, sign, dist] = detail::nearest_signed(reps, q);
            if (dist <= kVertexMatchTol) continue;  // vertex hit; edges recorded at the end
            bool outside;
            if (hull.size() >= 4) {
                SymmetricPolygon cur(hull);
                const double sd = cur.signed_boundary_distance(q);
                outside = sd < -kJoinTol;
                if (outside) join_gaps.push_back(-sd);
            } else {
                // Rank-deficient bootstrap: everything is collinear with the
                // seeds so far. Off-line images are outside; on-line images
                // are inside if not longer than the current segment.
                Vec2 dir = reps.empty() ? Vec2{1.0, 0.0} : reps[0];
                const double dn = norm(dir);
                dir = (1.0 / dn) * dir;
                if (std::abs(cross(dir, q)) > 1e-12) {
                    outside = true;
                } else {
                    double longest = 0.0;
                    for (const Vec2& r : reps) longest = std::max(longest, norm(r));
                    outside = norm(q) > longest + kJoinTol;
                }
                if (outside) join_gaps.push_back(norm(q));
            }
            if (!outside) continue;
            if (static_cast<int>(reps.size()) >= budget) {
                const std::size_t n = join_gaps.size();
                bool growing = false;
                if (n >= 8) {
                    double early = 0.0, late = 0.0;
                    for (std::size_t t = 0; t < 4; ++t) {
                        early += join_gaps[t];
                        late += join_gaps[n - 1 - t];
                    }
                    growing = late > 1.5 * early && late / 4.0 > 1e-3;
                }
                out.reason = growing ? "diverging: outward jumps keep growing (joint spectral radius likely above 1)"
                                     : "vertex budget exceeded";
                return out;
            }
            queue.push_back(reps.size());
            reps.push_back(detail::sign_normalize(q));
            hull = rebuild_hull();
        }
    }

    std::vector<Vec2> final_hull = rebuild_hull();
    if (final_hull.size() < 4) {
        out.reason = "polygon is rank-deficient";
        return out;
    }
    SymmetricPolygon poly{final_hull};

    // Keep only representatives that survived as polygon vertices.
    std::vector<Vec2> final_reps;
    std::vector<int> ccw_rep(final_hull.size(), -1), ccw_sign(final_hull.size(), 1);
    for (std::size_t i = 0; i < final_hull.size(); ++i) {
        int sign = 1;
        const Vec2 rep = detail::sign_normalize(final_hull[i], &sign);
        auto [j, s2, dist] = detail::nearest_signed(final_reps, rep);
        if (j >= 0 && dist <= kVertexMatchTol) {
            ccw_rep[i] = j;
            ccw_sign[i] = sign * s2;
        } else {
            ccw_rep[i] = static_cast<int>(final_reps.size());
            ccw_sign[i] = sign;
            final_reps.push_back(rep);
        }
    }

    std::vector<int> final_seeds;
    for (int s : seed_indices) {
        auto [j, sign, dist] = detail::nearest_signed(final_reps, reps[static_cast<std::size_t>(s)]);
        if (j < 0 || dist > kVertexMatchTol) {
            out.reason = "a cycle eigenvector was absorbed into the polygon interior";
            return out;
        }
        final_seeds.push_back(j);
    }

    VertexGraph graph;
    const ImageCheck images = detail::analyze_images(final_reps, poly, A, B, &graph);
    if (!images.ok) {
        out.reason = images.detail;
        return out;
    }

    out.ok = true;
    out.reps = std::move(final_reps);
    out.polygon = std::move(poly);
    out.ccw_rep = std::move(ccw_rep);
    out.ccw_sign = std::move(ccw_sign);
    out.graph = std::move(graph);
    out.seeds = std::move(final_seeds);
    out.min_margin = images.min_margin;
    return out;
}

namespace detail {

/// Simple directed cycles of the sign-quotient graph, provided every
/// recurrent node lies on exactly one; nullopt when some recurrent part is
/// not a simple cycle.
inline std::optional<std::vector<std::vector<GraphEdge>>> recurrent_cycles(const VertexGraph& g) {
    const int n = g.nodes;
    // A node is recurrent iff it can reach itself.
    std::vector<std::vector<GraphEdge>> adj(static_cast<std::size_t>(n));
    for (const GraphEdge& e : g.edges) adj[static_cast<std::size_t>(e.from)].push_back(e);
    std::vector<bool> recurrent(static_cast<std::size_t>(n), false);
    for (int s = 0; s < n; ++s) {
        std::vector<bool> seen(static_cast<std::size_t>(n), false);
        std::vector<int> stack{s};
        bool back = false;
        while (!stack.empty() && !back) {
            const int u = stack.back();
            stack.pop_back();
            for (const GraphEdge& e : adj[static_cast<std::size_t>(u)]) {
                if (e.to == s) { back = true; break; }
                if (!seen[static_cast<std::size_t>(e.to)]) {
                    seen[static_cast<std::size_t>(e.to)] = true;
                    stack.push_back(e.to);
                }
            }
        }
        recurrent[static_cast<std::size_t>(s)] = back;
    }
    // Each recurrent node must have exactly one out-edge to a recurrent node,
    // and following those edges must partition the recurrent set into simple
    // cycles.
    std::vector<int> next(static_cast<std::size_t>(n), -1);
    std::vector<const GraphEdge*> via(static_cast<std::size_t>(n), nullptr);
    for (int u = 0; u < n; ++u) {
        if (!recurrent[static_cast<std::size_t>(u)]) continue;
        for (const GraphEdge& e : adj[static_cast<std::size_t>(u)]) {
            if (!recurrent[static_cast<std::size_t>(e.to)]) continue;
            if (next[static_cast<std::size_t>(u)] != -1) return std::nullopt;  // branching recurrence
            next[static_cast<std::size_t>(u)] = e.to;
            via[static_cast<std::size_t>(u)] = &e;
        }
        if (next[static_cast<std::size_t>(u)] == -1) return std::nullopt;
    }
    std::vector<std::vector<GraphEdge>> cycles;
    std::vector<bool> used(static_cast<std::size_t>(n), false);
    for (int s = 0; s < n; ++s) {
        if (!recurrent[static_cast<std::size_t>(s)] || used[static_cast<std::size_t>(s)]) continue;
        std::vector<GraphEdge> cyc;
        int u = s;
        do {
            if (used[static_cast<std::size_t>(u)]) return std::nullopt;  // lasso, not a cycle
            used[static_cast<std::size_t>(u)] = true;
            cyc.push_back(*via[static_cast<std::size_t>(u)]);
            u = next[static_cast<std::size_t>(u)];
        } while (u != s);
        cycles.push_back(std::move(cyc));
    }
    return cycles;
}

/// Word carried by a cycle of the vertex graph. Edges are listed in
/// application order, so the word reads them in reverse.
inline Word cycle_word(const std::vector<GraphEdge>& cycle) {
    std::string letters;
    for (auto it = cycle.rbegin(); it != cycle.rend(); ++it) letters += it->gen;
    return Word(std::move(letters));
}

}  // namespace detail

/// True iff the recurrent part of the sign-quotient graph is exactly a
/// disjoint union of simple cycles carrying the declared cycle words (up to
/// rotation), one cycle per declared word. Every unbounded path then winds a
/// declared cycle, which pins down the set of maximizing products.
inline bool uniqueness_check(const VertexGraph& graph, const std::vector<Word>& cycles) {
    auto found = detail::recurrent_cycles(graph);
    if (!found) return false;
    if (found->size() != cycles.size()) return false;
    std::vector<std::string> want;
    for (const Word& w : cycles) want.push_back(canonical_rotation(w).str());
    std::sort(want.begin(), want.end());
    std::vector<std::string> got;
    for (const auto& cyc : *found) got.push_back(canonical_rotation(detail::cycle_word(cyc)).str());
    std::sort(got.begin(), got.end());
    return want == got;
}

/// Searches the relative scaling of the second (and later) cycle
/// eigenvectors that maximizes the least interior clearance of the built
/// polytope: a 64-point geometric grid on [0.5, 2] refined by golden
/// section. Throws std::domain_error when no ratio yields a valid polytope.
inline std::vector<double> balancing_search(const Mat2& A, const Mat2& B,
                                            const std::vector<Word>& cycles,
                                            int budget = kDefaultBudget) {
    if (cycles.size() < 2) return std::vector<double>(cycles.size(), 1.0);
    auto objective = [&](double r) {
        std::vector<double> ratios(cycles.size(), r);
        ratios[0] = 1.0;
        const PolytopeBuild b = build_polytope(A, B, cycles, ratios, budget);
        return b.ok ? b.min_margin : -1.0;
    };
    const int grid_points = 64;
    const double lo = 0.5, hi = 2.0;
    double best_r = lo, best_val = -1.0;
    for (int i = 0; i < grid_points; ++i) {
        const double r = lo * std::pow(hi / lo, static_cast<double>(i) / (grid_points - 1));
        const double val = objective(r);
        if (val > best_val) { best_val = val; best_r = r; }
    }
    if (best_val <= 0.0) throw std::domain_error("balancing_search: no ratio yields a valid polytope");
    const double step = std::pow(hi / lo, 1.0 / (grid_points - 1));
    double a = best_r / step, b = best_r * step;
    const double gr = (std::sqrt(5.0) - 1.0) / 2.0;
    double c = b - gr * (b - a), d = a + gr * (b - a);
    double fc = objective(c), fd = objective(d);
    for (int it = 0; it < 40; ++it) {
        if (fc > fd) {
            b = d; d = c; fd = fc;
            c = b - gr * (b - a);
            fc = objective(c);
            if (fc > best_val) { best_val = fc; best_r = c; }
        } else {
            a = c; c = d; fc = fd;
            d = a + gr * (b - a);
            fd = objective(d);
            if (fd > best_val) { best_val = fd; best_r = d; }
        }
    }
    std::vector<double> ratios(cycles.size(), best_r);
    ratios[0] = 1.0;
    return ratios;
}

enum class Verdict { certified_unique_pair, certified, failed };

inline std::string to_string(Verdict v) {
    switch (v) {
        case Verdict::certified_unique_pair: return "certified-unique-pair";
        case Verdict::certified: return "certified";
        default: return "failed";
    }
}

/// Verdict bundle proving (or refusing to prove) a maximizing-product claim
/// for a matrix pair.
struct Certificate {
    Verdict verdict = Verdict::failed;
    std::string reason;

    Mat2 input_A, input_B;          // pair as given
    Mat2 A, B;                      // rescaled pair the polygon is invariant under
    double rescale_factor = 0.0;    // input / rescale_factor = (A, B)
    double jsr = 0.0;               // joint spectral radius of the input pair (= rescale_factor)
    std::vector<Word> smp_words;

    SymmetricPolygon polygon;
    std::vector<Vec2> reps;
    std::vector<int> ccw_rep, ccw_sign;
    VertexGraph graph;
    std::vector<int> seeds;
    std::vector<double> ratios;

    double min_interior_margin = 0.0;
    double max_interior_angle_deg = 0.0;

    bool certified() const { return verdict != Verdict::failed; }
    double balancing_ratio() const { return ratios.size() > 1 ? ratios[1] : 1.0; }
};

struct CertifyOptions {
    int budget = kDefaultBudget;
};

/// Runs the full pipeline: rescale so the first candidate product has
/// spectral radius 1, balance, build the polytope, then check convexity,
/// invariance and uniqueness. Failures come back as a verdict, never as an
/// exception.
inline Certificate certify(const Mat2& A_in, const Mat2& B_in, const std::vector<Word>& candidates,
                           const CertifyOptions& opts = {}) {
    Certificate cert;
    cert.input_A = A_in;
    cert.input_B = B_in;
    cert.smp_words = candidates;
    auto fail = [&](std::string why) {
        cert.verdict = Verdict::failed;
        cert.reason = std::move(why);
        return cert;
    };
    if (candidates.empty()) return fail("no candidate words");
    for (const Word& w : candidates)
        if (!is_primitive(w)) return fail("candidate '" + w.str() + "' is not primitive");
    for (std::size_t i = 0; i < candidates.size(); ++i)
        for (std::size_t j = i + 1; j < candidates.size(); ++j)
            if (canonical_rotation(candidates[i]) == canonical_rotation(candidates[j]))
                return fail("candidates repeat a rotation class");

    const double rho0 = spectral_radius(evaluate_word(candidates[0], A_in, B_in));
    if (!(rho0 > 0.0) || !std::isfinite(rho0)) return fail("candidate product has zero spectral radius");
    const double scale = std::pow(rho0, 1.0 / static_cast<double>(candidates[0].length()));
    const Mat2 A = (1.0 / scale) * A_in;
    const Mat2 B = (1.0 / scale) * B_in;
    cert.A = A;
    cert.B = B;
    cert.rescale_factor = scale;
    for (const Word& w : candidates) {
        const double r = spectral_radius(evaluate_word(w, A, B));
        if (std::abs(std::pow(r, 1.0 / static_cast<double>(w.length())) - 1.0) > 1e-7)
            return fail("candidate '" + w.str() + "' does not share the leading normalized spectral radius");
    }

    std::vector<double> ratios;
    try {
        ratios = balancing_search(A, B, candidates, opts.budget);
    } catch (const std::domain_error& e) {
        return fail(e.what());
    }
    cert.ratios = ratios;

    const PolytopeBuild build = build_polytope(A, B, candidates, ratios, opts.budget);
    if (!build.ok) return fail(build.reason);

    const ConvexityReport conv = check_convex_position(build.polygon);
    if (!conv.ok) return fail("polygon vertices are not in strictly convex position");

    if (!uniqueness_check(build.graph, candidates))
        return fail("recurrent part of the vertex graph does not match the candidate cycles");

    cert.polygon = build.polygon;
    cert.reps = build.reps;
    cert.ccw_rep = build.ccw_rep;
    cert.ccw_sign = build.ccw_sign;
    cert.graph = build.graph;
    cert.seeds = build.seeds;
    cert.min_interior_margin = build.min_margin;
    cert.max_interior_angle_deg = conv.max_interior_angle_deg;
    cert.jsr = scale;

    const bool chiral_pair =
        candidates.size() == 2 && is_chiral(candidates[0]) &&
        canonical_rotation(mirror(candidates[0])) == canonical_rotation(candidates[1]);
    cert.verdict = chiral_pair ? Verdict::certified_unique_pair : Verdict::certified;
    return cert;
}

/// Operator norm of M with respect to the Minkowski gauge of the polygon.
inline double polytope_norm(const SymmetricPolygon& poly, const Mat2& M) {
    if (!poly.valid()) throw std::invalid_argument("polytope_norm: degenerate polygon");
    double n = 0.0;
    for (const Vec2& v : poly.vertices()) n = std::max(n, poly.gauge(M * v));
    return n;
}

/// Largest residual of the eigen-equation the polar norm must satisfy for
/// the transpose pair, sampled over `samples` directions of the unit
/// circle. A small residual is evidence (not proof) that the polar gauge is
/// an exact extremal norm for the transposes.
inline double barabanov_polar_check(const SymmetricPolygon& poly, const Mat2& A, const Mat2& B,
                                    int samples) {
    if (samples < 1) throw std::invalid_argument("barabanov_polar_check: samples must be >= 1");
    const SymmetricPolygon polar = poly.polar();
    const Mat2 At = A.transpose(), Bt = B.transpose();
    double worst = 0.0;
    for (int i = 0; i < samples; ++i) {
        const double th = (2.0 * std::numbers::pi * (i + 0.5)) / samples;
        const Vec2 v{std::cos(th), std::sin(th)};
        const double lhs = std::max(polar.gauge(At * v), polar.gauge(Bt * v));
        worst = std::max(worst, std::abs(lhs - polar.gauge(v)));
    }
    return worst;
}

namespace detail {

struct CEigen {
    std::complex<double> value;
    CVec2 vector;  // unit, phase arbitrary
};

inline std::optional<CEigen> leading_eigen(const CMat2& m) {
    using C = std::complex<double>;
    const C tau = m.trace();
    const C disc = std::sqrt(tau * tau - 4.0 * m.det());
    const C l1 = (tau + disc) / 2.0, l2 = (tau - disc) / 2.0;
    const C lead = std::abs(l1) >= std::abs(l2) ? l1 : l2;
    const C other = std::abs(l1) >= std::abs(l2) ? l2 : l1;
    if (!(std::abs(lead) > std::abs(other) * (1.0 + 1e-12))) return std::nullopt;
    const CVec2 c1{m.a12, lead - m.a11};
    const CVec2 c2{lead - m.a22, m.a21};
    const double n1 = std::sqrt(std::norm(c1[0]) + std::norm(c1[1]));
    const double n2 = std::sqrt(std::norm(c2[0]) + std::norm(c2[1]));
    CVec2 v = n1 >= n2 ? c1 : c2;
    const double n = std::max(n1, n2);
    if (n == 0.0) return std::nullopt;
    v[0] /= n;
    v[1] /= n;
    return CEigen{lead, v};
}

}  // namespace detail

/// Transfers a real certificate to a complex perturbation of the pair.
///
/// The perturbed vertex vectors are rebuilt by following the certificate's
/// graph from freshly computed cycle eigenvectors. Vertex-hit images must
/// stay parallel to their targets with a coefficient of modulus at most 1;
/// every other image is expanded over the perturbed copy of the triangle
/// slice (0, v_k, v_{k+1}) that contains its unperturbed counterpart, and
/// the coefficients must satisfy |alpha| + |beta| < 1. All checks passing
/// means the absolute convex hull of the rebuilt vectors is invariant, so
/// the perturbed pair keeps joint spectral radius 1 with the same
/// maximizing products. Returns false (never throws) when a check fails.
inline bool certify_complex(const CMat2& A, const CMat2& B, const Certificate& base) {
    if (!base.certified())
        throw std::invalid_argument("certify_complex: base certificate is not a certification");
    const std::size_t m = base.reps.size();
    std::vector<bool> have(m, false);
    std::vector<CVec2> tv(m);

    for (std::size_t c = 0; c < base.smp_words.size(); ++c) {
        const CMat2 prod = evaluate_word(base.smp_words[c], A, B);
        const auto eig = detail::leading_eigen(prod);
        if (!eig) return false;
        if (std::abs(std::abs(eig->value) - 1.0) > 1e-6) return false;  // pair not rescaled
        const std::size_t seed = static_cast<std::size_t>(base.seeds[c]);
        const double r = base.ratios[c];
        tv[seed] = {r * eig->vector[0], r * eig->vector[1]};
        have[seed] = true;
    }

    // Propagate along graph edges until every representative is rebuilt.
    bool progress = true;
    while (progress) {
        progress = false;
        for (const GraphEdge& e : base.graph.edges) {
            const auto from = static_cast<std::size_t>(e.from);
            const auto to = static_cast<std::size_t>(e.to);
            if (!have[from] || have[to]) continue;
            const CVec2 img = (e.gen == 'a' ? A : B) * tv[from];
            tv[to] = {static_cast<double>(e.sign) * img[0], static_cast<double>(e.sign) * img[1]};
            have[to] = true;
            progress = true;
        }
    }
    for (std::size_t i = 0; i < m; ++i)
        if (!have[i]) return false;

    const std::size_t n = base.polygon.size();
    auto perturbed_ccw = [&](std::size_t i) -> CVec2 {
        const CVec2& r = tv[static_cast<std::size_t>(base.ccw_rep[i])];
        const double s = static_cast<double>(base.ccw_sign[i]);
        return {s * r[0], s * r[1]};
    };

    for (std::size_t j = 0; j < m; ++j) {
        for (char gen : {'a', 'b'}) {
            const CVec2 img = (gen == 'a' ? A : B) * tv[j];
            const GraphEdge* edge = nullptr;
            for (const GraphEdge& e : base.graph.edges)
                if (e.from == static_cast<int>(j) && e.gen == gen) { edge = &e; break; }
            if (edge) {
                // Image must be a unimodular multiple of its target (exact
                // for tree edges, a phase for cycle closures).
                const CVec2& t = tv[static_cast<std::size_t>(edge->to)];
                const std::complex<double> denom = std::conj(t[0]) * t[0] + std::conj(t[1]) * t[1];
                const std::complex<double> coef =
                    (std::conj(t[0]) * img[0] + std::conj(t[1]) * img[1]) / denom;
                const std::complex<double> r0 = img[0] - coef * t[0];
                const std::complex<double> r1 = img[1] - coef * t[1];
                const double resid = std::sqrt(std::norm(r0) + std::norm(r1));
                if (resid > 1e-6) return false;
                if (std::abs(coef) > 1.0 + 1e-9) return false;
                continue;
            }
            // Locate the slice of the real polygon containing the
            // unperturbed image.
            const Vec2 q = (gen == 'a' ? base.A : base.B) * base.reps[j];
            std::size_t slice = n;
            double best_min = -std::numeric_limits<double>::infinity();
            for (std::size_t k = 0; k < n; ++k) {
                const Vec2 a = base.polygon[k], b = base.polygon[(k + 1) % n];
                const double det = cross(a, b);
                if (det <= kCollinearEps) continue;
                const double alpha = cross(q, b) / det;
                const double beta = cross(a, q) / det;
                const double worst = std::min(alpha, beta);
                if (worst > best_min) { best_min = worst; slice = k; }
            }
            if (slice == n || best_min < -1e-9) return false;
            const CVec2 ta = perturbed_ccw(slice);
            const CVec2 tb = perturbed_ccw((slice + 1) % n);
            const std::complex<double> det = ta[0] * tb[1] - ta[1] * tb[0];
            if (std::abs(det) < 1e-14) return false;
            const std::complex<double> alpha = (img[0] * tb[1] - img[1] * tb[0]) / det;
            const std::complex<double> beta = (ta[0] * img[1] - ta[1] * img[0]) / det;
            if (std::abs(alpha) + std::abs(beta) >= 1.0) return false;
        }
    }
    return true;
}

}  // namespace jsrforge
