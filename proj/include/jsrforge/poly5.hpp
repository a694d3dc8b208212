#pragma once

#include <algorithm>
#include <array>
#include <cstdint>
#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace jsrforge {

/// Exponent vector for the variables (x, y, z, u, v), in that order.
using Exp5 = std::array<std::uint8_t, 5>;

inline constexpr std::array<const char*, 5> kVarNames = {"x", "y", "z", "u", "v"};

namespace detail {

inline std::int64_t checked_add(std::int64_t a, std::int64_t b) {
    std::int64_t r;
    if (__builtin_add_overflow(a, b, &r))
        throw std::overflow_error("Poly5: 64-bit coefficient overflow");
    return r;
}

inline std::int64_t checked_mul(std::int64_t a, std::int64_t b) {
    std::int64_t r;
    if (__builtin_mul_overflow(a, b, &r))
        throw std::overflow_error("Poly5: 64-bit coefficient overflow");
    return r;
}

inline int total_degree(const Exp5& e) {
    int d = 0;
    for (auto c : e) d += c;
    return d;
}

/// Graded-lex order, highest first: larger total degree wins, ties broken
/// lexicographically on (e_x, e_y, e_z, e_u, e_v).
inline bool graded_lex_greater(const Exp5& a, const Exp5& b) {
    const int da = total_degree(a), db = total_degree(b);
    if (da != db) return da > db;
    return a > b;
}

}  // namespace detail

/// Sparse polynomial in (x, y, z, u, v) with exact signed 64-bit integer
/// coefficients. Zero coefficients are never stored. Arithmetic throws
/// std::overflow_error instead of wrapping.
class Poly5 {
public:
    using TermMap = std::map<Exp5, std::int64_t>;

    Poly5() = default;
    explicit Poly5(std::int64_t c) {
        if (c != 0) terms_[Exp5{0, 0, 0, 0, 0}] = c;
    }

    static Poly5 variable(int index) {
        if (index < 0 || index > 4) throw std::invalid_argument("Poly5::variable: index");
        Exp5 e{0, 0, 0, 0, 0};
        e[static_cast<std::size_t>(index)] = 1;
        return monomial(e, 1);
    }

    static Poly5 monomial(const Exp5& e, std::int64_t c) {
        Poly5 p;
        if (c != 0) p.terms_[e] = c;
        return p;
    }

    const TermMap& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }
    std::size_t num_terms() const { return terms_.size(); }

    int max_exponent() const {
        int m = 0;
        for (const auto& [e, c] : terms_)
            for (auto x : e) m = std::max(m, static_cast<int>(x));
        return m;
    }

    friend bool operator==(const Poly5& l, const Poly5& r) { return l.terms_ == r.terms_; }
    friend bool operator!=(const Poly5& l, const Poly5& r) { return !(l == r); }

    Poly5& operator+=(const Poly5& o) {
        for (const auto& [e, c] : o.terms_) add_term(e, c);
        return *this;
    }
    Poly5& operator-=(const Poly5& o) {
        for (const auto& [e, c] : o.terms_) add_term(e, detail::checked_mul(c, -1));
        return *this;
    }

    friend Poly5 operator+(Poly5 l, const Poly5& r) { return l += r; }
    friend Poly5 operator-(Poly5 l, const Poly5& r) { return l -= r; }

    Poly5 operator-() const {
        Poly5 p;
        for (const auto& [e, c] : terms_) p.terms_[e] = detail::checked_mul(c, -1);
        return p;
    }

    friend Poly5 operator*(const Poly5& l, const Poly5& r) {
        Poly5 p;
        for (const auto& [ea, ca] : l.terms_) {
            for (const auto& [eb, cb] : r.terms_) {
                Exp5 e;
                for (std::size_t i = 0; i < 5; ++i) {
                    const int s = ea[i] + eb[i];
                    if (s > 255) throw std::overflow_error("Poly5: exponent overflow");
                    e[i] = static_cast<std::uint8_t>(s);
                }
                p.add_term(e, detail::checked_mul(ca, cb));
            }
        }
        return p;
    }

    friend Poly5 operator*(const Poly5& l, std::int64_t s) { return l * Poly5(s); }
    friend Poly5 operator*(std::int64_t s, const Poly5& r) { return r * Poly5(s); }

    /// Sets u = 1 and v = 1, collapsing onto (x, y, z).
    Poly5 substitute_uv1() const {
        Poly5 p;
        for (const auto& [e, c] : terms_) {
            Exp5 r = e;
            r[3] = 0;
            r[4] = 0;
            p.add_term(r, c);
        }
        return p;
    }

    double eval(const std::array<double, 5>& point) const {
        double acc = 0.0;
        for (const auto& [e, c] : terms_) {
            double m = static_cast<double>(c);
            for (std::size_t i = 0; i < 5; ++i)
                for (int k = 0; k < e[i]; ++k) m *= point[i];
            acc += m;
        }
        return acc;
    }

    /// If every term has the same weighted degree under `weights`, returns
    /// that degree.
    std::optional<int> weighted_degree(const std::array<int, 5>& weights) const {
        std::optional<int> deg;
        for (const auto& [e, c] : terms_) {
            int d = 0;
            for (std::size_t i = 0; i < 5; ++i) d += weights[i] * e[i];
            if (!deg)
                deg = d;
            else if (*deg != d)
                return std::nullopt;
        }
        return deg ? deg : std::optional<int>(0);
    }

    /// Canonical text form, terms in descending graded-lex order:
    /// "x^2 - 2*u", "0" when empty.
    std::string to_string() const {
        if (terms_.empty()) return "0";
        std::vector<std::pair<Exp5, std::int64_t>> ts(terms_.begin(), terms_.end());
        std::sort(ts.begin(), ts.end(), [](const auto& l, const auto& r) {
            return detail::graded_lex_greater(l.first, r.first);
        });
        std::string out;
        bool first = true;
        for (const auto& [e, c] : ts) {
            const bool neg = c < 0;
            std::uint64_t mag = neg ? (c == INT64_MIN ? static_cast<std::uint64_t>(INT64_MAX) + 1
                                                      : static_cast<std::uint64_t>(-c))
                                    : static_cast<std::uint64_t>(c);
            if (first) {
                if (neg) out += "-";
                first = false;
            } else {
                out += neg ? " - " : " + ";
            }
            std::string vars;
            for (std::size_t i = 0; i < 5; ++i) {
                if (e[i] == 0) continue;
                if (!vars.empty()) vars += "*";
                vars += kVarNames[i];
                if (e[i] > 1) vars += "^" + std::to_string(static_cast<int>(e[i]));
            }
            if (vars.empty()) {
                out += std::to_string(mag);
            } else {
                if (mag != 1) out += std::to_string(mag) + "*";
                out += vars;
            }
        }
        return out;
    }

private:
    void add_term(const Exp5& e, std::int64_t c) {
        if (c == 0) return;
        auto it = terms_.find(e);
        if (it == terms_.end()) {
            terms_[e] = c;
        } else {
            it->second = detail::checked_add(it->second, c);
            if (it->second == 0) terms_.erase(it);
        }
    }

    TermMap terms_;
};

}  // namespace jsrforge
