#pragma once

#include <algorithm>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace jsrforge {

/// A nonempty finite word over the alphabet {a, b}.
///
/// Words index matrix products: the letter `a` stands for the first matrix
/// of a pair and `b` for the second. Rotation classes (necklaces) are
/// represented by their lexicographically least rotation.
class Word {
public:
    explicit Word(std::string letters) : letters_(std::move(letters)) {
        if (letters_.empty())
            throw std::invalid_argument("Word: empty");
        for (char c : letters_)
            if (c != 'a' && c != 'b')
                throw std::invalid_argument("Word: letters must be 'a' or 'b'");
    }

    const std::string& str() const { return letters_; }
    std::size_t length() const { return letters_.size(); }
    char operator[](std::size_t i) const { return letters_[i]; }

    std::size_t count_a() const {
        return static_cast<std::size_t>(std::count(letters_.begin(), letters_.end(), 'a'));
    }
    std::size_t count_b() const { return length() - count_a(); }

    friend bool operator==(const Word& l, const Word& r) { return l.letters_ == r.letters_; }
    friend bool operator!=(const Word& l, const Word& r) { return l.letters_ != r.letters_; }
    friend bool operator<(const Word& l, const Word& r) { return l.letters_ < r.letters_; }

private:
    std::string letters_;
};

/// Parses a word, accepting exponent notation: "a2bab2" -> "aababb".
/// Uppercase letters are accepted and folded to lowercase.
inline Word parse_word(std::string_view text) {
    std::string out;
    std::size_t i = 0;
    while (i < text.size()) {
        char c = text[i];
        if (c == 'A') c = 'a';
        if (c == 'B') c = 'b';
        if (c != 'a' && c != 'b')
            throw std::invalid_argument("parse_word: unexpected character '" +
                                        std::string(1, text[i]) + "'");
        ++i;
        std::size_t rep = 1;
        if (i < text.size() && std::isdigit(static_cast<unsigned char>(text[i]))) {
            rep = 0;
            while (i < text.size() && std::isdigit(static_cast<unsigned char>(text[i]))) {
                rep = rep * 10 + static_cast<std::size_t>(text[i] - '0');
                if (rep > 1000) throw std::invalid_argument("parse_word: exponent too large");
                ++i;
            }
            if (rep == 0) throw std::invalid_argument("parse_word: zero exponent");
        }
        out.append(rep, c);
    }
    if (out.empty()) throw std::invalid_argument("parse_word: empty word");
    return Word(std::move(out));
}

/// Renders a word with run-length exponents: "aababb" -> "a2bab2".
inline std::string exponent_form(const Word& w) {
    const std::string& s = w.str();
    std::string out;
    std::size_t i = 0;
    while (i < s.size()) {
        std::size_t j = i;
        while (j < s.size() && s[j] == s[i]) ++j;
        out += s[i];
        if (j - i > 1) out += std::to_string(j - i);
        i = j;
    }
    return out;
}

inline Word mirror(const Word& w) {
    std::string r(w.str().rbegin(), w.str().rend());
    return Word(std::move(r));
}

inline Word letter_swap(const Word& w) {
    std::string s = w.str();
    for (char& c : s) c = (c == 'a') ? 'b' : 'a';
    return Word(std::move(s));
}

namespace detail {

inline std::string rotation_of(const std::string& s, std::size_t k) {
    return s.substr(k) + s.substr(0, k);
}

/// Least rotation in O(n^2); word lengths here are tiny.
inline std::string least_rotation(const std::string& s) {
    std::string best = s;
    for (std::size_t k = 1; k < s.size(); ++k) {
        std::string r = rotation_of(s, k);
        if (r < best) best = r;
    }
    return best;
}

inline bool is_rotation(const std::string& of, const std::string& candidate) {
    if (of.size() != candidate.size()) return false;
    return (of + of).find(candidate) != std::string::npos;
}

}  // namespace detail

/// All distinct cyclic rotations of `w`.
inline std::vector<Word> cyclic_rotations(const Word& w) {
    std::vector<std::string> rots;
    rots.reserve(w.length());
    for (std::size_t k = 0; k < w.length(); ++k)
        rots.push_back(detail::rotation_of(w.str(), k));
    std::sort(rots.begin(), rots.end());
    rots.erase(std::unique(rots.begin(), rots.end()), rots.end());
    std::vector<Word> out;
    out.reserve(rots.size());
    for (auto& r : rots) out.emplace_back(std::move(r));
    return out;
}

/// Lexicographically least rotation; the canonical class representative.
inline Word canonical_rotation(const Word& w) {
    return Word(detail::least_rotation(w.str()));
}

/// True iff `w` is not a power u^m (m >= 2) of a shorter word.
inline bool is_primitive(const Word& w) {
    const std::string& s = w.str();
    const std::size_t n = s.size();
    for (std::size_t p = 1; p <= n / 2; ++p) {
        if (n % p != 0) continue;
        bool periodic = true;
        for (std::size_t i = p; i < n; ++i)
            if (s[i] != s[i - p]) { periodic = false; break; }
        if (periodic) return false;
    }
    return true;
}

/// True iff `w` is primitive and its mirror image is not among its cyclic
/// rotations. Restricting to primitive words makes chirality a property of
/// the underlying primitive class: powers inherit it from their root, so
/// they are never counted separately.
inline bool is_chiral(const Word& w) {
    if (!is_primitive(w)) return false;
    const std::string m(w.str().rbegin(), w.str().rend());
    return !detail::is_rotation(w.str(), m);
}

/// All binary Lyndon words of length 1..max_len, ordered by length then
/// lexicographically. Uses the Duval/FKM successor construction.
inline std::vector<Word> lyndon_words(int max_len) {
    if (max_len < 1) throw std::invalid_argument("lyndon_words: max_len must be >= 1");
    const std::size_t n = static_cast<std::size_t>(max_len);
    std::vector<Word> out;
    std::string w = "a";
    while (true) {
        out.emplace_back(w);
        // Extend periodically to length n, then increment the last
        // incrementable position.
        std::string s;
        s.reserve(n);
        while (s.size() < n) s += w[s.size() % w.size()];
        while (!s.empty() && s.back() == 'b') s.pop_back();
        if (s.empty()) break;
        s.back() = 'b';
        w = std::move(s);
    }
    std::stable_sort(out.begin(), out.end(),
                     [](const Word& l, const Word& r) { return l.length() < r.length(); });
    return out;
}

/// Image of `w` under the semigroup homomorphism a -> img_a, b -> img_b.
inline Word substitute(const Word& w, const Word& img_a, const Word& img_b) {
    std::string out;
    out.reserve(w.length() * std::max(img_a.length(), img_b.length()));
    for (char c : w.str()) out += (c == 'a' ? img_a.str() : img_b.str());
    return Word(std::move(out));
}

struct ChiralFraction {
    std::uint64_t chiral_count = 0;  // chiral primitive rotation classes
    std::uint64_t total = 0;         // all primitive rotation classes of this length
    double value() const { return static_cast<double>(chiral_count) / static_cast<double>(total); }
};

/// Fraction of primitive length-`len` words that are chiral, by exact
/// enumeration of rotation classes (chirality is a class property, so the
/// fraction among primitive words equals the fraction among their classes).
/// Capped at 24 to keep enumeration fast.
inline ChiralFraction chiral_fraction(int len) {
    if (len < 1 || len > 24) throw std::invalid_argument("chiral_fraction: len must be in [1,24]");
    std::uint64_t classes = 0, chiral = 0;
    std::string w = "a";
    const std::size_t n = static_cast<std::size_t>(len);
    while (true) {
        if (w.size() == n) {
            ++classes;
            const std::string m(w.rbegin(), w.rend());
            if (!detail::is_rotation(w, m)) ++chiral;
        }
        std::string s;
        s.reserve(n);
        while (s.size() < n) s += w[s.size() % w.size()];
        while (!s.empty() && s.back() == 'b') s.pop_back();
        if (s.empty()) break;
        s.back() = 'b';
        w = std::move(s);
    }
    return ChiralFraction{chiral, classes};
}

/// A chiral pair: a primitive rotation class together with the class of its
/// mirror image, both given by canonical (Lyndon) representatives with the
/// lexicographically smaller first.
struct ChiralPair {
    Word first;
    Word second;
};

namespace detail {

inline std::pair<std::string, std::string> ordered_pair(std::string a, std::string b) {
    if (b < a) std::swap(a, b);
    return {std::move(a), std::move(b)};
}

}  // namespace detail

/// All chiral pairs of length <= max_len: one entry per unordered pair of
/// mutually mirrored rotation classes. 23 pairs up to length 9.
inline std::vector<ChiralPair> chiral_pairs(int max_len) {
    std::vector<ChiralPair> out;
    std::vector<std::pair<std::string, std::string>> seen;
    for (const Word& w : lyndon_words(max_len)) {
        if (!is_chiral(w)) continue;
        const auto key = detail::ordered_pair(w.str(), canonical_rotation(mirror(w)).str());
        if (std::find(seen.begin(), seen.end(), key) != seen.end()) continue;
        seen.push_back(key);
        out.push_back(ChiralPair{Word(key.first), Word(key.second)});
    }
    return out;
}

/// Chiral pairs additionally identified under the letter exchange a <-> b;
/// the coarser count behind "one chiral pair of length 7".
inline std::vector<ChiralPair> chiral_pair_orbits(int max_len) {
    std::vector<ChiralPair> out;
    std::vector<std::pair<std::string, std::string>> seen;
    for (const ChiralPair& p : chiral_pairs(max_len)) {
        const auto key = detail::ordered_pair(p.first.str(), p.second.str());
        const auto swapped = detail::ordered_pair(canonical_rotation(letter_swap(p.first)).str(),
                                                  canonical_rotation(letter_swap(p.second)).str());
        const auto orbit = std::min(key, swapped);
        if (std::find(seen.begin(), seen.end(), orbit) != seen.end()) continue;
        seen.push_back(orbit);
        out.push_back(ChiralPair{Word(orbit.first), Word(orbit.second)});
    }
    return out;
}

}  // namespace jsrforge
