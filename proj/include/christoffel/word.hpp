#pragma once

#include <algorithm>
#include <numeric>
#include <optional>
#include <set>
#include <string>
#include <string_view>
#include <vector>

#include "errors.hpp"
#include "lexarray.hpp"
#include "numtheory.hpp"

namespace christoffel {

// Christoffel words over a two-letter alphabet. A binary word is
// Christoffel when it is Lyndon and cyclically balanced; it is determined
// by its length n, its type m (number of occurrences of the first letter,
// always coprime to n) and the letter pair. All comparisons below use the
// positional order: the word's own first letter ranks low.

class ChristoffelWord {
public:
    ChristoffelWord(std::size_t n, std::size_t m, char a, char b) : n_(n), m_(m), a_(a), b_(b) {
        if (n < 2 || m == 0 || m >= n || std::gcd(m, n) != 1)
            raise(errc::not_coprime, "type " + std::to_string(m) + " invalid for length " + std::to_string(n));
        if (a == b) raise(errc::equal_letters, std::string("letters must differ, got '") + a + "'");
    }

    std::size_t length() const { return n_; }
    std::size_t type() const { return m_; }
    char first_letter() const { return a_; }
    char other_letter() const { return b_; }

    // Position j carries the first letter iff (-j*m) mod n < m.
    std::string letters() const {
        std::string w(n_, b_);
        for (std::size_t j = 0; j < n_; ++j)
            if ((n_ - j * m_ % n_) % n_ < m_) w[j] = a_;
        return w;
    }

    std::size_t shift() const { return mod_inverse(m_, n_); }

    bool operator==(const ChristoffelWord&) const = default;

private:
    std::size_t n_, m_;
    char a_, b_;
};

inline ChristoffelWord christoffel_word(std::size_t n, std::size_t m, char a, char b) {
    return ChristoffelWord(n, m, a, b);
}

// Strictly least among its rotations, first letter ranking low.
inline bool is_lyndon(std::string_view w) {
    std::size_t n = w.size();
    if (n == 0) return false;
    auto rank = [&](char c) { return c == w[0] ? 0 : 1; };
    for (std::size_t r = 1; r < n; ++r) {
        int cmp = 0;
        for (std::size_t j = 0; j < n && cmp == 0; ++j)
            cmp = rank(w[j]) - rank(w[(r + j) % n]);
        if (cmp >= 0) return false;  // rotation r is <= w
    }
    return true;
}

// Any two circular factors of equal length have first-letter counts
// differing by at most 1. Direct O(n^2) sliding-window table.
inline bool is_cyclically_balanced(std::string_view w) {
    std::size_t n = w.size();
    if (n == 0) return false;
    char a = w[0];
    for (std::size_t len = 1; len < n; ++len) {
        std::size_t count = 0;
        for (std::size_t j = 0; j < len; ++j) count += w[j] == a;
        std::size_t lo = count, hi = count;
        for (std::size_t start = 1; start < n; ++start) {
            count -= w[start - 1] == a;
            count += w[(start + len - 1) % n] == a;
            lo = std::min(lo, count);
            hi = std::max(hi, count);
        }
        if (hi - lo > 1) return false;
    }
    return true;
}

// Recognition: Lyndon + cyclically balanced + coprime letter counts.
inline std::optional<ChristoffelWord> is_christoffel(std::string_view w) {
    std::size_t n = w.size();
    if (n < 2) return std::nullopt;
    char a = w[0], b = 0;
    bool have_b = false;
    std::size_t m = 0;
    for (char c : w) {
        if (c == a) {
            ++m;
        } else if (!have_b) {
            b = c;
            have_b = true;
        } else if (c != b) {
            return std::nullopt;  // more than two letters
        }
    }
    if (!have_b || std::gcd(m, n) != 1) return std::nullopt;
    if (!is_lyndon(w) || !is_cyclically_balanced(w)) return std::nullopt;
    return ChristoffelWord(n, m, a, b);
}

namespace detail {

inline std::string rotate_right(std::string_view s, std::size_t p) {
    std::size_t n = s.size();
    std::string out(n, 0);
    for (std::size_t j = 0; j < n; ++j) out[(j + p) % n] = s[j];
    return out;
}

}  // namespace detail

// All n rotations sorted lexicographically (first letter of w low).
inline std::vector<std::string> sorted_rotations(std::string_view w) {
    std::size_t n = w.size();
    std::vector<std::string> rows;
    rows.reserve(n);
    for (std::size_t r = 0; r < n; ++r) {
        std::string row(n, 0);
        for (std::size_t j = 0; j < n; ++j) row[j] = w[(r + j) % n];
        rows.push_back(std::move(row));
    }
    for (std::size_t r = 1; r < n; ++r)
        if (rows[r] == rows[0]) raise(errc::not_primitive, "word has a repeated rotation");
    auto rank = [first = w[0]](char c) { return c == first ? 0 : 1; };
    std::sort(rows.begin(), rows.end(), [&](const std::string& x, const std::string& y) {
        for (std::size_t j = 0; j < x.size(); ++j)
            if (rank(x[j]) != rank(y[j])) return rank(x[j]) < rank(y[j]);
        return false;
    });
    return rows;
}

// The constant shift p of the sorted-rotation array, if the word is
// primitive and such a shift exists (each row the right-rotation of the
// previous one by p). For a Christoffel word this is m^{-1} mod n.
inline std::optional<std::size_t> constant_shift(std::string_view w) {
    std::size_t n = w.size();
    if (n == 0) return std::nullopt;
    std::vector<std::string> rows;
    try {
        rows = sorted_rotations(w);
    } catch (const domain_error&) {
        return std::nullopt;  // not primitive
    }
    for (std::size_t p = 0; p < n; ++p) {
        bool ok = true;
        for (std::size_t i = 0; i + 1 < n && ok; ++i)
            ok = detail::rotate_right(rows[i], p) == rows[i + 1];
        if (ok) return p;
    }
    return std::nullopt;
}

// The reverse of c_m(a,b) is c_{n-m}(b,a).
inline bool reverse_identity_check(const ChristoffelWord& w) {
    std::string rev = w.letters();
    std::reverse(rev.begin(), rev.end());
    ChristoffelWord mirror(w.length(), w.length() - w.type(), w.other_letter(), w.first_letter());
    return rev == mirror.letters();
}

namespace detail {

inline RingValue f2_value(const Ring& f2, char c) { return f2.from_int(c == '1' ? 1 : 0); }

inline char f2_letter(const Ring& f2, const RingValue& v) { return f2.is_one(v) ? '1' : '0'; }

inline ChristoffelMatrix f2_matrix(const Ring& f2, const ChristoffelWord& w) {
    return ChristoffelMatrix(f2, w.length(), w.type(), f2_value(f2, w.first_letter()),
                             f2_value(f2, w.other_letter()));
}

inline void require_binary_alphabet(const ChristoffelWord& w) {
    auto ok = [](char c) { return c == '0' || c == '1'; };
    if (!ok(w.first_letter()) || !ok(w.other_letter()))
        raise(errc::not_binary_alphabet, "word is not over {0,1}");
}

}  // namespace detail

// Product of Christoffel words of the same length over {0,1}: the first
// row of the product of their matrices over F_2. Associative and
// commutative; 10^{n-1} is the identity.
inline ChristoffelWord word_mul(const ChristoffelWord& w1, const ChristoffelWord& w2) {
    if (w1.length() != w2.length())
        raise(errc::length_mismatch,
              std::to_string(w1.length()) + " vs " + std::to_string(w2.length()));
    detail::require_binary_alphabet(w1);
    detail::require_binary_alphabet(w2);
    Ring f2 = Ring::prime_field(2);
    ChristoffelMatrix prod = mul_closed(detail::f2_matrix(f2, w1), detail::f2_matrix(f2, w2));
    return ChristoffelWord(prod.size(), prod.type(), detail::f2_letter(f2, prod.letter_a()),
                           detail::f2_letter(f2, prod.letter_b()));
}

// A word over {0,1} is central when it is the middle of a Christoffel
// word, i.e. dropping into 1.w.0 (equivalently 0.w.1) gives one. Central
// words are palindromes; the empty word is central.
inline bool is_central(std::string_view c) {
    for (char ch : c)
        if (ch != '0' && ch != '1') return false;
    std::string w = "1" + std::string(c) + "0";
    return is_christoffel(w).has_value();
}

// Product of central words of the same length: embed as Christoffel words
// (convention 1.c.0), multiply, strip the end letters. The result does
// not depend on the embedding choice.
inline std::string central_mul(std::string_view c1, std::string_view c2) {
    if (c1.size() != c2.size())
        raise(errc::length_mismatch, std::to_string(c1.size()) + " vs " + std::to_string(c2.size()));
    if (!is_central(c1)) raise(errc::not_central, std::string(c1));
    if (!is_central(c2)) raise(errc::not_central, std::string(c2));
    ChristoffelWord w1 = *is_christoffel("1" + std::string(c1) + "0");
    ChristoffelWord w2 = *is_christoffel("1" + std::string(c2) + "0");
    std::string prod = word_mul(w1, w2).letters();
    return prod.substr(1, prod.size() - 2);
}

// Dual of a {0,1} Christoffel class: take the representative with an odd
// number of 1's (both qualify iff n is even; then the one beginning with
// 1), invert its matrix over F_2, return the first row. Exchanges types
// m and m^{-1}; an involution on letter-exchange classes.
inline ChristoffelWord dual(const ChristoffelWord& w) {
    detail::require_binary_alphabet(w);
    std::size_t n = w.length(), m = w.type();
    // c_m(1,0) has m ones; when m is even, n is odd and c_m(0,1) has
    // n-m ones, which is then odd.
    char a = m % 2 == 1 ? '1' : '0';
    char b = a == '1' ? '0' : '1';
    Ring f2 = Ring::prime_field(2);
    ChristoffelMatrix inv = inverse(detail::f2_matrix(f2, ChristoffelWord(n, m, a, b)));
    return ChristoffelWord(n, inv.type(), detail::f2_letter(f2, inv.letter_a()),
                           detail::f2_letter(f2, inv.letter_b()));
}

}  // namespace christoffel
