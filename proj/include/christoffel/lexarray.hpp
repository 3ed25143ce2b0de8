#pragma once

#include <algorithm>
#include <cstdint>
#include <numeric>
#include <string>
#include <vector>

#include "errors.hpp"
#include "numtheory.hpp"
#include "ring.hpp"

namespace christoffel {

// The lexicographic array of a Christoffel word as a matrix object.
//
// C_m(a,b) is the n x n matrix whose rows are the n cyclic conjugates of
// the Christoffel word c_m(a,b), sorted lexicographically (a < b). It is
// determined entirely by (n, m, a, b): column 0 is m a's followed by
// n-m b's and every subsequent column is the previous one shifted down
// by m, which gives the O(1) entry rule below. ChristoffelMatrix stores
// only this data; DenseMatrix is the explicit n x n grid used as the
// brute-force oracle for every closed form in this header.

class DenseMatrix {
public:
    DenseMatrix(Ring ring, std::size_t n)
        : ring_(std::move(ring)), n_(n), cells_(n * n, ring_.zero()) {}

    static DenseMatrix identity(const Ring& ring, std::size_t n) {
        DenseMatrix m(ring, n);
        for (std::size_t i = 0; i < n; ++i) m.set(i, i, ring.one());
        return m;
    }

    const Ring& ring() const { return ring_; }
    std::size_t size() const { return n_; }

    const RingValue& at(std::size_t i, std::size_t j) const { return cells_[i * n_ + j]; }
    void set(std::size_t i, std::size_t j, RingValue v) { cells_[i * n_ + j] = std::move(v); }

    bool is_zero() const {
        RingValue z = ring_.zero();
        return std::all_of(cells_.begin(), cells_.end(), [&](const RingValue& c) { return c == z; });
    }

    bool operator==(const DenseMatrix&) const = default;

private:
    Ring ring_;
    std::size_t n_;
    std::vector<RingValue> cells_;
};

class ChristoffelMatrix {
public:
    ChristoffelMatrix(Ring ring, std::size_t n, std::size_t m, RingValue a, RingValue b)
        : ring_(std::move(ring)), n_(n), m_(m), a_(std::move(a)), b_(std::move(b)) {
        if (n < 2 || m == 0 || m >= n || std::gcd(m, n) != 1)
            raise(errc::not_coprime, "type " + std::to_string(m) + " invalid for size " + std::to_string(n));
        if (a_ == b_)
            raise(errc::equal_letters, "letters must be distinct, got " + a_.str());
    }

    static ChristoffelMatrix identity(const Ring& ring, std::size_t n) {
        return ChristoffelMatrix(ring, n, 1, ring.one(), ring.zero());
    }

    const Ring& ring() const { return ring_; }
    std::size_t size() const { return n_; }
    std::size_t type() const { return m_; }
    const RingValue& letter_a() const { return a_; }
    const RingValue& letter_b() const { return b_; }

    // entry(i,j) = a iff (i - j*m) mod n < m.
    const RingValue& entry(std::size_t i, std::size_t j) const {
        std::size_t t = (i + n_ - j * m_ % n_) % n_;
        return t < m_ ? a_ : b_;
    }

    DenseMatrix to_dense() const {
        DenseMatrix d(ring_, n_);
        for (std::size_t i = 0; i < n_; ++i)
            for (std::size_t j = 0; j < n_; ++j) d.set(i, j, entry(i, j));
        return d;
    }

    // Row 0, i.e. the Christoffel word c_m(a,b) itself.
    std::vector<RingValue> word() const {
        std::vector<RingValue> w;
        w.reserve(n_);
        for (std::size_t j = 0; j < n_; ++j) w.push_back(entry(0, j));
        return w;
    }

    RingValue delta() const { return ring_.sub(a_, b_); }

    RingValue sigma() const {
        return ring_.add(ring_.int_scale(Int(m_), a_), ring_.int_scale(Int(n_ - m_), b_));
    }

    // Row i+1 is row i rotated right by this amount (m^{-1} mod n).
    std::size_t shift() const { return mod_inverse(m_, n_); }

    bool operator==(const ChristoffelMatrix&) const = default;

private:
    Ring ring_;
    std::size_t n_, m_;
    RingValue a_, b_;
};

inline ChristoffelMatrix matrix_new(const Ring& ring, std::size_t n, std::size_t m,
                                    RingValue a, RingValue b) {
    return ChristoffelMatrix(ring, n, m, std::move(a), std::move(b));
}

// Rows of a primitive binary word, sorted lexicographically with the
// word's own first letter ranking low.
inline DenseMatrix lex_array(const Ring& ring, const std::vector<RingValue>& w) {
    std::size_t n = w.size();
    if (n == 0) raise(errc::not_primitive, "empty word");
    const RingValue& low = w[0];
    const RingValue* high = nullptr;
    for (const RingValue& x : w) {
        if (x == low) continue;
        if (!high)
            high = &x;
        else if (!(x == *high))
            raise(errc::not_binary_alphabet, "more than two distinct values");
    }

    std::vector<std::vector<RingValue>> rows(n);
    for (std::size_t r = 0; r < n; ++r) {
        rows[r].reserve(n);
        for (std::size_t j = 0; j < n; ++j) rows[r].push_back(w[(r + j) % n]);
    }
    for (std::size_t r = 1; r < n; ++r)
        if (rows[r] == rows[0]) raise(errc::not_primitive, "word has a repeated rotation");

    auto rank = [&](const RingValue& x) { return x == low ? 0 : 1; };
    std::sort(rows.begin(), rows.end(),
              [&](const std::vector<RingValue>& x, const std::vector<RingValue>& y) {
                  for (std::size_t j = 0; j < n; ++j)
                      if (rank(x[j]) != rank(y[j])) return rank(x[j]) < rank(y[j]);
                  return false;
              });

    DenseMatrix d(ring, n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) d.set(i, j, rows[i][j]);
    return d;
}

namespace detail {

inline void check_compatible(const Ring& r1, const Ring& r2, std::size_t n1, std::size_t n2) {
    if (!(r1 == r2)) raise(errc::ring_mismatch, r1.name() + " vs " + r2.name());
    if (n1 != n2)
        raise(errc::size_mismatch, std::to_string(n1) + " vs " + std::to_string(n2));
}

}  // namespace detail

// Ordinary O(n^3) matrix product. Modular rings take an int64 fast path;
// the generic path covers big integers and rationals.
inline DenseMatrix dense_mul(const DenseMatrix& x, const DenseMatrix& y) {
    detail::check_compatible(x.ring(), y.ring(), x.size(), y.size());
    const Ring& ring = x.ring();
    std::size_t n = x.size();
    DenseMatrix out(ring, n);

    if (ring.is_modular() && ring.modulus() < Int(1) << 20) {
        std::uint64_t mod = ring.modulus().convert_to<std::uint64_t>();
        std::vector<std::uint64_t> xa(n * n), ya(n * n);
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = 0; j < n; ++j) {
                xa[i * n + j] = ring.lift(x.at(i, j)).convert_to<std::uint64_t>();
                ya[i * n + j] = ring.lift(y.at(i, j)).convert_to<std::uint64_t>();
            }
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = 0; j < n; ++j) {
                std::uint64_t acc = 0;
                for (std::size_t k = 0; k < n; ++k) acc = (acc + xa[i * n + k] * ya[k * n + j]) % mod;
                out.set(i, j, ring.from_int(Int(acc)));
            }
        return out;
    }

    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) {
            RingValue acc = ring.zero();
            for (std::size_t k = 0; k < n; ++k)
                acc = ring.add(acc, ring.mul(x.at(i, k), y.at(k, j)));
            out.set(i, j, acc);
        }
    return out;
}

// Closed-form product. With r = ceil(m1*m2/n) and s = floor(m1*m2/n),
//   A B = B A = C_{m1*m2 mod n}(a3, b3),
//   a3 = r a1a2 + (m1-r) a1b2 + (m2-r) b1a2 + (n-(m1+m2)+r) b1b2,
// and b3 likewise with s in place of r. Requires an integral domain:
// over Z/6Z the product of binary matrices need not be binary.
inline ChristoffelMatrix mul_closed(const ChristoffelMatrix& A, const ChristoffelMatrix& B) {
    detail::check_compatible(A.ring(), B.ring(), A.size(), B.size());
    const Ring& ring = A.ring();
    if (!ring.is_integral_domain())
        raise(errc::not_integral_domain, ring.name() + " has zero divisors");

    std::size_t n = A.size();
    std::uint64_t prod = static_cast<std::uint64_t>(A.type()) * B.type();
    std::uint64_t s = prod / n, r = s + 1, m3 = prod % n;

    Int m1(A.type()), m2(B.type()), nn(n), ri(r), si(s);
    const RingValue aa = ring.mul(A.letter_a(), B.letter_a());
    const RingValue ab = ring.mul(A.letter_a(), B.letter_b());
    const RingValue ba = ring.mul(A.letter_b(), B.letter_a());
    const RingValue bb = ring.mul(A.letter_b(), B.letter_b());
    auto combine = [&](const Int& t) {
        RingValue v = ring.int_scale(t, aa);
        v = ring.add(v, ring.int_scale(m1 - t, ab));
        v = ring.add(v, ring.int_scale(m2 - t, ba));
        v = ring.add(v, ring.int_scale(nn - m1 - m2 + t, bb));
        return v;
    };
    return ChristoffelMatrix(ring, n, static_cast<std::size_t>(m3), combine(ri), combine(si));
}

// Exact determinant. Fraction-free (Bareiss) elimination over integral
// domains; composite Z/NZ goes through the integer lift.
inline RingValue det_exact(const DenseMatrix& m) {
    const Ring& ring = m.ring();
    std::size_t n = m.size();

    if (!ring.is_integral_domain()) {
        Ring z = Ring::integers();
        DenseMatrix lifted(z, n);
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = 0; j < n; ++j) lifted.set(i, j, z.from_int(ring.lift(m.at(i, j))));
        return ring.from_int(det_exact(lifted).integer());
    }

    std::vector<RingValue> a;
    a.reserve(n * n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) a.push_back(m.at(i, j));

    bool negate = false;
    RingValue prev = ring.one();
    for (std::size_t k = 0; k + 1 < n; ++k) {
        if (ring.is_zero(a[k * n + k])) {
            std::size_t swap_row = k + 1;
            while (swap_row < n && ring.is_zero(a[swap_row * n + k])) ++swap_row;
            if (swap_row == n) return ring.zero();
            for (std::size_t j = 0; j < n; ++j) std::swap(a[k * n + j], a[swap_row * n + j]);
            negate = !negate;
        }
        for (std::size_t i = k + 1; i < n; ++i)
            for (std::size_t j = k + 1; j < n; ++j) {
                RingValue num = ring.sub(ring.mul(a[i * n + j], a[k * n + k]),
                                         ring.mul(a[i * n + k], a[k * n + j]));
                a[i * n + j] = ring.exact_div(num, prev);
            }
        prev = a[k * n + k];
    }
    RingValue det = a[n * n - 1];
    return negate ? ring.neg(det) : det;
}

// det C_m(a,b) = sign(pi) * sigma * delta^{n-1}, where pi is the
// permutation i -> i * m^{-1} mod n taking the circulant row order to the
// lexicographic one. The sign is validated against det_exact in the test
// suite; the closed form leaves it unspecified.
inline RingValue det_closed(const ChristoffelMatrix& A) {
    const Ring& ring = A.ring();
    int sign = multiplication_permutation_sign(A.shift(), A.size());
    RingValue v = ring.mul(A.sigma(), ring.pow(A.delta(), A.size() - 1));
    return sign < 0 ? ring.neg(v) : v;
}

// Over a field: invertible iff the row sum sigma is nonzero. Over the
// integers: determinant must be +-1. Composite Z/NZ: determinant of the
// integer lift must be a unit mod N.
inline bool is_invertible(const ChristoffelMatrix& A) {
    const Ring& ring = A.ring();
    if (ring.is_field()) return !ring.is_zero(A.sigma());
    return ring.is_unit(det_exact(A.to_dense()));
}

// Closed-form inverse: writing w = uv with |u| = m^{-1}, and
//   c = |u|_a a + |u|_b b      d = (|u|_a - 1) a + (|u|_b + 1) b
//   e = |v|_a a + |v|_b b      f = (|v|_a + 1) a + (|v|_b - 1) b,
// the inverse is C_{m^{-1}}(f (fc-ed)^{-1}, -d (fc-ed)^{-1}). Letter
// counts are taken by scanning the word.
inline ChristoffelMatrix inverse(const ChristoffelMatrix& A) {
    const Ring& ring = A.ring();
    if (!ring.is_integral_domain())
        raise(errc::not_integral_domain, ring.name() + " has zero divisors");
    if (!is_invertible(A))
        raise(errc::not_invertible, "row sum " + A.sigma().str() + " in " + ring.name());

    std::size_t n = A.size(), p = A.shift();
    Int ua = 0;
    for (std::size_t j = 0; j < p; ++j)
        if (A.entry(0, j) == A.letter_a()) ++ua;
    Int ub = Int(p) - ua;
    Int va = Int(A.type()) - ua;
    Int vb = Int(n - p) - va;

    const RingValue& a = A.letter_a();
    const RingValue& b = A.letter_b();
    auto mix = [&](const Int& ca, const Int& cb) {
        return ring.add(ring.int_scale(ca, a), ring.int_scale(cb, b));
    };
    RingValue c = mix(ua, ub);
    RingValue d = mix(ua - 1, ub + 1);
    RingValue e = mix(va, vb);
    RingValue f = mix(va + 1, vb - 1);

    RingValue det2 = ring.sub(ring.mul(f, c), ring.mul(e, d));  // = sigma * delta
    RingValue inv = ring.unit_inverse(det2);
    return ChristoffelMatrix(ring, n, p, ring.mul(f, inv), ring.neg(ring.mul(d, inv)));
}

// Multiplicative order of m in (Z/nZ)^x.
inline std::size_t order_of(std::size_t m, std::size_t n) {
    if (n < 1 || std::gcd(m, n) != 1)
        raise(errc::not_coprime, std::to_string(m) + " not a unit mod " + std::to_string(n));
    return static_cast<std::size_t>(multiplicative_order(m, n));
}

// Witness for the annihilating polynomial (x^k - delta^k)(x - sigma),
// k the order of m: evaluates (A^k - delta^k I)(A - sigma I) densely and
// reports whether it vanishes.
inline bool annihilator_check(const ChristoffelMatrix& A) {
    const Ring& ring = A.ring();
    if (!ring.is_integral_domain())
        raise(errc::not_integral_domain, ring.name() + " has zero divisors");

    std::size_t n = A.size(), k = order_of(A.type(), n);
    DenseMatrix dense = A.to_dense();
    DenseMatrix power = DenseMatrix::identity(ring, n);
    for (std::size_t t = 0; t < k; ++t) power = dense_mul(power, dense);

    RingValue dk = ring.pow(A.delta(), k);
    RingValue sg = A.sigma();
    DenseMatrix left = power, right = dense;
    for (std::size_t i = 0; i < n; ++i) {
        left.set(i, i, ring.sub(left.at(i, i), dk));
        right.set(i, i, ring.sub(right.at(i, i), sg));
    }
    return dense_mul(left, right).is_zero();
}

}  // namespace christoffel
