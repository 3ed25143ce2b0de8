#pragma once

#include <algorithm>
#include <cstdint>
#include <functional>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "errors.hpp"
#include "lexarray.hpp"
#include "numtheory.hpp"

namespace christoffel {

// GC_n(F_p), the abelian group of invertible n x n Christoffel matrices
// over the prime field F_p. Over F_2 the group has a symbolic calculus:
// every element is a_m = C_m(1,0) or b_m = C_m(0,1) with m in (Z/nZ)^x,
// and products reduce to tag bookkeeping (see f2_symbolic_mul). For odd n
// only one tag per type is invertible; for even n both are.

enum class Tag : unsigned char { a, b };

inline Tag flip(Tag t) { return t == Tag::a ? Tag::b : Tag::a; }

struct GroupElementF2 {
    Tag tag;
    std::size_t m;
    std::size_t n;

    static GroupElementF2 make(Tag tag, std::size_t m, std::size_t n) {
        if (n < 2 || m == 0 || m >= n || std::gcd(m, n) != 1)
            raise(errc::not_coprime, "type " + std::to_string(m) + " invalid for size " + std::to_string(n));
        std::size_t row_sum = tag == Tag::a ? m : n - m;  // over F_2
        if (row_sum % 2 == 0)
            raise(errc::not_invertible, GroupElementF2{tag, m, n}.name() + " has zero row sum");
        return {tag, m, n};
    }

    static GroupElementF2 a_elem(std::size_t m, std::size_t n) { return make(Tag::a, m, n); }
    static GroupElementF2 b_elem(std::size_t m, std::size_t n) { return make(Tag::b, m, n); }

    static GroupElementF2 identity(std::size_t n) { return make(Tag::a, 1, n); }

    std::string name() const {
        return (tag == Tag::a ? "a_" : "b_") + std::to_string(m);
    }

    ChristoffelMatrix to_matrix() const {
        Ring f2 = Ring::prime_field(2);
        RingValue one = f2.one(), zero = f2.zero();
        return tag == Tag::a ? ChristoffelMatrix(f2, n, m, one, zero)
                             : ChristoffelMatrix(f2, n, m, zero, one);
    }

    bool operator==(const GroupElementF2&) const = default;

    // Enumeration order: type ascending, then letters (a,b) lexicographic,
    // which puts b_m = C_m(0,1) before a_m = C_m(1,0).
    friend bool operator<(const GroupElementF2& x, const GroupElementF2& y) {
        if (x.n != y.n) return x.n < y.n;
        if (x.m != y.m) return x.m < y.m;
        return x.tag == Tag::b && y.tag == Tag::a;
    }
};

// x_{m1} y_{m2} = i^q (x*y)_r where m1 m2 = q n + r, * is the order-two
// group law on {a,b} with identity a, and i exchanges the tags. Valid for
// even n; for odd n the tag of a product is forced by invertibility and
// the identity fails, so matrix multiplication must be used instead.
inline GroupElementF2 f2_symbolic_mul(const GroupElementF2& x, const GroupElementF2& y) {
    if (x.n != y.n) raise(errc::size_mismatch, std::to_string(x.n) + " vs " + std::to_string(y.n));
    if (x.n % 2 != 0)
        raise(errc::not_applicable, "symbolic product is for even sizes only");
    std::size_t prod = x.m * y.m;
    std::size_t q = prod / x.n, r = prod % x.n;
    Tag base = x.tag == y.tag ? Tag::a : Tag::b;
    return {q % 2 == 0 ? base : flip(base), r, x.n};
}

// Group law for any n: symbolic for even n, forced tag for odd n.
inline GroupElementF2 f2_mul(const GroupElementF2& x, const GroupElementF2& y) {
    if (x.n % 2 == 0) return f2_symbolic_mul(x, y);
    if (x.n != y.n) raise(errc::size_mismatch, std::to_string(x.n) + " vs " + std::to_string(y.n));
    std::size_t r = x.m * y.m % x.n;
    return {r % 2 == 1 ? Tag::a : Tag::b, r, x.n};
}

inline std::vector<GroupElementF2> enumerate_gc_f2(std::size_t n) {
    std::vector<GroupElementF2> out;
    for (std::size_t m = 1; m < n; ++m) {
        if (std::gcd(m, n) != 1) continue;
        if ((n - m) % 2 == 1) out.push_back({Tag::b, m, n});
        if (m % 2 == 1) out.push_back({Tag::a, m, n});
    }
    return out;
}

// All invertible C_m(a,b) over F_p: gcd(m,n) = 1, a != b, row sum
// m a + (n-m) b != 0. Order: m ascending, then (a,b) lexicographic.
inline std::vector<ChristoffelMatrix> enumerate_gc(std::size_t n, const Int& p) {
    Ring field = Ring::prime_field(p);
    std::vector<ChristoffelMatrix> out;
    for (std::size_t m = 1; m < n; ++m) {
        if (std::gcd(m, n) != 1) continue;
        for (Int a = 0; a < p; ++a)
            for (Int b = 0; b < p; ++b) {
                if (a == b) continue;
                ChristoffelMatrix cand(field, n, m, field.from_int(a), field.from_int(b));
                if (!field.is_zero(cand.sigma())) out.push_back(std::move(cand));
            }
    }
    return out;
}

inline std::size_t element_order(const GroupElementF2& g) {
    GroupElementF2 id = GroupElementF2::identity(g.n);
    GroupElementF2 acc = g;
    std::size_t k = 1;
    while (!(acc == id)) {
        acc = f2_mul(acc, g);
        ++k;
    }
    return k;
}

inline std::vector<GroupElementF2> subgroup_generated(const std::vector<GroupElementF2>& gens) {
    if (gens.empty()) raise(errc::size_mismatch, "no generators");
    std::size_t n = gens[0].n;
    for (const auto& g : gens)
        if (g.n != n) raise(errc::size_mismatch, "generators of different sizes");
    std::set<GroupElementF2> closed{GroupElementF2::identity(n)};
    std::vector<GroupElementF2> frontier(closed.begin(), closed.end());
    while (!frontier.empty()) {
        std::vector<GroupElementF2> next;
        for (const auto& e : frontier)
            for (const auto& g : gens) {
                GroupElementF2 h = f2_mul(e, g);
                if (closed.insert(h).second) next.push_back(h);
            }
        frontier = std::move(next);
    }
    return {closed.begin(), closed.end()};
}

// A finite abelian group presented by its multiplication table.
class CayleyTable {
public:
    template <class Elem, class Mul, class Less = std::less<Elem>>
    static CayleyTable build(const std::vector<Elem>& elems, const Elem& identity, Mul mul,
                             Less less = {}) {
        std::map<Elem, std::size_t, Less> index(less);
        for (std::size_t i = 0; i < elems.size(); ++i)
            if (!index.emplace(elems[i], i).second) raise(errc::not_closed, "duplicate element");
        auto id_it = index.find(identity);
        if (id_it == index.end()) raise(errc::not_closed, "identity not in element set");

        CayleyTable t;
        t.n_ = elems.size();
        t.id_ = id_it->second;
        t.prod_.assign(t.n_ * t.n_, 0);
        for (std::size_t i = 0; i < t.n_; ++i)
            for (std::size_t j = 0; j < t.n_; ++j) {
                auto it = index.find(mul(elems[i], elems[j]));
                if (it == index.end()) raise(errc::not_closed, "product escapes the element set");
                t.prod_[i * t.n_ + j] = it->second;
            }
        return t;
    }

    std::size_t size() const { return n_; }
    std::size_t identity() const { return id_; }
    std::size_t mul(std::size_t i, std::size_t j) const { return prod_[i * n_ + j]; }

    std::size_t order_of(std::size_t i) const {
        std::size_t acc = i, k = 1;
        while (acc != id_) {
            acc = mul(acc, i);
            ++k;
        }
        return k;
    }

    std::vector<std::size_t> closure(const std::vector<std::size_t>& gens) const {
        std::vector<bool> in(n_, false);
        in[id_] = true;
        std::vector<std::size_t> frontier{id_};
        while (!frontier.empty()) {
            std::vector<std::size_t> next;
            for (std::size_t e : frontier)
                for (std::size_t g : gens) {
                    std::size_t h = mul(e, g);
                    if (!in[h]) {
                        in[h] = true;
                        next.push_back(h);
                    }
                }
            frontier = std::move(next);
        }
        std::vector<std::size_t> out;
        for (std::size_t i = 0; i < n_; ++i)
            if (in[i]) out.push_back(i);
        return out;
    }

    // Table of the subgroup given by sorted member indices.
    CayleyTable subtable(const std::vector<std::size_t>& members) const {
        std::map<std::size_t, std::size_t> pos;
        for (std::size_t i = 0; i < members.size(); ++i) pos[members[i]] = i;
        if (!pos.count(id_)) raise(errc::not_closed, "identity not in subgroup");
        CayleyTable t;
        t.n_ = members.size();
        t.id_ = pos[id_];
        t.prod_.assign(t.n_ * t.n_, 0);
        for (std::size_t i = 0; i < t.n_; ++i)
            for (std::size_t j = 0; j < t.n_; ++j) {
                auto it = pos.find(mul(members[i], members[j]));
                if (it == pos.end()) raise(errc::not_closed, "subset is not closed");
                t.prod_[i * t.n_ + j] = it->second;
            }
        return t;
    }

    // Quotient by the cyclic subgroup generated by g.
    CayleyTable quotient_by(std::size_t g) const {
        std::vector<std::size_t> sub = closure({g});
        constexpr std::size_t unset = static_cast<std::size_t>(-1);
        std::vector<std::size_t> coset(n_, unset);
        std::vector<std::size_t> reps;
        for (std::size_t e = 0; e < n_; ++e) {
            if (coset[e] != unset) continue;
            std::size_t id = reps.size();
            reps.push_back(e);
            for (std::size_t s : sub) coset[mul(e, s)] = id;
        }
        CayleyTable q;
        q.n_ = reps.size();
        q.id_ = coset[id_];
        q.prod_.assign(q.n_ * q.n_, 0);
        for (std::size_t i = 0; i < q.n_; ++i)
            for (std::size_t j = 0; j < q.n_; ++j)
                q.prod_[i * q.n_ + j] = coset[mul(reps[i], reps[j])];
        return q;
    }

private:
    std::size_t n_ = 1, id_ = 0;
    std::vector<std::size_t> prod_;
};

// Invariant-factor decomposition d_1 | d_2 | ... | d_t of a finite
// abelian group; the empty chain is the trivial group.
struct GroupStructure {
    std::uint64_t order = 1;
    std::vector<std::uint64_t> invariant_factors;

    static GroupStructure from_factors(std::vector<std::uint64_t> factors) {
        GroupStructure s;
        for (std::size_t i = 0; i < factors.size(); ++i) {
            if (factors[i] < 2) throw std::invalid_argument("invariant factor below 2");
            if (i > 0 && factors[i] % factors[i - 1] != 0)
                throw std::invalid_argument("invariant factors must form a divisibility chain");
            s.order *= factors[i];
        }
        s.invariant_factors = std::move(factors);
        return s;
    }

    std::string str() const {
        std::string out = "[";
        for (std::size_t i = 0; i < invariant_factors.size(); ++i)
            out += (i ? ", " : "") + std::to_string(invariant_factors[i]);
        return out + "]";
    }

    bool operator==(const GroupStructure&) const = default;
};

namespace detail {

// prime -> cyclic-component exponents, sorted descending.
inline std::map<std::uint64_t, std::vector<unsigned>> primary_exponents(
    const std::vector<std::uint64_t>& cyclic_orders) {
    std::map<std::uint64_t, std::vector<unsigned>> primary;
    for (std::uint64_t c : cyclic_orders)
        for (auto [p, e] : factorize(c)) primary[p].push_back(e);
    for (auto& [p, es] : primary) std::sort(es.begin(), es.end(), std::greater<>());
    return primary;
}

// Merge arbitrary cyclic components into the invariant-factor chain.
inline GroupStructure merge_cyclic(const std::vector<std::uint64_t>& cyclic_orders) {
    auto primary = primary_exponents(cyclic_orders);
    std::size_t depth = 0;
    for (const auto& [p, es] : primary) depth = std::max(depth, es.size());
    std::vector<std::uint64_t> factors(depth, 1);
    for (const auto& [p, es] : primary)
        for (std::size_t i = 0; i < es.size(); ++i) {
            std::uint64_t q = 1;
            for (unsigned t = 0; t < es[i]; ++t) q *= p;
            factors[i] *= q;  // slot 0 = largest factor
        }
    std::reverse(factors.begin(), factors.end());
    return GroupStructure::from_factors(std::move(factors));
}

}  // namespace detail

// Extracts invariant factors by repeatedly removing a maximal-order
// element: a cyclic subgroup of maximal order is a direct summand, so the
// quotient carries the remaining factors.
inline GroupStructure group_structure(const CayleyTable& table) {
    std::vector<std::uint64_t> factors;
    CayleyTable cur = table;
    while (cur.size() > 1) {
        std::size_t best = cur.identity(), best_order = 1;
        for (std::size_t i = 0; i < cur.size(); ++i) {
            std::size_t k = cur.order_of(i);
            if (k > best_order) {
                best_order = k;
                best = i;
            }
        }
        factors.push_back(best_order);
        cur = cur.quotient_by(best);
    }
    std::reverse(factors.begin(), factors.end());
    return GroupStructure::from_factors(std::move(factors));
}

inline CayleyTable cayley_table(const std::vector<GroupElementF2>& elems) {
    if (elems.empty()) raise(errc::not_closed, "empty element set");
    return CayleyTable::build(elems, GroupElementF2::identity(elems[0].n),
                              [](const GroupElementF2& x, const GroupElementF2& y) { return f2_mul(x, y); });
}

inline CayleyTable cayley_table(const std::vector<ChristoffelMatrix>& elems) {
    if (elems.empty()) raise(errc::not_closed, "empty element set");
    auto key_less = [](const ChristoffelMatrix& x, const ChristoffelMatrix& y) {
        if (x.type() != y.type()) return x.type() < y.type();
        if (!(x.letter_a() == y.letter_a())) return x.letter_a() < y.letter_a();
        return x.letter_b() < y.letter_b();
    };
    return CayleyTable::build(elems, ChristoffelMatrix::identity(elems[0].ring(), elems[0].size()),
                              [](const ChristoffelMatrix& x, const ChristoffelMatrix& y) {
                                  return mul_closed(x, y);
                              },
                              key_less);
}

inline GroupStructure group_structure(const std::vector<GroupElementF2>& elems) {
    return group_structure(cayley_table(elems));
}

inline GroupStructure group_structure(const std::vector<ChristoffelMatrix>& elems) {
    return group_structure(cayley_table(elems));
}

// The type map f(C_m(a,b)) = m is a surjective homomorphism onto
// (Z/nZ)^x whose kernel is the subgroup H of type-1 matrices; in
// particular |GC_n(F_p)| = |H| phi(n). Every product is verified densely.
inline bool type_homomorphism_check(std::size_t n, const Int& p) {
    auto els = enumerate_gc(n, p);
    std::map<std::size_t, std::size_t> fiber_size;
    for (const auto& e : els) ++fiber_size[e.type()];
    if (fiber_size.size() != totient(n)) return false;  // not surjective
    std::size_t kernel = fiber_size.count(1) ? fiber_size[1] : 0;
    if (kernel == 0) return false;
    for (const auto& [m, count] : fiber_size)
        if (count != kernel) return false;
    if (els.size() != kernel * totient(n)) return false;

    for (const auto& x : els)
        for (const auto& y : els) {
            ChristoffelMatrix prod = mul_closed(x, y);
            if (prod.type() != x.type() * y.type() % n) return false;
            if (!(dense_mul(x.to_dense(), y.to_dense()) == prod.to_dense())) return false;
        }
    return true;
}

// Psi : GC_n(F_2) -> GC_{2^k}(F_2) x (Z/n'Z)^x for n = 2^k n' with n'
// odd and > 1: x_m -> (i^q(x)_r, m mod n') where m = q 2^k + r.
struct PsiImage {
    GroupElementF2 head;
    std::size_t residue;

    bool operator==(const PsiImage&) const = default;
    friend bool operator<(const PsiImage& x, const PsiImage& y) {
        if (x.residue != y.residue) return x.residue < y.residue;
        return x.head < y.head;
    }
};

inline PsiImage psi(const GroupElementF2& g) {
    std::size_t n = g.n, k = 0, rest = n;
    while (rest % 2 == 0) {
        rest /= 2;
        ++k;
    }
    if (k == 0) raise(errc::not_applicable, "size is odd");
    if (rest == 1) raise(errc::not_applicable, "size is a power of two");
    std::size_t two_k = std::size_t(1) << k;
    std::size_t q = g.m / two_k, r = g.m % two_k;
    Tag t = q % 2 == 0 ? g.tag : flip(g.tag);
    return {GroupElementF2{t, r, two_k}, g.m % rest};
}

// Predicted decomposition of GC_n(F_2): writing n = 2^k p_1^e1 ... ,
// the 2-part contributes Z/2 x Z/2^{k-1} (k >= 1) and each odd prime
// power contributes the cyclic group (Z/p^e Z)^x.
inline GroupStructure predicted_structure(std::size_t n) {
    std::vector<std::uint64_t> cyclic;
    for (auto [p, e] : factorize(n)) {
        if (p == 2) {
            cyclic.push_back(2);
            if (e >= 2) cyclic.push_back(std::uint64_t(1) << (e - 1));
        } else {
            std::uint64_t q = 1;
            for (unsigned t = 0; t + 1 < e; ++t) q *= p;
            cyclic.push_back(q * (p - 1));
        }
    }
    return detail::merge_cyclic(cyclic);
}

inline bool verify_neven(std::size_t n) {
    return group_structure(enumerate_gc_f2(n)) == predicted_structure(n);
}

// 3^{2^{k-2}} = q_k 2^k + 1 with q_k odd, for 3 <= k <= k_max.
inline bool gauss_oddness_check(unsigned k_max) {
    if (k_max < 3) throw std::invalid_argument("k_max must be at least 3");
    for (unsigned k = 3; k <= k_max; ++k) {
        Int p = pow(Int(3), std::uint32_t(1) << (k - 2));
        Int num = p - 1;
        if (num % (Int(1) << k) != 0) return false;
        Int q = num >> k;
        if (q % 2 != 1) return false;
    }
    return true;
}

struct Representation {
    std::size_t n = 0;
    std::vector<GroupElementF2> generators;
};

// Subgroup-embedding test for finite abelian groups: for every prime p
// and j >= 1 the target may not have more cyclic components of order
// >= p^j than the host.
inline bool embeds_into(const GroupStructure& target, const GroupStructure& host) {
    auto t = detail::primary_exponents(target.invariant_factors);
    auto h = detail::primary_exponents(host.invariant_factors);
    for (const auto& [p, te] : t) {
        auto it = h.find(p);
        if (it == h.end() || te.size() > it->second.size()) return false;
        for (std::size_t i = 0; i < te.size(); ++i)
            if (te[i] > it->second[i]) return false;
    }
    return true;
}

// Searches for n <= n_max such that GC_n(F_2) contains a subgroup
// isomorphic to the target, and returns explicit generators whose span
// has the target's invariant factors (verified by enumeration). Odd n
// are scanned first, where GC_n(F_2) is canonically (Z/nZ)^x; the
// reported n is the first hit in scan order, not a proven minimum.
inline std::optional<Representation> find_representation(const GroupStructure& target,
                                                         std::size_t n_max) {
    if (target.invariant_factors.empty())
        return n_max >= 2 ? std::optional<Representation>(Representation{2, {}}) : std::nullopt;

    std::vector<std::size_t> scan;
    for (std::size_t n = 3; n <= n_max; n += 2) scan.push_back(n);
    for (std::size_t n = 2; n <= n_max; n += 2) scan.push_back(n);

    std::vector<std::uint64_t> want(target.invariant_factors.rbegin(),
                                    target.invariant_factors.rend());  // largest first

    for (std::size_t n : scan) {
        auto els = enumerate_gc_f2(n);
        CayleyTable table = cayley_table(els);
        if (!embeds_into(target, group_structure(table))) continue;

        std::vector<std::size_t> orders(table.size());
        for (std::size_t i = 0; i < table.size(); ++i) orders[i] = table.order_of(i);

        std::vector<std::size_t> chosen;
        auto dfs = [&](auto&& self, std::uint64_t span_size) -> bool {
            if (chosen.size() == want.size()) {
                auto members = table.closure(chosen);
                return group_structure(table.subtable(members)) == target;
            }
            std::uint64_t need = span_size * want[chosen.size()];
            for (std::size_t cand = 0; cand < table.size(); ++cand) {
                if (orders[cand] != want[chosen.size()]) continue;
                chosen.push_back(cand);
                if (table.closure(chosen).size() == need && self(self, need)) return true;
                chosen.pop_back();
            }
            return false;
        };
        if (dfs(dfs, 1)) {
            Representation rep;
            rep.n = n;
            for (std::size_t i : chosen) rep.generators.push_back(els[i]);
            return rep;
        }
    }
    return std::nullopt;
}

}  // namespace christoffel
