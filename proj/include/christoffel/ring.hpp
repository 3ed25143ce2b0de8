#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <compare>
#include <cstdint>
#include <string>
#include <string_view>
#include <variant>

#include "errors.hpp"
#include "numtheory.hpp"

namespace christoffel {

// Exact arithmetic layer. Four concrete commutative rings are supported:
// arbitrary-precision integers, rationals, Z/NZ, and the prime field F_p.
// Values are kept in canonical form after every operation (modular values
// in 0..N-1, rationals in lowest terms with positive denominator), so
// equality is plain structural equality.

using Int = boost::multiprecision::cpp_int;
using Rat = boost::multiprecision::cpp_rational;

enum class RingKind { Integer, Rational, ModN, PrimeField };

class RingValue {
public:
    RingValue() : v_(Int(0)) {}

    static RingValue of_integer(Int v) { return RingValue(std::variant<Int, Rat>(std::move(v))); }
    static RingValue of_rational(Rat v) { return RingValue(std::variant<Int, Rat>(std::move(v))); }

    bool holds_rational() const { return std::holds_alternative<Rat>(v_); }

    const Int& integer() const { return std::get<Int>(v_); }
    const Rat& rational() const { return std::get<Rat>(v_); }

    std::string str() const {
        if (holds_rational()) {
            const Rat& r = rational();
            if (denominator(r) == 1) return numerator(r).str();
            return numerator(r).str() + "/" + denominator(r).str();
        }
        return integer().str();
    }

    bool operator==(const RingValue&) const = default;

    // Total order used for deterministic enumeration, not ring semantics.
    bool operator<(const RingValue& rhs) const {
        if (v_.index() != rhs.v_.index()) return v_.index() < rhs.v_.index();
        if (holds_rational()) return rational() < rhs.rational();
        return integer() < rhs.integer();
    }

private:
    explicit RingValue(std::variant<Int, Rat> v) : v_(std::move(v)) {}
    std::variant<Int, Rat> v_;
};

class Ring {
public:
    static Ring integers() { return Ring(RingKind::Integer, 0, false); }
    static Ring rationals() { return Ring(RingKind::Rational, 0, false); }

    static Ring modular(const Int& n) {
        if (n < 2) throw std::invalid_argument("modulus must be at least 2");
        return Ring(RingKind::ModN, n, is_prime_u64(to_u64(n)));
    }

    static Ring prime_field(const Int& p) {
        if (p < 2 || !is_prime_u64(to_u64(p)))
            throw std::invalid_argument("prime field characteristic must be prime: " + p.str());
        return Ring(RingKind::PrimeField, p, true);
    }

    // --ring syntax: int | rat | mod:N | fp:p
    static Ring parse(std::string_view text) {
        if (text == "int") return integers();
        if (text == "rat") return rationals();
        if (text.rfind("mod:", 0) == 0) return modular(parse_int(text.substr(4)));
        if (text.rfind("fp:", 0) == 0) return prime_field(parse_int(text.substr(3)));
        throw std::invalid_argument("unknown ring: " + std::string(text));
    }

    std::string name() const {
        switch (kind_) {
            case RingKind::Integer: return "int";
            case RingKind::Rational: return "rat";
            case RingKind::ModN: return "mod:" + modulus_.str();
            case RingKind::PrimeField: return "fp:" + modulus_.str();
        }
        return "?";
    }

    RingKind kind() const { return kind_; }
    const Int& modulus() const { return modulus_; }

    bool is_integral_domain() const {
        return kind_ != RingKind::ModN || modulus_prime_;
    }

    bool is_field() const {
        return kind_ == RingKind::Rational || kind_ == RingKind::PrimeField ||
               (kind_ == RingKind::ModN && modulus_prime_);
    }

    bool is_modular() const {
        return kind_ == RingKind::ModN || kind_ == RingKind::PrimeField;
    }

    bool operator==(const Ring&) const = default;

    RingValue zero() const { return from_int(0); }
    RingValue one() const { return from_int(1); }

    // Canonical map Z -> R.
    RingValue from_int(const Int& k) const {
        if (kind_ == RingKind::Rational) return RingValue::of_rational(Rat(k));
        if (is_modular()) return RingValue::of_integer(reduce(k));
        return RingValue::of_integer(k);
    }

    RingValue from_rational(const Int& num, const Int& den) const {
        if (kind_ != RingKind::Rational)
            throw std::invalid_argument("fractional literal outside the rational ring");
        if (den == 0) throw std::invalid_argument("zero denominator");
        return RingValue::of_rational(Rat(num) / Rat(den));
    }

    // Value syntax: decimal integers; p/q in the rational ring.
    RingValue parse_value(std::string_view text) const {
        std::string s(text);
        auto slash = s.find('/');
        if (slash != std::string::npos)
            return from_rational(parse_int(s.substr(0, slash)), parse_int(s.substr(slash + 1)));
        return from_int(parse_int(s));
    }

    std::string str(const RingValue& x) const { return x.str(); }

    bool is_zero(const RingValue& x) const { return x == zero(); }
    bool is_one(const RingValue& x) const { return x == one(); }

    // Representative in 0..N-1 (modular rings) or the integer itself.
    const Int& lift(const RingValue& x) const { return x.integer(); }

    RingValue add(const RingValue& x, const RingValue& y) const {
        if (kind_ == RingKind::Rational) return RingValue::of_rational(x.rational() + y.rational());
        Int s = x.integer() + y.integer();
        return RingValue::of_integer(is_modular() ? reduce(s) : s);
    }

    RingValue sub(const RingValue& x, const RingValue& y) const {
        if (kind_ == RingKind::Rational) return RingValue::of_rational(x.rational() - y.rational());
        Int s = x.integer() - y.integer();
        return RingValue::of_integer(is_modular() ? reduce(s) : s);
    }

    RingValue mul(const RingValue& x, const RingValue& y) const {
        if (kind_ == RingKind::Rational) return RingValue::of_rational(x.rational() * y.rational());
        Int s = x.integer() * y.integer();
        return RingValue::of_integer(is_modular() ? reduce(s) : s);
    }

    RingValue neg(const RingValue& x) const {
        if (kind_ == RingKind::Rational) return RingValue::of_rational(-x.rational());
        Int s = -x.integer();
        return RingValue::of_integer(is_modular() ? reduce(s) : s);
    }

    // Image of the integer k times x, for integer coefficients acting on R.
    RingValue int_scale(const Int& k, const RingValue& x) const {
        return mul(from_int(k), x);
    }

    bool is_unit(const RingValue& x) const {
        switch (kind_) {
            case RingKind::Integer: return x.integer() == 1 || x.integer() == -1;
            case RingKind::Rational: return x.rational() != 0;
            case RingKind::PrimeField: return x.integer() != 0;
            case RingKind::ModN: return gcd(x.integer(), modulus_) == 1;
        }
        return false;
    }

    RingValue unit_inverse(const RingValue& x) const {
        if (!is_unit(x)) raise(errc::not_a_unit, x.str() + " has no inverse in " + name());
        switch (kind_) {
            case RingKind::Integer: return x;  // only 1 and -1
            case RingKind::Rational: return RingValue::of_rational(Rat(1) / x.rational());
            default: return RingValue::of_integer(mod_inverse_int(x.integer()));
        }
    }

    // Exact division; used by fraction-free elimination. In the integer
    // ring the quotient is required to be exact.
    RingValue exact_div(const RingValue& x, const RingValue& y) const {
        if (kind_ == RingKind::Integer) {
            Int q, r;
            divide_qr(x.integer(), y.integer(), q, r);
            if (r != 0)
                throw std::logic_error("exact_div: " + x.str() + " not divisible by " + y.str());
            return RingValue::of_integer(q);
        }
        return mul(x, unit_inverse(y));
    }

    RingValue pow(const RingValue& x, std::uint64_t e) const {
        RingValue acc = one(), base = x;
        while (e > 0) {
            if (e & 1) acc = mul(acc, base);
            base = mul(base, base);
            e >>= 1;
        }
        return acc;
    }

private:
    Ring(RingKind kind, Int modulus, bool prime)
        : kind_(kind), modulus_(std::move(modulus)), modulus_prime_(prime) {}

    static Int parse_int(std::string_view text) {
        try {
            return Int(std::string(text));
        } catch (const std::exception&) {
            throw std::invalid_argument("not an integer: " + std::string(text));
        }
    }

    static std::uint64_t to_u64(const Int& n) {
        if (n < 0 || n > Int(UINT64_MAX))
            throw std::invalid_argument("modulus out of supported range");
        return n.convert_to<std::uint64_t>();
    }

    Int reduce(Int v) const {
        v %= modulus_;
        if (v < 0) v += modulus_;
        return v;
    }

    Int mod_inverse_int(const Int& a) const {
        Int t = 0, new_t = 1, r = modulus_, new_r = a;
        while (new_r != 0) {
            Int q = r / new_r;
            Int tmp = t - q * new_t;
            t = new_t;
            new_t = tmp;
            tmp = r - q * new_r;
            r = new_r;
            new_r = tmp;
        }
        if (t < 0) t += modulus_;
        return t;
    }

    RingKind kind_;
    Int modulus_;
    bool modulus_prime_;
};

}  // namespace christoffel
