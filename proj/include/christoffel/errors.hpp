#pragma once

#include <stdexcept>
#include <string>

namespace christoffel {

// Failure categories raised when a library precondition is violated.
// The CLI maps these to exit code 1; malformed command lines exit 2.
enum class errc {
    not_coprime,
    equal_letters,
    not_a_unit,
    ring_mismatch,
    size_mismatch,
    not_integral_domain,
    not_invertible,
    not_primitive,
    not_christoffel,
    not_central,
    length_mismatch,
    not_binary_alphabet,
    not_closed,
    not_applicable,
};

inline const char* errc_name(errc code) {
    switch (code) {
        case errc::not_coprime: return "NotCoprime";
        case errc::equal_letters: return "EqualLetters";
        case errc::not_a_unit: return "NotAUnit";
        case errc::ring_mismatch: return "RingMismatch";
        case errc::size_mismatch: return "SizeMismatch";
        case errc::not_integral_domain: return "NotIntegralDomain";
        case errc::not_invertible: return "NotInvertible";
        case errc::not_primitive: return "NotPrimitive";
        case errc::not_christoffel: return "NotChristoffel";
        case errc::not_central: return "NotCentral";
        case errc::length_mismatch: return "LengthMismatch";
        case errc::not_binary_alphabet: return "NotBinaryAlphabet";
        case errc::not_closed: return "NotClosed";
        case errc::not_applicable: return "NotApplicable";
    }
    return "UnknownError";
}

class domain_error : public std::runtime_error {
public:
    domain_error(errc code, const std::string& what)
        : std::runtime_error(std::string(errc_name(code)) + ": " + what), code_(code) {}

    errc code() const noexcept { return code_; }

private:
    errc code_;
};

[[noreturn]] inline void raise(errc code, const std::string& what) {
    throw domain_error(code, what);
}

}  // namespace christoffel
