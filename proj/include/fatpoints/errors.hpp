#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>

namespace fatpoints {

using Int = std::int64_t;

// Thrown when a closed-form bound's hypothesis fails; names the clause.
class precondition_error : public std::invalid_argument {
public:
    explicit precondition_error(const std::string& clause)
        : std::invalid_argument("precondition failed: " + clause) {}
};

// Thrown when a bound search exhausts its sane range without certifying.
class no_certificate_error : public std::runtime_error {
public:
    explicit no_certificate_error(const std::string& what)
        : std::runtime_error(what) {}
};

// Thrown when a problem exceeds the desk-scale guard of the oracle.
class too_large_error : public std::runtime_error {
public:
    explicit too_large_error(const std::string& what)
        : std::runtime_error(what) {}
};

namespace checked {

// Every arithmetic operation on bound data goes through these helpers.
// A silent wraparound would turn a certificate into a false claim, so
// overflow is a hard error.

[[noreturn]] inline void fail(const char* op) {
    throw std::overflow_error(std::string("integer overflow in ") + op);
}

inline Int add(Int a, Int b) {
    Int r;
    if (__builtin_add_overflow(a, b, &r)) fail("add");
    return r;
}

inline Int sub(Int a, Int b) {
    Int r;
    if (__builtin_sub_overflow(a, b, &r)) fail("sub");
    return r;
}

inline Int mul(Int a, Int b) {
    Int r;
    if (__builtin_mul_overflow(a, b, &r)) fail("mul");
    return r;
}

} // namespace checked

// Exact floor/ceil of a/b for a >= 0, b > 0. Negative numerators do not
// occur in the bound formulas; reject them rather than guess a convention.
inline Int floor_div(Int a, Int b) {
    if (a < 0) throw std::invalid_argument("floor_div: negative numerator");
    if (b <= 0) throw std::invalid_argument("floor_div: nonpositive denominator");
    return a / b;
}

inline Int ceil_div(Int a, Int b) {
    if (a < 0) throw std::invalid_argument("ceil_div: negative numerator");
    if (b <= 0) throw std::invalid_argument("ceil_div: nonpositive denominator");
    return (a + b - 1) / b;
}

} // namespace fatpoints
