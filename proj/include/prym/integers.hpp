#pragma once

#include <boost/multiprecision/cpp_int.hpp>
#include <stdexcept>
#include <string>

namespace prym {

// All arithmetic in this library is exact. Smith-form intermediates can grow
// far beyond any fixed word size, so every matrix entry is a cpp_int.
using Int = boost::multiprecision::cpp_int;

// Violated precondition on caller-supplied data. The CLI maps this to exit 2.
class InputError : public std::runtime_error {
  public:
    explicit InputError(const std::string& msg) : std::runtime_error(msg) {}
};

inline Int gcd(const Int& a, const Int& b) { return boost::multiprecision::gcd(a, b); }
inline Int lcm(const Int& a, const Int& b) { return boost::multiprecision::lcm(a, b); }
inline Int abs_val(const Int& a) { return boost::multiprecision::abs(a); }
inline bool is_even(const Int& a) { return (a & 1) == 0; }
inline bool is_odd(const Int& a) { return (a & 1) != 0; }

inline Int pow_int(const Int& base, unsigned long e) {
    Int r = 1;
    for (unsigned long i = 0; i < e; ++i) r *= base;
    return r;
}

// Floor division (cpp_int's operator/ truncates toward zero).
inline Int fdiv(const Int& a, const Int& b) {
    Int q = a / b;
    if ((a % b) != 0 && ((a < 0) != (b < 0))) --q;
    return q;
}

} // namespace prym
