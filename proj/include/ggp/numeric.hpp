// Exact arithmetic aliases and the error types shared by every module.

#ifndef GGP_NUMERIC_HPP
#define GGP_NUMERIC_HPP

#include <boost/multiprecision/cpp_int.hpp>

#include <stdexcept>
#include <string>

namespace ggp {

using Int = boost::multiprecision::cpp_int;
using Rat = boost::multiprecision::cpp_rational;

// Invalid data or arguments (CLI exit code 1).
struct InputError : std::runtime_error {
  explicit InputError(const std::string& msg) : std::runtime_error(msg) {}
};

// Well-formed input that violates an operation's precondition (CLI exit code 2).
struct PreconditionError : std::runtime_error {
  explicit PreconditionError(const std::string& msg) : std::runtime_error(msg) {}
};

inline Int int_abs(const Int& x) { return x < 0 ? Int(-x) : x; }

inline int int_sign(const Int& x) { return x < 0 ? -1 : (x > 0 ? 1 : 0); }

// Remainder in [0, m) for m > 0.
inline Int mod_floor(const Int& x, const Int& m) {
  Int r = x % m;
  if (r < 0) r += m;
  return r;
}

std::string to_string(const Int& x);
std::string to_string(const Rat& x);  // always "p/q", q > 0, gcd(p, q) = 1
Int parse_int(const std::string& text);

}  // namespace ggp

#endif
