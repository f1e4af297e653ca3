#pragma once

#include <gmpxx.h>
#include <stdexcept>
#include <string>

namespace sandtile {

// Arbitrary-precision exact arithmetic. mpq_class keeps values reduced
// with positive denominator, which gives predictable equality semantics
// for the membership tests.
using Int = mpz_class;
using Rat = mpq_class;

struct dimension_error : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

struct singular_error : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

struct validation_error : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

struct parse_error : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

struct size_error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

inline bool is_integral(const Rat& q) { return q.get_den() == 1; }

// Parses "p/q" or a plain integer string.
Rat parse_rational(const std::string& s);

// "p/q", or just "p" when the denominator is 1.
std::string format_rational(const Rat& q);

}  // namespace sandtile
