#pragma once

#include <gmpxx.h>

#include <string>
#include <vector>

namespace boole {

// Exact arbitrary-precision rational. GMP keeps values canonical (lowest
// terms, positive denominator) through every arithmetic operation, which is
// what makes equality comparisons and serialized output stable.
using Rat = mpq_class;

// Canonical p/q. The raw two-argument mpq_class constructor does not reduce,
// and GMP arithmetic silently assumes reduced operands; route every
// denominator that may share a factor with its numerator through here.
inline Rat make_rat(long num, unsigned long den) {
    Rat r(num, den);
    r.canonicalize();
    return r;
}

// Parses "p" or "p/q" with an optional leading '-' on p and a positive
// decimal q. Throws ParseError on anything else, including q = 0.
Rat rat_parse(const std::string& text);

// Canonical text form: "p" when the denominator is 1, else "p/q".
std::string rat_str(const Rat& r);

std::string rat_vec_str(const std::vector<Rat>& v);

}  // namespace boole
