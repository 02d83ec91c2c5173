#pragma once

#include <gmpxx.h>

#include <string>
#include <string_view>

namespace wgc {

using Integer = mpz_class;
using Rational = mpq_class; // always kept canonical: reduced, positive denominator

/// "num/den" with the denominator always printed, e.g. "2/1", "-1/6".
std::string to_string(const Rational& q);
Rational parse_rational(std::string_view text);

inline Rational make_rational(long num, long den = 1)
{
    Rational q(num, den);
    q.canonicalize();
    return q;
}

} // namespace wgc
