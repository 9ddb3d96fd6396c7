#pragma once

#include <gmpxx.h>

#include <string>

namespace latmid {

using Rat = mpq_class;
using Int = mpz_class;

// base^exp as an exact rational; exp may be negative, base nonzero.
Rat rat_pow(long base, long exp);

// Parses "num" or "num/den" (optional sign, arbitrary precision).
Rat rat_parse(const std::string& s);

// Lowest terms; "num" when den == 1, else "num/den".
std::string rat_str(const Rat& x);

} // namespace latmid
