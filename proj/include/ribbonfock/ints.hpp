// Exact integer and rational scalars (GMP-backed).
#pragma once

#include <gmpxx.h>

namespace ribbonfock {

using BigInt = mpz_class;
using BigRat = mpq_class;

inline long to_long(const BigInt& z) { return z.get_si(); }

} // namespace ribbonfock
