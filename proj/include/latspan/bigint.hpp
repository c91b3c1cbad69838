#pragma once

#include <gmpxx.h>

#include <string>

namespace latspan {

using BigInt = mpz_class;

/// Natural log of |z|. Requires z != 0.
double log_abs(const BigInt& z);

inline std::string to_string(const BigInt& z) { return z.get_str(); }

}  // namespace latspan
