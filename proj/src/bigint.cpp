#include "latspan/bigint.hpp"

#include <cmath>

namespace latspan {

double log_abs(const BigInt& z) {
  signed long exp2;
  double mant = mpz_get_d_2exp(&exp2, z.get_mpz_t());
  return std::log(std::fabs(mant)) + double(exp2) * std::log(2.0);
}

}  // namespace latspan
