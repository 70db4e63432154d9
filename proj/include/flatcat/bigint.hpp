#pragma once

#include <gmpxx.h>

#include <string>

namespace flatcat {

using BigInt = mpz_class;
using BigRational = mpq_class;

/// C(n, k), zero when k < 0 or k > n (and for n < 0).
BigInt binomial(long n, long k);

/// base^exp for a nonnegative exponent.
BigInt power(long base, unsigned long exp);

/// base^exp as an exact rational; negative exponents allowed.
BigRational rational_power(long base, long exp);

/// F_m with F_1 = F_2 = 1 and F_0 = 0.
BigInt fibonacci(unsigned long m);

inline std::string to_string(const BigInt& v) { return v.get_str(); }
std::string to_string(const BigRational& v);

}  // namespace flatcat
