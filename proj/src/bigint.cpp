#include "flatcat/bigint.hpp"

#include "flatcat/errors.hpp"

namespace flatcat {

BigInt binomial(long n, long k) {
  if (n < 0 || k < 0 || k > n) return 0;
  BigInt result;
  mpz_bin_uiui(result.get_mpz_t(), static_cast<unsigned long>(n),
               static_cast<unsigned long>(k));
  return result;
}

BigInt power(long base, unsigned long exp) {
  BigInt result;
  BigInt b = base;
  mpz_pow_ui(result.get_mpz_t(), b.get_mpz_t(), exp);
  return result;
}

BigRational rational_power(long base, long exp) {
  if (exp >= 0) return BigRational(power(base, static_cast<unsigned long>(exp)));
  if (base == 0) throw DomainError("rational_power: zero to a negative power");
  BigRational r(BigInt(1), power(base, static_cast<unsigned long>(-exp)));
  r.canonicalize();
  return r;
}

BigInt fibonacci(unsigned long m) {
  BigInt result;
  mpz_fib_ui(result.get_mpz_t(), m);
  return result;
}

std::string to_string(const BigRational& v) { return v.get_str(); }

}  // namespace flatcat
