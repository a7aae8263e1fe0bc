#include "borel/bigint.hpp"

#include "borel/errors.hpp"

namespace borel {

BigInt binomial(long long n, long long k) {
  if (k < 0 || n < 0 || k > n) return 0;
  if (k > n - k) k = n - k;
  BigInt result = 1;
  for (long long i = 1; i <= k; ++i) {
    result *= (n - k + i);
    result /= i; // exact at every step: result is C(n-k+i, i)
  }
  return result;
}

BigInt catalan_number(long long n) {
  if (n < 0) return 0;
  return binomial(2 * n, n) / (n + 1);
}

BigInt factorial(long long n) {
  if (n < 0) throw domain_error("factorial of a negative integer");
  BigInt result = 1;
  for (long long i = 2; i <= n; ++i) result *= i;
  return result;
}

} // namespace borel
