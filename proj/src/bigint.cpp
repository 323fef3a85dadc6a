#include "pdsaw/bigint.hpp"

namespace pdsaw {

BigInt factorial(int n) {
  BigInt result = 1;
  for (int i = 2; i <= n; ++i) result *= i;
  return result;
}

BigInt double_factorial_odd(int n) {
  BigInt result = 1;
  for (int i = 1; i <= n; ++i) result *= 2 * i - 1;
  return result;
}

BigInt binomial(int n, int k) {
  if (k < 0 || k > n) return 0;
  if (k > n - k) k = n - k;
  BigInt result = 1;
  for (int i = 1; i <= k; ++i) {
    result *= n - k + i;
    result /= i;  // exact: i consecutive integers contain a multiple of i
  }
  return result;
}

}  // namespace pdsaw
