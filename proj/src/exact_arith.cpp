#include "setsys/exact_arith.hpp"

#include <stdexcept>
#include <string>

#include "setsys/errors.hpp"

namespace setsys {

Natural binom(std::int64_t n, std::int64_t k) {
  if (n < 0) throw DomainError("binom: n must be nonnegative, got " + std::to_string(n));
  if (k < 0 || k > n) return 0;
  if (k > n - k) k = n - k;
  Natural result = 1;
  // result = C(n - k + i, i) after step i, so each division is exact.
  for (std::int64_t i = 1; i <= k; ++i) {
    result *= (n - k + i);
    result /= i;
  }
  return result;
}

Natural binom_sum(std::int64_t n, std::int64_t lo, std::int64_t hi) {
  if (lo > hi) {
    throw DomainError("binom_sum: lo (" + std::to_string(lo) + ") exceeds hi (" +
                      std::to_string(hi) + ")");
  }
  Natural total = 0;
  const std::int64_t from = std::max<std::int64_t>(lo, 0);
  const std::int64_t to = std::min<std::int64_t>(hi, n);
  for (std::int64_t i = from; i <= to; ++i) total += binom(n, i);
  return total;
}

Natural ipow(const Natural& base, std::uint64_t exp) {
  Natural result = 1;
  Natural b = base;
  while (exp) {
    if (exp & 1U) result *= b;
    exp >>= 1U;
    if (exp) b *= b;
  }
  return result;
}

bool is_prime(std::uint64_t v) {
  if (v < 2) return false;
  for (std::uint64_t d = 2; d * d <= v; ++d)
    if (v % d == 0) return false;
  return true;
}

bool is_prime_power(std::uint64_t q) {
  if (q < 2) return false;
  std::uint64_t p = 2;
  while (q % p != 0) ++p;
  while (q % p == 0) q /= p;
  return q == 1;
}

Natural qbinom(const QBinomParams& p) {
  if (p.q < 2) throw DomainError("qbinom: q must be >= 2, got " + std::to_string(p.q));
  if (!is_prime_power(p.q))
    throw DomainError("qbinom: q must be a prime power, got " + std::to_string(p.q));
  if (p.n < 0) throw DomainError("qbinom: n must be nonnegative");
  if (p.k < 0 || p.k > p.n) return 0;
  const std::int64_t k = std::min(p.k, p.n - p.k);
  const Natural q = p.q;
  // Reindexed product: after step i the value is [n-k+i choose i]_q, an
  // integer, so the division must leave no remainder.
  Natural result = 1;
  Natural q_pow_i = 1;
  Natural q_pow_top = ipow(q, static_cast<std::uint64_t>(p.n - k));
  for (std::int64_t i = 1; i <= k; ++i) {
    q_pow_i *= q;
    q_pow_top *= q;
    result *= (q_pow_top - 1);
    const Natural den = q_pow_i - 1;
    Natural quot, rem;
    boost::multiprecision::divide_qr(result, den, quot, rem);
    if (rem != 0) throw std::logic_error("qbinom: inexact division in telescoping product");
    result = quot;
  }
  return result;
}

Natural qbinom_sum(std::int64_t n, std::int64_t lo, std::int64_t hi, std::uint64_t q) {
  if (lo > hi) {
    throw DomainError("qbinom_sum: lo (" + std::to_string(lo) + ") exceeds hi (" +
                      std::to_string(hi) + ")");
  }
  // validates q even when every term vanishes
  (void)qbinom({0, 0, q});
  Natural total = 0;
  const std::int64_t from = std::max<std::int64_t>(lo, 0);
  const std::int64_t to = std::min<std::int64_t>(hi, n);
  for (std::int64_t i = from; i <= to; ++i) total += qbinom({n, i, q});
  return total;
}

Natural floor_nonneg(const ExactRational& r) {
  if (r < 0) throw DomainError("floor_nonneg: negative argument");
  return Natural(boost::multiprecision::numerator(r) / boost::multiprecision::denominator(r));
}

int compare(const ExactRational& lhs, const Natural& rhs) {
  const Natural left = boost::multiprecision::numerator(lhs);
  const Natural right = rhs * boost::multiprecision::denominator(lhs);
  if (left < right) return -1;
  if (left > right) return 1;
  return 0;
}

}  // namespace setsys
