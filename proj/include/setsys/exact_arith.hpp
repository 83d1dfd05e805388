#pragma once

#include <cstdint>

#include <boost/multiprecision/cpp_int.hpp>

namespace setsys {

/// Arbitrary-precision integer. Bound values are never negative.
using Natural = boost::multiprecision::cpp_int;
/// Arbitrary-precision rational, always kept in lowest terms.
using ExactRational = boost::multiprecision::cpp_rational;

struct QBinomParams {
  std::int64_t n = 0;
  std::int64_t k = 0;
  std::uint64_t q = 2;
};

/// C(n, k), zero whenever k < 0 or k > n.
Natural binom(std::int64_t n, std::int64_t k);

/// Sum of C(n, i) for lo <= i <= hi. Throws DomainError if lo > hi.
Natural binom_sum(std::int64_t n, std::int64_t lo, std::int64_t hi);

/// Gaussian binomial [n choose k]_q. Throws DomainError unless q is a prime
/// power >= 2.
Natural qbinom(const QBinomParams& p);

/// Sum of [n choose i]_q for lo <= i <= hi.
Natural qbinom_sum(std::int64_t n, std::int64_t lo, std::int64_t hi, std::uint64_t q);

Natural ipow(const Natural& base, std::uint64_t exp);

bool is_prime(std::uint64_t v);
/// True iff q = p^e for a prime p and e >= 1.
bool is_prime_power(std::uint64_t q);

/// floor(r) for r >= 0.
Natural floor_nonneg(const ExactRational& r);

/// Exact comparison by cross-multiplication.
int compare(const ExactRational& lhs, const Natural& rhs);

}  // namespace setsys
