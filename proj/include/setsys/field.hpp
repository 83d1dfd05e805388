#pragma once

#include <array>
#include <cstdint>
#include <memory>
#include <string>

namespace setsys {

using FieldElem = std::uint8_t;

/// GF(q) for prime powers q <= 16. Elements are 0..q-1 with 0 and 1 the
/// identities; for q = p^e an element encodes the coefficients of a
/// polynomial in base p (constant term first). Non-prime fields are built
/// modulo a fixed irreducible polynomial: x^2+x+1 (q=4), x^3+x+1 (q=8),
/// x^2+1 (q=9), x^4+x+1 (q=16).
class FieldSpec {
 public:
  static constexpr unsigned kMaxOrder = 16;

  /// Throws DomainError unless q is a prime power in 2..16. The tables are
  /// checked against the field axioms before this returns.
  static std::shared_ptr<const FieldSpec> make(unsigned q);

  unsigned q() const { return q_; }
  unsigned characteristic() const { return p_; }
  unsigned degree() const { return e_; }

  FieldElem add(FieldElem a, FieldElem b) const { return add_[a][b]; }
  FieldElem sub(FieldElem a, FieldElem b) const { return add_[a][neg_[b]]; }
  FieldElem mul(FieldElem a, FieldElem b) const { return mul_[a][b]; }
  FieldElem neg(FieldElem a) const { return neg_[a]; }
  /// Multiplicative inverse; a must be nonzero.
  FieldElem inv(FieldElem a) const { return inv_[a]; }

 private:
  FieldSpec() = default;
  void verify() const;

  unsigned q_ = 0, p_ = 0, e_ = 0;
  std::array<std::array<FieldElem, kMaxOrder>, kMaxOrder> add_{}, mul_{};
  std::array<FieldElem, kMaxOrder> neg_{}, inv_{};
};

using FieldPtr = std::shared_ptr<const FieldSpec>;

}  // namespace setsys
