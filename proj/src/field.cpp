#include "setsys/field.hpp"

#include <map>
#include <stdexcept>
#include <vector>

#include "setsys/errors.hpp"

namespace setsys {

namespace {

// Coefficients of the monic irreducible modulus, constant term first,
// leading coefficient omitted.
const std::map<unsigned, std::vector<unsigned>>& moduli() {
  static const std::map<unsigned, std::vector<unsigned>> table = {
      {4, {1, 1}},         // x^2 + x + 1
      {8, {1, 1, 0}},      // x^3 + x + 1
      {9, {1, 0}},         // x^2 + 1
      {16, {1, 1, 0, 0}},  // x^4 + x + 1
  };
  return table;
}

std::vector<unsigned> digits(unsigned a, unsigned p, unsigned e) {
  std::vector<unsigned> d(e);
  for (unsigned i = 0; i < e; ++i) {
    d[i] = a % p;
    a /= p;
  }
  return d;
}

unsigned encode(const std::vector<unsigned>& d, unsigned p) {
  unsigned a = 0;
  for (std::size_t i = d.size(); i-- > 0;) a = a * p + d[i];
  return a;
}

}  // namespace

std::shared_ptr<const FieldSpec> FieldSpec::make(unsigned q) {
  unsigned p = 0, e = 0;
  for (unsigned cand = 2; cand <= q; ++cand) {
    if (q % cand != 0) continue;
    p = cand;
    unsigned rest = q;
    while (rest % p == 0) {
      rest /= p;
      ++e;
    }
    if (rest != 1) p = 0;
    break;
  }
  if (q < 2 || q > kMaxOrder || p == 0) throw DomainError("field order must be a prime power in 2..16, got " + std::to_string(q));

  std::shared_ptr<FieldSpec> f(new FieldSpec());
  f->q_ = q;
  f->p_ = p;
  f->e_ = e;
  if (e == 1) {
    for (unsigned a = 0; a < q; ++a)
      for (unsigned b = 0; b < q; ++b) {
        f->add_[a][b] = static_cast<FieldElem>((a + b) % q);
        f->mul_[a][b] = static_cast<FieldElem>((a * b) % q);
      }
  } else {
    const auto& mod = moduli().at(q);
    for (unsigned a = 0; a < q; ++a) {
      const auto da = digits(a, p, e);
      for (unsigned b = 0; b < q; ++b) {
        const auto db = digits(b, p, e);
        std::vector<unsigned> sum(e);
        for (unsigned i = 0; i < e; ++i) sum[i] = (da[i] + db[i]) % p;
        f->add_[a][b] = static_cast<FieldElem>(encode(sum, p));

        std::vector<unsigned> prod(2 * e - 1, 0);
        for (unsigned i = 0; i < e; ++i)
          for (unsigned j = 0; j < e; ++j) prod[i + j] = (prod[i + j] + da[i] * db[j]) % p;
        // x^e = -(mod[0] + mod[1] x + ...)
        for (std::size_t d = prod.size(); d-- > e;) {
          const unsigned c = prod[d];
          prod[d] = 0;
          for (unsigned i = 0; i < e; ++i) prod[d - e + i] = (prod[d - e + i] + (p - mod[i]) * c) % p;
        }
        prod.resize(e);
        f->mul_[a][b] = static_cast<FieldElem>(encode(prod, p));
      }
    }
  }
  for (unsigned a = 0; a < q; ++a)
    for (unsigned b = 0; b < q; ++b) {
      if (f->add_[a][b] == 0) f->neg_[a] = static_cast<FieldElem>(b);
      if (f->mul_[a][b] == 1) f->inv_[a] = static_cast<FieldElem>(b);
    }
  f->verify();
  return f;
}

void FieldSpec::verify() const {
  auto fail = [this](const std::string& what) {
    throw std::logic_error("GF(" + std::to_string(q_) + ") tables violate " + what);
  };
  for (unsigned a = 0; a < q_; ++a) {
    if (add_[a][0] != a) fail("additive identity");
    if (mul_[a][1] != a) fail("multiplicative identity");
    if (add_[a][neg_[a]] != 0) fail("additive inverse");
    if (a != 0 && mul_[a][inv_[a]] != 1) fail("multiplicative inverse");
    for (unsigned b = 0; b < q_; ++b) {
      if (add_[a][b] != add_[b][a]) fail("commutativity of +");
      if (mul_[a][b] != mul_[b][a]) fail("commutativity of *");
      if (a != 0 && b != 0 && mul_[a][b] == 0) fail("absence of zero divisors");
      for (unsigned c = 0; c < q_; ++c) {
        if (add_[add_[a][b]][c] != add_[a][add_[b][c]]) fail("associativity of +");
        if (mul_[mul_[a][b]][c] != mul_[a][mul_[b][c]]) fail("associativity of *");
        if (mul_[a][add_[b][c]] != add_[mul_[a][b]][mul_[a][c]]) fail("distributivity");
      }
    }
  }
}

}  // namespace setsys
