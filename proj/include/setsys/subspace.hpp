#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "setsys/field.hpp"

namespace setsys {

using Vec = std::vector<FieldElem>;
using Matrix = std::vector<Vec>;

/// Reduced row echelon form of the row span; zero rows are dropped.
Matrix rref(const FieldSpec& f, Matrix rows);
std::size_t rank(const FieldSpec& f, Matrix rows);

/// A subspace of F_q^n stored as its canonical RREF basis, so two values
/// are equal iff they describe the same subspace.
class Subspace {
 public:
  Subspace() = default;
  /// Span of the given rows, each of length n. Throws DomainError on a
  /// row of the wrong length or an entry outside the field.
  Subspace(FieldPtr field, int n, Matrix rows);

  static Subspace zero(FieldPtr field, int n);
  static Subspace whole(FieldPtr field, int n);

  const FieldPtr& field() const { return field_; }
  const FieldSpec& F() const { return *field_; }
  int n() const { return n_; }
  int dim() const { return static_cast<int>(basis_.size()); }
  const Matrix& basis() const { return basis_; }
  std::vector<int> pivots() const;

  bool contains(const Vec& v) const;
  bool contains(const Subspace& other) const;
  bool same_ambient(const Subspace& other) const;

  /// One row per line, digits in hex.
  std::string to_string() const;

  bool operator==(const Subspace& o) const { return same_ambient(o) && basis_ == o.basis_; }
  /// Orders by dimension, then basis; for canonical output only.
  bool operator<(const Subspace& o) const;

 private:
  FieldPtr field_;
  int n_ = 0;
  Matrix basis_;
};

/// Distinct subspaces of one ambient space F_q^n, in order.
class SubspaceFamily {
 public:
  SubspaceFamily() = default;
  /// Throws DomainError on an ambient mismatch, ValidityError on repeats.
  SubspaceFamily(FieldPtr field, int n, std::vector<Subspace> members);

  const FieldPtr& field() const { return field_; }
  int n() const { return n_; }
  const std::vector<Subspace>& members() const { return members_; }
  std::size_t size() const { return members_.size(); }
  bool empty() const { return members_.empty(); }
  const Subspace& operator[](std::size_t i) const { return members_[i]; }
  int max_dim() const;

  bool operator==(const SubspaceFamily& o) const;

 private:
  FieldPtr field_;
  int n_ = 0;
  std::vector<Subspace> members_;
};

}  // namespace setsys
