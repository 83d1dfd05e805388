#include "setsys/subspace.hpp"

#include <algorithm>

#include "setsys/errors.hpp"

namespace setsys {

Matrix rref(const FieldSpec& f, Matrix rows) {
  if (rows.empty()) return rows;
  const std::size_t ncols = rows[0].size();
  std::size_t r = 0;
  for (std::size_t c = 0; c < ncols && r < rows.size(); ++c) {
    std::size_t piv = r;
    while (piv < rows.size() && rows[piv][c] == 0) ++piv;
    if (piv == rows.size()) continue;
    std::swap(rows[r], rows[piv]);
    const FieldElem scale = f.inv(rows[r][c]);
    for (auto& x : rows[r]) x = f.mul(x, scale);
    for (std::size_t i = 0; i < rows.size(); ++i) {
      if (i == r || rows[i][c] == 0) continue;
      const FieldElem factor = rows[i][c];
      for (std::size_t j = c; j < ncols; ++j) rows[i][j] = f.sub(rows[i][j], f.mul(factor, rows[r][j]));
    }
    ++r;
  }
  rows.resize(r);
  return rows;
}

std::size_t rank(const FieldSpec& f, Matrix rows) { return rref(f, std::move(rows)).size(); }

Subspace::Subspace(FieldPtr field, int n, Matrix rows) : field_(std::move(field)), n_(n) {
  if (!field_) throw DomainError("subspace needs a field");
  if (n < 0) throw DomainError("ambient dimension must be nonnegative");
  for (const auto& row : rows) {
    if (row.size() != static_cast<std::size_t>(n)) throw DomainError("row length differs from ambient dimension");
    for (auto x : row)
      if (x >= field_->q()) throw DomainError("entry outside the field");
  }
  basis_ = rref(*field_, std::move(rows));
}

Subspace Subspace::zero(FieldPtr field, int n) { return Subspace(std::move(field), n, {}); }

Subspace Subspace::whole(FieldPtr field, int n) {
  Matrix rows(static_cast<std::size_t>(n), Vec(static_cast<std::size_t>(n), 0));
  for (int i = 0; i < n; ++i) rows[static_cast<std::size_t>(i)][static_cast<std::size_t>(i)] = 1;
  return Subspace(std::move(field), n, std::move(rows));
}

std::vector<int> Subspace::pivots() const {
  std::vector<int> out;
  for (const auto& row : basis_) {
    auto it = std::find_if(row.begin(), row.end(), [](FieldElem x) { return x != 0; });
    out.push_back(static_cast<int>(it - row.begin()));
  }
  return out;
}

bool Subspace::contains(const Vec& v) const {
  if (v.size() != static_cast<std::size_t>(n_)) throw DomainError("vector length differs from ambient dimension");
  Vec w = v;
  const auto piv = pivots();
  for (std::size_t i = 0; i < basis_.size(); ++i) {
    const FieldElem c = w[static_cast<std::size_t>(piv[i])];
    if (c == 0) continue;
    for (std::size_t j = 0; j < w.size(); ++j) w[j] = F().sub(w[j], F().mul(c, basis_[i][j]));
  }
  return std::all_of(w.begin(), w.end(), [](FieldElem x) { return x == 0; });
}

bool Subspace::contains(const Subspace& other) const {
  if (!same_ambient(other)) throw DomainError("subspaces live in different ambient spaces");
  return std::all_of(other.basis_.begin(), other.basis_.end(), [this](const Vec& v) { return contains(v); });
}

bool Subspace::same_ambient(const Subspace& o) const {
  return field_ && o.field_ && field_->q() == o.field_->q() && n_ == o.n_;
}

std::string Subspace::to_string() const {
  static const char* hex = "0123456789abcdef";
  std::string out;
  for (const auto& row : basis_) {
    for (auto x : row) out += hex[x];
    out += '\n';
  }
  return out;
}

bool Subspace::operator<(const Subspace& o) const {
  if (dim() != o.dim()) return dim() < o.dim();
  return basis_ < o.basis_;
}

SubspaceFamily::SubspaceFamily(FieldPtr field, int n, std::vector<Subspace> members)
    : field_(std::move(field)), n_(n), members_(std::move(members)) {
  if (!field_) throw DomainError("subspace family needs a field");
  for (std::size_t i = 0; i < members_.size(); ++i) {
    if (members_[i].n() != n_ || members_[i].F().q() != field_->q())
      throw DomainError("member " + std::to_string(i + 1) + " lies in a different ambient space");
    for (std::size_t j = 0; j < i; ++j)
      if (members_[j] == members_[i])
        throw ValidityError("members " + std::to_string(j + 1) + " and " + std::to_string(i + 1) + " coincide");
  }
}

int SubspaceFamily::max_dim() const {
  int k = 0;
  for (const auto& m : members_) k = std::max(k, m.dim());
  return k;
}

bool SubspaceFamily::operator==(const SubspaceFamily& o) const {
  return field_ && o.field_ && field_->q() == o.field_->q() && n_ == o.n_ && members_ == o.members_;
}

}  // namespace setsys
