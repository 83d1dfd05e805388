#pragma once

#include <cstddef>
#include <istream>
#include <optional>
#include <string>
#include <vector>

#include "setsys/subset.hpp"

namespace setsys {

/// The ground set [n] = {1..n}.
struct GroundSet {
  int n = 1;
  bool operator==(const GroundSet&) const = default;
};

/// Strictly increasing list of nonnegative integers.
class LSet {
 public:
  LSet() = default;
  /// Throws DomainError unless strictly increasing and nonnegative.
  explicit LSet(std::vector<int> values);
  const std::vector<int>& values() const { return values_; }
  int s() const { return static_cast<int>(values_.size()); }
  bool empty() const { return values_.empty(); }
  int min() const;
  bool contains(int v) const;
  std::string to_string() const;
  bool operator==(const LSet&) const = default;

 private:
  std::vector<int> values_;
};

/// Strictly increasing list of positive integers.
class KSet {
 public:
  KSet() = default;
  explicit KSet(std::vector<int> values);
  const std::vector<int>& values() const { return values_; }
  int r() const { return static_cast<int>(values_.size()); }
  int max() const;
  bool contains(int v) const;
  std::string to_string() const;
  bool operator==(const KSet&) const = default;

 private:
  std::vector<int> values_;
};

/// An ordered list of pairwise distinct subsets of [n]. Member order is
/// significant. Immutable after construction.
class SetFamily {
 public:
  SetFamily() = default;
  /// Throws RangeError for elements outside [n], ValidityError for duplicates,
  /// DomainError when n is not in 1..64.
  SetFamily(GroundSet ground, std::vector<Subset> members);

  const GroundSet& ground() const { return ground_; }
  int n() const { return ground_.n; }
  const std::vector<Subset>& members() const { return members_; }
  std::size_t size() const { return members_.size(); }
  bool empty() const { return members_.empty(); }
  const Subset& operator[](std::size_t i) const { return members_[i]; }
  /// Largest member size, 0 for an empty family.
  int max_member_size() const;
  std::optional<std::size_t> index_of(Subset s) const;

  bool operator==(const SetFamily&) const = default;

 private:
  GroundSet ground_;
  std::vector<Subset> members_;
};

/// Multisets of intersection sizes, each sorted ascending.
struct IntersectionProfile {
  std::vector<int> pair_sizes;
  std::vector<int> hwise_sizes;
  int h = 2;

  static IntersectionProfile compute(const SetFamily& fam, int h = 2);
};

/// |A_i ∩ A_j| ∈ L for all i != j. Throws DomainError below two members.
bool is_l_intersecting(const SetFamily& fam, const LSet& L);
/// Every h distinct members meet in a set whose size lies in L. Throws
/// DomainError for h < 2 or fewer than h members.
bool is_hwise_l_intersecting(const SetFamily& fam, const LSet& L, int h);
bool sizes_in(const SetFamily& fam, const KSet& K);
/// Throws DomainError for an empty family.
Subset common_intersection(const SetFamily& fam);

/// Reads the family file format: a "n=<int>" header line, then one member
/// per line written as "{a,b,c}" with ascending distinct elements. Blank
/// lines are skipped and "#" starts a comment.
SetFamily parse_family(std::istream& in);
SetFamily parse_family_string(const std::string& text);
std::string serialize_family(const SetFamily& fam);

/// Parses "1,2,3" (strictly ascending, nonnegative). Throws DomainError.
std::vector<int> parse_int_list(const std::string& text);

}  // namespace setsys
