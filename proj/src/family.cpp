#include "setsys/family.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <set>
#include <sstream>

#include "setsys/combinations.hpp"
#include "setsys/errors.hpp"

namespace setsys {

namespace {

void require_strictly_increasing(const std::vector<int>& v, int min_allowed, const char* what) {
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (v[i] < min_allowed) {
      throw DomainError(std::string(what) + ": value " + std::to_string(v[i]) + " is below " +
                        std::to_string(min_allowed));
    }
    if (i && v[i] <= v[i - 1])
      throw DomainError(std::string(what) + ": values must be strictly increasing");
  }
}

std::string join_ints(const std::vector<int>& v) {
  std::string out = "{";
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (i) out += ',';
    out += std::to_string(v[i]);
  }
  return out + "}";
}

std::string trim(const std::string& s) {
  std::size_t b = 0, e = s.size();
  while (b < e && std::isspace(static_cast<unsigned char>(s[b]))) ++b;
  while (e > b && std::isspace(static_cast<unsigned char>(s[e - 1]))) --e;
  return s.substr(b, e - b);
}

std::optional<long long> to_int(const std::string& s) {
  if (s.empty()) return std::nullopt;
  long long v = 0;
  auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
  if (ec != std::errc() || ptr != s.data() + s.size()) return std::nullopt;
  return v;
}

}  // namespace

LSet::LSet(std::vector<int> values) : values_(std::move(values)) {
  require_strictly_increasing(values_, 0, "LSet");
}

int LSet::min() const {
  if (values_.empty()) throw DomainError("LSet::min on empty set");
  return values_.front();
}

bool LSet::contains(int v) const { return std::binary_search(values_.begin(), values_.end(), v); }

std::string LSet::to_string() const { return join_ints(values_); }

KSet::KSet(std::vector<int> values) : values_(std::move(values)) {
  require_strictly_increasing(values_, 1, "KSet");
}

int KSet::max() const {
  if (values_.empty()) throw DomainError("KSet::max on empty set");
  return values_.back();
}

bool KSet::contains(int v) const { return std::binary_search(values_.begin(), values_.end(), v); }

std::string KSet::to_string() const { return join_ints(values_); }

SetFamily::SetFamily(GroundSet ground, std::vector<Subset> members)
    : ground_(ground), members_(std::move(members)) {
  if (ground_.n < 1 || ground_.n > kMaxGround) {
    throw DomainError("ground set size must lie in 1.." + std::to_string(kMaxGround) + ", got " +
                      std::to_string(ground_.n));
  }
  const Subset full = Subset::full(ground_.n);
  std::set<Subset> seen;
  for (std::size_t i = 0; i < members_.size(); ++i) {
    if (!members_[i].subset_of(full)) {
      throw RangeError("member " + std::to_string(i + 1) + " " + members_[i].to_string() +
                       " has an element outside [" + std::to_string(ground_.n) + "]");
    }
    if (!seen.insert(members_[i]).second) {
      throw ValidityError("duplicate member " + members_[i].to_string());
    }
  }
}

int SetFamily::max_member_size() const {
  int k = 0;
  for (const auto& m : members_) k = std::max(k, m.size());
  return k;
}

std::optional<std::size_t> SetFamily::index_of(Subset s) const {
  auto it = std::find(members_.begin(), members_.end(), s);
  if (it == members_.end()) return std::nullopt;
  return static_cast<std::size_t>(it - members_.begin());
}

IntersectionProfile IntersectionProfile::compute(const SetFamily& fam, int h) {
  if (h < 2) throw DomainError("IntersectionProfile: h must be >= 2");
  IntersectionProfile p;
  p.h = h;
  const auto& m = fam.members();
  for (std::size_t i = 0; i < m.size(); ++i)
    for (std::size_t j = i + 1; j < m.size(); ++j) p.pair_sizes.push_back(intersection_size(m[i], m[j]));
  for_each_combination(m.size(), static_cast<std::size_t>(h), [&](const std::vector<std::size_t>& idx) {
    Subset acc = m[idx[0]];
    for (std::size_t t = 1; t < idx.size(); ++t) acc &= m[idx[t]];
    p.hwise_sizes.push_back(acc.size());
    return true;
  });
  std::sort(p.pair_sizes.begin(), p.pair_sizes.end());
  std::sort(p.hwise_sizes.begin(), p.hwise_sizes.end());
  return p;
}

bool is_l_intersecting(const SetFamily& fam, const LSet& L) {
  if (fam.size() < 2)
    throw DomainError("is_l_intersecting: family needs at least 2 members, has " + std::to_string(fam.size()));
  const auto& m = fam.members();
  for (std::size_t i = 0; i < m.size(); ++i)
    for (std::size_t j = i + 1; j < m.size(); ++j)
      if (!L.contains(intersection_size(m[i], m[j]))) return false;
  return true;
}

bool is_hwise_l_intersecting(const SetFamily& fam, const LSet& L, int h) {
  if (h < 2) throw DomainError("is_hwise_l_intersecting: h must be >= 2, got " + std::to_string(h));
  if (fam.size() < static_cast<std::size_t>(h)) {
    throw DomainError("is_hwise_l_intersecting: family needs at least h = " + std::to_string(h) +
                      " members, has " + std::to_string(fam.size()));
  }
  const auto& m = fam.members();
  return for_each_combination(m.size(), static_cast<std::size_t>(h), [&](const std::vector<std::size_t>& idx) {
    Subset acc = m[idx[0]];
    for (std::size_t t = 1; t < idx.size(); ++t) acc &= m[idx[t]];
    return L.contains(acc.size());
  });
}

bool sizes_in(const SetFamily& fam, const KSet& K) {
  return std::all_of(fam.members().begin(), fam.members().end(),
                     [&](Subset s) { return K.contains(s.size()); });
}

Subset common_intersection(const SetFamily& fam) {
  if (fam.empty()) throw DomainError("common_intersection: empty family");
  Subset acc = fam[0];
  for (const auto& m : fam.members()) acc &= m;
  return acc;
}

std::vector<int> parse_int_list(const std::string& text) {
  std::vector<int> out;
  const std::string t = trim(text);
  if (t.empty()) return out;
  std::stringstream ss(t);
  std::string item;
  while (std::getline(ss, item, ',')) {
    auto v = to_int(trim(item));
    if (!v || *v < 0 || *v > 1'000'000) throw DomainError("malformed integer list '" + text + "'");
    out.push_back(static_cast<int>(*v));
  }
  if (!t.empty() && t.back() == ',') throw DomainError("malformed integer list '" + text + "'");
  for (std::size_t i = 1; i < out.size(); ++i)
    if (out[i] <= out[i - 1])
      throw DomainError("integer list '" + text + "' must be strictly ascending without duplicates");
  return out;
}

SetFamily parse_family(std::istream& in) {
  std::string raw;
  std::size_t line_no = 0;
  std::optional<int> n;
  std::vector<Subset> members;
  while (std::getline(in, raw)) {
    ++line_no;
    std::string line = raw;
    if (auto hash = line.find('#'); hash != std::string::npos) line.erase(hash);
    line = trim(line);
    if (line.empty()) continue;
    if (!n) {
      if (line.rfind("n=", 0) != 0) throw ParseError(line_no, "expected header 'n=<int>'");
      auto v = to_int(trim(line.substr(2)));
      if (!v) throw ParseError(line_no, "malformed ground set size");
      if (*v < 1 || *v > kMaxGround)
        throw ParseError(line_no, "ground set size must lie in 1.." + std::to_string(kMaxGround));
      n = static_cast<int>(*v);
      continue;
    }
    if (line.size() < 2 || line.front() != '{' || line.back() != '}')
      throw ParseError(line_no, "expected a member of the form {a,b,c}");
    const std::string body = trim(line.substr(1, line.size() - 2));
    Subset s;
    if (!body.empty()) {
      std::stringstream ss(body);
      std::string item;
      int prev = 0;
      std::size_t count = 0;
      while (std::getline(ss, item, ',')) {
        auto v = to_int(trim(item));
        if (!v) throw ParseError(line_no, "malformed element '" + trim(item) + "'");
        if (*v < 1 || *v > *n) {
          throw RangeError("line " + std::to_string(line_no) + ": element " + std::to_string(*v) +
                           " outside [" + std::to_string(*n) + "]");
        }
        if (*v <= prev) throw ParseError(line_no, "elements must be ascending and distinct");
        prev = static_cast<int>(*v);
        s.insert(prev);
        ++count;
      }
      if (body.back() == ',' || count == 0) throw ParseError(line_no, "malformed member");
    }
    if (std::find(members.begin(), members.end(), s) != members.end()) {
      throw ValidityError("line " + std::to_string(line_no) + ": duplicate member " + s.to_string());
    }
    members.push_back(s);
  }
  if (!n) throw ParseError(line_no + 1, "missing header 'n=<int>'");
  return SetFamily(GroundSet{*n}, std::move(members));
}

SetFamily parse_family_string(const std::string& text) {
  std::istringstream in(text);
  return parse_family(in);
}

std::string serialize_family(const SetFamily& fam) {
  std::string out = "n=" + std::to_string(fam.n()) + "\n";
  for (const auto& m : fam.members()) out += m.to_string() + "\n";
  return out;
}

}  // namespace setsys
