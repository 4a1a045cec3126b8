#pragma once

#include <cstdint>
#include <map>
#include <set>
#include <string>
#include <string_view>
#include <vector>

namespace galtrunc {

/// Permutation of {0, ..., n-1} as an image table.
using Perm = std::vector<std::uint8_t>;

Perm identity_perm(int n);
/// (a*b)(i) = a(b(i)).
Perm compose(const Perm& a, const Perm& b);
/// Parses "(1,2,3)(4,5)" with 1-based points; "()" is the identity.
Perm parse_cycles(std::string_view text, int n);

/// Integer partition of the degree, parts sorted descending.
class CycleType {
 public:
  CycleType() = default;
  explicit CycleType(std::vector<int> parts);
  static CycleType of(const Perm& p);

  const std::vector<int>& parts() const noexcept { return parts_; }
  int degree() const;
  bool is_even() const;
  /// Order of any permutation with this cycle type (lcm of the parts).
  std::uint64_t order() const;
  bool is_uniform() const;
  bool contains(int part) const;
  std::string to_string() const;  // "[3,2,1]"
  static CycleType parse(std::string_view text);

  friend auto operator<=>(const CycleType&, const CycleType&) = default;

 private:
  std::vector<int> parts_;
};

/// Elements of the group generated by gens, by breadth-first closure.
std::vector<Perm> group_closure(const std::vector<Perm>& gens, int n);

struct TransitiveGroupRecord {
  int degree = 0;
  int t = 0;
  std::string name;
  std::vector<std::string> generator_text;
  std::vector<Perm> generators;
  std::uint64_t order = 0;
  std::set<CycleType> cycle_types;
  std::map<CycleType, std::uint64_t> cycle_type_counts;
  bool even = false;               // contained in the alternating group
  std::set<int> block_sizes;       // sizes of nontrivial block systems
  std::string t_notation() const;  // "4T3"
};

/// Parses the embedded record format (see data/transitive_groups.txt) and
/// expands every group.
std::vector<TransitiveGroupRecord> parse_transitive_groups(std::string_view text);

/// The embedded catalogue, degrees 2 to 7, expanded once on first use.
const std::vector<TransitiveGroupRecord>& transitive_groups();
std::vector<const TransitiveGroupRecord*> transitive_groups_of_degree(int n);
const TransitiveGroupRecord* find_transitive_group(int n, std::string_view name);

/// Raw text of the embedded catalogue.
std::string_view transitive_groups_text();

}  // namespace galtrunc
