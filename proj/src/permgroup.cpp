#include "galtrunc/permgroup.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>
#include <unordered_set>

#include "galtrunc/arith.hpp"
#include "galtrunc/error.hpp"

namespace galtrunc {

Perm identity_perm(int n) {
  Perm p(static_cast<std::size_t>(n));
  std::iota(p.begin(), p.end(), 0);
  return p;
}

Perm compose(const Perm& a, const Perm& b) {
  Perm r(b.size());
  for (std::size_t i = 0; i < b.size(); ++i) r[i] = a[b[i]];
  return r;
}

Perm parse_cycles(std::string_view text, int n) {
  Perm p = identity_perm(n);
  std::size_t i = 0;
  auto fail = [&](const std::string& why) { throw Error("bad cycle notation '" + std::string(text) + "': " + why); };
  while (i < text.size()) {
    if (text[i] == ' ') {
      ++i;
      continue;
    }
    if (text[i] != '(') fail("expected '('");
    ++i;
    std::vector<int> cyc;
    std::string num;
    for (; i < text.size() && text[i] != ')'; ++i) {
      if (text[i] == ',') {
        if (num.empty()) fail("empty point");
        cyc.push_back(std::stoi(num) - 1);
        num.clear();
      } else if (text[i] >= '0' && text[i] <= '9') {
        num += text[i];
      } else if (text[i] != ' ') {
        fail("unexpected character");
      }
    }
    if (i >= text.size()) fail("unterminated cycle");
    ++i;
    if (!num.empty()) cyc.push_back(std::stoi(num) - 1);
    for (int v : cyc) {
      if (v < 0 || v >= n) fail("point out of range");
    }
    for (std::size_t k = 0; k < cyc.size(); ++k) {
      p[static_cast<std::size_t>(cyc[k])] = static_cast<std::uint8_t>(cyc[(k + 1) % cyc.size()]);
    }
  }
  return p;
}

CycleType::CycleType(std::vector<int> parts) : parts_(std::move(parts)) {
  std::sort(parts_.rbegin(), parts_.rend());
}

CycleType CycleType::of(const Perm& p) {
  std::vector<bool> seen(p.size(), false);
  std::vector<int> parts;
  for (std::size_t i = 0; i < p.size(); ++i) {
    if (seen[i]) continue;
    int len = 0;
    for (std::size_t j = i; !seen[j]; j = p[j]) {
      seen[j] = true;
      ++len;
    }
    parts.push_back(len);
  }
  return CycleType(std::move(parts));
}

int CycleType::degree() const { return std::accumulate(parts_.begin(), parts_.end(), 0); }

bool CycleType::is_even() const {
  int transpositions = 0;
  for (int k : parts_) transpositions += k - 1;
  return transpositions % 2 == 0;
}

std::uint64_t CycleType::order() const {
  std::uint64_t r = 1;
  for (int k : parts_) r = lcm_u64(r, static_cast<std::uint64_t>(k));
  return r;
}

bool CycleType::is_uniform() const {
  return std::all_of(parts_.begin(), parts_.end(), [&](int k) { return k == parts_.front(); });
}

bool CycleType::contains(int part) const { return std::find(parts_.begin(), parts_.end(), part) != parts_.end(); }

std::string CycleType::to_string() const {
  std::string s = "[";
  for (std::size_t i = 0; i < parts_.size(); ++i) {
    if (i) s += ",";
    s += std::to_string(parts_[i]);
  }
  return s + "]";
}

CycleType CycleType::parse(std::string_view text) {
  std::string s(text);
  s.erase(std::remove_if(s.begin(), s.end(), [](char c) { return c == '[' || c == ']' || c == ' '; }), s.end());
  std::vector<int> parts;
  std::stringstream ss(s);
  std::string item;
  while (std::getline(ss, item, ',')) {
    require(!item.empty(), "bad cycle type '" + std::string(text) + "'");
    parts.push_back(std::stoi(item));
  }
  return CycleType(std::move(parts));
}

namespace {

struct PermHash {
  std::size_t operator()(const Perm& p) const noexcept {
    std::size_t h = 1469598103934665603ull;
    for (auto v : p) h = (h ^ v) * 1099511628211ull;
    return h;
  }
};

// Block of the smallest block system in which a and b share a block.
std::vector<int> minimal_block_partition(const std::vector<Perm>& gens, int n, int a, int b) {
  std::vector<int> parent(static_cast<std::size_t>(n));
  std::iota(parent.begin(), parent.end(), 0);
  auto find = [&](int x) {
    while (parent[static_cast<std::size_t>(x)] != x) x = parent[static_cast<std::size_t>(x)] = parent[static_cast<std::size_t>(parent[static_cast<std::size_t>(x)])];
    return x;
  };
  auto unite = [&](int x, int y) {
    x = find(x);
    y = find(y);
    if (x == y) return false;
    parent[static_cast<std::size_t>(std::max(x, y))] = std::min(x, y);
    return true;
  };
  unite(a, b);
  for (bool changed = true; changed;) {
    changed = false;
    for (const auto& g : gens) {
      for (int x = 0; x < n; ++x) {
        for (int y = x + 1; y < n; ++y) {
          if (find(x) == find(y) && unite(g[static_cast<std::size_t>(x)], g[static_cast<std::size_t>(y)])) changed = true;
        }
      }
    }
  }
  std::vector<int> cls(static_cast<std::size_t>(n));
  for (int x = 0; x < n; ++x) cls[static_cast<std::size_t>(x)] = find(x);
  return cls;
}

void expand(TransitiveGroupRecord& r) {
  auto elements = group_closure(r.generators, r.degree);
  r.order = elements.size();
  r.even = true;
  for (const auto& e : elements) {
    auto ct = CycleType::of(e);
    r.cycle_types.insert(ct);
    ++r.cycle_type_counts[ct];
    if (!ct.is_even()) r.even = false;
  }
  for (int j = 1; j < r.degree; ++j) {
    auto cls = minimal_block_partition(r.generators, r.degree, 0, j);
    int size = static_cast<int>(std::count(cls.begin(), cls.end(), cls[0]));
    if (size < r.degree) r.block_sizes.insert(size);
  }
}

}  // namespace

std::vector<Perm> group_closure(const std::vector<Perm>& gens, int n) {
  std::vector<Perm> elements{identity_perm(n)};
  std::unordered_set<Perm, PermHash> seen(elements.begin(), elements.end());
  for (std::size_t i = 0; i < elements.size(); ++i) {
    for (const auto& g : gens) {
      Perm next = compose(g, elements[i]);
      if (seen.insert(next).second) elements.push_back(std::move(next));
    }
  }
  return elements;
}

std::string TransitiveGroupRecord::t_notation() const { return std::to_string(degree) + "T" + std::to_string(t); }

std::vector<TransitiveGroupRecord> parse_transitive_groups(std::string_view text) {
  std::vector<TransitiveGroupRecord> out;
  std::istringstream in{std::string(text)};
  std::string line;
  int lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    auto hash = line.find('#');
    if (hash != std::string::npos) line.erase(hash);
    std::istringstream ls(line);
    TransitiveGroupRecord r;
    if (!(ls >> r.degree)) continue;
    require(static_cast<bool>(ls >> r.t >> r.name), "transitive group data line " + std::to_string(lineno) + ": missing fields");
    require(r.degree >= 1 && r.degree <= 16, "transitive group data line " + std::to_string(lineno) + ": bad degree");
    std::string gen;
    while (ls >> gen) {
      r.generator_text.push_back(gen);
      r.generators.push_back(parse_cycles(gen, r.degree));
    }
    require(!r.generators.empty(), "transitive group data line " + std::to_string(lineno) + ": no generators");
    expand(r);
    out.push_back(std::move(r));
  }
  return out;
}

const std::vector<TransitiveGroupRecord>& transitive_groups() {
  static const std::vector<TransitiveGroupRecord> groups = parse_transitive_groups(transitive_groups_text());
  return groups;
}

std::vector<const TransitiveGroupRecord*> transitive_groups_of_degree(int n) {
  std::vector<const TransitiveGroupRecord*> out;
  for (const auto& r : transitive_groups()) {
    if (r.degree == n) out.push_back(&r);
  }
  return out;
}

const TransitiveGroupRecord* find_transitive_group(int n, std::string_view name) {
  for (const auto& r : transitive_groups()) {
    if (r.degree == n && r.name == name) return &r;
  }
  return nullptr;
}

}  // namespace galtrunc
