#include "lpi/groups.hpp"

#include <algorithm>
#include <array>
#include <bit>
#include <cctype>
#include <fstream>
#include <map>
#include <numeric>
#include <sstream>

#include "lpi/error.hpp"

namespace lpi {

namespace {

ElementSet sorted_unique(std::vector<std::size_t> v) {
  std::sort(v.begin(), v.end());
  v.erase(std::unique(v.begin(), v.end()), v.end());
  return v;
}

bool contains(const ElementSet& set, std::size_t g) { return std::binary_search(set.begin(), set.end(), g); }

// Minimal set S that generates the table under right multiplication.
std::vector<std::size_t> right_generators(std::size_t n, const std::vector<std::uint32_t>& table) {
  std::vector<std::size_t> gens;
  std::vector<bool> reached(n, false);
  reached[0] = true;
  std::size_t count = 1;
  auto grow = [&](std::vector<std::size_t> queue) {
    while (!queue.empty()) {
      const std::size_t x = queue.back();
      queue.pop_back();
      for (std::size_t s : gens) {
        const std::size_t y = table[x * n + s];
        if (!reached[y]) {
          reached[y] = true;
          ++count;
          queue.push_back(y);
        }
      }
    }
  };
  while (count < n) {
    std::size_t next = 0;
    while (reached[next]) ++next;
    gens.push_back(next);
    std::vector<std::size_t> all;
    for (std::size_t i = 0; i < n; ++i)
      if (reached[i]) all.push_back(i);
    grow(std::move(all));
  }
  return gens;
}

std::size_t parse_positive(std::string_view digits, std::string_view spec) {
  if (digits.empty() || digits.size() > 9 ||
      !std::all_of(digits.begin(), digits.end(), [](char c) { return std::isdigit(static_cast<unsigned char>(c)); }))
    throw Error(ErrorKind::SpecSyntaxError, "malformed group spec '" + std::string(spec) + "'");
  const auto n = static_cast<std::size_t>(std::stoul(std::string(digits)));
  if (n == 0) throw Error(ErrorKind::SpecSyntaxError, "group parameter must be positive in '" + std::string(spec) + "'");
  return n;
}

std::string cycle_notation(const std::vector<int>& perm) {
  std::string out;
  std::vector<bool> seen(perm.size(), false);
  for (std::size_t start = 0; start < perm.size(); ++start) {
    if (seen[start] || perm[start] == static_cast<int>(start)) continue;
    out += "(";
    std::size_t x = start;
    bool first = true;
    while (!seen[x]) {
      seen[x] = true;
      if (!first) out += " ";
      out += std::to_string(x + 1);
      first = false;
      x = static_cast<std::size_t>(perm[x]);
    }
    out += ")";
  }
  return out.empty() ? "()" : out;
}

}  // namespace

FiniteGroup::FiniteGroup(std::size_t order, std::vector<std::uint32_t> table, std::vector<std::string> names)
    : order_(order), table_(std::move(table)), inverse_(order, 0), names_(std::move(names)) {
  for (std::size_t g = 0; g < order_; ++g)
    for (std::size_t h = 0; h < order_; ++h)
      if (table_[g * order_ + h] == 0) {
        inverse_[g] = h;
        break;
      }
  if (names_.size() != order_) {
    names_.resize(order_);
    for (std::size_t g = 0; g < order_; ++g) names_[g] = "g" + std::to_string(g);
  }
}

FiniteGroup FiniteGroup::trusted(std::size_t order, std::vector<std::uint32_t> table, std::vector<std::string> names) {
  return FiniteGroup(order, std::move(table), std::move(names));
}

FiniteGroup FiniteGroup::from_table(const std::vector<std::vector<std::size_t>>& table, std::vector<std::string> names,
                                    std::size_t max_order) {
  const std::size_t n = table.size();
  if (n == 0) throw Error(ErrorKind::InvalidTable, "empty multiplication table");
  if (n > max_order)
    throw Error(ErrorKind::TooLarge, "group order " + std::to_string(n) + " exceeds cap " + std::to_string(max_order));
  std::vector<std::uint32_t> flat(n * n);
  for (std::size_t g = 0; g < n; ++g) {
    if (table[g].size() != n)
      throw Error(ErrorKind::InvalidTable, "row " + std::to_string(g) + " has " + std::to_string(table[g].size()) +
                                               " entries, expected " + std::to_string(n));
    for (std::size_t h = 0; h < n; ++h) {
      if (table[g][h] >= n)
        throw Error(ErrorKind::InvalidTable, "entry (" + std::to_string(g) + "," + std::to_string(h) + ") out of range");
      flat[g * n + h] = static_cast<std::uint32_t>(table[g][h]);
    }
  }
  for (std::size_t g = 0; g < n; ++g)
    if (flat[g] != g || flat[g * n] != g)
      throw Error(ErrorKind::InvalidTable, "element 0 is not a two-sided identity (fails at " + std::to_string(g) + ")");
  std::vector<bool> seen(n);
  for (std::size_t g = 0; g < n; ++g) {
    std::fill(seen.begin(), seen.end(), false);
    for (std::size_t h = 0; h < n; ++h) {
      if (seen[flat[g * n + h]]) throw Error(ErrorKind::InvalidTable, "row " + std::to_string(g) + " repeats an entry");
      seen[flat[g * n + h]] = true;
    }
    std::fill(seen.begin(), seen.end(), false);
    for (std::size_t h = 0; h < n; ++h) {
      if (seen[flat[h * n + g]]) throw Error(ErrorKind::InvalidTable, "column " + std::to_string(g) + " repeats an entry");
      seen[flat[h * n + g]] = true;
    }
  }
  // Light's test: the elements a with (xa)y = x(ay) for all x, y are closed
  // under products, so checking a right-generating set suffices.
  for (std::size_t a : right_generators(n, flat))
    for (std::size_t x = 0; x < n; ++x)
      for (std::size_t y = 0; y < n; ++y)
        if (flat[flat[x * n + a] * n + y] != flat[x * n + flat[a * n + y]])
          throw Error(ErrorKind::InvalidTable, "associativity fails for (" + std::to_string(x) + "," + std::to_string(a) +
                                                   "," + std::to_string(y) + ")");
  return FiniteGroup(n, std::move(flat), std::move(names));
}

std::optional<std::size_t> FiniteGroup::find(std::string_view name) const {
  for (std::size_t g = 0; g < order_; ++g)
    if (names_[g] == name) return g;
  return std::nullopt;
}

FiniteGroup cyclic_group(std::size_t n) {
  std::vector<std::uint32_t> table(n * n);
  std::vector<std::string> names(n);
  for (std::size_t i = 0; i < n; ++i) {
    names[i] = i == 0 ? "1" : i == 1 ? "g" : "g^" + std::to_string(i);
    for (std::size_t j = 0; j < n; ++j) table[i * n + j] = static_cast<std::uint32_t>((i + j) % n);
  }
  return FiniteGroup::trusted(n, std::move(table), std::move(names));
}

FiniteGroup dihedral_group(std::size_t n) {
  // r^i s^e stored at index i + n*e; s r s = r^-1.
  const std::size_t order = 2 * n;
  std::vector<std::uint32_t> table(order * order);
  std::vector<std::string> names(order);
  for (std::size_t x = 0; x < order; ++x) {
    const std::size_t i = x % n, a = x / n;
    std::string rot = i == 0 ? "" : i == 1 ? "r" : "r^" + std::to_string(i);
    names[x] = a == 0 ? (rot.empty() ? "1" : rot) : rot + "s";
    for (std::size_t y = 0; y < order; ++y) {
      const std::size_t j = y % n, b = y / n;
      const std::size_t rot_part = a == 0 ? (i + j) % n : (i + n - j) % n;
      table[x * order + y] = static_cast<std::uint32_t>(rot_part + n * ((a + b) % 2));
    }
  }
  return FiniteGroup::trusted(order, std::move(table), std::move(names));
}

FiniteGroup symmetric_group(std::size_t n) {
  if (n == 0 || n > 5) throw Error(ErrorKind::SpecSyntaxError, "symmetric groups are limited to s1..s5");
  std::vector<std::vector<int>> perms;
  std::vector<int> p(n);
  std::iota(p.begin(), p.end(), 0);
  do perms.push_back(p);
  while (std::next_permutation(p.begin(), p.end()));
  std::map<std::vector<int>, std::size_t> index;
  for (std::size_t k = 0; k < perms.size(); ++k) index[perms[k]] = k;
  const std::size_t order = perms.size();
  std::vector<std::uint32_t> table(order * order);
  std::vector<std::string> names(order);
  std::vector<int> composed(n);
  for (std::size_t g = 0; g < order; ++g) {
    names[g] = cycle_notation(perms[g]);
    for (std::size_t h = 0; h < order; ++h) {
      for (std::size_t x = 0; x < n; ++x) composed[x] = perms[g][static_cast<std::size_t>(perms[h][x])];
      table[g * order + h] = static_cast<std::uint32_t>(index.at(composed));
    }
  }
  return FiniteGroup::trusted(order, std::move(table), std::move(names));
}

FiniteGroup quaternion_group() {
  // unit u in {1, i, j, k} with sign bit s is stored at 2u + s.
  struct Signed {
    int sign;
    int unit;
  };
  static constexpr std::array<std::array<Signed, 4>, 4> units{{
      {{{1, 0}, {1, 1}, {1, 2}, {1, 3}}},
      {{{1, 1}, {-1, 0}, {1, 3}, {-1, 2}}},
      {{{1, 2}, {-1, 3}, {-1, 0}, {1, 1}}},
      {{{1, 3}, {1, 2}, {-1, 1}, {-1, 0}}},
  }};
  static const std::array<const char*, 8> names{"1", "-1", "i", "-i", "j", "-j", "k", "-k"};
  std::vector<std::uint32_t> table(64);
  for (std::size_t x = 0; x < 8; ++x)
    for (std::size_t y = 0; y < 8; ++y) {
      const Signed prod = units[x / 2][y / 2];
      const int sign = prod.sign * (x % 2 ? -1 : 1) * (y % 2 ? -1 : 1);
      table[x * 8 + y] = static_cast<std::uint32_t>(2 * prod.unit + (sign < 0 ? 1 : 0));
    }
  return FiniteGroup::trusted(8, std::move(table), std::vector<std::string>(names.begin(), names.end()));
}

FiniteGroup direct_product(const FiniteGroup& g, const FiniteGroup& h, std::size_t max_order) {
  const std::size_t m = h.order();
  const std::size_t order = g.order() * m;
  if (order > max_order)
    throw Error(ErrorKind::TooLarge, "group order " + std::to_string(order) + " exceeds cap " + std::to_string(max_order));
  std::vector<std::uint32_t> table(order * order);
  std::vector<std::string> names(order);
  for (std::size_t x = 0; x < order; ++x) {
    names[x] = "(" + g.name(x / m) + "," + h.name(x % m) + ")";
    for (std::size_t y = 0; y < order; ++y)
      table[x * order + y] = static_cast<std::uint32_t>(g.mul(x / m, y / m) * m + h.mul(x % m, y % m));
  }
  return FiniteGroup::trusted(order, std::move(table), std::move(names));
}

FiniteGroup read_group_table(const std::string& path, std::size_t max_order) {
  std::ifstream in(path);
  if (!in) throw Error(ErrorKind::SpecSyntaxError, "cannot open group table file '" + path + "'");
  long long n = 0;
  if (!(in >> n) || n <= 0) throw Error(ErrorKind::InvalidTable, "first line of '" + path + "' must be the group order");
  if (static_cast<std::size_t>(n) > max_order)
    throw Error(ErrorKind::TooLarge, "group order " + std::to_string(n) + " exceeds cap " + std::to_string(max_order));
  std::vector<std::vector<std::size_t>> table(static_cast<std::size_t>(n), std::vector<std::size_t>(static_cast<std::size_t>(n)));
  for (auto& row : table)
    for (auto& entry : row) {
      long long v = 0;
      if (!(in >> v) || v < 0) throw Error(ErrorKind::InvalidTable, "truncated or negative entry in '" + path + "'");
      entry = static_cast<std::size_t>(v);
    }
  std::string extra;
  if (in >> extra) throw Error(ErrorKind::InvalidTable, "trailing data in '" + path + "'");
  return FiniteGroup::from_table(table, {}, max_order);
}

FiniteGroup build_group(std::string_view spec, std::size_t max_order) {
  if (spec.substr(0, 5) == "file:") return read_group_table(std::string(spec.substr(5)), max_order);
  std::optional<FiniteGroup> result;
  std::size_t start = 0;
  while (start <= spec.size()) {
    const std::size_t stop = std::min(spec.find('*', start), spec.size());
    const std::string_view factor = spec.substr(start, stop - start);
    std::optional<FiniteGroup> g;
    if (factor == "q8") {
      g = quaternion_group();
    } else if (!factor.empty() && (factor[0] == 'c' || factor[0] == 'd' || factor[0] == 's')) {
      const std::size_t n = parse_positive(factor.substr(1), spec);
      const std::size_t order = factor[0] == 'c' ? n : factor[0] == 'd' ? 2 * n : 0;
      if (order > max_order)
        throw Error(ErrorKind::TooLarge, "group order " + std::to_string(order) + " exceeds cap " + std::to_string(max_order));
      g = factor[0] == 'c' ? cyclic_group(n) : factor[0] == 'd' ? dihedral_group(n) : symmetric_group(n);
    } else {
      throw Error(ErrorKind::SpecSyntaxError, "unknown group factor '" + std::string(factor) + "' in '" + std::string(spec) + "'",
                  start);
    }
    result = result ? direct_product(*result, *g, max_order) : std::move(*g);
    if (result->order() > max_order)
      throw Error(ErrorKind::TooLarge, "group order exceeds cap " + std::to_string(max_order));
    start = stop + 1;
  }
  return std::move(*result);
}

std::size_t order_of(const FiniteGroup& group, std::size_t g) {
  std::size_t n = 1;
  for (std::size_t x = g; x != group.identity(); x = group.mul(x, g)) ++n;
  return n;
}

std::size_t conjugacy_class_size(const FiniteGroup& group, std::size_t g) {
  std::vector<bool> seen(group.order(), false);
  std::size_t count = 0;
  for (std::size_t h = 0; h < group.order(); ++h) {
    const std::size_t c = group.conjugate(g, h);
    if (!seen[c]) {
      seen[c] = true;
      ++count;
    }
  }
  return count;
}

bool is_abelian(const FiniteGroup& group) { return is_abelian(group, all_elements(group)); }

bool is_abelian(const FiniteGroup& group, const ElementSet& subset) {
  for (std::size_t x : subset)
    for (std::size_t y : subset)
      if (group.mul(x, y) != group.mul(y, x)) return false;
  return true;
}

bool is_subgroup(const FiniteGroup& group, const ElementSet& subset) {
  if (subset.empty() || !contains(subset, group.identity())) return false;
  for (std::size_t x : subset)
    for (std::size_t y : subset)
      if (!contains(subset, group.mul(x, group.inverse(y)))) return false;
  return true;
}

bool is_normal(const FiniteGroup& group, const ElementSet& subgroup) {
  for (std::size_t h = 0; h < group.order(); ++h)
    for (std::size_t x : subgroup)
      if (!contains(subgroup, group.conjugate(x, h))) return false;
  return true;
}

ElementSet generated_subgroup(const FiniteGroup& group, const ElementSet& generators) {
  std::vector<bool> in(group.order(), false);
  std::vector<std::size_t> members{group.identity()};
  in[group.identity()] = true;
  for (std::size_t i = 0; i < members.size(); ++i)
    for (std::size_t s : generators) {
      const std::size_t y = group.mul(members[i], s);
      if (!in[y]) {
        in[y] = true;
        members.push_back(y);
      }
    }
  return sorted_unique(std::move(members));
}

ElementSet cyclic_subgroup(const FiniteGroup& group, std::size_t g) { return generated_subgroup(group, {g}); }

ElementSet all_elements(const FiniteGroup& group) {
  ElementSet all(group.order());
  std::iota(all.begin(), all.end(), std::size_t{0});
  return all;
}

ElementSet fc_subgroup(const FiniteGroup& group) {
  ElementSet out;
  for (std::size_t g = 0; g < group.order(); ++g)
    if (conjugacy_class_size(group, g) <= group.order()) out.push_back(g);
  return out;
}

ElementSet derived_subgroup(const FiniteGroup& group, const ElementSet& subset) {
  std::vector<std::size_t> commutators;
  for (std::size_t x : subset)
    for (std::size_t y : subset)
      commutators.push_back(group.mul(group.mul(x, y), group.inverse(group.mul(y, x))));
  return generated_subgroup(group, sorted_unique(std::move(commutators)));
}

ElementSet derived_subgroup(const FiniteGroup& group) { return derived_subgroup(group, all_elements(group)); }

std::string to_string(GroupKind kind) {
  switch (kind) {
    case GroupKind::Abelian: return "Abelian";
    case GroupKind::Hamiltonian: return "Hamiltonian";
    case GroupKind::NonDedekind: return "NonDedekind";
  }
  return "?";
}

GroupClassification classify(const FiniteGroup& group) {
  if (is_abelian(group)) return {GroupKind::Abelian, std::nullopt};
  for (std::size_t g = 0; g < group.order(); ++g)
    if (!is_normal(group, cyclic_subgroup(group, g))) return {GroupKind::NonDedekind, g};
  return {GroupKind::Hamiltonian, std::nullopt};
}

bool is_p_prime_group(const FiniteGroup& group, std::uint64_t p) {
  for (std::size_t g = 0; g < group.order(); ++g)
    if (order_of(group, g) % p == 0) return false;
  return true;
}

std::vector<ElementSet> index2_subgroups(const FiniteGroup& group) {
  // Every index-2 subgroup contains all squares; G / <squares> is an
  // elementary abelian 2-group and index-2 subgroups are kernels of its
  // nonzero linear functionals.
  std::vector<std::size_t> squares;
  for (std::size_t g = 0; g < group.order(); ++g) squares.push_back(group.mul(g, g));
  const ElementSet base = generated_subgroup(group, sorted_unique(std::move(squares)));

  std::vector<std::size_t> basis;
  ElementSet span = base;
  while (span.size() < group.order()) {
    std::size_t g = 0;
    while (contains(span, g)) ++g;
    basis.push_back(g);
    ElementSet gens = base;
    gens.insert(gens.end(), basis.begin(), basis.end());
    span = generated_subgroup(group, sorted_unique(std::move(gens)));
  }

  const std::size_t m = basis.size();
  std::vector<std::size_t> coord(group.order(), 0);
  for (std::size_t mask = 0; mask < (std::size_t{1} << m); ++mask) {
    std::size_t rep = group.identity();
    for (std::size_t i = 0; i < m; ++i)
      if (mask & (std::size_t{1} << i)) rep = group.mul(rep, basis[i]);
    for (std::size_t n : base) coord[group.mul(rep, n)] = mask;
  }

  std::vector<ElementSet> out;
  for (std::size_t functional = 1; functional < (std::size_t{1} << m); ++functional) {
    ElementSet kernel;
    for (std::size_t g = 0; g < group.order(); ++g)
      if (std::popcount(coord[g] & functional) % 2 == 0) kernel.push_back(g);
    out.push_back(std::move(kernel));
  }
  return out;
}

std::optional<ElementSet> find_abelian_index2_subgroup(const FiniteGroup& group) {
  for (auto& h : index2_subgroups(group))
    if (is_abelian(group, h)) return h;
  return std::nullopt;
}

}  // namespace lpi
