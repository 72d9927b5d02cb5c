#pragma once

// Finite groups stored as full multiplication tables, plus the structural
// predicates used by the group-algebra pipeline.

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace lpi {

/// Sorted list of element indices.
using ElementSet = std::vector<std::size_t>;

inline constexpr std::size_t kDefaultMaxGroupOrder = 2000;

class FiniteGroup {
 public:
  /// Validates identity, Latin-square and associativity; index 0 must be the
  /// identity. Throws InvalidTable or TooLarge.
  static FiniteGroup from_table(const std::vector<std::vector<std::size_t>>& table,
                                std::vector<std::string> names = {},
                                std::size_t max_order = kDefaultMaxGroupOrder);
  /// Internal builders whose tables are correct by construction.
  static FiniteGroup trusted(std::size_t order, std::vector<std::uint32_t> table,
                             std::vector<std::string> names);

  std::size_t order() const noexcept { return order_; }
  std::size_t identity() const noexcept { return 0; }
  std::size_t mul(std::size_t g, std::size_t h) const noexcept { return table_[g * order_ + h]; }
  std::size_t inverse(std::size_t g) const noexcept { return inverse_[g]; }
  std::size_t conjugate(std::size_t g, std::size_t by) const noexcept {
    return mul(mul(by, g), inverse(by));
  }
  const std::string& name(std::size_t g) const { return names_.at(g); }
  std::optional<std::size_t> find(std::string_view name) const;

  /// Same order and same table; element names are ignored.
  friend bool operator==(const FiniteGroup& x, const FiniteGroup& y) {
    return x.order_ == y.order_ && x.table_ == y.table_;
  }

 private:
  FiniteGroup(std::size_t order, std::vector<std::uint32_t> table, std::vector<std::string> names);

  std::size_t order_;
  std::vector<std::uint32_t> table_;
  std::vector<std::size_t> inverse_;
  std::vector<std::string> names_;
};

FiniteGroup cyclic_group(std::size_t n);
/// Dihedral group of order 2n.
FiniteGroup dihedral_group(std::size_t n);
/// Symmetric group on n <= 5 points, identity first, composition (gh)(x) = g(h(x)).
FiniteGroup symmetric_group(std::size_t n);
FiniteGroup quaternion_group();
FiniteGroup direct_product(const FiniteGroup& g, const FiniteGroup& h,
                           std::size_t max_order = kDefaultMaxGroupOrder);
/// Line 1 holds n, then n rows of n 0-based indices.
FiniteGroup read_group_table(const std::string& path, std::size_t max_order = kDefaultMaxGroupOrder);

/// `c<n>`, `d<n>`, `s<n>`, `q8`, products joined by `*`, or `file:<path>`.
FiniteGroup build_group(std::string_view spec, std::size_t max_order = kDefaultMaxGroupOrder);

std::size_t order_of(const FiniteGroup& group, std::size_t g);
std::size_t conjugacy_class_size(const FiniteGroup& group, std::size_t g);

bool is_abelian(const FiniteGroup& group);
bool is_abelian(const FiniteGroup& group, const ElementSet& subset);
bool is_subgroup(const FiniteGroup& group, const ElementSet& subset);
bool is_normal(const FiniteGroup& group, const ElementSet& subgroup);
ElementSet generated_subgroup(const FiniteGroup& group, const ElementSet& generators);
ElementSet cyclic_subgroup(const FiniteGroup& group, std::size_t g);
ElementSet all_elements(const FiniteGroup& group);

/// Elements with finitely many conjugates, found by counting conjugates.
ElementSet fc_subgroup(const FiniteGroup& group);
/// Subgroup generated by the commutators [x, y] with x, y in `subset`.
ElementSet derived_subgroup(const FiniteGroup& group, const ElementSet& subset);
ElementSet derived_subgroup(const FiniteGroup& group);

enum class GroupKind { Abelian, Hamiltonian, NonDedekind };
std::string to_string(GroupKind kind);

struct GroupClassification {
  GroupKind kind;
  /// For NonDedekind: the first g (by index) whose cyclic subgroup is not normal.
  std::optional<std::size_t> witness;
};

GroupClassification classify(const FiniteGroup& group);

/// True iff no element has order divisible by p.
bool is_p_prime_group(const FiniteGroup& group, std::uint64_t p);

/// All subgroups of index 2, as kernels of surjections onto the group of order 2.
std::vector<ElementSet> index2_subgroups(const FiniteGroup& group);
std::optional<ElementSet> find_abelian_index2_subgroup(const FiniteGroup& group);

}  // namespace lpi
