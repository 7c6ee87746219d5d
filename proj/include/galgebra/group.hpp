#ifndef GALGEBRA_GROUP_HPP
#define GALGEBRA_GROUP_HPP

#include <cstdint>
#include <functional>
#include <iosfwd>
#include <memory>
#include <optional>
#include <string>
#include <unordered_map>
#include <vector>

namespace galg {

/// Finite group on element indices 0..size-1. Groups of size <= 512 carry a
/// dense multiplication table whose axioms (identity, two-sided inverses,
/// associativity) are verified exhaustively at construction; larger groups
/// built from a unit set keep the multiplication callback instead.
/// Immutable after construction; all queries are read-only.
class Group {
 public:
  /// Table rows indexed by the left factor: table[g][h] = g*h.
  static Group from_table(std::vector<std::vector<int>> table, std::vector<std::string> names);

  /// Quasidihedral group of order 2^k, presented on generators a, x with
  /// a^{2^{k-1}} = x^2 = 1 and x a x = a^{2^{k-2}-1}. Elements are the
  /// canonical words a^i x^j, named in that format. Requires 3 <= k <= 9.
  static Group quasidihedral(int k);

  static Group cyclic(int n);
  static Group direct_product(const Group& a, const Group& b);

  /// Group over an externally enumerated closed set of units. The callback
  /// multiplies by index and must reject products outside the set (that is the
  /// closure contract); construction exhaustively evaluates every product
  /// pair, locating the identity and all inverses along the way.
  /// Size is capped at 2^16. No dense table is stored above the table
  /// threshold; products keep going through the callback.
  static Group from_unit_set(int size, std::function<int(int, int)> mul, std::vector<std::string> names = {});

  /// Reads the table file format: |G|, then |G| rows of |G| indices, then |G|
  /// display-name lines.
  static Group from_stream(std::istream& in);
  void write_stream(std::ostream& out) const;

  int size() const { return rep_->size; }
  int identity() const { return rep_->identity; }
  int mul(int a, int b) const {
    return rep_->table.empty() ? rep_->fn(a, b) : rep_->table[static_cast<std::size_t>(a) * rep_->size + b];
  }
  int inv(int g) const { return rep_->inverse[g]; }
  /// h^{-1} g h
  int conjugate(int g, int h) const { return mul(mul(inv(h), g), h); }
  /// a^{-1} b^{-1} a b
  int commutator(int a, int b) const { return mul(mul(mul(inv(a), inv(b)), a), b); }
  int power(int g, std::int64_t e) const;
  int element_order(int g) const;
  bool is_p_regular(int g, std::int64_t p) const;
  bool is_abelian() const;

  const std::string& name(int g) const { return rep_->names[g]; }
  /// Index of a named element, -1 when absent.
  int index_of(const std::string& name) const;

  bool same_rep(const Group& other) const { return rep_ == other.rep_; }

 private:
  struct Rep {
    int size = 0;
    int identity = 0;
    std::vector<int> table;  // dense, empty for callback-backed groups
    std::function<int(int, int)> fn;
    std::vector<int> inverse;
    std::vector<std::string> names;
    std::unordered_map<std::string, int> name_index;
  };
  explicit Group(std::shared_ptr<const Rep> rep) : rep_(std::move(rep)) {}
  static Group finalize(Rep rep, bool verify_axioms);
  std::shared_ptr<const Rep> rep_;
};

/// Subgroup as a sorted member-index set of a parent group.
class Subgroup {
 public:
  Subgroup(Group parent, std::vector<int> members);  // verifies closure
  static Subgroup trivial(const Group& g);
  static Subgroup whole(const Group& g);
  /// Subgroup generated by the given elements (breadth-first product closure,
  /// deterministic least-index-first order).
  static Subgroup generated_by(const Group& g, const std::vector<int>& gens);

  const Group& parent() const { return parent_; }
  const std::vector<int>& members() const { return members_; }
  int order() const { return static_cast<int>(members_.size()); }
  bool contains(int g) const;
  bool is_normal() const;
  bool is_trivial() const { return members_.size() == 1; }
  /// The subgroup as a group in its own right, with members reindexed and a
  /// map back to parent indices.
  std::pair<Group, std::vector<int>> as_group() const;

  bool operator==(const Subgroup& other) const { return members_ == other.members_; }

 private:
  Group parent_;
  std::vector<int> members_;
};

/// Conjugation orbits; classes ordered by least member, members sorted.
std::vector<std::vector<int>> conjugacy_classes(const Group& g);

/// Subgroup generated by all commutators.
Subgroup commutator_subgroup(const Group& g);

struct QuotientGroup {
  Group group;
  std::vector<int> projection;  // parent element -> coset index
};
/// Quotient by a normal subgroup (normality checked), together with the
/// projection map.
QuotientGroup quotient(const Group& g, const Subgroup& n);

struct LowerCentralSeries {
  std::vector<Subgroup> series;          // gamma_1 ⊇ gamma_2 ⊇ ... until stable
  std::optional<int> nilpotency_class;   // set when the chain reaches {1}
};
/// gamma_{c+1} = subgroup generated by {(g,h) : g in gamma_c, h in G},
/// computed over all pairs. The trivial group has class 0.
LowerCentralSeries lower_central_series(const Group& g);

}  // namespace galg

#endif
