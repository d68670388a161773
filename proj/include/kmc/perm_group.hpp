#ifndef KMC_PERM_GROUP_HPP
#define KMC_PERM_GROUP_HPP

#include <cstdint>
#include <memory>
#include <optional>
#include <vector>

#include "kmc/permutation.hpp"

namespace kmc {

inline constexpr std::uint64_t kDefaultMaxOrder = 10'000;
inline constexpr std::uint64_t kDefaultMaxPairs = 1'000'000;

/// A subgroup of Sym(n) given by generators. The full element set is
/// materialized lazily by naive closure (no stabilizer chains) and kept
/// sorted lexicographically by image table, so every listing derived from a
/// group is reproducible byte for byte.
///
/// Values are immutable handles sharing state; all operations are pure, and
/// the one-time element materialization is race-free.
class PermGroup {
public:
  PermGroup() = default;  // empty handle; only assignment is valid

  /// Closure of gens under product and inverse, plus the identity.
  /// Throws CapExceeded when the closure grows past max_order.
  static PermGroup generate(unsigned degree, std::vector<Permutation> gens,
                            std::uint64_t max_order = kDefaultMaxOrder);

  static PermGroup trivial(unsigned degree);

  /// Wraps an element set that is already a subgroup (sorted or not).
  /// Verifies identity membership and closure under inverse; full product
  /// closure is the caller's responsibility.
  static PermGroup from_elements(unsigned degree, std::vector<Permutation> elements);

  unsigned degree() const;
  const std::vector<Permutation>& generators() const;

  /// Sorted element list; first call runs the closure.
  const std::vector<Permutation>& elements() const;

  std::uint64_t order() const { return elements().size(); }

  bool contains(const Permutation& p) const;

  /// True when every element of sub lies in this group.
  bool contains_all(const PermGroup& sub) const;

  /// The group this one was carved out of, when known (set by subgroup
  /// producing operations).
  std::optional<PermGroup> ambient() const;

  /// Same degree and same element set; ambient is not part of identity.
  friend bool operator==(const PermGroup& a, const PermGroup& b);

  PermGroup with_ambient(const PermGroup& ambient) const;

private:
  struct Impl;
  std::shared_ptr<const Impl> impl_;
  explicit PermGroup(std::shared_ptr<const Impl> impl) : impl_(std::move(impl)) {}
};

/// A verified pair: sub is contained in ambient (checked at construction).
struct SubgroupPair {
  PermGroup ambient;
  PermGroup sub;

  SubgroupPair(PermGroup ambient_group, PermGroup subgroup);
};

/// |ambient| / |
/// sub|.
std::uint64_t index(const SubgroupPair& pair);

/// Generator-wise normality test: conjugating every element of sub by every
/// generator of ambient stays inside sub.
bool is_normal(const SubgroupPair& pair);

/// Subgroup generated by {g s g^-1 : s generator of sub}; g must lie in
/// ambient.
PermGroup conjugate_subgroup(const SubgroupPair& pair, const Permutation& g);

/// Element-set intersection. Requires equal degree; when both sides carry an
/// ambient, it must be the same group.
PermGroup intersect(const PermGroup& a, const PermGroup& b);

/// Join of a family of normal subgroups of ambient; equals the setwise
/// product since every factor is normal. Throws when a factor is not normal.
PermGroup product_of_normals(const std::vector<PermGroup>& subs, const PermGroup& ambient);

/// Smallest normal subgroup of ambient containing sub.
PermGroup normal_closure(const SubgroupPair& pair);

/// Intersection of all ambient-conjugates of sub; the largest normal
/// subgroup of ambient inside sub.
PermGroup normal_core(const SubgroupPair& pair);

/// [a, b]: subgroup generated by all commutators of element pairs. Both
/// factors must be normal in ambient; then the result is normal as well
/// (verified). Throws CapExceeded when |a|*|b| exceeds max_pairs.
PermGroup commutator_subgroup(const PermGroup& a, const PermGroup& b,
                              const PermGroup& ambient,
                              std::uint64_t max_pairs = kDefaultMaxPairs);

bool is_abelian(const PermGroup& g);

/// Deterministic small generating set for a materialized subgroup: scan the
/// element list in order, keeping elements not yet generated.
std::vector<Permutation> reduce_generators(unsigned degree,
                                           const std::vector<Permutation>& elements);

}  // namespace kmc

#endif
