#ifndef KMC_PERMUTATION_HPP
#define KMC_PERMUTATION_HPP

#include <compare>
#include <string>
#include <string_view>
#include <vector>

namespace kmc {

/// A permutation of {1..n} stored as a 0-based image table.
///
/// Products act left to right: in p*q, p is applied first. Cycle-notation
/// I/O is 1-based, e.g. "(1 2)(3 4)"; "()" denotes the identity.
class Permutation {
public:
  Permutation() = default;  // degree-0 placeholder, not a valid element

  /// Takes a 0-based image table; throws std::invalid_argument unless it
  /// is a bijection of {0..n-1}.
  explicit Permutation(std::vector<unsigned> images);

  static Permutation identity(unsigned degree);

  unsigned degree() const { return static_cast<unsigned>(images_.size()); }

  /// Image of a 0-based point.
  unsigned operator()(unsigned point) const { return images_[point]; }

  const std::vector<unsigned>& images() const { return images_; }

  bool is_identity() const;

  /// Order of the element (lcm of cycle lengths).
  unsigned order() const;

  friend bool operator==(const Permutation&, const Permutation&) = default;
  /// Lexicographic on image tables; this is the element order used for all
  /// deterministic listings.
  friend std::strong_ordering operator<=>(const Permutation&,
                                          const Permutation&) = default;

private:
  std::vector<unsigned> images_;
};

/// p then q: the result maps i to q(p(i)). Throws on degree mismatch.
Permutation compose(const Permutation& p, const Permutation& q);

Permutation inverse(const Permutation& p);

/// g * h * g^-1 under the left-to-right product convention.
Permutation conjugate(const Permutation& h, const Permutation& g);

/// [x, y] = x^-1 y^-1 x y. The one commutator convention used everywhere.
Permutation commutator(const Permutation& x, const Permutation& y);

/// Parses cycle notation against a fixed degree. Accepts any whitespace
/// inside cycles; points are separated by whitespace. A string of several
/// cycles is their left-to-right product, so non-disjoint cycles are legal.
Permutation parse_cycles(unsigned degree, std::string_view text);

/// Canonical cycle form: cycles ordered by smallest moved point, each cycle
/// starting at its smallest point. Identity renders as "()".
std::string format_cycles(const Permutation& p);

}  // namespace kmc

#endif
