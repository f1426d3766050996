#pragma once

#include <cstdint>
#include <set>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace cdt {

/// Bijection of 0..degree-1 stored as its image array. Products compose left
/// to right: (p * q)[x] == q[p[x]].
class Permutation {
 public:
  Permutation() = default;
  /// Throws std::invalid_argument unless `images` is a bijection.
  explicit Permutation(std::vector<int> images);
  static Permutation identity(int degree);
  /// Disjoint-cycle text such as "(0,5,4,1)(2,3)" or, without commas, one
  /// digit per point as in "(123)(45)". `first_point` is the smallest point
  /// name (1 for the usual notation on {1..n}).
  static Permutation from_cycles(int degree, std::string_view text, int first_point = 0);

  int degree() const { return static_cast<int>(images_.size()); }
  int operator[](int x) const { return images_[static_cast<std::size_t>(x)]; }
  std::span<const int> images() const { return images_; }

  Permutation operator*(const Permutation& rhs) const;
  Permutation inverse() const;
  bool is_identity() const;
  int order() const;
  /// Least point moved, or -1 for the identity.
  int first_moved() const;
  std::string to_cycles() const;

  friend bool operator==(const Permutation&, const Permutation&) = default;
  friend auto operator<=>(const Permutation&, const Permutation&) = default;

 private:
  std::vector<int> images_;
};

/// Permutation group with a base and strong generating set built by the
/// deterministic Schreier-Sims algorithm. Base points are chosen as the least
/// moved point whenever the chain needs extending.
class PermGroup {
 public:
  PermGroup() = default;
  PermGroup(int degree, std::vector<Permutation> generators);

  int degree() const { return degree_; }
  const std::vector<Permutation>& generators() const { return generators_; }
  std::uint64_t order() const;
  bool contains(const Permutation& p) const;
  std::vector<int> base() const;
  std::vector<std::size_t> transversal_sizes() const;

  /// Orbits on 0..degree-1, each sorted, listed by least element.
  std::vector<std::vector<int>> orbits() const;
  bool is_transitive() const;
  /// Transitive with trivial point stabilisers.
  bool is_regular() const;
  /// Every element; intended for groups of modest order.
  std::vector<Permutation> elements() const;
  std::set<int> order_spectrum() const;

 private:
  struct Level {
    int point = 0;
    std::vector<Permutation> gens;
    std::vector<int> orbit;
    std::vector<int> slot;  // point -> index into transversal, -1 outside orbit
    std::vector<Permutation> transversal;
    std::vector<Permutation> inverse_transversal;
    std::size_t resume_orbit = 0;
    std::size_t resume_gen = 0;
  };

  void schreier_sims();
  void rebuild_orbit(Level& level) const;
  /// Residue of p after sifting through levels from `from` on, and the level
  /// at which sifting stopped (levels_.size() when it ran through).
  std::pair<Permutation, std::size_t> sift(Permutation p, std::size_t from) const;

  int degree_ = 0;
  std::vector<Permutation> generators_;
  std::vector<Level> levels_;
};

/// Orbits of the group generated by `gens` on 0..degree-1 via union-find.
std::vector<std::vector<int>> orbits_of(int degree, std::span<const Permutation> gens);

/// Closure of the generators under composition (breadth-first).
std::vector<Permutation> generate_elements(int degree, std::span<const Permutation> gens);

}  // namespace cdt
