#pragma once

#include <compare>
#include <cstdint>
#include <iosfwd>
#include <span>
#include <string>
#include <vector>

#include "bisplit/grid.hpp"
#include "bisplit/partition.hpp"

namespace bisplit {

/// Bidegree (a, b): a counts x-degree (horizontal rulings), b counts
/// y-degree (vertical rulings).
struct Bidegree {
  int a = 0;
  int b = 0;

  friend auto operator<=>(const Bidegree&, const Bidegree&) = default;
  friend Bidegree operator+(Bidegree l, Bidegree r) { return {l.a + r.a, l.b + r.b}; }
  friend Bidegree operator-(Bidegree l, Bidegree r) { return {l.a - r.a, l.b - r.b}; }

  /// Componentwise <=.
  bool divides(Bidegree other) const { return a <= other.a && b <= other.b; }
  static Bidegree max(Bidegree l, Bidegree r);
  static Bidegree min(Bidegree l, Bidegree r);
};

std::ostream& operator<<(std::ostream& os, Bidegree d);

/// Minimal generators of a staircase ideal. The pair (a, b) stands for the
/// prefix product H_1...H_a * V_1...V_b over the ambient ruling order.
///
/// Stored in standard order: strictly decreasing b, equivalently strictly
/// increasing a.
class GeneratorSet {
 public:
  GeneratorSet() = default;

  /// Throws InvalidInput if the pairs are not an antichain, are negative,
  /// or exceed the ambient ruling counts.
  GeneratorSet(std::vector<Bidegree> gens, Bidegree ambient);

  const std::vector<Bidegree>& gens() const noexcept { return gens_; }
  Bidegree ambient() const noexcept { return ambient_; }
  std::size_t size() const noexcept { return gens_.size(); }
  bool empty() const noexcept { return gens_.empty(); }

  /// Generators whose bit is set in mask, in standard order.
  GeneratorSet subset(const std::vector<bool>& mask) const;

  /// Every generator moved by offset; the ambient grows by the same amount.
  GeneratorSet shifted(Bidegree offset) const;

  friend bool operator==(const GeneratorSet&, const GeneratorSet&) = default;

 private:
  std::vector<Bidegree> gens_;
  Bidegree ambient_;
};

/// A union of full lines and an ACM point set that avoids them, in
/// prefix normal form: the first line_h horizontal and line_v vertical
/// rulings are lines, and the Ferrers diagram of alpha sits on the rulings
/// right after them.
class Arrangement {
 public:
  Arrangement() = default;

  /// Ruling labels default to 1..n_h and 1..n_v.
  Arrangement(int line_h, int line_v, Partition alpha, Bidegree ambient);
  Arrangement(int line_h, int line_v, Partition alpha, std::vector<int> h_rulings,
              std::vector<int> v_rulings);

  /// Smallest ambient that holds the lines and the points.
  static Arrangement tight(int line_h, int line_v, Partition alpha);

  int line_h() const noexcept { return line_h_; }
  int line_v() const noexcept { return line_v_; }
  Bidegree lines() const noexcept { return {line_h_, line_v_}; }
  const Partition& alpha() const noexcept { return alpha_; }
  Bidegree ambient() const noexcept;
  const std::vector<int>& h_rulings() const noexcept { return h_rulings_; }
  const std::vector<int>& v_rulings() const noexcept { return v_rulings_; }
  bool pure_lines() const noexcept { return alpha_.empty(); }

  /// Point part with its ruling labels.
  AcmConfig points() const;

  /// Minimal generators: min_gens(points) shifted by the line prefix, or the
  /// single line product for a pure-lines arrangement.
  GeneratorSet generators() const;

  friend bool operator==(const Arrangement&, const Arrangement&) = default;

 private:
  int line_h_ = 0;
  int line_v_ = 0;
  Partition alpha_;
  std::vector<int> h_rulings_;
  std::vector<int> v_rulings_;
};

/// {(h,0), (0,alpha_1)} plus (i, alpha_{i+1}) for every drop i. The ambient
/// is the point set's own ruling count. The empty configuration has the unit
/// ideal, generated in bidegree (0,0).
GeneratorSet min_gens(const AcmConfig& c);

/// Generators as the ordered tuple tau.
std::vector<Bidegree> standard_order(const GeneratorSet& g);

/// Factors out the common prefix D = (min a, min b) as lines and rebuilds the
/// point part from the quotient staircase. Throws InvalidInput on an empty
/// set.
Arrangement recognize(const GeneratorSet& s);

/// Raw-pair variant; throws InvalidInput when the pairs are not an antichain.
Arrangement recognize(std::vector<Bidegree> pairs, Bidegree ambient);

/// Puts extra_h horizontal and extra_v vertical lines in front of the point
/// rulings.
Arrangement attach_lines(const AcmConfig& c, int extra_h, int extra_v);

/// Same with explicit line labels. Throws InvalidInput when a line label is
/// also a ruling through one of the points.
Arrangement attach_labeled_lines(const AcmConfig& c, std::vector<int> h_lines,
                                 std::vector<int> v_lines);

/// Ideal of the union W1 u W2 (the intersection of the two ideals). Both
/// must share the ambient rulings.
Arrangement intersect(const Arrangement& w1, const Arrangement& w2);

/// Number of minimal generators.
std::size_t min_gen_count(const Arrangement& w);

/// Symbolic product such as "H1H2V1V2V3"; "1" for (0,0).
std::string product_name(Bidegree d);

/// ASCII picture over the full ambient: '-' on horizontal lines, '|' on
/// vertical lines, '+' where two lines cross, '*' for points, '.' elsewhere.
std::string render_ferrers(const Arrangement& w);

}  // namespace bisplit
