#pragma once

#include <compare>
#include <map>
#include <string>
#include <utility>
#include <vector>

#include "bisplit/partition.hpp"
#include "bisplit/staircase.hpp"

namespace bisplit {

/// Sparse bigraded Betti table of an ideal I (not of R/I): homological
/// degree 0 counts minimal generators, degree 1 their syzygies.
class BettiTable {
 public:
  struct Key {
    int i = 0;
    Bidegree degree;
    friend auto operator<=>(const Key&, const Key&) = default;
  };

  /// Adds mult (may be negative during bookkeeping) and drops zero entries.
  void add(int i, Bidegree degree, int mult = 1);
  int at(int i, Bidegree degree) const;
  const std::map<Key, int>& entries() const noexcept { return entries_; }
  bool empty() const noexcept { return entries_.empty(); }

  /// Sum over bidegrees in homological degree i.
  int total(int i) const;
  int max_homological_degree() const;
  BettiTable shifted(Bidegree offset) const;

  /// Two-row text rendering, one "(a,b)^m" term per entry.
  std::string render() const;

  friend bool operator==(const BettiTable&, const BettiTable&) = default;

 private:
  std::map<Key, int> entries_;
};

struct CxVx {
  std::vector<Bidegree> generators;  // C_X
  std::vector<Bidegree> syzygies;    // V_X
};

/// Generator and syzygy bidegrees of an ACM point set with row counts alpha.
/// Throws InvalidInput for the empty partition.
CxVx cx_vx(const Partition& alpha);

/// Closed-form table of an arrangement ideal: the point part's table moved
/// by the line prefix; a single degree-0 entry for pure lines.
BettiTable betti_table(const Arrangement& w);

/// (beta_0, beta_1).
std::pair<int, int> total_betti(const BettiTable& t);

/// J + K + (J cap K shifted up one homological degree).
BettiTable betti_splitting_sum(const BettiTable& j, const BettiTable& k,
                               const BettiTable& jk);

/// True when I's table equals betti_splitting_sum entrywise.
bool check_betti_splitting_numeric(const BettiTable& i_tbl, const BettiTable& j_tbl,
                                   const BettiTable& k_tbl, const BettiTable& jk_tbl);

}  // namespace bisplit
