#include "bisplit/resolution.hpp"

#include <algorithm>
#include <sstream>

#include "bisplit/error.hpp"

namespace bisplit {

void BettiTable::add(int i, Bidegree degree, int mult) {
  if (mult == 0) return;
  const Key key{i, degree};
  const int v = (entries_[key] += mult);
  if (v == 0) entries_.erase(key);
}

int BettiTable::at(int i, Bidegree degree) const {
  auto it = entries_.find({i, degree});
  return it == entries_.end() ? 0 : it->second;
}

int BettiTable::total(int i) const {
  int sum = 0;
  for (const auto& [key, mult] : entries_)
    if (key.i == i) sum += mult;
  return sum;
}

int BettiTable::max_homological_degree() const {
  int m = -1;
  for (const auto& [key, mult] : entries_) m = std::max(m, key.i);
  return m;
}

BettiTable BettiTable::shifted(Bidegree offset) const {
  BettiTable out;
  for (const auto& [key, mult] : entries_) out.add(key.i, key.degree + offset, mult);
  return out;
}

std::string BettiTable::render() const {
  std::ostringstream os;
  const int top = std::max(max_homological_degree(), 1);
  for (int i = 0; i <= top; ++i) {
    os << "beta_" << i << ":";
    for (const auto& [key, mult] : entries_) {
      if (key.i != i) continue;
      os << ' ' << key.degree;
      if (mult != 1) os << '^' << mult;
    }
    os << "   [total " << total(i) << "]\n";
  }
  return os.str();
}

CxVx cx_vx(const Partition& alpha) {
  if (alpha.empty()) throw InvalidInput("cx_vx needs a nonempty partition");
  const int h = static_cast<int>(alpha.length());
  CxVx out;
  out.generators = {{h, 0}, {0, alpha(1)}};
  out.syzygies = {{h, alpha(static_cast<std::size_t>(h))}};
  for (int i = 2; i <= h; ++i) {
    const int cur = alpha(static_cast<std::size_t>(i));
    const int prev = alpha(static_cast<std::size_t>(i - 1));
    if (cur < prev) {
      out.generators.push_back({i - 1, cur});
      out.syzygies.push_back({i - 1, prev});
    }
  }
  std::sort(out.generators.begin(), out.generators.end());
  std::sort(out.syzygies.begin(), out.syzygies.end());
  return out;
}

BettiTable betti_table(const Arrangement& w) {
  BettiTable t;
  if (w.pure_lines()) {
    t.add(0, w.lines());
    return t;
  }
  const CxVx cv = cx_vx(w.alpha());
  for (Bidegree c : cv.generators) t.add(0, c + w.lines());
  for (Bidegree v : cv.syzygies) t.add(1, v + w.lines());
  return t;
}

std::pair<int, int> total_betti(const BettiTable& t) { return {t.total(0), t.total(1)}; }

BettiTable betti_splitting_sum(const BettiTable& j, const BettiTable& k,
                               const BettiTable& jk) {
  BettiTable out;
  for (const auto& [key, mult] : j.entries()) out.add(key.i, key.degree, mult);
  for (const auto& [key, mult] : k.entries()) out.add(key.i, key.degree, mult);
  for (const auto& [key, mult] : jk.entries()) out.add(key.i + 1, key.degree, mult);
  return out;
}

bool check_betti_splitting_numeric(const BettiTable& i_tbl, const BettiTable& j_tbl,
                                   const BettiTable& k_tbl, const BettiTable& jk_tbl) {
  return i_tbl == betti_splitting_sum(j_tbl, k_tbl, jk_tbl);
}

}  // namespace bisplit
