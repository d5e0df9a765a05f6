#include "bisplit/staircase.hpp"

#include <algorithm>
#include <ostream>
#include <set>

#include "bisplit/error.hpp"

namespace bisplit {

namespace {

std::vector<int> iota_labels(int n) {
  std::vector<int> out(static_cast<std::size_t>(std::max(n, 0)));
  for (std::size_t i = 0; i < out.size(); ++i) out[i] = static_cast<int>(i) + 1;
  return out;
}

void sort_standard(std::vector<Bidegree>& gens) {
  std::sort(gens.begin(), gens.end(),
            [](Bidegree l, Bidegree r) { return l.b > r.b || (l.b == r.b && l.a < r.a); });
}

// Smallest positive integers not already taken.
std::vector<int> fresh_labels(int count, const std::vector<int>& taken) {
  std::set<int> used(taken.begin(), taken.end());
  std::vector<int> out;
  for (int l = 1; static_cast<int>(out.size()) < count; ++l)
    if (!used.count(l)) out.push_back(l);
  return out;
}

// Row lengths of w's points on rulings past the merged line prefix.
Partition restrict_points(const Arrangement& w, Bidegree lines) {
  std::vector<int> rows;
  const int len = static_cast<int>(w.alpha().length());
  for (int r = lines.a + 1; r <= w.line_h() + len; ++r) {
    const int i = r - w.line_h();
    rows.push_back(std::max(0, w.line_v() + w.alpha()(static_cast<std::size_t>(i)) - lines.b));
  }
  return Partition::normalize(rows);
}

}  // namespace

Bidegree Bidegree::max(Bidegree l, Bidegree r) {
  return {std::max(l.a, r.a), std::max(l.b, r.b)};
}

Bidegree Bidegree::min(Bidegree l, Bidegree r) {
  return {std::min(l.a, r.a), std::min(l.b, r.b)};
}

std::ostream& operator<<(std::ostream& os, Bidegree d) {
  return os << '(' << d.a << ',' << d.b << ')';
}

GeneratorSet::GeneratorSet(std::vector<Bidegree> gens, Bidegree ambient)
    : gens_(std::move(gens)), ambient_(ambient) {
  if (ambient_.a < 0 || ambient_.b < 0)
    throw InvalidInput("ambient ruling counts must be nonnegative");
  for (std::size_t i = 0; i < gens_.size(); ++i) {
    const Bidegree g = gens_[i];
    if (g.a < 0 || g.b < 0) throw InvalidInput("negative generator bidegree");
    if (!g.divides(ambient_))
      throw InvalidInput("generator exceeds the ambient ruling counts");
    for (std::size_t j = 0; j < gens_.size(); ++j)
      if (i != j && gens_[j].divides(g))
        throw InvalidInput("generator pairs are not an antichain");
  }
  sort_standard(gens_);
}

GeneratorSet GeneratorSet::subset(const std::vector<bool>& mask) const {
  if (mask.size() != gens_.size()) throw InvalidInput("subset mask size mismatch");
  std::vector<Bidegree> out;
  for (std::size_t i = 0; i < gens_.size(); ++i)
    if (mask[i]) out.push_back(gens_[i]);
  return GeneratorSet(std::move(out), ambient_);
}

GeneratorSet GeneratorSet::shifted(Bidegree offset) const {
  std::vector<Bidegree> out;
  out.reserve(gens_.size());
  for (Bidegree g : gens_) out.push_back(g + offset);
  return GeneratorSet(std::move(out), ambient_ + offset);
}

Arrangement::Arrangement(int line_h, int line_v, Partition alpha, Bidegree ambient)
    : Arrangement(line_h, line_v, std::move(alpha), iota_labels(ambient.a),
                  iota_labels(ambient.b)) {}

Arrangement::Arrangement(int line_h, int line_v, Partition alpha,
                         std::vector<int> h_rulings, std::vector<int> v_rulings)
    : line_h_(line_h),
      line_v_(line_v),
      alpha_(std::move(alpha)),
      h_rulings_(std::move(h_rulings)),
      v_rulings_(std::move(v_rulings)) {
  if (line_h_ < 0 || line_v_ < 0) throw InvalidInput("line counts must be nonnegative");
  if (line_h_ + static_cast<int>(alpha_.length()) > static_cast<int>(h_rulings_.size()) ||
      line_v_ + alpha_.first() > static_cast<int>(v_rulings_.size()))
    throw InvalidInput("arrangement does not fit in its ambient rulings");
  for (const auto* labels : {&h_rulings_, &v_rulings_}) {
    std::set<int> seen;
    for (int l : *labels)
      if (l < 1 || !seen.insert(l).second)
        throw InvalidInput("ambient ruling labels must be distinct positive integers");
  }
}

Arrangement Arrangement::tight(int line_h, int line_v, Partition alpha) {
  const Bidegree ambient{line_h + static_cast<int>(alpha.length()), line_v + alpha.first()};
  return Arrangement(line_h, line_v, std::move(alpha), ambient);
}

Bidegree Arrangement::ambient() const noexcept {
  return {static_cast<int>(h_rulings_.size()), static_cast<int>(v_rulings_.size())};
}

AcmConfig Arrangement::points() const {
  const auto h0 = h_rulings_.begin() + line_h_;
  const auto v0 = v_rulings_.begin() + line_v_;
  return acm_from_partition(
      alpha_, std::vector<int>(h0, h0 + static_cast<std::ptrdiff_t>(alpha_.length())),
      std::vector<int>(v0, v0 + alpha_.first()));
}

GeneratorSet Arrangement::generators() const {
  if (pure_lines()) return GeneratorSet({lines()}, ambient());
  std::vector<Bidegree> out;
  const GeneratorSet base = min_gens(points());
  for (Bidegree g : base.gens()) out.push_back(g + lines());
  return GeneratorSet(std::move(out), ambient());
}

GeneratorSet min_gens(const AcmConfig& c) {
  const Partition& alpha = c.alpha();
  if (alpha.empty()) return GeneratorSet({{0, 0}}, {0, 0});
  const int h = static_cast<int>(alpha.length());
  std::vector<Bidegree> gens{{h, 0}, {0, alpha.first()}};
  for (std::size_t i : alpha.drops())
    gens.push_back({static_cast<int>(i), alpha(i + 1)});
  return GeneratorSet(std::move(gens), {h, alpha.first()});
}

std::vector<Bidegree> standard_order(const GeneratorSet& g) { return g.gens(); }

Arrangement recognize(const GeneratorSet& s) {
  if (s.empty()) throw InvalidInput("cannot recognize an empty generator set");
  Bidegree gcd = s.gens().front();
  for (Bidegree g : s.gens()) gcd = Bidegree::min(gcd, g);

  // Quotient staircase by increasing a: (0,s_0), (t_1,s_1), ..., (t_k,0).
  std::vector<Bidegree> q;
  for (Bidegree g : s.gens()) q.push_back(g - gcd);
  std::sort(q.begin(), q.end());

  std::vector<int> alpha;
  for (std::size_t k = 0; k + 1 < q.size(); ++k)
    alpha.insert(alpha.end(), static_cast<std::size_t>(q[k + 1].a - q[k].a), q[k].b);
  return Arrangement(gcd.a, gcd.b, Partition(std::move(alpha)), s.ambient());
}

Arrangement recognize(std::vector<Bidegree> pairs, Bidegree ambient) {
  return recognize(GeneratorSet(std::move(pairs), ambient));
}

Arrangement attach_lines(const AcmConfig& c, int extra_h, int extra_v) {
  if (extra_h < 0 || extra_v < 0) throw InvalidInput("line counts must be nonnegative");
  return attach_labeled_lines(c, fresh_labels(extra_h, c.h_labels()),
                              fresh_labels(extra_v, c.v_labels()));
}

Arrangement attach_labeled_lines(const AcmConfig& c, std::vector<int> h_lines,
                                 std::vector<int> v_lines) {
  for (int l : h_lines)
    if (std::find(c.h_labels().begin(), c.h_labels().end(), l) != c.h_labels().end())
      throw InvalidInput("horizontal line H" + std::to_string(l) +
                         " passes through a point of the configuration");
  for (int l : v_lines)
    if (std::find(c.v_labels().begin(), c.v_labels().end(), l) != c.v_labels().end())
      throw InvalidInput("vertical line V" + std::to_string(l) +
                         " passes through a point of the configuration");
  const int lh = static_cast<int>(h_lines.size());
  const int lv = static_cast<int>(v_lines.size());
  h_lines.insert(h_lines.end(), c.h_labels().begin(), c.h_labels().end());
  v_lines.insert(v_lines.end(), c.v_labels().begin(), c.v_labels().end());
  return Arrangement(lh, lv, c.alpha(), std::move(h_lines), std::move(v_lines));
}

Arrangement intersect(const Arrangement& w1, const Arrangement& w2) {
  if (w1.h_rulings() != w2.h_rulings() || w1.v_rulings() != w2.v_rulings())
    throw InvalidInput("intersect: arrangements live on different ambient rulings");
  const Bidegree lines = Bidegree::max(w1.lines(), w2.lines());
  Partition merged = restrict_points(w1, lines).componentwise_max(restrict_points(w2, lines));
  return Arrangement(lines.a, lines.b, std::move(merged), w1.h_rulings(), w1.v_rulings());
}

std::size_t min_gen_count(const Arrangement& w) {
  if (w.pure_lines()) return 1;
  return w.alpha().drops().size() + 2;
}

std::string product_name(Bidegree d) {
  if (d.a == 0 && d.b == 0) return "1";
  std::string out;
  for (int i = 1; i <= d.a; ++i) out += "H" + std::to_string(i);
  for (int j = 1; j <= d.b; ++j) out += "V" + std::to_string(j);
  return out;
}

std::string render_ferrers(const Arrangement& w) {
  const Bidegree amb = w.ambient();
  std::string out;
  for (int r = 1; r <= amb.a; ++r) {
    for (int c = 1; c <= amb.b; ++c) {
      const bool hline = r <= w.line_h();
      const bool vline = c <= w.line_v();
      char ch = '.';
      if (hline && vline) {
        ch = '+';
      } else if (hline) {
        ch = '-';
      } else if (vline) {
        ch = '|';
      } else {
        const int i = r - w.line_h();
        if (i <= static_cast<int>(w.alpha().length()) &&
            c - w.line_v() <= w.alpha()(static_cast<std::size_t>(i)))
          ch = '*';
      }
      out += ch;
    }
    out += '\n';
  }
  return out;
}

}  // namespace bisplit
