#include "bisplit/io.hpp"

#include "bisplit/error.hpp"

namespace bisplit::io {

namespace {

std::vector<int> int_list(const json& j, const char* what) {
  if (!j.is_array()) throw InvalidInput(std::string(what) + " must be a JSON array");
  std::vector<int> out;
  for (const json& e : j) {
    if (!e.is_number_integer()) throw InvalidInput(std::string(what) + " must hold integers");
    out.push_back(e.get<int>());
  }
  return out;
}

int int_field(const json& j, const char* key) {
  if (!j.contains(key) || !j.at(key).is_number_integer())
    throw InvalidInput(std::string("missing integer field \"") + key + "\"");
  return j.at(key).get<int>();
}

Bidegree pair_from_json(const json& j, const char* what) {
  const std::vector<int> v = int_list(j, what);
  if (v.size() != 2) throw InvalidInput(std::string(what) + " must be a pair [a,b]");
  return {v[0], v[1]};
}

std::vector<int> iota(std::size_t n) {
  std::vector<int> out(n);
  for (std::size_t i = 0; i < n; ++i) out[i] = static_cast<int>(i) + 1;
  return out;
}

}  // namespace

json to_json(const Partition& p) { return p.parts(); }

json to_json(Bidegree d) { return json::array({d.a, d.b}); }

json to_json(const GridPointSet& x) {
  json cells = json::array();
  for (const Cell& c : x.cells()) cells.push_back({c.h, c.v});
  return {{"cells", cells}};
}

json to_json(const AcmConfig& c) {
  return {{"alpha", to_json(c.alpha())}, {"h_labels", c.h_labels()}, {"v_labels", c.v_labels()}};
}

json to_json(const Arrangement& w) {
  json out{{"line_h", w.line_h()}, {"line_v", w.line_v()}, {"alpha", to_json(w.alpha())}};
  // Default labels collapse to the ambient counts.
  if (w.h_rulings() == iota(w.h_rulings().size()) && w.v_rulings() == iota(w.v_rulings().size())) {
    out["ambient"] = to_json(w.ambient());
  } else {
    out["h_rulings"] = w.h_rulings();
    out["v_rulings"] = w.v_rulings();
  }
  return out;
}

json to_json(const GeneratorSet& g) {
  json gens = json::array();
  for (Bidegree d : g.gens()) gens.push_back(to_json(d));
  return {{"gens", gens}, {"ambient", to_json(g.ambient())}};
}

json to_json(const BettiTable& t) {
  json out = json::array();
  for (const auto& [key, mult] : t.entries())
    out.push_back({{"i", key.i}, {"a", key.degree.a}, {"b", key.degree.b}, {"mult", mult}});
  return out;
}

json to_json(const oracle::DimTable& dims) {
  json out = json::array();
  for (const auto& [d, dim] : dims) out.push_back({{"a", d.a}, {"b", d.b}, {"dim", dim}});
  return out;
}

Partition partition_from_json(const json& j) { return Partition::normalize(int_list(j, "partition")); }

GridPointSet grid_from_json(const json& j) {
  if (!j.is_object() || !j.contains("cells")) throw InvalidInput("point set needs a \"cells\" list");
  const json& cells = j.at("cells");
  if (!cells.is_array()) throw InvalidInput("\"cells\" must be an array");
  std::vector<Cell> out;
  for (const json& c : cells) {
    const Bidegree p = pair_from_json(c, "cell");
    out.push_back({p.a, p.b});
  }
  return GridPointSet(std::move(out));
}

AcmConfig acm_from_json(const json& j) {
  if (!j.is_object() || !j.contains("alpha")) throw InvalidInput("ACM configuration needs \"alpha\"");
  const std::vector<int> raw = int_list(j.at("alpha"), "alpha");
  const Partition alpha(raw);
  std::vector<int> h = j.contains("h_labels") ? int_list(j.at("h_labels"), "h_labels") : iota(alpha.length());
  std::vector<int> v = j.contains("v_labels") ? int_list(j.at("v_labels"), "v_labels")
                                              : iota(static_cast<std::size_t>(alpha.first()));
  return acm_from_partition(alpha, std::move(h), std::move(v));
}

Arrangement arrangement_from_json(const json& j) {
  if (!j.is_object()) throw InvalidInput("arrangement must be a JSON object");
  const int lh = j.contains("line_h") ? int_field(j, "line_h") : 0;
  const int lv = j.contains("line_v") ? int_field(j, "line_v") : 0;
  const Partition alpha = j.contains("alpha") ? Partition(int_list(j.at("alpha"), "alpha")) : Partition();
  if (j.contains("h_rulings") || j.contains("v_rulings")) {
    if (!j.contains("h_rulings") || !j.contains("v_rulings"))
      throw InvalidInput("give both \"h_rulings\" and \"v_rulings\"");
    return Arrangement(lh, lv, alpha, int_list(j.at("h_rulings"), "h_rulings"),
                       int_list(j.at("v_rulings"), "v_rulings"));
  }
  if (j.contains("ambient")) return Arrangement(lh, lv, alpha, pair_from_json(j.at("ambient"), "ambient"));
  return Arrangement::tight(lh, lv, alpha);
}

GeneratorSet generators_from_json(const json& j) {
  if (!j.is_object() || !j.contains("gens") || !j.contains("ambient"))
    throw InvalidInput("generator set needs \"gens\" and \"ambient\"");
  std::vector<Bidegree> gens;
  for (const json& g : j.at("gens")) gens.push_back(pair_from_json(g, "generator"));
  return GeneratorSet(std::move(gens), pair_from_json(j.at("ambient"), "ambient"));
}

BettiTable betti_from_json(const json& j) {
  if (!j.is_array()) throw InvalidInput("Betti table must be a JSON array");
  BettiTable t;
  for (const json& e : j) t.add(int_field(e, "i"), {int_field(e, "a"), int_field(e, "b")}, int_field(e, "mult"));
  return t;
}

Configuration parse_configuration(const json& j) {
  if (!j.is_object()) throw InvalidInput("configuration must be a JSON object");
  try {
    if (j.contains("line_h") || j.contains("line_v")) return arrangement_from_json(j);
    if (j.contains("alpha")) return acm_from_json(j);
    if (j.contains("cells")) return grid_from_json(j);
  } catch (const json::exception& e) {
    throw InvalidInput(std::string("malformed configuration: ") + e.what());
  }
  throw InvalidInput("configuration needs one of \"cells\", \"alpha\", \"line_h\"/\"line_v\"");
}

}  // namespace bisplit::io
