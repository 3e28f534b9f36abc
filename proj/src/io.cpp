#include "nilvar/io.hpp"

#include <stdexcept>

namespace nilvar {

namespace {

json matrix_to_json(const RationalMatrix& m) {
  json rows = json::array();
  for (std::size_t r = 0; r < m.rows(); ++r) {
    json row = json::array();
    for (std::size_t c = 0; c < m.cols(); ++c) row.push_back(to_fraction_string(m(r, c)));
    rows.push_back(std::move(row));
  }
  return rows;
}

RationalMatrix matrix_from_json(const json& j, std::size_t n, const char* name) {
  if (!j.is_array() || j.size() != n)
    throw std::invalid_argument(std::string("module JSON: ") + name + " must have n rows");
  RationalMatrix m(n, n);
  for (std::size_t r = 0; r < n; ++r) {
    const json& row = j[r];
    if (!row.is_array() || row.size() != n)
      throw std::invalid_argument(std::string("module JSON: ") + name + " must have n columns");
    for (std::size_t c = 0; c < n; ++c) {
      if (row[c].is_string()) m(r, c) = parse_rational(row[c].get<std::string>());
      else if (row[c].is_number_integer()) m(r, c) = Rational(row[c].get<long>());
      else throw std::invalid_argument("module JSON: entries must be \"p/q\" strings");
    }
  }
  return m;
}

} // namespace

json module_to_json(const MatrixPairModule& m) {
  json j;
  j["n"] = m.dim();
  j["a"] = m.params.a;
  j["b"] = m.params.b;
  j["A"] = matrix_to_json(m.A);
  j["B"] = matrix_to_json(m.B);
  return j;
}

MatrixPairModule module_from_json(const json& j) {
  if (!j.is_object() || !j.contains("n") || !j.contains("a") || !j.contains("b") ||
      !j.contains("A") || !j.contains("B"))
    throw std::invalid_argument("module JSON needs n, a, b, A, B");
  const int n = j.at("n").get<int>();
  if (n < 0) throw std::invalid_argument("module JSON: negative n");
  const AlgebraParams params(j.at("a").get<int>(), j.at("b").get<int>());
  return {params, matrix_from_json(j.at("A"), n, "A"), matrix_from_json(j.at("B"), n, "B")};
}

json partition_to_json(const Partition& p) { return json(p.parts()); }

json component_to_json(const ComponentDescriptor& c) {
  json j;
  if (c.kind == ComponentKind::regular) {
    j["kind"] = "regular";
    j["a"] = partition_to_json(c.pair->a);
    j["b"] = partition_to_json(c.pair->b);
    json fam = json::array();
    for (const auto& bm : c.family) fam.push_back({{"band", bm.band.compressed()}, {"mult", bm.mult}});
    j["family"] = std::move(fam);
    j["dim"] = c.dim;
  } else {
    j["kind"] = "orbit";
    j["side"] = to_string(c.side);
    json strings = json::array();
    for (const auto& w : c.strings) strings.push_back(w.letters());
    j["strings"] = std::move(strings);
    j["dim"] = c.dim;
  }
  if (c.out_of_scope) j["out_of_scope"] = true;
  return j;
}

json classification_to_json(const Classification& c) {
  json j;
  j["n"] = c.n;
  j["requested"] = {{"a", c.requested.a}, {"b", c.requested.b}};
  j["a"] = c.params.a;
  j["b"] = c.params.b;
  j["notes"] = json::array({"mixed semi-projective/semi-injective sums are never open and are "
                            "not enumerated"});
  json comps = json::array();
  for (const auto& comp : c.components) comps.push_back(component_to_json(comp));
  j["components"] = std::move(comps);
  return j;
}

json index_module_to_json(const BiserialIndexModule& l) {
  json j;
  j["a"] = l.params().a;
  j["b"] = l.params().b;
  j["m_s"] = l.m_s();
  json mx = json::object(), my = json::object(), mxy = json::array();
  for (const auto& [s, m] : l.multiplicities()) {
    if (s.i >= 1 && s.j == 0) mx[std::to_string(s.i)] = m;
    else if (s.i == 0 && s.j >= 1) my[std::to_string(s.j)] = m;
    else if (s.i >= 1 && s.j >= 1) mxy.push_back({{"i", s.i}, {"j", s.j}, {"mult", m}});
  }
  j["m_x"] = std::move(mx);
  j["m_y"] = std::move(my);
  j["m_xy"] = std::move(mxy);
  return j;
}

} // namespace nilvar
