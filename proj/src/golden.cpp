#include "nilvar/golden.hpp"

#include <algorithm>
#include <map>
#include <stdexcept>

namespace nilvar::golden {

namespace {

using Fam = std::vector<std::pair<std::string, int>>;

const std::map<int, std::vector<RegularEntry>>& regular_data() {
  static const std::map<int, std::vector<RegularEntry>> data = {
      {2, {{{{"xy", 1}}, 3}}},
      {3, {{{{"xxy", 1}}, 7}, {{{"xyy", 1}}, 7}}},
      {4, {{{{"xxyy", 1}}, 13}}},
      {5, {{{{"xxy", 1}, {"xy", 1}}, 20}, {{{"xyy", 1}, {"xy", 1}}, 20}}},
      {6, {{{{"xxy", 2}}, 28}, {{{"xyy", 2}}, 28}, {{{"xxy", 1}, {"xyy", 1}}, 30}}},
      {7, {{{{"xxyy", 1}, {"xxy", 1}}, 40}, {{{"xxyy", 1}, {"xyy", 1}}, 40}}},
      {8,
       {{{{"xxy", 2}, {"xy", 1}}, 51},
        {{{"xyy", 2}, {"xy", 1}}, 51},
        {{{"xxyy", 2}}, 52},
        {{{"xxy", 1}, {"xyy", 1}, {"xy", 1}}, 53}}},
      {9,
       {{{{"xxy", 3}}, 63},
        {{{"xyy", 3}}, 63},
        {{{"xxy", 2}, {"xyy", 1}}, 67},
        {{{"xyy", 2}, {"xxy", 1}}, 67}}},
      {10,
       {{{{"xxy", 2}, {"xxyy", 1}}, 81},
        {{{"xyy", 2}, {"xxyy", 1}}, 81},
        {{{"xxyy", 1}, {"xxy", 1}, {"xyy", 1}}, 83}}},
      {11,
       {{{{"xxy", 3}, {"xy", 1}}, 96},
        {{{"xyy", 3}, {"xy", 1}}, 96},
        {{{"xxyy", 2}, {"xxy", 1}}, 99},
        {{{"xxyy", 2}, {"xyy", 1}}, 99},
        {{{"xxy", 2}, {"xyy", 1}, {"xy", 1}}, 100},
        {{{"xyy", 2}, {"xxy", 1}, {"xy", 1}}, 100}}},
      {12,
       {{{{"xxy", 4}}, 112},
        {{{"xyy", 4}}, 112},
        {{{"xxyy", 3}}, 117},
        {{{"xxy", 3}, {"xyy", 1}}, 118},
        {{{"xyy", 3}, {"xxy", 1}}, 118},
        {{{"xxy", 2}, {"xyy", 2}}, 120}}},
  };
  return data;
}

const std::map<int, std::vector<OrbitEntry>>& orbit_data() {
  static const std::map<int, std::vector<OrbitEntry>> data = {
      {2, {}},
      {3, {}},
      {4, {}},
      {5, {{{"xxyy"}, 20}}},
      {6, {}},
      {7, {{{"xxyxyy"}, 40}}},
      {8, {{{"xxyyxyy"}, 52}, {{"xxyxxyy"}, 52}}},
      {9, {{{"xxyyxxyy"}, 66}, {{"xxyxyxyy"}, 66}}},
      {10, {{{"xxyy", "xxyy"}, 80}, {{"xxyxxyxyy"}, 82}, {{"xxyxyyxyy"}, 82}}},
      {11, {{{"xxyxxyxxyy"}, 98}, {{"xxyyxyyxyy"}, 98}, {{"xxyxxyyxyy"}, 100}}},
      {12,
       {{{"xxyy", "xxyxyy"}, 117},
        {{"xxyyxxyyxyy"}, 118},
        {{"xxyxxyyxxyy"}, 118},
        {{"xxyxxyxyxyy"}, 118},
        {{"xxyxyxyyxyy"}, 118}}},
  };
  return data;
}

std::string describe(const Fam& f, int dim) {
  std::string out;
  for (const auto& [band, m] : f) out += (out.empty() ? "" : ",") + band + "^" + std::to_string(m);
  return out + " " + std::to_string(dim);
}

std::string describe(const std::vector<std::string>& s, const std::string& side, int dim) {
  std::string out = side + ":";
  for (const auto& w : s) out += " " + w;
  return out + " " + std::to_string(dim);
}

} // namespace

const std::vector<RegularEntry>& regular_table(int n) {
  auto it = regular_data().find(n);
  if (it == regular_data().end()) throw std::out_of_range("no regular table for n=" + std::to_string(n));
  return it->second;
}

const std::vector<OrbitEntry>& orbit_table(int n) {
  auto it = orbit_data().find(n);
  if (it == orbit_data().end()) throw std::out_of_range("no orbit table for n=" + std::to_string(n));
  return it->second;
}

std::string compare_with_tables(int n, const std::vector<ComponentDescriptor>& comps,
                                Tables which) {
  // Everything is compared as sorted multisets of printable descriptions.
  const bool regular = which != Tables::orbit, orbit = which != Tables::regular;
  std::vector<std::string> expected, actual;
  for (const auto& e : regular ? regular_table(n) : std::vector<RegularEntry>{}) {
    Fam f = e.family;
    std::sort(f.begin(), f.end());
    expected.push_back("regular " + describe(f, e.dim));
  }
  for (const auto& e : orbit ? orbit_table(n) : std::vector<OrbitEntry>{}) {
    std::vector<std::string> s = e.strings, r;
    std::sort(s.begin(), s.end());
    for (const auto& w : s) r.emplace_back(w.rbegin(), w.rend());
    std::sort(r.begin(), r.end());
    expected.push_back("orbit " + describe(s, "semi-projective", e.dim));
    expected.push_back("orbit " + describe(r, "semi-injective", e.dim));
  }
  for (const auto& c : comps) {
    if (c.kind == ComponentKind::regular) {
      if (!regular) continue;
      Fam f;
      for (const auto& bm : c.family) f.emplace_back(bm.band.letters(), bm.mult);
      std::sort(f.begin(), f.end());
      actual.push_back("regular " + describe(f, c.dim));
    } else {
      if (!orbit) continue;
      std::vector<std::string> s;
      for (const auto& w : c.strings) s.push_back(w.letters());
      std::sort(s.begin(), s.end());
      actual.push_back("orbit " + describe(s, to_string(c.side), c.dim));
    }
  }
  std::sort(expected.begin(), expected.end());
  std::sort(actual.begin(), actual.end());
  if (expected == actual) return {};
  std::vector<std::string> missing, extra;
  std::set_difference(expected.begin(), expected.end(), actual.begin(), actual.end(),
                      std::back_inserter(missing));
  std::set_difference(actual.begin(), actual.end(), expected.begin(), expected.end(),
                      std::back_inserter(extra));
  std::string out = "n=" + std::to_string(n) + ":";
  if (!missing.empty()) out += " missing [" + missing.front() + "]";
  if (!extra.empty()) out += " unexpected [" + extra.front() + "]";
  return out;
}

} // namespace nilvar::golden
