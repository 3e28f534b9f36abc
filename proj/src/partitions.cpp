#include "nilvar/partitions.hpp"

#include <algorithm>
#include <charconv>
#include <numeric>
#include <stdexcept>

namespace nilvar {

Partition::Partition(std::vector<int> parts) : parts_(std::move(parts)) {
  for (std::size_t i = 0; i < parts_.size(); ++i) {
    if (parts_[i] < 1)
      throw std::invalid_argument("partition parts must be positive");
    if (i > 0 && parts_[i] > parts_[i - 1])
      throw std::invalid_argument("partition parts must be weakly decreasing");
  }
}

int Partition::size() const {
  return std::accumulate(parts_.begin(), parts_.end(), 0);
}

bool Partition::is_all_ones() const {
  return std::all_of(parts_.begin(), parts_.end(), [](int v) { return v == 1; });
}

std::string Partition::to_string() const {
  std::string out = "[";
  for (std::size_t i = 0; i < parts_.size(); ++i) {
    if (i > 0) out += ',';
    out += std::to_string(parts_[i]);
  }
  out += ']';
  return out;
}

Partition Partition::parse(std::string_view text) {
  auto trim = [](std::string_view s) {
    while (!s.empty() && s.front() == ' ') s.remove_prefix(1);
    while (!s.empty() && s.back() == ' ') s.remove_suffix(1);
    return s;
  };
  text = trim(text);
  if (text.size() < 2 || text.front() != '[' || text.back() != ']')
    throw std::invalid_argument("partition must be written as [p1,p2,...]");
  text = trim(text.substr(1, text.size() - 2));
  std::vector<int> parts;
  while (!text.empty()) {
    auto comma = text.find(',');
    auto item = trim(text.substr(0, comma));
    int value = 0;
    auto [ptr, ec] = std::from_chars(item.data(), item.data() + item.size(), value);
    if (ec != std::errc() || ptr != item.data() + item.size())
      throw std::invalid_argument("bad partition entry '" + std::string(item) + "'");
    parts.push_back(value);
    if (comma == std::string_view::npos) break;
    text = text.substr(comma + 1);
  }
  return Partition(std::move(parts));
}

namespace {

void enumerate_rec(int remaining, int cap, std::vector<int>& prefix,
                   std::vector<Partition>& out) {
  if (remaining == 0) {
    out.emplace_back(prefix);
    return;
  }
  for (int part = std::min(remaining, cap); part >= 1; --part) {
    prefix.push_back(part);
    enumerate_rec(remaining - part, part, prefix, out);
    prefix.pop_back();
  }
}

} // namespace

std::vector<Partition> enumerate_partitions(int n, int amax) {
  if (n < 0) throw std::invalid_argument("enumerate_partitions: n < 0");
  if (amax < 1 && n > 0) throw std::invalid_argument("enumerate_partitions: amax < 1");
  std::vector<Partition> out;
  std::vector<int> prefix;
  enumerate_rec(n, amax, prefix, out);
  return out;
}

Partition dual(const Partition& p) {
  if (p.empty()) return {};
  std::vector<int> rows(p[0], 0);
  for (int part : p.parts())
    for (int r = 0; r < part; ++r) ++rows[r];
  return Partition(std::move(rows));
}

bool dominates(const Partition& p, const Partition& q) {
  if (p.size() != q.size())
    throw std::invalid_argument("dominates: partitions of different sizes " +
                                p.to_string() + " and " + q.to_string());
  int sp = 0, sq = 0;
  const int len = std::max(p.length(), q.length());
  for (int i = 0; i < len; ++i) {
    sp += i < p.length() ? p[i] : 0;
    sq += i < q.length() ? q[i] : 0;
    if (sp > sq) return false;
  }
  return true;
}

Partition minus_one(const Partition& p) {
  if (p.empty() || p.is_all_ones())
    throw std::invalid_argument("minus_one is undefined for " + p.to_string());
  std::vector<int> parts;
  for (int v : p.parts())
    if (v >= 2) parts.push_back(v - 1);
  return Partition(std::move(parts));
}

int reduced_length(const Partition& p) {
  return static_cast<int>(
      std::count_if(p.parts().begin(), p.parts().end(), [](int v) { return v >= 2; }));
}

int multiplicity(const Partition& p, int i) {
  return static_cast<int>(std::count(p.parts().begin(), p.parts().end(), i));
}

} // namespace nilvar
