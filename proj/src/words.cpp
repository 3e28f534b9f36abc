#include "nilvar/words.hpp"

#include <algorithm>
#include <cctype>
#include <set>
#include <stdexcept>

namespace nilvar {

AlgebraParams::AlgebraParams(int a_, int b_) : a(a_), b(b_) {
  if (a < 2 || b < 2)
    throw std::invalid_argument("algebra bounds need a, b >= 2 (got a=" +
                                std::to_string(a) + ", b=" + std::to_string(b) + ")");
}

bool is_valid_string(std::string_view text, AlgebraParams params) {
  int run = 0;
  char prev = 0;
  for (char c : text) {
    if (c != 'x' && c != 'y') return false;
    run = (c == prev) ? run + 1 : 1;
    prev = c;
    if ((c == 'x' && run >= params.a) || (c == 'y' && run >= params.b)) return false;
  }
  return true;
}

Word::Word(std::string letters, AlgebraParams params)
    : letters_(std::move(letters)), params_(params) {
  for (char c : letters_)
    if (c != 'x' && c != 'y')
      throw std::invalid_argument(std::string("invalid letter '") + c + "' in word");
  if (!is_valid_string(letters_, params_))
    throw std::invalid_argument("'" + letters_ + "' contains x^" + std::to_string(params_.a) +
                                " or y^" + std::to_string(params_.b));
}

Word Word::parse(std::string_view text, AlgebraParams params) {
  std::string out;
  if (text == "1") return Word(params);
  std::size_t pos = 0;
  while (pos < text.size()) {
    const char c = text[pos];
    if (c != 'x' && c != 'y')
      throw std::invalid_argument(std::string("invalid character '") + c + "' in word");
    ++pos;
    int exponent = 1;
    if (pos < text.size() && text[pos] == '^') {
      ++pos;
      const std::size_t start = pos;
      while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos]))) ++pos;
      if (pos == start) throw std::invalid_argument("missing exponent after '^'");
      exponent = std::stoi(std::string(text.substr(start, pos - start)));
    }
    out += letter_power(c, exponent);
  }
  return Word(std::move(out), params);
}

Word Word::substr(std::size_t pos, std::size_t len) const {
  Word w(params_);
  w.letters_ = letters_.substr(pos, len);
  return w;
}

std::string Word::compressed() const {
  if (letters_.empty()) return "1";
  std::string out;
  std::size_t i = 0;
  while (i < letters_.size()) {
    std::size_t j = i;
    while (j < letters_.size() && letters_[j] == letters_[i]) ++j;
    out += letters_[i];
    if (j - i > 1) out += "^" + std::to_string(j - i);
    i = j;
  }
  return out;
}

std::string letter_power(char letter, int k) {
  return std::string(static_cast<std::size_t>(std::max(k, 0)), letter);
}

Word concat(const Word& lhs, const Word& rhs) {
  if (!(lhs.params() == rhs.params()))
    throw std::invalid_argument("concat: words over different algebras");
  return Word(lhs.letters() + rhs.letters(), lhs.params());
}

Word reverse(const Word& c) {
  std::string r(c.letters().rbegin(), c.letters().rend());
  return Word(std::move(r), c.params());
}

BandClass band_class(const Word& w) {
  if (w.empty()) throw std::invalid_argument("band_class: empty word");
  const std::string& s = w.letters();
  // Powers of a single-letter word eventually contain x^a or y^b.
  const bool both = s.find('x') != std::string::npos && s.find('y') != std::string::npos;
  if (!both || !is_valid_string(s + s, w.params())) return {};

  const std::size_t n = s.size();
  for (std::size_t period = 1; period < n; ++period) {
    if (n % period != 0) continue;
    if (s.substr(period) + s.substr(0, period) == s) return {BandKind::periodic, std::nullopt};
  }
  std::string best = s;
  for (std::size_t k = 1; k < n; ++k) best = std::min(best, s.substr(k) + s.substr(0, k));
  return {BandKind::primitive, Word(best, w.params())};
}

const char* to_string(SemiKind kind) {
  switch (kind) {
  case SemiKind::semi_projective: return "semi-projective";
  case SemiKind::semi_injective: return "semi-injective";
  case SemiKind::neither: return "neither";
  }
  return "neither";
}

SemiKind semi_kind(const Word& c) {
  const auto [a, b] = c.params();
  const std::string& s = c.letters();
  const std::size_t need = static_cast<std::size_t>(a + b - 2);
  if (s.size() < need) return SemiKind::neither;
  const std::string xs = letter_power('x', a - 1), ys = letter_power('y', b - 1);
  if (s.starts_with(xs) && s.ends_with(ys)) return SemiKind::semi_projective;
  if (s.starts_with(ys) && s.ends_with(xs)) return SemiKind::semi_injective;
  return SemiKind::neither;
}

Word tau_inverse(const Word& c) {
  if (semi_kind(c) != SemiKind::semi_projective)
    throw std::invalid_argument("tau_inverse: M(" + c.letters() + ") is not semi-projective");
  const auto [a, b] = c.params();
  return Word(letter_power('x', a - 1) + "y" + c.letters() + "x" + letter_power('y', b - 1),
              c.params());
}

Word projective_word(AlgebraParams params) {
  return Word(letter_power('x', params.a - 1) + letter_power('y', params.b - 1), params);
}

namespace {

using Block = std::pair<int, int>;

/// x^{c1} y^{d1} ... x^{ck} y^{dk} with all exponents >= 1, or nullopt when
/// the word does not start with x and end with y.
std::optional<std::vector<Block>> blocks_of(const std::string& s) {
  if (s.empty() || s.front() != 'x' || s.back() != 'y') return std::nullopt;
  std::vector<Block> out;
  std::size_t i = 0;
  while (i < s.size()) {
    int cx = 0, cy = 0;
    while (i < s.size() && s[i] == 'x') ++cx, ++i;
    while (i < s.size() && s[i] == 'y') ++cy, ++i;
    out.emplace_back(cx, cy);
  }
  return out;
}

bool run_of(const std::vector<Block>& blocks, int from, int count, Block value) {
  for (int k = from; k < from + count; ++k)
    if (blocks[k] != value) return false;
  return true;
}

std::optional<OpenType> match_patterns(const std::vector<Block>& blocks, int a, int b) {
  const int k = static_cast<int>(blocks.size());
  const Block head{a - 1, 1}, mid{a - 1, b - 1}, tail{1, b - 1};

  // (x^{a-1}y)^r (x^{a-1}y^{b-1})^s (xy^{b-1})^t
  for (int r = 0; r <= k; ++r)
    for (int s = 0; r + s <= k; ++s) {
      const int t = k - r - s;
      if (r + s < 1 || s + t < 1) continue;
      if (run_of(blocks, 0, r, head) && run_of(blocks, r, s, mid) && run_of(blocks, r + s, t, tail))
        return OpenType{1, OrbitSide::proj, r, s, t};
    }

  // (x^{a-1}y)^r (x^{a-1}y^i)^alpha (x^{a-1}y^{b-1})^s (x^j y^{b-1})^beta (xy^{b-1})^t
  for (int alpha = 0; alpha <= 1; ++alpha)
    for (int beta = 0; beta <= 1; ++beta) {
      if (alpha + beta < 1) continue;
      for (int r = 0; r + alpha + beta <= k; ++r)
        for (int s = 0; r + alpha + s + beta <= k; ++s) {
          const int t = k - r - alpha - s - beta;
          if (r + alpha + s < 1 || s + beta + t < 1) continue;
          if (!run_of(blocks, 0, r, head)) continue;
          int i = 0, j = 0;
          if (alpha) {
            const Block blk = blocks[r];
            if (blk.first != a - 1 || blk.second < 2 || blk.second > b - 2) continue;
            i = blk.second;
          }
          if (!run_of(blocks, r + alpha, s, mid)) continue;
          if (beta) {
            const Block blk = blocks[r + alpha + s];
            if (blk.second != b - 1 || blk.first < 2 || blk.first > a - 2) continue;
            j = blk.first;
          }
          if (!run_of(blocks, r + alpha + s + beta, t, tail)) continue;
          OpenType out{2, OrbitSide::proj, r, s, t, i, j};
          out.alpha = alpha;
          out.beta = beta;
          return out;
        }
    }

  // (x^{a-1}y)^r x^i y^j (xy^{b-1})^t
  for (int r = 1; r + 2 <= k; ++r) {
    const int t = k - r - 1;
    const Block blk = blocks[r];
    if (blk.first < 1 || blk.first > a - 2 || blk.second < 1 || blk.second > b - 2) continue;
    if (run_of(blocks, 0, r, head) && run_of(blocks, r + 1, t, tail))
      return OpenType{3, OrbitSide::proj, r, 0, t, blk.first, blk.second};
  }
  return std::nullopt;
}

} // namespace

std::optional<OpenType> open_type(const Word& c) {
  const auto [a, b] = c.params();
  if (auto blocks = blocks_of(c.letters())) {
    if (auto m = match_patterns(*blocks, a, b)) return m;
  }
  const Word rev = reverse(c);
  if (auto blocks = blocks_of(rev.letters())) {
    if (auto m = match_patterns(*blocks, a, b)) {
      m->side = OrbitSide::inj;
      return m;
    }
  }
  return std::nullopt;
}

std::vector<Word> enumerate_open_strings(int dim, AlgebraParams params) {
  if (dim < 1) throw std::invalid_argument("enumerate_open_strings: dim < 1");
  const int a = params.a, b = params.b;
  const int len = dim - 1;
  const std::string head = letter_power('x', a - 1) + "y";
  const std::string mid = letter_power('x', a - 1) + letter_power('y', b - 1);
  const std::string tail = "x" + letter_power('y', b - 1);
  auto repeat = [](const std::string& s, int k) {
    std::string out;
    for (int i = 0; i < k; ++i) out += s;
    return out;
  };

  std::set<std::string> found;
  // type (1)
  for (int r = 0; r * a <= len; ++r)
    for (int s = 0; r * a + s * (a + b - 2) <= len; ++s) {
      const int rest = len - r * a - s * (a + b - 2);
      if (rest % b != 0) continue;
      const int t = rest / b;
      if (r + s < 1 || s + t < 1) continue;
      found.insert(repeat(head, r) + repeat(mid, s) + repeat(tail, t));
    }
  // type (2)
  for (int alpha = 0; alpha <= 1; ++alpha)
    for (int beta = 0; beta <= 1; ++beta) {
      if (alpha + beta < 1) continue;
      const std::vector<int> is = alpha ? [&] {
        std::vector<int> v;
        for (int i = 2; i <= b - 2; ++i) v.push_back(i);
        return v;
      }() : std::vector<int>{0};
      const std::vector<int> js = beta ? [&] {
        std::vector<int> v;
        for (int j = 2; j <= a - 2; ++j) v.push_back(j);
        return v;
      }() : std::vector<int>{0};
      for (int i : is)
        for (int j : js) {
          const std::string xi = alpha ? letter_power('x', a - 1) + letter_power('y', i) : "";
          const std::string yj = beta ? letter_power('x', j) + letter_power('y', b - 1) : "";
          const int fixed = static_cast<int>(xi.size() + yj.size());
          for (int r = 0; r * a + fixed <= len; ++r)
            for (int s = 0; r * a + s * (a + b - 2) + fixed <= len; ++s) {
              const int rest = len - r * a - s * (a + b - 2) - fixed;
              if (rest % b != 0) continue;
              const int t = rest / b;
              if (r + alpha + s < 1 || s + beta + t < 1) continue;
              found.insert(repeat(head, r) + xi + repeat(mid, s) + yj + repeat(tail, t));
            }
        }
    }
  // type (3)
  for (int i = 1; i <= a - 2; ++i)
    for (int j = 1; j <= b - 2; ++j)
      for (int r = 1; r * a + i + j + b <= len; ++r) {
        const int rest = len - r * a - i - j;
        if (rest % b != 0) continue;
        const int t = rest / b;
        if (t < 1) continue;
        found.insert(repeat(head, r) + letter_power('x', i) + letter_power('y', j) +
                     repeat(tail, t));
      }

  std::vector<Word> out;
  out.reserve(found.size());
  for (const auto& s : found) out.emplace_back(s, params);
  return out;
}

std::vector<Word> enumerate_strings(int length, AlgebraParams params) {
  std::vector<Word> out;
  std::string current;
  auto rec = [&](auto&& self) -> void {
    if (static_cast<int>(current.size()) == length) {
      out.emplace_back(current, params);
      return;
    }
    for (char c : {'x', 'y'}) {
      current.push_back(c);
      // only the trailing run can have become too long
      int run = 0;
      for (auto it = current.rbegin(); it != current.rend() && *it == c; ++it) ++run;
      if (run < (c == 'x' ? params.a : params.b)) self(self);
      current.pop_back();
    }
  };
  rec(rec);
  return out;
}

std::vector<Word> enumerate_strings_up_to(int max_length, AlgebraParams params) {
  std::vector<Word> out;
  for (int len = 0; len <= max_length; ++len) {
    auto level = enumerate_strings(len, params);
    out.insert(out.end(), level.begin(), level.end());
  }
  return out;
}

std::vector<Triple> decompositions(const Word& c) {
  std::vector<Triple> out;
  const std::size_t n = c.size();
  for (std::size_t i = 0; i <= n; ++i)
    for (std::size_t j = i; j <= n; ++j)
      out.push_back({c.substr(0, i), c.substr(i, j - i), c.substr(j)});
  return out;
}

std::vector<Triple> factor_strings(const Word& c) {
  std::vector<Triple> out;
  for (auto& t : decompositions(c)) {
    const bool d_ok = t.d.empty() || t.d.letters().back() == 'x';
    const bool f_ok = t.f.empty() || t.f.letters().front() == 'y';
    if (d_ok && f_ok) out.push_back(std::move(t));
  }
  return out;
}

std::vector<Triple> substrings(const Word& c) {
  std::vector<Triple> out;
  for (auto& t : decompositions(c)) {
    const bool d_ok = t.d.empty() || t.d.letters().back() == 'y';
    const bool f_ok = t.f.empty() || t.f.letters().front() == 'x';
    if (d_ok && f_ok) out.push_back(std::move(t));
  }
  return out;
}

std::vector<AdmissiblePair> admissible_pairs(const Word& c1, const Word& c2) {
  if (!(c1.params() == c2.params()))
    throw std::invalid_argument("admissible_pairs: words over different algebras");
  std::vector<AdmissiblePair> out;
  const auto fac = factor_strings(c1);
  const auto sub = substrings(c2);
  for (const auto& f : fac)
    for (const auto& s : sub)
      if (f.e.letters() == s.e.letters()) out.emplace_back(f, s);
  return out;
}

} // namespace nilvar
