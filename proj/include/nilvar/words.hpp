#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace nilvar {

/// Bounds of the algebra K[x,y]/(xy, x^a, y^b). Its dimension is a + b - 1.
struct AlgebraParams {
  int a = 2;
  int b = 2;

  AlgebraParams() = default;
  AlgebraParams(int a_, int b_);

  int d() const { return a + b - 1; }
  bool operator==(const AlgebraParams&) const = default;
};

/// True when text is over {x,y} with no x-run of length >= a and no y-run of
/// length >= b.
bool is_valid_string(std::string_view text, AlgebraParams params);

/// A string over {x,y} for fixed algebra bounds. The empty word is the string
/// of the simple module.
class Word {
public:
  /// Validates; throws std::invalid_argument on bad letters or runs.
  Word(std::string letters, AlgebraParams params);
  explicit Word(AlgebraParams params) : params_(params) {}

  /// Accepts plain letters or caret exponents such as "x^2yx^2y^2".
  static Word parse(std::string_view text, AlgebraParams params);

  const std::string& letters() const { return letters_; }
  AlgebraParams params() const { return params_; }
  std::size_t size() const { return letters_.size(); }
  bool empty() const { return letters_.empty(); }
  char operator[](std::size_t i) const { return letters_[i]; }
  Word substr(std::size_t pos, std::size_t len = std::string::npos) const;

  /// Caret-exponent form, e.g. "x^2yx^2y^2"; the empty word prints as "1".
  std::string compressed() const;

  bool operator==(const Word& other) const {
    return letters_ == other.letters_ && params_ == other.params_;
  }
  bool operator<(const Word& other) const { return letters_ < other.letters_; }

private:
  std::string letters_;
  AlgebraParams params_;
};

/// Concatenation; throws if the result is not a string.
Word concat(const Word& lhs, const Word& rhs);

/// The power x^k or y^k as a raw letter sequence (not validated).
std::string letter_power(char letter, int k);

Word reverse(const Word& c);

enum class BandKind { not_band, periodic, primitive };

struct BandClass {
  BandKind kind = BandKind::not_band;
  /// Lexicographically least rotation (x < y); set only for primitive bands.
  std::optional<Word> canonical;
};

/// Throws for the empty word.
BandClass band_class(const Word& w);

enum class SemiKind { semi_projective, semi_injective, neither };

const char* to_string(SemiKind kind);

SemiKind semi_kind(const Word& c);

/// x^{a-1} y C x y^{b-1}; C must be semi-projective.
Word tau_inverse(const Word& c);

/// The string of the indecomposable projective, x^{a-1} y^{b-1}.
Word projective_word(AlgebraParams params);

enum class OrbitSide { proj, inj };

/// Which open-orbit pattern a string matches, with the pattern parameters.
/// Unused fields stay 0.
struct OpenType {
  int type = 0;
  OrbitSide side = OrbitSide::proj;
  int r = 0, s = 0, t = 0;
  int i = 0, j = 0;
  int alpha = 0, beta = 0;
};

std::optional<OpenType> open_type(const Word& c);

/// Strings C with |C| + 1 = dim matching one of the open-orbit patterns on
/// the semi-projective side, lexicographically sorted and deduplicated.
std::vector<Word> enumerate_open_strings(int dim, AlgebraParams params);

/// All strings of the given length, in lexicographic order.
std::vector<Word> enumerate_strings(int length, AlgebraParams params);

/// All strings with length at most max_length, shortest first.
std::vector<Word> enumerate_strings_up_to(int max_length, AlgebraParams params);

/// A decomposition C = D E F.
struct Triple {
  Word d, e, f;
  bool operator==(const Triple&) const = default;
};

/// All decompositions D E F = C, ordered by |D| then |E|.
std::vector<Triple> decompositions(const Word& c);
/// D empty or ending in x; F empty or starting with y.
std::vector<Triple> factor_strings(const Word& c);
/// D empty or ending in y; F empty or starting with x.
std::vector<Triple> substrings(const Word& c);

using AdmissiblePair = std::pair<Triple, Triple>;

/// Pairs (factor string of c1, substring of c2) sharing the middle word.
std::vector<AdmissiblePair> admissible_pairs(const Word& c1, const Word& c2);

} // namespace nilvar
