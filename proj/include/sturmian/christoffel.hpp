#pragma once

// Christoffel words, central words, and the Christoffel tree.
//
// A word is central iff it is a power of a single letter or it is a palindrome
// of the form p 01 q = q 10 p with p, q palindromes.  The lower Christoffel
// words are exactly the single letters together with 0 u 1 for central u;
// upper ones are 1 u 0, equivalently the reversals of lower ones.

#include <cstddef>
#include <numeric>
#include <optional>
#include <utility>
#include <vector>

#include "sturmian/error.hpp"
#include "sturmian/words.hpp"

namespace sturmian {

enum class ChristoffelKind { lower, upper, letter };

inline const char* christoffel_kind_name(ChristoffelKind k) {
  switch (k) {
    case ChristoffelKind::lower: return "lower";
    case ChristoffelKind::upper: return "upper";
    case ChristoffelKind::letter: return "letter";
  }
  return "?";
}

struct ChristoffelWord {
  BinaryWord word;
  ChristoffelKind kind = ChristoffelKind::letter;
  // Slope as the reduced pair (ones, zeros); the frequency of 1 is
  // ones / (ones + zeros).
  std::size_t ones = 0;
  std::size_t zeros = 0;

  friend bool operator==(const ChristoffelWord& x, const ChristoffelWord& y) {
    return x.word == y.word;
  }
};

struct CentralDecomposition {
  BinaryWord p, q;   // u = p 01 q = q 10 p
};

inline std::optional<CentralDecomposition> central_decomposition(const BinaryWord& u) {
  const std::string& s = u.str();
  for (std::size_t i = 0; i + 1 < s.size(); ++i) {
    if (s[i] != '0' || s[i + 1] != '1') continue;
    const BinaryWord p = u.substr(0, i);
    const BinaryWord q = u.substr(i + 2);
    if (!p.is_palindrome() || !q.is_palindrome()) continue;
    if ((q + BinaryWord("10") + p) == u) return CentralDecomposition{p, q};
  }
  return std::nullopt;
}

inline bool is_central(const BinaryWord& u) {
  if (u.ones() == 0 || u.zeros() == 0) return true;   // powers of a letter, and the empty word
  if (!u.is_palindrome()) return false;
  return central_decomposition(u).has_value();
}

inline std::optional<ChristoffelWord> classify_christoffel(const BinaryWord& w) {
  if (w.empty()) return std::nullopt;
  if (w.size() == 1)
    return ChristoffelWord{w, ChristoffelKind::letter, w.ones(), w.zeros()};
  const char first = w[0];
  const char last = w[w.size() - 1];
  if (first == '0' && last == '1' && is_central(w.substr(1, w.size() - 2)))
    return ChristoffelWord{w, ChristoffelKind::lower, w.ones(), w.zeros()};
  if (first == '1' && last == '0' && is_central(w.substr(1, w.size() - 2)))
    return ChristoffelWord{w, ChristoffelKind::upper, w.ones(), w.zeros()};
  return std::nullopt;
}

// The Christoffel word of slope ones/(ones+zeros): letters of the periodic
// mechanical word over one full period, by exact integer arithmetic.
inline ChristoffelWord christoffel_of_slope(std::size_t ones, std::size_t zeros,
                                            ChristoffelKind kind) {
  if (kind == ChristoffelKind::letter)
    throw error(errc::invalid_spec, "request lower or upper; letters come out of length-1 slopes");
  const std::size_t total = ones + zeros;
  if (total == 0) throw error(errc::invalid_spec, "slope pair must be nonzero");
  if (std::gcd(ones, zeros) != 1) throw error(errc::not_coprime, "slope pair must be coprime");
  if (total == 1)
    return ChristoffelWord{BinaryWord(ones == 1 ? "1" : "0"), ChristoffelKind::letter, ones, zeros};
  BinaryWord w;
  for (std::size_t n = 0; n < total; ++n) {
    const std::size_t r = (n * ones) % total;
    const bool zero_letter =
        kind == ChristoffelKind::lower ? r < total - ones : (r > 0 && r <= total - ones);
    w.push_back(zero_letter ? '0' : '1');
  }
  ChristoffelKind k = total == 1 ? ChristoffelKind::letter : kind;
  return ChristoffelWord{w, k, ones, zeros};
}

struct ChristoffelPair {
  ChristoffelWord left, right;
};

// Complete binary tree of Christoffel pairs in heap layout: node i has
// children 2i+1 (left) and 2i+2 (right).  Root (0, 1); node (u, v) has
// children (u, uv) and (uv, v).
class ChristoffelTree {
 public:
  explicit ChristoffelTree(std::size_t depth) : depth_(depth) {
    nodes_.reserve((std::size_t(2) << depth) - 1);
    nodes_.push_back(ChristoffelPair{*classify_christoffel(BinaryWord("0")),
                                     *classify_christoffel(BinaryWord("1"))});
    for (std::size_t i = 0; 2 * i + 2 < (std::size_t(2) << depth) - 1; ++i) {
      const BinaryWord mid = nodes_[i].left.word + nodes_[i].right.word;
      const auto midc = classify_christoffel(mid);
      if (!midc)
        throw error(errc::not_christoffel, "tree concatenation failed on '" + mid.str() + "'");
      nodes_.push_back(ChristoffelPair{nodes_[i].left, *midc});
      nodes_.push_back(ChristoffelPair{*midc, nodes_[i].right});
    }
  }

  std::size_t depth() const { return depth_; }
  std::size_t size() const { return nodes_.size(); }
  const ChristoffelPair& node(std::size_t i) const { return nodes_[i]; }
  const ChristoffelPair& root() const { return nodes_[0]; }
  static std::size_t left_child(std::size_t i) { return 2 * i + 1; }
  static std::size_t right_child(std::size_t i) { return 2 * i + 2; }
  static std::size_t level_of(std::size_t i) {
    std::size_t level = 0;
    while (i > 0) { i = (i - 1) / 2; ++level; }
    return level;
  }

 private:
  std::size_t depth_;
  std::vector<ChristoffelPair> nodes_;
};

inline ChristoffelTree christoffel_tree(std::size_t depth) { return ChristoffelTree(depth); }

// The unique split of a non-letter Christoffel word into two Christoffel
// words of compatible kind.
inline std::pair<ChristoffelWord, ChristoffelWord> standard_factorization(
    const ChristoffelWord& z) {
  if (z.word.size() < 2) throw error(errc::trivial_word, "single letters do not split");
  std::optional<std::pair<ChristoffelWord, ChristoffelWord>> found;
  for (std::size_t k = 1; k < z.word.size(); ++k) {
    const auto left = classify_christoffel(z.word.substr(0, k));
    if (!left) continue;
    const auto right = classify_christoffel(z.word.substr(k));
    if (!right) continue;
    const auto compatible = [&](const ChristoffelWord& part) {
      return part.kind == ChristoffelKind::letter || part.kind == z.kind;
    };
    if (!compatible(*left) || !compatible(*right)) continue;
    if (found)
      throw error(errc::not_christoffel,
                  "factorization of '" + z.word.str() + "' is not unique");
    found = std::pair(*left, *right);
  }
  if (!found)
    throw error(errc::not_christoffel, "'" + z.word.str() + "' has no Christoffel split");
  return *found;
}

struct MixRelation {
  bool uuv_christoffel = false;
  bool uvv_christoffel = false;
  enum class Shape { alphabet_pair, u_prefix_of_v, v_suffix_of_u } shape = Shape::alphabet_pair;
};

// For a Christoffel product uv: u^2 v and u v^2 are again Christoffel, and
// unless {u, v} is the bare alphabet, u is a proper prefix of v or v is a
// proper suffix of u.
inline MixRelation christoffel_mix(const ChristoffelWord& u, const ChristoffelWord& v) {
  if (!classify_christoffel(u.word + v.word))
    throw error(errc::not_composable, "'" + u.word.str() + "' * '" + v.word.str() +
                                          "' is not a Christoffel word");
  MixRelation rel;
  rel.uuv_christoffel = classify_christoffel(u.word + u.word + v.word).has_value();
  rel.uvv_christoffel = classify_christoffel(u.word + v.word + v.word).has_value();
  if (u.word.size() == 1 && v.word.size() == 1) {
    rel.shape = MixRelation::Shape::alphabet_pair;
  } else if (u.word.size() < v.word.size() && v.word.starts_with(u.word)) {
    rel.shape = MixRelation::Shape::u_prefix_of_v;
  } else if (v.word.size() < u.word.size() && u.word.ends_with(v.word)) {
    rel.shape = MixRelation::Shape::v_suffix_of_u;
  } else {
    throw error(errc::not_composable, "no prefix/suffix relation between '" + u.word.str() +
                                          "' and '" + v.word.str() + "'");
  }
  return rel;
}

} // namespace sturmian
