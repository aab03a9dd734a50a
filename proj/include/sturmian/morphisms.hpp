#pragma once

#include <algorithm>
#include <cstddef>
#include <set>
#include <string>
#include <vector>

#include "sturmian/christoffel.hpp"
#include "sturmian/error.hpp"
#include "sturmian/words.hpp"

namespace sturmian {

// Non-erasing substitution on the binary alphabet.
struct BinaryMorphism {
  BinaryWord image0, image1;

  BinaryMorphism(BinaryWord i0, BinaryWord i1) : image0(std::move(i0)), image1(std::move(i1)) {
    if (image0.size() == 0 || image1.size() == 0)
      throw error(errc::invalid_spec, "morphism images must be nonempty");
  }

  BinaryWord apply(const BinaryWord& w) const {
    BinaryWord out;
    for (std::size_t i = 0; i < w.size(); ++i) out.append(w[i] == '0' ? image0 : image1);
    return out;
  }

  friend bool operator==(const BinaryMorphism& x, const BinaryMorphism& y) = default;

  static BinaryMorphism identity() { return {BinaryWord("0"), BinaryWord("1")}; }
  static BinaryMorphism exchange() { return {BinaryWord("1"), BinaryWord("0")}; }
  static BinaryMorphism fibonacci() { return {BinaryWord("01"), BinaryWord("0")}; }
  static BinaryMorphism fibonacci_reversed() { return {BinaryWord("10"), BinaryWord("0")}; }
};

inline BinaryMorphism compose(const BinaryMorphism& outer, const BinaryMorphism& inner) {
  return {outer.apply(inner.image0), outer.apply(inner.image1)};
}

// All distinct rotations, starting from the word itself.
inline std::vector<BinaryWord> conjugates(const BinaryWord& w) {
  std::vector<BinaryWord> out;
  std::set<std::string> seen;
  for (std::size_t i = 0; i < std::max<std::size_t>(w.size(), 1); ++i) {
    BinaryWord rot = w.substr(i) + w.prefix(i);
    if (seen.insert(rot.str()).second) out.push_back(std::move(rot));
  }
  return out;
}

inline bool has_christoffel_conjugate(const BinaryWord& w) {
  for (const BinaryWord& rot : conjugates(w))
    if (classify_christoffel(rot).has_value()) return true;
  return false;
}

struct SturmianMorphismReport {
  bool sturmian = false;
  // When the test fails: the first test word whose image has no Christoffel
  // word among its rotations, and that image.
  BinaryWord test_word, image;
};

// A morphism is Sturmian exactly when the images of 01, 001 and 011 are all
// conjugates of Christoffel words.
inline SturmianMorphismReport is_sturmian_morphism(const BinaryMorphism& m) {
  for (const char* t : {"01", "001", "011"}) {
    const BinaryWord w(t);
    const BinaryWord image = m.apply(w);
    if (!has_christoffel_conjugate(image)) return {false, w, image};
  }
  return {true, {}, {}};
}

enum class PrefixSuffixRelation {
  image0_prefix_of_image1,
  image1_suffix_of_image0,
  image1_prefix_of_image0,
  image0_suffix_of_image1,
  none,
};

inline const char* prefix_suffix_relation_name(PrefixSuffixRelation r) {
  switch (r) {
    case PrefixSuffixRelation::image0_prefix_of_image1: return "image0-prefix-of-image1";
    case PrefixSuffixRelation::image1_suffix_of_image0: return "image1-suffix-of-image0";
    case PrefixSuffixRelation::image1_prefix_of_image0: return "image1-prefix-of-image0";
    case PrefixSuffixRelation::image0_suffix_of_image1: return "image0-suffix-of-image1";
    case PrefixSuffixRelation::none: return "none";
  }
  return "?";
}

// For a Sturmian morphism other than the identity and the exchange, one image
// is a proper prefix or a proper suffix of the other.
inline PrefixSuffixRelation prefix_suffix_relation(const BinaryMorphism& m) {
  if (m == BinaryMorphism::identity() || m == BinaryMorphism::exchange())
    throw error(errc::not_applicable, "letter-to-letter morphisms have no nested images");
  const BinaryWord& a = m.image0;
  const BinaryWord& b = m.image1;
  if (a.size() < b.size() && b.starts_with(a)) return PrefixSuffixRelation::image0_prefix_of_image1;
  if (b.size() < a.size() && a.ends_with(b)) return PrefixSuffixRelation::image1_suffix_of_image0;
  if (b.size() < a.size() && a.starts_with(b)) return PrefixSuffixRelation::image1_prefix_of_image0;
  if (a.size() < b.size() && b.ends_with(a)) return PrefixSuffixRelation::image0_suffix_of_image1;
  return PrefixSuffixRelation::none;
}

// Non-erasing substitution from the alphabet {a, b, c} into binary words.
struct TernaryMorphism {
  BinaryWord image_a, image_b, image_c;

  TernaryMorphism(BinaryWord a, BinaryWord b, BinaryWord c)
      : image_a(std::move(a)), image_b(std::move(b)), image_c(std::move(c)) {
    if (image_a.size() == 0 || image_b.size() == 0 || image_c.size() == 0)
      throw error(errc::invalid_spec, "morphism images must be nonempty");
  }

  BinaryWord apply(const std::string& w) const {
    BinaryWord out;
    for (char ch : w) {
      switch (ch) {
        case 'a': out.append(image_a); break;
        case 'b': out.append(image_b); break;
        case 'c': out.append(image_c); break;
        default:
          throw error(errc::alphabet_mismatch,
                      std::string("letter '") + ch + "' is outside the {a, b, c} alphabet");
      }
    }
    return out;
  }

  static TernaryMorphism sigma() { return {BinaryWord("0"), BinaryWord("01"), BinaryWord("1")}; }
  static TernaryMorphism sigma_prime() {
    return {BinaryWord("0"), BinaryWord("10"), BinaryWord("1")};
  }
};

// Start positions of every (possibly overlapping) occurrence of p in w.
inline std::vector<std::size_t> occurrence_positions(const BinaryWord& w, const BinaryWord& p) {
  std::vector<std::size_t> pos;
  const std::string& hay = w.str();
  const std::string& needle = p.str();
  for (std::size_t at = hay.find(needle); at != std::string::npos;
       at = hay.find(needle, at + 1))
    pos.push_back(at);
  return pos;
}

// Words r such that r·p contains exactly two occurrences of p, one as a
// prefix and one as a suffix.  Listed in order of first appearance; the
// incomplete return after the last occurrence is discarded.
inline std::vector<BinaryWord> return_words(const BinaryWord& w, const BinaryWord& p) {
  if (p.size() == 0) throw error(errc::invalid_spec, "returns to the empty prefix are not defined");
  if (!w.starts_with(p))
    throw error(errc::prefix_mismatch, "'" + p.str() + "' is not a prefix of the word");
  const std::vector<std::size_t> pos = occurrence_positions(w, p);
  if (pos.size() < 3)
    throw error(errc::insufficient_occurrences,
                "'" + p.str() + "' occurs only " + std::to_string(pos.size()) +
                    " times; at least 3 occurrences are needed");
  std::vector<BinaryWord> out;
  std::set<std::string> seen;
  for (std::size_t i = 0; i + 1 < pos.size(); ++i) {
    BinaryWord r = w.substr(pos[i], pos[i + 1] - pos[i]);
    if (seen.insert(r.str()).second) out.push_back(std::move(r));
  }
  return out;
}

struct DerivedWord {
  BinaryWord coded;          // one letter per complete return: 0 for the
                             // first-occurring return word, 1 for the other
  BinaryMorphism expansion;  // 0 and 1 back to the two return words
  std::size_t covered = 0;   // length of the source prefix the coding expands to
};

inline DerivedWord derived_word(const BinaryWord& w, const BinaryWord& p) {
  const std::vector<BinaryWord> returns = return_words(w, p);
  if (returns.size() != 2)
    throw error(errc::not_two_return_words,
                "expected exactly 2 distinct return words, found " +
                    std::to_string(returns.size()));
  const std::vector<std::size_t> pos = occurrence_positions(w, p);
  DerivedWord d{{}, BinaryMorphism(returns[0], returns[1]), pos.back()};
  for (std::size_t i = 0; i + 1 < pos.size(); ++i) {
    const BinaryWord r = w.substr(pos[i], pos[i + 1] - pos[i]);
    d.coded.push_back(r == returns[0] ? '0' : '1');
  }
  return d;
}

} // namespace sturmian
