#pragma once

#include <algorithm>
#include <cstddef>
#include <map>
#include <optional>
#include <string>
#include <tuple>
#include <utility>
#include <vector>

#include "sturmian/christoffel.hpp"
#include "sturmian/error.hpp"
#include "sturmian/exact.hpp"
#include "sturmian/words.hpp"

namespace sturmian {

enum class FactorizationKind { all_lower, all_upper, letters_only };

inline const char* factorization_kind_name(FactorizationKind k) {
  switch (k) {
    case FactorizationKind::all_lower: return "lower";
    case FactorizationKind::all_upper: return "upper";
    case FactorizationKind::letters_only: return "letters";
  }
  return "?";
}

// Factorization of a word into Christoffel terms whose reversals, concatenated
// in order, spell a prefix of a second word.
struct RCFactorization {
  std::vector<ChristoffelWord> terms;
  std::vector<ChristoffelWord> alphabet;  // distinct terms, shortest first
  FactorizationKind kind = FactorizationKind::letters_only;
  bool truncated = false;     // a trailing unfinished term was dropped
  std::size_t covered = 0;    // letters consumed by the complete terms
  BinaryWord word, partner;   // the two compared words (full inputs)
  std::optional<QuadraticReal> beta;  // fractional intercept gap, when known
};

namespace detail {

inline FactorizationKind uniform_kind(const std::vector<ChristoffelWord>& terms) {
  FactorizationKind kind = FactorizationKind::letters_only;
  for (const ChristoffelWord& t : terms) {
    if (t.kind == ChristoffelKind::letter) continue;
    const FactorizationKind k = t.kind == ChristoffelKind::lower ? FactorizationKind::all_lower
                                                                 : FactorizationKind::all_upper;
    if (kind == FactorizationKind::letters_only) kind = k;
    if (kind != k)
      throw error(errc::mixed_kind, "factorization mixes lower and upper terms at '" +
                                        t.word.str() + "'");
  }
  return kind;
}

inline std::vector<ChristoffelWord> distinct_terms(const std::vector<ChristoffelWord>& terms) {
  std::vector<ChristoffelWord> alphabet;
  for (const ChristoffelWord& t : terms) {
    const auto same = [&t](const ChristoffelWord& x) { return x.word == t.word; };
    if (std::find_if(alphabet.begin(), alphabet.end(), same) == alphabet.end())
      alphabet.push_back(t);
  }
  std::sort(alphabet.begin(), alphabet.end(),
            [](const ChristoffelWord& x, const ChristoffelWord& y) {
              return LengthLexLess{}(x.word, y.word);
            });
  return alphabet;
}

} // namespace detail

// Builds a factorization from an explicit term sequence; the partner is the
// concatenation of term reversals.
inline RCFactorization from_terms(const std::vector<ChristoffelWord>& terms) {
  if (terms.empty()) throw error(errc::invalid_spec, "a factorization needs at least one term");
  RCFactorization f;
  f.terms = terms;
  f.alphabet = detail::distinct_terms(terms);
  f.kind = detail::uniform_kind(terms);
  for (const ChristoffelWord& t : terms) {
    f.word.append(t.word);
    f.partner.append(t.word.reversed());
  }
  f.covered = f.word.size();
  return f;
}

// Factors w against w2 by cutting at every position where the two prefixes
// become Abelian equivalent.  Equal lengths make Parikh equality a single
// running difference of 1-counts.
inline RCFactorization abelian_compare(const BinaryWord& w, const BinaryWord& w2) {
  if (w.size() != w2.size())
    throw error(errc::invalid_spec, "can only compare words of equal length");
  if (w.size() == 0) throw error(errc::invalid_spec, "cannot compare empty words");

  RCFactorization f;
  f.word = w;
  f.partner = w2;

  long long diff = 0;
  std::size_t cut = 0;
  for (std::size_t i = 1; i <= w.size(); ++i) {
    diff += (w[i - 1] == '1') - (w2[i - 1] == '1');
    if (diff != 0) continue;
    const BinaryWord seg = w.substr(cut, i - cut);
    const BinaryWord seg2 = w2.substr(cut, i - cut);
    if (seg.reversed() != seg2)
      throw error(errc::reversal_mismatch, "segment '" + seg.str() + "' of the first word is not "
                  "mirrored by '" + seg2.str() + "' in the second");
    const auto c = classify_christoffel(seg);
    if (!c)
      throw error(errc::not_christoffel, "segment '" + seg.str() + "' is not a Christoffel word");
    f.terms.push_back(*c);
    cut = i;
  }

  if (f.terms.empty())
    throw error(errc::abelian_incomparable,
                "no Abelian coincidence within " + std::to_string(w.size()) +
                    " letters; the pair is suspected incomparable");
  f.covered = cut;
  f.truncated = cut != w.size();
  f.alphabet = detail::distinct_terms(f.terms);
  f.kind = detail::uniform_kind(f.terms);
  return f;
}

inline BinaryWord reconstruct_partner(const RCFactorization& f) {
  BinaryWord out;
  for (const ChristoffelWord& t : f.terms) out.append(t.word.reversed());
  return out;
}

struct TheoremMainReport {
  std::size_t alphabet_size = 0;
  bool conclusive = false;  // every alphabet element occurs at least 3 times
  std::map<std::string, std::size_t> occurrences;
  bool size_ok = false;                    // alphabet size is 2 or 3
  bool longest_is_concatenation = false;   // only meaningful at size 3
  std::string concat_witness;              // e.g. "001=0*01"
  bool reversal_ok = false;
  bool kind_uniform = false;
  Verdict verdict = Verdict::inconclusive;
};

// Finds the ordered split of the longest alphabet element into the other two,
// if one exists.
inline std::optional<std::pair<ChristoffelWord, ChristoffelWord>> longest_term_split(
    const std::vector<ChristoffelWord>& alphabet) {
  if (alphabet.size() != 3) return std::nullopt;
  const ChristoffelWord& z = alphabet.back();
  const ChristoffelWord& x = alphabet[0];
  const ChristoffelWord& y = alphabet[1];
  if (x.word + y.word == z.word) return std::make_pair(x, y);
  if (y.word + x.word == z.word) return std::make_pair(y, x);
  return std::nullopt;
}

inline TheoremMainReport verify_theorem_main(const RCFactorization& f) {
  TheoremMainReport r;
  r.alphabet_size = f.alphabet.size();
  for (const ChristoffelWord& t : f.terms) ++r.occurrences[t.word.str()];
  r.conclusive = true;
  for (const auto& [word, count] : r.occurrences)
    if (count < 3) r.conclusive = false;

  r.reversal_ok = f.partner.size() >= f.covered &&
                  reconstruct_partner(f) == f.partner.prefix(f.covered);
  r.kind_uniform = true;
  try {
    detail::uniform_kind(f.terms);
  } catch (const error&) {
    r.kind_uniform = false;
  }

  r.size_ok = r.alphabet_size == 2 || r.alphabet_size == 3;
  if (r.alphabet_size == 3) {
    if (const auto split = longest_term_split(f.alphabet)) {
      r.longest_is_concatenation = true;
      r.concat_witness = f.alphabet.back().word.str() + "=" + split->first.word.str() + "*" +
                         split->second.word.str();
    }
  }

  if (!r.reversal_ok || !r.kind_uniform)
    r.verdict = Verdict::fail;
  else if (!r.conclusive)
    r.verdict = Verdict::inconclusive;
  else if (!r.size_ok || (r.alphabet_size == 3 && !r.longest_is_concatenation))
    r.verdict = Verdict::fail;
  else
    r.verdict = Verdict::pass;
  return r;
}

struct RefineResult {
  RCFactorization fact;
  BinaryWord coded;  // one letter per refined term
};

// Replaces every occurrence of the longest alphabet element z = first*second
// by the pair (first, second), producing a two-term-alphabet factorization.
// letter0 names which part the coded word writes as 0; it defaults to the
// first part of the split.
inline RefineResult refine(const RCFactorization& f,
                           const std::optional<BinaryWord>& letter0 = std::nullopt) {
  if (f.alphabet.size() != 3)
    throw error(errc::not_ternary, "refinement needs a three-element alphabet, have " +
                                       std::to_string(f.alphabet.size()));
  const auto split = longest_term_split(f.alphabet);
  if (!split)
    throw error(errc::invalid_spec,
                "longest term '" + f.alphabet.back().word.str() +
                    "' is not a concatenation of the other two alphabet elements");
  const ChristoffelWord& first = split->first;
  const ChristoffelWord& second = split->second;
  const BinaryWord zero = letter0.value_or(first.word);
  if (zero != first.word && zero != second.word)
    throw error(errc::invalid_spec, "'" + zero.str() + "' is not a part of the split");

  const BinaryWord& z = f.alphabet.back().word;
  RefineResult out;
  std::vector<ChristoffelWord> terms;
  for (const ChristoffelWord& t : f.terms) {
    if (t.word == z) {
      terms.push_back(first);
      terms.push_back(second);
      out.coded.push_back(first.word == zero ? '0' : '1');
      out.coded.push_back(second.word == zero ? '0' : '1');
    } else {
      terms.push_back(t);
      out.coded.push_back(t.word == zero ? '0' : '1');
    }
  }
  out.fact = from_terms(terms);
  out.fact.truncated = f.truncated;
  out.fact.beta = f.beta;
  return out;
}

struct CoarsenResult {
  RCFactorization fact;
  BinaryWord coded;  // 0 for each merged pair, 1 for each leftover term
};

namespace detail {

// Chooses the merge orientation (u, v): the order whose concatenation is a
// Christoffel word of the factorization's kind.  A letters-only pair is
// oriented away from the first term, which must not play the role of v.
inline std::pair<ChristoffelWord, ChristoffelWord> coarsen_orientation(const RCFactorization& f) {
  const ChristoffelWord& x = f.alphabet[0];
  const ChristoffelWord& y = f.alphabet[1];
  if (f.kind == FactorizationKind::letters_only) {
    const ChristoffelWord& u = f.terms.front();
    const ChristoffelWord& v = u.word == x.word ? y : x;
    return {u, v};
  }
  const ChristoffelKind want =
      f.kind == FactorizationKind::all_lower ? ChristoffelKind::lower : ChristoffelKind::upper;
  for (const auto& [u, v] : {std::make_pair(x, y), std::make_pair(y, x)}) {
    const auto z = classify_christoffel(u.word + v.word);
    if (z && z->kind == want) return {u, v};
  }
  throw error(errc::not_composable,
              "neither ordering of '" + x.word.str() + "' and '" + y.word.str() +
                  "' concatenates to a Christoffel word of the factorization's kind");
}

} // namespace detail

// Merges every adjacent pair u, v of terms into the single term z = uv.  The
// result is a factorization over {z, u} or {z, v}; a trailing unmerged u is
// dropped as truncation debris.
inline CoarsenResult coarsen(const RCFactorization& f) {
  if (f.alphabet.size() != 2 && f.alphabet.size() != 3)
    throw error(errc::invalid_spec, "coarsening needs a two- or three-element alphabet, have " +
                                        std::to_string(f.alphabet.size()));

  ChristoffelWord u = f.alphabet[0], v = f.alphabet[1];
  if (f.alphabet.size() == 3) {
    const auto split = longest_term_split(f.alphabet);
    if (!split)
      throw error(errc::invalid_spec,
                  "longest term '" + f.alphabet.back().word.str() +
                      "' is not a concatenation of the other two alphabet elements");
    u = split->first;
    v = split->second;
  } else {
    std::tie(u, v) = detail::coarsen_orientation(f);
  }
  const auto z_opt = classify_christoffel(u.word + v.word);
  if (!z_opt)
    throw error(errc::not_composable,
                "'" + (u.word + v.word).str() + "' is not a Christoffel word");
  const ChristoffelWord z = *z_opt;

  std::vector<ChristoffelWord> merged;
  std::size_t merges = 0;
  for (std::size_t i = 0; i < f.terms.size();) {
    if (i + 1 < f.terms.size() && f.terms[i].word == u.word && f.terms[i + 1].word == v.word) {
      merged.push_back(z);
      i += 2;
      ++merges;
    } else {
      merged.push_back(f.terms[i]);
      i += 1;
    }
  }
  if (merges == 0)
    throw error(errc::no_adjacent_pair, "the pattern '" + u.word.str() + "'*'" + v.word.str() +
                                            "' does not occur in the term sequence");

  const auto count_leftover = [&merged, &z](const BinaryWord& t) {
    std::size_t n = 0;
    for (const ChristoffelWord& m : merged)
      if (m.word != z.word && m.word == t) ++n;
    return n;
  };
  // A trailing unmerged u is indistinguishable from the first half of a
  // merge pair cut off by the horizon, so it is dropped as debris.
  bool dropped = false;
  if (merged.back().word == u.word) {
    merged.pop_back();
    dropped = true;
  }
  if (count_leftover(u.word) > 0 && count_leftover(v.word) > 0) {
    if (f.terms.front().word == v.word)
      throw error(errc::first_term_is_v,
                  "first term '" + v.word.str() + "' is the second half of the merge pattern "
                  "and cannot be absorbed");
    throw error(errc::invalid_spec, "leftover terms of both kinds remain after merging");
  }

  CoarsenResult out;
  for (const ChristoffelWord& m : merged) out.coded.push_back(m.word == z.word ? '0' : '1');
  out.fact = from_terms(merged);
  out.fact.truncated = f.truncated || dropped;
  out.fact.beta = f.beta;
  return out;
}

// Smallest index from which the two words agree to the end; empty when the
// agreement starts past the halfway point (too late to call).
inline std::optional<std::size_t> proximality_check(const BinaryWord& w, const BinaryWord& w2) {
  if (w.size() != w2.size())
    throw error(errc::invalid_spec, "can only compare words of equal length");
  std::size_t from = 0;
  for (std::size_t j = w.size(); j > 0; --j)
    if (w[j - 1] != w2[j - 1]) {
      from = j;
      break;
    }
  if (from > w.size() / 2) return std::nullopt;
  return from;
}

// Compares the lower mechanical words of one slope and two intercepts.
inline RCFactorization compare_mechanical(const QuadraticReal& slope, const QuadraticReal& rho,
                                          const QuadraticReal& rho2, std::size_t n) {
  const BinaryWord w = mechanical_prefix(MechanicalSpec(slope, rho, WordKind::lower), n);
  const BinaryWord w2 = mechanical_prefix(MechanicalSpec(slope, rho2, WordKind::lower), n);
  RCFactorization f = abelian_compare(w, w2);
  f.beta = (rho2 - rho).fract();
  return f;
}

struct SweepItem {
  std::size_t index = 0;
  std::optional<TheoremMainReport> report;
  std::string error_name;  // empty on success
};

struct SweepSummary {
  std::vector<SweepItem> items;
  std::size_t pass = 0, fail = 0, inconclusive = 0, errored = 0;
};

inline SweepSummary rc_sweep(const QuadraticReal& slope,
                             const std::vector<std::pair<QuadraticReal, QuadraticReal>>& intercepts,
                             std::size_t prefix_len) {
  SweepSummary s;
  for (std::size_t i = 0; i < intercepts.size(); ++i) {
    SweepItem item;
    item.index = i;
    try {
      const RCFactorization f =
          compare_mechanical(slope, intercepts[i].first, intercepts[i].second, prefix_len);
      item.report = verify_theorem_main(f);
      switch (item.report->verdict) {
        case Verdict::pass: ++s.pass; break;
        case Verdict::fail: ++s.fail; break;
        case Verdict::inconclusive: ++s.inconclusive; break;
      }
    } catch (const error& e) {
      item.error_name = errc_name(e.code());
      ++s.errored;
    }
    s.items.push_back(std::move(item));
  }
  return s;
}

} // namespace sturmian
