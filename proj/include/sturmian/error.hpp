#pragma once

#include <stdexcept>
#include <string>

namespace sturmian {

enum class errc {
  zero_denominator,
  unsupported_radicand,
  mixed_radicands,
  bad_format,
  rational_slope,
  invalid_spec,
  insufficient_length,
  not_palindromic_prefix,
  alphabet_mismatch,
  not_coprime,
  trivial_word,
  not_composable,
  not_applicable,
  prefix_mismatch,
  insufficient_occurrences,
  not_two_return_words,
  abelian_incomparable,
  reversal_mismatch,
  mixed_kind,
  not_christoffel,
  not_ternary,
  first_term_is_v,
  no_adjacent_pair,
  out_of_domain,
  no_hits,
  missing_letter,
  rare_term,
  usage,
};

inline const char* errc_name(errc c) {
  switch (c) {
    case errc::zero_denominator: return "zero-denominator";
    case errc::unsupported_radicand: return "unsupported-radicand";
    case errc::mixed_radicands: return "mixed-radicands";
    case errc::bad_format: return "bad-format";
    case errc::rational_slope: return "rational-slope";
    case errc::invalid_spec: return "invalid-spec";
    case errc::insufficient_length: return "insufficient-length";
    case errc::not_palindromic_prefix: return "not-palindromic-prefix";
    case errc::alphabet_mismatch: return "alphabet-mismatch";
    case errc::not_coprime: return "not-coprime";
    case errc::trivial_word: return "trivial-word";
    case errc::not_composable: return "not-composable";
    case errc::not_applicable: return "not-applicable";
    case errc::prefix_mismatch: return "prefix-mismatch";
    case errc::insufficient_occurrences: return "insufficient-occurrences";
    case errc::not_two_return_words: return "not-two-return-words";
    case errc::abelian_incomparable: return "abelian-incomparable";
    case errc::reversal_mismatch: return "reversal-mismatch";
    case errc::mixed_kind: return "mixed-kind";
    case errc::not_christoffel: return "not-christoffel";
    case errc::not_ternary: return "not-ternary";
    case errc::first_term_is_v: return "first-term-is-v";
    case errc::no_adjacent_pair: return "no-adjacent-pair";
    case errc::out_of_domain: return "out-of-domain";
    case errc::no_hits: return "no-hits";
    case errc::missing_letter: return "missing-letter";
    case errc::rare_term: return "rare-term";
    case errc::usage: return "usage";
  }
  return "unknown";
}

class error : public std::runtime_error {
 public:
  error(errc code, const std::string& what)
      : std::runtime_error(std::string(errc_name(code)) + ": " + what), code_(code) {}

  errc code() const noexcept { return code_; }

 private:
  errc code_;
};

} // namespace sturmian
