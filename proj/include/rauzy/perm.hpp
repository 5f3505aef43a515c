#pragma once

#include <string>
#include <utility>
#include <vector>

#include "rauzy/exact.hpp"

namespace rauzy {

enum class LetterType { Translation, TopFlip, BottomFlip };

// Two rows of letters, each letter appearing exactly twice in total.
// Letters are small ids 0..d-1; display names are kept separately so that
// inputs like "A 0 1 / 1 A 0" round-trip.
class GeneralizedPermutation {
 public:
  GeneralizedPermutation() = default;
  GeneralizedPermutation(std::vector<int> top, std::vector<int> bottom,
                         std::vector<std::string> names);

  // Text form: rows separated by "/", letters whitespace-separated.
  static GeneralizedPermutation parse(const std::string& text);

  const std::vector<int>& top() const { return top_; }
  const std::vector<int>& bottom() const { return bottom_; }
  int size_alphabet() const { return d_; }
  size_t ell() const { return top_.size(); }
  size_t m() const { return bottom_.size(); }
  size_t positions() const { return top_.size() + bottom_.size(); }

  const std::string& name(int letter) const { return names_[letter]; }
  const std::vector<std::string>& names() const { return names_; }

  // Letter at linear position p (top row first).
  int at(size_t p) const {
    return p < top_.size() ? top_[p] : bottom_[p - top_.size()];
  }
  bool is_top_position(size_t p) const { return p < top_.size(); }

  // The two linear positions of a letter, in reading order.
  std::pair<size_t, size_t> occurrences(int letter) const;
  // Position involution pairing the two occurrences of each letter.
  size_t sigma(size_t p) const;

  LetterType letter_type(int letter) const;
  bool is_abelian() const { return abelian_; }
  bool is_quadratic() const { return !abelian_; }

  int last_top() const { return top_.back(); }
  int last_bottom() const { return bottom_.back(); }

  // Relabels letters by order of first appearance (top row, then bottom row)
  // and renames them 1..d. Idempotent; constant on re-indexing orbits.
  GeneralizedPermutation canonical_form() const;

  bool operator==(const GeneralizedPermutation& o) const;
  bool operator!=(const GeneralizedPermutation& o) const { return !(*this == o); }
  // Lexicographic on (top row, bottom row) of canonicalized ids; used for
  // deterministic orderings. Compares structure, not display names.
  bool structure_less(const GeneralizedPermutation& o) const;

  std::string str() const;

  // If *this = p o other for a letter re-indexing p, returns p as a vector
  // (p[other_letter] = this_letter); otherwise nullopt-like empty vector.
  std::vector<int> reindexing_from(const GeneralizedPermutation& other) const;

 private:
  void validate() const;

  std::vector<int> top_, bottom_;
  std::vector<std::string> names_;
  int d_ = 0;
  bool abelian_ = false;
};

using GP = GeneralizedPermutation;

}  // namespace rauzy
