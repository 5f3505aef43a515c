#include "rauzy/perm.hpp"

#include <algorithm>
#include <map>
#include <sstream>

namespace rauzy {

GeneralizedPermutation::GeneralizedPermutation(std::vector<int> top, std::vector<int> bottom,
                                               std::vector<std::string> names)
    : top_(std::move(top)), bottom_(std::move(bottom)), names_(std::move(names)) {
  d_ = static_cast<int>(names_.size());
  validate();
  bool has_topflip = false, has_bottomflip = false, has_flip = false;
  for (int a = 0; a < d_; ++a) {
    LetterType t = letter_type(a);
    if (t == LetterType::TopFlip) has_topflip = has_flip = true;
    if (t == LetterType::BottomFlip) has_bottomflip = has_flip = true;
  }
  abelian_ = !has_flip;
  if (has_flip && !(has_topflip && has_bottomflip))
    throw domain_error("permutation is neither abelian nor quadratic: " + str());
}

void GeneralizedPermutation::validate() const {
  if (top_.empty() || bottom_.empty())
    throw domain_error("permutation rows must be nonempty");
  std::vector<int> count(d_, 0);
  for (int a : top_) {
    if (a < 0 || a >= d_) throw domain_error("letter id out of range");
    ++count[a];
  }
  for (int a : bottom_) {
    if (a < 0 || a >= d_) throw domain_error("letter id out of range");
    ++count[a];
  }
  for (int a = 0; a < d_; ++a)
    if (count[a] != 2)
      throw domain_error("every letter must occur exactly twice: letter " +
                         (a < d_ ? names_[a] : std::to_string(a)));
}

GeneralizedPermutation GeneralizedPermutation::parse(const std::string& text) {
  size_t slash = text.find('/');
  if (slash == std::string::npos) throw domain_error("permutation text needs a '/': " + text);
  auto tokenize = [](const std::string& s) {
    std::vector<std::string> toks;
    std::istringstream is(s);
    std::string t;
    while (is >> t) toks.push_back(t);
    return toks;
  };
  std::vector<std::string> trow = tokenize(text.substr(0, slash));
  std::vector<std::string> brow = tokenize(text.substr(slash + 1));
  std::map<std::string, int> ids;
  std::vector<std::string> names;
  auto to_ids = [&](const std::vector<std::string>& toks) {
    std::vector<int> out;
    for (const std::string& t : toks) {
      auto it = ids.find(t);
      if (it == ids.end()) {
        it = ids.emplace(t, static_cast<int>(names.size())).first;
        names.push_back(t);
      }
      out.push_back(it->second);
    }
    return out;
  };
  std::vector<int> top = to_ids(trow), bottom = to_ids(brow);
  return GeneralizedPermutation(std::move(top), std::move(bottom), std::move(names));
}

std::pair<size_t, size_t> GeneralizedPermutation::occurrences(int letter) const {
  size_t first = positions(), second = positions();
  for (size_t p = 0; p < positions(); ++p) {
    if (at(p) == letter) {
      if (first == positions()) first = p;
      else second = p;
    }
  }
  if (second == positions()) throw domain_error("unknown letter");
  return {first, second};
}

size_t GeneralizedPermutation::sigma(size_t p) const {
  auto [a, b] = occurrences(at(p));
  return p == a ? b : a;
}

LetterType GeneralizedPermutation::letter_type(int letter) const {
  if (letter < 0 || letter >= d_) throw domain_error("unknown letter");
  auto [a, b] = occurrences(letter);
  bool a_top = is_top_position(a), b_top = is_top_position(b);
  if (a_top && b_top) return LetterType::TopFlip;
  if (!a_top && !b_top) return LetterType::BottomFlip;
  return LetterType::Translation;
}

GeneralizedPermutation GeneralizedPermutation::canonical_form() const {
  std::vector<int> relabel(d_, -1);
  std::vector<std::string> names;
  int next = 0;
  auto visit = [&](int a) {
    if (relabel[a] < 0) {
      relabel[a] = next++;
      names.push_back(std::to_string(next));
    }
  };
  for (int a : top_) visit(a);
  for (int a : bottom_) visit(a);
  std::vector<int> t(top_.size()), b(bottom_.size());
  for (size_t i = 0; i < top_.size(); ++i) t[i] = relabel[top_[i]];
  for (size_t i = 0; i < bottom_.size(); ++i) b[i] = relabel[bottom_[i]];
  return GeneralizedPermutation(std::move(t), std::move(b), std::move(names));
}

bool GeneralizedPermutation::operator==(const GeneralizedPermutation& o) const {
  if (top_.size() != o.top_.size() || bottom_.size() != o.bottom_.size() || d_ != o.d_)
    return false;
  for (size_t i = 0; i < top_.size(); ++i)
    if (names_[top_[i]] != o.names_[o.top_[i]]) return false;
  for (size_t i = 0; i < bottom_.size(); ++i)
    if (names_[bottom_[i]] != o.names_[o.bottom_[i]]) return false;
  return true;
}

bool GeneralizedPermutation::structure_less(const GeneralizedPermutation& o) const {
  GeneralizedPermutation a = canonical_form(), b = o.canonical_form();
  if (a.top_ != b.top_) return a.top_ < b.top_;
  return a.bottom_ < b.bottom_;
}

std::string GeneralizedPermutation::str() const {
  std::ostringstream os;
  for (size_t i = 0; i < top_.size(); ++i) os << (i ? " " : "") << names_[top_[i]];
  os << " / ";
  for (size_t i = 0; i < bottom_.size(); ++i) os << (i ? " " : "") << names_[bottom_[i]];
  return os.str();
}

std::vector<int> GeneralizedPermutation::reindexing_from(const GeneralizedPermutation& other) const {
  if (top_.size() != other.top_.size() || bottom_.size() != other.bottom_.size() ||
      d_ != other.d_)
    return {};
  std::vector<int> p(d_, -1);
  for (size_t i = 0; i < positions(); ++i) {
    int from = other.at(i), to = at(i);
    if (p[from] < 0) p[from] = to;
    else if (p[from] != to) return {};
  }
  return p;
}

}  // namespace rauzy
