#include "rauzy/extend.hpp"

#include <algorithm>
#include <set>

#include "rauzy/suspension.hpp"

namespace rauzy {

GP erase_letters(const GP& tau, const std::vector<int>& letters) {
  std::vector<char> drop(tau.size_alphabet(), 0);
  for (int a : letters) drop[a] = 1;
  std::vector<int> remap(tau.size_alphabet(), -1);
  std::vector<std::string> names;
  int next = 0;
  for (int a = 0; a < tau.size_alphabet(); ++a) {
    if (drop[a]) continue;
    remap[a] = next++;
    names.push_back(tau.name(a));
  }
  std::vector<int> top, bottom;
  for (int a : tau.top())
    if (!drop[a]) top.push_back(remap[a]);
  for (int a : tau.bottom())
    if (!drop[a]) bottom.push_back(remap[a]);
  if (top.empty() || bottom.empty()) throw domain_error("erasure empties a row");
  return GP(std::move(top), std::move(bottom), std::move(names));
}

namespace {

// Positional clauses for one inserted letter.
std::optional<std::string> positional_violation(const GP& tau, int letter) {
  auto [p1, p2] = tau.occurrences(letter);
  int at_begin = 0;
  for (size_t p : {p1, p2}) {
    size_t row_begin = tau.is_top_position(p) ? 0 : tau.ell();
    size_t row_end = tau.is_top_position(p) ? tau.ell() - 1 : tau.positions() - 1;
    if (p == row_begin) ++at_begin;
    if (p == row_end) return "occurrence of " + tau.name(letter) + " at the end of a row";
  }
  if (at_begin > 1)
    return "both occurrences of " + tau.name(letter) + " at the beginning of a row";
  return std::nullopt;
}

}  // namespace

ExtensionCheck verify_extension(const GP& sigma, const GP& tau,
                                const std::vector<std::string>& inserted_names) {
  ExtensionCheck out;
  std::vector<int> inserted;
  for (const std::string& n : inserted_names) {
    int id = -1;
    for (int a = 0; a < tau.size_alphabet(); ++a)
      if (tau.name(a) == n) id = a;
    if (id < 0) {
      out.violated = "inserted letter " + n + " not present in tau";
      return out;
    }
    inserted.push_back(id);
  }
  if (inserted.empty() || inserted.size() > 2) {
    out.violated = "a simple extension inserts one or two letters";
    return out;
  }
  GP erased = erase_letters(tau, inserted);
  if (!(erased == sigma)) {
    out.violated = "erasure does not yield sigma";
    return out;
  }
  for (int a : inserted) {
    auto v = positional_violation(tau, a);
    if (v) {
      out.violated = *v;
      return out;
    }
  }
  ExtensionKind kind;
  if (inserted.size() == 1) {
    if (sigma.is_abelian() != tau.is_abelian()) {
      out.violated = "single-letter extension must preserve the type";
      return out;
    }
    kind = ExtensionKind::TypePreserving;
  } else {
    if (!sigma.is_abelian() || !tau.is_quadratic()) {
      out.violated = "type-changing extension goes from abelian to quadratic";
      return out;
    }
    LetterType t0 = tau.letter_type(inserted[0]), t1 = tau.letter_type(inserted[1]);
    bool flips = (t0 == LetterType::TopFlip && t1 == LetterType::BottomFlip) ||
                 (t0 == LetterType::BottomFlip && t1 == LetterType::TopFlip);
    if (!flips) {
      out.violated = "type-changing extension inserts one top flip and one bottom flip";
      return out;
    }
    kind = ExtensionKind::TypeChanging;
  }
  if (!is_irreducible(sigma)) {
    out.violated = "sigma is reducible";
    return out;
  }
  if (!is_irreducible(tau)) {
    out.violated = "tau is reducible";
    return out;
  }
  out.ok = true;
  out.witness = {sigma, tau, inserted, kind, singularity_data(sigma), singularity_data(tau)};
  return out;
}

namespace {

std::vector<int> insert_letter_at(const std::vector<int>& row, size_t gap, int letter) {
  std::vector<int> out = row;
  out.insert(out.begin() + gap, letter);
  return out;
}

std::optional<ExtensionWitness> try_candidate(const GP& sigma, std::vector<int> top,
                                              std::vector<int> bottom,
                                              std::vector<std::string> names,
                                              std::vector<int> inserted) {
  GP tau;
  try {
    tau = GP(std::move(top), std::move(bottom), std::move(names));
  } catch (const domain_error&) {
    return std::nullopt;
  }
  std::vector<std::string> inames;
  for (int a : inserted) inames.push_back(tau.name(a));
  ExtensionCheck chk = verify_extension(sigma, tau, inames);
  if (!chk.ok) return std::nullopt;
  return chk.witness;
}

}  // namespace

std::vector<ExtensionWitness> enumerate_extensions(const GP& sigma, ExtensionKind kind) {
  if (!is_irreducible(sigma)) throw domain_error("enumerate_extensions needs irreducible sigma");
  std::vector<ExtensionWitness> out;
  std::set<std::string> seen;
  int d = sigma.size_alphabet();
  std::vector<std::string> base_names = sigma.names();
  size_t l = sigma.ell(), m = sigma.m();

  auto emit = [&](std::optional<ExtensionWitness> w) {
    if (!w) return;
    std::string key = w->tau.canonical_form().str();
    if (seen.insert(key).second) out.push_back(std::move(*w));
  };

  if (kind == ExtensionKind::TypePreserving) {
    std::vector<std::string> names = base_names;
    names.push_back("A");
    int a = d;
    // Both occurrences in one row, or one in each.
    for (int row1 = 0; row1 < 2; ++row1)
      for (int row2 = row1; row2 < 2; ++row2) {
        size_t n1 = row1 == 0 ? l : m, n2 = row2 == 0 ? l : m;
        for (size_t g1 = 0; g1 <= n1; ++g1)
          for (size_t g2 = (row1 == row2 ? g1 : 0); g2 <= n2; ++g2) {
            std::vector<int> top = sigma.top(), bottom = sigma.bottom();
            auto& r1 = row1 == 0 ? top : bottom;
            auto& r2 = row2 == 0 ? top : bottom;
            if (row1 == row2) {
              r1.insert(r1.begin() + g2, a);
              r1.insert(r1.begin() + g1, a);
            } else {
              r1.insert(r1.begin() + g1, a);
              r2.insert(r2.begin() + g2, a);
            }
            emit(try_candidate(sigma, top, bottom, names, {a}));
          }
      }
  } else {
    if (!sigma.is_abelian())
      throw domain_error("type-changing extensions start from an abelian permutation");
    std::vector<std::string> names = base_names;
    names.push_back("A");
    names.push_back("B");
    int a = d, b = d + 1;
    for (size_t g1 = 0; g1 <= l; ++g1)
      for (size_t g2 = g1; g2 <= l; ++g2)
        for (size_t h1 = 0; h1 <= m; ++h1)
          for (size_t h2 = h1; h2 <= m; ++h2) {
            std::vector<int> top = sigma.top(), bottom = sigma.bottom();
            top.insert(top.begin() + g2, a);
            top.insert(top.begin() + g1, a);
            bottom.insert(bottom.begin() + h2, b);
            bottom.insert(bottom.begin() + h1, b);
            emit(try_candidate(sigma, top, bottom, names, {a, b}));
          }
  }
  return out;
}

RauzyWord shadow_word(const RauzyWord& sigma_loop, const ExtensionWitness& w) {
  // Follow the loop on sigma while driving tau so that inserted letters lose
  // whenever they sit at a relevant row end.
  std::vector<char> is_inserted(w.tau.size_alphabet(), 0);
  for (int a : w.inserted) is_inserted[a] = 1;
  GP tau = w.tau;
  GP sigma = w.sigma;
  RauzyWord out;
  size_t guard_budget =
      (sigma_loop.size() + 1) * w.tau.positions() * w.tau.positions() * 16;
  auto step_tau = [&](Side s) {
    tau = rauzy_move(tau, s);
    out.push_back(s);
    if (out.size() > guard_budget) throw internal_error("shadowing did not terminate");
  };
  for (Side s : sigma_loop) {
    for (;;) {
      int t_win = s == Side::Top ? tau.last_top() : tau.last_bottom();
      int t_lose = s == Side::Top ? tau.last_bottom() : tau.last_top();
      if (is_inserted[t_lose]) {
        step_tau(s);  // inserted letter loses
        continue;
      }
      if (is_inserted[t_win]) {
        step_tau(s == Side::Top ? Side::Bottom : Side::Top);  // still loses
        continue;
      }
      break;
    }
    {
      auto [sw, sl] = winner_loser(sigma, s);
      int tw = s == Side::Top ? tau.last_top() : tau.last_bottom();
      int tl = s == Side::Top ? tau.last_bottom() : tau.last_top();
      if (tau.name(tw) != sigma.name(sw) || tau.name(tl) != sigma.name(sl))
        throw internal_error("shadowing lost the base-move alignment");
    }
    step_tau(s);
    sigma = rauzy_move(sigma, s);
  }
  // Trailing silent moves are not appended; the erasure projection and the
  // block structure of the word matrix are the shadowing contracts.
  return out;
}

}  // namespace rauzy
