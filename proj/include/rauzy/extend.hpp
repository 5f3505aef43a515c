#pragma once

#include <optional>
#include <string>
#include <vector>

#include "rauzy/induction.hpp"
#include "rauzy/perm.hpp"
#include "rauzy/stratum.hpp"

namespace rauzy {

enum class ExtensionKind { TypePreserving, TypeChanging };

struct ExtensionWitness {
  GP sigma, tau;
  std::vector<int> inserted;  // tau letter ids, one or two
  ExtensionKind kind;
  SingularityData sigma_stratum, tau_stratum;
};

struct ExtensionCheck {
  bool ok = false;
  std::string violated;  // names the violated clause when !ok
  ExtensionWitness witness;
};

// Verifies that erasing the named letters from tau yields sigma exactly and
// that the positional clauses hold: at most one occurrence of each inserted
// letter at the beginning of a row, none at the end of a row. Re-checks
// irreducibility of tau.
ExtensionCheck verify_extension(const GP& sigma, const GP& tau,
                                const std::vector<std::string>& inserted_names);

// All simple extensions of sigma of the given kind, deduplicated by the
// canonical form of tau. Inserted letters are named "A" (and "B").
std::vector<ExtensionWitness> enumerate_extensions(const GP& sigma, ExtensionKind kind);

// Shadows a loop based at sigma by a word at tau in which the inserted
// letters always lose; the erasure of the result projects to the input loop.
RauzyWord shadow_word(const RauzyWord& sigma_loop, const ExtensionWitness& w);

// Erases the given letters (domain_error if the result is invalid).
GP erase_letters(const GP& tau, const std::vector<int>& letters);

}  // namespace rauzy
