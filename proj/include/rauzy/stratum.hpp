#pragma once

#include <string>
#include <vector>

#include "rauzy/exact.hpp"

namespace rauzy {

// Singularity orders of a stratum. Quadratic data uses the quadratic
// convention (orders >= -1, sum 4g-4); abelian data stores half-orders
// (m = kappa/2 >= 0, sum 2g-2). Marked regular points appear as zeros.
struct SingularityData {
  bool abelian = false;
  std::vector<long> orders;  // sorted descending
  long genus = 0;
  size_t num_marked = 0;  // |Z|, including regular marked points

  std::string str() const;
  bool operator==(const SingularityData& o) const {
    return abelian == o.abelian && orders == o.orders && genus == o.genus;
  }
};

// Validates the order sum and derives the genus; throws domain_error on
// inconsistent data.
SingularityData make_singularity_data(std::vector<long> orders, bool abelian);

enum class ComponentKind { Hyperelliptic, OddSpin, EvenSpin, Regular, Irregular, Connected };

std::string component_kind_str(ComponentKind k);

struct ComponentLabel {
  ComponentKind kind;
  SingularityData stratum;
  bool abelian;
};

// The number of rootings 4g - 4 + 2|Z|.
long rooting_count(const SingularityData& sd);

// Component list of the stratum, exactly as tabulated in the classification
// of abelian and quadratic stratum components. Empty strata yield an empty
// list. Regular marked points are ignored for the lookup.
std::vector<ComponentLabel> classify_components(const SingularityData& sd);

}  // namespace rauzy
