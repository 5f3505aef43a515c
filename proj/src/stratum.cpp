#include "rauzy/stratum.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>

namespace rauzy {

std::string SingularityData::str() const {
  std::ostringstream os;
  os << (abelian ? "H(" : "Q(");
  for (size_t i = 0; i < orders.size(); ++i) os << (i ? ", " : "") << orders[i];
  os << ")";
  return os.str();
}

SingularityData make_singularity_data(std::vector<long> orders, bool abelian) {
  std::sort(orders.begin(), orders.end(), std::greater<long>());
  long sum = std::accumulate(orders.begin(), orders.end(), 0L);
  SingularityData sd;
  sd.abelian = abelian;
  sd.num_marked = orders.size();
  if (abelian) {
    for (long m : orders)
      if (m < 0) throw domain_error("abelian orders must be nonnegative");
    if (sum % 2 != 0) throw domain_error("inconsistent abelian singularity data");
    sd.genus = sum / 2 + 1;
  } else {
    for (long k : orders)
      if (k < -1) throw domain_error("quadratic orders must be >= -1");
    if (sum % 4 != 0 || sum < -4) throw domain_error("inconsistent quadratic singularity data");
    sd.genus = sum / 4 + 1;
  }
  sd.orders = std::move(orders);
  return sd;
}

long rooting_count(const SingularityData& sd) {
  return 4 * sd.genus - 4 + 2 * static_cast<long>(sd.num_marked);
}

std::string component_kind_str(ComponentKind k) {
  switch (k) {
    case ComponentKind::Hyperelliptic: return "hyperelliptic";
    case ComponentKind::OddSpin: return "odd-spin";
    case ComponentKind::EvenSpin: return "even-spin";
    case ComponentKind::Regular: return "regular";
    case ComponentKind::Irregular: return "irregular";
    case ComponentKind::Connected: return "connected";
  }
  return "?";
}

namespace {

std::vector<ComponentLabel> labels(const SingularityData& sd, std::vector<ComponentKind> kinds) {
  std::vector<ComponentLabel> out;
  for (ComponentKind k : kinds) out.push_back({k, sd, sd.abelian});
  return out;
}

bool same_multiset(const std::vector<long>& a, std::vector<long> b) {
  std::sort(b.begin(), b.end(), std::greater<long>());
  return a == b;
}

std::vector<ComponentLabel> classify_abelian(const SingularityData& sd,
                                             const std::vector<long>& m) {
  long g = sd.genus;
  using K = ComponentKind;
  if (g <= 2) return labels(sd, {K::Hyperelliptic});  // H(0), H(2), H(1,1)
  if (g == 3) {
    if (same_multiset(m, {4}) || same_multiset(m, {2, 2}))
      return labels(sd, {K::Hyperelliptic, K::OddSpin});
    return labels(sd, {K::Connected});
  }
  if (same_multiset(m, {2 * g - 2}))
    return labels(sd, {K::Hyperelliptic, K::EvenSpin, K::OddSpin});
  if (same_multiset(m, {g - 1, g - 1})) {
    if (g % 2 == 0) return labels(sd, {K::Hyperelliptic, K::Connected});
    return labels(sd, {K::Hyperelliptic, K::EvenSpin, K::OddSpin});
  }
  bool all_even = std::all_of(m.begin(), m.end(), [](long x) { return x % 2 == 0; });
  if (all_even) return labels(sd, {K::EvenSpin, K::OddSpin});
  return labels(sd, {K::Connected});
}

bool quadratic_hyperelliptic_pattern(const std::vector<long>& k) {
  // Q(4j+2, 4k+2), Q(4j+2, 2k-1, 2k-1) or Q(2j-1, 2j-1, 2k-1, 2k-1), j,k >= 0.
  auto is_4j2 = [](long x) { return x >= 2 && (x - 2) % 4 == 0; };
  auto is_odd_ge_m1 = [](long x) { return x >= -1 && x % 2 != 0; };
  if (k.size() == 2) return is_4j2(k[0]) && is_4j2(k[1]);
  if (k.size() == 3) {
    // sorted descending; the two equal odd entries are the smaller pair
    // unless the 4j+2 entry is the smallest.
    for (size_t i = 0; i < 3; ++i) {
      size_t a = (i + 1) % 3, b = (i + 2) % 3;
      if (is_4j2(k[i]) && is_odd_ge_m1(k[a]) && k[a] == k[b]) return true;
    }
    return false;
  }
  if (k.size() == 4)
    return is_odd_ge_m1(k[0]) && k[0] == k[1] && is_odd_ge_m1(k[2]) && k[2] == k[3];
  return false;
}

std::vector<ComponentLabel> classify_quadratic(const SingularityData& sd,
                                               const std::vector<long>& k) {
  long g = sd.genus;
  using K = ComponentKind;
  if (g == 0) return labels(sd, {K::Connected});
  if (g == 1) {
    if (k.empty() || same_multiset(k, {1, -1})) return {};  // empty strata
    return labels(sd, {K::Connected});
  }
  if (g == 2) {
    if (same_multiset(k, {4}) || same_multiset(k, {3, 1})) return {};
    if (same_multiset(k, {2, 2})) return labels(sd, {K::Hyperelliptic});
  }
  if (g == 3) {
    if (same_multiset(k, {9, -1}) || same_multiset(k, {6, 3, -1}) ||
        same_multiset(k, {3, 3, 3, -1}))
      return labels(sd, {K::Regular, K::Irregular});
  }
  if (g == 4) {
    if (same_multiset(k, {6, 6}) || same_multiset(k, {6, 3, 3}) ||
        same_multiset(k, {3, 3, 3, 3}))
      return labels(sd, {K::Hyperelliptic, K::Regular, K::Irregular});
    if (same_multiset(k, {12}) || same_multiset(k, {9, 3}))
      return labels(sd, {K::Regular, K::Irregular});
  }
  if (quadratic_hyperelliptic_pattern(k))
    return labels(sd, {K::Hyperelliptic, K::Connected});
  return labels(sd, {K::Connected});
}

}  // namespace

std::vector<ComponentLabel> classify_components(const SingularityData& sd) {
  std::vector<long> stripped;
  for (long x : sd.orders)
    if (x != 0) stripped.push_back(x);
  // Keep the stratum's genus; lookups ignore regular marked points.
  if (sd.abelian) return classify_abelian(sd, stripped);
  return classify_quadratic(sd, stripped);
}

}  // namespace rauzy
