#include "bcj/orbits.hpp"

#include <algorithm>
#include <bit>
#include <map>
#include <numeric>

#include "bcj/errors.hpp"

namespace bcj {

const std::vector<OrbitPattern>& orbit_patterns() {
  static const std::vector<OrbitPattern> patterns = {
      {"I", {"a1*b1 ^ a2*b2"}},
      {"II", {"a1*b1 ^ a2*b3", "a1*b1 ^ a2*a3", "a1*b1 ^ b2*b3"}},
      {"III",
       {"a1*a2 ^ a3*a4", "a1*a2 ^ a3*b4", "a1*a2 ^ b3*b4", "a1*b2 ^ a3*b4", "b1*b2 ^ b3*b4"}},
      {"IV",
       {"a1*a2 ^ a1*a3", "a1*a2 ^ a1*b3", "a1*b2 ^ a1*b3", "a1*b2 ^ a3*b2", "a1*b2 ^ b2*b3",
        "b1*b2 ^ b1*b3"}},
      {"V", {"a1 ^ a2*b2", "b1 ^ a2*b2"}},
      {"VI", {"a1 ^ a1*a2", "a1 ^ a1*b2", "b1 ^ a2*b1", "b1 ^ b1*b2"}},
      {"VII",
       {"a1 ^ a2*a3", "a1 ^ a2*b3", "a1 ^ b2*b3", "b1 ^ a2*a3", "b1 ^ a2*b3", "b1 ^ b2*b3"}},
      {"VIII", {"1 ^ a1*b1"}},
      {"IX", {"1 ^ a1*a2", "1 ^ a1*b2", "1 ^ b1*b2"}},
      {"X", {"a1 ^ a2", "a1 ^ b2", "b1 ^ b2"}},
      {"XI", {"1 ^ a1", "1 ^ b1"}},
  };
  return patterns;
}

std::size_t OrbitReport::member_count() const {
  std::size_t n = 0;
  for (const auto& c : classes) n += c.members.size();
  return n;
}

const OrbitClass* OrbitReport::find(const std::string& label) const {
  for (const auto& c : classes) {
    if (c.label == label) return &c;
  }
  return nullptr;
}

namespace {

VarMask permute_mask(VarMask m, const std::vector<int>& var_perm) {
  VarMask out = 0;
  for (VarMask w = m; w != 0; w &= w - 1) {
    out |= VarMask{1} << var_perm[static_cast<std::size_t>(std::countr_zero(w))];
  }
  return out;
}

class DisjointSets {
 public:
  explicit DisjointSets(std::size_t n) : parent_(n) { std::iota(parent_.begin(), parent_.end(), 0); }
  std::size_t find(std::size_t x) {
    while (parent_[x] != x) {
      parent_[x] = parent_[parent_[x]];
      x = parent_[x];
    }
    return x;
  }
  void unite(std::size_t x, std::size_t y) {
    x = find(x);
    y = find(y);
    if (x != y) parent_[std::max(x, y)] = std::min(x, y);
  }

 private:
  std::vector<std::size_t> parent_;
};

// Highest handle index mentioned in a pattern element.
int max_handle(const std::string& element) {
  int best = 0;
  for (std::size_t i = 0; i < element.size(); ++i) {
    if ((element[i] == 'a' || element[i] == 'b') && i + 1 < element.size()) {
      best = std::max(best, element[i + 1] - '0');
    }
  }
  return best;
}

std::size_t label_rank(const std::string& label) {
  const auto& patterns = orbit_patterns();
  for (std::size_t i = 0; i < patterns.size(); ++i) {
    if (patterns[i].label == label) return i;
  }
  return patterns.size();
}

}  // namespace

std::size_t permute_slot(const WedgeSpace& space, std::size_t slot, const std::vector<int>& var_perm) {
  const auto [m1, m2] = space.monomials_of(slot);
  return space.slot_of_monomials(permute_mask(m1, var_perm), permute_mask(m2, var_perm));
}

OrbitReport orbit_classes(int genus) {
  if (genus < 2) throw GenusError("orbit_classes requires genus >= 2");
  const WedgeSpace space(genus);
  const std::size_t n = space.dimension();
  const auto g = static_cast<std::size_t>(genus);

  std::vector<std::vector<int>> generators;
  for (std::size_t i = 0; i < g; ++i) {
    std::vector<int> perm(2 * g);
    std::iota(perm.begin(), perm.end(), 0);
    std::swap(perm[i], perm[g + i]);
    generators.push_back(std::move(perm));
  }
  for (std::size_t i = 0; i < g; ++i) {
    for (std::size_t j = i + 1; j < g; ++j) {
      std::vector<int> perm(2 * g);
      std::iota(perm.begin(), perm.end(), 0);
      std::swap(perm[i], perm[j]);
      std::swap(perm[g + i], perm[g + j]);
      generators.push_back(std::move(perm));
    }
  }

  std::vector<bool> in_w(n);
  for (std::size_t s = 0; s < n; ++s) in_w[s] = !space.slot_index_matched(s);

  OrbitReport report;
  report.genus = genus;
  DisjointSets sets(n);
  for (std::size_t s = 0; s < n; ++s) {
    if (!in_w[s]) continue;
    for (const auto& perm : generators) {
      const std::size_t t = permute_slot(space, s, perm);
      if (!in_w[t]) {
        report.errors.push_back("generator maps " + space.slot_name(s) +
                                " to index-matched " + space.slot_name(t));
        continue;
      }
      sets.unite(s, t);
    }
  }

  std::map<std::size_t, OrbitClass> components;
  for (std::size_t s = 0; s < n; ++s) {
    if (in_w[s]) components[sets.find(s)].members.push_back(s);
  }

  for (const auto& pattern : orbit_patterns()) {
    for (const auto& element : pattern.elements) {
      if (max_handle(element) > genus) continue;
      const auto slots = parse_wedge(genus, element).slots();
      const std::size_t slot = slots.front();
      if (!in_w[slot]) {
        report.errors.push_back("pattern element " + element + " is index-matched");
        continue;
      }
      OrbitClass& cls = components.at(sets.find(slot));
      if (cls.label.empty()) {
        cls.label = pattern.label;
        cls.representative = element;
      } else if (cls.label != pattern.label) {
        report.errors.push_back("component of " + element + " already labeled " + cls.label +
                                ", pattern says " + pattern.label);
      }
    }
  }

  for (auto& [root, cls] : components) {
    if (cls.label.empty()) {
      cls.label = "?";
      cls.representative = space.slot_name(cls.members.front());
      report.errors.push_back("component containing " + cls.representative +
                              " matches no catalog pattern");
    }
    report.classes.push_back(std::move(cls));
  }
  std::stable_sort(report.classes.begin(), report.classes.end(),
                   [](const OrbitClass& x, const OrbitClass& y) {
                     return label_rank(x.label) < label_rank(y.label);
                   });
  return report;
}

}  // namespace bcj
