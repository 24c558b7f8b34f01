#include "bcj/cycles.hpp"

#include <algorithm>
#include <array>
#include <bit>
#include <map>
#include <set>

#include "bcj/errors.hpp"

namespace bcj {

namespace {

template <class... Ts>
struct overloaded : Ts... {
  using Ts::operator()...;
};
template <class... Ts>
overloaded(Ts...) -> overloaded<Ts...>;

std::uint64_t handle_mask_of(int genus, std::uint64_t coords) {
  const std::uint64_t low = genus >= 64 ? ~0ULL : (1ULL << genus) - 1;
  return (coords & low) | ((coords >> genus) & low);
}

int mask_intersect(int genus, std::uint64_t x, std::uint64_t y) {
  const std::uint64_t low = (1ULL << genus) - 1;
  const std::uint64_t t = ((x & low) & (y >> genus)) ^ ((x >> genus) & (y & low));
  return std::popcount(t) & 1;
}

}  // namespace

BoolPoly sigma(const CurveDescriptor& c) {
  return std::visit([](const auto& d) { return sigma(d); }, c);
}

HandleSet support(const CurveDescriptor& c) {
  return std::visit(overloaded{
                        [](const SeparatingTwist& t) { return t.basis.support(); },
                        [](const BPMap& m) { return m.basis.support() | support(m.C); },
                    },
                    c);
}

std::string describe(const CurveDescriptor& c) {
  auto basis_text = [](const SubsurfaceBasis& b) {
    std::string s;
    for (const auto& [x, y] : b.pairs) {
      if (!s.empty()) s += ";";
      s += to_string(x) + "," + to_string(y);
    }
    return s;
  };
  return std::visit(overloaded{
                        [&](const SeparatingTwist& t) {
                          return t.label.empty() ? "sep(" + basis_text(t.basis) + ")" : t.label;
                        },
                        [&](const BPMap& m) {
                          return m.label.empty()
                                     ? "bp(" + basis_text(m.basis) + ";C=" + to_string(m.C) + ")"
                                     : m.label;
                        },
                    },
                    c);
}

std::string to_string(Disjointness d) {
  return d == Disjointness::kHandleSupport ? "support" : "orthogonal";
}

Disjointness parse_disjointness(const std::string& text) {
  if (text == "support") return Disjointness::kHandleSupport;
  if (text == "orthogonal") return Disjointness::kSymplecticOrthogonal;
  throw ArgumentError("unknown disjointness predicate '" + text + "' (expected support|orthogonal)");
}

std::string DisjointnessCertificate::to_string() const {
  switch (kind) {
    case Kind::kSupportDisjoint:
      return "support-disjoint";
    case Kind::kSymplecticOrthogonal:
      return "symplectic-orthogonal";
    case Kind::kAsserted:
      break;
  }
  return "asserted:" + source;
}

void check_certificate(const AbelianCycle& c) {
  using Kind = DisjointnessCertificate::Kind;
  if (c.certificate.kind == Kind::kAsserted) {
    if (c.certificate.source.empty()) {
      throw DisjointnessError("asserted certificate without provenance");
    }
    return;
  }
  if (c.certificate.kind == Kind::kSymplecticOrthogonal) {
    const auto* t1 = std::get_if<SeparatingTwist>(&c.first);
    const auto* t2 = std::get_if<SeparatingTwist>(&c.second);
    if (t1 == nullptr || t2 == nullptr) {
      throw DisjointnessError("symplectic-orthogonal certificate needs two separating twists");
    }
    for (const auto& [a1, b1] : t1->basis.pairs) {
      for (const auto& [a2, b2] : t2->basis.pairs) {
        if (intersect(a1, a2) != 0 || intersect(a1, b2) != 0 || intersect(b1, a2) != 0 ||
            intersect(b1, b2) != 0) {
          throw DisjointnessError("cycle " + describe(c.first) + " | " + describe(c.second) +
                                  ": bases are not orthogonal");
        }
      }
    }
    return;
  }
  if (!support(c.first).disjoint(support(c.second))) {
    throw DisjointnessError("cycle " + describe(c.first) + " | " + describe(c.second) +
                            ": supports overlap, support-disjoint certificate fails");
  }
}

WedgeElem cycle_image(const AbelianCycle& c) {
  check_certificate(c);
  return wedge(require_degree(sigma(c.first), 2), require_degree(sigma(c.second), 2));
}

namespace {

// Every coordinate mask supported inside the handle set `handles`.
std::vector<std::uint64_t> classes_on(int genus, std::uint64_t handles) {
  std::vector<std::uint64_t> positions;
  for (std::uint64_t w = handles; w != 0; w &= w - 1) {
    const int i = std::countr_zero(w);
    positions.push_back(1ULL << i);
    positions.push_back(1ULL << (genus + i));
  }
  std::vector<std::uint64_t> out;
  const std::uint64_t count = 1ULL << positions.size();
  out.reserve(count);
  for (std::uint64_t bits = 0; bits < count; ++bits) {
    std::uint64_t m = 0;
    for (std::size_t k = 0; k < positions.size(); ++k) {
      if ((bits >> k) & 1u) m |= positions[k];
    }
    out.push_back(m);
  }
  return out;
}

void for_each_handle_subset(int genus, int max_size, const std::function<void(std::uint64_t)>& f) {
  // Gosper's hack per subset size.
  for (int k = 1; k <= max_size && k <= genus; ++k) {
    std::uint64_t s = (1ULL << k) - 1;
    const std::uint64_t limit = 1ULL << genus;
    while (s < limit) {
      f(s);
      const std::uint64_t c = s & (~s + 1);
      const std::uint64_t r = s + c;
      s = (((r ^ s) >> 2) / c) | r;
    }
  }
}

}  // namespace

std::vector<Spine> enumerate_spines(int genus, int max_support) {
  require_genus(genus);
  if (max_support < 1) throw ArgumentError("max_support must be at least 1");
  if (max_support > 4) throw ArgumentError("max_support above 4 is not supported");
  std::vector<std::pair<std::uint64_t, std::uint64_t>> found;
  for_each_handle_subset(genus, max_support, [&](std::uint64_t handles) {
    const auto classes = classes_on(genus, handles);
    for (std::uint64_t x : classes) {
      for (std::uint64_t y : classes) {
        if ((handle_mask_of(genus, x) | handle_mask_of(genus, y)) != handles) continue;
        if (mask_intersect(genus, x, y) != 1) continue;
        found.emplace_back(x, y);
      }
    }
  });
  std::sort(found.begin(), found.end());
  std::vector<Spine> out;
  out.reserve(found.size());
  for (const auto& [x, y] : found) {
    out.push_back(Spine{HClass::from_mask(genus, x), HClass::from_mask(genus, y)});
  }
  return out;
}

std::vector<BPMap> enumerate_bp_descriptors(int genus, int max_support) {
  std::vector<BPMap> out;
  for (const Spine& s : enumerate_spines(genus, max_support)) {
    const std::uint64_t spine_handles = s.support().bits();
    std::vector<std::uint64_t> candidates;
    for_each_handle_subset(genus, max_support, [&](std::uint64_t handles) {
      if (std::popcount(handles | spine_handles) > max_support) return;
      for (std::uint64_t c : classes_on(genus, handles)) {
        if (handle_mask_of(genus, c) == handles) candidates.push_back(c);
      }
    });
    std::sort(candidates.begin(), candidates.end());
    for (std::uint64_t c : candidates) {
      if (mask_intersect(genus, c, s.x.mask()) != 0 || mask_intersect(genus, c, s.y.mask()) != 0) {
        continue;
      }
      SubsurfaceBasis basis{genus, {{s.x, s.y}}};
      const HClass C = HClass::from_mask(genus, c);
      BPMap bp{basis, C, {}};
      if (sigma(bp).degree() <= 2) out.push_back(std::move(bp));
    }
  }
  return out;
}

std::vector<SearchDescriptor> search_descriptors(const SpineCycleParams& params) {
  std::vector<SearchDescriptor> out;
  std::set<std::array<std::uint64_t, 3>> planes;
  for (Spine& s : enumerate_spines(params.genus, params.max_support)) {
    if (params.one_per_plane) {
      std::array<std::uint64_t, 3> key{s.x.mask(), s.y.mask(), s.x.mask() ^ s.y.mask()};
      std::sort(key.begin(), key.end());
      if (!planes.insert(key).second) continue;
    }
    SeparatingTwist t{SubsurfaceBasis{params.genus, {{s.x, s.y}}}, {}};
    const HandleSet sup = s.support();
    std::string label = "sep(" + to_string(s.x) + "," + to_string(s.y) + ")";
    out.push_back(SearchDescriptor{std::move(t), sup, std::move(label), s});
  }
  if (params.include_bp) {
    for (BPMap& m : enumerate_bp_descriptors(params.genus, params.max_support)) {
      const HandleSet sup = m.basis.support() | support(m.C);
      std::string label = describe(m);
      out.push_back(SearchDescriptor{std::move(m), sup, std::move(label), std::nullopt});
    }
  }
  return out;
}

void for_each_disjoint_pair(const std::vector<SearchDescriptor>& descriptors,
                            const std::function<bool(std::size_t, std::size_t)>& visit,
                            std::size_t stride, std::size_t offset, Disjointness disjointness) {
  if (stride == 0) throw ArgumentError("stride must be positive");
  if (disjointness == Disjointness::kSymplecticOrthogonal) {
    // Plain quadratic scan over packed coordinate masks.
    const std::size_t n = descriptors.size();
    std::vector<std::uint64_t> xs(n), ys(n), sup(n);
    std::vector<bool> is_spine(n);
    int genus = 1;
    for (std::size_t i = 0; i < n; ++i) {
      sup[i] = descriptors[i].support.bits();
      if (descriptors[i].spine) {
        is_spine[i] = true;
        xs[i] = descriptors[i].spine->x.mask();
        ys[i] = descriptors[i].spine->y.mask();
        genus = descriptors[i].spine->x.genus();
      }
    }
    for (std::size_t i = offset; i < n; i += stride) {
      for (std::size_t j = i + 1; j < n; ++j) {
        bool ok = (sup[i] & sup[j]) == 0;
        if (!ok && is_spine[i] && is_spine[j]) {
          ok = mask_intersect(genus, xs[i], xs[j]) == 0 && mask_intersect(genus, xs[i], ys[j]) == 0 &&
               mask_intersect(genus, ys[i], xs[j]) == 0 && mask_intersect(genus, ys[i], ys[j]) == 0;
        }
        if (ok && !visit(i, j)) return;
      }
    }
    return;
  }
  // Bucket by support so only compatible buckets are scanned.
  std::map<std::uint64_t, std::vector<std::size_t>> buckets;
  for (std::size_t i = 0; i < descriptors.size(); ++i) {
    buckets[descriptors[i].support.bits()].push_back(i);
  }
  for (std::size_t i = offset; i < descriptors.size(); i += stride) {
    const std::uint64_t si = descriptors[i].support.bits();
    for (const auto& [mask, members] : buckets) {
      if ((mask & si) != 0) continue;
      const auto first = std::upper_bound(members.begin(), members.end(), i);
      for (auto it = first; it != members.end(); ++it) {
        if (!visit(i, *it)) return;
      }
    }
  }
}

std::size_t enumerate_spine_cycles(const SpineCycleParams& params,
                                   const std::function<bool(const AbelianCycle&)>& visit) {
  const auto descriptors = search_descriptors(params);
  std::size_t emitted = 0;
  for_each_disjoint_pair(
      descriptors,
      [&](std::size_t i, std::size_t j) {
        ++emitted;
        const bool handle_disjoint = descriptors[i].support.disjoint(descriptors[j].support);
        return visit(AbelianCycle{descriptors[i].curve, descriptors[j].curve,
                                  handle_disjoint ? DisjointnessCertificate::support_disjoint()
                                                  : DisjointnessCertificate::symplectic_orthogonal(),
                                  descriptors[i].label + " | " + descriptors[j].label});
      },
      1, 0, params.disjointness);
  return emitted;
}

}  // namespace bcj
