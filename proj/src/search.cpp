#include "bcj/search.hpp"

#include <algorithm>
#include <chrono>
#include <cstdint>
#include <limits>
#include <thread>
#include <unordered_map>
#include <unordered_set>

#include "bcj/errors.hpp"
#include "bcj/orbits.hpp"

namespace bcj {

namespace {

VarMask a_var(int genus, int i) {
  (void)genus;
  return VarMask{1} << i;
}
VarMask b_var(int genus, int i) { return VarMask{1} << (genus + i); }

}  // namespace

std::vector<FamilyElement> cokernel_families(int genus) {
  require_genus(genus);
  std::vector<FamilyElement> out;
  const int g = genus;
  auto name = [](char c, int i) { return std::string(1, c) + std::to_string(i + 1); };
  for (int i = 0; i < g; ++i) {
    for (int j = 0; j < g; ++j) {
      if (i == j) continue;
      const VarMask aibi = a_var(g, i) | b_var(g, i);
      const VarMask ajbj = a_var(g, j) | b_var(g, j);
      const VarMask aibj = a_var(g, i) | b_var(g, j);
      WedgeElem e = wedge_monomials(g, aibi, aibj) + wedge_monomials(g, ajbj, aibj);
      out.push_back({std::move(e),
                     name('a', i) + "*" + name('b', i) + " ^ " + name('a', i) + "*" + name('b', j) +
                         " + " + name('a', j) + "*" + name('b', j) + " ^ " + name('a', i) + "*" +
                         name('b', j),
                     kFamilyProvenanceTwoIndex});
    }
  }
  if (g < 4) return out;
  for (int i = 0; i < g; ++i) {
    for (int j = 0; j < g; ++j) {
      for (int k = 0; k < g; ++k) {
        for (int l = 0; l < g; ++l) {
          if (i == j || i == k || i == l || j == k || j == l || k == l) continue;
          const VarMask m1 = a_var(g, i) | b_var(g, j);
          const VarMask m2 = b_var(g, i) | a_var(g, k);
          const VarMask m3 = a_var(g, l) | b_var(g, j);
          const VarMask m4 = b_var(g, l) | a_var(g, k);
          WedgeElem e = wedge_monomials(g, m1, m2) + wedge_monomials(g, m3, m4);
          out.push_back({std::move(e),
                         name('a', i) + "*" + name('b', j) + " ^ " + name('b', i) + "*" +
                             name('a', k) + " + " + name('a', l) + "*" + name('b', j) + " ^ " +
                             name('b', l) + "*" + name('a', k),
                         kFamilyProvenanceFourIndex});
        }
      }
    }
  }
  return out;
}

std::vector<std::size_t> cubic_type_slots(int genus) {
  require_genus(genus);
  const WedgeSpace space(genus);
  std::vector<std::size_t> out;
  for (int i = 0; i < genus; ++i) {
    for (int x = 0; x < 2 * genus; ++x) {
      for (int y = 0; y < 2 * genus; ++y) {
        if (x == y || x % genus == i || y % genus == i) continue;
        const VarMask m1 = a_var(genus, i) | (VarMask{1} << x);
        const VarMask m2 = b_var(genus, i) | (VarMask{1} << y);
        out.push_back(space.slot_of_monomials(m1, m2));
      }
    }
  }
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

namespace {

struct Ordinal {
  std::size_t first = std::numeric_limits<std::size_t>::max();
  std::size_t second = std::numeric_limits<std::size_t>::max();
  bool operator<(const Ordinal& o) const {
    return first != o.first ? first < o.first : second < o.second;
  }
};

struct WorkerResult {
  gf2::SpanBasis span{0};
  std::size_t cycles = 0;
  std::size_t distinct = 0;
  // Per orbit class: earliest cycle after which the private span meets it.
  std::vector<Ordinal> hits;
};

// Interned B_2 coordinates of every descriptor's sigma value.
struct SigmaTable {
  std::vector<std::uint32_t> id_of_descriptor;
  std::vector<std::vector<std::uint32_t>> coords;
};

SigmaTable intern_sigmas(const std::vector<SearchDescriptor>& descs) {
  SigmaTable table;
  std::unordered_map<gf2::BitVec, std::uint32_t, gf2::BitVecHash> ids;
  for (const auto& d : descs) {
    const gf2::BitVec c = b2_coords(require_degree(sigma(d.curve), 2));
    auto [it, fresh] = ids.emplace(c, static_cast<std::uint32_t>(table.coords.size()));
    if (fresh) {
      std::vector<std::uint32_t> idx;
      for (std::size_t p : c.set_positions()) idx.push_back(static_cast<std::uint32_t>(p));
      table.coords.push_back(std::move(idx));
    }
    table.id_of_descriptor.push_back(it->second);
  }
  return table;
}

void run_worker(const WedgeSpace& space, const std::vector<SearchDescriptor>& descs,
                const SigmaTable& table, const std::vector<OrbitClass>& classes,
                std::size_t stride, std::size_t offset, Disjointness disjointness,
                WorkerResult& out) {
  out.span = gf2::SpanBasis(space.dimension());
  out.hits.assign(classes.size(), Ordinal{});
  std::unordered_set<std::uint64_t> seen;
  std::size_t unhit = classes.size();
  gf2::BitVec v(space.dimension());
  for_each_disjoint_pair(
      descs,
      [&](std::size_t i, std::size_t j) {
        ++out.cycles;
        std::uint32_t p = table.id_of_descriptor[i];
        std::uint32_t q = table.id_of_descriptor[j];
        if (p == q) return true;
        if (p > q) std::swap(p, q);
        if (!seen.insert((std::uint64_t{p} << 32) | q).second) return true;
        ++out.distinct;
        v = gf2::BitVec(space.dimension());
        wedge_indices(space, table.coords[p], table.coords[q], v);
        if (!out.span.insert(v) || unhit == 0) return true;
        for (std::size_t c = 0; c < classes.size(); ++c) {
          if (out.hits[c].first != std::numeric_limits<std::size_t>::max()) continue;
          for (std::size_t slot : classes[c].members) {
            if (out.span.contains_unit(slot)) {
              out.hits[c] = Ordinal{i, j};
              --unhit;
              break;
            }
          }
        }
        return true;
      },
      stride, offset, disjointness);
}

}  // namespace

ImageReport image_rank_report(const SearchParams& params) {
  if (params.genus < 2) throw GenusError("image_rank_report requires genus >= 2");
  require_genus(params.genus);
  if (params.workers < 1) throw ArgumentError("workers must be at least 1");
  const auto start = std::chrono::steady_clock::now();

  ImageReport report;
  report.params = params;
  report.dims = dims(params.genus);
  const WedgeSpace space(params.genus);
  const OrbitReport orbits = orbit_classes(params.genus);

  const auto descs = search_descriptors(SpineCycleParams{
      params.genus, params.max_support, params.include_bp, params.disjointness, true});
  report.descriptors = descs.size();
  const SigmaTable table = intern_sigmas(descs);

  const auto workers = static_cast<std::size_t>(params.workers);
  std::vector<WorkerResult> results(workers);
  if (workers == 1) {
    run_worker(space, descs, table, orbits.classes, 1, 0, params.disjointness, results[0]);
  } else {
    std::vector<std::thread> pool;
    for (std::size_t w = 0; w < workers; ++w) {
      pool.emplace_back([&, w] {
        run_worker(space, descs, table, orbits.classes, workers, w, params.disjointness,
                   results[w]);
      });
    }
    for (auto& t : pool) t.join();
  }

  report.span = gf2::SpanBasis(space.dimension());
  std::vector<Ordinal> hits(orbits.classes.size());
  for (const auto& r : results) {
    report.span.merge(r.span);
    report.cycles_enumerated += r.cycles;
    report.distinct_images += r.distinct;
    for (std::size_t c = 0; c < hits.size(); ++c) hits[c] = std::min(hits[c], r.hits[c]);
  }
  report.search_rank = report.span.rank();

  for (std::size_t s = 0; s < space.dimension(); ++s) {
    if (!space.slot_index_matched(s) && !report.span.contains_unit(s)) {
      report.missing_slots.push_back(s);
      report.missing.push_back(space.slot_name(s));
    }
  }
  for (std::size_t c = 0; c < hits.size(); ++c) {
    if (hits[c].first == std::numeric_limits<std::size_t>::max()) continue;
    report.orbit_hits[orbits.classes[c].label] =
        descs[hits[c].first].label + " | " + descs[hits[c].second].label;
  }

  const std::size_t g = static_cast<std::size_t>(params.genus);
  CokernelStats& ck = report.cokernel;
  ck.cubic_type_formula = g * (2 * g - 2) * (2 * g - 3);
  ck.family_span_formula = (g - 1) * (2 * g - 2) * (2 * g - 3);
  ck.cubic_gap_formula = ck.cubic_type_formula - ck.family_span_formula;
  ck.quadratic_bound_formula = 4 * g * g + 6 - 10 * g;

  const auto families = cokernel_families(params.genus);
  {
    gf2::SpanBasis four(space.dimension());
    for (const auto& f : families) {
      if (f.provenance == kFamilyProvenanceFourIndex) four.insert(f.element.coords());
    }
    ck.four_index_family_rank = four.rank();
  }
  if (params.include_families) {
    report.family_elements = families.size();
    for (const auto& f : families) report.span.insert(f.element.coords());
    report.family_rank_gain = report.span.rank() - report.search_rank;
  }

  const auto cubic = cubic_type_slots(params.genus);
  ck.cubic_type_slots = cubic.size();
  {
    gf2::SpanBasis extended = report.span;
    for (std::size_t s : cubic) extended.insert(gf2::BitVec::unit(space.dimension(), s));
    ck.cubic_type_uncovered = extended.rank() - report.span.rank();
  }

  report.rank = report.span.rank();
  report.codim = report.dims.dim_wedge - report.rank;
  report.elapsed_seconds =
      std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  return report;
}

}  // namespace bcj
