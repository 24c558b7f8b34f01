#include "bcj/casson_morita.hpp"

#include <algorithm>
#include <thread>

#include "bcj/bcjmap.hpp"
#include "bcj/detail/checked.hpp"
#include "bcj/errors.hpp"
#include "bcj/random.hpp"
#include "bcj/wedge.hpp"

namespace bcj {

std::size_t cm_symbol_count(int genus) {
  const auto n = static_cast<std::size_t>(2 * genus);
  return n * (n + 1) / 2;
}

std::uint16_t cm_symbol_id(int genus, CMSymbol s) {
  const int n = 2 * genus;
  if (s.p < 0 || s.q >= n || s.p > s.q) {
    throw DimensionError("symbol l(" + std::to_string(s.p) + "," + std::to_string(s.q) +
                         ") is not a normal-form symbol at genus " + std::to_string(genus));
  }
  return static_cast<std::uint16_t>(s.p * n - s.p * (s.p - 1) / 2 + (s.q - s.p));
}

CMSymbol cm_symbol_of(int genus, std::uint16_t id) {
  const int n = 2 * genus;
  int rest = id;
  for (int p = 0; p < n; ++p) {
    if (rest < n - p) return CMSymbol{p, p + rest};
    rest -= n - p;
  }
  throw DimensionError("symbol id " + std::to_string(id) + " out of range");
}

std::string cm_symbol_name(int genus, CMSymbol s) {
  return "l(" + variable_name(genus, static_cast<std::size_t>(s.p)) + "," +
         variable_name(genus, static_cast<std::size_t>(s.q)) + ")";
}

CMPoly CMPoly::constant(int genus, BigInt c) {
  CMPoly out(genus);
  out.add_term({}, c);
  return out;
}

CMPoly CMPoly::symbol(int genus, CMSymbol s) {
  CMPoly out(genus);
  out.add_term({cm_symbol_id(genus, s)}, BigInt(1));
  return out;
}

int CMPoly::degree() const {
  int d = -1;
  for (const auto& [m, c] : terms_) d = std::max(d, static_cast<int>(m.size()));
  return d;
}

void CMPoly::add_term(CMMonomial m, const BigInt& c) {
  if (c == 0) return;
  auto [it, fresh] = terms_.try_emplace(std::move(m), c);
  if (!fresh) {
    it->second += c;
    if (it->second == 0) terms_.erase(it);
  }
}

CMPoly& CMPoly::operator+=(const CMPoly& other) {
  require_same_genus(genus_, other.genus_, "CMPoly addition");
  for (const auto& [m, c] : other.terms_) add_term(m, c);
  return *this;
}

CMPoly& CMPoly::operator-=(const CMPoly& other) {
  require_same_genus(genus_, other.genus_, "CMPoly subtraction");
  for (const auto& [m, c] : other.terms_) add_term(m, -c);
  return *this;
}

CMPoly CMPoly::operator-() const { return scaled(BigInt(-1)); }

CMPoly CMPoly::scaled(const BigInt& c) const {
  CMPoly out(genus_);
  if (c == 0) return out;
  for (const auto& [m, coeff] : terms_) out.terms_.emplace(m, coeff * c);
  return out;
}

CMPoly operator*(const CMPoly& lhs, const CMPoly& rhs) {
  require_same_genus(lhs.genus_, rhs.genus_, "CMPoly product");
  CMPoly out(lhs.genus_);
  CMMonomial m;
  for (const auto& [m1, c1] : lhs.terms_) {
    for (const auto& [m2, c2] : rhs.terms_) {
      m.resize(m1.size() + m2.size());
      std::merge(m1.begin(), m1.end(), m2.begin(), m2.end(), m.begin());
      out.add_term(m, c1 * c2);
    }
  }
  return out;
}

CMPoly cm_add(const CMPoly& x, const CMPoly& y) { return x + y; }
CMPoly cm_mul(const CMPoly& x, const CMPoly& y) { return x * y; }

namespace {

// e_p . e_q under the integral form with a_i . b_i = +1.
int basis_pairing(int genus, int p, int q) {
  if (p < genus && q == p + genus) return 1;
  if (p >= genus && q == p - genus) return -1;
  return 0;
}

}  // namespace

CMPoly cm_generator(const ZHClass& u, const ZHClass& v) {
  require_same_genus(u.genus(), v.genus(), "cm_generator");
  const int g = u.genus();
  CMPoly out(g);
  BigInt constant = 0;
  for (int p = 0; p < 2 * g; ++p) {
    const std::int64_t up = u.coeff(static_cast<std::size_t>(p));
    if (up == 0) continue;
    for (int q = 0; q < 2 * g; ++q) {
      const std::int64_t vq = v.coeff(static_cast<std::size_t>(q));
      if (vq == 0) continue;
      const BigInt c = BigInt(up) * vq;
      if (p <= q) {
        out.add_term({cm_symbol_id(g, {p, q})}, c);
      } else {
        // l(e_p, e_q) = l(e_q, e_p) + e_q . e_p
        out.add_term({cm_symbol_id(g, {q, p})}, c);
        constant += c * basis_pairing(g, q, p);
      }
    }
  }
  out.add_term({}, constant);
  return out;
}

CMPoly rho_separating(const ZSubsurfaceBasis& basis) {
  if (const BasisCheck check = is_symplectic_basis(basis); !check) {
    throw BasisError("rho_separating: " + check.diagnostic);
  }
  const int g = basis.genus;
  CMPoly out(g);
  const auto& pairs = basis.pairs;
  for (const auto& [A, B] : pairs) {
    out -= cm_generator(A, A) * cm_generator(B, B) - cm_generator(A, B) * cm_generator(B, A);
  }
  for (std::size_t i = 0; i < pairs.size(); ++i) {
    for (std::size_t j = i + 1; j < pairs.size(); ++j) {
      const auto& [Ai, Bi] = pairs[i];
      const auto& [Aj, Bj] = pairs[j];
      const CMPoly bracket = cm_generator(Ai, Aj) * cm_generator(Bi, Bj) -
                             cm_generator(Ai, Bj) * cm_generator(Aj, Bi);
      out -= bracket.scaled(BigInt(2));
    }
  }
  return out;
}

BoolPoly mu(const CMPoly& x) {
  const int g = x.genus();
  std::vector<VarMask> monomials;
  for (const auto& [m, c] : x.terms()) {
    if (c % 2 == 0) continue;
    VarMask mask = 0;
    bool survives = true;
    for (std::uint16_t id : m) {
      const CMSymbol s = cm_symbol_of(g, id);
      if (s.p != s.q) {
        survives = false;
        break;
      }
      mask |= VarMask{1} << s.p;
    }
    if (survives) monomials.push_back(mask);
  }
  return BoolPoly(g, std::move(monomials));
}

LinkingMatrix::LinkingMatrix(int genus, std::vector<std::vector<std::int64_t>> entries)
    : genus_(genus), entries_(std::move(entries)) {
  require_genus(genus);
  const auto n = static_cast<std::size_t>(2 * genus);
  if (entries_.size() != n) {
    throw DimensionError("linking matrix must have " + std::to_string(n) + " rows, got " +
                         std::to_string(entries_.size()));
  }
  for (std::size_t p = 0; p < n; ++p) {
    if (entries_[p].size() != n) {
      throw DimensionError("linking matrix row " + std::to_string(p) + " must have " +
                           std::to_string(n) + " entries");
    }
  }
  for (std::size_t p = 0; p < n; ++p) {
    for (std::size_t q = 0; q < n; ++q) {
      const int j = basis_pairing(genus, static_cast<int>(p), static_cast<int>(q));
      const std::int64_t diff = detail::checked_sub(entries_[q][p], entries_[p][q]);
      if (diff != j) {
        throw ConsistencyError(
            "linking matrix violates L^T - L = J at (" + variable_name(genus, p) + "," +
            variable_name(genus, q) + "): L[" + variable_name(genus, q) + "][" +
            variable_name(genus, p) + "] - L[" + variable_name(genus, p) + "][" +
            variable_name(genus, q) + "] = " + std::to_string(diff) +
            ", expected " + std::to_string(j));
      }
    }
  }
}

LinkingMatrix LinkingMatrix::standard_model(int genus) {
  const auto n = static_cast<std::size_t>(2 * genus);
  std::vector<std::vector<std::int64_t>> L(n, std::vector<std::int64_t>(n, 0));
  for (int i = 0; i < genus; ++i) L[static_cast<std::size_t>(genus + i)][static_cast<std::size_t>(i)] = 1;
  return LinkingMatrix(genus, std::move(L));
}

LinkingMatrix LinkingMatrix::random_valid(int genus, std::uint64_t seed, std::int64_t bound) {
  auto L = standard_model(genus).entries_;
  Rng rng(seed);
  for (std::size_t p = 0; p < L.size(); ++p) {
    for (std::size_t q = p; q < L.size(); ++q) {
      const std::int64_t s = rng.between(-bound, bound);
      L[p][q] += s;
      if (q != p) L[q][p] += s;
    }
  }
  return LinkingMatrix(genus, std::move(L));
}

BigInt epsilon(const LinkingMatrix& L, const CMPoly& x) {
  require_same_genus(L.genus(), x.genus(), "epsilon");
  BigInt total = 0;
  for (const auto& [m, c] : x.terms()) {
    BigInt term = c;
    for (std::uint16_t id : m) {
      const CMSymbol s = cm_symbol_of(x.genus(), id);
      term *= L(static_cast<std::size_t>(s.p), static_cast<std::size_t>(s.q));
    }
    total += term;
  }
  return total;
}

bool selflink_eval(const LinkingMatrix& L, const BoolPoly& p) {
  require_same_genus(L.genus(), p.genus(), "selflink_eval");
  const auto n = static_cast<std::size_t>(2 * L.genus());
  gf2::BitVec values(n);
  for (std::size_t k = 0; k < n; ++k) values.set(k, (L(k, k) & 1) != 0);
  return evaluate(p, SelfLinkingForm(L.genus(), values));
}

std::string to_string(const CMPoly& x) {
  if (x.is_zero()) return "0";
  std::vector<const std::pair<const CMMonomial, BigInt>*> order;
  for (const auto& t : x.terms()) order.push_back(&t);
  std::stable_sort(order.begin(), order.end(),
                   [](const auto* l, const auto* r) { return l->first.size() > r->first.size(); });
  std::string out;
  for (const auto* t : order) {
    const CMMonomial& m = t->first;
    const BigInt& c = t->second;
    const bool negative = c < 0;
    const BigInt magnitude = negative ? BigInt(-c) : c;
    if (out.empty()) {
      if (negative) out += "-";
    } else {
      out += negative ? " - " : " + ";
    }
    std::string body;
    for (std::size_t k = 0; k < m.size();) {
      std::size_t run = 1;
      while (k + run < m.size() && m[k + run] == m[k]) ++run;
      if (!body.empty()) body += "*";
      body += cm_symbol_name(x.genus(), cm_symbol_of(x.genus(), m[k]));
      if (run > 1) body += "^" + std::to_string(run);
      k += run;
    }
    if (body.empty()) {
      out += magnitude.str();
    } else {
      if (magnitude != 1) out += magnitude.str() + "*";
      out += body;
    }
  }
  return out;
}

ZSubsurfaceBasis transvect(const ZSubsurfaceBasis& s, const ZHClass& v) {
  ZSubsurfaceBasis out = s;
  auto move = [&](ZHClass& x) {
    const std::int64_t t = intersect(x, v);
    if (t != 0) x += v.scaled(t);
  };
  for (auto& [A, B] : out.pairs) {
    move(A);
    move(B);
  }
  return out;
}

namespace {

ZHClass random_small_class(int genus, Rng& rng) {
  // Nonzero, supported on at most two handles, entries in [-1, 1].
  std::vector<std::int64_t> coords(static_cast<std::size_t>(2 * genus), 0);
  const int handles = std::min(genus, 2);
  bool any = false;
  while (!any) {
    for (int k = 0; k < handles; ++k) {
      const auto h = static_cast<std::size_t>(rng.below(static_cast<std::uint64_t>(genus)));
      coords[h] = rng.between(-1, 1);
      coords[h + static_cast<std::size_t>(genus)] = rng.between(-1, 1);
    }
    any = std::any_of(coords.begin(), coords.end(), [](std::int64_t c) { return c != 0; });
  }
  return ZHClass(genus, std::move(coords));
}

std::vector<int> random_handles(int genus, int count, Rng& rng) {
  std::vector<int> all(static_cast<std::size_t>(genus));
  for (int i = 0; i < genus; ++i) all[static_cast<std::size_t>(i)] = i + 1;
  for (std::size_t i = all.size(); i > 1; --i) {
    std::swap(all[i - 1], all[rng.below(i)]);
  }
  all.resize(static_cast<std::size_t>(count));
  std::sort(all.begin(), all.end());
  return all;
}

std::string describe_basis(const ZSubsurfaceBasis& s) {
  std::string out = "[";
  for (const auto& [A, B] : s.pairs) {
    if (out.size() > 1) out += "; ";
    out += "(" + to_string(A) + ", " + to_string(B) + ")";
  }
  return out + "]";
}

}  // namespace

ZSubsurfaceBasis random_integral_basis(int genus, int h, std::uint64_t seed, int moves) {
  require_genus(genus);
  if (h < 0 || h > genus) throw ArgumentError("subsurface genus must lie in [0, genus]");
  Rng rng(seed);
  ZSubsurfaceBasis basis = standard_zbasis(genus, random_handles(genus, h, rng));
  for (int k = 0; k < moves; ++k) basis = transvect(basis, random_small_class(genus, rng));
  return basis;
}

bool DiagramReport::passed() const {
  return std::all_of(checks.begin(), checks.end(), [](const DiagramCheck& c) { return c.passed(); });
}

namespace {

constexpr std::size_t kMaxWitnesses = 5;

struct TrialOutcome {
  // Per check: empty when the trial passed or was skipped.
  std::vector<std::string> failure;
  std::vector<bool> ran;
};

TrialOutcome run_trial(int g, std::uint64_t seed) {
  TrialOutcome out;
  out.failure.assign(4, {});
  out.ran.assign(4, false);
  Rng rng(seed);
  const int h = 1 + static_cast<int>(rng.below(static_cast<std::uint64_t>(std::min(g, 3))));
  const ZSubsurfaceBasis basis = random_integral_basis(g, h, rng.next());
  const SeparatingTwist twist{basis.mod2(), {}};
  const CMPoly rho = rho_separating(basis);
  const BoolPoly s = sigma(twist);

  // (a) triangle
  out.ran[0] = true;
  if (const BoolPoly m = mu(rho); m != s) {
    out.failure[0] = "basis " + describe_basis(basis) + ": mu(rho) = " + to_string(m) +
                     ", sigma = " + to_string(s);
  }

  // (b) mu(l(u,u)) == bar(u)
  out.ran[1] = true;
  {
    std::vector<std::int64_t> coords(static_cast<std::size_t>(2 * g));
    for (auto& c : coords) c = rng.between(-3, 3);
    const ZHClass u(g, coords);
    const BoolPoly lhs = mu(cm_generator(u, u));
    const BoolPoly rhs = bar(u.mod2());
    if (lhs != rhs) {
      out.failure[1] = "u = " + to_string(u) + ": mu(l(u,u)) = " + to_string(lhs) +
                       ", bar(u) = " + to_string(rhs);
    }
  }

  // (c) right square on im(rho)
  out.ran[2] = true;
  {
    const LinkingMatrix L = LinkingMatrix::random_valid(g, rng.next());
    const bool lhs = epsilon(L, rho) % 2 != 0;
    const bool rhs = selflink_eval(L, s);
    if (lhs != rhs) {
      out.failure[2] = "basis " + describe_basis(basis) + ": epsilon(rho) mod 2 = " +
                       std::to_string(lhs) + ", selflink(sigma) = " + std::to_string(rhs);
    }
  }

  // (d) lift consistency on a disjoint pair: standard bases on disjoint
  // handle sets, both moved by the same integral symplectic map.
  if (g >= 2) {
    out.ran[3] = true;
    const auto handles = random_handles(g, g, rng);
    const int h1 = 1 + static_cast<int>(rng.below(static_cast<std::uint64_t>(std::min(g - 1, 2))));
    const int h2 = 1 + static_cast<int>(rng.below(static_cast<std::uint64_t>(std::min(g - h1, 2))));
    ZSubsurfaceBasis f = standard_zbasis(g, {handles.begin(), handles.begin() + h1});
    ZSubsurfaceBasis k = standard_zbasis(g, {handles.begin() + h1, handles.begin() + h1 + h2});
    for (int step = 0; step < 4; ++step) {
      const ZHClass v = random_small_class(g, rng);
      f = transvect(f, v);
      k = transvect(k, v);
    }
    const WedgeElem lhs = wedge(mu(rho_separating(f)), mu(rho_separating(k)));
    const WedgeElem rhs = wedge(sigma(SeparatingTwist{f.mod2(), {}}), sigma(SeparatingTwist{k.mod2(), {}}));
    if (lhs != rhs) {
      out.failure[3] = "pair " + describe_basis(f) + " | " + describe_basis(k) +
                       ": mu(rho f)^mu(rho g) = " + to_string(lhs) + ", sigma f^sigma g = " +
                       to_string(rhs);
    }
  }
  return out;
}

}  // namespace

DiagramCheck right_square_check(const LinkingMatrix& L, std::size_t trials, std::uint64_t seed) {
  const int g = L.genus();
  DiagramCheck check{"right-square-supplied-L", 0, 0, {}};
  for (std::size_t t = 0; t < trials; ++t) {
    Rng rng(derive_seed(seed, t));
    const int h = 1 + static_cast<int>(rng.below(static_cast<std::uint64_t>(std::min(g, 3))));
    const ZSubsurfaceBasis basis = random_integral_basis(g, h, rng.next());
    const bool lhs = epsilon(L, rho_separating(basis)) % 2 != 0;
    const bool rhs = selflink_eval(L, sigma(SeparatingTwist{basis.mod2(), {}}));
    ++check.trials;
    if (lhs != rhs) {
      ++check.failures;
      if (check.witnesses.size() < kMaxWitnesses) {
        check.witnesses.push_back("basis " + describe_basis(basis) + ": epsilon(rho) mod 2 = " +
                                  std::to_string(lhs) + ", selflink(sigma) = " + std::to_string(rhs));
      }
    }
  }
  return check;
}

DiagramReport verify_diagrams(int genus, std::size_t trials, std::uint64_t seed, bool exhaustive_mu) {
  require_genus(genus);
  DiagramReport report;
  report.genus = genus;
  report.trials = trials;
  report.seed = seed;
  report.checks = {{"triangle", 0, 0, {}},
                   {"mu-selflink", 0, 0, {}},
                   {"right-square", 0, 0, {}},
                   {"lift-consistency", 0, 0, {}}};

  std::vector<TrialOutcome> outcomes(trials);
  const std::size_t workers =
      std::max<std::size_t>(1, std::min<std::size_t>(std::thread::hardware_concurrency(), 8));
  if (workers == 1 || trials < 2) {
    for (std::size_t t = 0; t < trials; ++t) outcomes[t] = run_trial(genus, derive_seed(seed, t));
  } else {
    std::vector<std::thread> pool;
    for (std::size_t w = 0; w < workers; ++w) {
      pool.emplace_back([&, w] {
        for (std::size_t t = w; t < trials; t += workers) {
          outcomes[t] = run_trial(genus, derive_seed(seed, t));
        }
      });
    }
    for (auto& th : pool) th.join();
  }
  // Trial order, not completion order, decides which witnesses are kept.
  for (const auto& o : outcomes) {
    for (std::size_t c = 0; c < 4; ++c) {
      if (!o.ran[c]) continue;
      ++report.checks[c].trials;
      if (!o.failure[c].empty()) {
        ++report.checks[c].failures;
        if (report.checks[c].witnesses.size() < kMaxWitnesses) {
          report.checks[c].witnesses.push_back(o.failure[c]);
        }
      }
    }
  }

  if (exhaustive_mu) {
    if (genus > 6) throw ArgumentError("exhaustive mu check limited to genus <= 6");
    DiagramCheck check{"mu-selflink-exhaustive", 0, 0, {}};
    const std::uint64_t count = 1ULL << (2 * genus);
    for (std::uint64_t mask = 0; mask < count; ++mask) {
      const HClass u = HClass::from_mask(genus, mask);
      const ZHClass lift(genus, u.to_ints());
      ++check.trials;
      const BoolPoly lhs = mu(cm_generator(lift, lift));
      const BoolPoly rhs = bar(u);
      if (lhs != rhs) {
        ++check.failures;
        if (check.witnesses.size() < kMaxWitnesses) {
          check.witnesses.push_back("u = " + to_string(u) + ": mu(l(u,u)) = " + to_string(lhs) +
                                    ", bar(u) = " + to_string(rhs));
        }
      }
    }
    report.checks.push_back(std::move(check));
  }
  return report;
}

}  // namespace bcj
