#include "bcj/surface.hpp"

#include <bit>
#include <cctype>

#include "bcj/detail/checked.hpp"
#include "bcj/errors.hpp"
#include "bcj/random.hpp"

namespace bcj {

void require_genus(int g) {
  if (g < 1 || g > kMaxGenus) {
    throw GenusError("genus must be in [1, " + std::to_string(kMaxGenus) + "], got " +
                     std::to_string(g));
  }
}

void require_same_genus(int g1, int g2, const char* where) {
  if (g1 != g2) {
    throw GenusError(std::string(where) + ": genus mismatch (" + std::to_string(g1) + " vs " +
                     std::to_string(g2) + ")");
  }
}

namespace {

std::size_t a_pos(int genus, int handle) {
  if (handle < 1 || handle > genus) throw ArgumentError("handle index out of range");
  return static_cast<std::size_t>(handle - 1);
}

std::size_t b_pos(int genus, int handle) {
  return static_cast<std::size_t>(genus) + a_pos(genus, handle);
}

std::int64_t mod2(std::int64_t x) { return ((x % 2) + 2) % 2; }

}  // namespace

// ---- HClass ----

HClass::HClass(int genus) : genus_(genus), coords_((require_genus(genus), 2 * genus)) {}

HClass::HClass(int genus, gf2::BitVec coords) : genus_(genus), coords_(std::move(coords)) {
  require_genus(genus);
  if (coords_.size() != static_cast<std::size_t>(2 * genus)) {
    throw DimensionError("HClass: expected " + std::to_string(2 * genus) + " coordinates");
  }
}

HClass HClass::a(int genus, int handle) {
  HClass c(genus);
  c.coords_.set(a_pos(genus, handle));
  return c;
}

HClass HClass::b(int genus, int handle) {
  HClass c(genus);
  c.coords_.set(b_pos(genus, handle));
  return c;
}

HClass HClass::from_ints(int genus, const std::vector<std::int64_t>& coords) {
  HClass c(genus);
  if (coords.size() != static_cast<std::size_t>(2 * genus)) {
    throw DimensionError("HClass: expected " + std::to_string(2 * genus) + " coordinates, got " +
                         std::to_string(coords.size()));
  }
  for (std::size_t k = 0; k < coords.size(); ++k) c.coords_.set(k, mod2(coords[k]) == 1);
  return c;
}

HClass HClass::from_mask(int genus, std::uint64_t mask) {
  HClass c(genus);
  for (std::size_t k = 0; k < static_cast<std::size_t>(2 * genus); ++k) {
    if ((mask >> k) & 1u) c.coords_.set(k);
  }
  if (2 * genus < 64 && (mask >> (2 * genus)) != 0) {
    throw DimensionError("HClass::from_mask: mask exceeds 2g bits");
  }
  return c;
}

std::uint64_t HClass::mask() const { return coords_.words().empty() ? 0 : coords_.words()[0]; }

std::vector<std::int64_t> HClass::to_ints() const {
  std::vector<std::int64_t> out(coords_.size());
  for (std::size_t k = 0; k < out.size(); ++k) out[k] = coords_.test(k) ? 1 : 0;
  return out;
}

HClass& HClass::operator+=(const HClass& other) {
  require_same_genus(genus_, other.genus_, "HClass::operator+");
  coords_ ^= other.coords_;
  return *this;
}

// ---- ZHClass ----

ZHClass::ZHClass(int genus)
    : genus_(genus), coords_((require_genus(genus), static_cast<std::size_t>(2 * genus)), 0) {}

ZHClass::ZHClass(int genus, std::vector<std::int64_t> coords)
    : genus_(genus), coords_(std::move(coords)) {
  require_genus(genus);
  if (coords_.size() != static_cast<std::size_t>(2 * genus)) {
    throw DimensionError("ZHClass: expected " + std::to_string(2 * genus) + " coordinates");
  }
}

ZHClass ZHClass::a(int genus, int handle) {
  ZHClass c(genus);
  c.coords_[a_pos(genus, handle)] = 1;
  return c;
}

ZHClass ZHClass::b(int genus, int handle) {
  ZHClass c(genus);
  c.coords_[b_pos(genus, handle)] = 1;
  return c;
}

HClass ZHClass::mod2() const { return HClass::from_ints(genus_, coords_); }

ZHClass& ZHClass::operator+=(const ZHClass& other) {
  require_same_genus(genus_, other.genus_, "ZHClass::operator+");
  for (std::size_t k = 0; k < coords_.size(); ++k) {
    coords_[k] = detail::checked_add(coords_[k], other.coords_[k]);
  }
  return *this;
}

ZHClass ZHClass::scaled(std::int64_t n) const {
  ZHClass out = *this;
  for (auto& c : out.coords_) c = detail::checked_mul(c, n);
  return out;
}

// ---- intersection ----

int intersect(const HClass& u, const HClass& v) {
  require_same_genus(u.genus(), v.genus(), "intersect");
  const int g = u.genus();
  int acc = 0;
  for (int i = 0; i < g; ++i) {
    const auto ai = static_cast<std::size_t>(i);
    const auto bi = static_cast<std::size_t>(g + i);
    acc ^= (u.coeff(ai) & v.coeff(bi)) ^ (u.coeff(bi) & v.coeff(ai));
  }
  return acc;
}

std::int64_t intersect(const ZHClass& u, const ZHClass& v) {
  require_same_genus(u.genus(), v.genus(), "intersect");
  const int g = u.genus();
  std::int64_t acc = 0;
  for (int i = 0; i < g; ++i) {
    const auto ai = static_cast<std::size_t>(i);
    const auto bi = static_cast<std::size_t>(g + i);
    acc = detail::checked_add(acc, detail::checked_mul(u.coeff(ai), v.coeff(bi)));
    acc = detail::checked_sub(acc, detail::checked_mul(u.coeff(bi), v.coeff(ai)));
  }
  return acc;
}

// ---- supports ----

int HandleSet::size() const { return std::popcount(bits_); }

std::vector<int> HandleSet::handles() const {
  std::vector<int> out;
  for (std::uint64_t w = bits_; w != 0; w &= w - 1) out.push_back(std::countr_zero(w) + 1);
  return out;
}

HandleSet support(const HClass& u) {
  const int g = u.genus();
  std::uint64_t bits = 0;
  for (int i = 0; i < g; ++i) {
    if (u.coeff(static_cast<std::size_t>(i)) || u.coeff(static_cast<std::size_t>(g + i))) {
      bits |= std::uint64_t{1} << i;
    }
  }
  return HandleSet(bits);
}

HandleSet support(const ZHClass& u) {
  const int g = u.genus();
  std::uint64_t bits = 0;
  for (int i = 0; i < g; ++i) {
    if (u.coeff(static_cast<std::size_t>(i)) != 0 || u.coeff(static_cast<std::size_t>(g + i)) != 0) {
      bits |= std::uint64_t{1} << i;
    }
  }
  return HandleSet(bits);
}

HandleSet Spine::support() const { return bcj::support(x) | bcj::support(y); }

Spine make_spine(const HClass& x, const HClass& y) {
  if (intersect(x, y) != 1) {
    throw SpineError("spine (" + to_string(x) + ", " + to_string(y) + ") has x.y = 0");
  }
  return Spine{x, y};
}

bool spines_disjointly_realizable(const Spine& s1, const Spine& s2) {
  for (const Spine* s : {&s1, &s2}) {
    if (intersect(s->x, s->y) != 1) {
      throw SpineError("invalid spine (" + to_string(s->x) + ", " + to_string(s->y) + ")");
    }
  }
  require_same_genus(s1.x.genus(), s2.x.genus(), "spines_disjointly_realizable");
  return s1.support().disjoint(s2.support());
}

bool spines_orthogonal(const Spine& s1, const Spine& s2) {
  for (const Spine* s : {&s1, &s2}) {
    if (intersect(s->x, s->y) != 1) {
      throw SpineError("invalid spine (" + to_string(s->x) + ", " + to_string(s->y) + ")");
    }
  }
  require_same_genus(s1.x.genus(), s2.x.genus(), "spines_orthogonal");
  return intersect(s1.x, s2.x) == 0 && intersect(s1.x, s2.y) == 0 && intersect(s1.y, s2.x) == 0 &&
         intersect(s1.y, s2.y) == 0;
}

HandleSet SubsurfaceBasis::support() const {
  HandleSet out;
  for (const auto& [a, b] : pairs) out = out | bcj::support(a) | bcj::support(b);
  return out;
}

HandleSet ZSubsurfaceBasis::support() const {
  HandleSet out;
  for (const auto& [a, b] : pairs) out = out | bcj::support(a) | bcj::support(b);
  return out;
}

SubsurfaceBasis ZSubsurfaceBasis::mod2() const {
  SubsurfaceBasis out{genus, {}};
  for (const auto& [a, b] : pairs) out.pairs.emplace_back(a.mod2(), b.mod2());
  return out;
}

// ---- symplectic checks ----

namespace {

template <typename Value, typename Basis, typename Pairing>
BasisCheck check_basis(const Basis& s, Pairing pair) {
  const std::size_t h = s.pairs.size();
  auto name = [](char letter, std::size_t i) { return std::string(1, letter) + std::to_string(i + 1); };
  for (std::size_t i = 0; i < h; ++i) {
    if (s.pairs[i].first.genus() != s.genus || s.pairs[i].second.genus() != s.genus) {
      return {false, "pair " + std::to_string(i + 1) + " has the wrong genus"};
    }
  }
  for (std::size_t i = 0; i < h; ++i) {
    for (std::size_t j = 0; j < h; ++j) {
      const Value expected = (i == j) ? 1 : 0;
      const Value ab = pair(s.pairs[i].first, s.pairs[j].second);
      if (ab != expected) {
        return {false, name('A', i) + "." + name('B', j) + " = " + std::to_string(ab) +
                           ", expected " + std::to_string(expected)};
      }
      if (i < j) {
        const Value aa = pair(s.pairs[i].first, s.pairs[j].first);
        if (aa != 0) {
          return {false, name('A', i) + "." + name('A', j) + " = " + std::to_string(aa) +
                             ", expected 0"};
        }
        const Value bb = pair(s.pairs[i].second, s.pairs[j].second);
        if (bb != 0) {
          return {false, name('B', i) + "." + name('B', j) + " = " + std::to_string(bb) +
                             ", expected 0"};
        }
      }
    }
  }
  return {};
}

}  // namespace

BasisCheck is_symplectic_basis(const SubsurfaceBasis& s) {
  return check_basis<int>(s, [](const HClass& u, const HClass& v) { return intersect(u, v); });
}

BasisCheck is_symplectic_basis(const ZSubsurfaceBasis& s) {
  return check_basis<std::int64_t>(
      s, [](const ZHClass& u, const ZHClass& v) { return intersect(u, v); });
}

SubsurfaceBasis standard_basis(int genus, const std::vector<int>& handles) {
  SubsurfaceBasis out{genus, {}};
  for (int h : handles) out.pairs.emplace_back(HClass::a(genus, h), HClass::b(genus, h));
  return out;
}

ZSubsurfaceBasis standard_zbasis(int genus, const std::vector<int>& handles) {
  ZSubsurfaceBasis out{genus, {}};
  for (int h : handles) out.pairs.emplace_back(ZHClass::a(genus, h), ZHClass::b(genus, h));
  return out;
}

// ---- rebasing ----

SubsurfaceBasis apply_rebase_move(const SubsurfaceBasis& s, RebaseMove move, std::size_t i,
                                  std::size_t j) {
  const std::size_t h = s.pairs.size();
  const bool needs_two = move == RebaseMove::kCrossAdd || move == RebaseMove::kCrossDual ||
                         move == RebaseMove::kPermute;
  if (i >= h || (needs_two && (j >= h || i == j))) {
    throw ArgumentError("apply_rebase_move: pair index out of range");
  }
  SubsurfaceBasis out = s;
  auto& p = out.pairs;
  switch (move) {
    case RebaseMove::kSwap:
      std::swap(p[i].first, p[i].second);
      break;
    case RebaseMove::kShear:
      p[i].first += p[i].second;
      break;
    case RebaseMove::kCrossAdd:
      p[i].first += s.pairs[j].first;
      p[j].second += s.pairs[i].second;
      break;
    case RebaseMove::kCrossDual:
      p[i].first += s.pairs[j].second;
      p[j].first += s.pairs[i].second;
      break;
    case RebaseMove::kPermute:
      std::swap(p[i], p[j]);
      break;
  }
  return out;
}

SubsurfaceBasis random_symplectic_rebase(const SubsurfaceBasis& s, std::uint64_t seed,
                                         int num_moves) {
  if (auto check = is_symplectic_basis(s); !check) {
    throw BasisError("random_symplectic_rebase: " + check.diagnostic);
  }
  const std::size_t h = s.pairs.size();
  if (h == 0) return s;
  Rng rng(seed);
  SubsurfaceBasis out = s;
  for (int step = 0; step < num_moves; ++step) {
    const std::uint64_t kinds = h >= 2 ? 5 : 2;
    const auto move = static_cast<RebaseMove>(rng.below(kinds));
    const std::size_t i = rng.below(h);
    std::size_t j = 0;
    if (h >= 2) {
      j = rng.below(h - 1);
      if (j >= i) ++j;
    }
    out = apply_rebase_move(out, move, i, j);
  }
  return out;
}

// ---- text ----

namespace {

template <typename Coeff>
std::string render_class(int g, const std::vector<Coeff>& coeffs) {
  std::string out;
  for (std::size_t k = 0; k < coeffs.size(); ++k) {
    const Coeff c = coeffs[k];
    if (c == 0) continue;
    const bool is_a = k < static_cast<std::size_t>(g);
    const std::string var =
        std::string(is_a ? "a" : "b") + std::to_string((is_a ? k : k - static_cast<std::size_t>(g)) + 1);
    if (out.empty()) {
      if (c == -1) out += "-";
      else if (c != 1) out += std::to_string(c);
    } else {
      if (c < 0) out += "-";
      else out += "+";
      const Coeff mag = c < 0 ? -c : c;
      if (mag != 1) out += std::to_string(mag);
    }
    out += var;
  }
  return out.empty() ? "0" : out;
}

std::vector<std::int64_t> parse_class_coords(int genus, const std::string& text) {
  require_genus(genus);
  std::vector<std::int64_t> coords(static_cast<std::size_t>(2 * genus), 0);
  std::size_t pos = 0;
  auto skip_ws = [&] {
    while (pos < text.size() && std::isspace(static_cast<unsigned char>(text[pos]))) ++pos;
  };
  auto fail = [&](const std::string& why) -> void {
    throw SchemaError("cannot parse homology class '" + text + "': " + why);
  };
  skip_ws();
  if (text.substr(pos) == "0") return coords;
  bool first = true;
  while (true) {
    skip_ws();
    if (pos >= text.size()) {
      if (first) fail("empty");
      break;
    }
    std::int64_t sign = 1;
    if (text[pos] == '+' || text[pos] == '-') {
      sign = text[pos] == '-' ? -1 : 1;
      ++pos;
      skip_ws();
    } else if (!first) {
      fail("expected '+' or '-'");
    }
    std::int64_t mult = 1;
    if (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos]))) {
      std::size_t used = 0;
      mult = std::stoll(text.substr(pos), &used);
      pos += used;
      if (pos < text.size() && text[pos] == '*') ++pos;
    }
    if (pos >= text.size() || (text[pos] != 'a' && text[pos] != 'b')) fail("expected a or b");
    const bool is_a = text[pos] == 'a';
    ++pos;
    if (pos >= text.size() || !std::isdigit(static_cast<unsigned char>(text[pos]))) {
      fail("missing handle index");
    }
    std::size_t used = 0;
    const int handle = std::stoi(text.substr(pos), &used);
    pos += used;
    if (handle < 1 || handle > genus) fail("handle index out of range");
    const std::size_t k = is_a ? a_pos(genus, handle) : b_pos(genus, handle);
    coords[k] = detail::checked_add(coords[k], detail::checked_mul(sign, mult));
    first = false;
  }
  return coords;
}

}  // namespace

std::string to_string(const HClass& u) {
  return render_class(u.genus(), u.to_ints());
}

std::string to_string(const ZHClass& u) { return render_class(u.genus(), u.coords()); }

HClass parse_hclass(int genus, const std::string& text) {
  return HClass::from_ints(genus, parse_class_coords(genus, text));
}

ZHClass parse_zhclass(int genus, const std::string& text) {
  return ZHClass(genus, parse_class_coords(genus, text));
}

}  // namespace bcj
