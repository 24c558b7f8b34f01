#include "bcj/boolring.hpp"

#include <algorithm>
#include <bit>
#include <cctype>

#include "bcj/errors.hpp"

namespace bcj {

int monomial_degree(VarMask m) { return std::popcount(m); }

bool monomial_less(VarMask lhs, VarMask rhs) {
  const int dl = monomial_degree(lhs);
  const int dr = monomial_degree(rhs);
  if (dl != dr) return dl < dr;
  while (lhs != 0) {
    const int l = std::countr_zero(lhs);
    const int r = std::countr_zero(rhs);
    if (l != r) return l < r;
    lhs &= lhs - 1;
    rhs &= rhs - 1;
  }
  return false;
}

namespace {

VarMask variable_limit(int genus) {
  return genus >= 32 ? ~VarMask{0} : (VarMask{1} << (2 * genus)) - 1;
}

void require_vars(int genus, VarMask m) {
  if ((m & ~variable_limit(genus)) != 0) {
    throw DimensionError("monomial uses variables outside the 2g = " + std::to_string(2 * genus) +
                         " available");
  }
}

// Sorts canonically and cancels equal monomials in pairs.
std::vector<VarMask> normalize(std::vector<VarMask> terms) {
  std::sort(terms.begin(), terms.end(), monomial_less);
  std::vector<VarMask> out;
  out.reserve(terms.size());
  for (std::size_t i = 0; i < terms.size();) {
    std::size_t j = i;
    while (j < terms.size() && terms[j] == terms[i]) ++j;
    if ((j - i) % 2 == 1) out.push_back(terms[i]);
    i = j;
  }
  return out;
}

}  // namespace

BoolMonomial::BoolMonomial(int genus, VarMask mask) : genus_(genus), mask_(mask) {
  require_genus(genus);
  require_vars(genus, mask);
}

BoolPoly::BoolPoly(int genus) : genus_(genus) { require_genus(genus); }

BoolPoly::BoolPoly(int genus, std::vector<VarMask> monomials) : genus_(genus) {
  require_genus(genus);
  for (VarMask m : monomials) require_vars(genus, m);
  terms_ = normalize(std::move(monomials));
}

BoolPoly BoolPoly::var(int genus, std::size_t k) {
  if (k >= static_cast<std::size_t>(2 * genus)) throw DimensionError("variable index out of range");
  return BoolPoly(genus, {VarMask{1} << k});
}

bool BoolPoly::contains(VarMask m) const {
  return std::binary_search(terms_.begin(), terms_.end(), m, monomial_less);
}

int BoolPoly::degree() const { return terms_.empty() ? -1 : monomial_degree(terms_.back()); }

BoolPoly& BoolPoly::operator+=(const BoolPoly& other) {
  require_same_genus(genus_, other.genus_, "BoolPoly::operator+");
  std::vector<VarMask> out;
  out.reserve(terms_.size() + other.terms_.size());
  std::set_symmetric_difference(terms_.begin(), terms_.end(), other.terms_.begin(),
                                other.terms_.end(), std::back_inserter(out), monomial_less);
  terms_ = std::move(out);
  return *this;
}

BoolPoly operator*(const BoolPoly& lhs, const BoolPoly& rhs) {
  require_same_genus(lhs.genus_, rhs.genus_, "BoolPoly::operator*");
  std::vector<VarMask> products;
  products.reserve(lhs.terms_.size() * rhs.terms_.size());
  for (VarMask m1 : lhs.terms_) {
    for (VarMask m2 : rhs.terms_) products.push_back(m1 | m2);
  }
  BoolPoly out(lhs.genus_);
  out.terms_ = normalize(std::move(products));
  return out;
}

BoolPoly poly_add(const BoolPoly& p, const BoolPoly& q) { return p + q; }
BoolPoly poly_mul(const BoolPoly& p, const BoolPoly& q) { return p * q; }

const BoolPoly& require_degree(const BoolPoly& p, int max_degree) {
  if (p.degree() > max_degree) {
    throw FiltrationError("polynomial '" + to_string(p) + "' has degree " +
                          std::to_string(p.degree()) + " > " + std::to_string(max_degree));
  }
  return p;
}

// ---- text ----

std::string variable_name(int genus, std::size_t k) {
  const auto g = static_cast<std::size_t>(genus);
  if (k < g) return "a" + std::to_string(k + 1);
  return "b" + std::to_string(k - g + 1);
}

std::string monomial_to_string(int genus, VarMask m) {
  if (m == 0) return "1";
  std::string out;
  for (VarMask w = m; w != 0; w &= w - 1) {
    if (!out.empty()) out += "*";
    out += variable_name(genus, static_cast<std::size_t>(std::countr_zero(w)));
  }
  return out;
}

std::string to_string(const BoolPoly& p) {
  if (p.is_zero()) return "0";
  // Highest degree first; ascending lexicographic within a degree.
  std::vector<VarMask> order = p.terms();
  std::stable_sort(order.begin(), order.end(), [](VarMask x, VarMask y) {
    return monomial_degree(x) > monomial_degree(y);
  });
  std::string out;
  for (VarMask m : order) {
    if (!out.empty()) out += " + ";
    out += monomial_to_string(p.genus(), m);
  }
  return out;
}

namespace {

std::string_view trim(std::string_view s) {
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
  return s;
}

}  // namespace

VarMask parse_monomial(int genus, std::string_view text) {
  text = trim(text);
  if (text == "1") return 0;
  VarMask mask = 0;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    const std::size_t star = text.find('*', pos);
    const std::string_view factor =
        trim(text.substr(pos, star == std::string_view::npos ? std::string_view::npos : star - pos));
    if (factor.size() < 2 || (factor[0] != 'a' && factor[0] != 'b')) {
      throw SchemaError("cannot parse monomial '" + std::string(text) + "'");
    }
    int handle = 0;
    for (std::size_t i = 1; i < factor.size(); ++i) {
      if (!std::isdigit(static_cast<unsigned char>(factor[i]))) {
        throw SchemaError("cannot parse monomial '" + std::string(text) + "'");
      }
      handle = handle * 10 + (factor[i] - '0');
      if (handle > genus) break;
    }
    if (handle < 1 || handle > genus) {
      throw SchemaError("variable '" + std::string(factor) + "' out of range for genus " +
                        std::to_string(genus));
    }
    const std::size_t k = static_cast<std::size_t>(handle - 1) +
                          (factor[0] == 'b' ? static_cast<std::size_t>(genus) : 0);
    mask |= VarMask{1} << k;  // x*x = x
    if (star == std::string_view::npos) break;
    pos = star + 1;
  }
  return mask;
}

BoolPoly parse_bool_poly(int genus, std::string_view text) {
  text = trim(text);
  if (text.empty()) throw SchemaError("empty polynomial text");
  if (text == "0") return BoolPoly(genus);
  std::vector<VarMask> terms;
  std::size_t pos = 0;
  while (true) {
    const std::size_t plus = text.find('+', pos);
    terms.push_back(parse_monomial(
        genus, text.substr(pos, plus == std::string_view::npos ? std::string_view::npos : plus - pos)));
    if (plus == std::string_view::npos) break;
    pos = plus + 1;
  }
  return BoolPoly(genus, std::move(terms));
}

// ---- bar and forms ----

BoolPoly bar(const HClass& c) {
  const int g = c.genus();
  std::vector<VarMask> terms;
  int pairs = 0;
  for (std::size_t k = 0; k < static_cast<std::size_t>(2 * g); ++k) {
    if (c.coeff(k)) terms.push_back(VarMask{1} << k);
  }
  for (int i = 0; i < g; ++i) {
    if (c.coeff(static_cast<std::size_t>(i)) && c.coeff(static_cast<std::size_t>(g + i))) ++pairs;
  }
  if (pairs % 2 == 1) terms.push_back(0);
  return BoolPoly(g, std::move(terms));
}

SelfLinkingForm::SelfLinkingForm(int genus, gf2::BitVec basis_values)
    : genus_(genus), values_(std::move(basis_values)) {
  require_genus(genus);
  if (values_.size() != static_cast<std::size_t>(2 * genus)) {
    throw DimensionError("SelfLinkingForm: expected 2g basis values");
  }
}

SelfLinkingForm SelfLinkingForm::from_index(int genus, std::uint64_t index) {
  require_genus(genus);
  gf2::BitVec v(static_cast<std::size_t>(2 * genus));
  for (std::size_t k = 0; k < v.size(); ++k) v.set(k, (index >> k) & 1u);
  return SelfLinkingForm(genus, std::move(v));
}

bool SelfLinkingForm::operator()(const HClass& u) const {
  require_same_genus(genus_, u.genus(), "SelfLinkingForm");
  return evaluate(bar(u), *this);
}

bool evaluate(const BoolPoly& p, const SelfLinkingForm& omega) {
  require_same_genus(p.genus(), omega.genus(), "evaluate");
  const VarMask ones = omega.basis_values().words().empty() ? 0 : omega.basis_values().words()[0];
  bool acc = false;
  for (VarMask m : p.terms()) {
    if ((m & ~ones) == 0) acc = !acc;
  }
  return acc;
}

// ---- symplectic matrices ----

SpMatrix::SpMatrix(int genus, std::vector<HClass> columns) : genus_(genus), columns_(std::move(columns)) {
  require_genus(genus);
  if (columns_.size() != static_cast<std::size_t>(2 * genus)) {
    throw MatrixError("SpMatrix: expected 2g columns");
  }
  for (const HClass& c : columns_) require_same_genus(genus, c.genus(), "SpMatrix");
}

SpMatrix SpMatrix::identity(int genus) {
  std::vector<HClass> cols;
  for (int i = 1; i <= genus; ++i) cols.push_back(HClass::a(genus, i));
  for (int i = 1; i <= genus; ++i) cols.push_back(HClass::b(genus, i));
  return SpMatrix(genus, std::move(cols));
}

SpMatrix SpMatrix::handle_swap(int genus, int handle) {
  SpMatrix m = identity(genus);
  std::swap(m.columns_.at(static_cast<std::size_t>(handle - 1)),
            m.columns_.at(static_cast<std::size_t>(genus + handle - 1)));
  return m;
}

SpMatrix SpMatrix::handle_transposition(int genus, int i, int j) {
  if (i < 1 || j < 1 || i > genus || j > genus) throw ArgumentError("handle index out of range");
  SpMatrix m = identity(genus);
  const auto ii = static_cast<std::size_t>(i - 1);
  const auto jj = static_cast<std::size_t>(j - 1);
  const auto g = static_cast<std::size_t>(genus);
  std::swap(m.columns_[ii], m.columns_[jj]);
  std::swap(m.columns_[g + ii], m.columns_[g + jj]);
  return m;
}

SpMatrix SpMatrix::transvection(const HClass& v) {
  const int g = v.genus();
  std::vector<HClass> cols;
  for (std::size_t k = 0; k < static_cast<std::size_t>(2 * g); ++k) {
    HClass e = HClass::from_mask(g, VarMask{1} << k);
    if (intersect(e, v) == 1) e += v;
    cols.push_back(std::move(e));
  }
  return SpMatrix(g, std::move(cols));
}

HClass SpMatrix::apply(const HClass& u) const {
  require_same_genus(genus_, u.genus(), "SpMatrix::apply");
  HClass out(genus_);
  for (std::size_t k = 0; k < columns_.size(); ++k) {
    if (u.coeff(k)) out += columns_[k];
  }
  return out;
}

SpMatrix SpMatrix::operator*(const SpMatrix& rhs) const {
  require_same_genus(genus_, rhs.genus_, "SpMatrix::operator*");
  std::vector<HClass> cols;
  cols.reserve(columns_.size());
  for (const HClass& c : rhs.columns_) cols.push_back(apply(c));
  return SpMatrix(genus_, std::move(cols));
}

bool SpMatrix::is_symplectic() const {
  const std::size_t n = columns_.size();
  const std::size_t g = n / 2;
  for (std::size_t k = 0; k < n; ++k) {
    for (std::size_t l = k + 1; l < n; ++l) {
      const int expected = (l == k + g) ? 1 : 0;
      if (intersect(columns_[k], columns_[l]) != expected) return false;
    }
  }
  return true;
}

BoolPoly substitute_sp(const SpMatrix& m, const BoolPoly& p) {
  require_same_genus(m.genus(), p.genus(), "substitute_sp");
  if (!m.is_symplectic()) throw MatrixError("substitute_sp: matrix is not symplectic mod 2");
  const int g = p.genus();
  std::vector<BoolPoly> images;
  images.reserve(static_cast<std::size_t>(2 * g));
  for (std::size_t k = 0; k < static_cast<std::size_t>(2 * g); ++k) images.push_back(bar(m.column(k)));

  BoolPoly out(g);
  for (VarMask mono : p.terms()) {
    BoolPoly term = BoolPoly::one(g);
    for (VarMask w = mono; w != 0; w &= w - 1) {
      term = term * images[static_cast<std::size_t>(std::countr_zero(w))];
    }
    out += term;
  }
  return out;
}

// ---- B2 basis ----

std::size_t b2_dimension(int genus) {
  require_genus(genus);
  const auto g = static_cast<std::size_t>(genus);
  return 2 * g * g + g + 1;
}

std::size_t b2_index(int genus, VarMask m) {
  require_genus(genus);
  require_vars(genus, m);
  const auto n = static_cast<std::size_t>(2 * genus);
  switch (monomial_degree(m)) {
    case 0:
      return 0;
    case 1:
      return 1 + static_cast<std::size_t>(std::countr_zero(m));
    case 2: {
      const auto p = static_cast<std::size_t>(std::countr_zero(m));
      const auto q = static_cast<std::size_t>(63 - std::countl_zero(m));
      return 1 + n + p * (2 * n - p - 1) / 2 + (q - p - 1);
    }
    default:
      throw FiltrationError("monomial " + monomial_to_string(genus, m) + " has degree > 2");
  }
}

B2Basis::B2Basis(int genus) : genus_(genus) {
  require_genus(genus);
  const auto n = static_cast<std::size_t>(2 * genus);
  monomials_.push_back(0);
  for (std::size_t k = 0; k < n; ++k) monomials_.push_back(VarMask{1} << k);
  for (std::size_t p = 0; p < n; ++p) {
    for (std::size_t q = p + 1; q < n; ++q) monomials_.push_back((VarMask{1} << p) | (VarMask{1} << q));
  }
}

std::size_t B2Basis::index_of(VarMask m) const { return b2_index(genus_, m); }

gf2::BitVec b2_coords(const BoolPoly& p) {
  require_degree(p, 2);
  gf2::BitVec v(b2_dimension(p.genus()));
  for (VarMask m : p.terms()) v.set(b2_index(p.genus(), m));
  return v;
}

}  // namespace bcj
