#include "yb/structures.hpp"

#include <numeric>
#include <random>
#include <sstream>

#include "yb/matrix.hpp"

namespace yb {

std::string ValidationReport::summary() const {
  if (ok()) return "valid";
  std::ostringstream os;
  os << issues.size() << " issue(s); first: " << issues.front().what;
  if (!issues.front().where.empty()) {
    os << " at (";
    for (std::size_t i = 0; i < issues.front().where.size(); ++i)
      os << (i ? "," : "") << issues.front().where[i];
    os << ")";
  }
  return os.str();
}

namespace {

constexpr std::size_t kMaxIssues = 64;

void add_issue(ValidationReport& rep, std::string what, std::vector<int> where) {
  if (rep.issues.size() < kMaxIssues)
    rep.issues.push_back({std::move(what), std::move(where)});
}

bool all_zero(std::span<const Scalar> v) {
  for (const auto& x : v)
    if (!x.is_zero()) return false;
  return true;
}

std::vector<Scalar> scaled(std::span<const Scalar> v, const Scalar& c) {
  std::vector<Scalar> out(v.begin(), v.end());
  for (auto& x : out) x *= c;
  return out;
}

void add_to(std::vector<Scalar>& acc, std::span<const Scalar> v) {
  for (std::size_t i = 0; i < acc.size(); ++i) acc[i] += v[i];
}

} // namespace

// --------------------------------------------------------------------------
// AssociativeAlgebra

AssociativeAlgebra::AssociativeAlgebra(ScalarField field, int dim,
                                       std::vector<std::string> basis_names)
    : field_(std::move(field)), dim_(dim), names_(std::move(basis_names)) {
  if (dim < 1) throw BadDimension("algebra dim must be >= 1");
  mult_.assign(static_cast<std::size_t>(dim) * dim * dim, Scalar::zero(field_));
  unit_.assign(dim, Scalar::zero(field_));
  if (names_.empty())
    for (int i = 0; i < dim; ++i) names_.push_back("e" + std::to_string(i));
}

void AssociativeAlgebra::set_product(int i, int j, std::vector<Scalar> coords) {
  if (static_cast<int>(coords.size()) != dim_) throw DimMismatch("product coords length");
  for (int k = 0; k < dim_; ++k)
    mult_[(static_cast<std::size_t>(i) * dim_ + j) * dim_ + k] = std::move(coords[k]);
}

void AssociativeAlgebra::set_unit(std::vector<Scalar> coords) {
  if (static_cast<int>(coords.size()) != dim_) throw DimMismatch("unit coords length");
  unit_ = std::move(coords);
}

std::vector<Scalar> AssociativeAlgebra::multiply(std::span<const Scalar> x,
                                                 std::span<const Scalar> y) const {
  std::vector<Scalar> out(dim_, Scalar::zero(field_));
  for (int i = 0; i < dim_; ++i) {
    if (x[i].is_zero()) continue;
    for (int j = 0; j < dim_; ++j) {
      if (y[j].is_zero()) continue;
      Scalar coeff = x[i] * y[j];
      for (int k = 0; k < dim_; ++k) {
        const Scalar& cijk = c(i, j, k);
        if (!cijk.is_zero()) out[k] += coeff * cijk;
      }
    }
  }
  return out;
}

ValidationReport validate_associative(const AssociativeAlgebra& a) {
  ValidationReport rep;
  const int n = a.dim();
  // unit laws
  for (int i = 0; i < n; ++i) {
    std::vector<Scalar> e(n, Scalar::zero(a.field()));
    e[i] = Scalar::one(a.field());
    auto left = a.multiply(a.unit(), e);
    auto right = a.multiply(e, a.unit());
    if (left != e) add_issue(rep, "left unit law fails", {i});
    if (right != e) add_issue(rep, "right unit law fails", {i});
  }
  // associativity on all basis triples
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      for (int k = 0; k < n; ++k) {
        std::vector<Scalar> ek(n, Scalar::zero(a.field()));
        ek[k] = Scalar::one(a.field());
        std::vector<Scalar> ei(n, Scalar::zero(a.field()));
        ei[i] = Scalar::one(a.field());
        auto lhs = a.multiply(a.product(i, j), ek);
        auto rhs = a.multiply(ei, a.product(j, k));
        if (lhs != rhs) add_issue(rep, "associativity fails", {i, j, k});
      }
  return rep;
}

// --------------------------------------------------------------------------
// FiniteAbelianGroup / ColorFunction

FiniteAbelianGroup::FiniteAbelianGroup(std::vector<unsigned> orders) : orders_(std::move(orders)) {
  if (orders_.empty()) throw BadParameter("group needs at least one cyclic factor");
  for (unsigned n : orders_)
    if (n < 1) throw BadParameter("cyclic order must be >= 1");
  exponent_ = 1;
  for (unsigned n : orders_) exponent_ = std::lcm(exponent_, n);
}

std::size_t FiniteAbelianGroup::size() const {
  std::size_t s = 1;
  for (unsigned n : orders_) s *= n;
  return s;
}

FiniteAbelianGroup::Elem FiniteAbelianGroup::add(const Elem& a, const Elem& b) const {
  Elem c(orders_.size());
  for (std::size_t i = 0; i < orders_.size(); ++i) c[i] = (a[i] + b[i]) % orders_[i];
  return c;
}

bool FiniteAbelianGroup::is_zero(const Elem& a) const {
  for (unsigned x : a)
    if (x != 0) return false;
  return true;
}

std::vector<FiniteAbelianGroup::Elem> FiniteAbelianGroup::elements() const {
  std::vector<Elem> out;
  Elem cur = zero();
  for (;;) {
    out.push_back(cur);
    std::size_t i = orders_.size();
    while (i-- > 0) {
      if (++cur[i] < orders_[i]) break;
      cur[i] = 0;
      if (i == 0) return out;
    }
  }
}

ColorFunction::ColorFunction(FiniteAbelianGroup group, std::vector<std::vector<long>> exponents)
    : group_(std::move(group)), t_(std::move(exponents)) {
  const unsigned r = group_.rank();
  if (t_.size() != r) throw DimMismatch("exponent matrix rank");
  for (const auto& row : t_)
    if (row.size() != r) throw DimMismatch("exponent matrix rank");
}

unsigned ColorFunction::exponent_of(const FiniteAbelianGroup::Elem& a,
                                    const FiniteAbelianGroup::Elem& b) const {
  const long e = static_cast<long>(group_.exponent());
  long sum = 0;
  for (std::size_t i = 0; i < t_.size(); ++i)
    for (std::size_t j = 0; j < t_.size(); ++j)
      sum += static_cast<long>(a[i]) % e * ((t_[i][j] % e + e) % e) % e * (static_cast<long>(b[j]) % e) % e;
  long red = sum % e;
  if (red < 0) red += e;
  return static_cast<unsigned>(red);
}

Scalar ColorFunction::value(const ScalarField& f, const FiniteAbelianGroup::Elem& a,
                            const FiniteAbelianGroup::Elem& b) const {
  const unsigned e = group_.exponent();
  const unsigned k = exponent_of(a, b);
  if (f.kind() == FieldKind::Cyclotomic) {
    const unsigned m = f.order();
    if (m % e != 0)
      throw WrongFieldKind("field order " + std::to_string(m) + " does not contain zeta_" + std::to_string(e));
    return Scalar::root_of_unity(f, static_cast<long>(k) * (m / e));
  }
  // rational values: zeta_e^k must be +-1
  if ((2u * k) % e == 0) return Scalar::from_int(k % e == 0 ? 1 : -1, f);
  throw WrongFieldKind("theta value zeta_" + std::to_string(e) + "^" + std::to_string(k) +
                       " is not rational");
}

ValidationReport ColorFunction::validate(std::uint64_t seed) const {
  ValidationReport rep;
  const unsigned r = group_.rank();
  const unsigned e = group_.exponent();
  auto expo = [&](const FiniteAbelianGroup::Elem& a, const FiniteAbelianGroup::Elem& b) {
    return exponent_of(a, b);
  };
  // skewness: theta(a,b) theta(b,a) = 1
  if (group_.size() <= 4096) {
    auto elems = group_.elements();
    for (std::size_t i = 0; i < elems.size(); ++i)
      for (std::size_t j = 0; j < elems.size(); ++j)
        if ((expo(elems[i], elems[j]) + expo(elems[j], elems[i])) % e != 0)
          add_issue(rep, "skew condition fails", {static_cast<int>(i), static_cast<int>(j)});
  } else {
    for (unsigned i = 0; i < r; ++i)
      for (unsigned j = 0; j < r; ++j) {
        FiniteAbelianGroup::Elem a = group_.zero(), b = group_.zero();
        a[i] = 1 % group_.orders()[i];
        b[j] = 1 % group_.orders()[j];
        if ((expo(a, b) + expo(b, a)) % e != 0)
          add_issue(rep, "skew condition fails on generators", {static_cast<int>(i), static_cast<int>(j)});
      }
  }
  // biadditivity: exhaustively on generator pairs...
  auto check_biadd = [&](const FiniteAbelianGroup::Elem& a, const FiniteAbelianGroup::Elem& b,
                         const FiniteAbelianGroup::Elem& c, int tag) {
    if (expo(group_.add(a, b), c) != (expo(a, c) + expo(b, c)) % e)
      add_issue(rep, "biadditivity fails in first slot", {tag});
    if (expo(a, group_.add(b, c)) != (expo(a, b) + expo(a, c)) % e)
      add_issue(rep, "biadditivity fails in second slot", {tag});
  };
  std::vector<FiniteAbelianGroup::Elem> gens;
  for (unsigned i = 0; i < r; ++i) {
    FiniteAbelianGroup::Elem g = group_.zero();
    g[i] = 1 % group_.orders()[i];
    gens.push_back(g);
  }
  int tag = 0;
  for (const auto& a : gens)
    for (const auto& b : gens)
      for (const auto& c : gens) check_biadd(a, b, c, tag++);
  // ... plus 200 seeded pseudo-random triples
  std::mt19937_64 rng(seed);
  auto rand_elem = [&] {
    FiniteAbelianGroup::Elem g(group_.rank());
    for (unsigned i = 0; i < r; ++i) g[i] = static_cast<unsigned>(rng() % group_.orders()[i]);
    return g;
  };
  for (int it = 0; it < 200; ++it) check_biadd(rand_elem(), rand_elem(), rand_elem(), -1 - it);
  return rep;
}

// --------------------------------------------------------------------------
// LieSuperalgebra

LieSuperalgebra::LieSuperalgebra(ScalarField field, int dim, std::vector<int> grades,
                                 std::vector<std::string> basis_names)
    : field_(std::move(field)), dim_(dim), grade_(std::move(grades)), names_(std::move(basis_names)) {
  if (dim < 1) throw BadDimension("superalgebra dim must be >= 1");
  if (static_cast<int>(grade_.size()) != dim) throw DimMismatch("grades length");
  for (int g : grade_)
    if (g != 0 && g != 1) throw BadParameter("super grade must be 0 or 1");
  bracket_.assign(static_cast<std::size_t>(dim) * dim * dim, Scalar::zero(field_));
  if (names_.empty())
    for (int i = 0; i < dim; ++i) names_.push_back("e" + std::to_string(i));
}

void LieSuperalgebra::set_bracket(int i, int j, std::vector<Scalar> coords) {
  if (static_cast<int>(coords.size()) != dim_) throw DimMismatch("bracket coords length");
  for (int k = 0; k < dim_; ++k)
    bracket_[(static_cast<std::size_t>(i) * dim_ + j) * dim_ + k] = std::move(coords[k]);
}

std::vector<Scalar> LieSuperalgebra::bracket(std::span<const Scalar> x,
                                             std::span<const Scalar> y) const {
  std::vector<Scalar> out(dim_, Scalar::zero(field_));
  for (int i = 0; i < dim_; ++i) {
    if (x[i].is_zero()) continue;
    for (int j = 0; j < dim_; ++j) {
      if (y[j].is_zero()) continue;
      Scalar coeff = x[i] * y[j];
      for (int k = 0; k < dim_; ++k) {
        const Scalar& bijk = b(i, j, k);
        if (!bijk.is_zero()) out[k] += coeff * bijk;
      }
    }
  }
  return out;
}

ValidationReport validate_superalgebra(const LieSuperalgebra& l) {
  ValidationReport rep;
  const int n = l.dim();
  const ScalarField& f = l.field();
  // grading respected
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      for (int k = 0; k < n; ++k)
        if (!l.b(i, j, k).is_zero() && (l.grade(i) + l.grade(j)) % 2 != l.grade(k))
          add_issue(rep, "grading violated", {i, j, k});
  // super antisymmetry: [x,y] = -(-1)^{|x||y|} [y,x]
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      const int sign = (l.grade(i) * l.grade(j)) % 2 ? 1 : -1; // -(-1)^{|i||j|}
      for (int k = 0; k < n; ++k) {
        Scalar rhs = l.b(j, i, k);
        if (sign < 0) rhs = -rhs;
        if (l.b(i, j, k) != rhs) {
          add_issue(rep, "super antisymmetry fails", {i, j});
          break;
        }
      }
    }
  // super Jacobi
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      for (int k = 0; k < n; ++k) {
        std::vector<Scalar> sum(n, Scalar::zero(f));
        auto term = [&](int x, int y, int z) {
          // [x, [y, z]] with prefactor (-1)^{|z||x|}
          std::vector<Scalar> ex(n, Scalar::zero(f));
          ex[x] = Scalar::one(f);
          auto inner = l.bracket_of(y, z);
          auto outer = l.bracket(ex, inner);
          if ((l.grade(z) * l.grade(x)) % 2) {
            for (auto& s : outer) s = -s;
          }
          add_to(sum, outer);
        };
        term(i, j, k); // (-1)^{|k||i|} [i,[j,k]]
        term(j, k, i); // (-1)^{|i||j|} [j,[k,i]]
        term(k, i, j); // (-1)^{|j||k|} [k,[i,j]]
        if (!all_zero(sum)) add_issue(rep, "super Jacobi fails", {i, j, k});
      }
  return rep;
}

// --------------------------------------------------------------------------
// GThetaLieAlgebra

GThetaLieAlgebra::GThetaLieAlgebra(ScalarField field, int dim, FiniteAbelianGroup group,
                                   std::vector<FiniteAbelianGroup::Elem> grades, ColorFunction theta,
                                   std::vector<std::string> basis_names)
    : field_(std::move(field)),
      dim_(dim),
      group_(std::move(group)),
      grade_(std::move(grades)),
      theta_(std::move(theta)),
      names_(std::move(basis_names)) {
  if (dim < 1) throw BadDimension("algebra dim must be >= 1");
  if (static_cast<int>(grade_.size()) != dim) throw DimMismatch("grades length");
  for (const auto& g : grade_)
    if (g.size() != group_.rank()) throw DimMismatch("grade tuple rank");
  if (!(theta_.group() == group_)) throw DimMismatch("theta group vs grading group");
  bracket_.assign(static_cast<std::size_t>(dim) * dim * dim, Scalar::zero(field_));
  if (names_.empty())
    for (int i = 0; i < dim; ++i) names_.push_back("e" + std::to_string(i));
}

void GThetaLieAlgebra::set_bracket(int i, int j, std::vector<Scalar> coords) {
  if (static_cast<int>(coords.size()) != dim_) throw DimMismatch("bracket coords length");
  for (int k = 0; k < dim_; ++k)
    bracket_[(static_cast<std::size_t>(i) * dim_ + j) * dim_ + k] = std::move(coords[k]);
}

std::vector<Scalar> GThetaLieAlgebra::bracket(std::span<const Scalar> x,
                                              std::span<const Scalar> y) const {
  std::vector<Scalar> out(dim_, Scalar::zero(field_));
  for (int i = 0; i < dim_; ++i) {
    if (x[i].is_zero()) continue;
    for (int j = 0; j < dim_; ++j) {
      if (y[j].is_zero()) continue;
      Scalar coeff = x[i] * y[j];
      for (int k = 0; k < dim_; ++k) {
        const Scalar& bijk = b(i, j, k);
        if (!bijk.is_zero()) out[k] += coeff * bijk;
      }
    }
  }
  return out;
}

Scalar GThetaLieAlgebra::theta_value(int i, int j) const {
  return theta_.value(field_, grade_[i], grade_[j]);
}

ValidationReport validate_gtheta(const GThetaLieAlgebra& l, std::uint64_t seed) {
  ValidationReport rep = l.theta().validate(seed);
  const int n = l.dim();
  const ScalarField& f = l.field();
  const auto& g = l.group();
  // graduation <L_a, L_b> in L_{a+b}
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      auto target = g.add(l.grade(i), l.grade(j));
      for (int k = 0; k < n; ++k)
        if (!l.b(i, j, k).is_zero() && l.grade(k) != target)
          add_issue(rep, "graduation violated", {i, j, k});
    }
  // theta-antisymmetry: <x,y> = -theta(a,b) <y,x>
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      Scalar th = l.theta_value(i, j);
      for (int k = 0; k < n; ++k) {
        if (l.b(i, j, k) != -(th * l.b(j, i, k))) {
          add_issue(rep, "theta antisymmetry fails", {i, j});
          break;
        }
      }
    }
  // theta-Jacobi: th(c,a)<x,<y,z>> + th(b,c)<z,<x,y>> + th(a,b)<y,<z,x>> = 0
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      for (int k = 0; k < n; ++k) {
        std::vector<Scalar> sum(n, Scalar::zero(f));
        auto term = [&](int x, int y, int z, const Scalar& th) {
          std::vector<Scalar> ex(n, Scalar::zero(f));
          ex[x] = Scalar::one(f);
          auto outer = l.bracket(ex, l.bracket_of(y, z));
          add_to(sum, scaled(outer, th));
        };
        term(i, j, k, l.theta().value(f, l.grade(k), l.grade(i)));
        term(k, i, j, l.theta().value(f, l.grade(j), l.grade(k)));
        term(j, k, i, l.theta().value(f, l.grade(i), l.grade(j)));
        if (!all_zero(sum)) add_issue(rep, "theta Jacobi fails", {i, j, k});
      }
  return rep;
}

// --------------------------------------------------------------------------
// Center computation

namespace {

template <typename Alg, typename IsIdentityGrade>
std::vector<std::vector<Scalar>> center_impl(const Alg& l, bool restrict_grade,
                                             IsIdentityGrade is_identity_grade) {
  const int n = l.dim();
  const ScalarField& f = l.field();
  // [z, e_j] = 0 for all j: rows indexed by (j,k), unknowns z_i
  std::vector<std::vector<Scalar>> rows;
  for (int j = 0; j < n; ++j)
    for (int k = 0; k < n; ++k) {
      std::vector<Scalar> row(n, Scalar::zero(f));
      bool nonzero = false;
      for (int i = 0; i < n; ++i) {
        row[i] = l.b(i, j, k);
        nonzero = nonzero || !row[i].is_zero();
      }
      if (nonzero) rows.push_back(std::move(row));
    }
  if (restrict_grade)
    for (int i = 0; i < n; ++i)
      if (!is_identity_grade(i)) {
        std::vector<Scalar> row(n, Scalar::zero(f));
        row[i] = Scalar::one(f);
        rows.push_back(std::move(row));
      }
  if (rows.empty()) {
    // abelian and unrestricted: the whole space
    std::vector<std::vector<Scalar>> basis;
    for (int i = 0; i < n; ++i) {
      std::vector<Scalar> v(n, Scalar::zero(f));
      v[i] = Scalar::one(f);
      basis.push_back(std::move(v));
    }
    return basis;
  }
  return kernel_basis(std::move(rows), n, f);
}

} // namespace

std::vector<std::vector<Scalar>> compute_center(const LieSuperalgebra& l, bool even_only) {
  return center_impl(l, even_only, [&](int i) { return l.grade(i) == 0; });
}

std::vector<std::vector<Scalar>> compute_center(const GThetaLieAlgebra& l,
                                                bool identity_grade_only) {
  return center_impl(l, identity_grade_only,
                     [&](int i) { return l.group().is_zero(l.grade(i)); });
}

// --------------------------------------------------------------------------
// Derived structures

LieSuperalgebra even_part(const LieSuperalgebra& l) {
  std::vector<int> keep;
  for (int i = 0; i < l.dim(); ++i)
    if (l.grade(i) == 0) keep.push_back(i);
  if (keep.empty()) throw BadDimension("even part is zero-dimensional");
  const int n = static_cast<int>(keep.size());
  std::vector<std::string> names;
  for (int i : keep) names.push_back(l.basis_names()[i]);
  LieSuperalgebra out(l.field(), n, std::vector<int>(n, 0), std::move(names));
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b) {
      std::vector<Scalar> coords(n, Scalar::zero(l.field()));
      for (int c = 0; c < n; ++c) coords[c] = l.b(keep[a], keep[b], keep[c]);
      out.set_bracket(a, b, std::move(coords));
    }
  return out;
}

GThetaLieAlgebra as_gtheta_sign(const LieSuperalgebra& l) {
  FiniteAbelianGroup z2({2});
  ColorFunction sign(z2, {{1}}); // theta(a,b) = (-1)^{ab}
  std::vector<FiniteAbelianGroup::Elem> grades;
  for (int i = 0; i < l.dim(); ++i) grades.push_back({static_cast<unsigned>(l.grade(i))});
  GThetaLieAlgebra out(l.field(), l.dim(), z2, std::move(grades), std::move(sign), l.basis_names());
  for (int i = 0; i < l.dim(); ++i)
    for (int j = 0; j < l.dim(); ++j) {
      auto row = l.bracket_of(i, j);
      out.set_bracket(i, j, std::vector<Scalar>(row.begin(), row.end()));
    }
  return out;
}

GThetaLieAlgebra as_gtheta_trivial(const LieSuperalgebra& l) {
  for (int i = 0; i < l.dim(); ++i)
    if (l.grade(i) != 0) throw BadParameter("trivial-group reinterpretation needs a purely even algebra");
  FiniteAbelianGroup z1({1});
  ColorFunction triv(z1, {{0}});
  std::vector<FiniteAbelianGroup::Elem> grades(l.dim(), z1.zero());
  GThetaLieAlgebra out(l.field(), l.dim(), z1, std::move(grades), std::move(triv), l.basis_names());
  for (int i = 0; i < l.dim(); ++i)
    for (int j = 0; j < l.dim(); ++j) {
      auto row = l.bracket_of(i, j);
      out.set_bracket(i, j, std::vector<Scalar>(row.begin(), row.end()));
    }
  return out;
}

// --------------------------------------------------------------------------
// Catalog

namespace {

std::vector<Scalar> coords_of(const ScalarField& f, int dim, std::initializer_list<std::pair<int, long>> entries) {
  std::vector<Scalar> v(dim, Scalar::zero(f));
  for (auto [i, val] : entries) v[i] = Scalar::from_int(val, f);
  return v;
}

AssociativeAlgebra make_dual_numbers() {
  ScalarField q = ScalarField::rationals();
  AssociativeAlgebra a(q, 2, {"1", "x"});
  a.set_product(0, 0, coords_of(q, 2, {{0, 1}}));
  a.set_product(0, 1, coords_of(q, 2, {{1, 1}}));
  a.set_product(1, 0, coords_of(q, 2, {{1, 1}}));
  a.set_product(1, 1, coords_of(q, 2, {}));
  a.set_unit(coords_of(q, 2, {{0, 1}}));
  return a;
}

AssociativeAlgebra make_m2() {
  ScalarField q = ScalarField::rationals();
  // matrix units e_{rc}: index 2r + c; e_{ij} e_{kl} = delta_{jk} e_{il}
  AssociativeAlgebra a(q, 4, {"e11", "e12", "e21", "e22"});
  for (int i = 0; i < 2; ++i)
    for (int j = 0; j < 2; ++j)
      for (int k = 0; k < 2; ++k)
        for (int l = 0; l < 2; ++l) {
          std::vector<Scalar> coords(4, Scalar::zero(q));
          if (j == k) coords[2 * i + l] = Scalar::one(q);
          a.set_product(2 * i + j, 2 * k + l, std::move(coords));
        }
  a.set_unit(coords_of(q, 4, {{0, 1}, {3, 1}}));
  return a;
}

AssociativeAlgebra make_poly3() {
  ScalarField q = ScalarField::rationals();
  AssociativeAlgebra a(q, 3, {"1", "x", "x2"});
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j) {
      std::vector<Scalar> coords(3, Scalar::zero(q));
      if (i + j < 3) coords[i + j] = Scalar::one(q);
      a.set_product(i, j, std::move(coords));
    }
  a.set_unit(coords_of(q, 3, {{0, 1}}));
  return a;
}

LieSuperalgebra make_heisenberg3() {
  ScalarField q = ScalarField::rationals();
  LieSuperalgebra l(q, 3, {0, 0, 0}, {"e", "f", "z"});
  l.set_bracket(0, 1, coords_of(q, 3, {{2, 1}}));
  l.set_bracket(1, 0, coords_of(q, 3, {{2, -1}}));
  return l;
}

LieSuperalgebra make_super_d2() {
  ScalarField q = ScalarField::rationals();
  LieSuperalgebra l(q, 2, {1, 0}, {"u", "z"});
  l.set_bracket(0, 0, coords_of(q, 2, {{1, 1}})); // [u,u] = z
  return l;
}

LieSuperalgebra make_nil4() {
  // filiform nilpotent of class 3: [e1,e2] = e3, [e1,e3] = e4, e4 central;
  // has a one-dimensional center and non-vanishing double brackets
  ScalarField q = ScalarField::rationals();
  LieSuperalgebra l(q, 4, {0, 0, 0, 0}, {"e1", "e2", "e3", "e4"});
  l.set_bracket(0, 1, coords_of(q, 4, {{2, 1}}));
  l.set_bracket(1, 0, coords_of(q, 4, {{2, -1}}));
  l.set_bracket(0, 2, coords_of(q, 4, {{3, 1}}));
  l.set_bracket(2, 0, coords_of(q, 4, {{3, -1}}));
  return l;
}

GThetaLieAlgebra make_gtheta_z4z4() {
  ScalarField f = ScalarField::cyclotomic(4);
  FiniteAbelianGroup g({4, 4});
  // theta(a,b) = i^{a1 b2 - a2 b1}
  ColorFunction theta(g, {{0, 1}, {-1, 0}});
  std::vector<FiniteAbelianGroup::Elem> grades = {{1, 0}, {3, 0}, {0, 1}, {0, 3}, {0, 0}};
  GThetaLieAlgebra l(f, 5, g, std::move(grades), std::move(theta), {"x", "w", "y", "yp", "z"});
  l.set_bracket(0, 1, coords_of(f, 5, {{4, 1}}));  // [x,w] = z
  l.set_bracket(1, 0, coords_of(f, 5, {{4, -1}}));
  l.set_bracket(2, 3, coords_of(f, 5, {{4, 1}}));  // [y,y'] = z
  l.set_bracket(3, 2, coords_of(f, 5, {{4, -1}}));
  return l;
}

GThetaLieAlgebra make_gtheta_bad() {
  // valid structure whose central z sits in grade 1, where theta(g,g) = -1
  ScalarField q = ScalarField::rationals();
  FiniteAbelianGroup g({2});
  ColorFunction theta(g, {{1}});
  std::vector<FiniteAbelianGroup::Elem> grades = {{0}, {1}, {1}};
  GThetaLieAlgebra l(q, 3, g, std::move(grades), std::move(theta), {"x", "y", "z"});
  l.set_bracket(0, 1, coords_of(q, 3, {{2, 1}}));  // [x,y] = z
  l.set_bracket(1, 0, coords_of(q, 3, {{2, -1}}));
  return l;
}

} // namespace

AnyStructure catalog(const std::string& name) {
  if (name == "dual-numbers") return make_dual_numbers();
  if (name == "m2") return make_m2();
  if (name == "poly3") return make_poly3();
  if (name == "heisenberg3") return make_heisenberg3();
  if (name == "super-d2") return make_super_d2();
  if (name == "nil4") return make_nil4();
  if (name == "gtheta-z4z4") return make_gtheta_z4z4();
  if (name == "gtheta-bad") return make_gtheta_bad();
  throw UnknownName("no catalog structure named '" + name + "'");
}

std::vector<std::string> catalog_names() {
  return {"dual-numbers", "m2", "poly3", "heisenberg3", "super-d2", "nil4", "gtheta-z4z4", "gtheta-bad"};
}

const ScalarField& structure_field(const AnyStructure& s) {
  return std::visit([](const auto& x) -> const ScalarField& { return x.field(); }, s);
}

int structure_dim(const AnyStructure& s) {
  return std::visit([](const auto& x) { return x.dim(); }, s);
}

ValidationReport validate_structure(const AnyStructure& s, std::uint64_t seed) {
  if (const auto* a = std::get_if<AssociativeAlgebra>(&s)) return validate_associative(*a);
  if (const auto* l = std::get_if<LieSuperalgebra>(&s)) return validate_superalgebra(*l);
  return validate_gtheta(std::get<GThetaLieAlgebra>(s), seed);
}

} // namespace yb
