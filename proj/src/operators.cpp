#include "yb/operators.hpp"

#include <algorithm>

namespace yb {

namespace {

std::vector<Scalar> basis_vec(const ScalarField& f, int n, int i) {
  std::vector<Scalar> v(n, Scalar::zero(f));
  v[i] = Scalar::one(f);
  return v;
}

// out += c * (x (x) y) on V(x)V coordinates
void add_tensor(std::vector<Scalar>& out, std::span<const Scalar> x, std::span<const Scalar> y,
                const Scalar& c, int n) {
  if (c.is_zero()) return;
  for (int a = 0; a < n; ++a) {
    if (x[a].is_zero()) continue;
    Scalar cx = c * x[a];
    for (int b = 0; b < n; ++b) {
      if (y[b].is_zero()) continue;
      out[static_cast<std::size_t>(a) * n + b] += cx * y[b];
    }
  }
}

template <typename ImageFn>
LinearOperator build_from_pair_images(const ScalarField& f, int n, ImageFn&& image) {
  LinearOperator m(f, n * n, n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      std::vector<Scalar> img = image(i, j); // length n*n
      for (int idx = 0; idx < n * n; ++idx)
        if (!img[idx].is_zero()) m.set(idx, i * n + j, std::move(img[idx]));
    }
  return m;
}

bool is_central(const LieSuperalgebra& l, std::span<const Scalar> z) {
  for (int j = 0; j < l.dim(); ++j) {
    auto ej = basis_vec(l.field(), l.dim(), j);
    auto br = l.bracket(z, ej);
    for (const auto& s : br)
      if (!s.is_zero()) return false;
  }
  return true;
}

bool is_central(const GThetaLieAlgebra& l, std::span<const Scalar> z) {
  for (int j = 0; j < l.dim(); ++j) {
    auto ej = basis_vec(l.field(), l.dim(), j);
    auto br = l.bracket(z, ej);
    for (const auto& s : br)
      if (!s.is_zero()) return false;
  }
  return true;
}

Scalar sign_of(const LieSuperalgebra& l, int i, int j) {
  return Scalar::from_int((l.grade(i) * l.grade(j)) % 2 ? -1 : 1, l.field());
}

void check_z_len(std::span<const Scalar> z, int dim) {
  if (static_cast<int>(z.size()) != dim) throw DimMismatch("z coordinate length");
}

} // namespace

// ---------------------------------------------------------------------------

LinearOperator build_dn(const AssociativeAlgebra& a, const Scalar& alpha, const Scalar& beta,
                        const Scalar& gamma) {
  if (a.dim() < 2) throw DimTooSmall("dim A >= 2 required");
  const int n = a.dim();
  const ScalarField& f = a.field();
  return build_from_pair_images(f, n, [&](int i, int j) {
    std::vector<Scalar> img(n * n, Scalar::zero(f));
    add_tensor(img, a.product(i, j), a.unit(), alpha, n);
    add_tensor(img, a.unit(), a.product(i, j), beta, n);
    add_tensor(img, basis_vec(f, n, i), basis_vec(f, n, j), -gamma, n);
    return img;
  });
}

DnCase dn_case(const Scalar& alpha, const Scalar& beta, const Scalar& gamma) {
  if (alpha == gamma && !alpha.is_zero() && !beta.is_zero()) return DnCase::CaseI;
  if (beta == gamma && !beta.is_zero() && !alpha.is_zero()) return DnCase::CaseII;
  if (alpha.is_zero() && beta.is_zero() && !gamma.is_zero()) return DnCase::CaseIII;
  return DnCase::Invalid;
}

std::string dn_case_name(DnCase c) {
  switch (c) {
    case DnCase::CaseI: return "case-i";
    case DnCase::CaseII: return "case-ii";
    case DnCase::CaseIII: return "case-iii";
    case DnCase::Invalid: return "invalid";
  }
  return "?";
}

LinearOperator dn_inverse(const AssociativeAlgebra& a, const Scalar& alpha, const Scalar& beta,
                          const Scalar& gamma) {
  switch (dn_case(alpha, beta, gamma)) {
    case DnCase::CaseI:
    case DnCase::CaseII:
      return build_dn(a, beta.inverse(), alpha.inverse(), gamma.inverse());
    case DnCase::CaseIII:
      return build_dn(a, alpha, beta, gamma.inverse()); // alpha = beta = 0
    case DnCase::Invalid:
      break;
  }
  throw InvalidCase("(alpha,beta,gamma) matches none of the three invertible cases");
}

LinearOperator build_dim2_canonical(const ScalarField& f, const Scalar& q, const Scalar& eta) {
  if (q.is_zero()) throw BadParameter("q must be nonzero");
  if (!eta.is_zero() && !eta.is_one()) throw BadParameter("eta must be 0 or 1");
  LinearOperator m(f, 4, 2);
  Scalar one = Scalar::one(f);
  m.set(0, 0, one);
  m.set(1, 1, one);
  m.set(2, 1, one - q);
  m.set(2, 2, q);
  m.set(3, 0, eta);
  m.set(3, 3, -q);
  return m;
}

LinearOperator build_colored(const AssociativeAlgebra& a, const Scalar& p, const Scalar& q,
                             const Scalar& u, const Scalar& v) {
  if (a.dim() < 2) throw DimTooSmall("dim A >= 2 required");
  const int n = a.dim();
  const ScalarField& f = a.field();
  Scalar pduv = p * (u - v);
  Scalar qduv = q * (u - v);
  Scalar tw = p * u - q * v;
  return build_from_pair_images(f, n, [&](int i, int j) {
    std::vector<Scalar> img(n * n, Scalar::zero(f));
    add_tensor(img, a.unit(), a.product(i, j), pduv, n);
    add_tensor(img, a.product(i, j), a.unit(), qduv, n);
    add_tensor(img, basis_vec(f, n, j), basis_vec(f, n, i), -tw, n);
    return img;
  });
}

LinearOperator colored_inverse(const AssociativeAlgebra& a, const Scalar& p, const Scalar& q,
                               const Scalar& u, const Scalar& v) {
  if (a.dim() < 2) throw DimTooSmall("dim A >= 2 required");
  Scalar pu_qv = p * u - q * v;
  Scalar qu_pv = q * u - p * v;
  if (pu_qv.is_zero() || qu_pv.is_zero())
    throw NotInvertibleParams("needs pu != qv and qu != pv");
  const int n = a.dim();
  const ScalarField& f = a.field();
  Scalar denom = qu_pv * pu_qv;
  Scalar c1 = p * (u - v) / denom;
  Scalar c2 = q * (u - v) / denom;
  Scalar c3 = pu_qv.inverse();
  return build_from_pair_images(f, n, [&](int i, int j) {
    std::vector<Scalar> img(n * n, Scalar::zero(f));
    add_tensor(img, a.product(j, i), a.unit(), c1, n);
    add_tensor(img, a.unit(), a.product(j, i), c2, n);
    add_tensor(img, basis_vec(f, n, j), basis_vec(f, n, i), -c3, n);
    return img;
  });
}

LinearOperator build_one_param(const AssociativeAlgebra& a, const Scalar& q, const Scalar& s) {
  if (s.is_zero()) throw BadParameter("s = e^lambda must be nonzero");
  if (a.dim() < 2) throw DimTooSmall("dim A >= 2 required");
  const int n = a.dim();
  const ScalarField& f = a.field();
  Scalar one = Scalar::one(f);
  Scalar s1 = s - one;
  Scalar qs1 = q * s1;
  Scalar sq = s - q;
  return build_from_pair_images(f, n, [&](int i, int j) {
    std::vector<Scalar> img(n * n, Scalar::zero(f));
    add_tensor(img, a.unit(), a.product(i, j), s1, n);
    add_tensor(img, a.product(i, j), a.unit(), qs1, n);
    add_tensor(img, basis_vec(f, n, j), basis_vec(f, n, i), -sq, n);
    return img;
  });
}

LinearOperator one_param_inverse(const AssociativeAlgebra& a, const Scalar& q, const Scalar& s) {
  if (s.is_zero()) throw BadParameter("s = e^lambda must be nonzero");
  if (a.dim() < 2) throw DimTooSmall("dim A >= 2 required");
  const ScalarField& f = a.field();
  Scalar one = Scalar::one(f);
  Scalar sq = s - q;
  Scalar qs1m = q * s - one;
  if (sq.is_zero() || qs1m.is_zero())
    throw NotInvertibleParams("needs s notin {q, 1/q}");
  const int n = a.dim();
  Scalar denom = qs1m * sq;
  Scalar c1 = (s - one) / denom;
  Scalar c2 = q * (s - one) / denom;
  Scalar c3 = sq.inverse();
  return build_from_pair_images(f, n, [&](int i, int j) {
    std::vector<Scalar> img(n * n, Scalar::zero(f));
    add_tensor(img, a.product(j, i), a.unit(), c1, n);
    add_tensor(img, a.unit(), a.product(j, i), c2, n);
    add_tensor(img, basis_vec(f, n, j), basis_vec(f, n, i), -c3, n);
    return img;
  });
}

WxzTriple build_wxz_algebra(const AssociativeAlgebra& a, const Scalar& lambda, const Scalar& mu) {
  const int n = a.dim();
  const ScalarField& f = a.field();
  Scalar one = Scalar::one(f);
  auto make = [&](const Scalar& left, const Scalar& right) {
    return build_from_pair_images(f, n, [&](int i, int j) {
      std::vector<Scalar> img(n * n, Scalar::zero(f));
      add_tensor(img, a.product(i, j), a.unit(), left, n);
      add_tensor(img, a.unit(), a.product(i, j), right, n);
      add_tensor(img, basis_vec(f, n, j), basis_vec(f, n, i), -one, n);
      return img;
    });
  };
  return {make(one, lambda), make(one, one), make(mu, one)};
}

WxzTriple wxz_from_colored(const ColoredFamily& family, const Scalar& s, const Scalar& t) {
  return {family(s, s), family(s, t), family(t, t)};
}

// ---------------------------------------------------------------------------

BilinearMap BilinearMap::zeros(const ScalarField& f, int n) {
  BilinearMap m{f, n, {}};
  m.coef.assign(static_cast<std::size_t>(n) * n * n, Scalar::zero(f));
  return m;
}

void BilinearMap::set(int i, int j, std::vector<Scalar> coords) {
  if (static_cast<int>(coords.size()) != dim) throw DimMismatch("bilinear map coords length");
  for (int k = 0; k < dim; ++k)
    coef[(static_cast<std::size_t>(i) * dim + j) * dim + k] = std::move(coords[k]);
}

std::span<const Scalar> BilinearMap::image(int i, int j) const {
  return {&coef[(static_cast<std::size_t>(i) * dim + j) * dim], static_cast<std::size_t>(dim)};
}

bool BilinearMap::vanishes_on(int c) const {
  for (int i = 0; i < dim; ++i)
    for (int k = 0; k < dim; ++k)
      if (!coef[(static_cast<std::size_t>(i) * dim + c) * dim + k].is_zero() ||
          !coef[(static_cast<std::size_t>(c) * dim + i) * dim + k].is_zero())
        return false;
  return true;
}

LinearOperator build_split(const ScalarField& f, int n, int c_index, const BilinearMap& fmap,
                           const BilinearMap& gmap) {
  if (c_index < 0 || c_index >= n) throw BadParameter("c_index out of range");
  if (fmap.dim != n || gmap.dim != n) throw DimMismatch("bilinear map dim vs n");
  if (!fmap.vanishes_on(c_index)) throw HypothesisViolated("f nonzero on V(x)c + c(x)V");
  if (!gmap.vanishes_on(c_index)) throw HypothesisViolated("g nonzero on V(x)c + c(x)V");
  return build_from_pair_images(f, n, [&](int i, int j) {
    std::vector<Scalar> img(n * n, Scalar::zero(f));
    Scalar one = Scalar::one(f);
    add_tensor(img, fmap.image(i, j), basis_vec(f, n, c_index), one, n);
    add_tensor(img, basis_vec(f, n, c_index), gmap.image(i, j), one, n);
    return img;
  });
}

// ---------------------------------------------------------------------------

namespace {

void require_even_central(const LieSuperalgebra& l, std::span<const Scalar> z) {
  check_z_len(z, l.dim());
  for (int i = 0; i < l.dim(); ++i)
    if (l.grade(i) != 0 && !z[i].is_zero())
      throw NotEvenCentral("z has an odd component at basis index " + std::to_string(i));
  if (!is_central(l, z)) throw NotEvenCentral("z is not in the centre");
}

} // namespace

LinearOperator build_super_phi(const LieSuperalgebra& l, std::span<const Scalar> z,
                               const Scalar& alpha) {
  require_even_central(l, z);
  const int n = l.dim();
  const ScalarField& f = l.field();
  return build_from_pair_images(f, n, [&](int i, int j) {
    std::vector<Scalar> img(n * n, Scalar::zero(f));
    add_tensor(img, l.bracket_of(i, j), z, alpha, n);
    add_tensor(img, basis_vec(f, n, j), basis_vec(f, n, i), sign_of(l, i, j), n);
    return img;
  });
}

LinearOperator super_phi_inverse(const LieSuperalgebra& l, std::span<const Scalar> z,
                                 const Scalar& alpha) {
  require_even_central(l, z);
  const int n = l.dim();
  const ScalarField& f = l.field();
  return build_from_pair_images(f, n, [&](int i, int j) {
    std::vector<Scalar> img(n * n, Scalar::zero(f));
    add_tensor(img, z, l.bracket_of(i, j), alpha, n);
    add_tensor(img, basis_vec(f, n, j), basis_vec(f, n, i), sign_of(l, i, j), n);
    return img;
  });
}

LinearOperator build_super_phi_ab(const LieSuperalgebra& l, std::span<const Scalar> z,
                                  const Scalar& alpha, const Scalar& beta) {
  if (beta.is_zero()) throw BadParameter("beta must be nonzero");
  require_even_central(l, z);
  const int n = l.dim();
  const ScalarField& f = l.field();
  return build_from_pair_images(f, n, [&](int i, int j) {
    std::vector<Scalar> img(n * n, Scalar::zero(f));
    add_tensor(img, l.bracket_of(i, j), z, alpha, n);
    add_tensor(img, basis_vec(f, n, j), basis_vec(f, n, i), sign_of(l, i, j) * beta, n);
    return img;
  });
}

LinearOperator super_phi_ab_inverse(const LieSuperalgebra& l, std::span<const Scalar> z,
                                    const Scalar& alpha, const Scalar& beta) {
  if (beta.is_zero()) throw BadParameter("beta must be nonzero");
  require_even_central(l, z);
  const int n = l.dim();
  const ScalarField& f = l.field();
  Scalar binv = beta.inverse();
  Scalar ab2 = alpha * binv * binv;
  return build_from_pair_images(f, n, [&](int i, int j) {
    std::vector<Scalar> img(n * n, Scalar::zero(f));
    add_tensor(img, z, l.bracket_of(i, j), ab2, n);
    add_tensor(img, basis_vec(f, n, j), basis_vec(f, n, i), sign_of(l, i, j) * binv, n);
    return img;
  });
}

// ---------------------------------------------------------------------------

ParamTable ParamTable::from_functions_of_second(std::vector<Scalar> colors,
                                                std::vector<Scalar> fvals,
                                                std::vector<Scalar> gvals) {
  const std::size_t k = colors.size();
  if (fvals.size() != k || gvals.size() != k) throw DimMismatch("table value count vs colors");
  ParamTable t;
  t.colors = std::move(colors);
  t.alpha.reserve(k * k);
  t.beta.reserve(k * k);
  for (std::size_t u = 0; u < k; ++u)
    for (std::size_t v = 0; v < k; ++v) {
      t.alpha.push_back(fvals[v]);
      t.beta.push_back(gvals[v]);
    }
  return t;
}

std::size_t ParamTable::color_index(const Scalar& c) const {
  for (std::size_t i = 0; i < colors.size(); ++i)
    if (colors[i] == c) return i;
  throw UnknownColor(c.str());
}

const Scalar& ParamTable::alpha_at(std::size_t ui, std::size_t vi) const {
  return alpha[ui * colors.size() + vi];
}

const Scalar& ParamTable::beta_at(std::size_t ui, std::size_t vi) const {
  return beta[ui * colors.size() + vi];
}

bool ParamTable::constraint_holds() const {
  const std::size_t k = colors.size();
  for (std::size_t u = 0; u < k; ++u)
    for (std::size_t v = 0; v < k; ++v)
      for (std::size_t w = 0; w < k; ++w)
        if (beta_at(u, w) * alpha_at(v, w) != alpha_at(u, w) * beta_at(v, w)) return false;
  return true;
}

LinearOperator build_super_colored(const LieSuperalgebra& l, std::span<const Scalar> z,
                                   const ParamTable& table, std::size_t u_index,
                                   std::size_t v_index) {
  if (u_index >= table.colors.size() || v_index >= table.colors.size())
    throw UnknownColor("color index out of range");
  require_even_central(l, z);
  const int n = l.dim();
  const ScalarField& f = l.field();
  const Scalar& al = table.alpha_at(u_index, v_index);
  const Scalar& be = table.beta_at(u_index, v_index);
  return build_from_pair_images(f, n, [&](int i, int j) {
    std::vector<Scalar> img(n * n, Scalar::zero(f));
    add_tensor(img, l.bracket_of(i, j), z, al, n);
    // identity-type second term: a(x)b with the graded sign
    add_tensor(img, basis_vec(f, n, i), basis_vec(f, n, j), sign_of(l, i, j) * be, n);
    return img;
  });
}

// ---------------------------------------------------------------------------

namespace {

FiniteAbelianGroup::Elem homogeneous_grade(const GThetaLieAlgebra& l, std::span<const Scalar> z) {
  std::optional<FiniteAbelianGroup::Elem> grade;
  for (int i = 0; i < l.dim(); ++i) {
    if (z[i].is_zero()) continue;
    if (!grade) {
      grade = l.grade(i);
    } else if (*grade != l.grade(i)) {
      throw InhomogeneousZ("z mixes grades");
    }
  }
  return grade.value_or(l.group().zero());
}

} // namespace

bool gtheta_condition(const GThetaLieAlgebra& l, std::span<const Scalar> z) {
  check_z_len(z, l.dim());
  auto g = homogeneous_grade(l, z);
  const auto& theta = l.theta();
  if (theta.exponent_of(g, g) != 0) return false;
  for (int i = 0; i < l.dim(); ++i) {
    const auto& a = l.grade(i);
    if (theta.exponent_of(g, a) != 0 || theta.exponent_of(a, g) != 0) return false;
  }
  return true;
}

LinearOperator build_gtheta(const GThetaLieAlgebra& l, std::span<const Scalar> z,
                            const Scalar& alpha) {
  check_z_len(z, l.dim());
  homogeneous_grade(l, z); // InhomogeneousZ on mixed grades
  if (!is_central(l, z)) throw NotCentral("z is not in the centre");
  const int n = l.dim();
  const ScalarField& f = l.field();
  return build_from_pair_images(f, n, [&](int i, int j) {
    std::vector<Scalar> img(n * n, Scalar::zero(f));
    add_tensor(img, l.bracket_of(i, j), z, alpha, n);
    add_tensor(img, basis_vec(f, n, i), basis_vec(f, n, j), l.theta_value(i, j), n);
    return img;
  });
}

LinearOperator gtheta_inverse(const GThetaLieAlgebra& l, std::span<const Scalar> z,
                              const Scalar& alpha) {
  check_z_len(z, l.dim());
  homogeneous_grade(l, z);
  if (!is_central(l, z)) throw NotCentral("z is not in the centre");
  const int n = l.dim();
  const ScalarField& f = l.field();
  return build_from_pair_images(f, n, [&](int i, int j) {
    std::vector<Scalar> img(n * n, Scalar::zero(f));
    add_tensor(img, l.bracket_of(j, i), z, alpha, n);
    add_tensor(img, basis_vec(f, n, i), basis_vec(f, n, j), l.theta_value(j, i), n);
    return img;
  });
}

LinearOperator build_classical_r(const LieSuperalgebra& l, std::span<const Scalar> z) {
  check_z_len(z, l.dim());
  if (!is_central(l, z)) throw NotCentral("z is not in the centre");
  const int n = l.dim();
  const ScalarField& f = l.field();
  Scalar one = Scalar::one(f);
  return build_from_pair_images(f, n, [&](int i, int j) {
    std::vector<Scalar> img(n * n, Scalar::zero(f));
    add_tensor(img, l.bracket_of(i, j), z, one, n);
    return img;
  });
}

// ---------------------------------------------------------------------------
// Recipes

std::string family_name(Family f) {
  switch (f) {
    case Family::DN: return "dn";
    case Family::Dim2Canonical: return "dim2-canonical";
    case Family::Colored: return "colored";
    case Family::OneParam: return "one-param";
    case Family::WXZAlgebra: return "wxz-algebra";
    case Family::WXZFromColored: return "wxz-from-colored";
    case Family::Split: return "split";
    case Family::SuperPhi: return "super-phi";
    case Family::SuperPhiAB: return "super-phi-ab";
    case Family::SuperColored: return "super-colored";
    case Family::GTheta: return "gtheta";
    case Family::ClassicalR: return "classical-r";
  }
  return "?";
}

Family family_from_name(const std::string& name) {
  for (Family f : {Family::DN, Family::Dim2Canonical, Family::Colored, Family::OneParam,
                   Family::WXZAlgebra, Family::WXZFromColored, Family::Split, Family::SuperPhi,
                   Family::SuperPhiAB, Family::SuperColored, Family::GTheta, Family::ClassicalR})
    if (family_name(f) == name) return f;
  throw UnknownName("no operator family named '" + name + "'");
}

const Scalar& Recipe::param(const std::string& key) const {
  auto it = params.find(key);
  if (it == params.end()) throw BadParameter("recipe parameter '" + key + "' is not bound");
  return it->second;
}

const ScalarField& Recipe::field() const {
  if (structure) return structure_field(*structure);
  if (split_field) return *split_field;
  throw BadParameter("recipe has no structure or field");
}

namespace {

const AssociativeAlgebra& assoc_of(const Recipe& r) {
  if (!r.structure) throw BadParameter("recipe needs a structure");
  const auto* a = std::get_if<AssociativeAlgebra>(&*r.structure);
  if (!a) throw BadParameter("family '" + family_name(r.family) + "' needs an associative algebra");
  return *a;
}

const LieSuperalgebra& super_of(const Recipe& r) {
  if (!r.structure) throw BadParameter("recipe needs a structure");
  const auto* l = std::get_if<LieSuperalgebra>(&*r.structure);
  if (!l) throw BadParameter("family '" + family_name(r.family) + "' needs a Lie superalgebra");
  return *l;
}

const GThetaLieAlgebra& gtheta_of(const Recipe& r) {
  if (!r.structure) throw BadParameter("recipe needs a structure");
  const auto* l = std::get_if<GThetaLieAlgebra>(&*r.structure);
  if (!l) throw BadParameter("family '" + family_name(r.family) + "' needs a (G,theta)-Lie algebra");
  return *l;
}

} // namespace

std::vector<Scalar> auto_center(const AnyStructure& s) {
  std::vector<std::vector<Scalar>> basis;
  if (const auto* l = std::get_if<LieSuperalgebra>(&s)) {
    basis = compute_center(*l, /*even_only=*/true);
  } else if (const auto* g = std::get_if<GThetaLieAlgebra>(&s)) {
    basis = compute_center(*g, /*identity_grade_only=*/true);
  } else {
    throw BadParameter("auto-center needs a Lie-type structure");
  }
  if (basis.size() != 1)
    throw BadParameter("auto-center needs a one-dimensional even centre, found dimension " +
                       std::to_string(basis.size()));
  return basis.front();
}

LinearOperator eval_constant(const Recipe& r) {
  switch (r.family) {
    case Family::DN:
      return build_dn(assoc_of(r), r.param("alpha"), r.param("beta"), r.param("gamma"));
    case Family::Dim2Canonical:
      return build_dim2_canonical(r.field(), r.param("q"), r.param("eta"));
    case Family::Split:
      if (!r.split_f || !r.split_g) throw BadParameter("split recipe needs f and g tensors");
      return build_split(r.field(), r.split_dim, r.split_c_index, *r.split_f, *r.split_g);
    case Family::SuperPhi:
      return build_super_phi(super_of(r), r.z, r.param("alpha"));
    case Family::SuperPhiAB:
      return build_super_phi_ab(super_of(r), r.z, r.param("alpha"), r.param("beta"));
    case Family::GTheta:
      return build_gtheta(gtheta_of(r), r.z, r.param("alpha"));
    case Family::ClassicalR:
      return build_classical_r(super_of(r), r.z);
    default:
      throw BadParameter("family '" + family_name(r.family) + "' is not a constant operator");
  }
}

std::optional<LinearOperator> eval_closed_inverse(const Recipe& r) {
  switch (r.family) {
    case Family::DN:
      return dn_inverse(assoc_of(r), r.param("alpha"), r.param("beta"), r.param("gamma"));
    case Family::SuperPhi:
      return super_phi_inverse(super_of(r), r.z, r.param("alpha"));
    case Family::SuperPhiAB:
      return super_phi_ab_inverse(super_of(r), r.z, r.param("alpha"), r.param("beta"));
    case Family::GTheta:
      return gtheta_inverse(gtheta_of(r), r.z, r.param("alpha"));
    default:
      return std::nullopt;
  }
}

LinearOperator eval_at_colors(const Recipe& r, const Scalar& u, const Scalar& v) {
  switch (r.family) {
    case Family::Colored:
      return build_colored(assoc_of(r), r.param("p"), r.param("q"), u, v);
    case Family::SuperColored: {
      if (!r.table) throw BadParameter("super-colored recipe needs tables");
      const auto& t = *r.table;
      return build_super_colored(super_of(r), r.z, t, t.color_index(u), t.color_index(v));
    }
    default:
      throw BadParameter("family '" + family_name(r.family) + "' is not colored");
  }
}

LinearOperator eval_one_param_at(const Recipe& r, const Scalar& s) {
  if (r.family != Family::OneParam)
    throw BadParameter("family '" + family_name(r.family) + "' is not one-parameter");
  return build_one_param(assoc_of(r), r.param("q"), s);
}

ColoredFamily colored_family(const Recipe& r) {
  return [&r](const Scalar& u, const Scalar& v) { return eval_at_colors(r, u, v); };
}

WxzTriple eval_wxz(const Recipe& r) {
  switch (r.family) {
    case Family::WXZAlgebra:
      return build_wxz_algebra(assoc_of(r), r.param("lambda"), r.param("mu"));
    case Family::WXZFromColored: {
      if (!r.base_family) throw BadParameter("wxz-from-colored recipe needs a base family");
      if (!r.color_s || !r.color_t) throw BadParameter("wxz-from-colored recipe needs colors s, t");
      Recipe base = r;
      base.family = *r.base_family;
      return {eval_at_colors(base, *r.color_s, *r.color_s),
              eval_at_colors(base, *r.color_s, *r.color_t),
              eval_at_colors(base, *r.color_t, *r.color_t)};
    }
    default:
      throw BadParameter("family '" + family_name(r.family) + "' is not a WXZ system");
  }
}

} // namespace yb
