#ifndef YB_OPERATORS_HPP
#define YB_OPERATORS_HPP

#include <functional>
#include <map>
#include <optional>
#include <string>

#include "yb/matrix.hpp"
#include "yb/structures.hpp"

namespace yb {

// ---------------------------------------------------------------------------
// Operators from associative algebras

/// R(a(x)b) = alpha ab(x)1 + beta 1(x)ab - gamma a(x)b on A(x)A.
/// DimTooSmall when dim A < 2.
LinearOperator build_dn(const AssociativeAlgebra& a, const Scalar& alpha, const Scalar& beta,
                        const Scalar& gamma);

enum class DnCase { CaseI, CaseII, CaseIII, Invalid };
std::string dn_case_name(DnCase c);

/// (i) alpha = gamma != 0, beta != 0; (ii) beta = gamma != 0, alpha != 0;
/// (iii) alpha = beta = 0, gamma != 0; Invalid otherwise.
DnCase dn_case(const Scalar& alpha, const Scalar& beta, const Scalar& gamma);

/// Closed-form inverse: R_{1/beta,1/alpha,1/gamma} in cases (i)/(ii),
/// R_{0,0,1/gamma} in case (iii). InvalidCase otherwise.
LinearOperator dn_inverse(const AssociativeAlgebra& a, const Scalar& alpha, const Scalar& beta,
                          const Scalar& gamma);

/// The canonical dimension-2 solution: rows (1,0,0,0), (0,1,0,0),
/// (0,1-q,q,0), (eta,0,0,-q); q != 0, eta in {0,1}.
LinearOperator build_dim2_canonical(const ScalarField& f, const Scalar& q, const Scalar& eta);

/// R(u,v)(a(x)b) = p(u-v) 1(x)ab + q(u-v) ab(x)1 - (pu-qv) b(x)a.
LinearOperator build_colored(const AssociativeAlgebra& a, const Scalar& p, const Scalar& q,
                             const Scalar& u, const Scalar& v);

/// Closed-form inverse of the colored operator; requires pu != qv and
/// qu != pv (NotInvertibleParams otherwise).
LinearOperator colored_inverse(const AssociativeAlgebra& a, const Scalar& p, const Scalar& q,
                               const Scalar& u, const Scalar& v);

/// S(a(x)b) = (s-1) 1(x)ab + q(s-1) ab(x)1 - (s-q) b(x)a, with s standing in
/// for e^lambda (spectral parameters enter multiplicatively). s != 0.
LinearOperator build_one_param(const AssociativeAlgebra& a, const Scalar& q, const Scalar& s);

/// Closed-form inverse; requires s notin {q, 1/q}.
LinearOperator one_param_inverse(const AssociativeAlgebra& a, const Scalar& q, const Scalar& s);

struct WxzTriple {
  LinearOperator w, x, z;
};

/// W = ab(x)1 + lambda 1(x)ab - b(x)a;  Z = mu ab(x)1 + 1(x)ab - b(x)a;
/// X = ab(x)1 + 1(x)ab - b(x)a.
WxzTriple build_wxz_algebra(const AssociativeAlgebra& a, const Scalar& lambda, const Scalar& mu);

using ColoredFamily = std::function<LinearOperator(const Scalar& u, const Scalar& v)>;

/// W = R(s,s), X = R(s,t), Z = R(t,t) from a colored family.
WxzTriple wxz_from_colored(const ColoredFamily& family, const Scalar& s, const Scalar& t);

// ---------------------------------------------------------------------------
// Split construction

/// Bilinear map V(x)V -> V as an N x N x N coefficient tensor.
struct BilinearMap {
  ScalarField field;
  int dim;
  std::vector<Scalar> coef; // (i*dim + j)*dim + k

  static BilinearMap zeros(const ScalarField& f, int n);
  void set(int i, int j, std::vector<Scalar> coords);
  std::span<const Scalar> image(int i, int j) const;
  bool vanishes_on(int c) const; // f = 0 on V(x)e_c + e_c(x)V
};

/// R(v(x)w) = f(v(x)w)(x)c + c(x)g(v(x)w), where c is the basis vector
/// e_{c_index}. HypothesisViolated unless f and g vanish on V(x)c + c(x)V.
LinearOperator build_split(const ScalarField& f, int n, int c_index, const BilinearMap& fmap,
                           const BilinearMap& gmap);

// ---------------------------------------------------------------------------
// Operators from Lie superalgebras

/// phi_alpha: x(x)y -> alpha [x,y](x)z + (-1)^{|x||y|} y(x)x.
/// z must be even and central (NotEvenCentral).
LinearOperator build_super_phi(const LieSuperalgebra& l, std::span<const Scalar> z,
                               const Scalar& alpha);
/// Stated inverse: x(x)y -> alpha z(x)[x,y] + (-1)^{|x||y|} y(x)x.
LinearOperator super_phi_inverse(const LieSuperalgebra& l, std::span<const Scalar> z,
                                 const Scalar& alpha);

/// Two-parameter form: x(x)y -> alpha [x,y](x)z + (-1)^{|x||y|} beta y(x)x.
LinearOperator build_super_phi_ab(const LieSuperalgebra& l, std::span<const Scalar> z,
                                  const Scalar& alpha, const Scalar& beta);
/// Its inverse: x(x)y -> (alpha/beta^2) z(x)[x,y] + (-1)^{|x||y|} (1/beta) y(x)x.
LinearOperator super_phi_ab_inverse(const LieSuperalgebra& l, std::span<const Scalar> z,
                                    const Scalar& alpha, const Scalar& beta);

/// Colored values alpha(u,v), beta(u,v) as finite tables over a color set X.
struct ParamTable {
  std::vector<Scalar> colors;       // X, all distinct
  std::vector<Scalar> alpha, beta;  // |X| x |X| row-major: value at (u_index, v_index)

  static ParamTable from_functions_of_second(std::vector<Scalar> colors, std::vector<Scalar> fvals,
                                             std::vector<Scalar> gvals);
  std::size_t color_index(const Scalar& c) const; // UnknownColor
  const Scalar& alpha_at(std::size_t ui, std::size_t vi) const;
  const Scalar& beta_at(std::size_t ui, std::size_t vi) const;
  /// beta(u,w) alpha(v,w) = alpha(u,w) beta(v,w) for all u,v,w.
  bool constraint_holds() const;
};

/// R(u,v)(a(x)b) = alpha(u,v) [a,b](x)z + beta(u,v) (-1)^{|a||b|} a(x)b.
/// Note the last term is a(x)b, not the graded twist.
LinearOperator build_super_colored(const LieSuperalgebra& l, std::span<const Scalar> z,
                                   const ParamTable& table, std::size_t u_index,
                                   std::size_t v_index);

// ---------------------------------------------------------------------------
// Operators from (G,theta)-Lie algebras

/// R(x(x)y) = alpha [x,y](x)z + theta(a,b) x(x)y for homogeneous x in L_a,
/// y in L_b. z must be central (NotCentral) and homogeneous (InhomogeneousZ).
LinearOperator build_gtheta(const GThetaLieAlgebra& l, std::span<const Scalar> z,
                            const Scalar& alpha);
/// theta(g,a) = theta(a,g) = theta(g,g) = 1 for every grade a occurring in L,
/// where g is the grade of z.
bool gtheta_condition(const GThetaLieAlgebra& l, std::span<const Scalar> z);
/// Stated inverse: x(x)y -> alpha [y,x](x)z + theta(b,a) x(x)y.
LinearOperator gtheta_inverse(const GThetaLieAlgebra& l, std::span<const Scalar> z,
                              const Scalar& alpha);

// ---------------------------------------------------------------------------
// Classical r-matrix

/// r: x(x)y -> [x,y](x)z with z central.
LinearOperator build_classical_r(const LieSuperalgebra& l, std::span<const Scalar> z);

// ---------------------------------------------------------------------------
// Recipes

enum class Family {
  DN,
  Dim2Canonical,
  Colored,
  OneParam,
  WXZAlgebra,
  WXZFromColored,
  Split,
  SuperPhi,
  SuperPhiAB,
  SuperColored,
  GTheta,
  ClassicalR,
};

std::string family_name(Family f);
Family family_from_name(const std::string& name);

/// A named operator family with its structure and parameter bindings.
struct Recipe {
  Family family = Family::DN;
  std::string structure_ref; // catalog name or file path, informational
  std::optional<AnyStructure> structure;
  std::map<std::string, Scalar> params; // alpha, beta, gamma, p, q, s, lambda, mu, eta
  std::vector<Scalar> z;                // resolved central vector (possibly via auto-center)
  bool z_auto = false;
  std::vector<Scalar> colors;
  std::optional<ParamTable> table;
  // split data
  int split_dim = 0;
  int split_c_index = -1;
  std::optional<BilinearMap> split_f, split_g;
  std::optional<ScalarField> split_field;
  // wxz-from-colored
  std::optional<Family> base_family;
  std::optional<Scalar> color_s, color_t;

  const Scalar& param(const std::string& key) const; // BadParameter if unbound
  const ScalarField& field() const;
};

/// Unique even (identity-grade) central basis direction; errors when the
/// centre intersected with the identity-grade part is not one-dimensional.
std::vector<Scalar> auto_center(const AnyStructure& s);

/// Evaluates a recipe for a constant family (everything except Colored,
/// SuperColored, OneParam, and the WXZ triples).
LinearOperator eval_constant(const Recipe& r);
/// Closed-form inverse for families that state one; nullopt when the family
/// has none. Throws when parameters are outside the invertible range.
std::optional<LinearOperator> eval_closed_inverse(const Recipe& r);
/// Colored families evaluated at a pair of colors.
LinearOperator eval_at_colors(const Recipe& r, const Scalar& u, const Scalar& v);
/// One-parameter family evaluated at the multiplicative parameter s.
LinearOperator eval_one_param_at(const Recipe& r, const Scalar& s);
/// WXZ triples (WXZAlgebra, WXZFromColored).
WxzTriple eval_wxz(const Recipe& r);
/// The colored family as a callable (Colored or SuperColored).
ColoredFamily colored_family(const Recipe& r);

} // namespace yb

#endif
