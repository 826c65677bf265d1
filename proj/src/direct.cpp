// Direct-application oracle: every operator family re-implemented as a sparse
// coordinate map computed straight from structure constants. This path never
// forms dense matrices or Kronecker lifts; it exists to cross-check them.

#include <chrono>

#include "yb/verify.hpp"

namespace yb {

namespace {

void sparse_add(SparseVec& v, int idx, const Scalar& c) {
  if (c.is_zero()) return;
  auto it = v.find(idx);
  if (it == v.end()) {
    v.emplace(idx, c);
    return;
  }
  it->second += c;
  if (it->second.is_zero()) v.erase(it);
}

// adds coeff * (x (x) y) where x, y are coordinate vectors of length n
void sparse_add_tensor(SparseVec& v, std::span<const Scalar> x, std::span<const Scalar> y,
                       const Scalar& coeff, int n) {
  if (coeff.is_zero()) return;
  for (int a = 0; a < n; ++a) {
    if (x[a].is_zero()) continue;
    Scalar cx = coeff * x[a];
    for (int b = 0; b < n; ++b) {
      if (y[b].is_zero()) continue;
      sparse_add(v, a * n + b, cx * y[b]);
    }
  }
}

std::vector<Scalar> unit_coords(const ScalarField& f, int n, int i) {
  std::vector<Scalar> v(n, Scalar::zero(f));
  v[i] = Scalar::one(f);
  return v;
}

// ---------------------------------------------------------------------------
// Per-family appliers

class DnApplier final : public PairApplier {
public:
  DnApplier(const AssociativeAlgebra& a, Scalar alpha, Scalar beta, Scalar gamma)
      : a_(a), alpha_(std::move(alpha)), beta_(std::move(beta)), gamma_(std::move(gamma)) {}
  int base_dim() const override { return a_.dim(); }
  const ScalarField& field() const override { return a_.field(); }
  SparseVec pair_image(int i, int j) const override {
    const int n = a_.dim();
    SparseVec v;
    sparse_add_tensor(v, a_.product(i, j), a_.unit(), alpha_, n);
    sparse_add_tensor(v, a_.unit(), a_.product(i, j), beta_, n);
    sparse_add(v, i * n + j, -gamma_);
    return v;
  }

private:
  const AssociativeAlgebra& a_;
  Scalar alpha_, beta_, gamma_;
};

// covers the colored (Thm-3.1-shaped) and one-parameter operators:
// c_left ab(x)1 + c_right 1(x)ab + c_twist b(x)a
class AlgebraTwistApplier final : public PairApplier {
public:
  AlgebraTwistApplier(const AssociativeAlgebra& a, Scalar left, Scalar right, Scalar twist)
      : a_(a), left_(std::move(left)), right_(std::move(right)), twist_(std::move(twist)) {}
  int base_dim() const override { return a_.dim(); }
  const ScalarField& field() const override { return a_.field(); }
  SparseVec pair_image(int i, int j) const override {
    const int n = a_.dim();
    SparseVec v;
    sparse_add_tensor(v, a_.product(i, j), a_.unit(), left_, n);
    sparse_add_tensor(v, a_.unit(), a_.product(i, j), right_, n);
    sparse_add(v, j * n + i, twist_);
    return v;
  }

private:
  const AssociativeAlgebra& a_;
  Scalar left_, right_, twist_;
};

class Dim2CanonicalApplier final : public PairApplier {
public:
  Dim2CanonicalApplier(ScalarField f, Scalar q, Scalar eta)
      : f_(std::move(f)), q_(std::move(q)), eta_(std::move(eta)) {}
  int base_dim() const override { return 2; }
  const ScalarField& field() const override { return f_; }
  SparseVec pair_image(int i, int j) const override {
    // rows (1,0,0,0), (0,1,0,0), (0,1-q,q,0), (eta,0,0,-q), read by column
    SparseVec v;
    Scalar one = Scalar::one(f_);
    const int col = i * 2 + j;
    switch (col) {
      case 0:
        sparse_add(v, 0, one);
        sparse_add(v, 3, eta_);
        break;
      case 1:
        sparse_add(v, 1, one);
        sparse_add(v, 2, one - q_);
        break;
      case 2:
        sparse_add(v, 2, q_);
        break;
      case 3:
        sparse_add(v, 3, -q_);
        break;
    }
    return v;
  }

private:
  ScalarField f_;
  Scalar q_, eta_;
};

class SplitApplier final : public PairApplier {
public:
  SplitApplier(ScalarField field, int n, int c, const BilinearMap& f, const BilinearMap& g)
      : field_(std::move(field)), n_(n), c_(c), f_(f), g_(g) {}
  int base_dim() const override { return n_; }
  const ScalarField& field() const override { return field_; }
  SparseVec pair_image(int i, int j) const override {
    SparseVec v;
    Scalar one = Scalar::one(field_);
    sparse_add_tensor(v, f_.image(i, j), unit_coords(field_, n_, c_), one, n_);
    sparse_add_tensor(v, unit_coords(field_, n_, c_), g_.image(i, j), one, n_);
    return v;
  }

private:
  ScalarField field_;
  int n_, c_;
  const BilinearMap &f_, &g_;
};

// alpha [x,y](x)z + beta (-1)^{|x||y|} (y(x)x or x(x)y)
class SuperApplier final : public PairApplier {
public:
  SuperApplier(const LieSuperalgebra& l, std::vector<Scalar> z, Scalar alpha, Scalar beta,
               bool twist_term)
      : l_(l), z_(std::move(z)), alpha_(std::move(alpha)), beta_(std::move(beta)),
        twist_term_(twist_term) {}
  int base_dim() const override { return l_.dim(); }
  const ScalarField& field() const override { return l_.field(); }
  SparseVec pair_image(int i, int j) const override {
    const int n = l_.dim();
    SparseVec v;
    sparse_add_tensor(v, l_.bracket_of(i, j), z_, alpha_, n);
    Scalar sign = Scalar::from_int((l_.grade(i) * l_.grade(j)) % 2 ? -1 : 1, l_.field());
    sparse_add(v, twist_term_ ? j * n + i : i * n + j, sign * beta_);
    return v;
  }

private:
  const LieSuperalgebra& l_;
  std::vector<Scalar> z_;
  Scalar alpha_, beta_;
  bool twist_term_;
};

class GThetaApplier final : public PairApplier {
public:
  GThetaApplier(const GThetaLieAlgebra& l, std::vector<Scalar> z, Scalar alpha)
      : l_(l), z_(std::move(z)), alpha_(std::move(alpha)) {}
  int base_dim() const override { return l_.dim(); }
  const ScalarField& field() const override { return l_.field(); }
  SparseVec pair_image(int i, int j) const override {
    const int n = l_.dim();
    SparseVec v;
    sparse_add_tensor(v, l_.bracket_of(i, j), z_, alpha_, n);
    sparse_add(v, i * n + j, l_.theta_value(i, j));
    return v;
  }

private:
  const GThetaLieAlgebra& l_;
  std::vector<Scalar> z_;
  Scalar alpha_;
};

class ClassicalApplier final : public PairApplier {
public:
  ClassicalApplier(const LieSuperalgebra& l, std::vector<Scalar> z) : l_(l), z_(std::move(z)) {}
  int base_dim() const override { return l_.dim(); }
  const ScalarField& field() const override { return l_.field(); }
  SparseVec pair_image(int i, int j) const override {
    SparseVec v;
    sparse_add_tensor(v, l_.bracket_of(i, j), z_, Scalar::one(l_.field()), l_.dim());
    return v;
  }

private:
  const LieSuperalgebra& l_;
  std::vector<Scalar> z_;
};

class MatrixApplier final : public PairApplier {
public:
  explicit MatrixApplier(const LinearOperator& m) : m_(m) {
    n_ = m.base_dim();
    if (n_ * n_ != m.dim()) throw BadDimension("matrix applier needs an operator on V(x)V");
  }
  int base_dim() const override { return n_; }
  const ScalarField& field() const override { return m_.field(); }
  SparseVec pair_image(int i, int j) const override {
    SparseVec v;
    const int col = i * n_ + j;
    for (int r = 0; r < m_.dim(); ++r) sparse_add(v, r, m_.at(r, col));
    return v;
  }

private:
  const LinearOperator& m_;
  int n_;
};

const AssociativeAlgebra& recipe_assoc(const Recipe& r) {
  const auto* a = std::get_if<AssociativeAlgebra>(&*r.structure);
  if (!a) throw BadParameter("recipe structure is not an associative algebra");
  return *a;
}

const LieSuperalgebra& recipe_super(const Recipe& r) {
  const auto* l = std::get_if<LieSuperalgebra>(&*r.structure);
  if (!l) throw BadParameter("recipe structure is not a Lie superalgebra");
  return *l;
}

} // namespace

std::unique_ptr<PairApplier> direct_applier(const Recipe& r) {
  switch (r.family) {
    case Family::DN:
      return std::make_unique<DnApplier>(recipe_assoc(r), r.param("alpha"), r.param("beta"),
                                         r.param("gamma"));
    case Family::Dim2Canonical:
      return std::make_unique<Dim2CanonicalApplier>(r.field(), r.param("q"), r.param("eta"));
    case Family::Split:
      return std::make_unique<SplitApplier>(r.field(), r.split_dim, r.split_c_index, *r.split_f,
                                            *r.split_g);
    case Family::SuperPhi:
      return std::make_unique<SuperApplier>(recipe_super(r), r.z, r.param("alpha"),
                                            Scalar::one(r.field()), /*twist_term=*/true);
    case Family::SuperPhiAB:
      return std::make_unique<SuperApplier>(recipe_super(r), r.z, r.param("alpha"),
                                            r.param("beta"), /*twist_term=*/true);
    case Family::GTheta:
      return std::make_unique<GThetaApplier>(std::get<GThetaLieAlgebra>(*r.structure), r.z,
                                             r.param("alpha"));
    case Family::ClassicalR:
      return std::make_unique<ClassicalApplier>(recipe_super(r), r.z);
    default:
      throw BadParameter("no constant direct applier for family " + family_name(r.family));
  }
}

std::unique_ptr<PairApplier> direct_applier_at(const Recipe& r, const Scalar& u, const Scalar& v) {
  switch (r.family) {
    case Family::Colored: {
      const Scalar& p = r.param("p");
      const Scalar& q = r.param("q");
      return std::make_unique<AlgebraTwistApplier>(recipe_assoc(r), q * (u - v), p * (u - v),
                                                   -(p * u - q * v));
    }
    case Family::SuperColored: {
      const ParamTable& t = *r.table;
      std::size_t ui = t.color_index(u), vi = t.color_index(v);
      return std::make_unique<SuperApplier>(recipe_super(r), r.z, t.alpha_at(ui, vi),
                                            t.beta_at(ui, vi), /*twist_term=*/false);
    }
    default:
      throw BadParameter("family " + family_name(r.family) + " is not colored");
  }
}

std::unique_ptr<PairApplier> direct_applier_one_param(const Recipe& r, const Scalar& s) {
  if (r.family != Family::OneParam)
    throw BadParameter("family " + family_name(r.family) + " is not one-parameter");
  const Scalar& q = r.param("q");
  Scalar one = Scalar::one(r.field());
  return std::make_unique<AlgebraTwistApplier>(recipe_assoc(r), q * (s - one), s - one, -(s - q));
}

std::unique_ptr<PairApplier> matrix_applier(const LinearOperator& m) {
  return std::make_unique<MatrixApplier>(m);
}

SparseVec apply_lifted(const PairApplier& op, LiftPos pos, const SparseVec& v) {
  const int n = op.base_dim();
  SparseVec out;
  for (const auto& [idx, coeff] : v) {
    const int i = idx / (n * n);
    const int j = (idx / n) % n;
    const int k = idx % n;
    int a = i, b = j, spectator = k;
    if (pos == LiftPos::P13) {
      a = i;
      b = k;
      spectator = j;
    } else if (pos == LiftPos::P23) {
      a = j;
      b = k;
      spectator = i;
    }
    for (const auto& [pair_idx, pc] : op.pair_image(a, b)) {
      const int na = pair_idx / n, nb = pair_idx % n;
      int out_idx = 0;
      switch (pos) {
        case LiftPos::P12: out_idx = (na * n + nb) * n + spectator; break;
        case LiftPos::P13: out_idx = (na * n + spectator) * n + nb; break;
        case LiftPos::P23: out_idx = (spectator * n + na) * n + nb; break;
      }
      sparse_add(out, out_idx, coeff * pc);
    }
  }
  return out;
}

bool qybe_holds_direct(const PairApplier& op) {
  const int n = op.base_dim();
  const int d3 = n * n * n;
  const ScalarField& f = op.field();
  for (int b = 0; b < d3; ++b) {
    SparseVec e;
    e.emplace(b, Scalar::one(f));
    SparseVec lhs = apply_lifted(op, LiftPos::P23, e);
    lhs = apply_lifted(op, LiftPos::P13, lhs);
    lhs = apply_lifted(op, LiftPos::P12, lhs);
    SparseVec rhs = apply_lifted(op, LiftPos::P12, e);
    rhs = apply_lifted(op, LiftPos::P13, rhs);
    rhs = apply_lifted(op, LiftPos::P23, rhs);
    if (lhs != rhs) return false;
  }
  return true;
}

// ---------------------------------------------------------------------------
// oracle_equivalence

namespace {

struct LiftedFactor {
  const PairApplier* op;
  LiftPos pos;
};

// one side of an identity: product of lifted factors (leftmost applied last)
// or a sum of commutators of two lifted factors
struct Side {
  std::vector<LiftedFactor> product;
};

SparseVec apply_product(std::span<const LiftedFactor> factors, int basis_index,
                        const ScalarField& f) {
  SparseVec v;
  v.emplace(basis_index, Scalar::one(f));
  for (std::size_t i = factors.size(); i-- > 0;)
    v = apply_lifted(*factors[i].op, factors[i].pos, v);
  return v;
}

// compares matrix columns against direct application for all basis vectors
bool columns_agree(const LinearOperator& matrix_side, std::span<const LiftedFactor> factors,
                   Witness* witness) {
  const ScalarField& f = matrix_side.field();
  const int d = matrix_side.dim();
  const int n = matrix_side.base_dim();
  for (int b = 0; b < d; ++b) {
    SparseVec direct = apply_product(factors, b, f);
    for (int r = 0; r < d; ++r) {
      auto it = direct.find(r);
      Scalar dv = it == direct.end() ? Scalar::zero(f) : it->second;
      if (matrix_side.at(r, b) == dv) continue;
      if (witness) {
        witness->row = r;
        witness->col = b;
        witness->col_basis = {b / (n * n), (b / n) % n, b % n};
        witness->lhs = matrix_side.at(r, b).str();
        witness->rhs = dv.str();
      }
      return false;
    }
  }
  return true;
}

// sum of commutators [A_i, B_i] of lifted factors, compared columnwise
bool commutator_sum_agrees(const LinearOperator& matrix_side,
                           std::span<const std::pair<LiftedFactor, LiftedFactor>> pairs,
                           Witness* witness) {
  const ScalarField& f = matrix_side.field();
  const int d = matrix_side.dim();
  const int n = matrix_side.base_dim();
  for (int b = 0; b < d; ++b) {
    SparseVec direct;
    for (const auto& [a, bb] : pairs) {
      LiftedFactor ab[] = {a, bb};
      LiftedFactor ba[] = {bb, a};
      for (const auto& [idx, c] : apply_product(ab, b, f)) sparse_add(direct, idx, c);
      for (const auto& [idx, c] : apply_product(ba, b, f)) sparse_add(direct, idx, -c);
    }
    for (int r = 0; r < d; ++r) {
      auto it = direct.find(r);
      Scalar dv = it == direct.end() ? Scalar::zero(f) : it->second;
      if (matrix_side.at(r, b) == dv) continue;
      if (witness) {
        witness->row = r;
        witness->col = b;
        witness->col_basis = {b / (n * n), (b / n) % n, b % n};
        witness->lhs = matrix_side.at(r, b).str();
        witness->rhs = dv.str();
      }
      return false;
    }
  }
  return true;
}

CheckReport agree_report(const std::string& check, bool ok, const Witness& w, double elapsed) {
  CheckReport rep;
  rep.check = "oracle-" + check;
  rep.holds = ok;
  if (!ok) rep.witness = w;
  rep.elapsed = elapsed;
  return rep;
}

} // namespace

CheckReport oracle_equivalence(const Recipe& r, const std::string& check) {
  using Clock = std::chrono::steady_clock;
  auto t0 = Clock::now();
  auto elapsed = [&] { return std::chrono::duration<double>(Clock::now() - t0).count(); };
  Witness w;

  auto product_case = [&](const LinearOperator& mat, std::vector<LiftPos> lpos,
                          std::vector<LiftPos> rpos,
                          const PairApplier& ap) -> CheckReport {
    LinearOperator lhs = lift(mat, lpos[0]) * lift(mat, lpos[1]) * lift(mat, lpos[2]);
    LinearOperator rhs = lift(mat, rpos[0]) * lift(mat, rpos[1]) * lift(mat, rpos[2]);
    std::vector<LiftedFactor> lf, rf;
    for (LiftPos p : lpos) lf.push_back({&ap, p});
    for (LiftPos p : rpos) rf.push_back({&ap, p});
    bool ok = columns_agree(lhs, lf, &w) && columns_agree(rhs, rf, &w);
    return agree_report(check, ok, w, elapsed());
  };

  if (check == "braid") {
    LinearOperator mat = eval_constant(r);
    auto ap = direct_applier(r);
    return product_case(mat, {LiftPos::P12, LiftPos::P23, LiftPos::P12},
                        {LiftPos::P23, LiftPos::P12, LiftPos::P23}, *ap);
  }
  if (check == "qybe") {
    LinearOperator mat = eval_constant(r);
    auto ap = direct_applier(r);
    return product_case(mat, {LiftPos::P12, LiftPos::P13, LiftPos::P23},
                        {LiftPos::P23, LiftPos::P13, LiftPos::P12}, *ap);
  }
  if (check == "colored") {
    // all color triples over the recipe's color set
    for (const Scalar& u : r.colors)
      for (const Scalar& v : r.colors)
        for (const Scalar& ww : r.colors) {
          LinearOperator muv = eval_at_colors(r, u, v);
          LinearOperator muw = eval_at_colors(r, u, ww);
          LinearOperator mvw = eval_at_colors(r, v, ww);
          auto auv = direct_applier_at(r, u, v);
          auto auw = direct_applier_at(r, u, ww);
          auto avw = direct_applier_at(r, v, ww);
          LinearOperator lhs = lift(muv, LiftPos::P12) * lift(muw, LiftPos::P13) * lift(mvw, LiftPos::P23);
          LinearOperator rhs = lift(mvw, LiftPos::P23) * lift(muw, LiftPos::P13) * lift(muv, LiftPos::P12);
          std::vector<LiftedFactor> lf = {{auv.get(), LiftPos::P12}, {auw.get(), LiftPos::P13}, {avw.get(), LiftPos::P23}};
          std::vector<LiftedFactor> rf = {{avw.get(), LiftPos::P23}, {auw.get(), LiftPos::P13}, {auv.get(), LiftPos::P12}};
          if (!columns_agree(lhs, lf, &w) || !columns_agree(rhs, rf, &w))
            return agree_report(check, false, w, elapsed());
        }
    return agree_report(check, true, w, elapsed());
  }
  if (check == "one-param") {
    for (const Scalar& s1 : r.colors)
      for (const Scalar& s2 : r.colors)
        for (const Scalar& s3 : r.colors) {
          LinearOperator m12 = eval_one_param_at(r, s1 / s2);
          LinearOperator m13 = eval_one_param_at(r, s1 / s3);
          LinearOperator m23 = eval_one_param_at(r, s2 / s3);
          auto a12 = direct_applier_one_param(r, s1 / s2);
          auto a13 = direct_applier_one_param(r, s1 / s3);
          auto a23 = direct_applier_one_param(r, s2 / s3);
          LinearOperator lhs = lift(m12, LiftPos::P12) * lift(m13, LiftPos::P13) * lift(m23, LiftPos::P23);
          LinearOperator rhs = lift(m23, LiftPos::P23) * lift(m13, LiftPos::P13) * lift(m12, LiftPos::P12);
          std::vector<LiftedFactor> lf = {{a12.get(), LiftPos::P12}, {a13.get(), LiftPos::P13}, {a23.get(), LiftPos::P23}};
          std::vector<LiftedFactor> rf = {{a23.get(), LiftPos::P23}, {a13.get(), LiftPos::P13}, {a12.get(), LiftPos::P12}};
          if (!columns_agree(lhs, lf, &w) || !columns_agree(rhs, rf, &w))
            return agree_report(check, false, w, elapsed());
        }
    return agree_report(check, true, w, elapsed());
  }
  if (check == "wxz") {
    WxzTriple t = eval_wxz(r);
    Recipe base = r;
    std::unique_ptr<PairApplier> aw, ax, az;
    if (r.family == Family::WXZAlgebra) {
      const Scalar& lam = r.param("lambda");
      const Scalar& mu = r.param("mu");
      const auto& alg = std::get<AssociativeAlgebra>(*r.structure);
      Scalar one = Scalar::one(r.field());
      aw = std::make_unique<AlgebraTwistApplier>(alg, one, lam, -one);
      ax = std::make_unique<AlgebraTwistApplier>(alg, one, one, -one);
      az = std::make_unique<AlgebraTwistApplier>(alg, mu, one, -one);
    } else {
      base.family = *r.base_family;
      aw = direct_applier_at(base, *r.color_s, *r.color_s);
      ax = direct_applier_at(base, *r.color_s, *r.color_t);
      az = direct_applier_at(base, *r.color_t, *r.color_t);
    }
    struct Cond {
      const LinearOperator *ma, *mb, *mc;
      const PairApplier *pa, *pb, *pc;
    };
    const Cond conds[] = {
        {&t.w, &t.w, &t.w, aw.get(), aw.get(), aw.get()},
        {&t.z, &t.z, &t.z, az.get(), az.get(), az.get()},
        {&t.w, &t.x, &t.x, aw.get(), ax.get(), ax.get()},
        {&t.x, &t.x, &t.z, ax.get(), ax.get(), az.get()},
    };
    for (const Cond& c : conds) {
      LinearOperator mat = yb_commutator(*c.ma, *c.mb, *c.mc);
      // [R,S,T] = (R12 S13) T23 - (T23 S13) R12: two products compared as a sum
      const ScalarField& f = mat.field();
      const int d = mat.dim();
      const int n = mat.base_dim();
      std::vector<LiftedFactor> fwd = {{c.pa, LiftPos::P12}, {c.pb, LiftPos::P13}, {c.pc, LiftPos::P23}};
      std::vector<LiftedFactor> bwd = {{c.pc, LiftPos::P23}, {c.pb, LiftPos::P13}, {c.pa, LiftPos::P12}};
      for (int b = 0; b < d; ++b) {
        SparseVec direct = apply_product(fwd, b, f);
        for (const auto& [idx, cc] : apply_product(bwd, b, f)) sparse_add(direct, idx, -cc);
        for (int row = 0; row < d; ++row) {
          auto it = direct.find(row);
          Scalar dv = it == direct.end() ? Scalar::zero(f) : it->second;
          if (mat.at(row, b) == dv) continue;
          w.row = row;
          w.col = b;
          w.col_basis = {b / (n * n), (b / n) % n, b % n};
          w.lhs = mat.at(row, b).str();
          w.rhs = dv.str();
          return agree_report(check, false, w, elapsed());
        }
      }
    }
    return agree_report(check, true, w, elapsed());
  }
  if (check == "classical") {
    LinearOperator mat = eval_constant(r);
    auto ap = direct_applier(r);
    LinearOperator r12 = lift(mat, LiftPos::P12);
    LinearOperator r13 = lift(mat, LiftPos::P13);
    LinearOperator r23 = lift(mat, LiftPos::P23);
    LinearOperator sum = commutator(r12, r13) + commutator(r12, r23) + commutator(r13, r23);
    std::pair<LiftedFactor, LiftedFactor> pairs[] = {
        {{ap.get(), LiftPos::P12}, {ap.get(), LiftPos::P13}},
        {{ap.get(), LiftPos::P12}, {ap.get(), LiftPos::P23}},
        {{ap.get(), LiftPos::P13}, {ap.get(), LiftPos::P23}},
    };
    bool ok = commutator_sum_agrees(sum, pairs, &w);
    return agree_report(check, ok, w, elapsed());
  }
  throw BadParameter("oracle_equivalence: unknown check '" + check + "'");
}

} // namespace yb
