#include "yb/verify.hpp"

#include <chrono>

namespace yb {

namespace {

using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point t0) {
  return std::chrono::duration<double>(Clock::now() - t0).count();
}

std::vector<int> decompose_index(int idx, int n, int factors) {
  std::vector<int> out(factors);
  for (int f = factors; f-- > 0;) {
    out[f] = idx % n;
    idx /= n;
  }
  return out;
}

int tensor_factors(int dim, int n) {
  int f = 0, d = 1;
  while (d < dim) {
    d *= n;
    ++f;
  }
  return d == dim ? f : 1;
}

CheckReport equality_report(std::string name, const LinearOperator& lhs,
                            const LinearOperator& rhs, Clock::time_point t0) {
  CheckReport rep;
  rep.check = std::move(name);
  rep.holds = true;
  const int d = lhs.dim();
  const int n = lhs.base_dim();
  for (int r = 0; r < d && rep.holds; ++r)
    for (int c = 0; c < d; ++c) {
      if (lhs.at(r, c) == rhs.at(r, c)) continue;
      rep.holds = false;
      Witness w;
      w.row = r;
      w.col = c;
      w.col_basis = decompose_index(c, n, tensor_factors(d, n));
      w.lhs = lhs.at(r, c).str();
      w.rhs = rhs.at(r, c).str();
      rep.witness = std::move(w);
      break;
    }
  rep.elapsed = seconds_since(t0);
  return rep;
}

CheckReport zero_report(std::string name, const LinearOperator& m, Clock::time_point t0) {
  LinearOperator zero(m.field(), m.dim(), m.base_dim());
  return equality_report(std::move(name), m, zero, t0);
}

int base_of_square(const LinearOperator& r) {
  const int n = r.base_dim();
  if (n * n != r.dim())
    throw BadDimension("operator dim " + std::to_string(r.dim()) + " is not N^2");
  return n;
}

} // namespace

CheckReport& CheckReport::with_param(const std::string& k, const std::string& v) {
  params.emplace_back(k, v);
  return *this;
}

CheckReport check_braid(const LinearOperator& r) {
  auto t0 = Clock::now();
  base_of_square(r);
  LinearOperator r12 = lift(r, LiftPos::P12);
  LinearOperator r23 = lift(r, LiftPos::P23);
  return equality_report("braid", r12 * r23 * r12, r23 * r12 * r23, t0);
}

CheckReport check_qybe(const LinearOperator& r) {
  auto t0 = Clock::now();
  base_of_square(r);
  LinearOperator r12 = lift(r, LiftPos::P12);
  LinearOperator r13 = lift(r, LiftPos::P13);
  LinearOperator r23 = lift(r, LiftPos::P23);
  return equality_report("qybe", r12 * r13 * r23, r23 * r13 * r12, t0);
}

CheckReport check_colored_qybe(const ColoredFamily& family, const Scalar& u, const Scalar& v,
                               const Scalar& w) {
  auto t0 = Clock::now();
  LinearOperator ruv = lift(family(u, v), LiftPos::P12);
  LinearOperator ruw = lift(family(u, w), LiftPos::P13);
  LinearOperator rvw = lift(family(v, w), LiftPos::P23);
  CheckReport rep = equality_report("colored-qybe", ruv * ruw * rvw, rvw * ruw * ruv, t0);
  rep.with_param("u", u.str()).with_param("v", v.str()).with_param("w", w.str());
  return rep;
}

std::vector<CheckReport> check_colored_qybe_suite(const ColoredFamily& family,
                                                  std::span<const Scalar> xs) {
  std::vector<CheckReport> out;
  for (const Scalar& u : xs)
    for (const Scalar& v : xs)
      for (const Scalar& w : xs) out.push_back(check_colored_qybe(family, u, v, w));
  return out;
}

CheckReport check_one_param(const OneParamFamily& family, const Scalar& s1, const Scalar& s2,
                            const Scalar& s3) {
  auto t0 = Clock::now();
  if (s1.is_zero() || s2.is_zero() || s3.is_zero())
    throw BadParameter("spectral parameters must be nonzero");
  LinearOperator s12 = lift(family(s1 / s2), LiftPos::P12);
  LinearOperator s13 = lift(family(s1 / s3), LiftPos::P13);
  LinearOperator s23 = lift(family(s2 / s3), LiftPos::P23);
  CheckReport rep = equality_report("one-param", s12 * s13 * s23, s23 * s13 * s12, t0);
  rep.with_param("s1", s1.str()).with_param("s2", s2.str()).with_param("s3", s3.str());
  return rep;
}

LinearOperator yb_commutator(const LinearOperator& r, const LinearOperator& s,
                             const LinearOperator& t) {
  LinearOperator r12 = lift(r, LiftPos::P12);
  LinearOperator s13 = lift(s, LiftPos::P13);
  LinearOperator t23 = lift(t, LiftPos::P23);
  return r12 * s13 * t23 - t23 * s13 * r12;
}

CheckReport check_wxz(const LinearOperator& w, const LinearOperator& x, const LinearOperator& z) {
  auto t0 = Clock::now();
  struct Cond {
    const char* name;
    const LinearOperator *a, *b, *c;
  };
  const Cond conds[] = {
      {"[W,W,W]", &w, &w, &w},
      {"[Z,Z,Z]", &z, &z, &z},
      {"[W,X,X]", &w, &x, &x},
      {"[X,X,Z]", &x, &x, &z},
  };
  for (const Cond& cond : conds) {
    CheckReport rep = zero_report("wxz", yb_commutator(*cond.a, *cond.b, *cond.c), t0);
    if (!rep.holds) {
      rep.with_param("condition", cond.name);
      rep.elapsed = seconds_since(t0);
      return rep;
    }
  }
  CheckReport rep;
  rep.check = "wxz";
  rep.holds = true;
  rep.elapsed = seconds_since(t0);
  return rep;
}

CheckReport check_classical(const LinearOperator& r) {
  auto t0 = Clock::now();
  base_of_square(r);
  LinearOperator r12 = lift(r, LiftPos::P12);
  LinearOperator r13 = lift(r, LiftPos::P13);
  LinearOperator r23 = lift(r, LiftPos::P23);
  LinearOperator sum = commutator(r12, r13) + commutator(r12, r23) + commutator(r13, r23);
  return zero_report("classical-ybe", sum, t0);
}

CheckReport check_inverse_pair(const LinearOperator& r, const LinearOperator& rinv) {
  auto t0 = Clock::now();
  if (r.dim() != rinv.dim()) throw DimMismatch("inverse pair dims");
  LinearOperator id = LinearOperator::identity(r.field(), r.dim(), r.base_dim());
  CheckReport left = equality_report("inverse-pair", r * rinv, id, t0);
  if (!left.holds) {
    left.with_param("side", "R*Rinv");
    return left;
  }
  CheckReport right = equality_report("inverse-pair", rinv * r, id, t0);
  if (!right.holds) right.with_param("side", "Rinv*R");
  return right;
}

} // namespace yb
