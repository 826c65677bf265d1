#ifndef YB_VERIFY_HPP
#define YB_VERIFY_HPP

#include <array>
#include <cstdint>
#include <functional>
#include <map>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "yb/operators.hpp"

namespace yb {

struct Witness {
  int row = 0;
  int col = 0;
  std::vector<int> col_basis; // tensor decomposition of the input basis index
  std::string lhs, rhs;       // the two differing entries
};

/// Outcome of one identity check. Failures always carry a witness naming the
/// first differing entry in lexicographic (row, col) order.
struct CheckReport {
  std::string check;
  std::vector<std::pair<std::string, std::string>> params;
  bool holds = false;
  std::optional<Witness> witness;
  double elapsed = 0.0;

  CheckReport& with_param(const std::string& k, const std::string& v);
};

using OneParamFamily = std::function<LinearOperator(const Scalar& s)>;

/// Braid equation R12 R23 R12 = R23 R12 R23. R must act on V(x)V.
CheckReport check_braid(const LinearOperator& r);

/// Constant QYBE R12 R13 R23 = R23 R13 R12.
CheckReport check_qybe(const LinearOperator& r);

/// Colored QYBE R12(u,v) R13(u,w) R23(v,w) = R23(v,w) R13(u,w) R12(u,v).
CheckReport check_colored_qybe(const ColoredFamily& family, const Scalar& u, const Scalar& v,
                               const Scalar& w);

/// All |X|^3 color triples; reports in lexicographic triple order.
std::vector<CheckReport> check_colored_qybe_suite(const ColoredFamily& family,
                                                  std::span<const Scalar> xs);

/// One-parameter YBE in multiplicative form:
/// S12(s1/s2) S13(s1/s3) S23(s2/s3) = S23(s2/s3) S13(s1/s3) S12(s1/s2).
CheckReport check_one_param(const OneParamFamily& family, const Scalar& s1, const Scalar& s2,
                            const Scalar& s3);

/// Yang-Baxter commutator [R,S,T] = R12 S13 T23 - T23 S13 R12.
LinearOperator yb_commutator(const LinearOperator& r, const LinearOperator& s,
                             const LinearOperator& t);

/// WXZ system: [W,W,W] = [Z,Z,Z] = [W,X,X] = [X,X,Z] = 0.
CheckReport check_wxz(const LinearOperator& w, const LinearOperator& x, const LinearOperator& z);

/// Classical YBE: [r12,r13] + [r12,r23] + [r13,r23] = 0.
CheckReport check_classical(const LinearOperator& r);

/// R Rinv = Rinv R = I exactly.
CheckReport check_inverse_pair(const LinearOperator& r, const LinearOperator& rinv);

// ---------------------------------------------------------------------------
// Independent direct-application oracle

/// Sparse vector on tensor-product basis indices.
using SparseVec = std::map<int, Scalar>;

/// Image of basis pairs e_i (x) e_j under an operator on V(x)V, computed as
/// sparse coordinate maps straight from structure constants (never via the
/// dense matrices the builders produce).
class PairApplier {
public:
  virtual ~PairApplier() = default;
  virtual int base_dim() const = 0;
  virtual const ScalarField& field() const = 0;
  virtual SparseVec pair_image(int i, int j) const = 0;
};

/// Direct applier for a constant-family recipe.
std::unique_ptr<PairApplier> direct_applier(const Recipe& r);
/// Direct applier for a colored family at fixed colors.
std::unique_ptr<PairApplier> direct_applier_at(const Recipe& r, const Scalar& u, const Scalar& v);
/// Direct applier for the one-parameter family at fixed s.
std::unique_ptr<PairApplier> direct_applier_one_param(const Recipe& r, const Scalar& s);
/// Applier that reads columns of an explicit V(x)V matrix (used to re-verify
/// search output without lifted matrices).
std::unique_ptr<PairApplier> matrix_applier(const LinearOperator& m);

/// Applies a lifted operator position to a sparse vector on V(x)V(x)V.
SparseVec apply_lifted(const PairApplier& op, LiftPos pos, const SparseVec& v);

/// Constant-QYBE check by direct application only (no lifted matrices).
bool qybe_holds_direct(const PairApplier& op);

/// Re-runs the named check ("braid", "qybe", "colored", "one-param", "wxz",
/// "classical") through the direct-application path and compares every basis
/// image vector of both sides with the matrix-path columns.
CheckReport oracle_equivalence(const Recipe& r, const std::string& check);

// ---------------------------------------------------------------------------
// Dimension-2 exhaustive search over small prime fields

struct SearchSolution {
  std::uint64_t index = 0;               // lexicographic candidate index
  std::array<std::uint8_t, 16> entries{}; // row-major 4x4 over F_p
  bool invertible = false;
  bool family3 = false; // member of the canonical dimension-2 family
};

struct SearchResult {
  int p = 2;
  bool invertible_only = false;
  std::uint64_t total = 0; // candidates scanned (p^16 for a full scan)
  std::vector<SearchSolution> solutions;
};

/// Enumerates all 4x4 matrices over F_p (p in {2,3}), returning those that
/// satisfy the constant QYBE (and are invertible, when required), in
/// lexicographic entry order. Every solution is re-verified through the
/// exact direct-application path. UnsupportedField for other p.
SearchResult search_dim2(int p, bool require_invertible, std::uint64_t begin = 0,
                         std::uint64_t end = std::uint64_t(-1));

/// Rebuilds a search solution as an exact LinearOperator over F_p.
LinearOperator solution_operator(const SearchSolution& s, int p);

} // namespace yb

#endif
