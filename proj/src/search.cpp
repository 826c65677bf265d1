// Exhaustive scan of 4x4 matrices over F_2 / F_3 for constant-QYBE solutions.
// The hot loop runs on raw byte arithmetic with early exit; every hit is then
// re-verified through the exact direct-application path.

#include "yb/verify.hpp"

namespace yb {

namespace {

constexpr int kEntries = 16; // 4x4
constexpr int kDim3 = 8;     // (V(x)V(x)V with N = 2)

std::uint64_t pow_u64(std::uint64_t b, int e) {
  std::uint64_t r = 1;
  while (e-- > 0) r *= b;
  return r;
}

// applies the lift of the 4x4 matrix m (row-major, mod p) at pos to vec8
void apply_lift_bytes(const std::uint8_t* m, int pos, const std::uint8_t* in, std::uint8_t* out,
                      int p) {
  for (int i = 0; i < kDim3; ++i) out[i] = 0;
  for (int t = 0; t < kDim3; ++t) {
    if (in[t] == 0) continue;
    const int i = (t >> 2) & 1, j = (t >> 1) & 1, k = t & 1;
    int a, b, spect;
    if (pos == 12) {
      a = i; b = j; spect = k;
    } else if (pos == 13) {
      a = i; b = k; spect = j;
    } else {
      a = j; b = k; spect = i;
    }
    const int col = a * 2 + b;
    for (int row = 0; row < 4; ++row) {
      const std::uint8_t mv = m[row * 4 + col];
      if (mv == 0) continue;
      const int na = row >> 1, nb = row & 1;
      int idx;
      if (pos == 12)
        idx = (na << 2) | (nb << 1) | spect;
      else if (pos == 13)
        idx = (na << 2) | (spect << 1) | nb;
      else
        idx = (spect << 2) | (na << 1) | nb;
      out[idx] = static_cast<std::uint8_t>((out[idx] + mv * in[t]) % p);
    }
  }
}

bool qybe_holds_bytes(const std::uint8_t* m, int p) {
  std::uint8_t v[kDim3], t1[kDim3], t2[kDim3], lhs[kDim3], rhs[kDim3];
  for (int b = 0; b < kDim3; ++b) {
    for (int i = 0; i < kDim3; ++i) v[i] = (i == b) ? 1 : 0;
    // LHS = R12 R13 R23 e_b
    apply_lift_bytes(m, 23, v, t1, p);
    apply_lift_bytes(m, 13, t1, t2, p);
    apply_lift_bytes(m, 12, t2, lhs, p);
    // RHS = R23 R13 R12 e_b
    apply_lift_bytes(m, 12, v, t1, p);
    apply_lift_bytes(m, 13, t1, t2, p);
    apply_lift_bytes(m, 23, t2, rhs, p);
    for (int i = 0; i < kDim3; ++i)
      if (lhs[i] != rhs[i]) return false;
  }
  return true;
}

bool invertible_bytes(const std::uint8_t* m, int p) {
  std::uint8_t a[kEntries];
  for (int i = 0; i < kEntries; ++i) a[i] = m[i];
  int rank = 0;
  for (int col = 0; col < 4 && rank < 4; ++col) {
    int piv = -1;
    for (int r = rank; r < 4; ++r)
      if (a[r * 4 + col] != 0) { piv = r; break; }
    if (piv < 0) continue;
    for (int c = 0; c < 4; ++c) std::swap(a[rank * 4 + c], a[piv * 4 + c]);
    // scale pivot row to 1 (p prime, inverse by scan)
    int inv = 1;
    for (int x = 1; x < p; ++x)
      if (a[rank * 4 + col] * x % p == 1) { inv = x; break; }
    for (int c = 0; c < 4; ++c) a[rank * 4 + c] = static_cast<std::uint8_t>(a[rank * 4 + c] * inv % p);
    for (int r = 0; r < 4; ++r) {
      if (r == rank || a[r * 4 + col] == 0) continue;
      int factor = a[r * 4 + col];
      for (int c = 0; c < 4; ++c)
        a[r * 4 + c] = static_cast<std::uint8_t>((a[r * 4 + c] + (p - factor) * a[rank * 4 + c]) % p);
    }
    ++rank;
  }
  return rank == 4;
}

// the canonical dimension-2 family over F_p: q in F_p^*, eta in {0,1}
std::vector<std::array<std::uint8_t, kEntries>> family3_members(int p) {
  std::vector<std::array<std::uint8_t, kEntries>> out;
  for (int q = 1; q < p; ++q)
    for (int eta = 0; eta <= 1; ++eta) {
      std::array<std::uint8_t, kEntries> m{};
      m[0 * 4 + 0] = 1;
      m[1 * 4 + 1] = 1;
      m[2 * 4 + 1] = static_cast<std::uint8_t>(((1 - q) % p + p) % p);
      m[2 * 4 + 2] = static_cast<std::uint8_t>(q);
      m[3 * 4 + 0] = static_cast<std::uint8_t>(eta);
      m[3 * 4 + 3] = static_cast<std::uint8_t>((p - q) % p);
      out.push_back(m);
    }
  return out;
}

} // namespace

LinearOperator solution_operator(const SearchSolution& s, int p) {
  ScalarField f = ScalarField::prime_field(static_cast<std::uint64_t>(p));
  LinearOperator m(f, 4, 2);
  for (int r = 0; r < 4; ++r)
    for (int c = 0; c < 4; ++c) m.set(r, c, Scalar::from_int(s.entries[r * 4 + c], f));
  return m;
}

SearchResult search_dim2(int p, bool require_invertible, std::uint64_t begin, std::uint64_t end) {
  if (p != 2 && p != 3)
    throw UnsupportedField("search_dim2 supports F_2 and F_3, got p = " + std::to_string(p));
  const std::uint64_t total = pow_u64(static_cast<std::uint64_t>(p), kEntries);
  if (end > total) end = total;
  if (begin > end) begin = end;

  SearchResult result;
  result.p = p;
  result.invertible_only = require_invertible;
  result.total = end - begin;

  const auto fam3 = family3_members(p);

  std::uint8_t entries[kEntries];
  {
    // seed digits for the first index of the chunk (entry 0 most significant)
    std::uint64_t idx = begin;
    for (int i = kEntries; i-- > 0;) {
      entries[i] = static_cast<std::uint8_t>(idx % p);
      idx /= p;
    }
  }
  for (std::uint64_t index = begin; index < end; ++index) {
    if (qybe_holds_bytes(entries, p)) {
      const bool inv = invertible_bytes(entries, p);
      if (!require_invertible || inv) {
        SearchSolution sol;
        sol.index = index;
        std::copy(entries, entries + kEntries, sol.entries.begin());
        sol.invertible = inv;
        for (const auto& f3 : fam3)
          if (std::equal(f3.begin(), f3.end(), entries)) { sol.family3 = true; break; }
        // exact re-verification, independent of the byte path
        LinearOperator mat = solution_operator(sol, p);
        auto applier = matrix_applier(mat);
        if (!qybe_holds_direct(*applier))
          throw Error("byte path and exact direct application disagree at index " +
                      std::to_string(index));
        result.solutions.push_back(std::move(sol));
      }
    }
    // lexicographic increment (entry 15 least significant)
    for (int i = kEntries; i-- > 0;) {
      if (++entries[i] < p) break;
      entries[i] = 0;
    }
  }
  return result;
}

} // namespace yb
