#include "yb/scalar.hpp"

#include <algorithm>
#include <cctype>
#include <map>
#include <mutex>
#include <numeric>
#include <sstream>

namespace yb {

namespace {

bool is_prime_u64(std::uint64_t p) {
  if (p < 2) return false;
  for (std::uint64_t d = 2; d * d <= p; ++d)
    if (p % d == 0) return false;
  return true;
}

// Integer polynomials, constant term first, used only for Phi_m.
using ZPoly = std::vector<mpz_class>;

void zpoly_trim(ZPoly& p) {
  while (p.size() > 1 && p.back() == 0) p.pop_back();
}

// Exact division by a monic divisor (remainder is known to be zero).
ZPoly zpoly_div_monic(const ZPoly& num, const ZPoly& den) {
  if (num.size() < den.size()) return ZPoly{mpz_class(0)};
  ZPoly rem = num;
  ZPoly quot(num.size() - den.size() + 1, mpz_class(0));
  for (std::size_t shift = quot.size(); shift-- > 0;) {
    mpz_class c = rem[shift + den.size() - 1];
    if (c == 0) continue;
    quot[shift] = c;
    for (std::size_t j = 0; j < den.size(); ++j) rem[shift + j] -= c * den[j];
  }
  zpoly_trim(quot);
  return quot;
}

// Phi_m via Phi_m(x) = (x^m - 1) / prod_{d | m, d < m} Phi_d(x).
ZPoly cyclotomic_poly(unsigned m) {
  std::vector<ZPoly> phi(m + 1);
  for (unsigned n = 1; n <= m; ++n) {
    if (m % n != 0) continue;
    ZPoly num(n + 1, mpz_class(0));
    num[0] = -1;
    num[n] = 1;
    for (unsigned d = 1; d < n; ++d)
      if (n % d == 0) num = zpoly_div_monic(num, phi[d]);
    phi[n] = std::move(num);
  }
  return phi[m];
}

std::uint64_t mod_inverse(std::uint64_t a, std::uint64_t p) {
  // extended Euclid on signed values; p < 2^31 so no overflow
  std::int64_t t = 0, new_t = 1;
  std::int64_t r = static_cast<std::int64_t>(p), new_r = static_cast<std::int64_t>(a % p);
  while (new_r != 0) {
    std::int64_t q = r / new_r;
    std::int64_t tmp = t - q * new_t;
    t = new_t;
    new_t = tmp;
    tmp = r - q * new_r;
    r = new_r;
    new_r = tmp;
  }
  if (r != 1) throw DivisionByZero();
  if (t < 0) t += static_cast<std::int64_t>(p);
  return static_cast<std::uint64_t>(t);
}

// Rational polynomials, constant term first, for arithmetic mod Phi_m.
using QPoly = std::vector<mpq_class>;

int qpoly_degree(const QPoly& p) {
  for (std::size_t i = p.size(); i-- > 0;)
    if (p[i] != 0) return static_cast<int>(i);
  return -1;
}

// (quotient, remainder) of a by b, b != 0.
std::pair<QPoly, QPoly> qpoly_divmod(QPoly a, const QPoly& b) {
  int db = qpoly_degree(b);
  QPoly quot(a.size(), mpq_class(0));
  for (int i = qpoly_degree(a); i >= db; i = qpoly_degree(a)) {
    mpq_class c = a[i] / b[db];
    quot[i - db] = c;
    for (int j = 0; j <= db; ++j) a[i - db + j] -= c * b[j];
  }
  return {std::move(quot), std::move(a)};
}

} // namespace

struct ScalarField::Data {
  FieldKind kind;
  unsigned m = 0;      // cyclotomic order
  unsigned d = 1;      // deg Phi_m
  std::uint64_t p = 0; // prime characteristic
  std::vector<mpz_class> phi; // Phi_m, monic, length d+1
  // x^{d+t} mod Phi_m for t in [0, d-2]; coefficient vectors of length d.
  std::vector<std::vector<mpq_class>> xpow;
};

ScalarField ScalarField::rationals() {
  static const std::shared_ptr<const Data> data = [] {
    auto d = std::make_shared<Data>();
    d->kind = FieldKind::Rationals;
    return d;
  }();
  return ScalarField(data);
}

ScalarField ScalarField::cyclotomic(unsigned m) {
  if (m < 2) throw BadParameter("cyclotomic order must be >= 2, got " + std::to_string(m));
  static std::mutex mu;
  static std::map<unsigned, std::shared_ptr<const Data>> cache;
  std::lock_guard<std::mutex> lock(mu);
  auto it = cache.find(m);
  if (it != cache.end()) return ScalarField(it->second);

  auto data = std::make_shared<Data>();
  data->kind = FieldKind::Cyclotomic;
  data->m = m;
  data->phi = cyclotomic_poly(m);
  data->d = static_cast<unsigned>(data->phi.size() - 1);
  const unsigned d = data->d;
  // x^d mod Phi = -(phi_0 + phi_1 x + ... + phi_{d-1} x^{d-1}), Phi monic.
  if (d >= 2) {
    std::vector<mpq_class> cur(d);
    for (unsigned i = 0; i < d; ++i) cur[i] = mpq_class(-data->phi[i]);
    data->xpow.push_back(cur);
    for (unsigned t = 1; t + 1 < d; ++t) {
      // multiply by x, reduce the overflowing x^d term
      std::vector<mpq_class> next(d, mpq_class(0));
      for (unsigned i = 0; i + 1 < d; ++i) next[i + 1] = cur[i];
      mpq_class top = cur[d - 1];
      if (top != 0)
        for (unsigned i = 0; i < d; ++i) next[i] += top * data->xpow[0][i];
      data->xpow.push_back(next);
      cur = std::move(next);
    }
  }
  cache.emplace(m, data);
  return ScalarField(data);
}

ScalarField ScalarField::prime_field(std::uint64_t p) {
  if (!is_prime_u64(p)) throw BadParameter("characteristic must be prime, got " + std::to_string(p));
  if (p >= (1ull << 31)) throw BadParameter("prime too large");
  static std::mutex mu;
  static std::map<std::uint64_t, std::shared_ptr<const Data>> cache;
  std::lock_guard<std::mutex> lock(mu);
  auto it = cache.find(p);
  if (it != cache.end()) return ScalarField(it->second);
  auto data = std::make_shared<Data>();
  data->kind = FieldKind::PrimeField;
  data->p = p;
  cache.emplace(p, data);
  return ScalarField(data);
}

FieldKind ScalarField::kind() const { return data_->kind; }

unsigned ScalarField::order() const {
  if (data_->kind != FieldKind::Cyclotomic) throw WrongFieldKind("order() needs a cyclotomic field");
  return data_->m;
}

unsigned ScalarField::degree() const { return data_->d; }

std::uint64_t ScalarField::characteristic() const {
  if (data_->kind != FieldKind::PrimeField) throw WrongFieldKind("characteristic() needs a prime field");
  return data_->p;
}

const std::vector<mpz_class>& ScalarField::cyclotomic_polynomial() const {
  if (data_->kind != FieldKind::Cyclotomic)
    throw WrongFieldKind("cyclotomic_polynomial() needs a cyclotomic field");
  return data_->phi;
}

bool ScalarField::operator==(const ScalarField& other) const {
  if (data_ == other.data_) return true;
  if (data_->kind != other.data_->kind) return false;
  switch (data_->kind) {
    case FieldKind::Rationals: return true;
    case FieldKind::Cyclotomic: return data_->m == other.data_->m;
    case FieldKind::PrimeField: return data_->p == other.data_->p;
  }
  return false;
}

std::string ScalarField::description() const {
  switch (data_->kind) {
    case FieldKind::Rationals: return "Q";
    case FieldKind::Cyclotomic: return "Q(zeta_" + std::to_string(data_->m) + ")";
    case FieldKind::PrimeField: return "F_" + std::to_string(data_->p);
  }
  return "?";
}

// ---------------------------------------------------------------------------

Scalar::Scalar() : field_(ScalarField::rationals()), v_(mpq_class(0)) {}

Scalar Scalar::zero(const ScalarField& f) { return from_int(0, f); }
Scalar Scalar::one(const ScalarField& f) { return from_int(1, f); }

Scalar Scalar::from_int(long value, const ScalarField& f) {
  switch (f.kind()) {
    case FieldKind::Rationals: return Scalar(f, mpq_class(value));
    case FieldKind::Cyclotomic: {
      std::vector<mpq_class> c(f.degree(), mpq_class(0));
      c[0] = value;
      return Scalar(f, std::move(c));
    }
    case FieldKind::PrimeField: {
      std::int64_t p = static_cast<std::int64_t>(f.characteristic());
      std::int64_t r = value % p;
      if (r < 0) r += p;
      return Scalar(f, static_cast<std::uint64_t>(r));
    }
  }
  throw Error("unreachable");
}

Scalar Scalar::from_rational(const mpq_class& q, const ScalarField& f) {
  switch (f.kind()) {
    case FieldKind::Rationals: return Scalar(f, q);
    case FieldKind::Cyclotomic: {
      std::vector<mpq_class> c(f.degree(), mpq_class(0));
      c[0] = q;
      return Scalar(f, std::move(c));
    }
    case FieldKind::PrimeField: {
      const std::uint64_t p = f.characteristic();
      mpz_class num = q.get_num() % mpz_class(static_cast<unsigned long>(p));
      mpz_class den = q.get_den() % mpz_class(static_cast<unsigned long>(p));
      std::uint64_t n = mpz_class(num < 0 ? num + static_cast<long>(p) : num).get_ui();
      std::uint64_t d = den.get_ui();
      if (d == 0) throw DivisionByZero();
      return Scalar(f, n * mod_inverse(d, p) % p);
    }
  }
  throw Error("unreachable");
}

Scalar Scalar::root_of_unity(const ScalarField& f, long k) {
  if (f.kind() != FieldKind::Cyclotomic)
    throw WrongFieldKind("root_of_unity needs a cyclotomic field, got " + f.description());
  const long m = static_cast<long>(f.order());
  long e = k % m;
  if (e < 0) e += m;
  // zeta as a reduced coefficient vector
  const unsigned d = f.degree();
  Scalar zeta = [&] {
    if (d == 1) {
      // x mod Phi_m with d = 1 means m = 2, zeta = -1
      std::vector<mpq_class> c{mpq_class(-f.cyclotomic_polynomial()[0])};
      return Scalar(f, std::move(c));
    }
    std::vector<mpq_class> c(d, mpq_class(0));
    c[1] = 1;
    return Scalar(f, std::move(c));
  }();
  Scalar result = Scalar::one(f);
  for (long i = 0; i < e; ++i) result *= zeta;
  return result;
}

bool Scalar::is_zero() const {
  switch (field_.kind()) {
    case FieldKind::Rationals: return std::get<mpq_class>(v_) == 0;
    case FieldKind::Cyclotomic: {
      for (const auto& c : std::get<std::vector<mpq_class>>(v_))
        if (c != 0) return false;
      return true;
    }
    case FieldKind::PrimeField: return std::get<std::uint64_t>(v_) == 0;
  }
  return false;
}

bool Scalar::is_one() const {
  switch (field_.kind()) {
    case FieldKind::Rationals: return std::get<mpq_class>(v_) == 1;
    case FieldKind::Cyclotomic: {
      const auto& c = std::get<std::vector<mpq_class>>(v_);
      if (c[0] != 1) return false;
      for (std::size_t i = 1; i < c.size(); ++i)
        if (c[i] != 0) return false;
      return true;
    }
    case FieldKind::PrimeField: return std::get<std::uint64_t>(v_) == 1;
  }
  return false;
}

void Scalar::require_same_field(const Scalar& o) const {
  if (field_ != o.field_)
    throw FieldMismatch(field_.description() + " vs " + o.field_.description());
}

Scalar Scalar::operator-() const {
  switch (field_.kind()) {
    case FieldKind::Rationals: return Scalar(field_, mpq_class(-std::get<mpq_class>(v_)));
    case FieldKind::Cyclotomic: {
      auto c = std::get<std::vector<mpq_class>>(v_);
      for (auto& x : c) x = -x;
      return Scalar(field_, std::move(c));
    }
    case FieldKind::PrimeField: {
      std::uint64_t r = std::get<std::uint64_t>(v_);
      std::uint64_t p = field_.characteristic();
      return Scalar(field_, r == 0 ? 0 : p - r);
    }
  }
  throw Error("unreachable");
}

Scalar& Scalar::operator+=(const Scalar& o) {
  require_same_field(o);
  switch (field_.kind()) {
    case FieldKind::Rationals:
      std::get<mpq_class>(v_) += std::get<mpq_class>(o.v_);
      break;
    case FieldKind::Cyclotomic: {
      auto& a = std::get<std::vector<mpq_class>>(v_);
      const auto& b = std::get<std::vector<mpq_class>>(o.v_);
      for (std::size_t i = 0; i < a.size(); ++i) a[i] += b[i];
      break;
    }
    case FieldKind::PrimeField: {
      std::uint64_t p = field_.characteristic();
      auto& a = std::get<std::uint64_t>(v_);
      a = (a + std::get<std::uint64_t>(o.v_)) % p;
      break;
    }
  }
  return *this;
}

Scalar& Scalar::operator-=(const Scalar& o) { return *this += -o; }

Scalar& Scalar::operator*=(const Scalar& o) {
  require_same_field(o);
  switch (field_.kind()) {
    case FieldKind::Rationals:
      std::get<mpq_class>(v_) *= std::get<mpq_class>(o.v_);
      break;
    case FieldKind::Cyclotomic: {
      const auto& a = std::get<std::vector<mpq_class>>(v_);
      const auto& b = std::get<std::vector<mpq_class>>(o.v_);
      const unsigned d = field_.degree();
      std::vector<mpq_class> prod(2 * d - 1, mpq_class(0));
      for (unsigned i = 0; i < d; ++i) {
        if (a[i] == 0) continue;
        for (unsigned j = 0; j < d; ++j) {
          if (b[j] == 0) continue;
          prod[i + j] += a[i] * b[j];
        }
      }
      std::vector<mpq_class> res(prod.begin(), prod.begin() + d);
      const auto& xpow = field_.data().xpow;
      for (unsigned t = 0; t + 1 < d; ++t) {
        if (prod[d + t] == 0) continue;
        for (unsigned i = 0; i < d; ++i) res[i] += prod[d + t] * xpow[t][i];
      }
      v_ = std::move(res);
      break;
    }
    case FieldKind::PrimeField: {
      std::uint64_t p = field_.characteristic();
      auto& a = std::get<std::uint64_t>(v_);
      a = a * std::get<std::uint64_t>(o.v_) % p;
      break;
    }
  }
  return *this;
}

Scalar Scalar::inverse() const {
  if (is_zero()) throw DivisionByZero();
  switch (field_.kind()) {
    case FieldKind::Rationals:
      return Scalar(field_, mpq_class(1 / std::get<mpq_class>(v_)));
    case FieldKind::Cyclotomic: {
      // extended Euclid in Q[x] against Phi_m (irreducible over Q)
      const unsigned d = field_.degree();
      QPoly r0(field_.cyclotomic_polynomial().size());
      for (std::size_t i = 0; i < r0.size(); ++i) r0[i] = mpq_class(field_.cyclotomic_polynomial()[i]);
      QPoly r1(std::get<std::vector<mpq_class>>(v_).begin(), std::get<std::vector<mpq_class>>(v_).end());
      QPoly t0(1, mpq_class(0)), t1(1, mpq_class(1));
      while (qpoly_degree(r1) >= 0) {
        auto [q, rem] = qpoly_divmod(r0, r1);
        r0 = std::move(r1);
        r1 = std::move(rem);
        // t_next = t0 - q * t1
        QPoly tn(std::max(t0.size(), q.size() + t1.size()), mpq_class(0));
        for (std::size_t i = 0; i < t0.size(); ++i) tn[i] = t0[i];
        for (std::size_t i = 0; i < q.size(); ++i) {
          if (q[i] == 0) continue;
          for (std::size_t j = 0; j < t1.size(); ++j) tn[i + j] -= q[i] * t1[j];
        }
        t0 = std::move(t1);
        t1 = std::move(tn);
      }
      // r0 is a nonzero constant gcd; inverse = t0 / r0[0]
      std::vector<mpq_class> inv(d, mpq_class(0));
      for (std::size_t i = 0; i < t0.size() && i < d; ++i) inv[i] = t0[i] / r0[0];
      return Scalar(field_, std::move(inv));
    }
    case FieldKind::PrimeField:
      return Scalar(field_, mod_inverse(std::get<std::uint64_t>(v_), field_.characteristic()));
  }
  throw Error("unreachable");
}

Scalar& Scalar::operator/=(const Scalar& o) {
  require_same_field(o);
  return *this *= o.inverse();
}

bool Scalar::operator==(const Scalar& o) const {
  require_same_field(o);
  return v_ == o.v_;
}

std::string Scalar::str() const {
  switch (field_.kind()) {
    case FieldKind::Rationals: return std::get<mpq_class>(v_).get_str();
    case FieldKind::Cyclotomic: {
      const auto& c = std::get<std::vector<mpq_class>>(v_);
      std::string s = "[";
      for (std::size_t i = 0; i < c.size(); ++i) {
        if (i) s += ',';
        s += c[i].get_str();
      }
      s += ']';
      return s;
    }
    case FieldKind::PrimeField: return std::to_string(std::get<std::uint64_t>(v_));
  }
  return "?";
}

const mpq_class& Scalar::rat() const {
  if (field_.kind() != FieldKind::Rationals) throw WrongFieldKind("rat() needs Q");
  return std::get<mpq_class>(v_);
}

const std::vector<mpq_class>& Scalar::coeffs() const {
  if (field_.kind() != FieldKind::Cyclotomic) throw WrongFieldKind("coeffs() needs a cyclotomic field");
  return std::get<std::vector<mpq_class>>(v_);
}

std::uint64_t Scalar::residue() const {
  if (field_.kind() != FieldKind::PrimeField) throw WrongFieldKind("residue() needs a prime field");
  return std::get<std::uint64_t>(v_);
}

// ---------------------------------------------------------------------------

namespace {

// [-]digits[/digits], starting at pos; advances pos past the rational.
mpq_class parse_rational_at(std::string_view text, std::size_t& pos) {
  const std::size_t start = pos;
  std::size_t i = pos;
  auto digits = [&](const char* what) {
    std::size_t begin = i;
    while (i < text.size() && std::isdigit(static_cast<unsigned char>(text[i]))) ++i;
    if (i == begin) throw ParseError(std::string("expected ") + what, i);
  };
  if (i < text.size() && text[i] == '-') ++i;
  digits("digits");
  if (i < text.size() && text[i] == '/') {
    ++i;
    std::size_t den_pos = i;
    digits("denominator digits");
    // reject zero denominators up front
    bool all_zero = true;
    for (std::size_t j = den_pos; j < i; ++j)
      if (text[j] != '0') { all_zero = false; break; }
    if (all_zero) throw ParseError("zero denominator", den_pos);
  }
  mpq_class q(std::string(text.substr(start, i - start)));
  q.canonicalize();
  pos = i;
  return q;
}

} // namespace

mpq_class parse_rational(std::string_view text) {
  std::size_t pos = 0;
  mpq_class q = parse_rational_at(text, pos);
  if (pos != text.size()) throw ParseError("trailing characters", pos);
  return q;
}

Scalar parse_scalar(std::string_view text, const ScalarField& f) {
  switch (f.kind()) {
    case FieldKind::Rationals:
      return Scalar::from_rational(parse_rational(text), f);
    case FieldKind::Cyclotomic: {
      std::size_t pos = 0;
      if (pos >= text.size() || text[pos] != '[')
        throw ParseError("expected '['", pos);
      ++pos;
      std::vector<mpq_class> coords;
      if (pos < text.size() && text[pos] == ']') {
        ++pos;
      } else {
        for (;;) {
          coords.push_back(parse_rational_at(text, pos));
          if (pos < text.size() && text[pos] == ',') { ++pos; continue; }
          if (pos < text.size() && text[pos] == ']') { ++pos; break; }
          throw ParseError("expected ',' or ']'", pos);
        }
      }
      if (pos != text.size()) throw ParseError("trailing characters", pos);
      if (coords.size() > f.degree())
        throw ParseError("too many coefficients for degree " + std::to_string(f.degree()), 0);
      // coefficients of 1, zeta, ..., zeta^{d-1} are already the reduced form
      coords.resize(f.degree(), mpq_class(0));
      return Scalar(f, std::move(coords));
    }
    case FieldKind::PrimeField: {
      std::size_t pos = 0;
      mpq_class q = parse_rational_at(text, pos);
      if (pos != text.size()) throw ParseError("trailing characters", pos);
      if (q.get_den() != 1) throw ParseError("prime-field scalars are integer residues", 0);
      return Scalar::from_rational(q, f);
    }
  }
  throw Error("unreachable");
}

} // namespace yb
