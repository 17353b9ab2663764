#include "qhopf/cyclotomic.hpp"

#include <map>
#include <memory>
#include <mutex>
#include <numeric>
#include <sstream>

namespace qhopf {

struct LevelData {
  int L;
  int phi;
  std::vector<long> Phi;                    // monic, degree phi
  std::vector<std::pair<int, long>> tail;   // nonzero low coefficients of Phi
  std::vector<std::vector<long>> zpow;      // zeta^k reduced, k in [0, L)
};

long gcd_int(long a, long b) { return std::gcd(a, b); }
long lcm_int(long a, long b) { return std::lcm(a, b); }
long mod_floor(long a, long m) {
  long r = a % m;
  return r < 0 ? r + m : r;
}

int euler_phi(int L) {
  if (L < 1) throw InputError("euler_phi: level must be positive");
  int n = L, r = L;
  for (int p = 2; p * p <= n; ++p) {
    if (n % p == 0) {
      while (n % p == 0) n /= p;
      r -= r / p;
    }
  }
  if (n > 1) r -= r / n;
  return r;
}

namespace {

std::vector<long> poly_mul(const std::vector<long>& a, const std::vector<long>& b) {
  std::vector<long> r(a.size() + b.size() - 1, 0);
  for (size_t i = 0; i < a.size(); ++i)
    for (size_t j = 0; j < b.size(); ++j) r[i + j] += a[i] * b[j];
  return r;
}

// Exact division of integer polynomials by a monic divisor.
std::vector<long> poly_div_monic(std::vector<long> a, const std::vector<long>& b) {
  int db = static_cast<int>(b.size()) - 1;
  int da = static_cast<int>(a.size()) - 1;
  std::vector<long> q(da - db + 1, 0);
  for (int k = da; k >= db; --k) {
    long c = a[k];
    q[k - db] = c;
    if (c == 0) continue;
    for (int i = 0; i <= db; ++i) a[k - db + i] -= c * b[i];
  }
  return q;
}

// Called with the registry lock held, so the memo needs no lock of its own.
const std::vector<long>& compute_cyclotomic(int L) {
  static std::map<int, std::vector<long>> memo;
  auto it = memo.find(L);
  if (it != memo.end()) return it->second;
  std::vector<long> num(L + 1, 0);
  num[0] = -1;
  num[L] = 1;
  std::vector<long> den{1};
  for (int d = 1; d < L; ++d)
    if (L % d == 0) den = poly_mul(den, compute_cyclotomic(d));
  return memo.emplace(L, poly_div_monic(num, den)).first->second;
}

const LevelData* level_data_locked(int L);

// Per-thread memo in front of the shared registry; entries are never freed.
const LevelData* level_data(int L) {
  thread_local std::map<int, const LevelData*> local;
  auto it = local.find(L);
  if (it != local.end()) return it->second;
  const LevelData* d = level_data_locked(L);
  local.emplace(L, d);
  return d;
}

const LevelData* level_data_locked(int L) {
  static std::mutex mu;
  static std::map<int, std::unique_ptr<LevelData>> cache;
  if (L < 1) throw InputError("cyclotomic level must be positive");
  std::lock_guard<std::mutex> lock(mu);
  auto it = cache.find(L);
  if (it != cache.end()) return it->second.get();
  auto d = std::make_unique<LevelData>();
  d->L = L;
  d->phi = euler_phi(L);
  d->Phi = compute_cyclotomic(L);
  for (int i = 0; i < d->phi; ++i)
    if (d->Phi[i] != 0) d->tail.emplace_back(i, d->Phi[i]);
  std::vector<long> cur(d->phi, 0);
  cur[0] = 1;
  d->zpow.push_back(cur);
  for (int k = 1; k < L; ++k) {
    std::vector<long> nxt(d->phi + 1, 0);
    for (int i = 0; i < d->phi; ++i) nxt[i + 1] = cur[i];
    long top = nxt[d->phi];
    if (top != 0)
      for (auto [i, c] : d->tail) nxt[i] -= top * c;
    nxt.resize(d->phi);
    cur = nxt;
    d->zpow.push_back(cur);
  }
  const LevelData* out = d.get();
  cache.emplace(L, std::move(d));
  return out;
}

// Reduce a dense coefficient vector of arbitrary length modulo Phi_L.
void reduce_in_place(const LevelData* lv, std::vector<Rational>& a) {
  int phi = lv->phi;
  for (int k = static_cast<int>(a.size()) - 1; k >= phi; --k) {
    if (sgn(a[k]) == 0) continue;
    for (auto [i, c] : lv->tail) a[k - phi + i] -= a[k] * c;
  }
  a.resize(phi);
}

using QPoly = std::vector<Rational>;

void trim(QPoly& p) {
  while (!p.empty() && sgn(p.back()) == 0) p.pop_back();
}

// Quotient and remainder of a by b over Q.
void qdivmod(const QPoly& a, const QPoly& b, QPoly& quo, QPoly& rem) {
  rem = a;
  trim(rem);
  quo.assign(rem.size() >= b.size() ? rem.size() - b.size() + 1 : 0, Rational(0));
  Rational lead = b.back();
  while (!rem.empty() && rem.size() >= b.size()) {
    size_t shift = rem.size() - b.size();
    Rational c = rem.back() / lead;
    quo[shift] = c;
    for (size_t i = 0; i < b.size(); ++i) rem[shift + i] -= c * b[i];
    trim(rem);
  }
}

QPoly qmul(const QPoly& a, const QPoly& b) {
  if (a.empty() || b.empty()) return {};
  QPoly r(a.size() + b.size() - 1, Rational(0));
  for (size_t i = 0; i < a.size(); ++i) {
    if (sgn(a[i]) == 0) continue;
    for (size_t j = 0; j < b.size(); ++j) r[i + j] += a[i] * b[j];
  }
  trim(r);
  return r;
}

QPoly qsub(const QPoly& a, const QPoly& b) {
  QPoly r(std::max(a.size(), b.size()), Rational(0));
  for (size_t i = 0; i < a.size(); ++i) r[i] += a[i];
  for (size_t i = 0; i < b.size(); ++i) r[i] -= b[i];
  trim(r);
  return r;
}

}  // namespace

std::vector<long> cyclotomic_polynomial(int L) { return level_data(L)->Phi; }

namespace {
const LevelData* level_one() {
  static const LevelData* one = level_data(1);
  return one;
}
}  // namespace

CycScalar::CycScalar() : lv_(level_one()), c_(1, Rational(0)) {}

CycScalar::CycScalar(long v) : lv_(level_one()), c_(1, Rational(v)) {}

CycScalar::CycScalar(const Rational& r, int level) : lv_(level_data(level)), c_(lv_->phi, Rational(0)) {
  c_[0] = r;
}

CycScalar CycScalar::root_of_unity(int L, long k) {
  CycScalar r;
  r.lv_ = level_data(L);
  const auto& zp = r.lv_->zpow[mod_floor(k, L)];
  r.c_.assign(zp.begin(), zp.end());
  return r;
}

CycScalar CycScalar::from_coeffs(int L, std::vector<Rational> coeffs) {
  CycScalar r;
  r.lv_ = level_data(L);
  if (static_cast<int>(coeffs.size()) > r.lv_->phi)
    reduce_in_place(r.lv_, coeffs);
  coeffs.resize(r.lv_->phi, Rational(0));
  r.c_ = std::move(coeffs);
  return r;
}

int CycScalar::level() const { return lv_->L; }

bool CycScalar::is_zero() const {
  for (const auto& x : c_)
    if (sgn(x) != 0) return false;
  return true;
}

bool CycScalar::is_rational() const {
  for (size_t i = 1; i < c_.size(); ++i)
    if (sgn(c_[i]) != 0) return false;
  return true;
}

bool CycScalar::is_one() const { return is_rational() && c_[0] == 1; }

CycScalar CycScalar::lift(int M) const {
  int L = level();
  if (M % L != 0) throw InputError("lift: level " + std::to_string(L) + " does not divide " + std::to_string(M));
  if (M == L) return *this;
  const LevelData* t = level_data(M);
  CycScalar r;
  r.lv_ = t;
  r.c_.assign(t->phi, Rational(0));
  int step = M / L;
  for (size_t i = 0; i < c_.size(); ++i) {
    if (sgn(c_[i]) == 0) continue;
    const auto& zp = t->zpow[(static_cast<long>(i) * step) % M];
    for (int j = 0; j < t->phi; ++j)
      if (zp[j] != 0) r.c_[j] += c_[i] * zp[j];
  }
  return r;
}

void CycScalar::align(CycScalar& o) {
  if (lv_ == o.lv_) return;
  int M = static_cast<int>(lcm_int(level(), o.level()));
  if (level() != M) *this = lift(M);
  if (o.level() != M) o = o.lift(M);
}

CycScalar& CycScalar::operator+=(const CycScalar& o) {
  if (lv_ != o.lv_) {
    CycScalar b = o;
    align(b);
    for (size_t i = 0; i < c_.size(); ++i) c_[i] += b.c_[i];
    return *this;
  }
  for (size_t i = 0; i < c_.size(); ++i) c_[i] += o.c_[i];
  return *this;
}

CycScalar& CycScalar::operator-=(const CycScalar& o) {
  if (lv_ != o.lv_) {
    CycScalar b = o;
    align(b);
    for (size_t i = 0; i < c_.size(); ++i) c_[i] -= b.c_[i];
    return *this;
  }
  for (size_t i = 0; i < c_.size(); ++i) c_[i] -= o.c_[i];
  return *this;
}

CycScalar operator*(const CycScalar& a0, const CycScalar& b0) {
  const CycScalar* a = &a0;
  const CycScalar* b = &b0;
  CycScalar la, lb;
  if (a0.lv_ != b0.lv_) {
    la = a0;
    lb = b0;
    la.align(lb);
    a = &la;
    b = &lb;
  }
  const LevelData* lv = a->lv_;
  int phi = lv->phi;
  std::vector<Rational> r(2 * phi - 1, Rational(0));
  for (int i = 0; i < phi; ++i) {
    if (sgn(a->c_[i]) == 0) continue;
    for (int j = 0; j < phi; ++j) {
      if (sgn(b->c_[j]) == 0) continue;
      r[i + j] += a->c_[i] * b->c_[j];
    }
  }
  reduce_in_place(lv, r);
  CycScalar out;
  out.lv_ = lv;
  out.c_ = std::move(r);
  return out;
}

CycScalar& CycScalar::operator*=(const CycScalar& o) {
  *this = *this * o;
  return *this;
}

CycScalar CycScalar::operator-() const {
  CycScalar r = *this;
  for (auto& x : r.c_) x = -x;
  return r;
}

bool operator==(const CycScalar& a, const CycScalar& b) {
  if (a.lv_ == b.lv_) return a.c_ == b.c_;
  CycScalar x = a, y = b;
  x.align(y);
  return x.c_ == y.c_;
}

CycScalar CycScalar::inv() const {
  if (is_zero()) throw ArithmeticError("inverse of zero");
  if (is_rational()) {
    CycScalar r = *this;
    r.c_[0] = 1 / c_[0];
    return r;
  }
  // Extended Euclid: find s with s*a = 1 mod Phi.
  QPoly a(c_.begin(), c_.end());
  trim(a);
  QPoly m(lv_->Phi.begin(), lv_->Phi.end());
  QPoly r0 = m, r1 = a;
  QPoly s0{}, s1{Rational(1)};
  while (!(r1.size() == 1)) {
    QPoly quo, rem;
    qdivmod(r0, r1, quo, rem);
    QPoly s2 = qsub(s0, qmul(quo, s1));
    r0 = std::move(r1);
    r1 = std::move(rem);
    s0 = std::move(s1);
    s1 = std::move(s2);
    if (r1.empty()) throw ArithmeticError("inverse: non-unit residue");
  }
  Rational c = 1 / r1[0];
  for (auto& x : s1) x *= c;
  QPoly quo, rem;
  qdivmod(s1, m, quo, rem);
  return from_coeffs(level(), rem);
}

CycScalar CycScalar::pow(long e) const {
  if (e < 0) return inv().pow(-e);
  CycScalar base = *this;
  CycScalar r = CycScalar(Rational(1), level());
  while (e > 0) {
    if (e & 1) r *= base;
    e >>= 1;
    if (e) base *= base;
  }
  return r;
}

std::optional<int> CycScalar::mult_order() const {
  int L = level();
  int M = (L % 2 == 0) ? L : 2 * L;
  if (!pow(M).is_one()) return std::nullopt;
  for (int d = 1; d <= M; ++d)
    if (M % d == 0 && pow(d).is_one()) return d;
  return std::nullopt;
}

std::string CycScalar::to_string() const {
  std::ostringstream os;
  bool first = true;
  for (size_t i = 0; i < c_.size(); ++i) {
    if (sgn(c_[i]) == 0) continue;
    Rational v = c_[i];
    bool neg = sgn(v) < 0;
    if (neg) v = -v;
    if (first)
      os << (neg ? "-" : "");
    else
      os << (neg ? " - " : " + ");
    first = false;
    if (i == 0) {
      os << v.get_str();
    } else {
      if (v != 1) os << v.get_str() << "*";
      os << "z";
      if (i > 1) os << "^" << i;
    }
  }
  if (first) os << "0";
  return os.str();
}

std::string CycScalar::sort_key() const {
  std::string s = std::to_string(level()) + ":";
  for (const auto& x : c_) s += x.get_str() + ",";
  return s;
}

std::optional<int> discrete_log(const CycScalar& a, int n) {
  if (n < 1) return std::nullopt;
  CycScalar z = zeta(n);
  CycScalar cur = CycScalar(Rational(1), n);
  for (int k = 0; k < n; ++k) {
    if (cur == a) return k;
    cur *= z;
  }
  return std::nullopt;
}

std::optional<int> log_base(const CycScalar& a, const CycScalar& base) {
  auto ord = base.mult_order();
  if (!ord) return std::nullopt;
  CycScalar cur = CycScalar(Rational(1), base.level());
  for (int k = 0; k < *ord; ++k) {
    if (cur == a) return k;
    cur *= base;
  }
  return std::nullopt;
}

std::string describe(const CycScalar& a) {
  if (a.is_rational()) return a.coeffs()[0].get_str();
  if (auto M = a.mult_order())
    if (auto k = discrete_log(a, *M)) return "zeta" + std::to_string(*M) + "^" + std::to_string(*k);
  return a.to_string() + " [z=zeta" + std::to_string(a.level()) + "]";
}

}  // namespace qhopf
