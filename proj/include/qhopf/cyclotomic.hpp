#pragma once

#include <gmpxx.h>

#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace qhopf {

using Rational = mpq_class;

/// Malformed input or violated precondition (maps to CLI exit code 2).
class InputError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Division by zero and similar arithmetic failures.
class ArithmeticError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

int euler_phi(int L);
long lcm_int(long a, long b);
long gcd_int(long a, long b);
long mod_floor(long a, long m);

/// Coefficients of the L-th cyclotomic polynomial, constant term first.
std::vector<long> cyclotomic_polynomial(int L);

struct LevelData;

/// Exact element of Q(zeta_L), stored as its reduced residue mod Phi_L.
/// The default value is zero at level 1.
class CycScalar {
 public:
  CycScalar();
  CycScalar(long v);  // NOLINT: integers convert implicitly
  explicit CycScalar(const Rational& r, int level = 1);

  static CycScalar root_of_unity(int L, long k);
  static CycScalar from_coeffs(int L, std::vector<Rational> coeffs);

  int level() const;
  const std::vector<Rational>& coeffs() const { return c_; }

  bool is_zero() const;
  bool is_one() const;
  bool is_rational() const;

  CycScalar lift(int M) const;
  CycScalar inv() const;
  CycScalar pow(long e) const;
  std::optional<int> mult_order() const;

  CycScalar& operator+=(const CycScalar& o);
  CycScalar& operator-=(const CycScalar& o);
  CycScalar& operator*=(const CycScalar& o);

  friend CycScalar operator+(CycScalar a, const CycScalar& b) { return a += b; }
  friend CycScalar operator-(CycScalar a, const CycScalar& b) { return a -= b; }
  friend CycScalar operator*(const CycScalar& a, const CycScalar& b);
  friend CycScalar operator/(const CycScalar& a, const CycScalar& b) { return a * b.inv(); }
  CycScalar operator-() const;

  friend bool operator==(const CycScalar& a, const CycScalar& b);
  friend bool operator!=(const CycScalar& a, const CycScalar& b) { return !(a == b); }

  /// Polynomial in z = zeta_L, e.g. "1 - 2/3*z^2".
  std::string to_string() const;
  /// Deterministic total order used only for sorting reports.
  std::string sort_key() const;

 private:
  const LevelData* lv_;
  std::vector<Rational> c_;
  void align(CycScalar& o);  // lift both operands to a common level
};

inline CycScalar zeta(int L, long k = 1) { return CycScalar::root_of_unity(L, k); }

/// Exponent k in [0, n) with zeta_n^k == a, if a is an n-th root of unity.
std::optional<int> discrete_log(const CycScalar& a, int n);

/// Exponent k in [0, ord(base)) with base^k == a.
std::optional<int> log_base(const CycScalar& a, const CycScalar& base);

/// Human-readable form using zeta notation when the value is a root of unity.
std::string describe(const CycScalar& a);

}  // namespace qhopf
