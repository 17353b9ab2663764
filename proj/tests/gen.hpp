#pragma once

#include <complex>
#include <random>

#include "qhopf/cyclotomic.hpp"

namespace testgen {

using qhopf::CycScalar;

inline std::mt19937_64& rng() {
  static std::mt19937_64 r(20240611);
  return r;
}

inline int uniform(int lo, int hi) { return std::uniform_int_distribution<int>(lo, hi)(rng()); }

/// Random element of Q(zeta_L) with small rational coefficients.
inline CycScalar random_scalar(int L, int terms = 3) {
  CycScalar s(qhopf::Rational(0), L);
  for (int i = 0; i < terms; ++i) {
    qhopf::Rational c(uniform(-5, 5), uniform(1, 4));
    c.canonicalize();
    s += CycScalar(c) * qhopf::zeta(L, uniform(0, L - 1));
  }
  return s;
}

inline CycScalar random_root(int L) { return qhopf::zeta(L, uniform(0, L - 1)); }

/// Numerical value of a cyclotomic number; used as an independent check.
inline std::complex<double> numeric(const CycScalar& s) {
  const double pi = 3.14159265358979323846;
  std::complex<double> z = std::polar(1.0, 2 * pi / s.level());
  std::complex<double> v = 0, p = 1;
  for (const auto& c : s.coeffs()) {
    v += c.get_d() * p;
    p *= z;
  }
  return v;
}

inline bool close(std::complex<double> a, std::complex<double> b, double tol = 1e-7) {
  return std::abs(a - b) <= tol * (1 + std::abs(a) + std::abs(b));
}

}  // namespace testgen
