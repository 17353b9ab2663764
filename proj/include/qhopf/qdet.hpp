#pragma once

#include <string>
#include <vector>

#include "qhopf/hopf.hpp"

namespace qhopf {

/// Images pi(0..N-1), 0-based.
struct Permutation {
  std::vector<int> image;

  int length() const;  // inversion count
  static std::vector<Permutation> all(int n);
};

/// sum_pi (-q)^l(pi) Y_{r_1 c_pi(1)} ... Y_{r_n c_pi(n)} in the ambient matrix algebra (0-based rows/cols).
NCPoly quantum_minor(const Presentation& pres, const std::vector<int>& rows, const std::vector<int>& cols);
NCPoly quantum_determinant(const Presentation& pres);
NCPoly quantum_determinant(int N, const CycScalar& q);

struct CentralityResult {
  bool central = true;
  std::vector<std::string> failures;  // generators that do not commute
};

CentralityResult commutes_with_generators(const Presentation& pres, const NCPoly& z);
CentralityResult centrality_check(int N, const CycScalar& q);

/// Expansion along column i (1-based): sum_k (-q)^{i-k} A_ki Y_ki; `flip_sign` uses (-q)^{k-i}.
NCPoly laplace_expansion(const Presentation& pres, int column, bool flip_sign = false);
bool laplace_check(int N, const CycScalar& q, int column, bool flip_sign = false);

struct IdealStability {
  bool g_fixes_det = false;
  bool x_kills_det = false;
};

IdealStability ideal_stability(const ActionInstance& inst);

}  // namespace qhopf
