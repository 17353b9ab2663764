#include "qhopf/qdet.hpp"

#include <algorithm>
#include <numeric>

namespace qhopf {

namespace {

void require_matrix(const Presentation& P) {
  if (P.family() != Family::QuantumMatrix) throw InputError("needs a quantum matrix algebra");
}

}  // namespace

int Permutation::length() const {
  int l = 0;
  for (size_t i = 0; i < image.size(); ++i)
    for (size_t j = i + 1; j < image.size(); ++j) l += image[i] > image[j];
  return l;
}

std::vector<Permutation> Permutation::all(int n) {
  std::vector<int> p(n);
  std::iota(p.begin(), p.end(), 0);
  std::vector<Permutation> out;
  do out.push_back({p});
  while (std::next_permutation(p.begin(), p.end()));
  return out;
}

NCPoly quantum_minor(const Presentation& pres, const std::vector<int>& rows, const std::vector<int>& cols) {
  require_matrix(pres);
  if (rows.size() != cols.size()) throw InputError("quantum minor needs a square index set");
  int n = static_cast<int>(rows.size());
  CycScalar mq = CycScalar(-1) * pres.spec().q;
  Terms raw;
  for (const auto& pi : Permutation::all(n)) {
    Word w;
    for (int r = 0; r < n; ++r) w.push_back(pres.matrix_gen(rows[r], cols[pi.image[r]]));
    add_term(raw, w, mq.pow(pi.length()));
  }
  return normalize(pres, raw);
}

NCPoly quantum_determinant(const Presentation& pres) {
  require_matrix(pres);
  std::vector<int> id(pres.spec().N);
  std::iota(id.begin(), id.end(), 0);
  return quantum_minor(pres, id, id);
}

NCPoly quantum_determinant(int N, const CycScalar& q) { return quantum_determinant(*quantum_matrix(N, q)); }

CentralityResult commutes_with_generators(const Presentation& pres, const NCPoly& z) {
  CentralityResult r;
  for (int g = 0; g < pres.num_gens(); ++g) {
    NCPoly y = NCPoly::generator(static_cast<Gen>(g));
    if (!(multiply(pres, z, y) - multiply(pres, y, z)).is_zero()) {
      r.central = false;
      r.failures.push_back(pres.gen_names()[g]);
    }
  }
  return r;
}

CentralityResult centrality_check(int N, const CycScalar& q) {
  auto P = quantum_matrix(N, q);
  return commutes_with_generators(*P, quantum_determinant(*P));
}

NCPoly laplace_expansion(const Presentation& pres, int column, bool flip_sign) {
  require_matrix(pres);
  int N = pres.spec().N;
  if (column < 1 || column > N) throw InputError("Laplace column out of range");
  int i = column - 1;
  CycScalar mq = CycScalar(-1) * pres.spec().q;
  NCPoly sum;
  for (int k = 0; k < N; ++k) {
    std::vector<int> rows, cols;
    for (int r = 0; r < N; ++r)
      if (r != k) rows.push_back(r);
    for (int c = 0; c < N; ++c)
      if (c != i) cols.push_back(c);
    NCPoly minor = rows.empty() ? NCPoly::one() : quantum_minor(pres, rows, cols);
    NCPoly term = multiply(pres, minor, NCPoly::generator(pres.matrix_gen(k, i)));
    sum += mq.pow(flip_sign ? k - i : i - k) * term;
  }
  return sum;
}

bool laplace_check(int N, const CycScalar& q, int column, bool flip_sign) {
  auto P = quantum_matrix(N, q);
  return laplace_expansion(*P, column, flip_sign) == quantum_determinant(*P);
}

IdealStability ideal_stability(const ActionInstance& inst) {
  validate_instance(inst);
  const Presentation& P = *inst.pres;
  require_matrix(P);
  NCPoly det = quantum_determinant(P);
  IdealStability s;
  s.g_fixes_det = true;
  for (const auto& g : inst.grouplikes)
    if (act_grouplike(P, g, det) != det) s.g_fixes_det = false;
  s.x_kills_det = true;
  for (int i = 0; i < static_cast<int>(inst.skews.size()); ++i)
    if (!act_skew(inst, i, det).is_zero()) s.x_kills_det = false;
  return s;
}

}  // namespace qhopf
