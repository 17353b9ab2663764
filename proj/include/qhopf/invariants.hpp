#pragma once

#include <optional>
#include <string>
#include <vector>

#include "qhopf/hopf.hpp"

namespace qhopf {

/// c_0 .. c_D; trace series have cyclotomic coefficients, Hilbert series integer ones.
using SeriesVec = std::vector<CycScalar>;
using CountSeries = std::vector<long>;

/// Kernel of the stacked operators {G_h - I} and {X_i} on degree d.
std::vector<NCPoly> fixed_space(const ActionInstance& inst, int d);
/// Fixed space of the group part alone.
std::vector<NCPoly> fixed_space_group(const Presentation& pres, const std::vector<GrouplikeAction>& gens, int d);
CountSeries fixed_dims(const ActionInstance& inst, int D);

/// Degree by degree to D: ker x is spanned by the monomials whose u_2-exponent is a multiple of m.
/// Needs a Taft action on a quantum affine space with X supported on (u_1 <- u_2) only.
bool x_fixed_subalgebra_check(const ActionInstance& inst, int D);

/// prod 1 / (1 - e_i t^{deg_i}) expanded to degree D.
SeriesVec trace_series_product(const std::vector<CycScalar>& eigenvalues, const std::vector<int>& degrees, int D);
/// sum_d trace(g | A_d) t^d, straight from the action on basis words.
SeriesVec trace_series_direct(const GrouplikeAction& g, const Presentation& pres, int D);

/// Closure of the generated group; throws logic_error past `limit` elements.
std::vector<GrouplikeAction> generated_group(const std::vector<GrouplikeAction>& gens, int limit = 5000);

struct MolienResult {
  bool pass = false;
  long group_order = 0;
  SeriesVec averaged;     // (1/|G|) sum_g trace series
  CountSeries fixed;      // dim (A^G)_d
};

MolienResult molien_check(const std::vector<GrouplikeAction>& gens, const Presentation& pres, int D);

struct ReflectionResult {
  bool reflection = false;
  std::optional<CycScalar> xi;
};

/// Exactly one eigenvalue differs from 1.
ReflectionResult is_reflection(const std::vector<CycScalar>& eigenvalues);
ReflectionResult is_reflection(const GrouplikeAction& g);  // g diagonal
/// For a plane action x . v = eta u: eigenvalues of g on the generators u, v^m of A^<x>.
std::vector<CycScalar> x_fixed_generator_eigenvalues(const ActionInstance& inst);

struct CommutativityResult {
  bool commutative = true;
  long pairs = 0;
  std::string failure;
};

CommutativityResult commutativity_check(const ActionInstance& inst, int D);
/// The whole algebra, on basis words.
CommutativityResult commutativity_check(const Presentation& pres, int D);

enum class FixedRingTag { DividesKM, Veronese, Hypersurface };
std::string fixed_ring_tag_name(FixedRingTag t);

struct FixedRingCase {
  FixedRingTag tag = FixedRingTag::DividesKM;
  int k = 0, m = 0;
  int s = 0;  // m / (k - m) for the hypersurface case
};

/// Checks the divisibility condition; throws InputError.
FixedRingCase make_fixed_ring_case(FixedRingTag tag, int k, int m);
std::vector<FixedRingCase> applicable_fixed_ring_cases(int k, int m);
CountSeries expected_fixed_series(const FixedRingCase& c, int D);

struct PresentationMatch {
  bool match = false;
  CountSeries fixed, expected;
};

/// Fixed-ring Hilbert series of a plane action x . v = eta u against the candidate presentation.
PresentationMatch presentation_match(const ActionInstance& inst, const FixedRingCase& c, int D);

/// The standard plane action g = diag(mu, lambda^-1 mu), x . v = u of T_n(lambda, m, 0), mu = zeta_k.
ActionInstance plane_taft_instance(int k, int m, int lambda_exp = 1);

/// Power series num / den to degree D (den[0] = +-1).
CountSeries series_divide(const CountSeries& num, const CountSeries& den, int D);

}  // namespace qhopf
