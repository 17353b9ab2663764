#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "qhopf/hopf.hpp"

namespace qhopf {

/// A family of Taft actions: g and lambda fixed, x ranging over the span of `params`.
/// `inst` is the member with every parameter equal to 1.
struct ClassifiedAction {
  ActionInstance inst;
  std::vector<Matrix> params;
  std::vector<std::string> param_names;
  std::string tag;
  std::vector<std::string> contains;  // catalog tags of proper subfamilies

  const GrouplikeAction& g() const { return inst.grouplikes.at(0); }
  const CycScalar& lambda() const;
  int m() const;
  ActionInstance member(const std::vector<CycScalar>& coeffs) const;
  /// Sum of the selected parameter matrices.
  Matrix skew_for(const std::vector<int>& subset) const;
};

/// Taft family T_n(lambda, m, 0) with n = lcm(ord g, m).
ClassifiedAction make_taft_family(PresentationPtr pres, const CycScalar& lambda, GrouplikeAction g,
                                  std::vector<Matrix> params, std::vector<std::string> names, std::string tag);

/// Deterministic total order for reports.
std::string family_key(const ClassifiedAction& a);

bool same_span(const std::vector<Matrix>& a, const std::vector<Matrix>& b);
bool span_contains(const std::vector<Matrix>& big, const std::vector<Matrix>& small);

enum class GrouplikeShape { Diagonal, DiagonalOrAntiDiagonal, Monomial, RankOneTau };

struct SearchGrid {
  int level = 0;                 // 0: default for the search
  GrouplikeShape shape = GrouplikeShape::Monomial;
  std::vector<CycScalar> scalars;  // empty: all of mu_level
  int cap = 2;                   // oracle support cap
  bool oracle = false;
  int workers = 1;
};

/// All grouplike candidates of the grid's shape for a presentation.
std::vector<GrouplikeAction> grouplike_candidates(const Presentation& pres, const SearchGrid& grid);

/// Positions (i, k), 0-based, with alpha_i = lambda alpha_k.
std::vector<std::pair<int, int>> skew_support(const GrouplikeAction& g, const CycScalar& lambda);

/// Basis of {X : G X = lambda X G} for monomial g, one vector per consistent orbit.
std::vector<Matrix> commuting_skews(const GrouplikeAction& g, const CycScalar& lambda);

/// Whether (sum c_b B_b)^m vanishes identically in the c_b.
bool generically_nilpotent(const std::vector<Matrix>& B, int m);

struct OracleHit {
  GrouplikeAction g;
  CycScalar lambda;
  Matrix X;
};

struct CrossCheck {
  bool run = false;
  bool pass = true;
  std::vector<std::string> failures;
};

struct SearchResult {
  std::vector<ClassifiedAction> families;  // sorted by family_key
  std::vector<OracleHit> oracle_hits;
  CrossCheck cross;
  long candidates = 0;
  long automorphisms = 0;  // candidates passing axiom (a)
};

/// Pruned search over the given grouplikes and lambdas; with `grid.oracle` also the
/// unpruned 0/1-support enumeration and the cross-check between the two.
SearchResult search_taft_actions(const PresentationPtr& pres, const std::vector<CycScalar>& lambdas,
                                 const std::vector<GrouplikeAction>& candidates, const SearchGrid& grid);

std::vector<CycScalar> primitive_roots(int m);

/// Quantum plane (or first quantized Weyl algebra) with mu = zeta_k, all lambda of order m.
SearchResult enumerate_taft_qplane(int k, int m, bool weyl, SearchGrid grid);
/// Quantum affine space, t >= 3, all lambda of order m; tags "ext-A<i><j>" or "ext-A<i><j><k>".
SearchResult enumerate_taft_affine(const std::vector<std::vector<CycScalar>>& p, int m, SearchGrid grid);
/// O_q(M_N) with grouplikes in the rank-one torus and its transpose twist; tags from the catalog.
SearchResult enumerate_taft_matrix(int N, const CycScalar& q, const CycScalar& lambda, SearchGrid grid);

/// Exponent-based catalogs of the known matrix actions.
std::vector<ClassifiedAction> m2_catalog(const CycScalar& q, bool with_order3 = false);
ClassifiedAction m2_row(int row, const CycScalar& q);
ClassifiedAction m2_order3_family(int which, const CycScalar& q);
/// N >= 3; rows 1,2,5,6 take the shifted index (b for rows 1,5 and a for rows 2,6), others ignore it.
ClassifiedAction mn_row(int N, int row, int index, const CycScalar& q);
std::vector<ClassifiedAction> mn_catalog(int N, const CycScalar& q);

/// Sets tag and `contains` from a catalog (matching g, lambda and span).
void tag_from_catalog(std::vector<ClassifiedAction>& found, const std::vector<ClassifiedAction>& catalog);

struct CompatOption {
  CycScalar zeta;
  std::vector<int> a_params, b_params;  // kept parameter indices
  std::vector<std::string> constraints;
};

/// a plays x_j, b plays x_i; zeta = chi_j(g_i).
struct CompatResult {
  bool compatible = false;
  std::optional<CycScalar> zeta;
  std::vector<std::string> constraints;
  std::vector<CompatOption> options;  // maximal valid parameter subsets
};

/// zeta with g_b x_a = zeta x_a g_b, g_a x_b = zeta^-1 x_b g_a, x_b x_a = zeta x_a x_b, if any.
std::optional<CycScalar> pair_zeta(const ClassifiedAction& a, const std::vector<int>& sa, const ClassifiedAction& b,
                                   const std::vector<int>& sb);
CompatResult compatibility(const ClassifiedAction& a, const ClassifiedAction& b);

struct MaxRankResult {
  int theta = 0;
  std::vector<int> members;                  // indices into the action list
  std::vector<std::vector<int>> kept;        // kept parameters per member
  std::vector<std::vector<int>> rejected;    // raw cliques of size theta+1 (all pairs compatible)
  int raw_clique_number = 0;
  ActionInstance witness;
  std::vector<std::vector<CycScalar>> characters;  // characters[j][i] = chi_j(g_i)
  Report witness_verify;
  Report witness_qls;
  InnerFaithfulness witness_inner;
  bool witness_reduced = false;  // product group had a kernel; witness uses the image group
};

/// The same action with G replaced by its image in Aut(A); needs diagonal grouplikes.
ActionInstance faithful_image(const ActionInstance& inst);

MaxRankResult max_rank(const std::vector<ClassifiedAction>& actions, int workers = 1);

/// Combines Taft families (with chosen parameter subsets) into one bosonization action.
ActionInstance bosonize(const std::vector<ClassifiedAction>& parts, const std::vector<std::vector<int>>& kept);

struct ExampleParams {
  int N = 3;                                 // matrix size for "mn-patch"
  int t = 3;                                 // affine dimension for "affine-sharp"
  CycScalar q;                               // default zeta_5
  std::vector<std::vector<CycScalar>> p;     // default affine_default_p(t)
  CycScalar lambda;                          // default per example
};

/// p_ij = zeta_5^(1 + (i + j) mod 4) for i < j.
std::vector<std::vector<CycScalar>> affine_default_p(int t);

/// "m2-rank3", "mn-patch", "affine-sharp", "weyl-a2", "affine-cycle-gamma", "affine-chain".
ActionInstance build_example(const std::string& which, ExampleParams params = {});
std::vector<std::string> example_ids();

}  // namespace qhopf
