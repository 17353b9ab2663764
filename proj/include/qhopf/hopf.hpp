#pragma once

#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "qhopf/linalg.hpp"
#include "qhopf/ncalg.hpp"

namespace qhopf {

/// Product of cyclic groups Z_{d_1} x ... x Z_{d_r}.
struct AbelianGroup {
  std::vector<int> orders;

  int rank() const { return static_cast<int>(orders.size()); }
  long order() const;
  int exponent() const;  // lcm of the orders
  std::vector<int> reduce(std::vector<int> e) const;
  std::vector<int> add(const std::vector<int>& a, const std::vector<int>& b) const;
  std::vector<int> scale(const std::vector<int>& a, long k) const;
  bool is_identity(const std::vector<int>& e) const;
  int element_order(const std::vector<int>& e) const;
  /// All elements in mixed-radix order (first coordinate fastest).
  std::vector<std::vector<int>> elements() const;
};

using GroupElem = std::vector<int>;
using CharacterExps = std::vector<int>;  // chi(h) = prod zeta_{d_r}^{f_r e_r}

CycScalar eval_character(const AbelianGroup& G, const CharacterExps& f, const GroupElem& h);

struct QLSData {
  AbelianGroup G;
  std::vector<GroupElem> g;
  std::vector<CharacterExps> chi;

  int rank() const { return static_cast<int>(g.size()); }
  CycScalar chi_at(int i, const GroupElem& h) const { return eval_character(G, chi[i], h); }
  CycScalar lambda(int i) const { return chi_at(i, g[i]); }
  int m(int i) const;  // ord(chi_i(g_i)); 0 if undefined
  int n(int i) const { return G.element_order(g[i]); }
  int nu(const GroupElem& h) const;
};

struct TaftSpec {
  int n = 0;
  int m = 0;
  CycScalar lambda;
  CycScalar gamma;
};

struct BosonizationSpec {
  QLSData qls;
  CycScalar gamma;  // only for rank one
};

using HopfSpec = std::variant<TaftSpec, BosonizationSpec>;

/// g . u_k = alpha_k u_{perm[k]}
struct GrouplikeAction {
  std::vector<int> perm;
  std::vector<CycScalar> alpha;

  static GrouplikeAction identity(int t);
  static GrouplikeAction diagonal(const std::vector<CycScalar>& a);
  int size() const { return static_cast<int>(perm.size()); }
  bool is_diagonal() const;
  Matrix matrix() const;
  /// Composite: (a * b) . u = a . (b . u)
  friend GrouplikeAction operator*(const GrouplikeAction& a, const GrouplikeAction& b);
  friend bool operator==(const GrouplikeAction& a, const GrouplikeAction& b);
  GrouplikeAction pow(long e) const;
  GrouplikeAction inverse() const;
  /// Smallest k >= 1 with g^k = 1; 0 if none up to max_order.
  int order(int max_order = 100000) const;
};

/// A candidate action. skews[i] is the degree-one matrix of x_i, column k = image of u_k.
struct ActionInstance {
  PresentationPtr pres;
  HopfSpec hopf;
  std::vector<GrouplikeAction> grouplikes;  // one per group generator
  std::vector<Matrix> skews;                 // one per x_i
};

/// QLS view of the Hopf data; a Taft algebra becomes Z_n with g = (1), chi = (f), zeta_n^f = lambda.
QLSData qls_view(const HopfSpec& h);
CycScalar hopf_gamma(const HopfSpec& h);
int hopf_rank(const HopfSpec& h);
int group_generator_count(const HopfSpec& h);

struct Violation {
  std::string axiom;    // "a", "b", "c.order", "c.commute", "c.gx", "c.xx", "c.power", "qls.pair", "qls.m"
  std::string witness;  // relation or identity that failed
  std::string residue;  // nonzero normal form or matrix, printed
  NCPoly normal_form;   // set for axioms a and b
};

struct Report {
  bool pass = true;
  std::vector<Violation> violations;
  void fail(Violation v) {
    pass = false;
    violations.push_back(std::move(v));
  }
};

/// Checks shapes and Hopf-data consistency; throws InputError.
void validate_instance(const ActionInstance& inst);

GrouplikeAction element_action(const ActionInstance& inst, const GroupElem& h);
/// The grouplike g_i attached to x_i.
GrouplikeAction skew_grouplike(const ActionInstance& inst, int i);

NCPoly act_grouplike(const Presentation& pres, const GrouplikeAction& g, const NCPoly& p);
Terms act_grouplike_raw(const GrouplikeAction& g, const Terms& p);
NCPoly act_skew(const Presentation& pres, const GrouplikeAction& g, const Matrix& X, const NCPoly& p);
Terms act_skew_raw(const GrouplikeAction& g, const Matrix& X, const Terms& p);
NCPoly act_skew(const ActionInstance& inst, int i, const NCPoly& p);

struct VerifyOptions {
  bool stop_at_first = false;
};

Report verify_module_algebra(const ActionInstance& inst, const VerifyOptions& opt = {});
Report validate_qls(const QLSData& q);

struct FaithfulQLS {
  bool faithful = false;
  std::vector<GroupElem> kernel_generators;
};
FaithfulQLS is_faithful_qls(const QLSData& q);

enum class InnerVerdict { InnerFaithful, NotInnerFaithful, HypothesesUnmet };
std::string inner_verdict_name(InnerVerdict v);

struct InnerFaithfulness {
  InnerVerdict verdict = InnerVerdict::HypothesesUnmet;
  std::string reason;
};
InnerFaithfulness inner_faithfulness(const ActionInstance& inst);

/// A letter of a word in the Hopf generators: grouplike generator h or skew x_i.
struct HopfLetter {
  bool skew = false;
  int index = 0;
};

/// Matrix of the composite operator (letters applied right to left) on basis(pres, d).
Matrix operator_matrix(const ActionInstance& inst, const std::vector<HopfLetter>& word, int d);

struct NamedMatrix {
  std::string name;
  Matrix value;
};
/// Defining relations of H as operators on degree d; all vanish for a verified instance.
std::vector<NamedMatrix> relation_operators(const ActionInstance& inst, int d);

ActionInstance dual_action(const ActionInstance& inst);

/// Whether every Hopf generator maps each filtration level F_k into itself on generators.
bool respects_filtration(const ActionInstance& inst);

}  // namespace qhopf
