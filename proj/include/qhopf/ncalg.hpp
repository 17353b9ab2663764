#pragma once

#include <cstdint>
#include <map>
#include <memory>
#include <string>
#include <vector>

#include "qhopf/cyclotomic.hpp"

namespace qhopf {

enum class Family { QuantumAffine, QuantumExterior, QuantumMatrix, QuantizedWeyl };

std::string family_name(Family f);
Family family_from_name(const std::string& s);

using Gen = std::uint8_t;
using Word = std::vector<Gen>;

/// Degree-lexicographic order: shorter words first, then lexicographic.
struct DegLex {
  bool operator()(const Word& a, const Word& b) const {
    if (a.size() != b.size()) return a.size() < b.size();
    return a < b;
  }
};

/// Term map over arbitrary words; it is an NCPoly when every key is normal.
using Terms = std::map<Word, CycScalar, DegLex>;

void add_term(Terms& t, const Word& w, const CycScalar& c);
void add_terms(Terms& t, const Terms& o, const CycScalar& scale = CycScalar(1));

/// Canonical element of a presented algebra: normal words, no zero coefficients.
struct NCPoly {
  Terms terms;

  bool is_zero() const { return terms.empty(); }
  static NCPoly one();
  static NCPoly generator(Gen g);
  friend bool operator==(const NCPoly& a, const NCPoly& b);
  friend bool operator!=(const NCPoly& a, const NCPoly& b) { return !(a == b); }
  NCPoly& operator+=(const NCPoly& o);
  NCPoly& operator-=(const NCPoly& o);
  friend NCPoly operator+(NCPoly a, const NCPoly& b) { return a += b; }
  friend NCPoly operator-(NCPoly a, const NCPoly& b) { return a -= b; }
  friend NCPoly operator*(const CycScalar& s, const NCPoly& p);
};

struct PresentationSpec {
  Family family = Family::QuantumAffine;
  int t = 0;                                 // affine/exterior/weyl
  int N = 0;                                 // matrix
  std::vector<std::vector<CycScalar>> p;     // t x t, affine/exterior/weyl
  CycScalar q;                               // matrix
  std::vector<CycScalar> gamma;              // weyl
};

struct ConfluenceReport {
  bool pass = true;
  int overlaps_checked = 0;
  std::vector<std::string> failures;  // offending overlaps, as generator names
};

class Presentation {
 public:
  explicit Presentation(PresentationSpec spec);

  const PresentationSpec& spec() const { return spec_; }
  Family family() const { return spec_.family; }
  int num_gens() const { return ngens_; }
  bool graded() const { return spec_.family != Family::QuantizedWeyl; }
  const std::vector<std::string>& gen_names() const { return names_; }
  std::string word_name(const Word& w) const;
  int gen_index(const std::string& name) const;  // -1 if unknown

  /// Grading weight (1) or, for the Weyl family, filtration weight i of u_i, v_i.
  int weight(Gen g) const { return weights_[g]; }
  int weighted_degree(const Word& w) const;

  bool is_normal(const Word& w) const;
  bool pair_normal(Gen a, Gen b) const;
  /// Right-hand side of the rewrite rule for a non-normal adjacent pair.
  const Terms& rule(Gen a, Gen b) const { return rules_[a * ngens_ + b]; }

  /// Defining relations as free-algebra term maps.
  const std::vector<Terms>& relations() const { return relations_; }

  Gen matrix_gen(int i, int j) const { return static_cast<Gen>(i * spec_.N + j); }  // 0-based
  Gen weyl_u(int i) const { return static_cast<Gen>(2 * i + 1); }                    // 0-based
  Gen weyl_v(int i) const { return static_cast<Gen>(2 * i); }

 private:
  PresentationSpec spec_;
  int ngens_ = 0;
  std::vector<std::string> names_;
  std::vector<int> weights_;
  std::vector<Terms> rules_;
  std::vector<Terms> relations_;
  // Affine/exterior straightening scalar for the swap u_a u_b -> c u_b u_a, a > b.
  std::vector<CycScalar> swap_;

  friend NCPoly normalize(const Presentation&, const Terms&);
  friend NCPoly normalize_by_rules(const Presentation&, const Terms&);
};

using PresentationPtr = std::shared_ptr<const Presentation>;

PresentationPtr build_presentation(const PresentationSpec& spec);
PresentationPtr quantum_affine(const std::vector<std::vector<CycScalar>>& p);
PresentationPtr quantum_plane(const CycScalar& mu);
PresentationPtr quantum_matrix(int N, const CycScalar& q);
PresentationPtr quantized_weyl(const std::vector<std::vector<CycScalar>>& p, const std::vector<CycScalar>& gamma);
/// Trivial p matrix of size t (used for the one-variable Weyl algebra).
std::vector<std::vector<CycScalar>> unit_p(int t);

/// Canonical form; uses closed-form straightening for the affine/exterior families.
NCPoly normalize(const Presentation& pres, const Terms& raw);
/// Exhaustive rewriting with the presentation's rules (all families).
NCPoly normalize_by_rules(const Presentation& pres, const Terms& raw);
/// Applies the rewrite rule at one adjacent position of a word (must be non-normal there).
Terms rewrite_at(const Presentation& pres, const Word& w, size_t pos);

NCPoly multiply(const Presentation& pres, const NCPoly& a, const NCPoly& b);
NCPoly word_poly(const Presentation& pres, const Word& w, const CycScalar& c = CycScalar(1));

const std::vector<Terms>& relations(const Presentation& pres);
std::vector<Word> basis(const Presentation& pres, int d);
std::vector<Word> pbw_basis_up_to_length(const Presentation& pres, int len);
std::vector<long> hilbert_coeffs(const Presentation& pres, int D);
ConfluenceReport confluence_check(const Presentation& pres);
PresentationPtr koszul_dual(const Presentation& pres);

/// Printable form, e.g. "(zeta5^2)*u1 u2 + u2 u2".
std::string to_string(const Presentation& pres, const Terms& t);

/// Relations truncated to their terms of top filtration weight.
std::vector<Terms> associated_graded_relations(const Presentation& pres);

}  // namespace qhopf
