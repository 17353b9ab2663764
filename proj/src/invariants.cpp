#include "qhopf/invariants.hpp"

#include <functional>
#include <map>
#include <stdexcept>

namespace qhopf {

namespace {

using LinearMap = std::function<NCPoly(const NCPoly&)>;

/// Kernel of the stacked maps on degree d, as polynomials in the basis words.
std::vector<NCPoly> stacked_kernel(const Presentation& P, const std::vector<LinearMap>& maps, int d) {
  std::vector<Word> B = basis(P, d);
  std::map<Word, int> idx;
  for (size_t k = 0; k < B.size(); ++k) idx[B[k]] = static_cast<int>(k);
  int n = static_cast<int>(B.size());
  RowReducer rr(n);
  for (const auto& f : maps) {
    std::map<int, SparseRow> rows;  // output word -> row over input columns
    for (int k = 0; k < n; ++k) {
      NCPoly img = f(word_poly(P, B[k]));
      for (const auto& [w, c] : img.terms) rows[idx.at(w)].emplace(k, c);
    }
    for (auto& [r, row] : rows) {
      rr.add(std::move(row));
      if (rr.rank() == n) return {};
    }
  }
  std::vector<NCPoly> out;
  for (const auto& v : rr.kernel()) {
    NCPoly p;
    for (int k = 0; k < n; ++k)
      if (!v[k].is_zero()) p.terms.emplace(B[k], v[k]);
    out.push_back(std::move(p));
  }
  return out;
}

LinearMap minus_identity(const Presentation& P, const GrouplikeAction& g) {
  return [&P, g](const NCPoly& p) { return act_grouplike(P, g, p) - p; };
}

void require_graded(const Presentation& P) {
  if (!P.graded()) throw InputError("invariants need a graded presentation");
}

/// Plane instance with x . v = eta u and nothing else; returns (k, m).
std::pair<int, int> plane_a_shape(const ActionInstance& inst) {
  validate_instance(inst);
  const auto* T = std::get_if<TaftSpec>(&inst.hopf);
  const Presentation& P = *inst.pres;
  if (!T || P.family() != Family::QuantumAffine || P.num_gens() != 2)
    throw InputError("expected a Taft action on a quantum plane");
  const Matrix& X = inst.skews[0];
  if (X.at(0, 1).is_zero() || X.nonzero_count() != 1) throw InputError("expected x . v = eta u and x . u = 0");
  if (!inst.grouplikes[0].is_diagonal()) throw InputError("expected diagonal g");
  auto k = P.spec().p[0][1].mult_order();
  if (!k) throw InputError("plane parameter is not a root of unity");
  return {*k, T->m};
}

CountSeries poly_mul(const CountSeries& a, const CountSeries& b, int D) {
  CountSeries c(D + 1, 0);
  for (size_t i = 0; i < a.size() && static_cast<int>(i) <= D; ++i)
    for (size_t j = 0; j < b.size() && static_cast<int>(i + j) <= D; ++j) c[i + j] += a[i] * b[j];
  return c;
}

CountSeries one_minus_t(int deg, int D) {
  CountSeries s(D + 1, 0);
  s[0] = 1;
  if (deg <= D) s[deg] -= 1;
  return s;
}

}  // namespace

std::vector<NCPoly> fixed_space(const ActionInstance& inst, int d) {
  validate_instance(inst);
  const Presentation& P = *inst.pres;
  require_graded(P);
  std::vector<LinearMap> maps;
  for (const auto& g : inst.grouplikes) maps.push_back(minus_identity(P, g));
  for (int i = 0; i < static_cast<int>(inst.skews.size()); ++i)
    maps.push_back([&inst, i](const NCPoly& p) { return act_skew(inst, i, p); });
  return stacked_kernel(P, maps, d);
}

std::vector<NCPoly> fixed_space_group(const Presentation& pres, const std::vector<GrouplikeAction>& gens, int d) {
  require_graded(pres);
  std::vector<LinearMap> maps;
  for (const auto& g : gens) maps.push_back(minus_identity(pres, g));
  return stacked_kernel(pres, maps, d);
}

CountSeries fixed_dims(const ActionInstance& inst, int D) {
  CountSeries out;
  for (int d = 0; d <= D; ++d) out.push_back(static_cast<long>(fixed_space(inst, d).size()));
  return out;
}

bool x_fixed_subalgebra_check(const ActionInstance& inst, int D) {
  validate_instance(inst);
  const auto* T = std::get_if<TaftSpec>(&inst.hopf);
  const Presentation& P = *inst.pres;
  if (!T || P.family() != Family::QuantumAffine) throw InputError("x_fixed_subalgebra_check needs a Taft action on a quantum affine space");
  const Matrix& X = inst.skews[0];
  if (X.at(0, 1).is_zero() || X.nonzero_count() != 1)
    throw InputError("x_fixed_subalgebra_check needs a trivial extension of an action on A_12");
  std::vector<LinearMap> xs = {[&inst](const NCPoly& p) { return act_skew(inst, 0, p); }};
  for (int d = 0; d <= D; ++d) {
    long want = 0;
    for (const auto& w : basis(P, d)) {
      long e2 = 0;
      for (Gen g : w) e2 += g == 1;
      if (e2 % T->m) continue;
      ++want;
      if (!act_skew(inst, 0, word_poly(P, w)).is_zero()) return false;
    }
    if (static_cast<long>(stacked_kernel(P, xs, d).size()) != want) return false;
  }
  return true;
}

SeriesVec trace_series_product(const std::vector<CycScalar>& eigenvalues, const std::vector<int>& degrees, int D) {
  if (eigenvalues.size() != degrees.size()) throw InputError("one degree per eigenvalue");
  SeriesVec s(D + 1, CycScalar(0));
  s[0] = CycScalar(1);
  for (size_t i = 0; i < eigenvalues.size(); ++i) {
    if (degrees[i] < 1) throw InputError("generator degrees must be positive");
    // multiply by 1 / (1 - e t^deg): s_d += e s_{d - deg}, ascending
    for (int d = degrees[i]; d <= D; ++d) s[d] += eigenvalues[i] * s[d - degrees[i]];
  }
  return s;
}

SeriesVec trace_series_direct(const GrouplikeAction& g, const Presentation& pres, int D) {
  require_graded(pres);
  SeriesVec s;
  for (int d = 0; d <= D; ++d) {
    CycScalar tr(0);
    for (const auto& w : basis(pres, d)) {
      NCPoly img = act_grouplike(pres, g, word_poly(pres, w));
      auto it = img.terms.find(w);
      if (it != img.terms.end()) tr += it->second;
    }
    s.push_back(tr);
  }
  return s;
}

std::vector<GrouplikeAction> generated_group(const std::vector<GrouplikeAction>& gens, int limit) {
  if (gens.empty()) throw InputError("generated_group needs at least one generator");
  std::vector<GrouplikeAction> elems = {GrouplikeAction::identity(gens[0].size())};
  for (size_t head = 0; head < elems.size(); ++head)
    for (const auto& g : gens) {
      GrouplikeAction h = g * elems[head];
      bool seen = false;
      for (const auto& e : elems)
        if (e == h) {
          seen = true;
          break;
        }
      if (seen) continue;
      if (static_cast<int>(elems.size()) >= limit) throw std::logic_error("grouplikes do not close to a finite group");
      elems.push_back(std::move(h));
    }
  return elems;
}

MolienResult molien_check(const std::vector<GrouplikeAction>& gens, const Presentation& pres, int D) {
  MolienResult r;
  auto G = generated_group(gens);
  r.group_order = static_cast<long>(G.size());
  r.averaged.assign(D + 1, CycScalar(0));
  for (const auto& g : G) {
    SeriesVec s = trace_series_direct(g, pres, D);
    for (int d = 0; d <= D; ++d) r.averaged[d] += s[d];
  }
  Rational w(1);
  w /= r.group_order;
  CycScalar inv(w);
  r.pass = true;
  for (int d = 0; d <= D; ++d) {
    r.averaged[d] = inv * r.averaged[d];
    r.fixed.push_back(static_cast<long>(fixed_space_group(pres, gens, d).size()));
    if (r.averaged[d] != CycScalar(r.fixed[d])) r.pass = false;
  }
  return r;
}

ReflectionResult is_reflection(const std::vector<CycScalar>& eigenvalues) {
  ReflectionResult r;
  int nontrivial = 0;
  for (const auto& e : eigenvalues)
    if (e != CycScalar(1)) {
      ++nontrivial;
      r.xi = e;
    }
  r.reflection = nontrivial == 1;
  if (!r.reflection) r.xi.reset();
  return r;
}

ReflectionResult is_reflection(const GrouplikeAction& g) {
  if (!g.is_diagonal()) throw InputError("is_reflection needs a diagonal grouplike");
  return is_reflection(g.alpha);
}

std::vector<CycScalar> x_fixed_generator_eigenvalues(const ActionInstance& inst) {
  auto [k, m] = plane_a_shape(inst);
  (void)k;
  const GrouplikeAction& g = inst.grouplikes[0];
  return {g.alpha[0], g.alpha[1].pow(m)};
}

namespace {

CommutativityResult commute_all(const Presentation& P, const std::vector<std::vector<NCPoly>>& by_degree, int D) {
  CommutativityResult r;
  for (int d1 = 1; d1 <= D; ++d1)
    for (int d2 = d1; d1 + d2 <= D; ++d2)
      for (size_t i = 0; i < by_degree[d1].size(); ++i)
        for (size_t j = d1 == d2 ? i + 1 : 0; j < by_degree[d2].size(); ++j) {
          const NCPoly& a = by_degree[d1][i];
          const NCPoly& b = by_degree[d2][j];
          ++r.pairs;
          NCPoly c = multiply(P, a, b) - multiply(P, b, a);
          if (!c.is_zero()) {
            r.commutative = false;
            r.failure = "[" + to_string(P, a.terms) + ", " + to_string(P, b.terms) + "] = " + to_string(P, c.terms);
            return r;
          }
        }
  return r;
}

}  // namespace

CommutativityResult commutativity_check(const ActionInstance& inst, int D) {
  std::vector<std::vector<NCPoly>> by(D + 1);
  for (int d = 1; d <= D; ++d) by[d] = fixed_space(inst, d);
  return commute_all(*inst.pres, by, D);
}

CommutativityResult commutativity_check(const Presentation& pres, int D) {
  require_graded(pres);
  std::vector<std::vector<NCPoly>> by(D + 1);
  for (int d = 1; d <= D; ++d)
    for (const auto& w : basis(pres, d)) by[d].push_back(word_poly(pres, w));
  return commute_all(pres, by, D);
}

std::string fixed_ring_tag_name(FixedRingTag t) {
  switch (t) {
    case FixedRingTag::DividesKM: return "divides_km";
    case FixedRingTag::Veronese: return "veronese";
    case FixedRingTag::Hypersurface: return "hypersurface";
  }
  return "?";
}

FixedRingCase make_fixed_ring_case(FixedRingTag tag, int k, int m) {
  if (k < 1 || m < 1) throw InputError("fixed ring case needs k, m >= 1");
  FixedRingCase c{tag, k, m, 0};
  switch (tag) {
    case FixedRingTag::DividesKM:
      if (m % k) throw InputError("divides_km needs k | m");
      break;
    case FixedRingTag::Veronese:
      if (k % m) throw InputError("veronese needs m | k");
      break;
    case FixedRingTag::Hypersurface:
      if (k <= m || k % (k - m)) throw InputError("hypersurface needs k > m and (k - m) | k");
      c.s = m / (k - m);
      break;
  }
  return c;
}

std::vector<FixedRingCase> applicable_fixed_ring_cases(int k, int m) {
  std::vector<FixedRingCase> out;
  for (auto t : {FixedRingTag::DividesKM, FixedRingTag::Veronese, FixedRingTag::Hypersurface}) {
    try {
      out.push_back(make_fixed_ring_case(t, k, m));
    } catch (const InputError&) {
    }
  }
  return out;
}

CountSeries series_divide(const CountSeries& num, const CountSeries& den, int D) {
  if (den.empty() || (den[0] != 1 && den[0] != -1)) throw InputError("series_divide needs den[0] = +-1");
  CountSeries q(D + 1, 0);
  for (int d = 0; d <= D; ++d) {
    long v = d < static_cast<int>(num.size()) ? num[d] : 0;
    for (int j = 1; j <= d && j < static_cast<int>(den.size()); ++j) v -= den[j] * q[d - j];
    q[d] = v * den[0];
  }
  return q;
}

CountSeries expected_fixed_series(const FixedRingCase& c, int D) {
  int k = c.k, m = c.m;
  switch (c.tag) {
    case FixedRingTag::DividesKM:
      return series_divide({1}, poly_mul(one_minus_t(k, D), one_minus_t(m, D), D), D);
    case FixedRingTag::Veronese: {
      // k[a, b] with deg a = deg b = m, keeping t-degrees divisible by k
      CountSeries full = series_divide({1}, poly_mul(one_minus_t(m, D), one_minus_t(m, D), D), D);
      for (int d = 0; d <= D; ++d)
        if (d % k) full[d] = 0;
      return full;
    }
    case FixedRingTag::Hypersurface: {
      CountSeries num(D + 1, 0);
      for (int j = 0; j <= c.s && j * k <= D; ++j) num[j * k] = 1;
      return series_divide(num, poly_mul(one_minus_t(k, D), one_minus_t(c.s * k, D), D), D);
    }
  }
  return {};
}

PresentationMatch presentation_match(const ActionInstance& inst, const FixedRingCase& c, int D) {
  auto [k, m] = plane_a_shape(inst);
  if (k != c.k || m != c.m) throw InputError("fixed ring case (k, m) does not match the instance");
  make_fixed_ring_case(c.tag, c.k, c.m);
  PresentationMatch r;
  r.fixed = fixed_dims(inst, D);
  r.expected = expected_fixed_series(c, D);
  r.match = r.fixed == r.expected;
  return r;
}

ActionInstance plane_taft_instance(int k, int m, int lambda_exp) {
  if (k < 2 || m < 2) throw InputError("plane_taft_instance needs k, m >= 2");
  if (gcd_int(lambda_exp, m) != 1) throw InputError("lambda must be a primitive m-th root of unity");
  CycScalar mu = zeta(k), lam = zeta(m, lambda_exp);
  ActionInstance inst;
  inst.pres = quantum_plane(mu);
  inst.hopf = TaftSpec{static_cast<int>(lcm_int(k, m)), m, lam, CycScalar(0)};
  inst.grouplikes = {GrouplikeAction::diagonal({mu, lam.inv() * mu})};
  Matrix X(2, 2);
  X.at(0, 1) = 1;
  inst.skews = {X};
  return inst;
}

}  // namespace qhopf
