#include "qhopf/hopf.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <set>

namespace qhopf {

long AbelianGroup::order() const {
  long n = 1;
  for (int d : orders) n *= d;
  return n;
}

int AbelianGroup::exponent() const {
  long e = 1;
  for (int d : orders) e = lcm_int(e, d);
  return static_cast<int>(e);
}

std::vector<int> AbelianGroup::reduce(std::vector<int> e) const {
  for (size_t r = 0; r < orders.size(); ++r) e[r] = static_cast<int>(mod_floor(e[r], orders[r]));
  return e;
}

std::vector<int> AbelianGroup::add(const std::vector<int>& a, const std::vector<int>& b) const {
  std::vector<int> c(orders.size());
  for (size_t r = 0; r < orders.size(); ++r) c[r] = static_cast<int>(mod_floor(a[r] + b[r], orders[r]));
  return c;
}

std::vector<int> AbelianGroup::scale(const std::vector<int>& a, long k) const {
  std::vector<int> c(orders.size());
  for (size_t r = 0; r < orders.size(); ++r) c[r] = static_cast<int>(mod_floor(a[r] * k, orders[r]));
  return c;
}

bool AbelianGroup::is_identity(const std::vector<int>& e) const {
  for (size_t r = 0; r < orders.size(); ++r)
    if (mod_floor(e[r], orders[r]) != 0) return false;
  return true;
}

int AbelianGroup::element_order(const std::vector<int>& e) const {
  long o = 1;
  for (size_t r = 0; r < orders.size(); ++r) {
    long x = mod_floor(e[r], orders[r]);
    o = lcm_int(o, orders[r] / gcd_int(x, orders[r]));
  }
  return static_cast<int>(o);
}

std::vector<std::vector<int>> AbelianGroup::elements() const {
  std::vector<std::vector<int>> out;
  std::vector<int> cur(orders.size(), 0);
  long total = order();
  for (long k = 0; k < total; ++k) {
    out.push_back(cur);
    for (size_t r = 0; r < orders.size(); ++r) {
      if (++cur[r] < orders[r]) break;
      cur[r] = 0;
    }
  }
  return out;
}

CycScalar eval_character(const AbelianGroup& G, const CharacterExps& f, const GroupElem& h) {
  int L = G.exponent();
  long k = 0;
  for (int r = 0; r < G.rank(); ++r) k += static_cast<long>(f[r]) * h[r] * (L / G.orders[r]);
  return zeta(L, mod_floor(k, L));
}

int QLSData::m(int i) const {
  auto o = lambda(i).mult_order();
  return o ? *o : 0;
}

int QLSData::nu(const GroupElem& h) const {
  int c = 0;
  for (const auto& x : g)
    if (G.reduce(x) == G.reduce(h)) ++c;
  return c;
}

GrouplikeAction GrouplikeAction::identity(int t) {
  GrouplikeAction g;
  g.perm.resize(t);
  std::iota(g.perm.begin(), g.perm.end(), 0);
  g.alpha.assign(t, CycScalar(1));
  return g;
}

GrouplikeAction GrouplikeAction::diagonal(const std::vector<CycScalar>& a) {
  GrouplikeAction g = identity(static_cast<int>(a.size()));
  g.alpha = a;
  return g;
}

bool GrouplikeAction::is_diagonal() const {
  for (int k = 0; k < size(); ++k)
    if (perm[k] != k) return false;
  return true;
}

Matrix GrouplikeAction::matrix() const {
  Matrix m(size(), size());
  for (int k = 0; k < size(); ++k) m.at(perm[k], k) = alpha[k];
  return m;
}

GrouplikeAction operator*(const GrouplikeAction& a, const GrouplikeAction& b) {
  GrouplikeAction c;
  int t = b.size();
  c.perm.resize(t);
  c.alpha.resize(t);
  for (int k = 0; k < t; ++k) {
    c.perm[k] = a.perm[b.perm[k]];
    c.alpha[k] = b.alpha[k] * a.alpha[b.perm[k]];
  }
  return c;
}

bool operator==(const GrouplikeAction& a, const GrouplikeAction& b) { return a.perm == b.perm && a.alpha == b.alpha; }

GrouplikeAction GrouplikeAction::pow(long e) const {
  if (e < 0) throw InputError("GrouplikeAction::pow: negative exponent");
  GrouplikeAction r = identity(size());
  GrouplikeAction b = *this;
  while (e > 0) {
    if (e & 1) r = r * b;
    e >>= 1;
    if (e) b = b * b;
  }
  return r;
}

GrouplikeAction GrouplikeAction::inverse() const {
  GrouplikeAction r;
  int t = size();
  r.perm.resize(t);
  r.alpha.resize(t);
  for (int k = 0; k < t; ++k) {
    r.perm[perm[k]] = k;
    r.alpha[perm[k]] = alpha[k].inv();
  }
  return r;
}

int GrouplikeAction::order(int max_order) const {
  GrouplikeAction id = identity(size());
  GrouplikeAction p = *this;
  for (int k = 1; k <= max_order; ++k) {
    if (p == id) return k;
    p = p * *this;
  }
  return 0;
}

QLSData qls_view(const HopfSpec& h) {
  if (const auto* t = std::get_if<TaftSpec>(&h)) {
    auto f = discrete_log(t->lambda, t->n);
    if (!f) throw InputError("Taft lambda is not an n-th root of unity");
    QLSData q;
    q.G.orders = {t->n};
    q.g = {{1}};
    q.chi = {{*f}};
    return q;
  }
  return std::get<BosonizationSpec>(h).qls;
}

CycScalar hopf_gamma(const HopfSpec& h) {
  if (const auto* t = std::get_if<TaftSpec>(&h)) return t->gamma;
  return std::get<BosonizationSpec>(h).gamma;
}

int hopf_rank(const HopfSpec& h) {
  if (std::holds_alternative<TaftSpec>(h)) return 1;
  return std::get<BosonizationSpec>(h).qls.rank();
}

int group_generator_count(const HopfSpec& h) {
  if (std::holds_alternative<TaftSpec>(h)) return 1;
  return std::get<BosonizationSpec>(h).qls.G.rank();
}

void validate_instance(const ActionInstance& inst) {
  if (!inst.pres) throw InputError("instance has no presentation");
  int t = inst.pres->num_gens();
  if (const auto* ts = std::get_if<TaftSpec>(&inst.hopf)) {
    if (ts->n < 1 || ts->m < 1) throw InputError("Taft algebra needs n, m >= 1");
    if (ts->n % ts->m != 0) throw InputError("Taft algebra needs m | n");
    auto o = ts->lambda.mult_order();
    if (!o || *o != ts->m) throw InputError("Taft lambda must have order m");
    if (!ts->gamma.is_zero() && ts->m == ts->n) throw InputError("Taft gamma must be 0 when m = n");
  } else {
    const auto& b = std::get<BosonizationSpec>(inst.hopf);
    const auto& q = b.qls;
    if (q.G.orders.empty()) throw InputError("bosonization needs a nontrivial group presentation");
    for (int d : q.G.orders)
      if (d < 1) throw InputError("group orders must be positive");
    if (q.g.size() != q.chi.size()) throw InputError("QLS data: g and chi lists differ in length");
    for (const auto& e : q.g)
      if (static_cast<int>(e.size()) != q.G.rank()) throw InputError("QLS data: group element of wrong length");
    for (const auto& e : q.chi)
      if (static_cast<int>(e.size()) != q.G.rank()) throw InputError("QLS data: character of wrong length");
    if (!b.gamma.is_zero() && q.rank() >= 2) throw InputError("gamma != 0 is only supported in rank one");
  }
  if (static_cast<int>(inst.grouplikes.size()) != group_generator_count(inst.hopf))
    throw InputError("need one grouplike action per group generator");
  for (const auto& g : inst.grouplikes) {
    if (g.size() != t || static_cast<int>(g.alpha.size()) != t)
      throw InputError("grouplike action size does not match the number of generators");
    std::vector<int> seen(t, 0);
    for (int k : g.perm) {
      if (k < 0 || k >= t || seen[k]++) throw InputError("grouplike perm is not a permutation");
    }
    for (const auto& a : g.alpha)
      if (a.is_zero()) throw InputError("grouplike scalars must be nonzero");
  }
  if (static_cast<int>(inst.skews.size()) != hopf_rank(inst.hopf)) throw InputError("need one skew matrix per x_i");
  for (const auto& X : inst.skews)
    if (X.rows() != t || X.cols() != t) throw InputError("skew matrix shape does not match the number of generators");
}

GrouplikeAction element_action(const ActionInstance& inst, const GroupElem& h) {
  GrouplikeAction r = GrouplikeAction::identity(inst.pres->num_gens());
  QLSData q = qls_view(inst.hopf);
  GroupElem e = q.G.reduce(h);
  for (size_t k = 0; k < inst.grouplikes.size(); ++k)
    if (e[k]) r = inst.grouplikes[k].pow(e[k]) * r;
  return r;
}

GrouplikeAction skew_grouplike(const ActionInstance& inst, int i) {
  QLSData q = qls_view(inst.hopf);
  return element_action(inst, q.g[i]);
}

Terms act_grouplike_raw(const GrouplikeAction& g, const Terms& p) {
  Terms out;
  for (const auto& [w, c] : p) {
    Word nw(w.size());
    CycScalar s = c;
    for (size_t k = 0; k < w.size(); ++k) {
      s *= g.alpha[w[k]];
      nw[k] = static_cast<Gen>(g.perm[w[k]]);
    }
    add_term(out, nw, s);
  }
  return out;
}

NCPoly act_grouplike(const Presentation& pres, const GrouplikeAction& g, const NCPoly& p) {
  return normalize(pres, act_grouplike_raw(g, p.terms));
}

Terms act_skew_raw(const GrouplikeAction& g, const Matrix& X, const Terms& p) {
  int t = X.cols();
  std::vector<std::vector<int>> col(t);
  for (int k = 0; k < t; ++k)
    for (int i = 0; i < t; ++i)
      if (!X.at(i, k).is_zero()) col[k].push_back(i);
  Terms out;
  for (const auto& [w, c] : p) {
    CycScalar prefix = c;
    Word nw = w;
    for (size_t pos = 0; pos < w.size(); ++pos) {
      Gen a = w[pos];
      for (int i : col[a]) {
        nw[pos] = static_cast<Gen>(i);
        add_term(out, nw, prefix * X.at(i, a));
      }
      // the letter at pos now moves into the g-twisted prefix
      prefix *= g.alpha[a];
      nw[pos] = static_cast<Gen>(g.perm[a]);
    }
  }
  return out;
}

NCPoly act_skew(const Presentation& pres, const GrouplikeAction& g, const Matrix& X, const NCPoly& p) {
  return normalize(pres, act_skew_raw(g, X, p.terms));
}

NCPoly act_skew(const ActionInstance& inst, int i, const NCPoly& p) {
  return act_skew(*inst.pres, skew_grouplike(inst, i), inst.skews[i], p);
}

namespace {

GroupElem unit_elem(int rank, int r) {
  GroupElem e(rank, 0);
  e[r] = 1;
  return e;
}

}  // namespace

Report verify_module_algebra(const ActionInstance& inst, const VerifyOptions& opt) {
  validate_instance(inst);
  Report rep;
  const Presentation& P = *inst.pres;
  QLSData q = qls_view(inst.hopf);
  CycScalar gamma = hopf_gamma(inst.hopf);
  auto done = [&] { return opt.stop_at_first && !rep.pass; };

  // (c) degree-one identities first: cheap, and they catch most failures
  int H = static_cast<int>(inst.grouplikes.size());
  std::vector<Matrix> G(H);
  for (int h = 0; h < H; ++h) G[h] = inst.grouplikes[h].matrix();
  int t = P.num_gens();
  Matrix I = Matrix::identity(t);
  for (int h = 0; h < H && !done(); ++h) {
    Matrix r = G[h].pow(q.G.orders[h]) - I;
    if (!r.is_zero())
      rep.fail({"c.order", "g" + std::to_string(h + 1) + "^" + std::to_string(q.G.orders[h]) + " - 1", r.to_string(), {}});
  }
  for (int h = 0; h < H && !done(); ++h)
    for (int h2 = h + 1; h2 < H && !done(); ++h2) {
      Matrix r = G[h] * G[h2] - G[h2] * G[h];
      if (!r.is_zero())
        rep.fail({"c.commute", "g" + std::to_string(h + 1) + " g" + std::to_string(h2 + 1) + " - g" +
                                   std::to_string(h2 + 1) + " g" + std::to_string(h + 1),
                  r.to_string(), {}});
    }
  int theta = q.rank();
  for (int h = 0; h < H && !done(); ++h)
    for (int i = 0; i < theta && !done(); ++i) {
      CycScalar c = q.chi_at(i, unit_elem(q.G.rank(), h));
      Matrix r = G[h] * inst.skews[i] - c * (inst.skews[i] * G[h]);
      if (!r.is_zero())
        rep.fail({"c.gx", "g" + std::to_string(h + 1) + " x" + std::to_string(i + 1) + " - chi" + std::to_string(i + 1) +
                              "(g" + std::to_string(h + 1) + ") x" + std::to_string(i + 1) + " g" + std::to_string(h + 1),
                  r.to_string(), {}});
    }
  for (int i = 0; i < theta && !done(); ++i)
    for (int j = 0; j < theta && !done(); ++j) {
      if (i == j) continue;
      CycScalar c = q.chi_at(j, q.g[i]);
      Matrix r = inst.skews[i] * inst.skews[j] - c * (inst.skews[j] * inst.skews[i]);
      if (!r.is_zero())
        rep.fail({"c.xx", "x" + std::to_string(i + 1) + " x" + std::to_string(j + 1) + " - chi" + std::to_string(j + 1) +
                              "(g" + std::to_string(i + 1) + ") x" + std::to_string(j + 1) + " x" + std::to_string(i + 1),
                  r.to_string(), {}});
    }
  for (int i = 0; i < theta && !done(); ++i) {
    int m = q.m(i);
    if (m < 1) continue;
    Matrix Gi = skew_grouplike(inst, i).matrix();
    Matrix rhs = gamma.is_zero() ? Matrix(t, t) : gamma * (Gi.pow(m) - I);
    Matrix r = inst.skews[i].pow(m) - rhs;
    if (!r.is_zero())
      rep.fail({"c.power", "x" + std::to_string(i + 1) + "^" + std::to_string(m) + " - gamma (g^m - 1)", r.to_string(), {}});
  }

  // (a) and (b) on every defining relation
  const auto& rels = P.relations();
  for (int h = 0; h < H && !done(); ++h)
    for (const auto& r : rels) {
      NCPoly nf = normalize(P, act_grouplike_raw(inst.grouplikes[h], r));
      if (!nf.is_zero()) {
        rep.fail({"a", "g" + std::to_string(h + 1) + " . (" + to_string(P, r) + ")", to_string(P, nf.terms), nf});
        if (done()) break;
      }
    }
  for (int i = 0; i < theta && !done(); ++i) {
    GrouplikeAction gi = skew_grouplike(inst, i);
    for (const auto& r : rels) {
      NCPoly nf = normalize(P, act_skew_raw(gi, inst.skews[i], r));
      if (!nf.is_zero()) {
        rep.fail({"b", "x" + std::to_string(i + 1) + " . (" + to_string(P, r) + ")", to_string(P, nf.terms), nf});
        if (done()) break;
      }
    }
  }
  return rep;
}

Report validate_qls(const QLSData& q) {
  Report rep;
  for (int i = 0; i < q.rank(); ++i)
    for (int j = i + 1; j < q.rank(); ++j) {
      CycScalar prod = q.chi_at(i, q.g[j]) * q.chi_at(j, q.g[i]);
      if (!prod.is_one())
        rep.fail({"qls.pair",
                  "chi" + std::to_string(i + 1) + "(g" + std::to_string(j + 1) + ") chi" + std::to_string(j + 1) + "(g" +
                      std::to_string(i + 1) + ")",
                  describe(prod),
                  {}});
    }
  for (int i = 0; i < q.rank(); ++i)
    if (q.m(i) < 2)
      rep.fail({"qls.m", "ord chi" + std::to_string(i + 1) + "(g" + std::to_string(i + 1) + ")",
                std::to_string(q.m(i)), {}});
  return rep;
}

namespace {

// Closure of a set of generators inside G, as a set of reduced elements.
std::set<GroupElem> subgroup(const AbelianGroup& G, const std::vector<GroupElem>& gens) {
  std::set<GroupElem> S{G.reduce(GroupElem(G.rank(), 0))};
  std::vector<GroupElem> frontier(S.begin(), S.end());
  while (!frontier.empty()) {
    std::vector<GroupElem> next;
    for (const auto& x : frontier)
      for (const auto& g : gens) {
        GroupElem y = G.add(x, g);
        if (S.insert(y).second) next.push_back(y);
      }
    frontier = std::move(next);
  }
  return S;
}

std::vector<GroupElem> greedy_generators(const AbelianGroup& G, const std::vector<GroupElem>& members) {
  std::vector<GroupElem> gens;
  std::set<GroupElem> span = subgroup(G, gens);
  for (const auto& h : members)
    if (!span.count(h)) {
      gens.push_back(h);
      span = subgroup(G, gens);
    }
  return gens;
}

}  // namespace

FaithfulQLS is_faithful_qls(const QLSData& q) {
  std::vector<GroupElem> N;
  for (const auto& h : q.G.elements()) {
    if (q.G.is_identity(h)) continue;
    bool in = true;
    for (int i = 0; i < q.rank() && in; ++i) in = q.chi_at(i, h).is_one();
    if (in) N.push_back(h);
  }
  FaithfulQLS r;
  r.faithful = N.empty();
  r.kernel_generators = greedy_generators(q.G, N);
  return r;
}

std::string inner_verdict_name(InnerVerdict v) {
  switch (v) {
    case InnerVerdict::InnerFaithful: return "inner_faithful";
    case InnerVerdict::NotInnerFaithful: return "not_inner_faithful";
    case InnerVerdict::HypothesesUnmet: return "hypotheses_unmet";
  }
  return "?";
}

InnerFaithfulness inner_faithfulness(const ActionInstance& inst) {
  validate_instance(inst);
  QLSData q = qls_view(inst.hopf);
  for (int i = 0; i < q.rank(); ++i)
    if (inst.skews[i].is_zero())
      return {InnerVerdict::NotInnerFaithful, "x" + std::to_string(i + 1) + " acts by zero"};
  if (!hopf_gamma(inst.hopf).is_zero()) return {InnerVerdict::HypothesesUnmet, "gamma != 0 (x is not nilpotent)"};
  // group elements acting trivially: h - 1 spans a Hopf ideal killing A
  int t = inst.pres->num_gens();
  GrouplikeAction id = GrouplikeAction::identity(t);
  for (const auto& h : q.G.elements()) {
    if (q.G.is_identity(h)) continue;
    if (element_action(inst, h) == id) {
      std::string e;
      for (size_t r = 0; r < h.size(); ++r) e += (r ? "," : "") + std::to_string(h[r]);
      return {InnerVerdict::NotInnerFaithful, "group element (" + e + ") acts trivially"};
    }
  }
  for (int i = 0; i < q.rank(); ++i)
    if (q.nu(q.g[i]) >= 2 && q.m(i) == 2)
      return {InnerVerdict::HypothesesUnmet, "repeated grouplike g" + std::to_string(i + 1) + " with m = 2"};
  FaithfulQLS f = is_faithful_qls(q);
  if (f.faithful) return {InnerVerdict::InnerFaithful, "faithful QLS and every x_i acts nonzero"};
  return {InnerVerdict::InnerFaithful, "G acts faithfully on A and every x_i acts nonzero"};
}

Matrix operator_matrix(const ActionInstance& inst, const std::vector<HopfLetter>& word, int d) {
  const Presentation& P = *inst.pres;
  std::vector<Word> B = basis(P, d);
  std::map<Word, int> idx;
  for (size_t k = 0; k < B.size(); ++k) idx[B[k]] = static_cast<int>(k);
  std::vector<GrouplikeAction> sg;
  for (int i = 0; i < hopf_rank(inst.hopf); ++i) sg.push_back(skew_grouplike(inst, i));
  Matrix M(static_cast<int>(B.size()), static_cast<int>(B.size()));
  for (size_t k = 0; k < B.size(); ++k) {
    NCPoly p;
    p.terms.emplace(B[k], CycScalar(1));
    for (auto it = word.rbegin(); it != word.rend(); ++it) {
      if (it->skew)
        p = act_skew(P, sg[it->index], inst.skews[it->index], p);
      else
        p = act_grouplike(P, inst.grouplikes[it->index], p);
    }
    for (const auto& [w, c] : p.terms) M.at(idx.at(w), static_cast<int>(k)) = c;
  }
  return M;
}

std::vector<NamedMatrix> relation_operators(const ActionInstance& inst, int d) {
  validate_instance(inst);
  QLSData q = qls_view(inst.hopf);
  CycScalar gamma = hopf_gamma(inst.hopf);
  int H = static_cast<int>(inst.grouplikes.size());
  int theta = q.rank();
  std::vector<Matrix> G(H), X(theta), Gi(theta);
  for (int h = 0; h < H; ++h) G[h] = operator_matrix(inst, {{false, h}}, d);
  for (int i = 0; i < theta; ++i) X[i] = operator_matrix(inst, {{true, i}}, d);
  int n = G.empty() ? 0 : G[0].rows();
  Matrix I = Matrix::identity(n);
  for (int i = 0; i < theta; ++i) {
    Gi[i] = I;
    for (int h = 0; h < H; ++h) Gi[i] = Gi[i] * G[h].pow(mod_floor(q.g[i][h], q.G.orders[h]));
  }
  auto s = [](int x) { return std::to_string(x + 1); };
  std::vector<NamedMatrix> out;
  for (int h = 0; h < H; ++h) out.push_back({"g" + s(h) + "^ord - 1", G[h].pow(q.G.orders[h]) - I});
  for (int h = 0; h < H; ++h)
    for (int h2 = h + 1; h2 < H; ++h2) out.push_back({"[g" + s(h) + ", g" + s(h2) + "]", G[h] * G[h2] - G[h2] * G[h]});
  for (int h = 0; h < H; ++h)
    for (int i = 0; i < theta; ++i) {
      GroupElem e(q.G.rank(), 0);
      e[h] = 1;
      out.push_back({"g" + s(h) + " x" + s(i) + " - chi x g", G[h] * X[i] - q.chi_at(i, e) * (X[i] * G[h])});
    }
  for (int i = 0; i < theta; ++i)
    for (int j = i + 1; j < theta; ++j)
      out.push_back({"x" + s(i) + " x" + s(j) + " - chi x x", X[i] * X[j] - q.chi_at(j, q.g[i]) * (X[j] * X[i])});
  for (int i = 0; i < theta; ++i) {
    int m = q.m(i);
    Matrix rhs = gamma.is_zero() ? Matrix(n, n) : gamma * (Gi[i].pow(m) - I);
    out.push_back({"x" + s(i) + "^m - gamma (g^m - 1)", X[i].pow(m) - rhs});
  }
  return out;
}

ActionInstance dual_action(const ActionInstance& inst) {
  validate_instance(inst);
  if (inst.pres->family() != Family::QuantumAffine) throw InputError("dual_action expects a QuantumAffine instance");
  if (!hopf_gamma(inst.hopf).is_zero()) throw InputError("dual_action expects gamma = 0");
  for (const auto& g : inst.grouplikes)
    if (!g.is_diagonal()) throw InputError("dual_action expects diagonal grouplikes");
  ActionInstance d;
  d.pres = koszul_dual(*inst.pres);
  if (const auto* t = std::get_if<TaftSpec>(&inst.hopf)) {
    d.hopf = TaftSpec{t->n, t->m, t->lambda.inv(), CycScalar(0)};
  } else {
    BosonizationSpec b = std::get<BosonizationSpec>(inst.hopf);
    for (auto& f : b.qls.chi) f = b.qls.G.scale(f, -1);
    d.hopf = b;
  }
  d.grouplikes = inst.grouplikes;
  for (const auto& X : inst.skews) d.skews.push_back(X.transpose());
  return d;
}

bool respects_filtration(const ActionInstance& inst) {
  validate_instance(inst);
  const Presentation& P = *inst.pres;
  int t = P.num_gens();
  auto ok_matrix = [&](const Matrix& M) {
    for (int i = 0; i < t; ++i)
      for (int k = 0; k < t; ++k)
        if (!M.at(i, k).is_zero() && P.weight(static_cast<Gen>(i)) > P.weight(static_cast<Gen>(k))) return false;
    return true;
  };
  for (const auto& g : inst.grouplikes)
    if (!ok_matrix(g.matrix())) return false;
  for (const auto& X : inst.skews)
    if (!ok_matrix(X)) return false;
  return true;
}

}  // namespace qhopf
