#include "qhopf/classify.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <numeric>
#include <set>
#include <sstream>
#include <stdexcept>

#include "qhopf/parallel.hpp"

namespace qhopf {

namespace {

CycScalar qpow(const CycScalar& q, long e) { return q.pow(e); }

SparseRow flatten(const Matrix& M) {
  SparseRow r;
  for (int i = 0; i < M.rows(); ++i)
    for (int j = 0; j < M.cols(); ++j)
      if (!M.at(i, j).is_zero()) r.emplace(i * M.cols() + j, M.at(i, j));
  return r;
}

int span_rank(const std::vector<Matrix>& a, const std::vector<Matrix>& b) {
  int n = 0;
  if (!a.empty()) n = a[0].rows() * a[0].cols();
  if (!b.empty()) n = b[0].rows() * b[0].cols();
  RowReducer rr(n);
  for (const auto& M : a) rr.add(flatten(M));
  for (const auto& M : b) rr.add(flatten(M));
  return rr.rank();
}

/// Reduced echelon basis of a span of matrices, ordered by pivot position.
std::vector<Matrix> canonical_basis(const std::vector<Matrix>& span, int t) {
  RowReducer rr(t * t);
  for (const auto& M : span) rr.add(flatten(M));
  std::vector<Matrix> out;
  for (const auto& [pc, row] : rr.pivot_rows()) {
    Matrix M(t, t);
    for (const auto& [c, v] : row) M.at(c / t, c % t) = v;
    out.push_back(std::move(M));
  }
  return out;
}

std::string matrix_key(const Matrix& M) {
  std::ostringstream os;
  for (int i = 0; i < M.rows(); ++i)
    for (int j = 0; j < M.cols(); ++j)
      if (!M.at(i, j).is_zero()) os << "(" << i << "," << j << ":" << describe(M.at(i, j)) << ")";
  return os.str();
}

std::string grouplike_key(const GrouplikeAction& g) {
  std::ostringstream os;
  for (int k = 0; k < g.size(); ++k) os << (k ? " " : "") << g.perm[k] << ":" << describe(g.alpha[k]);
  return os.str();
}

bool all_rel_vanish(const Presentation& P, const GrouplikeAction& g) {
  for (const auto& r : P.relations())
    if (!normalize(P, act_grouplike_raw(g, r)).is_zero()) return false;
  return true;
}

/// Scalar c with G M G^-1 = c M, if M != 0 is an eigenvector of conjugation.
std::optional<CycScalar> conj_scalar(const GrouplikeAction& G, const Matrix& M) {
  Matrix C = G.matrix() * M * G.inverse().matrix();
  for (int i = 0; i < M.rows(); ++i)
    for (int j = 0; j < M.cols(); ++j)
      if (!M.at(i, j).is_zero()) {
        CycScalar c = C.at(i, j) / M.at(i, j);
        if (C != c * M) return std::nullopt;
        return c;
      }
  return std::nullopt;
}

std::vector<int> mask_indices(unsigned mask) {
  std::vector<int> v;
  for (int i = 0; mask >> i; ++i)
    if (mask >> i & 1u) v.push_back(i);
  return v;
}

int ord_of(const CycScalar& a) {
  auto o = a.mult_order();
  return o ? *o : 0;
}

Matrix unit_matrix(int t, int i, int k, const CycScalar& v = CycScalar(1)) {
  Matrix M(t, t);
  M.at(i, k) = v;
  return M;
}

}  // namespace

// ---------------------------------------------------------------------------
// families

const CycScalar& ClassifiedAction::lambda() const { return std::get<TaftSpec>(inst.hopf).lambda; }

int ClassifiedAction::m() const { return std::get<TaftSpec>(inst.hopf).m; }

ActionInstance ClassifiedAction::member(const std::vector<CycScalar>& coeffs) const {
  if (coeffs.size() != params.size()) throw InputError("member: need one coefficient per parameter");
  ActionInstance r = inst;
  int t = inst.pres->num_gens();
  Matrix X(t, t);
  for (size_t b = 0; b < params.size(); ++b) X = X + coeffs[b] * params[b];
  r.skews = {X};
  return r;
}

Matrix ClassifiedAction::skew_for(const std::vector<int>& subset) const {
  int t = inst.pres->num_gens();
  Matrix X(t, t);
  for (int b : subset) X = X + params.at(b);
  return X;
}

ClassifiedAction make_taft_family(PresentationPtr pres, const CycScalar& lambda, GrouplikeAction g,
                                  std::vector<Matrix> params, std::vector<std::string> names, std::string tag) {
  int m = ord_of(lambda);
  if (m < 1) throw InputError("lambda must be a root of unity");
  int og = g.order();
  if (og < 1) throw InputError("grouplike must have finite order");
  ClassifiedAction a;
  a.inst.pres = std::move(pres);
  a.inst.hopf = TaftSpec{static_cast<int>(lcm_int(og, m)), m, lambda, CycScalar(0)};
  int t = a.inst.pres->num_gens();
  Matrix X(t, t);
  for (const auto& P : params) X = X + P;
  a.inst.grouplikes = {std::move(g)};
  a.inst.skews = {X};
  a.params = std::move(params);
  a.param_names = std::move(names);
  a.tag = std::move(tag);
  return a;
}

std::string family_key(const ClassifiedAction& a) {
  std::string s = grouplike_key(a.g()) + " | " + describe(a.lambda()) + " |";
  for (const auto& P : a.params) s += " " + matrix_key(P);
  return s;
}

bool same_span(const std::vector<Matrix>& a, const std::vector<Matrix>& b) {
  int ra = span_rank(a, {}), rb = span_rank(b, {});
  return ra == rb && span_rank(a, b) == ra;
}

bool span_contains(const std::vector<Matrix>& big, const std::vector<Matrix>& small) {
  return span_rank(big, small) == span_rank(big, {});
}

// ---------------------------------------------------------------------------
// candidates and linear constraints

std::vector<CycScalar> primitive_roots(int m) {
  std::vector<CycScalar> v;
  for (int j = 1; j <= m; ++j)
    if (gcd_int(j, m) == 1) v.push_back(zeta(m, j));
  return v;
}

std::vector<GrouplikeAction> grouplike_candidates(const Presentation& pres, const SearchGrid& grid) {
  if (grid.level < 1 && grid.scalars.empty()) throw InputError("search grid needs a level or a scalar set");
  std::vector<CycScalar> S = grid.scalars;
  if (S.empty())
    for (int k = 0; k < grid.level; ++k) S.push_back(zeta(grid.level, k));
  int t = pres.num_gens();
  int ns = static_cast<int>(S.size());
  std::vector<std::vector<int>> perms;
  std::vector<int> id(t);
  std::iota(id.begin(), id.end(), 0);
  switch (grid.shape) {
    case GrouplikeShape::Diagonal: perms = {id}; break;
    case GrouplikeShape::DiagonalOrAntiDiagonal: {
      perms = {id};
      std::vector<int> rev(id.rbegin(), id.rend());
      if (rev != id) perms.push_back(rev);
      break;
    }
    case GrouplikeShape::Monomial: {
      std::vector<int> p = id;
      do perms.push_back(p);
      while (std::next_permutation(p.begin(), p.end()));
      break;
    }
    case GrouplikeShape::RankOneTau: break;
  }
  std::vector<GrouplikeAction> out;
  if (grid.shape == GrouplikeShape::RankOneTau) {
    if (pres.family() != Family::QuantumMatrix) throw InputError("rank-one grouplike grid needs a quantum matrix algebra");
    int N = pres.spec().N;
    std::vector<int> tr(t);
    for (int i = 0; i < N; ++i)
      for (int j = 0; j < N; ++j) tr[i * N + j] = j * N + i;
    // alpha_ij = a_i b_j with b_N = 1
    long total = 1;
    for (int k = 0; k < 2 * N - 1; ++k) total *= ns;
    for (const auto& perm : {id, tr}) {
      for (long code = 0; code < total; ++code) {
        std::vector<int> d(2 * N - 1);
        long c = code;
        for (int k = 0; k < 2 * N - 1; ++k) {
          d[k] = static_cast<int>(c % ns);
          c /= ns;
        }
        GrouplikeAction g;
        g.perm = perm;
        g.alpha.resize(t);
        for (int i = 0; i < N; ++i)
          for (int j = 0; j < N; ++j) {
            CycScalar b = j == N - 1 ? CycScalar(1) : S[d[N + j]];
            g.alpha[i * N + j] = S[d[i]] * b;
          }
        out.push_back(std::move(g));
      }
      if (N == 1) break;
    }
    return out;
  }
  long total = 1;
  for (int k = 0; k < t; ++k) total *= ns;
  for (const auto& perm : perms)
    for (long code = 0; code < total; ++code) {
      GrouplikeAction g;
      g.perm = perm;
      g.alpha.resize(t);
      long c = code;
      for (int k = 0; k < t; ++k) {
        g.alpha[k] = S[c % ns];
        c /= ns;
      }
      out.push_back(std::move(g));
    }
  return out;
}

std::vector<std::pair<int, int>> skew_support(const GrouplikeAction& g, const CycScalar& lambda) {
  if (!g.is_diagonal()) throw InputError("skew_support needs a diagonal grouplike");
  std::vector<std::pair<int, int>> out;
  for (int i = 0; i < g.size(); ++i)
    for (int k = 0; k < g.size(); ++k)
      if (g.alpha[i] == lambda * g.alpha[k]) out.emplace_back(i, k);
  return out;
}

std::vector<Matrix> commuting_skews(const GrouplikeAction& g, const CycScalar& lambda) {
  // G X = lambda X G  <=>  X(s', k') = lambda^-1 alpha_s / alpha_k X(s, k) with s' = perm[s], k' = perm[k]
  int t = g.size();
  CycScalar li = lambda.inv();
  std::vector<char> seen(static_cast<size_t>(t) * t, 0);
  std::vector<Matrix> out;
  for (int s0 = 0; s0 < t; ++s0)
    for (int k0 = 0; k0 < t; ++k0) {
      if (seen[s0 * t + k0]) continue;
      Matrix M(t, t);
      int s = s0, k = k0;
      CycScalar v(1);
      for (;;) {
        seen[s * t + k] = 1;
        M.at(s, k) = v;
        CycScalar nv = li * g.alpha[s] / g.alpha[k] * v;
        s = g.perm[s];
        k = g.perm[k];
        if (s == s0 && k == k0) {
          if (nv.is_one()) out.push_back(std::move(M));
          break;
        }
        v = nv;
      }
    }
  return out;
}

bool generically_nilpotent(const std::vector<Matrix>& B, int m) {
  if (B.empty()) return true;
  int t = B[0].rows();
  int s = static_cast<int>(B.size());
  std::map<std::vector<int>, Matrix> cur;
  cur.emplace(std::vector<int>(s, 0), Matrix::identity(t));
  for (int step = 0; step < m; ++step) {
    std::map<std::vector<int>, Matrix> nxt;
    for (const auto& [ms, M] : cur)
      for (int b = 0; b < s; ++b) {
        Matrix P = M * B[b];
        if (P.is_zero()) continue;
        std::vector<int> key = ms;
        ++key[b];
        auto it = nxt.find(key);
        if (it == nxt.end())
          nxt.emplace(std::move(key), std::move(P));
        else
          it->second = it->second + P;
      }
    cur.clear();
    for (auto& [k, M] : nxt)
      if (!M.is_zero()) cur.emplace(k, std::move(M));
    if (cur.empty()) return true;
  }
  return cur.empty();
}

// ---------------------------------------------------------------------------
// search

namespace {

struct CandidateOutput {
  std::vector<ClassifiedAction> families;
  std::vector<OracleHit> hits;
  bool automorphism = false;
};

/// Solution space of axiom (b) inside the span of V (linear in the coefficients).
std::vector<Matrix> solve_skew_axiom(const Presentation& P, const GrouplikeAction& g, const std::vector<Matrix>& V) {
  int nb = static_cast<int>(V.size());
  std::map<std::pair<int, Word>, SparseRow, std::function<bool(const std::pair<int, Word>&, const std::pair<int, Word>&)>>
      eqs([](const auto& a, const auto& b) {
        if (a.first != b.first) return a.first < b.first;
        return DegLex{}(a.second, b.second);
      });
  const auto& rels = P.relations();
  for (int b = 0; b < nb; ++b)
    for (size_t ri = 0; ri < rels.size(); ++ri) {
      NCPoly nf = normalize(P, act_skew_raw(g, V[b], rels[ri]));
      for (const auto& [w, c] : nf.terms) eqs[{static_cast<int>(ri), w}][b] = c;
    }
  RowReducer rr(nb);
  for (auto& [k, row] : eqs) rr.add(row);
  int t = P.num_gens();
  std::vector<Matrix> sol;
  for (const auto& c : rr.kernel()) {
    Matrix M(t, t);
    for (int b = 0; b < nb; ++b)
      if (!c[b].is_zero()) M = M + c[b] * V[b];
    sol.push_back(std::move(M));
  }
  return canonical_basis(sol, t);
}

/// Maximal subsets of the basis whose generic combination is nilpotent of order m.
std::vector<std::vector<int>> nilpotent_subsets(const std::vector<Matrix>& S, int m) {
  int s = static_cast<int>(S.size());
  if (s > 16) throw std::logic_error("solution space too large for subset enumeration");
  if (generically_nilpotent(S, m)) {
    std::vector<int> all(s);
    std::iota(all.begin(), all.end(), 0);
    return {all};
  }
  std::vector<unsigned> kept;
  std::vector<unsigned> masks;
  for (unsigned mask = 1; mask < (1u << s); ++mask) masks.push_back(mask);
  std::stable_sort(masks.begin(), masks.end(),
                   [](unsigned a, unsigned b) { return __builtin_popcount(a) > __builtin_popcount(b); });
  for (unsigned mask : masks) {
    bool sub = false;
    for (unsigned k : kept)
      if ((mask & k) == mask) sub = true;
    if (sub) continue;
    std::vector<Matrix> B;
    for (int i : mask_indices(mask)) B.push_back(S[i]);
    if (generically_nilpotent(B, m)) kept.push_back(mask);
  }
  std::vector<std::vector<int>> out;
  for (unsigned k : kept) out.push_back(mask_indices(k));
  std::sort(out.begin(), out.end());
  return out;
}

void verify_family_or_throw(const ClassifiedAction& f) {
  std::vector<CycScalar> c1(f.params.size(), CycScalar(1)), c2;
  for (size_t b = 0; b < f.params.size(); ++b) c2.push_back(CycScalar(static_cast<long>(b) + 2));
  for (const auto& c : {c1, c2}) {
    Report r = verify_module_algebra(f.member(c), {true});
    if (!r.pass) throw std::logic_error("search produced a failing family: " + family_key(f) + " axiom " +
                                        r.violations[0].axiom + " " + r.violations[0].witness);
  }
}

/// Exponents e with alpha_k = zeta_L^{e_k}, if every scalar lies in mu_L.
std::optional<std::vector<int>> root_exponents(const std::vector<CycScalar>& vals, const std::vector<CycScalar>& table) {
  std::vector<int> e;
  for (const auto& v : vals) {
    int found = -1;
    for (size_t k = 0; k < table.size(); ++k)
      if (table[k] == v) {
        found = static_cast<int>(k);
        break;
      }
    if (found < 0) return std::nullopt;
    e.push_back(found);
  }
  return e;
}

/// Integer version of commuting_skews for scalars in mu_L.
std::vector<Matrix> commuting_skews_exp(const GrouplikeAction& g, const std::vector<int>& e, int l, int L,
                                        const std::vector<CycScalar>& table) {
  int t = g.size();
  std::vector<char> seen(static_cast<size_t>(t) * t, 0);
  std::vector<Matrix> out;
  std::vector<std::pair<int, int>> pos;
  std::vector<int> val;
  for (int s0 = 0; s0 < t; ++s0)
    for (int k0 = 0; k0 < t; ++k0) {
      if (seen[s0 * t + k0]) continue;
      pos.clear();
      val.clear();
      int s = s0, k = k0, v = 0;
      for (;;) {
        seen[s * t + k] = 1;
        pos.emplace_back(s, k);
        val.push_back(v);
        int nv = static_cast<int>(mod_floor(v - l + e[s] - e[k], L));
        s = g.perm[s];
        k = g.perm[k];
        if (s == s0 && k == k0) {
          if (nv == 0) {
            Matrix M(t, t);
            for (size_t i = 0; i < pos.size(); ++i) M.at(pos[i].first, pos[i].second) = table[val[i]];
            out.push_back(std::move(M));
          }
          break;
        }
        v = nv;
      }
    }
  return out;
}

struct LevelTable {
  int L = 0;
  std::vector<CycScalar> roots;
  std::vector<int> lambda_exp;
};

CandidateOutput process_candidate(const PresentationPtr& pres, const GrouplikeAction& g,
                                  const std::vector<CycScalar>& lambdas, const SearchGrid& grid,
                                  const LevelTable& lt) {
  CandidateOutput out;
  const Presentation& P = *pres;
  int t = P.num_gens();
  int og = g.order();
  std::optional<std::vector<int>> ex;
  if (lt.L > 0) ex = root_exponents(g.alpha, lt.roots);
  std::optional<bool> aut;
  auto is_aut = [&] {
    if (!aut) aut = all_rel_vanish(P, g);
    return *aut;
  };
  for (size_t li = 0; li < lambdas.size(); ++li) {
    const CycScalar& lam = lambdas[li];
    int m = ord_of(lam);
    std::vector<Matrix> V = ex ? commuting_skews_exp(g, *ex, lt.lambda_exp[li], lt.L, lt.roots)
                               : commuting_skews(g, lam);
    if (!V.empty() && is_aut()) {
      std::vector<Matrix> S = solve_skew_axiom(P, g, V);
      for (const auto& subset : nilpotent_subsets(S, m)) {
        if (S.empty()) break;
        std::vector<Matrix> B;
        std::vector<std::string> names;
        for (int i : subset) {
          B.push_back(S[i]);
          names.push_back("c" + std::to_string(names.size() + 1));
        }
        ClassifiedAction f = make_taft_family(pres, lam, g, canonical_basis(B, t), names, "");
        verify_family_or_throw(f);
        out.families.push_back(std::move(f));
      }
    }
    if (!grid.oracle) continue;
    // unpruned: every support of size <= cap with entries 1 satisfying G X = lambda X G
    std::vector<std::pair<int, int>> ok;
    for (int s = 0; s < t; ++s)
      for (int k = 0; k < t; ++k) {
        bool hit = ex ? mod_floor((*ex)[s] - lt.lambda_exp[li] - (*ex)[k], lt.L) == 0
                      : g.alpha[s] == lam * g.alpha[k];
        if (hit) ok.emplace_back(s, k);
      }
    int no = static_cast<int>(ok.size());
    std::vector<int> pick;
    std::function<void(int)> rec = [&](int start) {
      if (!pick.empty()) {
        std::set<std::pair<int, int>> sup;
        for (int i : pick) sup.insert(ok[i]);
        bool closed = true;
        for (const auto& [s, k] : sup)
          if (!sup.count({g.perm[s], g.perm[k]})) closed = false;
        if (closed) {
          Matrix X(t, t);
          for (const auto& [s, k] : sup) X.at(s, k) = 1;
          ActionInstance inst;
          inst.pres = pres;
          inst.hopf = TaftSpec{static_cast<int>(lcm_int(og, m)), m, lam, CycScalar(0)};
          inst.grouplikes = {g};
          inst.skews = {X};
          if (verify_module_algebra(inst, {true}).pass) out.hits.push_back({g, lam, X});
        }
      }
      if (static_cast<int>(pick.size()) == grid.cap) return;
      for (int i = start; i < no; ++i) {
        pick.push_back(i);
        rec(i + 1);
        pick.pop_back();
      }
    };
    rec(0);
  }
  out.automorphism = aut.value_or(all_rel_vanish(P, g));
  return out;
}

bool binary_entries(const Matrix& M, int* support) {
  *support = 0;
  for (int i = 0; i < M.rows(); ++i)
    for (int j = 0; j < M.cols(); ++j) {
      const auto& v = M.at(i, j);
      if (v.is_zero()) continue;
      if (!v.is_one()) return false;
      ++*support;
    }
  return true;
}

}  // namespace

SearchResult search_taft_actions(const PresentationPtr& pres, const std::vector<CycScalar>& lambdas,
                                 const std::vector<GrouplikeAction>& candidates, const SearchGrid& grid) {
  for (const auto& l : lambdas)
    if (ord_of(l) < 1) throw InputError("lambda must be a root of unity");
  if (grid.cap < 1) throw InputError("support cap must be at least 1");
  LevelTable lt;
  if (grid.level > 0) {
    lt.L = grid.level;
    for (int k = 0; k < lt.L; ++k) lt.roots.push_back(zeta(lt.L, k));
    auto le = root_exponents(lambdas, lt.roots);
    if (le)
      lt.lambda_exp = *le;
    else
      lt = LevelTable{};
  }
  auto outs = parallel_map<CandidateOutput>(candidates.size(), grid.workers, [&](size_t i) {
    return process_candidate(pres, candidates[i], lambdas, grid, lt);
  });
  SearchResult res;
  res.candidates = static_cast<long>(candidates.size());
  for (auto& o : outs) {
    if (o.automorphism) ++res.automorphisms;
    for (auto& f : o.families) res.families.push_back(std::move(f));
    for (auto& h : o.hits) res.oracle_hits.push_back(std::move(h));
  }
  std::vector<std::pair<std::string, size_t>> keys;
  for (size_t i = 0; i < res.families.size(); ++i) keys.emplace_back(family_key(res.families[i]), i);
  std::sort(keys.begin(), keys.end());
  std::vector<ClassifiedAction> sorted;
  for (const auto& [k, i] : keys) sorted.push_back(std::move(res.families[i]));
  res.families = std::move(sorted);

  if (grid.oracle) {
    res.cross.run = true;
    auto fail = [&](std::string s) {
      res.cross.pass = false;
      res.cross.failures.push_back(std::move(s));
    };
    for (const auto& h : res.oracle_hits) {
      bool found = false;
      for (const auto& f : res.families)
        if (f.g() == h.g && f.lambda() == h.lambda && span_contains(f.params, {h.X})) found = true;
      if (!found) fail("oracle action outside every family: g=" + grouplike_key(h.g) + " X=" + matrix_key(h.X));
    }
    for (const auto& f : res.families)
      for (const auto& B : f.params) {
        int sup = 0;
        if (!binary_entries(B, &sup) || sup > grid.cap) continue;
        bool found = false;
        for (const auto& h : res.oracle_hits)
          if (h.g == f.g() && h.lambda == f.lambda() && h.X == B) found = true;
        if (!found) fail("family basis vector missed by the oracle: " + family_key(f));
      }
  }
  return res;
}

// ---------------------------------------------------------------------------
// enumerations

namespace {

std::set<std::pair<int, int>> union_support(const ClassifiedAction& f) {
  std::set<std::pair<int, int>> U;
  for (const auto& P : f.params)
    for (int i = 0; i < P.rows(); ++i)
      for (int k = 0; k < P.cols(); ++k)
        if (!P.at(i, k).is_zero()) U.insert({i, k});
  return U;
}

}  // namespace

SearchResult enumerate_taft_qplane(int k, int m, bool weyl, SearchGrid grid) {
  if (k < 2) throw InputError("quantum plane search needs ord(mu) > 1");
  if (m < 3) throw InputError("quantum plane search needs m >= 3");
  CycScalar mu = zeta(k);
  PresentationPtr P = weyl ? quantized_weyl(unit_p(1), {mu}) : quantum_plane(mu);
  if (grid.level < 1) grid.level = static_cast<int>(lcm_int(k, m));
  grid.shape = GrouplikeShape::DiagonalOrAntiDiagonal;
  SearchResult res = search_taft_actions(P, primitive_roots(m), grouplike_candidates(*P, grid), grid);
  // plane: u = 0, v = 1; Weyl: v = 0, u = 1
  int u = weyl ? 1 : 0, v = weyl ? 0 : 1;
  std::string base = weyl ? "weyl-" : "plane-";
  for (auto& f : res.families) {
    auto U = union_support(f);
    if (U == std::set<std::pair<int, int>>{{u, v}})
      f.tag = base + "a";
    else if (U == std::set<std::pair<int, int>>{{v, u}})
      f.tag = base + "b";
    else
      f.tag = "other";
  }
  return res;
}

SearchResult enumerate_taft_affine(const std::vector<std::vector<CycScalar>>& p, int m, SearchGrid grid) {
  int t = static_cast<int>(p.size());
  if (t < 3) throw InputError("affine search needs t >= 3");
  if (m < 3) throw InputError("affine search needs m >= 3");
  long L = m;
  for (int i = 0; i < t; ++i)
    for (int j = 0; j < t; ++j) {
      if (i == j) continue;
      int o = ord_of(p[i][j]);
      if (o < 3) throw InputError("affine search needs ord(p_ij) >= 3");
      L = lcm_int(L, o);
    }
  PresentationPtr P = quantum_affine(p);
  if (grid.level < 1) grid.level = static_cast<int>(L);
  SearchResult res = search_taft_actions(P, primitive_roots(m), grouplike_candidates(*P, grid), grid);
  for (auto& f : res.families) {
    auto U = union_support(f);
    std::vector<std::pair<int, int>> u(U.begin(), U.end());
    auto s = [](int x) { return std::to_string(x + 1); };
    if (u.size() == 1 && u[0].first != u[0].second) {
      f.tag = "ext-A" + s(u[0].first) + s(u[0].second);
    } else if (u.size() == 2) {
      // chain x.u_k = u_j, x.u_j = u_i
      auto [a, b] = u[0];
      auto [c, d] = u[1];
      if (b == c && a != d && a != b && c != d)
        f.tag = "ext-A" + s(a) + s(b) + s(d);
      else if (d == a && c != b && a != b && c != d)
        f.tag = "ext-A" + s(c) + s(d) + s(b);
      else
        f.tag = "other";
    } else {
      f.tag = "other";
    }
  }
  return res;
}

SearchResult enumerate_taft_matrix(int N, const CycScalar& q, const CycScalar& lambda, SearchGrid grid) {
  if (N < 2) throw InputError("matrix search needs N >= 2");
  int oq = ord_of(q);
  if (oq < 3) throw InputError("matrix search needs q a root of unity with q != +-1");
  int m = ord_of(lambda);
  if (m < 3) throw InputError("matrix search needs ord(lambda) >= 3");
  PresentationPtr P = quantum_matrix(N, q);
  if (grid.level < 1) grid.level = static_cast<int>(lcm_int(oq, m));
  grid.shape = GrouplikeShape::RankOneTau;
  SearchResult res = search_taft_actions(P, {lambda}, grouplike_candidates(*P, grid), grid);
  std::vector<ClassifiedAction> cat = N == 2 ? m2_catalog(q, oq == 3) : mn_catalog(N, q);
  tag_from_catalog(res.families, cat);
  return res;
}

// ---------------------------------------------------------------------------
// catalogs

namespace {

struct RowSpec {
  int lambda_exp;
  std::vector<int> alpha_exp;
  std::vector<std::pair<std::string, std::vector<std::pair<int, int>>>> params;  // (target, source)
};

ClassifiedAction from_spec(const PresentationPtr& P, const CycScalar& q, const RowSpec& r, std::string tag) {
  int t = P->num_gens();
  std::vector<CycScalar> a;
  for (int e : r.alpha_exp) a.push_back(qpow(q, e));
  std::vector<Matrix> params;
  std::vector<std::string> names;
  for (const auto& [name, entries] : r.params) {
    Matrix M(t, t);
    for (auto [tg, src] : entries) M.at(tg, src) = 1;
    params.push_back(M);
    names.push_back(name);
  }
  return make_taft_family(P, qpow(q, r.lambda_exp), GrouplikeAction::diagonal(a), params, names, std::move(tag));
}

constexpr int A = 0, B = 1, C = 2, D = 3;

}  // namespace

ClassifiedAction m2_row(int row, const CycScalar& q) {
  static const std::vector<RowSpec> rows = {
      {2, {1, -1, 1, -1}, {{"delta", {{A, B}, {C, D}}}}},
      {2, {1, 1, -1, -1}, {{"delta", {{A, C}, {B, D}}}}},
      {2, {-3, -1, -1, 1}, {{"delta", {{B, A}}}, {"epsilon", {{C, A}}}}},
      {-2, {1, -1, 1, -1}, {{"delta", {{B, A}, {D, C}}}}},
      {-2, {1, 1, -1, -1}, {{"delta", {{C, A}, {D, B}}}}},
      {-2, {-1, 1, 1, 3}, {{"delta", {{B, D}}}, {"epsilon", {{C, D}}}}},
      {4, {-4, -2, -2, 0}, {{"delta", {{D, A}}}}},
      {-4, {0, 2, 2, 4}, {{"delta", {{A, D}}}}},
  };
  if (row < 1 || row > 8) throw InputError("M_2 catalog rows are 1..8");
  return from_spec(quantum_matrix(2, q), q, rows[row - 1], "m2.row" + std::to_string(row));
}

ClassifiedAction m2_order3_family(int which, const CycScalar& q) {
  static const std::vector<RowSpec> rows = {
      {2, {0, -1, -1, 1}, {{"gamma", {{A, D}}}, {"delta", {{B, A}}}, {"epsilon", {{C, A}}}}},
      {-2, {-1, 1, 1, 0}, {{"gamma", {{D, A}}}, {"delta", {{B, D}}}, {"epsilon", {{C, D}}}}},
  };
  if (which < 1 || which > 2) throw InputError("order-3 families are 1 and 2");
  return from_spec(quantum_matrix(2, q), q, rows[which - 1], "m2.ord3." + std::to_string(which));
}

std::vector<ClassifiedAction> m2_catalog(const CycScalar& q, bool with_order3) {
  std::vector<ClassifiedAction> v;
  for (int r = 1; r <= 8; ++r) v.push_back(m2_row(r, q));
  if (with_order3)
    for (int w = 1; w <= 2; ++w) v.push_back(m2_order3_family(w, q));
  return v;
}

ClassifiedAction mn_row(int N, int row, int index, const CycScalar& q) {
  if (N < 3) throw InputError("the N x N catalog needs N >= 3");
  if (row < 1 || row > 8) throw InputError("N x N catalog rows are 1..8");
  auto P = quantum_matrix(N, q);
  int t = N * N;
  auto gen = [N](int a, int b) { return (a - 1) * N + (b - 1); };
  std::vector<int> e(t, 0);
  Matrix X(t, t);
  int lam = 0;
  std::string tag = "mn.row" + std::to_string(row);
  auto need = [&](int lo, int hi, const char* what) {
    if (index < lo || index > hi) throw InputError(std::string("N x N row index ") + what + " out of range");
    tag += std::string("(") + what + "=" + std::to_string(index) + ")";
  };
  switch (row) {
    case 1:  // x . Y_{a,b} = Y_{a,b-1}
      need(2, N, "b");
      lam = 2;
      for (int a = 1; a <= N; ++a) {
        e[gen(a, index - 1)] = 1;
        e[gen(a, index)] = -1;
        X.at(gen(a, index - 1), gen(a, index)) = 1;
      }
      break;
    case 2:  // x . Y_{a,c} = Y_{a-1,c}
      need(2, N, "a");
      lam = 2;
      for (int c = 1; c <= N; ++c) {
        e[gen(index - 1, c)] = 1;
        e[gen(index, c)] = -1;
        X.at(gen(index - 1, c), gen(index, c)) = 1;
      }
      break;
    case 3:
    case 4:
      lam = 2;
      for (int i = 1; i <= N; ++i)
        for (int j = 1; j <= N; ++j) {
          int v;
          if (i == 1)
            v = j == 1 ? -3 : (j == N ? -1 : -2);
          else
            v = j == 1 ? -1 : (j == N ? 1 : 0);
          if (row == 3)
            e[gen(i, j)] = v;
          else
            e[gen(j, i)] = v;
        }
      if (row == 3)
        X.at(gen(1, N), gen(1, 1)) = 1;
      else
        X.at(gen(N, 1), gen(1, 1)) = 1;
      break;
    case 5:  // x . Y_{a,b} = Y_{a,b+1}
      need(1, N - 1, "b");
      lam = -2;
      for (int a = 1; a <= N; ++a) {
        e[gen(a, index)] = 1;
        e[gen(a, index + 1)] = -1;
        X.at(gen(a, index + 1), gen(a, index)) = 1;
      }
      break;
    case 6:  // x . Y_{a,c} = Y_{a+1,c}
      need(1, N - 1, "a");
      lam = -2;
      for (int c = 1; c <= N; ++c) {
        e[gen(index, c)] = 1;
        e[gen(index + 1, c)] = -1;
        X.at(gen(index + 1, c), gen(index, c)) = 1;
      }
      break;
    case 7:
      lam = -2;
      for (int i = 1; i <= N; ++i)
        for (int j = 1; j <= N; ++j) {
          int ai = i == 1 ? -1 : (i == N ? 1 : 0);
          e[gen(i, j)] = ai + (j == N ? 2 : 0);
        }
      X.at(gen(1, N), gen(N, N)) = 1;
      break;
    case 8:
      lam = -2;
      for (int i = 1; i <= N; ++i)
        for (int j = 1; j <= N; ++j) {
          int bj = j == 1 ? -1 : (j == N ? 1 : 0);
          e[gen(i, j)] = bj + (i == N ? 2 : 0);
        }
      X.at(gen(N, 1), gen(N, N)) = 1;
      break;
  }
  std::vector<CycScalar> a;
  for (int x : e) a.push_back(qpow(q, x));
  return make_taft_family(P, qpow(q, lam), GrouplikeAction::diagonal(a), {X}, {"delta"}, tag);
}

std::vector<ClassifiedAction> mn_catalog(int N, const CycScalar& q) {
  std::vector<ClassifiedAction> v;
  for (int b = 2; b <= N; ++b) v.push_back(mn_row(N, 1, b, q));
  for (int a = 2; a <= N; ++a) v.push_back(mn_row(N, 2, a, q));
  v.push_back(mn_row(N, 3, 0, q));
  v.push_back(mn_row(N, 4, 0, q));
  for (int b = 1; b < N; ++b) v.push_back(mn_row(N, 5, b, q));
  for (int a = 1; a < N; ++a) v.push_back(mn_row(N, 6, a, q));
  v.push_back(mn_row(N, 7, 0, q));
  v.push_back(mn_row(N, 8, 0, q));
  return v;
}

void tag_from_catalog(std::vector<ClassifiedAction>& found, const std::vector<ClassifiedAction>& catalog) {
  for (auto& f : found) {
    f.tag = "untagged";
    f.contains.clear();
    for (const auto& c : catalog) {
      if (!(c.g() == f.g()) || c.lambda() != f.lambda()) continue;
      if (same_span(c.params, f.params))
        f.tag = c.tag;
      else if (span_contains(f.params, c.params))
        f.contains.push_back(c.tag);
    }
  }
}

// ---------------------------------------------------------------------------
// compatibility and rank

std::optional<CycScalar> pair_zeta(const ClassifiedAction& a, const std::vector<int>& sa, const ClassifiedAction& b,
                                   const std::vector<int>& sb) {
  if (a.inst.pres.get() != b.inst.pres.get() && a.inst.pres->spec().family != b.inst.pres->spec().family)
    throw InputError("compatibility needs both actions on the same presentation");
  std::optional<CycScalar> zeta;
  for (int s : sa) {
    auto c = conj_scalar(b.g(), a.params[s]);
    if (!c || (zeta && *zeta != *c)) return std::nullopt;
    zeta = c;
  }
  if (!zeta) return std::nullopt;
  CycScalar zi = zeta->inv();
  for (int t : sb) {
    auto c = conj_scalar(a.g(), b.params[t]);
    if (!c || *c != zi) return std::nullopt;
  }
  for (int s : sa)
    for (int t : sb) {
      const Matrix& Pm = a.params[s];
      const Matrix& Q = b.params[t];
      if (Q * Pm != *zeta * (Pm * Q)) return std::nullopt;
    }
  return zeta;
}

CompatResult compatibility(const ClassifiedAction& a, const ClassifiedAction& b) {
  int na = static_cast<int>(a.params.size()), nb = static_cast<int>(b.params.size());
  struct Valid {
    unsigned ma, mb;
    CycScalar z;
  };
  std::vector<Valid> valid;
  for (unsigned ma = 1; ma < (1u << na); ++ma)
    for (unsigned mb = 1; mb < (1u << nb); ++mb)
      if (auto z = pair_zeta(a, mask_indices(ma), b, mask_indices(mb))) valid.push_back({ma, mb, *z});
  CompatResult r;
  for (const auto& v : valid) {
    bool maximal = true;
    for (const auto& w : valid)
      if ((w.ma & v.ma) == v.ma && (w.mb & v.mb) == v.mb && (w.ma != v.ma || w.mb != v.mb)) maximal = false;
    if (!maximal) continue;
    CompatOption o;
    o.zeta = v.z;
    o.a_params = mask_indices(v.ma);
    o.b_params = mask_indices(v.mb);
    for (int s = 0; s < nb; ++s)
      if (!(v.mb >> s & 1u)) o.constraints.push_back(b.param_names[s] + "_i = 0");
    for (int s = 0; s < na; ++s)
      if (!(v.ma >> s & 1u)) o.constraints.push_back(a.param_names[s] + "_j = 0");
    r.options.push_back(std::move(o));
  }
  std::stable_sort(r.options.begin(), r.options.end(), [](const CompatOption& x, const CompatOption& y) {
    return x.a_params.size() + x.b_params.size() > y.a_params.size() + y.b_params.size();
  });
  if (!r.options.empty()) {
    r.compatible = true;
    r.zeta = r.options[0].zeta;
    r.constraints = r.options[0].constraints;
  }
  return r;
}

ActionInstance bosonize(const std::vector<ClassifiedAction>& parts, const std::vector<std::vector<int>>& kept) {
  if (parts.empty()) throw InputError("bosonize needs at least one part");
  if (kept.size() != parts.size()) throw InputError("bosonize needs one parameter subset per part");
  int r = static_cast<int>(parts.size());
  QLSData q;
  std::vector<Matrix> X(r);
  std::vector<GrouplikeAction> G(r);
  for (int v = 0; v < r; ++v) {
    G[v] = parts[v].g();
    X[v] = parts[v].skew_for(kept[v]);
    if (X[v].is_zero()) throw InputError("bosonize: part acts by zero");
    q.G.orders.push_back(static_cast<int>(lcm_int(G[v].order(), parts[v].m())));
  }
  for (int v = 0; v < r; ++v) {
    GroupElem e(r, 0);
    e[v] = 1;
    q.g.push_back(e);
    CharacterExps f(r);
    for (int u = 0; u < r; ++u) {
      auto c = conj_scalar(G[u], X[v]);
      if (!c) throw InputError("bosonize: x" + std::to_string(v + 1) + " is not an eigenvector under g" +
                               std::to_string(u + 1));
      auto k = discrete_log(*c, q.G.orders[u]);
      if (!k) throw InputError("bosonize: character value is not a root of the group order");
      f[u] = *k;
    }
    q.chi.push_back(f);
  }
  ActionInstance inst;
  inst.pres = parts[0].inst.pres;
  inst.hopf = BosonizationSpec{q, CycScalar(0)};
  inst.grouplikes = G;
  inst.skews = X;
  return inst;
}

namespace {

using IMat = std::vector<std::vector<long long>>;

long long checked_axpy(long long a, long long k, long long b) {
  long long p, s;
  if (__builtin_mul_overflow(k, b, &p) || __builtin_sub_overflow(a, p, &s))
    throw std::overflow_error("integer lattice reduction overflowed");
  return s;
}

void row_op(IMat& A, size_t dst, size_t src, long long k) {
  for (size_t c = 0; c < A[dst].size(); ++c) A[dst][c] = checked_axpy(A[dst][c], k, A[src][c]);
}

void col_op(IMat& A, size_t dst, size_t src, long long k) {
  for (auto& row : A) row[dst] = checked_axpy(row[dst], k, row[src]);
}

/// Smith form U A V = D; returns the diagonal and V (and V^-1 for the generators).
std::vector<long long> smith(IMat A, IMat& V, IMat& Vinv) {
  size_t R = A.size(), C = A.empty() ? 0 : A[0].size();
  V.assign(C, std::vector<long long>(C, 0));
  Vinv = V;
  for (size_t i = 0; i < C; ++i) V[i][i] = Vinv[i][i] = 1;
  auto vcol = [&](size_t dst, size_t src, long long k) {
    col_op(A, dst, src, k);
    col_op(V, dst, src, k);
    // column op on V is a row op on V^-1 with the opposite sign
    for (size_t c = 0; c < C; ++c) Vinv[src][c] = checked_axpy(Vinv[src][c], -k, Vinv[dst][c]);
  };
  auto vswap = [&](size_t a, size_t b) {
    for (auto& row : A) std::swap(row[a], row[b]);
    for (auto& row : V) std::swap(row[a], row[b]);
    std::swap(Vinv[a], Vinv[b]);
  };
  std::vector<long long> d;
  for (size_t p = 0; p < std::min(R, C); ++p) {
    for (;;) {
      size_t bi = R, bj = C;
      for (size_t i = p; i < R; ++i)
        for (size_t j = p; j < C; ++j)
          if (A[i][j] && (bi == R || std::llabs(A[i][j]) < std::llabs(A[bi][bj]))) bi = i, bj = j;
      if (bi == R) return d;
      std::swap(A[p], A[bi]);
      vswap(p, bj);
      bool clean = true;
      for (size_t i = p + 1; i < R; ++i) {
        row_op(A, i, p, A[i][p] / A[p][p]);
        if (A[i][p]) clean = false;
      }
      for (size_t j = p + 1; j < C; ++j) {
        vcol(j, p, A[p][j] / A[p][p]);
        if (A[p][j]) clean = false;
      }
      if (!clean) continue;
      // divisibility: fold a non-multiple into the pivot row
      bool divides = true;
      for (size_t i = p + 1; i < R && divides; ++i)
        for (size_t j = p + 1; j < C; ++j)
          if (A[i][j] % A[p][p]) {
            row_op(A, p, i, -1);
            divides = false;
            break;
          }
      if (divides) break;
    }
    d.push_back(std::llabs(A[p][p]));
  }
  return d;
}

}  // namespace

ActionInstance faithful_image(const ActionInstance& inst) {
  validate_instance(inst);
  const auto* bs = std::get_if<BosonizationSpec>(&inst.hopf);
  if (!bs) throw InputError("faithful_image needs a bosonization");
  int H = static_cast<int>(inst.grouplikes.size());
  int t = inst.pres->num_gens();
  long L = 1;
  for (const auto& g : inst.grouplikes) {
    if (!g.is_diagonal()) throw InputError("faithful_image needs diagonal grouplikes");
    L = lcm_int(L, g.order());
  }
  // kernel of Z^H -> Aut(A): rows of [E | I ; L I | 0] reduced on the first t columns
  IMat A;
  for (int h = 0; h < H; ++h) {
    std::vector<long long> row(t + H, 0);
    for (int s = 0; s < t; ++s) {
      auto e = discrete_log(inst.grouplikes[h].alpha[s], static_cast<int>(L));
      if (!e) throw InputError("faithful_image: grouplike entry is not a root of unity");
      row[s] = *e;
    }
    row[t + h] = 1;
    A.push_back(row);
  }
  for (int s = 0; s < t; ++s) {
    std::vector<long long> row(t + H, 0);
    row[s] = L;
    A.push_back(row);
  }
  size_t top = 0;
  for (int c = 0; c < t; ++c) {
    for (;;) {
      size_t best = A.size();
      for (size_t i = top; i < A.size(); ++i)
        if (A[i][c] && (best == A.size() || std::llabs(A[i][c]) < std::llabs(A[best][c]))) best = i;
      if (best == A.size()) break;
      std::swap(A[top], A[best]);
      bool done = true;
      for (size_t i = top + 1; i < A.size(); ++i) {
        row_op(A, i, top, A[i][c] / A[top][c]);
        if (A[i][c]) done = false;
      }
      if (done) {
        ++top;
        break;
      }
    }
  }
  IMat K;
  for (size_t i = top; i < A.size(); ++i) K.emplace_back(A[i].begin() + t, A[i].end());
  IMat V, Vinv;
  std::vector<long long> d = smith(K, V, Vinv);
  if (static_cast<int>(d.size()) != H) throw std::logic_error("faithful_image: kernel lattice is not of full rank");
  ActionInstance out;
  out.pres = inst.pres;
  QLSData q;
  std::vector<int> keep;
  for (int k = 0; k < H; ++k)
    if (d[k] > 1) keep.push_back(k);
  for (int k : keep) {
    q.G.orders.push_back(static_cast<int>(d[k]));
    GrouplikeAction a = GrouplikeAction::identity(t);
    for (int h = 0; h < H; ++h) a = a * inst.grouplikes[h].pow(mod_floor(Vinv[k][h], L));
    out.grouplikes.push_back(a);
  }
  const QLSData& old = bs->qls;
  for (int i = 0; i < old.rank(); ++i) {
    GroupElem e;
    for (int k : keep) {
      long long s = 0;
      for (int h = 0; h < H; ++h) s = checked_axpy(s, -old.g[i][h], V[h][k]);
      e.push_back(static_cast<int>(mod_floor(s, d[k])));
    }
    q.g.push_back(e);
    CharacterExps f;
    for (size_t r = 0; r < keep.size(); ++r) {
      auto c = conj_scalar(out.grouplikes[r], inst.skews[i]);
      auto k = c ? discrete_log(*c, q.G.orders[r]) : std::nullopt;
      if (!k) throw std::logic_error("faithful_image: character does not descend to the image");
      f.push_back(*k);
    }
    q.chi.push_back(f);
  }
  out.hopf = BosonizationSpec{q, bs->gamma};
  out.skews = inst.skews;
  return out;
}

MaxRankResult max_rank(const std::vector<ClassifiedAction>& actions, int workers) {
  int n = static_cast<int>(actions.size());
  // valid[u][v]: parameter-mask pairs (mask_u, mask_v) with u as x_j and v as x_i
  std::vector<std::vector<std::vector<std::pair<unsigned, unsigned>>>> valid(
      n, std::vector<std::vector<std::pair<unsigned, unsigned>>>(n));
  std::vector<std::pair<int, int>> pairs;
  for (int u = 0; u < n; ++u)
    for (int v = u + 1; v < n; ++v) pairs.emplace_back(u, v);
  auto lists = parallel_map<std::vector<std::pair<unsigned, unsigned>>>(pairs.size(), workers, [&](size_t k) {
    auto [u, v] = pairs[k];
    std::vector<std::pair<unsigned, unsigned>> out;
    int nu = static_cast<int>(actions[u].params.size()), nv = static_cast<int>(actions[v].params.size());
    for (unsigned mu = 1; mu < (1u << nu); ++mu)
      for (unsigned mv = 1; mv < (1u << nv); ++mv)
        if (pair_zeta(actions[u], mask_indices(mu), actions[v], mask_indices(mv))) out.emplace_back(mu, mv);
    return out;
  });
  for (size_t k = 0; k < pairs.size(); ++k) {
    auto [u, v] = pairs[k];
    valid[u][v] = lists[k];
    for (auto [a, b] : lists[k]) valid[v][u].emplace_back(b, a);
  }
  auto adj = [&](int u, int v) { return !valid[u][v].empty(); };
  auto pair_ok = [&](int u, unsigned mu, int v, unsigned mv) {
    for (auto [a, b] : valid[u][v])
      if (a == mu && b == mv) return true;
    return false;
  };
  // masks in preference order: more parameters first
  auto masks_for = [&](int v) {
    std::vector<unsigned> ms;
    for (unsigned m = 1; m < (1u << actions[v].params.size()); ++m) ms.push_back(m);
    std::stable_sort(ms.begin(), ms.end(),
                     [](unsigned a, unsigned b) { return __builtin_popcount(a) > __builtin_popcount(b); });
    return ms;
  };
  std::vector<std::vector<unsigned>> pref(n);
  for (int v = 0; v < n; ++v) pref[v] = masks_for(v);

  auto assign = [&](const std::vector<int>& clique) -> std::optional<std::vector<unsigned>> {
    std::vector<unsigned> as(clique.size());
    std::function<bool(size_t)> rec = [&](size_t k) {
      if (k == clique.size()) return true;
      for (unsigned m : pref[clique[k]]) {
        bool ok = true;
        for (size_t j = 0; j < k && ok; ++j) ok = pair_ok(clique[j], as[j], clique[k], m);
        if (!ok) continue;
        as[k] = m;
        if (rec(k + 1)) return true;
      }
      return false;
    };
    if (rec(0)) return as;
    return std::nullopt;
  };

  MaxRankResult res;
  std::vector<int> best;
  std::vector<unsigned> best_as;
  std::vector<int> cur;
  std::function<void(int)> dfs = [&](int start) {
    if (cur.size() > best.size()) {
      best = cur;
      best_as = *assign(cur);
    }
    for (int v = start; v < n; ++v) {
      bool ok = true;
      for (int u : cur)
        if (!adj(u, v)) ok = false;
      if (!ok) continue;
      cur.push_back(v);
      if (assign(cur)) dfs(v + 1);
      cur.pop_back();
    }
  };
  dfs(0);
  res.theta = static_cast<int>(best.size());
  res.members = best;
  for (unsigned m : best_as) res.kept.push_back(mask_indices(m));

  // raw cliques (pairwise compatible, constraints ignored)
  std::vector<int> rc;
  std::function<void(int)> raw = [&](int start) {
    res.raw_clique_number = std::max(res.raw_clique_number, static_cast<int>(rc.size()));
    if (static_cast<int>(rc.size()) == res.theta + 1) {
      if (res.rejected.size() < 64) res.rejected.push_back(rc);
      return;
    }
    for (int v = start; v < n; ++v) {
      bool ok = true;
      for (int u : rc)
        if (!adj(u, v)) ok = false;
      if (!ok) continue;
      rc.push_back(v);
      raw(v + 1);
      rc.pop_back();
    }
  };
  raw(0);
  // the capped walk stops at theta+1; finish the raw clique number separately
  std::function<int(std::vector<int>&, int)> raw_max = [&](std::vector<int>& c, int start) {
    int b = static_cast<int>(c.size());
    for (int v = start; v < n; ++v) {
      bool ok = true;
      for (int u : c)
        if (!adj(u, v)) ok = false;
      if (!ok) continue;
      c.push_back(v);
      b = std::max(b, raw_max(c, v + 1));
      c.pop_back();
    }
    return b;
  };
  std::vector<int> tmp;
  res.raw_clique_number = raw_max(tmp, 0);

  if (res.theta > 0) {
    std::vector<ClassifiedAction> parts;
    for (int v : best) parts.push_back(actions[v]);
    res.witness = bosonize(parts, res.kept);
    QLSData q = qls_view(res.witness.hopf);
    for (int j = 0; j < q.rank(); ++j) {
      std::vector<CycScalar> row;
      for (int i = 0; i < q.rank(); ++i) row.push_back(q.chi_at(j, q.g[i]));
      res.characters.push_back(row);
    }
    res.witness_verify = verify_module_algebra(res.witness);
    res.witness_qls = validate_qls(q);
    res.witness_inner = inner_faithfulness(res.witness);
    bool diag = std::all_of(res.witness.grouplikes.begin(), res.witness.grouplikes.end(),
                            [](const GrouplikeAction& g) { return g.is_diagonal(); });
    if (res.witness_inner.verdict == InnerVerdict::NotInnerFaithful && diag) {
      res.witness = faithful_image(res.witness);
      res.witness_reduced = true;
      res.witness_verify = verify_module_algebra(res.witness);
      res.witness_qls = validate_qls(qls_view(res.witness.hopf));
      res.witness_inner = inner_faithfulness(res.witness);
    }
  }
  return res;
}

// ---------------------------------------------------------------------------
// constructed examples

std::vector<std::vector<CycScalar>> affine_default_p(int t) {
  std::vector<std::vector<CycScalar>> p(t, std::vector<CycScalar>(t, CycScalar(1)));
  for (int i = 0; i < t; ++i)
    for (int j = i + 1; j < t; ++j) {
      p[i][j] = zeta(5, 1 + (i + j) % 4);
      p[j][i] = p[i][j].inv();
    }
  return p;
}

std::vector<std::string> example_ids() {
  return {"m2-rank3", "mn-patch", "affine-sharp", "weyl-a2", "affine-cycle-gamma", "affine-chain"};
}

namespace {

BosonizationSpec qls_from_exponents(int order, const CycScalar& q, const std::vector<std::vector<int>>& chi_q_exp) {
  // chi_j(g_i) = q^{chi_q_exp[j][i]}, q = zeta_order^k
  auto k = discrete_log(q, order);
  if (!k) throw InputError("q is not a root of unity of the group order");
  int r = static_cast<int>(chi_q_exp.size());
  QLSData qd;
  qd.G.orders.assign(r, order);
  for (int j = 0; j < r; ++j) {
    GroupElem e(r, 0);
    e[j] = 1;
    qd.g.push_back(e);
    CharacterExps f(r);
    for (int i = 0; i < r; ++i) f[i] = static_cast<int>(mod_floor(static_cast<long>(*k) * chi_q_exp[j][i], order));
    qd.chi.push_back(f);
  }
  return {qd, CycScalar(0)};
}

ActionInstance from_parts(const std::vector<ClassifiedAction>& parts, BosonizationSpec spec) {
  ActionInstance inst;
  inst.pres = parts[0].inst.pres;
  inst.hopf = std::move(spec);
  for (const auto& p : parts) {
    inst.grouplikes.push_back(p.g());
    inst.skews.push_back(p.inst.skews[0]);
  }
  return inst;
}

void require_order(const CycScalar& q, int o, const char* what) {
  if (ord_of(q) != o) throw InputError(std::string(what) + " needs ord(q) = " + std::to_string(o));
}

}  // namespace

ActionInstance build_example(const std::string& which, ExampleParams ep) {
  if (ep.q.is_zero()) ep.q = zeta(5);
  if (which == "m2-rank3") {
    require_order(ep.q, 5, which.c_str());
    std::vector<ClassifiedAction> parts = {m2_row(1, ep.q), m2_row(2, ep.q), m2_row(8, ep.q)};
    return from_parts(parts, qls_from_exponents(5, ep.q, {{2, 0, -2}, {0, 2, -2}, {2, 2, -4}}));
  }
  if (which == "mn-patch") {
    require_order(ep.q, 5, which.c_str());
    int N = ep.N;
    if (N < 3) throw InputError("mn-patch needs N >= 3");
    int r = 2 * N - 2;
    std::vector<ClassifiedAction> parts;
    std::set<std::pair<int, int>> S;
    if (N % 2 == 1) {
      int h = (N - 1) / 2;
      for (int i = 1; i <= r; ++i) {
        if (i <= h)
          parts.push_back(mn_row(N, 1, 2 * i, ep.q));
        else if (i <= N - 1)
          parts.push_back(mn_row(N, 2, 2 * (i - h), ep.q));
        else if (i <= 3 * h)
          parts.push_back(mn_row(N, 5, 2 * (i - N + 1), ep.q));
        else
          parts.push_back(mn_row(N, 6, 2 * (i - 3 * h), ep.q));
      }
      for (int k = 1; k <= r; ++k) {
        int l = k - N + 1;
        if (1 <= l && l <= N - 1) S.insert({k, l});
        l = k - N + 2;
        if (2 <= l && l <= N - 1 && 2 * l != N + 1) S.insert({k, l});
      }
    } else {
      int h = N / 2;
      for (int i = 1; i <= r; ++i) {
        if (i <= h)
          parts.push_back(mn_row(N, 1, 2 * i, ep.q));
        else if (i <= N)
          parts.push_back(mn_row(N, 2, 2 * (i - h), ep.q));
        else if (i <= N + (N - 2) / 2)
          parts.push_back(mn_row(N, 5, 2 * (i - N), ep.q));
        else
          parts.push_back(mn_row(N, 6, 2 * (i - N - (N - 2) / 2), ep.q));
      }
      for (int k = N + 1; k <= N + h - 1; ++k)
        for (int l : {k - N, k - N + 1}) S.insert({k, l});
      for (int k = N + h; k <= 2 * N - 2; ++k)
        for (int l : {k - N + 1, k - N + 2}) S.insert({k, l});
    }
    std::vector<std::vector<int>> e(r, std::vector<int>(r, 0));
    for (int j = 1; j <= r; ++j)
      for (int i = 1; i <= r; ++i) {
        int v = 0;
        if (i == j)
          // diagonal: the lambda of the part (the printed threshold N-1 only fits odd N)
          v = parts[i - 1].lambda() == qpow(ep.q, 2) ? 2 : -2;
        else if (S.count({j, i}))
          v = 1;
        else if (S.count({i, j}))
          v = -1;
        e[j - 1][i - 1] = v;
      }
    return from_parts(parts, qls_from_exponents(5, ep.q, e));
  }
  if (which == "affine-sharp") {
    int t = ep.t;
    if (t < 3) throw InputError("affine-sharp needs t >= 3");
    auto p = ep.p.empty() ? affine_default_p(t) : ep.p;
    if (static_cast<int>(p.size()) != t) throw InputError("affine-sharp: p must be t x t");
    CycScalar lam = ep.lambda.is_zero() ? zeta(5) : ep.lambda;
    auto P = quantum_affine(p);
    std::vector<ClassifiedAction> parts;
    for (int pass = 0; pass < 2; ++pass) {
      CycScalar l = pass == 0 ? lam : lam.inv();
      for (int k = 1; k <= t - 1; ++k) {
        // x_k . u_{k+1} = u_1, 0-based column k
        std::vector<CycScalar> a(t);
        a[0] = p[0][k];
        a[k] = l.inv() * p[0][k];
        for (int ll = 1; ll < t; ++ll)
          if (ll != k) a[ll] = p[0][ll] * p[ll][k];
        parts.push_back(make_taft_family(P, l, GrouplikeAction::diagonal(a), {unit_matrix(t, 0, k)}, {"eta"},
                                         pass == 0 ? "B" : "B'"));
      }
    }
    std::vector<std::vector<int>> kept(parts.size(), std::vector<int>{0});
    return bosonize(parts, kept);
  }
  if (which == "weyl-a2") {
    CycScalar lam = ep.lambda.is_zero() ? zeta(3) : ep.lambda;
    CycScalar p12 = ep.p.empty() ? zeta(5) : ep.p.at(0).at(1);
    std::vector<std::vector<CycScalar>> p = {{CycScalar(1), p12}, {p12.inv(), CycScalar(1)}};
    auto P = quantized_weyl(p, {lam, lam});
    CycScalar a2 = p12, a1 = lam * a2;
    // generators v1, u1, v2, u2
    GrouplikeAction g = GrouplikeAction::diagonal({a1.inv(), a1, a2.inv(), a2});
    Matrix X(4, 4);
    X.at(1, 3) = 1;            // x . u2 = u1
    X.at(2, 0) = -a2.inv();    // x . v1 = -alpha2^-1 v2
    return make_taft_family(P, lam, g, {X}, {"eta"}, "weyl-a2").inst;
  }
  if (which == "affine-cycle-gamma") {
    CycScalar a = zeta(9);
    CycScalar lam = a.pow(-3);
    CycScalar p12 = lam * lam * a, p23 = lam * a, p31 = a;
    std::vector<std::vector<CycScalar>> p = {{CycScalar(1), p12, p31.inv()},
                                             {p12.inv(), CycScalar(1), p23},
                                             {p31, p23.inv(), CycScalar(1)}};
    ActionInstance inst;
    inst.pres = quantum_affine(p);
    GrouplikeAction g = GrouplikeAction::diagonal({lam * lam * a, lam * a, a});
    Matrix X(3, 3);
    X.at(0, 1) = 1;
    X.at(1, 2) = 1;
    X.at(2, 0) = 1;
    CycScalar gamma = (a.pow(3) - CycScalar(1)).inv();
    inst.hopf = TaftSpec{static_cast<int>(lcm_int(g.order(), 3)), 3, lam, gamma};
    inst.grouplikes = {g};
    inst.skews = {X};
    return inst;
  }
  if (which == "affine-chain") {
    CycScalar a1 = zeta(5), lam = zeta(3);
    std::vector<std::vector<CycScalar>> p(3, std::vector<CycScalar>(3, CycScalar(1)));
    p[0][1] = a1;
    p[1][2] = lam.inv() * a1;
    p[0][2] = a1 * a1;
    for (int i = 0; i < 3; ++i)
      for (int j = 0; j < i; ++j) p[i][j] = p[j][i].inv();
    GrouplikeAction g = GrouplikeAction::diagonal({a1, lam.inv() * a1, lam.pow(-2) * a1});
    Matrix X(3, 3);
    X.at(0, 1) = 1;
    X.at(1, 2) = 1;
    return make_taft_family(quantum_affine(p), lam, g, {X}, {"eta"}, "ext-A123").inst;
  }
  throw InputError("unknown example id: " + which);
}

}  // namespace qhopf
