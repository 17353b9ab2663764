#include "qhopf/ncalg.hpp"

#include <algorithm>

namespace qhopf {

std::string family_name(Family f) {
  switch (f) {
    case Family::QuantumAffine: return "QuantumAffine";
    case Family::QuantumExterior: return "QuantumExterior";
    case Family::QuantumMatrix: return "QuantumMatrix";
    case Family::QuantizedWeyl: return "QuantizedWeyl";
  }
  return "?";
}

Family family_from_name(const std::string& s) {
  if (s == "QuantumAffine") return Family::QuantumAffine;
  if (s == "QuantumExterior") return Family::QuantumExterior;
  if (s == "QuantumMatrix") return Family::QuantumMatrix;
  if (s == "QuantizedWeyl") return Family::QuantizedWeyl;
  throw InputError("unknown presentation family '" + s + "'");
}

void add_term(Terms& t, const Word& w, const CycScalar& c) {
  if (c.is_zero()) return;
  auto it = t.find(w);
  if (it == t.end()) {
    t.emplace(w, c);
    return;
  }
  it->second += c;
  if (it->second.is_zero()) t.erase(it);
}

void add_terms(Terms& t, const Terms& o, const CycScalar& scale) {
  bool unit = scale.is_one();
  for (const auto& [w, c] : o) add_term(t, w, unit ? c : scale * c);
}

NCPoly NCPoly::one() {
  NCPoly p;
  p.terms.emplace(Word{}, CycScalar(1));
  return p;
}

NCPoly NCPoly::generator(Gen g) {
  NCPoly p;
  p.terms.emplace(Word{g}, CycScalar(1));
  return p;
}

bool operator==(const NCPoly& a, const NCPoly& b) {
  if (a.terms.size() != b.terms.size()) return false;
  auto i = a.terms.begin();
  auto j = b.terms.begin();
  for (; i != a.terms.end(); ++i, ++j)
    if (i->first != j->first || i->second != j->second) return false;
  return true;
}

NCPoly& NCPoly::operator+=(const NCPoly& o) {
  add_terms(terms, o.terms);
  return *this;
}

NCPoly& NCPoly::operator-=(const NCPoly& o) {
  add_terms(terms, o.terms, CycScalar(-1));
  return *this;
}

NCPoly operator*(const CycScalar& s, const NCPoly& p) {
  NCPoly r;
  if (s.is_zero()) return r;
  for (const auto& [w, c] : p.terms) r.terms.emplace(w, s * c);
  return r;
}

namespace {

Terms monomial(std::initializer_list<Gen> w, const CycScalar& c) {
  Terms t;
  add_term(t, Word(w), c);
  return t;
}

void check_p(const std::vector<std::vector<CycScalar>>& p, int t) {
  if (static_cast<int>(p.size()) != t) throw InputError("p matrix must be t x t");
  for (int i = 0; i < t; ++i) {
    if (static_cast<int>(p[i].size()) != t) throw InputError("p matrix must be t x t");
    if (!p[i][i].is_one()) throw InputError("p matrix: p_ii must be 1");
  }
  for (int i = 0; i < t; ++i)
    for (int j = i + 1; j < t; ++j)
      if (!(p[i][j] * p[j][i]).is_one())
        throw InputError("p matrix not multiplicatively antisymmetric at (" + std::to_string(i + 1) + "," +
                         std::to_string(j + 1) + ")");
}

}  // namespace

Presentation::Presentation(PresentationSpec spec) : spec_(std::move(spec)) {
  const auto& s = spec_;
  switch (s.family) {
    case Family::QuantumAffine:
    case Family::QuantumExterior:
      if (s.t < 1) throw InputError("presentation needs t >= 1");
      check_p(s.p, s.t);
      ngens_ = s.t;
      for (int i = 0; i < s.t; ++i)
        names_.push_back("u" + std::to_string(i + 1) + (s.family == Family::QuantumExterior ? "*" : ""));
      break;
    case Family::QuantumMatrix:
      if (s.N < 1 || s.N > 9) throw InputError("quantum matrix algebra needs 1 <= N <= 9");
      if (s.q.is_zero()) throw InputError("q must be nonzero");
      ngens_ = s.N * s.N;
      for (int i = 0; i < s.N; ++i)
        for (int j = 0; j < s.N; ++j) names_.push_back("Y" + std::to_string(i + 1) + std::to_string(j + 1));
      break;
    case Family::QuantizedWeyl:
      if (s.t < 1) throw InputError("presentation needs t >= 1");
      check_p(s.p, s.t);
      if (static_cast<int>(s.gamma.size()) != s.t) throw InputError("gamma vector must have length t");
      for (const auto& g : s.gamma)
        if (g.is_zero()) throw InputError("gamma entries must be nonzero");
      ngens_ = 2 * s.t;
      for (int i = 0; i < s.t; ++i) {
        names_.push_back("v" + std::to_string(i + 1));
        names_.push_back("u" + std::to_string(i + 1));
      }
      break;
  }
  if (ngens_ > 250) throw InputError("too many generators");
  weights_.assign(ngens_, 1);
  if (s.family == Family::QuantizedWeyl)
    for (int g = 0; g < ngens_; ++g) weights_[g] = g / 2 + 1;

  int n = ngens_;
  rules_.assign(static_cast<size_t>(n) * n, Terms{});
  swap_.assign(static_cast<size_t>(n) * n, CycScalar(0));
  auto G = [](int x) { return static_cast<Gen>(x); };

  if (s.family == Family::QuantumAffine || s.family == Family::QuantumExterior) {
    bool ext = s.family == Family::QuantumExterior;
    for (int a = 0; a < n; ++a)
      for (int b = 0; b < a; ++b) {
        CycScalar c = ext ? -s.p[b][a] : s.p[a][b];
        swap_[a * n + b] = c;
        rules_[a * n + b] = monomial({G(b), G(a)}, c);
      }
    for (int i = 0; i < n; ++i)
      for (int j = i + 1; j < n; ++j) {
        Terms r;
        add_term(r, {G(i), G(j)}, 1);
        add_term(r, {G(j), G(i)}, ext ? s.p[j][i] : -s.p[i][j]);
        relations_.push_back(r);
      }
    if (ext)
      for (int i = 0; i < n; ++i) relations_.push_back(monomial({G(i), G(i)}, 1));
  } else if (s.family == Family::QuantumMatrix) {
    int N = s.N;
    CycScalar qi = s.q.inv();
    CycScalar diff = s.q - qi;
    for (int x = 0; x < n; ++x)
      for (int y = x + 1; y < n; ++y) {
        int i = x / N, j = x % N, l = y / N, m = y % N;  // (i,j) < (l,m)
        Terms rule, rel;
        add_term(rel, {G(x), G(y)}, 1);
        if (i == l || j == m) {
          add_term(rule, {G(x), G(y)}, qi);
          add_term(rel, {G(y), G(x)}, -s.q);
        } else if (j > m) {
          add_term(rule, {G(x), G(y)}, 1);
          add_term(rel, {G(y), G(x)}, -1);
        } else {
          add_term(rule, {G(x), G(y)}, 1);
          Gen im = G(i * N + m), lj = G(l * N + j);
          add_term(rule, {im, lj}, -diff);
          add_term(rel, {G(y), G(x)}, -1);
          add_term(rel, {im, lj}, -diff);
        }
        rules_[y * n + x] = rule;
        relations_.push_back(rel);
      }
  } else {
    int t = s.t;
    auto V = [](int i) { return static_cast<Gen>(2 * i); };
    auto U = [](int i) { return static_cast<Gen>(2 * i + 1); };
    for (int a = 0; a < n; ++a)
      for (int b = 0; b < a; ++b) {
        int ia = a / 2, ib = b / 2;
        bool au = a % 2 == 1, bu = b % 2 == 1;
        Terms rule;
        if (!au && !bu) {
          add_term(rule, {G(b), G(a)}, s.p[ia][ib]);
        } else if (au && bu) {
          add_term(rule, {G(b), G(a)}, (s.gamma[ib] * s.p[ib][ia]).inv());
        } else if (!au && bu) {  // v_ia u_ib with ia > ib
          add_term(rule, {G(b), G(a)}, s.p[ib][ia]);
        } else if (ia > ib) {    // u_ia v_ib
          add_term(rule, {G(b), G(a)}, s.gamma[ib] * s.p[ib][ia]);
        } else {                 // u_j v_j
          add_term(rule, {}, 1);
          add_term(rule, {V(ia), U(ia)}, s.gamma[ia]);
          for (int l = 0; l < ia; ++l) add_term(rule, {V(l), U(l)}, s.gamma[l] - 1);
        }
        rules_[a * n + b] = rule;
      }
    for (int i = 0; i < t; ++i)
      for (int j = i + 1; j < t; ++j) {
        Terms r;
        add_term(r, {V(i), V(j)}, 1);
        add_term(r, {V(j), V(i)}, -s.p[i][j]);
        relations_.push_back(r);
      }
    for (int i = 0; i < t; ++i)
      for (int j = i + 1; j < t; ++j) {
        Terms r;
        add_term(r, {U(i), V(j)}, 1);
        add_term(r, {V(j), U(i)}, -s.p[j][i]);
        relations_.push_back(r);
      }
    for (int i = 0; i < t; ++i)
      for (int j = i + 1; j < t; ++j) {
        Terms r;
        add_term(r, {U(i), U(j)}, 1);
        add_term(r, {U(j), U(i)}, -(s.gamma[i] * s.p[i][j]));
        relations_.push_back(r);
      }
    for (int i = 0; i < t; ++i)
      for (int j = 0; j < i; ++j) {
        Terms r;
        add_term(r, {U(i), V(j)}, 1);
        add_term(r, {V(j), U(i)}, -(s.gamma[j] * s.p[j][i]));
        relations_.push_back(r);
      }
    for (int j = 0; j < t; ++j) {
      Terms r;
      add_term(r, {U(j), V(j)}, 1);
      add_term(r, {}, -1);
      add_term(r, {V(j), U(j)}, -s.gamma[j]);
      for (int l = 0; l < j; ++l) add_term(r, {V(l), U(l)}, -(s.gamma[l] - 1));
      relations_.push_back(r);
    }
  }
}

std::string to_string(const Presentation& pres, const Terms& t) {
  if (t.empty()) return "0";
  std::string s;
  bool first = true;
  for (const auto& [w, c] : t) {
    s += first ? "" : " + ";
    first = false;
    if (!c.is_one() || w.empty()) s += "(" + describe(c) + ")" + (w.empty() ? "" : "*");
    if (!w.empty()) s += pres.word_name(w);
  }
  return s;
}

std::string Presentation::word_name(const Word& w) const {
  if (w.empty()) return "1";
  std::string s;
  for (size_t i = 0; i < w.size(); ++i) s += (i ? " " : "") + names_[w[i]];
  return s;
}

int Presentation::gen_index(const std::string& name) const {
  for (int i = 0; i < ngens_; ++i)
    if (names_[i] == name) return i;
  return -1;
}

int Presentation::weighted_degree(const Word& w) const {
  int d = 0;
  for (Gen g : w) d += weights_[g];
  return d;
}

bool Presentation::pair_normal(Gen a, Gen b) const {
  if (a < b) return true;
  if (a == b) return spec_.family != Family::QuantumExterior;
  return false;
}

bool Presentation::is_normal(const Word& w) const {
  for (size_t i = 0; i + 1 < w.size(); ++i)
    if (!pair_normal(w[i], w[i + 1])) return false;
  return true;
}

PresentationPtr build_presentation(const PresentationSpec& spec) { return std::make_shared<Presentation>(spec); }

PresentationPtr quantum_affine(const std::vector<std::vector<CycScalar>>& p) {
  PresentationSpec s;
  s.family = Family::QuantumAffine;
  s.t = static_cast<int>(p.size());
  s.p = p;
  return build_presentation(s);
}

PresentationPtr quantum_plane(const CycScalar& mu) {
  return quantum_affine({{CycScalar(1), mu}, {mu.inv(), CycScalar(1)}});
}

PresentationPtr quantum_matrix(int N, const CycScalar& q) {
  PresentationSpec s;
  s.family = Family::QuantumMatrix;
  s.N = N;
  s.q = q;
  return build_presentation(s);
}

PresentationPtr quantized_weyl(const std::vector<std::vector<CycScalar>>& p, const std::vector<CycScalar>& gamma) {
  PresentationSpec s;
  s.family = Family::QuantizedWeyl;
  s.t = static_cast<int>(gamma.size());
  s.p = p;
  s.gamma = gamma;
  return build_presentation(s);
}

std::vector<std::vector<CycScalar>> unit_p(int t) {
  std::vector<std::vector<CycScalar>> p(t, std::vector<CycScalar>(t, CycScalar(1)));
  return p;
}

namespace {

void straighten_affine(const Presentation& pres, const Word& w, const CycScalar& c, const std::vector<CycScalar>& swap,
                       Terms& out) {
  int n = pres.num_gens();
  bool ext = pres.family() == Family::QuantumExterior;
  std::vector<int> seen(n, 0);
  std::vector<int> cnt;  // inversion counts, allocated lazily
  for (size_t b = 0; b < w.size(); ++b) {
    int y = w[b];
    if (ext && seen[y]) return;
    for (int x = y + 1; x < n; ++x) {
      if (!seen[x]) continue;
      if (cnt.empty()) cnt.assign(static_cast<size_t>(n) * n, 0);
      cnt[x * n + y] += seen[x];
    }
    seen[y]++;
  }
  CycScalar coeff = c;
  if (!cnt.empty())
    for (int x = 0; x < n; ++x)
      for (int y = 0; y < x; ++y)
        if (cnt[x * n + y]) coeff *= swap[x * n + y].pow(cnt[x * n + y]);
  Word sorted = w;
  std::sort(sorted.begin(), sorted.end());
  add_term(out, sorted, coeff);
}

}  // namespace

NCPoly normalize(const Presentation& pres, const Terms& raw) {
  if (pres.family() == Family::QuantumAffine || pres.family() == Family::QuantumExterior) {
    NCPoly r;
    for (const auto& [w, c] : raw) {
      if (c.is_zero()) continue;
      straighten_affine(pres, w, c, pres.swap_, r.terms);
    }
    return r;
  }
  return normalize_by_rules(pres, raw);
}

Terms rewrite_at(const Presentation& pres, const Word& w, size_t pos) {
  Terms out;
  if (pos + 1 >= w.size() || pres.pair_normal(w[pos], w[pos + 1])) {
    add_term(out, w, 1);
    return out;
  }
  for (const auto& [rw, rc] : pres.rule(w[pos], w[pos + 1])) {
    Word nw;
    nw.reserve(w.size() - 2 + rw.size());
    nw.insert(nw.end(), w.begin(), w.begin() + pos);
    nw.insert(nw.end(), rw.begin(), rw.end());
    nw.insert(nw.end(), w.begin() + pos + 2, w.end());
    add_term(out, nw, rc);
  }
  return out;
}

NCPoly normalize_by_rules(const Presentation& pres, const Terms& raw) {
  // Every rule strictly lowers the deglex order, so processing the largest
  // pending word first means each word is finished exactly once.
  Terms pending;
  for (const auto& [w, c] : raw) add_term(pending, w, c);
  NCPoly out;
  while (!pending.empty()) {
    auto it = std::prev(pending.end());
    Word w = it->first;
    CycScalar c = std::move(it->second);
    pending.erase(it);
    size_t pos = 0;
    while (pos + 1 < w.size() && pres.pair_normal(w[pos], w[pos + 1])) ++pos;
    if (pos + 1 >= w.size()) {
      out.terms.emplace(std::move(w), std::move(c));
      continue;
    }
    for (const auto& [rw, rc] : pres.rule(w[pos], w[pos + 1])) {
      Word nw;
      nw.reserve(w.size() - 2 + rw.size());
      nw.insert(nw.end(), w.begin(), w.begin() + pos);
      nw.insert(nw.end(), rw.begin(), rw.end());
      nw.insert(nw.end(), w.begin() + pos + 2, w.end());
      add_term(pending, nw, c * rc);
    }
  }
  return out;
}

NCPoly multiply(const Presentation& pres, const NCPoly& a, const NCPoly& b) {
  Terms raw;
  for (const auto& [wa, ca] : a.terms)
    for (const auto& [wb, cb] : b.terms) {
      Word w = wa;
      w.insert(w.end(), wb.begin(), wb.end());
      add_term(raw, w, ca * cb);
    }
  return normalize(pres, raw);
}

NCPoly word_poly(const Presentation& pres, const Word& w, const CycScalar& c) {
  Terms raw;
  add_term(raw, w, c);
  return normalize(pres, raw);
}

const std::vector<Terms>& relations(const Presentation& pres) { return pres.relations(); }

namespace {

void gen_words(int n, int len, bool strict, bool exact, Word& cur, std::vector<Word>& out) {
  bool full = static_cast<int>(cur.size()) == len;
  if (full || !exact) out.push_back(cur);
  if (full) return;
  int start = cur.empty() ? 0 : cur.back() + (strict ? 1 : 0);
  for (int g = start; g < n; ++g) {
    cur.push_back(static_cast<Gen>(g));
    gen_words(n, len, strict, exact, cur, out);
    cur.pop_back();
  }
}

}  // namespace

std::vector<Word> basis(const Presentation& pres, int d) {
  if (!pres.graded()) throw InputError("QuantizedWeyl presentation is not graded; use pbw_basis_up_to_length");
  if (d < 0) throw InputError("basis: negative degree");
  std::vector<Word> out;
  Word cur;
  gen_words(pres.num_gens(), d, pres.family() == Family::QuantumExterior, true, cur, out);
  return out;
}

std::vector<Word> pbw_basis_up_to_length(const Presentation& pres, int len) {
  std::vector<Word> out;
  Word cur;
  gen_words(pres.num_gens(), len, pres.family() == Family::QuantumExterior, false, cur, out);
  std::sort(out.begin(), out.end(), DegLex{});
  return out;
}

std::vector<long> hilbert_coeffs(const Presentation& pres, int D) {
  if (!pres.graded()) throw InputError("QuantizedWeyl presentation is not graded; use pbw_basis_up_to_length");
  int n = pres.num_gens();
  bool strict = pres.family() == Family::QuantumExterior;
  // ways[s] = number of normal words of the current length whose letters are all >= s
  std::vector<long> out;
  std::vector<long> ways(n + 1, 1);
  out.push_back(1);
  for (int d = 1; d <= D; ++d) {
    std::vector<long> nxt(n + 2, 0);
    for (int s = n - 1; s >= 0; --s) {
      long here = strict ? ways[s + 1] : ways[s];
      nxt[s] = nxt[s + 1] + here;
    }
    nxt.resize(n + 1);
    ways = nxt;
    out.push_back(ways[0]);
  }
  return out;
}

ConfluenceReport confluence_check(const Presentation& pres) {
  ConfluenceReport rep;
  int n = pres.num_gens();
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b) {
      if (pres.pair_normal(static_cast<Gen>(a), static_cast<Gen>(b))) continue;
      for (int c = 0; c < n; ++c) {
        if (pres.pair_normal(static_cast<Gen>(b), static_cast<Gen>(c))) continue;
        Word w{static_cast<Gen>(a), static_cast<Gen>(b), static_cast<Gen>(c)};
        NCPoly left = normalize_by_rules(pres, rewrite_at(pres, w, 0));
        NCPoly right = normalize_by_rules(pres, rewrite_at(pres, w, 1));
        ++rep.overlaps_checked;
        if (left != right) {
          rep.pass = false;
          rep.failures.push_back(pres.word_name(w));
        }
      }
    }
  return rep;
}

PresentationPtr koszul_dual(const Presentation& pres) {
  if (pres.family() != Family::QuantumAffine) throw InputError("koszul_dual expects a QuantumAffine presentation");
  PresentationSpec s = pres.spec();
  s.family = Family::QuantumExterior;
  return build_presentation(s);
}

std::vector<Terms> associated_graded_relations(const Presentation& pres) {
  std::vector<Terms> out;
  for (const auto& r : pres.relations()) {
    int top = 0;
    for (const auto& [w, c] : r) top = std::max(top, pres.weighted_degree(w));
    Terms lead;
    for (const auto& [w, c] : r)
      if (pres.weighted_degree(w) == top) lead.emplace(w, c);
    out.push_back(lead);
  }
  return out;
}

}  // namespace qhopf
