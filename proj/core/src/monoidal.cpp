#include "tensorrest/monoidal.hpp"

#include <cmath>
#include <string>

#include "tensorrest/error.hpp"

namespace tensorrest {

namespace {

std::size_t exact_root(std::size_t n, int power) {
  auto r = static_cast<std::size_t>(std::llround(std::pow(static_cast<double>(n), 1.0 / power)));
  for (std::size_t c : {r == 0 ? 0 : r - 1, r, r + 1}) {
    std::size_t p = 1;
    for (int i = 0; i < power; ++i) p *= c;
    if (p == n) return c;
  }
  return static_cast<std::size_t>(-1);
}

}  // namespace

std::size_t MonoidalData::morphism_count() const noexcept { return exact_root(tensor_mor.size(), 2); }

std::optional<ObjId> MonoidalData::tensor(ObjId a, ObjId b) const {
  const std::size_t k = object_count();
  if (a.index >= k || b.index >= k) return std::nullopt;
  std::uint32_t v = tensor_obj[a.index * k + b.index];
  if (v == kUndefined) return std::nullopt;
  return ObjId(v);
}

std::optional<MorId> MonoidalData::tensor(MorId f, MorId g) const {
  const std::size_t n = morphism_count();
  if (f.index >= n || g.index >= n) return std::nullopt;
  std::uint32_t v = tensor_mor[f.index * n + g.index];
  if (v == kUndefined) return std::nullopt;
  return MorId(v);
}

std::optional<MorId> MonoidalData::alpha_at(ObjId a, ObjId b, ObjId c) const {
  const std::size_t k = object_count();
  if (a.index >= k || b.index >= k || c.index >= k) return std::nullopt;
  std::uint32_t v = alpha[(a.index * k + b.index) * k + c.index];
  if (v == kUndefined) return std::nullopt;
  return MorId(v);
}

std::optional<MorId> MonoidalData::sigma_at(ObjId a, ObjId b) const {
  const std::size_t k = object_count();
  if (sigma.empty() || a.index >= k || b.index >= k) return std::nullopt;
  std::uint32_t v = sigma[a.index * k + b.index];
  if (v == kUndefined) return std::nullopt;
  return MorId(v);
}

void validate_shape(const FinCategory& c, const MonoidalData& m) {
  const std::size_t k = c.object_count();
  const std::size_t n = c.morphism_count();
  auto fail = [](const std::string& what) { throw Error(ErrorKind::MalformedTables, what); };
  if (k == 0) fail("a monoidal category needs a unit object");
  if (m.tensor_obj.size() != k * k) fail("tensor_obj table must have n_objects^2 entries");
  if (m.tensor_mor.size() != n * n) fail("tensor_mor table must have n_morphisms^2 entries");
  if (m.lambda.size() != k || m.rho.size() != k) fail("lambda/rho need one component per object");
  if (m.alpha.size() != k * k * k) fail("alpha table must have n_objects^3 entries");
  if (!m.sigma.empty() && m.sigma.size() != k * k) fail("sigma table must have n_objects^2 entries");
  if (m.unit.index >= k) fail("unit object out of range");
  for (auto v : m.tensor_obj)
    if (v != kUndefined && v >= k) fail("tensor_obj entry out of range");
  for (auto v : m.tensor_mor)
    if (v != kUndefined && v >= n) fail("tensor_mor entry out of range");
  for (auto v : m.lambda)
    if (v.index >= n) fail("lambda component out of range");
  for (auto v : m.rho)
    if (v.index >= n) fail("rho component out of range");
  for (auto v : m.alpha)
    if (v != kUndefined && v >= n) fail("alpha component out of range");
  for (auto v : m.sigma)
    if (v != kUndefined && v >= n) fail("sigma component out of range");
}

bool is_strict(const FinCategory& c, const MonoidalData& m) {
  const std::size_t k = c.object_count();
  for (std::size_t a = 0; a < k; ++a) {
    ObjId A(a);
    if (!c.is_identity(m.lambda[a]) || !c.is_identity(m.rho[a])) return false;
    if (m.tensor(m.unit, A) != A || m.tensor(A, m.unit) != A) return false;
  }
  for (auto v : m.alpha)
    if (v != kUndefined && !c.is_identity(MorId(v))) return false;
  return true;
}

LawReport check_monoidal_laws(const FinCategory& c, const MonoidalData& m) {
  validate_shape(c, m);
  LawReport report;
  const std::size_t k = c.object_count();
  const std::size_t n = c.morphism_count();
  const ObjId I = m.unit;
  auto id = [&](ObjId a) { return c.identity(a); };
  auto T = [&](std::optional<MorId> f, std::optional<MorId> g) -> std::optional<MorId> {
    if (!f || !g) return std::nullopt;
    return m.tensor(*f, *g);
  };
  auto To = [&](std::optional<ObjId> a, std::optional<ObjId> b) -> std::optional<ObjId> {
    if (!a || !b) return std::nullopt;
    return m.tensor(*a, *b);
  };

  // Tensor typing and identities.
  for (std::size_t fi = 0; fi < n; ++fi) {
    for (std::size_t gi = 0; gi < n; ++gi) {
      MorId f(fi), g(gi);
      auto d = m.tensor(c.dom(f), c.dom(g));
      auto e = m.tensor(c.cod(f), c.cod(g));
      auto fg = m.tensor(f, g);
      if (d && e && !fg) {
        report.add("tensor-defined", {f, g});
      } else if (fg && (!d || !e || c.dom(*fg) != *d || c.cod(*fg) != *e)) {
        report.add("tensor-typing", {f, g}, std::nullopt, fg);
      }
    }
  }
  for (std::size_t a = 0; a < k; ++a) {
    for (std::size_t b = 0; b < k; ++b) {
      auto ab = m.tensor(ObjId(a), ObjId(b));
      if (!ab) continue;
      auto lhs = m.tensor(id(ObjId(a)), id(ObjId(b)));
      if (lhs != id(*ab)) report.add("tensor-identity", {id(ObjId(a)), id(ObjId(b))}, lhs, id(*ab));
    }
  }
  if (!report.ok()) return report;

  // Interchange over all pairs of composable pairs.
  struct Pair {
    MorId g, f, gf;
  };
  std::vector<Pair> pairs;
  for (std::size_t gi = 0; gi < n; ++gi)
    for (std::size_t a = 0; a < k; ++a)
      for (MorId f : c.hom(ObjId(a), c.dom(MorId(gi))))
        if (auto gf = c.try_compose(MorId(gi), f)) pairs.push_back({MorId(gi), f, *gf});
  for (const Pair& p : pairs) {
    for (const Pair& q : pairs) {
      auto ff = m.tensor(p.f, q.f);
      auto gg = m.tensor(p.g, q.g);
      if (!ff || !gg) continue;
      auto lhs = m.tensor(p.gf, q.gf);
      auto rhs = c.try_compose(*gg, *ff);
      if (lhs != rhs) report.add("interchange", {p.g, p.f, q.g, q.f}, lhs, rhs);
    }
  }

  // Coherence components: typing and invertibility.
  for (std::size_t a = 0; a < k; ++a) {
    ObjId A(a);
    MorId l = m.lambda[a], r = m.rho[a];
    auto IA = m.tensor(I, A), AI = m.tensor(A, I);
    if (!IA || c.dom(l) != *IA || c.cod(l) != A) report.add("lambda-typing", {id(A)}, l);
    else if (!is_iso(c, l)) report.add("lambda-iso", {id(A)}, l);
    if (!AI || c.dom(r) != *AI || c.cod(r) != A) report.add("rho-typing", {id(A)}, r);
    else if (!is_iso(c, r)) report.add("rho-iso", {id(A)}, r);
  }
  std::vector<std::uint32_t> alpha_inv(m.alpha.size(), kUndefined);
  for (std::size_t a = 0; a < k; ++a)
    for (std::size_t b = 0; b < k; ++b)
      for (std::size_t cc = 0; cc < k; ++cc) {
        ObjId A(a), B(b), C(cc);
        auto src = To(A, m.tensor(B, C));
        auto dst = To(m.tensor(A, B), C);
        auto al = m.alpha_at(A, B, C);
        std::initializer_list<MorId> w = {id(A), id(B), id(C)};
        if (!src || !dst) {
          if (al) report.add("alpha-typing", w, al);
          continue;
        }
        if (!al) {
          report.add("alpha-defined", w);
        } else if (c.dom(*al) != *src || c.cod(*al) != *dst) {
          report.add("alpha-typing", w, al);
        } else if (auto inv = is_iso(c, *al)) {
          alpha_inv[(a * k + b) * k + cc] = inv->index;
        } else {
          report.add("alpha-iso", w, al);
        }
      }
  if (m.braided()) {
    for (std::size_t a = 0; a < k; ++a)
      for (std::size_t b = 0; b < k; ++b) {
        ObjId A(a), B(b);
        auto src = m.tensor(A, B), dst = m.tensor(B, A);
        auto s = m.sigma_at(A, B);
        if (!src || !dst) {
          if (s) report.add("sigma-typing", {id(A), id(B)}, s);
          continue;
        }
        if (!s) report.add("sigma-defined", {id(A), id(B)});
        else if (c.dom(*s) != *src || c.cod(*s) != *dst) report.add("sigma-typing", {id(A), id(B)}, s);
        else if (!is_iso(c, *s)) report.add("sigma-iso", {id(A), id(B)}, s);
      }
  }
  if (!report.ok()) return report;
  auto ainv = [&](ObjId a, ObjId b, ObjId cc) -> std::optional<MorId> {
    std::uint32_t v = alpha_inv[(a.index * k + b.index) * k + cc.index];
    if (v == kUndefined) return std::nullopt;
    return MorId(v);
  };

  // Naturality.
  for (std::size_t fi = 0; fi < n; ++fi) {
    MorId f(fi);
    ObjId A = c.dom(f), B = c.cod(f);
    auto lhs = c.try_compose(f, m.lambda[A.index]);
    auto rhs = compose_chain(c, {m.lambda[B.index], m.tensor(id(I), f)});
    if (lhs != rhs) report.add("lambda-naturality", {f}, lhs, rhs);
    lhs = c.try_compose(f, m.rho[A.index]);
    rhs = compose_chain(c, {m.rho[B.index], m.tensor(f, id(I))});
    if (lhs != rhs) report.add("rho-naturality", {f}, lhs, rhs);
  }
  for (std::size_t fi = 0; fi < n; ++fi)
    for (std::size_t gi = 0; gi < n; ++gi) {
      MorId f(fi), g(gi);
      if (m.braided()) {
        auto fg = m.tensor(f, g), gf = m.tensor(g, f);
        if (fg && gf) {
          auto lhs = compose_chain(c, {gf, m.sigma_at(c.dom(f), c.dom(g))});
          auto rhs = compose_chain(c, {m.sigma_at(c.cod(f), c.cod(g)), fg});
          if (lhs != rhs) report.add("sigma-naturality", {f, g}, lhs, rhs);
        }
      }
      if (!m.tensor(f, g)) continue;
      for (std::size_t hi = 0; hi < n; ++hi) {
        MorId h(hi);
        auto left = T(T(f, g), h);
        auto right = T(f, T(g, h));
        if (!left || !right) continue;
        auto lhs = compose_chain(c, {left, m.alpha_at(c.dom(f), c.dom(g), c.dom(h))});
        auto rhs = compose_chain(c, {m.alpha_at(c.cod(f), c.cod(g), c.cod(h)), right});
        if (lhs != rhs) report.add("alpha-naturality", {f, g, h}, lhs, rhs);
      }
    }

  // Triangle, pentagon, hexagons.
  for (std::size_t a = 0; a < k; ++a)
    for (std::size_t b = 0; b < k; ++b) {
      ObjId A(a), B(b);
      if (!m.tensor(A, B)) continue;
      auto lhs = compose_chain(c, {m.tensor(m.rho[a], id(B)), m.alpha_at(A, I, B)});
      auto rhs = m.tensor(id(A), m.lambda[b]);
      if (lhs != rhs) report.add("triangle", {id(A), id(B)}, lhs, rhs);
    }
  for (std::size_t a = 0; a < k; ++a)
    for (std::size_t b = 0; b < k; ++b)
      for (std::size_t cc = 0; cc < k; ++cc)
        for (std::size_t d = 0; d < k; ++d) {
          ObjId A(a), B(b), C(cc), D(d);
          auto AB = m.tensor(A, B), BC = m.tensor(B, C), CD = m.tensor(C, D);
          if (!To(To(AB, C), D) || !To(A, To(B, CD)) || !To(To(A, BC), D) || !To(A, To(BC, D))) continue;
          auto lhs = compose_chain(c, {m.alpha_at(*AB, C, D), m.alpha_at(A, B, *CD)});
          auto rhs = compose_chain(c, {T(m.alpha_at(A, B, C), id(D)), m.alpha_at(A, *BC, D),
                                       T(id(A), m.alpha_at(B, C, D))});
          if (lhs != rhs) report.add("pentagon", {id(A), id(B), id(C), id(D)}, lhs, rhs);
        }
  if (m.braided()) {
    for (std::size_t a = 0; a < k; ++a)
      for (std::size_t b = 0; b < k; ++b)
        for (std::size_t cc = 0; cc < k; ++cc) {
          ObjId A(a), B(b), C(cc);
          std::initializer_list<MorId> w = {id(A), id(B), id(C)};
          auto AB = m.tensor(A, B), BC = m.tensor(B, C), AC = m.tensor(A, C);
          if (AB && BC && AC && To(AB, C) && To(BC, A) && To(B, To(C, A)) && To(B, To(A, C))) {
            auto lhs = compose_chain(c, {ainv(B, C, A), m.sigma_at(A, *BC), ainv(A, B, C)});
            auto rhs = compose_chain(c, {T(id(B), m.sigma_at(A, C)), ainv(B, A, C), T(m.sigma_at(A, B), id(C))});
            if (lhs != rhs) report.add("hexagon-1", w, lhs, rhs);
          }
          auto CB = m.tensor(C, B);
          if (AB && BC && AC && CB && To(AB, C) && To(C, AB) && To(To(C, A), B) && To(A, CB)) {
            auto lhs = compose_chain(c, {m.alpha_at(C, A, B), m.sigma_at(*AB, C), m.alpha_at(A, B, C)});
            auto rhs = compose_chain(c, {T(m.sigma_at(A, C), id(B)), m.alpha_at(A, C, B), T(id(A), m.sigma_at(B, C))});
            if (lhs != rhs) report.add("hexagon-2", w, lhs, rhs);
          }
        }
  }
  return report;
}

std::vector<Subunit> enumerate_subunits(const FinCategory& c, const MonoidalData& m) {
  std::vector<Subunit> out;
  const ObjId I = m.unit;
  for (std::size_t fi = 0; fi < c.morphism_count(); ++fi) {
    MorId f(fi);
    if (c.cod(f) != I) continue;
    bool known = false;
    for (const Subunit& s : out) {
      for (MorId mm : c.hom(c.dom(f), s.domain)) {
        if (c.try_compose(s.mono, mm) == f && is_iso(c, mm)) {
          known = true;
          break;
        }
      }
      if (known) break;
    }
    if (known || !is_mono(c, f)) continue;
    ObjId S = c.dom(f);
    auto sS = m.tensor(f, c.identity(S));
    if (!sS || !is_iso(c, *sS)) continue;
    auto split = is_iso(c, *compose_chain(c, {m.lambda[S.index], sS}));
    if (!split) continue;
    out.push_back(Subunit{f, S, *split});
  }
  return out;
}

bool check_lemma_subunit_swap(const FinCategory& c, const MonoidalData& m, const Subunit& s) {
  ObjId S = s.domain;
  auto lhs = compose_chain(c, {m.lambda[S.index], m.tensor(s.mono, c.identity(S))});
  auto rhs = compose_chain(c, {m.rho[S.index], m.tensor(c.identity(S), s.mono)});
  return lhs && lhs == rhs;
}

TensorTopology::TensorTopology(const FinCategory& c, const MonoidalData& m)
    : c_(&c), m_(&m), subunits_(enumerate_subunits(c, m)) {
  const std::size_t n = c.morphism_count();
  class_of_.assign(n, kUndefined);
  factor_.assign(n, kUndefined);
  for (std::size_t fi = 0; fi < n; ++fi) {
    MorId f(fi);
    if (c.cod(f) != m.unit) continue;
    for (std::size_t i = 0; i < subunits_.size() && class_of_[fi] == kUndefined; ++i) {
      for (MorId mm : c.hom(c.dom(f), subunits_[i].domain)) {
        if (c.try_compose(subunits_[i].mono, mm) == f && is_iso(c, mm)) {
          class_of_[fi] = static_cast<std::uint32_t>(i);
          factor_[fi] = mm.index;
          break;
        }
      }
    }
  }
  auto t = classify(c.identity(m.unit));
  if (!t) throw Error(ErrorKind::InvariantViolation, "the identity on the unit is not a subunit");
  top_ = t->first;

  const std::size_t k = subunits_.size();
  firm_ = m.braided();
  for (std::size_t i = 0; i < k && firm_; ++i)
    for (std::size_t j = 0; j < k && firm_; ++j) {
      auto st = m.tensor(subunits_[i].mono, c.identity(subunits_[j].domain));
      if (!st || !is_mono(c, *st)) firm_ = false;
    }
  meet_.assign(k * k, kUndefined);
  for (std::size_t i = 0; i < k; ++i)
    for (std::size_t j = 0; j < k; ++j) {
      auto raw = compose_chain(c, {m.lambda[m.unit.index], m.tensor(subunits_[i].mono, subunits_[j].mono)});
      if (!raw) continue;
      if (auto cl = classify(*raw)) meet_[i * k + j] = static_cast<std::uint32_t>(cl->first);
    }
}

std::optional<std::pair<std::size_t, MorId>> TensorTopology::classify(MorId f) const {
  if (f.index >= class_of_.size() || class_of_[f.index] == kUndefined) return std::nullopt;
  return std::make_pair(static_cast<std::size_t>(class_of_[f.index]), MorId(factor_[f.index]));
}

std::size_t TensorTopology::meet(std::size_t s, std::size_t t) const {
  if (!firm_) throw Error(ErrorKind::NotFirm, "subunit meets need a firm category");
  std::uint32_t v = meet_[s * subunits_.size() + t];
  if (v == kUndefined) throw Error(ErrorKind::InvariantViolation, "meet of subunits is not a subunit");
  return v;
}

bool TensorTopology::leq(std::size_t s, std::size_t t) const {
  const FinCategory& c = *c_;
  for (MorId mm : c.hom(subunits_[s].domain, subunits_[t].domain))
    if (c.try_compose(subunits_[t].mono, mm) == subunits_[s].mono) return true;
  return false;
}

Semilattice TensorTopology::isub() const {
  Semilattice l;
  l.size = subunits_.size();
  l.top = static_cast<std::uint32_t>(top_);
  l.meet_table.resize(l.size * l.size);
  for (std::size_t i = 0; i < l.size; ++i)
    for (std::size_t j = 0; j < l.size; ++j) l.meet_table[i * l.size + j] = static_cast<std::uint32_t>(meet(i, j));
  return l;
}

bool is_firm(const FinCategory& c, const MonoidalData& m) {
  if (!m.braided()) throw Error(ErrorKind::NotBraided, "firmness is defined for braided categories");
  return TensorTopology(c, m).firm();
}

namespace {

std::size_t index_of(const TensorTopology& topo, const Subunit& s) {
  for (std::size_t i = 0; i < topo.size(); ++i)
    if (topo[i].mono == s.mono) return i;
  throw Error(ErrorKind::NotASubunit, "m" + std::to_string(s.mono.index) + " is not a canonical subunit");
}

}  // namespace

Subunit subunit_meet(const FinCategory& c, const MonoidalData& m, const Subunit& s, const Subunit& t) {
  TensorTopology topo(c, m);
  return topo[topo.meet(index_of(topo, s), index_of(topo, t))];
}

bool subunit_leq(const FinCategory& c, const MonoidalData& m, const Subunit& s, const Subunit& t) {
  for (MorId mm : c.hom(s.domain, t.domain))
    if (c.try_compose(t.mono, mm) == s.mono) return true;
  (void)m;
  return false;
}

Semilattice isub_semilattice(const FinCategory& c, const MonoidalData& m) { return TensorTopology(c, m).isub(); }

bool tensor_restricts(const FinCategory& c, const MonoidalData& m, MorId f, const Subunit& s) {
  ObjId A = c.dom(f), B = c.cod(f);
  auto BS = m.tensor(B, s.domain);
  if (!BS) return false;
  auto post = compose_chain(c, {m.rho[B.index], m.tensor(c.identity(B), s.mono)});
  if (!post) return false;
  for (MorId g : c.hom(A, *BS))
    if (c.try_compose(*post, g) == f) return true;
  return false;
}

bool identity_restricts(const FinCategory& c, const MonoidalData& m, ObjId a, const Subunit& s) {
  auto r = compose_chain(c, {m.rho[a.index], m.tensor(c.identity(a), s.mono)});
  return r && is_iso(c, *r);
}

bool is_tensor_total(const TensorTopology& topo, MorId f) {
  const FinCategory& c = topo.category();
  const MonoidalData& m = topo.monoidal();
  for (const Subunit& s : topo.subunits())
    if (tensor_restricts(c, m, f, s) && !identity_restricts(c, m, c.dom(f), s)) return false;
  return true;
}

bool is_tensor_total(const FinCategory& c, const MonoidalData& m, MorId f) {
  return is_tensor_total(TensorTopology(c, m), f);
}

std::optional<std::pair<MorId, MorId>> check_duality(const FinCategory& c, const MonoidalData& m, ObjId a,
                                                     ObjId astar) {
  const ObjId I = m.unit;
  auto sa = m.tensor(astar, a);
  auto as = m.tensor(a, astar);
  if (!sa || !as) return std::nullopt;
  auto rho_inv = is_iso(c, m.rho[a.index]);
  auto lambda_inv = is_iso(c, m.lambda[astar.index]);
  auto alpha = m.alpha_at(a, astar, a);
  auto alpha2 = m.alpha_at(astar, a, astar);
  if (!rho_inv || !lambda_inv || !alpha || !alpha2) return std::nullopt;
  auto alpha2_inv = is_iso(c, *alpha2);
  for (MorId eta : c.hom(I, *sa)) {
    for (MorId eps : c.hom(*as, I)) {
      auto first = compose_chain(c, {m.lambda[a.index], m.tensor(eps, c.identity(a)), alpha,
                                     m.tensor(c.identity(a), eta), rho_inv});
      if (first != c.identity(a)) continue;
      auto second = compose_chain(c, {m.rho[astar.index], m.tensor(c.identity(astar), eps), alpha2_inv,
                                      m.tensor(eta, c.identity(astar)), lambda_inv});
      if (second == c.identity(astar)) return std::make_pair(eta, eps);
    }
  }
  return std::nullopt;
}

}  // namespace tensorrest
