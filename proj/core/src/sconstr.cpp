#include "tensorrest/sconstr.hpp"

#include <algorithm>
#include <map>
#include <set>

#include "tensorrest/error.hpp"

namespace tensorrest {

namespace {

std::string mor_name(MorId f) { return "m" + std::to_string(f.index); }

MorId must(std::optional<MorId> f, const char* what) {
  if (!f) throw Error(ErrorKind::InvariantViolation, what);
  return *f;
}

}  // namespace

FirmBase::FirmBase(FinCategory c, MonoidalData m)
    : category(std::move(c)), monoidal(std::move(m)), topology(category, monoidal) {}

SPair canonicalize_pair(const FirmBase& base, MorId raw_mono, ObjId source, MorId under) {
  const FinCategory& c = base.category;
  const MonoidalData& m = base.monoidal;
  auto cl = base.topology.classify(raw_mono);
  if (!cl) throw Error(ErrorKind::NotASubunit, mor_name(raw_mono) + " lies in no subunit class");
  if (m.tensor(source, c.dom(raw_mono)) != c.dom(under))
    throw Error(ErrorKind::InvalidArgument, "domain of " + mor_name(under) + " is not the source tensored with the subunit");
  MorId minv = must(is_iso(c, cl->second), "classifying factor is not an iso");
  MorId u = must(compose_chain(c, {under, m.tensor(c.identity(source), minv)}), "canonicalization left the base");
  return SPair{static_cast<std::uint32_t>(cl->first), source, u};
}

SPair canonicalize_pair(const SCategory& s, MorId raw_mono, ObjId source, MorId under) {
  return canonicalize_pair(s.base(), raw_mono, source, under);
}

std::optional<MorId> SCategory::find(const SPair& p) const {
  const std::size_t k = base_->category.object_count();
  const std::size_t n = base_->category.morphism_count();
  if (p.subunit >= base_->topology.size() || p.source.index >= k || p.under.index >= n) return std::nullopt;
  std::uint32_t v = lookup_[(p.subunit * k + p.source.index) * n + p.under.index];
  if (v == kUndefined) return std::nullopt;
  return MorId(v);
}

MorId SCategory::encode(const SPair& p) const {
  auto f = find(p);
  if (!f) throw Error(ErrorKind::InvariantViolation, "pair is not a canonical morphism of S[C]");
  return *f;
}

MorId SCategory::embed(MorId h) const {
  const FinCategory& c = base_->category;
  const MonoidalData& m = base_->monoidal;
  ObjId a = c.dom(h);
  MorId u = must(c.try_compose(h, m.rho[a.index]), "embedding needs h after rho");
  return encode(canonicalize_pair(*base_, c.identity(m.unit), a, u));
}

SCategory build_s_construction(const FinCategory& c, const MonoidalData& m) {
  validate_shape(c, m);
  if (!m.braided()) throw Error(ErrorKind::NotBraided, "the S-construction needs a braiding");
  if (!is_strict(c, m)) throw Error(ErrorKind::NotStrict, "lambda, rho and alpha must be identities");
  if (!check_category_laws(c).ok()) throw Error(ErrorKind::PrerequisiteFailed, "category");
  if (!check_monoidal_laws(c, m).ok()) throw Error(ErrorKind::PrerequisiteFailed, "monoidal");
  return build_s_construction(std::make_shared<const FirmBase>(c, m));
}

SCategory build_s_construction(std::shared_ptr<const FirmBase> base) {
  const FinCategory& c = base->category;
  const MonoidalData& m = base->monoidal;
  const TensorTopology& topo = base->topology;
  if (!m.braided()) throw Error(ErrorKind::NotBraided, "the S-construction needs a braiding");
  if (!is_strict(c, m)) throw Error(ErrorKind::NotStrict, "lambda, rho and alpha must be identities");
  if (!topo.firm()) throw Error(ErrorKind::NotFirm, "the base is not firm");

  SCategory out;
  out.base_ = base;
  const std::size_t k = c.object_count();
  const std::size_t n = c.morphism_count();
  const ObjId I = m.unit;
  out.lookup_.assign(topo.size() * k * n, kUndefined);
  for (std::size_t s = 0; s < topo.size(); ++s) {
    ObjId S = topo[s].domain;
    for (std::size_t f = 0; f < n; ++f)
      for (std::size_t a = 0; a < k; ++a) {
        if (m.tensor(ObjId(a), S) != c.dom(MorId(f))) continue;
        out.lookup_[(s * k + a) * n + f] = static_cast<std::uint32_t>(out.pairs_.size());
        out.pairs_.push_back(SPair{static_cast<std::uint32_t>(s), ObjId(a), MorId(f)});
      }
  }
  const std::size_t N = out.pairs_.size();
  const MorId idI = c.identity(I);
  const MorId lamI = m.lambda[I.index];
  auto canon = [&](MorId raw, ObjId src, MorId under) { return out.encode(canonicalize_pair(*base, raw, src, under)); };

  CategoryTables t;
  t.object_count = k;
  for (const SPair& p : out.pairs_) {
    t.dom.push_back(p.source);
    t.cod.push_back(c.cod(p.under));
  }
  for (std::size_t a = 0; a < k; ++a) t.identity.push_back(canon(idI, ObjId(a), m.rho[a]));
  t.compose.assign(N * N, kUndefined);
  for (std::size_t gi = 0; gi < N; ++gi) {
    const SPair& q = out.pairs_[gi];
    const Subunit& T = topo[q.subunit];
    for (std::size_t fi = 0; fi < N; ++fi) {
      const SPair& p = out.pairs_[fi];
      if (c.cod(p.under) != q.source) continue;
      const Subunit& S = topo[p.subunit];
      MorId raw = must(compose_chain(c, {lamI, m.tensor(S.mono, T.mono)}), "meet of subunits is undefined");
      MorId under = must(compose_chain(c, {q.under, m.tensor(p.under, c.identity(T.domain)),
                                           m.alpha_at(p.source, S.domain, T.domain)}),
                         "composite pair is undefined");
      t.compose[gi * N + fi] = canon(raw, p.source, under).index;
    }
  }

  RestrictionData r;
  CorestrictionData cr;
  for (const SPair& p : out.pairs_) {
    const Subunit& S = topo[p.subunit];
    ObjId A = p.source, B = c.cod(p.under);
    MorId ru = must(compose_chain(c, {m.rho[A.index], m.tensor(c.identity(A), S.mono)}), "restriction undefined");
    MorId cu = must(compose_chain(c, {m.rho[B.index], m.tensor(c.identity(B), S.mono)}), "corestriction undefined");
    r.bar.push_back(out.encode(SPair{p.subunit, A, ru}));
    cr.hat.push_back(out.encode(SPair{p.subunit, B, cu}));
  }

  MonoidalData sm;
  sm.tensor_obj = m.tensor_obj;
  sm.unit = I;
  sm.tensor_mor.assign(N * N, kUndefined);
  for (std::size_t fi = 0; fi < N; ++fi) {
    const SPair& p = out.pairs_[fi];
    const Subunit& S = topo[p.subunit];
    for (std::size_t gi = 0; gi < N; ++gi) {
      const SPair& q = out.pairs_[gi];
      const Subunit& T = topo[q.subunit];
      ObjId A = p.source, B = c.cod(p.under), C = q.source, D = c.cod(q.under);
      auto AC = m.tensor(A, C);
      if (!AC || !m.tensor(B, D)) continue;
      auto raw = compose_chain(c, {lamI, m.tensor(S.mono, T.mono)});
      auto sig = m.sigma_at(C, S.domain);
      auto inner = sig ? m.tensor(c.identity(A), *sig) : std::nullopt;
      auto cross = inner ? m.tensor(*inner, c.identity(T.domain)) : std::nullopt;
      if (!raw || !cross) continue;
      auto under = compose_chain(c, {m.tensor(p.under, q.under), cross});
      if (!under) continue;
      sm.tensor_mor[fi * N + gi] = canon(*raw, *AC, *under).index;
    }
  }
  auto embed = [&](std::optional<MorId> h) -> std::uint32_t {
    if (!h) return kUndefined;
    ObjId a = c.dom(*h);
    return canon(idI, a, must(c.try_compose(*h, m.rho[a.index]), "embedding undefined")).index;
  };
  for (std::size_t a = 0; a < k; ++a) {
    sm.lambda.emplace_back(embed(m.lambda[a]));
    sm.rho.emplace_back(embed(m.rho[a]));
  }
  for (auto v : m.alpha) sm.alpha.push_back(v == kUndefined ? kUndefined : embed(MorId(v)));
  for (auto v : m.sigma) sm.sigma.push_back(v == kUndefined ? kUndefined : embed(MorId(v)));

  out.carrier_.category = FinCategory(std::move(t));
  out.carrier_.monoidal = std::move(sm);
  out.carrier_.restriction = std::move(r);
  out.carrier_.corestriction = std::move(cr);
  return out;
}

bool restriction_iso_criterion(const SCategory& s, MorId f) {
  const FinCategory& c = s.base().category;
  const MonoidalData& m = s.base().monoidal;
  const SPair& p = s.decode(f);
  const Subunit& S = s.base().topology[p.subunit];
  auto composite = compose_chain(c, {m.tensor(p.under, c.identity(S.domain)), m.tensor(c.identity(p.source), S.split)});
  return composite && is_iso(c, *composite);
}

TRContext::TRContext(const FinCategory& c, const MonoidalData& m, const RestrictionData& r)
    : c_(&c), m_(&m), r_(&r), topo_(c, m) {
  const std::size_t n = c.morphism_count();
  tensor_total_.resize(n);
  rinv_.assign(n, kUndefined);
  for (std::size_t i = 0; i < n; ++i) {
    tensor_total_[i] = is_tensor_total(topo_, MorId(i));
    if (auto g = tensorrest::restriction_inverse(c, r, MorId(i))) rinv_[i] = g->index;
  }
  points_.resize(c.object_count());
  for (std::size_t x = 0; x < c.object_count(); ++x)
    for (MorId d : c.hom(m.unit, ObjId(x)))
      if (rinv_[d.index] != kUndefined && tensor_total_[rinv_[d.index]]) points_[x].push_back(d);
  for (std::size_t i = 0; i < n; ++i)
    if (topo_.classify(MorId(i))) members_.emplace_back(i);
  lambda_unit_inv_ = is_iso(c, m.lambda[m.unit.index]);
}

std::optional<MorId> TRContext::restriction_inverse(MorId f) const {
  if (rinv_[f.index] == kUndefined) return std::nullopt;
  return MorId(rinv_[f.index]);
}

std::optional<MorId> TRContext::point_tensor(MorId d, MorId d2) const {
  return compose_chain(*c_, {m_->tensor(d, d2), lambda_unit_inv_});
}

std::vector<MorId> tensor_restriction_points(const FinCategory& c, const MonoidalData& m, const RestrictionData& r,
                                             ObjId x) {
  return TRContext(c, m, r).points(x);
}

std::vector<MorId> restriction_subunit_points(const FinCategory& c, const RestrictionData& r, MorId s) {
  std::vector<MorId> out;
  for (MorId d : c.hom(c.cod(s), c.dom(s)))
    if (c.try_compose(s, d) == r(d)) out.push_back(d);
  return out;
}

std::optional<MorId> maximal_restriction_subunit_point(const FinCategory& c, const RestrictionData& r, MorId s) {
  auto pts = restriction_subunit_points(c, r, s);
  for (MorId top : pts) {
    bool maximal = std::all_of(pts.begin(), pts.end(), [&](MorId d) { return c.try_compose(top, r(d)) == d; });
    if (maximal) return top;
  }
  return std::nullopt;
}

LawReport check_point_lemmas(const FinCategory& c, const MonoidalData& m, const RestrictionData& r) {
  LawReport report;
  TensorTopology topo(c, m);
  const ObjId I = m.unit;
  auto lam_inv = is_iso(c, m.lambda[I.index]);
  std::vector<std::vector<MorId>> pts(topo.size());
  std::vector<std::optional<MorId>> maxima(topo.size());
  for (std::size_t i = 0; i < topo.size(); ++i) {
    MorId s = topo[i].mono;
    pts[i] = restriction_subunit_points(c, r, s);
    for (MorId d : pts[i]) {
      auto inv = restriction_inverse(c, r, d);
      auto expected = c.try_compose(r(d), s);
      if (inv != expected) report.add("point-restriction-iso", {d, s}, inv, expected);
    }
    maxima[i] = maximal_restriction_subunit_point(c, r, s);
    if (!maxima[i]) report.add("maximal-point-exists", {s});
  }
  for (std::size_t i = 0; i < topo.size(); ++i)
    for (std::size_t j = 0; j < topo.size(); ++j) {
      MorId s = topo[i].mono, t = topo[j].mono;
      auto meet = compose_chain(c, {m.lambda[I.index], m.tensor(s, t)});
      if (!meet) {
        report.add("point-meet", {s, t});
        continue;
      }
      for (MorId d : pts[i])
        for (MorId d2 : pts[j]) {
          auto p = compose_chain(c, {m.tensor(d, d2), lam_inv});
          if (!p || r(*p) != c.try_compose(*meet, *p)) report.add("point-meet", {d, d2}, p);
        }
      if (!maxima[i] || !maxima[j]) continue;
      auto p = compose_chain(c, {m.tensor(*maxima[i], *maxima[j]), lam_inv});
      if (!p) {
        report.add("maximal-point-meet", {*maxima[i], *maxima[j]});
        continue;
      }
      for (MorId q : restriction_subunit_points(c, r, *meet))
        if (c.try_compose(*p, r(q)) != q) report.add("maximal-point-meet", {*maxima[i], *maxima[j], q}, p);
    }
  return report;
}

std::optional<std::string> TRReport::first_failure() const {
  for (int i = 1; i <= 7; ++i)
    if (!passed(i)) return "TR" + std::to_string(i);
  return std::nullopt;
}

void require_firm_restriction(const FinCategory& c, const MonoidalData& m, const RestrictionData& r) {
  if (!check_category_laws(c).ok()) throw Error(ErrorKind::PrerequisiteFailed, "category");
  if (!check_monoidal_laws(c, m).ok()) throw Error(ErrorKind::PrerequisiteFailed, "monoidal");
  if (!m.braided() || !TensorTopology(c, m).firm()) throw Error(ErrorKind::PrerequisiteFailed, "firm");
  if (!check_R_axioms(c, r).ok()) throw Error(ErrorKind::PrerequisiteFailed, "R");
  if (!check_monoidal_restriction(c, m, r).ok()) throw Error(ErrorKind::PrerequisiteFailed, "monrest");
}

TRReport check_TR_axioms(const FinCategory& c, const MonoidalData& m, const RestrictionData& r) {
  require_firm_restriction(c, m, r);
  return check_TR_axioms(TRContext(c, m, r));
}

TRReport check_TR_axioms(const TRContext& ctx) {
  const FinCategory& c = ctx.category();
  const MonoidalData& m = ctx.monoidal();
  const RestrictionData& r = ctx.restriction();
  const ObjId I = m.unit;
  const std::size_t k = c.object_count();
  TRReport out;
  auto scalars = c.hom(I, I);
  auto oi = restriction_idempotent_list(c, r, I);

  for (MorId e : oi) {
    bool found = false;
    for (MorId s : ctx.subunit_members()) {
      for (MorId d : ctx.points(c.dom(s)))
        if (c.try_compose(s, d) == e) {
          out.tr1_factorings.push_back({e, s, d});
          found = true;
          break;
        }
      if (found) break;
    }
    if (!found) out.violations.add("TR1", {e});
  }

  for (MorId s : ctx.subunit_members()) {
    const auto& pts = ctx.points(c.dom(s));
    bool found = std::any_of(pts.begin(), pts.end(), [&](MorId d) { return c.try_compose(s, d) == r(d); });
    if (!found) out.violations.add("TR2", {s});
  }

  for (std::size_t x = 0; x < k; ++x) {
    MorId idx = c.identity(ObjId(x));
    for (MorId f : restriction_idempotent_list(c, r, ObjId(x))) {
      std::vector<MorId> hits;
      for (MorId e : oi)
        if (scalar_mult(c, m, e, idx) == f) hits.push_back(e);
      if (hits.empty()) out.violations.add("TR3", {f});
      else if (hits.size() > 1) out.violations.add("TR3", {f, hits[0], hits[1]});
    }
  }

  for (std::size_t i = 0; i < c.morphism_count(); ++i) {
    MorId f(i);
    if (!ctx.tensor_total(f)) continue;
    std::vector<MorId> hits;
    for (MorId g : c.hom(c.dom(f), c.cod(f)))
      if (is_restriction_total(c, r, g) && c.try_compose(g, r(f)) == f) hits.push_back(g);
    if (hits.empty()) out.violations.add("TR4", {f});
    else if (hits.size() > 1) out.violations.add("TR4", {f, hits[0], hits[1]});
  }

  for (std::size_t x = 0; x < k; ++x) {
    ObjId X(x);
    for (MorId d : ctx.points(X))
      for (MorId s : ctx.subunit_members()) {
        ObjId S = c.dom(s);
        for (MorId f : c.hom(I, S))
          for (MorId g : c.hom(X, I)) {
            if (c.try_compose(s, f) != c.try_compose(g, d)) continue;
            std::optional<MorId> fill;
            for (MorId mm : c.hom(X, S))
              if (c.try_compose(mm, d) == f && c.try_compose(s, mm) == g) {
                fill = mm;
                break;
              }
            if (fill) out.tr5_fillins.push_back({d, s, f, g, *fill});
            else out.violations.add("TR5", {d, s, f, g});
          }
      }
  }

  for (std::size_t x = 0; x < k; ++x)
    for (std::size_t y = 0; y < k; ++y) {
      auto xy = m.tensor(ObjId(x), ObjId(y));
      if (!xy) continue;
      const auto& target = ctx.points(*xy);
      for (MorId d : ctx.points(ObjId(x)))
        for (MorId d2 : ctx.points(ObjId(y))) {
          auto p = ctx.point_tensor(d, d2);
          if (!p || !std::binary_search(target.begin(), target.end(), *p)) out.violations.add("TR6", {d, d2}, p);
        }
    }

  for (std::size_t x = 0; x < k; ++x) {
    const auto& pts = ctx.points(ObjId(x));
    for (MorId d : pts)
      for (MorId d2 : pts) {
        std::vector<MorId> all, restricted;
        for (MorId mm : scalars)
          if (c.try_compose(d, mm) == d2) {
            all.push_back(mm);
            if (c.try_compose(mm, r(d2)) == mm) restricted.push_back(mm);
          }
        if (all.empty()) out.violations.add("TR7", {d, d2});
        else if (restricted.size() != 1) out.violations.add("TR7", {d, d2, all[0]});
      }
  }
  return out;
}

TRWitness tr_witnesses(const TRContext& ctx, MorId f) {
  const FinCategory& c = ctx.category();
  const MonoidalData& m = ctx.monoidal();
  const RestrictionData& r = ctx.restriction();
  const TensorTopology& topo = ctx.topology();
  const ObjId I = m.unit;
  const ObjId A = c.dom(f), B = c.cod(f);

  std::optional<MorId> e;
  for (MorId cand : restriction_idempotent_list(c, r, I)) {
    if (scalar_mult(c, m, cand, c.identity(A)) != r(f)) continue;
    if (e) throw Error(ErrorKind::InvariantViolation, "two scalars restrict " + mor_name(f));
    e = cand;
  }
  if (!e) throw Error(ErrorKind::InvariantViolation, "no scalar restricts " + mor_name(f));

  std::vector<std::pair<std::size_t, MorId>> through;
  for (std::size_t i = 0; i < topo.size(); ++i)
    for (MorId d : c.hom(I, topo[i].domain))
      if (c.try_compose(topo[i].mono, d) == *e) {
        through.emplace_back(i, d);
        break;
      }
  std::optional<std::pair<std::size_t, MorId>> least;
  for (const auto& cand : through) {
    bool below_all = std::all_of(through.begin(), through.end(),
                                 [&](const auto& other) { return topo.leq(cand.first, other.first); });
    if (below_all) {
      least = cand;
      break;
    }
  }
  if (!least) throw Error(ErrorKind::InvariantViolation, "no least subunit for " + mor_name(f));
  const Subunit& s = topo[least->first];

  MorId h = must(m.tensor(f, c.identity(s.domain)), "f tensor S_f is undefined");
  std::optional<MorId> total;
  for (MorId g : c.hom(c.dom(h), c.cod(h))) {
    if (!is_restriction_total(c, r, g) || c.try_compose(g, r(h)) != h) continue;
    if (total) throw Error(ErrorKind::InvariantViolation, "two total parts for " + mor_name(h));
    total = g;
  }
  if (!total) throw Error(ErrorKind::InvariantViolation, "no total part for " + mor_name(h));
  MorId tf = must(compose_chain(c, {m.rho[B.index], m.tensor(c.identity(B), s.mono), total}), "T(f) is undefined");

  auto back = compose_chain(c, {tf, m.tensor(c.identity(A), least->second), is_iso(c, m.rho[A.index])});
  if (back != f) throw Error(ErrorKind::InvariantViolation, "T(f) does not recover " + mor_name(f));
  return TRWitness{*e, s, least->second, tf};
}

TRWitness tr_witnesses(const FinCategory& c, const MonoidalData& m, const RestrictionData& r, MorId f) {
  return tr_witnesses(TRContext(c, m, r), f);
}

std::pair<MorId, MorId> em_factorize(const SCategory& s, MorId f) {
  const FinCategory& c = s.base().category;
  const MonoidalData& m = s.base().monoidal;
  const SPair& p = s.decode(f);
  ObjId AS = c.dom(p.under);
  MorId e = s.encode(SPair{p.subunit, p.source, c.identity(AS)});
  (void)m;
  return {e, s.embed(p.under)};
}

bool in_E(const SCategory& s, MorId f) {
  const Bundle& x = s.carrier();
  if (!restriction_inverse(x.category, *x.restriction, f)) return false;
  const FinCategory& c = s.base().category;
  const MonoidalData& m = s.base().monoidal;
  const SPair& p = s.decode(f);
  ObjId S = s.base().topology[p.subunit].domain;
  ObjId target = c.cod(p.under);
  for (std::size_t b = 0; b < c.object_count(); ++b)
    if (m.tensor(ObjId(b), S) == target) return true;
  return false;
}

bool in_M(const SCategory& s, MorId f) {
  const Bundle& x = s.carrier();
  return is_restriction_total(x.category, *x.restriction, f);
}

FactorisationReport check_factorisation_system(const SCategory& s) {
  FactorisationReport out;
  const FinCategory& x = s.carrier().category;
  std::vector<MorId> E, M;
  for (std::size_t i = 0; i < x.morphism_count(); ++i) {
    MorId f(i);
    auto [e, mm] = em_factorize(s, f);
    if (!in_E(s, e)) out.violations.add("factor-in-E", {f}, e);
    if (!in_M(s, mm)) out.violations.add("factor-in-M", {f}, mm);
    auto back = x.try_compose(mm, e);
    if (back != f) out.violations.add("factor-recovers", {f}, back, f);
    ++out.factorised;
    if (in_E(s, f)) E.push_back(f);
    if (in_M(s, f)) M.push_back(f);
  }
  for (MorId e : E)
    for (MorId mm : M)
      for (MorId u : x.hom(x.dom(e), x.dom(mm)))
        for (MorId v : x.hom(x.cod(e), x.cod(mm))) {
          if (x.try_compose(v, e) != x.try_compose(mm, u)) continue;
          ++out.squares;
          std::size_t fills = 0;
          for (MorId w : x.hom(x.cod(e), x.dom(mm)))
            if (x.try_compose(w, e) == u && x.try_compose(mm, w) == v) ++fills;
          if (fills == 0) out.violations.add("fill-in-exists", {e, mm, u, v});
          if (fills > 1) out.violations.add("fill-in-unique", {e, mm, u, v});
        }
  return out;
}

namespace {

// Checks that F sends canonical subunits of the source onto the subunit
// classes of the target, one to one.
void check_subunit_bijection(const TensorTopology& from, const TensorTopology& to, const Functor& F,
                             LawReport& report) {
  std::set<std::size_t> hit;
  for (const Subunit& s : from.subunits()) {
    auto cl = to.classify(F(s.mono));
    if (!cl) {
      report.add("preserves-subunits", {s.mono}, F(s.mono));
      continue;
    }
    if (!hit.insert(cl->first).second) report.add("subunits-injective", {s.mono}, F(s.mono));
  }
  if (hit.size() != to.size()) report.add("subunits-surjective", {});
}

const std::vector<std::string> kIsoEquations = {
    "forward functor preserves identities and composition",
    "backward functor preserves identities and composition",
    "forward and backward are mutually inverse",
    "unit, tensor on objects and morphisms, lambda, rho, alpha, sigma preserved",
    "subunit classes correspond one to one",
};

}  // namespace

IsoCertificate roundtrip_TS(const FinCategory& c, const MonoidalData& m) {
  SCategory S = build_s_construction(c, m);
  const Bundle& X = S.carrier();
  TotalSubcategory T = total_subcategory(X.category, *X.restriction, &*X.monoidal);
  const TensorTopology& topo = S.base().topology;
  const ObjId I = m.unit;

  IsoCertificate cert;
  cert.objects = c.object_count();
  cert.morphisms = c.morphism_count();
  cert.forward.obj_map = identity_functor(c).obj_map;
  cert.backward.obj_map = cert.forward.obj_map;
  for (std::size_t i = 0; i < c.morphism_count(); ++i) {
    std::uint32_t t = T.index_of[S.embed(MorId(i)).index];
    if (t == kUndefined) throw Error(ErrorKind::InvariantViolation, "embedded base morphism is not total");
    cert.forward.mor_map.emplace_back(t);
  }
  auto top_factor = topo.classify(c.identity(I));
  for (MorId t : T.embedding.mor_map) {
    const SPair& p = S.decode(t);
    if (p.subunit != top_factor->first)
      throw Error(ErrorKind::InvariantViolation, "total morphism with a proper subunit");
    ObjId A = p.source;
    MorId h = must(compose_chain(c, {p.under, m.tensor(c.identity(A), top_factor->second)}), "decode failed");
    cert.backward.mor_map.push_back(must(compose_chain(c, {h, is_iso(c, m.rho[A.index])}), "decode failed"));
  }
  Bundle cb{c, m, std::nullopt, std::nullopt};
  Bundle tb{T.category, T.monoidal, std::nullopt, std::nullopt};
  cert.violations = check_isomorphism(cb, tb, cert.forward, cert.backward, StructureFlags{true, false, false});
  if (cert.violations.ok()) {
    TensorTopology tt(tb.category, *tb.monoidal);
    check_subunit_bijection(topo, tt, cert.forward, cert.violations);
  }
  cert.verified = kIsoEquations;
  return cert;
}

IsoCertificate roundtrip_ST(const FinCategory& c, const MonoidalData& m, const RestrictionData& r) {
  require_firm_restriction(c, m, r);
  TRContext ctx(c, m, r);
  TRReport tr = check_TR_axioms(ctx);
  if (!tr.ok()) throw Error(ErrorKind::PrerequisiteFailed, *tr.first_failure());

  TotalSubcategory T = total_subcategory(c, r, &m);
  auto base = std::make_shared<const FirmBase>(T.category, *T.monoidal);
  SCategory ST = build_s_construction(base);

  IsoCertificate cert;
  cert.objects = c.object_count();
  cert.morphisms = c.morphism_count();
  cert.forward.obj_map = identity_functor(c).obj_map;
  cert.backward.obj_map = cert.forward.obj_map;
  auto local = [&](MorId f) {
    std::uint32_t v = T.index_of[f.index];
    if (v == kUndefined) throw Error(ErrorKind::InvariantViolation, mor_name(f) + " is not total");
    return MorId(v);
  };
  for (std::size_t i = 0; i < c.morphism_count(); ++i) {
    TRWitness w = tr_witnesses(ctx, MorId(i));
    SPair p = canonicalize_pair(*base, local(w.s_f.mono), c.dom(MorId(i)), local(w.total_part));
    cert.forward.mor_map.push_back(ST.encode(p));
  }
  for (std::size_t i = 0; i < ST.size(); ++i) {
    const SPair& p = ST.decode(MorId(i));
    MorId s = T.embedding(base->topology[p.subunit].mono);
    const auto& pts = ctx.points(c.dom(s));
    auto d = std::find_if(pts.begin(), pts.end(), [&](MorId d) { return c.try_compose(s, d) == r(d); });
    if (d == pts.end()) throw Error(ErrorKind::InvariantViolation, "subunit without a restriction section");
    ObjId A = p.source;
    cert.backward.mor_map.push_back(must(
        compose_chain(c, {T.embedding(p.under), m.tensor(c.identity(A), *d), is_iso(c, m.rho[A.index])}),
        "decode failed"));
  }
  Bundle xb{c, m, r, std::nullopt};
  Bundle sb{ST.carrier().category, ST.carrier().monoidal, ST.carrier().restriction, std::nullopt};
  cert.violations = check_isomorphism(xb, sb, cert.forward, cert.backward, StructureFlags{true, true, false});
  if (cert.violations.ok()) {
    TensorTopology st(sb.category, *sb.monoidal);
    check_subunit_bijection(ctx.topology(), st, cert.forward, cert.violations);
  }
  cert.verified = kIsoEquations;
  cert.verified.push_back("restriction preserved in both directions");
  return cert;
}

Functor s_on_functor(const SCategory& source, const SCategory& target, const Functor& F) {
  const FirmBase& a = source.base();
  const FirmBase& b = target.base();
  if (!check_functor(a.category, b.category, F).ok())
    throw Error(ErrorKind::InvalidArgument, "not a functor between the bases");
  for (std::size_t x = 0; x < a.category.object_count(); ++x)
    for (std::size_t y = 0; y < a.category.object_count(); ++y) {
      auto xy = a.monoidal.tensor(ObjId(x), ObjId(y));
      if (xy && b.monoidal.tensor(F(ObjId(x)), F(ObjId(y))) != F(*xy))
        throw Error(ErrorKind::InvalidArgument, "functor is not strict monoidal on objects");
    }
  if (F(a.monoidal.unit) != b.monoidal.unit) throw Error(ErrorKind::InvalidArgument, "functor moves the unit");
  for (const Subunit& s : a.topology.subunits())
    if (!b.topology.classify(F(s.mono)))
      throw Error(ErrorKind::NotASubunit, "functor does not preserve subunit " + mor_name(s.mono));
  Functor out;
  out.obj_map = F.obj_map;
  for (std::size_t i = 0; i < source.size(); ++i) {
    const SPair& p = source.decode(MorId(i));
    MorId s = a.topology[p.subunit].mono;
    out.mor_map.push_back(target.encode(canonicalize_pair(b, F(s), F(p.source), F(p.under))));
  }
  return out;
}

Functor t_on_functor(const FinCategory& x, const RestrictionData& rx, const FinCategory& y, const RestrictionData& ry,
                     const Functor& G) {
  TotalSubcategory tx = total_subcategory(x, rx);
  TotalSubcategory ty = total_subcategory(y, ry);
  for (std::size_t i = 0; i < x.morphism_count(); ++i)
    if (G(rx(MorId(i))) != ry(G(MorId(i))))
      throw Error(ErrorKind::InvalidArgument, "functor does not preserve restriction at " + mor_name(MorId(i)));
  Functor out;
  out.obj_map = G.obj_map;
  for (MorId f : tx.embedding.mor_map) {
    std::uint32_t v = ty.index_of[G(f).index];
    if (v == kUndefined) throw Error(ErrorKind::InvariantViolation, "total map sent to a partial one");
    out.mor_map.emplace_back(v);
  }
  return out;
}

CorestrictionData derived_range_from_birestriction(const FinCategory& c, const RestrictionData& r,
                                                   const CorestrictionData& cr) {
  if (!check_R_axioms(c, r).ok()) throw Error(ErrorKind::PrerequisiteFailed, "R");
  if (!check_CR_axioms(c, cr).ok()) throw Error(ErrorKind::PrerequisiteFailed, "CR");
  if (!check_BR_axioms(c, r, cr).ok()) throw Error(ErrorKind::PrerequisiteFailed, "BR");
  if (!check_RR_axioms(c, r, cr).ok())
    throw Error(ErrorKind::InvariantViolation, "corestriction of a birestriction category is not a range");
  return cr;
}

}  // namespace tensorrest
