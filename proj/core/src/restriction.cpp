#include "tensorrest/restriction.hpp"

#include <string>

#include "tensorrest/error.hpp"

namespace tensorrest {

namespace {

void validate(const FinCategory& c, const std::vector<MorId>& table, const char* what) {
  if (table.size() != c.morphism_count())
    throw Error(ErrorKind::MalformedTables, std::string(what) + " table must have one entry per morphism");
  for (MorId f : table)
    if (!c.valid(f)) throw Error(ErrorKind::MalformedTables, std::string(what) + " entry out of range");
}

// Calls fn(f, g) for every pair with dom f = dom g.
template <typename Fn>
void for_co_span(const FinCategory& c, Fn fn) {
  for (std::size_t a = 0; a < c.object_count(); ++a)
    for (std::size_t x = 0; x < c.object_count(); ++x)
      for (MorId f : c.hom(ObjId(a), ObjId(x)))
        for (std::size_t y = 0; y < c.object_count(); ++y)
          for (MorId g : c.hom(ObjId(a), ObjId(y))) fn(f, g);
}

// Calls fn(f, g) for every pair with cod f = cod g.
template <typename Fn>
void for_span(const FinCategory& c, Fn fn) {
  for (std::size_t b = 0; b < c.object_count(); ++b)
    for (std::size_t x = 0; x < c.object_count(); ++x)
      for (MorId f : c.hom(ObjId(x), ObjId(b)))
        for (std::size_t y = 0; y < c.object_count(); ++y)
          for (MorId g : c.hom(ObjId(y), ObjId(b))) fn(f, g);
}

// Calls fn(f, g) for every composable pair, g after f.
template <typename Fn>
void for_composable(const FinCategory& c, Fn fn) {
  for (std::size_t fi = 0; fi < c.morphism_count(); ++fi)
    for (std::size_t z = 0; z < c.object_count(); ++z)
      for (MorId g : c.hom(c.cod(MorId(fi)), ObjId(z))) fn(MorId(fi), g);
}

}  // namespace

RestrictionData trivial_restriction(const FinCategory& c) {
  RestrictionData r;
  for (std::size_t i = 0; i < c.morphism_count(); ++i) r.bar.push_back(c.identity(c.dom(MorId(i))));
  return r;
}

CorestrictionData trivial_corestriction(const FinCategory& c) {
  CorestrictionData cr;
  for (std::size_t i = 0; i < c.morphism_count(); ++i) cr.hat.push_back(c.identity(c.cod(MorId(i))));
  return cr;
}

LawReport check_R_axioms(const FinCategory& c, const RestrictionData& r) {
  validate(c, r.bar, "restriction");
  LawReport report;
  for (std::size_t i = 0; i < c.morphism_count(); ++i) {
    MorId f(i);
    if (c.dom(r(f)) != c.dom(f) || c.cod(r(f)) != c.dom(f)) report.add("restriction-typing", {f}, r(f));
  }
  if (!report.ok()) return report;
  for (std::size_t i = 0; i < c.morphism_count(); ++i) {
    MorId f(i);
    auto lhs = c.try_compose(f, r(f));
    if (lhs != f) report.add("R1", {f}, lhs, f);
  }
  for_co_span(c, [&](MorId f, MorId g) {
    auto lhs = c.try_compose(r(f), r(g));
    auto rhs = c.try_compose(r(g), r(f));
    if (lhs != rhs) report.add("R2", {f, g}, lhs, rhs);
    auto gf = c.compose(g, r(f));
    auto lhs3 = r(gf);
    auto rhs3 = c.compose(r(g), r(f));
    if (lhs3 != rhs3) report.add("R3", {f, g}, lhs3, rhs3);
  });
  for_composable(c, [&](MorId f, MorId g) {
    auto lhs = c.try_compose(r(g), f);
    auto rhs = compose_chain(c, {f, r(c.compose(g, f))});
    if (lhs != rhs) report.add("R4", {f, g}, lhs, rhs);
  });
  return report;
}

LawReport check_R_consequences(const FinCategory& c, const RestrictionData& r) {
  validate(c, r.bar, "restriction");
  LawReport report;
  for (std::size_t i = 0; i < c.morphism_count(); ++i) {
    MorId f(i);
    if (r(r(f)) != r(f)) report.add("restriction-idempotent", {f}, r(r(f)), r(f));
    if (is_mono(c, f) && r(f) != c.identity(c.dom(f))) report.add("mono-total", {f}, r(f), c.identity(c.dom(f)));
  }
  for_composable(c, [&](MorId f, MorId g) {
    auto gf = c.try_compose(g, f);
    auto gbf = c.try_compose(r(g), f);
    if (!gf || !gbf) return;
    if (r(*gf) != r(*gbf)) report.add("restriction-precompose", {f, g}, r(*gf), r(*gbf));
  });
  return report;
}

LawReport check_CR_axioms(const FinCategory& c, const CorestrictionData& cr) {
  validate(c, cr.hat, "corestriction");
  LawReport report;
  for (std::size_t i = 0; i < c.morphism_count(); ++i) {
    MorId f(i);
    if (c.dom(cr(f)) != c.cod(f) || c.cod(cr(f)) != c.cod(f)) report.add("corestriction-typing", {f}, cr(f));
  }
  if (!report.ok()) return report;
  for (std::size_t i = 0; i < c.morphism_count(); ++i) {
    MorId f(i);
    auto lhs = c.try_compose(cr(f), f);
    if (lhs != f) report.add("CR1", {f}, lhs, f);
  }
  for_span(c, [&](MorId f, MorId g) {
    auto lhs = c.try_compose(cr(f), cr(g));
    auto rhs = c.try_compose(cr(g), cr(f));
    if (lhs != rhs) report.add("CR2", {f, g}, lhs, rhs);
    auto lhs3 = cr(c.compose(cr(g), f));
    auto rhs3 = c.compose(cr(g), cr(f));
    if (lhs3 != rhs3) report.add("CR3", {f, g}, lhs3, rhs3);
  });
  for_composable(c, [&](MorId f, MorId g) {
    auto lhs = c.try_compose(g, cr(f));
    auto rhs = compose_chain(c, {cr(c.compose(g, f)), g});
    if (lhs != rhs) report.add("CR4", {f, g}, lhs, rhs);
  });
  return report;
}

LawReport check_RR_axioms(const FinCategory& c, const RestrictionData& r, const CorestrictionData& range) {
  validate(c, r.bar, "restriction");
  validate(c, range.hat, "range");
  LawReport report;
  for (std::size_t i = 0; i < c.morphism_count(); ++i) {
    MorId f(i);
    if (c.dom(range(f)) != c.cod(f) || c.cod(range(f)) != c.cod(f)) report.add("range-typing", {f}, range(f));
  }
  if (!report.ok()) return report;
  for (std::size_t i = 0; i < c.morphism_count(); ++i) {
    MorId f(i);
    if (r(range(f)) != range(f)) report.add("RR1", {f}, r(range(f)), range(f));
    auto lhs = c.try_compose(range(f), f);
    if (lhs != f) report.add("RR2", {f}, lhs, f);
  }
  for_composable(c, [&](MorId f, MorId g) {
    auto lhs3 = range(c.compose(r(g), f));
    auto rhs3 = c.compose(r(g), range(f));
    if (lhs3 != rhs3) report.add("RR3", {f, g}, lhs3, rhs3);
    auto lhs4 = range(c.compose(g, range(f)));
    auto rhs4 = range(c.compose(g, f));
    if (lhs4 != rhs4) report.add("RR4", {f, g}, lhs4, rhs4);
  });
  return report;
}

LawReport check_BR_axioms(const FinCategory& c, const RestrictionData& r, const CorestrictionData& cr) {
  validate(c, r.bar, "restriction");
  validate(c, cr.hat, "corestriction");
  LawReport report;
  for (std::size_t i = 0; i < c.morphism_count(); ++i) {
    MorId f(i);
    if (c.dom(r(f)) != c.dom(f) || c.cod(r(f)) != c.dom(f)) report.add("restriction-typing", {f}, r(f));
    if (c.dom(cr(f)) != c.cod(f) || c.cod(cr(f)) != c.cod(f)) report.add("corestriction-typing", {f}, cr(f));
  }
  if (!report.ok()) return report;
  for (std::size_t i = 0; i < c.morphism_count(); ++i) {
    MorId f(i);
    if (cr(r(f)) != r(f)) report.add("BR1", {f}, cr(r(f)), r(f));
    if (r(cr(f)) != cr(f)) report.add("BR2", {f}, r(cr(f)), cr(f));
  }
  return report;
}

std::vector<MorId> restriction_idempotent_list(const FinCategory& c, const RestrictionData& r, ObjId a) {
  std::vector<MorId> out;
  for (MorId e : c.hom(a, a))
    if (r(e) == e) out.push_back(e);
  return out;
}

Semilattice restriction_idempotents(const FinCategory& c, const RestrictionData& r, ObjId a) {
  auto elems = restriction_idempotent_list(c, r, a);
  Semilattice l;
  l.size = elems.size();
  l.meet_table.resize(l.size * l.size);
  auto pos = [&](MorId e) -> std::uint32_t {
    for (std::size_t i = 0; i < elems.size(); ++i)
      if (elems[i] == e) return static_cast<std::uint32_t>(i);
    throw Error(ErrorKind::InvariantViolation, "composite of restriction idempotents is not one");
  };
  l.top = pos(c.identity(a));
  for (std::size_t i = 0; i < l.size; ++i)
    for (std::size_t j = 0; j < l.size; ++j) l.meet_table[i * l.size + j] = pos(c.compose(elems[i], elems[j]));
  return l;
}

bool is_restriction_total(const FinCategory& c, const RestrictionData& r, MorId f) {
  return r(f) == c.identity(c.dom(f));
}

TotalSubcategory total_subcategory(const FinCategory& c, const RestrictionData& r, const MonoidalData* m) {
  validate(c, r.bar, "restriction");
  TotalSubcategory out;
  const std::size_t n = c.morphism_count();
  out.index_of.assign(n, kUndefined);
  for (std::size_t i = 0; i < n; ++i) {
    if (!is_restriction_total(c, r, MorId(i))) continue;
    out.index_of[i] = static_cast<std::uint32_t>(out.embedding.mor_map.size());
    out.embedding.mor_map.emplace_back(i);
  }
  for (std::size_t a = 0; a < c.object_count(); ++a) out.embedding.obj_map.emplace_back(a);
  const std::size_t t = out.embedding.mor_map.size();
  auto local = [&](std::optional<MorId> f) -> std::uint32_t {
    if (!f) return kUndefined;
    std::uint32_t v = out.index_of[f->index];
    if (v == kUndefined)
      throw Error(ErrorKind::InvariantViolation, "m" + std::to_string(f->index) + " is not restriction-total");
    return v;
  };
  CategoryTables tables;
  tables.object_count = c.object_count();
  for (MorId f : out.embedding.mor_map) {
    tables.dom.push_back(c.dom(f));
    tables.cod.push_back(c.cod(f));
  }
  for (std::size_t a = 0; a < c.object_count(); ++a) tables.identity.emplace_back(local(c.identity(ObjId(a))));
  tables.compose.assign(t * t, kUndefined);
  for (std::size_t gi = 0; gi < t; ++gi)
    for (std::size_t fi = 0; fi < t; ++fi)
      tables.compose[gi * t + fi] = local(c.try_compose(out.embedding.mor_map[gi], out.embedding.mor_map[fi]));
  out.category = FinCategory(std::move(tables));
  if (m) {
    MonoidalData tm;
    tm.tensor_obj = m->tensor_obj;
    tm.unit = m->unit;
    tm.tensor_mor.assign(t * t, kUndefined);
    for (std::size_t fi = 0; fi < t; ++fi)
      for (std::size_t gi = 0; gi < t; ++gi)
        tm.tensor_mor[fi * t + gi] = local(m->tensor(out.embedding.mor_map[fi], out.embedding.mor_map[gi]));
    for (MorId l : m->lambda) tm.lambda.emplace_back(local(l));
    for (MorId rr : m->rho) tm.rho.emplace_back(local(rr));
    for (auto v : m->alpha) tm.alpha.push_back(v == kUndefined ? kUndefined : local(MorId(v)));
    for (auto v : m->sigma) tm.sigma.push_back(v == kUndefined ? kUndefined : local(MorId(v)));
    out.monoidal = std::move(tm);
  }
  return out;
}

std::optional<MorId> restriction_inverse(const FinCategory& c, const RestrictionData& r, MorId f) {
  std::optional<MorId> found;
  for (MorId g : c.hom(c.cod(f), c.dom(f))) {
    if (c.try_compose(g, f) == r(f) && c.try_compose(f, g) == r(g)) {
      if (found)
        throw Error(ErrorKind::InvariantViolation,
                    "m" + std::to_string(f.index) + " has two restriction inverses");
      found = g;
    }
  }
  return found;
}

bool is_inverse_category(const FinCategory& c, const RestrictionData& r) {
  for (std::size_t i = 0; i < c.morphism_count(); ++i)
    if (!restriction_inverse(c, r, MorId(i))) return false;
  return true;
}

LawReport check_monoidal_restriction(const FinCategory& c, const MonoidalData& m, const RestrictionData& r) {
  validate(c, r.bar, "restriction");
  LawReport report;
  const std::size_t n = c.morphism_count();
  for (std::size_t fi = 0; fi < n; ++fi)
    for (std::size_t gi = 0; gi < n; ++gi) {
      MorId f(fi), g(gi);
      auto fg = m.tensor(f, g);
      if (!fg) continue;
      auto rhs = m.tensor(r(f), r(g));
      if (r(*fg) != rhs) report.add("restriction-tensor", {f, g}, r(*fg), rhs);
    }
  return report;
}

MorId scalar_mult(const FinCategory& c, const MonoidalData& m, MorId a, MorId f) {
  if (c.dom(a) != m.unit || c.cod(a) != m.unit)
    throw Error(ErrorKind::InvalidArgument, "m" + std::to_string(a.index) + " is not a scalar");
  ObjId A = c.dom(f), B = c.cod(f);
  auto linv = is_iso(c, m.lambda[A.index]);
  auto out = compose_chain(c, {m.lambda[B.index], m.tensor(a, f), linv});
  if (!out) throw Error(ErrorKind::InvariantViolation, "scalar multiplication is undefined");
  return *out;
}

LawReport check_scalar_lemmas(const FinCategory& c, const MonoidalData& m, const RestrictionData& r) {
  validate(c, r.bar, "restriction");
  LawReport report;
  const ObjId I = m.unit;
  auto scalars = c.hom(I, I);
  for (MorId s : scalars) {
    if (r(r(s)) != r(s)) report.add("scalar-retract", {s}, r(r(s)), r(s));
    for (MorId t : scalars) {
      MorId st = c.compose(s, t);
      MorId rhs = c.compose(r(s), r(t));
      if (r(st) != rhs) report.add("scalar-restriction-multiplicative", {s, t}, r(st), rhs);
    }
  }
  auto oi = restriction_idempotent_list(c, r, I);
  for (std::size_t x = 0; x < c.object_count(); ++x) {
    MorId idx = c.identity(ObjId(x));
    MorId top = scalar_mult(c, m, c.identity(I), idx);
    if (top != idx) report.add("scalar-action-top", {idx}, top, idx);
    for (MorId e : oi) {
      MorId ex = scalar_mult(c, m, e, idx);
      if (r(ex) != ex) report.add("scalar-action-idempotent", {e, idx}, r(ex), ex);
      for (MorId e2 : oi) {
        MorId lhs = scalar_mult(c, m, c.compose(e, e2), idx);
        MorId rhs = c.compose(ex, scalar_mult(c, m, e2, idx));
        if (lhs != rhs) report.add("scalar-action-meet", {e, e2, idx}, lhs, rhs);
      }
    }
  }
  return report;
}

}  // namespace tensorrest
