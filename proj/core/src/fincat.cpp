#include "tensorrest/fincat.hpp"

#include <algorithm>
#include <iterator>
#include <string>

#include "tensorrest/error.hpp"

namespace tensorrest {

FinCategory::FinCategory(CategoryTables tables) : tables_(std::move(tables)) {
  const std::size_t n = tables_.dom.size();
  const std::size_t k = tables_.object_count;
  if (tables_.cod.size() != n)
    throw Error(ErrorKind::MalformedTables, "dom and cod tables differ in length");
  if (tables_.identity.size() != k)
    throw Error(ErrorKind::MalformedTables, "identity table must have one entry per object");
  if (tables_.compose.size() != n * n)
    throw Error(ErrorKind::MalformedTables, "composition table must have n_morphisms^2 entries");
  for (std::size_t i = 0; i < n; ++i) {
    if (tables_.dom[i].index >= k || tables_.cod[i].index >= k)
      throw Error(ErrorKind::MalformedTables, "morphism " + std::to_string(i) + " has an out-of-range endpoint");
  }
  for (std::size_t a = 0; a < k; ++a) {
    if (tables_.identity[a].index >= n)
      throw Error(ErrorKind::MalformedTables, "identity of object " + std::to_string(a) + " is out of range");
  }
  for (std::uint32_t h : tables_.compose) {
    if (h != kUndefined && h >= n)
      throw Error(ErrorKind::MalformedTables, "composition table entry out of range");
  }
  homs_.assign(k * k, {});
  for (std::size_t i = 0; i < n; ++i)
    homs_[tables_.dom[i].index * k + tables_.cod[i].index].push_back(MorId(i));
}

std::optional<MorId> FinCategory::try_compose(MorId g, MorId f) const {
  if (cod(f) != dom(g)) return std::nullopt;
  std::uint32_t h = tables_.compose[static_cast<std::size_t>(g.index) * morphism_count() + f.index];
  if (h == kUndefined) return std::nullopt;
  return MorId(h);
}

MorId FinCategory::compose(MorId g, MorId f) const {
  auto h = try_compose(g, f);
  if (!h)
    throw Error(ErrorKind::InvariantViolation,
                "composite of m" + std::to_string(g.index) + " after m" + std::to_string(f.index) + " is undefined");
  return *h;
}

std::span<const MorId> FinCategory::hom(ObjId a, ObjId b) const {
  return homs_[static_cast<std::size_t>(a.index) * object_count() + b.index];
}

bool operator==(const FinCategory& a, const FinCategory& b) {
  return a.tables_.object_count == b.tables_.object_count && a.tables_.dom == b.tables_.dom &&
         a.tables_.cod == b.tables_.cod && a.tables_.identity == b.tables_.identity &&
         a.tables_.compose == b.tables_.compose;
}

LawReport check_category_laws(const FinCategory& c) {
  LawReport report;
  const std::size_t n = c.morphism_count();
  const auto& t = c.tables();
  auto raw = [&](std::size_t g, std::size_t f) { return t.compose[g * n + f]; };

  for (std::size_t a = 0; a < c.object_count(); ++a) {
    MorId id = c.identity(ObjId(a));
    if (c.dom(id) != ObjId(a) || c.cod(id) != ObjId(a)) report.add("identity-typing", {id});
  }
  for (std::size_t g = 0; g < n; ++g) {
    for (std::size_t f = 0; f < n; ++f) {
      bool composable = c.cod(MorId(f)) == c.dom(MorId(g));
      std::uint32_t h = raw(g, f);
      if (composable && h == kUndefined) {
        report.add("compose-defined", {MorId(g), MorId(f)});
      } else if (!composable && h != kUndefined) {
        report.add("compose-undefined", {MorId(g), MorId(f)}, std::nullopt, MorId(h));
      } else if (composable && (c.dom(MorId(h)) != c.dom(MorId(f)) || c.cod(MorId(h)) != c.cod(MorId(g)))) {
        report.add("compose-typing", {MorId(g), MorId(f)}, std::nullopt, MorId(h));
      }
    }
  }
  for (std::size_t i = 0; i < n; ++i) {
    MorId f(i);
    if (auto l = c.try_compose(c.identity(c.cod(f)), f); !l || *l != f)
      report.add("left-unit", {f}, l, f);
    if (auto r = c.try_compose(f, c.identity(c.dom(f))); !r || *r != f)
      report.add("right-unit", {f}, r, f);
  }
  for (std::size_t i = 0; i < n; ++i) {
    MorId f(i);
    for (std::size_t bj = 0; bj < c.object_count(); ++bj) {
      for (MorId g : c.hom(c.cod(f), ObjId(bj))) {
        auto gf = c.try_compose(g, f);
        if (!gf) continue;
        for (std::size_t ck = 0; ck < c.object_count(); ++ck) {
          for (MorId h : c.hom(ObjId(bj), ObjId(ck))) {
            auto hg = c.try_compose(h, g);
            if (!hg) continue;
            auto lhs = c.try_compose(*hg, f);
            auto rhs = c.try_compose(h, *gf);
            if (lhs != rhs) report.add("associativity", {h, g, f}, lhs, rhs);
          }
        }
      }
    }
  }
  return report;
}

std::optional<MorId> compose_chain(const FinCategory& c, std::initializer_list<std::optional<MorId>> factors) {
  std::optional<MorId> acc;
  bool first = true;
  for (auto it = std::rbegin(factors); it != std::rend(factors); ++it) {
    if (!*it) return std::nullopt;
    if (first) {
      acc = *it;
      first = false;
      continue;
    }
    acc = c.try_compose(**it, *acc);
    if (!acc) return std::nullopt;
  }
  return acc;
}

bool is_mono(const FinCategory& c, MorId f) {
  std::vector<MorId> seen;
  for (std::size_t x = 0; x < c.object_count(); ++x) {
    seen.clear();
    for (MorId g : c.hom(ObjId(x), c.dom(f))) {
      auto fg = c.try_compose(f, g);
      if (!fg) continue;
      seen.push_back(*fg);
    }
    std::sort(seen.begin(), seen.end());
    if (std::adjacent_find(seen.begin(), seen.end()) != seen.end()) return false;
  }
  return true;
}

bool is_epi(const FinCategory& c, MorId f) {
  std::vector<MorId> seen;
  for (std::size_t x = 0; x < c.object_count(); ++x) {
    seen.clear();
    for (MorId g : c.hom(c.cod(f), ObjId(x))) {
      auto gf = c.try_compose(g, f);
      if (!gf) continue;
      seen.push_back(*gf);
    }
    std::sort(seen.begin(), seen.end());
    if (std::adjacent_find(seen.begin(), seen.end()) != seen.end()) return false;
  }
  return true;
}

std::optional<MorId> is_iso(const FinCategory& c, MorId f) {
  MorId ida = c.identity(c.dom(f));
  MorId idb = c.identity(c.cod(f));
  for (MorId g : c.hom(c.cod(f), c.dom(f))) {
    if (c.try_compose(g, f) == ida && c.try_compose(f, g) == idb) return g;
  }
  return std::nullopt;
}

bool is_groupoid(const FinCategory& c) {
  for (std::size_t i = 0; i < c.morphism_count(); ++i)
    if (!is_iso(c, MorId(i))) return false;
  return true;
}

Functor identity_functor(const FinCategory& c) {
  Functor f;
  for (std::size_t a = 0; a < c.object_count(); ++a) f.obj_map.emplace_back(a);
  for (std::size_t i = 0; i < c.morphism_count(); ++i) f.mor_map.emplace_back(i);
  return f;
}

Functor compose_functors(const Functor& second, const Functor& first) {
  Functor r;
  for (ObjId a : first.obj_map) r.obj_map.push_back(second(a));
  for (MorId f : first.mor_map) r.mor_map.push_back(second(f));
  return r;
}

LawReport check_functor(const FinCategory& c, const FinCategory& d, const Functor& F) {
  LawReport report;
  if (F.obj_map.size() != c.object_count() || F.mor_map.size() != c.morphism_count()) {
    report.add("functor-shape", {});
    return report;
  }
  for (ObjId a : F.obj_map)
    if (!d.valid(a)) {
      report.add("functor-range", {});
      return report;
    }
  for (MorId f : F.mor_map)
    if (!d.valid(f)) {
      report.add("functor-range", {});
      return report;
    }
  for (std::size_t a = 0; a < c.object_count(); ++a) {
    MorId id = c.identity(ObjId(a));
    if (F(id) != d.identity(F(ObjId(a)))) report.add("functor-identity", {id}, F(id), d.identity(F(ObjId(a))));
  }
  for (std::size_t i = 0; i < c.morphism_count(); ++i) {
    MorId f(i);
    if (d.dom(F(f)) != F(c.dom(f)) || d.cod(F(f)) != F(c.cod(f))) report.add("functor-typing", {f});
  }
  for (std::size_t gi = 0; gi < c.morphism_count(); ++gi) {
    MorId g(gi);
    for (std::size_t x = 0; x < c.object_count(); ++x) {
      for (MorId f : c.hom(ObjId(x), c.dom(g))) {
        auto gf = c.try_compose(g, f);
        if (!gf) continue;
        auto rhs = d.try_compose(F(g), F(f));
        if (rhs != F(*gf)) report.add("functor-composition", {g, f}, F(*gf), rhs);
      }
    }
  }
  return report;
}

bool are_inverse(const FinCategory& c, const FinCategory& d, const Functor& f, const Functor& g) {
  if (f.obj_map.size() != c.object_count() || f.mor_map.size() != c.morphism_count()) return false;
  if (g.obj_map.size() != d.object_count() || g.mor_map.size() != d.morphism_count()) return false;
  auto in_range = [](const Functor& h, const FinCategory& target) {
    return std::all_of(h.obj_map.begin(), h.obj_map.end(), [&](ObjId a) { return target.valid(a); }) &&
           std::all_of(h.mor_map.begin(), h.mor_map.end(), [&](MorId m) { return target.valid(m); });
  };
  if (!in_range(f, d) || !in_range(g, c)) return false;
  return compose_functors(g, f) == identity_functor(c) && compose_functors(f, g) == identity_functor(d);
}

}  // namespace tensorrest
