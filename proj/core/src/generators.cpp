#include "tensorrest/generators.hpp"

#include <algorithm>
#include <string>

#include "tensorrest/error.hpp"
#include "tensorrest/sconstr.hpp"

namespace tensorrest {

namespace {

void cap(std::size_t value, std::size_t limit, const std::string& what) {
  if (value > limit)
    throw Error(ErrorKind::SizeBudgetExceeded,
                what + " " + std::to_string(value) + " exceeds the cap " + std::to_string(limit));
}

std::size_t ipow(std::size_t b, std::size_t e) {
  std::size_t r = 1;
  while (e--) r *= b;
  return r;
}

Semilattice from_meet(std::size_t n, const std::function<std::uint32_t(std::uint32_t, std::uint32_t)>& meet,
                      std::uint32_t top) {
  Semilattice l;
  l.size = n;
  l.top = top;
  l.meet_table.resize(n * n);
  for (std::uint32_t a = 0; a < n; ++a)
    for (std::uint32_t b = 0; b < n; ++b) l.meet_table[a * n + b] = meet(a, b);
  return l;
}

void require_semilattice(const Semilattice& l, const GeneratorLimits& limits) {
  if (l.size == 0) throw Error(ErrorKind::InvalidArgument, "a semilattice needs a top element");
  cap(l.size, limits.max_semilattice, "semilattice size");
  if (!check_semilattice_laws(l).ok()) throw Error(ErrorKind::InvalidArgument, "meet table is not a semilattice");
}

// Monoidal data whose coherences are identities and whose braiding is the
// identity, for categories where x ⊗ y = y ⊗ x on the nose.
void trivial_coherences(const FinCategory& c, MonoidalData& m, bool with_sigma) {
  const std::size_t k = c.object_count();
  for (std::size_t a = 0; a < k; ++a) {
    m.lambda.push_back(c.identity(ObjId(a)));
    m.rho.push_back(c.identity(ObjId(a)));
  }
  m.alpha.assign(k * k * k, kUndefined);
  for (std::size_t a = 0; a < k; ++a)
    for (std::size_t b = 0; b < k; ++b)
      for (std::size_t cc = 0; cc < k; ++cc) {
        auto bc = m.tensor(ObjId(b), ObjId(cc));
        auto ab = m.tensor(ObjId(a), ObjId(b));
        if (!bc || !ab) continue;
        auto l = m.tensor(ObjId(a), *bc);
        auto r = m.tensor(*ab, ObjId(cc));
        if (l && r && *l == *r) m.alpha[(a * k + b) * k + cc] = c.identity(*l).index;
      }
  if (with_sigma) {
    m.sigma.assign(k * k, kUndefined);
    for (std::size_t a = 0; a < k; ++a)
      for (std::size_t b = 0; b < k; ++b)
        if (auto ab = m.tensor(ObjId(a), ObjId(b))) m.sigma[a * k + b] = c.identity(*ab).index;
  }
}

// Shared builder for skeletal sets with partial (or total) functions.
struct SetMaps {
  std::size_t n;
  bool partial;
  std::vector<std::size_t> offset;  // (dom * (n+1) + cod) → first index
  std::vector<std::vector<int>> values;
  std::vector<std::size_t> dom, cod;

  SetMaps(std::size_t n_max, bool partial_maps) : n(n_max), partial(partial_maps) {
    const std::size_t k = n + 1;
    offset.resize(k * k);
    for (std::size_t a = 0; a < k; ++a)
      for (std::size_t b = 0; b < k; ++b) {
        offset[a * k + b] = values.size();
        std::size_t base = partial ? b + 1 : b;
        std::size_t count = ipow(base, a);
        for (std::size_t code = 0; code < count; ++code) {
          std::vector<int> v(a);
          std::size_t rest = code;
          for (std::size_t i = a; i-- > 0;) {
            v[i] = static_cast<int>(rest % base) - (partial ? 1 : 0);
            rest /= base;
          }
          values.push_back(std::move(v));
          dom.push_back(a);
          cod.push_back(b);
        }
      }
  }

  std::size_t index(const std::vector<int>& v, std::size_t b) const {
    const std::size_t k = n + 1;
    std::size_t base = partial ? b + 1 : b;
    std::size_t code = 0;
    for (int x : v) code = code * base + static_cast<std::size_t>(x + (partial ? 1 : 0));
    return offset[v.size() * k + b] + code;
  }
};

MorId set_morphism(std::size_t n_max, std::span<const int> values, std::size_t cod, bool partial) {
  if (values.size() > n_max || cod > n_max) throw Error(ErrorKind::InvalidArgument, "set larger than the cap");
  for (int v : values)
    if (v >= static_cast<int>(cod) || v < (partial ? -1 : 0))
      throw Error(ErrorKind::InvalidArgument, "function value out of range");
  SetMaps maps(n_max, partial);
  return MorId(maps.index(std::vector<int>(values.begin(), values.end()), cod));
}

Bundle build_sets(std::size_t n_max, bool partial, const GeneratorLimits& limits) {
  cap(n_max, limits.max_set, "set size");
  SetMaps maps(n_max, partial);
  cap(maps.values.size(), limits.max_morphisms, "morphism count");
  const std::size_t k = n_max + 1;
  const std::size_t n = maps.values.size();
  CategoryTables t;
  t.object_count = k;
  for (std::size_t i = 0; i < n; ++i) {
    t.dom.emplace_back(maps.dom[i]);
    t.cod.emplace_back(maps.cod[i]);
  }
  for (std::size_t a = 0; a < k; ++a) {
    std::vector<int> v(a);
    for (std::size_t i = 0; i < a; ++i) v[i] = static_cast<int>(i);
    t.identity.emplace_back(maps.index(v, a));
  }
  t.compose.assign(n * n, kUndefined);
  for (std::size_t g = 0; g < n; ++g)
    for (std::size_t f = 0; f < n; ++f) {
      if (maps.cod[f] != maps.dom[g]) continue;
      std::vector<int> v(maps.dom[f]);
      for (std::size_t i = 0; i < v.size(); ++i) {
        int mid = maps.values[f][i];
        v[i] = mid < 0 ? -1 : maps.values[g][static_cast<std::size_t>(mid)];
      }
      t.compose[g * n + f] = static_cast<std::uint32_t>(maps.index(v, maps.cod[g]));
    }
  Bundle out;
  out.category = FinCategory(std::move(t));
  const FinCategory& c = out.category;

  MonoidalData m;
  m.unit = ObjId(1);
  m.tensor_obj.assign(k * k, kUndefined);
  for (std::size_t a = 0; a < k; ++a)
    for (std::size_t b = 0; b < k; ++b)
      if (a * b <= n_max) m.tensor_obj[a * k + b] = static_cast<std::uint32_t>(a * b);
  m.tensor_mor.assign(n * n, kUndefined);
  for (std::size_t f = 0; f < n; ++f)
    for (std::size_t g = 0; g < n; ++g) {
      std::size_t A = maps.dom[f], B = maps.cod[f], C = maps.dom[g], D = maps.cod[g];
      if (A * C > n_max || B * D > n_max) continue;
      std::vector<int> v(A * C);
      for (std::size_t i = 0; i < A; ++i)
        for (std::size_t j = 0; j < C; ++j) {
          int x = maps.values[f][i], y = maps.values[g][j];
          v[i * C + j] = (x < 0 || y < 0) ? -1 : static_cast<int>(static_cast<std::size_t>(x) * D + static_cast<std::size_t>(y));
        }
      m.tensor_mor[f * n + g] = static_cast<std::uint32_t>(maps.index(v, B * D));
    }
  trivial_coherences(c, m, false);
  m.sigma.assign(k * k, kUndefined);
  for (std::size_t a = 0; a < k; ++a)
    for (std::size_t b = 0; b < k; ++b) {
      if (a * b > n_max) continue;
      std::vector<int> v(a * b);
      for (std::size_t i = 0; i < a; ++i)
        for (std::size_t j = 0; j < b; ++j) v[i * b + j] = static_cast<int>(j * a + i);
      m.sigma[a * k + b] = static_cast<std::uint32_t>(maps.index(v, a * b));
    }
  out.monoidal = std::move(m);

  if (partial) {
    RestrictionData r;
    CorestrictionData range;
    for (std::size_t f = 0; f < n; ++f) {
      std::vector<int> dv(maps.dom[f], -1), iv(maps.cod[f], -1);
      for (std::size_t i = 0; i < dv.size(); ++i) {
        int x = maps.values[f][i];
        if (x < 0) continue;
        dv[i] = static_cast<int>(i);
        iv[static_cast<std::size_t>(x)] = x;
      }
      r.bar.emplace_back(maps.index(dv, maps.dom[f]));
      range.hat.emplace_back(maps.index(iv, maps.cod[f]));
    }
    out.restriction = std::move(r);
    out.corestriction = std::move(range);
  }
  return out;
}

}  // namespace

Semilattice chain_semilattice(std::size_t n) {
  if (n == 0) throw Error(ErrorKind::InvalidArgument, "a chain needs at least one element");
  return from_meet(n, [](std::uint32_t a, std::uint32_t b) { return std::min(a, b); },
                   static_cast<std::uint32_t>(n - 1));
}

Semilattice diamond_semilattice() {
  // Bits: a = 1, b = 2, top = 3; meet is bitwise and.
  return from_meet(4, [](std::uint32_t a, std::uint32_t b) { return a & b; }, 3);
}

Semilattice boolean_ideal_semilattice(std::size_t k, const GeneratorLimits& limits) {
  cap(k, 4, "Boolean algebra rank");
  const std::size_t atoms = std::size_t{1} << k;
  std::vector<std::uint64_t> downsets;
  for (std::uint64_t set = 0; set < (std::uint64_t{1} << atoms); ++set) {
    bool closed = true;
    for (std::size_t x = 0; x < atoms && closed; ++x) {
      if (!(set >> x & 1)) continue;
      for (std::size_t y = 0; y < atoms; ++y)
        if ((y & x) == y && !(set >> y & 1)) {
          closed = false;
          break;
        }
    }
    if (closed) downsets.push_back(set);
    cap(downsets.size(), limits.max_semilattice, "semilattice size");
  }
  auto index = [&](std::uint64_t set) {
    return static_cast<std::uint32_t>(std::lower_bound(downsets.begin(), downsets.end(), set) - downsets.begin());
  };
  return from_meet(downsets.size(), [&](std::uint32_t a, std::uint32_t b) { return index(downsets[a] & downsets[b]); },
                   static_cast<std::uint32_t>(downsets.size() - 1));
}

Semilattice semilattice_by_name(const std::string& name, const GeneratorLimits& limits) {
  auto number = [&](std::size_t prefix) -> std::size_t {
    std::string digits = name.substr(prefix);
    if (digits.empty() || !std::all_of(digits.begin(), digits.end(), [](char ch) { return ch >= '0' && ch <= '9'; }))
      throw Error(ErrorKind::InvalidArgument, "unknown semilattice '" + name + "'");
    return std::stoul(digits);
  };
  if (name == "diamond") return diamond_semilattice();
  if (name.rfind("chain", 0) == 0) {
    std::size_t n = number(5);
    cap(n, limits.max_semilattice, "semilattice size");
    return chain_semilattice(n);
  }
  if (name.rfind("boolean", 0) == 0) return boolean_ideal_semilattice(number(7), limits);
  throw Error(ErrorKind::InvalidArgument, "unknown semilattice '" + name + "'");
}

Bundle from_semilattice(const Semilattice& l, const GeneratorLimits& limits) {
  require_semilattice(l, limits);
  const std::size_t k = l.size;
  std::vector<std::uint32_t> index(k * k, kUndefined);
  CategoryTables t;
  t.object_count = k;
  for (std::uint32_t x = 0; x < k; ++x)
    for (std::uint32_t y = 0; y < k; ++y)
      if (l.leq(x, y)) {
        index[x * k + y] = static_cast<std::uint32_t>(t.dom.size());
        t.dom.emplace_back(x);
        t.cod.emplace_back(y);
      }
  const std::size_t n = t.dom.size();
  for (std::uint32_t x = 0; x < k; ++x) t.identity.emplace_back(index[x * k + x]);
  t.compose.assign(n * n, kUndefined);
  for (std::size_t g = 0; g < n; ++g)
    for (std::size_t f = 0; f < n; ++f)
      if (t.cod[f] == t.dom[g]) t.compose[g * n + f] = index[t.dom[f].index * k + t.cod[g].index];
  MonoidalData m;
  m.unit = ObjId(l.top);
  m.tensor_obj.resize(k * k);
  for (std::uint32_t x = 0; x < k; ++x)
    for (std::uint32_t y = 0; y < k; ++y) m.tensor_obj[x * k + y] = l.meet(x, y);
  m.tensor_mor.resize(n * n);
  for (std::size_t f = 0; f < n; ++f)
    for (std::size_t g = 0; g < n; ++g)
      m.tensor_mor[f * n + g] =
          index[l.meet(t.dom[f].index, t.dom[g].index) * k + l.meet(t.cod[f].index, t.cod[g].index)];
  Bundle out;
  out.category = FinCategory(std::move(t));
  trivial_coherences(out.category, m, true);
  out.monoidal = std::move(m);
  return out;
}

Bundle depressing_downsets(const Semilattice& l, const GeneratorLimits& limits) {
  require_semilattice(l, limits);
  const std::size_t k = l.size;
  // index[(x * k + y) * k + s]
  std::vector<std::uint32_t> index(k * k * k, kUndefined);
  std::vector<std::uint32_t> level;
  CategoryTables t;
  t.object_count = k;
  for (std::uint32_t x = 0; x < k; ++x)
    for (std::uint32_t y = 0; y < k; ++y)
      for (std::uint32_t s = 0; s < k; ++s)
        if (l.leq(l.meet(x, s), y)) {
          index[(x * k + y) * k + s] = static_cast<std::uint32_t>(t.dom.size());
          t.dom.emplace_back(x);
          t.cod.emplace_back(y);
          level.push_back(s);
        }
  const std::size_t n = t.dom.size();
  cap(n, limits.max_morphisms, "morphism count");
  auto at = [&](std::uint32_t x, std::uint32_t y, std::uint32_t s) { return index[(x * k + y) * k + s]; };
  for (std::uint32_t x = 0; x < k; ++x) t.identity.emplace_back(at(x, x, l.top));
  t.compose.assign(n * n, kUndefined);
  for (std::size_t g = 0; g < n; ++g)
    for (std::size_t f = 0; f < n; ++f)
      if (t.cod[f] == t.dom[g])
        t.compose[g * n + f] = at(t.dom[f].index, t.cod[g].index, l.meet(level[f], level[g]));
  RestrictionData r;
  CorestrictionData cr;
  for (std::size_t f = 0; f < n; ++f) {
    r.bar.emplace_back(at(t.dom[f].index, t.dom[f].index, level[f]));
    cr.hat.emplace_back(at(t.cod[f].index, t.cod[f].index, level[f]));
  }
  MonoidalData m;
  m.unit = ObjId(l.top);
  m.tensor_obj.resize(k * k);
  for (std::uint32_t x = 0; x < k; ++x)
    for (std::uint32_t y = 0; y < k; ++y) m.tensor_obj[x * k + y] = l.meet(x, y);
  m.tensor_mor.resize(n * n);
  for (std::size_t f = 0; f < n; ++f)
    for (std::size_t g = 0; g < n; ++g)
      m.tensor_mor[f * n + g] = at(l.meet(t.dom[f].index, t.dom[g].index), l.meet(t.cod[f].index, t.cod[g].index),
                                   l.meet(level[f], level[g]));
  Bundle out;
  out.category = FinCategory(std::move(t));
  trivial_coherences(out.category, m, true);
  out.monoidal = std::move(m);
  out.restriction = std::move(r);
  out.corestriction = std::move(cr);
  return out;
}

Bundle finpar(std::size_t n_max, const GeneratorLimits& limits) { return build_sets(n_max, true, limits); }

Bundle finset_monoidal(std::size_t n_max, const GeneratorLimits& limits) { return build_sets(n_max, false, limits); }

MorId finpar_morphism(std::size_t n_max, std::span<const int> values, std::size_t cod) {
  return set_morphism(n_max, values, cod, true);
}

MorId finset_morphism(std::size_t n_max, std::span<const int> values, std::size_t cod) {
  return set_morphism(n_max, values, cod, false);
}

Bundle cyclic_group_category(std::size_t n, const GeneratorLimits& limits) {
  if (n == 0) throw Error(ErrorKind::InvalidArgument, "a group needs an identity");
  cap(n, limits.max_group, "group order");
  CategoryTables t;
  t.object_count = 1;
  t.dom.assign(n, ObjId(0));
  t.cod.assign(n, ObjId(0));
  t.identity = {MorId(0)};
  t.compose.resize(n * n);
  for (std::size_t g = 0; g < n; ++g)
    for (std::size_t f = 0; f < n; ++f) t.compose[g * n + f] = static_cast<std::uint32_t>((g + f) % n);
  MonoidalData m;
  m.unit = ObjId(0);
  m.tensor_obj = {0};
  m.tensor_mor = t.compose;
  Bundle out;
  out.category = FinCategory(std::move(t));
  trivial_coherences(out.category, m, true);
  out.monoidal = std::move(m);
  return out;
}

LawReport check_zero_morphisms(const FinCategory& x, const std::function<bool(MorId)>& is_zero, ObjId terminal) {
  LawReport report;
  const std::size_t k = x.object_count();
  std::vector<std::uint32_t> zero(k * k, kUndefined);
  for (std::size_t i = 0; i < x.morphism_count(); ++i) {
    MorId z(i);
    if (!is_zero(z)) continue;
    auto& slot = zero[x.dom(z).index * k + x.cod(z).index];
    if (slot != kUndefined) report.add("zero-unique", {MorId(slot), z});
    else slot = z.index;
  }
  for (std::size_t a = 0; a < k; ++a)
    for (std::size_t b = 0; b < k; ++b)
      if (zero[a * k + b] == kUndefined) report.add("zero-exists", {x.identity(ObjId(a)), x.identity(ObjId(b))});
  if (!report.ok()) return report;
  for (std::size_t i = 0; i < x.morphism_count(); ++i) {
    MorId z(i);
    if (!is_zero(z)) continue;
    for (std::size_t c = 0; c < k; ++c) {
      for (MorId f : x.hom(x.cod(z), ObjId(c))) {
        MorId expect(zero[x.dom(z).index * k + c]);
        auto got = x.try_compose(f, z);
        if (got != expect) report.add("zero-absorb-left", {f, z}, got, expect);
      }
      for (MorId f : x.hom(ObjId(c), x.dom(z))) {
        MorId expect(zero[c * k + x.cod(z).index]);
        auto got = x.try_compose(z, f);
        if (got != expect) report.add("zero-absorb-right", {z, f}, got, expect);
      }
    }
  }
  // hom(∅, ∅) holds both the identity and the zero, so ∅ is terminal
  // only for the other objects.
  for (std::size_t a = 0; a < k; ++a)
    if (ObjId(a) != terminal && x.hom(ObjId(a), terminal).size() != 1) report.add("terminal", {x.identity(ObjId(a))});
  return report;
}

LawReport free_zero_check(const SCategory& s) {
  const TensorTopology& topo = s.base().topology;
  const ObjId empty(0);
  std::optional<std::size_t> bottom;
  for (std::size_t i = 0; i < topo.size(); ++i)
    if (topo[i].domain == empty) bottom = i;
  if (!bottom) throw Error(ErrorKind::InvalidArgument, "the base has no empty subunit");
  return check_zero_morphisms(
      s.carrier().category, [&](MorId f) { return s.decode(f).subunit == *bottom; }, empty);
}

LawReport free_zero_check(std::size_t n_max, const GeneratorLimits& limits) {
  Bundle b = finset_monoidal(n_max, limits);
  return free_zero_check(build_s_construction(b.category, *b.monoidal));
}

}  // namespace tensorrest
