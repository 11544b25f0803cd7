#pragma once

// Shared fixtures and brute-force oracles for the test binaries. The
// oracles read raw tables and never call the library's own predicates, so
// agreement between the two is evidence rather than tautology.

#include <algorithm>
#include <numeric>
#include <optional>
#include <string>
#include <vector>

#include "tensorrest/tensorrest.hpp"

namespace support {

using namespace tensorrest;

struct Named {
  std::string name;
  Bundle bundle;
};

/// The firm strict bases every S-construction suite runs over.
inline std::vector<Named> bundled_bases() {
  std::vector<Named> out;
  out.push_back({"chain1", from_semilattice(chain_semilattice(1))});
  out.push_back({"chain2", from_semilattice(chain_semilattice(2))});
  out.push_back({"chain3", from_semilattice(chain_semilattice(3))});
  out.push_back({"diamond", from_semilattice(diamond_semilattice())});
  out.push_back({"boolean1", from_semilattice(boolean_ideal_semilattice(1))});
  out.push_back({"boolean2", from_semilattice(boolean_ideal_semilattice(2))});
  out.push_back({"finset2", finset_monoidal(2)});
  out.push_back({"z2", cyclic_group_category(2)});
  return out;
}

inline std::vector<std::pair<std::string, Semilattice>> oracle_semilattices() {
  return {{"chain1", chain_semilattice(1)},       {"chain2", chain_semilattice(2)},
          {"chain3", chain_semilattice(3)},       {"diamond", diamond_semilattice()},
          {"boolean1", boolean_ideal_semilattice(1)}, {"boolean2", boolean_ideal_semilattice(2)}};
}

inline SCategory s_of(const Bundle& b) { return build_s_construction(b.category, *b.monoidal); }

// ---- raw-table oracles ----------------------------------------------------

inline std::uint32_t raw_compose(const CategoryTables& t, std::uint32_t g, std::uint32_t f) {
  return t.compose[g * t.dom.size() + f];
}

/// f is monic: f∘g = f∘h forces g = h over every parallel pair into dom f.
inline bool oracle_is_mono(const CategoryTables& t, std::uint32_t f) {
  const std::size_t n = t.dom.size();
  for (std::uint32_t g = 0; g < n; ++g)
    for (std::uint32_t h = 0; h < n; ++h)
      if (g != h && t.cod[g] == t.dom[f] && t.cod[h] == t.dom[f] && t.dom[g] == t.dom[h] &&
          raw_compose(t, f, g) == raw_compose(t, f, h))
        return false;
  return true;
}

inline std::optional<std::uint32_t> oracle_inverse(const CategoryTables& t, std::uint32_t f) {
  for (std::uint32_t g = 0; g < t.dom.size(); ++g)
    if (t.dom[g] == t.cod[f] && t.cod[g] == t.dom[f] && raw_compose(t, g, f) == t.identity[t.dom[f].index].index &&
        raw_compose(t, f, g) == t.identity[t.cod[f].index].index)
      return g;
  return std::nullopt;
}

/// Counts violations of typing, units and associativity directly.
inline std::size_t oracle_category_violations(const CategoryTables& t) {
  const std::size_t n = t.dom.size();
  std::size_t bad = 0;
  for (std::size_t a = 0; a < t.object_count; ++a) {
    auto e = t.identity[a].index;
    if (t.dom[e].index != a || t.cod[e].index != a) ++bad;
  }
  for (std::uint32_t g = 0; g < n; ++g)
    for (std::uint32_t f = 0; f < n; ++f) {
      bool composable = t.cod[f] == t.dom[g];
      auto h = raw_compose(t, g, f);
      if (composable != (h != kUndefined)) ++bad;
      if (!composable || h == kUndefined) continue;
      if (t.dom[h] != t.dom[f] || t.cod[h] != t.cod[g]) ++bad;
    }
  for (std::uint32_t f = 0; f < n; ++f) {
    if (raw_compose(t, t.identity[t.cod[f].index].index, f) != f) ++bad;
    if (raw_compose(t, f, t.identity[t.dom[f].index].index) != f) ++bad;
  }
  for (std::uint32_t h = 0; h < n; ++h)
    for (std::uint32_t g = 0; g < n; ++g) {
      if (t.cod[g] != t.dom[h]) continue;
      for (std::uint32_t f = 0; f < n; ++f) {
        if (t.cod[f] != t.dom[g]) continue;
        auto l = raw_compose(t, raw_compose(t, h, g), f);
        auto r = raw_compose(t, h, raw_compose(t, g, f));
        if (l != r) ++bad;
      }
    }
  return bad;
}

/// Number of subunit classes of a strict monoidal category, by definition:
/// monos s : S → I with s ⊗ id_S invertible, up to iso over I.
inline std::size_t oracle_subunit_classes(const FinCategory& c, const MonoidalData& m) {
  const CategoryTables& t = c.tables();
  std::vector<std::uint32_t> monos;
  for (std::uint32_t s = 0; s < t.dom.size(); ++s) {
    if (t.cod[s] != m.unit || !oracle_is_mono(t, s)) continue;
    auto sd = m.tensor(MorId(s), t.identity[t.dom[s].index]);
    if (sd && oracle_inverse(t, sd->index)) monos.push_back(s);
  }
  // s ~ s' iff each factors through the other.
  auto factors = [&](std::uint32_t a, std::uint32_t b) {
    for (std::uint32_t x = 0; x < t.dom.size(); ++x)
      if (t.dom[x] == t.dom[a] && t.cod[x] == t.dom[b] && raw_compose(t, b, x) == a) return true;
    return false;
  };
  std::vector<bool> seen(monos.size(), false);
  std::size_t classes = 0;
  for (std::size_t i = 0; i < monos.size(); ++i) {
    if (seen[i]) continue;
    ++classes;
    for (std::size_t j = i; j < monos.size(); ++j)
      if (factors(monos[i], monos[j]) && factors(monos[j], monos[i])) seen[j] = true;
  }
  return classes;
}

/// |{s : x ∧ s ≤ y}|, the hom-set size of S[L] between x and y.
inline std::size_t oracle_s_hom(const Semilattice& l, std::uint32_t x, std::uint32_t y) {
  std::size_t count = 0;
  for (std::uint32_t s = 0; s < l.size; ++s)
    if (l.meet(l.meet(x, s), y) == l.meet(x, s)) ++count;
  return count;
}

/// Every g with g∘f = f̄ and f∘g = ḡ.
inline std::vector<std::uint32_t> oracle_restriction_inverses(const CategoryTables& t, const RestrictionData& r,
                                                              std::uint32_t f) {
  std::vector<std::uint32_t> out;
  for (std::uint32_t g = 0; g < t.dom.size(); ++g)
    if (t.dom[g] == t.cod[f] && t.cod[g] == t.dom[f] && raw_compose(t, g, f) == r.bar[f].index &&
        raw_compose(t, f, g) == r.bar[g].index)
      out.push_back(g);
  return out;
}

/// Semilattice isomorphism by trying every permutation.
inline bool oracle_semilattice_iso(const Semilattice& a, const Semilattice& b) {
  if (a.size != b.size) return false;
  std::vector<std::uint32_t> p(a.size);
  std::iota(p.begin(), p.end(), 0u);
  do {
    bool ok = p[a.top] == b.top;
    for (std::uint32_t x = 0; x < a.size && ok; ++x)
      for (std::uint32_t y = 0; y < a.size && ok; ++y)
        if (p[a.meet(x, y)] != b.meet(p[x], p[y])) ok = false;
    if (ok) return true;
  } while (std::next_permutation(p.begin(), p.end()));
  return false;
}

inline std::size_t ipow(std::size_t b, std::size_t e) {
  std::size_t r = 1;
  while (e--) r *= b;
  return r;
}

/// A copy of `b` with compose[g∘f] replaced.
inline Bundle with_compose(const Bundle& b, MorId g, MorId f, MorId h) {
  CategoryTables t = b.category.tables();
  t.compose[g.index * t.dom.size() + f.index] = h.index;
  Bundle out = b;
  out.category = FinCategory(std::move(t));
  return out;
}

}  // namespace support
