#include "tensorrest/semilattice.hpp"

#include <algorithm>
#include <functional>

namespace tensorrest {

LawReport check_semilattice_laws(const Semilattice& l) {
  LawReport report;
  const std::uint32_t n = static_cast<std::uint32_t>(l.size);
  if (l.meet_table.size() != l.size * l.size || (n > 0 && l.top >= n)) {
    report.add("semilattice-shape", {});
    return report;
  }
  for (std::uint32_t v : l.meet_table)
    if (v >= n) {
      report.add("semilattice-shape", {});
      return report;
    }
  for (std::uint32_t a = 0; a < n; ++a) {
    if (l.meet(a, a) != a) report.add("idempotence", {MorId(a)}, MorId(l.meet(a, a)), MorId(a));
    if (l.meet(a, l.top) != a) report.add("top", {MorId(a)}, MorId(l.meet(a, l.top)), MorId(a));
    for (std::uint32_t b = 0; b < n; ++b) {
      if (l.meet(a, b) != l.meet(b, a))
        report.add("commutativity", {MorId(a), MorId(b)}, MorId(l.meet(a, b)), MorId(l.meet(b, a)));
      for (std::uint32_t c = 0; c < n; ++c) {
        std::uint32_t lhs = l.meet(l.meet(a, b), c);
        std::uint32_t rhs = l.meet(a, l.meet(b, c));
        if (lhs != rhs) report.add("associativity", {MorId(a), MorId(b), MorId(c)}, MorId(lhs), MorId(rhs));
      }
    }
  }
  return report;
}

std::optional<std::vector<std::uint32_t>> find_semilattice_isomorphism(const Semilattice& a, const Semilattice& b) {
  if (a.size != b.size) return std::nullopt;
  const std::uint32_t n = static_cast<std::uint32_t>(a.size);
  if (n == 0) return std::vector<std::uint32_t>{};
  // Elements can only correspond when their down-sets have the same size.
  auto below = [](const Semilattice& l, std::uint32_t x) {
    std::uint32_t k = 0;
    for (std::uint32_t y = 0; y < l.size; ++y) k += l.leq(y, x) ? 1 : 0;
    return k;
  };
  std::vector<std::uint32_t> da(n), db(n);
  for (std::uint32_t x = 0; x < n; ++x) {
    da[x] = below(a, x);
    db[x] = below(b, x);
  }
  std::vector<std::uint32_t> phi(n, UINT32_MAX);
  std::vector<bool> used(n, false);
  std::function<bool(std::uint32_t)> go = [&](std::uint32_t x) -> bool {
    if (x == n) {
      // Meets landing on elements assigned later were skipped; recheck in full.
      for (std::uint32_t u = 0; u < n; ++u)
        for (std::uint32_t v = 0; v < n; ++v)
          if (phi[a.meet(u, v)] != b.meet(phi[u], phi[v])) return false;
      return true;
    }
    for (std::uint32_t y = 0; y < n; ++y) {
      if (used[y] || da[x] != db[y]) continue;
      if ((x == a.top) != (y == b.top)) continue;
      phi[x] = y;
      bool ok = true;
      for (std::uint32_t z = 0; z <= x && ok; ++z) {
        std::uint32_t m = a.meet(x, z);
        if (m <= x && phi[m] != UINT32_MAX && phi[m] != b.meet(y, phi[z])) ok = false;
      }
      if (ok) {
        used[y] = true;
        if (go(x + 1)) return true;
        used[y] = false;
      }
      phi[x] = UINT32_MAX;
    }
    return false;
  };
  if (!go(0)) return std::nullopt;
  return phi;
}

}  // namespace tensorrest
