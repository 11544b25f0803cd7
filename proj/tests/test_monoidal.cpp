#include <doctest.h>

#include "support.hpp"

using namespace tensorrest;
using namespace support;

namespace {

// Canonical subunits of the 3-chain base, sorted by MorId: 0→1, a→1, 1→1.
constexpr std::size_t kZero = 0, kA = 1, kTop = 2;
constexpr ObjId kObjA{1u}, kObjOne{2u};

}  // namespace

TEST_CASE("monoidal laws hold on the generators") {
  Bundle chain = from_semilattice(chain_semilattice(3));
  CHECK(check_monoidal_laws(chain.category, *chain.monoidal).ok());
  Bundle par = finpar(2);
  CHECK(check_monoidal_laws(par.category, *par.monoidal).ok());
  for (const auto& [name, b] : bundled_bases()) {
    CHECK_MESSAGE(check_monoidal_laws(b.category, *b.monoidal).ok(), name);
    CHECK_MESSAGE(is_strict(b.category, *b.monoidal), name);
  }
}

TEST_CASE("a wrong braiding component breaks the hexagons") {
  Bundle z2 = cyclic_group_category(2);
  z2.monoidal->sigma[0] = 1;
  LawReport r = check_monoidal_laws(z2.category, *z2.monoidal);
  CHECK((r.has("hexagon-1") || r.has("hexagon-2")));
}

TEST_CASE("a non-natural braiding on finite sets is caught") {
  Bundle par = finpar(2);
  const std::size_t k = 3;
  par.monoidal->sigma[2 * k + 1] = finpar_morphism(2, std::vector<int>{1, 0}, 2).index;
  CHECK_FALSE(check_monoidal_laws(par.category, *par.monoidal).ok());
}

TEST_CASE("subunit counts") {
  for (const auto& [name, l] : oracle_semilattices()) {
    Bundle b = from_semilattice(l);
    CHECK_MESSAGE(enumerate_subunits(b.category, *b.monoidal).size() == l.size, name);
  }
  Bundle set2 = finset_monoidal(2);
  CHECK(enumerate_subunits(set2.category, *set2.monoidal).size() == 2);
  Bundle z2 = cyclic_group_category(2);
  CHECK(enumerate_subunits(z2.category, *z2.monoidal).size() == 1);
  Bundle par = finpar(2);
  CHECK(enumerate_subunits(par.category, *par.monoidal).size() == 2);
}

TEST_CASE("property: subunits match the definitional oracle and are deterministic") {
  std::vector<Named> cases = bundled_bases();
  cases.push_back({"finpar2", finpar(2)});
  for (const auto& [name, b] : cases) {
    auto subs = enumerate_subunits(b.category, *b.monoidal);
    CHECK_MESSAGE(subs.size() == oracle_subunit_classes(b.category, *b.monoidal), name);
    CHECK(subs == enumerate_subunits(b.category, *b.monoidal));
    CHECK(std::is_sorted(subs.begin(), subs.end(), [](const Subunit& x, const Subunit& y) { return x.mono < y.mono; }));
    for (const Subunit& s : subs) {
      const FinCategory& c = b.category;
      CHECK(c.cod(s.mono) == b.monoidal->unit);
      CHECK(oracle_is_mono(c.tables(), s.mono.index));
      auto ss = b.monoidal->tensor(s.mono, c.identity(s.domain));
      REQUIRE(ss.has_value());
      CHECK(oracle_inverse(c.tables(), ss->index).has_value());
      CHECK_MESSAGE(check_lemma_subunit_swap(c, *b.monoidal, s), name);
      // The split inverts ρ_S ∘ (S ⊗ s).
      auto rho_side = compose_chain(c, {b.monoidal->rho[s.domain.index], b.monoidal->tensor(c.identity(s.domain), s.mono)});
      REQUIRE(rho_side.has_value());
      CHECK(c.try_compose(*rho_side, s.split) == c.identity(s.domain));
      CHECK(c.try_compose(s.split, *rho_side) == c.identity(c.dom(s.split)));
    }
  }
}

TEST_CASE("the top subunit satisfies the swap lemma") {
  Bundle b = from_semilattice(chain_semilattice(3));
  TensorTopology topo(b.category, *b.monoidal);
  CHECK(topo[topo.top()].mono == b.category.identity(b.monoidal->unit));
  CHECK(check_lemma_subunit_swap(b.category, *b.monoidal, topo[topo.top()]));
}

TEST_CASE("firmness") {
  for (const auto& [name, b] : bundled_bases()) CHECK_MESSAGE(is_firm(b.category, *b.monoidal), name);
  for (std::size_t n = 1; n <= 6; ++n) {
    Bundle z = cyclic_group_category(n);
    CHECK(is_firm(z.category, *z.monoidal));
  }
  Bundle unbraided = from_semilattice(chain_semilattice(2));
  unbraided.monoidal->sigma.clear();
  CHECK_THROWS_AS(is_firm(unbraided.category, *unbraided.monoidal), Error);
}

TEST_CASE("subunit meet and order in the 3-chain") {
  Bundle b = from_semilattice(chain_semilattice(3));
  const FinCategory& c = b.category;
  const MonoidalData& m = *b.monoidal;
  TensorTopology topo(c, m);
  REQUIRE(topo.size() == 3);
  REQUIRE(topo.top() == kTop);
  for (std::size_t s = 0; s < 3; ++s) {
    CHECK(subunit_meet(c, m, topo[s], topo[kTop]) == topo[s]);
    CHECK(subunit_meet(c, m, topo[s], topo[s]) == topo[s]);
    CHECK(subunit_leq(c, m, topo[s], topo[kTop]));
  }
  CHECK(subunit_meet(c, m, topo[kA], topo[kZero]) == topo[kZero]);
  CHECK(subunit_leq(c, m, topo[kZero], topo[kA]));
  CHECK_FALSE(subunit_leq(c, m, topo[kA], topo[kZero]));
}

TEST_CASE("property: meet is a semilattice and order is the induced one") {
  for (const auto& [name, b] : bundled_bases()) {
    const FinCategory& c = b.category;
    const MonoidalData& m = *b.monoidal;
    auto subs = enumerate_subunits(c, m);
    for (const auto& s : subs)
      for (const auto& t : subs) {
        Subunit st = subunit_meet(c, m, s, t);
        CHECK_MESSAGE(st == subunit_meet(c, m, t, s), name);
        CHECK(subunit_leq(c, m, s, t) == (st == s));
        if (subunit_leq(c, m, s, t) && subunit_leq(c, m, t, s)) CHECK(s == t);
        for (const auto& u : subs)
          CHECK(subunit_meet(c, m, st, u) == subunit_meet(c, m, s, subunit_meet(c, m, t, u)));
      }
    CHECK(check_semilattice_laws(isub_semilattice(c, m)).ok());
  }
}

TEST_CASE("ISub of the generators") {
  for (const auto& [name, l] : oracle_semilattices()) {
    Bundle b = from_semilattice(l);
    Semilattice isub = isub_semilattice(b.category, *b.monoidal);
    CHECK_MESSAGE(oracle_semilattice_iso(isub, l), name);
    CHECK(find_semilattice_isomorphism(isub, l).has_value());
  }
  Bundle set2 = finset_monoidal(2);
  CHECK(oracle_semilattice_iso(isub_semilattice(set2.category, *set2.monoidal), chain_semilattice(2)));
}

TEST_CASE("tensor restriction and identities") {
  Bundle set2 = finset_monoidal(2);
  const FinCategory& c = set2.category;
  const MonoidalData& m = *set2.monoidal;
  TensorTopology topo(c, m);
  const Subunit& empty = topo[0];
  REQUIRE(empty.domain == ObjId(0));
  CHECK_FALSE(tensor_restricts(c, m, c.identity(ObjId(2)), empty));
  CHECK_FALSE(identity_restricts(c, m, m.unit, empty));
  CHECK(identity_restricts(c, m, empty.domain, empty));
  for (std::size_t a = 0; a < c.object_count(); ++a) CHECK(identity_restricts(c, m, ObjId(a), topo[topo.top()]));
}

TEST_CASE("property: tensor-restriction predicates agree") {
  for (const auto& [name, b] : bundled_bases()) {
    const FinCategory& c = b.category;
    const MonoidalData& m = *b.monoidal;
    auto subs = enumerate_subunits(c, m);
    TensorTopology topo(c, m);
    for (std::size_t f = 0; f < c.morphism_count(); ++f)
      CHECK_MESSAGE(tensor_restricts(c, m, MorId(f), topo[topo.top()]), name);
    for (const auto& s : subs) {
      CHECK(identity_restricts(c, m, s.domain, s));
      for (std::size_t a = 0; a < c.object_count(); ++a) {
        bool id = identity_restricts(c, m, ObjId(a), s);
        CHECK(id == tensor_restricts(c, m, c.identity(ObjId(a)), s));
        if (!id) continue;
        for (std::size_t bb = 0; bb < c.object_count(); ++bb)
          for (MorId f : c.hom(ObjId(a), ObjId(bb))) CHECK(tensor_restricts(c, m, f, s));
      }
      CHECK(is_tensor_total(c, m, s.mono));
    }
    for (std::size_t a = 0; a < c.object_count(); ++a) CHECK(is_tensor_total(c, m, c.identity(ObjId(a))));
  }
}

TEST_CASE("tensor-total maps in S of the 3-chain") {
  SCategory s = s_of(from_semilattice(chain_semilattice(3)));
  const Bundle& x = s.carrier();
  TensorTopology topo(x.category, *x.monoidal);
  // [a, id_a] : 1 → a tensor-restricts to the subunit a of S[3-chain].
  MorId one_to_a = s.encode(SPair{kA, kObjOne, MorId(3)});
  auto cls = topo.classify(s.embed(MorId(4)));  // [1, a → 1] is the subunit a
  REQUIRE(cls.has_value());
  CHECK(tensor_restricts(x.category, *x.monoidal, one_to_a, topo[cls->first]));
  // [0, 0 → 1] : 1 → 1 tensor-restricts to 0 while id_1 does not.
  MorId zero_on_one = s.encode(SPair{kZero, kObjOne, MorId(2)});
  CHECK_FALSE(is_tensor_total(x.category, *x.monoidal, zero_on_one));
  CHECK(is_tensor_total(x.category, *x.monoidal, x.category.identity(kObjA)));
}

TEST_CASE("duality") {
  Bundle chain = from_semilattice(chain_semilattice(3));
  CHECK(check_duality(chain.category, *chain.monoidal, chain.monoidal->unit, chain.monoidal->unit).has_value());
  CHECK_FALSE(check_duality(chain.category, *chain.monoidal, kObjA, kObjA).has_value());
  Bundle z2 = cyclic_group_category(2);
  CHECK(check_duality(z2.category, *z2.monoidal, ObjId(0), ObjId(0)).has_value());
}
