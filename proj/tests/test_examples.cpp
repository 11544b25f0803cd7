#include <doctest.h>

#include "support.hpp"

using namespace tensorrest;
using namespace support;

TEST_CASE("semilattice generators") {
  for (std::size_t n = 1; n <= 8; ++n) {
    Semilattice l = chain_semilattice(n);
    CHECK(l.size == n);
    CHECK(check_semilattice_laws(l).ok());
  }
  CHECK(check_semilattice_laws(diamond_semilattice()).ok());
  CHECK(boolean_ideal_semilattice(0).size == 2);
  CHECK(boolean_ideal_semilattice(1).size == 3);
  CHECK(boolean_ideal_semilattice(2).size == 6);
  CHECK(oracle_semilattice_iso(boolean_ideal_semilattice(0), chain_semilattice(2)));
  CHECK(oracle_semilattice_iso(boolean_ideal_semilattice(1), chain_semilattice(3)));
  CHECK_THROWS_AS(boolean_ideal_semilattice(3), Error);  // 20 downsets > cap
  GeneratorLimits roomy;
  roomy.max_semilattice = 32;
  CHECK(boolean_ideal_semilattice(3, roomy).size == 20);
}

TEST_CASE("principal downsets meet as their generators") {
  // In 2^2 with atoms as bits, the principal downsets ↓x are unions of bit
  // subsets; ↓x ∩ ↓y = ↓(x & y).
  Semilattice l = boolean_ideal_semilattice(2);
  auto index_of = [](std::uint64_t set) {
    // Downsets of 2^2 in ascending bitmask order.
    const std::uint64_t all[] = {0b0000, 0b0001, 0b0011, 0b0101, 0b0111, 0b1111};
    for (std::uint32_t i = 0; i < 6; ++i)
      if (all[i] == set) return i;
    return 99u;
  };
  auto principal = [](unsigned x) {
    std::uint64_t set = 0;
    for (unsigned y = 0; y < 4; ++y)
      if ((y & x) == y) set |= 1u << y;
    return set;
  };
  for (unsigned x = 0; x < 4; ++x)
    for (unsigned y = 0; y < 4; ++y)
      CHECK(l.meet(index_of(principal(x)), index_of(principal(y))) == index_of(principal(x & y)));
}

TEST_CASE("semilattices by name") {
  CHECK(semilattice_by_name("chain3") == chain_semilattice(3));
  CHECK(semilattice_by_name("diamond") == diamond_semilattice());
  CHECK(semilattice_by_name("boolean2") == boolean_ideal_semilattice(2));
  CHECK_THROWS_AS(semilattice_by_name("chainx"), Error);
  CHECK_THROWS_AS(semilattice_by_name("chain9"), Error);
}

TEST_CASE("posetal categories") {
  Bundle one = from_semilattice(chain_semilattice(1));
  CHECK(one.category.object_count() == 1);
  CHECK(one.category.morphism_count() == 1);
  CHECK(from_semilattice(chain_semilattice(3)).category.morphism_count() == 6);
  CHECK(from_semilattice(diamond_semilattice()).category.morphism_count() == 9);
  for (const auto& [name, l] : oracle_semilattices()) {
    Bundle b = from_semilattice(l);
    CHECK_MESSAGE(check_category_laws(b.category).ok(), name);
    CHECK(check_monoidal_laws(b.category, *b.monoidal).ok());
    CHECK(is_firm(b.category, *b.monoidal));
  }
}

TEST_CASE("depressing downsets") {
  Bundle d = depressing_downsets(chain_semilattice(3));
  CHECK(d.category.morphism_count() == 22);
  Bundle one = depressing_downsets(chain_semilattice(1));
  CHECK(one.category.morphism_count() == 1);
  for (const auto& [name, l] : oracle_semilattices()) {
    Bundle b = depressing_downsets(l);
    CHECK_MESSAGE(check_category_laws(b.category).ok(), name);
    CHECK(check_R_axioms(b.category, *b.restriction).ok());
    CHECK(check_monoidal_laws(b.category, *b.monoidal).ok());
    std::size_t total = 0;
    for (std::uint32_t x = 0; x < l.size; ++x)
      for (std::uint32_t y = 0; y < l.size; ++y) {
        total += oracle_s_hom(l, x, y);
        CHECK(b.category.hom(ObjId(x), ObjId(y)).size() == oracle_s_hom(l, x, y));
      }
    CHECK(total == b.category.morphism_count());
  }
}

TEST_CASE("identities of depressing downsets are the top") {
  Semilattice l = diamond_semilattice();
  Bundle d = depressing_downsets(l);
  // Morphisms are listed per (x, y) by level; the identity x → x is the one at level ⊤.
  for (std::uint32_t x = 0; x < l.size; ++x) {
    auto hom = d.category.hom(ObjId(x), ObjId(x));
    CHECK(d.category.identity(ObjId(x)) == hom.back());
  }
}

TEST_CASE("central oracle: S[L] is the depressing-downset category") {
  for (const auto& [name, l] : oracle_semilattices()) {
    SCategory s = s_of(from_semilattice(l));
    Bundle d = depressing_downsets(l);
    auto iso = find_isomorphism(s.carrier(), d, StructureFlags{true, true, false});
    REQUIRE_MESSAGE(iso.has_value(), name);
    CHECK(check_isomorphism(s.carrier(), d, iso->first, iso->second, StructureFlags{true, true, false}).ok());
  }
}

TEST_CASE("partial functions") {
  Bundle p1 = finpar(1);
  CHECK(p1.category.object_count() == 2);
  CHECK(p1.category.hom(ObjId(1), ObjId(1)).size() == 2);
  Bundle p2 = finpar(2);
  for (std::size_t a = 0; a <= 2; ++a)
    for (std::size_t b = 0; b <= 2; ++b) CHECK(p2.category.hom(ObjId(a), ObjId(b)).size() == ipow(b + 1, a));
  CHECK(p2.category.morphism_count() == 23);
  CHECK(finpar(3).category.morphism_count() == 144);
  CHECK_THROWS_AS(finpar(4), Error);
  MorId f = finpar_morphism(2, std::vector<int>{0, -1}, 2);
  CHECK(p2.restriction->bar[f.index] == finpar_morphism(2, std::vector<int>{0, -1}, 2));
  MorId g = finpar_morphism(2, std::vector<int>{1, -1}, 2);
  CHECK(p2.restriction->bar[g.index] == finpar_morphism(2, std::vector<int>{0, -1}, 2));
  CHECK(p2.corestriction->hat[g.index] == finpar_morphism(2, std::vector<int>{-1, 1}, 2));
  CHECK(enumerate_subunits(p2.category, *p2.monoidal).size() == 2);
}

TEST_CASE("property: finpar passes R, RR and monrest, fails CR4 and TR3") {
  for (std::size_t n = 2; n <= 3; ++n) {
    Bundle p = finpar(n);
    CHECK(check_R_axioms(p.category, *p.restriction).ok());
    CHECK(check_RR_axioms(p.category, *p.restriction, *p.corestriction).ok());
    CHECK(check_monoidal_restriction(p.category, *p.monoidal, *p.restriction).ok());
    CHECK(check_CR_axioms(p.category, *p.corestriction).has("CR4"));
    CHECK_FALSE(check_TR_axioms(p.category, *p.monoidal, *p.restriction).passed(3));
  }
}

TEST_CASE("finite sets") {
  Bundle s2 = finset_monoidal(2);
  CHECK(s2.category.hom(ObjId(2), ObjId(2)).size() == 4);
  CHECK(enumerate_subunits(s2.category, *s2.monoidal).size() == 2);
  CHECK_FALSE(s2.restriction.has_value());
  // Total maps of finpar with the same tables.
  Bundle p2 = finpar(2);
  TotalSubcategory t = total_subcategory(p2.category, *p2.restriction, &*p2.monoidal);
  CHECK(t.category == s2.category);
  CHECK(*t.monoidal == *s2.monoidal);
}

TEST_CASE("cyclic groups") {
  Bundle z1 = cyclic_group_category(1);
  CHECK(z1.category.morphism_count() == 1);
  CHECK(check_monoidal_laws(z1.category, *z1.monoidal).ok());
  Bundle z2 = cyclic_group_category(2);
  CHECK(is_groupoid(z2.category));
  CHECK(enumerate_subunits(z2.category, *z2.monoidal).size() == 1);
  CHECK(find_isomorphism(s_of(z2).carrier(), z2, StructureFlags{true, false, false}).has_value());
  for (std::size_t n = 1; n <= 6; ++n) {
    Bundle z = cyclic_group_category(n);
    CHECK(check_category_laws(z.category).ok());
    CHECK(check_monoidal_laws(z.category, *z.monoidal).ok());
  }
  CHECK_THROWS_AS(cyclic_group_category(7), Error);
}

TEST_CASE("generators are deterministic") {
  CHECK(serialize(to_document(finpar(2))) == serialize(to_document(finpar(2))));
  CHECK(serialize(to_document(depressing_downsets(diamond_semilattice()))) ==
        serialize(to_document(depressing_downsets(diamond_semilattice()))));
  CHECK(from_semilattice(boolean_ideal_semilattice(2)) == from_semilattice(boolean_ideal_semilattice(2)));
}
