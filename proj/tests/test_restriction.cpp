#include <doctest.h>

#include "support.hpp"

using namespace tensorrest;
using namespace support;

namespace {

constexpr std::uint32_t kA = 1;  // subunit a of the 3-chain base
constexpr ObjId kObjA{1u}, kObjOne{2u};

MorId par2(std::vector<int> values, std::size_t cod) { return finpar_morphism(2, values, cod); }

struct Chain3S {
  SCategory s = s_of(from_semilattice(chain_semilattice(3)));
  const Bundle& x() const { return s.carrier(); }
};

}  // namespace

TEST_CASE("R axioms") {
  for (const auto& [name, b] : bundled_bases())
    CHECK_MESSAGE(check_R_axioms(b.category, trivial_restriction(b.category)).ok(), name);
  Bundle par = finpar(2);
  CHECK(check_R_axioms(par.category, *par.restriction).ok());
  RestrictionData broken = *par.restriction;
  MorId partial = par2({-1, 1}, 2);
  broken.bar[partial.index] = par.category.identity(ObjId(2));
  // f ∘ id = f, so declaring a partial map total cannot break R1; it shows
  // up in the axioms relating f̄ to other restrictions.
  LawReport as_total = check_R_axioms(par.category, broken);
  CHECK_FALSE(as_total.ok());
  CHECK_FALSE(as_total.has("R1"));
  RestrictionData shrunk = *par.restriction;
  shrunk.bar[partial.index] = par2({-1, -1}, 2);
  CHECK(check_R_axioms(par.category, shrunk).has("R1"));
}

TEST_CASE("property: standard consequences of the R axioms") {
  Chain3S s;
  std::vector<Named> cases{{"finpar2", finpar(2)}, {"S[chain3]", s.x()}};
  for (const auto& [name, b] : bundled_bases()) cases.push_back({"S[" + name + "]", s_of(b).carrier()});
  for (const auto& [name, b] : cases) {
    CHECK_MESSAGE(check_R_axioms(b.category, *b.restriction).ok(), name);
    CHECK_MESSAGE(check_R_consequences(b.category, *b.restriction).ok(), name);
    for (std::size_t f = 0; f < b.category.morphism_count(); ++f)
      if (oracle_is_mono(b.category.tables(), f)) CHECK(is_restriction_total(b.category, *b.restriction, MorId(f)));
  }
}

TEST_CASE("CR axioms") {
  Chain3S s;
  CHECK(check_CR_axioms(s.x().category, *s.x().corestriction).ok());
  Bundle par = finpar(2);
  LawReport r = check_CR_axioms(par.category, *par.corestriction);
  CHECK(r.has("CR4"));
  Bundle z3 = cyclic_group_category(3);
  CHECK(check_CR_axioms(z3.category, trivial_corestriction(z3.category)).ok());
}

TEST_CASE("RR axioms") {
  Bundle par = finpar(2);
  CHECK(check_RR_axioms(par.category, *par.restriction, *par.corestriction).ok());
  Chain3S s;
  CHECK(check_RR_axioms(s.x().category, *s.x().restriction, *s.x().corestriction).ok());
  CorestrictionData broken = *par.corestriction;
  MorId id2 = par.category.identity(ObjId(2));
  broken.hat[id2.index] = par2({0, -1}, 2);
  CHECK(check_RR_axioms(par.category, *par.restriction, broken).has("RR2"));
}

TEST_CASE("BR axioms") {
  Chain3S s;
  CHECK(check_BR_axioms(s.x().category, *s.x().restriction, *s.x().corestriction).ok());
  Bundle par = finpar(2);
  CHECK(check_BR_axioms(par.category, *par.restriction, *par.corestriction).ok());
  CHECK_FALSE(check_CR_axioms(par.category, *par.corestriction).ok());
  Bundle z2 = cyclic_group_category(2);
  CHECK(check_BR_axioms(z2.category, trivial_restriction(z2.category), trivial_corestriction(z2.category)).ok());
}

TEST_CASE("property: birestriction implies range") {
  for (const auto& [name, b] : bundled_bases()) {
    SCategory s = s_of(b);
    const Bundle& x = s.carrier();
    REQUIRE(check_BR_axioms(x.category, *x.restriction, *x.corestriction).ok());
    CHECK_MESSAGE(check_RR_axioms(x.category, *x.restriction, *x.corestriction).ok(), name);
  }
}

TEST_CASE("restriction idempotents") {
  Bundle par = finpar(2);
  Semilattice o2 = restriction_idempotents(par.category, *par.restriction, ObjId(2));
  CHECK(o2.size == 4);
  CHECK(oracle_semilattice_iso(o2, diamond_semilattice()));
  Bundle chain = from_semilattice(chain_semilattice(3));
  for (std::size_t a = 0; a < 3; ++a)
    CHECK(restriction_idempotents(chain.category, trivial_restriction(chain.category), ObjId(a)).size == 1);
  Chain3S s;
  for (std::size_t a = 0; a < 3; ++a)
    CHECK(oracle_semilattice_iso(restriction_idempotents(s.x().category, *s.x().restriction, ObjId(a)),
                                 chain_semilattice(3)));
}

TEST_CASE("total subcategories") {
  Bundle par = finpar(2);
  for (std::size_t a = 0; a < 3; ++a)
    CHECK(is_restriction_total(par.category, *par.restriction, par.category.identity(ObjId(a))));
  TotalSubcategory t = total_subcategory(par.category, *par.restriction, &*par.monoidal);
  Bundle set2 = finset_monoidal(2);
  Bundle total{t.category, t.monoidal, std::nullopt, std::nullopt};
  CHECK(t.category.morphism_count() == set2.category.morphism_count());
  CHECK(find_isomorphism(total, set2, StructureFlags{true, false, false}).has_value());
  CHECK(check_functor(t.category, par.category, t.embedding).ok());

  Chain3S s;
  TotalSubcategory ts = total_subcategory(s.x().category, *s.x().restriction, &*s.x().monoidal);
  Bundle chain = from_semilattice(chain_semilattice(3));
  CHECK(find_isomorphism(ts.category, chain.category).has_value());
}

TEST_CASE("restriction inverses") {
  Bundle par = finpar(2);
  MorId id1 = par.category.identity(ObjId(1));
  CHECK(restriction_inverse(par.category, *par.restriction, id1) == id1);
  MorId chi1 = par2({-1, 1}, 2);
  CHECK(restriction_inverse(par.category, *par.restriction, chi1) == chi1);

  Chain3S s;
  MorId one_to_a = s.s.encode(SPair{kA, kObjOne, MorId(3)});
  MorId a_to_one = s.s.encode(SPair{kA, kObjA, MorId(4)});
  CHECK(restriction_inverse(s.x().category, *s.x().restriction, one_to_a) == a_to_one);
}

TEST_CASE("property: restriction inverses match the scan and are unique") {
  std::vector<Named> cases{{"finpar2", finpar(2)}};
  for (const auto& [name, b] : bundled_bases()) cases.push_back({"S[" + name + "]", s_of(b).carrier()});
  for (const auto& [name, b] : cases)
    for (std::size_t f = 0; f < b.category.morphism_count(); ++f) {
      auto all = oracle_restriction_inverses(b.category.tables(), *b.restriction, f);
      CHECK_MESSAGE(all.size() <= 1, name);
      auto got = restriction_inverse(b.category, *b.restriction, MorId(f));
      CHECK(got.has_value() == !all.empty());
      if (got && !all.empty()) CHECK(got->index == all[0]);
    }
}

TEST_CASE("inverse categories") {
  CHECK(is_inverse_category(s_of(cyclic_group_category(2)).carrier().category,
                            *s_of(cyclic_group_category(2)).carrier().restriction));
  Chain3S s;
  CHECK_FALSE(is_inverse_category(s.x().category, *s.x().restriction));
  Bundle par = finpar(2);
  CHECK_FALSE(is_inverse_category(par.category, *par.restriction));
  CHECK_FALSE(restriction_inverse(par.category, *par.restriction, par2({0, 0}, 1)).has_value());
}

TEST_CASE("property: S[C] is inverse exactly when C is a groupoid") {
  for (const auto& [name, b] : bundled_bases()) {
    SCategory s = s_of(b);
    CHECK_MESSAGE(is_inverse_category(s.carrier().category, *s.carrier().restriction) == is_groupoid(b.category), name);
  }
}

TEST_CASE("monoidal restriction") {
  Bundle par = finpar(2);
  CHECK(check_monoidal_restriction(par.category, *par.monoidal, *par.restriction).ok());
  Chain3S s;
  CHECK(check_monoidal_restriction(s.x().category, *s.x().monoidal, *s.x().restriction).ok());
  // Declaring χ_{0} ⊗ id_1 total breaks rest(f ⊗ g) = rest f ⊗ rest g while
  // keeping the R axioms about the changed map meaningful.
  RestrictionData broken = *par.restriction;
  MorId chi0 = par2({0, -1}, 2);
  MorId tensor = *par.monoidal->tensor(chi0, par.category.identity(ObjId(1)));
  REQUIRE(tensor == chi0);
  broken.bar[par2({0}, 2).index] = par2({-1}, 1);
  CHECK(check_monoidal_restriction(par.category, *par.monoidal, broken).has("restriction-tensor"));
}

TEST_CASE("scalar multiplication") {
  Chain3S s;
  const Bundle& x = s.x();
  const FinCategory& c = x.category;
  const MonoidalData& m = *x.monoidal;
  MorId id_unit = c.identity(m.unit);
  for (std::size_t f = 0; f < c.morphism_count(); ++f) CHECK(scalar_mult(c, m, id_unit, MorId(f)) == MorId(f));
  MorId scalar_a = s.s.encode(SPair{kA, kObjOne, MorId(4)});
  CHECK(scalar_mult(c, m, scalar_a, c.identity(kObjOne)) == scalar_a);
  CHECK(scalar_mult(c, m, scalar_a, c.identity(kObjA)) == s.s.encode(SPair{kA, kObjA, MorId(3)}));
  auto scalars = c.hom(m.unit, m.unit);
  for (MorId a : scalars)
    for (MorId b : scalars)
      for (std::size_t f = 0; f < c.morphism_count(); ++f)
        CHECK(scalar_mult(c, m, a, scalar_mult(c, m, b, MorId(f))) == scalar_mult(c, m, c.compose(a, b), MorId(f)));
}

TEST_CASE("scalar lemmas") {
  Bundle chain = from_semilattice(chain_semilattice(3));
  CHECK(check_scalar_lemmas(chain.category, *chain.monoidal, trivial_restriction(chain.category)).ok());
  Bundle par = finpar(2);
  CHECK(check_scalar_lemmas(par.category, *par.monoidal, *par.restriction).ok());
  Chain3S s;
  CHECK(check_scalar_lemmas(s.x().category, *s.x().monoidal, *s.x().restriction).ok());
}
