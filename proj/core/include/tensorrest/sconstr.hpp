#pragma once

#include <array>
#include <compare>
#include <cstdint>
#include <memory>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "tensorrest/bundle.hpp"
#include "tensorrest/fincat.hpp"
#include "tensorrest/iso_search.hpp"
#include "tensorrest/law_report.hpp"
#include "tensorrest/monoidal.hpp"
#include "tensorrest/restriction.hpp"

namespace tensorrest {

/// A strict, firm, braided monoidal category together with its subunits.
/// Lives behind a shared_ptr so the topology's references stay valid.
struct FirmBase {
  FirmBase(FinCategory c, MonoidalData m);
  FirmBase(const FirmBase&) = delete;
  FirmBase& operator=(const FirmBase&) = delete;

  FinCategory category;
  MonoidalData monoidal;
  TensorTopology topology;
};

/// A morphism of S[C]: canonical subunit `subunit`, declared source A and
/// f = `under` : A ⊗ S → B in the base.
struct SPair {
  std::uint32_t subunit = 0;
  ObjId source;
  MorId under;

  friend auto operator<=>(const SPair&, const SPair&) = default;
};

/// S[C]. Carrier MorIds enumerate canonical pairs in (subunit, under,
/// source) order; objects are those of the base.
class SCategory {
 public:
  SCategory() = default;

  const FirmBase& base() const { return *base_; }
  std::shared_ptr<const FirmBase> base_ptr() const { return base_; }
  /// Carrier with monoidal, restriction and corestriction data filled in.
  const Bundle& carrier() const { return carrier_; }

  const SPair& decode(MorId f) const { return pairs_[f.index]; }
  std::optional<MorId> find(const SPair& p) const;
  /// Throws InvariantViolation when p is not a canonical pair.
  MorId encode(const SPair& p) const;
  std::size_t size() const { return pairs_.size(); }

  /// [1, h ∘ ρ_A] for a base morphism h : A → B.
  MorId embed(MorId h) const;

 private:
  friend SCategory build_s_construction(const FinCategory&, const MonoidalData&);
  friend SCategory build_s_construction(std::shared_ptr<const FirmBase>);

  std::shared_ptr<const FirmBase> base_;
  Bundle carrier_;
  std::vector<SPair> pairs_;
  std::vector<std::uint32_t> lookup_;
};

/// Throws NotBraided, NotStrict, NotFirm or PrerequisiteFailed (monoidal laws).
SCategory build_s_construction(const FinCategory& c, const MonoidalData& m);
SCategory build_s_construction(std::shared_ptr<const FirmBase> base);

/// (s, f′ ∘ (A ⊗ m⁻¹)) for the canonical s and iso m with s′ = s ∘ m.
/// Throws NotASubunit when s′ lies in no subunit class.
SPair canonicalize_pair(const FirmBase& base, MorId raw_mono, ObjId source, MorId under);
SPair canonicalize_pair(const SCategory& s, MorId raw_mono, ObjId source, MorId under);

/// (f ⊗ S) ∘ (A ⊗ δ_s) : A ⊗ S → B ⊗ S is invertible in the base, δ_s the split of s.
bool restriction_iso_criterion(const SCategory& s, MorId f);

/// Lookups shared by the tensor-restriction checks on a firm restriction
/// category. Holds references to its arguments.
class TRContext {
 public:
  TRContext(const FinCategory& c, const MonoidalData& m, const RestrictionData& r);

  const FinCategory& category() const { return *c_; }
  const MonoidalData& monoidal() const { return *m_; }
  const RestrictionData& restriction() const { return *r_; }
  const TensorTopology& topology() const { return topo_; }

  bool tensor_total(MorId f) const { return tensor_total_[f.index]; }
  std::optional<MorId> restriction_inverse(MorId f) const;
  /// Tensor-restriction points I → X, ascending.
  const std::vector<MorId>& points(ObjId x) const { return points_[x.index]; }
  /// Every mono into I lying in a subunit class, ascending.
  const std::vector<MorId>& subunit_members() const { return members_; }
  /// (d ⊗ d′) ∘ λ_I⁻¹.
  std::optional<MorId> point_tensor(MorId d, MorId d2) const;

 private:
  const FinCategory* c_;
  const MonoidalData* m_;
  const RestrictionData* r_;
  TensorTopology topo_;
  std::vector<bool> tensor_total_;
  std::vector<std::uint32_t> rinv_;
  std::vector<std::vector<MorId>> points_;
  std::vector<MorId> members_;
  std::optional<MorId> lambda_unit_inv_;
};

std::vector<MorId> tensor_restriction_points(const FinCategory& c, const MonoidalData& m, const RestrictionData& r,
                                             ObjId x);

/// d : I → S with d̄ = s ∘ d, for any mono s : S → I.
std::vector<MorId> restriction_subunit_points(const FinCategory& c, const RestrictionData& r, MorId s);
/// The point d_s with d = d_s ∘ d̄ for every restriction-subunit point d of s.
std::optional<MorId> maximal_restriction_subunit_point(const FinCategory& c, const RestrictionData& r, MorId s);

/// Restriction-subunit points are restriction isos with inverse d̄ ∘ s; the
/// tensor of two such points is one for the meet; the tensor of maximal
/// points is maximal. Checked for every pair of canonical subunits.
LawReport check_point_lemmas(const FinCategory& c, const MonoidalData& m, const RestrictionData& r);

struct TRReport {
  /// Tags "TR1" … "TR7"; witnesses are the offending tuples.
  LawReport violations;
  /// (e, s, d) with e = s ∘ d, one per restriction idempotent scalar.
  std::vector<std::array<MorId, 3>> tr1_factorings;
  /// (d, s, f, g, m) with f = m ∘ d and g = s ∘ m.
  std::vector<std::array<MorId, 5>> tr5_fillins;

  bool passed(int axiom) const { return !violations.has("TR" + std::to_string(axiom)); }
  bool ok() const { return violations.ok(); }
  /// Lowest-numbered failing axiom.
  std::optional<std::string> first_failure() const;
};

/// Prerequisites (category, monoidal, firm, R, rest(f⊗g)) are checked first
/// and the first failing one is raised as PrerequisiteFailed. TR7 asks for
/// a scalar m with d′ = d ∘ m, unique among those with m ∘ rest(d′) = m.
TRReport check_TR_axioms(const FinCategory& c, const MonoidalData& m, const RestrictionData& r);
TRReport check_TR_axioms(const TRContext& ctx);

/// Throws PrerequisiteFailed naming the first failing suite among category,
/// monoidal, firm, R and monrest.
void require_firm_restriction(const FinCategory& c, const MonoidalData& m, const RestrictionData& r);

struct TRWitness {
  MorId e_f;
  Subunit s_f;
  MorId d_f;
  MorId total_part;
};

/// e_f with f̄ = e_f • dom f, the least subunit s_f it factors through via
/// the point d_f, and T(f) = ρ ∘ (Y ⊗ s_f) ∘ ⌈f ⊗ S_f⌉.
TRWitness tr_witnesses(const TRContext& ctx, MorId f);
TRWitness tr_witnesses(const FinCategory& c, const MonoidalData& m, const RestrictionData& r, MorId f);

/// f = m ∘ e with e = [s, id_{A⊗S}] : A → A ⊗ S and m = [1, f] : A ⊗ S → B.
std::pair<MorId, MorId> em_factorize(const SCategory& s, MorId f);
bool in_E(const SCategory& s, MorId f);
bool in_M(const SCategory& s, MorId f);

struct FactorisationReport {
  LawReport violations;
  std::size_t factorised = 0;
  std::size_t squares = 0;
};

/// Every morphism factors as M ∘ E, and every commuting square from E to M
/// has exactly one diagonal fill-in.
FactorisationReport check_factorisation_system(const SCategory& s);

/// Functor pair plus the equations that were checked.
struct IsoCertificate {
  Functor forward;
  Functor backward;
  std::size_t objects = 0;
  std::size_t morphisms = 0;
  std::vector<std::string> verified;
  LawReport violations;

  bool ok() const { return violations.ok(); }
};

/// C ≅ T[S[C]] via f ↦ [1, f ∘ ρ].
IsoCertificate roundtrip_TS(const FinCategory& c, const MonoidalData& m);
/// X ≅ S[T[X]] via F(f) = [s_f, T(f)], G[s, f] = f ∘ (A ⊗ d_s) ∘ ρ⁻¹.
IsoCertificate roundtrip_ST(const FinCategory& c, const MonoidalData& m, const RestrictionData& r);

/// S[F] : [s, f] ↦ [F s, F f] for a strict monoidal, subunit-preserving F.
Functor s_on_functor(const SCategory& source, const SCategory& target, const Functor& f);
/// T[G]: G restricted to total maps, for a restriction-preserving G.
Functor t_on_functor(const FinCategory& x, const RestrictionData& rx, const FinCategory& y,
                     const RestrictionData& ry, const Functor& g);

/// The corestriction of a birestriction category, checked to be a range operator.
CorestrictionData derived_range_from_birestriction(const FinCategory& c, const RestrictionData& r,
                                                   const CorestrictionData& cr);

}  // namespace tensorrest
