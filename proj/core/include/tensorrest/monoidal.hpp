#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <utility>
#include <vector>

#include "tensorrest/fincat.hpp"
#include "tensorrest/ids.hpp"
#include "tensorrest/law_report.hpp"
#include "tensorrest/semilattice.hpp"

namespace tensorrest {

/// Tensor and coherence data on a FinCategory with k objects and n morphisms.
///
/// Tables may be partial (kUndefined): the skeletal set models only contain
/// cardinalities up to a cap, so A ⊗ B exists only when |A|·|B| fits. Every
/// law is checked on the instances where all the tensors it mentions exist.
///
///   tensor_obj[A * k + B]        A ⊗ B
///   tensor_mor[f * n + g]        f ⊗ g
///   lambda[A]                    λ_A : I ⊗ A → A
///   rho[A]                       ρ_A : A ⊗ I → A
///   alpha[(A * k + B) * k + C]   α : A ⊗ (B ⊗ C) → (A ⊗ B) ⊗ C
///   sigma[A * k + B]             σ : A ⊗ B → B ⊗ A (empty when not braided)
struct MonoidalData {
  std::vector<std::uint32_t> tensor_obj;
  std::vector<std::uint32_t> tensor_mor;
  ObjId unit;
  std::vector<MorId> lambda;
  std::vector<MorId> rho;
  std::vector<std::uint32_t> alpha;
  std::vector<std::uint32_t> sigma;

  std::size_t object_count() const noexcept { return lambda.size(); }
  std::size_t morphism_count() const noexcept;
  bool braided() const noexcept { return !sigma.empty(); }

  std::optional<ObjId> tensor(ObjId a, ObjId b) const;
  std::optional<MorId> tensor(MorId f, MorId g) const;
  std::optional<MorId> alpha_at(ObjId a, ObjId b, ObjId c) const;
  std::optional<MorId> sigma_at(ObjId a, ObjId b) const;

  friend bool operator==(const MonoidalData&, const MonoidalData&) = default;
};

/// Throws MalformedTables when the table shapes or entries do not fit `c`.
void validate_shape(const FinCategory& c, const MonoidalData& m);

/// True iff λ, ρ and α are identity components wherever defined.
bool is_strict(const FinCategory& c, const MonoidalData& m);

/// Functoriality, naturality, invertibility, triangle, pentagon and (when
/// braided) both hexagons.
LawReport check_monoidal_laws(const FinCategory& c, const MonoidalData& m);

/// Canonical representative s : S ↣ I of a subunit class.
struct Subunit {
  MorId mono;
  ObjId domain;
  /// Inverse of λ_S ∘ (s ⊗ S) : S ⊗ S → S.
  MorId split;

  friend bool operator==(const Subunit&, const Subunit&) = default;
};

/// One canonical subunit per class, sorted by MorId.
std::vector<Subunit> enumerate_subunits(const FinCategory& c, const MonoidalData& m);

/// λ ∘ (s ⊗ S) = ρ ∘ (S ⊗ s).
bool check_lemma_subunit_swap(const FinCategory& c, const MonoidalData& m, const Subunit& s);

/// Subunits plus the lookups the rest of the library keeps asking for.
/// Holds references: `c` and `m` must outlive it.
class TensorTopology {
 public:
  TensorTopology(const FinCategory& c, const MonoidalData& m);

  const FinCategory& category() const noexcept { return *c_; }
  const MonoidalData& monoidal() const noexcept { return *m_; }

  const std::vector<Subunit>& subunits() const noexcept { return subunits_; }
  std::size_t size() const noexcept { return subunits_.size(); }
  const Subunit& operator[](std::size_t i) const { return subunits_[i]; }
  /// Index of the class of isomorphisms into I.
  std::size_t top() const noexcept { return top_; }

  /// The subunit class of a mono f : S' ↣ I and the iso m with f = s ∘ m.
  std::optional<std::pair<std::size_t, MorId>> classify(MorId f) const;

  bool firm() const noexcept { return firm_; }
  /// Throws NotFirm unless firm().
  std::size_t meet(std::size_t s, std::size_t t) const;
  /// s ≤ t iff s factors through t.
  bool leq(std::size_t s, std::size_t t) const;
  /// Throws NotFirm unless firm().
  Semilattice isub() const;

 private:
  const FinCategory* c_;
  const MonoidalData* m_;
  std::vector<Subunit> subunits_;
  std::vector<std::uint32_t> class_of_;
  std::vector<std::uint32_t> factor_;
  std::size_t top_ = 0;
  bool firm_ = false;
  std::vector<std::uint32_t> meet_;
};

/// Requires a braiding (NotBraided otherwise).
bool is_firm(const FinCategory& c, const MonoidalData& m);
Subunit subunit_meet(const FinCategory& c, const MonoidalData& m, const Subunit& s, const Subunit& t);
bool subunit_leq(const FinCategory& c, const MonoidalData& m, const Subunit& s, const Subunit& t);
Semilattice isub_semilattice(const FinCategory& c, const MonoidalData& m);

/// Some g : A → B ⊗ S with ρ_B ∘ (B ⊗ s) ∘ g = f.
bool tensor_restricts(const FinCategory& c, const MonoidalData& m, MorId f, const Subunit& s);
/// ρ_A ∘ (A ⊗ s) is invertible.
bool identity_restricts(const FinCategory& c, const MonoidalData& m, ObjId a, const Subunit& s);
bool is_tensor_total(const FinCategory& c, const MonoidalData& m, MorId f);
bool is_tensor_total(const TensorTopology& topo, MorId f);

/// Unit η : I → A* ⊗ A and counit ε : A ⊗ A* → I satisfying both snake equations.
std::optional<std::pair<MorId, MorId>> check_duality(const FinCategory& c, const MonoidalData& m, ObjId a,
                                                     ObjId astar);

}  // namespace tensorrest
