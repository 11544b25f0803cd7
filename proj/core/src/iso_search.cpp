#include "tensorrest/iso_search.hpp"

#include <algorithm>
#include <map>
#include <string>
#include <vector>

#include "tensorrest/error.hpp"

namespace tensorrest {

namespace {

using Signature = std::vector<std::uint64_t>;

std::uint64_t pack(std::uint32_t a, std::uint32_t b) { return (static_cast<std::uint64_t>(a) << 32) | b; }

struct Side {
  const Bundle* b;
  const FinCategory& cat() const { return b->category; }
  std::vector<std::uint32_t> color;
};

// Invariant signature of one morphism, before any refinement.
Signature base_signature(const Bundle& b, MorId f, const StructureFlags& flags) {
  const FinCategory& c = b.category;
  ObjId A = c.dom(f), B = c.cod(f);
  std::size_t out_a = 0, in_b = 0;
  for (std::size_t x = 0; x < c.object_count(); ++x) {
    out_a += c.hom(A, ObjId(x)).size();
    in_b += c.hom(ObjId(x), B).size();
  }
  Signature s = {c.is_identity(f) ? 1u : 0u,
                 A == B ? 1u : 0u,
                 is_iso(c, f) ? 1u : 0u,
                 is_mono(c, f) ? 1u : 0u,
                 is_epi(c, f) ? 1u : 0u,
                 c.hom(A, B).size(),
                 c.hom(B, A).size(),
                 c.hom(A, A).size(),
                 c.hom(B, B).size(),
                 out_a,
                 in_b};
  if (flags.monoidal) {
    const MonoidalData& m = *b.monoidal;
    s.push_back(A == m.unit ? 1 : 0);
    s.push_back(B == m.unit ? 1 : 0);
    std::size_t defined = 0;
    for (std::size_t x = 0; x < c.object_count(); ++x) defined += m.tensor(A, ObjId(x)) ? 1 : 0;
    s.push_back(defined);
  }
  if (flags.restriction) {
    const RestrictionData& r = *b.restriction;
    s.push_back(r(f) == f ? 1 : 0);
    s.push_back(r(f) == c.identity(A) ? 1 : 0);
  }
  if (flags.corestriction) {
    const CorestrictionData& cr = *b.corestriction;
    s.push_back(cr(f) == f ? 1 : 0);
    s.push_back(cr(f) == c.identity(B) ? 1 : 0);
  }
  return s;
}

// Refines the colors of both sides jointly until the partition stabilizes.
void refine(Side& a, Side& b, const StructureFlags& flags) {
  std::map<Signature, std::uint32_t> palette;
  auto initial = [&](Side& side) {
    side.color.resize(side.cat().morphism_count());
    for (std::size_t i = 0; i < side.color.size(); ++i) {
      auto [it, _] = palette.emplace(base_signature(*side.b, MorId(i), flags), palette.size());
      side.color[i] = it->second;
    }
  };
  initial(a);
  initial(b);
  std::size_t classes = palette.size();
  for (;;) {
    std::map<Signature, std::uint32_t> next;
    auto step = [&](Side& side) {
      const FinCategory& c = side.cat();
      std::vector<std::uint32_t> out(side.color.size());
      for (std::size_t i = 0; i < side.color.size(); ++i) {
        MorId f(i);
        Signature post, pre;
        for (std::size_t x = 0; x < c.object_count(); ++x) {
          for (MorId g : c.hom(c.cod(f), ObjId(x)))
            if (auto gf = c.try_compose(g, f)) post.push_back(pack(side.color[g.index], side.color[gf->index]));
          for (MorId h : c.hom(ObjId(x), c.dom(f)))
            if (auto fh = c.try_compose(f, h)) pre.push_back(pack(side.color[h.index], side.color[fh->index]));
        }
        std::sort(post.begin(), post.end());
        std::sort(pre.begin(), pre.end());
        Signature s = {side.color[i], post.size()};
        s.insert(s.end(), post.begin(), post.end());
        s.push_back(pre.size());
        s.insert(s.end(), pre.begin(), pre.end());
        if (flags.restriction) s.push_back(side.color[(*side.b->restriction)(f).index]);
        if (flags.corestriction) s.push_back(side.color[(*side.b->corestriction)(f).index]);
        auto [it, _] = next.emplace(std::move(s), next.size());
        out[i] = it->second;
      }
      side.color = std::move(out);
    };
    step(a);
    step(b);
    if (next.size() == classes) return;
    classes = next.size();
  }
}

class Search {
 public:
  Search(const Bundle& c, const Bundle& d, StructureFlags flags, SearchOptions options)
      : c_(c), d_(d), flags_(flags), options_(options) {}

  std::optional<std::pair<Functor, Functor>> run() {
    const FinCategory& C = c_.category;
    const FinCategory& D = d_.category;
    if (C.object_count() != D.object_count() || C.morphism_count() != D.morphism_count()) return std::nullopt;
    Side a{&c_, {}}, b{&d_, {}};
    refine(a, b, flags_);
    ca_ = std::move(a.color);
    cb_ = std::move(b.color);
    {
      auto x = ca_, y = cb_;
      std::sort(x.begin(), x.end());
      std::sort(y.begin(), y.end());
      if (x != y) return std::nullopt;
    }
    mf_.assign(C.morphism_count(), kUndefined);
    mb_.assign(D.morphism_count(), kUndefined);
    of_.assign(C.object_count(), kUndefined);
    ob_.assign(D.object_count(), kUndefined);
    if (flags_.monoidal && !assign_obj(c_.monoidal->unit, d_.monoidal->unit)) return std::nullopt;
    if (!propagate()) return std::nullopt;
    if (!search()) return std::nullopt;
    Functor F, G;
    for (auto v : of_) F.obj_map.emplace_back(v);
    for (auto v : mf_) F.mor_map.emplace_back(v);
    for (auto v : ob_) G.obj_map.emplace_back(v);
    for (auto v : mb_) G.mor_map.emplace_back(v);
    return std::make_pair(std::move(F), std::move(G));
  }

 private:
  struct Undo {
    bool object;
    std::uint32_t from, to;
  };

  bool assign_mor(MorId f, MorId g) {
    if (mf_[f.index] != kUndefined) return mf_[f.index] == g.index;
    if (mb_[g.index] != kUndefined) return false;
    if (ca_[f.index] != cb_[g.index]) return false;
    mf_[f.index] = g.index;
    mb_[g.index] = f.index;
    trail_.push_back({false, f.index, g.index});
    queue_.push_back({false, f.index, g.index});
    return true;
  }

  bool assign_obj(ObjId a, ObjId b) {
    if (of_[a.index] != kUndefined) return of_[a.index] == b.index;
    if (ob_[b.index] != kUndefined) return false;
    of_[a.index] = b.index;
    ob_[b.index] = a.index;
    trail_.push_back({true, a.index, b.index});
    queue_.push_back({true, a.index, b.index});
    return true;
  }

  bool assign_opt(std::optional<MorId> f, std::optional<MorId> g) {
    if (f.has_value() != g.has_value()) return false;
    return !f || assign_mor(*f, *g);
  }

  bool assign_opt(std::optional<ObjId> a, std::optional<ObjId> b) {
    if (a.has_value() != b.has_value()) return false;
    return !a || assign_obj(*a, *b);
  }

  void undo_to(std::size_t mark) {
    while (trail_.size() > mark) {
      Undo u = trail_.back();
      trail_.pop_back();
      if (u.object) {
        of_[u.from] = kUndefined;
        ob_[u.to] = kUndefined;
      } else {
        mf_[u.from] = kUndefined;
        mb_[u.to] = kUndefined;
      }
    }
  }

  bool on_morphism(MorId f, MorId g) {
    const FinCategory& C = c_.category;
    const FinCategory& D = d_.category;
    if (!assign_obj(C.dom(f), D.dom(g)) || !assign_obj(C.cod(f), D.cod(g))) return false;
    if (flags_.restriction && !assign_mor((*c_.restriction)(f), (*d_.restriction)(g))) return false;
    if (flags_.corestriction && !assign_mor((*c_.corestriction)(f), (*d_.corestriction)(g))) return false;
    for (std::size_t x = 0; x < C.object_count(); ++x) {
      for (MorId h : C.hom(C.cod(f), ObjId(x))) {
        if (mf_[h.index] == kUndefined) continue;
        auto img = D.try_compose(MorId(mf_[h.index]), g);
        if (!img || !assign_mor(C.compose(h, f), *img)) return false;
      }
      for (MorId h : C.hom(ObjId(x), C.dom(f))) {
        if (mf_[h.index] == kUndefined) continue;
        auto img = D.try_compose(g, MorId(mf_[h.index]));
        if (!img || !assign_mor(C.compose(f, h), *img)) return false;
      }
    }
    if (flags_.monoidal) {
      const MonoidalData& mc = *c_.monoidal;
      const MonoidalData& md = *d_.monoidal;
      for (std::size_t h = 0; h < C.morphism_count(); ++h) {
        if (mf_[h] == kUndefined) continue;
        MorId hh(h), hg(mf_[h]);
        if (!assign_opt(mc.tensor(f, hh), md.tensor(g, hg))) return false;
        if (!assign_opt(mc.tensor(hh, f), md.tensor(hg, g))) return false;
      }
    }
    return true;
  }

  bool on_object(ObjId a, ObjId b) {
    const FinCategory& C = c_.category;
    const FinCategory& D = d_.category;
    if (!assign_mor(C.identity(a), D.identity(b))) return false;
    if (!flags_.monoidal) return true;
    const MonoidalData& mc = *c_.monoidal;
    const MonoidalData& md = *d_.monoidal;
    if (!assign_mor(mc.lambda[a.index], md.lambda[b.index])) return false;
    if (!assign_mor(mc.rho[a.index], md.rho[b.index])) return false;
    for (std::size_t x = 0; x < C.object_count(); ++x) {
      if (of_[x] == kUndefined) continue;
      ObjId X(x), Y(of_[x]);
      if (!assign_opt(mc.tensor(a, X), md.tensor(b, Y))) return false;
      if (!assign_opt(mc.tensor(X, a), md.tensor(Y, b))) return false;
      if (!assign_opt(mc.sigma_at(a, X), md.sigma_at(b, Y))) return false;
      if (!assign_opt(mc.sigma_at(X, a), md.sigma_at(Y, b))) return false;
      for (std::size_t z = 0; z < C.object_count(); ++z) {
        if (of_[z] == kUndefined) continue;
        ObjId Z(z), W(of_[z]);
        if (!assign_opt(mc.alpha_at(a, X, Z), md.alpha_at(b, Y, W))) return false;
        if (!assign_opt(mc.alpha_at(X, a, Z), md.alpha_at(Y, b, W))) return false;
        if (!assign_opt(mc.alpha_at(X, Z, a), md.alpha_at(Y, W, b))) return false;
      }
    }
    return true;
  }

  bool propagate() {
    while (!queue_.empty()) {
      Undo u = queue_.back();
      queue_.pop_back();
      bool ok = u.object ? on_object(ObjId(u.from), ObjId(u.to)) : on_morphism(MorId(u.from), MorId(u.to));
      if (!ok) {
        queue_.clear();
        return false;
      }
    }
    return true;
  }

  std::vector<MorId> candidates(MorId f) const {
    const FinCategory& C = c_.category;
    const FinCategory& D = d_.category;
    std::vector<MorId> out;
    for (std::size_t g = 0; g < D.morphism_count(); ++g) {
      if (mb_[g] != kUndefined || cb_[g] != ca_[f.index]) continue;
      auto dom = of_[C.dom(f).index], cod = of_[C.cod(f).index];
      if (dom != kUndefined && dom != D.dom(MorId(g)).index) continue;
      if (cod != kUndefined && cod != D.cod(MorId(g)).index) continue;
      out.emplace_back(g);
    }
    return out;
  }

  bool search() {
    std::optional<MorId> best;
    std::vector<MorId> best_cands;
    for (std::size_t f = 0; f < mf_.size(); ++f) {
      if (mf_[f] != kUndefined) continue;
      auto cands = candidates(MorId(f));
      if (!best || cands.size() < best_cands.size()) {
        best = MorId(f);
        best_cands = std::move(cands);
        if (best_cands.size() <= 1) break;
      }
    }
    if (!best) return true;
    for (MorId g : best_cands) {
      if (++nodes_ > options_.node_limit)
        throw Error(ErrorKind::SearchBudgetExceeded,
                    "isomorphism search exceeded " + std::to_string(options_.node_limit) + " nodes");
      std::size_t mark = trail_.size();
      if (assign_mor(*best, g) && propagate() && search()) return true;
      undo_to(mark);
    }
    return false;
  }

  const Bundle& c_;
  const Bundle& d_;
  StructureFlags flags_;
  SearchOptions options_;
  std::vector<std::uint32_t> ca_, cb_;
  std::vector<std::uint32_t> mf_, mb_, of_, ob_;
  std::vector<Undo> trail_, queue_;
  std::uint64_t nodes_ = 0;
};

void require(const Bundle& b, StructureFlags flags, const char* side) {
  if (flags.monoidal && !b.monoidal)
    throw Error(ErrorKind::InvalidArgument, std::string(side) + " carries no monoidal structure");
  if (flags.restriction && !b.restriction)
    throw Error(ErrorKind::InvalidArgument, std::string(side) + " carries no restriction");
  if (flags.corestriction && !b.corestriction)
    throw Error(ErrorKind::InvalidArgument, std::string(side) + " carries no corestriction");
}

void check_preserves(const Bundle& c, const Bundle& d, const Functor& F, StructureFlags flags, LawReport& report,
                     const std::string& prefix) {
  const FinCategory& C = c.category;
  if (flags.restriction) {
    for (std::size_t i = 0; i < C.morphism_count(); ++i) {
      MorId f(i);
      MorId lhs = F((*c.restriction)(f)), rhs = (*d.restriction)(F(f));
      if (lhs != rhs) report.add(prefix + "preserves-restriction", {f}, lhs, rhs);
    }
  }
  if (flags.corestriction) {
    for (std::size_t i = 0; i < C.morphism_count(); ++i) {
      MorId f(i);
      MorId lhs = F((*c.corestriction)(f)), rhs = (*d.corestriction)(F(f));
      if (lhs != rhs) report.add(prefix + "preserves-corestriction", {f}, lhs, rhs);
    }
  }
  if (flags.monoidal) {
    const MonoidalData& mc = *c.monoidal;
    const MonoidalData& md = *d.monoidal;
    auto Fo = [&](std::optional<ObjId> a) -> std::optional<ObjId> {
      if (!a) return std::nullopt;
      return F(*a);
    };
    auto Fm = [&](std::optional<MorId> f) -> std::optional<MorId> {
      if (!f) return std::nullopt;
      return F(*f);
    };
    if (F(mc.unit) != md.unit) report.add(prefix + "preserves-unit", {C.identity(mc.unit)});
    const std::size_t k = C.object_count();
    for (std::size_t a = 0; a < k; ++a) {
      ObjId A(a);
      if (F(mc.lambda[a]) != md.lambda[F(A).index])
        report.add(prefix + "preserves-lambda", {C.identity(A)}, F(mc.lambda[a]), md.lambda[F(A).index]);
      if (F(mc.rho[a]) != md.rho[F(A).index])
        report.add(prefix + "preserves-rho", {C.identity(A)}, F(mc.rho[a]), md.rho[F(A).index]);
      for (std::size_t b = 0; b < k; ++b) {
        ObjId B(b);
        if (Fo(mc.tensor(A, B)) != md.tensor(F(A), F(B)))
          report.add(prefix + "preserves-tensor-object", {C.identity(A), C.identity(B)});
        if (Fm(mc.sigma_at(A, B)) != md.sigma_at(F(A), F(B)))
          report.add(prefix + "preserves-sigma", {C.identity(A), C.identity(B)});
        for (std::size_t cc = 0; cc < k; ++cc) {
          ObjId Cc(cc);
          if (Fm(mc.alpha_at(A, B, Cc)) != md.alpha_at(F(A), F(B), F(Cc)))
            report.add(prefix + "preserves-alpha", {C.identity(A), C.identity(B), C.identity(Cc)});
        }
      }
    }
    for (std::size_t fi = 0; fi < C.morphism_count(); ++fi)
      for (std::size_t gi = 0; gi < C.morphism_count(); ++gi) {
        MorId f(fi), g(gi);
        auto lhs = Fm(mc.tensor(f, g));
        auto rhs = md.tensor(F(f), F(g));
        if (lhs != rhs) report.add(prefix + "preserves-tensor", {f, g}, lhs, rhs);
      }
  }
}

}  // namespace

std::optional<std::pair<Functor, Functor>> find_isomorphism(const Bundle& c, const Bundle& d, StructureFlags flags,
                                                            SearchOptions options) {
  require(c, flags, "source");
  require(d, flags, "target");
  return Search(c, d, flags, options).run();
}

std::optional<std::pair<Functor, Functor>> find_isomorphism(const FinCategory& c, const FinCategory& d,
                                                            SearchOptions options) {
  Bundle a{c, std::nullopt, std::nullopt, std::nullopt};
  Bundle b{d, std::nullopt, std::nullopt, std::nullopt};
  return Search(a, b, {}, options).run();
}

LawReport check_isomorphism(const Bundle& c, const Bundle& d, const Functor& f, const Functor& g,
                            StructureFlags flags) {
  require(c, flags, "source");
  require(d, flags, "target");
  LawReport report;
  if (!are_inverse(c.category, d.category, f, g)) {
    report.add("mutually-inverse", {});
    return report;
  }
  for (const auto& v : check_functor(c.category, d.category, f).violations())
    report.add(Violation{"forward-" + v.axiom, v.witness, v.lhs, v.rhs});
  for (const auto& v : check_functor(d.category, c.category, g).violations())
    report.add(Violation{"backward-" + v.axiom, v.witness, v.lhs, v.rhs});
  check_preserves(c, d, f, flags, report, "forward-");
  check_preserves(d, c, g, flags, report, "backward-");
  return report;
}

}  // namespace tensorrest
