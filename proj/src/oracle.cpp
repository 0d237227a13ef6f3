#include "deltacat/oracle.hpp"

#include <algorithm>

namespace deltacat::oracle {

namespace {

std::optional<Error> bounds_check(const FinCategory& c,
                                  const EnumBounds& bounds) {
  if (c.objects.size() > bounds.max_objects ||
      c.morphisms.size() > bounds.max_morphisms) {
    return Error{ErrCode::bounds_exceeded,
                 detail::cat("category with ", c.objects.size(),
                             " objects and ", c.morphisms.size(),
                             " morphisms exceeds bounds (",
                             bounds.max_objects, ", ", bounds.max_morphisms,
                             ")")};
  }
  return std::nullopt;
}

// Odometer over one candidate list per key; the last key varies fastest, so
// successive states are lexicographic in the assembled table.
bool advance(std::vector<std::size_t>& idx,
             const std::vector<std::vector<std::string>>& candidates) {
  for (std::size_t i = idx.size(); i-- > 0;) {
    if (++idx[i] < candidates[i].size()) return true;
    idx[i] = 0;
  }
  return false;
}

template <typename Fn>
void for_each_object_map(const FinCategory& a, const FinCategory& b,
                         Fn&& fn) {
  if (!a.objects.empty() && b.objects.empty()) return;
  std::vector<std::size_t> idx(a.objects.size(), 0);
  std::vector<std::vector<std::string>> candidates(a.objects.size(),
                                                   b.objects);
  std::map<ObjId, ObjId> om;
  do {
    om.clear();
    for (std::size_t i = 0; i < a.objects.size(); ++i)
      om[a.objects[i]] = candidates[i][idx[i]];
    fn(om);
  } while (advance(idx, candidates));
}

// Depth-first sweep of every raw morphism map extending `om` that satisfies
// the functor laws. Each law is tested as soon as all of its participants
// are assigned, so failing subtrees are abandoned early; the surviving
// leaves are exactly the maps a flat generate-and-filter sweep would keep,
// visited in the same lexicographic order.
class FunctorMapSearch {
 public:
  FunctorMapSearch(const FinCategory& a, const FinCategory& b,
                   const std::map<ObjId, ObjId>& om)
      : a_(a), b_(b), om_(om) {
    for (std::size_t i = 0; i < a.morphisms.size(); ++i)
      index_[a.morphisms[i]] = i;
    triples_ready_.resize(a.morphisms.size());
    for (const auto& [key, gf] : a.table) {
      std::size_t last = std::max({index_.at(key.first), index_.at(key.second),
                                   index_.at(gf)});
      triples_ready_[last].push_back({key.first, key.second, gf});
    }
    values_.resize(a.morphisms.size());
    // Per-position required image constraints (used for the put-get law).
    forced_.resize(a.morphisms.size());
  }

  void require_image(const MorId& m, const MorId& image) {
    auto it = index_.find(m);
    if (it == index_.end()) return;
    forced_[it->second].push_back(image);
  }

  template <typename Fn>
  void run(Fn&& leaf) {
    descend(0, leaf);
  }

 private:
  bool admissible(std::size_t pos, const MorId& p) const {
    const MorId& m = a_.morphisms[pos];
    if (b_.src_of(p) != om_.at(a_.src_of(m))) return false;
    if (b_.tgt_of(p) != om_.at(a_.tgt_of(m))) return false;
    if (a_.is_identity(m) && p != b_.id_of(om_.at(a_.src_of(m)))) return false;
    for (const auto& image : forced_[pos])
      if (p != image) return false;
    for (const auto& t : triples_ready_[pos]) {
      const MorId& ig = value_of(t[0], pos, p);
      const MorId& im = value_of(t[1], pos, p);
      if (!b_.composable(ig, im)) return false;
      if (b_.comp(ig, im) != value_of(t[2], pos, p)) return false;
    }
    return true;
  }

  const MorId& value_of(const MorId& m, std::size_t pos, const MorId& p) const {
    std::size_t i = index_.at(m);
    return i == pos ? p : values_[i];
  }

  template <typename Fn>
  void descend(std::size_t pos, Fn&& leaf) {
    if (pos == a_.morphisms.size()) {
      std::map<MorId, MorId> mm;
      for (std::size_t i = 0; i < values_.size(); ++i)
        mm[a_.morphisms[i]] = values_[i];
      leaf(mm);
      return;
    }
    for (const auto& p : b_.morphisms) {
      if (!admissible(pos, p)) continue;
      values_[pos] = p;
      descend(pos + 1, leaf);
    }
  }

  const FinCategory& a_;
  const FinCategory& b_;
  const std::map<ObjId, ObjId>& om_;
  std::map<MorId, std::size_t> index_;
  std::vector<std::vector<std::array<MorId, 3>>> triples_ready_;
  std::vector<std::vector<MorId>> forced_;
  std::vector<MorId> values_;
};

bool cofunctor_table_valid(const FinCategory& a, const FinCategory& b,
                           const std::map<ObjId, ObjId>& om,
                           const LiftTable& lifts) {
  for (const auto& [key, w] : lifts) {
    if (om.at(a.tgt_of(w)) != b.tgt_of(key.second)) return false;
  }
  for (const auto& o : a.objects) {
    if (lifts.at({o, b.id_of(om.at(o))}) != a.id_of(o)) return false;
  }
  for (const auto& [key, w1] : lifts) {
    const auto& [obj, u] = key;
    for (const auto& v : b.morphisms) {
      if (!b.composable(v, u)) continue;
      const auto& w2 = lifts.at({a.tgt_of(w1), v});
      if (!a.composable(w2, w1)) return false;
      if (lifts.at({obj, b.comp(v, u)}) != a.comp(w2, w1)) return false;
    }
  }
  return true;
}

}  // namespace

Result<std::vector<Functor>> enumerate_functors(const FinCategory& a,
                                                const FinCategory& b,
                                                const EnumBounds& bounds) {
  for (const auto* c : {&a, &b})
    if (auto err = bounds_check(*c, bounds)) return *err;

  std::vector<Functor> out;
  for_each_object_map(a, b, [&](const std::map<ObjId, ObjId>& om) {
    FunctorMapSearch search(a, b, om);
    search.run([&](const std::map<MorId, MorId>& mm) {
      Functor f{a, b, om, mm};
      if (check_functor(f).ok()) out.push_back(std::move(f));
    });
  });
  return out;
}

Result<std::vector<Cofunctor>> enumerate_cofunctors(const FinCategory& a,
                                                    const FinCategory& b,
                                                    const EnumBounds& bounds) {
  for (const auto* c : {&a, &b})
    if (auto err = bounds_check(*c, bounds)) return *err;

  std::vector<Cofunctor> out;
  for_each_object_map(a, b, [&](const std::map<ObjId, ObjId>& om) {
    // Rows of the lift table under this object map, with the raw candidate
    // set for each row: the morphisms out of the keyed object.
    std::vector<LiftKey> keys;
    std::vector<std::vector<std::string>> cands;
    for (const auto& obj : a.objects) {
      for (const auto& u : b.morphisms) {
        if (b.src_of(u) != om.at(obj)) continue;
        keys.push_back({obj, u});
        cands.push_back(a.morphisms_from(obj));
      }
    }
    for (const auto& c : cands)
      if (c.empty()) return;

    std::vector<std::size_t> idx(keys.size(), 0);
    LiftTable lifts;
    do {
      lifts.clear();
      for (std::size_t i = 0; i < keys.size(); ++i)
        lifts[keys[i]] = cands[i][idx[i]];
      if (!cofunctor_table_valid(a, b, om, lifts)) continue;
      Cofunctor phi{a, b, om, lifts};
      if (check_cofunctor(phi).ok()) out.push_back(std::move(phi));
    } while (advance(idx, cands));
  });
  return out;
}

Result<std::vector<DeltaLens>> enumerate_lenses_over(const Cofunctor& phi,
                                                     const EnumBounds& bounds) {
  for (const auto* c : {&phi.source, &phi.base})
    if (auto err = bounds_check(*c, bounds)) return *err;

  const FinCategory& a = phi.source;
  const FinCategory& b = phi.base;
  std::vector<DeltaLens> out;
  FunctorMapSearch search(a, b, phi.object_map);
  for (const auto& [key, w] : phi.lifts)
    search.require_image(w, key.second);  // put-get law
  search.run([&](const std::map<MorId, MorId>& mm) {
    DeltaLens lens{Functor{a, b, phi.object_map, mm}, phi.lifts};
    if (check_lens(lens).ok()) out.push_back(std::move(lens));
  });
  return out;
}

Result<std::vector<Coalgebra>> enumerate_coalgebras(const Cofunctor& phi,
                                                    const EnumBounds& bounds) {
  for (const auto* c : {&phi.source, &phi.base})
    if (auto err = bounds_check(*c, bounds)) return *err;

  const FinCategory& a = phi.source;
  const CofreeLens cofree = cofree_lens(phi);
  const FinCategory& p = cofree.apex();
  const Cofunctor lr_phi = underlying_cofunctor(cofree.lens);

  std::vector<Coalgebra> out;
  for_each_object_map(a, p, [&](const std::map<ObjId, ObjId>& om) {
    // Object-map agreement only involves the object assignment.
    for (const auto& x : a.objects) {
      if (lr_phi.on_object(om.at(x)) != phi.on_object(x)) return;
    }
    FunctorMapSearch search(a, p, om);
    search.run([&](const std::map<MorId, MorId>& mm) {
      Functor carrier{a, p, om, mm};
      auto checked = check_coalgebra(phi, carrier);
      if (checked.value) out.push_back(std::move(*checked.value));
    });
  });
  return out;
}

}  // namespace deltacat::oracle
