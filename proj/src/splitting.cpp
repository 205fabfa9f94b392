#include "cocart/splitting.hpp"

#include <algorithm>
#include <sstream>

namespace cocart {

namespace {

template <typename... Parts>
std::string cat_str(const Parts&... parts) {
  std::ostringstream os;
  (os << ... << parts);
  return os.str();
}

std::size_t index_in(const std::vector<Mor>& hom, Mor f, const char* what) {
  const auto it = std::find(hom.begin(), hom.end(), f);
  if (it == hom.end())
    throw InvariantViolatedError(cat_str(what, ": morphism not in the expected hom-set"));
  return static_cast<std::size_t>(it - hom.begin());
}

} // namespace

bool is_idempotent(const FinCat& c, Mor e) {
  return c.dom(e) == c.cod(e) && c.compose(e, e) == e;
}

std::vector<Idempotent> all_idempotents(const FinCat& c) {
  std::vector<Idempotent> out;
  for (std::size_t a = 0; a < c.object_count(); ++a) {
    const Obj x{static_cast<std::int32_t>(a)};
    for (const Mor e : c.hom(x, x))
      if (c.compose(e, e) == e) out.push_back(Idempotent{x, e});
  }
  return out;
}

bool check_retraction_lemma(const Idempotent& e, const FinCat& c) {
  if (!is_idempotent(c, e.endo))
    throw InvariantViolatedError("check_retraction_lemma: endomorphism is not idempotent");
  const Mor id = c.identity(e.object);
  bool has_retraction = false;
  for (const Mor r : c.hom(e.object, e.object))
    if (c.compose(r, e.endo) == id) {
      has_retraction = true;
      break;
    }
  const bool is_id = (e.endo == id);
  if (has_retraction != is_id)
    throw InvariantViolatedError(cat_str(
        "retraction lemma violated at \"", c.morphism_name(e.endo),
        "\": a retraction exists iff the idempotent is the identity"));
  return has_retraction;
}

std::optional<Splitting> split_idempotent(const Idempotent& e, const FinCat& c) {
  if (!is_idempotent(c, e.endo))
    throw InvariantViolatedError("split_idempotent: endomorphism is not idempotent");
  for (std::size_t si = 0; si < c.object_count(); ++si) {
    const Obj s{static_cast<std::int32_t>(si)};
    for (const Mor r : c.hom(e.object, s)) {
      for (const Mor sec : c.hom(s, e.object)) {
        if (c.compose(sec, r) == e.endo && c.compose(r, sec) == c.identity(s))
          return Splitting{s, r, sec};
      }
    }
  }
  return std::nullopt;
}

Mor WeakAdjunctionData::flat_at(Obj x, Obj y, Mor h) const {
  const FinCat& e_cat = *j.target;
  const std::vector<Mor> hom = e_cat.hom(j.apply(x), r.apply(y));
  const std::size_t idx = index_in(hom, h, "flat");
  return flat[static_cast<std::size_t>(x.v)][static_cast<std::size_t>(y.v)][idx];
}

ValidationReport validate_weak_adjunction(const WeakAdjunctionData& w) {
  ValidationReport report;
  const FinCat& a_cat = *w.j.source;
  const FinCat& c_cat = *w.l.target;
  const FinCat& e_cat = *w.j.target;

  if (*w.l.source != a_cat || *w.r.target != e_cat || *w.r.source != c_cat) {
    report.add("functor shapes do not form a relative adjunction triangle");
    return report;
  }
  report.merge(validate_functor(w.j), "J: ");
  report.merge(validate_functor(w.l), "L: ");
  report.merge(validate_functor(w.r), "R: ");
  if (!report.ok()) return report;

  const Functor rl = compose_functors(w.r, w.l);
  if (!(w.eta.source == w.j) || !(w.eta.target == rl)) {
    report.add("eta is not a transformation J => R.L");
    return report;
  }
  report.merge(validate_nat_trans(w.eta), "eta: ");
  if (!report.ok()) return report;

  if (w.flat.size() != a_cat.object_count()) {
    report.add("flat table has wrong outer size");
    return report;
  }

  // Typing and the section property: R(flat(h)) . eta_x = h.
  for (std::size_t xi = 0; xi < a_cat.object_count(); ++xi) {
    const Obj x{static_cast<std::int32_t>(xi)};
    if (w.flat[xi].size() != c_cat.object_count()) {
      report.add("flat table has wrong middle size");
      return report;
    }
    for (std::size_t yi = 0; yi < c_cat.object_count(); ++yi) {
      const Obj y{static_cast<std::int32_t>(yi)};
      const std::vector<Mor> hom = e_cat.hom(w.j.apply(x), w.r.apply(y));
      if (w.flat[xi][yi].size() != hom.size()) {
        report.add(cat_str("flat table at (", a_cat.objects[xi], ", ", c_cat.objects[yi],
                           ") has wrong size"));
        return report;
      }
      for (std::size_t hi = 0; hi < hom.size(); ++hi) {
        const Mor k = w.flat[xi][yi][hi];
        if (c_cat.dom(k) != w.l.apply(x) || c_cat.cod(k) != y) {
          report.add(cat_str("flat value at (", a_cat.objects[xi], ", ", c_cat.objects[yi],
                             ") is ill-typed"));
          continue;
        }
        const Mor back = e_cat.compose(w.r.apply(k), w.eta.at(x));
        if (back != hom[hi])
          report.add(cat_str("flat is not a section at (", a_cat.objects[xi], ", ",
                             c_cat.objects[yi], ") for \"", e_cat.morphism_name(hom[hi]), "\""));
      }
    }
  }
  if (!report.ok()) return report;

  // Naturality in the C variable: flat(R(c).h) = c.flat(h).
  for (std::size_t xi = 0; xi < a_cat.object_count(); ++xi) {
    const Obj x{static_cast<std::int32_t>(xi)};
    for (std::size_t ci = 0; ci < c_cat.morphism_count(); ++ci) {
      const Mor cmor{static_cast<std::int32_t>(ci)};
      const Obj y = c_cat.dom(cmor);
      const Obj y2 = c_cat.cod(cmor);
      for (const Mor h : e_cat.hom(w.j.apply(x), w.r.apply(y))) {
        const Mor lhs = w.flat_at(x, y2, e_cat.compose(w.r.apply(cmor), h));
        const Mor rhs = c_cat.compose(cmor, w.flat_at(x, y, h));
        if (lhs != rhs)
          report.add(cat_str("flat not natural in the target at (", a_cat.objects[xi], ", \"",
                             c_cat.morphism_name(cmor), "\")"));
      }
    }
  }

  // Naturality in the A variable: flat(h . J(a)) = flat(h) . L(a).
  for (std::size_t ai = 0; ai < a_cat.morphism_count(); ++ai) {
    const Mor amor{static_cast<std::int32_t>(ai)};
    const Obj x2 = a_cat.dom(amor);
    const Obj x = a_cat.cod(amor);
    for (std::size_t yi = 0; yi < c_cat.object_count(); ++yi) {
      const Obj y{static_cast<std::int32_t>(yi)};
      for (const Mor h : e_cat.hom(w.j.apply(x), w.r.apply(y))) {
        const Mor lhs = w.flat_at(x2, y, e_cat.compose(h, w.j.apply(amor)));
        const Mor rhs = c_cat.compose(w.flat_at(x, y, h), w.l.apply(amor));
        if (lhs != rhs)
          report.add(cat_str("flat not natural in the source at (\"", a_cat.morphism_name(amor),
                             "\", ", c_cat.objects[yi], ")"));
      }
    }
  }
  return report;
}

Idempotent weak_adjunction_idempotent(const WeakAdjunctionData& w, Obj x) {
  const FinCat& c_cat = *w.l.target;
  const Obj lx = w.l.apply(x);
  const Mor e = w.flat_at(x, lx, w.eta.at(x));
  if (!is_idempotent(c_cat, e))
    throw InvariantViolatedError(
        cat_str("flat_{X,LX}(eta_X) at \"", w.j.source->object_name(x),
                "\" is not idempotent; the weak adjunction data violates its contract"));
  return Idempotent{lx, e};
}

namespace {

std::optional<std::size_t> cocone_index(const std::vector<std::pair<Obj, std::vector<Mor>>>& all,
                                        Obj apex, const std::vector<Mor>& legs) {
  for (std::size_t i = 0; i < all.size(); ++i)
    if (all[i].first == apex && all[i].second == legs) return i;
  return std::nullopt;
}

} // namespace

ValidationReport validate_weak_colimit(const WeakColimitData& w) {
  ValidationReport report;
  const FinCat& shape = *w.diagram.source;
  const FinCat& m = *w.diagram.target;
  report.merge(validate_functor(w.diagram), "diagram: ");
  if (!report.ok()) return report;

  if (w.cocone.size() != shape.object_count()) {
    report.add("cocone has wrong number of legs");
    return report;
  }
  const auto all = enumerate_cocones(w.diagram);
  const auto own = cocone_index(all, w.apex, w.cocone);
  if (!own) {
    report.add("the stated cocone does not commute with the diagram");
    return report;
  }
  if (w.mediators.size() != all.size()) {
    report.add(cat_str("mediator table has ", w.mediators.size(), " entries for ", all.size(),
                       " cocones"));
    return report;
  }

  for (std::size_t i = 0; i < all.size(); ++i) {
    const auto& [x, legs] = all[i];
    const Mor med = w.mediators[i];
    if (m.dom(med) != w.apex || m.cod(med) != x) {
      report.add(cat_str("mediator ", i, " is ill-typed"));
      continue;
    }
    for (std::size_t jj = 0; jj < legs.size(); ++jj)
      if (m.compose(med, w.cocone[jj]) != legs[jj])
        report.add(cat_str("mediator ", i, " does not factor leg ", jj));
  }
  if (!report.ok()) return report;

  // Naturality of the mediator choice in the cocone target.
  for (std::size_t i = 0; i < all.size(); ++i) {
    const auto& [x, legs] = all[i];
    for (std::size_t ti = 0; ti < m.morphism_count(); ++ti) {
      const Mor t{static_cast<std::int32_t>(ti)};
      if (m.dom(t) != x) continue;
      std::vector<Mor> moved(legs.size());
      for (std::size_t jj = 0; jj < legs.size(); ++jj) moved[jj] = m.compose(t, legs[jj]);
      const auto target = cocone_index(all, m.cod(t), moved);
      if (!target) {
        report.add("cocone enumeration is not closed under postcomposition");
        continue;
      }
      if (w.mediators[*target] != m.compose(t, w.mediators[i]))
        report.add(cat_str("mediator choice not natural at cocone ", i, " along \"",
                           m.morphism_name(t), "\""));
    }
  }
  return report;
}

std::optional<std::pair<Obj, std::vector<Mor>>> colimit_from_weak(const WeakColimitData& w) {
  const FinCat& shape = *w.diagram.source;
  const FinCat& m = *w.diagram.target;
  const auto all = enumerate_cocones(w.diagram);
  const auto own = cocone_index(all, w.apex, w.cocone);
  if (!own) throw InvariantViolatedError("colimit_from_weak: stated cocone does not commute");

  const Mor e = w.mediators[*own];
  if (!is_idempotent(m, e))
    throw InvariantViolatedError(
        "colimit_from_weak: the canonical endomorphism is not idempotent");

  const auto split = split_idempotent(Idempotent{w.apex, e}, m);
  if (!split) return std::nullopt;

  std::vector<Mor> legs(w.cocone.size());
  for (std::size_t jj = 0; jj < legs.size(); ++jj)
    legs[jj] = m.compose(split->retraction, w.cocone[jj]);

  if (!is_colimit(w.diagram, split->summand, legs))
    throw InvariantViolatedError("colimit_from_weak: split cocone fails the colimit oracle");

  // Cross-check against the special-shape oracles.
  if (shape.object_count() == 0) {
    if (!is_initial(m, split->summand))
      throw InvariantViolatedError("colimit_from_weak: empty-diagram result is not initial");
  } else if (shape.object_count() == 2 && shape.morphism_count() == 2) {
    if (!is_coproduct(m, Cospan{split->summand, legs[0], legs[1]}))
      throw InvariantViolatedError("colimit_from_weak: binary result is not a coproduct");
  }
  return std::make_pair(split->summand, std::move(legs));
}

Obj KaroubiEnvelope::object_for(Obj base_obj, Mor idem) const {
  const auto it = object_index_.find({base_obj.v, idem.v});
  if (it == object_index_.end())
    throw InvariantViolatedError("karoubi: no envelope object for the given idempotent");
  return it->second;
}

Mor KaroubiEnvelope::morphism_for(Obj env_src, Obj env_dst, Mor base_mor) const {
  const auto it = morphism_index_.find({env_src.v, env_dst.v, base_mor.v});
  if (it == morphism_index_.end())
    throw InvariantViolatedError("karoubi: no envelope morphism for the given data");
  return it->second;
}

KaroubiEnvelope karoubi_envelope(CatRef c) {
  KaroubiEnvelope env;
  env.object_data = all_idempotents(*c);

  auto out = std::make_shared<FinCat>();
  for (std::size_t i = 0; i < env.object_data.size(); ++i) {
    const auto& [a, e] = env.object_data[i];
    out->objects.push_back(
        cat_str("(", c->object_name(a), "|", c->morphism_name(e), ")"));
    env.object_index_[{a.v, e.v}] = Obj{static_cast<std::int32_t>(i)};
  }

  const std::size_t k = env.object_data.size();
  for (std::size_t si = 0; si < k; ++si) {
    for (std::size_t di = 0; di < k; ++di) {
      const auto& [a, p] = env.object_data[si];
      const auto& [b, q] = env.object_data[di];
      for (const Mor f : c->hom(a, b)) {
        if (c->compose(q, c->compose(f, p)) != f) continue;
        FinCat::MorRec rec;
        rec.name = cat_str(c->morphism_name(f), "@", out->objects[si], ">", out->objects[di]);
        rec.dom = Obj{static_cast<std::int32_t>(si)};
        rec.cod = Obj{static_cast<std::int32_t>(di)};
        const Mor idx{static_cast<std::int32_t>(out->morphisms.size())};
        out->morphisms.push_back(std::move(rec));
        env.underlying.push_back(f);
        env.morphism_index_[{static_cast<std::int32_t>(si), static_cast<std::int32_t>(di), f.v}] =
            idx;
      }
    }
  }

  out->identities.resize(k);
  for (std::size_t i = 0; i < k; ++i) {
    out->identities[i] = env.morphism_for(Obj{static_cast<std::int32_t>(i)},
                                          Obj{static_cast<std::int32_t>(i)},
                                          env.object_data[i].endo);
  }

  const std::size_t mm = out->morphisms.size();
  out->compose_table.assign(mm * mm, Mor{});
  for (std::size_t gi = 0; gi < mm; ++gi) {
    for (std::size_t fi = 0; fi < mm; ++fi) {
      const auto& g = out->morphisms[gi];
      const auto& f = out->morphisms[fi];
      if (f.cod != g.dom) continue;
      const Mor under = c->compose(env.underlying[gi], env.underlying[fi]);
      out->compose_table[gi * mm + fi] = env.morphism_for(f.dom, g.cod, under);
    }
  }

  env.cat = out;

  Functor emb;
  emb.source = c;
  emb.target = out;
  emb.on_objects.resize(c->object_count());
  emb.on_morphisms.resize(c->morphism_count());
  for (std::size_t a = 0; a < c->object_count(); ++a) {
    const Obj x{static_cast<std::int32_t>(a)};
    emb.on_objects[a] = env.object_for(x, c->identity(x));
  }
  for (std::size_t f = 0; f < c->morphism_count(); ++f) {
    const Mor u{static_cast<std::int32_t>(f)};
    emb.on_morphisms[f] =
        env.morphism_for(emb.on_objects[static_cast<std::size_t>(c->dom(u).v)],
                         emb.on_objects[static_cast<std::size_t>(c->cod(u).v)], u);
  }
  env.embedding = std::move(emb);

  for (const Idempotent& e : all_idempotents(*out))
    if (!split_idempotent(e, *out))
      throw InvariantViolatedError(
          cat_str("karoubi envelope failed to split \"", out->morphism_name(e.endo), "\""));

  return env;
}

TransportedStructure transport_magmal_to_karoubi(const MagmalStructure& m,
                                                 const std::optional<SymmetricStructure>& s,
                                                 const std::optional<IdentityMagma>& g,
                                                 const KaroubiEnvelope& env) {
  const FinCat& base = *m.base;
  const FinCat& kar = *env.cat;
  const std::size_t k = env.object_data.size();
  const std::size_t km = kar.morphism_count();

  MagmalStructure out;
  out.base = env.cat;
  out.unit = env.object_for(m.unit, base.identity(m.unit));

  out.tensor_obj.resize(k * k);
  for (std::size_t i = 0; i < k; ++i)
    for (std::size_t jj = 0; jj < k; ++jj) {
      const auto& [a, p] = env.object_data[i];
      const auto& [b, q] = env.object_data[jj];
      out.tensor_obj[i * k + jj] = env.object_for(m.tensor(a, b), m.tensor(p, q));
    }

  out.tensor_mor.resize(km * km);
  for (std::size_t fi = 0; fi < km; ++fi)
    for (std::size_t gi = 0; gi < km; ++gi) {
      const Mor f{static_cast<std::int32_t>(fi)}, h{static_cast<std::int32_t>(gi)};
      const Mor under = m.tensor(env.underlying[fi], env.underlying[gi]);
      const Obj src = out.tensor_obj[static_cast<std::size_t>(kar.dom(f).v) * k +
                                     static_cast<std::size_t>(kar.dom(h).v)];
      const Obj dst = out.tensor_obj[static_cast<std::size_t>(kar.cod(f).v) * k +
                                     static_cast<std::size_t>(kar.cod(h).v)];
      out.tensor_mor[fi * km + gi] = env.morphism_for(src, dst, under);
    }

  out.lambda.resize(k);
  out.rho.resize(k);
  for (std::size_t i = 0; i < k; ++i) {
    const auto& [a, p] = env.object_data[i];
    const Obj ka{static_cast<std::int32_t>(i)};
    const Mor lam_under = base.compose(m.tensor(base.identity(m.unit), p),
                                       base.compose(m.lambda_at(a), p));
    out.lambda[i] = env.morphism_for(ka, out.tensor_obj[static_cast<std::size_t>(out.unit.v) * k +
                                                        i],
                                     lam_under);
    const Mor rho_under = base.compose(m.tensor(p, base.identity(m.unit)),
                                       base.compose(m.rho_at(a), p));
    out.rho[i] =
        env.morphism_for(ka, out.tensor_obj[i * k + static_cast<std::size_t>(out.unit.v)],
                         rho_under);
  }

  const ValidationReport magmal_check = validate_magmal(out);
  if (!magmal_check.ok())
    throw InvariantViolatedError(cat_str(
        "transported magmal structure fails validation:\n", magmal_check.to_string()));

  TransportedStructure result{std::move(out), std::nullopt, std::nullopt};

  if (s) {
    SymmetricStructure ts;
    ts.alpha.resize(k * k * k);
    ts.sigma.resize(k * k);
    for (std::size_t i = 0; i < k; ++i)
      for (std::size_t jj = 0; jj < k; ++jj) {
        const auto& [a, p] = env.object_data[i];
        const auto& [b, q] = env.object_data[jj];
        for (std::size_t l = 0; l < k; ++l) {
          const auto& [cobj, r] = env.object_data[l];
          const Mor alpha_under = base.compose(
              m.tensor(p, m.tensor(q, r)),
              base.compose(s->alpha_at(base, a, b, cobj), m.tensor(m.tensor(p, q), r)));
          const Obj src = result.magmal.tensor(
              result.magmal.tensor(Obj{static_cast<std::int32_t>(i)},
                                   Obj{static_cast<std::int32_t>(jj)}),
              Obj{static_cast<std::int32_t>(l)});
          const Obj dst = result.magmal.tensor(
              Obj{static_cast<std::int32_t>(i)},
              result.magmal.tensor(Obj{static_cast<std::int32_t>(jj)},
                                   Obj{static_cast<std::int32_t>(l)}));
          ts.alpha[(i * k + jj) * k + l] = env.morphism_for(src, dst, alpha_under);
        }
        const Mor sigma_under = base.compose(
            m.tensor(q, p), base.compose(s->sigma_at(base, a, b), m.tensor(p, q)));
        const Obj src = result.magmal.tensor(Obj{static_cast<std::int32_t>(i)},
                                             Obj{static_cast<std::int32_t>(jj)});
        const Obj dst = result.magmal.tensor(Obj{static_cast<std::int32_t>(jj)},
                                             Obj{static_cast<std::int32_t>(i)});
        ts.sigma[i * k + jj] = env.morphism_for(src, dst, sigma_under);
      }
    const ValidationReport symmetry_check = validate_symmetric(result.magmal, ts);
    if (!symmetry_check.ok())
      throw InvariantViolatedError(cat_str(
          "transported symmetry fails validation:\n", symmetry_check.to_string()));
    result.symmetry = std::move(ts);
  }

  if (g) {
    IdentityMagma tg;
    tg.eta.resize(k);
    tg.mu.resize(k);
    for (std::size_t i = 0; i < k; ++i) {
      const auto& [a, p] = env.object_data[i];
      const Obj ka{static_cast<std::int32_t>(i)};
      const Mor eta_under = base.compose(p, g->eta_at(a));
      tg.eta[i] = env.morphism_for(result.magmal.unit, ka, eta_under);
      const Mor mu_under = base.compose(p, base.compose(g->mu_at(a), m.tensor(p, p)));
      tg.mu[i] = env.morphism_for(result.magmal.tensor_obj[i * k + i], ka, mu_under);
    }
    const ValidationReport magma_check = validate_identity_magma(result.magmal, tg);
    if (!magma_check.ok())
      throw InvariantViolatedError(cat_str(
          "transported identity magma fails validation:\n", magma_check.to_string()));
    result.magma = std::move(tg);
  }

  return result;
}

} // namespace cocart
