#include "cocart/fincat.hpp"

#include <algorithm>
#include <sstream>
#include <unordered_map>
#include <unordered_set>

namespace cocart {

namespace {

template <typename... Parts>
std::string cat_str(const Parts&... parts) {
  std::ostringstream os;
  (os << ... << parts);
  return os.str();
}

} // namespace

void ValidationReport::merge(const ValidationReport& other, const std::string& prefix) {
  for (const auto& v : other.violations) violations.push_back(prefix + v);
}

std::string ValidationReport::to_string() const {
  std::ostringstream os;
  for (const auto& v : violations) os << v << '\n';
  return os.str();
}

const std::string& FinCat::object_name(Obj a) const {
  check_obj(a);
  return objects[static_cast<std::size_t>(a.v)];
}

const std::string& FinCat::morphism_name(Mor f) const {
  check_mor(f);
  return morphisms[static_cast<std::size_t>(f.v)].name;
}

std::optional<Obj> FinCat::find_object(const std::string& name) const {
  for (std::size_t i = 0; i < objects.size(); ++i)
    if (objects[i] == name) return Obj{static_cast<std::int32_t>(i)};
  return std::nullopt;
}

std::optional<Mor> FinCat::find_morphism(const std::string& name) const {
  for (std::size_t i = 0; i < morphisms.size(); ++i)
    if (morphisms[i].name == name) return Mor{static_cast<std::int32_t>(i)};
  return std::nullopt;
}

Obj FinCat::object_named(const std::string& name) const {
  if (auto a = find_object(name)) return *a;
  throw ResolveError(cat_str("unknown object \"", name, "\""));
}

Mor FinCat::morphism_named(const std::string& name) const {
  if (auto f = find_morphism(name)) return *f;
  throw ResolveError(cat_str("unknown morphism \"", name, "\""));
}

Obj FinCat::dom(Mor f) const {
  check_mor(f);
  return morphisms[static_cast<std::size_t>(f.v)].dom;
}

Obj FinCat::cod(Mor f) const {
  check_mor(f);
  return morphisms[static_cast<std::size_t>(f.v)].cod;
}

Mor FinCat::identity(Obj a) const {
  check_obj(a);
  return identities[static_cast<std::size_t>(a.v)];
}

bool FinCat::composable(Mor g, Mor f) const { return cod(f) == dom(g); }

Mor FinCat::compose(Mor g, Mor f) const {
  if (!composable(g, f))
    throw InvariantViolatedError(cat_str("compose(", morphism_name(g), ", ", morphism_name(f),
                                         "): cod(", morphism_name(f), ") != dom(",
                                         morphism_name(g), ")"));
  const Mor r = compose_table[static_cast<std::size_t>(g.v) * morphism_count() +
                              static_cast<std::size_t>(f.v)];
  if (!r.valid())
    throw InvariantViolatedError(cat_str("composition table has no entry for (",
                                         morphism_name(g), ", ", morphism_name(f), ")"));
  return r;
}

std::vector<Mor> FinCat::hom(Obj a, Obj b) const {
  check_obj(a);
  check_obj(b);
  std::vector<Mor> out;
  for (std::size_t i = 0; i < morphisms.size(); ++i)
    if (morphisms[i].dom == a && morphisms[i].cod == b)
      out.push_back(Mor{static_cast<std::int32_t>(i)});
  return out;
}

bool FinCat::is_identity(Mor f) const {
  check_mor(f);
  const Obj d = dom(f);
  return d == cod(f) && identities[static_cast<std::size_t>(d.v)] == f;
}

bool FinCat::operator==(const FinCat& other) const {
  if (objects != other.objects) return false;
  if (morphisms.size() != other.morphisms.size()) return false;
  for (std::size_t i = 0; i < morphisms.size(); ++i) {
    if (morphisms[i].name != other.morphisms[i].name ||
        morphisms[i].dom != other.morphisms[i].dom || morphisms[i].cod != other.morphisms[i].cod)
      return false;
  }
  return identities == other.identities && compose_table == other.compose_table;
}

void FinCat::check_obj(Obj a) const {
  if (!a.valid() || static_cast<std::size_t>(a.v) >= objects.size())
    throw InvariantViolatedError(cat_str("object index ", a.v, " out of range"));
}

void FinCat::check_mor(Mor f) const {
  if (!f.valid() || static_cast<std::size_t>(f.v) >= morphisms.size())
    throw InvariantViolatedError(cat_str("morphism index ", f.v, " out of range"));
}

ValidationReport validate_category(const FinCat& c) {
  ValidationReport report;
  const std::size_t n = c.objects.size();
  const std::size_t m = c.morphisms.size();

  // Structural sizes and name uniqueness first; deeper laws assume them.
  if (c.identities.size() != n) {
    report.add(cat_str("identity table has ", c.identities.size(), " entries for ", n,
                       " objects"));
    return report;
  }
  if (c.compose_table.size() != m * m) {
    report.add(cat_str("composition table has ", c.compose_table.size(), " entries, expected ",
                       m * m));
    return report;
  }

  std::unordered_set<std::string> seen;
  for (const auto& name : c.objects)
    if (!seen.insert(name).second) report.add(cat_str("duplicate object name \"", name, "\""));
  seen.clear();
  for (const auto& rec : c.morphisms)
    if (!seen.insert(rec.name).second)
      report.add(cat_str("duplicate morphism name \"", rec.name, "\""));

  bool typing_ok = true;
  for (std::size_t i = 0; i < m; ++i) {
    const auto& rec = c.morphisms[i];
    if (!rec.dom.valid() || static_cast<std::size_t>(rec.dom.v) >= n ||
        !rec.cod.valid() || static_cast<std::size_t>(rec.cod.v) >= n) {
      report.add(cat_str("morphism \"", rec.name, "\" has out-of-range endpoints"));
      typing_ok = false;
    }
  }
  if (!typing_ok) return report;

  for (std::size_t a = 0; a < n; ++a) {
    const Mor id = c.identities[a];
    if (!id.valid() || static_cast<std::size_t>(id.v) >= m) {
      report.add(cat_str("identity of \"", c.objects[a], "\" is out of range"));
      typing_ok = false;
      continue;
    }
    const auto& rec = c.morphisms[static_cast<std::size_t>(id.v)];
    if (rec.dom.v != static_cast<std::int32_t>(a) || rec.cod.v != static_cast<std::int32_t>(a))
      report.add(cat_str("identity(", c.objects[a], ") = \"", rec.name,
                         "\" does not have dom = cod = ", c.objects[a]));
  }
  if (!typing_ok) return report;

  auto raw = [&](Mor g, Mor f) {
    return c.compose_table[static_cast<std::size_t>(g.v) * m + static_cast<std::size_t>(f.v)];
  };

  // Totality exactly on composable pairs, with well-typed composites.
  for (std::size_t gi = 0; gi < m; ++gi) {
    for (std::size_t fi = 0; fi < m; ++fi) {
      const Mor g{static_cast<std::int32_t>(gi)};
      const Mor f{static_cast<std::int32_t>(fi)};
      const Mor r = raw(g, f);
      const bool comp = c.morphisms[fi].cod == c.morphisms[gi].dom;
      if (!comp) {
        if (r.valid())
          report.add(cat_str("composition defined for non-composable pair (",
                             c.morphisms[gi].name, ", ", c.morphisms[fi].name, ")"));
        continue;
      }
      if (!r.valid()) {
        report.add(cat_str("composition missing for composable pair (", c.morphisms[gi].name,
                           ", ", c.morphisms[fi].name, ")"));
        continue;
      }
      if (static_cast<std::size_t>(r.v) >= m) {
        report.add(cat_str("compose(", c.morphisms[gi].name, ", ", c.morphisms[fi].name,
                           ") is out of range"));
        continue;
      }
      const auto& rr = c.morphisms[static_cast<std::size_t>(r.v)];
      if (rr.dom != c.morphisms[fi].dom || rr.cod != c.morphisms[gi].cod)
        report.add(cat_str("compose(", c.morphisms[gi].name, ", ", c.morphisms[fi].name,
                           ") = \"", rr.name, "\" is ill-typed"));
    }
  }

  // Identity laws.
  for (std::size_t fi = 0; fi < m; ++fi) {
    const Mor f{static_cast<std::int32_t>(fi)};
    const Mor idd = c.identities[static_cast<std::size_t>(c.morphisms[fi].dom.v)];
    const Mor idc = c.identities[static_cast<std::size_t>(c.morphisms[fi].cod.v)];
    const Mor rf = raw(f, idd);
    if (rf.valid() && rf != f)
      report.add(cat_str("right identity violated at \"", c.morphisms[fi].name, "\": compose(",
                         c.morphisms[fi].name, ", ", c.morphism_name(idd), ") = \"",
                         c.morphism_name(rf), "\""));
    const Mor lf = raw(idc, f);
    if (lf.valid() && lf != f)
      report.add(cat_str("left identity violated at \"", c.morphisms[fi].name, "\": compose(",
                         c.morphism_name(idc), ", ", c.morphisms[fi].name, ") = \"",
                         c.morphism_name(lf), "\""));
  }

  // Associativity over every composable triple.
  for (std::size_t hi = 0; hi < m; ++hi) {
    for (std::size_t gi = 0; gi < m; ++gi) {
      if (c.morphisms[gi].cod != c.morphisms[hi].dom) continue;
      const Mor h{static_cast<std::int32_t>(hi)};
      const Mor g{static_cast<std::int32_t>(gi)};
      const Mor hg = raw(h, g);
      if (!hg.valid()) continue;
      for (std::size_t fi = 0; fi < m; ++fi) {
        if (c.morphisms[fi].cod != c.morphisms[gi].dom) continue;
        const Mor f{static_cast<std::int32_t>(fi)};
        const Mor gf = raw(g, f);
        if (!gf.valid()) continue;
        const Mor left = raw(hg, f);
        const Mor right = raw(h, gf);
        if (left.valid() && right.valid() && left != right)
          report.add(cat_str("associativity violated at (", c.morphisms[hi].name, ", ",
                             c.morphisms[gi].name, ", ", c.morphisms[fi].name, "): \"",
                             c.morphism_name(left), "\" vs \"", c.morphism_name(right), "\""));
      }
    }
  }

  return report;
}

Obj Functor::apply(Obj a) const {
  if (!a.valid() || static_cast<std::size_t>(a.v) >= on_objects.size())
    throw InvariantViolatedError("functor applied to out-of-range object");
  return on_objects[static_cast<std::size_t>(a.v)];
}

Mor Functor::apply(Mor f) const {
  if (!f.valid() || static_cast<std::size_t>(f.v) >= on_morphisms.size())
    throw InvariantViolatedError("functor applied to out-of-range morphism");
  return on_morphisms[static_cast<std::size_t>(f.v)];
}

bool Functor::operator==(const Functor& other) const {
  return *source == *other.source && *target == *other.target &&
         on_objects == other.on_objects && on_morphisms == other.on_morphisms;
}

ValidationReport validate_functor(const Functor& f) {
  ValidationReport report;
  const FinCat& s = *f.source;
  const FinCat& t = *f.target;
  if (f.on_objects.size() != s.object_count() || f.on_morphisms.size() != s.morphism_count()) {
    report.add("functor maps have wrong sizes");
    return report;
  }
  for (std::size_t i = 0; i < s.object_count(); ++i) {
    const Obj img = f.on_objects[i];
    if (!img.valid() || static_cast<std::size_t>(img.v) >= t.object_count()) {
      report.add(cat_str("object image of \"", s.objects[i], "\" out of range"));
      return report;
    }
  }
  for (std::size_t i = 0; i < s.morphism_count(); ++i) {
    const Mor img = f.on_morphisms[i];
    if (!img.valid() || static_cast<std::size_t>(img.v) >= t.morphism_count()) {
      report.add(cat_str("morphism image of \"", s.morphisms[i].name, "\" out of range"));
      return report;
    }
  }

  for (std::size_t i = 0; i < s.morphism_count(); ++i) {
    const Mor m{static_cast<std::int32_t>(i)};
    const Mor img = f.apply(m);
    if (t.dom(img) != f.apply(s.dom(m)) || t.cod(img) != f.apply(s.cod(m)))
      report.add(cat_str("functor breaks dom/cod at \"", s.morphisms[i].name, "\""));
  }
  for (std::size_t a = 0; a < s.object_count(); ++a) {
    const Obj x{static_cast<std::int32_t>(a)};
    if (f.apply(s.identity(x)) != t.identity(f.apply(x)))
      report.add(cat_str("functor breaks identity at \"", s.objects[a], "\""));
  }
  for (std::size_t gi = 0; gi < s.morphism_count(); ++gi) {
    for (std::size_t fi = 0; fi < s.morphism_count(); ++fi) {
      const Mor g{static_cast<std::int32_t>(gi)};
      const Mor h{static_cast<std::int32_t>(fi)};
      if (!s.composable(g, h)) continue;
      const Mor lhs = f.apply(s.compose(g, h));
      const Mor rhs = t.compose(f.apply(g), f.apply(h));
      if (lhs != rhs)
        report.add(cat_str("functor breaks composition at (", s.morphisms[gi].name, ", ",
                           s.morphisms[fi].name, ")"));
    }
  }
  return report;
}

Functor identity_functor(CatRef c) {
  Functor f;
  f.source = c;
  f.target = c;
  f.on_objects.resize(c->object_count());
  f.on_morphisms.resize(c->morphism_count());
  for (std::size_t i = 0; i < c->object_count(); ++i)
    f.on_objects[i] = Obj{static_cast<std::int32_t>(i)};
  for (std::size_t i = 0; i < c->morphism_count(); ++i)
    f.on_morphisms[i] = Mor{static_cast<std::int32_t>(i)};
  return f;
}

Functor constant_functor(CatRef source, CatRef target, Obj at) {
  Functor f;
  f.source = source;
  f.target = target;
  f.on_objects.assign(source->object_count(), at);
  f.on_morphisms.assign(source->morphism_count(), target->identity(at));
  return f;
}

Functor compose_functors(const Functor& g, const Functor& f) {
  if (*f.target != *g.source)
    throw InvariantViolatedError("compose_functors: middle categories differ");
  Functor r;
  r.source = f.source;
  r.target = g.target;
  r.on_objects.reserve(f.on_objects.size());
  r.on_morphisms.reserve(f.on_morphisms.size());
  for (const Obj a : f.on_objects) r.on_objects.push_back(g.apply(a));
  for (const Mor m : f.on_morphisms) r.on_morphisms.push_back(g.apply(m));
  return r;
}

Obj ProductCat::obj(Obj a, Obj b) const {
  return Obj{static_cast<std::int32_t>(a.v * static_cast<std::int32_t>(right->object_count()) +
                                       b.v)};
}

Mor ProductCat::mor(Mor f, Mor g) const {
  return Mor{static_cast<std::int32_t>(f.v * static_cast<std::int32_t>(right->morphism_count()) +
                                       g.v)};
}

Obj ProductCat::first(Obj p) const {
  return Obj{p.v / static_cast<std::int32_t>(right->object_count())};
}

Obj ProductCat::second(Obj p) const {
  return Obj{p.v % static_cast<std::int32_t>(right->object_count())};
}

Mor ProductCat::first(Mor p) const {
  return Mor{p.v / static_cast<std::int32_t>(right->morphism_count())};
}

Mor ProductCat::second(Mor p) const {
  return Mor{p.v % static_cast<std::int32_t>(right->morphism_count())};
}

ProductCat product_category(CatRef c, CatRef d) {
  auto out = std::make_shared<FinCat>();
  const std::size_t nc = c->object_count(), nd = d->object_count();
  const std::size_t mc = c->morphism_count(), md = d->morphism_count();

  out->objects.reserve(nc * nd);
  for (std::size_t i = 0; i < nc; ++i)
    for (std::size_t j = 0; j < nd; ++j)
      out->objects.push_back(cat_str("(", c->objects[i], ",", d->objects[j], ")"));

  out->morphisms.reserve(mc * md);
  for (std::size_t i = 0; i < mc; ++i) {
    for (std::size_t j = 0; j < md; ++j) {
      const auto& a = c->morphisms[i];
      const auto& b = d->morphisms[j];
      FinCat::MorRec rec;
      rec.name = cat_str("(", a.name, ",", b.name, ")");
      rec.dom = Obj{static_cast<std::int32_t>(a.dom.v * static_cast<std::int32_t>(nd) + b.dom.v)};
      rec.cod = Obj{static_cast<std::int32_t>(a.cod.v * static_cast<std::int32_t>(nd) + b.cod.v)};
      out->morphisms.push_back(std::move(rec));
    }
  }

  out->identities.resize(nc * nd);
  for (std::size_t i = 0; i < nc; ++i)
    for (std::size_t j = 0; j < nd; ++j)
      out->identities[i * nd + j] =
          Mor{static_cast<std::int32_t>(c->identities[i].v * static_cast<std::int32_t>(md) +
                                        d->identities[j].v)};

  const std::size_t mm = mc * md;
  out->compose_table.assign(mm * mm, Mor{});
  for (std::size_t g1 = 0; g1 < mc; ++g1)
    for (std::size_t g2 = 0; g2 < md; ++g2)
      for (std::size_t f1 = 0; f1 < mc; ++f1)
        for (std::size_t f2 = 0; f2 < md; ++f2) {
          const Mor ga{static_cast<std::int32_t>(g1)}, gb{static_cast<std::int32_t>(g2)};
          const Mor fa{static_cast<std::int32_t>(f1)}, fb{static_cast<std::int32_t>(f2)};
          if (!c->composable(ga, fa) || !d->composable(gb, fb)) continue;
          const Mor r1 = c->compose(ga, fa);
          const Mor r2 = d->compose(gb, fb);
          const std::size_t g = g1 * md + g2;
          const std::size_t f = f1 * md + f2;
          out->compose_table[g * mm + f] =
              Mor{static_cast<std::int32_t>(r1.v * static_cast<std::int32_t>(md) + r2.v)};
        }

  ProductCat pc;
  pc.cat = out;
  pc.left = std::move(c);
  pc.right = std::move(d);
  return pc;
}

Obj TripleCat::obj(Obj a, Obj b, Obj c) const {
  const auto n = static_cast<std::int32_t>(base->object_count());
  return Obj{a.v * n * n + b.v * n + c.v};
}

Mor TripleCat::mor(Mor f, Mor g, Mor h) const {
  const auto m = static_cast<std::int32_t>(base->morphism_count());
  return Mor{f.v * m * m + g.v * m + h.v};
}

TripleCat triple_product(CatRef c) {
  const ProductCat square = product_category(c, c);
  const ProductCat cube = product_category(square.cat, c);
  TripleCat tc;
  tc.cat = cube.cat;
  tc.base = std::move(c);
  return tc;
}

Functor diagonal_functor(CatRef c) {
  const ProductCat pc = product_category(c, c);
  Functor f;
  f.source = c;
  f.target = pc.cat;
  f.on_objects.reserve(c->object_count());
  f.on_morphisms.reserve(c->morphism_count());
  for (std::size_t i = 0; i < c->object_count(); ++i) {
    const Obj a{static_cast<std::int32_t>(i)};
    f.on_objects.push_back(pc.obj(a, a));
  }
  for (std::size_t i = 0; i < c->morphism_count(); ++i) {
    const Mor m{static_cast<std::int32_t>(i)};
    f.on_morphisms.push_back(pc.mor(m, m));
  }
  return f;
}

Mor NatTrans::at(Obj a) const {
  if (!a.valid() || static_cast<std::size_t>(a.v) >= components.size())
    throw InvariantViolatedError("natural transformation component out of range");
  return components[static_cast<std::size_t>(a.v)];
}

bool NatTrans::operator==(const NatTrans& other) const {
  return source == other.source && target == other.target && components == other.components;
}

ValidationReport validate_nat_trans(const NatTrans& t) {
  ValidationReport report;
  const FinCat& s = *t.source.source;
  const FinCat& d = *t.source.target;
  if (*t.target.source != s || *t.target.target != d) {
    report.add("natural transformation between non-parallel functors");
    return report;
  }
  if (t.components.size() != s.object_count()) {
    report.add("component family has wrong size");
    return report;
  }
  for (std::size_t a = 0; a < s.object_count(); ++a) {
    const Obj x{static_cast<std::int32_t>(a)};
    const Mor comp = t.components[a];
    if (!comp.valid() || static_cast<std::size_t>(comp.v) >= d.morphism_count()) {
      report.add(cat_str("component at \"", s.objects[a], "\" out of range"));
      return report;
    }
    if (d.dom(comp) != t.source.apply(x) || d.cod(comp) != t.target.apply(x))
      report.add(cat_str("component at \"", s.objects[a], "\" is ill-typed"));
  }
  if (!report.ok()) return report;
  for (std::size_t fi = 0; fi < s.morphism_count(); ++fi) {
    const Mor f{static_cast<std::int32_t>(fi)};
    const Mor lhs = d.compose(t.at(s.cod(f)), t.source.apply(f));
    const Mor rhs = d.compose(t.target.apply(f), t.at(s.dom(f)));
    if (lhs != rhs)
      report.add(cat_str("naturality violated at \"", s.morphisms[fi].name, "\""));
  }
  return report;
}

std::optional<InitialityFailure> initiality_failure(const FinCat& c, Obj i) {
  for (std::size_t x = 0; x < c.object_count(); ++x) {
    const Obj probe{static_cast<std::int32_t>(x)};
    const std::size_t count = c.hom(i, probe).size();
    if (count != 1) return InitialityFailure{probe, count};
  }
  return std::nullopt;
}

bool is_initial(const FinCat& c, Obj i) { return !initiality_failure(c, i).has_value(); }

std::optional<InitialityFailure> terminality_failure(const FinCat& c, Obj t) {
  for (std::size_t x = 0; x < c.object_count(); ++x) {
    const Obj probe{static_cast<std::int32_t>(x)};
    const std::size_t count = c.hom(probe, t).size();
    if (count != 1) return InitialityFailure{probe, count};
  }
  return std::nullopt;
}

bool is_terminal(const FinCat& c, Obj t) { return !terminality_failure(c, t).has_value(); }

std::optional<CoproductFailure> coproduct_failure(const FinCat& c, const Cospan& s) {
  if (c.cod(s.left) != s.apex || c.cod(s.right) != s.apex)
    throw InvariantViolatedError("cospan legs do not share the stated apex");
  const Obj a = c.dom(s.left);
  const Obj b = c.dom(s.right);
  for (std::size_t x = 0; x < c.object_count(); ++x) {
    const Obj probe{static_cast<std::int32_t>(x)};
    const std::vector<Mor> from_apex = c.hom(s.apex, probe);
    for (const Mor fa : c.hom(a, probe)) {
      for (const Mor fb : c.hom(b, probe)) {
        std::size_t count = 0;
        for (const Mor m : from_apex)
          if (c.compose(m, s.left) == fa && c.compose(m, s.right) == fb) ++count;
        if (count != 1) return CoproductFailure{probe, fa, fb, count};
      }
    }
  }
  return std::nullopt;
}

bool is_coproduct(const FinCat& c, const Cospan& s) {
  return !coproduct_failure(c, s).has_value();
}

std::optional<CoproductFailure> product_failure(const FinCat& c, const Span& s) {
  if (c.dom(s.first) != s.apex || c.dom(s.second) != s.apex)
    throw InvariantViolatedError("span legs do not share the stated apex");
  const Obj a = c.cod(s.first);
  const Obj b = c.cod(s.second);
  for (std::size_t x = 0; x < c.object_count(); ++x) {
    const Obj probe{static_cast<std::int32_t>(x)};
    const std::vector<Mor> to_apex = c.hom(probe, s.apex);
    for (const Mor fa : c.hom(probe, a)) {
      for (const Mor fb : c.hom(probe, b)) {
        std::size_t count = 0;
        for (const Mor m : to_apex)
          if (c.compose(s.first, m) == fa && c.compose(s.second, m) == fb) ++count;
        if (count != 1) return CoproductFailure{probe, fa, fb, count};
      }
    }
  }
  return std::nullopt;
}

bool is_product(const FinCat& c, const Span& s) { return !product_failure(c, s).has_value(); }

namespace {

bool legs_form_cocone(const Functor& diagram, Obj apex, const std::vector<Mor>& legs) {
  const FinCat& shape = *diagram.source;
  const FinCat& m = *diagram.target;
  for (std::size_t j = 0; j < shape.object_count(); ++j) {
    const Obj sj{static_cast<std::int32_t>(j)};
    const Mor leg = legs[j];
    if (m.dom(leg) != diagram.apply(sj) || m.cod(leg) != apex) return false;
  }
  for (std::size_t ui = 0; ui < shape.morphism_count(); ++ui) {
    const Mor u{static_cast<std::int32_t>(ui)};
    const Mor lhs = m.compose(legs[static_cast<std::size_t>(shape.cod(u).v)], diagram.apply(u));
    if (lhs != legs[static_cast<std::size_t>(shape.dom(u).v)]) return false;
  }
  return true;
}

} // namespace

std::vector<std::pair<Obj, std::vector<Mor>>> enumerate_cocones(const Functor& diagram) {
  const FinCat& shape = *diagram.source;
  const FinCat& m = *diagram.target;
  std::vector<std::pair<Obj, std::vector<Mor>>> out;
  const std::size_t k = shape.object_count();

  for (std::size_t x = 0; x < m.object_count(); ++x) {
    const Obj apex{static_cast<std::int32_t>(x)};
    if (k == 0) {
      out.emplace_back(apex, std::vector<Mor>{});
      continue;
    }
    std::vector<std::vector<Mor>> choices(k);
    bool empty = false;
    for (std::size_t j = 0; j < k; ++j) {
      choices[j] = m.hom(diagram.apply(Obj{static_cast<std::int32_t>(j)}), apex);
      if (choices[j].empty()) empty = true;
    }
    if (empty) continue;
    std::vector<std::size_t> idx(k, 0);
    while (true) {
      std::vector<Mor> legs(k);
      for (std::size_t j = 0; j < k; ++j) legs[j] = choices[j][idx[j]];
      if (legs_form_cocone(diagram, apex, legs)) out.emplace_back(apex, legs);
      std::size_t pos = k;
      bool done = true;
      while (pos > 0) {
        --pos;
        if (++idx[pos] < choices[pos].size()) {
          done = false;
          break;
        }
        idx[pos] = 0;
      }
      if (done) break;
    }
  }
  return out;
}

bool is_colimit(const Functor& diagram, Obj apex, const std::vector<Mor>& cocone) {
  const FinCat& m = *diagram.target;
  if (!legs_form_cocone(diagram, apex, cocone)) return false;
  for (const auto& [x, legs] : enumerate_cocones(diagram)) {
    std::size_t count = 0;
    for (const Mor med : m.hom(apex, x)) {
      bool matches = true;
      for (std::size_t j = 0; j < cocone.size(); ++j)
        if (m.compose(med, cocone[j]) != legs[j]) {
          matches = false;
          break;
        }
      if (matches) ++count;
    }
    if (count != 1) return false;
  }
  return true;
}

std::vector<NatTrans> natural_transformations_between(const Functor& f, const Functor& g,
                                                      SearchLimits limits) {
  const FinCat& s = *f.source;
  const FinCat& d = *f.target;
  if (*g.source != s || *g.target != d)
    throw InvariantViolatedError("natural_transformations_between: functors are not parallel");

  const std::size_t n = s.object_count();
  std::vector<std::vector<Mor>> choices(n);
  long double space = 1.0L;
  for (std::size_t a = 0; a < n; ++a) {
    const Obj x{static_cast<std::int32_t>(a)};
    choices[a] = d.hom(f.apply(x), g.apply(x));
    space *= static_cast<long double>(choices[a].size());
  }
  if (space == 0.0L) return {};
  if (space > static_cast<long double>(limits.max_candidates))
    throw SizeLimitError(cat_str("natural transformation search space exceeds limit of ",
                                 limits.max_candidates, " candidate families"));

  // Morphisms checkable once all objects up to a given index have components.
  std::vector<std::vector<Mor>> checkable(n);
  for (std::size_t mi = 0; mi < s.morphism_count(); ++mi) {
    const Mor u{static_cast<std::int32_t>(mi)};
    const std::size_t latest =
        static_cast<std::size_t>(std::max(s.dom(u).v, s.cod(u).v));
    checkable[latest].push_back(u);
  }

  std::vector<NatTrans> out;
  std::vector<Mor> current(n);

  auto square_commutes = [&](Mor u) {
    const Mor lhs = d.compose(current[static_cast<std::size_t>(s.cod(u).v)], f.apply(u));
    const Mor rhs = d.compose(g.apply(u), current[static_cast<std::size_t>(s.dom(u).v)]);
    return lhs == rhs;
  };

  auto rec = [&](auto&& self, std::size_t a) -> void {
    if (a == n) {
      NatTrans t;
      t.source = f;
      t.target = g;
      t.components = current;
      out.push_back(std::move(t));
      return;
    }
    for (const Mor cand : choices[a]) {
      current[a] = cand;
      bool ok = true;
      for (const Mor u : checkable[a])
        if (!square_commutes(u)) {
          ok = false;
          break;
        }
      if (ok) self(self, a + 1);
    }
  };
  if (n == 0) {
    NatTrans t;
    t.source = f;
    t.target = g;
    out.push_back(std::move(t));
    return out;
  }
  rec(rec, 0);
  return out;
}

std::optional<Mor> two_sided_inverse(const FinCat& c, Mor f) {
  const Obj a = c.dom(f);
  const Obj b = c.cod(f);
  for (const Mor g : c.hom(b, a))
    if (c.compose(g, f) == c.identity(a) && c.compose(f, g) == c.identity(b)) return g;
  return std::nullopt;
}

} // namespace cocart
