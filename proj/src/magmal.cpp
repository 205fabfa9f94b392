#include "cocart/magmal.hpp"

#include <sstream>

namespace cocart {

namespace {

template <typename... Parts>
std::string cat_str(const Parts&... parts) {
  std::ostringstream os;
  (os << ... << parts);
  return os.str();
}

Mor compose_chain(const FinCat& c, const std::vector<Mor>& chain) {
  // chain in application order: first element applied first
  if (chain.empty()) throw InvariantViolatedError("empty composition chain");
  Mor acc = chain.front();
  for (std::size_t i = 1; i < chain.size(); ++i) acc = c.compose(chain[i], acc);
  return acc;
}

} // namespace

Obj MagmalStructure::tensor(Obj a, Obj b) const {
  const auto n = static_cast<std::size_t>(base->object_count());
  return tensor_obj[static_cast<std::size_t>(a.v) * n + static_cast<std::size_t>(b.v)];
}

Mor MagmalStructure::tensor(Mor f, Mor g) const {
  const auto m = static_cast<std::size_t>(base->morphism_count());
  return tensor_mor[static_cast<std::size_t>(f.v) * m + static_cast<std::size_t>(g.v)];
}

Mor MagmalStructure::lambda_at(Obj a) const { return lambda[static_cast<std::size_t>(a.v)]; }

Mor MagmalStructure::rho_at(Obj a) const { return rho[static_cast<std::size_t>(a.v)]; }

bool MagmalStructure::operator==(const MagmalStructure& other) const {
  return *base == *other.base && unit == other.unit && tensor_obj == other.tensor_obj &&
         tensor_mor == other.tensor_mor && lambda == other.lambda && rho == other.rho;
}

namespace {

// Typing of the raw tables; deeper checks assume this passed.
bool magmal_typing(const MagmalStructure& m, ValidationReport& report) {
  const FinCat& base = *m.base;
  const std::size_t n = base.object_count();
  const std::size_t mm = base.morphism_count();
  if (!m.unit.valid() || static_cast<std::size_t>(m.unit.v) >= n) {
    report.add("unit object out of range");
    return false;
  }
  if (m.tensor_obj.size() != n * n || m.tensor_mor.size() != mm * mm ||
      m.lambda.size() != n || m.rho.size() != n) {
    report.add("tensor/unitor tables have wrong sizes");
    return false;
  }
  for (const Obj o : m.tensor_obj)
    if (!o.valid() || static_cast<std::size_t>(o.v) >= n) {
      report.add("tensor object table entry out of range");
      return false;
    }
  for (const Mor f : m.tensor_mor)
    if (!f.valid() || static_cast<std::size_t>(f.v) >= mm) {
      report.add("tensor morphism table entry out of range");
      return false;
    }
  for (const Mor f : m.lambda)
    if (!f.valid() || static_cast<std::size_t>(f.v) >= mm) {
      report.add("lambda component out of range");
      return false;
    }
  for (const Mor f : m.rho)
    if (!f.valid() || static_cast<std::size_t>(f.v) >= mm) {
      report.add("rho component out of range");
      return false;
    }

  bool ok = true;
  for (std::size_t u = 0; u < mm; ++u)
    for (std::size_t v = 0; v < mm; ++v) {
      const Mor fu{static_cast<std::int32_t>(u)}, fv{static_cast<std::int32_t>(v)};
      const Mor t = m.tensor(fu, fv);
      if (base.dom(t) != m.tensor(base.dom(fu), base.dom(fv)) ||
          base.cod(t) != m.tensor(base.cod(fu), base.cod(fv))) {
        report.add(cat_str("tensor of (", base.morphism_name(fu), ", ", base.morphism_name(fv),
                           ") is ill-typed"));
        ok = false;
      }
    }
  for (std::size_t a = 0; a < n; ++a) {
    const Obj x{static_cast<std::int32_t>(a)};
    const Mor l = m.lambda_at(x);
    if (base.dom(l) != x || base.cod(l) != m.tensor(m.unit, x)) {
      report.add(cat_str("lambda at \"", base.objects[a], "\" is ill-typed"));
      ok = false;
    }
    const Mor r = m.rho_at(x);
    if (base.dom(r) != x || base.cod(r) != m.tensor(x, m.unit)) {
      report.add(cat_str("rho at \"", base.objects[a], "\" is ill-typed"));
      ok = false;
    }
  }
  return ok;
}

} // namespace

Functor tensor_functors(const Functor& f, const Functor& g, const MagmalStructure& m) {
  if (*f.source != *m.base || *f.target != *m.base || *g.source != *m.base ||
      *g.target != *m.base)
    throw InvariantViolatedError("tensor_functors expects endofunctors on the magmal base");
  Functor out;
  out.source = m.base;
  out.target = m.base;
  out.on_objects.reserve(f.on_objects.size());
  out.on_morphisms.reserve(f.on_morphisms.size());
  for (std::size_t i = 0; i < f.on_objects.size(); ++i)
    out.on_objects.push_back(m.tensor(f.on_objects[i], g.on_objects[i]));
  for (std::size_t i = 0; i < f.on_morphisms.size(); ++i)
    out.on_morphisms.push_back(m.tensor(f.on_morphisms[i], g.on_morphisms[i]));
  return out;
}

Functor tensor_as_functor(const MagmalStructure& m) {
  const ProductCat square = product_category(m.base, m.base);
  Functor f;
  f.source = square.cat;
  f.target = m.base;
  f.on_objects = m.tensor_obj;
  f.on_morphisms = m.tensor_mor;
  return f;
}

Functor tensor_after_swap_functor(const MagmalStructure& m) {
  const ProductCat square = product_category(m.base, m.base);
  const FinCat& base = *m.base;
  Functor f;
  f.source = square.cat;
  f.target = m.base;
  const std::size_t n = base.object_count();
  const std::size_t mm = base.morphism_count();
  f.on_objects.resize(n * n);
  f.on_morphisms.resize(mm * mm);
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = 0; b < n; ++b)
      f.on_objects[a * n + b] =
          m.tensor(Obj{static_cast<std::int32_t>(b)}, Obj{static_cast<std::int32_t>(a)});
  for (std::size_t u = 0; u < mm; ++u)
    for (std::size_t v = 0; v < mm; ++v)
      f.on_morphisms[u * mm + v] =
          m.tensor(Mor{static_cast<std::int32_t>(v)}, Mor{static_cast<std::int32_t>(u)});
  return f;
}

Functor left_assoc_functor(const MagmalStructure& m) {
  const TripleCat cube = triple_product(m.base);
  const FinCat& base = *m.base;
  const std::size_t n = base.object_count();
  const std::size_t mm = base.morphism_count();
  Functor f;
  f.source = cube.cat;
  f.target = m.base;
  f.on_objects.resize(n * n * n);
  f.on_morphisms.resize(mm * mm * mm);
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = 0; b < n; ++b)
      for (std::size_t c = 0; c < n; ++c) {
        const Obj oa{static_cast<std::int32_t>(a)}, ob{static_cast<std::int32_t>(b)},
            oc{static_cast<std::int32_t>(c)};
        f.on_objects[(a * n + b) * n + c] = m.tensor(m.tensor(oa, ob), oc);
      }
  for (std::size_t u = 0; u < mm; ++u)
    for (std::size_t v = 0; v < mm; ++v)
      for (std::size_t w = 0; w < mm; ++w) {
        const Mor fu{static_cast<std::int32_t>(u)}, fv{static_cast<std::int32_t>(v)},
            fw{static_cast<std::int32_t>(w)};
        f.on_morphisms[(u * mm + v) * mm + w] = m.tensor(m.tensor(fu, fv), fw);
      }
  return f;
}

Functor right_assoc_functor(const MagmalStructure& m) {
  const TripleCat cube = triple_product(m.base);
  const FinCat& base = *m.base;
  const std::size_t n = base.object_count();
  const std::size_t mm = base.morphism_count();
  Functor f;
  f.source = cube.cat;
  f.target = m.base;
  f.on_objects.resize(n * n * n);
  f.on_morphisms.resize(mm * mm * mm);
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = 0; b < n; ++b)
      for (std::size_t c = 0; c < n; ++c) {
        const Obj oa{static_cast<std::int32_t>(a)}, ob{static_cast<std::int32_t>(b)},
            oc{static_cast<std::int32_t>(c)};
        f.on_objects[(a * n + b) * n + c] = m.tensor(oa, m.tensor(ob, oc));
      }
  for (std::size_t u = 0; u < mm; ++u)
    for (std::size_t v = 0; v < mm; ++v)
      for (std::size_t w = 0; w < mm; ++w) {
        const Mor fu{static_cast<std::int32_t>(u)}, fv{static_cast<std::int32_t>(v)},
            fw{static_cast<std::int32_t>(w)};
        f.on_morphisms[(u * mm + v) * mm + w] = m.tensor(fu, m.tensor(fv, fw));
      }
  return f;
}

ValidationReport validate_magmal(const MagmalStructure& m) {
  ValidationReport report;
  if (!magmal_typing(m, report)) return report;

  report.merge(validate_functor(tensor_as_functor(m)), "tensor bifunctoriality: ");

  const Functor id = identity_functor(m.base);
  const Functor unit_left = tensor_functors(constant_functor(m.base, m.base, m.unit), id, m);
  const Functor unit_right = tensor_functors(id, constant_functor(m.base, m.base, m.unit), m);

  NatTrans l{id, unit_left, m.lambda};
  report.merge(validate_nat_trans(l), "lambda: ");
  NatTrans r{id, unit_right, m.rho};
  report.merge(validate_nat_trans(r), "rho: ");

  if (m.lambda_at(m.unit) != m.rho_at(m.unit))
    report.add(cat_str("lambda_I != rho_I (\"", m.base->morphism_name(m.lambda_at(m.unit)),
                       "\" vs \"", m.base->morphism_name(m.rho_at(m.unit)), "\")"));
  return report;
}

bool is_unital(const MagmalStructure& m) {
  const FinCat& base = *m.base;
  for (std::size_t a = 0; a < base.object_count(); ++a) {
    const Obj x{static_cast<std::int32_t>(a)};
    if (!two_sided_inverse(base, m.lambda_at(x)).has_value()) return false;
    if (!two_sided_inverse(base, m.rho_at(x)).has_value()) return false;
  }
  return true;
}

Mor SymmetricStructure::alpha_at(const FinCat& base, Obj a, Obj b, Obj c) const {
  const auto n = static_cast<std::size_t>(base.object_count());
  return alpha[(static_cast<std::size_t>(a.v) * n + static_cast<std::size_t>(b.v)) * n +
               static_cast<std::size_t>(c.v)];
}

Mor SymmetricStructure::sigma_at(const FinCat& base, Obj a, Obj b) const {
  const auto n = static_cast<std::size_t>(base.object_count());
  return sigma[static_cast<std::size_t>(a.v) * n + static_cast<std::size_t>(b.v)];
}

Mor alpha_inverse(const MagmalStructure& m, const SymmetricStructure& s, Obj a, Obj b, Obj c) {
  const Mor al = s.alpha_at(*m.base, a, b, c);
  if (auto inv = two_sided_inverse(*m.base, al)) return *inv;
  throw NotInvertibleError(cat_str("associator at (", m.base->object_name(a), ", ",
                                   m.base->object_name(b), ", ", m.base->object_name(c),
                                   ") has no two-sided inverse"));
}

ValidationReport check_triangle(const MagmalStructure& m, const std::vector<Mor>& alpha) {
  ValidationReport report;
  const FinCat& base = *m.base;
  const std::size_t n = base.object_count();
  auto alpha_at = [&](Obj a, Obj b, Obj c) {
    return alpha[(static_cast<std::size_t>(a.v) * n + static_cast<std::size_t>(b.v)) * n +
                 static_cast<std::size_t>(c.v)];
  };
  // In the colax orientation of the unitors the triangle reads
  //   alpha_{A,I,B} . (rho_A (x) B) = A (x) lambda_B
  for (std::size_t ai = 0; ai < n; ++ai)
    for (std::size_t bi = 0; bi < n; ++bi) {
      const Obj a{static_cast<std::int32_t>(ai)}, b{static_cast<std::int32_t>(bi)};
      const Mor lhs = base.compose(alpha_at(a, m.unit, b),
                                   m.tensor(m.rho_at(a), base.identity(b)));
      const Mor rhs = m.tensor(base.identity(a), m.lambda_at(b));
      if (lhs != rhs)
        report.add(cat_str("triangle fails at (", base.objects[ai], ", ", base.objects[bi], ")"));
    }
  return report;
}

ValidationReport check_pentagon(const MagmalStructure& m, const std::vector<Mor>& alpha) {
  ValidationReport report;
  const FinCat& base = *m.base;
  const std::size_t n = base.object_count();
  auto alpha_at = [&](Obj a, Obj b, Obj c) {
    return alpha[(static_cast<std::size_t>(a.v) * n + static_cast<std::size_t>(b.v)) * n +
                 static_cast<std::size_t>(c.v)];
  };
  for (std::size_t ai = 0; ai < n; ++ai)
    for (std::size_t bi = 0; bi < n; ++bi)
      for (std::size_t ci = 0; ci < n; ++ci)
        for (std::size_t di = 0; di < n; ++di) {
          const Obj a{static_cast<std::int32_t>(ai)}, b{static_cast<std::int32_t>(bi)},
              c{static_cast<std::int32_t>(ci)}, d{static_cast<std::int32_t>(di)};
          const Mor lhs =
              base.compose(alpha_at(a, b, m.tensor(c, d)), alpha_at(m.tensor(a, b), c, d));
          const Mor rhs = compose_chain(
              base, {m.tensor(alpha_at(a, b, c), base.identity(d)),
                     alpha_at(a, m.tensor(b, c), d),
                     m.tensor(base.identity(a), alpha_at(b, c, d))});
          if (lhs != rhs)
            report.add(cat_str("pentagon fails at (", base.objects[ai], ", ", base.objects[bi],
                               ", ", base.objects[ci], ", ", base.objects[di], ")"));
        }
  return report;
}

ValidationReport check_sigma_involution(const MagmalStructure& m, const std::vector<Mor>& sigma) {
  ValidationReport report;
  const FinCat& base = *m.base;
  const std::size_t n = base.object_count();
  auto sigma_at = [&](Obj a, Obj b) {
    return sigma[static_cast<std::size_t>(a.v) * n + static_cast<std::size_t>(b.v)];
  };
  for (std::size_t ai = 0; ai < n; ++ai)
    for (std::size_t bi = 0; bi < n; ++bi) {
      const Obj a{static_cast<std::int32_t>(ai)}, b{static_cast<std::int32_t>(bi)};
      const Mor round = base.compose(sigma_at(b, a), sigma_at(a, b));
      if (round != base.identity(m.tensor(a, b)))
        report.add(cat_str("sigma_{B,A} . sigma_{A,B} != id at (", base.objects[ai], ", ",
                           base.objects[bi], ")"));
    }
  return report;
}

ValidationReport check_hexagons(const MagmalStructure& m, const std::vector<Mor>& alpha,
                                const std::vector<Mor>& sigma) {
  ValidationReport report;
  const FinCat& base = *m.base;
  const std::size_t n = base.object_count();
  auto alpha_at = [&](Obj a, Obj b, Obj c) {
    return alpha[(static_cast<std::size_t>(a.v) * n + static_cast<std::size_t>(b.v)) * n +
                 static_cast<std::size_t>(c.v)];
  };
  auto alpha_inv = [&](Obj a, Obj b, Obj c) {
    const auto inv = two_sided_inverse(base, alpha_at(a, b, c));
    if (!inv)
      throw NotInvertibleError(cat_str("associator at (", base.object_name(a), ", ",
                                       base.object_name(b), ", ", base.object_name(c),
                                       ") has no two-sided inverse"));
    return *inv;
  };
  auto sigma_at = [&](Obj a, Obj b) {
    return sigma[static_cast<std::size_t>(a.v) * n + static_cast<std::size_t>(b.v)];
  };
  for (std::size_t ai = 0; ai < n; ++ai)
    for (std::size_t bi = 0; bi < n; ++bi)
      for (std::size_t ci = 0; ci < n; ++ci) {
        const Obj a{static_cast<std::int32_t>(ai)}, b{static_cast<std::int32_t>(bi)},
            c{static_cast<std::int32_t>(ci)};
        {
          const Mor lhs = compose_chain(base, {alpha_at(a, b, c), sigma_at(a, m.tensor(b, c)),
                                               alpha_at(b, c, a)});
          const Mor rhs = compose_chain(base, {m.tensor(sigma_at(a, b), base.identity(c)),
                                               alpha_at(b, a, c),
                                               m.tensor(base.identity(b), sigma_at(a, c))});
          if (lhs != rhs)
            report.add(cat_str("hexagon (1) fails at (", base.objects[ai], ", ", base.objects[bi],
                               ", ", base.objects[ci], ")"));
        }
        {
          const Mor lhs = compose_chain(base, {alpha_inv(a, b, c), sigma_at(m.tensor(a, b), c),
                                               alpha_inv(c, a, b)});
          const Mor rhs = compose_chain(base, {m.tensor(base.identity(a), sigma_at(b, c)),
                                               alpha_inv(a, c, b),
                                               m.tensor(sigma_at(a, c), base.identity(b))});
          if (lhs != rhs)
            report.add(cat_str("hexagon (2) fails at (", base.objects[ai], ", ", base.objects[bi],
                               ", ", base.objects[ci], ")"));
        }
      }
  return report;
}

ValidationReport validate_symmetric(const MagmalStructure& m, const SymmetricStructure& s) {
  ValidationReport report;
  const FinCat& base = *m.base;
  const std::size_t n = base.object_count();
  const std::size_t mm = base.morphism_count();
  if (s.alpha.size() != n * n * n || s.sigma.size() != n * n) {
    report.add("alpha/sigma tables have wrong sizes");
    return report;
  }
  for (const Mor f : s.alpha)
    if (!f.valid() || static_cast<std::size_t>(f.v) >= mm) {
      report.add("alpha component out of range");
      return report;
    }
  for (const Mor f : s.sigma)
    if (!f.valid() || static_cast<std::size_t>(f.v) >= mm) {
      report.add("sigma component out of range");
      return report;
    }

  NatTrans alpha_nat{left_assoc_functor(m), right_assoc_functor(m), s.alpha};
  report.merge(validate_nat_trans(alpha_nat), "alpha: ");

  NatTrans sigma_nat{tensor_as_functor(m), tensor_after_swap_functor(m), s.sigma};
  report.merge(validate_nat_trans(sigma_nat), "sigma: ");

  if (!report.ok()) return report;

  for (std::size_t ai = 0; ai < n; ++ai)
    for (std::size_t bi = 0; bi < n; ++bi)
      for (std::size_t ci = 0; ci < n; ++ci) {
        const Obj a{static_cast<std::int32_t>(ai)}, b{static_cast<std::int32_t>(bi)},
            c{static_cast<std::int32_t>(ci)};
        if (!two_sided_inverse(base, s.alpha_at(base, a, b, c)).has_value())
          report.add(cat_str("alpha at (", base.objects[ai], ", ", base.objects[bi], ", ",
                             base.objects[ci], ") is not invertible"));
      }
  if (!report.ok()) return report;

  report.merge(check_triangle(m, s.alpha), "");
  report.merge(check_pentagon(m, s.alpha), "");
  report.merge(check_sigma_involution(m, s.sigma), "");
  report.merge(check_hexagons(m, s.alpha, s.sigma), "");
  return report;
}

ValidationReport validate_unital_magma(const MagmalStructure& m, const UnitalMagma& u) {
  ValidationReport report;
  const FinCat& base = *m.base;
  const Obj a = u.carrier;
  if (base.dom(u.eta) != m.unit || base.cod(u.eta) != a) {
    report.add(cat_str("eta is not a morphism I -> ", base.object_name(a)));
    return report;
  }
  if (base.dom(u.mu) != m.tensor(a, a) || base.cod(u.mu) != a) {
    report.add(cat_str("mu is not a morphism ", base.object_name(a), " (x) ",
                       base.object_name(a), " -> ", base.object_name(a)));
    return report;
  }
  const Mor id_a = base.identity(a);
  const Mor left = compose_chain(base, {m.lambda_at(a), m.tensor(u.eta, id_a), u.mu});
  if (left != id_a)
    report.add(cat_str("left unit law fails on ", base.object_name(a)));
  const Mor right = compose_chain(base, {m.rho_at(a), m.tensor(id_a, u.eta), u.mu});
  if (right != id_a)
    report.add(cat_str("right unit law fails on ", base.object_name(a)));
  return report;
}

Mor IdentityMagma::eta_at(Obj a) const { return eta[static_cast<std::size_t>(a.v)]; }

Mor IdentityMagma::mu_at(Obj a) const { return mu[static_cast<std::size_t>(a.v)]; }

ValidationReport validate_identity_magma(const MagmalStructure& m, const IdentityMagma& g) {
  ValidationReport report;
  const FinCat& base = *m.base;
  const std::size_t n = base.object_count();
  const std::size_t mm = base.morphism_count();
  if (g.eta.size() != n || g.mu.size() != n) {
    report.add("eta/mu families have wrong sizes");
    return report;
  }
  for (std::size_t a = 0; a < n; ++a) {
    if (!g.eta[a].valid() || static_cast<std::size_t>(g.eta[a].v) >= mm ||
        !g.mu[a].valid() || static_cast<std::size_t>(g.mu[a].v) >= mm) {
      report.add(cat_str("component at \"", base.objects[a], "\" out of range"));
      return report;
    }
  }
  for (std::size_t a = 0; a < n; ++a) {
    const Obj x{static_cast<std::int32_t>(a)};
    report.merge(validate_unital_magma(m, UnitalMagma{x, g.eta_at(x), g.mu_at(x)}),
                 cat_str("at \"", base.objects[a], "\": "));
  }
  if (!report.ok()) return report;

  // eta natural as a family I => 1 and mu natural as (x) . diag => 1; i.e.
  // every morphism is a homomorphism for the chosen structures.
  for (std::size_t fi = 0; fi < mm; ++fi) {
    const Mor f{static_cast<std::int32_t>(fi)};
    const Obj a = base.dom(f);
    const Obj b = base.cod(f);
    if (base.compose(f, g.eta_at(a)) != g.eta_at(b))
      report.add(cat_str("eta not natural at \"", base.morphism_name(f), "\""));
    if (base.compose(f, g.mu_at(a)) != base.compose(g.mu_at(b), m.tensor(f, f)))
      report.add(cat_str("mu not natural at \"", base.morphism_name(f), "\""));
  }
  return report;
}

std::pair<Mor, Mor> unit_iso(const UnitStructure& u1, const UnitStructure& u2,
                             const MagmalStructure& m) {
  const FinCat& base = *m.base;
  const Mor lambda1_at_i2 = u1.lambda[static_cast<std::size_t>(u2.unit.v)];
  const Mor lambda2_at_i1 = u2.lambda[static_cast<std::size_t>(u1.unit.v)];
  const auto inv1 = two_sided_inverse(base, lambda1_at_i2);
  if (!inv1)
    throw NotInvertibleError(cat_str("lambda at \"", base.object_name(u2.unit),
                                     "\" has no inverse"));
  const auto inv2 = two_sided_inverse(base, lambda2_at_i1);
  if (!inv2)
    throw NotInvertibleError(cat_str("second lambda at \"", base.object_name(u1.unit),
                                     "\" has no inverse"));

  const Mor forward = base.compose(*inv1, u2.rho[static_cast<std::size_t>(u1.unit.v)]);
  const Mor backward = base.compose(*inv2, u1.rho[static_cast<std::size_t>(u2.unit.v)]);

  if (base.compose(backward, forward) != base.identity(u1.unit) ||
      base.compose(forward, backward) != base.identity(u2.unit))
    throw InvariantViolatedError("canonical unit comparison morphisms are not mutually inverse");
  return {forward, backward};
}

namespace {

bool magma_unit_laws(const MagmalStructure& m, Obj a, Mor eta, Mor mu) {
  const FinCat& base = *m.base;
  const Mor id_a = base.identity(a);
  return compose_chain(base, {m.lambda_at(a), m.tensor(eta, id_a), mu}) == id_a &&
         compose_chain(base, {m.rho_at(a), m.tensor(id_a, eta), mu}) == id_a;
}

bool magma_associative(const MagmalStructure& m, const SymmetricStructure& s, Obj a, Mor mu) {
  const FinCat& base = *m.base;
  const Mor id_a = base.identity(a);
  const Mor lhs = base.compose(mu, m.tensor(mu, id_a));
  const Mor rhs = compose_chain(base, {s.alpha_at(base, a, a, a), m.tensor(id_a, mu), mu});
  return lhs == rhs;
}

bool magma_commutative(const MagmalStructure& m, const SymmetricStructure& s, Obj a, Mor mu) {
  return m.base->compose(mu, s.sigma_at(*m.base, a, a)) == mu;
}

} // namespace

std::vector<IdentityMagma> enumerate_identity_magmas(const MagmalStructure& m,
                                                     bool require_commutative_monoid,
                                                     const SymmetricStructure* s,
                                                     SearchLimits limits) {
  if (require_commutative_monoid && s == nullptr)
    throw InvariantViolatedError(
        "enumerate_identity_magmas: commutative-monoid filter needs a symmetric structure");
  const FinCat& base = *m.base;
  const std::size_t n = base.object_count();

  // Raw candidate space governs the size limit, before any per-object filter.
  long double space = 1.0L;
  for (std::size_t a = 0; a < n; ++a) {
    const Obj x{static_cast<std::int32_t>(a)};
    space *= static_cast<long double>(base.hom(m.unit, x).size());
    space *= static_cast<long double>(base.hom(m.tensor(x, x), x).size());
  }
  if (space > static_cast<long double>(limits.max_candidates))
    throw SizeLimitError(cat_str("identity-magma search space exceeds limit of ",
                                 limits.max_candidates, " candidate families"));

  std::vector<std::vector<std::pair<Mor, Mor>>> choices(n);
  for (std::size_t a = 0; a < n; ++a) {
    const Obj x{static_cast<std::int32_t>(a)};
    for (const Mor eta : base.hom(m.unit, x)) {
      for (const Mor mu : base.hom(m.tensor(x, x), x)) {
        if (!magma_unit_laws(m, x, eta, mu)) continue;
        if (require_commutative_monoid &&
            (!magma_associative(m, *s, x, mu) || !magma_commutative(m, *s, x, mu)))
          continue;
        choices[a].emplace_back(eta, mu);
      }
    }
    if (choices[a].empty()) return {};
  }

  // Morphisms whose naturality squares become checkable once object `a` has
  // been assigned.
  std::vector<std::vector<Mor>> checkable(n);
  for (std::size_t fi = 0; fi < base.morphism_count(); ++fi) {
    const Mor f{static_cast<std::int32_t>(fi)};
    const std::size_t latest = static_cast<std::size_t>(std::max(base.dom(f).v, base.cod(f).v));
    checkable[latest].push_back(f);
  }

  std::vector<IdentityMagma> out;
  IdentityMagma current;
  current.eta.resize(n);
  current.mu.resize(n);

  auto natural_at = [&](Mor f) {
    const Obj a = base.dom(f);
    const Obj b = base.cod(f);
    return base.compose(f, current.eta_at(a)) == current.eta_at(b) &&
           base.compose(f, current.mu_at(a)) == base.compose(current.mu_at(b), m.tensor(f, f));
  };

  auto rec = [&](auto&& self, std::size_t a) -> void {
    if (a == n) {
      out.push_back(current);
      return;
    }
    for (const auto& [eta, mu] : choices[a]) {
      current.eta[a] = eta;
      current.mu[a] = mu;
      bool ok = true;
      for (const Mor f : checkable[a])
        if (!natural_at(f)) {
          ok = false;
          break;
        }
      if (ok) self(self, a + 1);
    }
  };
  if (n == 0) return {IdentityMagma{}};
  rec(rec, 0);
  return out;
}

bool is_magma_homomorphism(const MagmalStructure& m, Mor f, const UnitalMagma& a,
                           const UnitalMagma& b) {
  const FinCat& base = *m.base;
  if (base.dom(f) != a.carrier || base.cod(f) != b.carrier)
    throw InvariantViolatedError("is_magma_homomorphism: morphism does not join the carriers");
  return base.compose(f, a.mu) == base.compose(b.mu, m.tensor(f, f)) &&
         base.compose(f, a.eta) == b.eta;
}

Mor middle_interchange(const MagmalStructure& m, const SymmetricStructure& s, Obj a, Obj b) {
  const FinCat& base = *m.base;
  const Mor id_a = base.identity(a);
  const Obj ab = m.tensor(a, b);
  return compose_chain(
      base, {s.alpha_at(base, a, a, m.tensor(b, b)),
             m.tensor(id_a, alpha_inverse(m, s, a, b, b)),
             m.tensor(id_a, m.tensor(s.sigma_at(base, a, b), base.identity(b))),
             m.tensor(id_a, s.alpha_at(base, b, a, b)),
             alpha_inverse(m, s, a, b, ab)});
}

Mor fox_interchange(const MagmalStructure& m, const SymmetricStructure& s, Obj a, Obj b) {
  const FinCat& base = *m.base;
  const Mor id_a = base.identity(a);
  const Obj ab = m.tensor(a, b);
  return compose_chain(
      base, {s.alpha_at(base, a, b, ab),
             m.tensor(id_a, alpha_inverse(m, s, b, a, b)),
             m.tensor(id_a, m.tensor(s.sigma_at(base, b, a), base.identity(b))),
             m.tensor(id_a, s.alpha_at(base, a, b, b)),
             alpha_inverse(m, s, a, a, m.tensor(b, b))});
}

Mor fox_interchange_alt(const MagmalStructure& m, const SymmetricStructure& s, Obj a, Obj b) {
  const FinCat& base = *m.base;
  const Mor id_b = base.identity(b);
  const Obj ab = m.tensor(a, b);
  return compose_chain(
      base, {alpha_inverse(m, s, ab, a, b),
             m.tensor(s.alpha_at(base, a, b, a), id_b),
             m.tensor(m.tensor(base.identity(a), s.sigma_at(base, b, a)), id_b),
             m.tensor(alpha_inverse(m, s, a, a, b), id_b),
             s.alpha_at(base, m.tensor(a, a), b, b)});
}

UnitalMagma induced_magma_on_tensor(const UnitalMagma& a, const UnitalMagma& b,
                                    const MagmalStructure& m, const SymmetricStructure& s) {
  const FinCat& base = *m.base;
  const Obj carrier = m.tensor(a.carrier, b.carrier);
  const Mor mu =
      base.compose(m.tensor(a.mu, b.mu), fox_interchange(m, s, a.carrier, b.carrier));
  const Mor eta = base.compose(m.tensor(a.eta, b.eta), m.lambda_at(m.unit));
  const UnitalMagma out{carrier, eta, mu};
  const ValidationReport check = validate_unital_magma(m, out);
  if (!check.ok())
    throw InvariantViolatedError(cat_str("induced tensor magma fails the unit laws:\n",
                                         check.to_string()));
  return out;
}

} // namespace cocart
