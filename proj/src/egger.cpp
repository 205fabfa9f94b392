#include "cocart/egger.hpp"

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

std::int32_t i32(std::size_t v) { return static_cast<std::int32_t>(v); }

} // namespace

FinSetObj make_finset(std::size_t k, const std::string& prefix) {
  FinSetObj out;
  out.elements.reserve(k);
  for (std::size_t i = 0; i < k; ++i) out.elements.push_back(cat_str(prefix, i));
  return out;
}

SetMor identity_map(const FinSetObj& a) {
  SetMor f{a, a, {}};
  f.map.resize(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) f.map[i] = i32(i);
  return f;
}

SetMor compose(const SetMor& g, const SetMor& f) {
  if (!(f.cod == g.dom))
    throw InvariantViolatedError("set map composition: codomain/domain mismatch");
  SetMor out{f.dom, g.cod, {}};
  out.map.reserve(f.map.size());
  for (const std::int32_t i : f.map) out.map.push_back(g.map[static_cast<std::size_t>(i)]);
  return out;
}

bool is_bijection(const SetMor& f) {
  if (f.dom.size() != f.cod.size()) return false;
  std::vector<bool> hit(f.cod.size(), false);
  for (const std::int32_t i : f.map) {
    if (hit[static_cast<std::size_t>(i)]) return false;
    hit[static_cast<std::size_t>(i)] = true;
  }
  return true;
}

SetMor inverse_map(const SetMor& f) {
  if (!is_bijection(f)) throw NotInvertibleError("set map is not a bijection");
  SetMor out{f.cod, f.dom, {}};
  out.map.resize(f.cod.size());
  for (std::size_t i = 0; i < f.map.size(); ++i)
    out.map[static_cast<std::size_t>(f.map[i])] = i32(i);
  return out;
}

FinSetObj egger_unit() { return FinSetObj{}; }

FinSetObj egger_tensor(const FinSetObj& a, const FinSetObj& b) {
  FinSetObj out;
  out.elements.reserve(a.size() + a.size() * b.size() + b.size());
  for (const auto& x : a.elements) out.elements.push_back(cat_str("inl(", x, ")"));
  for (const auto& x : a.elements)
    for (const auto& y : b.elements) out.elements.push_back(cat_str("mid(", x, ",", y, ")"));
  for (const auto& y : b.elements) out.elements.push_back(cat_str("inr(", y, ")"));
  return out;
}

EggerElem egger_decode(const FinSetObj& a, const FinSetObj& b, std::int32_t index) {
  const std::int32_t p = i32(a.size());
  const std::int32_t q = i32(b.size());
  if (index < p) return EggerElem{EggerElem::Tag::Inl, index, -1};
  if (index < p + p * q) {
    const std::int32_t off = index - p;
    return EggerElem{EggerElem::Tag::Mid, off / q, off % q};
  }
  return EggerElem{EggerElem::Tag::Inr, -1, index - p - p * q};
}

std::int32_t egger_encode(const FinSetObj& a, const FinSetObj& b, const EggerElem& e) {
  const std::int32_t p = i32(a.size());
  const std::int32_t q = i32(b.size());
  switch (e.tag) {
    case EggerElem::Tag::Inl: return e.first;
    case EggerElem::Tag::Mid: return p + e.first * q + e.second;
    case EggerElem::Tag::Inr: return p + p * q + e.second;
  }
  throw InvariantViolatedError("bad tagged-sum case");
}

std::string egger_label(const FinSetObj& a, const FinSetObj& b, const EggerElem& e) {
  switch (e.tag) {
    case EggerElem::Tag::Inl:
      return cat_str("inl(", a.elements[static_cast<std::size_t>(e.first)], ")");
    case EggerElem::Tag::Mid:
      return cat_str("mid(", a.elements[static_cast<std::size_t>(e.first)], ",",
                     b.elements[static_cast<std::size_t>(e.second)], ")");
    case EggerElem::Tag::Inr:
      return cat_str("inr(", b.elements[static_cast<std::size_t>(e.second)], ")");
  }
  throw InvariantViolatedError("bad tagged-sum case");
}

SetMor egger_tensor_mor(const SetMor& f, const SetMor& g) {
  const FinSetObj dom = egger_tensor(f.dom, g.dom);
  const FinSetObj cod = egger_tensor(f.cod, g.cod);
  SetMor out{dom, cod, {}};
  out.map.resize(dom.size());
  for (std::size_t i = 0; i < dom.size(); ++i) {
    const EggerElem e = egger_decode(f.dom, g.dom, i32(i));
    EggerElem moved = e;
    switch (e.tag) {
      case EggerElem::Tag::Inl: moved.first = f(e.first); break;
      case EggerElem::Tag::Mid:
        moved.first = f(e.first);
        moved.second = g(e.second);
        break;
      case EggerElem::Tag::Inr: moved.second = g(e.second); break;
    }
    out.map[i] = egger_encode(f.cod, g.cod, moved);
  }
  return out;
}

SetMor egger_lambda(const FinSetObj& a) {
  const FinSetObj unit = egger_unit();
  SetMor out{a, egger_tensor(unit, a), {}};
  out.map.resize(a.size());
  for (std::size_t i = 0; i < a.size(); ++i)
    out.map[i] = egger_encode(unit, a, EggerElem{EggerElem::Tag::Inr, -1, i32(i)});
  return out;
}

SetMor egger_rho(const FinSetObj& a) {
  const FinSetObj unit = egger_unit();
  SetMor out{a, egger_tensor(a, unit), {}};
  out.map.resize(a.size());
  for (std::size_t i = 0; i < a.size(); ++i)
    out.map[i] = egger_encode(a, unit, EggerElem{EggerElem::Tag::Inl, i32(i), -1});
  return out;
}

SetMor egger_braiding(const FinSetObj& a, const FinSetObj& b) {
  const FinSetObj dom = egger_tensor(a, b);
  SetMor out{dom, egger_tensor(b, a), {}};
  out.map.resize(dom.size());
  for (std::size_t i = 0; i < dom.size(); ++i) {
    const EggerElem e = egger_decode(a, b, i32(i));
    EggerElem flipped;
    switch (e.tag) {
      case EggerElem::Tag::Inl: flipped = {EggerElem::Tag::Inr, -1, e.first}; break;
      case EggerElem::Tag::Mid: flipped = {EggerElem::Tag::Mid, e.second, e.first}; break;
      case EggerElem::Tag::Inr: flipped = {EggerElem::Tag::Inl, e.second, -1}; break;
    }
    out.map[i] = egger_encode(b, a, flipped);
  }
  return out;
}

SetMor egger_associator(const FinSetObj& a, const FinSetObj& b, const FinSetObj& c) {
  const FinSetObj ab = egger_tensor(a, b);
  const FinSetObj bc = egger_tensor(b, c);
  const FinSetObj dom = egger_tensor(ab, c);
  const FinSetObj cod = egger_tensor(a, bc);
  SetMor out{dom, cod, {}};
  out.map.resize(dom.size());
  for (std::size_t i = 0; i < dom.size(); ++i) {
    const EggerElem outer = egger_decode(ab, c, i32(i));
    EggerElem target;
    switch (outer.tag) {
      case EggerElem::Tag::Inl: {
        const EggerElem inner = egger_decode(a, b, outer.first);
        switch (inner.tag) {
          case EggerElem::Tag::Inl: target = {EggerElem::Tag::Inl, inner.first, -1}; break;
          case EggerElem::Tag::Mid:
            target = {EggerElem::Tag::Mid, inner.first,
                      egger_encode(b, c, {EggerElem::Tag::Inl, inner.second, -1})};
            break;
          case EggerElem::Tag::Inr:
            target = {EggerElem::Tag::Inr, -1,
                      egger_encode(b, c, {EggerElem::Tag::Inl, inner.second, -1})};
            break;
        }
        break;
      }
      case EggerElem::Tag::Mid: {
        const EggerElem inner = egger_decode(a, b, outer.first);
        switch (inner.tag) {
          case EggerElem::Tag::Inl:
            target = {EggerElem::Tag::Mid, inner.first,
                      egger_encode(b, c, {EggerElem::Tag::Inr, -1, outer.second})};
            break;
          case EggerElem::Tag::Mid:
            target = {EggerElem::Tag::Mid, inner.first,
                      egger_encode(b, c, {EggerElem::Tag::Mid, inner.second, outer.second})};
            break;
          case EggerElem::Tag::Inr:
            target = {EggerElem::Tag::Inr, -1,
                      egger_encode(b, c, {EggerElem::Tag::Mid, inner.second, outer.second})};
            break;
        }
        break;
      }
      case EggerElem::Tag::Inr:
        target = {EggerElem::Tag::Inr, -1,
                  egger_encode(b, c, {EggerElem::Tag::Inr, -1, outer.second})};
        break;
    }
    out.map[i] = egger_encode(a, bc, target);
  }
  return out;
}

std::vector<FinSetObj> probe_sets(std::size_t max_size) {
  std::vector<FinSetObj> out;
  for (std::size_t k = 0; k <= max_size; ++k) out.push_back(make_finset(k, "x"));
  return out;
}

std::vector<SetMor> all_maps(const FinSetObj& s, const FinSetObj& t) {
  std::vector<SetMor> out;
  if (s.size() == 0) {
    out.push_back(SetMor{s, t, {}});
    return out;
  }
  if (t.size() == 0) return out;
  std::vector<std::int32_t> current(s.size(), 0);
  while (true) {
    out.push_back(SetMor{s, t, current});
    std::size_t pos = s.size();
    bool done = true;
    while (pos > 0) {
      --pos;
      if (static_cast<std::size_t>(++current[pos]) < t.size()) {
        done = false;
        break;
      }
      current[pos] = 0;
    }
    if (done) break;
  }
  return out;
}

EggerCoherence egger_coherence(const FinSetObj& a, const FinSetObj& b, const FinSetObj& c) {
  const std::vector<FinSetObj> carriers{a, b, c};
  ValidationReport report;

  // Pentagon over every quadruple drawn from the given carriers.
  for (const auto& w : carriers)
    for (const auto& x : carriers)
      for (const auto& y : carriers)
        for (const auto& z : carriers) {
          const SetMor lhs = compose(egger_associator(w, x, egger_tensor(y, z)),
                                     egger_associator(egger_tensor(w, x), y, z));
          const SetMor rhs =
              compose(egger_tensor_mor(identity_map(w), egger_associator(x, y, z)),
                      compose(egger_associator(w, egger_tensor(x, y), z),
                              egger_tensor_mor(egger_associator(w, x, y), identity_map(z))));
          if (!(lhs == rhs)) report.add("pentagon fails");
        }

  // Triangle: alpha_{A,I,B} . (rho_A (x) B) = A (x) lambda_B.
  for (const auto& x : carriers)
    for (const auto& y : carriers) {
      const SetMor lhs = compose(egger_associator(x, egger_unit(), y),
                                 egger_tensor_mor(egger_rho(x), identity_map(y)));
      const SetMor rhs = egger_tensor_mor(identity_map(x), egger_lambda(y));
      if (!(lhs == rhs)) report.add("triangle fails");
    }

  // Involutivity and hexagons.
  for (const auto& x : carriers)
    for (const auto& y : carriers) {
      const SetMor round = compose(egger_braiding(y, x), egger_braiding(x, y));
      if (!(round == identity_map(egger_tensor(x, y)))) report.add("braiding not involutive");
    }
  for (const auto& x : carriers)
    for (const auto& y : carriers)
      for (const auto& z : carriers) {
        {
          const SetMor lhs = compose(egger_associator(y, z, x),
                                     compose(egger_braiding(x, egger_tensor(y, z)),
                                             egger_associator(x, y, z)));
          const SetMor rhs =
              compose(egger_tensor_mor(identity_map(y), egger_braiding(x, z)),
                      compose(egger_associator(y, x, z),
                              egger_tensor_mor(egger_braiding(x, y), identity_map(z))));
          if (!(lhs == rhs)) report.add("hexagon (1) fails");
        }
        {
          const SetMor lhs = compose(inverse_map(egger_associator(z, x, y)),
                                     compose(egger_braiding(egger_tensor(x, y), z),
                                             inverse_map(egger_associator(x, y, z))));
          const SetMor rhs =
              compose(egger_tensor_mor(egger_braiding(x, z), identity_map(y)),
                      compose(inverse_map(egger_associator(x, z, y)),
                              egger_tensor_mor(identity_map(x), egger_braiding(y, z))));
          if (!(lhs == rhs)) report.add("hexagon (2) fails");
        }
      }

  // Naturality of every component over functions between the carriers.
  std::vector<SetMor> maps[3][3];
  for (std::size_t i = 0; i < 3; ++i)
    for (std::size_t j = 0; j < 3; ++j) maps[i][j] = all_maps(carriers[i], carriers[j]);

  for (std::size_t si = 0; si < 3; ++si)
    for (std::size_t ti = 0; ti < 3; ++ti)
      for (const SetMor& f : maps[si][ti]) {
        const SetMor lhs = compose(egger_lambda(f.cod), f);
        const SetMor rhs =
            compose(egger_tensor_mor(identity_map(egger_unit()), f), egger_lambda(f.dom));
        if (!(lhs == rhs)) report.add("lambda not natural");
        const SetMor lhs_r = compose(egger_rho(f.cod), f);
        const SetMor rhs_r =
            compose(egger_tensor_mor(f, identity_map(egger_unit())), egger_rho(f.dom));
        if (!(lhs_r == rhs_r)) report.add("rho not natural");
      }

  for (std::size_t si = 0; si < 3; ++si)
    for (std::size_t ti = 0; ti < 3; ++ti)
      for (const SetMor& f : maps[si][ti])
        for (std::size_t sj = 0; sj < 3; ++sj)
          for (std::size_t tj = 0; tj < 3; ++tj)
            for (const SetMor& g : maps[sj][tj]) {
              const SetMor lhs = compose(egger_braiding(f.cod, g.cod), egger_tensor_mor(f, g));
              const SetMor rhs = compose(egger_tensor_mor(g, f), egger_braiding(f.dom, g.dom));
              if (!(lhs == rhs)) report.add("braiding not natural");
            }

  for (std::size_t si = 0; si < 3; ++si)
    for (std::size_t ti = 0; ti < 3; ++ti)
      for (const SetMor& f : maps[si][ti])
        for (std::size_t sj = 0; sj < 3; ++sj)
          for (std::size_t tj = 0; tj < 3; ++tj)
            for (const SetMor& g : maps[sj][tj])
              for (std::size_t sk = 0; sk < 3; ++sk)
                for (std::size_t tk = 0; tk < 3; ++tk)
                  for (const SetMor& h : maps[sk][tk]) {
                    const SetMor lhs =
                        compose(egger_associator(f.cod, g.cod, h.cod),
                                egger_tensor_mor(egger_tensor_mor(f, g), h));
                    const SetMor rhs =
                        compose(egger_tensor_mor(f, egger_tensor_mor(g, h)),
                                egger_associator(f.dom, g.dom, h.dom));
                    if (!(lhs == rhs)) report.add("associator not natural");
                  }

  if (!report.ok())
    throw InvariantViolatedError(cat_str("coherence battery failed:\n", report.to_string()));

  return EggerCoherence{egger_associator(a, b, c), egger_braiding(a, b), egger_lambda(a),
                        egger_rho(a)};
}

LeftBandMagma left_band_magma(const FinSetObj& a) {
  LeftBandMagma out;
  out.eta = SetMor{egger_unit(), a, {}};
  const FinSetObj square = egger_tensor(a, a);
  out.mu = SetMor{square, a, {}};
  out.mu.map.resize(square.size());
  for (std::size_t i = 0; i < square.size(); ++i) {
    const EggerElem e = egger_decode(a, a, i32(i));
    switch (e.tag) {
      case EggerElem::Tag::Inl: out.mu.map[i] = e.first; break;
      case EggerElem::Tag::Mid: out.mu.map[i] = e.first; break;  // left band: pi_1
      case EggerElem::Tag::Inr: out.mu.map[i] = e.second; break;
    }
  }
  return out;
}

ValidationReport egger_magma_laws(const std::vector<FinSetObj>& carriers,
                                  std::size_t probe_bound) {
  ValidationReport report;
  std::vector<FinSetObj> universe = probe_sets(probe_bound);
  for (const auto& c : carriers)
    if (std::find(universe.begin(), universe.end(), c) == universe.end()) universe.push_back(c);

  for (const auto& s : universe) {
    const LeftBandMagma magma = left_band_magma(s);
    const SetMor id_s = identity_map(s);
    const SetMor left = compose(magma.mu, compose(egger_tensor_mor(magma.eta, id_s),
                                                  egger_lambda(s)));
    if (!(left == id_s)) report.add(cat_str("left unit law fails on a ", s.size(), "-set"));
    const SetMor right = compose(magma.mu, compose(egger_tensor_mor(id_s, magma.eta),
                                                   egger_rho(s)));
    if (!(right == id_s)) report.add(cat_str("right unit law fails on a ", s.size(), "-set"));
  }

  for (const auto& s : universe) {
    for (const auto& t : universe) {
      const LeftBandMagma ms = left_band_magma(s);
      const LeftBandMagma mt = left_band_magma(t);
      for (const SetMor& f : all_maps(s, t)) {
        if (!(compose(f, ms.eta) == mt.eta))
          report.add(cat_str("eta not natural for a map ", s.size(), " -> ", t.size()));
        const SetMor lhs = compose(f, ms.mu);
        const SetMor rhs = compose(mt.mu, egger_tensor_mor(f, f));
        if (!(lhs == rhs))
          report.add(cat_str("mu not natural for a map ", s.size(), " -> ", t.size()));
      }
    }
  }
  return report;
}

SetMor egger_diagram2_endo(const FinSetObj& a, const FinSetObj& b) {
  const LeftBandMagma magma_ab = left_band_magma(egger_tensor(a, b));
  const SetMor eta_a = left_band_magma(a).eta;
  const SetMor eta_b = left_band_magma(b).eta;
  const SetMor step1 = egger_tensor_mor(egger_rho(a), egger_lambda(b));
  const SetMor step2 = egger_tensor_mor(egger_tensor_mor(identity_map(a), eta_b),
                                        egger_tensor_mor(eta_a, identity_map(b)));
  return compose(magma_ab.mu, compose(step2, step1));
}

std::optional<EggerWitness> check_diagram2_egger(const FinSetObj& a, const FinSetObj& b) {
  const SetMor endo = egger_diagram2_endo(a, b);
  for (std::size_t i = 0; i < endo.map.size(); ++i) {
    if (endo.map[i] != i32(i)) {
      return EggerWitness{egger_decode(a, b, i32(i)), egger_decode(a, b, endo.map[i])};
    }
  }
  return std::nullopt;
}

EggerSplitting egger_synthesize_coproduct(const FinSetObj& a, const FinSetObj& b,
                                          std::size_t probe_bound) {
  const SetMor endo = egger_diagram2_endo(a, b);
  const FinSetObj tensor = egger_tensor(a, b);

  // The image of the idempotent is exactly the inl/inr blocks: the plain sum.
  FinSetObj summand;
  summand.elements.reserve(a.size() + b.size());
  for (const auto& x : a.elements) summand.elements.push_back(cat_str("inl(", x, ")"));
  for (const auto& y : b.elements) summand.elements.push_back(cat_str("inr(", y, ")"));

  auto summand_of = [&](const EggerElem& e) -> std::int32_t {
    switch (e.tag) {
      case EggerElem::Tag::Inl: return e.first;
      case EggerElem::Tag::Mid:
        throw InvariantViolatedError("mid element outside the idempotent image");
      case EggerElem::Tag::Inr: return i32(a.size()) + e.second;
    }
    throw InvariantViolatedError("bad tagged-sum case");
  };

  SetMor retraction{tensor, summand, {}};
  retraction.map.resize(tensor.size());
  for (std::size_t i = 0; i < tensor.size(); ++i)
    retraction.map[i] = summand_of(egger_decode(a, b, endo.map[i]));

  SetMor section{summand, tensor, {}};
  section.map.resize(summand.size());
  for (std::size_t i = 0; i < a.size(); ++i)
    section.map[i] = egger_encode(a, b, EggerElem{EggerElem::Tag::Inl, i32(i), -1});
  for (std::size_t i = 0; i < b.size(); ++i)
    section.map[a.size() + i] = egger_encode(a, b, EggerElem{EggerElem::Tag::Inr, -1, i32(i)});

  if (!(compose(section, retraction) == endo))
    throw InvariantViolatedError("section . retraction differs from the idempotent");
  if (!(compose(retraction, section) == identity_map(summand)))
    throw InvariantViolatedError("retraction . section is not the identity");

  SetMor leg_left{a, summand, {}};
  leg_left.map.resize(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) leg_left.map[i] = i32(i);
  SetMor leg_right{b, summand, {}};
  leg_right.map.resize(b.size());
  for (std::size_t i = 0; i < b.size(); ++i) leg_right.map[i] = i32(a.size() + i);

  // Brute-force coproduct oracle over every probe target.
  for (const FinSetObj& target : probe_sets(probe_bound)) {
    for (const SetMor& f : all_maps(a, target)) {
      for (const SetMor& g : all_maps(b, target)) {
        std::size_t count = 0;
        for (const SetMor& med : all_maps(summand, target))
          if (compose(med, leg_left) == f && compose(med, leg_right) == g) ++count;
        if (count != 1)
          throw InvariantViolatedError(
              cat_str("summand fails the coproduct oracle against a ", target.size(),
                      "-element target (", count, " mediators)"));
      }
    }
  }

  return EggerSplitting{std::move(summand), std::move(retraction), std::move(section),
                        std::move(leg_left), std::move(leg_right)};
}

bool egger_monoid_laws(const FinSetObj& m, const std::vector<std::int32_t>& mid_table) {
  const std::size_t n = m.size();
  const FinSetObj square = egger_tensor(m, m);
  SetMor mu{square, m, {}};
  mu.map.resize(square.size());
  for (std::size_t i = 0; i < square.size(); ++i) {
    const EggerElem e = egger_decode(m, m, i32(i));
    switch (e.tag) {
      case EggerElem::Tag::Inl: mu.map[i] = e.first; break;
      case EggerElem::Tag::Mid:
        mu.map[i] = mid_table[static_cast<std::size_t>(e.first) * n +
                              static_cast<std::size_t>(e.second)];
        break;
      case EggerElem::Tag::Inr: mu.map[i] = e.second; break;
    }
  }

  const SetMor id_m = identity_map(m);
  const SetMor eta{egger_unit(), m, {}};
  const SetMor left = compose(mu, compose(egger_tensor_mor(eta, id_m), egger_lambda(m)));
  if (!(left == id_m)) return false;
  const SetMor right = compose(mu, compose(egger_tensor_mor(id_m, eta), egger_rho(m)));
  if (!(right == id_m)) return false;

  // Full associativity square over (M(x)M)(x)M, not just the M^3 component.
  const SetMor lhs = compose(mu, egger_tensor_mor(mu, id_m));
  const SetMor rhs = compose(mu, compose(egger_tensor_mor(id_m, mu),
                                         egger_associator(m, m, m)));
  return lhs == rhs;
}

bool binary_op_associative(std::size_t n, const std::vector<std::int32_t>& table) {
  for (std::size_t x = 0; x < n; ++x)
    for (std::size_t y = 0; y < n; ++y)
      for (std::size_t z = 0; z < n; ++z) {
        const std::int32_t xy = table[x * n + y];
        const std::int32_t yz = table[y * n + z];
        if (table[static_cast<std::size_t>(xy) * n + z] !=
            table[x * n + static_cast<std::size_t>(yz)])
          return false;
      }
  return true;
}

std::pair<std::uint64_t, std::uint64_t> monoid_semigroup_correspondence(std::size_t n,
                                                                        SearchLimits limits) {
  long double space = 1.0L;
  for (std::size_t i = 0; i < n * n; ++i) space *= static_cast<long double>(n);
  if (space > static_cast<long double>(limits.max_candidates))
    throw SizeLimitError(cat_str("operation-table space n^(n^2) exceeds limit of ",
                                 limits.max_candidates));

  const FinSetObj m = make_finset(n, "m");
  std::uint64_t monoids = 0;
  std::uint64_t semigroups = 0;

  std::vector<std::int32_t> table(n * n, 0);
  if (n == 0) {
    // One empty table; vacuously both.
    return {egger_monoid_laws(m, table) ? 1u : 0u, 1u};
  }
  while (true) {
    if (egger_monoid_laws(m, table)) ++monoids;
    if (binary_op_associative(n, table)) ++semigroups;
    std::size_t pos = table.size();
    bool done = true;
    while (pos > 0) {
      --pos;
      if (static_cast<std::size_t>(++table[pos]) < n) {
        done = false;
        break;
      }
      table[pos] = 0;
    }
    if (done) break;
  }
  return {monoids, semigroups};
}

} // namespace cocart
