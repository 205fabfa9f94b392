#include "cocart/bundle.hpp"

#include <fstream>
#include <sstream>
#include <unordered_set>

#include <json.hpp>

namespace cocart {

namespace {

using ordered_json = nlohmann::ordered_json;

template <typename... Parts>
std::string cat_str(const Parts&... parts) {
  std::ostringstream os;
  (os << ... << parts);
  return os.str();
}

std::pair<std::size_t, std::size_t> line_col_of(const std::string& text, std::size_t byte) {
  std::size_t line = 1, col = 1;
  for (std::size_t i = 0; i + 1 < byte && i < text.size(); ++i) {
    if (text[i] == '\n') {
      ++line;
      col = 1;
    } else {
      ++col;
    }
  }
  return {line, col};
}

const ordered_json& require_key(const ordered_json& j, const char* key, const char* where) {
  auto it = j.find(key);
  if (it == j.end()) throw ParseError(cat_str(where, " is missing required key \"", key, "\""));
  return *it;
}

std::string require_string(const ordered_json& j, const char* where) {
  if (!j.is_string()) throw ParseError(cat_str(where, " must be a string"));
  return j.get<std::string>();
}

// [name, ...] tuples of fixed arity with string entries.
std::vector<std::string> require_tuple(const ordered_json& j, std::size_t arity,
                                       const char* where) {
  if (!j.is_array() || j.size() != arity)
    throw ParseError(cat_str(where, " must be an array of ", arity, " strings"));
  std::vector<std::string> out;
  out.reserve(arity);
  for (const auto& e : j) out.push_back(require_string(e, where));
  return out;
}

FinCat parse_category(const ordered_json& j) {
  FinCat c;
  const auto& objects = require_key(j, "objects", "category");
  if (!objects.is_array()) throw ParseError("category.objects must be an array");
  std::unordered_set<std::string> seen;
  for (const auto& o : objects) {
    std::string name = require_string(o, "object name");
    if (!seen.insert(name).second)
      throw ParseError(cat_str("duplicate object name \"", name, "\""));
    c.objects.push_back(std::move(name));
  }

  const auto& morphisms = require_key(j, "morphisms", "category");
  if (!morphisms.is_array()) throw ParseError("category.morphisms must be an array");
  seen.clear();
  for (const auto& entry : morphisms) {
    const auto tup = require_tuple(entry, 3, "morphism entry [name, dom, cod]");
    if (!seen.insert(tup[0]).second)
      throw ParseError(cat_str("duplicate morphism name \"", tup[0], "\""));
    FinCat::MorRec rec;
    rec.name = tup[0];
    rec.dom = c.object_named(tup[1]);
    rec.cod = c.object_named(tup[2]);
    c.morphisms.push_back(std::move(rec));
  }

  const auto& identities = require_key(j, "identities", "category");
  if (!identities.is_object()) throw ParseError("category.identities must be an object");
  c.identities.assign(c.objects.size(), Mor{});
  for (const auto& [key, value] : identities.items()) {
    const Obj a = c.object_named(key);
    c.identities[static_cast<std::size_t>(a.v)] =
        c.morphism_named(require_string(value, "identity entry"));
  }
  for (std::size_t a = 0; a < c.objects.size(); ++a)
    if (!c.identities[a].valid())
      throw ParseError(cat_str("no identity given for object \"", c.objects[a], "\""));

  const auto& compose = require_key(j, "compose", "category");
  if (!compose.is_array()) throw ParseError("category.compose must be an array");
  const std::size_t m = c.morphisms.size();
  c.compose_table.assign(m * m, Mor{});
  for (const auto& entry : compose) {
    const auto tup = require_tuple(entry, 3, "compose entry [g, f, g_after_f]");
    const Mor g = c.morphism_named(tup[0]);
    const Mor f = c.morphism_named(tup[1]);
    const Mor r = c.morphism_named(tup[2]);
    const std::size_t idx = static_cast<std::size_t>(g.v) * m + static_cast<std::size_t>(f.v);
    if (c.compose_table[idx].valid())
      throw ParseError(cat_str("duplicate compose entry for (", tup[0], ", ", tup[1], ")"));
    c.compose_table[idx] = r;
  }
  return c;
}

MagmalStructure parse_magmal(const ordered_json& j, CatRef cat) {
  MagmalStructure m;
  m.base = std::move(cat);
  const FinCat& base = *m.base;
  const std::size_t n = base.object_count();
  const std::size_t mm = base.morphism_count();

  m.unit = base.object_named(require_string(require_key(j, "unit", "magmal"), "magmal.unit"));

  const auto& tobj = require_key(j, "tensor_objects", "magmal");
  if (!tobj.is_array()) throw ParseError("magmal.tensor_objects must be an array");
  m.tensor_obj.assign(n * n, Obj{});
  std::vector<bool> seen_obj(n * n, false);
  for (const auto& entry : tobj) {
    const auto tup = require_tuple(entry, 3, "tensor_objects entry [a, b, a_tensor_b]");
    const Obj a = base.object_named(tup[0]);
    const Obj b = base.object_named(tup[1]);
    const std::size_t idx = static_cast<std::size_t>(a.v) * n + static_cast<std::size_t>(b.v);
    if (seen_obj[idx])
      throw ParseError(cat_str("duplicate tensor_objects entry for (", tup[0], ", ", tup[1], ")"));
    seen_obj[idx] = true;
    m.tensor_obj[idx] = base.object_named(tup[2]);
  }

  const auto& tmor = require_key(j, "tensor_morphisms", "magmal");
  if (!tmor.is_array()) throw ParseError("magmal.tensor_morphisms must be an array");
  m.tensor_mor.assign(mm * mm, Mor{});
  std::vector<bool> seen_mor(mm * mm, false);
  for (const auto& entry : tmor) {
    const auto tup = require_tuple(entry, 3, "tensor_morphisms entry [f, g, f_tensor_g]");
    const Mor f = base.morphism_named(tup[0]);
    const Mor g = base.morphism_named(tup[1]);
    const std::size_t idx = static_cast<std::size_t>(f.v) * mm + static_cast<std::size_t>(g.v);
    if (seen_mor[idx])
      throw ParseError(
          cat_str("duplicate tensor_morphisms entry for (", tup[0], ", ", tup[1], ")"));
    seen_mor[idx] = true;
    m.tensor_mor[idx] = base.morphism_named(tup[2]);
  }

  auto parse_component_map = [&](const char* key) {
    const auto& block = require_key(j, key, "magmal");
    if (!block.is_object()) throw ParseError(cat_str("magmal.", key, " must be an object"));
    std::vector<Mor> out(n, Mor{});
    for (const auto& [obj_name, mor_name] : block.items()) {
      const Obj a = base.object_named(obj_name);
      out[static_cast<std::size_t>(a.v)] =
          base.morphism_named(require_string(mor_name, "unitor component"));
    }
    return out;
  };
  m.lambda = parse_component_map("lambda");
  m.rho = parse_component_map("rho");
  return m;
}

SymmetricStructure parse_symmetry(const ordered_json& j, const FinCat& base) {
  SymmetricStructure s;
  const std::size_t n = base.object_count();

  const auto& alpha = require_key(j, "alpha", "symmetry");
  if (!alpha.is_array()) throw ParseError("symmetry.alpha must be an array");
  s.alpha.assign(n * n * n, Mor{});
  for (const auto& entry : alpha) {
    const auto tup = require_tuple(entry, 4, "alpha entry [a, b, c, component]");
    const Obj a = base.object_named(tup[0]);
    const Obj b = base.object_named(tup[1]);
    const Obj c = base.object_named(tup[2]);
    const std::size_t idx =
        (static_cast<std::size_t>(a.v) * n + static_cast<std::size_t>(b.v)) * n +
        static_cast<std::size_t>(c.v);
    if (s.alpha[idx].valid())
      throw ParseError(cat_str("duplicate alpha entry for (", tup[0], ", ", tup[1], ", ", tup[2],
                               ")"));
    s.alpha[idx] = base.morphism_named(tup[3]);
  }

  const auto& sigma = require_key(j, "sigma", "symmetry");
  if (!sigma.is_array()) throw ParseError("symmetry.sigma must be an array");
  s.sigma.assign(n * n, Mor{});
  for (const auto& entry : sigma) {
    const auto tup = require_tuple(entry, 3, "sigma entry [a, b, component]");
    const Obj a = base.object_named(tup[0]);
    const Obj b = base.object_named(tup[1]);
    const std::size_t idx = static_cast<std::size_t>(a.v) * n + static_cast<std::size_t>(b.v);
    if (s.sigma[idx].valid())
      throw ParseError(cat_str("duplicate sigma entry for (", tup[0], ", ", tup[1], ")"));
    s.sigma[idx] = base.morphism_named(tup[2]);
  }
  return s;
}

IdentityMagma parse_magma(const ordered_json& j, const FinCat& base) {
  IdentityMagma g;
  const std::size_t n = base.object_count();
  auto parse_map = [&](const char* key) {
    const auto& block = require_key(j, key, "magma");
    if (!block.is_object()) throw ParseError(cat_str("magma.", key, " must be an object"));
    std::vector<Mor> out(n, Mor{});
    for (const auto& [obj_name, mor_name] : block.items()) {
      const Obj a = base.object_named(obj_name);
      out[static_cast<std::size_t>(a.v)] =
          base.morphism_named(require_string(mor_name, "magma component"));
    }
    for (std::size_t a = 0; a < n; ++a)
      if (!out[a].valid())
        throw ParseError(cat_str("magma.", key, " has no entry for object \"", base.objects[a],
                                 "\""));
    return out;
  };
  g.eta = parse_map("eta");
  g.mu = parse_map("mu");
  return g;
}

Bundle parse_impl(const std::string& text, bool check_laws) {
  ordered_json doc;
  try {
    doc = ordered_json::parse(text);
  } catch (const nlohmann::json::parse_error& e) {
    const auto [line, col] = line_col_of(text, e.byte);
    throw ParseError(cat_str("bundle text is not valid JSON at line ", line, ", column ", col,
                             ": ", e.what()));
  }
  if (!doc.is_object()) throw ParseError("bundle must be a JSON object");

  Bundle b;
  if (auto meta = doc.find("meta"); meta != doc.end() && meta->is_object()) {
    if (auto it = meta->find("name"); it != meta->end())
      b.name = require_string(*it, "meta.name");
    if (auto it = meta->find("notes"); it != meta->end())
      b.notes = require_string(*it, "meta.notes");
  }

  b.category = std::make_shared<FinCat>(parse_category(require_key(doc, "category", "bundle")));

  if (check_laws) {
    const ValidationReport report = validate_category(*b.category);
    if (!report.ok())
      throw LawError(cat_str("category tables violate the laws:\n", report.to_string()));
  }

  if (auto it = doc.find("magmal"); it != doc.end()) {
    b.magmal = parse_magmal(*it, b.category);
    if (check_laws) {
      const ValidationReport report = validate_magmal(*b.magmal);
      if (!report.ok())
        throw LawError(cat_str("magmal block violates the laws:\n", report.to_string()));
    }
  }

  if (auto it = doc.find("symmetry"); it != doc.end()) {
    if (!b.magmal) throw ParseError("symmetry block requires a magmal block");
    b.symmetry = parse_symmetry(*it, *b.category);
    if (check_laws) {
      const ValidationReport report = validate_symmetric(*b.magmal, *b.symmetry);
      if (!report.ok())
        throw LawError(cat_str("symmetry block violates the laws:\n", report.to_string()));
    }
  }

  if (auto it = doc.find("magma"); it != doc.end()) {
    if (!b.magmal) throw ParseError("magma block requires a magmal block");
    b.magma = parse_magma(*it, *b.category);
    if (check_laws) {
      const ValidationReport report = validate_identity_magma(*b.magmal, *b.magma);
      if (!report.ok())
        throw LawError(cat_str("magma block violates the laws:\n", report.to_string()));
    }
  }

  return b;
}

} // namespace

bool Bundle::operator==(const Bundle& other) const {
  if (name != other.name || notes != other.notes) return false;
  if (!(*category == *other.category)) return false;
  if (magmal.has_value() != other.magmal.has_value()) return false;
  if (magmal && !(*magmal == *other.magmal)) return false;
  if (symmetry != other.symmetry) return false;
  return magma == other.magma;
}

Bundle parse_bundle(const std::string& text) { return parse_impl(text, true); }

Bundle parse_bundle_unchecked(const std::string& text) { return parse_impl(text, false); }

std::string serialize_bundle(const Bundle& b) {
  const FinCat& c = *b.category;
  ordered_json doc;

  ordered_json meta;
  meta["name"] = b.name;
  if (!b.notes.empty()) meta["notes"] = b.notes;
  doc["meta"] = std::move(meta);

  ordered_json cat;
  cat["objects"] = c.objects;
  ordered_json morphisms = ordered_json::array();
  for (const auto& rec : c.morphisms)
    morphisms.push_back({rec.name, c.objects[static_cast<std::size_t>(rec.dom.v)],
                         c.objects[static_cast<std::size_t>(rec.cod.v)]});
  cat["morphisms"] = std::move(morphisms);
  ordered_json identities = ordered_json::object();
  for (std::size_t a = 0; a < c.objects.size(); ++a)
    identities[c.objects[a]] = c.morphism_name(c.identities[a]);
  cat["identities"] = std::move(identities);
  ordered_json compose = ordered_json::array();
  const std::size_t m = c.morphism_count();
  for (std::size_t g = 0; g < m; ++g)
    for (std::size_t f = 0; f < m; ++f) {
      const Mor r = c.compose_table[g * m + f];
      if (r.valid())
        compose.push_back({c.morphisms[g].name, c.morphisms[f].name, c.morphism_name(r)});
    }
  cat["compose"] = std::move(compose);
  doc["category"] = std::move(cat);

  if (b.magmal) {
    const MagmalStructure& mg = *b.magmal;
    ordered_json block;
    block["unit"] = c.object_name(mg.unit);
    ordered_json tobj = ordered_json::array();
    const std::size_t n = c.object_count();
    for (std::size_t a = 0; a < n; ++a)
      for (std::size_t bb = 0; bb < n; ++bb)
        tobj.push_back({c.objects[a], c.objects[bb],
                        c.object_name(mg.tensor_obj[a * n + bb])});
    block["tensor_objects"] = std::move(tobj);
    ordered_json tmor = ordered_json::array();
    for (std::size_t f = 0; f < m; ++f)
      for (std::size_t g = 0; g < m; ++g)
        tmor.push_back({c.morphisms[f].name, c.morphisms[g].name,
                        c.morphism_name(mg.tensor_mor[f * m + g])});
    block["tensor_morphisms"] = std::move(tmor);
    ordered_json lambda = ordered_json::object();
    ordered_json rho = ordered_json::object();
    for (std::size_t a = 0; a < n; ++a) {
      lambda[c.objects[a]] = c.morphism_name(mg.lambda[a]);
      rho[c.objects[a]] = c.morphism_name(mg.rho[a]);
    }
    block["lambda"] = std::move(lambda);
    block["rho"] = std::move(rho);
    doc["magmal"] = std::move(block);
  }

  if (b.symmetry) {
    const SymmetricStructure& s = *b.symmetry;
    const std::size_t n = c.object_count();
    ordered_json block;
    ordered_json alpha = ordered_json::array();
    for (std::size_t a = 0; a < n; ++a)
      for (std::size_t bb = 0; bb < n; ++bb)
        for (std::size_t cc = 0; cc < n; ++cc)
          alpha.push_back({c.objects[a], c.objects[bb], c.objects[cc],
                           c.morphism_name(s.alpha[(a * n + bb) * n + cc])});
    block["alpha"] = std::move(alpha);
    ordered_json sigma = ordered_json::array();
    for (std::size_t a = 0; a < n; ++a)
      for (std::size_t bb = 0; bb < n; ++bb)
        sigma.push_back({c.objects[a], c.objects[bb], c.morphism_name(s.sigma[a * n + bb])});
    block["sigma"] = std::move(sigma);
    doc["symmetry"] = std::move(block);
  }

  if (b.magma) {
    ordered_json block;
    ordered_json eta = ordered_json::object();
    ordered_json mu = ordered_json::object();
    for (std::size_t a = 0; a < c.object_count(); ++a) {
      eta[c.objects[a]] = c.morphism_name(b.magma->eta[a]);
      mu[c.objects[a]] = c.morphism_name(b.magma->mu[a]);
    }
    block["eta"] = std::move(eta);
    block["mu"] = std::move(mu);
    doc["magma"] = std::move(block);
  }

  return doc.dump(2) + "\n";
}

namespace {

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw IoError(cat_str("cannot open \"", path, "\""));
  std::ostringstream os;
  os << in.rdbuf();
  return os.str();
}

} // namespace

Bundle load_bundle_file(const std::string& path) { return parse_bundle(read_file(path)); }

Bundle load_bundle_file_unchecked(const std::string& path) {
  return parse_bundle_unchecked(read_file(path));
}

void write_bundle_file(const Bundle& b, const std::string& path) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw IoError(cat_str("cannot write \"", path, "\""));
  out << serialize_bundle(b);
}

} // namespace cocart
