#pragma once

// Shared test scaffolding: fixture bundles are loaded from the data files so
// the files stay the single source of truth. Mutation helpers copy the
// parsed tables before breaking them.

#include <string>

#include "cocart/bundle.hpp"

namespace cocart::testing {

inline std::string fixture_path(const std::string& name) {
  return std::string(COCART_FIXTURE_DIR) + "/" + name + ".json";
}

inline Bundle fixture(const std::string& name) {
  return load_bundle_file(fixture_path(name));
}

inline Obj obj(const Bundle& b, const std::string& name) {
  return b.category->object_named(name);
}

inline Mor mor(const Bundle& b, const std::string& name) {
  return b.category->morphism_named(name);
}

// A mutable deep copy of the fixture's category.
inline FinCat category_copy(const Bundle& b) { return *b.category; }

// Discrete shape category on k objects (identities only), for diagrams.
inline CatRef make_discrete(std::size_t k) {
  auto c = std::make_shared<FinCat>();
  for (std::size_t i = 0; i < k; ++i) {
    c->objects.push_back("j" + std::to_string(i));
    c->morphisms.push_back({"k" + std::to_string(i), Obj{static_cast<std::int32_t>(i)},
                            Obj{static_cast<std::int32_t>(i)}});
    c->identities.push_back(Mor{static_cast<std::int32_t>(i)});
  }
  c->compose_table.assign(k * k, Mor{});
  for (std::size_t i = 0; i < k; ++i)
    c->compose_table[i * k + i] = Mor{static_cast<std::int32_t>(i)};
  return c;
}

} // namespace cocart::testing
