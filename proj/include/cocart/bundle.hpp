#pragma once

#include <optional>
#include <string>

#include "cocart/fincat.hpp"
#include "cocart/magmal.hpp"

// Bundle files: the toolkit's on-disk description of a finite category with
// optional magmal / symmetry / magma blocks. The format is a single JSON
// document with top-level keys `meta`, `category`, `magmal`, `symmetry`,
// `magma`; composition and the tensor tables are explicit lists of triples so
// files stay line-diffable and auditable. See docs/bundle_format.md.

namespace cocart {

struct Bundle {
  std::string name;
  std::string notes;
  CatRef category;
  std::optional<MagmalStructure> magmal;
  std::optional<SymmetricStructure> symmetry;
  std::optional<IdentityMagma> magma;

  bool operator==(const Bundle& other) const;
};

// Structural parse followed by semantic validation of every block present.
// Throws ParseError (malformed text, with line/column), ResolveError
// (dangling name), or LawError (tables violate category/magmal laws).
Bundle parse_bundle(const std::string& text);

// Structural parse and name resolution only; law violations are left for
// the caller to report. Used by the `validate` command.
Bundle parse_bundle_unchecked(const std::string& text);

// Canonical serialization: stable ordering (file order for objects and
// morphisms, row-major tables), two-space indentation. parse . serialize is
// the identity on Bundle values.
std::string serialize_bundle(const Bundle& b);

Bundle load_bundle_file(const std::string& path);
Bundle load_bundle_file_unchecked(const std::string& path);

void write_bundle_file(const Bundle& b, const std::string& path);

} // namespace cocart
