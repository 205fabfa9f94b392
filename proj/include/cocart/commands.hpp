#pragma once

#include <optional>
#include <string>

#include "cocart/bundle.hpp"
#include "cocart/report.hpp"

// Command layer: the operations behind the CLI and the C API. Negative
// mathematical verdicts are reported, not thrown; exceptions mean bad input
// or an exhausted search budget.

namespace cocart {

struct CommandOptions {
  SearchLimits limits;
};

// Law report for a structurally parsed bundle (use the unchecked parser).
Report run_validate(const Bundle& b);

// condition: "a".."e" or "all". Dispatches to the characterize operations;
// "all" additionally cross-checks that all five verdicts agree.
Report run_check(const Bundle& b, const std::string& condition, CommandOptions opts = {});

struct BundleResult {
  Report report;
  std::optional<Bundle> output;
};

// Synthesizes binary coproducts pair by pair by splitting the canonical
// idempotents; with `karoubi` the category is first completed and the
// structure transported. Emits the working bundle.
BundleResult run_synthesize(const Bundle& b, bool karoubi, CommandOptions opts = {});

// Karoubi envelope of the bundle's category, transporting magmal/magma
// blocks when present.
BundleResult run_karoubi(const Bundle& b);

// The finite-set walkthrough: coherence and magma laws on the given
// carriers, the quasi-symmetry failure with an element trace, the splitting
// that recovers A + B, and the monoid/semigroup counts.
Report run_demo_egger(std::size_t size_a, std::size_t size_b, std::size_t probe_bound,
                      CommandOptions opts = {});

} // namespace cocart
