// Acceptance suite: one pass/fail line per criterion, nonzero exit when any
// criterion fails. Each criterion is exact; the first four also carry a
// wall-clock budget that is enforced here.

#include <chrono>
#include <cstdio>
#include <functional>
#include <sstream>
#include <string>
#include <vector>

#include "cocart/characterize.hpp"
#include "cocart/commands.hpp"
#include "cocart/egger.hpp"
#include "cocart/splitting.hpp"
#include "fixtures.hpp"

using namespace cocart;
using cocart::testing::fixture;

namespace {

struct Failure {
  std::string message;
};

void require(bool condition, const std::string& message) {
  if (!condition) throw Failure{message};
}

const ReportEntry& entry_labelled(const Report& r, const std::string& label) {
  for (const auto& e : r.entries)
    if (e.label == label) return e;
  throw Failure{"report has no entry labelled \"" + label + "\""};
}

std::string data_value(const ReportEntry& e, const std::string& key) {
  for (const auto& [k, v] : e.data)
    if (k == key) return v;
  throw Failure{"entry \"" + e.label + "\" has no datum \"" + key + "\""};
}

// ---------------------------------------------------------------------------

void criterion_theorem_agreement() {
  for (const char* name : {"f1_terminal", "f2_join", "f7_double_unit"}) {
    const Report r = run_check(fixture(name), "all");
    for (const char c : {'a', 'b', 'c', 'd', 'e'}) {
      const ReportEntry& e = entry_labelled(r, std::string("condition (") + c + ")");
      require(e.holds == true, std::string(name) + ": condition " + c + " should hold");
    }
    require(entry_labelled(r, "agreement").holds == true,
            std::string(name) + ": verdicts should agree");
  }
  for (const char* name : {"f3_meet", "f4_z2"}) {
    const Report r = run_check(fixture(name), "all");
    for (const char c : {'a', 'd', 'e'}) {
      const ReportEntry& e = entry_labelled(r, std::string("condition (") + c + ")");
      require(e.holds == false, std::string(name) + ": condition " + c + " should fail");
    }
    const ReportEntry& b = entry_labelled(r, "condition (b)");
    require(b.holds == false, std::string(name) + ": condition b should fail");
    require(data_value(b, "commutative_monoid_count") == "0",
            std::string(name) + ": condition b count should be 0");
  }
}

void criterion_egger_necessity() {
  const std::vector<std::pair<std::size_t, std::size_t>> sizes{{1, 1}, {2, 2}, {3, 2}};
  for (const auto& [p, q] : sizes) {
    const FinSetObj a = make_finset(p, "a");
    const FinSetObj b = make_finset(q, "b");

    const auto witness = check_diagram2_egger(a, b);
    std::ostringstream tag;
    tag << "(" << p << ", " << q << ")";
    require(witness.has_value(), "no witness for sizes " + tag.str());
    require(witness->element.tag == EggerElem::Tag::Mid,
            "witness is not a mid element for sizes " + tag.str());
    require(witness->image.tag == EggerElem::Tag::Inl,
            "witness image is not an inl element for sizes " + tag.str());
    require(witness->image.first == witness->element.first,
            "witness image is not the first component for sizes " + tag.str());

    const ValidationReport laws = egger_magma_laws({a, b}, 3);
    require(laws.ok(), "magma law battery failed for sizes " + tag.str() + ":\n" +
                           laws.to_string());
  }
}

void criterion_splitting_recovers_coproducts() {
  const EggerSplitting split =
      egger_synthesize_coproduct(make_finset(2, "a"), make_finset(2, "b"), 3);
  require(split.summand.size() == 4, "summand should have 4 elements");
  // egger_synthesize_coproduct already ran the brute-force oracle over every
  // probe target of size <= 3 and throws on any failure; re-establish the
  // retraction identities here for good measure.
  require(compose(split.retraction, split.section) == identity_map(split.summand),
          "retraction . section should be the identity");
}

void criterion_monoid_semigroup_counts() {
  for (std::size_t n = 1; n <= 3; ++n) {
    const auto [monoids, semigroups] = monoid_semigroup_correspondence(n);
    std::ostringstream msg;
    msg << "n = " << n << ": " << monoids << " monoids vs " << semigroups << " semigroups";
    require(monoids == semigroups, msg.str());
  }
}

void criterion_bijection_round_trips() {
  for (const char* name : {"f1_terminal", "f2_join", "f7_double_unit"}) {
    const Bundle b = fixture(name);
    const InitialityData bracket{b.magma->eta};
    const Coprojections p = coprojections_from_initial(*b.magmal, bracket);
    const InitialityData back = initial_from_coprojections(*b.magmal, p);
    require(back.bracket == bracket.bracket,
            std::string(name) + ": bracket -> coprojections -> bracket is not the identity");
    const Coprojections again = coprojections_from_initial(*b.magmal, back);
    require(again.pi1 == p.pi1 && again.pi2 == p.pi2,
            std::string(name) + ": coprojections -> bracket -> coprojections is not the identity");
  }
}

void criterion_unique_associator_braiding() {
  for (const char* name : {"f1_terminal", "f2_join", "f7_double_unit"}) {
    const Bundle b = fixture(name);
    // Both constructors enumerate all candidate natural transformations and
    // throw unless there is exactly one; coherence is re-checked here.
    const NatTrans alpha = unique_associator(*b.magmal);
    const NatTrans sigma = unique_braiding(*b.magmal);
    require(natural_transformations_between(alpha.source, alpha.target).size() == 1,
            std::string(name) + ": associator candidate count is not 1");
    require(natural_transformations_between(sigma.source, sigma.target).size() == 1,
            std::string(name) + ": braiding candidate count is not 1");
    require(check_pentagon(*b.magmal, alpha.components).ok(),
            std::string(name) + ": pentagon fails");
    require(check_triangle(*b.magmal, alpha.components).ok(),
            std::string(name) + ": triangle fails");
    require(check_hexagons(*b.magmal, alpha.components, sigma.components).ok(),
            std::string(name) + ": hexagons fail");
    require(check_sigma_involution(*b.magmal, sigma.components).ok(),
            std::string(name) + ": braiding is not an involution");
  }
}

void criterion_adjoint_route() {
  for (const char* name : {"f1_terminal", "f2_join", "f7_double_unit"}) {
    const Bundle b = fixture(name);
    const auto ad = find_right_adjoint_to_tensor(*b.magmal);
    require(ad.has_value(), std::string(name) + ": right adjoint should exist");
    const IdentityMagma derived = derived_magma_from_adjoint(*b.magmal, *ad);
    require(derived.eta_at(b.magmal->unit) == b.category->identity(b.magmal->unit),
            std::string(name) + ": derived eta_I is not the identity");
  }
  require(!find_right_adjoint_to_tensor(*fixture("f4_z2").magmal).has_value(),
          "z2: right adjoint should not exist");

  const Bundle f2 = fixture("f2_join");
  const auto ad = find_right_adjoint_to_tensor(*f2.magmal);
  const IdentityMagma derived = derived_magma_from_adjoint(*f2.magmal, *ad);
  const IdentityMagma canonical = canonical_magma_from_coproducts(*f2.magmal);
  require(derived == canonical, "join: derived magma differs from the canonical magma");
}

void criterion_karoubi() {
  const KaroubiEnvelope k5 = karoubi_envelope(fixture("f5_walking_idempotent").category);
  require(k5.cat->object_count() == 2, "kar(F5) should have 2 objects");
  require(k5.cat->morphism_count() == 5, "kar(F5) should have 5 morphisms");

  for (const char* name :
       {"f1_terminal", "f2_join", "f4_z2", "f5_walking_idempotent", "f7_double_unit"}) {
    const KaroubiEnvelope k = karoubi_envelope(fixture(name).category);
    for (const Idempotent& e : all_idempotents(*k.cat))
      require(split_idempotent(e, *k.cat).has_value(),
              std::string(name) + ": an envelope idempotent failed to split");
  }
}

void criterion_retraction_lemma() {
  for (const char* name : {"f1_terminal", "f2_join", "f3_meet", "f4_z2",
                           "f5_walking_idempotent", "f5_tensor", "f7_double_unit"}) {
    const Bundle b = fixture(name);
    const FinCat& c = *b.category;
    for (const Idempotent& e : all_idempotents(c)) {
      const bool has_retraction = check_retraction_lemma(e, c);
      require(has_retraction == (e.endo == c.identity(e.object)),
              std::string(name) + ": retraction lemma mismatch at \"" +
                  c.morphism_name(e.endo) + "\"");
    }
  }
}

struct Criterion {
  int number;
  const char* title;
  double budget_seconds;  // 0 = exactness only
  std::function<void()> body;
};

} // namespace

int main() {
  const std::vector<Criterion> criteria{
      {1, "Theorem agreement: a-e hold on F1/F2/F7; a, d, e fail and b counts 0 on F3/F4",
       10.0, criterion_theorem_agreement},
      {2, "Egger necessity: the quasi-symmetry square fails mid |-> inl while all magma laws "
          "hold (probes up to size 3)",
       30.0, criterion_egger_necessity},
      {3, "Splitting recovers coproducts: the (2,2) idempotent splits through a 4-element "
          "summand passing the coproduct oracle",
       30.0, criterion_splitting_recovers_coproducts},
      {4, "Monoid/semigroup correspondence: counts agree for n = 1, 2, 3", 60.0,
       criterion_monoid_semigroup_counts},
      {5, "Bijection round trips: initiality data <-> coprojections on F1/F2/F7", 0.0,
       criterion_bijection_round_trips},
      {6, "Unique associator and braiding with full coherence on F1/F2/F7", 0.0,
       criterion_unique_associator_braiding},
      {7, "Adjoint route: adjoints on F1/F2/F7, none on F4, derived = canonical on F2", 0.0,
       criterion_adjoint_route},
      {8, "Karoubi: kar(F5) is 2 objects / 5 morphisms; envelope idempotents split", 0.0,
       criterion_karoubi},
      {9, "Retraction lemma over every idempotent of every fixture", 0.0,
       criterion_retraction_lemma},
  };

  int failures = 0;
  for (const Criterion& c : criteria) {
    const auto start = std::chrono::steady_clock::now();
    std::string failure;
    try {
      c.body();
    } catch (const Failure& f) {
      failure = f.message;
    } catch (const std::exception& e) {
      failure = e.what();
    }
    const double elapsed =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    if (failure.empty() && c.budget_seconds > 0.0 && elapsed > c.budget_seconds) {
      std::ostringstream os;
      os << "exceeded the " << c.budget_seconds << "s budget (" << elapsed << "s)";
      failure = os.str();
    }
    if (failure.empty()) {
      std::printf("PASS  criterion %d: %s (%.2fs)\n", c.number, c.title, elapsed);
    } else {
      std::printf("FAIL  criterion %d: %s (%.2fs)\n      %s\n", c.number, c.title, elapsed,
                  failure.c_str());
      ++failures;
    }
  }
  if (failures != 0) std::printf("%d criteria failed\n", failures);
  return failures;
}
