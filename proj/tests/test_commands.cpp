#include <doctest.h>

#include <json.hpp>

#include "cocart/commands.hpp"
#include "cocart/splitting.hpp"
#include "fixtures.hpp"

using namespace cocart;
using cocart::testing::fixture;

namespace {

const ReportEntry* entry_labelled(const Report& r, const std::string& label) {
  for (const auto& e : r.entries)
    if (e.label == label) return &e;
  return nullptr;
}

std::size_t count_holding(const Report& r, bool value) {
  std::size_t count = 0;
  for (const auto& e : r.entries)
    if (e.holds.has_value() && *e.holds == value) ++count;
  return count;
}

} // namespace

TEST_CASE("check all on the cocartesian and non-cocartesian fixtures") {
  const Report join = run_check(fixture("f2_join"), "all");
  CHECK(count_holding(join, true) == 6);  // five conditions plus agreement
  CHECK(count_holding(join, false) == 0);

  const Report z2 = run_check(fixture("f4_z2"), "all");
  CHECK(count_holding(z2, false) == 5);
  const ReportEntry* agreement = entry_labelled(z2, "agreement");
  REQUIRE(agreement != nullptr);
  CHECK(agreement->holds == true);

  const Report meet = run_check(fixture("f3_meet"), "all");
  CHECK(count_holding(meet, false) == 5);
}

TEST_CASE("single conditions dispatch") {
  const Report a = run_check(fixture("f2_join"), "a");
  REQUIRE(a.entries.size() == 1);
  CHECK(a.entries[0].holds == true);

  CHECK_THROWS_AS(run_check(fixture("f2_join"), "q"), UsageError);
}

TEST_CASE("condition (b) without a symmetry block is a missing-structure error") {
  Bundle b = fixture("f2_join");
  b.symmetry.reset();
  CHECK_THROWS_AS(run_check(b, "b"), MissingStructureError);
  // Condition (a) does not need it.
  CHECK_NOTHROW(run_check(b, "a"));
}

TEST_CASE("check on a bundle without magmal structure") {
  CHECK_THROWS_AS(run_check(fixture("f5_walking_idempotent"), "all"), MissingStructureError);
}

// Conditions (c) and (d) are existential: a bundle that ships no magma block
// still passes when the exhaustive enumeration produces a family that works.
TEST_CASE("check falls back to enumerated magma structures") {
  Bundle b = fixture("f2_join");
  b.magma.reset();
  const Report r = run_check(b, "all");
  for (const char cond : {'c', 'd'}) {
    const ReportEntry* e = entry_labelled(r, std::string("condition (") + cond + ")");
    REQUIRE(e != nullptr);
    CHECK(e->holds == true);
    bool counted = false;
    for (const auto& [k, v] : e->data)
      if (k == "enumerated_structures" && v == "1") counted = true;
    CHECK(counted);
  }
}

// Witness replay: condition (b)'s reported count is reproduced by rerunning
// the enumeration it reports on.
TEST_CASE("reported counts replay") {
  const Bundle b = fixture("f3_meet");
  const Report r = run_check(b, "b");
  const ReportEntry* e = entry_labelled(r, "condition (b)");
  REQUIRE(e != nullptr);
  std::string reported;
  for (const auto& [k, v] : e->data)
    if (k == "commutative_monoid_count") reported = v;
  CHECK(reported ==
        std::to_string(enumerate_identity_magmas(*b.magmal, true, &*b.symmetry).size()));
}

TEST_CASE("the empty category fails every condition for want of a unit") {
  Bundle empty;
  empty.name = "empty";
  empty.category = std::make_shared<FinCat>();
  const Report r = run_check(empty, "all");
  CHECK(count_holding(r, false) == 5);
  for (const auto& e : r.entries)
    if (e.holds == false) CHECK(e.detail.find("no unit object") != std::string::npos);
}

TEST_CASE("a tiny enumeration budget is reported as a limit, not a verdict") {
  // Z/2 has four raw candidate families, so a one-family budget trips.
  const Report r = run_check(fixture("f4_z2"), "b", CommandOptions{SearchLimits{1}});
  CHECK(r.hit_limit());
  REQUIRE(r.entries.size() == 1);
  CHECK_FALSE(r.entries[0].holds.has_value());
}

TEST_CASE("validate reports violations instead of failing") {
  nlohmann::ordered_json doc =
      nlohmann::ordered_json::parse(serialize_bundle(fixture("f2_join")));
  doc["category"]["compose"].push_back({"u", "u", "u"});
  const Bundle lenient = parse_bundle_unchecked(doc.dump());
  const Report r = run_validate(lenient);
  const ReportEntry* laws = entry_labelled(r, "category laws");
  REQUIRE(laws != nullptr);
  CHECK(laws->holds == false);
  CHECK_FALSE(laws->data.empty());

  const Report good = run_validate(fixture("f7_double_unit"));
  CHECK(count_holding(good, false) == 0);
}

TEST_CASE("synthesize on the join poset confirms every coproduct") {
  const BundleResult result = run_synthesize(fixture("f2_join"), false);
  CHECK(count_holding(result.report, false) == 0);
  // Four pairs plus the initiality entry.
  CHECK(count_holding(result.report, true) == 5);
  REQUIRE(result.output.has_value());
  CHECK(*result.output->category == *fixture("f2_join").category);
}

TEST_CASE("synthesize reports when no magma structure exists") {
  const BundleResult result = run_synthesize(fixture("f3_meet"), false);
  const ReportEntry* magma = entry_labelled(result.report, "magma structure");
  REQUIRE(magma != nullptr);
  CHECK(magma->holds == false);
  CHECK(magma->detail.find("no magma structure") != std::string::npos);
}

TEST_CASE("synthesize --karoubi emits the completed bundle") {
  const BundleResult result = run_synthesize(fixture("f5_tensor"), true);
  REQUIRE(result.output.has_value());
  const Bundle& out = *result.output;
  CHECK(out.category->object_count() == 2);
  CHECK(out.category->morphism_count() == 5);
  REQUIRE(out.magmal.has_value());
  CHECK(validate_magmal(*out.magmal).ok());
  for (const Idempotent& e : all_idempotents(*out.category))
    CHECK(split_idempotent(e, *out.category).has_value());
  // Re-parseable as a bundle.
  CHECK_NOTHROW(parse_bundle(serialize_bundle(out)));
}

TEST_CASE("karoubi command transports structure when present") {
  const BundleResult plain = run_karoubi(fixture("f5_walking_idempotent"));
  REQUIRE(plain.output.has_value());
  CHECK_FALSE(plain.output->magmal.has_value());
  CHECK(plain.output->category->object_count() == 2);

  const BundleResult with_structure = run_karoubi(fixture("f2_join"));
  REQUIRE(with_structure.output.has_value());
  CHECK(with_structure.output->magmal.has_value());
  CHECK(with_structure.output->magma.has_value());
  const Report check = run_check(*with_structure.output, "a");
  CHECK(check.entries[0].holds == true);
}

// Completed bundles keep their symmetry and magma blocks and stay fully
// checkable: all five verdicts still agree on them.
TEST_CASE("karoubi-completed bundles run through check all") {
  const BundleResult completed = run_synthesize(fixture("f5_tensor"), true);
  REQUIRE(completed.output.has_value());
  REQUIRE(completed.output->symmetry.has_value());
  const Report r = run_check(*completed.output, "all");
  CHECK(count_holding(r, false) == 5);  // still not semicocartesian
  CHECK(entry_labelled(r, "agreement")->holds == true);

  const BundleResult join = run_karoubi(fixture("f2_join"));
  REQUIRE(join.output.has_value());
  const Report r2 = run_check(*join.output, "all");
  CHECK(count_holding(r2, false) == 0);
  CHECK(count_holding(r2, true) == 6);
}

TEST_CASE("demo egger walks the counterexample") {
  const Report r = run_demo_egger(2, 2, 2);
  const ReportEntry* square = entry_labelled(r, "quasi-symmetry square");
  REQUIRE(square != nullptr);
  CHECK(square->holds == false);
  bool saw_witness = false;
  for (const auto& [k, v] : square->data)
    if (k == "start" && v == "mid(a0,b0)") saw_witness = true;
  CHECK(saw_witness);

  const ReportEntry* split = entry_labelled(r, "splitting recovers the coproduct");
  REQUIRE(split != nullptr);
  CHECK(split->holds == true);

  const ReportEntry* vacuous =
      entry_labelled(run_demo_egger(0, 2, 2), "quasi-symmetry square");
  REQUIRE(vacuous != nullptr);
  CHECK(vacuous->holds == true);

  const Report tiny = run_demo_egger(1, 1, 2);
  const ReportEntry* tiny_split = entry_labelled(tiny, "splitting recovers the coproduct");
  REQUIRE(tiny_split != nullptr);
  CHECK(tiny_split->detail.find("size 2") != std::string::npos);
}

TEST_CASE("reports render in both formats") {
  const Report r = run_check(fixture("f2_join"), "all");
  CHECK_FALSE(render_report_text(r).empty());
  const std::string json_text = render_report_json(r);
  const auto doc = nlohmann::json::parse(json_text);
  CHECK(doc.at("command") == "check");
  CHECK(doc.at("entries").size() == 6);

  const BundleResult k = run_karoubi(fixture("f5_walking_idempotent"));
  const auto kdoc = nlohmann::json::parse(render_report_json(k.report));
  CHECK(kdoc.contains("output_bundle"));
}
