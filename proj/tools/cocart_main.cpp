// cocart CLI: validate / check / synthesize / karoubi / demo egger over
// bundle files. Links the C API only.
//
// Exit codes: 0 = ran to completion (verdicts may be negative), 1 = input
// error, 2 = enumeration/resource limit.

#include <cstdint>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <string>

#include <CLI11.hpp>

#include "cocart.h"

namespace {

int exit_code_for(cocart_status status) {
  switch (status) {
    case COCART_OK: return 0;
    case COCART_ERR_LIMIT: return 2;
    default: return 1;
  }
}

int fail(cocart_status status) {
  std::cerr << "error: " << cocart_last_error() << "\n";
  return exit_code_for(status);
}

int print_report(cocart_report* report, bool machine) {
  char* text = nullptr;
  const cocart_status status = cocart_report_render(report, machine ? 1 : 0, &text);
  if (status != COCART_OK) {
    cocart_report_free(report);
    return fail(status);
  }
  std::cout << text;
  cocart_string_free(text);
  const int code = cocart_report_limit_hit(report) ? 2 : 0;
  cocart_report_free(report);
  return code;
}

int write_bundle(cocart_bundle* bundle, const std::string& path) {
  char* text = nullptr;
  const cocart_status status = cocart_bundle_serialize(bundle, &text);
  if (status != COCART_OK) return fail(status);
  std::ofstream out(path, std::ios::binary);
  if (!out) {
    std::cerr << "error: cannot write \"" << path << "\"\n";
    cocart_string_free(text);
    return 1;
  }
  out << text;
  cocart_string_free(text);
  return 0;
}

} // namespace

int main(int argc, char** argv) {
  CLI::App app{"cocart: decide and synthesize cocartesian structure on finite magmal categories"};
  app.require_subcommand(1);
  app.set_version_flag("--version", cocart_version());

  std::string report_format = "text";
  app.add_option("--report", report_format, "report format")
      ->check(CLI::IsMember({"text", "machine"}))
      ->capture_default_str();
  std::uint64_t limit = 0;
  app.add_option("--limit", limit, "enumeration bound (candidate families per search)");

  std::string validate_file;
  CLI::App* validate = app.add_subcommand("validate", "parse a bundle and report law violations");
  validate->fallthrough();
  validate->add_option("file", validate_file, "bundle file")->required();

  std::string check_file;
  std::string condition = "all";
  CLI::App* check = app.add_subcommand("check", "verdicts for the cocartesianness conditions");
  check->fallthrough();
  check->add_option("file", check_file, "bundle file")->required();
  check->add_option("--condition", condition, "a, b, c, d, e or all")
      ->check(CLI::IsMember({"a", "b", "c", "d", "e", "all"}))
      ->capture_default_str();

  std::string synth_file;
  std::string synth_out;
  bool karoubi_flag = false;
  CLI::App* synthesize =
      app.add_subcommand("synthesize", "synthesize coproducts by splitting idempotents");
  synthesize->fallthrough();
  synthesize->add_option("file", synth_file, "bundle file")->required();
  synthesize->add_flag("--karoubi", karoubi_flag, "complete the category first");
  synthesize->add_option("-o,--output", synth_out, "write the emitted bundle here");

  std::string karoubi_file;
  std::string karoubi_out;
  CLI::App* karoubi = app.add_subcommand("karoubi", "karoubi envelope of the bundle's category");
  karoubi->fallthrough();
  karoubi->add_option("file", karoubi_file, "bundle file")->required();
  karoubi->add_option("-o,--output", karoubi_out, "write the enveloped bundle here");

  CLI::App* demo = app.add_subcommand("demo", "built-in walkthroughs");
  demo->fallthrough();
  demo->require_subcommand(1);
  std::uint32_t size_a = 2, size_b = 2, probe_bound = 3;
  CLI::App* egger = demo->add_subcommand(
      "egger", "the finite-set tensor A + AxB + B: necessity of the compatibility square");
  egger->add_option("--size-a", size_a, "cardinality of A")->capture_default_str();
  egger->add_option("--size-b", size_b, "cardinality of B")->capture_default_str();
  egger->add_option("--probe-bound", probe_bound, "probe carrier bound")->capture_default_str();
  egger->fallthrough();

  CLI11_PARSE(app, argc, argv);
  const bool machine = (report_format == "machine");

  if (*validate) {
    cocart_report* report = nullptr;
    const cocart_status status = cocart_validate_file(validate_file.c_str(), &report);
    if (status != COCART_OK) return fail(status);
    return print_report(report, machine);
  }

  if (*check) {
    cocart_bundle* bundle = nullptr;
    cocart_status status = cocart_bundle_load_file(check_file.c_str(), &bundle);
    if (status != COCART_OK) return fail(status);
    cocart_report* report = nullptr;
    status = cocart_check(bundle, condition.c_str(), limit, &report);
    cocart_bundle_free(bundle);
    if (status != COCART_OK) return fail(status);
    return print_report(report, machine);
  }

  if (*synthesize) {
    cocart_bundle* bundle = nullptr;
    cocart_status status = cocart_bundle_load_file(synth_file.c_str(), &bundle);
    if (status != COCART_OK) return fail(status);
    cocart_report* report = nullptr;
    cocart_bundle* output = nullptr;
    status = cocart_synthesize(bundle, karoubi_flag ? 1 : 0, limit, &report, &output);
    cocart_bundle_free(bundle);
    if (status != COCART_OK) return fail(status);
    if (!synth_out.empty() && output != nullptr) {
      const int rc = write_bundle(output, synth_out);
      if (rc != 0) {
        cocart_bundle_free(output);
        cocart_report_free(report);
        return rc;
      }
    }
    cocart_bundle_free(output);
    return print_report(report, machine);
  }

  if (*karoubi) {
    cocart_bundle* bundle = nullptr;
    cocart_status status = cocart_bundle_load_file(karoubi_file.c_str(), &bundle);
    if (status != COCART_OK) return fail(status);
    cocart_report* report = nullptr;
    cocart_bundle* output = nullptr;
    status = cocart_karoubi(bundle, &report, &output);
    cocart_bundle_free(bundle);
    if (status != COCART_OK) return fail(status);
    if (!karoubi_out.empty() && output != nullptr) {
      const int rc = write_bundle(output, karoubi_out);
      if (rc != 0) {
        cocart_bundle_free(output);
        cocart_report_free(report);
        return rc;
      }
    }
    cocart_bundle_free(output);
    return print_report(report, machine);
  }

  if (*egger) {
    cocart_report* report = nullptr;
    const cocart_status status = cocart_demo_egger(size_a, size_b, probe_bound, limit, &report);
    if (status != COCART_OK) return fail(status);
    return print_report(report, machine);
  }

  return 0;
}
