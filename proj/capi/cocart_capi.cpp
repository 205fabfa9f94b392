#include "cocart.h"

#include <cstring>
#include <fstream>
#include <sstream>
#include <string>

#include "cocart/bundle.hpp"
#include "cocart/commands.hpp"
#include "cocart/error.hpp"
#include "cocart/report.hpp"

struct cocart_bundle {
  cocart::Bundle value;
};

struct cocart_report {
  cocart::Report value;
};

namespace {

thread_local std::string g_last_error;

cocart_status status_of(const cocart::ToolkitError& e) {
  switch (e.kind()) {
    case cocart::ErrorKind::Parse: return COCART_ERR_PARSE;
    case cocart::ErrorKind::Resolve: return COCART_ERR_RESOLVE;
    case cocart::ErrorKind::Law: return COCART_ERR_LAW;
    case cocart::ErrorKind::MissingStructure: return COCART_ERR_MISSING_STRUCTURE;
    case cocart::ErrorKind::SizeLimit: return COCART_ERR_LIMIT;
    case cocart::ErrorKind::NotInvertible: return COCART_ERR_NOT_INVERTIBLE;
    case cocart::ErrorKind::InvariantViolated: return COCART_ERR_INVARIANT;
    case cocart::ErrorKind::Io: return COCART_ERR_IO;
    case cocart::ErrorKind::Usage: return COCART_ERR_USAGE;
  }
  return COCART_ERR_INTERNAL;
}

template <typename Fn>
cocart_status guarded(Fn&& fn) {
  try {
    fn();
    g_last_error.clear();
    return COCART_OK;
  } catch (const cocart::ToolkitError& e) {
    g_last_error = e.what();
    return status_of(e);
  } catch (const std::exception& e) {
    g_last_error = e.what();
    return COCART_ERR_INTERNAL;
  } catch (...) {
    g_last_error = "unknown error";
    return COCART_ERR_INTERNAL;
  }
}

char* dup_string(const std::string& s) {
  char* out = new char[s.size() + 1];
  std::memcpy(out, s.data(), s.size());
  out[s.size()] = '\0';
  return out;
}

std::string read_file_text(const char* path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw cocart::IoError(std::string("cannot open \"") + path + "\"");
  std::ostringstream os;
  os << in.rdbuf();
  return os.str();
}

cocart::CommandOptions options_with(uint64_t limit) {
  cocart::CommandOptions opts;
  if (limit != 0) opts.limits.max_candidates = limit;
  return opts;
}

} // namespace

extern "C" {

const char* cocart_version(void) { return "0.1.0"; }

const char* cocart_last_error(void) { return g_last_error.c_str(); }

void cocart_string_free(char* s) { delete[] s; }

cocart_status cocart_bundle_parse(const char* text, cocart_bundle** out) {
  if (text == nullptr || out == nullptr) {
    g_last_error = "null argument";
    return COCART_ERR_USAGE;
  }
  return guarded([&] { *out = new cocart_bundle{cocart::parse_bundle(text)}; });
}

cocart_status cocart_bundle_load_file(const char* path, cocart_bundle** out) {
  if (path == nullptr || out == nullptr) {
    g_last_error = "null argument";
    return COCART_ERR_USAGE;
  }
  return guarded([&] { *out = new cocart_bundle{cocart::load_bundle_file(path)}; });
}

void cocart_bundle_free(cocart_bundle* b) { delete b; }

cocart_status cocart_bundle_serialize(const cocart_bundle* b, char** out_text) {
  if (b == nullptr || out_text == nullptr) {
    g_last_error = "null argument";
    return COCART_ERR_USAGE;
  }
  return guarded([&] { *out_text = dup_string(cocart::serialize_bundle(b->value)); });
}

cocart_status cocart_validate_text(const char* text, cocart_report** out) {
  if (text == nullptr || out == nullptr) {
    g_last_error = "null argument";
    return COCART_ERR_USAGE;
  }
  return guarded([&] {
    const cocart::Bundle b = cocart::parse_bundle_unchecked(text);
    *out = new cocart_report{cocart::run_validate(b)};
  });
}

cocart_status cocart_validate_file(const char* path, cocart_report** out) {
  if (path == nullptr || out == nullptr) {
    g_last_error = "null argument";
    return COCART_ERR_USAGE;
  }
  return guarded([&] {
    const cocart::Bundle b = cocart::parse_bundle_unchecked(read_file_text(path));
    *out = new cocart_report{cocart::run_validate(b)};
  });
}

cocart_status cocart_check(const cocart_bundle* b, const char* condition, uint64_t limit,
                           cocart_report** out) {
  if (b == nullptr || condition == nullptr || out == nullptr) {
    g_last_error = "null argument";
    return COCART_ERR_USAGE;
  }
  return guarded([&] {
    *out = new cocart_report{cocart::run_check(b->value, condition, options_with(limit))};
  });
}

cocart_status cocart_synthesize(const cocart_bundle* b, int karoubi, uint64_t limit,
                                cocart_report** out_report, cocart_bundle** out_bundle) {
  if (b == nullptr || out_report == nullptr) {
    g_last_error = "null argument";
    return COCART_ERR_USAGE;
  }
  return guarded([&] {
    cocart::BundleResult result =
        cocart::run_synthesize(b->value, karoubi != 0, options_with(limit));
    *out_report = new cocart_report{std::move(result.report)};
    if (out_bundle != nullptr)
      *out_bundle = result.output ? new cocart_bundle{std::move(*result.output)} : nullptr;
  });
}

cocart_status cocart_karoubi(const cocart_bundle* b, cocart_report** out_report,
                             cocart_bundle** out_bundle) {
  if (b == nullptr || out_report == nullptr) {
    g_last_error = "null argument";
    return COCART_ERR_USAGE;
  }
  return guarded([&] {
    cocart::BundleResult result = cocart::run_karoubi(b->value);
    *out_report = new cocart_report{std::move(result.report)};
    if (out_bundle != nullptr)
      *out_bundle = result.output ? new cocart_bundle{std::move(*result.output)} : nullptr;
  });
}

cocart_status cocart_demo_egger(uint32_t size_a, uint32_t size_b, uint32_t probe_bound,
                                uint64_t limit, cocart_report** out) {
  if (out == nullptr) {
    g_last_error = "null argument";
    return COCART_ERR_USAGE;
  }
  return guarded([&] {
    *out = new cocart_report{
        cocart::run_demo_egger(size_a, size_b, probe_bound, options_with(limit))};
  });
}

cocart_status cocart_report_render(const cocart_report* r, int machine, char** out_text) {
  if (r == nullptr || out_text == nullptr) {
    g_last_error = "null argument";
    return COCART_ERR_USAGE;
  }
  return guarded([&] {
    *out_text = dup_string(machine != 0 ? cocart::render_report_json(r->value)
                                        : cocart::render_report_text(r->value));
  });
}

int cocart_report_limit_hit(const cocart_report* r) {
  return (r != nullptr && r->value.hit_limit()) ? 1 : 0;
}

void cocart_report_free(cocart_report* r) { delete r; }

} // extern "C"
