#include "cdt/cdt.h"

#include <cstring>
#include <string>

#include "cdt/io.hpp"
#include "cdt/report.hpp"

struct cdt_graph {
  cdt::ReportInput input;
};

namespace {

thread_local std::string last_error;

cdt_status fail(cdt_status s, const std::string& message) {
  last_error = message;
  return s;
}

char* dup(const std::string& s) {
  char* out = static_cast<char*>(std::malloc(s.size() + 1));
  if (out != nullptr) std::memcpy(out, s.c_str(), s.size() + 1);
  return out;
}

template <class F>
cdt_status guarded(F&& f) {
  last_error.clear();
  try {
    return f();
  } catch (const cdt::Graph6Error& e) {
    return fail(CDT_ERR_GRAPH6, e.what());
  } catch (const cdt::InputError& e) {
    return fail(CDT_ERR_INPUT, e.what());
  } catch (const std::bad_alloc&) {
    return fail(CDT_ERR_INTERNAL, "out of memory");
  } catch (const std::exception& e) {
    return fail(CDT_ERR_INTERNAL, e.what());
  }
}

cdt_status emit(const std::string& s, char** out) {
  *out = dup(s);
  return *out != nullptr ? CDT_OK : fail(CDT_ERR_INTERNAL, "out of memory");
}

cdt::ReportOptions options_from(const cdt_options* opts) {
  cdt::ReportOptions o;
  if (opts != nullptr) {
    if (!(opts->budget_seconds > 0)) throw std::invalid_argument("budget_seconds must be positive");
    o.budget_seconds = opts->budget_seconds;
    o.hamiltonicity = opts->hamiltonicity != 0;
  }
  return o;
}

}  // namespace

extern "C" {

const char* cdt_last_error(void) { return last_error.c_str(); }

cdt_options cdt_default_options(void) {
  const cdt::ReportOptions o;
  return {o.budget_seconds, o.hamiltonicity ? 1 : 0};
}

cdt_status cdt_graph_from_catalog(const char* name, cdt_graph** out) {
  if (name == nullptr || out == nullptr) return fail(CDT_ERR_ARGUMENT, "null argument");
  *out = nullptr;
  return guarded([&] {
    const auto id = cdt::parse_cdt_name(name);
    if (!id) return fail(CDT_ERR_UNKNOWN_GRAPH, std::string("unknown graph ") + name);
    *out = new cdt_graph{cdt::catalog_input(*id)};
    return CDT_OK;
  });
}

cdt_status cdt_graph_from_graph6(const char* text, cdt_graph** out) {
  if (text == nullptr || out == nullptr) return fail(CDT_ERR_ARGUMENT, "null argument");
  *out = nullptr;
  return guarded([&] {
    *out = new cdt_graph{cdt::graph6_input(text)};
    return CDT_OK;
  });
}

void cdt_graph_free(cdt_graph* g) { delete g; }

void cdt_string_free(char* s) { std::free(s); }

cdt_status cdt_graph_order(const cdt_graph* g, int* out) {
  if (g == nullptr || out == nullptr) return fail(CDT_ERR_ARGUMENT, "null argument");
  *out = g->input.graph.order();
  return CDT_OK;
}

cdt_status cdt_graph_to_graph6(const cdt_graph* g, char** out) {
  if (g == nullptr || out == nullptr) return fail(CDT_ERR_ARGUMENT, "null argument");
  *out = nullptr;
  return guarded([&] { return emit(cdt::write_graph6(g->input.graph), out); });
}

cdt_status cdt_catalog_json(char** out) {
  if (out == nullptr) return fail(CDT_ERR_ARGUMENT, "null argument");
  *out = nullptr;
  return guarded([&] { return emit(cdt::catalog_view().dump(2), out); });
}

cdt_status cdt_analyze_json(const cdt_graph* g, char** out) {
  if (g == nullptr || out == nullptr) return fail(CDT_ERR_ARGUMENT, "null argument");
  *out = nullptr;
  return guarded([&] { return emit(cdt::analyze_view(g->input).dump(2), out); });
}

cdt_status cdt_orient_json(const cdt_graph* g, char** out) {
  if (g == nullptr || out == nullptr) return fail(CDT_ERR_ARGUMENT, "null argument");
  *out = nullptr;
  return guarded([&] { return emit(cdt::orient_view(g->input).dump(2), out); });
}

cdt_status cdt_separator_json(const cdt_graph* g, char** out) {
  if (g == nullptr || out == nullptr) return fail(CDT_ERR_ARGUMENT, "null argument");
  *out = nullptr;
  return guarded([&] { return emit(cdt::separator_view(g->input).dump(2), out); });
}

cdt_status cdt_separator_dot(const cdt_graph* g, char** out) {
  if (g == nullptr || out == nullptr) return fail(CDT_ERR_ARGUMENT, "null argument");
  *out = nullptr;
  return guarded([&] { return emit(cdt::separator_dot(g->input), out); });
}

cdt_status cdt_graph_dot(const cdt_graph* g, char** out) {
  if (g == nullptr || out == nullptr) return fail(CDT_ERR_ARGUMENT, "null argument");
  *out = nullptr;
  return guarded([&] { return emit(cdt::emit_dot(cdt::Digraph::of(g->input.graph), g->input.name), out); });
}

cdt_status cdt_verify_json(const cdt_graph* g, const cdt_options* opts, char** out, int* exit_code) {
  if (g == nullptr || out == nullptr || exit_code == nullptr) return fail(CDT_ERR_ARGUMENT, "null argument");
  *out = nullptr;
  if (opts != nullptr && !(opts->budget_seconds > 0)) return fail(CDT_ERR_ARGUMENT, "budget_seconds must be positive");
  return guarded([&] {
    cdt::VerificationReport r;
    r.graphs.push_back(cdt::run_report(g->input, options_from(opts)));
    *exit_code = r.exit_code();
    return emit(cdt::to_json(r).dump(2), out);
  });
}

cdt_status cdt_verify_all_json(const cdt_options* opts, char** out, int* exit_code) {
  if (out == nullptr || exit_code == nullptr) return fail(CDT_ERR_ARGUMENT, "null argument");
  *out = nullptr;
  if (opts != nullptr && !(opts->budget_seconds > 0)) return fail(CDT_ERR_ARGUMENT, "budget_seconds must be positive");
  return guarded([&] {
    const cdt::VerificationReport r = cdt::run_all(options_from(opts));
    *exit_code = r.exit_code();
    return emit(cdt::to_json(r).dump(2), out);
  });
}

}  // extern "C"
