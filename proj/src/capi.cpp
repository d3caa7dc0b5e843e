// Copyright 2026 The diagram-kernel Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "diagram_kernel.h"

#include <cstdlib>
#include <cstring>
#include <map>
#include <string>

#include "dk/circuit.hpp"
#include "dk/json_io.hpp"

namespace {

thread_local std::string tl_error;

void set_error(const std::string& message) { tl_error = message; }

char* dup_string(const std::string& text) {
  char* out = static_cast<char*>(std::malloc(text.size() + 1));
  std::memcpy(out, text.c_str(), text.size() + 1);
  return out;
}

}  // namespace

struct dk_value {
  dk::io::AnyValue value;
  dk::Json source;  // verbatim input, used to serialize functors
};

struct dk_workspace {
  double tolerance = 1e-9;
  std::size_t max_steps = 100000;
  double grid = 1.0;
  bool triangles = false;
  std::map<std::pair<std::string, std::string>, dk_value> registry;
};

namespace {

// runs `body` translating exceptions into status codes
template <typename F>
dk_status guarded(F&& body) {
  try {
    return body();
  } catch (const dk::DecodeError& e) {
    set_error(e.what());
    return DK_ERR_INPUT;
  } catch (const dk::Error& e) {
    set_error(e.what());
    return DK_ERR_DOMAIN;
  } catch (const std::exception& e) {
    set_error(e.what());
    return DK_ERR_INTERNAL;
  }
}

const dk::Diagram* as_diagram(const dk_value* v) {
  return std::get_if<dk::Diagram>(&v->value.value);
}

dk_status need(const void* p, const char* what) {
  if (p) return DK_OK;
  set_error(std::string("null pointer: ") + what);
  return DK_ERR_NULLPTR;
}

}  // namespace

extern "C" {

const char* dk_version(void) { return "0.1.0"; }

const char* dk_last_error(void) { return tl_error.c_str(); }

// -- values -----------------------------------------------------------------

dk_status dk_value_from_json(const char* json, dk_value** out) {
  if (auto s = need(json, "json"); s != DK_OK) return s;
  if (auto s = need(out, "out"); s != DK_OK) return s;
  return guarded([&] {
    dk::Json j = dk::io::parse_json(json);
    auto value = dk::io::decode_value(j);
    *out = new dk_value{std::move(value), std::move(j)};
    return DK_OK;
  });
}

dk_status dk_value_to_json(const dk_value* value, char** out_json) {
  if (auto s = need(value, "value"); s != DK_OK) return s;
  if (auto s = need(out_json, "out_json"); s != DK_OK) return s;
  return guarded([&] {
    if (value->value.kind == dk::io::ValueKind::functor) {
      *out_json = dup_string(value->source.dump());
    } else {
      *out_json = dup_string(dk::io::encode_value(value->value).dump());
    }
    return DK_OK;
  });
}

const char* dk_value_kind(const dk_value* value) {
  if (!value) return "null";
  return dk::io::to_string(value->value.kind);
}

void dk_value_free(dk_value* value) { delete value; }

void dk_string_free(char* text) { std::free(text); }

dk_status dk_validate(const dk_value* value) {
  if (auto s = need(value, "value"); s != DK_OK) return s;
  return guarded([&] {
    // decoding already validates; layouts get their geometric check too
    if (const auto* layout =
            std::get_if<dk::drawing::PlanarLayout>(&value->value.value)) {
      dk::drawing::check(*layout);
    }
    return DK_OK;
  });
}

// -- workspace ----------------------------------------------------------------

dk_workspace* dk_workspace_new(void) { return new dk_workspace(); }

void dk_workspace_free(dk_workspace* ws) { delete ws; }

dk_status dk_workspace_set_option(dk_workspace* ws, const char* key,
                                  const char* value) {
  if (auto s = need(ws, "ws"); s != DK_OK) return s;
  if (auto s = need(key, "key"); s != DK_OK) return s;
  if (auto s = need(value, "value"); s != DK_OK) return s;
  return guarded([&]() -> dk_status {
    std::string k = key;
    try {
      if (k == "tolerance") {
        double v = std::stod(value);
        if (v <= 0) throw dk::DecodeError("tolerance must be positive");
        ws->tolerance = v;
      } else if (k == "max_steps") {
        long long v = std::stoll(value);
        if (v <= 0) throw dk::DecodeError("max_steps must be positive");
        ws->max_steps = static_cast<std::size_t>(v);
      } else if (k == "grid") {
        double v = std::stod(value);
        if (v <= 0) throw dk::DecodeError("grid must be positive");
        ws->grid = v;
      } else if (k == "triangles") {
        ws->triangles = std::string(value) == "1" ||
                        std::string(value) == "true";
      } else {
        throw dk::DecodeError("unknown option \"" + k + "\"");
      }
    } catch (const dk::DecodeError&) {
      throw;
    } catch (const std::exception&) {
      throw dk::DecodeError("bad value \"" + std::string(value) +
                            "\" for option \"" + k + "\"");
    }
    return DK_OK;
  });
}

dk_status dk_workspace_store(dk_workspace* ws, const char* name,
                             const dk_value* value) {
  if (auto s = need(ws, "ws"); s != DK_OK) return s;
  if (auto s = need(name, "name"); s != DK_OK) return s;
  if (auto s = need(value, "value"); s != DK_OK) return s;
  return guarded([&]() -> dk_status {
    auto key = std::make_pair(std::string(dk_value_kind(value)),
                              std::string(name));
    if (ws->registry.count(key)) {
      throw dk::DecodeError("a " + key.first + " named \"" + key.second +
                            "\" is already stored");
    }
    ws->registry.emplace(std::move(key), *value);
    return DK_OK;
  });
}

dk_status dk_workspace_get(const dk_workspace* ws, const char* kind,
                           const char* name, dk_value** out) {
  if (auto s = need(ws, "ws"); s != DK_OK) return s;
  if (auto s = need(kind, "kind"); s != DK_OK) return s;
  if (auto s = need(name, "name"); s != DK_OK) return s;
  if (auto s = need(out, "out"); s != DK_OK) return s;
  return guarded([&]() -> dk_status {
    auto it = ws->registry.find({kind, name});
    if (it == ws->registry.end()) {
      throw dk::Error("no " + std::string(kind) + " named \"" + name + "\"");
    }
    *out = new dk_value(it->second);
    return DK_OK;
  });
}

// -- operations ----------------------------------------------------------------

dk_status dk_normalize(const dk_workspace* ws, const dk_value* diagram,
                       int left, dk_value** out, char** out_trace) {
  if (auto s = need(ws, "ws"); s != DK_OK) return s;
  if (auto s = need(diagram, "diagram"); s != DK_OK) return s;
  return guarded([&]() -> dk_status {
    const auto* d = as_diagram(diagram);
    if (!d) throw dk::DecodeError("normalize expects a diagram");
    auto result = dk::normalize(*d, left != 0, ws->max_steps);
    const dk::Diagram& last = result.trace.empty() ? *d : result.trace.back();
    if (out_trace) {
      std::string lines;
      for (const auto& step : result.trace) {
        lines += dk::io::encode(step).dump();
        lines += '\n';
      }
      *out_trace = dup_string(lines);
    }
    if (out) {
      *out = new dk_value{{dk::io::ValueKind::diagram, last}, {}};
    }
    if (result.truncated) {
      set_error("normalization truncated after " +
                std::to_string(result.trace.size()) + " steps");
      return DK_ERR_DOMAIN;
    }
    return DK_OK;
  });
}

dk_status dk_snake_normal_form(const dk_workspace* ws, const dk_value* diagram,
                               dk_value** out) {
  if (auto s = need(ws, "ws"); s != DK_OK) return s;
  if (auto s = need(diagram, "diagram"); s != DK_OK) return s;
  if (auto s = need(out, "out"); s != DK_OK) return s;
  return guarded([&]() -> dk_status {
    const auto* d = as_diagram(diagram);
    if (!d) throw dk::DecodeError("snake removal expects a diagram");
    auto nf = dk::rigid::snake_normal_form(*d);
    *out = new dk_value{{dk::io::ValueKind::diagram, std::move(nf)}, {}};
    return DK_OK;
  });
}

dk_status dk_eval(const dk_workspace* ws, const dk_value* functor,
                  const dk_value* diagram, dk_value** out_tensor) {
  if (auto s = need(ws, "ws"); s != DK_OK) return s;
  if (auto s = need(functor, "functor"); s != DK_OK) return s;
  if (auto s = need(diagram, "diagram"); s != DK_OK) return s;
  if (auto s = need(out_tensor, "out_tensor"); s != DK_OK) return s;
  return guarded([&]() -> dk_status {
    const auto* f = std::get_if<dk::io::AnyFunctor>(&functor->value.value);
    if (!f) throw dk::DecodeError("eval expects a functor");
    const auto* d = as_diagram(diagram);
    if (!d) throw dk::DecodeError("eval expects a diagram");
    auto result = dk::io::apply_any_functor(*f, *d);
    const auto* t = std::get_if<dk::tensor::AnyTensor>(&result);
    if (!t) {
      throw dk::DecodeError("eval expects a tensor functor; use run for "
                            "function functors");
    }
    *out_tensor = new dk_value{{dk::io::ValueKind::tensor, *t}, {}};
    return DK_OK;
  });
}

dk_status dk_run(const dk_workspace* ws, const dk_value* functor,
                 const dk_value* diagram, const char* args_csv,
                 char** out_json) {
  if (auto s = need(ws, "ws"); s != DK_OK) return s;
  if (auto s = need(functor, "functor"); s != DK_OK) return s;
  if (auto s = need(diagram, "diagram"); s != DK_OK) return s;
  if (auto s = need(out_json, "out_json"); s != DK_OK) return s;
  return guarded([&]() -> dk_status {
    const auto* f = std::get_if<dk::io::AnyFunctor>(&functor->value.value);
    if (!f) throw dk::DecodeError("run expects a functor");
    const auto* ff = std::get_if<dk::cartesian::FunctionFunctor>(f);
    if (!ff) throw dk::DecodeError("run expects a function functor");
    const auto* d = as_diagram(diagram);
    if (!d) throw dk::DecodeError("run expects a diagram");

    std::vector<dk::cartesian::Value> args;
    std::string csv = args_csv ? args_csv : "";
    std::size_t start = 0;
    while (start < csv.size()) {
      std::size_t comma = csv.find(',', start);
      std::string token = csv.substr(
          start, comma == std::string::npos ? std::string::npos
                                            : comma - start);
      if (!token.empty()) {
        try {
          if (token.find('.') == std::string::npos &&
              token.find('e') == std::string::npos) {
            args.push_back(static_cast<std::int64_t>(std::stoll(token)));
          } else {
            args.push_back(std::stod(token));
          }
        } catch (const std::exception&) {
          throw dk::DecodeError("bad numeric argument \"" + token + "\"");
        }
      }
      if (comma == std::string::npos) break;
      start = comma + 1;
    }

    auto out = dk::cartesian::run_diagram(*ff, *d, args);
    dk::Json array = dk::Json::array();
    for (const auto& value : out) {
      if (std::holds_alternative<std::int64_t>(value)) {
        array.push_back(std::get<std::int64_t>(value));
      } else {
        array.push_back(std::get<double>(value));
      }
    }
    *out_json = dup_string(array.dump());
    return DK_OK;
  });
}

dk_status dk_parse_sentence(const dk_workspace* ws, const dk_value* grammar,
                            const char* sentence, const char* target,
                            dk_value** out_diagram) {
  if (auto s = need(ws, "ws"); s != DK_OK) return s;
  if (auto s = need(grammar, "grammar"); s != DK_OK) return s;
  if (auto s = need(sentence, "sentence"); s != DK_OK) return s;
  if (auto s = need(out_diagram, "out_diagram"); s != DK_OK) return s;
  return guarded([&]() -> dk_status {
    const auto* g =
        std::get_if<dk::rigid::PregroupGrammar>(&grammar->value.value);
    if (!g) throw dk::DecodeError("parse expects a grammar");
    auto words = dk::rigid::split_words(sentence);
    std::optional<dk::Ob> goal;
    if (target && *target) goal = dk::Ob(target);
    auto parsed = dk::rigid::parse_sentence(*g, words, goal);
    if (!parsed) {
      throw dk::Error("no parse: the sentence does not reduce to " +
                      (goal ? goal->token() : g->sentence_type().token()));
    }
    *out_diagram =
        new dk_value{{dk::io::ValueKind::diagram, std::move(*parsed)}, {}};
    return DK_OK;
  });
}

dk_status dk_eval_circuit(const dk_value* circuit, dk_value** out_tensor) {
  if (auto s = need(circuit, "circuit"); s != DK_OK) return s;
  if (auto s = need(out_tensor, "out_tensor"); s != DK_OK) return s;
  return guarded([&]() -> dk_status {
    const auto* d = as_diagram(circuit);
    if (!d) throw dk::DecodeError("eval-circuit expects a diagram");
    if (!dk::circuit::is_circuit(*d)) {
      throw dk::DecodeError("the diagram is not a circuit");
    }
    auto t = dk::circuit::eval(*d);
    *out_tensor = new dk_value{
        {dk::io::ValueKind::tensor, dk::tensor::AnyTensor{std::move(t)}}, {}};
    return DK_OK;
  });
}

dk_status dk_measure(const dk_value* circuit, char** out_json) {
  if (auto s = need(circuit, "circuit"); s != DK_OK) return s;
  if (auto s = need(out_json, "out_json"); s != DK_OK) return s;
  return guarded([&]() -> dk_status {
    const auto* d = as_diagram(circuit);
    if (!d) throw dk::DecodeError("measure expects a diagram");
    if (!dk::circuit::is_circuit(*d)) {
      throw dk::DecodeError("the diagram is not a circuit");
    }
    auto t = dk::circuit::measure(*d);
    dk::Json array = dk::Json::array();
    for (double p : t.array()) array.push_back(p);
    *out_json = dup_string(array.dump());
    return DK_OK;
  });
}

dk_status dk_draw(const dk_value* diagram, dk_value** out_layout) {
  if (auto s = need(diagram, "diagram"); s != DK_OK) return s;
  if (auto s = need(out_layout, "out_layout"); s != DK_OK) return s;
  return guarded([&]() -> dk_status {
    const auto* d = as_diagram(diagram);
    if (!d) throw dk::DecodeError("draw expects a diagram");
    auto layout = dk::drawing::draw(*d);
    *out_layout =
        new dk_value{{dk::io::ValueKind::layout, std::move(layout)}, {}};
    return DK_OK;
  });
}

dk_status dk_render(const dk_workspace* ws, const dk_value* value,
                    const char* format, char** out_text) {
  if (auto s = need(ws, "ws"); s != DK_OK) return s;
  if (auto s = need(value, "value"); s != DK_OK) return s;
  if (auto s = need(format, "format"); s != DK_OK) return s;
  if (auto s = need(out_text, "out_text"); s != DK_OK) return s;
  return guarded([&]() -> dk_status {
    dk::drawing::PlanarLayout layout;
    if (const auto* l =
            std::get_if<dk::drawing::PlanarLayout>(&value->value.value)) {
      layout = *l;
    } else if (const auto* d = as_diagram(value)) {
      layout = dk::drawing::draw(*d);
    } else {
      throw dk::DecodeError("render expects a diagram or a layout");
    }
    dk::drawing::LayoutConfig config;
    config.wire_spacing = ws->grid;
    config.layer_spacing = ws->grid;
    config.triangle_states = ws->triangles;
    std::string fmt = format;
    if (fmt == "tikz") {
      *out_text = dup_string(dk::drawing::to_tikz(layout, config));
    } else if (fmt == "svg") {
      *out_text = dup_string(dk::drawing::to_svg(layout, config));
    } else if (fmt == "json") {
      *out_text = dup_string(dk::io::encode(layout).dump());
    } else {
      throw dk::DecodeError("unknown render format \"" + fmt +
                            "\"; expected tikz, svg or json");
    }
    return DK_OK;
  });
}

}  // extern "C"
