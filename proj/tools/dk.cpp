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

// Batch front door for the diagram kernel, built on the C API alone: load
// JSON values, run an operation, print JSON (or write a render file).

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <map>
#include <memory>
#include <optional>
#include <sstream>
#include <string>

#include <CLI11.hpp>

#include "diagram_kernel.h"

namespace {

struct ValueDeleter {
  void operator()(dk_value* v) const { dk_value_free(v); }
};
using ValuePtr = std::unique_ptr<dk_value, ValueDeleter>;

struct StringDeleter {
  void operator()(char* s) const { dk_string_free(s); }
};
using StringPtr = std::unique_ptr<char, StringDeleter>;

struct WorkspaceDeleter {
  void operator()(dk_workspace* ws) const { dk_workspace_free(ws); }
};
using WorkspacePtr = std::unique_ptr<dk_workspace, WorkspaceDeleter>;

int exit_code(dk_status status) {
  switch (status) {
    case DK_OK: return 0;
    case DK_ERR_DOMAIN: return 1;
    case DK_ERR_INPUT: return 2;
    default: return 3;
  }
}

[[noreturn]] void fail(dk_status status) {
  std::cerr << "error: " << dk_last_error() << "\n";
  std::exit(exit_code(status));
}

ValuePtr load_value(const std::string& path) {
  std::ifstream in(path);
  if (!in) {
    std::cerr << "error: cannot open " << path << "\n";
    std::exit(2);
  }
  std::ostringstream text;
  text << in.rdbuf();
  dk_value* value = nullptr;
  if (dk_status s = dk_value_from_json(text.str().c_str(), &value);
      s != DK_OK) {
    std::cerr << "error: " << path << ": " << dk_last_error() << "\n";
    std::exit(exit_code(s));
  }
  return ValuePtr(value);
}

void write_output(const std::string& text, const std::string& out_path) {
  if (out_path.empty() || out_path == "-") {
    std::cout << text;
    if (text.empty() || text.back() != '\n') std::cout << "\n";
    return;
  }
  std::ofstream out(out_path);
  if (!out) {
    std::cerr << "error: cannot write " << out_path << "\n";
    std::exit(2);
  }
  out << text;
}

void print_value(const dk_value* value) {
  char* json = nullptr;
  if (dk_status s = dk_value_to_json(value, &json); s != DK_OK) fail(s);
  StringPtr guard(json);
  std::cout << json << "\n";
}

// diagram-kernel.toml: `key = value` lines, # comments
std::map<std::string, std::string> read_config(const std::string& path,
                                               bool required) {
  std::map<std::string, std::string> out;
  std::ifstream in(path);
  if (!in) {
    if (required) {
      std::cerr << "error: cannot open config " << path << "\n";
      std::exit(2);
    }
    return out;
  }
  std::string line;
  while (std::getline(in, line)) {
    auto hash = line.find('#');
    if (hash != std::string::npos) line.erase(hash);
    auto eq = line.find('=');
    if (eq == std::string::npos) continue;
    auto trim = [](std::string s) {
      auto a = s.find_first_not_of(" \t\"");
      auto b = s.find_last_not_of(" \t\"");
      return a == std::string::npos ? std::string() : s.substr(a, b - a + 1);
    };
    std::string key = trim(line.substr(0, eq));
    std::string value = trim(line.substr(eq + 1));
    if (!key.empty()) out[key] = value;
  }
  return out;
}

void apply_option(dk_workspace* ws, const std::string& key,
                  const std::string& value, const std::string& origin) {
  if (dk_status s = dk_workspace_set_option(ws, key.c_str(), value.c_str());
      s != DK_OK) {
    std::cerr << "error: " << origin << ": " << dk_last_error() << "\n";
    std::exit(2);
  }
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"diagram kernel: rewrite, evaluate, parse and draw string "
               "diagrams"};
  app.require_subcommand(1);
  app.failure_message(CLI::FailureMessage::help);

  std::string config_path;
  app.add_option("--config", config_path,
                 "key = value settings file (default ./diagram-kernel.toml)");

  WorkspacePtr ws(dk_workspace_new());

  // validate
  std::string validate_file;
  auto* validate = app.add_subcommand("validate", "check a JSON value");
  validate->add_option("file", validate_file)->required();

  // normalize
  std::string normalize_file;
  bool normalize_left = false;
  bool normalize_trace = false;
  std::optional<long long> max_steps_flag;
  auto* normalize =
      app.add_subcommand("normalize", "interchanger rewriting to normal form");
  normalize->add_option("file", normalize_file)->required();
  normalize->add_flag("--left", normalize_left, "apply left interchangers");
  normalize->add_flag("--trace", normalize_trace,
                      "print each rewrite step as a JSON line");
  normalize->add_option("--max-steps", max_steps_flag, "step cap");

  // parse
  std::string parse_grammar, parse_sentence_text, parse_target;
  auto* parse = app.add_subcommand("parse", "pregroup parse of a sentence");
  parse->add_option("--grammar", parse_grammar)->required();
  parse->add_option("--sentence", parse_sentence_text)->required();
  parse->add_option("--target", parse_target,
                    "reduce to this basic type instead of the sentence type");

  // eval
  std::string eval_functor, eval_diagram;
  auto* eval =
      app.add_subcommand("eval", "apply a tensor functor to a diagram");
  eval->add_option("--functor", eval_functor)->required();
  eval->add_option("--diagram", eval_diagram)->required();

  // run
  std::string run_functor, run_diagram, run_args;
  auto* run =
      app.add_subcommand("run", "apply a function functor and run it");
  run->add_option("--functor", run_functor)->required();
  run->add_option("--diagram", run_diagram)->required();
  run->add_option("--args", run_args, "comma-separated numeric arguments");

  // eval-circuit
  std::string circuit_file;
  auto* eval_circuit =
      app.add_subcommand("eval-circuit", "statevector semantics of a circuit");
  eval_circuit->add_option("file", circuit_file)->required();

  // measure
  std::string measure_file;
  auto* measure =
      app.add_subcommand("measure", "Born-rule measurement of a circuit");
  measure->add_option("file", measure_file)->required();

  // draw
  std::string draw_file, draw_format = "svg", draw_out;
  bool draw_triangles = false;
  auto* draw = app.add_subcommand("draw", "planar layout and rendering");
  draw->add_option("file", draw_file)->required();
  draw->add_option("--format", draw_format, "tikz, svg or json")
      ->check(CLI::IsMember({"tikz", "svg", "json"}));
  draw->add_option("--out", draw_out, "output file (stdout by default)");
  draw->add_flag("--triangles", draw_triangles,
                 "draw domain-empty boxes as triangles");

  // snake
  std::string snake_file;
  auto* snake = app.add_subcommand(
      "snake", "snake removal followed by interchanger normal form");
  snake->add_option("file", snake_file)->required();

  CLI11_PARSE(app, argc, argv);

  // settings: defaults, then config file, then DK_* environment, then flags
  bool config_required = !config_path.empty();
  if (config_path.empty()) config_path = "diagram-kernel.toml";
  for (const auto& [key, value] : read_config(config_path, config_required)) {
    apply_option(ws.get(), key, value, config_path);
  }
  for (const char* key : {"tolerance", "max_steps", "grid", "triangles"}) {
    std::string env = "DK_";
    for (const char* c = key; *c; ++c) {
      env += static_cast<char>(std::toupper(*c));
    }
    if (const char* value = std::getenv(env.c_str())) {
      apply_option(ws.get(), key, value, env);
    }
  }
  if (max_steps_flag) {
    apply_option(ws.get(), "max_steps", std::to_string(*max_steps_flag),
                 "--max-steps");
  }
  if (draw_triangles) apply_option(ws.get(), "triangles", "1", "--triangles");

  if (validate->parsed()) {
    ValuePtr value = load_value(validate_file);
    if (dk_status s = dk_validate(value.get()); s != DK_OK) fail(s);
    std::cout << "ok: " << dk_value_kind(value.get()) << "\n";
    return 0;
  }

  if (normalize->parsed()) {
    ValuePtr diagram = load_value(normalize_file);
    dk_value* out = nullptr;
    char* trace = nullptr;
    dk_status s = dk_normalize(ws.get(), diagram.get(), normalize_left,
                               &out, normalize_trace ? &trace : nullptr);
    ValuePtr out_guard(out);
    StringPtr trace_guard(trace);
    if (s != DK_OK && s != DK_ERR_DOMAIN) fail(s);
    if (trace) std::cout << trace;
    if (out) print_value(out);
    if (s != DK_OK) {
      std::cerr << "error: " << dk_last_error() << "\n";
      return exit_code(s);
    }
    return 0;
  }

  if (parse->parsed()) {
    ValuePtr grammar = load_value(parse_grammar);
    dk_value* out = nullptr;
    dk_status s = dk_parse_sentence(
        ws.get(), grammar.get(), parse_sentence_text.c_str(),
        parse_target.empty() ? nullptr : parse_target.c_str(), &out);
    if (s != DK_OK) fail(s);
    ValuePtr out_guard(out);
    print_value(out);
    return 0;
  }

  if (eval->parsed()) {
    ValuePtr functor = load_value(eval_functor);
    ValuePtr diagram = load_value(eval_diagram);
    dk_value* out = nullptr;
    if (dk_status s = dk_eval(ws.get(), functor.get(), diagram.get(), &out);
        s != DK_OK) {
      fail(s);
    }
    ValuePtr out_guard(out);
    print_value(out);
    return 0;
  }

  if (run->parsed()) {
    ValuePtr functor = load_value(run_functor);
    ValuePtr diagram = load_value(run_diagram);
    char* out = nullptr;
    if (dk_status s = dk_run(ws.get(), functor.get(), diagram.get(),
                             run_args.c_str(), &out);
        s != DK_OK) {
      fail(s);
    }
    StringPtr out_guard(out);
    std::cout << out << "\n";
    return 0;
  }

  if (eval_circuit->parsed()) {
    ValuePtr circuit = load_value(circuit_file);
    dk_value* out = nullptr;
    if (dk_status s = dk_eval_circuit(circuit.get(), &out); s != DK_OK) {
      fail(s);
    }
    ValuePtr out_guard(out);
    print_value(out);
    return 0;
  }

  if (measure->parsed()) {
    ValuePtr circuit = load_value(measure_file);
    char* out = nullptr;
    if (dk_status s = dk_measure(circuit.get(), &out); s != DK_OK) fail(s);
    StringPtr out_guard(out);
    std::cout << out << "\n";
    return 0;
  }

  if (draw->parsed()) {
    ValuePtr value = load_value(draw_file);
    char* text = nullptr;
    if (dk_status s =
            dk_render(ws.get(), value.get(), draw_format.c_str(), &text);
        s != DK_OK) {
      fail(s);
    }
    StringPtr text_guard(text);
    write_output(text, draw_out);
    return 0;
  }

  if (snake->parsed()) {
    ValuePtr diagram = load_value(snake_file);
    dk_value* out = nullptr;
    if (dk_status s = dk_snake_normal_form(ws.get(), diagram.get(), &out);
        s != DK_OK) {
      fail(s);
    }
    ValuePtr out_guard(out);
    print_value(out);
    return 0;
  }

  return 0;
}
