/* Copyright 2026 The diagram-kernel Authors
 *
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *
 *     http://www.apache.org/licenses/LICENSE-2.0
 *
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License.
 */

/* C interface to the diagram kernel. Values are parsed from JSON into
 * opaque handles; operations return status codes and leave a message
 * retrievable with dk_last_error(). Strings returned through char** are
 * heap-allocated and must be released with dk_string_free(). */

#ifndef DIAGRAM_KERNEL_H
#define DIAGRAM_KERNEL_H

#ifdef __cplusplus
extern "C" {
#endif

#define DK_VERSION_MAJOR 0
#define DK_VERSION_MINOR 1

typedef enum dk_status {
  DK_OK = 0,
  DK_ERR_DOMAIN = 1,   /* no parse, disconnected diagram, missing mapping... */
  DK_ERR_INPUT = 2,    /* malformed JSON or an unrecognized value */
  DK_ERR_NULLPTR = 3,
  DK_ERR_INTERNAL = 4
} dk_status;

typedef struct dk_value dk_value;
typedef struct dk_workspace dk_workspace;

const char* dk_version(void);

/* Message for the most recent failure on this thread. */
const char* dk_last_error(void);

/* -- values -------------------------------------------------------------- */

/* Parses any top-level value: diagram, arrow, tensor, grammar, layout or
 * functor. */
dk_status dk_value_from_json(const char* json, dk_value** out);
dk_status dk_value_to_json(const dk_value* value, char** out_json);
/* "diagram", "arrow", "tensor", "grammar", "layout" or "functor". */
const char* dk_value_kind(const dk_value* value);
void dk_value_free(dk_value* value);
void dk_string_free(char* text);

/* Re-checks every structural invariant of the value. */
dk_status dk_validate(const dk_value* value);

/* -- workspace ----------------------------------------------------------- */

/* A workspace carries settings and a registry of named values. Options:
 * "tolerance" (positive real), "max_steps" (positive integer), "grid"
 * (positive real), "triangles" ("0" or "1"). */
dk_workspace* dk_workspace_new(void);
void dk_workspace_free(dk_workspace* ws);
dk_status dk_workspace_set_option(dk_workspace* ws, const char* key,
                                  const char* value);
/* Stores a copy under (kind, name); names are unique per kind. */
dk_status dk_workspace_store(dk_workspace* ws, const char* name,
                             const dk_value* value);
dk_status dk_workspace_get(const dk_workspace* ws, const char* kind,
                           const char* name, dk_value** out);

/* -- operations ----------------------------------------------------------- */

/* Interchanger rewriting, one step per trace line. Stops after the
 * workspace's max_steps and returns DK_ERR_DOMAIN with the partial trace
 * when the diagram is not yet normal. out and out_trace are optional. */
dk_status dk_normalize(const dk_workspace* ws, const dk_value* diagram,
                       int left, dk_value** out, char** out_trace);

/* Snake removal followed by interchanger normal form. */
dk_status dk_snake_normal_form(const dk_workspace* ws, const dk_value* diagram,
                               dk_value** out);

/* Tensor functor applied to a diagram. */
dk_status dk_eval(const dk_workspace* ws, const dk_value* functor,
                  const dk_value* diagram, dk_value** out_tensor);

/* Function functor applied to a diagram, run on comma-separated numeric
 * arguments; writes the output tuple as a JSON array. */
dk_status dk_run(const dk_workspace* ws, const dk_value* functor,
                 const dk_value* diagram, const char* args_csv,
                 char** out_json);

/* Pregroup parse of a whitespace-separated sentence, reducing to `target`
 * (the grammar's sentence type when null). DK_ERR_DOMAIN on no parse. */
dk_status dk_parse_sentence(const dk_workspace* ws, const dk_value* grammar,
                            const char* sentence, const char* target,
                            dk_value** out_diagram);

/* Statevector semantics of a circuit diagram. */
dk_status dk_eval_circuit(const dk_value* circuit, dk_value** out_tensor);

/* Born-rule measurement; writes the squared moduli as a JSON array. */
dk_status dk_measure(const dk_value* circuit, char** out_json);

/* Planar layout of a diagram. */
dk_status dk_draw(const dk_value* diagram, dk_value** out_layout);

/* Renders a layout (or draws a diagram first) as "tikz", "svg" or "json". */
dk_status dk_render(const dk_workspace* ws, const dk_value* value,
                    const char* format, char** out_text);

#ifdef __cplusplus
}
#endif

#endif /* DIAGRAM_KERNEL_H */
