#pragma once

// Implementations of the CLI commands.  Each returns a Report: the process
// exit code (0 verdict reached, 1 property/precondition failure, 2 input
// error), a machine-readable JSON body (schema "1"), and human-readable
// text.  All randomness flows from the explicit seed, so reports are
// deterministic given (inputs, seed) up to the "timing_ms" field.

#include <cstdint>
#include <string>

#include "cokit/descriptor.hpp"

namespace cokit {

struct CommonOptions {
  std::string format = "text";  // "text" | "json"
  std::uint64_t seed = 0;
  int samples = 20;
};

struct Report {
  int exit_code = 0;
  Json body;         // "schema", "command", inputs, verdict fields, "timing_ms", "error"
  std::string text;  // one "key: value" line per fact
};

// Commensurability of two modules; on a true verdict also the indices
// [Γᵢ : Γ₁ ∩ Γ₂].
Report cmd_commensurate(const std::string& module_arg_1, const std::string& module_arg_2,
                        const CommonOptions& opt);

// Classification of an isometry against a module: NotSimilarity /
// Similarity (scaling-coset representative + eta order) / Coincidence
// (sigma).
Report cmd_classify(const std::string& module_arg, const std::string& isometry_file,
                    const CommonOptions& opt);

// Property suites: equivalence | groups | eta | thm319 | example315 |
// thm27 | lemma26, run against a resolvable target with `samples` sampled
// instances.  Exit 0 iff every property passes.
Report cmd_verify(const std::string& suite, const std::string& target, const CommonOptions& opt);

// Exact index [Γ : Γ'] of a full-rank submodule; NotSubmodule /
// InfiniteIndex failures exit 1.
Report cmd_index(const std::string& module_arg, const std::string& submodule_arg,
                 const CommonOptions& opt);

// The report in the requested format: "json" serializes the body, "text"
// returns the text block.
std::string render(const Report& report, const std::string& format);

}  // namespace cokit
