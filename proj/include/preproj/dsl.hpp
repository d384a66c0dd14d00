#pragma once

#include "preproj/quotient.hpp"

#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace preproj {

struct DslError : std::runtime_error {
  DslError(const std::string& msg, int line)
      : std::runtime_error("line " + std::to_string(line) + ": " + msg), line(line) {}
  int line;
};

/// Presentation file (.qpa):
///
///   presentation NAME
///   field GF(2);
///   quiver dynkin E7;            or   quiver { vertices 0..3; arrow a0: 0 -> 1;
///   cap 36;                               bar a0 = abar0; loop eps: 0 selfbar; }
///   relations { expr; ... }
///
/// `field_override` replaces the file's field line; one of the two is required.
Presentation parse_presentation(const std::string& text, const ParamMap& params = {},
                                std::optional<FieldSpec> field_override = std::nullopt);

/// Morphism file (.mor):
///
///   morphism NAME : SOURCE -> TARGET { vertex 0 -> 0; a0 -> expr; }
///
/// Images stay textual until the target quiver is known.
struct MorphismSpec {
  std::string name;
  std::string source;
  std::string target;
  std::vector<std::pair<int, int>> vertex_map;
  std::vector<std::pair<std::string, std::string>> images;
};
MorphismSpec parse_morphism_spec(const std::string& text);

/// Transcription files compiled into the library, keyed by file name.
const std::vector<std::pair<std::string, std::string>>& embedded_catalog();
std::string catalog_text(const std::string& file);

}  // namespace preproj
