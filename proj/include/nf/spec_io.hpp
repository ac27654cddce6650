#pragma once
#include <string>

#include "nf/field.hpp"

namespace nf {

// Parses a field-spec JSON document. Throws spec_error on malformed input.
FieldSpec parse_field_spec(const std::string& json_text);

// Loads a spec file. Throws usage_error when the file cannot be read.
FieldSpec load_field_spec(const std::string& path);

// Resolves a label or path to a spec file: an existing path wins, then
// $NFLAB_SPEC_DIR, then the bundled spec directory; "label" also tries
// "label.json". Throws usage_error when nothing matches.
std::string resolve_spec_path(const std::string& arg);

} // namespace nf
