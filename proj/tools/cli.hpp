#pragma once

#include <filesystem>
#include <iosfwd>
#include <optional>
#include <string>

#include "spinsurg/surgery.hpp"

namespace spinsurg::cli {

// Interchange format: { "name"?: string, "matrix": [[int]], "spin"?:
// [0/1] }.  Integers only; Q/Z values in reports are "num/den" strings.
struct PresentationFile {
  std::optional<std::string> name;
  SymIntMatrix matrix;
  std::optional<GF2Vector> spin;

  // Requires a spin field; validates the characteristic condition.
  SpinPresentation presentation() const;

  bool operator==(const PresentationFile&) const = default;
};

// Throws parse_error for malformed JSON or wrong shapes/types and
// precondition_error for mathematically invalid data (asymmetric
// matrix, non-characteristic spin).
PresentationFile parse_presentation_text(const std::string& text);
PresentationFile load_presentation(const std::filesystem::path& path);
std::string presentation_to_json(const PresentationFile& f);

// Full command-line entry point.  Exit codes: 0 success, 1 usage or
// parse error, 2 mathematical precondition violation, 3 size cap
// exceeded.
int run(int argc, const char* const* argv, std::ostream& out,
        std::ostream& err);

}  // namespace spinsurg::cli
