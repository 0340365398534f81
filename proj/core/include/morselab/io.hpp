#pragma once

#include "morselab/complex.hpp"
#include "morselab/face_poset.hpp"

#include <filesystem>
#include <string>

namespace morselab::io {

/// Facet-list text: one facet per line as whitespace-separated labels, `#` starts a comment.
SimplicialComplex parse_facets(const std::string& text);

/// Bracketed lexicographic facet lists such as `name=[[1,2,3],[1,2,4]]`.
SimplicialComplex parse_bracketed(const std::string& text);

/// Either format, chosen by the first non-comment character.
SimplicialComplex parse_complex(const std::string& text);

std::string format_facets(const SimplicialComplex& k);

/// JSON array of {"id", "dim", "boundary": [ids]}; an optional "on_boundary" flag
/// per cell installs a boundary mask.
FacePoset parse_poset_json(const std::string& text);
std::string format_poset_json(const FacePoset& p);

std::string read_text(const std::filesystem::path& path);
void write_text(const std::filesystem::path& path, const std::string& text);

/// Resolves a relative path against the working directory first, then MORSELAB_DATA
/// (the full relative path, then its file name alone).
std::filesystem::path resolve_data_path(const std::string& name);

SimplicialComplex read_complex(const std::string& name);

}  // namespace morselab::io
