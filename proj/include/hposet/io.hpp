#pragma once

#include <string>
#include <string_view>

#include "hposet/code.hpp"
#include "hposet/poset.hpp"

namespace hposet {

/**
 * Poset text: a line `n <size>` followed by lines `rel <a> <b>` (a below b, 1-based labels).
 * `#` starts a comment. Errors carry the offending line number.
 */
Poset parse_poset(std::string_view text);
/// Writes the cover relations only; parse_poset(serialize_poset(p)) == p.
std::string serialize_poset(const Poset& p);

/// Code text: header `q <prime> n <length> k <rows>` followed by k rows of n residues.
LinearCode parse_code(std::string_view text);
std::string serialize_code(const LinearCode& c);

/// Whole file as a string; InputError when it cannot be opened.
std::string read_text_file(const std::string& path);

}  // namespace hposet
