#pragma once

#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "harmonia/group.hpp"

namespace harmonia {

// Text formats. Lines starting with '#' are comments and are ignored on
// input; serializers emit none.
//
// Group file:     line 1: order n; lines 2..n+1: n space-separated element
//                 indices in [0, n) (row i of the Cayley table). The
//                 identity must be element 0.
// Sequence file:  line 1: length l; line 2: l space-separated element
//                 indices in [0, l). Also used for mapping tables.

std::string serialize_group(const FiniteGroup& g);
FiniteGroup parse_group_text(std::string_view text, const ValidateOptions& opts = {});
FiniteGroup read_group_file(const std::string& path, const ValidateOptions& opts = {});

std::string serialize_sequence(std::span<const Element> entries);
std::vector<Element> parse_sequence_text(std::string_view text);
std::vector<Element> read_sequence_file(const std::string& path);

// Raw tables, for the normalize tool: parsed without group validation.
std::vector<std::vector<Element>> parse_raw_table_text(std::string_view text);
std::vector<std::vector<Element>> read_raw_table_file(const std::string& path);
std::string serialize_raw_table(const std::vector<std::vector<Element>>& table);

// Reindexes a table so its two-sided identity becomes element 0 (the
// identity and element 0 swap names; everything else keeps its index).
// Throws StructureError when the table has no two-sided identity.
std::vector<std::vector<Element>> normalize_table(std::vector<std::vector<Element>> table);

}  // namespace harmonia
