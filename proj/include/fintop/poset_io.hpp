#pragma once

#include <filesystem>
#include <string>

#include "fintop/poset.hpp"

namespace fintop {

/// A named poset as stored on disk. The text format is line based:
///
///   poset <name>
///   points <n>
///   covers
///   <i> <j>       # one pair per line, meaning i is covered by j
///
/// '#' starts a comment anywhere on a line; blank lines are ignored.
/// Serialization is canonical (cover pairs of the transitive reduction,
/// sorted ascending), so parse -> serialize is idempotent.
struct PosetDocument {
  std::string name;
  FinitePoset poset;
};

PosetDocument parse_poset_text(const std::string& text);
PosetDocument load_poset_file(const std::filesystem::path& path);
std::string serialize_poset(const PosetDocument& doc);
void save_poset_file(const PosetDocument& doc, const std::filesystem::path& path);

/// Hasse diagram (transitive reduction) as DOT text, points grouped into
/// same-rank clusters by level.
std::string export_dot(const PosetDocument& doc);

}  // namespace fintop
