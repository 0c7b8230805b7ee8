#pragma once

#include "maglap/markov.hpp"

#include <filesystem>
#include <iosfwd>

namespace maglap {

/// Edge list: one `src dst weight` triple per line, whitespace separated,
/// 0-based ids, `#` starts a comment. Node count is 1 + the largest id,
/// repeated pairs accumulate, absent pairs have weight 0.
AdjacencyMatrix parse_edge_list(std::istream& in);
AdjacencyMatrix load_graph(const std::filesystem::path& path);

/// Writes every positive entry with 17 significant digits.
void write_edge_list(std::ostream& out, const AdjacencyMatrix& w);

}  // namespace maglap
