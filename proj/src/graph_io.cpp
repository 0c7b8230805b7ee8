#include "maglap/graph_io.hpp"

#include "maglap/error.hpp"

#include <fmt/format.h>

#include <charconv>
#include <cmath>
#include <fstream>
#include <istream>
#include <ostream>
#include <sstream>
#include <string>
#include <tuple>
#include <vector>

namespace maglap {

namespace {

template <typename T>
bool parse_number(const std::string& token, T& value) {
  const char* end = token.data() + token.size();
  auto [ptr, ec] = std::from_chars(token.data(), end, value);
  return ec == std::errc() && ptr == end;
}

}  // namespace

AdjacencyMatrix parse_edge_list(std::istream& in) {
  std::vector<std::tuple<Index, Index, double>> edges;
  Index max_id = -1;
  std::string line;
  std::size_t line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    if (const auto hash = line.find('#'); hash != std::string::npos) line.erase(hash);
    std::istringstream fields(line);
    std::vector<std::string> tokens;
    for (std::string tok; fields >> tok;) tokens.push_back(tok);
    if (tokens.empty()) continue;
    if (tokens.size() != 3)
      throw ParseError(fmt::format("line {}: expected `src dst weight`, got {} fields", line_no, tokens.size()),
                       line_no);
    long long src = 0;
    long long dst = 0;
    double weight = 0.0;
    if (!parse_number(tokens[0], src) || !parse_number(tokens[1], dst) || src < 0 || dst < 0)
      throw ParseError(fmt::format("line {}: node ids must be nonnegative integers", line_no), line_no);
    if (!parse_number(tokens[2], weight) || !std::isfinite(weight))
      throw ParseError(fmt::format("line {}: weight `{}` is not a finite number", line_no, tokens[2]), line_no);
    if (weight < 0.0)
      throw ParseError(fmt::format("line {}: negative weight {}", line_no, weight), line_no);
    edges.emplace_back(static_cast<Index>(src), static_cast<Index>(dst), weight);
    max_id = std::max({max_id, static_cast<Index>(src), static_cast<Index>(dst)});
  }
  if (edges.empty()) throw ParseError("edge list contains no edges", line_no);

  RealMatrix w = RealMatrix::Zero(max_id + 1, max_id + 1);
  for (const auto& [src, dst, weight] : edges) w(src, dst) += weight;
  return AdjacencyMatrix(std::move(w));
}

AdjacencyMatrix load_graph(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw InvalidInput(fmt::format("cannot open graph file {}", path.string()));
  return parse_edge_list(in);
}

void write_edge_list(std::ostream& out, const AdjacencyMatrix& w) {
  const RealMatrix& m = w.weights();
  out << "# src dst weight\n";
  for (Index i = 0; i < m.rows(); ++i)
    for (Index j = 0; j < m.cols(); ++j)
      if (m(i, j) > 0.0) out << fmt::format("{} {} {:.17g}\n", i, j, m(i, j));
}

}  // namespace maglap
