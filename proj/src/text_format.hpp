#ifndef REGTOOL_SRC_TEXT_FORMAT_HPP
#define REGTOOL_SRC_TEXT_FORMAT_HPP

#include <string>
#include <string_view>
#include <vector>

#include "regtool/vertex_subset.hpp"

namespace regtool::detail {

// One set per line, labels interned in order of first appearance.
struct SetListDocument {
  std::vector<std::string> names;
  std::vector<VertexSubset> sets;
  bool has_vertex_header = false;
};

SetListDocument parse_set_list(std::string_view text);
std::string format_set_list(const std::vector<std::string>& names, const std::vector<VertexSubset>& sets);

}  // namespace regtool::detail

#endif  // REGTOOL_SRC_TEXT_FORMAT_HPP
