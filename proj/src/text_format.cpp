#include "text_format.hpp"

#include <sstream>
#include <stdexcept>
#include <unordered_map>

namespace regtool::detail {

namespace {

std::string_view trim(std::string_view s) {
  const auto* ws = " \t\r\n";
  auto b = s.find_first_not_of(ws);
  if (b == std::string_view::npos) return {};
  auto e = s.find_last_not_of(ws);
  return s.substr(b, e - b + 1);
}

std::vector<std::string> split_words(std::string_view line) {
  std::vector<std::string> words;
  std::istringstream in{std::string(line)};
  std::string w;
  while (in >> w) words.push_back(w);
  return words;
}

constexpr std::string_view kVertexHeader = "vertices:";

}  // namespace

SetListDocument parse_set_list(std::string_view text) {
  SetListDocument doc;
  std::unordered_map<std::string, std::size_t> index;
  auto intern = [&](const std::string& name) {
    auto [it, inserted] = index.try_emplace(name, doc.names.size());
    if (inserted) {
      if (doc.names.size() == kMaxVertices) throw std::invalid_argument("input has more than 64 vertices");
      doc.names.push_back(name);
    }
    return it->second;
  };

  std::size_t pos = 0;
  while (pos <= text.size()) {
    auto nl = text.find('\n', pos);
    if (nl == std::string_view::npos) nl = text.size();
    auto line = trim(text.substr(pos, nl - pos));
    pos = nl + 1;
    if (line.empty()) continue;
    if (line.front() == '#') {
      auto body = trim(line.substr(1));
      if (body.starts_with(kVertexHeader)) {
        doc.has_vertex_header = true;
        for (const auto& w : split_words(body.substr(kVertexHeader.size()))) intern(w);
      }
      continue;
    }
    VertexSubset s;
    for (const auto& w : split_words(line)) s = s.with(intern(w));
    doc.sets.push_back(s);
  }
  return doc;
}

std::string format_set_list(const std::vector<std::string>& names, const std::vector<VertexSubset>& sets) {
  std::string out = "# vertices:";
  for (const auto& name : names) out += " " + name;
  out += '\n';
  for (auto s : sets) {
    bool first = true;
    for (auto v : s) {
      if (!first) out += ' ';
      out += names[v];
      first = false;
    }
    out += '\n';
  }
  return out;
}

}  // namespace regtool::detail
