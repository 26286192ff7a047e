#include "gcx/report.hpp"

#include <sstream>

#include "gcx/errors.hpp"

namespace gcx::report {

Format parse_format(const std::string& name) {
  if (name == "text") return Format::Text;
  if (name == "json-like-tree") return Format::JsonLikeTree;
  throw Error(ErrorKind::Parse, "BadFormat", "unknown format '" + name + "'");
}

namespace {

void render_text(const Node& node, int depth, std::ostringstream& os) {
  os << std::string(2 * depth, ' ') << node.key;
  if (!node.value.empty()) os << ": " << node.value;
  os << "\n";
  for (const auto& c : node.children) render_text(c, depth + 1, os);
}

std::string escape(const std::string& s) {
  std::string out;
  for (char c : s) {
    if (c == '"' || c == '\\') out.push_back('\\');
    out.push_back(c);
  }
  return out;
}

void render_tree(const Node& node, int depth, std::ostringstream& os) {
  std::string pad(2 * depth, ' ');
  os << pad << "\"" << escape(node.key) << "\": ";
  if (node.children.empty()) {
    os << "\"" << escape(node.value) << "\"";
    return;
  }
  os << "{";
  if (!node.value.empty()) os << "\n" << pad << "  \"=\": \"" << escape(node.value) << "\",";
  for (size_t k = 0; k < node.children.size(); ++k) {
    os << "\n";
    render_tree(node.children[k], depth + 1, os);
    if (k + 1 < node.children.size()) os << ",";
  }
  os << "\n" << pad << "}";
}

}  // namespace

std::string render(const Node& root, Format format) {
  std::ostringstream os;
  if (format == Format::Text) {
    render_text(root, 0, os);
  } else {
    render_tree(root, 0, os);
    os << "\n";
  }
  return os.str();
}

}  // namespace gcx::report
