#pragma once

#include <memory>
#include <string>
#include <vector>

namespace gcx::report {

// Key-value tree; the single structured report format. Children keep
// insertion order so output is deterministic and diffs cleanly.
struct Node {
  std::string key;
  std::string value;  // empty for pure branch nodes
  std::vector<Node> children;

  Node() = default;
  explicit Node(std::string k) : key(std::move(k)) {}
  Node(std::string k, std::string v) : key(std::move(k)), value(std::move(v)) {}

  Node& child(std::string k) {
    children.emplace_back(std::move(k));
    return children.back();
  }
  Node& put(std::string k, std::string v) {
    children.emplace_back(std::move(k), std::move(v));
    return children.back();
  }
};

enum class Format { Text, JsonLikeTree };

Format parse_format(const std::string& name);  // "text" | "json-like-tree"
std::string render(const Node& root, Format format);

}  // namespace gcx::report
