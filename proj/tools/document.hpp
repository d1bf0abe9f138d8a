// Copyright 2026 The thermolength Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <iosfwd>
#include <string>
#include <utility>
#include <vector>

namespace thermolength::cli {

enum class Format { kJson, kCsv, kHuman };

Format parse_format(const std::string& name);

/// Minimal ordered document tree for command output. Numbers are written
/// with 17 significant digits so every double round-trips.
class Node {
 public:
  enum class Kind { kNull, kNumber, kInteger, kBool, kString, kObject, kArray };

  Node() = default;
  Node(double x) : kind_(Kind::kNumber), number_(x) {}
  Node(int x) : kind_(Kind::kInteger), integer_(x) {}
  Node(long long x) : kind_(Kind::kInteger), integer_(x) {}
  Node(bool x) : kind_(Kind::kBool), boolean_(x) {}
  Node(std::string x) : kind_(Kind::kString), text_(std::move(x)) {}
  Node(const char* x) : kind_(Kind::kString), text_(x) {}

  static Node object() {
    Node n;
    n.kind_ = Kind::kObject;
    return n;
  }
  static Node array() {
    Node n;
    n.kind_ = Kind::kArray;
    return n;
  }

  Node& set(std::string key, Node value);
  Node& push(Node value);

  Kind kind() const { return kind_; }
  const std::vector<std::pair<std::string, Node>>& members() const { return members_; }
  const std::vector<Node>& items() const { return items_; }
  /// Scalar rendering shared by csv and human output; empty for null.
  std::string scalar_text() const;

 private:
  Kind kind_ = Kind::kNull;
  double number_ = 0.0;
  long long integer_ = 0;
  bool boolean_ = false;
  std::string text_;
  std::vector<std::pair<std::string, Node>> members_;
  std::vector<Node> items_;

  friend void write_json(std::ostream& os, const Node& node, int indent);
};

std::string format_number(double x);

void write_json(std::ostream& os, const Node& node, int indent = 0);

/// Writes `doc` in the requested format. For csv and human output a document
/// with a `rows` array is rendered as a table (one line per row); any other
/// object becomes key/value lines.
void write_document(std::ostream& os, const Node& doc, Format format);

}  // namespace thermolength::cli
