// Copyright 2026 The thermolength Authors
// SPDX-License-Identifier: Apache-2.0

#include "document.hpp"

#include <cmath>
#include <cstdio>
#include <ostream>
#include <stdexcept>

namespace thermolength::cli {

namespace {

void write_escaped(std::ostream& os, const std::string& s) {
  os << '"';
  for (char c : s) {
    switch (c) {
      case '"':
        os << "\\\"";
        break;
      case '\\':
        os << "\\\\";
        break;
      case '\n':
        os << "\\n";
        break;
      case '\t':
        os << "\\t";
        break;
      default:
        if (static_cast<unsigned char>(c) < 0x20) {
          char buf[8];
          std::snprintf(buf, sizeof buf, "\\u%04x", c);
          os << buf;
        } else {
          os << c;
        }
    }
  }
  os << '"';
}

std::string csv_field(const std::string& s) {
  if (s.find_first_of(",\"\n") == std::string::npos) return s;
  std::string out = "\"";
  for (char c : s) {
    if (c == '"') out += '"';
    out += c;
  }
  return out + "\"";
}

const Node* find_rows(const Node& doc) {
  if (doc.kind() != Node::Kind::kObject) return nullptr;
  for (const auto& [key, value] : doc.members()) {
    if (key == "rows" && value.kind() == Node::Kind::kArray) return &value;
  }
  return nullptr;
}

std::vector<std::string> columns_of(const Node& rows) {
  std::vector<std::string> cols;
  for (const Node& row : rows.items()) {
    for (const auto& [key, value] : row.members()) {
      bool seen = false;
      for (const std::string& c : cols) seen = seen || c == key;
      if (!seen) cols.push_back(key);
    }
  }
  return cols;
}

std::string cell(const Node& row, const std::string& column) {
  for (const auto& [key, value] : row.members()) {
    if (key == column) return value.scalar_text();
  }
  return "";
}

// Scalar leaves of an object with dotted keys; arrays are skipped.
void flatten(const Node& node, const std::string& prefix,
             std::vector<std::pair<std::string, const Node*>>& out) {
  for (const auto& [key, value] : node.members()) {
    const std::string name = prefix.empty() ? key : prefix + "." + key;
    if (value.kind() == Node::Kind::kObject) {
      flatten(value, name, out);
    } else if (value.kind() != Node::Kind::kArray) {
      out.emplace_back(name, &value);
    }
  }
}

std::string human_text(const Node& value) {
  if (value.kind() == Node::Kind::kNull) return "-";
  std::string text = value.scalar_text();
  if (value.kind() == Node::Kind::kNumber && !text.empty()) {
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.10g", std::stod(text));
    text = buf;
  }
  return text.empty() ? "-" : text;
}

}  // namespace

Format parse_format(const std::string& name) {
  if (name == "json") return Format::kJson;
  if (name == "csv") return Format::kCsv;
  if (name == "human") return Format::kHuman;
  throw std::invalid_argument("unknown output format '" + name + "'");
}

Node& Node::set(std::string key, Node value) {
  members_.emplace_back(std::move(key), std::move(value));
  return *this;
}

Node& Node::push(Node value) {
  items_.push_back(std::move(value));
  return *this;
}

std::string format_number(double x) {
  if (!std::isfinite(x)) return "";
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.17g", x);
  return buf;
}

std::string Node::scalar_text() const {
  switch (kind_) {
    case Kind::kNumber:
      return format_number(number_);
    case Kind::kInteger:
      return std::to_string(integer_);
    case Kind::kBool:
      return boolean_ ? "true" : "false";
    case Kind::kString:
      return text_;
    default:
      return "";
  }
}

void write_json(std::ostream& os, const Node& node, int indent) {
  const std::string pad(static_cast<std::size_t>(indent + 2), ' ');
  const std::string close(static_cast<std::size_t>(indent), ' ');
  switch (node.kind_) {
    case Node::Kind::kNull:
      os << "null";
      return;
    case Node::Kind::kNumber:
      if (std::isfinite(node.number_)) {
        os << format_number(node.number_);
      } else {
        os << "null";
      }
      return;
    case Node::Kind::kInteger:
    case Node::Kind::kBool:
      os << node.scalar_text();
      return;
    case Node::Kind::kString:
      write_escaped(os, node.text_);
      return;
    case Node::Kind::kObject: {
      if (node.members_.empty()) {
        os << "{}";
        return;
      }
      os << "{\n";
      for (std::size_t i = 0; i < node.members_.size(); ++i) {
        os << pad;
        write_escaped(os, node.members_[i].first);
        os << ": ";
        write_json(os, node.members_[i].second, indent + 2);
        os << (i + 1 < node.members_.size() ? ",\n" : "\n");
      }
      os << close << '}';
      return;
    }
    case Node::Kind::kArray: {
      if (node.items_.empty()) {
        os << "[]";
        return;
      }
      os << "[\n";
      for (std::size_t i = 0; i < node.items_.size(); ++i) {
        os << pad;
        write_json(os, node.items_[i], indent + 2);
        os << (i + 1 < node.items_.size() ? ",\n" : "\n");
      }
      os << close << ']';
      return;
    }
  }
}

void write_document(std::ostream& os, const Node& doc, Format format) {
  if (format == Format::kJson) {
    write_json(os, doc);
    os << '\n';
    return;
  }

  const Node* rows = find_rows(doc);
  if (format == Format::kCsv) {
    if (rows != nullptr) {
      const auto cols = columns_of(*rows);
      for (std::size_t i = 0; i < cols.size(); ++i) os << (i ? "," : "") << csv_field(cols[i]);
      os << '\n';
      for (const Node& row : rows->items()) {
        for (std::size_t i = 0; i < cols.size(); ++i) {
          os << (i ? "," : "") << csv_field(cell(row, cols[i]));
        }
        os << '\n';
      }
      return;
    }
    os << "key,value\n";
    std::vector<std::pair<std::string, const Node*>> leaves;
    flatten(doc, "", leaves);
    for (const auto& [key, value] : leaves) {
      os << csv_field(key) << ',' << csv_field(value->scalar_text()) << '\n';
    }
    return;
  }

  // human
  std::vector<std::pair<std::string, const Node*>> leaves;
  flatten(doc, "", leaves);
  std::size_t width = 0;
  for (const auto& leaf : leaves) width = std::max(width, leaf.first.size());
  for (const auto& [key, value] : leaves) {
    os << key << std::string(width - key.size() + 2, ' ') << human_text(*value) << '\n';
  }
  if (rows != nullptr) {
    const auto cols = columns_of(*rows);
    std::vector<std::vector<std::string>> cells;
    std::vector<std::size_t> widths;
    for (const std::string& c : cols) widths.push_back(c.size());
    for (const Node& row : rows->items()) {
      std::vector<std::string> line;
      for (std::size_t i = 0; i < cols.size(); ++i) {
        std::string text = "-";
        for (const auto& [key, value] : row.members()) {
          if (key == cols[i]) text = human_text(value);
        }
        widths[i] = std::max(widths[i], text.size());
        line.push_back(std::move(text));
      }
      cells.push_back(std::move(line));
    }
    os << '\n';
    auto emit = [&](const std::vector<std::string>& line) {
      for (std::size_t i = 0; i < line.size(); ++i) {
        os << line[i] << (i + 1 < line.size() ? std::string(widths[i] - line[i].size() + 2, ' ') : "");
      }
      os << '\n';
    };
    emit(cols);
    for (const auto& line : cells) emit(line);
  }
}

}  // namespace thermolength::cli
