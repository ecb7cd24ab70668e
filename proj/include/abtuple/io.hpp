#pragma once

// Tuple text format: one element per line, coordinates as whitespace
// separated decimal integers. Blank lines and lines starting with '#' are
// ignored; every element line must have the same arity. A document whose
// first non-blank character is '{' is read as tuple JSON instead.

#include <abtuple/errors.hpp>
#include <abtuple/json.hpp>
#include <abtuple/tuple.hpp>

#include <cctype>
#include <fstream>
#include <sstream>
#include <string>
#include <vector>

namespace abtuple {

inline GroupTuple parse_tuple_text(const std::string& text) {
  std::vector<GroupElement> elements;
  std::istringstream lines(text);
  std::string line;
  std::size_t line_no = 0;
  while (std::getline(lines, line)) {
    ++line_no;
    const auto first = line.find_first_not_of(" \t\r");
    if (first == std::string::npos || line[first] == '#') continue;
    std::istringstream fields(line);
    std::vector<Integer> coords;
    std::string field;
    while (fields >> field) {
      const std::size_t start = (field[0] == '-' || field[0] == '+') ? 1 : 0;
      if (start == field.size() || field.find_first_not_of("0123456789", start) != std::string::npos) {
        throw ParseError("line " + std::to_string(line_no) + ": not an integer: " + field);
      }
      coords.emplace_back(field[0] == '+' ? field.substr(1) : field);
    }
    if (!elements.empty() && coords.size() != elements.front().dim()) {
      throw ParseError("line " + std::to_string(line_no) + ": expected " +
                       std::to_string(elements.front().dim()) + " coordinates, got " +
                       std::to_string(coords.size()));
    }
    elements.emplace_back(std::move(coords));
  }
  if (elements.empty()) throw ParseError("tuple has no elements");
  return GroupTuple(std::move(elements));
}

inline std::string format_tuple_text(const GroupTuple& t) {
  std::string out;
  for (const auto& e : t) {
    for (std::size_t i = 0; i < e.dim(); ++i) {
      if (i) out += ' ';
      out += e[i].str();
    }
    out += '\n';
  }
  return out;
}

inline GroupTuple parse_tuple(const std::string& text) {
  const auto first = text.find_first_not_of(" \t\r\n");
  if (first != std::string::npos && text[first] == '{') {
    Json j;
    try {
      j = Json::parse(text);
    } catch (const Json::exception& e) {
      throw ParseError(std::string("invalid tuple JSON: ") + e.what());
    }
    return tuple_from_json(j);
  }
  return parse_tuple_text(text);
}

inline std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw ParseError("cannot read " + path);
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

inline GroupTuple load_tuple(const std::string& path) { return parse_tuple(read_file(path)); }

}  // namespace abtuple
