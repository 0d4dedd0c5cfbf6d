#include "cartierlab/config.hpp"

#include <cctype>

#include "cartierlab/errors.hpp"

namespace cartierlab {

using nlohmann::json;

namespace {

class Reader {
 public:
  explicit Reader(std::string_view text) : s_(text) {}

  json parse() {
    json doc = json::object();
    std::string section;
    doc[section] = json::object();
    for (;;) {
      skip_blank_lines();
      if (eof()) break;
      if (peek() == '[') {
        ++pos_;
        std::size_t start = pos_;
        while (!eof() && peek() != ']' && peek() != '\n') ++pos_;
        if (eof() || peek() != ']') fail("unterminated section header");
        section = trim(s_.substr(start, pos_ - start));
        ++pos_;
        if (section.empty()) fail("empty section name");
        if (doc.contains(section)) fail("duplicate section [" + section + "]");
        doc[section] = json::object();
        end_of_line();
        continue;
      }
      std::string key = read_key();
      skip_spaces();
      if (eof() || peek() != '=') fail("expected '=' after key '" + key + "'");
      ++pos_;
      skip_spaces();
      json value = read_value();
      if (doc[section].contains(key)) fail("duplicate key '" + key + "'");
      doc[section][key] = std::move(value);
      end_of_line();
    }
    if (doc[""].empty()) doc.erase("");
    return doc;
  }

 private:
  std::string_view s_;
  std::size_t pos_ = 0;

  bool eof() const { return pos_ >= s_.size(); }
  char peek() const { return s_[pos_]; }

  std::size_t line() const {
    std::size_t n = 1;
    for (std::size_t i = 0; i < pos_ && i < s_.size(); ++i)
      if (s_[i] == '\n') ++n;
    return n;
  }

  [[noreturn]] void fail(const std::string& msg) const {
    throw InputError("line " + std::to_string(line()) + ": " + msg);
  }

  static std::string trim(std::string_view v) {
    std::size_t a = 0, b = v.size();
    while (a < b && std::isspace(static_cast<unsigned char>(v[a]))) ++a;
    while (b > a && std::isspace(static_cast<unsigned char>(v[b - 1]))) --b;
    return std::string(v.substr(a, b - a));
  }

  void skip_spaces() {
    while (!eof() && (peek() == ' ' || peek() == '\t' || peek() == '\r')) ++pos_;
  }

  void skip_comment() {
    if (!eof() && peek() == '#')
      while (!eof() && peek() != '\n') ++pos_;
  }

  void skip_blank_lines() {
    for (;;) {
      skip_spaces();
      skip_comment();
      if (!eof() && peek() == '\n') {
        ++pos_;
        continue;
      }
      return;
    }
  }

  /// Whitespace, comments and newlines inside arrays.
  void skip_insignificant() {
    for (;;) {
      skip_spaces();
      skip_comment();
      if (!eof() && peek() == '\n') {
        ++pos_;
        continue;
      }
      return;
    }
  }

  void end_of_line() {
    skip_spaces();
    skip_comment();
    if (!eof() && peek() != '\n') fail("unexpected text after value");
  }

  std::string read_key() {
    std::size_t start = pos_;
    while (!eof() && (std::isalnum(static_cast<unsigned char>(peek())) || peek() == '_' || peek() == '-')) ++pos_;
    if (start == pos_) fail("expected a key");
    return std::string(s_.substr(start, pos_ - start));
  }

  json read_value() {
    if (eof()) fail("missing value");
    char c = peek();
    if (c == '"') return read_string();
    if (c == '[') return read_array();
    if (c == '-' || c == '+' || std::isdigit(static_cast<unsigned char>(c))) return read_integer();
    if (s_.substr(pos_, 4) == "true") {
      pos_ += 4;
      return true;
    }
    if (s_.substr(pos_, 5) == "false") {
      pos_ += 5;
      return false;
    }
    fail("unrecognized value");
  }

  json read_string() {
    ++pos_;
    std::string out;
    for (;;) {
      if (eof() || peek() == '\n') fail("unterminated string");
      char c = s_[pos_++];
      if (c == '"') return out;
      if (c == '\\') {
        if (eof()) fail("unterminated escape");
        char e = s_[pos_++];
        switch (e) {
          case '"': out += '"'; break;
          case '\\': out += '\\'; break;
          case 'n': out += '\n'; break;
          case 't': out += '\t'; break;
          default: fail(std::string("unknown escape \\") + e);
        }
      } else {
        out += c;
      }
    }
  }

  json read_integer() {
    std::size_t start = pos_;
    if (peek() == '-' || peek() == '+') ++pos_;
    std::size_t digits = pos_;
    while (!eof() && std::isdigit(static_cast<unsigned char>(peek()))) ++pos_;
    if (digits == pos_) fail("expected digits");
    std::string text(s_.substr(start, pos_ - start));
    try {
      return std::stoll(text);
    } catch (const std::out_of_range&) {
      fail("integer out of range: " + text);
    }
  }

  json read_array() {
    ++pos_;
    json arr = json::array();
    for (;;) {
      skip_insignificant();
      if (eof()) fail("unterminated array");
      if (peek() == ']') {
        ++pos_;
        return arr;
      }
      arr.push_back(read_value());
      skip_insignificant();
      if (eof()) fail("unterminated array");
      if (peek() == ',') {
        ++pos_;
        continue;
      }
      if (peek() != ']') fail("expected ',' or ']' in array");
    }
  }
};

}  // namespace

json parse_config(std::string_view text) { return Reader(text).parse(); }

}  // namespace cartierlab
