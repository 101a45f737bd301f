// Copyright 2026 The crnd Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "crnd/manifold_file.hpp"

#include <algorithm>
#include <cctype>
#include <filesystem>
#include <fstream>
#include <map>
#include <sstream>
#include <unistd.h>

#include "crnd/error.hpp"
#include "crnd/poly_parser.hpp"

namespace crnd {

namespace {

struct StringValue {
  std::string text;
  int line = 0;
  int col = 0;  // column of the first character inside the quotes
};

struct Value {
  bool is_int = false;
  long integer = 0;
  std::vector<StringValue> strings;  // one entry for a plain string
  bool is_array = false;
  int line = 0, col = 0;
};

class Scanner {
 public:
  explicit Scanner(std::string_view src) : src_(src) {}

  bool done() {
    skip_blank(true);
    return i_ >= src_.size();
  }

  // Parses the whole file into section -> key -> value.
  std::map<std::string, std::map<std::string, Value>> parse() {
    std::map<std::string, std::map<std::string, Value>> out;
    std::string section;
    while (!done()) {
      if (cur() == '[') {
        const int l = line_, c = col_;
        bump();
        std::string name;
        while (i_ < src_.size() && (std::isalnum(static_cast<unsigned char>(cur())) || cur() == '_')) {
          name += cur();
          bump();
        }
        if (i_ >= src_.size() || cur() != ']') fail("expected ']' after section name");
        bump();
        if (name != "manifold" && name != "basepoint") {
          throw ParseError(l, c, "unknown section [" + name + "]");
        }
        if (out.count(name)) throw ParseError(l, c, "duplicate section [" + name + "]");
        out[name];
        section = name;
        end_of_line();
        continue;
      }
      const int l = line_, c = col_;
      std::string key;
      while (i_ < src_.size() && (std::isalnum(static_cast<unsigned char>(cur())) || cur() == '_')) {
        key += cur();
        bump();
      }
      if (key.empty()) fail("expected a key or a section header");
      if (section.empty()) throw ParseError(l, c, "key '" + key + "' outside a section");
      skip_blank(false);
      if (i_ >= src_.size() || cur() != '=') fail("expected '=' after '" + key + "'");
      bump();
      skip_blank(false);
      Value v = value();
      v.line = l;
      v.col = c;
      if (!out[section].emplace(key, std::move(v)).second) {
        throw ParseError(l, c, "duplicate key '" + key + "'");
      }
      end_of_line();
    }
    return out;
  }

 private:
  char cur() const { return src_[i_]; }
  void bump() {
    if (src_[i_] == '\n') {
      ++line_;
      col_ = 1;
    } else if ((static_cast<unsigned char>(src_[i_]) & 0xC0) != 0x80) {
      ++col_;
    }
    ++i_;
  }
  [[noreturn]] void fail(const std::string& msg) const { throw ParseError(line_, col_, msg); }

  void skip_blank(bool newlines) {
    while (i_ < src_.size()) {
      const char c = cur();
      if (c == '#') {
        while (i_ < src_.size() && cur() != '\n') bump();
      } else if (c == ' ' || c == '\t' || c == '\r' || (newlines && c == '\n')) {
        bump();
      } else {
        break;
      }
    }
  }

  void end_of_line() {
    skip_blank(false);
    if (i_ < src_.size() && cur() != '\n') fail("unexpected text after value");
  }

  StringValue string_value() {
    if (i_ >= src_.size() || cur() != '"') fail("expected a double-quoted string");
    bump();
    StringValue s{"", line_, col_};
    while (true) {
      if (i_ >= src_.size() || cur() == '\n') fail("unterminated string");
      const char c = cur();
      if (c == '"') break;
      if (c == '\\') {
        bump();
        if (i_ >= src_.size() || (cur() != '"' && cur() != '\\')) fail("unsupported escape");
      }
      s.text += cur();
      bump();
    }
    bump();
    return s;
  }

  Value value() {
    Value v;
    if (i_ >= src_.size()) fail("missing value");
    if (cur() == '"') {
      v.strings.push_back(string_value());
      return v;
    }
    if (cur() == '[') {
      v.is_array = true;
      bump();
      skip_blank(true);
      while (i_ < src_.size() && cur() != ']') {
        v.strings.push_back(string_value());
        skip_blank(true);
        if (i_ < src_.size() && cur() == ',') {
          bump();
          skip_blank(true);
        } else if (i_ < src_.size() && cur() != ']') {
          fail("expected ',' or ']'");
        }
      }
      if (i_ >= src_.size()) fail("unterminated array");
      bump();
      return v;
    }
    std::string digits;
    if (cur() == '-' || cur() == '+') {
      digits += cur();
      bump();
    }
    while (i_ < src_.size() && std::isdigit(static_cast<unsigned char>(cur()))) {
      digits += cur();
      bump();
    }
    if (digits.empty() || digits == "-" || digits == "+" || digits.size() > 9) fail("expected an integer, string or array");
    v.is_int = true;
    v.integer = std::stol(digits);
    return v;
  }

  std::string_view src_;
  std::size_t i_ = 0;
  int line_ = 1, col_ = 1;
};

int int_key(const std::map<std::string, Value>& sec, const std::string& key) {
  const auto it = sec.find(key);
  if (it == sec.end()) throw InputError("manifold file: missing key '" + key + "'");
  if (!it->second.is_int) throw ParseError(it->second.line, it->second.col, "'" + key + "' must be an integer");
  return static_cast<int>(it->second.integer);
}

// Re-raises a parse error of a string value at its file position.
template <typename Fn>
auto at_string(const StringValue& s, Fn fn) {
  try {
    return fn(s.text);
  } catch (const ParseError& e) {
    const std::string msg = e.what();
    const auto colon = msg.find(": ", msg.find(':') + 1);
    const std::string detail = colon == std::string::npos ? msg : msg.substr(colon + 2);
    if (e.line() == 1) throw ParseError(s.line, s.col + e.column() - 1, detail);
    throw ParseError(s.line, s.col, detail);
  }
}

std::vector<StringValue> string_list(const std::map<std::string, Value>& sec, const std::string& key) {
  const auto it = sec.find(key);
  if (it == sec.end()) return {};
  if (it->second.is_int) throw ParseError(it->second.line, it->second.col, "'" + key + "' must be a string array");
  return it->second.strings;
}

}  // namespace

ManifoldSpec parse_manifold(std::string_view text) {
  const auto file = Scanner(text).parse();
  const auto ms = file.find("manifold");
  if (ms == file.end()) throw InputError("manifold file: missing [manifold] section");
  const auto& sec = ms->second;

  ManifoldSpec spec;
  spec.n = int_key(sec, "n");
  spec.d = int_key(sec, "d");
  spec.k = int_key(sec, "k");
  const Dimensions dims = spec.dims();
  dims.validate();

  std::vector<StringValue> phi = string_list(sec, "phi");
  std::vector<StringValue> numbered;
  for (int j = 1; j <= spec.d; ++j) {
    const auto it = sec.find("phi" + std::to_string(j));
    if (it == sec.end()) continue;
    if (it->second.is_int || it->second.is_array) {
      throw ParseError(it->second.line, it->second.col, "'phi" + std::to_string(j) + "' must be a string");
    }
    numbered.push_back(it->second.strings[0]);
  }
  for (const auto& [key, v] : sec) {
    const bool known = key == "n" || key == "d" || key == "k" || key == "phi" ||
                       (key.rfind("phi", 0) == 0 && key.size() > 3 &&
                        std::all_of(key.begin() + 3, key.end(), [](char c) { return std::isdigit(static_cast<unsigned char>(c)); }) &&
                        std::stoi(key.substr(3)) >= 1 && std::stoi(key.substr(3)) <= spec.d);
    if (!known) throw ParseError(v.line, v.col, "unknown key '" + key + "'");
  }
  if (!phi.empty() && !numbered.empty()) throw InputError("manifold file: give either phi or phi1..phid");
  if (phi.empty()) phi = numbered;
  if (static_cast<int>(phi.size()) != spec.d) {
    throw InputError("manifold file: expected " + std::to_string(spec.d) + " phi component(s), got " +
                     std::to_string(phi.size()));
  }

  spec.polynomial.dims = dims;
  for (int j = 0; j < spec.d; ++j) {
    spec.phi.push_back(phi[j].text);
    ParsedPoly p;
    try {
      p = at_string(phi[j], [&](const std::string& t) { return parse_real_component(t, dims); });
    } catch (const ParseError&) {
      throw;
    } catch (const InputError& e) {
      throw InputError("phi" + std::to_string(j + 1) + ": " + e.what());
    }
    if (!p.exact.constant_term().is_zero()) {
      throw InputError("phi" + std::to_string(j + 1) + ": nonzero constant term (the graph must pass through 0)");
    }
    for (const auto& w : p.warnings) spec.warnings.push_back("phi" + std::to_string(j + 1) + ": " + w);
    spec.polynomial.components.push_back(p.exact);
  }

  const auto bs = file.find("basepoint");
  if (bs != file.end()) {
    for (const auto& [key, v] : bs->second) {
      if (key != "z" && key != "s") throw ParseError(v.line, v.col, "unknown key '" + key + "'");
    }
    const auto z = string_list(bs->second, "z");
    const auto s = string_list(bs->second, "s");
    if (static_cast<int>(z.size()) != spec.n || static_cast<int>(s.size()) != spec.d) {
      throw InputError("manifold file: basepoint needs n z-values and d s-values");
    }
    Basepoint p;
    for (const auto& x : z) p.z.push_back(at_string(x, [](const std::string& t) { return parse_constant(t); }));
    for (const auto& x : s) {
      const GaussianRational v = at_string(x, [](const std::string& t) { return parse_constant(t); });
      if (!v.is_real()) throw ParseError(x.line, x.col, "s-coordinate must be real");
      p.s.push_back(v.re());
    }
    spec.basepoint = std::move(p);
  }
  return spec;
}

ManifoldSpec load_manifold(const std::string& path) { return parse_manifold(read_file(path)); }

Basepoint parse_point(std::string_view text, int n, int d) {
  std::vector<std::string> parts;
  std::string cur;
  for (char c : text) {
    if (c == ',') {
      parts.push_back(cur);
      cur.clear();
    } else {
      cur += c;
    }
  }
  parts.push_back(cur);
  if (static_cast<int>(parts.size()) != n + d) {
    throw InputError("point: expected " + std::to_string(n + d) + " comma-separated values (z1..zn, s1..sd)");
  }
  Basepoint p;
  for (int i = 0; i < n + d; ++i) {
    const GaussianRational v = parse_constant(parts[i]);
    if (i < n) {
      p.z.push_back(v);
    } else {
      if (!v.is_real()) throw InputError("point: s" + std::to_string(i - n + 1) + " must be real");
      p.s.push_back(v.re());
    }
  }
  return p;
}

std::string format_point(const Basepoint& p) {
  std::string out;
  for (const auto& z : p.z) out += (out.empty() ? "" : ",") + z.to_string();
  for (const auto& s : p.s) out += (out.empty() ? "" : ",") + s.get_str();
  return out;
}

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw InputError("cannot read '" + path + "'");
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

void write_file_atomic(const std::string& path, std::string_view contents) {
  const std::string tmp = path + ".tmp." + std::to_string(::getpid());
  {
    std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
    if (!out) throw InputError("cannot write '" + tmp + "'");
    out.write(contents.data(), static_cast<std::streamsize>(contents.size()));
    out.flush();
    if (!out) throw InputError("write failed for '" + tmp + "'");
  }
  std::error_code ec;
  std::filesystem::rename(tmp, path, ec);
  if (ec) {
    std::filesystem::remove(tmp, ec);
    throw InputError("cannot move output into place at '" + path + "'");
  }
}

}  // namespace crnd
