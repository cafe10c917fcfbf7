#pragma once

#include <cctype>
#include <cstdint>
#include <fstream>
#include <map>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "luvt/common.hpp"

namespace luvt {

/// Flat key=value configuration. Lines are `key = value`, `#` starts a
/// comment, blank lines are ignored. Keys are validated against a schema
/// before use; unknown keys are an error that names the key and its line.
class Config {
 public:
  struct Entry {
    std::string value;
    int line = 0;  // 0 for programmatic --set overrides
  };

  static Config from_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw ParseError("config: cannot open file: " + path);
    Config cfg;
    cfg.source_ = path;
    std::string line;
    int lineno = 0;
    while (std::getline(in, line)) {
      ++lineno;
      cfg.parse_line(line, lineno);
    }
    return cfg;
  }

  static Config from_string(const std::string& text,
                            const std::string& source = "<string>") {
    Config cfg;
    cfg.source_ = source;
    std::istringstream in(text);
    std::string line;
    int lineno = 0;
    while (std::getline(in, line)) {
      ++lineno;
      cfg.parse_line(line, lineno);
    }
    return cfg;
  }

  void set(const std::string& key, const std::string& value) {
    entries_[key] = Entry{value, 0};
  }

  bool has(const std::string& key) const { return entries_.count(key) > 0; }

  std::string get_str(const std::string& key) const {
    auto it = entries_.find(key);
    if (it == entries_.end())
      throw ValidationError("config: missing required key '" + key + "' in " + source_);
    return it->second.value;
  }

  std::string get_str(const std::string& key, const std::string& fallback) const {
    auto it = entries_.find(key);
    return it == entries_.end() ? fallback : it->second.value;
  }

  std::int64_t get_int(const std::string& key, std::int64_t fallback) const {
    if (!has(key)) return fallback;
    return parse_int(key);
  }

  std::int64_t get_int(const std::string& key) const {
    if (!has(key))
      throw ValidationError("config: missing required key '" + key + "' in " + source_);
    return parse_int(key);
  }

  std::uint64_t get_u64(const std::string& key) const {
    const Entry& e = lookup(key);
    try {
      std::size_t pos = 0;
      std::uint64_t v = std::stoull(e.value, &pos);
      if (pos != e.value.size()) throw std::invalid_argument("trailing");
      return v;
    } catch (const std::exception&) {
      throw bad_value(key, e, "unsigned integer");
    }
  }

  double get_double(const std::string& key, double fallback) const {
    if (!has(key)) return fallback;
    const Entry& e = lookup(key);
    try {
      std::size_t pos = 0;
      double v = std::stod(e.value, &pos);
      if (pos != e.value.size()) throw std::invalid_argument("trailing");
      return v;
    } catch (const std::exception&) {
      throw bad_value(key, e, "number");
    }
  }

  bool get_bool(const std::string& key, bool fallback) const {
    if (!has(key)) return fallback;
    const Entry& e = lookup(key);
    if (e.value == "true" || e.value == "1") return true;
    if (e.value == "false" || e.value == "0") return false;
    throw bad_value(key, e, "bool (true/false/1/0)");
  }

  std::vector<int> get_int_list(const std::string& key,
                                const std::vector<int>& fallback) const {
    if (!has(key)) return fallback;
    const Entry& e = lookup(key);
    std::vector<int> out;
    std::string item;
    std::istringstream ss(e.value);
    while (std::getline(ss, item, ',')) {
      item = trim(item);
      if (item.empty()) throw bad_value(key, e, "comma-separated integers");
      try {
        std::size_t pos = 0;
        out.push_back(std::stoi(item, &pos));
        if (pos != item.size()) throw std::invalid_argument("trailing");
      } catch (const std::exception&) {
        throw bad_value(key, e, "comma-separated integers");
      }
    }
    return out;
  }

  /// Rejects any key not in `known`, naming the key and its source line.
  void require_known(const std::set<std::string>& known) const {
    for (const auto& [key, entry] : entries_) {
      if (!known.count(key)) {
        std::ostringstream msg;
        msg << "config: unknown key '" << key << "'";
        if (entry.line > 0) msg << " at " << source_ << ":" << entry.line;
        throw ParseError(msg.str());
      }
    }
  }

  const std::map<std::string, Entry>& entries() const { return entries_; }
  const std::string& source() const { return source_; }

 private:
  std::map<std::string, Entry> entries_;
  std::string source_ = "<empty>";

  static std::string trim(const std::string& s) {
    std::size_t b = 0, e = s.size();
    while (b < e && std::isspace(static_cast<unsigned char>(s[b]))) ++b;
    while (e > b && std::isspace(static_cast<unsigned char>(s[e - 1]))) --e;
    return s.substr(b, e - b);
  }

  void parse_line(const std::string& raw, int lineno) {
    std::string line = raw;
    auto hash = line.find('#');
    if (hash != std::string::npos) line = line.substr(0, hash);
    line = trim(line);
    if (line.empty()) return;
    auto eq = line.find('=');
    if (eq == std::string::npos) {
      std::ostringstream msg;
      msg << "config: expected key=value at " << source_ << ":" << lineno
          << " ('" << trim(raw) << "')";
      throw ParseError(msg.str());
    }
    std::string key = trim(line.substr(0, eq));
    std::string value = trim(line.substr(eq + 1));
    if (key.empty()) {
      std::ostringstream msg;
      msg << "config: empty key at " << source_ << ":" << lineno;
      throw ParseError(msg.str());
    }
    entries_[key] = Entry{value, lineno};
  }

  const Entry& lookup(const std::string& key) const {
    auto it = entries_.find(key);
    if (it == entries_.end())
      throw ValidationError("config: missing required key '" + key + "' in " + source_);
    return it->second;
  }

  std::int64_t parse_int(const std::string& key) const {
    const Entry& e = lookup(key);
    try {
      std::size_t pos = 0;
      std::int64_t v = std::stoll(e.value, &pos);
      if (pos != e.value.size()) throw std::invalid_argument("trailing");
      return v;
    } catch (const std::exception&) {
      throw bad_value(key, e, "integer");
    }
  }

  ParseError bad_value(const std::string& key, const Entry& e,
                       const std::string& expected) const {
    std::ostringstream msg;
    msg << "config: key '" << key << "' expects " << expected << ", got '"
        << e.value << "'";
    if (e.line > 0) msg << " at " << source_ << ":" << e.line;
    return ParseError(msg.str());
  }
};

}  // namespace luvt
