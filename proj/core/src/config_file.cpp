#include "relsat/config_file.hpp"

#include <algorithm>
#include <cctype>
#include <cerrno>
#include <cmath>
#include <cstdlib>
#include <fstream>
#include <sstream>

#include "relsat/errors.hpp"

namespace relsat {

namespace {

bool isBlank(char c) { return c == ' ' || c == '\t' || c == '\r'; }

bool validName(std::string_view s) {
  if (s.empty()) return false;
  return std::all_of(s.begin(), s.end(), [](char c) {
    return std::isalnum(static_cast<unsigned char>(c)) || c == '_' || c == '-' || c == '.';
  });
}

[[noreturn]] void failAt(const std::string& source, int line, int column,
                         const std::string& message) {
  throw ConfigError(source + ":" + std::to_string(line) + ":" + std::to_string(column) + ": " +
                    message);
}

// Strips a trailing comment that starts at '#' or ';' preceded by whitespace.
std::string_view stripComment(std::string_view s) {
  for (std::size_t i = 0; i < s.size(); ++i) {
    if ((s[i] == '#' || s[i] == ';') && (i == 0 || isBlank(s[i - 1]))) return s.substr(0, i);
  }
  return s;
}

std::size_t firstNonBlank(std::string_view s, std::size_t from = 0) {
  while (from < s.size() && isBlank(s[from])) ++from;
  return from;
}

std::string_view trimRight(std::string_view s) {
  while (!s.empty() && isBlank(s.back())) s.remove_suffix(1);
  return s;
}

}  // namespace

ConfigFile ConfigFile::parse(std::istream& in, std::string sourceName) {
  ConfigFile cfg;
  cfg.source_ = std::move(sourceName);
  cfg.sections_.push_back("");
  cfg.sectionLines_.push_back(0);
  std::string current;
  std::string raw;
  int lineNo = 0;
  while (std::getline(in, raw)) {
    ++lineNo;
    const std::string_view line = trimRight(stripComment(raw));
    const std::size_t start = firstNonBlank(line);
    if (start == line.size()) continue;
    const int col = static_cast<int>(start) + 1;

    if (line[start] == '[') {
      const std::size_t close = line.find(']', start);
      if (close == std::string_view::npos) {
        failAt(cfg.source_, lineNo, col, "unterminated section header");
      }
      if (close + 1 != line.size()) {
        failAt(cfg.source_, lineNo, static_cast<int>(close) + 2,
               "unexpected text after section header");
      }
      std::string_view name = line.substr(start + 1, close - start - 1);
      const std::size_t ns = firstNonBlank(name);
      name = trimRight(name.substr(ns));
      if (!validName(name)) failAt(cfg.source_, lineNo, col + 1, "invalid section name");
      current = std::string(name);
      if (std::find(cfg.sections_.begin(), cfg.sections_.end(), current) != cfg.sections_.end()) {
        failAt(cfg.source_, lineNo, col, "duplicate section [" + current + "]");
      }
      cfg.sections_.push_back(current);
      cfg.sectionLines_.push_back(lineNo);
      continue;
    }

    const std::size_t eq = line.find('=', start);
    if (eq == std::string_view::npos) failAt(cfg.source_, lineNo, col, "expected 'key = value'");
    const std::string_view key = trimRight(line.substr(start, eq - start));
    if (!validName(key)) failAt(cfg.source_, lineNo, col, "invalid key name");
    const std::size_t vstart = firstNonBlank(line, eq + 1);
    if (vstart == line.size()) {
      failAt(cfg.source_, lineNo, static_cast<int>(eq) + 2, "missing value for '" +
                                                                std::string(key) + "'");
    }
    if (cfg.find(current, key) != nullptr) {
      failAt(cfg.source_, lineNo, col, "duplicate key '" + std::string(key) + "'");
    }
    ConfigEntry e;
    e.section = current;
    e.key = std::string(key);
    e.value = std::string(line.substr(vstart));
    e.line = lineNo;
    e.column = col;
    e.valueColumn = static_cast<int>(vstart) + 1;
    cfg.entries_.push_back(std::move(e));
  }
  return cfg;
}

ConfigFile ConfigFile::parseString(std::string_view text, std::string sourceName) {
  std::istringstream in{std::string(text)};
  return parse(in, std::move(sourceName));
}

ConfigFile ConfigFile::load(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ConfigError(path + ": cannot open scenario file");
  return parse(in, path);
}

bool ConfigFile::hasSection(std::string_view section) const {
  return std::find(sections_.begin(), sections_.end(), section) != sections_.end();
}

const ConfigEntry* ConfigFile::find(std::string_view section, std::string_view key) const {
  for (const ConfigEntry& e : entries_) {
    if (e.section == section && e.key == key) return &e;
  }
  return nullptr;
}

void ConfigFile::fail(const ConfigEntry& entry, const std::string& message, bool atValue) const {
  failAt(source_, entry.line, atValue ? entry.valueColumn : entry.column, message);
}

std::optional<std::string> ConfigFile::getString(std::string_view section,
                                                 std::string_view key) const {
  const ConfigEntry* e = find(section, key);
  if (e == nullptr) return std::nullopt;
  e->used = true;
  return e->value;
}

std::optional<double> ConfigFile::getReal(std::string_view section, std::string_view key) const {
  const ConfigEntry* e = find(section, key);
  if (e == nullptr) return std::nullopt;
  e->used = true;
  const char* begin = e->value.c_str();
  char* end = nullptr;
  errno = 0;
  const double v = std::strtod(begin, &end);
  if (end == begin || *end != '\0') fail(*e, "expected a number for '" + e->key + "'");
  if (errno == ERANGE || !std::isfinite(v)) fail(*e, "value of '" + e->key + "' is out of range");
  return v;
}

std::optional<bool> ConfigFile::getBool(std::string_view section, std::string_view key) const {
  const ConfigEntry* e = find(section, key);
  if (e == nullptr) return std::nullopt;
  e->used = true;
  const std::string& v = e->value;
  if (v == "true" || v == "on" || v == "yes" || v == "1") return true;
  if (v == "false" || v == "off" || v == "no" || v == "0") return false;
  fail(*e, "expected true/false for '" + e->key + "'");
}

std::optional<std::uint64_t> ConfigFile::getUnsigned(std::string_view section,
                                                     std::string_view key) const {
  const ConfigEntry* e = find(section, key);
  if (e == nullptr) return std::nullopt;
  e->used = true;
  const std::string& v = e->value;
  if (v.empty() || !std::all_of(v.begin(), v.end(), [](char c) { return c >= '0' && c <= '9'; })) {
    fail(*e, "expected a non-negative integer for '" + e->key + "'");
  }
  errno = 0;
  const unsigned long long n = std::strtoull(v.c_str(), nullptr, 10);
  if (errno == ERANGE) fail(*e, "value of '" + e->key + "' is out of range");
  return static_cast<std::uint64_t>(n);
}

void ConfigFile::rejectUnused() const {
  for (const ConfigEntry& e : entries_) {
    if (!e.used) {
      const std::string where = e.section.empty() ? "top level" : "section [" + e.section + "]";
      fail(e, "unknown key '" + e.key + "' in " + where, false);
    }
  }
}

void ConfigFile::rejectUnknownSections(const std::vector<std::string_view>& known) const {
  for (std::size_t i = 1; i < sections_.size(); ++i) {
    if (std::find(known.begin(), known.end(), sections_[i]) == known.end()) {
      failAt(source_, sectionLines_[i], 1, "unknown section [" + sections_[i] + "]");
    }
  }
}

}  // namespace relsat
