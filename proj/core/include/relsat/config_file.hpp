#pragma once

#include <cstdint>
#include <istream>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace relsat {

/// One `key = value` line. Line and column are 1-based; `valueColumn` points at
/// the first character of the value.
struct ConfigEntry {
  std::string section;
  std::string key;
  std::string value;
  int line = 0;
  int column = 0;
  int valueColumn = 0;
  mutable bool used = false;
};

/// Line-oriented `key = value` file with `[section]` headers. `#` and `;`
/// start comments. Keys before the first header belong to section "".
///
/// Typed getters mark entries as used, so a loader can reject leftovers with
/// `rejectUnused`. All failures throw ConfigError carrying line and column.
class ConfigFile {
 public:
  static ConfigFile parse(std::istream& in, std::string sourceName = "<input>");
  static ConfigFile parseString(std::string_view text, std::string sourceName = "<input>");
  static ConfigFile load(const std::string& path);

  bool hasSection(std::string_view section) const;
  const ConfigEntry* find(std::string_view section, std::string_view key) const;

  std::optional<std::string> getString(std::string_view section, std::string_view key) const;
  std::optional<double> getReal(std::string_view section, std::string_view key) const;
  std::optional<bool> getBool(std::string_view section, std::string_view key) const;
  std::optional<std::uint64_t> getUnsigned(std::string_view section, std::string_view key) const;

  /// Throws for the first entry no getter has touched.
  void rejectUnused() const;

  /// Throws for the first section header not in `known`.
  void rejectUnknownSections(const std::vector<std::string_view>& known) const;

  /// "file:line:column: message".
  [[noreturn]] void fail(const ConfigEntry& entry, const std::string& message,
                         bool atValue = true) const;

  const std::string& sourceName() const { return source_; }
  const std::vector<ConfigEntry>& entries() const { return entries_; }
  /// Section names in file order, starting with the implicit "".
  const std::vector<std::string>& sections() const { return sections_; }

 private:
  std::string source_;
  std::vector<ConfigEntry> entries_;
  std::vector<std::string> sections_;
  std::vector<int> sectionLines_;
};

}  // namespace relsat
