#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <string>

namespace gsn::cli {

enum class Format { Csv, Json, Markdown, Bfile, Text };

Format parse_format(const std::string& text);
std::string to_string(Format format);

/// Process environment seen by the CLI (injected so tests can vary it).
struct Environment {
  std::optional<std::string> max_degree;  // GSN_MAX_DEGREE
  std::optional<std::string> config;      // GSN_CONFIG
  static Environment from_process();
};

/// key=value lines; '#' starts a comment, blank lines are ignored.
std::map<std::string, std::string> read_config_file(const std::string& path);

struct CliConfig {
  unsigned degree_guard = 64;
  std::optional<Format> format;
  std::optional<std::uint64_t> seed;
  std::optional<std::string> config_path;
};

/// Guard precedence: flag, then GSN_MAX_DEGREE, then the config file, then 64.
/// The config file is --config if given, else GSN_CONFIG.
CliConfig resolve_config(std::optional<unsigned> guard_flag, std::optional<std::string> config_flag,
                         const Environment& env);

unsigned parse_unsigned(const std::string& text, const std::string& what);

}  // namespace gsn::cli
