#include "gsn/config.hpp"

#include <cstdlib>
#include <fstream>

#include "gsn/errors.hpp"

namespace gsn::cli {

namespace {

std::string trim(const std::string& s) {
  const auto first = s.find_first_not_of(" \t\r");
  if (first == std::string::npos) return "";
  const auto last = s.find_last_not_of(" \t\r");
  return s.substr(first, last - first + 1);
}

std::optional<std::string> getenv_string(const char* name) {
  const char* v = std::getenv(name);
  if (v == nullptr) return std::nullopt;
  return std::string(v);
}

}  // namespace

Format parse_format(const std::string& text) {
  if (text == "csv") return Format::Csv;
  if (text == "json") return Format::Json;
  if (text == "markdown" || text == "md") return Format::Markdown;
  if (text == "bfile") return Format::Bfile;
  if (text == "text") return Format::Text;
  throw ParseError("unknown format '" + text + "' (csv, json, markdown, bfile, text)");
}

std::string to_string(Format format) {
  switch (format) {
    case Format::Csv: return "csv";
    case Format::Json: return "json";
    case Format::Markdown: return "markdown";
    case Format::Bfile: return "bfile";
    case Format::Text: return "text";
  }
  return "?";
}

Environment Environment::from_process() { return {getenv_string("GSN_MAX_DEGREE"), getenv_string("GSN_CONFIG")}; }

unsigned parse_unsigned(const std::string& text, const std::string& what) {
  const std::string t = trim(text);
  if (t.empty() || t.find_first_not_of("0123456789") != std::string::npos || t.size() > 9)
    throw ParseError(what + ": expected a non-negative integer, got '" + text + "'");
  return static_cast<unsigned>(std::stoul(t));
}

std::map<std::string, std::string> read_config_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ParseError("cannot read config file " + path);
  std::map<std::string, std::string> out;
  std::string line;
  int number = 0;
  while (std::getline(in, line)) {
    ++number;
    if (const auto hash = line.find('#'); hash != std::string::npos) line.erase(hash);
    line = trim(line);
    if (line.empty()) continue;
    const auto eq = line.find('=');
    if (eq == std::string::npos)
      throw ParseError(path + ":" + std::to_string(number) + ": expected key=value");
    out[trim(line.substr(0, eq))] = trim(line.substr(eq + 1));
  }
  return out;
}

CliConfig resolve_config(std::optional<unsigned> guard_flag, std::optional<std::string> config_flag,
                         const Environment& env) {
  CliConfig cfg;
  cfg.config_path = config_flag ? config_flag : env.config;
  if (cfg.config_path) {
    for (const auto& [key, value] : read_config_file(*cfg.config_path)) {
      if (key == "degree_guard" || key == "max_degree")
        cfg.degree_guard = parse_unsigned(value, "config " + key);
      else if (key == "format")
        cfg.format = parse_format(value);
      else if (key == "seed")
        cfg.seed = parse_unsigned(value, "config seed");
      else
        throw ParseError("config: unknown key '" + key + "'");
    }
  }
  if (env.max_degree) cfg.degree_guard = parse_unsigned(*env.max_degree, "GSN_MAX_DEGREE");
  if (guard_flag) cfg.degree_guard = *guard_flag;
  return cfg;
}

}  // namespace gsn::cli
