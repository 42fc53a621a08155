#pragma once

#include <filesystem>
#include <string>
#include <vector>

#include "json.hpp"

namespace fractalis::cli {

using json = nlohmann::ordered_json;

/// Thrown for problems the CLI layer detects itself (unreadable files,
/// malformed replay reports, bad flag combinations).
struct CliError {
  int exit_code;
  std::string message;
};

struct Report {
  std::string command;
  std::string input_digest;
  json parameters = json::object();
  json results = json::object();
  std::vector<std::string> warnings;
  std::vector<std::string> data_files;

  json to_json() const;
};

std::string read_file(const std::filesystem::path& path);
void write_file(const std::filesystem::path& path, const std::string& bytes);

/// Column-oriented CSV at 17 significant digits. Empty cells for NaN.
class CsvTable {
public:
  explicit CsvTable(std::vector<std::string> header) : header_(std::move(header)) {}

  void add_row(const std::vector<double>& row);
  std::string str() const;

private:
  std::vector<std::string> header_;
  std::vector<std::vector<double>> rows_;
};

std::string format17(double v);

/// `<command>-<first 16 hex digits of digest>[-suffix].csv`
std::string data_file_name(const std::string& command, const std::string& digest, const std::string& suffix = {});

}  // namespace fractalis::cli
