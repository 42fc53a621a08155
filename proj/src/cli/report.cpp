#include "report.hpp"

#include <openssl/evp.h>

#include <cmath>
#include <cstdio>
#include <fstream>
#include <sstream>

#include "fractalis/cli.hpp"

#ifndef FRACTALIS_VERSION
#define FRACTALIS_VERSION "unknown"
#endif

namespace fractalis::cli {

std::string sha256_hex(const std::string& bytes) {
  unsigned char md[EVP_MAX_MD_SIZE];
  unsigned int len = 0;
  if (EVP_Digest(bytes.data(), bytes.size(), md, &len, EVP_sha256(), nullptr) != 1)
    throw CliError{input_error, "sha256 digest failed"};
  static constexpr char hex[] = "0123456789abcdef";
  std::string out;
  out.reserve(2 * len);
  for (unsigned int i = 0; i < len; ++i) {
    out += hex[md[i] >> 4];
    out += hex[md[i] & 0xf];
  }
  return out;
}

json Report::to_json() const {
  json j;
  j["command"] = command;
  j["version"] = FRACTALIS_VERSION;
  j["input_digest"] = input_digest;
  j["parameters"] = parameters;
  j["results"] = results;
  j["warnings"] = warnings;
  j["data_files"] = data_files;
  return j;
}

std::string read_file(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw CliError{input_error, "cannot open '" + path.string() + "'"};
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

void write_file(const std::filesystem::path& path, const std::string& bytes) {
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) throw CliError{input_error, "cannot write '" + path.string() + "'"};
  out << bytes;
  if (!out) throw CliError{input_error, "write to '" + path.string() + "' failed"};
}

std::string format17(double v) {
  if (std::isnan(v)) return {};
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.17g", v);
  return buf;
}

void CsvTable::add_row(const std::vector<double>& row) { rows_.push_back(row); }

std::string CsvTable::str() const {
  std::string out;
  for (std::size_t i = 0; i < header_.size(); ++i) out += (i ? "," : "") + header_[i];
  out += '\n';
  for (const auto& row : rows_) {
    for (std::size_t i = 0; i < row.size(); ++i) {
      if (i) out += ',';
      out += format17(row[i]);
    }
    out += '\n';
  }
  return out;
}

std::string data_file_name(const std::string& command, const std::string& digest, const std::string& suffix) {
  std::string name = command + "-" + digest.substr(0, 16);
  if (!suffix.empty()) name += "-" + suffix;
  return name + ".csv";
}

}  // namespace fractalis::cli
