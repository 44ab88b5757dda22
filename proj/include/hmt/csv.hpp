#pragma once

#include <cstdint>
#include <fstream>
#include <string>
#include <vector>

namespace hmt {

// 17-significant-digit decimal formatting, deterministic across runs
std::string format_sig17(double v);

// CSV with '#'-prefixed metadata header lines
class CsvWriter {
public:
  explicit CsvWriter(const std::string& path);

  void meta(const std::string& key, const std::string& value);
  void header(const std::vector<std::string>& columns);
  void row(const std::vector<double>& values);
  void row_mixed(const std::vector<std::string>& values);

private:
  std::ofstream out_;
};

std::uint64_t fnv1a64(const std::string& s);

} // namespace hmt
