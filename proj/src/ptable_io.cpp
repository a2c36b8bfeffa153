#include <fstream>
#include <istream>
#include <ostream>
#include <random>
#include <sstream>
#include <string>

#include "partclass/errors.hpp"
#include "partclass/exactparts.hpp"

namespace partclass {

namespace {

constexpr const char* kHeaderPrefix = "PTABLE v1 max=";

bool is_decimal(const std::string& s) {
  if (s.empty()) return false;
  for (char c : s) {
    if (c < '0' || c > '9') return false;
  }
  return s.size() == 1 || s[0] != '0';
}

}  // namespace

void PartitionTable::write(std::ostream& out) const {
  out << kHeaderPrefix << max_n();
  for (const mpz_class& v : values_) out << '\n' << v.get_str(10);
}

PartitionTable PartitionTable::read(std::istream& in) {
  std::string line;
  if (!std::getline(in, line) || line.rfind(kHeaderPrefix, 0) != 0) {
    throw FormatError("PTABLE: missing 'PTABLE v1 max=<n>' header");
  }
  const std::string count_text = line.substr(std::char_traits<char>::length(kHeaderPrefix));
  if (!is_decimal(count_text)) throw FormatError("PTABLE: malformed header '" + line + "'");
  const long max_n = std::stol(count_text);

  std::vector<mpz_class> values;
  values.reserve(static_cast<std::size_t>(max_n) + 1);
  while (std::getline(in, line)) {
    if (!is_decimal(line)) throw FormatError("PTABLE: malformed value on line " + std::to_string(values.size() + 2));
    values.emplace_back(line, 10);
  }
  if (static_cast<long>(values.size()) != max_n + 1) {
    throw FormatError("PTABLE: header promises " + std::to_string(max_n + 1) + " values, found " +
                      std::to_string(values.size()));
  }
  if (values[0] != 1) throw FormatError("PTABLE: p(0) must be 1");
  return PartitionTable(std::move(values));
}

void PartitionTable::save(const std::filesystem::path& path) const {
  std::random_device rd;
  std::filesystem::path tmp = path;
  tmp += ".tmp" + std::to_string(rd());
  {
    std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
    if (!out) throw IoError("cannot open " + tmp.string() + " for writing");
    write(out);
    out.flush();
    if (!out) throw IoError("write failed for " + tmp.string());
  }
  std::error_code ec;
  std::filesystem::rename(tmp, path, ec);
  if (ec) {
    std::filesystem::remove(tmp, ec);
    throw IoError("cannot move cache into place at " + path.string());
  }
}

PartitionTable PartitionTable::load(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw IoError("cannot open " + path.string());
  return read(in);
}

}  // namespace partclass
