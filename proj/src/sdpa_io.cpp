#include "subspace_bounds/sdpa_io.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

namespace subspace_bounds {

std::string export_sdpa(const SdpData& data) {
  std::ostringstream out;
  out << data.num_variables() << "\n" << data.block_sizes.size() << "\n";
  for (std::size_t b = 0; b < data.block_sizes.size(); ++b) out << (b ? " " : "") << data.block_sizes[b];
  out << "\n";
  for (int i = 0; i < data.num_variables(); ++i) out << (i ? " " : "") << to_decimal17(data.c[i]);
  out << "\n";
  for (std::size_t mat = 0; mat < data.matrices.size(); ++mat) {
    auto entries = data.matrices[mat];
    std::sort(entries.begin(), entries.end(), [](const SdpEntry& a, const SdpEntry& b) {
      return std::tie(a.block, a.row, a.col) < std::tie(b.block, b.row, b.col);
    });
    for (const auto& e : entries) {
      if (sgn(e.value) == 0) continue;
      out << mat << " " << e.block + 1 << " " << e.row + 1 << " " << e.col + 1 << " " << to_decimal17(e.value)
          << "\n";
    }
  }
  return out.str();
}

SdpData parse_sdpa(std::string_view text) {
  std::string cleaned;
  cleaned.reserve(text.size());
  {
    // drop leading comment lines, then normalize separators
    std::istringstream in{std::string(text)};
    std::string line;
    bool header_started = false;
    while (std::getline(in, line)) {
      if (!header_started) {
        const auto first = line.find_first_not_of(" \t\r");
        if (first == std::string::npos) continue;
        if (line[first] == '"' || line[first] == '*') continue;
        header_started = true;
      }
      for (char ch : line) cleaned.push_back(std::string_view(",(){}").find(ch) != std::string_view::npos ? ' ' : ch);
      cleaned.push_back('\n');
    }
  }
  std::istringstream in(cleaned);
  auto need = [&](auto& value, const char* what) {
    if (!(in >> value)) throw std::runtime_error(std::string("SDPA input: expected ") + what);
  };

  long m = 0;
  long nblocks = 0;
  need(m, "number of variables");
  need(nblocks, "number of blocks");
  if (m < 0 || nblocks < 0) throw std::runtime_error("SDPA input: negative counts");
  SdpData data;
  data.block_sizes.resize(nblocks);
  for (auto& s : data.block_sizes) {
    need(s, "block size");
    if (s == 0) throw std::runtime_error("SDPA input: zero block size");
  }
  data.c.resize(m);
  for (auto& v : data.c) {
    std::string tok;
    need(tok, "objective coefficient");
    v = parse_rational(tok);
  }
  data.matrices.assign(m + 1, {});
  long mat = 0;
  while (in >> mat) {
    long block = 0;
    long row = 0;
    long col = 0;
    std::string tok;
    need(block, "block number");
    need(row, "row index");
    need(col, "column index");
    need(tok, "entry value");
    if (mat < 0 || mat > m) throw std::runtime_error("SDPA input: matrix number out of range");
    if (block < 1 || block > nblocks) throw std::runtime_error("SDPA input: block number out of range");
    const long size = std::abs(data.block_sizes[block - 1]);
    if (row < 1 || col < 1 || row > size || col > size)
      throw std::runtime_error("SDPA input: entry index out of range");
    if (row > col) std::swap(row, col);
    if (data.block_sizes[block - 1] < 0 && row != col)
      throw std::runtime_error("SDPA input: off-diagonal entry in a diagonal block");
    const Rational value = parse_rational(tok);
    if (sgn(value) == 0) continue;
    data.matrices[mat].push_back(
        {static_cast<int>(block - 1), static_cast<int>(row - 1), static_cast<int>(col - 1), value});
  }
  if (!in.eof()) throw std::runtime_error("SDPA input: trailing garbage");
  return data;
}

}  // namespace subspace_bounds
