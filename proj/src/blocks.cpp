#include "zgrass/blocks.hpp"

#include <algorithm>
#include <sstream>

#include "zgrass/errors.hpp"
#include "zgrass/polynomial.hpp"

namespace zgr {

BlockDims::BlockDims(std::vector<int> sizes) : sizes_(std::move(sizes)) {
  offsets_.reserve(sizes_.size());
  for (int s : sizes_) {
    if (s < 0) throw InvalidShape("block sizes must be nonnegative");
    offsets_.push_back(total_);
    total_ += s;
  }
}

std::size_t BlockDims::block_of(int g) const {
  if (g < 0 || g >= total_) throw IndexOutOfRange("global index outside block dims");
  auto it = std::upper_bound(offsets_.begin(), offsets_.end(), g);
  // Last block starting at or before g; empty blocks share offsets with their successor.
  return static_cast<std::size_t>(it - offsets_.begin()) - 1;
}

std::string BlockDims::to_string() const {
  std::ostringstream os;
  for (std::size_t i = 0; i < sizes_.size(); ++i) os << (i ? "|" : "") << sizes_[i];
  return os.str();
}

void check_dims(const DegreeSystem& degrees, const BlockDims& dims) {
  if (dims.blocks() != degrees.size()) {
    throw InvalidShape("expected " + std::to_string(degrees.size()) + " block sizes, got " +
                       std::to_string(dims.blocks()));
  }
  if (dims.total() == 0) throw InvalidShape("at least one block size must be positive");
}

BlockDims KIndex::sizes() const {
  std::vector<int> s;
  for (const auto& b : blocks_) s.push_back(static_cast<int>(b.size()));
  return BlockDims(std::move(s));
}

void KIndex::validate(const BlockDims& m) const {
  if (blocks_.size() != m.blocks()) {
    throw InvalidShape("k-index has " + std::to_string(blocks_.size()) + " blocks, expected " +
                       std::to_string(m.blocks()));
  }
  for (std::size_t u = 0; u < blocks_.size(); ++u) {
    const auto& b = blocks_[u];
    for (std::size_t i = 0; i < b.size(); ++i) {
      if (b[i] < 1 || b[i] > m[u]) {
        throw IndexOutOfRange("index " + std::to_string(b[i]) + " outside 1.." + std::to_string(m[u]) +
                              " in block " + std::to_string(u));
      }
      if (i > 0 && b[i] <= b[i - 1]) throw InvalidShape("k-index blocks must be strictly ascending");
    }
  }
}

void KIndex::validate(const BlockDims& k, const BlockDims& m) const {
  validate(m);
  if (!(sizes() == k)) throw InvalidShape("k-index sizes " + sizes().to_string() + " do not match k = " + k.to_string());
}

std::vector<int> KIndex::columns(const BlockDims& m) const {
  validate(m);
  std::vector<int> out;
  for (std::size_t u = 0; u < blocks_.size(); ++u) {
    for (int i : blocks_[u]) out.push_back(m.offset(u) + i - 1);
  }
  return out;
}

std::vector<int> KIndex::complement(const BlockDims& m) const {
  validate(m);
  std::vector<int> out;
  for (std::size_t u = 0; u < blocks_.size(); ++u) {
    for (int i = 1; i <= m[u]; ++i) {
      if (!std::binary_search(blocks_[u].begin(), blocks_[u].end(), i)) out.push_back(m.offset(u) + i - 1);
    }
  }
  return out;
}

std::string KIndex::to_string() const {
  std::ostringstream os;
  for (std::size_t u = 0; u < blocks_.size(); ++u) {
    if (u) os << '/';
    for (std::size_t i = 0; i < blocks_[u].size(); ++i) os << (i ? "," : "") << blocks_[u][i];
  }
  return os.str();
}

KIndex parse_kindex(const std::string& text) {
  std::vector<std::vector<int>> blocks(1);
  std::string number;
  auto flush = [&] {
    if (number.empty()) return;
    try {
      blocks.back().push_back(std::stoi(number));
    } catch (const std::exception&) {
      throw ParseError("bad k-index entry '" + number + "'");
    }
    number.clear();
  };
  for (char c : text) {
    if (c == '/') {
      flush();
      blocks.emplace_back();
    } else if (c == ',') {
      if (number.empty()) throw ParseError("empty entry in k-index '" + text + "'");
      flush();
    } else if (c >= '0' && c <= '9') {
      number += c;
    } else if (c != ' ') {
      throw ParseError("unexpected character in k-index '" + text + "'");
    }
  }
  flush();
  return KIndex(std::move(blocks));
}

}  // namespace zgr
