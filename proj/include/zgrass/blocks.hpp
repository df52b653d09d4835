#pragma once

#include <compare>
#include <string>
#include <vector>

#include "zgrass/grading.hpp"

namespace zgr {

/// Per-degree block sizes (d_0, ..., d_q), indexed by the degree chain.
class BlockDims {
 public:
  BlockDims() = default;
  explicit BlockDims(std::vector<int> sizes);

  std::size_t blocks() const { return sizes_.size(); }
  int operator[](std::size_t i) const { return sizes_[i]; }
  const std::vector<int>& sizes() const { return sizes_; }
  int total() const { return total_; }
  /// First global index of block i.
  int offset(std::size_t i) const { return offsets_[i]; }
  /// Block containing global index g.
  std::size_t block_of(int g) const;

  friend bool operator==(const BlockDims& a, const BlockDims& b) { return a.sizes_ == b.sizes_; }

  /// "1|2|1|1"
  std::string to_string() const;

 private:
  std::vector<int> sizes_;
  std::vector<int> offsets_;
  int total_ = 0;
};

/// Throws InvalidShape unless dims has 2^n blocks and is not all zero.
void check_dims(const DegreeSystem& degrees, const BlockDims& dims);

/// A k-index: for each degree block u an ascending subset of {1..m_u}.
class KIndex {
 public:
  KIndex() = default;
  explicit KIndex(std::vector<std::vector<int>> blocks) : blocks_(std::move(blocks)) {}

  std::size_t blocks() const { return blocks_.size(); }
  const std::vector<int>& operator[](std::size_t u) const { return blocks_[u]; }
  const std::vector<std::vector<int>>& data() const { return blocks_; }
  BlockDims sizes() const;

  /// Throws IndexOutOfRange / InvalidShape unless this selects |I_u| = k_u
  /// ascending indices inside each block of m.
  void validate(const BlockDims& m) const;
  void validate(const BlockDims& k, const BlockDims& m) const;

  /// Zero-based global columns of the minor, blocks in degree order.
  std::vector<int> columns(const BlockDims& m) const;
  /// Zero-based global columns outside the minor, ascending per block.
  std::vector<int> complement(const BlockDims& m) const;

  friend bool operator==(const KIndex&, const KIndex&) = default;
  friend auto operator<=>(const KIndex&, const KIndex&) = default;

  /// "1/1,2/1/2"
  std::string to_string() const;

 private:
  std::vector<std::vector<int>> blocks_;
};

/// Parses "1/1,2/1/2" (blocks separated by '/', entries by ',').
KIndex parse_kindex(const std::string& text);

}  // namespace zgr
