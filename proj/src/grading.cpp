#include "zgrass/grading.hpp"

#include <algorithm>
#include <bit>
#include <sstream>

#include "zgrass/errors.hpp"

namespace zgr {

namespace {

void check_same_length(const Degree& a, const Degree& b) {
  if (a.length() != b.length()) {
    throw ConfigurationError("degree length mismatch: " + std::to_string(a.length()) + " vs " +
                             std::to_string(b.length()));
  }
}

}  // namespace

Degree::Degree(unsigned length, std::uint32_t bits) : length_(static_cast<std::uint8_t>(length)), bits_(bits) {
  if (length == 0 || length > max_length) {
    throw ConfigurationError("degree length must be in 1.." + std::to_string(max_length));
  }
  if (bits >> length) throw ConfigurationError("degree bits exceed length");
}

Degree::Degree(std::initializer_list<int> components)
    : Degree(std::span<const int>(components.begin(), components.size())) {}

Degree::Degree(std::span<const int> components) {
  if (components.empty() || components.size() > max_length) {
    throw ConfigurationError("degree length must be in 1.." + std::to_string(max_length));
  }
  length_ = static_cast<std::uint8_t>(components.size());
  for (int c : components) {
    if (c != 0 && c != 1) throw ConfigurationError("degree components must be 0 or 1");
    bits_ = (bits_ << 1) | static_cast<std::uint32_t>(c);
  }
}

int Degree::component(unsigned i) const {
  if (i >= length_) throw ConfigurationError("degree component out of range");
  return static_cast<int>((bits_ >> (length_ - 1 - i)) & 1u);
}

std::vector<int> Degree::components() const {
  std::vector<int> out(length_);
  for (unsigned i = 0; i < length_; ++i) out[i] = component(i);
  return out;
}

Degree Degree::operator+(const Degree& other) const {
  check_same_length(*this, other);
  return Degree(length_, bits_ ^ other.bits_);
}

Degree& Degree::operator+=(const Degree& other) { return *this = *this + other; }

std::string Degree::to_string() const {
  std::ostringstream os;
  os << '(';
  for (unsigned i = 0; i < length_; ++i) os << (i ? "," : "") << component(i);
  os << ')';
  return os.str();
}

int pairing(const Degree& a, const Degree& b) {
  check_same_length(a, b);
  return std::popcount(a.bits() & b.bits()) & 1;
}

Parity parity(const Degree& a) { return pairing(a, a) == 0 ? Parity::even : Parity::odd; }

int sign(const Degree& a, const Degree& b) { return pairing(a, b) ? -1 : 1; }

std::vector<Degree> enumerate_degrees(unsigned n) {
  if (n == 0 || n > Degree::max_length) {
    throw ConfigurationError("n must be in 1.." + std::to_string(Degree::max_length));
  }
  std::vector<Degree> out;
  out.reserve(std::size_t{1} << n);
  for (Parity wanted : {Parity::even, Parity::odd}) {
    for (std::uint32_t b = 0; b < (1u << n); ++b) {
      Degree d(n, b);
      if (parity(d) == wanted) out.push_back(d);
    }
  }
  return out;
}

DegreeSystem::DegreeSystem(unsigned n) : n_(n), chain_(enumerate_degrees(n)), position_(chain_.size()) {
  for (std::size_t i = 0; i < chain_.size(); ++i) position_[chain_[i].bits()] = i;
}

void DegreeSystem::check(const Degree& d) const {
  if (d.length() != n_) {
    throw ConfigurationError("degree " + d.to_string() + " does not have length n = " + std::to_string(n_));
  }
}

std::size_t DegreeSystem::index_of(const Degree& d) const {
  check(d);
  return position_[d.bits()];
}

std::size_t DegreeSystem::sum_index(std::size_t i, std::size_t j) const {
  return position_[chain_.at(i).bits() ^ chain_.at(j).bits()];
}

}  // namespace zgr
