#pragma once

// Small fixed-capacity vectors and square matrices over Int and Rational.
// Ranks in this library never exceed 3; augmented systems use up to 8 columns.

#include <algorithm>
#include <array>
#include <cassert>
#include <compare>
#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <stdexcept>
#include <string>

#include "coxeter/arith.hpp"

namespace coxeter {

inline constexpr std::size_t kMaxRank = 3;
inline constexpr std::size_t kMaxWidth = 8;    // integer rows of augmented systems
inline constexpr std::size_t kMaxAmbient = 4;  // rational points, incl. ambient Euclidean coordinates

template <class T, std::size_t N>
class SmallVec {
 public:
  using value_type = T;

  SmallVec() = default;
  explicit SmallVec(std::size_t n, T fill = T{}) : size_(check_size(n)) {
    std::fill_n(data_.begin(), n, fill);
  }
  SmallVec(std::initializer_list<T> init) : size_(check_size(init.size())) {
    std::copy(init.begin(), init.end(), data_.begin());
  }

  std::size_t size() const { return size_; }
  bool empty() const { return size_ == 0; }

  T& operator[](std::size_t i) {
    assert(i < size_);
    return data_[i];
  }
  const T& operator[](std::size_t i) const {
    assert(i < size_);
    return data_[i];
  }

  T* begin() { return data_.data(); }
  T* end() { return data_.data() + size_; }
  const T* begin() const { return data_.data(); }
  const T* end() const { return data_.data() + size_; }

  void push_back(const T& v) {
    check_size(size_ + 1u);
    data_[size_++] = v;
  }

  friend bool operator==(const SmallVec& a, const SmallVec& b) {
    return a.size_ == b.size_ && std::equal(a.begin(), a.end(), b.begin());
  }
  friend auto operator<=>(const SmallVec& a, const SmallVec& b) {
    return std::lexicographical_compare_three_way(a.begin(), a.end(), b.begin(), b.end());
  }

 private:
  static std::uint8_t check_size(std::size_t n) {
    if (n > N) throw std::length_error("SmallVec capacity exceeded");
    return static_cast<std::uint8_t>(n);
  }

  std::array<T, N> data_{};
  std::uint8_t size_ = 0;
};

using IntVector = SmallVec<Int, kMaxWidth>;
using RatVector = SmallVec<Rational, kMaxAmbient>;

IntVector operator+(const IntVector& a, const IntVector& b);
IntVector operator-(const IntVector& a, const IntVector& b);
IntVector operator-(const IntVector& a);
IntVector operator*(Int c, const IntVector& a);
Int dot(const IntVector& a, const IntVector& b);
bool is_zero(const IntVector& v);
Int max_abs(const IntVector& v);

RatVector operator+(const RatVector& a, const RatVector& b);
RatVector operator-(const RatVector& a, const RatVector& b);
RatVector operator*(const Rational& c, const RatVector& a);
Rational dot(const IntVector& a, const RatVector& b);
Rational dot(const RatVector& a, const RatVector& b);
RatVector to_rational(const IntVector& v);

// "(a, b, c)"
std::string to_string(const IntVector& v);
std::string to_string(const RatVector& v);

// Square integer matrix of dimension <= kMaxRank, row-major.
class IntMatrix {
 public:
  IntMatrix() = default;
  explicit IntMatrix(std::size_t dim);
  IntMatrix(std::initializer_list<std::initializer_list<Int>> rows);

  static IntMatrix identity(std::size_t dim);

  std::size_t dim() const { return dim_; }
  Int& operator()(std::size_t r, std::size_t c) { return data_[r * kMaxRank + c]; }
  Int operator()(std::size_t r, std::size_t c) const { return data_[r * kMaxRank + c]; }

  IntVector row(std::size_t r) const;
  IntVector column(std::size_t c) const;

  bool is_identity() const;
  Int determinant() const;

  friend IntMatrix operator*(const IntMatrix& a, const IntMatrix& b);
  friend IntMatrix operator-(const IntMatrix& a, const IntMatrix& b);
  friend IntMatrix operator+(const IntMatrix& a, const IntMatrix& b);
  friend IntVector operator*(const IntMatrix& m, const IntVector& v);
  friend RatVector operator*(const IntMatrix& m, const RatVector& v);

  friend bool operator==(const IntMatrix& a, const IntMatrix& b) {
    return a.dim_ == b.dim_ && a.data_ == b.data_;
  }
  friend auto operator<=>(const IntMatrix& a, const IntMatrix& b) {
    if (auto c = a.dim_ <=> b.dim_; c != 0) return c;
    return a.data_ <=> b.data_;
  }

 private:
  std::array<Int, kMaxRank * kMaxRank> data_{};
  std::size_t dim_ = 0;
};

std::string to_string(const IntMatrix& m);

}  // namespace coxeter
