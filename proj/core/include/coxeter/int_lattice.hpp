#pragma once

// Exact integer lattice algebra over Z^n (n <= 3): Hermite normal form,
// membership, integer kernels and solutions, indices, and box enumeration.

#include <cstddef>
#include <optional>
#include <span>
#include <vector>

#include "coxeter/linalg.hpp"

namespace coxeter {

// A sublattice of Z^n stored by its row Hermite normal form: rows are in
// echelon form with strictly increasing pivot columns, positive pivots, and
// entries above each pivot reduced into [0, pivot). Equal lattices have
// identical bases.
class Sublattice {
 public:
  Sublattice() = default;

  static Sublattice zero(std::size_t ambient_rank);
  static Sublattice full(std::size_t ambient_rank);

  std::size_t ambient_rank() const { return ambient_rank_; }
  std::size_t rank() const { return basis_.size(); }
  const std::vector<IntVector>& basis() const { return basis_; }
  std::vector<std::size_t> pivots() const;

  friend bool operator==(const Sublattice&, const Sublattice&) = default;

 private:
  friend Sublattice hnf(std::span<const IntVector> rows, std::size_t ambient_rank);

  std::size_t ambient_rank_ = 0;
  std::vector<IntVector> basis_;
};

// Index of one lattice in another: a positive integer, or infinite when the
// sublattice has smaller rank.
class LatticeIndex {
 public:
  static LatticeIndex finite(Int value) { return LatticeIndex(value); }
  static LatticeIndex infinite() { return LatticeIndex(0); }

  bool is_finite() const { return value_ != 0; }
  Int value() const;

  friend bool operator==(const LatticeIndex&, const LatticeIndex&) = default;

 private:
  explicit LatticeIndex(Int v) : value_(v) {}
  Int value_;  // 0 encodes infinity
};

// Canonical HNF basis of the integer row span. All rows must have length ambient_rank.
Sublattice hnf(std::span<const IntVector> rows, std::size_t ambient_rank);
Sublattice hnf(std::initializer_list<IntVector> rows, std::size_t ambient_rank);

bool contains(const Sublattice& s, const IntVector& v);

// Coefficients of v in the HNF basis of s, when v is in s.
std::optional<IntVector> coordinates(const Sublattice& s, const IntVector& v);

// {v in Z^n : M v = 0}
Sublattice kernel_lattice(const IntMatrix& m);
// {v in Z^n : <r, v> = 0 for every row r}
Sublattice kernel_lattice(std::span<const IntVector> rows, std::size_t ambient_rank);

// Some integer solution of M eta = rhs, or nullopt when none exists.
std::optional<IntVector> solve_integer(const IntMatrix& m, const IntVector& rhs);

// Throws std::invalid_argument when sub is not contained in super.
LatticeIndex index(const Sublattice& sub, const Sublattice& super);

// Z^n intersected with the rational span of s.
Sublattice saturation(const Sublattice& s);

// HNF of { M b : b in basis(s) }.
Sublattice image(const IntMatrix& m, const Sublattice& s);

// All v in offset + s with max |v_i| <= bound, each once, sorted ascending.
std::vector<IntVector> enumerate_coset_in_box(const IntVector& offset, const Sublattice& s, Int bound);

// True when a - b lies in s.
bool same_coset(const IntVector& a, const IntVector& b, const Sublattice& s);

}  // namespace coxeter
