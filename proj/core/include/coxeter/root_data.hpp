#pragma once

// Exact root data for the eight affine Coxeter types of rank 2 and 3.
//
// All points and vectors are in coroot coordinates: the i-th entry is the
// coefficient of the i-th simple coroot. The Euclidean realization
// (Bourbaki ambient coordinates) is only used for drawing and for the
// coroot header of text reports.

#include <array>
#include <cstddef>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "coxeter/linalg.hpp"

namespace coxeter {

enum class CoxeterType { A1xA1, A2, B2, C2, G2, A3, B3, C3 };

inline constexpr std::array<CoxeterType, 8> kAllTypes = {
    CoxeterType::A1xA1, CoxeterType::A2, CoxeterType::B2, CoxeterType::C2,
    CoxeterType::G2,    CoxeterType::A3, CoxeterType::B3, CoxeterType::C3};

std::string_view to_string(CoxeterType type);
std::optional<CoxeterType> parse_coxeter_type(std::string_view tag);
std::size_t rank_of(CoxeterType type);

// A reflecting wall of the fundamental alcove, i.e. one Coxeter generator.
// The reflection is p -> p - (<root_pairing, p> - level) * coroot.
struct Generator {
  enum class Kind { simple, affine };

  Kind kind = Kind::simple;
  std::size_t simple_index = 0;  // 0-based; meaningful for simple generators
  IntVector root_pairing;        // <beta, .> on coroot coordinates
  IntVector coroot;              // beta^vee in coroot coordinates
  Int level = 0;                 // 0 for simple walls, 1 for affine walls

  IntMatrix linear_part() const;
  IntVector translation_part() const;
};

using Color = std::string;  // "#rrggbb"

using Partition = std::vector<int>;  // nonincreasing

struct RootDatum {
  CoxeterType type = CoxeterType::A2;
  int version = 0;
  std::size_t rank = 0;

  // (generators x generators); 0 encodes an infinite entry (A1xA1 only).
  std::vector<std::vector<int>> coxeter_matrix;
  IntMatrix cartan;                     // cartan(i, j) = <alpha_i, alpha_j^vee>
  std::vector<RatVector> coroot_euclid;  // ambient Euclidean coordinates
  IntVector highest_root_pairing;       // <theta, .> for generator 0
  IntVector s0_translation;             // theta^vee for generator 0
  std::vector<Generator> generators;    // indexed by generator label
  std::vector<std::size_t> spherical_generators;  // labels of simple generators, ascending
  std::vector<IntMatrix> simple_reflection_matrices;  // by simple index
  std::vector<RatVector> fundamental_alcove;  // vertices, coroot coordinates
  RatVector alcove_barycenter;

  // Presentation tables.
  std::vector<Color> palette;  // rank 2: one color per finite Weyl element id
  int symmetric_degree = 0;    // rank 3: degree of the symmetric group W0 embeds into
  // rank 3: image of each simple reflection as a product of transpositions (1-based points)
  std::vector<std::vector<std::pair<int, int>>> embedding;
  std::map<Partition, Color> cycle_colors;

  std::size_t generator_count() const { return generators.size(); }
  std::size_t ambient_dimension() const { return coroot_euclid.empty() ? 0 : coroot_euclid[0].size(); }
  bool is_spherical_generator(std::size_t label) const;
};

// Parses one embedded data table. Throws std::runtime_error on malformed input.
RootDatum parse_root_datum(std::string_view text);

// Immutable, cached per type.
const RootDatum& root_datum(CoxeterType type);

// The raw embedded table text for a type.
std::string_view root_datum_table(CoxeterType type);

// Signed distance-like functional of wall `gen`: positive on the side of the
// fundamental alcove. Throws std::out_of_range for a bad generator label.
Rational wall_pairing(const RootDatum& datum, std::size_t gen, const RatVector& point);

// Coroot coordinates -> ambient Euclidean coordinates (exact).
RatVector to_euclid(const RootDatum& datum, const RatVector& point);

// Gram matrix (alpha_i^vee, alpha_j^vee) of the coroot basis.
std::vector<std::vector<Rational>> coroot_gram(const RootDatum& datum);

}  // namespace coxeter
