#pragma once

// Brute-force reference implementations. They work from the raw root data
// (Cartan matrix, wall pairings, coroots) and from explicit affine maps, and
// share no algorithms with the closed-form engine.

#include <array>
#include <compare>
#include <map>
#include <set>
#include <vector>

#include "coxeter/word_algebra.hpp"

namespace coxeter::oracle {

// p -> m p + b on coroot coordinates.
struct Map {
  std::size_t n = 0;
  std::array<Int, 9> m{};
  std::array<Int, 3> b{};

  Int at(std::size_t r, std::size_t c) const { return m[r * 3 + c]; }
  Int& at(std::size_t r, std::size_t c) { return m[r * 3 + c]; }

  friend bool operator==(const Map&, const Map&) = default;
  friend auto operator<=>(const Map&, const Map&) = default;
};

Map identity_map(std::size_t n);
Map compose(const Map& f, const Map& g);  // f after g
Map inverse(const Map& f);
RatVector apply(const Map& f, const RatVector& p);

Map generator_map(const RootDatum& datum, std::size_t label);
Map word_map(const RootDatum& datum, const std::vector<std::size_t>& letters);

Map from_element(const AffineElement& x);
AffineElement to_element(const AffineWeylGroup& group, const Map& f);

// W0 as the closure of the simple reflections.
std::vector<Map> finite_group_closure(const RootDatum& datum);

// Order of the product of two generators, found by repeated composition.
int generator_product_order(const RootDatum& datum, std::size_t a, std::size_t b, int limit = 12);

// Conjugates z x z^-1 with translation in the box, over conjugators
// t^mu u with growing |mu| until three successive radii add nothing.
std::set<AffineElement> conjugacy_class(const AffineWeylGroup& group, const AffineElement& x, Int bound);

// Every z in the box with z x z^-1 = y.
std::set<AffineElement> coconjugators(const AffineWeylGroup& group, const AffineElement& x, const AffineElement& y,
                                      Int bound);

// Lexicographically least among the shortest words, for every element
// reachable by a word of length <= max_length.
std::map<AffineElement, Word> shortest_words(const AffineWeylGroup& group, std::size_t max_length);

// [Mov(w) n L : (w - I)L] as the gcd of the maximal nonzero minors of w - I.
Int mod_in_move_index(const AffineWeylGroup& group, const FiniteWeylElement& w);

// v is an integer combination of rows with coefficients in [-coeff_bound, coeff_bound].
bool in_integer_span(const std::vector<IntVector>& rows, const IntVector& v, Int coeff_bound);

// Rank over Q of a list of integer vectors.
std::size_t rational_rank(const std::vector<IntVector>& rows, std::size_t n);

}  // namespace coxeter::oracle
