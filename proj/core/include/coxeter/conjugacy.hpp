#pragma once

// Conjugacy classes, coconjugation sets and centralizers in affine Weyl
// groups, computed in closed form from mod-sets and fix-lattices.
//
//   [t^l w]          = U_{u in W0} t^{u(l + Mod(w))} u w u^-1
//   Coconj(x -> x')  = U_{u in tc} t^{eta_u + (Fix(w') n L)} u,
//                      (I - w') eta_u = l' - u l
//
// where Mod(w) = (w - I)L and tc is the set of u in W0 with u w u^-1 = w'
// and l' - u l in Mod(w').

#include <cstddef>
#include <string_view>
#include <vector>

#include "coxeter/int_lattice.hpp"
#include "coxeter/word_algebra.hpp"

namespace coxeter {

inline constexpr Int kMinBound = 1;
inline constexpr Int kMaxBound = 15;

enum class FamilyKind { conjugacy_class, coconjugation, centralizer };

std::string_view to_string(FamilyKind kind);

// {t^(base + mu) direction : mu in lattice}
struct CosetPart {
  IntVector base;
  Sublattice lattice;
  FiniteWeylElement direction;
};

struct CosetFamily {
  FamilyKind kind = FamilyKind::conjugacy_class;
  std::vector<CosetPart> parts;

  bool empty() const { return parts.empty(); }
  bool contains(const AffineElement& x) const;
};

struct MoveSet {
  IntVector base;
  Sublattice lattice_points;  // Mov(w) n L
  std::size_t dimension = 0;
};

// A closed-form family together with its members inside the box
// max_i |lambda_i| <= bound, sorted by (direction id, translation).
struct ComputationResult {
  CoxeterType type = CoxeterType::A2;
  Int bound = 0;
  CosetFamily family;
  std::vector<AffineElement> elements;

  bool contains(const AffineElement& x) const;
};

Sublattice mod_set(const AffineWeylGroup& group, const FiniteWeylElement& w);
MoveSet move_set(const AffineWeylGroup& group, const AffineElement& x);
Sublattice fix_lattice(const AffineWeylGroup& group, const FiniteWeylElement& w);

ComputationResult conjugacy_class(const AffineWeylGroup& group, const AffineElement& x, Int bound);

std::vector<FiniteWeylElement> spherical_coconjugation(const AffineWeylGroup& group, const FiniteWeylElement& w,
                                                       const FiniteWeylElement& w2);

std::vector<FiniteWeylElement> translation_compatible(const AffineWeylGroup& group, const IntVector& lambda,
                                                      const IntVector& lambda2, const FiniteWeylElement& w,
                                                      const FiniteWeylElement& w2);

ComputationResult coconjugation_set(const AffineWeylGroup& group, const AffineElement& x, const AffineElement& x2,
                                    Int bound);

ComputationResult centralizer(const AffineWeylGroup& group, const AffineElement& x, Int bound);

// Throws std::out_of_range unless kMinBound <= bound <= kMaxBound.
void check_bound(Int bound);

}  // namespace coxeter
