#include "coxeter/conjugacy.hpp"

#include <algorithm>
#include <stdexcept>

namespace coxeter {

namespace {

std::vector<AffineElement> members_in_box(const AffineWeylGroup& group, const CosetFamily& family, Int bound) {
  std::vector<AffineElement> out;
  for (const auto& part : family.parts)
    for (const auto& v : enumerate_coset_in_box(part.base, part.lattice, bound))
      out.push_back(group.make(v, part.direction));
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

void require_same_type(const AffineWeylGroup& group, CoxeterType t) {
  if (t != group.type()) throw std::invalid_argument("element type does not match group type");
}

}  // namespace

std::string_view to_string(FamilyKind kind) {
  switch (kind) {
    case FamilyKind::conjugacy_class:
      return "conjugacy_class";
    case FamilyKind::coconjugation:
      return "coconjugation";
    case FamilyKind::centralizer:
      return "centralizer";
  }
  return "unknown";
}

void check_bound(Int bound) {
  if (bound < kMinBound || bound > kMaxBound)
    throw std::out_of_range("bound must be in " + std::to_string(kMinBound) + ".." + std::to_string(kMaxBound));
}

bool CosetFamily::contains(const AffineElement& x) const {
  return std::any_of(parts.begin(), parts.end(), [&](const CosetPart& p) {
    return p.direction == x.w && same_coset(x.lambda, p.base, p.lattice);
  });
}

bool ComputationResult::contains(const AffineElement& x) const {
  return std::binary_search(elements.begin(), elements.end(), x);
}

Sublattice mod_set(const AffineWeylGroup& group, const FiniteWeylElement& w) {
  require_same_type(group, w.type);
  const std::size_t n = group.rank();
  IntMatrix shifted = w.matrix - IntMatrix::identity(n);
  std::vector<IntVector> images;
  for (std::size_t i = 0; i < n; ++i) images.push_back(shifted.column(i));  // (w - I) alpha_i^vee
  return hnf(images, n);
}

MoveSet move_set(const AffineWeylGroup& group, const AffineElement& x) {
  require_same_type(group, x.type);
  MoveSet m;
  m.base = x.lambda;
  m.lattice_points = saturation(mod_set(group, x.w));
  m.dimension = m.lattice_points.rank();
  return m;
}

Sublattice fix_lattice(const AffineWeylGroup& group, const FiniteWeylElement& w) {
  require_same_type(group, w.type);
  return kernel_lattice(w.matrix - IntMatrix::identity(group.rank()));
}

ComputationResult conjugacy_class(const AffineWeylGroup& group, const AffineElement& x, Int bound) {
  check_bound(bound);
  require_same_type(group, x.type);
  const Sublattice mod = mod_set(group, x.w);

  CosetFamily family{FamilyKind::conjugacy_class, {}};
  for (const auto& u : group.finite_weyl_elements()) {
    CosetPart part{u.matrix * x.lambda, image(u.matrix, mod), group.conjugate(u, x.w)};
    bool duplicate = std::any_of(family.parts.begin(), family.parts.end(), [&](const CosetPart& q) {
      return q.direction == part.direction && q.lattice == part.lattice && same_coset(q.base, part.base, q.lattice);
    });
    if (!duplicate) family.parts.push_back(std::move(part));
  }

  ComputationResult r{group.type(), bound, std::move(family), {}};
  r.elements = members_in_box(group, r.family, bound);
  return r;
}

std::vector<FiniteWeylElement> spherical_coconjugation(const AffineWeylGroup& group, const FiniteWeylElement& w,
                                                       const FiniteWeylElement& w2) {
  require_same_type(group, w.type);
  require_same_type(group, w2.type);
  std::vector<FiniteWeylElement> out;
  for (const auto& u : group.finite_weyl_elements())
    if (group.conjugate(u, w) == w2) out.push_back(u);
  return out;
}

std::vector<FiniteWeylElement> translation_compatible(const AffineWeylGroup& group, const IntVector& lambda,
                                                      const IntVector& lambda2, const FiniteWeylElement& w,
                                                      const FiniteWeylElement& w2) {
  const Sublattice mod2 = mod_set(group, w2);
  std::vector<FiniteWeylElement> out;
  for (const auto& u : spherical_coconjugation(group, w, w2))
    if (contains(mod2, lambda2 - u.matrix * lambda)) out.push_back(u);
  return out;
}

ComputationResult coconjugation_set(const AffineWeylGroup& group, const AffineElement& x, const AffineElement& x2,
                                    Int bound) {
  check_bound(bound);
  require_same_type(group, x.type);
  require_same_type(group, x2.type);
  const std::size_t n = group.rank();
  const IntMatrix lhs = IntMatrix::identity(n) - x2.w.matrix;
  const Sublattice fix = fix_lattice(group, x2.w);

  CosetFamily family{FamilyKind::coconjugation, {}};
  for (const auto& u : translation_compatible(group, x.lambda, x2.lambda, x.w, x2.w)) {
    auto eta = solve_integer(lhs, x2.lambda - u.matrix * x.lambda);
    // l' - u l lies in Mod(w') = (I - w')L, so a solution always exists
    if (!eta) throw std::logic_error("translation-compatible direction without integer solution");
    family.parts.push_back(CosetPart{*eta, fix, u});
  }

  ComputationResult r{group.type(), bound, std::move(family), {}};
  r.elements = members_in_box(group, r.family, bound);
  for (const auto& z : r.elements)
    if (group.conjugate(z, x) != x2) throw std::logic_error("coconjugation member does not conjugate x to x'");
  return r;
}

ComputationResult centralizer(const AffineWeylGroup& group, const AffineElement& x, Int bound) {
  ComputationResult r = coconjugation_set(group, x, x, bound);
  r.family.kind = FamilyKind::centralizer;
  return r;
}

}  // namespace coxeter
