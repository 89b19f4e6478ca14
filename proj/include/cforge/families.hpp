#ifndef CFORGE_FAMILIES_HPP
#define CFORGE_FAMILIES_HPP

#include <optional>

#include "cforge/conformal.hpp"
#include "cforge/table.hpp"

namespace cforge {

/// Group homomorphism Delta -> (Q(i), +), determined by generator images.
struct GroupHom {
  DeltaGroup delta;
  std::vector<Scalar> images;

  GroupHom(DeltaGroup d, std::vector<Scalar> imgs);
  static GroupHom zero(const DeltaGroup& d);
  bool is_zero() const;
  Scalar eval(const DeltaVector& v) const;
};

/// Skew-symmetric Z-bilinear form on Delta, given by its generator matrix.
struct SkewForm {
  DeltaGroup delta;
  std::vector<std::vector<Scalar>> matrix;

  /// Throws unless matrix is rank x rank and skew-symmetric.
  SkewForm(DeltaGroup d, std::vector<std::vector<Scalar>> m);
  static SkewForm zero(const DeltaGroup& d);
  Scalar eval(const DeltaVector& v, const DeltaVector& w) const;
};

enum class FamilyTag { Vir, Cur, A1, CL1, A2, CL2, A3, CL3, CL3_b0, OsbornA };
const char* to_string(FamilyTag tag);
std::optional<FamilyTag> parse_family_tag(const std::string& name);

/// Hypothesis violation; what() names the violated hypothesis, e.g.
/// "requires 2b not in Delta".
struct FamilyError : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

struct FamilyParams {
  FamilyTag tag = FamilyTag::A1;
  std::optional<DeltaGroup> delta;
  Scalar b = Scalar(0);
  Scalar c = Scalar(0);
  std::optional<Scalar> k;  // when set, the Lie rule is the k-commutator
  std::optional<GroupHom> phi;
  std::optional<SkewForm> form;
  std::optional<FiniteTable> table;
  /// Builds the non-simple 2b-in-Delta A2/CL2 variants on purpose.
  bool allow_2b_in_delta = false;
};

/// GD data plus the corresponding quadratic conformal algebra.
struct Family {
  GDStructure gd;
  ConformalAlgebra conformal;
  std::string name;
};

/// Validates the per-family hypotheses ("2b not in Delta", "b not in Delta
/// when phi is nonzero", "b nonzero", ...) and constructs the structure with
/// the rules of the source classification. Throws FamilyError naming the
/// violated hypothesis.
Family make_family(const FamilyParams& p);

// Individual constructors.
GDStructure make_a1(const Scalar& c);
GDStructure make_a2(const DeltaGroup& delta, const Scalar& b, const GroupHom& phi);
GDStructure make_a3(const DeltaGroup& delta, const Scalar& b, const GroupHom& phi,
                    const Scalar& c);
GDStructure make_a3_b0(const DeltaGroup& delta, const SkewForm& form, const GroupHom& phi);
GDStructure make_osborn(const DeltaGroup& delta, const Scalar& b);
GDStructure make_vir();
GDStructure make_cur(const FiniteTable& lie_table);

/// psi(L_{alpha,i}) = x_{alpha,i}/i! intertwines the binomial-coefficient
/// products with the A3(b) products; verified pairwise on the window.
Report osborn_iso_check(const Scalar& b, const DeltaGroup& delta, const Window& w);

}  // namespace cforge

#endif
