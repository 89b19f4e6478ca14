#ifndef CFORGE_ANALYSIS_HPP
#define CFORGE_ANALYSIS_HPP

#include "cforge/conformal.hpp"
#include "cforge/linalg.hpp"

namespace cforge {

enum class IdealKind { novikov, lie, nj, gd, conformal };
const char* to_string(IdealKind k);
std::optional<IdealKind> parse_ideal_kind(const std::string& name);

/// Flattened coordinate space (basis index, d-power) over a finite support
/// window; the arena every closure and membership computation lives in.
/// Terms outside it are dropped and flagged lossy, never silently kept.
struct Truncation {
  std::vector<std::pair<BasisIndex, unsigned>> keys;
  std::map<std::pair<BasisIndex, unsigned>, size_t> col;
  Window support;
  unsigned dpow_bound = 0;

  Truncation(Window support_window, unsigned dpow);
  size_t dim() const { return keys.size(); }
  /// Drops escaping terms, setting *lossy when it does.
  ScalarVec to_vec(const PolyElement& p, bool* lossy) const;
  PolyElement truncate(const PolyElement& p, bool* lossy) const;
  PolyElement from_vec(const ScalarVec& v) const;
  bool inside(const PolyElement& p) const;
};

/// Truncated closure result; evidence-only whenever lossy is set.
struct IdealWitness {
  IdealKind kind = IdealKind::novikov;
  std::vector<PolyElement> generators;
  Window window;  // the probe window W whose elements drive the moves
  unsigned dpow_bound = 0;
  std::vector<PolyElement> basis_of_closure;  // reduced echelon order
  bool lossy = false;
};

/// Smallest truncation-bounded span containing the generators and stable
/// under the kind's one-step moves with window basis elements:
/// novikov w∘v and v∘w, lie [w,v], nj w*v, gd both novikov and lie;
/// conformal all lambda coefficients of [w λ v] and [v λ w] plus d·v.
IdealWitness ideal_closure(const GDStructure& a, IdealKind kind,
                           const std::vector<Element>& generators, const Window& w,
                           const Window& w_ext);
IdealWitness ideal_closure(const ConformalAlgebra& ca,
                           const std::vector<PolyElement>& generators, const Window& w,
                           const Window& w_ext, unsigned dpow_bound);
Report closure_report(const IdealWitness& witness, const std::string& structure);

/// Verifies every required product of a candidate basis element with a W
/// basis element lies back in the candidate span (exact membership).
/// Products escaping the truncation are dropped and flagged lossy.
Report is_ideal(const GDStructure& a, IdealKind kind, const std::vector<Element>& candidate,
                const Window& w, const Window& w_trunc);
Report is_ideal(const ConformalAlgebra& ca, const std::vector<PolyElement>& candidate,
                const Window& w, const Window& w_trunc, unsigned dpow_bound);

/// Checks the GD-ideal preconditions (novikov + lie) and then confirms that
/// C[d]I, truncated at dpow_bound, is an ideal of the corresponding
/// quadratic conformal algebra.
Report gd_ideal_lift(const GDStructure& a, const std::vector<Element>& ideal_basis,
                     const Window& w, const Window& w_trunc, unsigned dpow_bound);

/// Membership of each target in span{ x*y : x,y in W }, with explicit
/// combination coefficients for the reachable ones.
Report star_span_check(const GDStructure& a, const Window& w, const Window& targets);

/// Joint kernel of v -> v*e over e in W, v restricted to span(W).
Report star_annihilator_check(const GDStructure& a, const Window& w);

struct EvidenceOptions {
  unsigned dpow_bound = 2;
  unsigned trials = 20;
  unsigned long long seed = 20240801;
};

/// Star-span surjectivity, annihilator freeness, and seeded random-generator
/// conformal closures with the C[d]dV and full-containment verdicts.
/// Desk-scale evidence, never a proof; the report says so.
Report simplicity_evidence_report(const ConformalAlgebra& ca, const Window& w,
                                  const Window& w_ext, const EvidenceOptions& opt);

/// The span{x_alpha : alpha != -2b} counterexample line and its C[d]-closure
/// companion B = J ⊕ C[d] d A2. drop_at overrides which line is removed
/// (the mutant candidates used to exercise rejection).
std::vector<Element> make_ideal_J(const DeltaGroup& delta, const Scalar& b, const Window& support);
std::vector<Element> make_ideal_J_drop(const DeltaGroup& delta, const Scalar& drop_at,
                                       const Window& support);
std::vector<PolyElement> make_ideal_B(const DeltaGroup& delta, const Scalar& b,
                                      const Window& support, unsigned dpow_bound);

}  // namespace cforge

#endif
