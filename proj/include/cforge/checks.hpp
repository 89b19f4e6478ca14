#ifndef CFORGE_CHECKS_HPP
#define CFORGE_CHECKS_HPP

#include "cforge/gd.hpp"
#include "cforge/report.hpp"

namespace cforge {

/// Left-symmetry (a∘b)∘c - a∘(b∘c) = (b∘a)∘c - b∘(a∘c) and right
/// commutativity (a∘b)∘c = (a∘c)∘b, exactly, over all ordered window
/// triples. Every failing triple is listed with its residual.
Report check_novikov_axioms(const GDStructure& a, const Window& w);

/// Skew-symmetry on ordered pairs and the Jacobi identity on ordered
/// triples of the window.
Report check_lie_axioms(const GDStructure& a, const Window& w);

/// [a∘b,c] - [a∘c,b] + [a,b]∘c - [a,c]∘b - a∘[b,c] = 0 on ordered triples.
Report check_gd_compatibility(const GDStructure& a, const Window& w);

enum class TortkenVariant { printed, corrected };
const char* to_string(TortkenVariant v);

/// Both sides expanded per 4-tuple; `printed` uses (a*b)*(c*d)-(a*d)*(c*d)
/// on the left, `corrected` uses (a*b)*(c*d)-(a*d)*(c*b). The right side is
/// (a,b,c)*d-(a,d,c)*b with star associators either way. The exhaustive
/// run is the oracle deciding which variant holds.
Report check_tortken(const GDStructure& a, const Window& w, TortkenVariant variant);

}  // namespace cforge

#endif
