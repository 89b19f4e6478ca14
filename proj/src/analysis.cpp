#include "cforge/analysis.hpp"

#include <algorithm>
#include <deque>
#include <random>
#include <set>
#include <sstream>

namespace cforge {

const char* to_string(IdealKind k) {
  switch (k) {
    case IdealKind::novikov: return "novikov";
    case IdealKind::lie: return "lie";
    case IdealKind::nj: return "nj";
    case IdealKind::gd: return "gd";
    case IdealKind::conformal: return "conformal";
  }
  return "?";
}

std::optional<IdealKind> parse_ideal_kind(const std::string& name) {
  for (IdealKind k : {IdealKind::novikov, IdealKind::lie, IdealKind::nj, IdealKind::gd,
                      IdealKind::conformal})
    if (name == to_string(k)) return k;
  return std::nullopt;
}

Truncation::Truncation(Window support_window, unsigned dpow)
    : support(std::move(support_window)), dpow_bound(dpow) {
  for (const auto& idx : support.indices)
    for (unsigned k = 0; k <= dpow_bound; ++k) keys.emplace_back(idx, k);
  std::sort(keys.begin(), keys.end());
  for (size_t c = 0; c < keys.size(); ++c) col.emplace(keys[c], c);
}

ScalarVec Truncation::to_vec(const PolyElement& p, bool* lossy) const {
  ScalarVec v(keys.size(), Scalar(0));
  for (const auto& [key, c] : p.terms) {
    auto it = col.find(key);
    if (it == col.end()) {
      if (lossy) *lossy = true;
      continue;
    }
    v[it->second] = c;
  }
  return v;
}

PolyElement Truncation::truncate(const PolyElement& p, bool* lossy) const {
  PolyElement out;
  for (const auto& [key, c] : p.terms) {
    if (col.count(key))
      out.terms.emplace(key, c);
    else if (lossy)
      *lossy = true;
  }
  return out;
}

PolyElement Truncation::from_vec(const ScalarVec& v) const {
  PolyElement out;
  for (size_t c = 0; c < keys.size(); ++c)
    if (!v[c].is_zero()) out.terms.emplace(keys[c], v[c]);
  return out;
}

bool Truncation::inside(const PolyElement& p) const {
  for (const auto& [key, c] : p.terms)
    if (!col.count(key)) return false;
  return true;
}

namespace {

Element to_element(const PolyElement& p) {
  Element e;
  for (const auto& [key, c] : p.terms) {
    if (key.second != 0) throw std::logic_error("to_element: unexpected d-power");
    e.add_term(key.first, c);
  }
  return e;
}

// One-step products of v against the window basis, per ideal kind.
struct MoveEngine {
  const GDStructure* gd = nullptr;
  const ConformalAlgebra* ca = nullptr;
  IdealKind kind = IdealKind::novikov;
  const Window* w = nullptr;

  std::vector<std::pair<std::string, PolyElement>> moves(const PolyElement& v) const {
    std::vector<std::pair<std::string, PolyElement>> out;
    if (kind == IdealKind::conformal) {
      for (const auto& e : w->indices) {
        PolyElement pe = unit_poly(e);
        collect_coeffs(out, "[" + to_string(e) + " λ v]", lambda_bracket(*ca, pe, v));
        collect_coeffs(out, "[v λ " + to_string(e) + "]", lambda_bracket(*ca, v, pe));
      }
      out.emplace_back("∂·v", dmul(v, 1));
      return out;
    }
    Element ev = to_element(v);
    for (const auto& ei : w->indices) {
      Element e = unit_element(ei);
      switch (kind) {
        case IdealKind::novikov:
          out.emplace_back(to_string(ei) + " ∘ v", from_element(novikov_product(*gd, e, ev)));
          out.emplace_back("v ∘ " + to_string(ei), from_element(novikov_product(*gd, ev, e)));
          break;
        case IdealKind::lie:
          out.emplace_back("[" + to_string(ei) + ", v]",
                           from_element(lie_bracket(*gd, e, ev)));
          break;
        case IdealKind::nj:
          out.emplace_back(to_string(ei) + " * v", from_element(star_product(*gd, e, ev)));
          break;
        case IdealKind::gd:
          out.emplace_back(to_string(ei) + " ∘ v", from_element(novikov_product(*gd, e, ev)));
          out.emplace_back("v ∘ " + to_string(ei), from_element(novikov_product(*gd, ev, e)));
          out.emplace_back("[" + to_string(ei) + ", v]",
                           from_element(lie_bracket(*gd, e, ev)));
          break;
        case IdealKind::conformal:
          break;
      }
    }
    return out;
  }

private:
  static void collect_coeffs(std::vector<std::pair<std::string, PolyElement>>& out,
                             const std::string& label, const BracketPoly& b) {
    for (const auto& [key, p] : b.terms)
      out.emplace_back(label + " λ^" + std::to_string(key[0]) + "-coefficient", p);
  }
};

IdealWitness run_closure(const MoveEngine& engine, const std::vector<PolyElement>& generators,
                         const Window& w, const Truncation& trunc) {
  IdealWitness witness;
  witness.kind = engine.kind;
  witness.generators = generators;
  witness.window = w;
  witness.dpow_bound = trunc.dpow_bound;

  SpanBuilder span(trunc.dim());
  std::deque<PolyElement> todo;
  for (const auto& g : generators) {
    PolyElement t = trunc.truncate(g, &witness.lossy);
    if (span.add(trunc.to_vec(t, nullptr))) todo.push_back(t);
  }
  while (!todo.empty()) {
    PolyElement v = std::move(todo.front());
    todo.pop_front();
    for (const auto& [label, m] : engine.moves(v)) {
      PolyElement t = trunc.truncate(m, &witness.lossy);
      if (t.is_zero()) continue;
      if (span.add(trunc.to_vec(t, nullptr))) todo.push_back(t);
    }
  }
  for (const auto& row : span.basis()) witness.basis_of_closure.push_back(trunc.from_vec(row));
  return witness;
}

}  // namespace

IdealWitness ideal_closure(const GDStructure& a, IdealKind kind,
                           const std::vector<Element>& generators, const Window& w,
                           const Window& w_ext) {
  if (kind == IdealKind::conformal)
    throw std::invalid_argument("ideal_closure: conformal kind needs a ConformalAlgebra");
  MoveEngine engine{&a, nullptr, kind, &w};
  Truncation trunc(w_ext, 0);
  std::vector<PolyElement> gens;
  for (const auto& g : generators) gens.push_back(from_element(g));
  return run_closure(engine, gens, w, trunc);
}

IdealWitness ideal_closure(const ConformalAlgebra& ca,
                           const std::vector<PolyElement>& generators, const Window& w,
                           const Window& w_ext, unsigned dpow_bound) {
  MoveEngine engine{nullptr, &ca, IdealKind::conformal, &w};
  Truncation trunc(w_ext, dpow_bound);
  return run_closure(engine, generators, w, trunc);
}

Report closure_report(const IdealWitness& witness, const std::string& structure) {
  Report r;
  r.check = "ideal-closure";
  r.params["structure"] = structure;
  r.params["kind"] = to_string(witness.kind);
  r.params["generators"] = std::to_string(witness.generators.size());
  r.window = to_string(witness.window);
  r.dpow_bound = static_cast<int>(witness.dpow_bound);
  r.lossy = witness.lossy ? 1 : 0;
  r.verdict = "closure-dim:" + std::to_string(witness.basis_of_closure.size());
  r.expected = r.verdict;  // report-only: recomputation is the only expectation
  for (const auto& g : witness.generators)
    r.witnesses.push_back({"generator", to_string(g), {}});
  for (const auto& b : witness.basis_of_closure)
    r.witnesses.push_back({"closure-basis", to_string(b), {}});
  if (witness.lossy)
    r.notes.push_back("some products left the truncation and were dropped; evidence only");
  return r;
}

namespace {

Report is_ideal_impl(const MoveEngine& engine, const std::vector<PolyElement>& candidate,
                     const Window& w, const Truncation& trunc, const std::string& structure) {
  Report r;
  r.check = "is-ideal";
  r.params["structure"] = structure;
  r.params["kind"] = to_string(engine.kind);
  r.params["candidate_dim"] = std::to_string(candidate.size());
  r.window = to_string(w);
  r.dpow_bound = static_cast<int>(trunc.dpow_bound);
  bool lossy = false;
  SpanBuilder span(trunc.dim());
  for (const auto& v : candidate) {
    if (!trunc.inside(v))
      throw std::invalid_argument("is_ideal: candidate element " + to_string(v) +
                                  " is not supported in the truncation");
    span.add(trunc.to_vec(v, nullptr));
  }
  for (const auto& v : candidate) {
    for (const auto& [label, m] : engine.moves(v)) {
      PolyElement t = trunc.truncate(m, &lossy);
      ScalarVec residual = span.reduce(trunc.to_vec(t, nullptr));
      PolyElement res = trunc.from_vec(residual);
      if (!res.is_zero())
        r.fail({label, "v = " + to_string(v)}, to_string(res), "product escapes candidate span");
    }
  }
  r.lossy = lossy ? 1 : 0;
  if (lossy)
    r.notes.push_back("products reaching outside the truncation were dropped before the "
                      "membership test; evidence only");
  return r;
}

}  // namespace

Report is_ideal(const GDStructure& a, IdealKind kind, const std::vector<Element>& candidate,
                const Window& w, const Window& w_trunc) {
  if (kind == IdealKind::conformal)
    throw std::invalid_argument("is_ideal: conformal kind needs a ConformalAlgebra");
  MoveEngine engine{&a, nullptr, kind, &w};
  Truncation trunc(w_trunc, 0);
  std::vector<PolyElement> cand;
  for (const auto& c : candidate) cand.push_back(from_element(c));
  return is_ideal_impl(engine, cand, w, trunc, a.description);
}

Report is_ideal(const ConformalAlgebra& ca, const std::vector<PolyElement>& candidate,
                const Window& w, const Window& w_trunc, unsigned dpow_bound) {
  MoveEngine engine{nullptr, &ca, IdealKind::conformal, &w};
  Truncation trunc(w_trunc, dpow_bound);
  return is_ideal_impl(engine, candidate, w, trunc, ca.gd.description);
}

Report gd_ideal_lift(const GDStructure& a, const std::vector<Element>& ideal_basis,
                     const Window& w, const Window& w_trunc, unsigned dpow_bound) {
  Report r;
  r.check = "gd-ideal-lift";
  r.params["structure"] = a.description;
  r.params["ideal_dim"] = std::to_string(ideal_basis.size());
  r.window = to_string(w);
  r.dpow_bound = static_cast<int>(dpow_bound);

  Report pre_nov = is_ideal(a, IdealKind::novikov, ideal_basis, w, w_trunc);
  Report pre_lie = is_ideal(a, IdealKind::lie, ideal_basis, w, w_trunc);
  if (pre_nov.verdict != "pass" || pre_lie.verdict != "pass") {
    r.verdict = "precondition-failed";
    for (auto& f : pre_nov.failures) r.failures.push_back(f);
    for (auto& f : pre_lie.failures) r.failures.push_back(f);
    r.notes.push_back("input is not a GD ideal (novikov: " + pre_nov.verdict +
                      ", lie: " + pre_lie.verdict + "); nothing lifted");
    return r;
  }
  std::vector<PolyElement> lifted;
  for (const auto& v : ideal_basis)
    for (unsigned k = 0; k <= dpow_bound; ++k) lifted.push_back(dmul(from_element(v), k));
  Report conf = is_ideal(quadratic_from_gd(a), lifted, w, w_trunc, dpow_bound);
  r.verdict = conf.verdict;
  r.failures = conf.failures;
  r.lossy = conf.lossy;
  r.notes.push_back("C[∂]I truncated at ∂-degree " + std::to_string(dpow_bound) +
                    " tested as a conformal ideal");
  for (const auto& n : conf.notes) r.notes.push_back(n);
  return r;
}

Report star_span_check(const GDStructure& a, const Window& w, const Window& targets) {
  Report r;
  r.check = "star-span";
  r.params["structure"] = a.description;
  r.window = to_string(w);

  std::vector<std::pair<std::string, Element>> products;
  for (size_t i = 0; i < w.indices.size(); ++i)
    for (size_t j = i; j < w.indices.size(); ++j) {
      Element p = star_product(a, unit_element(w.indices[i]), unit_element(w.indices[j]));
      products.emplace_back("star(" + to_string(w.indices[i]) + "," +
                                to_string(w.indices[j]) + ")",
                            p);
    }

  std::set<BasisIndex> keys;
  for (const auto& [label, p] : products)
    for (const auto& [idx, c] : p.terms) keys.insert(idx);
  for (const auto& t : targets.indices) keys.insert(t);
  std::vector<BasisIndex> ordered(keys.begin(), keys.end());
  std::map<BasisIndex, size_t> col;
  for (size_t k = 0; k < ordered.size(); ++k) col.emplace(ordered[k], k);

  ScalarMat rows;
  for (const auto& [label, p] : products) {
    ScalarVec v(ordered.size(), Scalar(0));
    for (const auto& [idx, c] : p.terms) v[col.at(idx)] = c;
    rows.push_back(std::move(v));
  }

  std::vector<std::string> unreachable;
  for (const auto& t : targets.indices) {
    ScalarVec unit(ordered.size(), Scalar(0));
    unit[col.at(t)] = Scalar(1);
    auto sol = solve_linear(rows, unit);
    if (!sol) {
      unreachable.push_back(to_string(t));
      r.witnesses.push_back({"unreachable", to_string(t), {}});
      continue;
    }
    std::vector<std::string> combo;
    for (size_t k = 0; k < sol->size(); ++k)
      if (!(*sol)[k].is_zero())
        combo.push_back(to_string((*sol)[k]) + " · " + products[k].first);
    r.witnesses.push_back({"reachable", to_string(t), std::move(combo)});
  }
  if (unreachable.empty()) {
    r.verdict = "all-reachable";
  } else {
    std::string v = "unreachable:";
    for (size_t k = 0; k < unreachable.size(); ++k) v += (k ? "," : "") + unreachable[k];
    r.verdict = v;
  }
  r.expected = "all-reachable";
  return r;
}

Report star_annihilator_check(const GDStructure& a, const Window& w) {
  Report r;
  r.check = "star-annihilator";
  r.params["structure"] = a.description;
  r.window = to_string(w);

  size_t m = w.indices.size();
  std::vector<std::vector<Element>> per_j(m);  // w_j * e for each e
  std::set<BasisIndex> keys;
  for (size_t j = 0; j < m; ++j) {
    for (const auto& e : w.indices) {
      Element p = star_product(a, unit_element(w.indices[j]), unit_element(e));
      for (const auto& [idx, c] : p.terms) keys.insert(idx);
      per_j[j].push_back(std::move(p));
    }
  }
  std::vector<BasisIndex> ordered(keys.begin(), keys.end());
  std::map<BasisIndex, size_t> col;
  for (size_t k = 0; k < ordered.size(); ++k) col.emplace(ordered[k], k);

  // Constraint matrix: one row per (e, support key), one column per j.
  size_t ecount = w.indices.size();
  ScalarMat mat(ecount * ordered.size(), ScalarVec(m, Scalar(0)));
  for (size_t j = 0; j < m; ++j)
    for (size_t ei = 0; ei < ecount; ++ei)
      for (const auto& [idx, c] : per_j[j][ei].terms)
        mat[ei * ordered.size() + col.at(idx)][j] = c;

  ScalarMat kernel = nullspace(mat);
  if (kernel.empty()) {
    r.verdict = "kernel-trivial";
  } else {
    r.verdict = "kernel-dim:" + std::to_string(kernel.size());
    for (const auto& k : kernel) {
      Element v;
      for (size_t j = 0; j < m; ++j) v.add_term(w.indices[j], k[j]);
      r.witnesses.push_back({"annihilator", to_string(v), {}});
    }
  }
  r.expected = "kernel-trivial";
  return r;
}

namespace {

const std::vector<Scalar>& coefficient_pool() {
  static const std::vector<Scalar> pool = {
      Scalar(1), Scalar(-1), Scalar(2), Scalar::rational(1, 2), Scalar::i()};
  return pool;
}

}  // namespace

Report simplicity_evidence_report(const ConformalAlgebra& ca, const Window& w,
                                  const Window& w_ext, const EvidenceOptions& opt) {
  Report r;
  r.check = "simplicity-evidence";
  r.params["structure"] = ca.gd.description;
  r.params["trials"] = std::to_string(opt.trials);
  r.window = to_string(w);
  r.dpow_bound = static_cast<int>(opt.dpow_bound);
  r.seed = static_cast<long long>(opt.seed);
  r.has_seed = true;

  Report span_r = star_span_check(ca.gd, w, w);
  Report ann_r = star_annihilator_check(ca.gd, w);
  r.witnesses.push_back({"star-span", span_r.verdict, {}});
  r.witnesses.push_back({"star-annihilator", ann_r.verdict, {}});

  Truncation trunc(w_ext, opt.dpow_bound);
  std::mt19937_64 rng(opt.seed);
  const auto& pool = coefficient_pool();
  unsigned dv_ok = 0, full_ok = 0, lossy_count = 0, nonlossy_full_ok = 0, nonlossy = 0;
  for (unsigned t = 0; t < opt.trials; ++t) {
    PolyElement gen;
    while (gen.is_zero()) {
      size_t support = 1 + rng() % 3;
      for (size_t s = 0; s < support; ++s) {
        const BasisIndex& idx = w.indices[rng() % w.indices.size()];
        unsigned dp = static_cast<unsigned>(rng() % (opt.dpow_bound + 1));
        gen.add_term(idx, dp, pool[rng() % pool.size()]);
      }
    }
    IdealWitness witness = ideal_closure(ca, {gen}, w, w_ext, opt.dpow_bound);
    SpanBuilder span(trunc.dim());
    for (const auto& b : witness.basis_of_closure) span.add(trunc.to_vec(b, nullptr));
    bool dv = true, full = true;
    for (const auto& idx : w.indices) {
      for (unsigned k = 0; k <= opt.dpow_bound; ++k) {
        bool in = span.contains(trunc.to_vec(unit_poly(idx, k), nullptr));
        if (!in) {
          full = false;
          if (k >= 1) dv = false;
        }
      }
    }
    dv_ok += dv;
    full_ok += full;
    lossy_count += witness.lossy;
    if (!witness.lossy) {
      ++nonlossy;
      nonlossy_full_ok += full;
    }
    std::ostringstream detail;
    detail << "trial " << t << ": generator " << to_string(gen) << "; lossy "
           << (witness.lossy ? "yes" : "no") << "; C[∂]∂V contained "
           << (dv ? "yes" : "no") << "; full truncation contained " << (full ? "yes" : "no");
    r.witnesses.push_back({"trial", detail.str(), {}});
  }
  r.lossy = lossy_count > 0 ? 1 : 0;

  bool ok = span_r.verdict == "all-reachable" && ann_r.verdict == "kernel-trivial" &&
            dv_ok == opt.trials && nonlossy_full_ok == nonlossy;
  r.verdict = ok ? "evidence-ok" : "evidence-incomplete";
  r.expected = "evidence-ok";
  r.notes.push_back("desk-scale evidence on a finite truncation; not a proof of simplicity");
  r.notes.push_back("C[∂]∂V containment in " + std::to_string(dv_ok) + "/" +
                    std::to_string(opt.trials) + " trials; full containment in " +
                    std::to_string(full_ok) + "/" + std::to_string(opt.trials) +
                    " (non-lossy: " + std::to_string(nonlossy_full_ok) + "/" +
                    std::to_string(nonlossy) + ")");
  r.notes.push_back(std::to_string(lossy_count) + "/" + std::to_string(opt.trials) +
                    " closures dropped terms at the truncation boundary");
  return r;
}

std::vector<Element> make_ideal_J(const DeltaGroup& delta, const Scalar& b,
                                  const Window& support) {
  return make_ideal_J_drop(delta, Scalar(-2) * b, support);
}

std::vector<Element> make_ideal_J_drop(const DeltaGroup& delta, const Scalar& drop_at,
                                       const Window& support) {
  std::vector<Element> out;
  for (const auto& idx : support.indices) {
    const auto& v = std::get<VecIndex>(idx).v;
    if (delta.eval(v) == drop_at) continue;
    out.push_back(unit_element(idx));
  }
  return out;
}

std::vector<PolyElement> make_ideal_B(const DeltaGroup& delta, const Scalar& b,
                                      const Window& support, unsigned dpow_bound) {
  std::vector<PolyElement> out;
  for (const auto& e : make_ideal_J(delta, b, support)) out.push_back(from_element(e));
  for (const auto& idx : support.indices)
    for (unsigned k = 1; k <= dpow_bound; ++k) out.push_back(unit_poly(idx, k));
  return out;
}

}  // namespace cforge
