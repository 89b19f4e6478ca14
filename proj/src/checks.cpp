#include "cforge/checks.hpp"

namespace cforge {

namespace {

void validate_window(const GDStructure& a, const Window& w) {
  for (const auto& idx : w.indices)
    if (!a.valid(idx))
      throw std::invalid_argument("window contains invalid index " + to_string(idx));
}

}  // namespace

Report check_novikov_axioms(const GDStructure& a, const Window& w) {
  validate_window(a, w);
  Report r;
  r.check = "novikov-axioms";
  r.params["structure"] = a.description;
  r.window = to_string(w);
  for (const auto& ai : w.indices) {
    Element x = unit_element(ai);
    for (const auto& bi : w.indices) {
      Element y = unit_element(bi);
      Element xy = novikov_product(a, x, y);
      Element yx = novikov_product(a, y, x);
      for (const auto& ci : w.indices) {
        Element z = unit_element(ci);
        Element left_sym = novikov_product(a, xy, z) - novikov_product(a, x, novikov_product(a, y, z)) -
                           novikov_product(a, yx, z) + novikov_product(a, y, novikov_product(a, x, z));
        if (!left_sym.is_zero())
          r.fail({to_string(ai), to_string(bi), to_string(ci)}, to_string(left_sym),
                 "left-symmetry");
        Element right_comm =
            novikov_product(a, xy, z) - novikov_product(a, novikov_product(a, x, z), y);
        if (!right_comm.is_zero())
          r.fail({to_string(ai), to_string(bi), to_string(ci)}, to_string(right_comm),
                 "right-commutativity");
      }
    }
  }
  return r;
}

Report check_lie_axioms(const GDStructure& a, const Window& w) {
  validate_window(a, w);
  Report r;
  r.check = "lie-axioms";
  r.params["structure"] = a.description;
  r.window = to_string(w);
  for (const auto& ai : w.indices) {
    Element x = unit_element(ai);
    for (const auto& bi : w.indices) {
      Element y = unit_element(bi);
      Element skew = lie_bracket(a, x, y) + lie_bracket(a, y, x);
      if (!skew.is_zero())
        r.fail({to_string(ai), to_string(bi)}, to_string(skew), "skew-symmetry");
    }
  }
  for (const auto& ai : w.indices) {
    Element x = unit_element(ai);
    for (const auto& bi : w.indices) {
      Element y = unit_element(bi);
      for (const auto& ci : w.indices) {
        Element z = unit_element(ci);
        Element jac = lie_bracket(a, lie_bracket(a, x, y), z) +
                      lie_bracket(a, lie_bracket(a, y, z), x) +
                      lie_bracket(a, lie_bracket(a, z, x), y);
        if (!jac.is_zero())
          r.fail({to_string(ai), to_string(bi), to_string(ci)}, to_string(jac), "jacobi");
      }
    }
  }
  return r;
}

Report check_gd_compatibility(const GDStructure& a, const Window& w) {
  validate_window(a, w);
  Report r;
  r.check = "gd-compatibility";
  r.params["structure"] = a.description;
  r.window = to_string(w);
  for (const auto& ai : w.indices) {
    Element x = unit_element(ai);
    for (const auto& bi : w.indices) {
      Element y = unit_element(bi);
      for (const auto& ci : w.indices) {
        Element z = unit_element(ci);
        Element res = lie_bracket(a, novikov_product(a, x, y), z) -
                      lie_bracket(a, novikov_product(a, x, z), y) +
                      novikov_product(a, lie_bracket(a, x, y), z) -
                      novikov_product(a, lie_bracket(a, x, z), y) -
                      novikov_product(a, x, lie_bracket(a, y, z));
        if (!res.is_zero())
          r.fail({to_string(ai), to_string(bi), to_string(ci)}, to_string(res));
      }
    }
  }
  return r;
}

const char* to_string(TortkenVariant v) {
  return v == TortkenVariant::printed ? "printed" : "corrected";
}

Report check_tortken(const GDStructure& a, const Window& w, TortkenVariant variant) {
  validate_window(a, w);
  Report r;
  r.check = "tortken";
  r.params["structure"] = a.description;
  r.params["variant"] = to_string(variant);
  r.window = to_string(w);
  auto star = [&a](const Element& x, const Element& y) { return star_product(a, x, y); };
  auto assoc = [&](const Element& x, const Element& y, const Element& z) {
    return star(x, star(y, z)) - star(star(x, y), z);
  };
  for (const auto& ai : w.indices) {
    Element x = unit_element(ai);
    for (const auto& bi : w.indices) {
      Element y = unit_element(bi);
      for (const auto& ci : w.indices) {
        Element z = unit_element(ci);
        for (const auto& di : w.indices) {
          Element u = unit_element(di);
          Element lhs = variant == TortkenVariant::printed
                            ? star(star(x, y), star(z, u)) - star(star(x, u), star(z, u))
                            : star(star(x, y), star(z, u)) - star(star(x, u), star(z, y));
          Element rhs = star(assoc(x, y, z), u) - star(assoc(x, u, z), y);
          Element res = lhs - rhs;
          if (!res.is_zero())
            r.fail({to_string(ai), to_string(bi), to_string(ci), to_string(di)},
                   to_string(res));
        }
      }
    }
  }
  return r;
}

}  // namespace cforge
