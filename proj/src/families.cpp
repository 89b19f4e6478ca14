#include "cforge/families.hpp"

#include <sstream>

namespace cforge {

GroupHom::GroupHom(DeltaGroup d, std::vector<Scalar> imgs)
    : delta(std::move(d)), images(std::move(imgs)) {
  if (images.size() != delta.rank())
    throw std::invalid_argument("GroupHom: one image per generator required");
}

GroupHom GroupHom::zero(const DeltaGroup& d) {
  return GroupHom(d, std::vector<Scalar>(d.rank(), Scalar(0)));
}

bool GroupHom::is_zero() const {
  for (const auto& s : images)
    if (!s.is_zero()) return false;
  return true;
}

Scalar GroupHom::eval(const DeltaVector& v) const {
  if (v.coords.size() != images.size())
    throw std::invalid_argument("GroupHom: rank mismatch");
  Scalar s(0);
  for (size_t k = 0; k < images.size(); ++k) s += Scalar(v.coords[k]) * images[k];
  return s;
}

SkewForm::SkewForm(DeltaGroup d, std::vector<std::vector<Scalar>> m)
    : delta(std::move(d)), matrix(std::move(m)) {
  size_t r = delta.rank();
  if (matrix.size() != r)
    throw std::invalid_argument("SkewForm: matrix must be rank x rank");
  for (const auto& row : matrix)
    if (row.size() != r) throw std::invalid_argument("SkewForm: matrix must be rank x rank");
  for (size_t i = 0; i < r; ++i)
    for (size_t j = 0; j < r; ++j)
      if (matrix[i][j] != -matrix[j][i])
        throw std::invalid_argument("SkewForm: matrix is not skew-symmetric");
}

SkewForm SkewForm::zero(const DeltaGroup& d) {
  return SkewForm(d, std::vector<std::vector<Scalar>>(d.rank(),
                                                      std::vector<Scalar>(d.rank(), Scalar(0))));
}

Scalar SkewForm::eval(const DeltaVector& v, const DeltaVector& w) const {
  size_t r = delta.rank();
  if (v.coords.size() != r || w.coords.size() != r)
    throw std::invalid_argument("SkewForm: rank mismatch");
  Scalar s(0);
  for (size_t i = 0; i < r; ++i)
    for (size_t j = 0; j < r; ++j)
      s += Scalar(v.coords[i]) * matrix[i][j] * Scalar(w.coords[j]);
  return s;
}

const char* to_string(FamilyTag tag) {
  switch (tag) {
    case FamilyTag::Vir: return "Vir";
    case FamilyTag::Cur: return "Cur";
    case FamilyTag::A1: return "A1";
    case FamilyTag::CL1: return "CL1";
    case FamilyTag::A2: return "A2";
    case FamilyTag::CL2: return "CL2";
    case FamilyTag::A3: return "A3";
    case FamilyTag::CL3: return "CL3";
    case FamilyTag::CL3_b0: return "CL3_b0";
    case FamilyTag::OsbornA: return "OsbornA";
  }
  return "?";
}

std::optional<FamilyTag> parse_family_tag(const std::string& name) {
  for (FamilyTag t : {FamilyTag::Vir, FamilyTag::Cur, FamilyTag::A1, FamilyTag::CL1,
                      FamilyTag::A2, FamilyTag::CL2, FamilyTag::A3, FamilyTag::CL3,
                      FamilyTag::CL3_b0, FamilyTag::OsbornA})
    if (name == to_string(t)) return t;
  return std::nullopt;
}

namespace {

bool valid_int_geq(const BasisIndex& idx, long long lo) {
  const auto* p = std::get_if<IntIndex>(&idx);
  return p && p->i >= lo;
}

std::function<bool(const BasisIndex&)> vec_validator(size_t rank) {
  return [rank](const BasisIndex& idx) {
    const auto* p = std::get_if<VecIndex>(&idx);
    return p && p->v.coords.size() == rank;
  };
}

std::function<bool(const BasisIndex&)> vecnat_validator(size_t rank) {
  return [rank](const BasisIndex& idx) {
    const auto* p = std::get_if<VecNatIndex>(&idx);
    return p && p->v.coords.size() == rank && p->n >= 0;
  };
}

}  // namespace

GDStructure make_a1(const Scalar& c) {
  GDStructure g;
  g.description = "A1 (L_i, i >= -1), c=" + to_string(c);
  g.valid = [](const BasisIndex& idx) { return valid_int_geq(idx, -1); };
  g.novikov_rule = [valid = g.valid](const BasisIndex& a, const BasisIndex& b) {
    long long i = std::get<IntIndex>(a).i, j = std::get<IntIndex>(b).i;
    Element e;
    add_rule_term(e, Scalar(j + 1), IntIndex{i + j}, valid);
    return e;
  };
  g.lie_rule = [c, valid = g.valid](const BasisIndex& a, const BasisIndex& b) {
    long long i = std::get<IntIndex>(a).i, j = std::get<IntIndex>(b).i;
    Element e;
    add_rule_term(e, c * Scalar(i - j), IntIndex{i + j}, valid);
    return e;
  };
  return g;
}

GDStructure make_a2(const DeltaGroup& delta, const Scalar& b, const GroupHom& phi) {
  GDStructure g;
  std::ostringstream desc;
  desc << "A2 over Delta rank " << delta.rank() << ", b=" << to_string(b);
  g.description = desc.str();
  g.valid = vec_validator(delta.rank());
  g.novikov_rule = [delta, b, valid = g.valid](const BasisIndex& a, const BasisIndex& bi) {
    const auto& al = std::get<VecIndex>(a).v;
    const auto& be = std::get<VecIndex>(bi).v;
    Element e;
    add_rule_term(e, delta.eval(be) + b, VecIndex{al + be}, valid);
    return e;
  };
  if (phi.is_zero()) {
    g.lie_rule = [](const BasisIndex&, const BasisIndex&) { return Element{}; };
  } else {
    g.lie_rule = [delta, b, phi, valid = g.valid](const BasisIndex& a, const BasisIndex& bi) {
      const auto& al = std::get<VecIndex>(a).v;
      const auto& be = std::get<VecIndex>(bi).v;
      Scalar pa = phi.eval(al), pb = phi.eval(be);
      Scalar coeff = (pb * delta.eval(al) - pa * delta.eval(be) + b * (pb - pa)) / b;
      Element e;
      add_rule_term(e, coeff, VecIndex{al + be}, valid);
      return e;
    };
  }
  return g;
}

GDStructure make_a3(const DeltaGroup& delta, const Scalar& b, const GroupHom& phi,
                    const Scalar& c) {
  GDStructure g;
  std::ostringstream desc;
  desc << "A3 over Delta rank " << delta.rank() << ", b=" << to_string(b)
       << ", c=" << to_string(c);
  g.description = desc.str();
  g.valid = vecnat_validator(delta.rank());
  g.novikov_rule = [delta, b, valid = g.valid](const BasisIndex& a, const BasisIndex& bi) {
    const auto& [al, i] = std::get<VecNatIndex>(a);
    const auto& [be, j] = std::get<VecNatIndex>(bi);
    Element e;
    add_rule_term(e, delta.eval(be) + b, VecNatIndex{al + be, i + j}, valid);
    add_rule_term(e, Scalar(j), VecNatIndex{al + be, i + j - 1}, valid);
    return e;
  };
  g.lie_rule = [delta, b, phi, c, valid = g.valid](const BasisIndex& a, const BasisIndex& bi) {
    const auto& [al, i] = std::get<VecNatIndex>(a);
    const auto& [be, j] = std::get<VecNatIndex>(bi);
    Scalar pa = phi.eval(al), pb = phi.eval(be);
    Scalar ea = delta.eval(al) + b, eb = delta.eval(be) + b;
    Element e;
    add_rule_term(e, (ea * pb - eb * pa) / b, VecNatIndex{al + be, i + j}, valid);
    add_rule_term(e, (Scalar(i) * (pb - c * eb) + Scalar(j) * (c * ea - pa)) / b,
                  VecNatIndex{al + be, i + j - 1}, valid);
    return e;
  };
  return g;
}

GDStructure make_a3_b0(const DeltaGroup& delta, const SkewForm& form, const GroupHom& phi) {
  GDStructure g;
  std::ostringstream desc;
  desc << "A3 over Delta rank " << delta.rank() << ", b=0, skew-form bracket";
  g.description = desc.str();
  g.valid = vecnat_validator(delta.rank());
  g.novikov_rule = [delta, valid = g.valid](const BasisIndex& a, const BasisIndex& bi) {
    const auto& [al, i] = std::get<VecNatIndex>(a);
    const auto& [be, j] = std::get<VecNatIndex>(bi);
    Element e;
    add_rule_term(e, delta.eval(be), VecNatIndex{al + be, i + j}, valid);
    add_rule_term(e, Scalar(j), VecNatIndex{al + be, i + j - 1}, valid);
    return e;
  };
  g.lie_rule = [form, phi, valid = g.valid](const BasisIndex& a, const BasisIndex& bi) {
    const auto& [al, i] = std::get<VecNatIndex>(a);
    const auto& [be, j] = std::get<VecNatIndex>(bi);
    Element e;
    add_rule_term(e, form.eval(al, be), VecNatIndex{al + be, i + j}, valid);
    add_rule_term(e, Scalar(i) * phi.eval(be) - Scalar(j) * phi.eval(al),
                  VecNatIndex{al + be, i + j - 1}, valid);
    return e;
  };
  return g;
}

GDStructure make_osborn(const DeltaGroup& delta, const Scalar& b) {
  GDStructure g;
  std::ostringstream desc;
  desc << "Osborn A over Delta rank " << delta.rank() << ", b=" << to_string(b);
  g.description = desc.str();
  g.valid = vecnat_validator(delta.rank());
  g.novikov_rule = [delta, b, valid = g.valid](const BasisIndex& a, const BasisIndex& bi) {
    const auto& [al, i] = std::get<VecNatIndex>(a);
    const auto& [be, j] = std::get<VecNatIndex>(bi);
    Element e;
    Scalar c1 = (delta.eval(be) + b) * Scalar(mpq_class(binomial(to_mpz(i + j), static_cast<unsigned>(i))));
    add_rule_term(e, c1, VecNatIndex{al + be, i + j}, valid);
    if (i + j >= 1) {
      Scalar c2(mpq_class(binomial(to_mpz(i + j - 1), static_cast<unsigned>(i))));
      add_rule_term(e, c2, VecNatIndex{al + be, i + j - 1}, valid);
    }
    return e;
  };
  g.lie_rule = [](const BasisIndex&, const BasisIndex&) { return Element{}; };
  return g;
}

GDStructure make_vir() {
  FiniteTable t;
  t.basis = {"L"};
  t.novikov = {{parse_element("L")}};
  t.lie = {{Element{}}};
  return table_structure(t, "Vir (L o L = L, trivial bracket)");
}

GDStructure make_cur(const FiniteTable& lie_table) {
  FiniteTable t = lie_table;
  for (auto& row : t.novikov)
    for (auto& cell : row) cell = Element{};
  return table_structure(t, "current algebra (trivial Novikov product)");
}

namespace {

void require(bool ok, const std::string& hypothesis) {
  if (!ok) throw FamilyError(hypothesis);
}

DeltaGroup need_delta(const FamilyParams& p) {
  if (!p.delta) throw FamilyError("family " + std::string(to_string(p.tag)) +
                                  " requires a Delta group (--delta)");
  return *p.delta;
}

GroupHom phi_or_zero(const FamilyParams& p, const DeltaGroup& d) {
  if (!p.phi) return GroupHom::zero(d);
  if (!(p.phi->delta == d)) throw FamilyError("phi is defined over a different Delta group");
  return *p.phi;
}

}  // namespace

Family make_family(const FamilyParams& p) {
  GDStructure gd;
  switch (p.tag) {
    case FamilyTag::Vir:
      gd = make_vir();
      break;
    case FamilyTag::Cur: {
      require(p.table.has_value(), "Cur requires a finite Lie table (--table)");
      gd = make_cur(*p.table);
      break;
    }
    case FamilyTag::A1:
    case FamilyTag::CL1:
      gd = make_a1(p.c);
      break;
    case FamilyTag::A2:
    case FamilyTag::CL2: {
      DeltaGroup d = need_delta(p);
      GroupHom phi = phi_or_zero(p, d);
      if (!p.allow_2b_in_delta)
        require(!d.membership(Scalar(2) * p.b).has_value(),
                "requires 2b not in Delta (pass --allow-2b-in-delta to build the non-simple "
                "variant)");
      if (!phi.is_zero())
        require(!d.membership(p.b).has_value(), "requires b not in Delta when phi is nonzero");
      gd = make_a2(d, p.b, phi);
      break;
    }
    case FamilyTag::A3:
    case FamilyTag::CL3: {
      DeltaGroup d = need_delta(p);
      GroupHom phi = phi_or_zero(p, d);
      require(!p.b.is_zero(), "requires b nonzero (use CL3_b0 for the b=0 variants)");
      if (!phi.is_zero())
        require(!d.membership(p.b).has_value(), "requires b not in Delta when phi is nonzero");
      gd = make_a3(d, p.b, phi, p.c);
      break;
    }
    case FamilyTag::CL3_b0: {
      DeltaGroup d = need_delta(p);
      GroupHom phi = phi_or_zero(p, d);
      SkewForm form = p.form ? *p.form : SkewForm::zero(d);
      if (!(form.delta == d)) throw FamilyError("form is defined over a different Delta group");
      gd = make_a3_b0(d, form, phi);
      break;
    }
    case FamilyTag::OsbornA: {
      DeltaGroup d = need_delta(p);
      gd = make_osborn(d, p.b);
      break;
    }
  }
  if (p.k) gd = gd_from_novikov(gd, *p.k);
  Family f{gd, quadratic_from_gd(gd), to_string(p.tag)};
  return f;
}

Report osborn_iso_check(const Scalar& b, const DeltaGroup& delta, const Window& w) {
  Report r;
  r.check = "osborn-iso";
  r.params["b"] = to_string(b);
  r.window = to_string(w);
  GDStructure osborn = make_osborn(delta, b);
  GDStructure a3 = make_a3(delta, b.is_zero() ? Scalar(1) : b, GroupHom::zero(delta), Scalar(0));
  if (b.is_zero()) a3 = make_a3_b0(delta, SkewForm::zero(delta), GroupHom::zero(delta));

  auto psi = [](const Element& e) {
    Element out;
    for (const auto& [idx, c] : e.terms) {
      long long n = std::get<VecNatIndex>(idx).n;
      out.add_term(idx, c / Scalar(mpq_class(factorial(static_cast<unsigned>(n)))));
    }
    return out;
  };
  for (const auto& u : w.indices) {
    for (const auto& v : w.indices) {
      long long i = std::get<VecNatIndex>(u).n, j = std::get<VecNatIndex>(v).n;
      Scalar scale = Scalar(1) / Scalar(mpq_class(factorial(static_cast<unsigned>(i)) *
                                                  factorial(static_cast<unsigned>(j))));
      Element lhs = scale * a3.novikov_rule(u, v);          // psi(u) o psi(v) in A3
      Element rhs = psi(osborn.novikov_rule(u, v));         // psi(u o v)
      if (lhs != rhs)
        r.fail({to_string(u), to_string(v)}, to_string(lhs - rhs),
               "psi(u) o psi(v) != psi(u o v)");
    }
  }
  return r;
}

}  // namespace cforge
