#include "cforge/gd.hpp"

#include <set>
#include <sstream>
#include <stdexcept>

namespace cforge {

Window make_window(std::vector<BasisIndex> indices) {
  std::set<BasisIndex> seen(indices.begin(), indices.end());
  if (seen.size() != indices.size())
    throw std::invalid_argument("Window: duplicate indices");
  return Window{std::move(indices)};
}

Window int_window(long long lo, long long hi) {
  std::vector<BasisIndex> idx;
  for (long long i = lo; i <= hi; ++i) idx.push_back(IntIndex{i});
  return Window{std::move(idx)};
}

namespace {

void cross_product(const std::vector<std::pair<long long, long long>>& ranges, size_t k,
                   std::vector<long long>& cur, std::vector<DeltaVector>& out) {
  if (k == ranges.size()) {
    out.push_back(DeltaVector{cur});
    return;
  }
  for (long long v = ranges[k].first; v <= ranges[k].second; ++v) {
    cur.push_back(v);
    cross_product(ranges, k + 1, cur, out);
    cur.pop_back();
  }
}

std::vector<DeltaVector> all_vectors(const std::vector<std::pair<long long, long long>>& ranges) {
  std::vector<DeltaVector> out;
  std::vector<long long> cur;
  cross_product(ranges, 0, cur, out);
  return out;
}

}  // namespace

Window vec_window(const std::vector<std::pair<long long, long long>>& ranges) {
  std::vector<BasisIndex> idx;
  for (auto& v : all_vectors(ranges)) idx.push_back(VecIndex{v});
  return Window{std::move(idx)};
}

Window vecnat_window(const std::vector<std::pair<long long, long long>>& ranges,
                     long long nat_lo, long long nat_hi) {
  if (nat_lo < 0) throw std::invalid_argument("Window: nat range must be >= 0");
  std::vector<BasisIndex> idx;
  for (auto& v : all_vectors(ranges))
    for (long long n = nat_lo; n <= nat_hi; ++n) idx.push_back(VecNatIndex{v, n});
  return Window{std::move(idx)};
}

std::string to_string(const Window& w) {
  std::ostringstream os;
  os << "{";
  for (size_t k = 0; k < w.indices.size(); ++k) {
    if (k) os << ", ";
    os << to_string(w.indices[k]);
  }
  os << "}";
  return os.str();
}

void add_rule_term(Element& out, const Scalar& coeff, BasisIndex idx,
                   const std::function<bool(const BasisIndex&)>& valid) {
  if (coeff.is_zero()) return;
  if (!valid(idx))
    throw std::logic_error("structure rule emitted invalid index " + to_string(idx) +
                           " with nonzero coefficient");
  out.add_term(idx, coeff);
}

namespace {

using Rule = std::function<Element(const BasisIndex&, const BasisIndex&)>;

Element bilinear(const GDStructure& a, const Rule& rule, const Element& x, const Element& y) {
  for (const auto& [idx, c] : x.terms)
    if (!a.valid(idx))
      throw std::invalid_argument("invalid index in input: " + to_string(idx));
  for (const auto& [idx, c] : y.terms)
    if (!a.valid(idx))
      throw std::invalid_argument("invalid index in input: " + to_string(idx));
  Element out;
  for (const auto& [xi, xc] : x.terms)
    for (const auto& [yi, yc] : y.terms) out += (xc * yc) * rule(xi, yi);
  return out;
}

}  // namespace

Element novikov_product(const GDStructure& a, const Element& x, const Element& y) {
  return bilinear(a, a.novikov_rule, x, y);
}

Element lie_bracket(const GDStructure& a, const Element& x, const Element& y) {
  return bilinear(a, a.lie_rule, x, y);
}

Element star_product(const GDStructure& a, const Element& x, const Element& y) {
  return novikov_product(a, x, y) + novikov_product(a, y, x);
}

GDStructure gd_from_novikov(const GDStructure& novikov_only, const Scalar& k) {
  GDStructure out = novikov_only;
  out.description = novikov_only.description + " with k-commutator bracket, k=" + to_string(k);
  auto rule = novikov_only.novikov_rule;
  out.lie_rule = [rule, k](const BasisIndex& x, const BasisIndex& y) {
    return k * (rule(x, y) - rule(y, x));
  };
  return out;
}

}  // namespace cforge
