#include "cforge/delta.hpp"

#include <sstream>
#include <stdexcept>

#include "cforge/linalg.hpp"

namespace cforge {

DeltaVector operator+(const DeltaVector& a, const DeltaVector& b) {
  if (a.coords.size() != b.coords.size())
    throw std::invalid_argument("DeltaVector: rank mismatch");
  DeltaVector r = a;
  for (size_t k = 0; k < r.coords.size(); ++k) r.coords[k] += b.coords[k];
  return r;
}

std::string to_string(const DeltaVector& v) {
  std::ostringstream os;
  os << "(";
  for (size_t k = 0; k < v.coords.size(); ++k) {
    if (k) os << ",";
    os << v.coords[k];
  }
  os << ")";
  return os.str();
}

namespace {

// (re, im) coordinates of a generator as a rational 2-vector.
ScalarVec rational_parts(const Scalar& s) {
  return {Scalar(s.re()), Scalar(s.im())};
}

}  // namespace

DeltaGroup::DeltaGroup(std::vector<Scalar> generators) : gens_(std::move(generators)) {
  ScalarMat rows;
  rows.reserve(gens_.size());
  for (const auto& g : gens_) rows.push_back(rational_parts(g));
  if (row_reduce(rows).size() != gens_.size())
    throw std::invalid_argument("DeltaGroup: generators are not Q-linearly independent");
}

Scalar DeltaGroup::eval(const DeltaVector& v) const {
  if (v.coords.size() != gens_.size())
    throw std::invalid_argument("DeltaGroup: rank mismatch");
  Scalar s(0);
  for (size_t k = 0; k < gens_.size(); ++k) s += Scalar(v.coords[k]) * gens_[k];
  return s;
}

std::optional<DeltaVector> DeltaGroup::membership(const Scalar& s) const {
  ScalarMat rows;
  rows.reserve(gens_.size());
  for (const auto& g : gens_) rows.push_back(rational_parts(g));
  auto sol = solve_linear(rows, rational_parts(s));
  if (!sol) return std::nullopt;
  DeltaVector v;
  v.coords.reserve(sol->size());
  for (const auto& c : *sol) {
    if (!c.is_real() || c.re().get_den() != 1) return std::nullopt;
    mpz_class n = c.re().get_num();
    if (!n.fits_slong_p())
      throw std::overflow_error("DeltaGroup: coordinate out of machine range");
    v.coords.push_back(n.get_si());
  }
  return v;
}

}  // namespace cforge
