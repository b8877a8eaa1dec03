#include "dhecke/hecke/cohomology.hpp"

#include <stdexcept>

namespace dhecke {

CohomologyClass::CohomologyClass(u64 p, unsigned rank, unsigned degree, std::size_t classes)
    : p_(p), rank_(rank), degree_(degree), components_(classes, MultiVector(p, rank, degree)) {}

CohomologyClass CohomologyClass::indicator(u64 p, unsigned rank, std::size_t classes, std::size_t a) {
  CohomologyClass c(p, rank, 0, classes);
  c.components_.at(a) = MultiVector::scalar(p, rank, 1);
  return c;
}

CohomologyClass CohomologyClass::concentrated(std::size_t classes, std::size_t a, const MultiVector& w) {
  CohomologyClass c(w.modulus(), w.rank(), w.degree(), classes);
  c.components_.at(a) = w;
  return c;
}

void CohomologyClass::set_component(std::size_t a, MultiVector w) {
  if (w.degree() != degree_ || w.rank() != rank_ || w.modulus() != p_) {
    throw std::invalid_argument("CohomologyClass: component shape mismatch");
  }
  components_.at(a) = std::move(w);
}

bool CohomologyClass::is_zero() const {
  for (const auto& w : components_) {
    if (!w.is_zero()) return false;
  }
  return true;
}

CohomologyClass& CohomologyClass::operator+=(const CohomologyClass& other) {
  if (other.degree_ != degree_ || other.classes() != classes()) {
    throw std::invalid_argument("CohomologyClass: adding classes of different shape");
  }
  for (std::size_t a = 0; a < components_.size(); ++a) components_[a] += other.components_[a];
  return *this;
}

CohomologyClass CohomologyClass::scaled(std::int64_t c) const {
  CohomologyClass out = *this;
  for (auto& w : out.components_) w = w.scaled(c);
  return out;
}

FpVector CohomologyClass::flatten() const {
  const std::size_t per = MultiVector(p_, rank_, degree_).size();
  FpVector v(static_cast<Eigen::Index>(per * components_.size()));
  Eigen::Index k = 0;
  for (const auto& w : components_) {
    for (std::size_t i = 0; i < per; ++i) v(k++) = w.coeff(i);
  }
  return v;
}

HeckeElement::HeckeElement(u64 p, unsigned rank, unsigned degree) : p_(p), rank_(rank), degree_(degree) {}

HeckeElement HeckeElement::shift(u64 p, unsigned rank, std::size_t g) {
  return term(g, MultiVector::scalar(p, rank, 1));
}

HeckeElement HeckeElement::term(std::size_t g, const MultiVector& omega) {
  HeckeElement h(omega.modulus(), omega.rank(), omega.degree());
  h.add_term(g, omega);
  return h;
}

void HeckeElement::add_term(std::size_t g, const MultiVector& omega) {
  if (omega.degree() != degree_ || omega.rank() != rank_ || omega.modulus() != p_) {
    throw std::invalid_argument("HeckeElement: term shape mismatch");
  }
  auto it = terms_.find(g);
  if (it == terms_.end()) {
    if (!omega.is_zero()) terms_.emplace(g, omega);
    return;
  }
  it->second += omega;
  if (it->second.is_zero()) terms_.erase(it);
}

HeckeElement& HeckeElement::operator+=(const HeckeElement& other) {
  if (other.degree_ != degree_) throw std::invalid_argument("HeckeElement: adding different degrees");
  for (const auto& [g, w] : other.terms_) add_term(g, w);
  return *this;
}

HeckeElement HeckeElement::scaled(std::int64_t c) const {
  HeckeElement out(p_, rank_, degree_);
  for (const auto& [g, w] : terms_) out.add_term(g, w.scaled(c));
  return out;
}

FpVector HeckeElement::flatten(std::size_t classes) const {
  const std::size_t per = MultiVector(p_, rank_, degree_).size();
  FpVector v = FpVector::Zero(static_cast<Eigen::Index>(per * classes));
  for (const auto& [g, w] : terms_) {
    for (std::size_t i = 0; i < per; ++i) v(static_cast<Eigen::Index>(g * per + i)) = w.coeff(i);
  }
  return v;
}

HeckeElement hecke_multiply(const RayClassGroup& G, const HeckeElement& a, const HeckeElement& b) {
  HeckeElement out(a.modulus(), a.rank(), a.degree() + b.degree());
  for (const auto& [g, u] : a.terms()) {
    for (const auto& [h, w] : b.terms()) {
      const MultiVector uw = wedge(u, w);
      if (!uw.is_zero()) out.add_term(G.mul(g, h), uw);
    }
  }
  return out;
}

CohomologyClass hecke_apply(const RayClassGroup& G, const HeckeElement& H, const CohomologyClass& c) {
  if (c.classes() != G.order()) throw std::invalid_argument("hecke_apply: class count mismatch");
  CohomologyClass out(c.modulus(), c.rank(), H.degree() + c.degree(), c.classes());
  if (out.degree() > out.rank()) return out;
  for (std::size_t a = 0; a < c.classes(); ++a) {
    MultiVector acc(c.modulus(), c.rank(), out.degree());
    for (const auto& [g, w] : H.terms()) acc += wedge(w, c.component(G.mul(g, a)));
    out.set_component(a, std::move(acc));
  }
  return out;
}

}  // namespace dhecke
