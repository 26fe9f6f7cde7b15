#include "ramify/univariate.hpp"

#include <stdexcept>

namespace ramify {

UPoly::UPoly(std::vector<Scalar> coeffs) : coeffs_(std::move(coeffs)) {
  for (auto& c : coeffs_) c.canonicalize();
  trim();
}

void UPoly::trim() {
  while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
}

UPoly UPoly::derivative() const {
  if (coeffs_.size() <= 1) return {};
  std::vector<Scalar> d(coeffs_.size() - 1);
  for (std::size_t i = 1; i < coeffs_.size(); ++i) d[i - 1] = coeffs_[i] * static_cast<long>(i);
  return UPoly(std::move(d));
}

UPoly UPoly::monic() const {
  if (is_zero()) return *this;
  UPoly r(*this);
  Scalar lead = leading();
  for (auto& c : r.coeffs_) c /= lead;
  return r;
}

UPoly operator*(const UPoly& a, const UPoly& b) {
  if (a.is_zero() || b.is_zero()) return {};
  std::vector<Scalar> out(a.coeffs_.size() + b.coeffs_.size() - 1, Scalar(0));
  for (std::size_t i = 0; i < a.coeffs_.size(); ++i)
    for (std::size_t j = 0; j < b.coeffs_.size(); ++j) out[i + j] += a.coeffs_[i] * b.coeffs_[j];
  return UPoly(std::move(out));
}

std::pair<UPoly, UPoly> divmod(const UPoly& a, const UPoly& b) {
  if (b.is_zero()) throw std::invalid_argument("division by the zero polynomial");
  std::vector<Scalar> rem = a.coeffs();
  if (a.degree() < b.degree()) return {UPoly{}, a};
  std::vector<Scalar> quot(static_cast<std::size_t>(a.degree() - b.degree() + 1), Scalar(0));
  const auto& bc = b.coeffs();
  for (int i = a.degree(); i >= b.degree(); --i) {
    Scalar c = rem[static_cast<std::size_t>(i)] / b.leading();
    if (c == 0) continue;
    std::size_t shift = static_cast<std::size_t>(i - b.degree());
    quot[shift] = c;
    for (std::size_t j = 0; j < bc.size(); ++j) rem[shift + j] -= c * bc[j];
  }
  return {UPoly(std::move(quot)), UPoly(std::move(rem))};
}

UPoly gcd(const UPoly& a, const UPoly& b) {
  UPoly x = a, y = b;
  while (!y.is_zero()) {
    UPoly r = divmod(x, y).second;
    x = std::move(y);
    y = r.monic();
  }
  return x.monic();
}

std::vector<UPoly> squarefree_decomposition(const UPoly& f) {
  if (f.is_zero()) throw std::invalid_argument("squarefree decomposition of zero");
  std::vector<UPoly> out;
  if (f.degree() == 0) return out;
  UPoly fm = f.monic();
  UPoly d = fm.derivative();
  UPoly a = gcd(fm, d);
  UPoly b = divmod(fm, a).first;
  UPoly c = divmod(d, a).first;
  UPoly bd = b.derivative();
  // c - b'
  auto sub = [](const UPoly& x, const UPoly& y) {
    std::vector<Scalar> v(std::max(x.coeffs().size(), y.coeffs().size()), Scalar(0));
    for (std::size_t i = 0; i < x.coeffs().size(); ++i) v[i] += x.coeffs()[i];
    for (std::size_t i = 0; i < y.coeffs().size(); ++i) v[i] -= y.coeffs()[i];
    return UPoly(std::move(v));
  };
  UPoly dd = sub(c, bd);
  while (b.degree() > 0) {
    UPoly g = gcd(b, dd);
    out.push_back(g);
    b = divmod(b, g).first;
    c = divmod(dd, g).first;
    dd = sub(c, b.derivative());
  }
  while (!out.empty() && out.back().degree() == 0) out.pop_back();
  return out;
}

} // namespace ramify
