#include "clans/poly.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

namespace clans {

QPoly::QPoly(long long constant) {
  if (constant != 0) c_.push_back(constant);
}

QPoly::QPoly(std::vector<long long> ascending) : c_(std::move(ascending)) {
  trim();
}

QPoly QPoly::monomial(int degree, long long coeff) {
  QPoly p;
  if (coeff == 0) return p;
  p.c_.assign(degree + 1, 0);
  p.c_[degree] = coeff;
  return p;
}

long long QPoly::coeff(int k) const {
  if (k < 0 || k >= static_cast<int>(c_.size())) return 0;
  return c_[k];
}

long long QPoly::eval_at_one() const {
  long long s = 0;
  for (long long x : c_) s += x;
  return s;
}

bool QPoly::nonnegative() const {
  return std::all_of(c_.begin(), c_.end(), [](long long x) { return x >= 0; });
}

QPoly& QPoly::operator+=(const QPoly& o) {
  if (c_.size() < o.c_.size()) c_.resize(o.c_.size(), 0);
  for (size_t i = 0; i < o.c_.size(); ++i) c_[i] += o.c_[i];
  trim();
  return *this;
}

QPoly& QPoly::operator-=(const QPoly& o) {
  if (c_.size() < o.c_.size()) c_.resize(o.c_.size(), 0);
  for (size_t i = 0; i < o.c_.size(); ++i) c_[i] -= o.c_[i];
  trim();
  return *this;
}

QPoly QPoly::operator*(const QPoly& o) const {
  if (is_zero() || o.is_zero()) return QPoly();
  std::vector<long long> r(c_.size() + o.c_.size() - 1, 0);
  for (size_t i = 0; i < c_.size(); ++i)
    for (size_t j = 0; j < o.c_.size(); ++j) r[i + j] += c_[i] * o.c_[j];
  return QPoly(std::move(r));
}

void QPoly::trim() {
  while (!c_.empty() && c_.back() == 0) c_.pop_back();
}

std::string QPoly::str() const {
  if (is_zero()) return "0";
  std::ostringstream os;
  bool first = true;
  for (size_t k = 0; k < c_.size(); ++k) {
    long long a = c_[k];
    if (a == 0) continue;
    if (!first) os << (a > 0 ? " + " : " - ");
    else if (a < 0) os << "-";
    long long m = a > 0 ? a : -a;
    if (k == 0) {
      os << m;
    } else {
      if (m != 1) os << m;
      os << "q";
      if (k > 1) os << "^" << k;
    }
    first = false;
  }
  return os.str();
}

VLaurent VLaurent::monomial(int exp, long long coeff) {
  VLaurent r;
  if (coeff == 0) return r;
  r.off_ = exp;
  r.c_.push_back(coeff);
  return r;
}

VLaurent VLaurent::from_qpoly(const QPoly& p, int shift) {
  VLaurent r;
  if (p.is_zero()) return r;
  r.off_ = shift;
  r.c_.assign(2 * p.degree() + 1, 0);
  for (int k = 0; k <= p.degree(); ++k) r.c_[2 * k] = p.coeff(k);
  r.trim();
  return r;
}

long long VLaurent::coeff(int exp) const {
  int i = exp - off_;
  if (i < 0 || i >= static_cast<int>(c_.size())) return 0;
  return c_[i];
}

VLaurent VLaurent::bar() const {
  VLaurent r;
  if (is_zero()) return r;
  r.off_ = -max_exp();
  r.c_.assign(c_.rbegin(), c_.rend());
  return r;
}

VLaurent& VLaurent::operator+=(const VLaurent& o) { return add_scaled(o, 1); }
VLaurent& VLaurent::operator-=(const VLaurent& o) { return add_scaled(o, -1); }

VLaurent& VLaurent::add_scaled(const VLaurent& o, long long k) {
  if (o.is_zero() || k == 0) return *this;
  if (is_zero()) {
    off_ = o.off_;
    c_.assign(o.c_.size(), 0);
  }
  int lo = std::min(off_, o.off_);
  int hi = std::max(max_exp(), o.max_exp());
  if (lo < off_ || hi > max_exp()) {
    std::vector<long long> n(hi - lo + 1, 0);
    for (size_t i = 0; i < c_.size(); ++i) n[off_ - lo + i] = c_[i];
    c_ = std::move(n);
    off_ = lo;
  }
  for (size_t i = 0; i < o.c_.size(); ++i) c_[o.off_ - off_ + i] += k * o.c_[i];
  trim();
  return *this;
}

VLaurent VLaurent::operator*(const VLaurent& o) const {
  VLaurent r;
  if (is_zero() || o.is_zero()) return r;
  r.off_ = off_ + o.off_;
  r.c_.assign(c_.size() + o.c_.size() - 1, 0);
  for (size_t i = 0; i < c_.size(); ++i)
    for (size_t j = 0; j < o.c_.size(); ++j) r.c_[i + j] += c_[i] * o.c_[j];
  r.trim();
  return r;
}

void VLaurent::trim() {
  size_t a = 0, b = c_.size();
  while (b > a && c_[b - 1] == 0) --b;
  while (a < b && c_[a] == 0) ++a;
  if (a == b) {
    c_.clear();
    off_ = 0;
    return;
  }
  if (a > 0 || b < c_.size()) {
    c_ = std::vector<long long>(c_.begin() + a, c_.begin() + b);
    off_ += static_cast<int>(a);
  }
}

QPoly VLaurent::to_qpoly(int shift, bool require_nonneg) const {
  if (is_zero()) return QPoly();
  if (min_exp() + shift < 0)
    throw std::runtime_error("laurent-to-poly: exponent below zero");
  std::vector<long long> out;
  for (int e = min_exp(); e <= max_exp(); ++e) {
    long long a = coeff(e);
    if (a == 0) continue;
    int d = e + shift;
    if (d % 2 != 0)
      throw std::runtime_error("laurent-to-poly: odd exponent " +
                               std::to_string(d));
    if (require_nonneg && a < 0)
      throw std::runtime_error("laurent-to-poly: negative coefficient");
    if (static_cast<int>(out.size()) <= d / 2) out.resize(d / 2 + 1, 0);
    out[d / 2] = a;
  }
  return QPoly(std::move(out));
}

std::string VLaurent::str() const {
  if (is_zero()) return "0";
  std::ostringstream os;
  bool first = true;
  for (int e = min_exp(); e <= max_exp(); ++e) {
    long long a = coeff(e);
    if (a == 0) continue;
    if (!first) os << (a > 0 ? " + " : " - ");
    else if (a < 0) os << "-";
    long long m = a > 0 ? a : -a;
    if (e == 0) {
      os << m;
    } else {
      if (m != 1) os << m;
      os << "v";
      if (e != 1) os << "^" << e;
    }
    first = false;
  }
  return os.str();
}

}  // namespace clans
