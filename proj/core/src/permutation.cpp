#include "clans/permutation.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

namespace clans {

Permutation::Permutation(std::vector<int> oneline) : v_(std::move(oneline)) {
  std::vector<bool> seen(v_.size() + 1, false);
  for (int x : v_) {
    if (x < 1 || x > static_cast<int>(v_.size()) || seen[x])
      throw std::invalid_argument("not a permutation of 1..n");
    seen[x] = true;
  }
}

Permutation Permutation::identity(int n) {
  std::vector<int> v(n);
  for (int i = 0; i < n; ++i) v[i] = i + 1;
  return Permutation(std::move(v));
}

Permutation Permutation::parse(const std::string& text) {
  if (text.empty()) throw std::invalid_argument("empty permutation");
  std::vector<int> v;
  if (text.find(',') != std::string::npos) {
    std::stringstream ss(text);
    std::string tok;
    while (std::getline(ss, tok, ',')) {
      if (tok.empty()) throw std::invalid_argument("empty token in permutation");
      size_t pos = 0;
      int x = std::stoi(tok, &pos);
      if (pos != tok.size()) throw std::invalid_argument("bad token: " + tok);
      v.push_back(x);
    }
  } else {
    for (char ch : text) {
      if (ch < '1' || ch > '9')
        throw std::invalid_argument("bad permutation character");
      v.push_back(ch - '0');
    }
  }
  return Permutation(std::move(v));
}

Permutation Permutation::inverse() const {
  std::vector<int> r(v_.size());
  for (size_t i = 0; i < v_.size(); ++i) r[v_[i] - 1] = static_cast<int>(i) + 1;
  return Permutation(std::move(r));
}

std::string Permutation::str() const {
  std::ostringstream os;
  if (n() <= 9) {
    for (int x : v_) os << x;
  } else {
    for (size_t i = 0; i < v_.size(); ++i) {
      if (i) os << ',';
      os << v_[i];
    }
  }
  return os.str();
}

uint64_t Permutation::code() const {
  uint64_t c = 0;
  for (size_t i = 0; i < v_.size(); ++i)
    c |= static_cast<uint64_t>(v_[i] - 1) << (4 * i);
  return c;
}

int coxeter_length(const Permutation& w) {
  int inv = 0;
  for (int i = 1; i <= w.n(); ++i)
    for (int j = i + 1; j <= w.n(); ++j)
      if (w(i) > w(j)) ++inv;
  return inv;
}

Permutation compose(const Permutation& a, const Permutation& b) {
  if (a.n() != b.n()) throw std::invalid_argument("compose: size mismatch");
  std::vector<int> r(a.n());
  for (int i = 1; i <= a.n(); ++i) r[i - 1] = a(b(i));
  return Permutation(std::move(r));
}

Permutation w0(int n) {
  std::vector<int> v(n);
  for (int i = 0; i < n; ++i) v[i] = n - i;
  return Permutation(std::move(v));
}

Permutation w0K(int p, int q) {
  std::vector<int> v(p + q);
  for (int i = 0; i < p; ++i) v[i] = p - i;
  for (int i = 0; i < q; ++i) v[p + i] = p + q - i;
  return Permutation(std::move(v));
}

bool is_grassmannian(const Permutation& w, int p) {
  for (int i = 1; i < w.n(); ++i)
    if (w(i) > w(i + 1) && i != p) return false;
  return true;
}

bool is_cograssmannian(const Permutation& w) {
  int ascents = 0;
  for (int i = 1; i < w.n(); ++i)
    if (w(i) < w(i + 1)) ++ascents;
  return ascents <= 1;
}

int cograssmannian_ascent(const Permutation& w) {
  for (int i = 1; i < w.n(); ++i)
    if (w(i) < w(i + 1)) return i;
  return w.n();  // strictly decreasing: no corner either way
}

bool bruhat_leq(const Permutation& x, const Permutation& y) {
  if (x.n() != y.n()) throw std::invalid_argument("bruhat_leq: size mismatch");
  int n = x.n();
  // x <= y iff every upper-left rank of x dominates that of y.
  std::vector<int> rx(n + 1, 0), ry(n + 1, 0);
  for (int i = 1; i <= n; ++i) {
    for (int j = x(i); j <= n; ++j) rx[j]++;
    for (int j = y(i); j <= n; ++j) ry[j]++;
    for (int j = 1; j <= n; ++j)
      if (rx[j] < ry[j]) return false;
  }
  return true;
}

LatticePath::LatticePath(std::vector<Step> steps) : steps_(std::move(steps)) {
  h_.resize(steps_.size() + 1);
  h_[0] = 0;
  for (size_t i = 0; i < steps_.size(); ++i)
    h_[i + 1] = h_[i] + (steps_[i] == Step::Up ? 1 : 0);
  p_ = h_.back();
}

bool LatticePath::passes_through(int x, int y) const {
  int d = x + y;
  if (d < 0 || d > size()) return false;
  return h_[d] == y;
}

std::string LatticePath::word() const {
  std::string s;
  s.reserve(steps_.size());
  for (Step st : steps_) s += (st == Step::Up ? '(' : ')');
  return s;
}

LatticePath LatticePath::reversed() const {
  std::vector<Step> r(steps_.rbegin(), steps_.rend());
  return LatticePath(std::move(r));
}

LatticePath lattice_path(const Permutation& w, int p) {
  if (p < 0 || p > w.n()) throw std::invalid_argument("lattice_path: bad p");
  Permutation wi = w.inverse();
  std::vector<Step> steps(w.n());
  for (int i = 1; i <= w.n(); ++i)
    steps[i - 1] = wi(i) <= p ? Step::Up : Step::Right;
  return LatticePath(std::move(steps));
}

LatticePath path_from_heights(const std::vector<int>& heights) {
  std::vector<Step> steps;
  steps.reserve(heights.size() - 1);
  for (size_t d = 1; d < heights.size(); ++d) {
    int diff = heights[d] - heights[d - 1];
    if (diff != 0 && diff != 1)
      throw std::invalid_argument("path_from_heights: bad increments");
    steps.push_back(diff ? Step::Up : Step::Right);
  }
  return LatticePath(std::move(steps));
}

}  // namespace clans
