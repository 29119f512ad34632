#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace clans {

/// One-line-notation element of S_n, values 1..n.
class Permutation {
 public:
  Permutation() = default;
  explicit Permutation(std::vector<int> oneline);

  static Permutation identity(int n);
  /// Parses contiguous digits ("4231") or comma-separated one-line notation
  /// ("10,9,...").  Contiguous form is only valid when n <= 9.
  static Permutation parse(const std::string& text);

  int n() const { return static_cast<int>(v_.size()); }
  int operator()(int i) const { return v_[i - 1]; }  // 1-based
  const std::vector<int>& oneline() const { return v_; }

  Permutation inverse() const;
  std::string str() const;

  bool operator==(const Permutation& o) const = default;
  auto operator<=>(const Permutation& o) const = default;

  /// Packed 4-bit-per-entry code; valid for n <= 16.
  uint64_t code() const;

 private:
  std::vector<int> v_;
};

int coxeter_length(const Permutation& w);
Permutation compose(const Permutation& a, const Permutation& b);  // a after b
Permutation w0(int n);
/// Longest element of S_p x S_q inside S_{p+q}: reverses 1..p and p+1..p+q.
Permutation w0K(int p, int q);

/// At most one descent, located at position p if present.
bool is_grassmannian(const Permutation& w, int p);
/// At most one ascent.
bool is_cograssmannian(const Permutation& w);
/// Position of the unique ascent of a cograssmannian w, or fallback for the
/// strictly decreasing permutation (which has none).
int cograssmannian_ascent(const Permutation& w);

/// Rank-matrix dominance test for the (strong) Bruhat order.
bool bruhat_leq(const Permutation& x, const Permutation& y);

enum class Step : uint8_t { Up, Right };

/// Monotone lattice path from the southwest corner of a p x q rectangle,
/// x-axis counting Right steps and y-axis counting Up steps.
class LatticePath {
 public:
  LatticePath() = default;
  explicit LatticePath(std::vector<Step> steps);

  int size() const { return static_cast<int>(steps_.size()); }
  int ups() const { return p_; }
  int rights() const { return static_cast<int>(steps_.size()) - p_; }
  Step step(int i) const { return steps_[i - 1]; }  // 1-based
  const std::vector<Step>& steps() const { return steps_; }

  /// Heights by diagonal: height(d) = number of Up steps among the first d.
  int height(int d) const { return h_[d]; }
  const std::vector<int>& heights() const { return h_; }

  /// Lattice point after the first d steps, as (x, y) = (rights, ups).
  std::pair<int, int> point(int d) const { return {d - h_[d], h_[d]}; }
  bool passes_through(int x, int y) const;

  /// "(" for Up, ")" for Right.
  std::string word() const;
  LatticePath reversed() const;

  bool operator==(const LatticePath& o) const = default;

 private:
  std::vector<Step> steps_;
  std::vector<int> h_;  // prefix Up counts, size n+1
  int p_ = 0;
};

/// Path of w in the p x (n-p) rectangle: step i is Up iff w^{-1}(i) <= p.
LatticePath lattice_path(const Permutation& w, int p);

/// Path reconstructed from prefix Up counts.
LatticePath path_from_heights(const std::vector<int>& heights);

}  // namespace clans
