#include "clans/capacity_tree.hpp"

#include <algorithm>
#include <stdexcept>

#include "clans/path_diagram.hpp"

namespace clans {

int CapacityTree::add_node(int parent) {
  nodes.push_back(Node{parent, {}, 0, -1});
  int id = static_cast<int>(nodes.size()) - 1;
  if (parent >= 0) nodes[parent].kids.push_back(id);
  return id;
}

std::vector<int> CapacityTree::leaves() const {
  std::vector<int> out;
  for (size_t i = 1; i < nodes.size(); ++i)
    if (nodes[i].kids.empty()) out.push_back(static_cast<int>(i));
  return out;
}

namespace {

struct MatchedPair {
  int open = 0, close = 0;  // 1-based step indices
  int parent = -1;          // index into pairs, -1 for top level
};

// Stack matching of the word with '(' = Up.  Leftover ')' steps all precede
// leftover '(' steps.
void match_word(const LatticePath& path, std::vector<MatchedPair>& pairs,
                std::vector<int>& leftover_close, std::vector<int>& leftover_open) {
  std::vector<int> stack;          // open step indices
  std::vector<int> open_pair(path.size() + 1, -1);
  for (int i = 1; i <= path.size(); ++i) {
    if (path.step(i) == Step::Up) {
      stack.push_back(i);
    } else if (!stack.empty()) {
      int o = stack.back();
      stack.pop_back();
      pairs.push_back({o, i, -1});
      open_pair[o] = static_cast<int>(pairs.size()) - 1;
    } else {
      leftover_close.push_back(i);
    }
  }
  leftover_open = stack;
  // Parent = nearest enclosing matched pair.
  std::vector<int> enclosing;
  size_t next_pair = 0;
  std::vector<std::pair<int, int>> by_open;
  for (size_t k = 0; k < pairs.size(); ++k) by_open.emplace_back(pairs[k].open, k);
  std::sort(by_open.begin(), by_open.end());
  std::vector<int> stack2;
  for (auto [open, k] : by_open) {
    while (!stack2.empty() && pairs[stack2.back()].close < open) stack2.pop_back();
    pairs[k].parent = stack2.empty() ? -1 : stack2.back();
    stack2.push_back(static_cast<int>(k));
  }
  (void)next_pair;
  (void)enclosing;
}

// Assemble the tree for a word read with "()" matching:
//   - matched pairs nest by word position;
//   - each top-level pair X hangs below a stem of one vertex per leftover
//     symbol between X and the gap separating leftover ')' from leftover '(';
//   - a shared trunk of |#leftover ')' - #leftover '('| vertices sits above
//     all the stems whenever there is at least one matched pair.
CapacityTree assemble(const LatticePath& path) {
  CapacityTree t;
  t.nodes.push_back(CapacityTree::Node{});  // root

  std::vector<MatchedPair> pairs;
  std::vector<int> lc, lo;
  match_word(path, pairs, lc, lo);
  if (pairs.empty()) return t;

  int trunk_len = static_cast<int>(lc.size() > lo.size() ? lc.size() - lo.size()
                                                         : lo.size() - lc.size());
  int anchor = 0;
  for (int k = 0; k < trunk_len; ++k) anchor = t.add_node(anchor);

  // Build pair nodes in word order so parents exist before children.
  std::vector<int> node_of(pairs.size(), -1);
  std::vector<size_t> order(pairs.size());
  for (size_t k = 0; k < pairs.size(); ++k) order[k] = k;
  std::sort(order.begin(), order.end(),
            [&](size_t a, size_t b) { return pairs[a].open < pairs[b].open; });
  for (size_t k : order) {
    const MatchedPair& mp = pairs[k];
    int attach;
    if (mp.parent >= 0) {
      attach = node_of[mp.parent];
    } else {
      int stem = 0;
      for (int r : lc) if (r > mp.close) ++stem;
      for (int l : lo) if (l < mp.open) ++stem;
      attach = anchor;
      for (int s = 0; s < stem; ++s) attach = t.add_node(attach);
    }
    int id = t.add_node(attach);
    if (mp.close == mp.open + 1) t.nodes[id].corner_step = mp.open;
    node_of[k] = id;
  }
  return t;
}

}  // namespace

CapacityTree build_capacity_tree(const LatticePath& reference, Matching mode) {
  if (mode == Matching::Inner) return assemble(reference);
  // ")(" matching: reverse the word, which turns ")(" pairs into "()" pairs,
  // then map corner steps back.
  LatticePath rev = reference.reversed();
  CapacityTree t = assemble(rev);
  int n = reference.size();
  for (auto& node : t.nodes)
    if (node.corner_step > 0) node.corner_step = n - node.corner_step;
  return t;
}

CapacityTree build_capacity_tree(const LatticePath& reference, Matching mode,
                                 const LatticePath& comparison) {
  CapacityTree t = build_capacity_tree(reference, mode);
  for (auto& node : t.nodes) {
    if (!node.kids.empty() || node.parent < 0) continue;
    int i = node.corner_step;
    Corner c;
    auto [x, y] = reference.point(i);
    c.x = x;
    c.y = y;
    c.boundary = mode == Matching::Inner ? Boundary::Bottom : Boundary::Top;
    node.capacity = corner_capacity(c, comparison);
  }
  return t;
}

QPoly count_labellings(const CapacityTree& t) {
  long long maxcap = 0;
  bool has_leaf = false;
  for (size_t i = 1; i < t.nodes.size(); ++i)
    if (t.nodes[i].kids.empty()) {
      has_leaf = true;
      if (t.nodes[i].capacity < 0)
        throw std::logic_error("count_labellings: leaf without capacity");
      maxcap = std::max(maxcap, t.nodes[i].capacity);
    }
  if (!has_leaf) return QPoly::one();
  int m = static_cast<int>(maxcap);

  // H[v][j]: generating poly of v's subtree when the edge into v is labelled
  // j; processed children-first (children always have larger indices).
  std::vector<std::vector<QPoly>> H(t.nodes.size(),
                                    std::vector<QPoly>(m + 1));
  for (size_t v = t.nodes.size(); v-- > 1;) {
    const auto& node = t.nodes[v];
    int cap = node.kids.empty() ? static_cast<int>(node.capacity) : m;
    for (int j = 0; j <= cap; ++j) {
      QPoly h = QPoly::monomial(j);
      for (int k : node.kids) {
        QPoly sum;  // labels weakly increase: child edge >= j
        for (int jj = j; jj <= m; ++jj) sum += H[k][jj];
        h = h * sum;
      }
      H[v][j] = h;
    }
  }
  QPoly out = QPoly::one();
  for (int k : t.nodes[0].kids) {
    QPoly sum;
    for (int j = 0; j <= m; ++j) sum += H[k][j];
    out = out * sum;
  }
  return out;
}

QPoly ls_kl(const Permutation& x, const Permutation& w) {
  if (x.n() != w.n()) throw std::invalid_argument("ls_kl: size mismatch");
  if (!is_cograssmannian(w))
    throw std::invalid_argument("ls_kl: w is not cograssmannian");
  if (!bruhat_leq(x, w)) throw std::invalid_argument("ls_kl: x not below w");
  int p = cograssmannian_ascent(w);
  LatticePath pw = lattice_path(w, p), px = lattice_path(x, p);
  return count_labellings(build_capacity_tree(pw, Matching::Inner, px));
}

}  // namespace clans
