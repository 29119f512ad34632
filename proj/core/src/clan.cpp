#include "clans/clan.hpp"

#include <algorithm>
#include <map>
#include <sstream>
#include <stdexcept>

namespace clans {

namespace {

std::vector<Symbol> renumber(std::vector<Symbol> sym) {
  std::map<int, int> relabel;  // raw label -> canonical id
  std::map<int, int> count;
  int next = 1;
  for (auto& s : sym) {
    if (!s.is_pair()) continue;
    auto it = relabel.find(s.v);
    if (it == relabel.end()) it = relabel.emplace(s.v, next++).first;
    s.v = static_cast<int8_t>(it->second);
    count[s.v]++;
  }
  for (auto& [id, cnt] : count)
    if (cnt != 2)
      throw std::invalid_argument("clan: pair label occurs " +
                                  std::to_string(cnt) + " times");
  if (next - 1 > 127) throw std::invalid_argument("clan: too many pairs");
  return sym;
}

}  // namespace

Clan::Clan(std::vector<Symbol> symbols) : sym_(renumber(std::move(symbols))) {
  if (sym_.empty()) throw std::invalid_argument("clan: empty");
  int plus = 0, minus = 0;
  std::map<int, int> first;
  mate_.assign(sym_.size(), 0);
  for (int i = 1; i <= n(); ++i) {
    const Symbol& s = sym_[i - 1];
    if (s.is_plus()) ++plus;
    else if (s.is_minus()) ++minus;
    else {
      auto it = first.find(s.v);
      if (it == first.end()) {
        first[s.v] = i;
      } else {
        mate_[i - 1] = it->second;
        mate_[it->second - 1] = i;
        ++npairs_;
      }
    }
  }
  int twice_p = n() + plus - minus;
  if (twice_p % 2 != 0 || twice_p < 0 || twice_p > 2 * n())
    throw std::invalid_argument("clan: sign balance gives non-integral p,q");
  p_ = twice_p / 2;
}

namespace {

std::vector<Symbol> read_contiguous(const std::string& tok) {
  std::vector<Symbol> out;
  for (char ch : tok) {
    if (ch == '+') out.push_back({Symbol::kPlus});
    else if (ch == '-') out.push_back({Symbol::kMinus});
    else if (ch >= '1' && ch <= '9') out.push_back({static_cast<int8_t>(ch - '0')});
    else throw std::invalid_argument(std::string("clan: bad character '") + ch + "'");
  }
  return out;
}

bool is_integer_token(const std::string& tok) {
  if (tok.empty()) return false;
  return std::all_of(tok.begin(), tok.end(),
                     [](char c) { return c >= '0' && c <= '9'; });
}

}  // namespace

Clan Clan::parse(const std::string& text) {
  if (text.empty()) throw std::invalid_argument("clan: empty input");
  if (text.find(',') == std::string::npos) return Clan(read_contiguous(text));

  std::vector<std::string> toks;
  std::stringstream ss(text);
  std::string tok;
  while (std::getline(ss, tok, ',')) toks.push_back(tok);

  bool pure = std::all_of(toks.begin(), toks.end(), [](const std::string& t) {
    return t == "+" || t == "-" || is_integer_token(t);
  });

  std::vector<Symbol> sym;
  if (pure) {
    // Comma-separated single symbols; integer labels may exceed one digit.
    std::map<long, int> ids;
    int next = 1;
    for (const auto& t : toks) {
      if (t == "+") sym.push_back({Symbol::kPlus});
      else if (t == "-") sym.push_back({Symbol::kMinus});
      else {
        long raw = std::stol(t);
        auto it = ids.find(raw);
        if (it == ids.end()) {
          if (next > 127) throw std::invalid_argument("clan: too many pairs");
          it = ids.emplace(raw, next++).first;
        }
        sym.push_back({static_cast<int8_t>(it->second)});
      }
    }
  } else {
    // Mixed tokens: each one is a contiguous run; concatenate.
    for (const auto& t : toks) {
      auto part = read_contiguous(t);
      sym.insert(sym.end(), part.begin(), part.end());
    }
  }
  return Clan(std::move(sym));
}

std::string Clan::str() const {
  std::ostringstream os;
  if (npairs_ <= 9) {
    for (const Symbol& s : sym_) {
      if (s.is_plus()) os << '+';
      else if (s.is_minus()) os << '-';
      else os << static_cast<int>(s.v);
    }
  } else {
    for (int i = 0; i < n(); ++i) {
      if (i) os << ',';
      const Symbol& s = sym_[i];
      if (s.is_plus()) os << '+';
      else if (s.is_minus()) os << '-';
      else os << static_cast<int>(s.v);
    }
  }
  return os.str();
}

std::string canonical_string(const Clan& c) { return c.str(); }
Clan parse_clan(const std::string& text) { return Clan::parse(text); }

namespace {

void generate_rec(int n, int plus_left, int minus_left, int pos,
                  std::vector<Symbol>& cur, std::vector<int>& open,
                  int& next_id, std::vector<Clan>& out) {
  if (pos == n) {
    if (open.empty()) out.emplace_back(cur);
    return;
  }
  int remaining = n - pos;
  // Prune: every open pair still needs its closing symbol.
  if (static_cast<int>(open.size()) > remaining) return;
  if (plus_left > 0) {
    cur.push_back({Symbol::kPlus});
    --plus_left;
    generate_rec(n, plus_left, minus_left, pos + 1, cur, open, next_id, out);
    ++plus_left;
    cur.pop_back();
  }
  if (minus_left > 0) {
    cur.push_back({Symbol::kMinus});
    --minus_left;
    generate_rec(n, plus_left, minus_left, pos + 1, cur, open, next_id, out);
    ++minus_left;
    cur.pop_back();
  }
  // Close one of the open pairs (each choice is a distinct matching).
  for (size_t k = 0; k < open.size(); ++k) {
    int id = open[k];
    open.erase(open.begin() + k);
    cur.push_back({static_cast<int8_t>(id)});
    generate_rec(n, plus_left, minus_left, pos + 1, cur, open, next_id, out);
    cur.pop_back();
    open.insert(open.begin() + k, id);
  }
  // Open a new pair; it takes one unit from each sign budget.  Ids assigned
  // in first-occurrence order keep the enumeration duplicate-free.
  if (plus_left > 0 && minus_left > 0 &&
      static_cast<int>(open.size()) + 1 <= remaining - 1 && next_id <= 127) {
    int id = next_id++;
    open.push_back(id);
    cur.push_back({static_cast<int8_t>(id)});
    generate_rec(n, plus_left - 1, minus_left - 1, pos + 1, cur, open, next_id,
                 out);
    cur.pop_back();
    open.pop_back();
    --next_id;
  }
}

}  // namespace

std::vector<Clan> generate_clans(int p, int q) {
  if (p < 0 || q < 0 || p + q < 1)
    throw std::invalid_argument("generate_clans: need p,q >= 0 and p+q >= 1");
  std::vector<Clan> out;
  std::vector<Symbol> cur;
  std::vector<int> open;
  int next_id = 1;
  generate_rec(p + q, p, q, 0, cur, open, next_id, out);
  std::sort(out.begin(), out.end(), [](const Clan& a, const Clan& b) {
    int la = clan_length(a), lb = clan_length(b);
    if (la != lb) return la < lb;
    return a.str() < b.str();
  });
  return out;
}

long long clan_count(int p, int q) {
  int n = p + q;
  auto binom = [](int a, int b) -> long long {
    if (b < 0 || b > a) return 0;
    long long r = 1;
    for (int i = 1; i <= b; ++i) r = r * (a - b + i) / i;
    return r;
  };
  long long total = 0;
  for (int k = 0; 2 * k <= n; ++k) {
    long long dfact = 1;
    for (int m = 2 * k - 1; m >= 1; m -= 2) dfact *= m;
    total += binom(n, 2 * k) * dfact * binom(n - 2 * k, p - k);
  }
  return total;
}

int clan_length(const Clan& c) {
  int total = 0;
  for (int i = 1; i <= c.n(); ++i) {
    if (!c.is_first_occurrence(i)) continue;
    int j = c.mate(i);
    int crossings = 0;  // pairs (s,t) with s < i < t < j
    for (int t = i + 1; t < j; ++t)
      if (c.is_second_occurrence(t) && c.mate(t) < i) ++crossings;
    total += j - i - crossings;
  }
  return total;
}

namespace {

// Subsequence search: match pattern symbols left to right; a pattern pair's
// second endpoint is forced to the mate of whatever matched its first.
bool match_rec(const Clan& c, const Clan& pat, int ti, int ci,
               std::vector<int>& pair_target) {
  if (ti > pat.n()) return true;
  if (ci > c.n()) return false;
  int remaining = c.n() - ci + 1;
  if (pat.n() - ti + 1 > remaining) return false;

  const Symbol& t = pat.at(ti);
  if (t.is_sign()) {
    for (int j = ci; j <= c.n(); ++j)
      if (c.at(j) == t && match_rec(c, pat, ti + 1, j + 1, pair_target))
        return true;
    return false;
  }
  if (pat.is_second_occurrence(ti)) {
    int target = pair_target[t.v];
    if (target < ci) return false;
    return match_rec(c, pat, ti + 1, target + 1, pair_target);
  }
  // First occurrence: try each first endpoint of c at or after ci.
  for (int j = ci; j <= c.n(); ++j) {
    if (!c.is_first_occurrence(j)) continue;
    pair_target[t.v] = c.mate(j);
    if (match_rec(c, pat, ti + 1, j + 1, pair_target)) return true;
  }
  pair_target[t.v] = 0;
  return false;
}

}  // namespace

bool contains_pattern(const Clan& c, const Clan& pat) {
  if (pat.n() > c.n()) return false;
  std::vector<int> pair_target(pat.pairs() + 1, 0);
  return match_rec(c, pat, 1, 1, pair_target);
}

bool avoids_1212(const Clan& c) {
  for (int i = 1; i <= c.n(); ++i) {
    if (!c.is_first_occurrence(i)) continue;
    int j = c.mate(i);
    for (int k = i + 1; k < j; ++k)
      if (c.is_first_occurrence(k) && c.mate(k) > j) return false;
  }
  return true;
}

Clan negative(const Clan& c) {
  std::vector<Symbol> sym = c.symbols();
  for (Symbol& s : sym) {
    if (s.is_plus()) s.v = Symbol::kMinus;
    else if (s.is_minus()) s.v = Symbol::kPlus;
  }
  return Clan(std::move(sym));
}

FsPattern fs_pattern(const Clan& c) {
  FsPattern f;
  f.entries.reserve(c.n());
  for (int i = 1; i <= c.n(); ++i) {
    if (c.at(i).is_plus()) f.entries.push_back(FsEntry::Plus);
    else if (c.at(i).is_minus()) f.entries.push_back(FsEntry::Minus);
    else f.entries.push_back(c.is_first_occurrence(i) ? FsEntry::F : FsEntry::S);
  }
  return f;
}

std::string FsPattern::str() const {
  std::string s;
  for (FsEntry e : entries) {
    switch (e) {
      case FsEntry::Plus: s += '+'; break;
      case FsEntry::Minus: s += '-'; break;
      case FsEntry::F: s += 'F'; break;
      case FsEntry::S: s += 'S'; break;
    }
  }
  return s;
}

Clan clan_from_fs(const FsPattern& f) {
  std::vector<Symbol> sym;
  std::vector<int> open;  // stack of unmated ids
  int next = 1;
  for (FsEntry e : f.entries) {
    switch (e) {
      case FsEntry::Plus: sym.push_back({Symbol::kPlus}); break;
      case FsEntry::Minus: sym.push_back({Symbol::kMinus}); break;
      case FsEntry::F:
        if (next > 127) throw std::invalid_argument("fs: too many pairs");
        open.push_back(next);
        sym.push_back({static_cast<int8_t>(next)});
        ++next;
        break;
      case FsEntry::S:
        if (open.empty())
          throw std::invalid_argument("fs: S before any unmated F");
        sym.push_back({static_cast<int8_t>(open.back())});
        open.pop_back();
        break;
    }
  }
  if (!open.empty()) throw std::invalid_argument("fs: unbalanced F/S");
  return Clan(std::move(sym));
}

FsPattern parse_fs(const std::string& text) {
  FsPattern f;
  for (char ch : text) {
    switch (ch) {
      case '+': f.entries.push_back(FsEntry::Plus); break;
      case '-': f.entries.push_back(FsEntry::Minus); break;
      case 'F': f.entries.push_back(FsEntry::F); break;
      case 'S': f.entries.push_back(FsEntry::S); break;
      case ',': break;
      default: throw std::invalid_argument("fs: bad character");
    }
  }
  return f;
}

Permutation v_perm(const Clan& c) {
  std::vector<int> v;
  v.reserve(c.n());
  for (int i = 1; i <= c.n(); ++i)
    if (c.at(i).is_plus() || c.is_first_occurrence(i)) v.push_back(i);
  for (int i = 1; i <= c.n(); ++i)
    if (c.at(i).is_minus() || c.is_second_occurrence(i)) v.push_back(i);
  return Permutation(std::move(v));
}

Permutation u_perm(const Clan& c) {
  std::vector<int> v;
  v.reserve(c.n());
  for (int i = 1; i <= c.n(); ++i)
    if (c.at(i).is_plus() || c.is_second_occurrence(i)) v.push_back(i);
  for (int i = 1; i <= c.n(); ++i)
    if (c.at(i).is_minus() || c.is_first_occurrence(i)) v.push_back(i);
  return Permutation(std::move(v));
}

Permutation yamamoto_u(const Clan& c) {
  std::vector<int> v = v_perm(c).inverse().oneline();
  for (int i = 1; i <= c.n(); ++i) {
    int j = c.mate(i);
    if (j > i) std::swap(v[i - 1], v[j - 1]);
  }
  return Permutation(std::move(v));
}

}  // namespace clans
