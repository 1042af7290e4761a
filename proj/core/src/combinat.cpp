#include "nck/combinat.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <mutex>
#include <numeric>
#include <stdexcept>

namespace nck {

std::string format_sequence(const std::vector<int>& v) {
  bool compact = std::all_of(v.begin(), v.end(), [](int x) { return x >= 0 && x <= 9; });
  std::string s;
  for (size_t i = 0; i < v.size(); ++i) {
    if (!compact && i > 0) s += ",";
    s += std::to_string(v[i]);
  }
  return s;
}

std::vector<int> parse_sequence(std::string_view text) {
  std::vector<int> out;
  if (text.empty()) return out;
  bool comma = text.find(',') != std::string_view::npos;
  if (!comma) {
    for (char c : text) {
      if (c < '0' || c > '9') throw std::invalid_argument("bad sequence: " + std::string(text));
      out.push_back(c - '0');
    }
    return out;
  }
  size_t pos = 0;
  while (pos <= text.size()) {
    size_t next = text.find(',', pos);
    if (next == std::string_view::npos) next = text.size();
    auto tok = text.substr(pos, next - pos);
    if (tok.empty()) throw std::invalid_argument("bad sequence: " + std::string(text));
    long v = 0;
    for (char c : tok) {
      if (c < '0' || c > '9') throw std::invalid_argument("bad sequence: " + std::string(text));
      v = 10 * v + (c - '0');
      if (v > 1000000) throw std::invalid_argument("entry too large: " + std::string(text));
    }
    out.push_back(static_cast<int>(v));
    pos = next + 1;
  }
  return out;
}

// ---------------------------------------------------------------- Forest

Forest Forest::from_code(std::vector<int> code) {
  long need = 0;
  for (size_t i = 0; i < code.size(); ++i) {
    if (code[i] < 0) throw std::invalid_argument("negative arity in forest code");
    if (need == 0) need = 1;
    need += code[i] - 1;
  }
  if (need != 0) throw std::invalid_argument("forest code ends with " + std::to_string(need) + " missing subtrees");
  return Forest(std::move(code), true);
}

Forest Forest::parse(std::string_view text) { return from_code(parse_sequence(text)); }

Forest Forest::chain(int n) {
  std::vector<int> c(n, 1);
  if (n > 0) c.back() = 0;
  return Forest(std::move(c), true);
}

Forest Forest::corolla(int n) {
  std::vector<int> c(n, 0);
  if (n > 0) c[0] = n - 1;
  return Forest(std::move(c), true);
}

Forest Forest::points(int n) { return Forest(std::vector<int>(n, 0), true); }

Forest Forest::graft(const Forest& f) {
  std::vector<int> c;
  c.reserve(f.code_.size() + 1);
  c.push_back(f.roots());
  c.insert(c.end(), f.code_.begin(), f.code_.end());
  return Forest(std::move(c), true);
}

int Forest::roots() const {
  int r = 0;
  long need = 0;
  for (int c : code_) {
    if (need == 0) {
      ++r;
      need = 1;
    }
    need += c - 1;
  }
  return r;
}

std::vector<Forest> Forest::trees() const {
  std::vector<Forest> out;
  long need = 0;
  size_t start = 0;
  for (size_t i = 0; i < code_.size(); ++i) {
    if (need == 0) {
      start = i;
      need = 1;
    }
    need += code_[i] - 1;
    if (need == 0) out.push_back(Forest({code_.begin() + start, code_.begin() + i + 1}, true));
  }
  return out;
}

Forest Forest::children() const {
  if (!is_tree()) throw std::invalid_argument("children() of a non-tree forest");
  return Forest({code_.begin() + 1, code_.end()}, true);
}

Forest Forest::operator*(const Forest& o) const {
  std::vector<int> c = code_;
  c.insert(c.end(), o.code_.begin(), o.code_.end());
  return Forest(std::move(c), true);
}

std::strong_ordering Forest::operator<=>(const Forest& o) const {
  if (auto c = code_.size() <=> o.code_.size(); c != 0) return c;
  return code_ <=> o.code_;
}

namespace {

void enumerate_codes(int n, int pos, long open, std::vector<int>& code, std::vector<Forest>& out) {
  if (pos == n) {
    if (open == 0) out.push_back(Forest::from_code(code));
    return;
  }
  long rem = n - pos - 1;
  for (int c = 0; c < n; ++c) {
    long next = (open == 0 ? 0 : open - 1) + c;
    if (next > rem) break;
    code[pos] = c;
    enumerate_codes(n, pos + 1, next, code, out);
  }
}

}  // namespace

const std::vector<Forest>& enumerate_forests(int n) {
  if (n < 0) throw std::invalid_argument("negative size");
  static std::mutex mu;
  static std::map<int, std::vector<Forest>> cache;
  std::lock_guard<std::mutex> lock(mu);
  auto it = cache.find(n);
  if (it != cache.end()) return it->second;
  std::vector<Forest> out;
  std::vector<int> code(n);
  enumerate_codes(n, 0, 0, code, out);
  return cache.emplace(n, std::move(out)).first->second;
}

std::vector<Forest> enumerate_trees(int n) {
  std::vector<Forest> out;
  for (const auto& f : enumerate_forests(n))
    if (f.is_tree()) out.push_back(f);
  return out;
}

long catalan(int n) {
  long c = 1;
  for (int i = 0; i < n; ++i) c = c * 2 * (2 * i + 1) / (i + 2);
  return c;
}

// ---------------------------------------------------------------- labelling

Labelled label(const Forest& f) {
  Labelled l;
  l.n = f.size();
  l.parent.assign(l.n + 1, 0);
  l.children.assign(l.n + 1, {});
  const auto& code = f.code();
  size_t pos = 0;
  int next = 0;
  std::function<int()> tree = [&]() -> int {
    int arity = code[pos++];
    std::vector<int> kids;
    for (int k = 0; k < arity; ++k) kids.push_back(tree());
    int me = ++next;
    for (int k : kids) l.parent[k] = me;
    l.children[me] = std::move(kids);
    return me;
  };
  while (pos < code.size()) l.roots.push_back(tree());
  return l;
}

Forest restrict(const Labelled& l, const std::vector<bool>& keep) {
  std::vector<std::vector<int>> kids(l.n + 1);
  std::vector<int> roots;
  for (int i = 1; i <= l.n; ++i) {
    if (!keep[i]) continue;
    int p = l.parent[i];
    while (p != 0 && !keep[p]) p = l.parent[p];
    if (p == 0)
      roots.push_back(i);
    else
      kids[p].push_back(i);
  }
  std::vector<int> code;
  std::function<void(int)> visit = [&](int v) {
    code.push_back(static_cast<int>(kids[v].size()));
    for (int c : kids[v]) visit(c);
  };
  for (int r : roots) visit(r);
  return Forest::from_code(std::move(code));
}

bool below(const Labelled& l, int i, int j) {
  for (int p = l.parent[i]; p != 0; p = l.parent[p])
    if (p == j) return true;
  return false;
}

// ---------------------------------------------------------------- permutations

Permutation parse_permutation(std::string_view text) {
  auto w = parse_sequence(text);
  if (!is_permutation(w)) throw std::invalid_argument("not a permutation: " + std::string(text));
  return w;
}

bool is_permutation(const std::vector<int>& w) {
  std::vector<bool> seen(w.size() + 1, false);
  for (int x : w) {
    if (x < 1 || x > static_cast<int>(w.size()) || seen[x]) return false;
    seen[x] = true;
  }
  return true;
}

Permutation identity_permutation(int n) {
  Permutation p(n);
  std::iota(p.begin(), p.end(), 1);
  return p;
}

Permutation inverse(const Permutation& p) {
  Permutation r(p.size());
  for (size_t i = 0; i < p.size(); ++i) r[p[i] - 1] = static_cast<int>(i) + 1;
  return r;
}

std::set<int> descent_set(const Permutation& p) {
  std::set<int> d;
  for (size_t i = 0; i + 1 < p.size(); ++i)
    if (p[i] > p[i + 1]) d.insert(static_cast<int>(i) + 1);
  return d;
}

Permutation standardize(const std::vector<int>& w) {
  std::vector<int> idx(w.size());
  std::iota(idx.begin(), idx.end(), 0);
  std::stable_sort(idx.begin(), idx.end(), [&](int a, int b) { return w[a] < w[b]; });
  Permutation r(w.size());
  for (size_t k = 0; k < idx.size(); ++k) r[idx[k]] = static_cast<int>(k) + 1;
  return r;
}

std::set<std::pair<int, int>> inversion_set(const Permutation& p) {
  std::set<std::pair<int, int>> s;
  for (size_t i = 0; i < p.size(); ++i)
    for (size_t j = i + 1; j < p.size(); ++j)
      if (p[i] > p[j]) s.insert({p[j], p[i]});
  return s;
}

bool contains_pattern_132(const Permutation& p) {
  size_t n = p.size();
  for (size_t i = 0; i < n; ++i)
    for (size_t j = i + 1; j < n; ++j)
      for (size_t k = j + 1; k < n; ++k)
        if (p[i] < p[k] && p[k] < p[j]) return true;
  return false;
}

std::vector<Permutation> all_permutations(int n) {
  std::vector<Permutation> out;
  Permutation p = identity_permutation(n);
  do out.push_back(p);
  while (std::next_permutation(p.begin(), p.end()));
  return out;
}

// ---------------------------------------------------------------- compositions

Composition::Composition(std::vector<int> parts) : parts_(std::move(parts)) {
  for (int x : parts_)
    if (x <= 0) throw std::invalid_argument("composition parts must be positive");
}

Composition Composition::parse(std::string_view text) { return Composition(parse_sequence(text)); }

Composition Composition::from_descent_set(const std::set<int>& d, int n) {
  std::vector<int> parts;
  int prev = 0;
  for (int x : d) {
    if (x <= prev || x >= n) throw std::invalid_argument("descent set out of range");
    parts.push_back(x - prev);
    prev = x;
  }
  if (n > 0) parts.push_back(n - prev);
  return Composition(std::move(parts));
}

int Composition::weight() const { return std::accumulate(parts_.begin(), parts_.end(), 0); }

std::set<int> Composition::descent_set() const {
  std::set<int> d;
  int s = 0;
  for (size_t i = 0; i + 1 < parts_.size(); ++i) d.insert(s += parts_[i]);
  return d;
}

int Composition::maj() const {
  int m = 0;
  for (int d : descent_set()) m += d;
  return m;
}

Composition Composition::complement() const {
  int n = weight();
  auto d = descent_set();
  std::set<int> c;
  for (int i = 1; i < n; ++i)
    if (!d.count(i)) c.insert(i);
  return from_descent_set(c, n);
}

Composition Composition::mirror() const { return Composition({parts_.rbegin(), parts_.rend()}); }

Composition Composition::conjugate() const { return complement().mirror(); }

Composition Composition::operator+(const Composition& o) const {
  std::vector<int> p = parts_;
  p.insert(p.end(), o.parts_.begin(), o.parts_.end());
  return Composition(std::move(p));
}

std::string Composition::sign_word() const {
  auto d = descent_set();
  std::string s;
  for (int k = 1; k <= weight(); ++k) s += d.count(k) ? '-' : '+';
  return s;
}

std::string Composition::str() const {
  std::string s;
  for (size_t i = 0; i < parts_.size(); ++i) {
    if (i) s += ",";
    s += std::to_string(parts_[i]);
  }
  return s;
}

std::strong_ordering Composition::operator<=>(const Composition& o) const {
  if (auto c = weight() <=> o.weight(); c != 0) return c;
  return parts_ <=> o.parts_;
}

bool finer(const Composition& j, const Composition& i) {
  if (j.weight() != i.weight()) return false;
  auto dj = j.descent_set(), di = i.descent_set();
  return std::includes(dj.begin(), dj.end(), di.begin(), di.end());
}

std::vector<Composition> compositions(int n) {
  std::vector<Composition> out;
  if (n == 0) return {Composition()};
  for (unsigned mask = 0; mask < (1u << (n - 1)); ++mask) {
    std::set<int> d;
    for (int i = 1; i < n; ++i)
      if (mask & (1u << (i - 1))) d.insert(i);
    out.push_back(Composition::from_descent_set(d, n));
  }
  std::sort(out.begin(), out.end());
  return out;
}

Composition descent_composition(const Permutation& p) {
  return Composition::from_descent_set(descent_set(p), static_cast<int>(p.size()));
}

// ---------------------------------------------------------------- packed words

bool is_packed(const std::vector<int>& w) {
  if (w.empty()) return true;
  int m = *std::max_element(w.begin(), w.end());
  std::vector<bool> seen(m + 1, false);
  for (int x : w) {
    if (x < 1) return false;
    seen[x] = true;
  }
  for (int k = 1; k <= m; ++k)
    if (!seen[k]) return false;
  return true;
}

std::vector<PackedWord> packed_words(int n) {
  std::vector<PackedWord> out;
  std::vector<int> w(n, 1);
  if (n == 0) return {PackedWord()};
  while (true) {
    if (is_packed(w)) out.push_back(w);
    int i = n - 1;
    while (i >= 0 && w[i] == n) w[i--] = 1;
    if (i < 0) break;
    ++w[i];
  }
  return out;
}

std::vector<PackedWord> coarsenings(const PackedWord& u) {
  int m = u.empty() ? 0 : *std::max_element(u.begin(), u.end());
  std::vector<PackedWord> out;
  if (m == 0) return {u};
  for (unsigned mask = 0; mask < (1u << (m - 1)); ++mask) {
    // bit k set: merge block k+1 into block k+2
    std::vector<int> group(m + 1);
    group[1] = 1;
    for (int k = 2; k <= m; ++k) group[k] = group[k - 1] + ((mask & (1u << (k - 2))) ? 0 : 1);
    PackedWord v(u.size());
    for (size_t i = 0; i < u.size(); ++i) v[i] = group[u[i]];
    out.push_back(std::move(v));
  }
  std::sort(out.begin(), out.end());
  return out;
}

// ---------------------------------------------------------------- non-plane trees

namespace {

NonPlaneClass classify(const Labelled& l, int v) {
  std::vector<NonPlaneClass> kids;
  for (int c : l.children[v]) kids.push_back(classify(l, c));
  std::sort(kids.begin(), kids.end(),
            [](const NonPlaneClass& a, const NonPlaneClass& b) { return a.canonical < b.canonical; });
  NonPlaneClass r;
  r.canonical = "(";
  for (size_t i = 0; i < kids.size(); ++i) {
    r.canonical += kids[i].canonical;
    r.aut_order *= kids[i].aut_order;
  }
  r.canonical += ")";
  for (size_t i = 0; i < kids.size();) {
    size_t j = i;
    while (j < kids.size() && kids[j].canonical == kids[i].canonical) ++j;
    for (size_t k = 2; k <= j - i; ++k) r.aut_order *= static_cast<long>(k);
    i = j;
  }
  return r;
}

// Number of shape-preserving bijections between the subtrees at u (in l) and v (in m).
long isomorphisms(const Labelled& l, int u, const Labelled& m, int v) {
  const auto& a = l.children[u];
  const auto& b = m.children[v];
  if (a.size() != b.size()) return 0;
  std::vector<int> perm(b.size());
  std::iota(perm.begin(), perm.end(), 0);
  long total = 0;
  do {
    long prod = 1;
    for (size_t i = 0; i < a.size() && prod != 0; ++i) prod *= isomorphisms(l, a[i], m, b[perm[i]]);
    total += prod;
  } while (std::next_permutation(perm.begin(), perm.end()));
  return total;
}

}  // namespace

NonPlaneClass non_plane_class(const Forest& tree) {
  if (!tree.is_tree()) throw std::invalid_argument("non_plane_class expects a tree");
  Labelled l = label(tree);
  return classify(l, l.roots[0]);
}

long aut_order_bruteforce(const Forest& tree) {
  if (!tree.is_tree()) throw std::invalid_argument("aut_order_bruteforce expects a tree");
  Labelled l = label(tree);
  return isomorphisms(l, l.roots[0], l, l.roots[0]);
}

// ---------------------------------------------------------------- linear extensions

std::vector<Permutation> linear_extensions(const Forest& f) {
  Labelled l = label(f);
  std::vector<int> pending(l.n + 1);
  for (int i = 1; i <= l.n; ++i) pending[i] = static_cast<int>(l.children[i].size());
  std::vector<bool> used(l.n + 1, false);
  std::vector<Permutation> out;
  Permutation word;
  std::function<void()> rec = [&]() {
    if (static_cast<int>(word.size()) == l.n) {
      out.push_back(word);
      return;
    }
    for (int v = 1; v <= l.n; ++v) {
      if (used[v] || pending[v] != 0) continue;
      used[v] = true;
      word.push_back(v);
      if (l.parent[v]) --pending[l.parent[v]];
      rec();
      if (l.parent[v]) ++pending[l.parent[v]];
      word.pop_back();
      used[v] = false;
    }
  };
  rec();
  return out;
}

Permutation max_linear_extension(const Forest& f) {
  Labelled l = label(f);
  std::vector<int> pending(l.n + 1);
  std::set<int> avail;
  for (int i = 1; i <= l.n; ++i) {
    pending[i] = static_cast<int>(l.children[i].size());
    if (pending[i] == 0) avail.insert(i);
  }
  Permutation w;
  while (!avail.empty()) {
    int v = *avail.rbegin();
    avail.erase(v);
    w.push_back(v);
    int p = l.parent[v];
    if (p && --pending[p] == 0) avail.insert(p);
  }
  return w;
}

std::optional<Forest> forest_from_max_extension(const Permutation& sigma) {
  if (!is_permutation(sigma)) return std::nullopt;
  int n = static_cast<int>(sigma.size());
  if (n == 0) return Forest();
  std::vector<int> left(n + 1, 0), right(n + 1, 0);
  int root = sigma.back();
  for (int k = n - 2; k >= 0; --k) {
    int x = sigma[k], v = root;
    while (true) {
      int& slot = x < v ? left[v] : right[v];
      if (slot == 0) {
        slot = x;
        break;
      }
      v = slot;
    }
  }
  // left child = first child, right child = next sibling
  std::vector<int> code;
  std::function<void(int)> visit = [&](int v) {
    int arity = 0;
    for (int c = left[v]; c; c = right[c]) ++arity;
    code.push_back(arity);
    for (int c = left[v]; c; c = right[c]) visit(c);
  };
  for (int r = root; r; r = right[r]) visit(r);
  Forest f = Forest::from_code(std::move(code));
  if (max_linear_extension(f) != sigma) return std::nullopt;
  return f;
}

}  // namespace nck
