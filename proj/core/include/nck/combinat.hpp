#pragma once

// Plane forests and their codes, canonical labellings, linear extensions,
// permutations, compositions, packed words and non-plane tree classes.

#include <compare>
#include <cstdint>
#include <optional>
#include <set>
#include <string>
#include <string_view>
#include <vector>

namespace nck {

// Digit string when every entry is <= 9, comma separated otherwise.
std::string format_sequence(const std::vector<int>& v);
// Accepts both encodings; an empty string is the empty sequence.
std::vector<int> parse_sequence(std::string_view text);

// A plane forest, stored by its Polish code (prefix order, arity of each node).
class Forest {
 public:
  Forest() = default;

  // Throws std::invalid_argument if the code is not a prefix traversal.
  static Forest from_code(std::vector<int> code);
  static Forest parse(std::string_view text);

  static Forest point() { return Forest({0}, true); }
  static Forest chain(int n);     // linear tree with n nodes
  static Forest corolla(int n);   // root with n-1 leaves
  static Forest points(int n);    // n isolated nodes
  static Forest graft(const Forest& f);  // B+(f)

  const std::vector<int>& code() const { return code_; }
  std::vector<int> reverse_code() const { return {code_.rbegin(), code_.rend()}; }
  int size() const { return static_cast<int>(code_.size()); }
  int roots() const;
  bool empty() const { return code_.empty(); }
  bool is_tree() const { return roots() == 1; }

  std::vector<Forest> trees() const;
  // For a tree B+(f), returns f.
  Forest children() const;
  Forest operator*(const Forest& o) const;

  std::string str() const { return format_sequence(code_); }

  // Graded order: size first, then lexicographic on the code.
  std::strong_ordering operator<=>(const Forest& o) const;
  bool operator==(const Forest& o) const = default;

 private:
  Forest(std::vector<int> code, bool) : code_(std::move(code)) {}
  std::vector<int> code_;
};

// All plane forests (or trees) with n nodes, lexicographic by Polish code.
const std::vector<Forest>& enumerate_forests(int n);
std::vector<Forest> enumerate_trees(int n);
long catalan(int n);

// Canonical postorder labelling: labels 1..n, every subtree is an interval
// with its maximum at the root. Index 0 is unused.
struct Labelled {
  int n = 0;
  std::vector<int> parent;                  // 0 for roots
  std::vector<std::vector<int>> children;   // in plane order (increasing labels)
  std::vector<int> roots;                   // in plane order
};

Labelled label(const Forest& f);
// Induced forest on the labels with keep[i] set; a kept node hangs under its
// nearest kept ancestor.
Forest restrict(const Labelled& l, const std::vector<bool>& keep);
// i <_F j iff j is a strict ancestor of i.
bool below(const Labelled& l, int i, int j);

// ---------------------------------------------------------------- permutations

// One-line notation of a permutation of 1..n.
using Permutation = std::vector<int>;

Permutation parse_permutation(std::string_view text);
bool is_permutation(const std::vector<int>& w);
Permutation identity_permutation(int n);
Permutation inverse(const Permutation& p);
std::set<int> descent_set(const Permutation& p);
// Standardization of a word (ties broken left to right).
Permutation standardize(const std::vector<int>& w);
// Value inversions {(a,b) : a<b, b appears before a}.
std::set<std::pair<int, int>> inversion_set(const Permutation& p);
bool contains_pattern_132(const Permutation& p);
std::vector<Permutation> all_permutations(int n);

// ---------------------------------------------------------------- compositions

class Composition {
 public:
  Composition() = default;
  explicit Composition(std::vector<int> parts);  // throws on nonpositive parts
  static Composition parse(std::string_view text);
  static Composition from_descent_set(const std::set<int>& d, int n);

  const std::vector<int>& parts() const { return parts_; }
  int weight() const;
  int length() const { return static_cast<int>(parts_.size()); }
  std::set<int> descent_set() const;
  int maj() const;

  Composition complement() const;  // descent set complemented in {1..n-1}
  Composition mirror() const;      // parts reversed
  Composition conjugate() const;   // mirror of the complement

  Composition operator+(const Composition& o) const;  // concatenation
  // Signs of positions 1..n: '-' at descents, '+' elsewhere.
  std::string sign_word() const;
  std::string str() const;  // comma separated

  std::strong_ordering operator<=>(const Composition& o) const;
  bool operator==(const Composition& o) const = default;

 private:
  std::vector<int> parts_;
};

// J is finer than (or equal to) I iff D(J) contains D(I).
bool finer(const Composition& j, const Composition& i);
std::vector<Composition> compositions(int n);
Composition descent_composition(const Permutation& p);

// ---------------------------------------------------------------- packed words

using PackedWord = std::vector<int>;

bool is_packed(const std::vector<int>& w);
std::vector<PackedWord> packed_words(int n);
// Packed words obtained by merging adjacent blocks of the set composition of u.
std::vector<PackedWord> coarsenings(const PackedWord& u);

// ---------------------------------------------------------------- non-plane trees

struct NonPlaneClass {
  std::string canonical;  // nested parentheses, children sorted
  long aut_order = 1;
  bool operator==(const NonPlaneClass&) const = default;
};

NonPlaneClass non_plane_class(const Forest& tree);
// Brute force: number of child permutations at all nodes preserving the shape.
long aut_order_bruteforce(const Forest& tree);

// ---------------------------------------------------------------- linear extensions

// All words listing labels so that descendants come before ancestors.
std::vector<Permutation> linear_extensions(const Forest& f);
// Greedy: repeatedly take the largest available label.
Permutation max_linear_extension(const Forest& f);
// Reconstruction through the binary search tree of the mirror word.
std::optional<Forest> forest_from_max_extension(const Permutation& sigma);

}  // namespace nck
