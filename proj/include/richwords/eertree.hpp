#pragma once

#include <cstdint>
#include <map>
#include <vector>

#include "richwords/word.hpp"

namespace richwords {

struct PushResult {
  bool created_new_node;                  // the extended word gained a new palindromic factor
  std::int32_t longest_pal_suffix_length; // length of the longest palindromic suffix after the push
};

/// Incremental palindromic tree: one node per distinct nonempty palindromic
/// factor of the appended word, amortized O(1) per push.
///
/// Node 0 is the imaginary root (length -1), node 1 the empty root (length 0).
/// An edge labelled `a` from node P leads to the palindrome a.P.a, so every
/// proper node has length = parent.length + 2 and a suffix link to its longest
/// proper palindromic suffix.
///
/// A single instance is single-writer; distinct instances are independent and
/// may live on different threads.
class Eertree {
 public:
  using NodeId = std::int32_t;
  static constexpr NodeId kImaginaryRoot = 0;
  static constexpr NodeId kEmptyRoot = 1;
  // node 0 is never an edge target, so 0 doubles as "no edge"
  static constexpr NodeId kNoEdge = 0;
  // census alphabets are tiny; dense per-node edge rows up to this size
  static constexpr unsigned kDenseAlphabetLimit = 4;

  struct Node {
    std::int32_t length;
    NodeId suffix_link;
    std::int32_t first_end_position;  // 1-based position where this palindrome first ends; 0 for roots
    std::uint64_t occurrence_count;   // valid after finalize_occurrences()
  };

  explicit Eertree(unsigned alphabet_size);

  /// Appends one symbol. Reports whether the longest palindromic suffix of the
  /// extended word is a brand-new factor (this flag is the richness signal).
  PushResult push(Symbol s);

  /// True iff push(s) would create a node; does not modify the tree.
  bool would_create(Symbol s) const;

  void reset();
  void assign(WordView w);  // reset() + push every symbol of w

  /// Number of distinct nonempty palindromic factors of the current word.
  std::size_t distinct_palindrome_count() const { return nodes_.size() - 2; }

  std::int32_t longest_pal_suffix_length() const {
    const std::int32_t len = nodes_[last_suffix_].length;
    return len > 0 ? len : 0;
  }
  NodeId last_suffix_node() const { return last_suffix_; }

  /// Occurrence counts per node id, aggregated over suffix links. Idempotent
  /// until the next push; root entries are bookkeeping values, not counts.
  const std::vector<std::uint64_t>& finalize_occurrences();

  /// Visits the lengths of all palindromic suffixes of the current word,
  /// longest first (the suffix-link chain from last_suffix).
  template <typename Fn>
  void for_each_palindromic_suffix(Fn&& fn) const {
    for (NodeId v = last_suffix_; nodes_[v].length > 0; v = nodes_[v].suffix_link) {
      fn(nodes_[v].length);
    }
  }

  std::size_t node_count() const { return nodes_.size(); }
  const Node& node(NodeId id) const { return nodes_[static_cast<std::size_t>(id)]; }
  NodeId edge(NodeId id, Symbol s) const;
  unsigned alphabet_size() const { return alphabet_size_; }
  WordView word() const { return word_; }

 private:
  // deepest palindromic suffix reachable from v (via suffix links) that can be
  // extended by s at position pos; word_[pos] must already equal s
  NodeId extend_target(NodeId v, std::size_t pos, Symbol s) const;
  void set_edge(NodeId id, Symbol s, NodeId target);
  void append_node_storage();

  unsigned alphabet_size_;
  std::vector<Node> nodes_;
  std::vector<NodeId> dense_edges_;                     // node-major, q <= kDenseAlphabetLimit
  std::vector<std::map<Symbol, NodeId>> sparse_edges_;  // used when q > kDenseAlphabetLimit
  Word word_;
  NodeId last_suffix_ = kEmptyRoot;
  std::vector<std::uint64_t> suffix_hits_;  // pushes on which the node was the longest pal suffix
  std::vector<std::uint64_t> occ_;
  bool occ_valid_ = false;
};

}  // namespace richwords
