#include "richwords/eertree.hpp"

#include <stdexcept>

namespace richwords {

Eertree::Eertree(unsigned alphabet_size) : alphabet_size_(alphabet_size) {
  if (alphabet_size == 0) throw std::invalid_argument("alphabet_size must be at least 1");
  reset();
}

void Eertree::reset() {
  nodes_.clear();
  dense_edges_.clear();
  sparse_edges_.clear();
  word_.clear();
  suffix_hits_.clear();
  occ_.clear();
  occ_valid_ = false;
  // imaginary root (length -1) and empty root (length 0); both link to node 0
  nodes_.push_back(Node{-1, kImaginaryRoot, 0, 0});
  append_node_storage();
  nodes_.push_back(Node{0, kImaginaryRoot, 0, 0});
  append_node_storage();
  last_suffix_ = kEmptyRoot;
}

void Eertree::append_node_storage() {
  if (alphabet_size_ <= kDenseAlphabetLimit) {
    dense_edges_.resize(dense_edges_.size() + alphabet_size_, kNoEdge);
  } else {
    sparse_edges_.emplace_back();
  }
  suffix_hits_.push_back(0);
}

Eertree::NodeId Eertree::edge(NodeId id, Symbol s) const {
  if (alphabet_size_ <= kDenseAlphabetLimit) {
    return dense_edges_[static_cast<std::size_t>(id) * alphabet_size_ + s];
  }
  const auto& m = sparse_edges_[static_cast<std::size_t>(id)];
  const auto it = m.find(s);
  return it == m.end() ? kNoEdge : it->second;
}

void Eertree::set_edge(NodeId id, Symbol s, NodeId target) {
  if (alphabet_size_ <= kDenseAlphabetLimit) {
    dense_edges_[static_cast<std::size_t>(id) * alphabet_size_ + s] = target;
  } else {
    sparse_edges_[static_cast<std::size_t>(id)][s] = target;
  }
}

Eertree::NodeId Eertree::extend_target(NodeId v, std::size_t pos, Symbol s) const {
  for (;;) {
    const std::int64_t i = static_cast<std::int64_t>(pos) - nodes_[v].length - 1;
    // at the imaginary root i == pos, which holds the just-appended s
    if (i >= 0 && word_[static_cast<std::size_t>(i)] == s) return v;
    v = nodes_[v].suffix_link;
  }
}

PushResult Eertree::push(Symbol s) {
  if (s >= alphabet_size_) throw std::invalid_argument("symbol outside alphabet");
  word_.push_back(s);
  const std::size_t pos = word_.size() - 1;
  const NodeId base = extend_target(last_suffix_, pos, s);
  NodeId target = edge(base, s);
  const bool created = (target == kNoEdge);
  if (created) {
    target = static_cast<NodeId>(nodes_.size());
    Node nd;
    nd.length = nodes_[base].length + 2;
    nd.first_end_position = static_cast<std::int32_t>(pos + 1);
    nd.occurrence_count = 0;
    nd.suffix_link = nd.length == 1
                         ? kEmptyRoot
                         : edge(extend_target(nodes_[base].suffix_link, pos, s), s);
    nodes_.push_back(nd);
    append_node_storage();
    set_edge(base, s, target);
  }
  last_suffix_ = target;
  ++suffix_hits_[static_cast<std::size_t>(target)];
  occ_valid_ = false;
  return PushResult{created, nodes_[static_cast<std::size_t>(target)].length};
}

bool Eertree::would_create(Symbol s) const {
  if (s >= alphabet_size_) throw std::invalid_argument("symbol outside alphabet");
  const auto pos = static_cast<std::int64_t>(word_.size());  // imagined index of s
  NodeId v = last_suffix_;
  for (;;) {
    const std::int64_t i = pos - nodes_[v].length - 1;
    if (i == pos) break;  // imaginary root: the single letter s always extends
    if (i >= 0 && word_[static_cast<std::size_t>(i)] == s) break;
    v = nodes_[v].suffix_link;
  }
  return edge(v, s) == kNoEdge;
}

void Eertree::assign(WordView w) {
  reset();
  for (Symbol s : w) push(s);
}

const std::vector<std::uint64_t>& Eertree::finalize_occurrences() {
  if (occ_valid_) return occ_;
  occ_ = suffix_hits_;
  // nodes are created after their suffix-link targets, so one reverse sweep
  // propagates counts to every shorter palindromic suffix
  for (std::size_t v = nodes_.size(); v-- > 2;) {
    occ_[static_cast<std::size_t>(nodes_[v].suffix_link)] += occ_[v];
    nodes_[v].occurrence_count = occ_[v];
  }
  occ_valid_ = true;
  return occ_;
}

}  // namespace richwords
