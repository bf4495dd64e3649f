#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "nongen/power_word.hpp"
#include "nongen/word.hpp"

namespace nongen {

// Folded core graph of a finitely generated subgroup H of a free group.
// Reduced loops at the basepoint (vertex 0) spell exactly the elements of H.
// Construction folds the bouquet of generator loops, prunes dangling
// non-basepoint vertices and renumbers by breadth-first discovery (letter
// order a < A < b < B < ...), so equal subgroups yield identical graphs.
class CoreGraph {
 public:
  static CoreGraph build(const GroupDescriptor& desc,
                         const std::vector<Word>& generators);

  const GroupDescriptor& descriptor() const { return desc_; }
  std::size_t vertex_count() const { return vertices_; }
  std::size_t edge_count() const;  // positively labeled edges
  unsigned rank() const;           // edges - vertices + 1

  // Follows the edge labeled `code` (signed letter) from `vertex`; -1 when
  // no such edge exists.
  int step(int vertex, int code) const {
    return trans_[static_cast<std::size_t>(vertex) * slots_ +
                  static_cast<std::size_t>(letter_rank(code))];
  }

  bool contains(const Word& w) const;
  bool contains_pw(const PowerWord& p) const;

  // Shortest nontrivial reduced loop at the basepoint, shortlex tie-break;
  // nullopt for the trivial subgroup.
  std::optional<Word> shortest_nontrivial() const;

  bool operator==(const CoreGraph& o) const {
    return desc_ == o.desc_ && trans_ == o.trans_;
  }

  // Debug/test format: line 0 `basepoint 0`, then one `source target letter`
  // line per positive edge in canonical order.
  std::string dump() const;

 private:
  explicit CoreGraph(GroupDescriptor desc)
      : desc_(std::move(desc)), slots_(desc_.rank() * 2) {}

  GroupDescriptor desc_;
  std::size_t slots_ = 0;     // 2 * rank, transition entries per vertex
  std::size_t vertices_ = 1;  // canonical graphs always keep the basepoint
  std::vector<int> trans_;    // vertices_ x slots_, -1 = undefined
};

// Spec-level operation names.
inline CoreGraph build(const GroupDescriptor& desc,
                       const std::vector<Word>& generators) {
  return CoreGraph::build(desc, generators);
}
inline bool contains(const CoreGraph& g, const Word& w) {
  return g.contains(w);
}
inline bool contains_pw(const CoreGraph& g, const PowerWord& p) {
  return g.contains_pw(p);
}
inline unsigned rank(const CoreGraph& g) { return g.rank(); }
inline std::optional<Word> shortest_nontrivial(const CoreGraph& g) {
  return g.shortest_nontrivial();
}
inline bool equal_subgroups(const CoreGraph& a, const CoreGraph& b) {
  require_same_group(a.descriptor(), b.descriptor());
  return a == b;
}

}  // namespace nongen
