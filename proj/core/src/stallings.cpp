#include "nongen/stallings.hpp"

#include <algorithm>
#include <deque>

namespace nongen {

namespace {

int code_of_slot(int slot) {
  int idx = slot / 2 + 1;
  return (slot % 2) ? -idx : idx;
}

// Mutable graph used only during construction: union-find over vertices plus
// per-vertex transition slots.  Slot entries may go stale after merges; every
// read normalizes through find().
struct Builder {
  int slots_per_vertex;
  std::vector<int> parent;
  std::vector<std::vector<int>> slots;
  std::deque<std::pair<int, int>> merges;

  explicit Builder(int k2) : slots_per_vertex(k2) { new_vertex(); }

  int new_vertex() {
    int id = static_cast<int>(parent.size());
    parent.push_back(id);
    slots.emplace_back(slots_per_vertex, -1);
    return id;
  }

  int find(int v) {
    while (parent[v] != v) {
      parent[v] = parent[parent[v]];
      v = parent[v];
    }
    return v;
  }

  void add_edge(int u, int v, int code) {
    u = find(u);
    v = find(v);
    int s = letter_rank(code);
    int r = letter_rank(-code);
    int existing = slots[u][s];
    if (existing != -1) {
      existing = find(existing);
      slots[u][s] = existing;
      // An edge with this label already leaves u; identify the targets.
      if (existing != v) merges.emplace_back(existing, v);
      return;
    }
    int reverse = slots[v][r];
    if (reverse != -1) {
      reverse = find(reverse);
      slots[v][r] = reverse;
      if (reverse != u) {
        merges.emplace_back(reverse, u);
        return;
      }
    }
    slots[u][s] = v;
    slots[v][r] = u;
  }

  // Folds until no vertex has two equally labeled edges.  The smaller id
  // always survives a merge, so the basepoint 0 is never displaced.
  void process_merges() {
    while (!merges.empty()) {
      auto [a, b] = merges.front();
      merges.pop_front();
      a = find(a);
      b = find(b);
      if (a == b) continue;
      int keep = std::min(a, b);
      int gone = std::max(a, b);
      parent[gone] = keep;
      std::vector<int> moved = std::move(slots[gone]);
      slots[gone].assign(slots_per_vertex, -1);
      for (int s = 0; s < slots_per_vertex; ++s)
        if (moved[s] != -1) add_edge(keep, find(moved[s]), code_of_slot(s));
    }
  }
};

}  // namespace

CoreGraph CoreGraph::build(const GroupDescriptor& desc,
                           const std::vector<Word>& generators) {
  int k2 = static_cast<int>(desc.rank()) * 2;
  Builder b(k2);
  for (const Word& w : generators) {
    require_same_group(desc, w.descriptor());
    if (w.is_identity()) continue;
    int prev = 0;
    for (std::size_t i = 0; i < w.length(); ++i) {
      int next = (i + 1 == w.length()) ? 0 : b.new_vertex();
      b.add_edge(prev, next, w.code(i));
      b.process_merges();
      prev = next;
    }
  }

  // Flatten to root vertices with fully normalized slot entries.
  std::size_t n = b.parent.size();
  std::vector<char> alive(n, 0);
  for (std::size_t v = 0; v < n; ++v) alive[v] = (b.find(static_cast<int>(v)) ==
                                                  static_cast<int>(v));
  for (std::size_t v = 0; v < n; ++v) {
    if (!alive[v]) continue;
    for (int s = 0; s < k2; ++s)
      if (b.slots[v][s] != -1) b.slots[v][s] = b.find(b.slots[v][s]);
  }

  // Prune dangling non-basepoint vertices (degree <= 1) until stable.
  auto degree = [&](int v) {
    int d = 0;
    for (int s = 0; s < k2; ++s)
      if (b.slots[v][s] != -1) ++d;
    return d;
  };
  std::deque<int> dangling;
  for (std::size_t v = 1; v < n; ++v)
    if (alive[v] && degree(static_cast<int>(v)) <= 1)
      dangling.push_back(static_cast<int>(v));
  while (!dangling.empty()) {
    int v = dangling.front();
    dangling.pop_front();
    if (!alive[v] || degree(v) > 1) continue;
    alive[v] = 0;
    for (int s = 0; s < k2; ++s) {
      int t = b.slots[v][s];
      if (t == -1) continue;
      b.slots[v][s] = -1;
      b.slots[t][letter_rank(-code_of_slot(s))] = -1;
      if (t != 0 && alive[t] && degree(t) <= 1) dangling.push_back(t);
    }
  }

  // Canonical renumbering by breadth-first discovery from the basepoint.
  std::vector<int> order;
  std::vector<int> new_id(n, -1);
  order.push_back(0);
  new_id[0] = 0;
  for (std::size_t head = 0; head < order.size(); ++head) {
    int v = order[head];
    for (int s = 0; s < k2; ++s) {
      int t = b.slots[v][s];
      if (t != -1 && new_id[t] == -1) {
        new_id[t] = static_cast<int>(order.size());
        order.push_back(t);
      }
    }
  }

  CoreGraph g(desc);
  g.vertices_ = order.size();
  g.trans_.assign(g.vertices_ * g.slots_, -1);
  for (std::size_t i = 0; i < order.size(); ++i)
    for (int s = 0; s < k2; ++s) {
      int t = b.slots[order[i]][s];
      if (t != -1) g.trans_[i * g.slots_ + s] = new_id[t];
    }
  return g;
}

std::size_t CoreGraph::edge_count() const {
  std::size_t count = 0;
  for (std::size_t v = 0; v < vertices_; ++v)
    for (std::size_t s = 0; s < slots_; s += 2)
      if (trans_[v * slots_ + s] != -1) ++count;
  return count;
}

unsigned CoreGraph::rank() const {
  return static_cast<unsigned>(edge_count() - vertices_ + 1);
}

bool CoreGraph::contains(const Word& w) const {
  require_same_group(desc_, w.descriptor());
  int v = 0;
  for (std::size_t i = 0; i < w.length(); ++i) {
    v = step(v, w.code(i));
    if (v == -1) return false;
  }
  return v == 0;
}

bool CoreGraph::contains_pw(const PowerWord& p) const {
  require_same_group(desc_, p.descriptor());
  std::size_t n = vertices_;
  int v = 0;
  for (const auto& f : p.factors()) {
    // Partial transition map of the base word over all vertices.
    std::vector<int> base_map(n);
    for (std::size_t u = 0; u < n; ++u) {
      int x = static_cast<int>(u);
      for (std::size_t i = 0; i < f.base.length() && x != -1; ++i)
        x = step(x, f.base.code(i));
      base_map[u] = x;
    }
    // Exponentiation by squaring of the partial map.
    std::vector<int> acc(n);
    for (std::size_t u = 0; u < n; ++u) acc[u] = static_cast<int>(u);
    std::vector<int> sq = std::move(base_map);
    BigInt e = f.exponent;
    auto compose = [n](const std::vector<int>& outer,
                       const std::vector<int>& inner) {
      std::vector<int> out(n);
      for (std::size_t u = 0; u < n; ++u)
        out[u] = inner[u] == -1 ? -1 : outer[inner[u]];
      return out;
    };
    while (e > 0) {
      if (boost::multiprecision::bit_test(e, 0)) acc = compose(sq, acc);
      e >>= 1;
      if (e > 0) sq = compose(sq, sq);
    }
    v = acc[v];
    if (v == -1) return false;
  }
  return v == 0;
}

std::optional<Word> CoreGraph::shortest_nontrivial() const {
  // Breadth-first search over (vertex, incoming slot) states, expanding in
  // letter order, so the first loop closed at the basepoint is the shortlex
  // least nontrivial element.
  struct State {
    int vertex;
    int last_slot;  // slot of the letter just read, -1 at the start
    int parent;     // index into the visit list
  };
  std::vector<State> visits;
  std::vector<char> seen(vertices_ * slots_, 0);
  visits.push_back({0, -1, -1});
  auto spell = [&](int at, int final_slot) {
    std::vector<std::int8_t> codes;
    codes.push_back(static_cast<std::int8_t>(code_of_slot(final_slot)));
    while (at > 0) {
      codes.push_back(static_cast<std::int8_t>(code_of_slot(
          visits[at].last_slot)));
      at = visits[at].parent;
    }
    std::reverse(codes.begin(), codes.end());
    return Word::from_codes(desc_, codes);
  };
  for (std::size_t head = 0; head < visits.size(); ++head) {
    State st = visits[head];
    int banned = st.last_slot == -1
                     ? -1
                     : letter_rank(-code_of_slot(st.last_slot));
    for (int s = 0; s < static_cast<int>(slots_); ++s) {
      if (s == banned) continue;
      int t = trans_[static_cast<std::size_t>(st.vertex) * slots_ + s];
      if (t == -1) continue;
      if (t == 0) return spell(static_cast<int>(head), s);
      std::size_t key = static_cast<std::size_t>(t) * slots_ + s;
      if (seen[key]) continue;
      seen[key] = 1;
      visits.push_back({t, s, static_cast<int>(head)});
    }
  }
  return std::nullopt;
}

std::string CoreGraph::dump() const {
  std::string out = "basepoint 0\n";
  for (std::size_t v = 0; v < vertices_; ++v)
    for (std::size_t s = 0; s < slots_; s += 2) {
      int t = trans_[v * slots_ + s];
      if (t == -1) continue;
      out += std::to_string(v);
      out.push_back(' ');
      out += std::to_string(t);
      out.push_back(' ');
      out.push_back(desc_.letter(static_cast<unsigned>(s / 2)));
      out.push_back('\n');
    }
  return out;
}

}  // namespace nongen
