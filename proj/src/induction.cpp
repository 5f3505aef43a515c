#include "rauzy/induction.hpp"

#include <algorithm>
#include <deque>
#include <sstream>

namespace rauzy {

RauzyWord parse_word(const std::string& text) {
  RauzyWord w;
  size_t i = 0;
  while (i < text.size()) {
    char c = text[i];
    if (isspace(static_cast<unsigned char>(c))) {
      ++i;
      continue;
    }
    Side s;
    if (c == 't' || c == 'T') s = Side::Top;
    else if (c == 'b' || c == 'B') s = Side::Bottom;
    else throw domain_error(std::string("bad move letter '") + c + "' in word: " + text);
    ++i;
    if (i < text.size() && text[i] == '^') ++i;
    long rep = 0;
    while (i < text.size() && isdigit(static_cast<unsigned char>(text[i]))) {
      rep = rep * 10 + (text[i] - '0');
      ++i;
    }
    if (rep == 0) rep = 1;
    for (long k = 0; k < rep; ++k) w.push_back(s);
  }
  return w;
}

std::string word_str(const RauzyWord& w) {
  std::ostringstream os;
  size_t i = 0;
  bool first = true;
  while (i < w.size()) {
    size_t j = i;
    while (j < w.size() && w[j] == w[i]) ++j;
    if (!first) os << ' ';
    os << side_char(w[i]);
    if (j - i > 1) os << (j - i);
    first = false;
    i = j;
  }
  return os.str();
}

std::pair<int, int> winner_loser(const GP& pi, Side side) {
  int w = side == Side::Top ? pi.last_top() : pi.last_bottom();
  int l = side == Side::Top ? pi.last_bottom() : pi.last_top();
  if (w == l)
    throw domain_error("last letters coincide (reducible permutation): " + pi.str());
  return {w, l};
}

GP rauzy_move(const GP& pi, Side side) {
  return rauzy_move_detail(pi, side).next;
}

MoveDetail rauzy_move_detail(const GP& pi, Side side) {
  auto [w, l] = winner_loser(pi, side);
  std::vector<int> top = pi.top(), bottom = pi.bottom();
  std::vector<int>& winner_row = side == Side::Top ? top : bottom;
  std::vector<int>& loser_row = side == Side::Top ? bottom : top;
  size_t lrow = loser_row.size();
  bool w_is_flip = pi.letter_type(w) != LetterType::Translation;

  // Within-row index maps, combined into linear positions afterwards.
  std::vector<long> win_map(winner_row.size()), lose_map(lrow);
  long inserted_in_row = -1;
  if (!w_is_flip) {
    // Loser re-inserted immediately after the winner's other-row occurrence.
    size_t j = 0;
    while (j < lrow && loser_row[j] != w) ++j;
    if (j + 1 >= lrow) throw internal_error("degenerate insertion index");
    for (size_t i = 0; i < lrow; ++i) lose_map[i] = i <= j ? i : (i + 1 == lrow ? -1 : i + 1);
    for (size_t i = 0; i < winner_row.size(); ++i) win_map[i] = i;
    inserted_in_row = j + 1;
    loser_row.pop_back();
    loser_row.insert(loser_row.begin() + j + 1, l);
  } else {
    // Winner is a flip letter: loser moves into the winner's row, just
    // before the winner's other occurrence; row lengths change by one.
    size_t j = 0;
    while (j + 1 < winner_row.size() && winner_row[j] != w) ++j;
    if (j + 1 >= winner_row.size()) throw internal_error("degenerate insertion index");
    for (size_t i = 0; i < winner_row.size(); ++i) win_map[i] = i < j ? i : i + 1;
    for (size_t i = 0; i < lrow; ++i) lose_map[i] = i + 1 == lrow ? -1 : i;
    inserted_in_row = j;
    loser_row.pop_back();
    winner_row.insert(winner_row.begin() + j, l);
  }

  MoveDetail md;
  md.next = GP(std::move(top), std::move(bottom), pi.names());
  size_t new_ell = md.next.ell();
  md.pos_map.assign(pi.positions(), -1);
  // Winner row keeps its kind (top stays top); recombine linear offsets.
  bool winner_is_top = side == Side::Top;
  size_t old_win_off = winner_is_top ? 0 : pi.ell();
  size_t old_lose_off = winner_is_top ? pi.ell() : 0;
  size_t new_win_off = winner_is_top ? 0 : new_ell;
  size_t new_lose_off = winner_is_top ? new_ell : 0;
  for (size_t i = 0; i < win_map.size(); ++i)
    md.pos_map[old_win_off + i] = new_win_off + win_map[i];
  for (size_t i = 0; i < lose_map.size(); ++i)
    md.pos_map[old_lose_off + i] = lose_map[i] < 0 ? -1 : new_lose_off + lose_map[i];
  md.removed_pos = old_lose_off + lrow - 1;
  md.inserted_pos = (w_is_flip ? new_win_off : new_lose_off) + inserted_in_row;
  return md;
}

std::optional<GP> backward_move(const GP& pi, Side side) {
  std::vector<int> top = pi.top(), bottom = pi.bottom();
  std::vector<int>& winner_row = side == Side::Top ? top : bottom;
  std::vector<int>& loser_row = side == Side::Top ? bottom : top;
  if (winner_row.empty()) return std::nullopt;
  int w = winner_row.back();
  LetterType wt = pi.letter_type(w);
  bool same_row_other = false;
  {
    auto [p1, p2] = pi.occurrences(w);
    size_t last_pos = side == Side::Top ? pi.ell() - 1 : pi.positions() - 1;
    size_t other = p1 == last_pos ? p2 : p1;
    if (p1 != last_pos && p2 != last_pos) return std::nullopt;  // w not at row end twice? impossible
    same_row_other = pi.is_top_position(other) == (side == Side::Top);
  }
  std::optional<GP> candidate;
  try {
    if (!same_row_other && wt == LetterType::Translation) {
      // Forward move inserted the loser right after w's other-row occurrence.
      size_t j = 0;
      while (j < loser_row.size() && loser_row[j] != w) ++j;
      if (j + 1 >= loser_row.size()) return std::nullopt;
      int l = loser_row[j + 1];
      loser_row.erase(loser_row.begin() + j + 1);
      loser_row.push_back(l);
      candidate = GP(std::move(top), std::move(bottom), pi.names());
    } else if (same_row_other) {
      // Forward move inserted the loser just before w's other occurrence.
      size_t t = 0;
      while (t + 1 < winner_row.size() && winner_row[t] != w) ++t;
      if (t == 0 || winner_row[t] != w || t + 1 == winner_row.size()) return std::nullopt;
      int l = winner_row[t - 1];
      winner_row.erase(winner_row.begin() + (t - 1));
      loser_row.push_back(l);
      candidate = GP(std::move(top), std::move(bottom), pi.names());
    } else {
      return std::nullopt;
    }
  } catch (const domain_error&) {
    return std::nullopt;  // candidate is not a valid permutation
  }
  try {
    if (rauzy_move(*candidate, side) == pi) return candidate;
  } catch (const domain_error&) {
  }
  return std::nullopt;
}

IMat elementary_matrix(const GP& pi, Side side) {
  auto [w, l] = winner_loser(pi, side);
  IMat e = IMat::identity(pi.size_alphabet());
  e(w, l) += 1;
  return e;
}

std::pair<IMat, GP> word_matrix_end(const GP& pi, const RauzyWord& w) {
  IMat b = IMat::identity(pi.size_alphabet());
  GP cur = pi;
  for (Side s : w) {
    b = b * elementary_matrix(cur, s);
    cur = rauzy_move(cur, s);
  }
  return {b, cur};
}

IMat word_matrix(const GP& pi, const RauzyWord& w) {
  return word_matrix_end(pi, w).first;
}

int RauzyDiagram::vertex_of(const GP& pi) const {
  GP key = reduced ? pi.canonical_form() : pi;
  auto it = index.find(key.str());
  if (it == index.end()) throw domain_error("permutation not a diagram vertex: " + pi.str());
  return it->second;
}

std::string RauzyDiagram::dot() const {
  std::ostringstream os;
  os << "digraph rauzy {\n";
  for (size_t v = 0; v < vertices.size(); ++v)
    os << "  v" << v << " [label=\"" << vertices[v].str() << "\"];\n";
  for (size_t v = 0; v < vertices.size(); ++v) {
    os << "  v" << v << " -> v" << edges[v][0] << " [label=\"t\"];\n";
    os << "  v" << v << " -> v" << edges[v][1] << " [label=\"b\"];\n";
  }
  os << "}\n";
  return os.str();
}

RauzyDiagram build_diagram(const GP& pi, bool reduced, size_t max_vertices) {
  RauzyDiagram d;
  d.reduced = reduced;
  GP root = reduced ? pi.canonical_form() : pi;
  d.index.emplace(root.str(), 0);
  d.vertices.push_back(root);
  std::deque<int> queue{0};
  while (!queue.empty()) {
    int v = queue.front();
    queue.pop_front();
    d.edges.push_back({-1, -1});
    for (Side s : {Side::Top, Side::Bottom}) {
      GP next = rauzy_move(d.vertices[v], s);
      if (reduced) next = next.canonical_form();
      auto [it, fresh] = d.index.emplace(next.str(), static_cast<int>(d.vertices.size()));
      if (fresh) {
        if (d.vertices.size() >= max_vertices)
          throw limit_error("diagram exceeds vertex budget of " + std::to_string(max_vertices));
        d.vertices.push_back(next);
        queue.push_back(it->second);
      }
      d.edges[v][s == Side::Top ? 0 : 1] = it->second;
    }
  }
  return d;
}

bool is_strongly_connected(const RauzyDiagram& d) {
  if (d.truncated) throw domain_error("strong connectivity needs a complete diagram");
  size_t n = d.size();
  if (n == 0) return false;
  // Out-degree is 2 everywhere, so strong connectivity is reachability from
  // vertex 0 in both the graph and its reverse.
  std::vector<std::vector<int>> rev(n);
  for (size_t v = 0; v < n; ++v)
    for (int t : d.edges[v]) rev[t].push_back(static_cast<int>(v));
  auto reach_all = [&](bool reverse) {
    std::vector<char> seen(n, 0);
    std::vector<int> stack{0};
    seen[0] = 1;
    size_t cnt = 1;
    while (!stack.empty()) {
      int v = stack.back();
      stack.pop_back();
      if (!reverse) {
        for (int t : d.edges[v])
          if (!seen[t]) {
            seen[t] = 1;
            ++cnt;
            stack.push_back(t);
          }
      } else {
        for (int t : rev[v])
          if (!seen[t]) {
            seen[t] = 1;
            ++cnt;
            stack.push_back(t);
          }
      }
    }
    return cnt == n;
  };
  return reach_all(false) && reach_all(true);
}

namespace {

// BFS tree from base; parent edge recorded. Top edges expand first so that
// among shortest paths the lexicographically smallest (t < b) is found.
std::vector<std::pair<int, Side>> bfs_parents(const RauzyDiagram& d, int base, bool reverse) {
  size_t n = d.size();
  std::vector<std::pair<int, Side>> parent(n, {-1, Side::Top});
  std::vector<char> seen(n, 0);
  std::deque<int> q{base};
  seen[base] = 1;
  std::vector<std::vector<std::pair<int, Side>>> rev(n);
  if (reverse)
    for (size_t v = 0; v < n; ++v)
      for (Side s : {Side::Top, Side::Bottom})
        rev[d.target(static_cast<int>(v), s)].push_back({static_cast<int>(v), s});
  while (!q.empty()) {
    int v = q.front();
    q.pop_front();
    if (!reverse) {
      for (Side s : {Side::Top, Side::Bottom}) {
        int t = d.target(v, s);
        if (!seen[t]) {
          seen[t] = 1;
          parent[t] = {v, s};
          q.push_back(t);
        }
      }
    } else {
      for (auto [u, s] : rev[v]) {
        if (!seen[u]) {
          seen[u] = 1;
          parent[u] = {v, s};
          q.push_back(u);
        }
      }
    }
  }
  return parent;
}

}  // namespace

RauzyWord path_from_base(const RauzyDiagram& d, int base, int v) {
  auto parent = bfs_parents(d, base, false);
  if (v != base && parent[v].first < 0) throw domain_error("diagram not connected from base");
  RauzyWord w;
  while (v != base) {
    w.push_back(parent[v].second);
    v = parent[v].first;
  }
  std::reverse(w.begin(), w.end());
  return w;
}

RauzyWord path_to_base(const RauzyDiagram& d, int base, int v) {
  auto parent = bfs_parents(d, base, true);
  if (v != base && parent[v].first < 0) throw domain_error("diagram not co-connected to base");
  RauzyWord w;
  while (v != base) {
    w.push_back(parent[v].second);
    v = parent[v].first;
  }
  return w;
}

std::vector<LoopPiece> decompose_loop(const RauzyDiagram& d, int base,
                                      const std::vector<WalkStep>& walk) {
  // Validate the walk and find its position sequence.
  int pos = base;
  for (const WalkStep& st : walk) {
    int head = d.target(st.tail, st.side);
    if (st.dir == 1) {
      if (pos != st.tail) throw domain_error("walk not composable (forward step)");
      pos = head;
    } else {
      if (pos != head) throw domain_error("walk not composable (backward step)");
      pos = st.tail;
    }
  }
  if (pos != base) throw domain_error("walk is not a loop at the base");

  std::vector<LoopPiece> pieces;
  size_t i = 0;
  while (i < walk.size()) {
    size_t j = i;
    while (j < walk.size() && walk[j].dir == walk[i].dir) ++j;
    // The run [i, j) is a directed path; for backward runs, its directed
    // orientation is the reverse of the walk order.
    int dir = walk[i].dir;
    std::vector<WalkStep> run(walk.begin() + i, walk.begin() + j);
    if (dir == -1) std::reverse(run.begin(), run.end());
    int start = run.front().tail;
    int end = d.target(run.back().tail, run.back().side);
    RauzyWord word = path_from_base(d, base, start);
    for (const WalkStep& st : run) word.push_back(st.side);
    RauzyWord tail = path_to_base(d, base, end);
    word.insert(word.end(), tail.begin(), tail.end());
    pieces.push_back({std::move(word), dir});
    i = j;
  }
  return pieces;
}

}  // namespace rauzy
