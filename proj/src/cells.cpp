#include "twocell/cells.hpp"

#include <algorithm>
#include <map>

namespace twocell {

std::string cell_kind_name(CellKind k) {
  switch (k) {
    case CellKind::Left: return "left";
    case CellKind::Right: return "right";
    default: return "twosided";
  }
}

std::vector<std::vector<bool>> preorder(const MultiTable& t, CellKind kind) {
  const int n = int(t.gens.size());
  std::vector<std::vector<bool>> rel(n, std::vector<bool>(n, false));
  for (int f = 0; f < n; ++f) rel[f][f] = true;

  // one-step edges f -> g when g appears in a composite on the relevant side
  for (GenId f = 0; f < n; ++f)
    for (GenId h = 0; h < n; ++h) {
      if ((kind == CellKind::Left || kind == CellKind::TwoSided) && t.composable(h, f))
        for (auto [g, c] : t.compose(h, f))
          if (c > 0) rel[f][g] = true;
      if ((kind == CellKind::Right || kind == CellKind::TwoSided) && t.composable(f, h))
        for (auto [g, c] : t.compose(f, h))
          if (c > 0) rel[f][g] = true;
    }

  // transitive closure
  for (int k = 0; k < n; ++k)
    for (int i = 0; i < n; ++i) {
      if (!rel[i][k]) continue;
      for (int j = 0; j < n; ++j)
        if (rel[k][j]) rel[i][j] = true;
    }
  return rel;
}

CellStructure cell_structure(const MultiTable& t, CellKind kind) {
  const int n = int(t.gens.size());
  auto rel = preorder(t, kind);

  CellStructure cs;
  cs.kind = kind;
  cs.cell_of.assign(n, -1);
  for (GenId f = 0; f < n; ++f) {
    if (cs.cell_of[f] >= 0) continue;
    int idx = int(cs.cells.size());
    cs.cells.push_back({});
    for (GenId g = f; g < n; ++g)
      if (cs.cell_of[g] < 0 && rel[f][g] && rel[g][f]) {
        cs.cell_of[g] = idx;
        cs.cells[idx].push_back(g);
      }
  }

  const int m = int(cs.cells.size());
  cs.leq.assign(m, std::vector<bool>(m, false));
  for (int a = 0; a < m; ++a)
    for (int b = 0; b < m; ++b) cs.leq[a][b] = rel[cs.cells[a][0]][cs.cells[b][0]];

  for (int a = 0; a < m; ++a)
    for (int b = 0; b < m; ++b) {
      if (a == b || !cs.leq[a][b]) continue;
      bool cover = true;
      for (int c = 0; c < m && cover; ++c)
        if (c != a && c != b && cs.leq[a][c] && cs.leq[c][b]) cover = false;
      if (cover) cs.hasse.push_back({a, b});
    }
  return cs;
}

std::string CellStructure::cell_name(int c, const MultiTable& t) const {
  std::string out = "{";
  for (size_t i = 0; i < cells[c].size(); ++i) {
    if (i) out += ",";
    out += t.gens[cells[c][i]].name;
  }
  return out + "}";
}

int CellStructure::cell_containing(const MultiTable& t, const std::string& gen_name) const {
  return cell_of[t.gen_index(gen_name)];
}

IdempotentWitness is_idempotent_cell(const MultiTable& t, const CellStructure& two, int cell) {
  if (cell < 0 || cell >= int(two.cells.size()))
    throw Error("NotACell", "cell index out of range");
  const auto& members = two.cells[cell];
  for (GenId f : members)
    for (GenId g : members) {
      if (!t.composable(f, g)) continue;
      for (auto [h, c] : t.compose(f, g))
        if (c > 0 && two.cell_of[h] == cell) return {true, f, g, h};
    }
  return {};
}

RegularityResult is_strongly_regular(const MultiTable& t, const CellStructure& two, int cell) {
  if (cell < 0 || cell >= int(two.cells.size()))
    throw Error("NotACell", "cell index out of range");

  auto check = [&](CellKind kind) -> std::string {
    CellStructure cs = cell_structure(t, kind);
    std::vector<int> inside;
    for (int c = 0; c < int(cs.cells.size()); ++c)
      if (two.cell_of[cs.cells[c][0]] == cell) inside.push_back(c);
    for (int a : inside)
      for (int b : inside)
        if (a != b && cs.leq[a][b])
          return cell_kind_name(kind) + " cells " + cs.cell_name(a, t) + " and " +
                 cs.cell_name(b, t) + " are comparable";
    return "";
  };
  if (std::string w = check(CellKind::Left); !w.empty()) return {false, w};
  if (std::string w = check(CellKind::Right); !w.empty()) return {false, w};

  CellStructure left = cell_structure(t, CellKind::Left);
  CellStructure right = cell_structure(t, CellKind::Right);
  std::map<std::pair<int, int>, int> count;
  for (GenId f : two.cells[cell]) count[{left.cell_of[f], right.cell_of[f]}]++;
  long long expected = 0;
  {
    std::vector<int> ls, rs;
    for (GenId f : two.cells[cell]) {
      ls.push_back(left.cell_of[f]);
      rs.push_back(right.cell_of[f]);
    }
    std::sort(ls.begin(), ls.end());
    ls.erase(std::unique(ls.begin(), ls.end()), ls.end());
    std::sort(rs.begin(), rs.end());
    rs.erase(std::unique(rs.begin(), rs.end()), rs.end());
    expected = (long long)ls.size() * (long long)rs.size();
  }
  for (auto& [lr, c] : count)
    if (c != 1)
      return {false, "left/right intersection " + left.cell_name(lr.first, t) + " n " +
                         right.cell_name(lr.second, t) + " has " + std::to_string(c) + " elements"};
  if ((long long)count.size() != expected)
    return {false, "some left/right intersection inside the cell is empty"};
  return {true, ""};
}

}  // namespace twocell
