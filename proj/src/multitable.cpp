#include "twocell/multitable.hpp"

#include <algorithm>

#include "twocell/cells.hpp"

namespace twocell {

int MultiTable::object_index(const std::string& name) const {
  for (size_t i = 0; i < objects.size(); ++i)
    if (objects[i] == name) return int(i);
  throw Error("UnknownObject", "no object named '" + name + "'");
}

GenId MultiTable::gen_index(const std::string& name) const {
  for (size_t i = 0; i < gens.size(); ++i)
    if (gens[i].name == name) return GenId(i);
  throw Error("UnknownGen", "no generator named '" + name + "'");
}

bool MultiTable::is_identity(GenId g) const {
  return std::find(identities.begin(), identities.end(), g) != identities.end();
}

const GenComb& MultiTable::compose(GenId f, GenId g) const {
  if (f < 0 || g < 0 || size_t(f) >= gens.size() || size_t(g) >= gens.size())
    throw Error("UnknownGen", "generator index out of range");
  if (!composable(f, g))
    throw Error("NotComposable", gens[f].name + " o " + gens[g].name +
                                     ": target of the right factor is not the source of the left");
  auto it = table.find({f, g});
  if (it == table.end())
    throw Error("NotComposable", "no table entry for " + gens[f].name + " o " + gens[g].name);
  return it->second;
}

GenComb add_combs(const GenComb& a, const GenComb& b, long long scale) {
  GenComb out = a;
  for (auto [g, c] : b) {
    auto it = std::lower_bound(out.begin(), out.end(), g,
                               [](const auto& p, GenId v) { return p.first < v; });
    if (it != out.end() && it->first == g)
      it->second += c * scale;
    else
      out.insert(it, {g, c * scale});
  }
  GenComb clean;
  for (auto& p : out)
    if (p.second != 0) clean.push_back(p);
  return clean;
}

GenComb MultiTable::compose_comb(const GenComb& left, const GenComb& right) const {
  GenComb out;
  for (auto [f, cf] : left)
    for (auto [g, cg] : right) out = add_combs(out, compose(f, g), cf * cg);
  return out;
}

std::vector<Violation> validate(const MultiTable& t) {
  std::vector<Violation> out;
  const int n = int(t.gens.size());

  if (t.identities.size() != t.objects.size())
    out.push_back({"identities", "expected one identity generator per object"});
  for (size_t i = 0; i < t.identities.size() && i < t.objects.size(); ++i) {
    GenId e = t.identities[i];
    if (t.gens[e].src != int(i) || t.gens[e].tgt != int(i))
      out.push_back({"identities", "id of object " + t.objects[i] + " is not an endo-generator"});
  }

  // table domain and typing
  for (GenId f = 0; f < n; ++f)
    for (GenId g = 0; g < n; ++g) {
      bool comp = t.composable(f, g);
      auto it = t.table.find({f, g});
      if (comp && it == t.table.end()) {
        out.push_back({"domain", "missing product " + t.gens[f].name + " o " + t.gens[g].name});
        continue;
      }
      if (!comp && it != t.table.end()) {
        out.push_back({"domain", "entry for non-composable " + t.gens[f].name + " o " + t.gens[g].name});
        continue;
      }
      if (!comp) continue;
      for (auto [h, c] : it->second) {
        if (c < 0)
          out.push_back({"positivity", "negative multiplicity in " + t.gens[f].name + " o " + t.gens[g].name});
        if (t.gens[h].src != t.gens[g].src || t.gens[h].tgt != t.gens[f].tgt)
          out.push_back({"typing", t.gens[h].name + " in " + t.gens[f].name + " o " + t.gens[g].name +
                                       " has the wrong source or target"});
      }
    }
  if (!out.empty()) return out;  // later checks assume a total, typed table

  // unit law
  for (GenId f = 0; f < n; ++f) {
    GenId el = t.identities[t.gens[f].tgt];
    GenId er = t.identities[t.gens[f].src];
    GenComb want{{f, 1}};
    if (t.compose(el, f) != want)
      out.push_back({"unit", "id o " + t.gens[f].name + " != " + t.gens[f].name});
    if (t.compose(f, er) != want)
      out.push_back({"unit", t.gens[f].name + " o id != " + t.gens[f].name});
  }

  // associativity as multisets: (f o g) o h = f o (g o h)
  for (GenId f = 0; f < n; ++f)
    for (GenId g = 0; g < n; ++g) {
      if (!t.composable(f, g)) continue;
      for (GenId h = 0; h < n; ++h) {
        if (!t.composable(g, h)) continue;
        GenComb lhs = t.compose_comb(t.compose(f, g), {{h, 1}});
        GenComb rhs = t.compose_comb({{f, 1}}, t.compose(g, h));
        if (lhs != rhs)
          out.push_back({"associativity", "(" + t.gens[f].name + " o " + t.gens[g].name + ") o " +
                                              t.gens[h].name + " differs from the right-bracketing"});
      }
    }

  if (t.star) {
    const auto& st = *t.star;
    if (st.size() != size_t(n)) {
      out.push_back({"star", "star map does not cover all generators"});
    } else {
      for (GenId f = 0; f < n; ++f) {
        if (st[f] < 0 || st[f] >= n || st[st[f]] != f)
          out.push_back({"star", "star is not an involution at " + t.gens[f].name});
      }
      for (GenId e : t.identities)
        if (!t.is_identity(st[e]))
          out.push_back({"star", "star of identity " + t.gens[e].name + " is not an identity"});
    }
  }
  return out;
}

std::vector<Violation> star_cell_compat(const MultiTable& t, const CellStructure& two) {
  if (!t.star) throw Error("NoStar", "table has no star involution");
  std::vector<Violation> out;
  for (GenId f = 0; f < GenId(t.gens.size()); ++f) {
    GenId g = (*t.star)[f];
    if (two.cell_of[f] != two.cell_of[g])
      out.push_back({"star-cell", t.gens[f].name + " and " + t.gens[g].name +
                                      " lie in different two-sided cells"});
  }
  return out;
}

}  // namespace twocell
