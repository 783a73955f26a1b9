#include "invsem/simplex.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <numeric>

#include "invsem/errors.hpp"

namespace invsem {

std::size_t LinearSystem::add_row(std::vector<std::pair<std::uint32_t, Rat>> coeffs, Rat rhs,
                                  std::string id) {
  // Merge duplicate variable entries and drop zeros.
  std::sort(coeffs.begin(), coeffs.end(),
            [](const auto& a, const auto& b) { return a.first < b.first; });
  std::vector<std::pair<std::uint32_t, Rat>> merged;
  for (auto& [v, c] : coeffs) {
    if (v >= num_vars) throw InvalidInput("row references unknown variable");
    if (!merged.empty() && merged.back().first == v)
      merged.back().second += c;
    else
      merged.emplace_back(v, c);
  }
  std::erase_if(merged, [](const auto& p) { return p.second == 0; });
  rows.push_back(Row{std::move(merged), std::move(rhs), std::move(id)});
  return rows.size() - 1;
}

bool verify_solution(const LinearSystem& sys, const std::vector<Rat>& x) {
  if (x.size() != sys.num_vars) return false;
  for (const auto& v : x)
    if (v < 0) return false;
  for (const auto& row : sys.rows) {
    Rat acc = 0;
    for (const auto& [v, c] : row.coeffs) acc += c * x[v];
    if (acc != row.rhs) return false;
  }
  return true;
}

bool verify_farkas(const LinearSystem& sys,
                   const std::vector<std::pair<std::size_t, Rat>>& dual) {
  std::vector<Rat> combo(sys.num_vars, Rat(0));
  Rat rhs = 0;
  for (const auto& [ri, y] : dual) {
    if (ri >= sys.rows.size()) return false;
    for (const auto& [v, c] : sys.rows[ri].coeffs) combo[v] += y * c;
    rhs += y * sys.rows[ri].rhs;
  }
  if (rhs <= 0) return false;
  for (const auto& c : combo)
    if (c > 0) return false;
  return true;
}

namespace {

LpFeasibility run_phase1(const LinearSystem& sys) {
  std::size_t m = sys.rows.size(), n = sys.num_vars;
  std::vector<std::vector<Rat>> t(m, std::vector<Rat>(n + m + 1, Rat(0)));
  std::vector<bool> flipped(m, false);
  for (std::size_t i = 0; i < m; ++i) {
    const auto& row = sys.rows[i];
    bool flip = row.rhs < 0;
    flipped[i] = flip;
    for (const auto& [v, c] : row.coeffs) t[i][v] = flip ? -c : c;
    t[i][n + i] = 1;
    t[i][n + m] = flip ? -row.rhs : row.rhs;
  }
  std::vector<std::size_t> basis(m);
  std::iota(basis.begin(), basis.end(), n);

  // Reduced costs for min(sum of artificials), priced out for the basis.
  std::vector<Rat> obj(n + m, Rat(0));
  Rat obj_rhs = 0;
  for (std::size_t j = 0; j < n + m; ++j) {
    Rat s = 0;
    for (std::size_t i = 0; i < m; ++i) s += t[i][j];
    obj[j] = (j >= n ? Rat(1) : Rat(0)) - s;
  }
  for (std::size_t i = 0; i < m; ++i) obj_rhs -= t[i][n + m];

  while (true) {
    // Bland: entering column = smallest index with negative reduced cost.
    std::size_t enter = n + m;
    for (std::size_t j = 0; j < n + m; ++j)
      if (obj[j] < 0) {
        enter = j;
        break;
      }
    if (enter == n + m) break;

    std::size_t leave = m;
    Rat best;
    for (std::size_t i = 0; i < m; ++i) {
      if (t[i][enter] <= 0) continue;
      Rat ratio = t[i][n + m] / t[i][enter];
      if (leave == m || ratio < best || (ratio == best && basis[i] < basis[leave])) {
        leave = i;
        best = ratio;
      }
    }
    if (leave == m) throw InvsemError("phase-1 unbounded; inconsistent tableau");

    Rat piv = t[leave][enter];
    for (auto& v : t[leave]) v /= piv;
    for (std::size_t i = 0; i < m; ++i) {
      if (i == leave) continue;
      Rat f = t[i][enter];
      if (f == 0) continue;
      for (std::size_t j = 0; j <= n + m; ++j)
        if (t[leave][j] != 0) t[i][j] -= f * t[leave][j];
    }
    Rat fo = obj[enter];
    if (fo != 0) {
      for (std::size_t j = 0; j < n + m; ++j)
        if (t[leave][j] != 0) obj[j] -= fo * t[leave][j];
      obj_rhs -= fo * t[leave][n + m];
    }
    basis[leave] = enter;
  }

  Rat objective = -obj_rhs;
  LpFeasibility out;
  if (objective == 0) {
    out.feasible = true;
    out.solution.assign(n, Rat(0));
    for (std::size_t i = 0; i < m; ++i)
      if (basis[i] < n) out.solution[basis[i]] = t[i][n + m];
  } else {
    out.feasible = false;
    // Dual values read off the artificial columns' reduced costs; undo the
    // row sign flips.
    for (std::size_t i = 0; i < m; ++i) {
      Rat y = Rat(1) - obj[n + i];
      if (flipped[i]) y = -y;
      if (y != 0) out.dual.emplace_back(i, y);
    }
  }
  return out;
}

}  // namespace

LpFeasibility solve_feasibility(const LinearSystem& sys) {
  LpFeasibility res = run_phase1(sys);
  if (res.feasible) {
    if (!verify_solution(sys, res.solution))
      throw InvsemError("simplex produced an invalid feasible point");
  } else {
    if (!verify_farkas(sys, res.dual))
      throw InvsemError("simplex produced an invalid infeasibility certificate");
  }
  return res;
}

LpFeasibility solve_feasibility_presolved(const LinearSystem& sys) {
  std::size_t n = sys.num_vars;
  std::vector<std::uint32_t> parent(n);
  std::iota(parent.begin(), parent.end(), 0);
  std::function<std::uint32_t(std::uint32_t)> find = [&](std::uint32_t a) {
    while (parent[a] != a) a = parent[a] = parent[parent[a]];
    return a;
  };

  // Collapse rows of the exact shape x_u - x_v = 0. The rows that cause a
  // union form a spanning forest on the variables; remember those edges for
  // the certificate expansion.
  struct Edge {
    std::uint32_t u, v;
    std::size_t row;
  };
  std::vector<Edge> tree_edges;
  std::vector<bool> is_merge_row(sys.rows.size(), false);
  for (std::size_t r = 0; r < sys.rows.size(); ++r) {
    const auto& row = sys.rows[r];
    if (row.rhs != 0 || row.coeffs.size() != 2) continue;
    const auto& [u, cu] = row.coeffs[0];
    const auto& [v, cv] = row.coeffs[1];
    if (!((cu == 1 && cv == -1) || (cu == -1 && cv == 1))) continue;
    is_merge_row[r] = true;
    if (find(u) != find(v)) {
      parent[find(u)] = find(v);
      tree_edges.push_back({u, v, r});
    }
  }

  std::map<std::uint32_t, std::uint32_t> class_index;
  std::vector<std::uint32_t> cls(n);
  for (std::uint32_t v = 0; v < n; ++v) {
    std::uint32_t r = find(v);
    auto [it, fresh] = class_index.emplace(r, static_cast<std::uint32_t>(class_index.size()));
    cls[v] = it->second;
  }

  LinearSystem reduced;
  reduced.num_vars = class_index.size();
  std::vector<std::size_t> reduced_to_original;
  for (std::size_t r = 0; r < sys.rows.size(); ++r) {
    if (is_merge_row[r]) continue;
    std::vector<std::pair<std::uint32_t, Rat>> coeffs;
    for (const auto& [v, c] : sys.rows[r].coeffs) coeffs.emplace_back(cls[v], c);
    reduced.add_row(std::move(coeffs), sys.rows[r].rhs, sys.rows[r].id);
    reduced_to_original.push_back(r);
  }

  LpFeasibility red = solve_feasibility(reduced);
  LpFeasibility out;
  out.feasible = red.feasible;
  if (red.feasible) {
    out.solution.assign(n, Rat(0));
    for (std::uint32_t v = 0; v < n; ++v) out.solution[v] = red.solution[cls[v]];
    if (!verify_solution(sys, out.solution))
      throw InvsemError("presolve expansion produced an invalid feasible point");
    return out;
  }

  // Expand the Farkas certificate: per-variable surpluses of the reduced dual
  // are routed to class representatives along the spanning forest; each tree
  // row absorbs exactly the surplus of its child endpoint.
  std::vector<Rat> per_var(n, Rat(0));
  std::map<std::size_t, Rat> dual_map;
  for (const auto& [rr, y] : red.dual) {
    std::size_t orig = reduced_to_original[rr];
    dual_map[orig] += y;
    for (const auto& [v, c] : sys.rows[orig].coeffs) per_var[v] += y * c;
  }

  std::vector<std::vector<std::pair<std::uint32_t, std::size_t>>> adj(n);
  for (const auto& e : tree_edges) {
    adj[e.u].emplace_back(e.v, e.row);
    adj[e.v].emplace_back(e.u, e.row);
  }
  std::vector<bool> visited(n, false);
  std::vector<std::uint32_t> order;
  std::vector<std::pair<std::uint32_t, std::size_t>> up_edge(n, {0, SIZE_MAX});
  for (std::uint32_t root = 0; root < n; ++root) {
    if (visited[root] || find(root) != root) continue;
    visited[root] = true;
    std::vector<std::uint32_t> stack{root};
    while (!stack.empty()) {
      std::uint32_t w = stack.back();
      stack.pop_back();
      order.push_back(w);
      for (auto [nb, row] : adj[w]) {
        if (visited[nb]) continue;
        visited[nb] = true;
        up_edge[nb] = {w, row};
        stack.push_back(nb);
      }
    }
  }
  for (auto it = order.rbegin(); it != order.rend(); ++it) {
    std::uint32_t w = *it;
    auto [p, row_idx] = up_edge[w];
    if (row_idx == SIZE_MAX) continue;  // class representative
    if (per_var[w] == 0) continue;
    const auto& row = sys.rows[row_idx];
    Rat cw = row.coeffs[0].first == w ? row.coeffs[0].second : row.coeffs[1].second;
    Rat z = -per_var[w] / cw;
    dual_map[row_idx] += z;
    per_var[p] += z * (-cw);  // the other coefficient is the negation
    per_var[w] = 0;
  }

  for (auto& [r, y] : dual_map)
    if (y != 0) out.dual.emplace_back(r, y);
  if (!verify_farkas(sys, out.dual))
    throw InvsemError("presolve expansion produced an invalid certificate");
  return out;
}

}  // namespace invsem
