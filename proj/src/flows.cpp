#include "tdr/flows.hpp"

#include <algorithm>
#include <numeric>
#include <set>

#include "tdr/error.hpp"

namespace tdr {

namespace {

constexpr double kZero = 1e-12;

std::set<std::string> as_set(const TensorDiagram& d, const std::vector<std::string>& u) {
  for (const auto& v : u)
    if (!d.has_vertex(v)) throw Error(ErrorKind::UnknownVertex, v);
  return {u.begin(), u.end()};
}

bool inside(const Wire& w, const std::set<std::string>& u) {
  if (w.is_endpointless()) return false;
  return (!w.tail || u.count(*w.tail)) && (!w.head || u.count(*w.head));
}

void check_domain(const TensorDiagram& d, const FlowAssignment& f, const std::set<std::string>& u) {
  std::size_t expected = 0;
  for (const auto& w : d.wires()) {
    if (inside(w, u)) continue;
    ++expected;
    auto it = f.find(w.id);
    if (it == f.end()) throw Error(ErrorKind::DomainMismatch, "no flow value on wire " + w.id);
    if (std::abs(it->second) <= kZero) throw Error(ErrorKind::InvalidPartialFlow, "zero flow on wire " + w.id);
  }
  if (f.size() != expected) throw Error(ErrorKind::DomainMismatch, "flow defined on wires of the induced subdiagram");
}

}  // namespace

std::vector<std::string> induced_wires(const TensorDiagram& d, const std::vector<std::string>& u) {
  const auto s = as_set(d, u);
  std::vector<std::string> out;
  for (const auto& w : d.wires())
    if (inside(w, s)) out.push_back(w.id);
  return out;
}

FlowValue flow_balance(const TensorDiagram& d, const FlowAssignment& f, const std::string& v) {
  FlowValue b = 1.0;
  for (const auto& w : d.wires()) {
    auto it = f.find(w.id);
    if (it == f.end() || w.is_loop()) continue;
    if (w.tail == v) b *= it->second;
    if (w.head == v) b /= it->second;
  }
  return b;
}

bool verify_partial_flow(const TensorDiagram& d, const FlowAssignment& f, const std::vector<std::string>& u, double tol) {
  const auto s = as_set(d, u);
  check_domain(d, f, s);
  for (const auto& v : d.vertices()) {
    if (s.count(v)) continue;
    if (std::abs(flow_balance(d, f, v) - 1.0) > tol) return false;
  }
  return true;
}

FlowAssignment extend_flow(const TensorDiagram& d, const FlowAssignment& f, const std::vector<std::string>& u, double tol) {
  if (!d.is_closed()) throw Error(ErrorKind::NotClosed, "flow extension needs a closed diagram");
  const auto s = as_set(d, u);
  if (!verify_partial_flow(d, f, u, tol)) throw Error(ErrorKind::InvalidPartialFlow, "flow condition fails outside u");

  FlowAssignment out = f;
  // Components of the induced subdiagram.
  const std::vector<std::string> uv(s.begin(), s.end());
  std::vector<std::size_t> parent(uv.size());
  std::iota(parent.begin(), parent.end(), 0);
  const auto idx = [&](const std::string& v) {
    return static_cast<std::size_t>(std::lower_bound(uv.begin(), uv.end(), v) - uv.begin());
  };
  const auto find = [&](std::size_t x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  };
  std::vector<const Wire*> inner;
  for (const auto& w : d.wires()) {
    if (!inside(w, s)) continue;
    if (w.is_loop()) {
      out[w.id] = 1.0;
      continue;
    }
    inner.push_back(&w);
    const auto a = find(idx(*w.tail)), b = find(idx(*w.head));
    if (a != b) parent[std::max(a, b)] = std::min(a, b);
  }

  for (std::size_t root = 0; root < uv.size(); ++root) {
    if (find(root) != root) continue;
    std::vector<std::string> comp;
    for (std::size_t i = 0; i < uv.size(); ++i)
      if (find(i) == root) comp.push_back(uv[i]);
    std::vector<const Wire*> wires;
    for (const auto* w : inner)
      if (find(idx(*w->tail)) == root) wires.push_back(w);

    // Merged simple graph; if it is not a tree, keep a BFS spanning tree.
    std::set<std::pair<std::string, std::string>> pairs;
    for (const auto* w : wires) pairs.insert(std::minmax(*w->tail, *w->head));
    std::vector<const Wire*> tree;
    if (pairs.size() + 1 == comp.size()) {
      tree = wires;
    } else {
      std::set<std::string> seen{comp.front()};
      std::vector<std::string> queue{comp.front()};
      for (std::size_t qi = 0; qi < queue.size(); ++qi) {
        for (const auto* w : wires) {
          const std::string* next = nullptr;
          if (*w->tail == queue[qi] && !seen.count(*w->head)) next = &*w->head;
          if (*w->head == queue[qi] && !seen.count(*w->tail)) next = &*w->tail;
          if (!next) continue;
          seen.insert(*next);
          queue.push_back(*next);
          tree.push_back(w);
        }
      }
      for (const auto* w : wires)
        if (std::find(tree.begin(), tree.end(), w) == tree.end()) out[w->id] = 1.0;
    }

    std::map<std::string, FlowValue> rho;
    for (const auto& v : comp) rho[v] = flow_balance(d, out, v);
    FlowValue total = 1.0;
    for (const auto& [v, r] : rho) total *= r;
    if (std::abs(total - 1.0) > tol) {
      throw Error(ErrorKind::InvalidPartialFlow, "boundary product around " + comp.front() + " is not 1");
    }

    std::set<std::string> alive(comp.begin(), comp.end());
    std::vector<const Wire*> remaining = tree;
    while (alive.size() > 1) {
      // Smallest leaf of the remaining tree.
      std::string leaf, other;
      for (const auto& v : alive) {
        std::set<std::string> nbrs;
        for (const auto* w : remaining) {
          if (*w->tail == v) nbrs.insert(*w->head);
          if (*w->head == v) nbrs.insert(*w->tail);
        }
        if (nbrs.size() == 1) {
          leaf = v;
          other = *nbrs.begin();
          break;
        }
      }
      std::vector<const Wire*> edge;
      for (const auto* w : remaining)
        if ((*w->tail == leaf && *w->head == other) || (*w->tail == other && *w->head == leaf)) edge.push_back(w);
      const FlowValue r = std::exp(std::log(1.0 / rho[leaf]) / static_cast<double>(edge.size()));
      for (const auto* w : edge) out[w->id] = *w->tail == leaf ? r : 1.0 / r;
      rho[other] *= rho[leaf];
      rho[leaf] = 1.0;
      alive.erase(leaf);
      std::erase_if(remaining, [&](const Wire* w) { return std::find(edge.begin(), edge.end(), w) != edge.end(); });
    }
  }
  return out;
}

}  // namespace tdr
