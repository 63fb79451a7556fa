#include "tdr/semigraph.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <set>

#include "tdr/error.hpp"

namespace tdr {

namespace {

const std::string kDot = "·";

bool sorted_contains(const std::vector<std::string>& v, const std::string& x) {
  return std::binary_search(v.begin(), v.end(), x);
}

std::string fresh_vertex(const TensorDiagram& d, std::string base) {
  while (d.has_vertex(base)) base += "'";
  return base;
}

std::string fresh_wire(const TensorDiagram& d) {
  for (std::size_t k = 0;; ++k) {
    std::string id = "_split" + std::to_string(k);
    if (!d.has_wire(id)) return id;
  }
}

RawDiagram raw_of(const TensorDiagram& d) { return {d.vertices(), d.wires()}; }

std::vector<std::string> sorted_unique(std::vector<std::string> v) {
  std::sort(v.begin(), v.end());
  v.erase(std::unique(v.begin(), v.end()), v.end());
  return v;
}

}  // namespace

bool TensorDiagram::has_vertex(const std::string& v) const { return sorted_contains(vertices_, v); }

bool TensorDiagram::has_wire(const std::string& w) const {
  auto it = std::lower_bound(wires_.begin(), wires_.end(), w,
                             [](const Wire& a, const std::string& b) { return a.id < b; });
  return it != wires_.end() && it->id == w;
}

std::size_t TensorDiagram::wire_index(const std::string& w) const {
  auto it = std::lower_bound(wires_.begin(), wires_.end(), w,
                             [](const Wire& a, const std::string& b) { return a.id < b; });
  if (it == wires_.end() || it->id != w) throw Error(ErrorKind::UnknownWire, w);
  return static_cast<std::size_t>(it - wires_.begin());
}

const Wire& TensorDiagram::wire(const std::string& w) const { return wires_[wire_index(w)]; }

std::size_t TensorDiagram::vertex_index(const std::string& v) const {
  auto it = std::lower_bound(vertices_.begin(), vertices_.end(), v);
  if (it == vertices_.end() || *it != v) throw Error(ErrorKind::UnknownVertex, v);
  return static_cast<std::size_t>(it - vertices_.begin());
}

VertexNeighborhood TensorDiagram::neighborhood(const std::string& v) const {
  if (!has_vertex(v)) throw Error(ErrorKind::UnknownVertex, v);
  VertexNeighborhood n;
  for (const auto& w : wires_) {
    if (w.head == v) n.incoming.push_back(w.id);
    if (w.tail == v) n.outgoing.push_back(w.id);
  }
  return n;
}

std::vector<Slot> TensorDiagram::slots(const std::string& v) const {
  const auto n = neighborhood(v);
  std::vector<Slot> out;
  for (const auto& w : n.outgoing) out.push_back({w, End::Out});
  for (const auto& w : n.incoming) out.push_back({w, End::In});
  std::sort(out.begin(), out.end());
  return out;
}

bool TensorDiagram::is_closed() const {
  return std::none_of(wires_.begin(), wires_.end(), [](const Wire& w) { return w.is_dangling(); });
}

bool TensorDiagram::has_endpointless() const {
  return std::any_of(wires_.begin(), wires_.end(), [](const Wire& w) { return w.is_endpointless(); });
}

TensorDiagram validate_diagram(RawDiagram raw) {
  TensorDiagram d;
  d.vertices_ = std::move(raw.vertices);
  std::sort(d.vertices_.begin(), d.vertices_.end());
  if (auto it = std::adjacent_find(d.vertices_.begin(), d.vertices_.end()); it != d.vertices_.end()) {
    throw Error(ErrorKind::DuplicateId, "vertex " + *it);
  }
  d.wires_ = std::move(raw.wires);
  std::sort(d.wires_.begin(), d.wires_.end(), [](const Wire& a, const Wire& b) { return a.id < b.id; });
  for (std::size_t i = 0; i < d.wires_.size(); ++i) {
    const Wire& w = d.wires_[i];
    if (i > 0 && d.wires_[i - 1].id == w.id) throw Error(ErrorKind::DuplicateId, "wire " + w.id);
    for (const auto& end : {w.tail, w.head}) {
      if (end && !sorted_contains(d.vertices_, *end)) {
        throw Error(ErrorKind::UnknownVertexRef, "wire " + w.id + " references " + *end);
      }
    }
  }
  return d;
}

NormalizeResult normalize(const TensorDiagram& d) {
  RawDiagram raw{d.vertices(), {}};
  std::vector<std::string> removed;
  for (const auto& w : d.wires()) {
    if (w.is_endpointless()) {
      removed.push_back(w.id);
    } else {
      raw.wires.push_back(w);
    }
  }
  return {validate_diagram(std::move(raw)), std::move(removed)};
}

TensorDiagram reverse_wire(const TensorDiagram& d, const std::string& w) {
  RawDiagram raw = raw_of(d);
  Wire& x = raw.wires[d.wire_index(w)];
  std::swap(x.tail, x.head);
  return validate_diagram(std::move(raw));
}

SplitResult split_vertex(const TensorDiagram& d, const std::string& v, const std::vector<Slot>& part1,
                         const std::vector<Slot>& part2) {
  const auto all = d.slots(v);
  std::vector<Slot> given = part1;
  given.insert(given.end(), part2.begin(), part2.end());
  std::sort(given.begin(), given.end());
  if (given != all) throw Error(ErrorKind::NotAPartition, "slots at " + v);

  SplitResult res;
  res.first = fresh_vertex(d, v + kDot + "1");
  res.second = fresh_vertex(d, v + kDot + "2");
  if (res.first == res.second) res.second += "'";
  res.fresh_wire = fresh_wire(d);

  const std::set<Slot> in_first(part1.begin(), part1.end());
  RawDiagram raw = raw_of(d);
  raw.vertices.erase(std::find(raw.vertices.begin(), raw.vertices.end(), v));
  raw.vertices.push_back(res.first);
  raw.vertices.push_back(res.second);
  for (auto& w : raw.wires) {
    if (w.tail == v) w.tail = in_first.count({w.id, End::Out}) ? res.first : res.second;
    if (w.head == v) w.head = in_first.count({w.id, End::In}) ? res.first : res.second;
  }
  raw.wires.push_back({res.fresh_wire, res.first, res.second});
  res.diagram = validate_diagram(std::move(raw));
  return res;
}

TensorDiagram contract_wire(const TensorDiagram& d, const std::string& w, const std::optional<std::string>& merged) {
  const Wire& x = d.wire(w);
  if (!x.tail || !x.head || x.is_loop()) throw Error(ErrorKind::NotAPartition, "wire " + w + " joins no two vertices");
  const std::string& a = *x.tail;
  const std::string& b = *x.head;
  const std::string name = merged.value_or(a);
  if (name != a && name != b && d.has_vertex(name)) throw Error(ErrorKind::DuplicateId, "vertex " + name);
  RawDiagram raw;
  for (const auto& v : d.vertices())
    if (v != a && v != b) raw.vertices.push_back(v);
  raw.vertices.push_back(name);
  for (const auto& y : d.wires()) {
    if (y.id == w) continue;
    Wire z = y;
    if (z.tail == a || z.tail == b) z.tail = name;
    if (z.head == a || z.head == b) z.head = name;
    raw.wires.push_back(std::move(z));
  }
  return validate_diagram(std::move(raw));
}

namespace {

void check_subdiagram(const TensorDiagram& d, const SubdiagramRef& s) {
  for (const auto& v : s.vertices)
    if (!d.has_vertex(v)) throw Error(ErrorKind::NotASubdiagram, "unknown vertex " + v);
  const auto u = sorted_unique(s.vertices);
  for (const auto& w : s.wires) {
    if (!d.has_wire(w)) throw Error(ErrorKind::NotASubdiagram, "unknown wire " + w);
    const Wire& x = d.wire(w);
    const bool touches = (x.tail && sorted_contains(u, *x.tail)) || (x.head && sorted_contains(u, *x.head));
    if (!touches) throw Error(ErrorKind::NotASubdiagram, "wire " + w + " has no end in the vertex set");
  }
}

}  // namespace

IsolationResult isolate_subdiagram(const TensorDiagram& d, const SubdiagramRef& s) {
  check_subdiagram(d, s);
  const auto u = sorted_unique(s.vertices);
  const auto f = sorted_unique(s.wires);
  const auto in_f = [&](const std::string& w) { return sorted_contains(f, w); };

  IsolationResult res;
  TensorDiagram cur = d;
  std::map<std::string, std::string> current;  // original U vertex -> name in cur
  std::set<std::string> skipped;
  for (const auto& v : u) {
    current[v] = v;
    const auto n = d.neighborhood(v);
    const bool all_f = std::all_of(n.incoming.begin(), n.incoming.end(), in_f) &&
                       std::all_of(n.outgoing.begin(), n.outgoing.end(), in_f);
    if (all_f) skipped.insert(v);
  }

  const auto apply = [&](const std::string& v, const std::vector<Slot>& p1, const std::vector<Slot>& p2) {
    SplitResult sr = split_vertex(cur, v, p1, p2);
    res.steps.push_back({v, p1, p2, sr.fresh_wire, sr.first, sr.second});
    res.restricted.push_back(sr.fresh_wire);
    cur = std::move(sr.diagram);
    return sr;
  };

  // Pass 1: keep the wires that stay among U (and the chosen wires) on the first half.
  std::map<std::string, std::string> pass1_wire;
  for (const auto& v : u) {
    if (skipped.count(v)) continue;
    std::set<std::string> names;
    for (const auto& [orig, name] : current) names.insert(name);
    std::vector<Slot> p1, p2;
    for (const auto& slot : cur.slots(current[v])) {
      const Wire& w = cur.wire(slot.wire);
      const auto& other = slot.end == End::Out ? w.head : w.tail;
      const bool keep = in_f(w.id) || (other && names.count(*other));
      (keep ? p1 : p2).push_back(slot);
    }
    const SplitResult sr = apply(current[v], p1, p2);
    current[v] = sr.first;
    pass1_wire[v] = sr.fresh_wire;
  }

  // Pass 2: only the pass-1 wire and the chosen wires stay with the copy.
  for (const auto& v : u) {
    if (skipped.count(v)) continue;
    std::vector<Slot> p1, p2;
    for (const auto& slot : cur.slots(current[v])) {
      const bool keep = in_f(slot.wire) || slot.wire == pass1_wire[v];
      (keep ? p1 : p2).push_back(slot);
    }
    const SplitResult sr = apply(current[v], p1, p2);
    current[v] = sr.first;
  }

  for (const auto& v : u) res.copy.vertices.push_back(current[v]);
  std::sort(res.copy.vertices.begin(), res.copy.vertices.end());
  res.copy.wires = f;
  res.diagram = std::move(cur);
  res.copy.induced = is_induced(res.diagram, res.copy);
  return res;
}

std::vector<SubdiagramRef> connected_components(const TensorDiagram& d) {
  const auto& vs = d.vertices();
  std::vector<std::size_t> parent(vs.size());
  std::iota(parent.begin(), parent.end(), 0);
  const auto find = [&](std::size_t x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  };
  for (const auto& w : d.wires()) {
    if (w.tail && w.head) {
      const auto a = find(d.vertex_index(*w.tail)), b = find(d.vertex_index(*w.head));
      if (a != b) parent[std::max(a, b)] = std::min(a, b);
    }
  }
  std::vector<SubdiagramRef> out;
  std::map<std::size_t, std::size_t> slot_of_root;
  for (std::size_t i = 0; i < vs.size(); ++i) {
    const auto r = find(i);
    auto [it, fresh] = slot_of_root.try_emplace(r, out.size());
    if (fresh) out.push_back({{}, {}, true});
    out[it->second].vertices.push_back(vs[i]);
  }
  std::vector<SubdiagramRef> loose;
  for (const auto& w : d.wires()) {
    const auto& end = w.tail ? w.tail : w.head;
    if (!end) {
      loose.push_back({{}, {w.id}, true});
      continue;
    }
    out[slot_of_root[find(d.vertex_index(*end))]].wires.push_back(w.id);
  }
  out.insert(out.end(), loose.begin(), loose.end());
  return out;
}

bool is_induced(const TensorDiagram& d, const SubdiagramRef& s) {
  check_subdiagram(d, s);
  const auto u = sorted_unique(s.vertices);
  const auto f = sorted_unique(s.wires);
  for (const auto& w : d.wires()) {
    if (w.tail && w.head && sorted_contains(u, *w.tail) && sorted_contains(u, *w.head) && !sorted_contains(f, w.id))
      return false;
  }
  return true;
}

TensorDiagram restrict_to(const TensorDiagram& d, const SubdiagramRef& s) {
  check_subdiagram(d, s);
  RawDiagram raw{sorted_unique(s.vertices), {}};
  for (const auto& id : sorted_unique(s.wires)) {
    Wire w = d.wire(id);
    if (w.tail && !sorted_contains(raw.vertices, *w.tail)) w.tail.reset();
    if (w.head && !sorted_contains(raw.vertices, *w.head)) w.head.reset();
    raw.wires.push_back(std::move(w));
  }
  return validate_diagram(std::move(raw));
}

}  // namespace tdr
