#include "tdr/representation.hpp"

#include <algorithm>
#include <limits>

#include "tdr/error.hpp"
#include "tdr/kernels.hpp"
#include "tdr/linalg.hpp"

namespace tdr {

namespace {

std::size_t dim_product(const DimensionVector& dims, const std::vector<std::string>& wires) {
  std::size_t p = 1;
  for (const auto& w : wires) p *= dims.at(w);
  return p;
}

RatMatrix kron_all(const std::vector<std::string>& wires, const std::map<std::string, RatMatrix>& m) {
  RatMatrix out = RatMatrix::identity(1);
  for (const auto& w : wires) out = kron(out, m.at(w));
  return out;
}

void require_same_diagram(const Representation& a, const Representation& b) {
  if (!(a.diagram == b.diagram)) throw Error(ErrorKind::DiagramMismatch, "representations live on different diagrams");
}

Slot flipped(const Slot& s) { return {s.wire, s.end == End::Out ? End::In : End::Out}; }

// Adds `small` into `big` at per-axis offsets.
void embed(std::vector<Rational>& big, const std::vector<std::size_t>& big_dims, const std::vector<Rational>& small,
           const std::vector<std::size_t>& small_dims, const std::vector<std::size_t>& offsets) {
  if (small.empty()) return;
  std::vector<std::size_t> idx(small_dims.size(), 0);
  for (const auto& value : small) {
    std::size_t flat = 0;
    for (std::size_t k = 0; k < idx.size(); ++k) flat = flat * big_dims[k] + idx[k] + offsets[k];
    big[flat] += value;
    for (std::size_t k = idx.size(); k-- > 0;) {
      if (++idx[k] < small_dims[k]) break;
      idx[k] = 0;
    }
  }
}

}  // namespace

std::size_t Representation::row_dim(const std::string& v) const {
  return dim_product(dims, diagram.neighborhood(v).outgoing);
}

std::size_t Representation::col_dim(const std::string& v) const {
  return dim_product(dims, diagram.neighborhood(v).incoming);
}

Representation validate_representation(TensorDiagram d, DimensionVector dims, std::map<std::string, RatMatrix> tensors) {
  if (dims.size() != d.wires().size()) throw Error(ErrorKind::InvalidDims, "dimension vector must cover exactly the wires");
  for (const auto& w : d.wires())
    if (!dims.count(w.id)) throw Error(ErrorKind::InvalidDims, "no dimension for wire " + w.id);
  Representation r{std::move(d), std::move(dims), std::move(tensors)};
  if (r.tensors.size() != r.diagram.vertices().size()) throw Error(ErrorKind::ShapeMismatch, "tensors must cover exactly the vertices");
  for (const auto& v : r.diagram.vertices()) {
    auto it = r.tensors.find(v);
    if (it == r.tensors.end()) throw Error(ErrorKind::ShapeMismatch, "no tensor at vertex " + v);
    if (it->second.rows() != r.row_dim(v) || it->second.cols() != r.col_dim(v)) {
      throw Error(ErrorKind::ShapeMismatch,
                  "vertex " + v + " expects " + std::to_string(r.row_dim(v)) + "x" + std::to_string(r.col_dim(v)));
    }
  }
  return r;
}

std::vector<Slot> vertex_axes(const TensorDiagram& d, const std::string& v) {
  const auto n = d.neighborhood(v);
  std::vector<Slot> axes;
  for (const auto& w : n.outgoing) axes.push_back({w, End::Out});
  for (const auto& w : n.incoming) axes.push_back({w, End::In});
  return axes;
}

LabeledTensor vertex_tensor(const Representation& r, const std::string& v) {
  LabeledTensor t;
  t.axes = vertex_axes(r.diagram, v);
  for (const auto& s : t.axes) t.dims.push_back(r.dims.at(s.wire));
  const auto data = r.tensors.at(v).data();
  t.data.assign(data.begin(), data.end());
  return t;
}

RatMatrix vertex_matrix(const TensorDiagram& d, const std::string& v, const LabeledTensor& t) {
  const LabeledTensor p = permute(t, vertex_axes(d, v));
  const auto n = d.neighborhood(v);
  std::size_t rows = 1;
  for (std::size_t k = 0; k < n.outgoing.size(); ++k) rows *= p.dims[k];
  std::size_t cols = 1;
  for (std::size_t k = n.outgoing.size(); k < p.dims.size(); ++k) cols *= p.dims[k];
  return RatMatrix(rows, cols, p.data);
}

Representation apply_group_element(const GroupElement& g, const Representation& r) {
  std::map<std::string, RatMatrix> inv;
  for (const auto& w : r.diagram.wires()) {
    auto it = g.find(w.id);
    const std::size_t d = r.dims.at(w.id);
    if (it == g.end() || it->second.rows() != d || it->second.cols() != d) {
      throw Error(ErrorKind::SizeMismatch, "group element at wire " + w.id);
    }
    auto i = inverse(it->second);
    if (!i) throw Error(ErrorKind::Singular, "group element at wire " + w.id);
    inv.emplace(w.id, std::move(*i));
  }
  Representation out = r;
  for (const auto& v : r.diagram.vertices()) {
    const auto n = r.diagram.neighborhood(v);
    out.tensors[v] = kron_all(n.outgoing, g) * r.tensors.at(v) * kron_all(n.incoming, inv);
  }
  return out;
}

GroupElement multiply(const GroupElement& g, const GroupElement& h) {
  GroupElement out;
  for (const auto& [w, m] : h) out[w] = g.at(w) * m;
  return out;
}

GroupElement identity_element(const Representation& r) {
  GroupElement g;
  for (const auto& [w, d] : r.dims) g[w] = RatMatrix::identity(d);
  return g;
}

Representation direct_sum(const Representation& r1, const Representation& r2) {
  require_same_diagram(r1, r2);
  Representation out{r1.diagram, {}, {}};
  for (const auto& [w, d] : r1.dims) out.dims[w] = d + r2.dims.at(w);
  for (const auto& v : r1.diagram.vertices()) {
    const auto axes = vertex_axes(r1.diagram, v);
    std::vector<std::size_t> big, d1, d2, zero(axes.size(), 0);
    for (const auto& s : axes) {
      big.push_back(out.dims.at(s.wire));
      d1.push_back(r1.dims.at(s.wire));
      d2.push_back(r2.dims.at(s.wire));
    }
    std::vector<Rational> data(out.row_dim(v) * out.col_dim(v));
    const auto t1 = r1.tensors.at(v).data(), t2 = r2.tensors.at(v).data();
    embed(data, big, {t1.begin(), t1.end()}, d1, zero);
    embed(data, big, {t2.begin(), t2.end()}, d2, d1);
    out.tensors[v] = RatMatrix(out.row_dim(v), out.col_dim(v), std::move(data));
  }
  return out;
}

Representation tensor_product(const Representation& r1, const Representation& r2) {
  require_same_diagram(r1, r2);
  Representation out{r1.diagram, {}, {}};
  for (const auto& [w, d] : r1.dims) out.dims[w] = d * r2.dims.at(w);
  for (const auto& v : r1.diagram.vertices()) {
    const auto n = r1.diagram.neighborhood(v);
    const std::size_t p = n.outgoing.size(), q = n.incoming.size();
    // Axes of the Kronecker product: out(r1), out(r2), in(r1), in(r2).
    std::vector<std::size_t> dims;
    for (const auto& w : n.outgoing) dims.push_back(r1.dims.at(w));
    for (const auto& w : n.outgoing) dims.push_back(r2.dims.at(w));
    for (const auto& w : n.incoming) dims.push_back(r1.dims.at(w));
    for (const auto& w : n.incoming) dims.push_back(r2.dims.at(w));
    std::vector<std::size_t> perm;
    for (std::size_t k = 0; k < p; ++k) {
      perm.push_back(k);
      perm.push_back(p + k);
    }
    for (std::size_t k = 0; k < q; ++k) {
      perm.push_back(2 * p + k);
      perm.push_back(2 * p + q + k);
    }
    const RatMatrix k = kron(r1.tensors.at(v), r2.tensors.at(v));
    out.tensors[v] = RatMatrix(k.rows(), k.cols(), kernels::permute_axes(k.data(), dims, perm));
  }
  return out;
}

Representation unit(const TensorDiagram& d) {
  Representation r{d, {}, {}};
  for (const auto& w : d.wires()) r.dims[w.id] = 1;
  for (const auto& v : d.vertices()) r.tensors[v] = RatMatrix::identity(1);
  return r;
}

Representation zero_rep(const TensorDiagram& d) {
  Representation r{d, {}, {}};
  for (const auto& w : d.wires()) r.dims[w.id] = 0;
  for (const auto& v : d.vertices()) r.tensors[v] = RatMatrix(r.row_dim(v), r.col_dim(v));
  return r;
}

TensorDiagram dual_diagram(const TensorDiagram& d) {
  RawDiagram raw{d.vertices(), d.wires()};
  for (auto& w : raw.wires) std::swap(w.tail, w.head);
  return validate_diagram(std::move(raw));
}

Representation dual_rep(const Representation& r) {
  Representation out{dual_diagram(r.diagram), r.dims, {}};
  for (const auto& [v, m] : r.tensors) out.tensors[v] = m.transpose();
  return out;
}

bool is_morphism(const RepMorphism& phi, const Representation& r1, const Representation& r2) {
  require_same_diagram(r1, r2);
  for (const auto& w : r1.diagram.wires()) {
    auto it = phi.find(w.id);
    if (it == phi.end() || it->second.rows() != r2.dims.at(w.id) || it->second.cols() != r1.dims.at(w.id)) {
      throw Error(ErrorKind::ShapeMismatch, "morphism at wire " + w.id);
    }
  }
  for (const auto& v : r1.diagram.vertices()) {
    const auto n = r1.diagram.neighborhood(v);
    if (!(kron_all(n.outgoing, phi) * r1.tensors.at(v) == r2.tensors.at(v) * kron_all(n.incoming, phi))) return false;
  }
  return true;
}

RepMorphism compose(const RepMorphism& psi, const RepMorphism& phi) {
  RepMorphism out;
  for (const auto& [w, m] : phi) out[w] = psi.at(w) * m;
  return out;
}

RepMorphism identity_morphism(const Representation& r) {
  RepMorphism out;
  for (const auto& [w, d] : r.dims) out[w] = RatMatrix::identity(d);
  return out;
}

RepMorphism dual_morphism(const RepMorphism& phi) {
  RepMorphism out;
  for (const auto& [w, m] : phi) out[w] = m.transpose();
  return out;
}

std::size_t hom_dim(const Representation& r1, const Representation& r2) {
  require_same_diagram(r1, r2);
  std::map<std::string, std::size_t> offset;
  std::size_t unknowns = 0;
  for (const auto& w : r1.diagram.wires()) {
    offset[w.id] = unknowns;
    unknowns += r2.dims.at(w.id) * r1.dims.at(w.id);
  }
  const auto var = [&](const std::string& w, std::size_t i, std::size_t j) { return offset[w] + i * r1.dims.at(w) + j; };
  std::vector<std::vector<Rational>> rows;
  for (const auto& v : r1.diagram.vertices()) {
    const auto n = r1.diagram.neighborhood(v);
    if (n.outgoing.size() != 1 || n.incoming.size() != 1) {
      throw Error(ErrorKind::Unsupported, "hom_dim needs one incoming and one outgoing wire at vertex " + v);
    }
    const std::string& o = n.outgoing[0];
    const std::string& in = n.incoming[0];
    const RatMatrix& a = r1.tensors.at(v);
    const RatMatrix& b = r2.tensors.at(v);
    // phi_o A - B phi_in = 0, entry (i, j)
    for (std::size_t i = 0; i < r2.dims.at(o); ++i)
      for (std::size_t j = 0; j < r1.dims.at(in); ++j) {
        std::vector<Rational> row(unknowns);
        for (std::size_t k = 0; k < r1.dims.at(o); ++k) row[var(o, i, k)] += a(k, j);
        for (std::size_t k = 0; k < r2.dims.at(in); ++k) row[var(in, k, j)] -= b(i, k);
        rows.push_back(std::move(row));
      }
  }
  RatMatrix m(rows.size(), unknowns);
  for (std::size_t i = 0; i < rows.size(); ++i)
    for (std::size_t j = 0; j < unknowns; ++j) m(i, j) = rows[i][j];
  return unknowns - rank(m);
}

namespace {

CokernelResult cokernel_impl(const RepMorphism& phi, const Representation& r1, const Representation& r2, bool monic) {
  if (!is_morphism(phi, r1, r2)) throw Error(ErrorKind::NotAMorphism, "cokernel input");
  RepMorphism psi, section;
  Representation r3{r2.diagram, {}, {}};
  for (const auto& w : r2.diagram.wires()) {
    const RatMatrix& f = phi.at(w.id);
    if (monic && rank(f) != f.cols()) throw Error(ErrorKind::NotMonic, "map at wire " + w.id + " is not injective");
    const Echelon e = rref(left_nullspace(f));
    RatMatrix s(f.rows(), e.pivots.size());
    for (std::size_t j = 0; j < e.pivots.size(); ++j) s(e.pivots[j], j) = 1;
    psi[w.id] = e.reduced.block(0, 0, e.pivots.size(), f.rows());
    section[w.id] = std::move(s);
    r3.dims[w.id] = e.pivots.size();
  }
  for (const auto& v : r2.diagram.vertices()) {
    const auto n = r2.diagram.neighborhood(v);
    r3.tensors[v] = kron_all(n.outgoing, psi) * r2.tensors.at(v) * kron_all(n.incoming, section);
  }
  if (!is_morphism(psi, r2, r3)) {
    throw Error(ErrorKind::Unsupported, "quotient map is not a morphism (vertex with several incoming wires)");
  }
  return {std::move(r3), std::move(psi)};
}

}  // namespace

CokernelResult cokernel(const RepMorphism& phi, const Representation& r1, const Representation& r2) {
  return cokernel_impl(phi, r1, r2, true);
}

KernelResult kernel(const RepMorphism& phi, const Representation& r1, const Representation& r2) {
  if (!is_morphism(phi, r1, r2)) throw Error(ErrorKind::NotAMorphism, "kernel input");
  const CokernelResult c = cokernel_impl(dual_morphism(phi), dual_rep(r2), dual_rep(r1), false);
  KernelResult k{dual_rep(c.rep), dual_morphism(c.projection)};
  if (!is_morphism(k.inclusion, k.rep, r1)) {
    throw Error(ErrorKind::Unsupported, "kernel inclusion is not a morphism (vertex with several outgoing wires)");
  }
  return k;
}

namespace {

void check_closed(const Representation& r) {
  for (const auto& w : r.diagram.wires()) {
    if (w.is_endpointless()) throw Error(ErrorKind::NotNormalized, "endpointless wire " + w.id);
    if (w.is_dangling()) throw Error(ErrorKind::NotClosed, "dangling wire " + w.id);
  }
}

LabeledTensor traced_vertex(const Representation& r, const std::string& v) {
  LabeledTensor t = vertex_tensor(r, v);
  for (const auto& w : self_wires(t)) t = trace_wire(t, w);
  return t;
}

std::size_t tensor_size(const LabeledTensor& t) {
  std::size_t s = 1;
  for (auto d : t.dims) s *= d;
  return s;
}

Rational scalar_of(const LabeledTensor& t) {
  if (!t.axes.empty()) throw Error(ErrorKind::NotClosed, "free index left after contraction");
  return t.data.empty() ? Rational(0) : t.data[0];
}

}  // namespace

Rational contract(const Representation& r) {
  check_closed(r);
  std::vector<LabeledTensor> pool;
  for (const auto& v : r.diagram.vertices()) pool.push_back(traced_vertex(r, v));
  while (true) {
    std::size_t best_i = 0, best_j = 0, best_cost = std::numeric_limits<std::size_t>::max();
    std::vector<std::string> best_wires;
    for (std::size_t i = 0; i < pool.size(); ++i)
      for (std::size_t j = i + 1; j < pool.size(); ++j) {
        auto wires = shared_wires(pool[i], pool[j]);
        if (wires.empty()) continue;
        std::size_t inner = 1;
        for (const auto& w : wires) inner *= r.dims.at(w);
        const std::size_t cost = inner == 0 ? 0 : tensor_size(pool[i]) / inner * (tensor_size(pool[j]) / inner);
        if (cost < best_cost) {
          best_cost = cost;
          best_i = i;
          best_j = j;
          best_wires = std::move(wires);
        }
      }
    if (best_wires.empty()) break;
    LabeledTensor merged = contract_pair(pool[best_i], pool[best_j], best_wires);
    pool.erase(pool.begin() + static_cast<std::ptrdiff_t>(best_j));
    pool[best_i] = std::move(merged);
  }
  Rational value = 1;
  for (const auto& t : pool) value *= scalar_of(t);
  return value;
}

Rational contract_in_order(const Representation& r, const std::vector<std::string>& order) {
  check_closed(r);
  std::vector<std::string> sorted = order;
  std::sort(sorted.begin(), sorted.end());
  if (sorted != r.diagram.vertices()) throw Error(ErrorKind::UnknownVertex, "order must list every vertex once");
  LabeledTensor acc{{}, {}, {Rational(1)}};
  for (const auto& v : order) acc = contract_pair(acc, traced_vertex(r, v), shared_wires(acc, traced_vertex(r, v)));
  return scalar_of(acc);
}

RatMatrix monodromy(const Representation& r, const std::string& base_wire) {
  const TensorDiagram& d = r.diagram;
  if (!d.has_wire(base_wire)) throw Error(ErrorKind::NotALoop, "unknown base wire " + base_wire);
  for (const auto& v : d.vertices()) {
    const auto n = d.neighborhood(v);
    if (n.incoming.size() != 1 || n.outgoing.size() != 1) throw Error(ErrorKind::NotALoop, "vertex " + v + " is not on a directed cycle");
  }
  RatMatrix l = RatMatrix::identity(r.dims.at(base_wire));
  std::string w = base_wire;
  std::size_t steps = 0;
  do {
    const Wire& x = d.wire(w);
    if (!x.head) throw Error(ErrorKind::NotALoop, "wire " + w + " dangles");
    l = r.tensors.at(*x.head) * l;
    w = d.neighborhood(*x.head).outgoing[0];
    ++steps;
  } while (w != base_wire && steps <= d.vertices().size());
  if (w != base_wire || steps != d.vertices().size() || d.wires().size() != steps) {
    throw Error(ErrorKind::NotALoop, "diagram is not a single directed cycle");
  }
  return l;
}

Representation reverse_wire_rep(const Representation& r, const std::string& w) {
  const Wire& x = r.diagram.wire(w);
  Representation out{reverse_wire(r.diagram, w), r.dims, r.tensors};
  std::vector<std::string> touched;
  if (x.tail) touched.push_back(*x.tail);
  if (x.head && x.head != x.tail) touched.push_back(*x.head);
  for (const auto& v : touched) {
    LabeledTensor t = vertex_tensor(r, v);
    for (auto& s : t.axes)
      if (s.wire == w) s = flipped(s);
    out.tensors[v] = vertex_matrix(out.diagram, v, t);
  }
  return out;
}

Representation split_functor(const Representation& split, const TensorDiagram& original, const SplitResult& s,
                             const std::string& vertex) {
  if (!(split.diagram == s.diagram)) throw Error(ErrorKind::DiagramMismatch, "representation is not on the split diagram");
  if (split.dims.at(s.fresh_wire) != 1) {
    throw Error(ErrorKind::RestrictedDimViolation, "wire " + s.fresh_wire + " must have dimension 1");
  }
  const LabeledTensor merged =
      contract_pair(vertex_tensor(split, s.first), vertex_tensor(split, s.second), {s.fresh_wire});
  Representation out{original, split.dims, {}};
  out.dims.erase(s.fresh_wire);
  for (const auto& v : original.vertices()) {
    out.tensors[v] = v == vertex ? vertex_matrix(original, v, merged) : split.tensors.at(v);
  }
  return validate_representation(out.diagram, out.dims, out.tensors);
}

Representation split_rep(const Representation& r, const SplitResult& s, const std::string& vertex) {
  const LabeledTensor t = vertex_tensor(r, vertex);
  const Slot f_out{s.fresh_wire, End::Out}, f_in{s.fresh_wire, End::In};
  std::vector<Slot> p1, p2;
  for (const auto& a : vertex_axes(s.diagram, s.first))
    if (a != f_out) p1.push_back(a);
  for (const auto& a : vertex_axes(s.diagram, s.second))
    if (a != f_in) p2.push_back(a);
  std::vector<Slot> order = p1;
  order.insert(order.end(), p2.begin(), p2.end());
  const LabeledTensor p = permute(t, order);
  std::size_t m = 1, n = 1;
  for (std::size_t k = 0; k < p1.size(); ++k) m *= p.dims[k];
  for (std::size_t k = p1.size(); k < p.dims.size(); ++k) n *= p.dims[k];
  const RatMatrix x(m, n, p.data);
  if (rank(x) > 1) throw Error(ErrorKind::RestrictedDimViolation, "vertex tensor has rank above 1 across the split");

  std::vector<Rational> u(m), w(n);
  for (std::size_t j = 0; j < n; ++j) {
    std::size_t i0 = 0;
    while (i0 < m && x(i0, j) == 0) ++i0;
    if (i0 == m) continue;
    for (std::size_t i = 0; i < m; ++i) u[i] = x(i, j);
    for (std::size_t k = 0; k < n; ++k) w[k] = x(i0, k) / x(i0, j);
    break;
  }

  Representation out{s.diagram, r.dims, {}};
  out.dims[s.fresh_wire] = 1;
  for (const auto& v : r.diagram.vertices())
    if (v != vertex) out.tensors[v] = r.tensors.at(v);
  LabeledTensor t1{p1, {}, u}, t2{{f_in}, {1}, w};
  for (const auto& a : p1) t1.dims.push_back(r.dims.at(a.wire));
  t1.axes.push_back(f_out);
  t1.dims.push_back(1);
  for (const auto& a : p2) {
    t2.axes.push_back(a);
    t2.dims.push_back(r.dims.at(a.wire));
  }
  out.tensors[s.first] = vertex_matrix(s.diagram, s.first, t1);
  out.tensors[s.second] = vertex_matrix(s.diagram, s.second, t2);
  return validate_representation(out.diagram, out.dims, out.tensors);
}

}  // namespace tdr
