#include "tdr/decompose.hpp"

#include <algorithm>
#include <map>

#include "tdr/canonical.hpp"
#include "tdr/error.hpp"
#include "tdr/factor.hpp"
#include "tdr/generate.hpp"
#include "tdr/linalg.hpp"
#include "tdr/shapes.hpp"

namespace tdr {

IndecompDescriptor IndecompDescriptor::interval(std::size_t a, std::size_t b) {
  IndecompDescriptor d;
  d.kind = Kind::Interval;
  d.a = a;
  d.b = b;
  return d;
}

IndecompDescriptor IndecompDescriptor::band(RatPoly p, int s) {
  IndecompDescriptor d;
  d.kind = Kind::Band;
  d.poly = std::move(p);
  d.power = s;
  return d;
}

IndecompDescriptor IndecompDescriptor::string(std::size_t start, std::size_t len) {
  IndecompDescriptor d;
  d.kind = Kind::String;
  d.start = start;
  d.len = len;
  return d;
}

std::strong_ordering operator<=>(const IndecompDescriptor& x, const IndecompDescriptor& y) {
  if (auto c = x.kind <=> y.kind; c != 0) return c;
  switch (x.kind) {
    case IndecompDescriptor::Kind::Interval:
      if (auto c = x.a <=> y.a; c != 0) return c;
      return x.b <=> y.b;
    case IndecompDescriptor::Kind::Band:
      if (auto c = x.poly <=> y.poly; c != 0) return c;
      return x.power <=> y.power;
    case IndecompDescriptor::Kind::String:
      if (auto c = x.start <=> y.start; c != 0) return c;
      return x.len <=> y.len;
  }
  return std::strong_ordering::equal;
}

std::vector<IndecompDescriptor> Decomposition::multiset() const {
  std::vector<IndecompDescriptor> out;
  for (const auto& e : entries) out.insert(out.end(), e.mult, e.desc);
  return out;
}

namespace {

using Kind = IndecompDescriptor::Kind;

// Path or cycle quiver data in frame order.
struct Quiver {
  std::vector<std::size_t> dims;
  std::vector<RatMatrix> maps;  // maps[i] : position i -> position i+1
};


const Wire& other_slot_wire(const TensorDiagram& d, const std::string& v, const std::string& prev, bool& found) {
  for (const auto& s : d.slots(v)) {
    if (s.wire != prev) {
      found = true;
      return d.wire(s.wire);
    }
  }
  found = false;
  return d.wires().front();
}

// Walks from v, stepping out through the slot not on `prev`; stops at a
// dead end, a dangling wire, or on returning to `stop`.
void walk(const TensorDiagram& d, ShapeFrame& f, std::string v, std::string prev, const std::string& stop) {
  for (;;) {
    f.vertices.push_back(v);
    bool found = false;
    const Wire& w = other_slot_wire(d, v, prev, found);
    if (!found || w.id == stop) return;
    if (w.tail != v) f.reversed.push_back(w.id);
    f.positions.emplace_back(w.id);
    const auto next = w.tail == v ? w.head : w.tail;
    if (!next) return;
    v = *next;
    prev = w.id;
  }
}

Quiver to_quiver(const Representation& r, const ShapeFrame& f) {
  Representation rr = r;
  for (const auto& w : f.reversed) rr = reverse_wire_rep(rr, w);
  Quiver q;
  for (const auto& p : f.positions) q.dims.push_back(p ? r.dims.at(*p) : 1);
  for (const auto& v : f.vertices) q.maps.push_back(rr.tensors.at(v));
  return q;
}

Representation from_quiver(const TensorDiagram& d, const ShapeFrame& f, const Quiver& q) {
  TensorDiagram nd = d;
  for (const auto& w : f.reversed) nd = reverse_wire(nd, w);
  DimensionVector dims;
  for (std::size_t p = 0; p < f.positions.size(); ++p) {
    if (f.positions[p]) {
      dims[*f.positions[p]] = q.dims[p];
    } else if (q.dims[p] != 1) {
      throw Error(ErrorKind::InvalidDescriptor, "blocks must fill the pinned slot exactly once");
    }
  }
  std::map<std::string, RatMatrix> tensors;
  for (std::size_t i = 0; i < f.vertices.size(); ++i) tensors[f.vertices[i]] = q.maps[i];
  Representation out = validate_representation(nd, dims, tensors);
  for (const auto& w : f.reversed) out = reverse_wire_rep(out, w);
  return out;
}

void validate_descriptor(const ShapeFrame& f, const IndecompDescriptor& desc) {
  const std::size_t np = f.positions.size();
  const auto bad = [&](const std::string& why) { throw Error(ErrorKind::InvalidDescriptor, to_string(desc) + ": " + why); };
  switch (desc.kind) {
    case Kind::Interval:
      if (f.cyclic()) bad("intervals live on open paths");
      if (desc.a < 1 || desc.a > desc.b || desc.b > np) bad("out of range");
      break;
    case Kind::Band:
      if (!f.cyclic()) bad("bands live on cycles");
      if (desc.power < 1) bad("power must be positive");
      if (!desc.poly.is_monic() || desc.poly.degree() < 1 || desc.poly.coeff(0) == 0) bad("bad polynomial");
      if (!is_irreducible(desc.poly)) bad("polynomial is reducible");
      break;
    case Kind::String:
      if (!f.cyclic()) bad("strings live on cycles");
      if (desc.start < 1 || desc.start > np || desc.len < 1) bad("out of range");
      break;
  }
}

Quiver block_quiver(const ShapeFrame& f, const IndecompDescriptor& desc) {
  validate_descriptor(f, desc);
  const std::size_t np = f.positions.size();
  Quiver q;
  switch (desc.kind) {
    case Kind::Interval: {
      for (std::size_t p = 0; p < np; ++p) q.dims.push_back(p + 1 >= desc.a && p + 1 <= desc.b ? 1 : 0);
      for (std::size_t i = 0; i < f.vertices.size(); ++i) {
        RatMatrix m(q.dims[i + 1], q.dims[i]);
        if (m.size() == 1) m(0, 0) = 1;
        q.maps.push_back(std::move(m));
      }
      break;
    }
    case Kind::Band: {
      const RatPoly full = desc.poly.pow(static_cast<unsigned>(desc.power));
      const auto k = static_cast<std::size_t>(full.degree());
      q.dims.assign(np, k);
      q.maps.push_back(companion(full));
      for (std::size_t i = 1; i < np; ++i) q.maps.push_back(RatMatrix::identity(k));
      break;
    }
    case Kind::String: {
      // Chain vector k sits at position (start - 1 + k) mod np.
      std::vector<std::size_t> slot(desc.len);
      q.dims.assign(np, 0);
      for (std::size_t k = 0; k < desc.len; ++k) slot[k] = q.dims[(desc.start - 1 + k) % np]++;
      for (std::size_t i = 0; i < np; ++i) q.maps.emplace_back(q.dims[(i + 1) % np], q.dims[i]);
      for (std::size_t k = 0; k + 1 < desc.len; ++k) {
        const std::size_t p = (desc.start - 1 + k) % np;
        q.maps[p](slot[k + 1], slot[k]) = 1;
      }
      break;
    }
  }
  return q;
}

Quiver sum_quiver(const ShapeFrame& f, const std::vector<IndecompDescriptor>& descs) {
  Quiver q;
  q.dims.assign(f.positions.size(), 0);
  q.maps.assign(f.vertices.size(), RatMatrix());
  for (std::size_t i = 0; i < f.vertices.size(); ++i) q.maps[i] = RatMatrix(0, 0);
  for (const auto& desc : descs) {
    const Quiver b = block_quiver(f, desc);
    for (std::size_t p = 0; p < q.dims.size(); ++p) q.dims[p] += b.dims[p];
    for (std::size_t i = 0; i < q.maps.size(); ++i) q.maps[i] = RatMatrix::direct_sum(q.maps[i], b.maps[i]);
  }
  return q;
}

std::vector<IndecompDescriptor> linear_blocks(const Quiver& q) {
  const std::size_t np = q.dims.size();
  // r[a][b]: rank of the composite from position a to position b.
  std::vector<std::vector<std::size_t>> r(np, std::vector<std::size_t>(np, 0));
  for (std::size_t a = 0; a < np; ++a) {
    r[a][a] = q.dims[a];
    RatMatrix comp = RatMatrix::identity(q.dims[a]);
    for (std::size_t b = a + 1; b < np; ++b) {
      comp = q.maps[b - 1] * comp;
      r[a][b] = rank(comp);
    }
  }
  const auto at = [&](std::size_t a, std::size_t b) -> long {
    if (a >= np || b >= np) return 0;
    return static_cast<long>(r[a][b]);
  };
  std::vector<IndecompDescriptor> out;
  for (std::size_t a = 0; a < np; ++a) {
    for (std::size_t b = a; b < np; ++b) {
      const long m = at(a, b) - (a ? at(a - 1, b) : 0) - at(a, b + 1) + (a ? at(a - 1, b + 1) : 0);
      out.insert(out.end(), static_cast<std::size_t>(std::max(m, 0L)), IndecompDescriptor::interval(a + 1, b + 1));
    }
  }
  return out;
}

std::vector<IndecompDescriptor> cyclic_blocks(const Quiver& q) {
  std::vector<IndecompDescriptor> out;
  RatMatrix l = RatMatrix::identity(q.dims[0]);
  for (const auto& m : q.maps) l = m * l;
  if (l.rows() > 0) {
    for (auto& ed : rational_canonical(l)) {
      if (ed.poly == RatPoly::x()) continue;
      out.push_back(IndecompDescriptor::band(std::move(ed.poly), ed.power));
    }
  }
  for (const auto& c : graded_nil_chains(q.maps)) out.push_back(IndecompDescriptor::string(c.start_grade, c.length));
  return out;
}

RatPoly random_band_poly(SplitMix64& rng, int degree) {
  for (;;) {
    std::vector<Rational> c;
    for (int i = 0; i < degree; ++i) c.push_back(rng.rational());
    c.emplace_back(1);
    RatPoly p(std::move(c));
    if (p.coeff(0) != 0 && is_irreducible(p)) return p;
  }
}

std::size_t pinned_hits(std::size_t start, std::size_t len, std::size_t np) {
  std::size_t hits = 0;
  for (std::size_t k = 0; k < len; ++k) hits += (start - 1 + k) % np == 0;
  return hits;
}

}  // namespace

ShapeFrame shape_frame(const TensorDiagram& d) {
  const auto cls = classify_diagram(d);
  if (cls.size() != 1) throw Error(ErrorKind::NotConnected, "diagram has " + std::to_string(cls.size()) + " components");
  if (cls[0].cls.kind == ClassKind::Wild) throw Error(ErrorKind::NotDecomposable, "diagram is wild");
  ShapeFrame f;
  f.shape = cls[0].cls.shape;
  switch (f.shape) {
    case ShapeKind::A0:
    case ShapeKind::A1: {
      const Wire* first = nullptr;
      for (const auto& w : d.wires())
        if (w.is_dangling() && !first) first = &w;
      const std::string v = first->head ? *first->head : *first->tail;
      if (!first->head) f.reversed.push_back(first->id);
      f.positions.emplace_back(first->id);
      walk(d, f, v, first->id, "");
      if (f.shape == ShapeKind::A1) f.positions.emplace_back(std::nullopt);
      break;
    }
    case ShapeKind::J: {
      const Wire& base = d.wires().front();
      const std::string v = std::min(*base.tail, *base.head);
      if (base.head != v) f.reversed.push_back(base.id);
      f.positions.emplace_back(base.id);
      walk(d, f, v, base.id, base.id);
      break;
    }
    case ShapeKind::P: {
      std::string v;
      for (const auto& x : d.vertices()) {
        if (d.degree(x) <= 1) {
          v = x;
          break;
        }
      }
      f.positions.emplace_back(std::nullopt);
      walk(d, f, v, "", "");
      break;
    }
  }
  f.n = f.vertices.size();
  std::sort(f.reversed.begin(), f.reversed.end());
  return f;
}

TensorDiagram canonical_shape(ShapeKind shape, std::size_t n) {
  switch (shape) {
    case ShapeKind::A0: return shapes::open_path(n);
    case ShapeKind::A1: return shapes::half_open_path(n);
    case ShapeKind::P: return shapes::closed_path(n);
    case ShapeKind::J: return shapes::loop(n);
  }
  return {};
}

Decomposition decompose(const Representation& r) {
  const ShapeFrame f = shape_frame(r.diagram);
  const Quiver q = to_quiver(r, f);
  auto blocks = f.cyclic() ? cyclic_blocks(q) : linear_blocks(q);
  std::sort(blocks.begin(), blocks.end());
  Decomposition out{f.shape, f.n, {}};
  for (auto& b : blocks) {
    if (!out.entries.empty() && out.entries.back().desc == b) {
      ++out.entries.back().mult;
      continue;
    }
    std::optional<DescriptorAlias> alias;
    if (f.shape == ShapeKind::P) alias = closed_path_alias(b, f.n);
    out.entries.push_back({std::move(b), 1, std::move(alias)});
  }
  return out;
}

Representation realize(const TensorDiagram& d, const IndecompDescriptor& desc) { return realize_sum(d, {desc}); }

Representation realize_sum(const TensorDiagram& d, const std::vector<IndecompDescriptor>& descs) {
  const ShapeFrame f = shape_frame(d);
  return from_quiver(d, f, sum_quiver(f, descs));
}

bool isomorphic(const Representation& r1, const Representation& r2) {
  if (!(r1.diagram == r2.diagram)) throw Error(ErrorKind::DiagramMismatch, "representations live on different diagrams");
  for (const auto& c : classify_diagram(r1.diagram)) {
    if (c.cls.kind == ClassKind::Wild) throw Error(ErrorKind::NotDecidableWild, "isomorphism on a wild diagram");
  }
  if (r1.dims != r2.dims) return false;
  return decompose(r1) == decompose(r2);
}

std::optional<DescriptorAlias> closed_path_alias(const IndecompDescriptor& desc, std::size_t n) {
  if (desc.kind == Kind::Band && desc.power == 1 && desc.poly.degree() == 1) {
    return DescriptorAlias{DescriptorAlias::Kind::Vlambda, 0, -desc.poly.coeff(0)};
  }
  if (desc.kind != Kind::String) return std::nullopt;
  if (desc.len == 1) return DescriptorAlias{DescriptorAlias::Kind::V0, desc.start, 0};
  if (desc.len > n) return DescriptorAlias{DescriptorAlias::Kind::W, (desc.start + desc.len - 2) % n + 1, 0};
  return std::nullopt;
}

std::string to_string(const IndecompDescriptor& desc) {
  switch (desc.kind) {
    case Kind::Interval: return "Interval[" + std::to_string(desc.a) + "," + std::to_string(desc.b) + "]";
    case Kind::Band: return "Band(" + to_string(desc.poly) + "," + std::to_string(desc.power) + ")";
    case Kind::String: return "String(" + std::to_string(desc.start) + "," + std::to_string(desc.len) + ")";
  }
  return "?";
}

std::string to_string(const DescriptorAlias& alias) {
  switch (alias.kind) {
    case DescriptorAlias::Kind::V0: return "V0{" + std::to_string(alias.i) + "}";
    case DescriptorAlias::Kind::Vlambda: return "V{" + to_string(alias.lambda) + "}";
    case DescriptorAlias::Kind::W: return "W{" + std::to_string(alias.i) + "}";
  }
  return "?";
}

SumSample random_sum(const TensorDiagram& d, SplitMix64& rng, std::size_t max_blocks) {
  const ShapeFrame f = shape_frame(d);
  const std::size_t np = f.positions.size();
  std::size_t count = 1 + rng.below(std::max<std::size_t>(max_blocks, 1));
  std::vector<IndecompDescriptor> key;
  const auto random_string = [&] { return IndecompDescriptor::string(1 + rng.below(np), 1 + rng.below(2 * np + 1)); };
  switch (f.shape) {
    case ShapeKind::A0:
      for (std::size_t k = 0; k < count; ++k) {
        const std::size_t a = 1 + rng.below(np);
        key.push_back(IndecompDescriptor::interval(a, a + rng.below(np - a + 1)));
      }
      break;
    case ShapeKind::A1:
      key.push_back(IndecompDescriptor::interval(1 + rng.below(np), np));
      for (std::size_t k = 1; k < count && np > 1; ++k) {
        const std::size_t a = 1 + rng.below(np - 1);
        key.push_back(IndecompDescriptor::interval(a, a + rng.below(np - a)));
      }
      break;
    case ShapeKind::J:
      for (std::size_t k = 0; k < count; ++k) {
        if (rng.below(2)) {
          const int deg = 1 + static_cast<int>(rng.below(3));
          const int s = 1 + static_cast<int>(rng.below(3));
          key.push_back(IndecompDescriptor::band(random_band_poly(rng, deg), s));
        } else {
          key.push_back(random_string());
        }
      }
      break;
    case ShapeKind::P:
      if (rng.below(3) == 0) {
        key.push_back(IndecompDescriptor::band(random_band_poly(rng, 1), 1));
      } else {
        for (;;) {
          auto s = random_string();
          if (pinned_hits(s.start, s.len, np) != 1) continue;
          key.push_back(s);
          break;
        }
      }
      for (std::size_t k = 1; k < count && np > 1; ++k) {
        const std::size_t start = 2 + rng.below(np - 1);
        key.push_back(IndecompDescriptor::string(start, 1 + rng.below(np - start + 1)));
      }
      break;
  }
  std::sort(key.begin(), key.end());
  Representation rep = from_quiver(d, f, sum_quiver(f, key));
  rep = apply_group_element(random_group_element(rep, rng), rep);
  return {std::move(rep), std::move(key)};
}

}  // namespace tdr
