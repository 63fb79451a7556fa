#include "tdr/tensor.hpp"

#include <algorithm>

#include "tdr/error.hpp"
#include "tdr/kernels.hpp"

namespace tdr {

namespace {

Slot other_end(const Slot& s) { return {s.wire, s.end == End::Out ? End::In : End::Out}; }

std::size_t product(const std::vector<std::size_t>& dims, std::size_t from, std::size_t to) {
  std::size_t p = 1;
  for (std::size_t i = from; i < to; ++i) p *= dims[i];
  return p;
}

}  // namespace

std::size_t LabeledTensor::axis(const Slot& s) const {
  auto it = std::find(axes.begin(), axes.end(), s);
  if (it == axes.end()) throw Error(ErrorKind::ShapeMismatch, "no axis for wire " + s.wire);
  return static_cast<std::size_t>(it - axes.begin());
}

bool LabeledTensor::has_axis(const Slot& s) const { return std::find(axes.begin(), axes.end(), s) != axes.end(); }

LabeledTensor permute(const LabeledTensor& t, const std::vector<Slot>& order) {
  if (order.size() != t.axes.size()) throw Error(ErrorKind::ShapeMismatch, "axis permutation size");
  std::vector<std::size_t> perm;
  for (const auto& s : order) perm.push_back(t.axis(s));
  LabeledTensor out;
  out.axes = order;
  for (auto p : perm) out.dims.push_back(t.dims[p]);
  out.data = kernels::permute_axes(t.data, t.dims, perm);
  return out;
}

LabeledTensor trace_wire(const LabeledTensor& t, const std::string& wire) {
  const Slot o{wire, End::Out}, i{wire, End::In};
  std::vector<Slot> order;
  for (const auto& s : t.axes)
    if (s != o && s != i) order.push_back(s);
  const std::size_t free = order.size();
  order.push_back(o);
  order.push_back(i);
  const LabeledTensor p = permute(t, order);
  const std::size_t d = p.dims[free];
  const std::size_t outer = product(p.dims, 0, free);
  LabeledTensor out;
  out.axes.assign(order.begin(), order.begin() + static_cast<std::ptrdiff_t>(free));
  out.dims.assign(p.dims.begin(), p.dims.begin() + static_cast<std::ptrdiff_t>(free));
  out.data.assign(outer, Rational(0));
  for (std::size_t k = 0; k < outer; ++k)
    for (std::size_t x = 0; x < d; ++x) out.data[k] += p.data[(k * d + x) * d + x];
  return out;
}

LabeledTensor contract_pair(const LabeledTensor& a, const LabeledTensor& b, const std::vector<std::string>& wires) {
  std::vector<Slot> shared_a, shared_b;
  for (const auto& w : wires) {
    const Slot out{w, End::Out};
    const Slot sa = a.has_axis(out) ? out : other_end(out);
    shared_a.push_back(sa);
    shared_b.push_back(other_end(sa));
  }
  const auto is_in = [](const std::vector<Slot>& v, const Slot& s) { return std::find(v.begin(), v.end(), s) != v.end(); };
  std::vector<Slot> order_a, order_b;
  for (const auto& s : a.axes)
    if (!is_in(shared_a, s)) order_a.push_back(s);
  const std::size_t free_a = order_a.size();
  order_a.insert(order_a.end(), shared_a.begin(), shared_a.end());
  order_b = shared_b;
  for (const auto& s : b.axes)
    if (!is_in(shared_b, s)) order_b.push_back(s);

  const LabeledTensor pa = permute(a, order_a);
  const LabeledTensor pb = permute(b, order_b);
  for (std::size_t k = 0; k < shared_a.size(); ++k) {
    if (pa.dims[free_a + k] != pb.dims[k]) throw Error(ErrorKind::ShapeMismatch, "wire " + wires[k] + " dimension");
  }
  const std::size_t m = product(pa.dims, 0, free_a);
  const std::size_t inner = product(pa.dims, free_a, pa.dims.size());
  const std::size_t n = product(pb.dims, shared_b.size(), pb.dims.size());
  const RatMatrix ma(m, inner, pa.data);
  const RatMatrix mb(inner, n, pb.data);
  const RatMatrix mc = ma * mb;

  LabeledTensor out;
  out.axes.assign(order_a.begin(), order_a.begin() + static_cast<std::ptrdiff_t>(free_a));
  out.axes.insert(out.axes.end(), order_b.begin() + static_cast<std::ptrdiff_t>(shared_b.size()), order_b.end());
  out.dims.assign(pa.dims.begin(), pa.dims.begin() + static_cast<std::ptrdiff_t>(free_a));
  out.dims.insert(out.dims.end(), pb.dims.begin() + static_cast<std::ptrdiff_t>(shared_b.size()), pb.dims.end());
  out.data.assign(mc.data().begin(), mc.data().end());
  return out;
}

std::vector<std::string> shared_wires(const LabeledTensor& a, const LabeledTensor& b) {
  std::vector<std::string> out;
  for (const auto& s : a.axes)
    if (b.has_axis(other_end(s)) && !a.has_axis(other_end(s))) out.push_back(s.wire);
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

std::vector<std::string> self_wires(const LabeledTensor& t) {
  std::vector<std::string> out;
  for (const auto& s : t.axes)
    if (s.end == End::Out && t.has_axis(other_end(s))) out.push_back(s.wire);
  return out;
}

}  // namespace tdr
