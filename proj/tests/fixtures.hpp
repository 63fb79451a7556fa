#pragma once

// Random diagrams and flows shared by unit tests and the acceptance suite.

#include <cmath>
#include <complex>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "tdr/flows.hpp"
#include "tdr/random.hpp"
#include "tdr/semigraph.hpp"

namespace fixture {

using namespace tdr;

inline double unit_double(SplitMix64& rng) { return static_cast<double>(rng.next() >> 11) * 0x1.0p-53; }

inline TensorDiagram random_diagram(SplitMix64& rng, std::size_t nv, std::size_t nw, bool closed = false) {
  RawDiagram raw;
  for (std::size_t i = 0; i < nv; ++i) raw.vertices.push_back("v" + std::to_string(i));
  for (std::size_t i = 0; i < nw; ++i) {
    Wire w{"w" + std::to_string(i), std::nullopt, std::nullopt};
    const auto pick = [&]() -> std::optional<std::string> {
      if (!closed && rng.below(5) == 0) return std::nullopt;
      return "v" + std::to_string(rng.below(nv));
    };
    w.tail = pick();
    w.head = pick();
    if (!w.tail && !w.head) w.tail = "v0";
    raw.wires.push_back(std::move(w));
  }
  return validate_diagram(std::move(raw));
}

inline std::complex<double> random_unit_scalar(SplitMix64& rng) {
  return std::polar(0.5 + 1.5 * unit_double(rng), 6.283185307179586 * unit_double(rng));
}

// Product of random cycle flows: push a scalar around a wire plus a path
// closing it up in the underlying graph.
inline FlowAssignment random_total_flow(const TensorDiagram& d, SplitMix64& rng, int rounds = 6) {
  FlowAssignment f;
  for (const auto& w : d.wires()) f[w.id] = w.is_loop() ? random_unit_scalar(rng) : 1.0;
  std::vector<const Wire*> edges;
  for (const auto& w : d.wires())
    if (!w.is_loop()) edges.push_back(&w);
  if (edges.empty()) return f;
  for (int k = 0; k < rounds; ++k) {
    const Wire& e = *edges[rng.below(edges.size())];
    // Path from e.head back to e.tail avoiding e.
    std::map<std::string, const Wire*> via;
    std::vector<std::string> queue{*e.head};
    via[*e.head] = nullptr;
    for (std::size_t i = 0; i < queue.size() && !via.count(*e.tail); ++i) {
      for (const auto* w : edges) {
        if (w == &e) continue;
        std::string next;
        if (*w->tail == queue[i]) next = *w->head;
        else if (*w->head == queue[i]) next = *w->tail;
        else continue;
        if (via.count(next)) continue;
        via[next] = w;
        queue.push_back(next);
      }
    }
    if (!via.count(*e.tail)) continue;
    const auto c = random_unit_scalar(rng);
    f[e.id] *= c;
    // Walk back from e.tail to e.head; the cycle runs head -> ... -> tail.
    std::string at = *e.tail;
    while (at != *e.head) {
      const Wire* w = via[at];
      const std::string from = *w->tail == at ? *w->head : *w->tail;
      f[w->id] *= (*w->tail == from) ? c : 1.0 / c;
      at = from;
    }
  }
  return f;
}

}  // namespace fixture
