#include "doctest.h"
#include "fixtures.hpp"
#include "tdr/classify.hpp"
#include "tdr/error.hpp"
#include "tdr/shapes.hpp"

using namespace tdr;

namespace {

DiagramClass only(const TensorDiagram& d) {
  const auto cs = classify_diagram(d);
  REQUIRE(cs.size() == 1);
  return cs[0].cls;
}

}  // namespace

TEST_CASE("forbidden shapes are wild with the matching witness") {
  auto c = only(shapes::open_claw());
  CHECK(c.kind == ClassKind::Wild);
  CHECK(c.witness->kind == WitnessKind::OpenClaw);
  CHECK(c.witness->wires.size() == 3);

  c = only(shapes::needle());
  CHECK(c.witness->kind == WitnessKind::Needle);
  CHECK(c.witness->wires == std::vector<std::string>{"e1", "e2"});

  c = only(shapes::figure_eight());
  CHECK(c.witness->kind == WitnessKind::FigureEight);
}

TEST_CASE("finite and tame shapes") {
  auto c = only(shapes::open_path(3));
  CHECK(c.kind == ClassKind::Finite);
  CHECK(c.shape == ShapeKind::A0);
  CHECK(c.n == 3);

  c = only(shapes::half_open_path(2));
  CHECK(c.shape == ShapeKind::A1);

  c = only(shapes::loop(3));
  CHECK(c.kind == ClassKind::Tame);
  CHECK(c.shape == ShapeKind::J);

  c = only(shapes::closed_path(4));
  CHECK(c.shape == ShapeKind::P);
  CHECK(!find_forbidden_witness(shapes::closed_path(4)));

  c = only(validate_diagram({{"v1"}, {}}));
  CHECK(c.kind == ClassKind::Tame);
  CHECK(c.shape == ShapeKind::P);
  CHECK(c.n == 1);
}

TEST_CASE("endpointless wires must be normalized away") {
  const auto d = validate_diagram({{"v1"}, {{"e1", std::nullopt, std::nullopt}}});
  CHECK_THROWS_AS(classify_diagram(d), Error);
}

TEST_CASE("class depends only on the underlying semi-graph") {
  SplitMix64 rng(11);
  for (int t = 0; t < 200; ++t) {
    const auto d = fixture::random_diagram(rng, 1 + rng.below(5), rng.below(7));
    const auto base = classify_diagram(d);
    for (const auto& w : d.wires()) {
      const auto r = classify_diagram(reverse_wire(d, w.id));
      REQUIRE(r.size() == base.size());
      for (std::size_t i = 0; i < r.size(); ++i) {
        CHECK(r[i].cls.kind == base[i].cls.kind);
        CHECK(r[i].cls.shape == base[i].cls.shape);
      }
    }
  }
}

TEST_CASE("wild iff a vertex has three slots; witness sits in the diagram") {
  SplitMix64 rng(12);
  for (int t = 0; t < 300; ++t) {
    const auto d = fixture::random_diagram(rng, 1 + rng.below(5), rng.below(7));
    bool wild = false;
    for (const auto& v : d.vertices()) wild = wild || d.slots(v).size() >= 3;
    const auto w = find_forbidden_witness(d);
    CHECK(w.has_value() == wild);
    if (!w) continue;
    const auto slots = d.slots(w->vertex);
    for (const auto& s : w->slots) CHECK(std::find(slots.begin(), slots.end(), s) != slots.end());
    if (w->kind != WitnessKind::OpenClaw) CHECK(d.wire(w->wires[0]).is_loop());
    if (w->kind == WitnessKind::FigureEight) CHECK(d.wire(w->wires[1]).is_loop());
  }
}
