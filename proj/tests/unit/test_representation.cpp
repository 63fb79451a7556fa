#include <algorithm>

#include "doctest.h"
#include "tdr/canonical.hpp"
#include "tdr/error.hpp"
#include "tdr/generate.hpp"
#include "tdr/linalg.hpp"
#include "tdr/representation.hpp"
#include "tdr/shapes.hpp"

using namespace tdr;

namespace {

Representation single(const TensorDiagram& d, const std::map<std::string, std::size_t>& dims,
                       std::map<std::string, RatMatrix> t) {
  return validate_representation(d, dims, std::move(t));
}

DimensionVector random_dims(const TensorDiagram& d, SplitMix64& rng, std::size_t lo, std::size_t hi) {
  DimensionVector dims;
  for (const auto& w : d.wires()) dims[w.id] = lo + rng.below(hi - lo + 1);
  return dims;
}

}  // namespace

TEST_CASE("validate_representation") {
  CHECK_NOTHROW(single(shapes::loop(1), {{"e1", 2}}, {{"v1", RatMatrix{{1, 2}, {3, 4}}}}));
  CHECK_NOTHROW(single(shapes::open_claw(), {{"e1", 2}, {"e2", 2}, {"e3", 2}}, {{"v1", RatMatrix(8, 1)}}));
  try {
    single(shapes::open_claw(), {{"e1", 2}, {"e2", 2}, {"e3", 2}}, {{"v1", RatMatrix(4, 2)}});
    FAIL("expected ShapeMismatch");
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::ShapeMismatch);
  }
  CHECK_THROWS_AS(single(shapes::loop(1), {}, {{"v1", RatMatrix(1, 1)}}), Error);
}

TEST_CASE("group action") {
  const auto r = single(shapes::loop(1), {{"e1", 2}}, {{"v1", RatMatrix{{0, 1}, {0, 0}}}});
  const auto gr = apply_group_element({{"e1", RatMatrix{{2, 0}, {0, 1}}}}, r);
  CHECK(gr.tensors.at("v1") == RatMatrix{{0, 2}, {0, 0}});
  CHECK(apply_group_element(identity_element(r), r) == r);
  CHECK_THROWS_AS(apply_group_element({{"e1", RatMatrix::identity(3)}}, r), Error);
  CHECK_THROWS_AS(apply_group_element({{"e1", RatMatrix(2, 2)}}, r), Error);

  SplitMix64 rng(1);
  for (const auto& d : {shapes::loop(2), shapes::open_claw(), shapes::needle(), shapes::open_path(3)}) {
    const auto x = random_representation(d, random_dims(d, rng, 1, 3), rng);
    const auto g = random_group_element(x, rng), h = random_group_element(x, rng);
    CHECK(apply_group_element(multiply(g, h), x) == apply_group_element(g, apply_group_element(h, x)));
  }
}

TEST_CASE("direct sum") {
  const auto d = shapes::loop(1);
  const RatMatrix a{{1, 2}, {3, 4}};
  const auto s = direct_sum(single(d, {{"e1", 2}}, {{"v1", a}}), single(d, {{"e1", 1}}, {{"v1", RatMatrix{{5}}}}));
  CHECK(s.tensors.at("v1") == RatMatrix{{1, 2, 0}, {3, 4, 0}, {0, 0, 5}});

  const auto two = validate_diagram({{"v"}, {{"x", "v", std::nullopt}, {"y", "v", std::nullopt}}});
  const auto t = direct_sum(single(two, {{"x", 1}, {"y", 1}}, {{"v", RatMatrix{{7}}}}),
                            single(two, {{"x", 1}, {"y", 1}}, {{"v", RatMatrix{{9}}}}));
  CHECK(t.tensors.at("v") == RatMatrix{{7}, {0}, {0}, {9}});

  CHECK_THROWS_AS(direct_sum(single(d, {{"e1", 1}}, {{"v1", RatMatrix{{1}}}}), unit(shapes::loop(2))), Error);

  SplitMix64 rng(2);
  for (int i = 0; i < 10; ++i) {
    const auto j2 = shapes::loop(2);
    const auto r1 = random_representation(j2, random_dims(j2, rng, 0, 3), rng);
    const auto r2 = random_representation(j2, random_dims(j2, rng, 0, 3), rng);
    CHECK(contract(direct_sum(r1, r2)) == contract(r1) + contract(r2));
  }
}

TEST_CASE("tensor product and unit") {
  const auto u = unit(shapes::loop(1));
  CHECK(u.dims.at("e1") == 1);
  CHECK(u.tensors.at("v1") == RatMatrix{{1}});

  SplitMix64 rng(3);
  for (const auto& d : {shapes::loop(1), shapes::open_claw(), shapes::figure_eight(), shapes::closed_path(3)}) {
    const auto r = random_representation(d, random_dims(d, rng, 1, 2), rng);
    CHECK(tensor_product(r, unit(d)) == r);
    CHECK(tensor_product(unit(d), r) == r);
  }
  for (int i = 0; i < 10; ++i) {
    const auto j1 = shapes::loop(1);
    const auto r1 = random_representation(j1, random_dims(j1, rng, 1, 3), rng);
    const auto r2 = random_representation(j1, random_dims(j1, rng, 1, 3), rng);
    CHECK(contract(tensor_product(r1, r2)) == contract(r1) * contract(r2));
  }
}

TEST_CASE("tensor product interleaves per wire") {
  // Two outgoing wires x, y: entry (x, y) of the product is a(x1, y1) b(x2, y2)
  // with the combined index x1 * dx2 + x2.
  const auto two = validate_diagram({{"v"}, {{"x", "v", std::nullopt}, {"y", "v", std::nullopt}}});
  SplitMix64 rng(4);
  const auto a = random_representation(two, {{"x", 2}, {"y", 3}}, rng);
  const auto b = random_representation(two, {{"x", 2}, {"y", 2}}, rng);
  const auto p = tensor_product(a, b);
  const RatMatrix& m = p.tensors.at("v");
  for (std::size_t x1 = 0; x1 < 2; ++x1)
    for (std::size_t x2 = 0; x2 < 2; ++x2)
      for (std::size_t y1 = 0; y1 < 3; ++y1)
        for (std::size_t y2 = 0; y2 < 2; ++y2) {
          const std::size_t x = x1 * 2 + x2, y = y1 * 2 + y2;
          CHECK(m(x * 6 + y, 0) == a.tensors.at("v")(x1 * 3 + y1, 0) * b.tensors.at("v")(x2 * 2 + y2, 0));
        }
}

TEST_CASE("dual") {
  const RatMatrix l{{1, 2}, {3, 4}};
  const auto r = single(shapes::loop(1), {{"e1", 2}}, {{"v1", l}});
  CHECK(dual_rep(r).tensors.at("v1") == l.transpose());
  SplitMix64 rng(5);
  for (const auto& d : {shapes::loop(3), shapes::open_path(2), shapes::open_claw(), shapes::closed_path(2)}) {
    const auto x = random_representation(d, random_dims(d, rng, 1, 3), rng);
    CHECK(dual_rep(dual_rep(x)) == x);
    if (d.is_closed()) CHECK(contract(dual_rep(x)) == contract(x));
  }
}

TEST_CASE("morphisms and hom_dim") {
  SplitMix64 rng(6);
  const auto j1 = shapes::loop(1);
  const auto r = random_representation(j1, {{"e1", 3}}, rng);
  CHECK(is_morphism(identity_morphism(r), r, r));
  CHECK(is_morphism({{"e1", RatMatrix(3, 3)}}, r, r));
  const auto a = single(j1, {{"e1", 1}}, {{"v1", RatMatrix{{2}}}});
  const auto b = single(j1, {{"e1", 1}}, {{"v1", RatMatrix{{3}}}});
  CHECK_FALSE(is_morphism({{"e1", RatMatrix{{1}}}}, a, b));
  CHECK_THROWS_AS(is_morphism({{"e1", RatMatrix(2, 2)}}, a, b), Error);

  CHECK(hom_dim(r, r) >= 1);
  CHECK(hom_dim(zero_rep(j1), r) == 0);
  CHECK(hom_dim(a, b) == 0);
  CHECK(hom_dim(a, a) == 1);
  CHECK_THROWS_AS(hom_dim(unit(shapes::open_claw()), unit(shapes::open_claw())), Error);

  for (int i = 0; i < 10; ++i) {
    const auto d = i % 2 ? shapes::loop(2) : shapes::open_path(2);
    const auto r1 = random_representation(d, random_dims(d, rng, 0, 2), rng);
    const auto r2 = random_representation(d, random_dims(d, rng, 0, 2), rng);
    const auto s = random_representation(d, random_dims(d, rng, 0, 2), rng);
    CHECK(hom_dim(direct_sum(r1, r2), s) == hom_dim(r1, s) + hom_dim(r2, s));
  }
}

namespace {

RepMorphism inclusion(const Representation& r1, const Representation& r2) {
  RepMorphism phi;
  for (const auto& [w, d] : r1.dims) {
    RatMatrix m(d + r2.dims.at(w), d);
    for (std::size_t i = 0; i < d; ++i) m(i, i) = 1;
    phi[w] = m;
  }
  return phi;
}

RepMorphism projection(const Representation& r1, const Representation& r2) {
  RepMorphism phi;
  for (const auto& [w, d] : r2.dims) {
    RatMatrix m(d, r1.dims.at(w) + d);
    for (std::size_t i = 0; i < d; ++i) m(i, r1.dims.at(w) + i) = 1;
    phi[w] = m;
  }
  return phi;
}

}  // namespace

TEST_CASE("cokernel and kernel on split sequences") {
  SplitMix64 rng(7);
  for (const auto& d : {shapes::open_path(1), shapes::open_path(3), shapes::loop(2)}) {
    const auto r1 = random_representation(d, random_dims(d, rng, 0, 3), rng);
    const auto r2 = random_representation(d, random_dims(d, rng, 0, 3), rng);
    const auto sum = direct_sum(r1, r2);
    const auto c = cokernel(inclusion(r1, r2), r1, sum);
    CHECK(c.rep == r2);
    const auto k = kernel(projection(r1, r2), sum, r2);
    CHECK(k.rep == r1);

    const auto id = cokernel(identity_morphism(r1), r1, r1);
    for (const auto& [w, n] : id.rep.dims) CHECK(n == 0);

    RepMorphism zero;
    for (const auto& [w, n] : r1.dims) zero[w] = RatMatrix(r2.dims.at(w), n);
    const auto kz = kernel(zero, r1, r2);
    CHECK(kz.rep == r1);
  }
  const auto a = single(shapes::loop(1), {{"e1", 1}}, {{"v1", RatMatrix{{2}}}});
  CHECK_THROWS_AS(cokernel({{"e1", RatMatrix{{1}}}}, a, unit(shapes::loop(1))), Error);
  CHECK_THROWS_AS(cokernel({{"e1", RatMatrix{{0}}}}, a, a), Error);
}

TEST_CASE("cokernel of a random monic morphism on A0(1)") {
  SplitMix64 rng(8);
  const auto d = shapes::open_path(1);
  for (int t = 0; t < 20; ++t) {
    // r2 arbitrary, r1 the restriction to an invariant pair of subspaces.
    const std::size_t d1 = 1 + rng.below(3), d2 = 1 + rng.below(3);
    const RatMatrix m = rng.matrix(d2, d1);
    const RatMatrix sub_in = rng.matrix(d1, rng.below(d1 + 1));
    const RatMatrix img = m * sub_in;
    const RatMatrix sub_out = column_basis(RatMatrix::hcat(img, rng.matrix(d2, rng.below(2))));
    const RatMatrix in_basis = column_basis(sub_in);
    // restricted map: solve sub_out * X = m * in_basis
    const auto x = solve_linear(sub_out, m * in_basis);
    REQUIRE(x.has_value());
    const auto r2 = single(d, {{"e1", d1}, {"e2", d2}}, {{"v1", m}});
    const auto r1 = single(d, {{"e1", in_basis.cols()}, {"e2", sub_out.cols()}}, {{"v1", x->particular}});
    const RepMorphism phi{{"e1", in_basis}, {"e2", sub_out}};
    REQUIRE(is_morphism(phi, r1, r2));
    const auto c = cokernel(phi, r1, r2);
    for (const auto& [w, n] : c.rep.dims) CHECK(n + r1.dims.at(w) == r2.dims.at(w));
    for (const auto& [w, f] : compose(c.projection, phi)) CHECK(f.is_zero());
    CHECK(is_morphism(c.projection, r2, c.rep));
  }
}

TEST_CASE("contract") {
  CHECK(contract(single(shapes::loop(1), {{"e1", 2}}, {{"v1", RatMatrix{{1, 2}, {3, 4}}}})) == 5);
  const auto p2 = single(shapes::closed_path(2), {{"e1", 2}}, {{"v1", RatMatrix{{1}, {2}}}, {"v2", RatMatrix{{3, 4}}}});
  CHECK(contract(p2) == 11);
  CHECK_THROWS_AS(contract(unit(shapes::open_claw())), Error);

  SplitMix64 rng(9);
  for (int t = 0; t < 10; ++t) {
    const auto j2 = shapes::loop(2);
    const auto r = random_representation(j2, random_dims(j2, rng, 1, 3), rng);
    CHECK(contract(apply_group_element(random_group_element(r, rng), r)) == contract(r));
  }
}

TEST_CASE("contraction order does not matter") {
  SplitMix64 rng(10);
  const auto theta = validate_diagram({{"a", "b", "c"},
                                       {{"x", "a", "b"}, {"y", "b", "c"}, {"z", "c", "a"}, {"w", "a", "c"}, {"l", "b", "b"}}});
  for (int t = 0; t < 5; ++t) {
    const auto r = random_representation(theta, random_dims(theta, rng, 1, 3), rng);
    const Rational greedy = contract(r);
    std::vector<std::string> order = theta.vertices();
    do {
      CHECK(contract_in_order(r, order) == greedy);
    } while (std::next_permutation(order.begin(), order.end()));
  }
}

TEST_CASE("monodromy") {
  SplitMix64 rng(11);
  const auto r1 = random_representation(shapes::loop(1), {{"e1", 3}}, rng);
  CHECK(monodromy(r1, "e1") == r1.tensors.at("v1"));
  const auto r2 = random_representation(shapes::loop(2), {{"e1", 2}, {"e2", 3}}, rng);
  CHECK(monodromy(r2, "e1") == r2.tensors.at("v2") * r2.tensors.at("v1"));
  CHECK_THROWS_AS(monodromy(unit(shapes::closed_path(2)), "e1"), Error);
  CHECK(contract(r1) == [&] {
    Rational t = 0;
    for (std::size_t i = 0; i < 3; ++i) t += monodromy(r1, "e1")(i, i);
    return t;
  }());

  for (int t = 0; t < 10; ++t) {
    const auto d = shapes::loop(3);
    Representation r = random_representation(d, {{"e1", 2}, {"e2", 2}, {"e3", 2}}, rng);
    for (auto& [v, m] : r.tensors) m = rng.invertible(2);
    const auto base = rational_canonical(monodromy(r, "e1"));
    CHECK(rational_canonical(monodromy(r, "e2")) == base);
    CHECK(rational_canonical(monodromy(r, "e3")) == base);
  }
}

TEST_CASE("wire reversal on representations") {
  const auto d = shapes::open_path(1);
  const auto r = single(d, {{"e1", 2}, {"e2", 3}}, {{"v1", RatMatrix{{1, 2}, {3, 4}, {5, 6}}}});
  const auto rev = reverse_wire_rep(r, "e2");
  // Both wires now enter v1: one row, columns over (e1, e2).
  CHECK(rev.tensors.at("v1").rows() == 1);
  CHECK(rev.tensors.at("v1").cols() == 6);
  CHECK(rev.tensors.at("v1")(0, 1) == 3);  // e1 = 0, e2 = 1
  CHECK(reverse_wire_rep(rev, "e2") == r);

  SplitMix64 rng(12);
  const auto theta = validate_diagram({{"a", "b"}, {{"x", "a", "b"}, {"y", "b", "a"}, {"l", "a", "a"}, {"o", "b", std::nullopt}}});
  for (int t = 0; t < 10; ++t) {
    const auto x = random_representation(theta, random_dims(theta, rng, 1, 3), rng);
    for (const auto& w : theta.wires()) {
      CHECK(reverse_wire_rep(reverse_wire_rep(x, w.id), w.id) == x);
    }
    const auto closed = validate_diagram({{"a", "b"}, {{"x", "a", "b"}, {"y", "b", "a"}, {"l", "a", "a"}}});
    const auto c = random_representation(closed, random_dims(closed, rng, 1, 3), rng);
    for (const auto& w : closed.wires()) CHECK(contract(reverse_wire_rep(c, w.id)) == contract(c));
  }
}

TEST_CASE("split functor") {
  const auto p2 = shapes::closed_path(2);
  const RatMatrix u{{1}, {2}};
  const auto r = single(p2, {{"e1", 2}}, {{"v1", u}, {"v2", RatMatrix{{3, 4}}}});
  const auto s = split_vertex(p2, "v1", {{"e1", End::Out}}, {});
  // v1 becomes (u with the fresh wire incoming) and a scalar source.
  Representation split{s.diagram, {{"e1", 2}, {s.fresh_wire, 1}}, {}};
  split.tensors["v2"] = RatMatrix{{3, 4}};
  split.tensors[s.first] = u;
  split.tensors[s.second] = RatMatrix{{1}};
  // first carries e1 (out) and the fresh wire (out): 2x1 rows over (e1, fresh).
  split = validate_representation(split.diagram, split.dims, split.tensors);
  CHECK(split_functor(split, p2, s, "v1") == r);

  Representation scaled = split;
  scaled.tensors[s.first] *= Rational(5);
  scaled.tensors[s.second] *= Rational(1, 5);
  CHECK(split_functor(scaled, p2, s, "v1") == r);

  Representation wide = split;
  wide.dims[s.fresh_wire] = 2;
  CHECK_THROWS_AS(split_functor(wide, p2, s, "v1"), Error);

  SplitMix64 rng(13);
  const auto theta = validate_diagram({{"a", "b"}, {{"x", "a", "b"}, {"y", "b", "a"}, {"l", "a", "a"}, {"o", "a", std::nullopt}}});
  for (int t = 0; t < 20; ++t) {
    std::vector<Slot> p1, p2s;
    for (const auto& sl : theta.slots("a")) (rng.below(2) ? p1 : p2s).push_back(sl);
    const auto sp = split_vertex(theta, "a", p1, p2s);
    DimensionVector dims = random_dims(sp.diagram, rng, 1, 2);
    dims[sp.fresh_wire] = 1;
    const auto x = random_representation(sp.diagram, dims, rng);
    const auto merged = split_functor(x, theta, sp, "a");
    const auto again = split_functor(split_rep(merged, sp, "a"), theta, sp, "a");
    CHECK(again == merged);
  }
}
