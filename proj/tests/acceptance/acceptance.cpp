// Acceptance suite: one PASS/FAIL line per criterion.

#include <algorithm>
#include <chrono>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <functional>
#include <numeric>
#include <string>

#include "fixtures.hpp"
#include "oracles.hpp"
#include "tdr/classify.hpp"
#include "tdr/cli.hpp"
#include "tdr/decompose.hpp"
#include "tdr/flows.hpp"
#include "tdr/generate.hpp"
#include "tdr/io.hpp"
#include "tdr/linalg.hpp"
#include "tdr/shapes.hpp"
#include "tdr/wildness.hpp"

using namespace tdr;
using Clock = std::chrono::steady_clock;

namespace {

struct Outcome {
  bool pass = true;
  std::string detail;
};

double seconds_since(Clock::time_point t0) { return std::chrono::duration<double>(Clock::now() - t0).count(); }

TensorDiagram reorient(const TensorDiagram& d, SplitMix64& rng) {
  TensorDiagram out = d;
  for (const auto& w : d.wires())
    if (rng.below(2)) out = reverse_wire(out, w.id);
  return out;
}

std::vector<IndecompDescriptor> sorted_union(std::vector<IndecompDescriptor> a, const std::vector<IndecompDescriptor>& b) {
  a.insert(a.end(), b.begin(), b.end());
  std::sort(a.begin(), a.end());
  return a;
}

// 1. Every connected semi-graph up to relabeling: wires as multisets of
// (tail, head) pairs, vertices ordered by non-increasing slot degree.
Outcome trichotomy_exhaustive() {
  const auto t0 = Clock::now();
  std::size_t checked = 0, wild = 0, bad = 0;
  for (int n = 1; n <= 5; ++n) {
    std::vector<std::pair<int, int>> types;
    for (int t = -1; t < n; ++t)
      for (int h = -1; h < n; ++h)
        if (t >= 0 || h >= 0) types.emplace_back(t, h);
    std::vector<std::string> vnames, wnames;
    for (int i = 0; i < n; ++i) vnames.push_back("v" + std::to_string(i));
    for (int i = 0; i < 6; ++i) wnames.push_back("w" + std::to_string(i));

    std::vector<int> chosen;
    std::function<void(std::size_t)> rec = [&](std::size_t from) {
      std::vector<int> deg(n, 0);
      std::vector<int> parent(n);
      std::iota(parent.begin(), parent.end(), 0);
      const auto find = [&](int x) {
        while (parent[x] != x) x = parent[x];
        return x;
      };
      for (int k : chosen) {
        const auto [t, h] = types[k];
        if (t >= 0) ++deg[t];
        if (h >= 0) ++deg[h];
        if (t >= 0 && h >= 0) parent[find(t)] = find(h);
      }
      bool keep = std::is_sorted(deg.rbegin(), deg.rend());
      for (int v = 1; keep && v < n; ++v) keep = find(v) == find(0);
      if (keep) {
        RawDiagram raw{vnames, {}};
        for (std::size_t i = 0; i < chosen.size(); ++i) {
          const auto [t, h] = types[chosen[i]];
          raw.wires.push_back({wnames[i], t >= 0 ? std::optional(vnames[t]) : std::nullopt,
                               h >= 0 ? std::optional(vnames[h]) : std::nullopt});
        }
        const TensorDiagram d = validate_diagram(std::move(raw));
        const bool expect = *std::max_element(deg.begin(), deg.end()) >= 3;
        const auto cls = classify_diagram(d);
        const bool got = cls.size() == 1 && cls[0].cls.kind == ClassKind::Wild;
        const bool witness = find_forbidden_witness(d).has_value();
        bad += cls.size() != 1 || got != expect || witness != expect;
        wild += expect;
        ++checked;
      }
      if (chosen.size() == 6) return;
      for (std::size_t k = from; k < types.size(); ++k) {
        chosen.push_back(static_cast<int>(k));
        rec(k);
        chosen.pop_back();
      }
    };
    rec(0);
  }
  const double secs = seconds_since(t0);
  Outcome o{bad == 0 && secs < 10.0, {}};
  o.detail = std::to_string(checked) + " diagrams (" + std::to_string(wild) + " wild), " + std::to_string(bad) +
             " disagreements, " + std::to_string(secs).substr(0, 5) + "s < 10s";
  return o;
}

Outcome sum_recovery(bool loops, std::size_t cases, std::size_t max_blocks, double budget) {
  const auto t0 = Clock::now();
  SplitMix64 rng(loops ? 3003 : 2002);
  std::size_t bad = 0;
  for (std::size_t t = 0; t < cases; ++t) {
    TensorDiagram d;
    if (loops) {
      d = shapes::loop(1 + rng.below(5));
    } else {
      const std::size_t n = 1 + rng.below(6);
      d = rng.below(2) ? shapes::open_path(n) : shapes::half_open_path(n);
    }
    d = reorient(d, rng);
    const SumSample s = random_sum(d, rng, max_blocks);
    bad += decompose(s.rep).multiset() != s.answer_key;
  }
  const double secs = seconds_since(t0);
  return {bad == 0 && secs < budget, std::to_string(cases - bad) + "/" + std::to_string(cases) + " exact, " +
                                         std::to_string(secs).substr(0, 5) + "s < " + std::to_string(int(budget)) + "s"};
}

// 4. Action, sum and reversal invariants. Sums are checked on shapes
// without a pinned slot (A0, J); A1 and P fix one slot at dimension 1, so
// their representations are not closed under the sum.
Outcome structure_invariants() {
  SplitMix64 rng(4004);
  std::size_t bad = 0, sums = 0;
  for (int t = 0; t < 100; ++t) {
    const auto shape = static_cast<ShapeKind>(rng.below(4));
    const TensorDiagram d = reorient(canonical_shape(shape, 1 + rng.below(4)), rng);
    const SumSample s = random_sum(d, rng, 3);
    const auto base = decompose(s.rep).multiset();
    bad += base != s.answer_key;
    bad += decompose(apply_group_element(random_group_element(s.rep, rng), s.rep)).multiset() != base;
    if (!d.wires().empty()) {
      const auto& w = d.wires()[rng.below(d.wires().size())];
      bad += decompose(reverse_wire_rep(s.rep, w.id)).multiset() != base;
    }
    if (shape == ShapeKind::A0 || shape == ShapeKind::J) {
      const SumSample s2 = random_sum(d, rng, 3);
      bad += decompose(direct_sum(s.rep, s2.rep)).multiset() != sorted_union(base, s2.answer_key);
      ++sums;
    }
  }
  return {bad == 0, "100 reps, " + std::to_string(sums) + " sums on A0/J, " + std::to_string(bad) + " failures"};
}

Rational naive_trace(const RatMatrix& m) {
  Rational s = 0;
  for (std::size_t i = 0; i < m.rows(); ++i) s += m(i, i);
  return s;
}

// 5. Contraction: invariance, additivity, multiplicativity, trace law.
Outcome contraction_invariants() {
  SplitMix64 rng(5005);
  std::size_t bad = 0;
  for (int t = 0; t < 100; ++t) {
    const std::size_t n = 1 + rng.below(4);
    const TensorDiagram d = reorient(rng.below(2) ? shapes::loop(n) : shapes::closed_path(n), rng);
    const auto dims = [&] {
      DimensionVector v;
      for (const auto& w : d.wires()) v[w.id] = 1 + rng.below(3);
      return v;
    };
    const Representation r1 = random_representation(d, dims(), rng);
    const Representation r2 = random_representation(d, dims(), rng);
    const Rational c1 = contract(r1), c2 = contract(r2);
    bad += contract(apply_group_element(random_group_element(r1, rng), r1)) != c1;
    bad += contract(direct_sum(r1, r2)) != c1 + c2;
    bad += contract(tensor_product(r1, r2)) != c1 * c2;
    const Representation j1 = random_representation(shapes::loop(1), {{"e1", 1 + rng.below(4)}}, rng);
    bad += contract(j1) != naive_trace(monodromy(j1, "e1"));
  }
  return {bad == 0, "100 closed reps, " + std::to_string(bad) + " failures"};
}

// 6. Rank facts, similarity witnesses, figure-eight mixing.
Outcome wildness_construction() {
  SplitMix64 rng(6006);
  std::size_t bad = 0, cases = 0;
  for (std::size_t n = 1; n <= 3; ++n) {
    for (int t = 0; t < 50; ++t, ++cases) {
      const MatrixPair p1{rng.matrix(n, n), rng.matrix(n, n)};
      const auto [y1, y2] = build_Y_pair(p1);
      bad += oracle::rank(y1) != 4 * n;
      const RatMatrix P = rng.invertible(n);
      const RatMatrix Pi = *inverse(P);
      const MatrixPair p2{P * p1.A * Pi, P * p1.B * Pi};
      const GroupElement g = iso_from_similarity(P, p1, p2);
      bad += !(apply_group_element(g, needle_rep_from_pair(p1)) == needle_rep_from_pair(p2));
      // Mixing on the small loop: the tuple moves by h = g (x) (g^-1)^T.
      const RatMatrix m = rng.invertible(2);
      const RatMatrix h = kron(m, inverse(m)->transpose());
      const std::array<RatMatrix, 4> before = eight_tuple(eight_rep_from_pair(p1));
      std::array<RatMatrix, 4> expect;
      for (std::size_t k = 0; k < 4; ++k) {
        expect[k] = RatMatrix(before[0].rows(), before[0].cols());
        for (std::size_t j = 0; j < 4; ++j) expect[k] += h(j, k) * before[j];
      }
      const GroupElement act{{"e1", RatMatrix::identity(6 * n)}, {"e2", m.transpose()}};
      bad += !(eight_tuple(apply_group_element(act, eight_rep_from_pair(p1))) == expect);
    }
  }
  return {bad == 0, std::to_string(cases) + " pairs over n=1..3, " + std::to_string(bad) + " failures"};
}

// 7. Flow extension on random closed diagrams.
Outcome flow_extension() {
  SplitMix64 rng(7007);
  std::size_t bad = 0;
  double worst = 0;
  for (int t = 0; t < 100; ++t) {
    const TensorDiagram d = fixture::random_diagram(rng, 1 + rng.below(8), rng.below(11), true);
    const FlowAssignment total = fixture::random_total_flow(d, rng);
    std::vector<std::string> u;
    for (const auto& v : d.vertices())
      if (rng.below(2)) u.push_back(v);
    FlowAssignment partial = total;
    for (const auto& w : induced_wires(d, u)) partial.erase(w);
    const FlowAssignment f = extend_flow(d, partial, u);
    for (const auto& [w, val] : partial) bad += f.at(w) != val;
    bad += f.size() != d.wires().size();
    for (const auto& v : d.vertices()) {
      FlowValue b = 1.0;
      for (const auto& w : d.wires()) {
        if (w.tail == v) b *= f.at(w.id);
        if (w.head == v) b /= f.at(w.id);
      }
      worst = std::max(worst, std::abs(b - 1.0));
    }
  }
  char buf[64];
  std::snprintf(buf, sizeof buf, "max defect %.2e <= 1e-9", worst);
  return {bad == 0 && worst <= 1e-9, "100 diagrams, " + std::to_string(bad) + " mismatches outside T[u], " + buf};
}

// 8. Cokernels and kernels of monic morphisms on open paths.
Outcome abelian_structure() {
  SplitMix64 rng(8008);
  std::size_t bad = 0;
  for (int t = 0; t < 50; ++t) {
    const std::size_t n = 1 + rng.below(4);
    const TensorDiagram d = shapes::open_path(n);
    DimensionVector dims;
    for (const auto& w : d.wires()) dims[w.id] = 1 + rng.below(3);
    const Representation r2 = random_representation(d, dims, rng);
    // Invariant subspaces: S_{i+1} spans M_i S_i plus random extra vectors.
    RepMorphism phi;
    std::vector<RatMatrix> sub{column_basis(rng.matrix(dims["e1"], rng.below(dims["e1"] + 1)))};
    for (std::size_t i = 0; i < n; ++i) {
      const std::string next = "e" + std::to_string(i + 2);
      const RatMatrix img = r2.tensors.at("v" + std::to_string(i + 1)) * sub.back();
      sub.push_back(column_basis(RatMatrix::hcat(img, rng.matrix(dims[next], rng.below(2)))));
    }
    DimensionVector d1;
    std::map<std::string, RatMatrix> t1;
    for (std::size_t i = 0; i <= n; ++i) {
      const std::string w = "e" + std::to_string(i + 1);
      phi[w] = sub[i];
      d1[w] = sub[i].cols();
    }
    for (std::size_t i = 0; i < n; ++i) {
      const auto x = solve_linear(sub[i + 1], r2.tensors.at("v" + std::to_string(i + 1)) * sub[i]);
      t1["v" + std::to_string(i + 1)] = x->particular;
    }
    const Representation r1 = validate_representation(d, d1, t1);
    const CokernelResult c = cokernel(phi, r1, r2);
    for (const auto& [w, k] : c.rep.dims) bad += k + d1.at(w) != dims.at(w);
    for (const auto& [w, f] : compose(c.projection, phi)) bad += !f.is_zero();
    // Kernel of the projection, through the dual route, against direct nullspaces.
    const KernelResult k = kernel(c.projection, r2, c.rep);
    for (const auto& [w, inc] : k.inclusion) {
      bad += !same_column_space(inc, nullspace(c.projection.at(w)));
      bad += !same_column_space(inc, phi.at(w));
    }
    const KernelResult k0 = kernel(phi, r1, r2);
    for (const auto& [w, dim] : k0.rep.dims) bad += dim != 0;
  }
  return {bad == 0, "50 monic morphisms, " + std::to_string(bad) + " failures"};
}

std::string digest_run(std::uint64_t seed) {
  std::string acc;
  SplitMix64 rng(seed);
  for (int t = 0; t < 10; ++t) {
    const TensorDiagram d = canonical_shape(static_cast<ShapeKind>(rng.below(4)), 1 + rng.below(3));
    const SumSample s = random_sum(d, rng, 3);
    acc += io::dump(io::to_json(s.rep)) + io::dump(io::to_json(decompose(s.rep)));
  }
  const TensorDiagram fd = fixture::random_diagram(rng, 6, 9, true);
  acc += io::dump(io::to_json(extend_flow(fd, fixture::random_total_flow(fd, rng), {})));
  const auto path = (std::filesystem::temp_directory_path() / "tdr_acceptance_j3.json").string();
  std::ofstream(path) << io::dump(io::to_json(shapes::loop(3)));
  for (const char* mode : {"sum", "generic"}) {
    const auto rep = cli::run(
        {"gen-random", path, "--mode", mode, "--dims", "e1=2,e2=1,e3=3", "--seed", std::to_string(seed)});
    acc += rep.out + std::to_string(rep.exit_code);
  }
  return cli::fnv1a_hex(acc);
}

}  // namespace

int main() {
  const auto start = Clock::now();
  struct Criterion {
    const char* name;
    std::function<Outcome()> run;
  };
  const std::vector<Criterion> criteria{
      {"trichotomy exhaustive check", trichotomy_exhaustive},
      {"interval decomposition oracle", [] { return sum_recovery(false, 200, 6, 30.0); }},
      {"loop decomposition oracle", [] { return sum_recovery(true, 200, 6, 60.0); }},
      {"action/structure invariants", structure_invariants},
      {"contraction invariants", contraction_invariants},
      {"wildness construction", wildness_construction},
      {"flow extension", flow_extension},
      {"abelian structure", abelian_structure},
  };
  int failures = 0;
  int index = 0;
  for (const auto& c : criteria) {
    ++index;
    Outcome o;
    const auto t0 = Clock::now();
    try {
      o = c.run();
    } catch (const std::exception& e) {
      o = {false, std::string("exception: ") + e.what()};
    }
    failures += !o.pass;
    std::printf("%s %d %s: %s [%.2fs]\n", o.pass ? "PASS" : "FAIL", index, c.name, o.detail.c_str(), seconds_since(t0));
    std::fflush(stdout);
  }
  const bool same = digest_run(9009) == digest_run(9009);
  const double total = seconds_since(start);
  const bool ok9 = same && total < 180.0;
  failures += !ok9;
  std::printf("%s 9 runtime and reproducibility: %.1fs < 180s, repeated run digests %s\n", ok9 ? "PASS" : "FAIL", total,
              same ? "identical" : "differ");
  return failures == 0 ? 0 : 1;
}
