#include "tdr/cli.hpp"

#include <cstdio>
#include <fstream>
#include <map>
#include <sstream>

#include "CLI11.hpp"
#include "tdr/classify.hpp"
#include "tdr/decompose.hpp"
#include "tdr/error.hpp"
#include "tdr/flows.hpp"
#include "tdr/generate.hpp"
#include "tdr/io.hpp"
#include "tdr/wildness.hpp"

namespace tdr::cli {

namespace {

namespace fs = std::filesystem;
using nlohmann::json;

const std::vector<std::string> kCommands{"classify", "decompose", "isotest", "contract",
                                         "flow-extend", "wild-embed", "gen-random", "fmt"};

struct Options {
  std::uint64_t seed = 0;
  std::string out;
  double tol = 1e-9;
  bool report = false;
  std::vector<std::string> files;
  std::string dims;
  std::string mode = "generic";
  std::size_t max_blocks = 6;
};

// Thrown for diagrams the command cannot handle because they are wild.
struct WildInput {};

class Session {
 public:
  Session(CommandReport& rep, const Options& opt) : rep_(rep), opt_(opt) {}

  json load(const std::string& path) {
    const std::string text = io::read_file(path);
    rep_.inputs.push_back({path, fnv1a_hex(text)});
    return io::parse(text);
  }

  Representation load_rep(const std::string& path) {
    return io::representation_from_json(load(path), fs::path(path).parent_path());
  }

  static void refuse_wild(const TensorDiagram& d) {
    for (const auto& c : classify_diagram(d))
      if (c.cls.kind == ClassKind::Wild) throw WildInput{};
  }

  json classify() {
    const TensorDiagram d = io::diagram_from_json(load(opt_.files.at(0)));
    json comps = json::array();
    for (const auto& c : classify_diagram(d)) {
      json j{{"component", c.component.vertices}, {"wires", c.component.wires}, {"class", to_string(c.cls.kind)}};
      if (c.cls.witness) {
        json slots = json::array();
        for (const auto& s : c.cls.witness->slots) slots.push_back({{"wire", s.wire}, {"end", s.end == End::Out ? "out" : "in"}});
        j["witness"] = {{"kind", to_string(c.cls.witness->kind)},
                        {"vertex", c.cls.witness->vertex},
                        {"wires", c.cls.witness->wires},
                        {"slots", std::move(slots)}};
      } else {
        j["shape"] = to_string(c.cls.shape);
        j["n"] = c.cls.n;
      }
      comps.push_back(std::move(j));
    }
    return {{"components", std::move(comps)}};
  }

  json decompose() {
    const Representation r = load_rep(opt_.files.at(0));
    refuse_wild(r.diagram);
    return io::to_json(tdr::decompose(r));
  }

  json isotest() {
    const Representation a = load_rep(opt_.files.at(0));
    const Representation b = load_rep(opt_.files.at(1));
    refuse_wild(a.diagram);
    refuse_wild(b.diagram);
    return {{"isomorphic", isomorphic(a, b)}};
  }

  json contract() { return {{"value", io::to_json(tdr::contract(load_rep(opt_.files.at(0))))}}; }

  json flow_extend() {
    const TensorDiagram d = io::diagram_from_json(load(opt_.files.at(0)));
    const io::FlowInput in = io::flow_from_json(load(opt_.files.at(1)));
    const FlowAssignment f = extend_flow(d, in.wires, in.u, opt_.tol);
    return {{"wires", io::to_json(f)}, {"valid", verify_partial_flow(d, f, {}, opt_.tol)}};
  }

  json wild_embed() {
    const io::PairsInput p = io::pairs_from_json(load(opt_.files.at(0)));
    const Representation r1 = needle_rep_from_pair(p.first), r2 = needle_rep_from_pair(p.second);
    const std::string prefix = opt_.out.empty() ? "needle" : opt_.out;
    const std::string f1 = prefix + "_rep1.json", f2 = prefix + "_rep2.json";
    write(f1, io::dump(io::to_json(r1)));
    write(f2, io::dump(io::to_json(r2)));
    json witness = nullptr;
    if (const auto P = sim_similarity_solve(p.first, p.second, opt_.seed)) {
      const GroupElement g = iso_from_similarity(*P, p.first, p.second);
      witness = {{"P", io::to_json(*P)}, {"verified", apply_group_element(g, r1) == r2}};
    }
    return {{"files", {f1, f2}}, {"n", p.first.A.rows()}, {"similar", !witness.is_null()}, {"witness", witness}};
  }

  json gen_random() {
    const TensorDiagram d = io::diagram_from_json(load(opt_.files.at(0)));
    SplitMix64 rng(opt_.seed);
    if (opt_.mode == "sum") {
      const SumSample s = random_sum(d, rng, opt_.max_blocks);
      json key = json::array();
      for (const auto& k : s.answer_key) key.push_back(io::to_json(k));
      return {{"representation", io::to_json(s.rep)}, {"answer_key", std::move(key)}};
    }
    if (opt_.mode != "generic") throw Error(ErrorKind::ParseError, "unknown mode " + opt_.mode);
    return io::to_json(random_representation(d, parse_dims(opt_.dims), rng));
  }

  json fmt() {
    const std::string& path = opt_.files.at(0);
    const json j = load(path);
    if (j.is_object() && j.contains("dims")) return io::to_json(io::representation_from_json(j, fs::path(path).parent_path()));
    return io::to_json(io::diagram_from_json(j));
  }

 private:
  static DimensionVector parse_dims(const std::string& text) {
    DimensionVector dims;
    std::stringstream ss(text);
    std::string item;
    while (std::getline(ss, item, ',')) {
      const auto eq = item.find('=');
      if (eq == std::string::npos || eq == 0) throw Error(ErrorKind::InvalidDims, "expected wire=dim, got " + item);
      const std::string num = item.substr(eq + 1);
      if (num.empty() || num.find_first_not_of("0123456789") != std::string::npos) {
        throw Error(ErrorKind::InvalidDims, "bad dimension in " + item);
      }
      dims[item.substr(0, eq)] = std::stoul(num);
    }
    return dims;
  }

  static void write(const std::string& path, const std::string& text) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw Error(ErrorKind::ParseError, "cannot write " + path);
    out << text;
  }

  CommandReport& rep_;
  const Options& opt_;
};

std::size_t arity(const std::string& cmd) {
  if (cmd == "isotest" || cmd == "flow-extend") return 2;
  return 1;
}

}  // namespace

std::string fnv1a_hex(const std::string& bytes) {
  std::uint64_t h = 0xcbf29ce484222325ULL;
  for (unsigned char c : bytes) {
    h ^= c;
    h *= 0x100000001b3ULL;
  }
  char buf[17];
  std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(h));
  return buf;
}

CommandReport run(const std::vector<std::string>& args) {
  CommandReport rep;
  if (args.empty() || std::find(kCommands.begin(), kCommands.end(), args[0]) == kCommands.end()) {
    rep.command = args.empty() ? "" : args[0];
    rep.exit_code = 1;
    rep.err = Error(ErrorKind::UnknownCommand, args.empty() ? "no command given" : args[0]).what();
    rep.err += "\nusage: tdr <classify|decompose|isotest|contract|flow-extend|wild-embed|gen-random|fmt> FILE... "
               "[--seed N] [--out PATH] [--tol X]\n";
    return rep;
  }
  rep.command = args[0];

  Options opt;
  CLI::App app{"tdr " + rep.command};
  app.add_option("files", opt.files)->required()->expected(static_cast<int>(arity(rep.command)));
  app.add_option("--seed", opt.seed, "seed for the random stream");
  app.add_option("--out", opt.out, "output path (file prefix for wild-embed)");
  app.add_option("--tol", opt.tol, "flow tolerance");
  app.add_flag("--report", opt.report, "wrap the result with input digests");
  if (rep.command == "gen-random") {
    app.add_option("--dims", opt.dims, "wire dimensions, e.g. e1=2,e2=3");
    app.add_option("--mode", opt.mode, "generic or sum")->check(CLI::IsMember({"generic", "sum"}));
    app.add_option("--max-blocks", opt.max_blocks, "block count bound in sum mode");
  }
  try {
    std::vector<std::string> rest(args.rbegin(), args.rend() - 1);
    app.parse(rest);
  } catch (const CLI::CallForHelp&) {
    rep.out = app.help();
    return rep;
  } catch (const CLI::ParseError& e) {
    rep.exit_code = 1;
    rep.err = std::string("error: ") + e.what() + "\n";
    return rep;
  }

  Session s(rep, opt);
  try {
    const std::string& c = rep.command;
    if (c == "classify") rep.result = s.classify();
    else if (c == "decompose") rep.result = s.decompose();
    else if (c == "isotest") rep.result = s.isotest();
    else if (c == "contract") rep.result = s.contract();
    else if (c == "flow-extend") rep.result = s.flow_extend();
    else if (c == "wild-embed") rep.result = s.wild_embed();
    else if (c == "gen-random") rep.result = s.gen_random();
    else rep.result = s.fmt();
  } catch (const WildInput&) {
    rep.exit_code = 2;
    rep.result = {{"error", "wild"}};
    rep.err = "error: diagram is wild\n";
  } catch (const Error& e) {
    const bool wild = e.kind() == ErrorKind::NotDecomposable || e.kind() == ErrorKind::NotDecidableWild;
    rep.exit_code = wild ? 2 : 1;
    if (wild) rep.result = {{"error", "wild"}};
    rep.err = std::string("error: ") + e.what() + "\n";
  } catch (const std::exception& e) {
    rep.exit_code = 1;
    rep.err = std::string("error: ") + e.what() + "\n";
  }

  if (rep.result.is_null()) return rep;
  json shown = rep.result;
  if (opt.report) {
    json inputs = json::array();
    for (const auto& i : rep.inputs) inputs.push_back({{"path", i.path}, {"fnv1a", i.fnv1a}});
    shown = {{"command", rep.command}, {"inputs", std::move(inputs)}, {"result", rep.result}, {"exit_code", rep.exit_code}};
  }
  const std::string text = io::dump(shown);
  if (!opt.out.empty() && rep.command != "wild-embed" && rep.exit_code == 0) {
    std::ofstream f(opt.out, std::ios::binary);
    if (!f) {
      rep.exit_code = 1;
      rep.err = "error: cannot write " + opt.out + "\n";
      return rep;
    }
    f << text;
  } else {
    rep.out = text;
  }
  return rep;
}

}  // namespace tdr::cli
