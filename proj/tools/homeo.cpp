// Command-line front end: classification, decomposition, pattern network,
// homeostasis patterns, exact verification, ODE sweeps and DOT export.
//
// Exit status: 0 success, 1 invalid input or usage, 2 internal failure.

#include <CLI11.hpp>
#include <json.hpp>

#include <algorithm>
#include <filesystem>
#include <fstream>
#include <iomanip>
#include <iostream>
#include <map>
#include <sstream>
#include <string>
#include <vector>

#include "homeo/errors.hpp"
#include "homeo/induction.hpp"
#include "homeo/odesim.hpp"
#include "homeo/oracle.hpp"

using namespace homeo;
using Json = nlohmann::ordered_json;

namespace {

constexpr int kSchema = 1;
constexpr std::size_t kInlineBlockLimit = 6;  // larger blocks are described by index sets

/// Raised for failed internal checks that are not library exceptions
/// (engine disagreement, oracle mismatch).
struct CheckFailed : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct Options {
  std::string net_path;
  std::string format = "text";
  bool check_engines = false;
  int seeds = 100;
  std::uint64_t seed = 1;
  std::string range = "-2:2";
  std::size_t steps = 401;
  std::vector<std::string> self_weights;
  std::string events_path;
  std::string out_dir;
};

std::string join(const std::vector<std::string>& parts, const char* sep) {
  std::string out;
  for (std::size_t i = 0; i < parts.size(); ++i) out += (i ? sep : "") + parts[i];
  return out;
}

std::string braces(const IONetwork& net, const NodeSet& set) {
  return "{" + join(net.names_of(set), ", ") + "}";
}

Json names(const IONetwork& net, const NodeSet& set) { return net.names_of(set); }

Json path_names(const IONetwork& net, const std::vector<NodeId>& seq) {
  Json out = Json::array();
  for (NodeId n : seq) out.push_back(net.name(n));
  return out;
}

// Display width of UTF-8 text: code points, not bytes.
std::size_t width_of(const std::string& s) {
  return static_cast<std::size_t>(
      std::count_if(s.begin(), s.end(), [](char c) { return (c & 0xC0) != 0x80; }));
}

std::string number(double v) {
  std::ostringstream os;
  os << std::setprecision(12) << v;
  return os.str();
}

void print_json(const Json& doc) { std::cout << doc.dump(2) << "\n"; }

std::string symbol_name(const IONetwork& net, std::uint32_t id) {
  return jacobian_symbol_name(net, id);
}

std::string block_description(const IONetwork& net, const BlockIndexSets& b) {
  if (b.row_nodes.size() <= kInlineBlockLimit)
    return block_polynomial(net, b).to_string(
        [&](std::uint32_t id) { return symbol_name(net, id); });
  return "det B(rows " + braces(net, b.row_nodes) + "; cols " + braces(net, b.col_nodes) + ")";
}

Json subnetwork_json(const IONetwork& net, const HomeostasisSubnetwork& k) {
  Json j;
  j["label"] = label(k);
  if (const auto* s = std::get_if<StructuralSubnetwork>(&k)) {
    j["kind"] = "structural";
    j["rho_prev"] = net.name(s->rho_prev);
    j["rho_next"] = net.name(s->rho_next);
    j["simple_core"] = names(net, s->simple_core);
    j["linked_appendage"] = names(net, s->linked_appendage);
  } else {
    j["kind"] = "appendage";
    j["nodes"] = names(net, std::get<AppendageSubnetwork>(k).nodes);
  }
  const BlockIndexSets b = block_index_sets(net, k);
  j["block_rows"] = names(net, b.row_nodes);
  j["block_cols"] = names(net, b.col_nodes);
  return j;
}

// classify -----------------------------------------------------------------

int run_classify(const Options& opt) {
  const IONetwork net = load_network(opt.net_path);
  const NodeClassification c = classify_nodes(net);
  if (opt.format == "json") {
    Json doc;
    doc["schema"] = kSchema;
    doc["input"] = net.name(net.input());
    doc["output"] = net.name(net.output());
    doc["simple"] = names(net, c.simple);
    doc["super_simple"] = path_names(net, c.super_simple);
    doc["appendage"] = names(net, c.appendage);
    doc["super_appendage"] = names(net, c.super_appendage);
    Json paths = Json::array();
    for (const auto& p : c.io_paths) paths.push_back(path_names(net, p));
    doc["io_simple_paths"] = paths;
    print_json(doc);
    return 0;
  }
  std::vector<std::string> chain;
  for (NodeId r : c.super_simple) chain.push_back(net.name(r));
  std::cout << "simple:          " << braces(net, c.simple) << "\n"
            << "super-simple:    " << join(chain, " < ") << "\n"
            << "appendage:       " << braces(net, c.appendage) << "\n"
            << "super-appendage: " << braces(net, c.super_appendage) << "\n"
            << "io-simple paths: " << c.io_paths.size() << "\n";
  for (const auto& p : c.io_paths) {
    std::vector<std::string> seq;
    for (NodeId n : p) seq.push_back(net.name(n));
    std::cout << "  " << join(seq, " -> ") << "\n";
  }
  return 0;
}

// subnets ------------------------------------------------------------------

int run_subnets(const Options& opt) {
  const IONetwork net = load_network(opt.net_path);
  const Decomposition d = decompose(net);
  if (opt.format == "json") {
    Json doc;
    doc["schema"] = kSchema;
    Json list = Json::array();
    for (const auto& k : d.subnetworks()) list.push_back(subnetwork_json(net, k));
    doc["subnetworks"] = list;
    print_json(doc);
    return 0;
  }
  for (const auto& k : d.subnetworks()) {
    const BlockIndexSets b = block_index_sets(net, k);
    if (const auto* s = std::get_if<StructuralSubnetwork>(&k)) {
      std::cout << label(k) << "  structural  " << net.name(s->rho_prev) << " .. "
                << net.name(s->rho_next) << "  core " << braces(net, s->simple_core)
                << "  linked " << braces(net, s->linked_appendage);
    } else {
      std::cout << label(k) << "  appendage   " << braces(net, nodes_of(k));
    }
    std::cout << "  block rows " << braces(net, b.row_nodes) << " cols "
              << braces(net, b.col_nodes) << "\n";
  }
  return 0;
}

// pattern-net --------------------------------------------------------------

int run_pattern_net(const Options& opt) {
  const IONetwork net = load_network(opt.net_path);
  const PatternNetwork p = build_pattern_network(net);
  if (opt.format == "dot") {
    std::cout << pattern_to_dot(net, p);
    return 0;
  }
  auto lbl = [&](PatternNode n) { return p.label(net, n); };
  if (opt.format == "json") {
    Json doc;
    doc["schema"] = kSchema;
    Json backbone = Json::array();
    for (const auto& n : p.backbone) {
      Json b;
      b["label"] = lbl(n);
      b["kind"] = n.kind == PatternKind::super_simple ? "super_simple" : "backbone";
      b["contents"] = names(net, p.contents(n));
      backbone.push_back(b);
    }
    doc["backbone"] = backbone;
    Json comps = Json::array();
    for (std::size_t i = 1; i <= p.component_count(); ++i) {
      const PatternNode a{PatternKind::appendage, i};
      Json c;
      c["label"] = lbl(a);
      c["nodes"] = names(net, p.contents(a));
      c["vmax"] = lbl(p.vmax_of(i));
      c["vmin"] = lbl(p.vmin_of(i));
      comps.push_back(c);
    }
    doc["components"] = comps;
    Json arrows = Json::array();
    for (const auto& [from, to] : p.appendage_arrows)
      arrows.push_back({lbl({PatternKind::appendage, from}), lbl({PatternKind::appendage, to})});
    doc["component_arrows"] = arrows;
    print_json(doc);
    return 0;
  }
  std::vector<std::string> chain;
  for (const auto& n : p.backbone) chain.push_back(lbl(n));
  std::cout << "backbone: " << join(chain, " -> ") << "\n";
  for (std::size_t i = 1; i <= p.component_count(); ++i) {
    const PatternNode a{PatternKind::appendage, i};
    std::cout << lbl(a) << " " << braces(net, p.contents(a)) << "  vmax " << lbl(p.vmax_of(i))
              << "  vmin " << lbl(p.vmin_of(i)) << "\n";
  }
  for (const auto& [from, to] : p.appendage_arrows)
    std::cout << "arrow " << lbl({PatternKind::appendage, from}) << " -> "
              << lbl({PatternKind::appendage, to}) << "\n";
  return 0;
}

// patterns -----------------------------------------------------------------

struct EngineReport {
  std::size_t checked = 0;
  std::size_t non_core = 0;
  std::vector<std::string> disagreements;
};

EngineReport compare_engines(const IONetwork& net,
                             const std::vector<HomeostasisPattern>& patterns) {
  EngineReport r;
  const std::vector<NodeId> all = net.nodes();
  const std::vector<NodeId> by_name = net.sorted_by_name(NodeSet(all.begin(), all.end()));
  for (const auto& pat : patterns) {
    for (NodeId kappa : by_name) {
      const RepositionVerdict v = reposition_verdict(net, pat.source, kappa);
      if (v == RepositionVerdict::input_target) continue;
      if (v == RepositionVerdict::non_core) {
        ++r.non_core;
        continue;
      }
      ++r.checked;
      const bool theorem = pat.nodes.contains(kappa);
      if (theorem != (v == RepositionVerdict::induced))
        r.disagreements.push_back(label(pat.source) + " => " + net.name(kappa) + ": theorem " +
                                  (theorem ? "yes" : "no") + ", reposition " + to_string(v));
    }
  }
  return r;
}

int run_patterns(const Options& opt) {
  const IONetwork net = load_network(opt.net_path);
  const PatternNetwork p = build_pattern_network(net);
  const auto patterns = all_patterns(net, p);
  EngineReport engines;
  if (opt.check_engines) engines = compare_engines(net, patterns);

  if (opt.format == "json") {
    Json doc;
    doc["schema"] = kSchema;
    Json rows = Json::array();
    for (const auto& pat : patterns) {
      Json row;
      row["subnetwork"] = label(pat.source);
      row["kind"] = is_structural(pat.source) ? "structural" : "appendage";
      row["nodes"] = names(net, nodes_of(pat.source));
      row["block"] = block_description(net, block_index_sets(net, pat.source));
      row["pattern"] = names(net, pat.nodes);
      rows.push_back(row);
    }
    doc["patterns"] = rows;
    if (opt.check_engines) {
      Json e;
      e["checked"] = engines.checked;
      e["non_core_skipped"] = engines.non_core;
      e["disagreements"] = engines.disagreements;
      doc["engines"] = e;
    }
    print_json(doc);
  } else {
    std::vector<std::vector<std::string>> table{{"type", "kind", "block", "pattern"}};
    for (const auto& pat : patterns)
      table.push_back({label(pat.source), is_structural(pat.source) ? "structural" : "appendage",
                       block_description(net, block_index_sets(net, pat.source)),
                       braces(net, pat.nodes)});
    std::vector<std::size_t> width(4, 0);
    for (const auto& row : table)
      for (std::size_t c = 0; c < 4; ++c) width[c] = std::max(width[c], width_of(row[c]));
    for (const auto& row : table) {
      std::string line;
      for (std::size_t c = 0; c < 4; ++c)
        line += c + 1 < 4 ? row[c] + std::string(width[c] - width_of(row[c]) + 2, ' ') : row[c];
      std::cout << line << "\n";
    }
    if (opt.check_engines) {
      std::cout << "engines: " << engines.checked << " checked, " << engines.disagreements.size()
                << " disagreements, " << engines.non_core << " non-core G(kappa) skipped\n";
      for (const auto& d : engines.disagreements) std::cout << "  " << d << "\n";
    }
  }
  if (!engines.disagreements.empty()) throw CheckFailed("induction engines disagree");
  return 0;
}

// verify -------------------------------------------------------------------

int run_verify(const Options& opt) {
  if (opt.seeds <= 0) throw NetworkError("--seeds must be positive");
  const IONetwork net = load_network(opt.net_path);
  const PatternNetwork p = build_pattern_network(net);
  const auto patterns = all_patterns(net, p);
  std::vector<BlockIndexSets> blocks;
  for (const auto& pat : patterns) blocks.push_back(block_index_sets(net, pat.source));

  std::vector<int> agree(patterns.size(), 0);
  std::size_t identity_failures = 0;
  for (int s = 0; s < opt.seeds; ++s) {
    const std::uint64_t seed = opt.seed + static_cast<std::uint64_t>(s);
    const RationalJacobian jac = sample_jacobian(net, blocks, seed);
    Rational product = 1;
    for (const auto& b : blocks) product *= jac.block_det(b);
    const Rational h = homeostasis_det(jac, net);
    if (product != h && product != -h) ++identity_failures;
    for (std::size_t i = 0; i < patterns.size(); ++i) {
      // Redraw (deterministically) when no entry of the block can be adjusted.
      for (std::uint64_t retry = 0; retry < 16; ++retry) {
        try {
          const RationalJacobian base =
              retry == 0 ? jac : sample_jacobian(net, blocks, seed + 7919 * (retry + 1));
          if (numeric_pattern(force_block_singular(base, blocks[i], blocks), net) ==
              patterns[i].nodes)
            ++agree[i];
          break;
        } catch (const NoAdjustableEntry&) {
        }
      }
    }
  }
  std::size_t verified = 0;
  std::size_t disagreements = identity_failures;
  for (std::size_t i = 0; i < patterns.size(); ++i) {
    if (agree[i] == opt.seeds) ++verified;
    disagreements += static_cast<std::size_t>(opt.seeds - agree[i]);
  }

  std::optional<SymbolicFactorization> sym;
  if (net.size() <= kSymbolicNodeCap) sym = symbolic_factorization(net);
  auto poly = [&](const Polynomial& q) {
    return q.to_string([&](std::uint32_t id) { return symbol_name(net, id); });
  };

  std::ostringstream summary;
  summary << verified << "/" << patterns.size() << " subnetworks verified, " << opt.seeds
          << " seeds, " << disagreements << " disagreements";
  if (opt.format == "json") {
    Json doc;
    doc["schema"] = kSchema;
    Json rows = Json::array();
    for (std::size_t i = 0; i < patterns.size(); ++i) {
      Json row;
      row["subnetwork"] = label(patterns[i].source);
      row["pattern"] = names(net, patterns[i].nodes);
      row["agreeing_seeds"] = agree[i];
      row["verified"] = agree[i] == opt.seeds;
      rows.push_back(row);
    }
    doc["subnetworks"] = rows;
    doc["seeds"] = opt.seeds;
    doc["disagreements"] = disagreements;
    doc["product_identity_failures"] = identity_failures;
    doc["summary"] = summary.str();
    if (sym) {
      Json f;
      f["sign"] = sym->sign;
      Json factors = Json::array();
      for (const auto& factor : sym->factors)
        factors.push_back({{"subnetwork", factor.subnetwork}, {"polynomial", poly(factor.polynomial)}});
      f["factors"] = factors;
      f["det_h"] = poly(sym->det_h);
      doc["symbolic_factorization"] = f;
    }
    print_json(doc);
  } else {
    for (std::size_t i = 0; i < patterns.size(); ++i)
      std::cout << label(patterns[i].source) << "  " << (agree[i] == opt.seeds ? "ok  " : "FAIL")
                << "  " << agree[i] << "/" << opt.seeds << " seeds  pattern "
                << braces(net, patterns[i].nodes) << "\n";
    std::cout << summary.str() << "\n";
    if (sym) {
      std::cout << "det H = " << (sym->sign < 0 ? "-" : "") << "product of:\n";
      for (const auto& factor : sym->factors)
        std::cout << "  " << factor.subnetwork << ": " << poly(factor.polynomial) << "\n";
    } else {
      std::cout << "symbolic factorization skipped (more than " << kSymbolicNodeCap
                << " nodes)\n";
    }
  }
  if (disagreements > 0) throw CheckFailed("exact oracle disagrees with the induction engine");
  return 0;
}

// simulate -----------------------------------------------------------------

std::pair<double, double> parse_range(const std::string& text) {
  const auto colon = text.find(':');
  if (colon == std::string::npos) throw NetworkError("--range must look like a:b");
  try {
    std::size_t used = 0;
    const double a = std::stod(text.substr(0, colon), &used);
    if (used != colon) throw std::invalid_argument(text);
    const std::string rest = text.substr(colon + 1);
    const double b = std::stod(rest, &used);
    if (used != rest.size()) throw std::invalid_argument(text);
    return {a, b};
  } catch (const std::logic_error&) {
    throw NetworkError("--range must look like a:b, got \"" + text + "\"");
  }
}

int run_simulate(const Options& opt) {
  const IONetwork net = load_network(opt.net_path);
  const auto [start, end] = parse_range(opt.range);
  AdmissibleODE ode = synthesize_ode(net, opt.seed);
  for (const auto& item : opt.self_weights) {
    const auto eq = item.find('=');
    if (eq == std::string::npos) throw NetworkError("--self-weight expects NODE=VALUE");
    double v = 0;
    try {
      v = std::stod(item.substr(eq + 1));
    } catch (const std::logic_error&) {
      throw NetworkError("--self-weight expects NODE=VALUE, got \"" + item + "\"");
    }
    ode.set_self_weight(net.id(item.substr(0, eq)), v);
  }

  const EquilibriumBranch branch = continue_equilibrium(ode, start, end, opt.steps);
  const auto events = branch.samples.empty() ? std::vector<HomeostasisEvent>{}
                                             : detect_homeostasis(branch, ode);
  const Decomposition d = decompose(net);

  Json ev = Json::array();
  for (const auto& e : events) {
    Json j;
    j["input"] = e.input;
    j["kind"] = to_string(e.kind);
    j["pattern"] = names(net, e.empirical_pattern);
    j["vanishing_block"] = e.vanishing_block;
    j["x_o_second_derivative"] = e.second_derivative;
    j["x_o_third_derivative"] = e.third_derivative;
    ev.push_back(j);
  }
  Json doc;
  doc["schema"] = kSchema;
  doc["seed"] = opt.seed;
  doc["samples"] = branch.samples.size();
  doc["truncated"] = branch.truncated;
  doc["note"] = branch.note;
  doc["events"] = ev;

  if (opt.format == "json") {
    print_json(doc);
  } else {
    std::vector<std::string> header{"I"};
    for (NodeId n : net.nodes()) header.push_back("x_" + net.name(n));
    for (NodeId n : net.nodes()) header.push_back("dx_" + net.name(n));
    for (const auto& k : d.subnetworks()) header.push_back("det_" + label(k));
    header.push_back("det_H");
    header.push_back("hyperbolic");
    std::cout << join(header, ",") << "\n";
    for (const auto& s : branch.samples) {
      const Eigen::MatrixXd jac = ode.jacobian(s.state, s.input);
      const Eigen::VectorXd xp = input_response(ode, s.state, s.input);
      std::vector<std::string> row{number(s.input)};
      for (Eigen::Index i = 0; i < s.state.size(); ++i) row.push_back(number(s.state(i)));
      for (Eigen::Index i = 0; i < xp.size(); ++i) row.push_back(number(xp(i)));
      for (const auto& k : d.subnetworks())
        row.push_back(number(block_determinant(jac, block_index_sets(net, k))));
      row.push_back(number(homeostasis_determinant(ode, s.state, s.input)));
      row.push_back(s.hyperbolic ? "1" : "0");
      std::cout << join(row, ",") << "\n";
    }
  }
  if (!opt.events_path.empty()) {
    std::ofstream out(opt.events_path, std::ios::binary);
    if (!out) throw NetworkError("cannot write " + opt.events_path);
    out << doc.dump(2) << "\n";
  }
  return 0;
}

// export-dot ---------------------------------------------------------------

int run_export_dot(const Options& opt) {
  const IONetwork net = load_network(opt.net_path);
  const std::string g = network_to_dot(net);
  const std::string p = pattern_to_dot(net, build_pattern_network(net));
  if (opt.out_dir.empty()) {
    std::cout << g << p;
    return 0;
  }
  std::filesystem::create_directories(opt.out_dir);
  for (const auto& [file, text] : {std::pair{"network.dot", g}, std::pair{"pattern.dot", p}}) {
    const auto path = std::filesystem::path(opt.out_dir) / file;
    std::ofstream out(path, std::ios::binary);
    if (!out) throw NetworkError("cannot write " + path.string());
    out << text;
    std::cout << path.string() << "\n";
  }
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Infinitesimal homeostasis analysis of input-output networks"};
  app.require_subcommand(1);
  Options opt;

  auto add_net = [&](CLI::App* cmd) {
    cmd->add_option("--net", opt.net_path, "network JSON file")->required();
  };
  auto add_format = [&](CLI::App* cmd, std::vector<std::string> allowed) {
    cmd->add_option("--format", opt.format, "output format")
        ->check(CLI::IsMember(allowed))
        ->default_str(allowed.front());
  };

  auto* classify = app.add_subcommand("classify", "simple / super-simple / appendage nodes");
  add_net(classify);
  add_format(classify, {"text", "json"});

  auto* subnets = app.add_subcommand("subnets", "homeostasis subnetworks and their blocks");
  add_net(subnets);
  add_format(subnets, {"text", "json"});

  auto* pnet = app.add_subcommand("pattern-net", "homeostasis pattern network");
  add_net(pnet);
  add_format(pnet, {"text", "json", "dot"});

  auto* patterns = app.add_subcommand("patterns", "homeostasis pattern of every subnetwork");
  add_net(patterns);
  add_format(patterns, {"text", "json"});
  patterns->add_flag("--check-engines", opt.check_engines,
                     "compare against the repositioned-output engine");

  auto* verify = app.add_subcommand("verify", "check patterns against exact Jacobian samples");
  add_net(verify);
  add_format(verify, {"text", "json"});
  verify->add_option("--seeds", opt.seeds, "number of sampled Jacobians")->capture_default_str();
  verify->add_option("--seed", opt.seed, "first sampling seed")->capture_default_str();

  auto* simulate = app.add_subcommand("simulate", "continue equilibria of a synthesized ODE");
  add_net(simulate);
  add_format(simulate, {"csv", "json"});
  simulate->add_option("--seed", opt.seed, "parameter seed")->capture_default_str();
  simulate->add_option("--range", opt.range, "input range a:b")->capture_default_str();
  simulate->add_option("--steps", opt.steps, "number of samples")->capture_default_str();
  simulate->add_option("--self-weight", opt.self_weights, "NODE=VALUE self coupling (repeatable)");
  simulate->add_option("--events", opt.events_path, "also write the event list as JSON here");

  auto* dot = app.add_subcommand("export-dot", "Graphviz files for the network and P");
  add_net(dot);
  dot->add_option("--out-dir", opt.out_dir, "write network.dot and pattern.dot here");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 1;
  }
  if (simulate->parsed() && opt.format == "text") opt.format = "csv";

  try {
    if (classify->parsed()) return run_classify(opt);
    if (subnets->parsed()) return run_subnets(opt);
    if (pnet->parsed()) return run_pattern_net(opt);
    if (patterns->parsed()) return run_patterns(opt);
    if (verify->parsed()) return run_verify(opt);
    if (simulate->parsed()) return run_simulate(opt);
    if (dot->parsed()) return run_export_dot(opt);
  } catch (const NetworkError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  } catch (const PathExplosion& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  } catch (const CheckFailed& e) {
    std::cerr << "check failed: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "internal error: " << e.what() << "\n";
    return 2;
  }
  return 1;
}
