// jn — jumping numbers of simple complete ideals and plane branches.
//
// Subcommands: jumps, dual-graph, invert, verify, info.  Inputs may be given
// as a point basis, proximity relations, a multiplicity sequence or
// characteristic pairs (plus t extra free points), Puiseux exponents, or a
// jump list.  All arithmetic is exact; rationals are printed in lowest terms.
//
// Exit codes: 0 ok, 2 parse error, 3 validation error, 4 malformed jump set,
// 5 verification mismatch.

#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "jumpnum/jn.hpp"

namespace {

using json = nlohmann::json;
using namespace jumpnum;

constexpr int exit_ok = 0;
constexpr int exit_parse = 2;
constexpr int exit_validation = 3;
constexpr int exit_malformed = 4;
constexpr int exit_mismatch = 5;

int exit_code_for(const error& e) {
  switch (e.code()) {
    case errc::parse_error:
      return exit_parse;
    case errc::malformed_jump_set:
      return exit_malformed;
    default:
      return exit_validation;
  }
}

struct InputOptions {
  std::string point_basis;
  std::string proximity_pairs;
  int prox_n = 0;
  std::string multiplicity_sequence;
  std::string char_pairs;
  long long extra_free = 0;
  std::string puiseux;

  void attach(CLI::App* cmd) {
    auto* g = cmd->add_option_group("input", "exactly one input form");
    g->add_option("--point-basis", point_basis, "comma-separated multiplicities, e.g. 6,3,3,3,1,1,1,1");
    g->add_option("--proximity-pairs", proximity_pairs,
                  "satellite relations i:j (i proximate to j), semicolon-separated; needs --n");
    g->add_option("--multiplicity-sequence", multiplicity_sequence,
                  "comma-separated curve multiplicities (with --t extra free points)");
    g->add_option("--char-pairs", char_pairs, "characteristic pairs m:n;m:n (with --t)");
    g->add_option("--puiseux", puiseux, "comma-separated Puiseux exponents p/q");
    g->require_option(1);
    cmd->add_option("--n", prox_n, "number of points for --proximity-pairs");
    cmd->add_option("--t", extra_free, "extra free points for curve inputs")->default_val(0);
  }

  PointBasis resolve() const {
    if (!point_basis.empty()) return validate_point_basis(parse_integer_list(point_basis));
    if (!proximity_pairs.empty()) {
      if (prox_n <= 0) fail(errc::parse_error, "--proximity-pairs requires --n");
      std::vector<std::pair<int, int>> rel;
      for (auto& [i, j] : parse_pair_list(proximity_pairs))
        rel.emplace_back((int)to_small(i), (int)to_small(j));
      return point_basis_from_proximity(proximity_from_relations(prox_n, rel));
    }
    if (!multiplicity_sequence.empty()) {
      MultiplicitySequence ms{parse_integer_list(multiplicity_sequence)};
      return ideal_from_class(EquisingularityClass{ms, Int(extra_free)});
    }
    if (!char_pairs.empty()) {
      CharacteristicPairs cp{parse_pair_list(char_pairs)};
      return ideal_from_class(EquisingularityClass{sequence_from_pairs(cp), Int(extra_free)});
    }
    if (!puiseux.empty()) return point_basis_from_puiseux(parse_rational_list(puiseux));
    fail(errc::parse_error, "no input given");
  }

  json echo() const {
    json j;
    if (!point_basis.empty()) j["point_basis"] = point_basis;
    if (!proximity_pairs.empty()) j["proximity_pairs"] = proximity_pairs;
    if (!multiplicity_sequence.empty()) j["multiplicity_sequence"] = multiplicity_sequence;
    if (!char_pairs.empty()) j["char_pairs"] = char_pairs;
    if (!puiseux.empty()) j["puiseux"] = puiseux;
    if (extra_free) j["t"] = extra_free;
    return j;
  }
};

json jumps_to_json(const InputOptions& in, const PointBasis& b,
                   const JumpingSetDescription& d, const std::vector<Jump>& js) {
  json out;
  out["input"] = in.echo();
  out["input"]["resolved_point_basis"] = json::parse("[" + join_integers(b.values()) + "]");
  json pairs = json::array();
  for (auto& [a, bb] : d.pairs) pairs.push_back({json::parse(a.str()), json::parse(bb.str())});
  out["generators"] = pairs;
  json caps = json::array();
  for (const Int& c : d.caps) caps.push_back(json::parse(c.str()));
  out["caps"] = caps;
  json jj = json::array();
  for (const Jump& j : js) {
    json decs = json::array();
    for (const JumpDecomposition& dec : j.decompositions) {
      json one{{"block", dec.block}, {"s", json::parse(dec.s.str())}, {"t", json::parse(dec.t.str())}};
      if (dec.has_m) one["m"] = json::parse(dec.m.str());
      decs.push_back(one);
    }
    jj.push_back({{"value", to_string(j.value)}, {"decompositions", decs}});
  }
  out["jumps"] = jj;
  return out;
}

int cmd_jumps(const InputOptions& in, const std::string& bound_text, const std::string& format) {
  Rat bound = parse_rational(bound_text);
  PointBasis b = in.resolve();
  SimpleIdeal a(b);
  JumpingSetDescription d = generators(a);
  std::vector<Jump> js = enumerate_jumps(d, bound);
  if (format == "json") {
    std::cout << jumps_to_json(in, b, d, js).dump(2) << "\n";
    return exit_ok;
  }
  std::cout << "point basis: " << join_integers(b.values()) << "\n";
  std::cout << "generators:";
  for (std::size_t i = 0; i < d.pairs.size(); ++i)
    std::cout << " (" << d.pairs[i].first.str() << "," << d.pairs[i].second.str() << ")";
  std::cout << "\ncaps: " << join_integers(d.caps) << "\n";
  std::cout << "jumping numbers up to " << to_string(bound) << ":\n";
  for (const Jump& j : js) {
    std::cout << "  " << to_string(j.value) << "  ";
    for (const JumpDecomposition& dec : j.decompositions) {
      std::cout << "[block " << dec.block << ": s=" << dec.s.str() << " t=" << dec.t.str();
      if (dec.has_m) std::cout << " m=" << dec.m.str();
      std::cout << "]";
    }
    std::cout << "\n";
  }
  return exit_ok;
}

int cmd_dual_graph(const InputOptions& in, const std::string& format) {
  PointBasis b = in.resolve();
  ProximityMatrix P = proximity_from_point_basis(b);
  DualGraph g = build_dual_graph(P);
  if (format == "dot") {
    std::cout << to_dot(g);
  } else if (format == "ascii") {
    std::cout << to_ascii(g);
  } else {
    auto [stars, ends] = stars_and_ends(g);
    json out;
    out["n"] = g.n;
    out["weights"] = g.weight;
    json edges = json::array();
    for (auto [u, v] : g.edges) edges.push_back({u, v});
    out["edges"] = edges;
    out["stars"] = stars;
    out["ends"] = ends;
    json mult = json::array();
    for (const Int& m : g.multiplicity) mult.push_back(json::parse(m.str()));
    out["multiplicities"] = mult;
    std::cout << out.dump(2) << "\n";
  }
  return exit_ok;
}

void print_derived(const PointBasis& b) {
  SimpleIdeal a(b);
  JumpingSetDescription d = generators(a);
  std::cout << "lct: " << to_string(lct(d)) << "\n";
  std::cout << "multiplicity e: " << hilbert_samuel(a).str() << "\n";
  std::cout << "order: " << b.at(1).str() << "\n";
  std::cout << "zariski exponents: " << join_integers(zariski_exponents(a)) << "\n";
}

int cmd_invert(const std::string& jumps_inline, const std::string& jumps_file,
               const std::string& mode) {
  std::vector<Rat> jumps;
  if (!jumps_file.empty())
    jumps = read_rationals_file(jumps_file);
  else if (!jumps_inline.empty())
    jumps = parse_rational_list(jumps_inline);
  else
    fail(errc::parse_error, "need --jumps or --jumps-file");
  if (mode == "curve") {
    MultiplicitySequence ms = equisingularity_from_jumps(jumps);
    std::cout << "multiplicity sequence: " << join_integers(ms.m) << "\n";
    print_derived(validate_point_basis(ms.m));
  } else {
    PointBasis b = invert_jumping_numbers(jumps);
    std::cout << "point basis: " << join_integers(b.values()) << "\n";
    print_derived(b);
  }
  return exit_ok;
}

int cmd_info(const InputOptions& in) {
  PointBasis b = in.resolve();
  SimpleIdeal a(b);
  const GammaStructure& gs = a.structure();
  std::cout << "n: " << a.n() << "\n";
  std::cout << "point basis: " << join_integers(b.values()) << "\n";
  std::cout << "gamma:";
  for (int g : gs.gamma) std::cout << " " << g;
  std::cout << "\ngamma*:";
  for (int g : gs.gamma_star) std::cout << " " << g;
  std::cout << "\ntau:";
  for (int t : gs.tau) std::cout << " " << t;
  std::cout << "\nmonomial: " << (gs.is_monomial() ? "yes" : "no") << "\n";
  std::cout << "puiseux exponents: " << join_rationals(puiseux_exponents(b)) << "\n";
  std::cout << "zariski exponents: " << join_integers(zariski_exponents(a)) << "\n";
  JumpingSetDescription d = generators(a);
  std::cout << "generators:";
  for (auto& [x, y] : d.pairs) std::cout << " (" << x.str() << "," << y.str() << ")";
  std::cout << "\ncaps: " << join_integers(d.caps) << "\n";
  std::vector<Rat> xs;
  for (int nu = 0; nu < d.blocks(); ++nu) xs.push_back(xi_prime(d, nu));
  std::cout << "xi': " << join_rationals(xs) << "\n";
  std::cout << "lct: " << to_string(lct(d)) << "\n";
  std::cout << "I^2: " << a.self_intersection().str() << "\n";
  std::cout << "multiplicity e: " << hilbert_samuel(a).str() << "\n";
  return exit_ok;
}

// differential check of one instance; returns the failed stage or empty
std::string verify_instance(const PointBasis& b, const Rat& bound, Splitmix64& rng) {
  SimpleIdeal a(b);
  std::vector<Rat> closed = jump_values(enumerate_jumps(generators(a), bound));
  std::vector<Rat> oracle = oracle_jumping_numbers(a, bound);
  if (closed != oracle) return "closed-form vs oracle";
  for (int k = 0; k < 5; ++k) {
    IntVec r(b.n());
    for (Int& v : r) v = (long long)rng.below(4);
    Rat c1 = c_R_direct(a, r);
    if (c1 != c_R_reduced(a, r)) return "c_R reduced";
    if (c1 != c_R_definitional(a, r)) return "c_R definitional";
  }
  if (bound >= 2) {
    std::vector<Rat> upto2;
    for (const Rat& v : closed)
      if (v <= 2) upto2.push_back(v);
    if (!(invert_jumping_numbers(upto2) == b)) return "inversion round trip";
  }
  return "";
}

int cmd_verify(const InputOptions& in, bool have_input, const std::string& bound_text,
               const std::vector<std::string>& random_spec) {
  Rat bound = parse_rational(bound_text);
  if (bound <= 0) fail(errc::nonpositive_bound, "bound must be positive");
  std::vector<PointBasis> instances;
  std::uint64_t seed = 1;
  if (!random_spec.empty()) {
    if (random_spec.size() != 4) fail(errc::parse_error, "--random needs n_max a_max count seed");
    int n_max = (int)to_small(parse_integer(random_spec[0]));
    Int a_max = parse_integer(random_spec[1]);
    int count = (int)to_small(parse_integer(random_spec[2]));
    seed = (std::uint64_t)to_small(parse_integer(random_spec[3]));
    instances = generate_corpus(n_max, a_max, count, seed, false);
  } else if (have_input) {
    instances.push_back(in.resolve());
  } else {
    fail(errc::parse_error, "verify needs an input or --random");
  }
  Splitmix64 rng(seed ^ 0x5eedull);
  int failed = 0;
  for (const PointBasis& b : instances) {
    std::string stage = verify_instance(b, bound, rng);
    if (stage.empty()) {
      std::cout << "PASS " << join_integers(b.values()) << "\n";
    } else {
      std::cout << "FAIL " << join_integers(b.values()) << " (" << stage << ")\n";
      ++failed;
    }
  }
  std::cout << (instances.size() - failed) << "/" << instances.size() << " instances passed\n";
  return failed == 0 ? exit_ok : exit_mismatch;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"jumping numbers of simple complete ideals and plane branches"};
  app.require_subcommand(1);

  auto* jumps = app.add_subcommand("jumps", "enumerate jumping numbers with decompositions");
  InputOptions jumps_in;
  jumps_in.attach(jumps);
  std::string jumps_bound = "2";
  std::string jumps_format = "text";
  jumps->add_option("--up-to", jumps_bound, "inclusive rational bound")->default_val("2");
  jumps->add_option("--format", jumps_format, "text|json")
      ->default_val("text")
      ->check(CLI::IsMember({"text", "json"}));

  auto* graph = app.add_subcommand("dual-graph", "weighted dual graph of the resolution");
  InputOptions graph_in;
  graph_in.attach(graph);
  std::string graph_format = "ascii";
  graph->add_option("--format", graph_format, "dot|ascii|json")
      ->default_val("ascii")
      ->check(CLI::IsMember({"dot", "ascii", "json"}));

  auto* invert = app.add_subcommand("invert", "recover the ideal or curve from its jumping numbers");
  std::string inv_jumps, inv_file, inv_mode = "ideal";
  invert->add_option("--jumps", inv_jumps, "comma-separated jump list");
  invert->add_option("--jumps-file", inv_file, "file with one value per line, # comments");
  invert->add_option("--mode", inv_mode, "ideal|curve")
      ->default_val("ideal")
      ->check(CLI::IsMember({"ideal", "curve"}));

  auto* verify = app.add_subcommand("verify", "differential check: closed form vs oracle vs c_R");
  InputOptions verify_in;
  verify_in.attach(verify);
  // the input group on verify is optional; --random replaces it
  verify->get_option_group("input")->require_option(0, 1);
  std::string verify_bound = "2";
  verify->add_option("--up-to", verify_bound)->default_val("2");
  std::vector<std::string> random_spec;
  verify->add_option("--random", random_spec, "n_max a_max count seed")->expected(4);

  auto* info = app.add_subcommand("info", "summary of the combinatorial invariants");
  InputOptions info_in;
  info_in.attach(info);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int rc = app.exit(e);
    return rc == 0 ? 0 : exit_parse;
  }

  try {
    if (jumps->parsed()) return cmd_jumps(jumps_in, jumps_bound, jumps_format);
    if (graph->parsed()) return cmd_dual_graph(graph_in, graph_format);
    if (invert->parsed()) return cmd_invert(inv_jumps, inv_file, inv_mode);
    if (verify->parsed()) {
      bool have_input = verify->get_option_group("input")->count_all() > 0;
      return cmd_verify(verify_in, have_input, verify_bound, random_spec);
    }
    if (info->parsed()) return cmd_info(info_in);
  } catch (const error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return exit_code_for(e);
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return exit_validation;
  }
  return exit_ok;
}
