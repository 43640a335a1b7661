// Command-line front end: parses s-expression terms, runs spectrum /
// normalize / compare / realize / oracle commands, and prints text or JSON.
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "tukeyspec/errors.hpp"
#include "tukeyspec/finite.hpp"
#include "tukeyspec/sexpr.hpp"

using json = nlohmann::json;
using namespace tukeyspec;

namespace {

struct Options {
  bool json_out = false;
  std::string mode = "strict";
  std::string kind;
  std::string suite = "all";
  std::string file;
  int max_n = 0;
  std::vector<std::string> args;
};

std::string load_term(const Options& opt, std::size_t index) {
  if (!opt.file.empty()) {
    std::ifstream in(opt.file);
    if (!in) throw DomainError("cannot read file: " + opt.file);
    std::ostringstream buf;
    buf << in.rdbuf();
    return buf.str();
  }
  if (index >= opt.args.size()) throw DomainError("missing term argument");
  return opt.args[index];
}

json type_json(const TukeyType& t) {
  json j;
  j["pretty"] = pretty(t);
  j["sexpr"] = to_sexpr(render(t));
  return j;
}

json spectrum_json(const std::vector<TukeyType>& sp) {
  json out = json::array();
  for (const auto& t : sp) out.push_back(type_json(t));
  return out;
}

std::string spectrum_text(const std::vector<TukeyType>& sp) {
  std::string out = "{";
  for (std::size_t i = 0; i < sp.size(); ++i) {
    if (i) out += ", ";
    out += pretty(sp[i]);
  }
  return out + "}";
}

void emit(const Options& opt, const json& input, const json& result,
          const json& rule_traces, const std::string& text) {
  if (opt.json_out) {
    json j;
    j["input"] = input;
    j["result"] = result;
    j["rule_traces"] = rule_traces;
    std::cout << j.dump(2) << "\n";
  } else {
    std::cout << text;
  }
}

std::string fan_text(const Fan& fan) {
  std::string out = "[";
  for (std::size_t i = 0; i < fan.classes.size(); ++i) {
    if (i) out += ", ";
    out += "(" + to_string(fan.classes[i].mult) + " x th=" +
           to_string(fan.classes[i].theta) + ")";
  }
  return out + "]";
}

int run_normalize(const Options& opt) {
  std::string src = load_term(opt, 0);
  NormalizeResult r = normalize(parse_type_term(src));
  json traces = json::array();
  std::string text = pretty(r.type) + "\n";
  for (const auto& s : r.steps) {
    traces.push_back({{"rule", s.rule}, {"note", s.note}});
    text += "trace: " + s.rule + ": " + s.note + "\n";
  }
  emit(opt, src, type_json(r.type), traces, text);
  return 0;
}

int run_compare(const Options& opt) {
  std::string left, right;
  if (opt.file.empty()) {
    if (opt.args.size() < 2) throw DomainError("compare needs two type terms");
    left = opt.args[0];
    right = opt.args[1];
  } else {
    if (opt.args.empty())
      throw DomainError("compare needs a second term alongside --file");
    left = load_term(opt, 0);
    right = opt.args[0];
  }
  CompareMode mode = opt.mode == "extended" ? CompareMode::Extended : CompareMode::Strict;
  TukeyType a = normal_form(parse_type_term(left));
  TukeyType b = normal_form(parse_type_term(right));
  CompareResult r = compare_types(a, b, mode);
  std::string text = to_string(r.verdict);
  if (r.strict_order) text += " (strict)";
  text += "\n";
  json traces = json::array();
  for (const auto& s : r.trace) {
    traces.push_back(s);
    text += "trace: " + s + "\n";
  }
  json result;
  result["verdict"] = to_string(r.verdict);
  result["strict"] = r.strict_order;
  result["mode"] = opt.mode;
  result["lhs"] = type_json(a);
  result["rhs"] = type_json(b);
  emit(opt, json::array({left, right}), result, traces, text);
  return 0;
}

int run_spectrum(const Options& opt) {
  std::string src = load_term(opt, 0);
  std::vector<TukeyType> sp;
  if (opt.kind == "intalg") {
    sp = intalg_spectrum(parse_order_term(src));
  } else if (opt.kind == "treealg") {
    sp = tree_spectrum(parse_tree_term(src));
  } else if (opt.kind == "ptree") {
    sp = ptree_spectrum(parse_ptree_term(src));
  } else if (opt.kind == "catalog") {
    sp = catalog_spectrum(parse_catalog_spec(src));
  } else {
    throw DomainError("unknown spectrum kind: " + opt.kind);
  }
  emit(opt, src, {{"spectrum", spectrum_json(sp)}}, json::array(),
       spectrum_text(sp) + "\n");
  return 0;
}

int run_chains(const Options& opt) {
  std::string src = load_term(opt, 0);
  std::string text;
  json result = json::array();
  if (opt.kind == "intalg") {
    for (const auto& c : classify_cuts(parse_order_term(src))) {
      std::string rest = c.coinitiality ? "ci " + to_string(*c.coinitiality) : "full";
      text += "(cf " + to_string(c.cf) + ", " + rest + ") -> " + pretty(c.tukey) + "\n";
      json j;
      j["cf"] = to_string(c.cf);
      if (c.coinitiality) j["ci"] = to_string(*c.coinitiality);
      j["full_chain"] = !c.coinitiality.has_value();
      j["type"] = type_json(c.tukey);
      result.push_back(j);
    }
  } else if (opt.kind == "treealg") {
    for (const auto& c : tree_chain_classes(parse_tree_term(src))) {
      text += "(cf " + to_string(c.cf) + ", succ " + to_string(c.succ_count) + ") -> " +
              pretty(c.tukey) + "\n";
      result.push_back({{"cf", to_string(c.cf)},
                        {"succ", to_string(c.succ_count)},
                        {"type", type_json(c.tukey)}});
    }
  } else if (opt.kind == "ptree") {
    for (const auto& c : ptree_chain_classes(parse_ptree_term(src))) {
      auto [eps, chi] = epsilon_and_character(c);
      text += "(cf " + to_string(c.cf) + ", fan " + fan_text(c.fan) + ", eps " +
              to_string(eps) + ", chi " + to_string(chi) + ") -> " + pretty(c.tukey) + "\n";
      json fan = json::array();
      for (const auto& fc : c.fan.classes)
        fan.push_back({{"mult", to_string(fc.mult)}, {"theta", to_string(fc.theta)}});
      result.push_back({{"cf", to_string(c.cf)},
                        {"fan", fan},
                        {"lambda", to_string(c.fan.lambda)},
                        {"epsilon", to_string(eps)},
                        {"character", to_string(chi)},
                        {"type", type_json(c.tukey)}});
    }
  } else {
    throw DomainError("unknown chains kind: " + opt.kind);
  }
  emit(opt, src, result, json::array(), text);
  return 0;
}

int run_realize_interval(const Options& opt) {
  std::string src = load_term(opt, 0);
  auto pairs = read_card_pairs(parse_sexpr(src));
  OrderTerm term = realize_interval(pairs);
  auto sp = intalg_spectrum(term);
  std::string text = to_sexpr(term) + "\nspectrum: " + spectrum_text(sp) + "\n";
  emit(opt, src, {{"term", to_sexpr(term)}, {"spectrum", spectrum_json(sp)}},
       json::array(), text);
  return 0;
}

int run_realize_weakprod(const Options& opt) {
  std::string src = load_term(opt, 0);
  auto entries = read_weighted_cards(parse_sexpr(src));
  PTreeTerm term = realize_weak_product(entries);
  // the chain class at the root realizes the requested weak product
  TukeyType root_type = normal_form(TypeTerm::wprod(entries));
  std::string text = to_sexpr(term) + "\nroot class type: " + pretty(root_type) + "\n";
  emit(opt, src, {{"term", to_sexpr(term)}, {"root_type", type_json(root_type)}},
       json::array(), text);
  return 0;
}

json report_common(std::uint64_t posets, const std::vector<std::string>& violations) {
  json j;
  j["posets"] = posets;
  j["violations"] = violations;
  j["ok"] = violations.empty();
  return j;
}

int run_oracle(const Options& opt) {
  std::string text;
  json result = json::object();
  auto want = [&](const char* s) { return opt.suite == s || opt.suite == "all"; };
  std::vector<std::string> all_violations;

  if (!opt.file.empty()) {
    // stone oracle on an explicit poset
    std::ifstream in(opt.file);
    if (!in) throw DomainError("cannot read file: " + opt.file);
    std::ostringstream buf;
    buf << in.rdbuf();
    StoneReport rep = stone_correspondence_oracle(parse_poset(buf.str()));
    text += "stone correspondence: ultrafilters=" + std::to_string(rep.ultrafilters) +
            " chains=" + std::to_string(rep.chains) +
            " generator checks=" + std::to_string(rep.generator_checks) + "\n";
    json j = report_common(rep.posets, rep.violations);
    j["ultrafilters"] = rep.ultrafilters;
    j["chains"] = rep.chains;
    result["stone"] = j;
    all_violations = rep.violations;
  } else {
    if (want("fans")) {
      int n = opt.max_n ? opt.max_n : 7;
      FanSweepReport rep = fan_invariance_oracle(n);
      const char* scope =
          "finite sweep: exercises the overlap grouping and the invariance of "
          "(lambda, chain lengths); every chain length is 1 at finite scale";
      text += "fan invariance, n <= " + std::to_string(n) + " (" + scope + ")\n";
      text += "posets=" + std::to_string(rep.posets) +
              " chains=" + std::to_string(rep.chains) +
              " successor sets=" + std::to_string(rep.successor_sets) + "\n";
      json j = report_common(rep.posets, rep.violations);
      j["chains"] = rep.chains;
      j["successor_sets"] = rep.successor_sets;
      j["scope"] = scope;
      result["fans"] = j;
      all_violations.insert(all_violations.end(), rep.violations.begin(),
                            rep.violations.end());
    }
    if (want("stone")) {
      int n = opt.max_n ? std::min(opt.max_n, 8) : 6;
      StoneReport rep = stone_sweep(n);
      text += "stone correspondence, n <= " + std::to_string(n) +
              ": posets=" + std::to_string(rep.posets) +
              " ultrafilters=" + std::to_string(rep.ultrafilters) +
              " generator checks=" + std::to_string(rep.generator_checks) + "\n";
      json j = report_common(rep.posets, rep.violations);
      j["ultrafilters"] = rep.ultrafilters;
      j["generator_checks"] = rep.generator_checks;
      result["stone"] = j;
      all_violations.insert(all_violations.end(), rep.violations.begin(),
                            rep.violations.end());
    }
    if (want("bridge")) {
      int n = opt.max_n ? opt.max_n : 7;
      BridgeReport rep = bridge_oracle(n);
      text += "symbolic/finite bridge, n <= " + std::to_string(n) +
              ": terms=" + std::to_string(rep.terms) +
              " classes=" + std::to_string(rep.classes) + "\n";
      json j = report_common(rep.terms, rep.violations);
      j["classes"] = rep.classes;
      result["bridge"] = j;
      all_violations.insert(all_violations.end(), rep.violations.begin(),
                            rep.violations.end());
    }
  }
  text += std::to_string(all_violations.size()) + " violations\n";
  for (const auto& v : all_violations) text += "violation: " + v + "\n";
  emit(opt, opt.suite, result, json::array(), text);
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Symbolic calculator for Tukey spectra of ultrafilters on "
               "interval, tree, and pseudo-tree algebras"};
  app.require_subcommand(1);

  Options opt;
  app.add_flag("--json", opt.json_out, "emit JSON instead of text");

  auto add_common = [&](CLI::App* cmd, bool wants_terms) {
    cmd->add_flag("--json", opt.json_out, "emit JSON instead of text");
    cmd->add_option("--file", opt.file, "read the term from a file");
    if (wants_terms) cmd->add_option("term", opt.args, "s-expression term(s)");
  };

  CLI::App* normalize_cmd = app.add_subcommand("normalize", "canonicalize a type term");
  add_common(normalize_cmd, true);

  CLI::App* compare_cmd = app.add_subcommand("compare", "compare two type terms");
  add_common(compare_cmd, true);
  compare_cmd->add_option("--mode", opt.mode, "strict or extended")
      ->check(CLI::IsMember({"strict", "extended"}));

  CLI::App* spectrum_cmd = app.add_subcommand("spectrum", "Tukey spectrum of an algebra");
  add_common(spectrum_cmd, true);
  spectrum_cmd->add_option("--kind", opt.kind, "intalg, treealg, ptree, or catalog")
      ->required()
      ->check(CLI::IsMember({"intalg", "treealg", "ptree", "catalog"}));

  CLI::App* chains_cmd = app.add_subcommand("chains", "initial-chain classes of an algebra");
  add_common(chains_cmd, true);
  chains_cmd->add_option("--kind", opt.kind, "intalg, treealg, or ptree")
      ->required()
      ->check(CLI::IsMember({"intalg", "treealg", "ptree"}));

  CLI::App* realize_cmd = app.add_subcommand("realize", "build an algebra with given types");
  realize_cmd->require_subcommand(1);
  CLI::App* realize_interval_cmd =
      realize_cmd->add_subcommand("interval", "linear order realizing (cf ci) pairs");
  add_common(realize_interval_cmd, true);
  CLI::App* realize_weakprod_cmd =
      realize_cmd->add_subcommand("weakprod", "pseudo-tree realizing a weak product");
  add_common(realize_weakprod_cmd, true);

  CLI::App* oracle_cmd = app.add_subcommand("oracle", "exhaustive finite verification sweeps");
  oracle_cmd->add_flag("--json", opt.json_out, "emit JSON instead of text");
  oracle_cmd->add_option("--suite", opt.suite, "fans, stone, bridge, or all")
      ->check(CLI::IsMember({"fans", "stone", "bridge", "all"}));
  oracle_cmd->add_option("--max-n", opt.max_n, "poset size bound");
  oracle_cmd->add_option("--file", opt.file, "edge-list poset for the stone oracle");

  try {
    app.parse(argc, argv);
    if (app.got_subcommand(normalize_cmd)) return run_normalize(opt);
    if (app.got_subcommand(compare_cmd)) return run_compare(opt);
    if (app.got_subcommand(spectrum_cmd)) return run_spectrum(opt);
    if (app.got_subcommand(chains_cmd)) return run_chains(opt);
    if (app.got_subcommand(realize_cmd)) {
      if (realize_cmd->got_subcommand(realize_interval_cmd)) return run_realize_interval(opt);
      return run_realize_weakprod(opt);
    }
    if (app.got_subcommand(oracle_cmd)) return run_oracle(opt);
    return 1;
  } catch (const CLI::ParseError& e) {
    return app.exit(e) ? 1 : 0;
  } catch (const ParseError& e) {
    std::cerr << "parse error at offset " << e.pos << ": " << e.what() << "\n";
    return 1;
  } catch (const DomainError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
}
