// Command line front end for the nongen library: free-group word and
// power-word arithmetic, subgroup graphs, the geometric constants, and the
// end-to-end witness pipeline.
//
// Exit codes: 0 success (or boolean true), 1 boolean false / refusal,
// 2 malformed input.

#include <CLI11.hpp>
#include <json.hpp>

#include <filesystem>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>

#include "nongen/geometry.hpp"
#include "nongen/input_doc.hpp"
#include "nongen/json_io.hpp"
#include "nongen/power_word.hpp"
#include "nongen/stallings.hpp"
#include "nongen/witness.hpp"
#include "nongen/word.hpp"

namespace {

using Json = nlohmann::ordered_json;
using namespace nongen;

constexpr int kExitTrue = 0;
constexpr int kExitFalse = 1;
constexpr int kExitInput = 2;

struct Options {
  std::string input_file;
  std::string format = "text";
  std::uint64_t seed = 0;
  std::uint64_t samples = 1000;
  unsigned qmax = 12;
  std::string mode = "paper";
  std::string n_override;
  std::string mult_override;
  std::uint64_t expand_limit = 100000;
  unsigned rank = 2;
  std::string letters;
  unsigned delta = 0;
  std::optional<unsigned> range;
  std::string a = "1";
  std::string subgroup_name;  // empty = first block in the file
  std::string element = "g";  // binding name (or literal) for witness g
};

// Shared argument resolution: an operand names an existing file (contents
// used verbatim), a binding from the input document, or parses literally.
struct Context {
  std::optional<InputDocument> doc;
  GroupDescriptor desc;

  explicit Context(const Options& opt) {
    if (!opt.input_file.empty()) {
      std::ifstream in(opt.input_file);
      if (!in) throw Error("cannot open input file '" + opt.input_file + "'");
      std::stringstream buf;
      buf << in.rdbuf();
      doc = parse_input_document(buf.str());
      desc = doc->descriptor;
    } else {
      desc = GroupDescriptor(opt.rank, opt.letters, opt.delta);
    }
  }

  std::string resolve_text(const std::string& arg) const {
    std::error_code ec;
    if (std::filesystem::is_regular_file(arg, ec)) {
      std::ifstream in(arg);
      std::stringstream buf;
      buf << in.rdbuf();
      std::string text = buf.str();
      while (!text.empty() && (text.back() == '\n' || text.back() == '\r' ||
                               text.back() == ' '))
        text.pop_back();
      return text;
    }
    return arg;
  }

  Word word(const std::string& arg) const {
    if (doc) {
      if (const Word* bound = doc->find_binding(arg)) return *bound;
    }
    return Word::parse(desc, resolve_text(arg));
  }

  PowerWord pw(const std::string& arg) const {
    if (doc) {
      if (const Word* bound = doc->find_binding(arg)) return PowerWord(*bound);
    }
    return PowerWord::parse(desc, resolve_text(arg));
  }

  const std::vector<Word>& subgroup(const std::string& name) const {
    if (!doc) throw Error("this command needs --input FILE with a subgroup");
    if (doc->subgroups.empty())
      throw Error("input document defines no subgroup");
    if (name.empty()) return doc->subgroups.front().second;
    if (const auto* gens = doc->find_subgroup(name)) return *gens;
    throw Error("no subgroup named '" + name + "' in the input document");
  }
};

void emit(const Options& opt, const std::string& text, const Json& json) {
  if (opt.format == "json")
    std::cout << json.dump(2) << "\n";
  else
    std::cout << text << "\n";
}

int bool_result(const Options& opt, bool value, const char* key) {
  emit(opt, value ? "true" : "false", Json{{key, value}});
  return value ? kExitTrue : kExitFalse;
}

// ---- word subcommands ----

int run_word(const std::string& sub, const std::vector<std::string>& args,
             const Options& opt) {
  Context ctx(opt);
  if (sub == "reduce") {
    Word w = ctx.word(args.at(0));
    emit(opt, w.str(), Json{{"word", w.str()}});
    return kExitTrue;
  }
  if (sub == "mul") {
    Word w = ctx.word(args.at(0)) * ctx.word(args.at(1));
    emit(opt, w.str(), Json{{"word", w.str()}});
    return kExitTrue;
  }
  if (sub == "inv") {
    Word w = ctx.word(args.at(0)).inverse();
    emit(opt, w.str(), Json{{"word", w.str()}});
    return kExitTrue;
  }
  if (sub == "root") {
    PrimitiveRoot pr = primitive_root(ctx.word(args.at(0)));
    emit(opt,
         "root " + pr.root.str() + "\nexponent " + std::to_string(pr.exponent),
         Json{{"root", pr.root.str()}, {"exponent", pr.exponent}});
    return kExitTrue;
  }
  // cyclic
  CyclicForm cf = cyclic_form(ctx.word(args.at(0)));
  emit(opt, "conjugator " + cf.conjugator.str() + "\ncore " + cf.core.str(),
       Json{{"conjugator", cf.conjugator.str()}, {"core", cf.core.str()}});
  return kExitTrue;
}

// ---- pw subcommands ----

int run_pw(const std::string& sub, const std::vector<std::string>& args,
           const Options& opt) {
  Context ctx(opt);
  if (sub == "norm") {
    PowerWord p = ctx.pw(args.at(0));
    emit(opt, p.str(), Json{{"power_word", p.str()}});
    return kExitTrue;
  }
  if (sub == "len") {
    BigInt len = pw_length(ctx.pw(args.at(0)));
    emit(opt, to_decimal(len), Json{{"length", to_decimal(len)}});
    return kExitTrue;
  }
  if (sub == "eq") {
    bool eq = pw_equal(ctx.pw(args.at(0)), ctx.pw(args.at(1)));
    return bool_result(opt, eq, "equal");
  }
  // expand
  try {
    Word w = ctx.pw(args.at(0)).expand(opt.expand_limit);
    emit(opt, w.str(), Json{{"word", w.str()}});
    return kExitTrue;
  } catch (const ExpandLimitError& e) {
    emit(opt, std::string("refused: ") + e.what(),
         Json{{"refused", true},
              {"length", to_decimal(e.length)},
              {"limit", e.limit}});
    return kExitFalse;
  }
}

// ---- stallings subcommands ----

int run_stallings(const std::string& sub, const std::vector<std::string>& args,
                  const Options& opt) {
  Context ctx(opt);
  CoreGraph graph =
      CoreGraph::build(ctx.desc, ctx.subgroup(opt.subgroup_name));
  if (sub == "build") {
    std::string dump = graph.dump();
    if (!dump.empty() && dump.back() == '\n') dump.pop_back();
    Json edges = Json::array();
    for (std::size_t v = 0; v < graph.vertex_count(); ++v)
      for (unsigned i = 0; i < graph.descriptor().rank(); ++i) {
        int t = graph.step(static_cast<int>(v), static_cast<int>(i) + 1);
        if (t != -1)
          edges.push_back(Json{{"source", v},
                               {"target", t},
                               {"letter", std::string(
                                              1, graph.descriptor().letter(i))}});
      }
    emit(opt, dump,
         Json{{"basepoint", 0},
              {"vertices", graph.vertex_count()},
              {"rank", graph.rank()},
              {"edges", edges}});
    return kExitTrue;
  }
  if (sub == "member") {
    const std::string& arg = args.at(0);
    // Accept either plain words or compressed power words.
    bool ok = arg.find('(') == std::string::npos
                  ? graph.contains(ctx.word(arg))
                  : graph.contains_pw(ctx.pw(arg));
    return bool_result(opt, ok, "member");
  }
  if (sub == "rank") {
    emit(opt, std::to_string(graph.rank()), Json{{"rank", graph.rank()}});
    return kExitTrue;
  }
  if (sub == "shortest") {
    std::optional<Word> w = graph.shortest_nontrivial();
    if (w)
      emit(opt, w->str(),
           Json{{"word", w->str()}, {"length", w->length()}});
    else
      emit(opt, "none", Json{{"word", nullptr}});
    return kExitTrue;
  }
  // equal: compares two named subgroups from the same document.
  CoreGraph other = CoreGraph::build(ctx.desc, ctx.subgroup(args.at(0)));
  return bool_result(opt, equal_subgroups(graph, other), "equal");
}

// ---- geom subcommands ----

int run_geom(const std::string& sub, const std::vector<std::string>& args,
             const Options& opt) {
  Context ctx(opt);
  if (sub == "growth") {
    GrowthData gd = growth_constant(ctx.word(args.at(0)));
    emit(opt,
         "C " + std::to_string(gd.C) + "\ncore_length " +
             std::to_string(gd.core_length) + "\nconjugator_length " +
             std::to_string(gd.conjugator_length),
         Json{{"C", gd.C},
              {"core_length", gd.core_length},
              {"conjugator_length", gd.conjugator_length}});
    return kExitTrue;
  }
  if (sub == "qc") {
    QcConstant qc = qc_constant(ctx.word(args.at(0)), opt.range);
    std::string text = "E_valid " + std::to_string(qc.E_valid);
    Json j{{"E_valid", qc.E_valid}};
    if (qc.E_min) {
      text += "\nE_min " + std::to_string(*qc.E_min);
      j["E_min"] = *qc.E_min;
    }
    emit(opt, text, j);
    return kExitTrue;
  }
  if (sub == "comm") {
    Word g = ctx.word(args.at(0));
    if (args.size() == 1) {
      Commensurator cm = commensurator(g);
      emit(opt, "root " + cm.root.str(), Json{{"root", cm.root.str()}});
      return kExitTrue;
    }
    return bool_result(opt, in_commensurator(g, ctx.word(args.at(1))),
                       "in_commensurator");
  }
  if (sub == "kbound") {
    KBound kb = k_bound(ctx.word(args.at(0)), ctx.word(args.at(1)));
    emit(opt,
         "E " + std::to_string(kb.E) + "\ndelta " + std::to_string(kb.delta) +
             "\nball_radius " + std::to_string(kb.ball_radius) +
             "\nball_count " + to_decimal(kb.ball_count) + "\nK " +
             to_decimal(kb.K),
         Json::parse(k_bound_json(kb)));
    return kExitTrue;
  }
  if (sub == "kemp") {
    if (!opt.range) throw Error("kemp requires --range");
    BigInt k = k_empirical(ctx.word(args.at(0)), ctx.word(args.at(1)),
                           *opt.range);
    emit(opt, to_decimal(k), Json{{"k_empirical", to_decimal(k)}});
    return kExitTrue;
  }
  // delzant
  DelzantSequence seq;
  seq.a = parse_decimal(opt.a);
  seq.delta = ctx.desc.delta();
  for (const auto& arg : args) seq.points.push_back(ctx.pw(arg));
  bool hyp = delzant_hypothesis(seq);
  bool conc = delzant_conclusion(seq);
  emit(opt,
       std::string("hypothesis ") + (hyp ? "true" : "false") +
           "\nconclusion " + (conc ? "true" : "false"),
       Json{{"hypothesis", hyp}, {"conclusion", conc}});
  return hyp ? kExitTrue : kExitFalse;
}

// ---- witness subcommands ----

WitnessRequest witness_request(const Context& ctx, const Options& opt) {
  WitnessRequest req;
  req.descriptor = ctx.desc;
  req.generators = ctx.subgroup(opt.subgroup_name);
  req.g = ctx.word(opt.element);
  req.exploration = opt.mode == "explore";
  if (!opt.n_override.empty()) req.n_override = parse_decimal(opt.n_override);
  if (!opt.mult_override.empty())
    req.multiplier_override = parse_decimal(opt.mult_override);
  req.q_max = opt.qmax;
  req.sample_count = opt.samples;
  req.seed = opt.seed;
  req.expand_limit = opt.expand_limit;
  return req;
}

int run_witness(const std::string& sub, const Options& opt) {
  Context ctx(opt);
  WitnessRequest req = witness_request(ctx, opt);

  if (sub == "build") {
    // Certificate only: constants and compressed generators, no sampling.
    CoreGraph subgroup = CoreGraph::build(req.descriptor, req.generators);
    InputClass cls = check_input(req, subgroup);
    if (cls != InputClass::ok) {
      emit(opt, "refused: " + to_string(cls),
           Json{{"classification", to_string(cls)}});
      return kExitFalse;
    }
    WitnessCertificate cert = compute_constants(
        req, normalize_generators(req.generators, req.g), subgroup);
    std::cout << certificate_json(cert) << "\n";
    return kExitTrue;
  }

  WitnessOutcome outcome = run_witness(req);
  if (sub == "verify") {
    // Everything except the final verdict.
    WitnessOutcome trimmed = outcome;
    trimmed.conclusion = Conclusion{};
    std::cout << witness_outcome_json(trimmed) << "\n";
    if (outcome.classification != InputClass::ok) return kExitFalse;
    bool all_ok = outcome.report && outcome.report->claim_failures == 0 &&
                  outcome.report->hypothesis_failures == 0 &&
                  outcome.report->conclusion_failures == 0 &&
                  outcome.report->gap_failures == 0 && outcome.regeneration_ok;
    return all_ok ? kExitTrue : kExitFalse;
  }
  // run
  std::cout << witness_outcome_json(outcome) << "\n";
  return outcome.conclusion.concluded ? kExitTrue : kExitFalse;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"constructive non-generator witnesses in free groups"};
  app.require_subcommand(1);
  Options opt;

  // Group-level flags shared by every subcommand.
  auto add_common = [&](CLI::App* cmd) {
    cmd->add_option("--input", opt.input_file, "input .grp document");
    cmd->add_option("--format", opt.format, "output format: text|json")
        ->check(CLI::IsMember({"text", "json"}));
    cmd->add_option("--rank", opt.rank, "group rank when no --input is given");
    cmd->add_option("--letters", opt.letters, "generator letter names");
    cmd->add_option("--delta", opt.delta, "hyperbolicity constant");
    cmd->add_option("--subgroup", opt.subgroup_name,
                    "subgroup name inside the input document");
    cmd->add_option("--expand-limit", opt.expand_limit,
                    "letter budget for expansions");
  };

  struct Pending {
    std::string module;
    std::string sub;
    std::vector<std::string>* args;
  };
  std::vector<Pending> pending;
  std::vector<std::vector<std::string>> arg_store;
  arg_store.reserve(32);

  auto add_leaf = [&](CLI::App* parent, const std::string& module,
                      const std::string& name, const char* desc, int min_args,
                      int max_args) {
    CLI::App* leaf = parent->add_subcommand(name, desc);
    add_common(leaf);
    arg_store.emplace_back();
    auto* slot = &arg_store.back();
    if (max_args != 0) {
      auto* o = leaf->add_option("args", *slot, "operands");
      if (min_args > 0) o->expected(min_args, max_args);
    }
    pending.push_back({module, name, slot});
    return leaf;
  };

  CLI::App* word = app.add_subcommand("word", "reduced word arithmetic");
  add_leaf(word, "word", "reduce", "freely reduce a word", 1, 1);
  add_leaf(word, "word", "mul", "multiply two words", 2, 2);
  add_leaf(word, "word", "inv", "invert a word", 1, 1);
  add_leaf(word, "word", "root", "primitive root and exponent", 1, 1);
  add_leaf(word, "word", "cyclic", "cyclic form u c u^-1", 1, 1);

  CLI::App* pw = app.add_subcommand("pw", "compressed power word arithmetic");
  add_leaf(pw, "pw", "norm", "normalize a power word", 1, 1);
  add_leaf(pw, "pw", "len", "exact reduced length", 1, 1);
  add_leaf(pw, "pw", "eq", "compare two power words", 2, 2);
  add_leaf(pw, "pw", "expand", "expand within --expand-limit", 1, 1);

  CLI::App* st = app.add_subcommand("stallings", "subgroup core graphs");
  add_leaf(st, "stallings", "build", "fold and print the core graph", 0, 0);
  add_leaf(st, "stallings", "member", "membership in the subgroup", 1, 1);
  add_leaf(st, "stallings", "rank", "subgroup rank", 0, 0);
  add_leaf(st, "stallings", "shortest", "shortest nontrivial element", 0, 0);
  add_leaf(st, "stallings", "equal", "compare with another subgroup block", 1,
           1);

  CLI::App* geom = app.add_subcommand("geom", "geometric constants");
  add_leaf(geom, "geom", "growth", "linear growth constant of powers", 1, 1);
  CLI::App* qc = add_leaf(geom, "geom", "qc", "quasiconvexity constants", 1, 1);
  qc->add_option("--range", [&opt](const std::vector<std::string>& vals) {
    opt.range = static_cast<unsigned>(std::stoul(vals.at(0)));
    return true;
  }, "exponent range for the empirical search");
  add_leaf(geom, "geom", "comm", "virtual centralizer root / membership", 1, 2);
  add_leaf(geom, "geom", "kbound", "worst-case cancellation bound K(g,c)", 2,
           2);
  CLI::App* kemp =
      add_leaf(geom, "geom", "kemp", "empirical cancellation bound", 2, 2);
  kemp->add_option("--range", [&opt](const std::vector<std::string>& vals) {
    opt.range = static_cast<unsigned>(std::stoul(vals.at(0)));
    return true;
  }, "exponent range |n|,|m| <= range");
  CLI::App* dz = add_leaf(geom, "geom", "delzant",
                          "local gap and global divergence checks", 3, -1);
  dz->add_option("--a", opt.a, "gap parameter a (positive integer)");

  CLI::App* wit = app.add_subcommand("witness", "non-generator certificates");
  for (const char* name : {"build", "verify", "run"}) {
    CLI::App* leaf = wit->add_subcommand(name, "witness pipeline");
    add_common(leaf);
    leaf->add_option("--seed", opt.seed, "sampling seed");
    leaf->add_option("--samples", opt.samples, "number of sampled products");
    leaf->add_option("--qmax", opt.qmax, "maximum syllable count");
    leaf->add_option("--mode", opt.mode, "paper|explore")
        ->check(CLI::IsMember({"paper", "explore"}));
    leaf->add_option("--n-override", opt.n_override,
                     "exploration override for the scale N");
    leaf->add_option("--mult-override", opt.mult_override,
                     "exploration override for the multiplier");
    leaf->add_option("--element", opt.element,
                     "the element g (binding name or literal, default 'g')");
    arg_store.emplace_back();
    pending.push_back({"witness", name, &arg_store.back()});
  }

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : kExitInput;
  }

  try {
    for (auto& p : pending) {
      CLI::App* module = app.get_subcommand(p.module);
      if (!module->parsed()) continue;
      CLI::App* leaf = module->get_subcommand(p.sub);
      if (!leaf->parsed()) continue;
      if (p.module == "word") return run_word(p.sub, *p.args, opt);
      if (p.module == "pw") return run_pw(p.sub, *p.args, opt);
      if (p.module == "stallings") return run_stallings(p.sub, *p.args, opt);
      if (p.module == "geom") return run_geom(p.sub, *p.args, opt);
      return run_witness(p.sub, opt);
    }
    std::cerr << "no subcommand given\n";
    return kExitInput;
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitInput;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitInput;
  }
}
