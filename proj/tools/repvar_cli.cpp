// Command-line front end: every library capability as a subcommand with
// deterministic, golden-file-stable JSON output.

#include <CLI11.hpp>
#include <cstdlib>
#include <cstdint>
#include <iostream>
#include <json.hpp>
#include <string>
#include <vector>

#include "repvar/autf.hpp"
#include "repvar/charvar.hpp"
#include "repvar/faithfulness.hpp"
#include "repvar/freegroup.hpp"
#include "repvar/groups.hpp"
#include "repvar/json_io.hpp"
#include "repvar/variety.hpp"
#include "repvar/weyl.hpp"

namespace {

using nlohmann::json;
using namespace repvar;

int g_exit_code = 0;

long long enum_bound() {
  if (const char* env = std::getenv("REPVAR_MAX_ENUM")) {
    char* end = nullptr;
    const long long v = std::strtoll(env, &end, 10);
    if (end && *end == '\0' && v > 0) return v;
    throw error("REPVAR_MAX_ENUM must be a positive integer");
  }
  return 1'000'000;
}

void emit(const json& j, const std::string& mode, const std::string& text) {
  if (mode == "text")
    std::cout << text;
  else
    std::cout << j.dump(2) << "\n";
}

/// Split on ';' outside brackets: point literals and automorphism specs
/// both contain bracketed matrix literals with inner semicolons.
std::vector<std::string> split_top_level(const std::string& text) {
  std::vector<std::string> parts;
  std::string cur;
  int depth = 0;
  for (char c : text) {
    if (c == '[') ++depth;
    if (c == ']') --depth;
    if (c == ';' && depth == 0) {
      parts.push_back(cur);
      cur.clear();
    } else {
      cur += c;
    }
  }
  parts.push_back(cur);
  return parts;
}

template <class K>
Point<K> parse_point_literal(const std::string& text, const GroupSpec& spec) {
  std::vector<GroupElement<K>> coords;
  for (const std::string& part : split_top_level(text))
    coords.push_back(parse_matrix_literal<K>(part, spec));
  return make_point(spec, std::move(coords));
}

int infer_word_rank(const std::string& text) {
  const Word probe = parse_word(text, 64);
  int rank = 0;
  for (const Letter& l : probe.letters()) rank = std::max(rank, l.gen);
  if (rank == 0) throw error("cannot infer rank from an empty word; pass --n");
  return rank;
}

template <class K>
AutSubgroupR<K> build_quotient(const std::vector<std::string>& gens, const GroupSpec& spec,
                               long long bound) {
  if (gens.empty()) return trivial_subgroup<K>(spec);
  std::vector<GroupAutomorphism<K>> parsed;
  for (const std::string& g : gens) parsed.push_back(parse_group_auto_spec<K>(g, spec));
  return close_subgroup<K>(spec, parsed, static_cast<std::size_t>(bound));
}

// -- eval ---------------------------------------------------------------------

struct EvalOpts {
  std::string group, word, point, output = "json";
};

template <class K>
void run_eval(const EvalOpts& o, const GroupSpec& spec) {
  const Point<K> x = parse_point_literal<K>(o.point, spec);
  const Word w = parse_word(o.word, x.arity());
  const GroupElement<K> g = evaluate_word(w, x);
  json j{{"group", spec.to_string()},
         {"word", format_word(w)},
         {"n", x.arity()},
         {"matrix", element_to_json(g)}};
  emit(j, o.output, format_matrix_literal(g) + "\n");
}

void setup_eval(CLI::App& app) {
  auto opts = std::make_shared<EvalOpts>();
  CLI::App* cmd = app.add_subcommand("eval", "Evaluate a word map at a point of G^n");
  cmd->add_option("--group", opts->group, "group descriptor, e.g. sl2:p=5")->required();
  cmd->add_option("--word", opts->word, "word in x<k> or letter sugar form")->required();
  cmd->add_option("--point", opts->point, "';'-separated matrix literals")->required();
  cmd->add_option("--output", opts->output)->check(CLI::IsMember({"json", "text"}));
  cmd->callback([opts] {
    const GroupSpec spec = parse_group_spec(opts->group);
    if (spec.finite_field())
      run_eval<Fp>(*opts, spec);
    else
      run_eval<Rat>(*opts, spec);
  });
}

// -- act ----------------------------------------------------------------------

struct ActOpts {
  std::string group, autospec, point, output = "json";
  std::vector<std::string> quotient;
  bool raw = false;
};

template <class K>
void run_act(const ActOpts& o, const GroupSpec& spec) {
  const Point<K> x = parse_point_literal<K>(o.point, spec);
  const AutElement sigma = parse_autospec(o.autospec, x.arity());
  json j{{"group", spec.to_string()}, {"auto", o.autospec}, {"raw", o.raw}};
  if (o.quotient.empty()) {
    const Point<K> y =
        o.raw ? sigma_X(sigma.forward(), x)
              : act(sigma, GroupAutomorphism<K>::identity(spec), x);
    j["point"] = point_to_json(y);
    std::string text;
    for (const auto& g : y.coords) text += format_matrix_literal(g) + "\n";
    emit(j, o.output, text);
    return;
  }
  const AutSubgroupR<K> r = build_quotient<K>(o.quotient, spec, enum_bound());
  const Point<K> y = o.raw ? sigma_X(sigma.forward(), x) : sigma_X(sigma.inverse(), x);
  const OrbitRep<K> image = orbit(y, r);
  j["subgroup_order"] = r.size();
  j["orbit"] = orbit_to_json(image);
  std::string text = "orbit_size " + std::to_string(image.orbit_size) + "\n";
  for (const auto& g : image.canonical.coords) text += format_matrix_literal(g) + "\n";
  emit(j, o.output, text);
}

void setup_act(CLI::App& app) {
  auto opts = std::make_shared<ActOpts>();
  CLI::App* cmd = app.add_subcommand(
      "act", "Apply an Aut(F_n) element to a point, optionally on the R-orbit quotient");
  cmd->add_option("--group", opts->group)->required();
  cmd->add_option("--auto", opts->autospec, "automorphism spec, e.g. nielsen:s12")->required();
  cmd->add_option("--point", opts->point)->required();
  cmd->add_option("--quotient", opts->quotient,
                  "generator of R (repeatable), e.g. inner:[0,1;-1,0]");
  cmd->add_flag("--raw", opts->raw, "apply the raw anti-action sigma_X instead of the left action");
  cmd->add_option("--output", opts->output)->check(CLI::IsMember({"json", "text"}));
  cmd->callback([opts] {
    const GroupSpec spec = parse_group_spec(opts->group);
    if (spec.finite_field())
      run_act<Fp>(*opts, spec);
    else
      run_act<Rat>(*opts, spec);
  });
}

// -- kernel-test ----------------------------------------------------------------

struct KernelOpts {
  std::string group, mode = "sample", output = "json";
  std::vector<std::string> autos;
  std::vector<std::string> quotient;
  bool all_nielsen = false;
  int n = 2;
  long long trials = 10'000;
  std::uint64_t seed = 1;
  int jobs = 1;
};

void run_kernel_test(const KernelOpts& o) {
  const GroupDomain dom = parse_group_domain(o.group);
  std::vector<std::pair<std::string, AutElement>> named;
  if (o.all_nielsen) {
    const auto gens = nielsen_generators(o.n);
    const auto names = nielsen_generator_names(o.n);
    for (std::size_t i = 0; i < gens.size(); ++i) named.emplace_back(names[i], gens[i]);
  }
  for (const std::string& spec_text : o.autos)
    named.emplace_back(spec_text, parse_autospec(spec_text, o.n));
  const AutSubgroupR<Fp> r = build_quotient<Fp>(o.quotient, dom.spec, enum_bound());
  const FaithfulnessReport report = faithfulness_report(
      dom, r, o.n, named, o.trials, o.seed, o.mode == "exhaustive", enum_bound());
  json j = report_to_json(report);
  j["mode"] = o.mode;
  j["trials"] = o.trials;
  j["seed"] = o.seed;
  j["jobs"] = o.jobs;
  std::string text;
  for (const auto& e : report.entries)
    text += e.name + ": " + kernel_verdict_name(e.verdict.kind) + "\n";
  emit(j, o.output, text);
  if (!report.all_certified()) g_exit_code = 2;
}

void setup_kernel_test(CLI::App& app) {
  auto opts = std::make_shared<KernelOpts>();
  CLI::App* cmd = app.add_subcommand(
      "kernel-test", "Search kernel-membership certificates for automorphisms acting on X//R");
  cmd->add_option("--group", opts->group, "group or stand-in domain, e.g. sl2:p=5, center:p=5")
      ->required();
  cmd->add_option("--n", opts->n)->check(CLI::PositiveNumber);
  cmd->add_option("--auto", opts->autos, "automorphism spec (repeatable)");
  cmd->add_flag("--all-nielsen", opts->all_nielsen, "test every Nielsen generator");
  cmd->add_option("--quotient", opts->quotient, "generator of R (repeatable)");
  cmd->add_option("--mode", opts->mode)->check(CLI::IsMember({"sample", "exhaustive"}));
  cmd->add_option("--trials", opts->trials)->check(CLI::PositiveNumber);
  cmd->add_option("--seed", opts->seed);
  cmd->add_option("--jobs", opts->jobs)->check(CLI::PositiveNumber);
  cmd->add_option("--output", opts->output)->check(CLI::IsMember({"json", "text"}));
  cmd->callback([opts] { run_kernel_test(*opts); });
}

// -- identity-test ---------------------------------------------------------------

struct IdentityOpts {
  std::string group, word, output = "json";
  int derived = 0;
  int n = 0;
  long long trials = 10'000;
  std::uint64_t seed = 1;
  int jobs = 1;
};

void run_identity_test(const IdentityOpts& o) {
  const GroupDomain dom = parse_group_domain(o.group);
  Word w(1);
  if (o.derived > 0) {
    w = derived_identity_word(o.derived);
  } else {
    const int rank = o.n > 0 ? o.n : infer_word_rank(o.word);
    w = parse_word(o.word, rank);
  }
  const IdentityVerdict<Fp> verdict = word_identity_test(w, dom, o.trials, o.seed);
  json j{{"group", dom.to_string()},
         {"word", format_word(w)},
         {"n", w.rank()},
         {"verdict", verdict.not_identity() ? "not_identity" : "probably_identity"},
         {"trials", verdict.trials},
         {"seed", o.seed},
         {"jobs", o.jobs}};
  if (verdict.witness) j["witness"] = point_to_json(*verdict.witness);
  emit(j, o.output,
       std::string(verdict.not_identity() ? "not_identity" : "probably_identity") + "\n");
  if (!verdict.not_identity()) g_exit_code = 2;
}

void setup_identity_test(CLI::App& app) {
  auto opts = std::make_shared<IdentityOpts>();
  CLI::App* cmd = app.add_subcommand(
      "identity-test", "Randomized search for a point refuting a candidate group identity");
  cmd->add_option("--group", opts->group)->required();
  CLI::Option* word = cmd->add_option("--word", opts->word);
  cmd->add_option("--derived", opts->derived, "use the derived-series word delta_k")
      ->check(CLI::PositiveNumber)
      ->excludes(word);
  cmd->add_option("--n", opts->n, "rank override (default: inferred)");
  cmd->add_option("--trials", opts->trials)->check(CLI::PositiveNumber);
  cmd->add_option("--seed", opts->seed);
  cmd->add_option("--jobs", opts->jobs)->check(CLI::PositiveNumber);
  cmd->add_option("--output", opts->output)->check(CLI::IsMember({"json", "text"}));
  cmd->callback([opts] {
    if (opts->derived == 0 && opts->word.empty())
      throw error("identity-test needs --word or --derived");
    run_identity_test(*opts);
  });
}

// -- trace / induced-trace-action -------------------------------------------------

void setup_trace(CLI::App& app) {
  auto opts = std::make_shared<std::tuple<int, std::string, std::string>>(2, "", "json");
  CLI::App* cmd =
      app.add_subcommand("trace", "Trace polynomial of a word in Horowitz coordinates");
  cmd->add_option("--n", std::get<0>(*opts))->check(CLI::Range(1, 3));
  cmd->add_option("--word", std::get<1>(*opts))->required();
  cmd->add_option("--output", std::get<2>(*opts))->check(CLI::IsMember({"json", "text"}));
  cmd->callback([opts] {
    const auto& [n, word_text, output] = *opts;
    const Word w = parse_word(word_text, n);
    const TracePolynomial p = trace_polynomial(w);
    json j{{"n", n}, {"word", format_word(w)}, {"polynomial", p.to_string()}};
    emit(j, output, p.to_string() + "\n");
  });
}

void setup_induced_trace_action(CLI::App& app) {
  auto opts = std::make_shared<std::tuple<int, std::string, std::string>>(2, "", "json");
  CLI::App* cmd = app.add_subcommand(
      "induced-trace-action", "Polynomial substitution induced on trace coordinates");
  cmd->add_option("--n", std::get<0>(*opts))->check(CLI::Range(1, 3));
  cmd->add_option("--auto", std::get<1>(*opts))->required();
  cmd->add_option("--output", std::get<2>(*opts))->check(CLI::IsMember({"json", "text"}));
  cmd->callback([opts] {
    const auto& [n, spec_text, output] = *opts;
    const AutElement sigma = parse_autospec(spec_text, n);
    const auto action = induced_action(sigma, n);
    json vars = json::object();
    std::string text;
    for (const auto& [v, poly] : action) {
      vars[trace_var_name(v)] = poly.to_string();
      text += std::string(trace_var_name(v)) + " -> " + poly.to_string() + "\n";
    }
    json j{{"n", n}, {"auto", spec_text}, {"action", std::move(vars)}};
    emit(j, output, text);
  });
}

// -- weyl-classify -----------------------------------------------------------------

void setup_weyl_classify(CLI::App& app) {
  auto opts = std::make_shared<std::tuple<std::string, int, std::string>>("", 1, "json");
  CLI::App* cmd = app.add_subcommand(
      "weyl-classify", "Faithfulness of the rank-1 action on the conjugation quotient");
  cmd->add_option("--factors", std::get<0>(*opts), "comma-separated simple types, e.g. A2,D5")
      ->required();
  cmd->add_option("--n", std::get<1>(*opts))->check(CLI::PositiveNumber);
  cmd->add_option("--output", std::get<2>(*opts))->check(CLI::IsMember({"json", "text"}));
  cmd->callback([opts] {
    const auto& [factors_text, n, output] = *opts;
    std::vector<std::pair<SimpleType, int>> factors;
    json rows = json::array();
    std::size_t pos = 0;
    while (pos <= factors_text.size()) {
      std::size_t comma = factors_text.find(',', pos);
      const std::size_t end = comma == std::string::npos ? factors_text.size() : comma;
      const std::string token = factors_text.substr(pos, end - pos);
      const auto [type, rank] = parse_simple_type(token);
      const RootSystem rs = make_root_system(type, rank);
      factors.emplace_back(type, rank);
      rows.push_back(json{{"type", rs.name()},
                          {"minus_one_in_weyl", minus_one_in_weyl(rs)},
                          {"positive_roots", positive_roots_in_root_coords(rs).size()}});
      if (comma == std::string::npos) break;
      pos = comma + 1;
    }
    json j{{"n", n}, {"factors", std::move(rows)}};
    std::string text;
    if (n == 1) {
      const bool faithful = classify_faithful_n1(factors);
      j["faithful_n1"] = faithful;
      text = std::string("faithful_n1: ") + (faithful ? "true" : "false") + "\n";
    } else {
      // Int(F_n) acts trivially on X//Int(G) for n >= 2, so never faithful.
      j["faithful"] = false;
      j["note"] = "nonfaithful for n >= 2; see kernel-test for the finite-R setting";
      text = "faithful: false\n";
    }
    emit(j, output, text);
  });
}

// -- braid-check --------------------------------------------------------------------

void setup_braid_check(CLI::App& app) {
  auto opts = std::make_shared<std::tuple<int, std::string>>(3, "json");
  CLI::App* cmd =
      app.add_subcommand("braid-check", "Verify the Artin relations inside Aut(F_n)");
  cmd->add_option("--n", std::get<0>(*opts))->check(CLI::Range(2, 16));
  cmd->add_option("--output", std::get<1>(*opts))->check(CLI::IsMember({"json", "text"}));
  cmd->callback([opts] {
    const auto& [n, output] = *opts;
    json relations = json::array();
    bool all = true;
    for (int i = 1; i + 1 < n; ++i) {
      const AutElement bi = braid_generator(i, n);
      const AutElement bj = braid_generator(i + 1, n);
      const bool holds = compose(compose(bi, bj), bi) == compose(compose(bj, bi), bj);
      all = all && holds;
      relations.push_back(json{
          {"relation", "b" + std::to_string(i) + " b" + std::to_string(i + 1) + " b" +
                           std::to_string(i) + " = b" + std::to_string(i + 1) + " b" +
                           std::to_string(i) + " b" + std::to_string(i + 1)},
          {"holds", holds}});
    }
    for (int i = 1; i < n; ++i)
      for (int j = i + 2; j < n; ++j) {
        const AutElement bi = braid_generator(i, n);
        const AutElement bj = braid_generator(j, n);
        const bool holds = compose(bi, bj) == compose(bj, bi);
        all = all && holds;
        relations.push_back(json{{"relation", "b" + std::to_string(i) + " b" + std::to_string(j) +
                                                  " = b" + std::to_string(j) + " b" +
                                                  std::to_string(i)},
                                 {"holds", holds}});
      }
    // each Artin generator acts nontrivially on the abelianization, so none
    // of them is inner
    bool non_inner = true;
    for (int i = 1; i < n; ++i) {
      const auto ab = abelianization(braid_generator(i, n).forward());
      bool is_id = true;
      for (int r = 0; r < n; ++r)
        for (int c = 0; c < n; ++c) is_id = is_id && ab[r][c] == (r == c ? 1 : 0);
      non_inner = non_inner && !is_id;
    }
    json j{{"n", n},
           {"relations", std::move(relations)},
           {"generators_non_inner", non_inner},
           {"all_hold", all}};
    emit(j, output,
         std::string("braid relations for n=") + std::to_string(n) + ": " +
             (all ? "all hold" : "FAILED") + "\n");
    if (!all) g_exit_code = 2;
  });
}

// -- quadric ------------------------------------------------------------------------

struct QuadricOpts {
  std::string group, point, tuple, output = "json";
};

template <class K>
void run_quadric(const QuadricOpts& o, const GroupSpec& spec) {
  if (!o.tuple.empty()) {
    std::vector<std::string> parts;
    std::string cur;
    for (char c : o.tuple) {
      if (c == ',') {
        parts.push_back(cur);
        cur.clear();
      } else if (!std::isspace(static_cast<unsigned char>(c))) {
        cur += c;
      }
    }
    parts.push_back(cur);
    if (parts.size() != 4) throw error("--tuple needs four comma-separated entries");
    const GroupElement<K> probe = identity_element<K>(spec);
    std::array<K, 4> x{probe.mat.at(0, 0), probe.mat.at(0, 0), probe.mat.at(0, 0),
                       probe.mat.at(0, 0)};
    for (std::size_t i = 0; i < 4; ++i)
      x[i] = detail::parse_entry<K>(spec, parts[i], 0);
    const GroupElement<K> g = quadric_to_sl2(spec, x);
    emit(json{{"group", spec.to_string()}, {"matrix", element_to_json(g)}}, o.output,
         format_matrix_literal(g) + "\n");
    return;
  }
  const GroupElement<K> g = parse_matrix_literal<K>(o.point, spec);
  const auto x = sl2_to_quadric(g);
  const K check = x[0] * x[1] + x[2] * x[3];
  json tuple = json::array();
  std::string text = "(";
  for (std::size_t i = 0; i < 4; ++i) {
    tuple.push_back(scalar_to_json(x[i]));
    text += (i ? "," : "") + scalar_to_string(x[i]);
  }
  const bool on_quadric = scalar_compare(check, to_scalar<K>(spec, 1)) == 0;
  emit(json{{"group", spec.to_string()}, {"tuple", std::move(tuple)}, {"on_quadric", on_quadric}},
       o.output, text + ")\n");
}

void setup_quadric(CLI::App& app) {
  auto opts = std::make_shared<QuadricOpts>();
  CLI::App* cmd = app.add_subcommand(
      "quadric", "Identify SL2 with the affine quadric x1*x2 + x3*x4 = 1");
  cmd->add_option("--group", opts->group)->required();
  CLI::Option* point = cmd->add_option("--point", opts->point, "matrix literal to map forward");
  cmd->add_option("--tuple", opts->tuple, "four entries to map back to a matrix")
      ->excludes(point);
  cmd->add_option("--output", opts->output)->check(CLI::IsMember({"json", "text"}));
  cmd->callback([opts] {
    if (opts->point.empty() && opts->tuple.empty())
      throw error("quadric needs --point or --tuple");
    const GroupSpec spec = parse_group_spec(opts->group);
    if (spec.kind != GroupKind::SL2) throw error("quadric model needs an sl2 descriptor");
    if (spec.finite_field())
      run_quadric<Fp>(*opts, spec);
    else
      run_quadric<Rat>(*opts, spec);
  });
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"exact Aut(F_n) actions on representation varieties"};
  app.require_subcommand(1);
  setup_eval(app);
  setup_act(app);
  setup_kernel_test(app);
  setup_identity_test(app);
  setup_trace(app);
  setup_induced_trace_action(app);
  setup_weyl_classify(app);
  setup_braid_check(app);
  setup_quadric(app);
  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 1;
  } catch (const repvar::error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  return g_exit_code;
}
