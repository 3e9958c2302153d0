// Copyright 2026 The Monoidlab Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.
#include "cli.hpp"

#include <CLI11.hpp>

#include <algorithm>
#include <filesystem>
#include <map>
#include <sstream>
#include <string>
#include <vector>

#include "monoidlab/classify.hpp"
#include "monoidlab/corpus.hpp"
#include "monoidlab/dynamics.hpp"
#include "monoidlab/families.hpp"
#include "monoidlab/green.hpp"
#include "monoidlab/isomorphism.hpp"
#include "monoidlab/mon_format.hpp"
#include "monoidlab/oracle.hpp"
#include "monoidlab/syntactic.hpp"
#include "monoidlab/text.hpp"
#include "monoidlab/words.hpp"
#include "monoidlab/yspace.hpp"

namespace monoidlab::cli {

namespace {

constexpr int kOk = 0;
constexpr int kViolation = 1;
constexpr int kUsage = 2;

std::string names_of(const FiniteMonoid& m, const std::vector<Element>& elements) {
  std::string out;
  for (std::size_t i = 0; i < elements.size(); ++i) {
    if (i > 0) out += ',';
    out += m.name(elements[i]);
  }
  return out;
}

std::string set_of(const FiniteMonoid& m, const ElementSet& s) {
  return "{" + names_of(m, members(s)) + "}";
}

std::string partition_of(const FiniteMonoid& m, const Partition& p) {
  std::string out;
  for (const auto& cls : p.classes) {
    if (!out.empty()) out += ' ';
    out += "{" + names_of(m, cls) + "}";
  }
  return out;
}

std::string family_of(const FiniteMonoid& m, const IdealFamily& f) {
  std::string out;
  for (const auto& s : f.members) {
    if (!out.empty()) out += ' ';
    out += set_of(m, s);
  }
  return out;
}

const char* boolean(bool b) { return b ? "true" : "false"; }

// --- classify --------------------------------------------------------------

bool expectation_met(const ClassificationReport& r, const std::string& e, bool& known) {
  known = true;
  if (e == "ramsey") return r.ramsey;
  if (e == "not-ramsey") return !r.ramsey;
  if (e == "aperiodic") return r.aperiodic;
  if (e == "not-aperiodic") return !r.aperiodic;
  if (e == "x-linear") return r.x_linear;
  if (e == "not-x-linear") return !r.x_linear;
  if (e == "xr-linear") return r.xr_linear;
  if (e == "not-xr-linear") return !r.xr_linear;
  if (e == "almost-r-trivial") return r.almost_r_trivial;
  if (e == "not-almost-r-trivial") return !r.almost_r_trivial;
  if (e == "y-controllable") return r.y_controllable.verdict == YVerdict::Yes;
  if (e == "not-y-controllable") return r.y_controllable.verdict == YVerdict::No;
  if (e == "y-unknown") return r.y_controllable.verdict == YVerdict::Unknown;
  known = false;
  return false;
}

int do_classify(const std::string& path, const std::vector<std::string>& expectations,
                std::ostream& out, std::ostream& err) {
  const auto m = read_monoid_file(path);
  const auto report = classify(m);
  out << format_report(m, report);
  int code = kOk;
  for (const auto& e : expectations) {
    bool known = false;
    const bool met = expectation_met(report, e, known);
    if (!known) {
      err << "error: unknown expectation '" << e << "'\n";
      return kUsage;
    }
    out << "expect." << e << '=' << (met ? "met" : "mismatch") << '\n';
    if (!met) code = kViolation;
  }
  return code;
}

// --- green -----------------------------------------------------------------

int do_green(const std::string& path, std::ostream& out) {
  const auto m = read_monoid_file(path);
  const auto g = green_classes(m);
  out << "size=" << m.size() << '\n';
  for (auto rel : {GreenRelation::R, GreenRelation::L, GreenRelation::J, GreenRelation::H,
                   GreenRelation::D}) {
    std::string key(to_string(rel));
    std::transform(key.begin(), key.end(), key.begin(), [](unsigned char c) { return std::tolower(c); });
    out << key << "_classes=" << partition_of(m, g.classes(rel)) << '\n';
  }
  const std::pair<const char*, const std::vector<ElementSet>*> orders[] = {
      {"leq_r", &g.leq_r}, {"leq_l", &g.leq_l}, {"leq_j", &g.leq_j}, {"leq_h", &g.leq_h}};
  for (const auto& [key, rows] : orders) {
    for (Element a : m.elements()) out << key << '.' << m.name(a) << '=' << set_of(m, (*rows)[a]) << '\n';
  }
  const auto x = x_family(g);
  const auto xr = x_r_family(g);
  out << "x_family=" << family_of(m, x) << '\n';
  out << "x_linear=" << boolean(x.linear) << '\n';
  out << "xr_family=" << family_of(m, xr) << '\n';
  out << "xr_linear=" << boolean(xr.linear) << '\n';
  return kOk;
}

// --- yspace ----------------------------------------------------------------

int do_yspace(const std::string& path, bool confluence, const std::string& wedge,
              const std::string& y_spec, std::ostream& out, std::ostream& err) {
  const auto m = read_monoid_file(path);
  const YSpace space(m);
  const auto chains = space.elements();
  std::size_t pairs = 0;
  std::size_t with_top = 0;
  for (const auto& y : chains) {
    if (y.back() + 1 == space.ideals().size()) ++with_top;
    for (const auto& x : chains) pairs += space.leq(x, y) ? 1 : 0;
  }
  out << "ideals=" << space.ideals().size() << '\n';
  out << "y_size=" << chains.size() << '\n';
  out << "leq_pairs=" << pairs << '\n';
  out << "containing_m=" << with_top << '\n';
  int code = kOk;
  if (confluence) {
    const auto result = space.check_confluence();
    out << "confluent=" << boolean(result.confluent) << '\n';
    out << "windows=" << result.windows_checked << '\n';
    if (!result.confluent) {
      out << "unjoinable=" << space.format(result.window) << " -> " << space.format(result.left)
          << " | " << space.format(result.right) << '\n';
      code = kViolation;
    }
  }
  if (!wedge.empty()) {
    if (y_spec != "max") {
      err << "error: --y accepts only 'max'\n";
      return kUsage;
    }
    std::vector<Element> ms;
    for (const auto& token : text::split(wedge, ',')) ms.push_back(m.element(token));
    const auto y = space.top();
    out << "y=" << space.format(y) << '\n';
    out << "wedge=" << space.format(space.wedge(ms, y)) << '\n';
  }
  return code;
}

// --- dynamics --------------------------------------------------------------

std::unique_ptr<ActionSystem> load_system(const FiniteMonoid& m, const std::string& space_path,
                                          const std::string& action) {
  if (action == "rightzero") return std::make_unique<RightZeroSelfAction>(m);
  if (action.rfind("words:", 0) == 0) {
    return std::make_unique<TruncatedWordAction>(m, std::stoul(action.substr(6)));
  }
  if (space_path.empty()) {
    throw Error(ErrorKind::BadParams, "an action file needs the space .mon file");
  }
  auto space = read_semigroup_file(space_path);
  auto file = parse_act(read_text_file(action), m, space);
  return std::make_unique<TableActionSystem>(m, std::move(space), std::move(file.table));
}

int do_dynamics(const std::string& monoid_path, const std::string& space_path,
                const std::string& action, std::ostream& out) {
  const auto m = read_monoid_file(monoid_path);
  const auto system = load_system(m, space_path, action);
  const SpaceView space(*system);
  const auto idems = idempotents(space);
  const auto kern = kernel(space);
  out << "space_size=" << system->point_count() << '\n';
  out << "idempotents=" << idems.size() << '\n';
  if (idems.size() <= 64) {
    std::string listed;
    for (Element e : idems) listed += (listed.empty() ? "" : " ") + system->point_name(e);
    out << "idempotent_list=" << listed << '\n';
  }
  out << "kernel_size=" << kern.count() << '\n';
  int code = kOk;
  try {
    const auto controlled = find_controlled_idempotent(*system);
    out << "u=" << system->point_name(controlled.u) << '\n';
    out << "anchors=" << names_of(m, controlled.anchors) << '\n';
    out << "postcondition=ok\n";
    const auto witness = build_good_witness(*system, controlled.u);
    out << "good_witness=ok chains=" << witness.chains.size() << '\n';
  } catch (const Error& e) {
    if (e.kind() == ErrorKind::PreconditionViolated) throw;
    out << "failure=" << e.what() << '\n';
    code = kViolation;
  }
  const bool corollary = verify_corollary_35(*system);
  out << "class_images_agree=" << boolean(corollary) << '\n';
  if (!corollary) code = kViolation;
  return code;
}

// --- adversarial / search --------------------------------------------------

int do_adversarial(const std::string& path, const std::string& element, std::size_t max_length,
                   std::ostream& out) {
  const auto m = read_monoid_file(path);
  const Element a = m.element(element);
  const auto colors = adversarial_colors(m, a);
  const auto coloring = Coloring::first_in(colors, max_length);
  out << "colors=" << set_of(m, colors) << '\n';
  const auto failure = adversarial_failure(m, a, max_length, coloring);
  out << "maxlen=" << max_length << '\n';
  out << "verified=" << boolean(!failure) << '\n';
  if (failure) {
    out << "y0=" << format_word(m, failure->y0) << '\n' << "y1=" << format_word(m, failure->y1) << '\n';
    return kViolation;
  }
  return kOk;
}

int do_search(const std::string& path, const std::string& coloring_spec, std::size_t max_length,
              const std::string& expect, std::ostream& out, std::ostream& err) {
  if (expect != "found" && expect != "absent") {
    err << "error: --expect takes 'found' or 'absent'\n";
    return kUsage;
  }
  const auto m = read_monoid_file(path);
  const auto coloring = parse_coloring(m, coloring_spec, max_length);
  const auto found = search_mono_pair(m, coloring, max_length);
  out << "maxlen=" << max_length << '\n';
  if (found) {
    out << "found=true\n";
    out << "y0=" << format_word(m, found->y0) << '\n' << "y1=" << format_word(m, found->y1) << '\n';
    out << "color=" << coloring(concat(found->y0, found->y1)) << '\n';
  } else {
    out << "found=false\n";
    out << "note=no monochromatic pair up to the length bound\n";
  }
  return (found.has_value() == (expect == "found")) ? kOk : kViolation;
}

// --- syntactic -------------------------------------------------------------

int do_syntactic(const std::string& regex, const std::string& alphabet, const std::string& dfa_path,
                 const std::string& emit, const std::string& emit_dfa, std::ostream& out,
                 std::ostream& err) {
  Dfa dfa;
  if (!dfa_path.empty()) {
    dfa = read_dfa_file(dfa_path);
  } else if (!regex.empty()) {
    dfa = regex_to_dfa(parse_regex(regex, alphabet), alphabet);
  } else {
    err << "error: give --regex or --dfa\n";
    return kUsage;
  }
  const auto minimal = minimize_dfa(dfa);
  const auto m = transition_monoid(minimal);
  const bool aperiodic = is_aperiodic(m).aperiodic;
  out << "dfa_states=" << dfa.states << '\n';
  out << "minimal_states=" << minimal.states << '\n';
  out << "monoid_size=" << m.size() << '\n';
  out << "aperiodic=" << boolean(aperiodic) << '\n';
  out << "star_free=" << boolean(aperiodic) << '\n';
  if (!emit.empty()) {
    write_text_file(emit, format_mon(m));
    out << "wrote=" << emit << '\n';
  }
  if (!emit_dfa.empty()) {
    write_text_file(emit_dfa, format_dfa(minimal));
    out << "wrote=" << emit_dfa << '\n';
  }
  return kOk;
}

// --- families / iso --------------------------------------------------------

int do_families(const std::string& name, const std::vector<std::string>& params,
                const std::string& output, std::ostream& out) {
  if (name == "list") {
    for (const auto& n : family_names()) out << n << '\n';
    return kOk;
  }
  const auto m = family(name, params);
  if (output.empty()) {
    out << format_mon(m);
  } else {
    write_text_file(output, format_mon(m));
    out << "wrote=" << output << '\n' << "size=" << m.size() << '\n';
  }
  return kOk;
}

int do_iso(const std::string& left, const std::string& right, std::ostream& out) {
  const auto a = read_monoid_file(left);
  const auto b = read_monoid_file(right);
  const auto iso = find_isomorphism(a, b);
  out << "isomorphic=" << boolean(iso.has_value()) << '\n';
  if (!iso) return kViolation;
  std::string listed;
  for (Element x : a.elements()) {
    if (!listed.empty()) listed += ',';
    listed += a.name(x) + "->" + b.name((*iso)(x));
  }
  out << "map=" << listed << '\n';
  return kOk;
}

// --- corpus ----------------------------------------------------------------

struct Tally {
  std::size_t checked = 0;
  std::size_t passed = 0;
};

class InvariantRun {
 public:
  void record(const std::string& invariant, const std::string& monoid, bool ok) {
    auto& t = tallies_[invariant];
    ++t.checked;
    if (ok) {
      ++t.passed;
    } else {
      violations_.push_back(monoid + ": " + invariant);
    }
  }

  template <typename F>
  void check(const std::string& invariant, const std::string& monoid, F&& f) {
    bool ok = false;
    try {
      ok = f();
    } catch (const Error& e) {
      violations_.push_back(monoid + ": " + invariant + " threw " + e.what());
      auto& t = tallies_[invariant];
      ++t.checked;
      return;
    }
    record(invariant, monoid, ok);
  }

  int report(std::ostream& out, std::size_t monoids) const {
    out << "monoids=" << monoids << '\n';
    for (const auto& [name, t] : tallies_) {
      out << "invariant." << name << '=' << t.passed << '/' << t.checked << '\n';
    }
    for (const auto& v : violations_) out << "violation=" << v << '\n';
    out << "status=" << (violations_.empty() ? "ok" : "failed") << '\n';
    return violations_.empty() ? kOk : kViolation;
  }

 private:
  std::map<std::string, Tally> tallies_;
  std::vector<std::string> violations_;
};

void corpus_checks(InvariantRun& run, const CorpusEntry& entry) {
  const auto& m = entry.monoid;
  const auto& name = entry.name;
  ClassificationReport r;
  run.check("aperiodicity_agreement", name, [&] {
    r = classify(m);  // method All throws on disagreement
    return true;
  });
  if (r.almost_r_trivial) {
    run.check("almost_r_trivial_implies", name, [&] { return r.aperiodic && r.xr_linear; });
  }
  if (r.x_linear) {
    run.check("aperiodic_iff_l_trivial", name, [&] { return r.aperiodic == r.l_trivial; });
    run.check("linear_structure", name, [&] {
      const auto checks = check_linear_structure(m);
      return std::all_of(checks.begin(), checks.end(), [](const auto& c) { return c.passed; });
    });
    run.check("ideal_images", name, [&] { return verify_fact_44(m); });
  }
  if (r.ramsey) {
    run.check("ramsey_implies_controllable", name,
              [&] { return r.y_controllable.verdict == YVerdict::Yes; });
  }
  if (r.aperiodic && r.xr_linear) {
    run.check("controlled_idempotent", name, [&] {
      const RightZeroSelfAction rz(m);
      const TruncatedWordAction words(m, 3);
      build_good_witness(rz);
      build_good_witness(words);
      return verify_corollary_35(rz) && verify_corollary_35(words) &&
             verify_corollary_35(LeftMultiplicationAction(m));
    });
    run.check("lemma_witnesses", name, [&] {
      const auto g = green_classes(m);
      for (const auto& cls : g.r.classes) {
        for (Element a : cls) {
          for (Element b : cls) {
            if (a != b) lemma_witnesses(m, a, b);
          }
        }
      }
      return true;
    });
    run.check("class_product", name, [&] { return !class_product_failure(m); });
  }
  run.check("image_inclusion", name,
            [&] { return !image_inclusion_failure(LeftMultiplicationAction(m)); });
  const YSpace space(m);
  if (space.ideals().size() <= 5) {
    run.check("confluence", name, [&] { return space.check_confluence().confluent; });
  }
}

std::string file_stem(std::size_t index) {
  std::string digits = std::to_string(index);
  return "corpus-" + std::string(digits.size() < 3 ? 3 - digits.size() : 0, '0') + digits;
}

int do_corpus(std::uint64_t seed, std::size_t count, const std::string& emit, std::ostream& out) {
  CorpusOptions options;
  options.seed = seed;
  options.random_count = count;
  const auto corpus = build_corpus(options);
  if (!emit.empty()) {
    std::filesystem::create_directories(emit);
    for (std::size_t i = 0; i < corpus.size(); ++i) {
      const auto path = std::filesystem::path(emit) / (file_stem(i) + ".mon");
      write_text_file(path, "# " + corpus[i].name + "\n" + format_mon(corpus[i].monoid));
    }
  }
  InvariantRun run;
  for (const auto& entry : corpus) corpus_checks(run, entry);
  out << "seed=" << seed << '\n';
  return run.report(out, corpus.size());
}

}  // namespace

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Finite monoid workbench", "monoidlab"};
  app.require_subcommand(1);

  std::string path, path2, action = "rightzero", element, coloring, regex, alphabet, dfa_path,
                           emit, emit_dfa, output, wedge, y_spec = "max", expect = "found",
                           family_name;
  std::vector<std::string> expectations, params;
  std::size_t max_length = 4, count = 200;
  std::uint64_t seed = 0;
  bool confluence = false;

  auto* classify_cmd = app.add_subcommand("classify", "Classify a monoid");
  classify_cmd->add_option("file", path, "Monoid .mon file")->required();
  classify_cmd->add_option("--expect", expectations,
                           "ramsey, not-ramsey, aperiodic, xr-linear, y-controllable, ...");

  auto* green_cmd = app.add_subcommand("green", "Green's relations and ideal families");
  green_cmd->add_option("file", path, "Monoid .mon file")->required();

  auto* yspace_cmd = app.add_subcommand("yspace", "Chains of right ideals and their words");
  yspace_cmd->add_option("file", path, "Monoid .mon file")->required();
  yspace_cmd->add_flag("--confluence", confluence, "Certify the deletion system");
  yspace_cmd->add_option("--wedge", wedge, "Comma-separated elements m1,m2,...");
  yspace_cmd->add_option("--y", y_spec, "Chain to act on (max)");

  auto* dynamics_cmd = app.add_subcommand("dynamics", "Controlled idempotents of an action");
  dynamics_cmd->add_option("monoid", path, "Monoid .mon file")->required();
  dynamics_cmd->add_option("space", path2, "Semigroup .mon file for a tabled action");
  dynamics_cmd->add_option("--action", action, "rightzero, words:L or an .act file");

  auto* adversarial_cmd = app.add_subcommand("adversarial", "Check the adversarial coloring");
  adversarial_cmd->add_option("file", path, "Monoid .mon file")->required();
  adversarial_cmd->add_option("--element", element, "Non-aperiodic element")->required();
  adversarial_cmd->add_option("--maxlen", max_length, "Bound on |y0| + |y1|");

  auto* search_cmd = app.add_subcommand("search", "Search for a monochromatic pair");
  search_cmd->add_option("file", path, "Monoid .mon file")->required();
  search_cmd->add_option("--coloring", coloring, "first-in:SET, seed:N:K, constant:C or file:PATH")
      ->required();
  search_cmd->add_option("--maxlen", max_length, "Bound on |y0| + |y1|");
  search_cmd->add_option("--expect", expect, "found or absent");

  auto* syntactic_cmd = app.add_subcommand("syntactic", "Syntactic monoid of a regular language");
  syntactic_cmd->add_option("--regex", regex, "Regular expression");
  syntactic_cmd->add_option("--alphabet", alphabet, "Alphabet, e.g. agh");
  syntactic_cmd->add_option("--dfa", dfa_path, "Read a .dfa file instead");
  syntactic_cmd->add_option("--emit", emit, "Write the monoid as .mon");
  syntactic_cmd->add_option("--emit-dfa", emit_dfa, "Write the minimal DFA as .dfa");

  auto* families_cmd = app.add_subcommand("families", "Emit a named monoid ('list' to list)");
  families_cmd->add_option("name", family_name, "Family name")->required();
  families_cmd->add_option("params", params, "Family parameters");
  families_cmd->add_option("-o,--output", output, "Output .mon file");

  auto* iso_cmd = app.add_subcommand("iso", "Find an isomorphism");
  iso_cmd->add_option("left", path, "Monoid .mon file")->required();
  iso_cmd->add_option("right", path2, "Monoid .mon file")->required();

  auto* corpus_cmd = app.add_subcommand("corpus", "Generate the corpus and check invariants");
  corpus_cmd->add_option("--seed", seed, "Random seed");
  corpus_cmd->add_option("--count", count, "Number of random monoids");
  corpus_cmd->add_option("--emit", emit, "Directory for the generated .mon files");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kOk : kUsage;
  }

  try {
    if (classify_cmd->parsed()) return do_classify(path, expectations, out, err);
    if (green_cmd->parsed()) return do_green(path, out);
    if (yspace_cmd->parsed()) return do_yspace(path, confluence, wedge, y_spec, out, err);
    if (dynamics_cmd->parsed()) return do_dynamics(path, path2, action, out);
    if (adversarial_cmd->parsed()) return do_adversarial(path, element, max_length, out);
    if (search_cmd->parsed()) return do_search(path, coloring, max_length, expect, out, err);
    if (syntactic_cmd->parsed()) {
      return do_syntactic(regex, alphabet, dfa_path, emit, emit_dfa, out, err);
    }
    if (families_cmd->parsed()) return do_families(family_name, params, output, out);
    if (iso_cmd->parsed()) return do_iso(path, path2, out);
    if (corpus_cmd->parsed()) return do_corpus(seed, count, emit, out);
  } catch (const Error& e) {
    err << "error: " << e.what() << '\n';
    return kUsage;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return kUsage;
  }
  return kUsage;
}

}  // namespace monoidlab::cli
