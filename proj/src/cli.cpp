#include "skein/cli.hpp"

#include <fstream>
#include <functional>
#include <numeric>
#include <sstream>

#include <CLI11.hpp>

#include "skein/bracket.hpp"
#include "skein/error.hpp"
#include "skein/homology.hpp"
#include "skein/jones.hpp"
#include "skein/json_io.hpp"
#include "skein/kauffman.hpp"

namespace skein {

namespace {

// ---------------------------------------------------------------------------
// Corpus helpers

std::uint64_t instance_seed(std::uint64_t seed, int k) { return seed * 1000003ULL + static_cast<std::uint64_t>(k); }

SlicedDiagram generate(std::uint64_t seed, int max_crossings, int genus, int bottom = 0, int top = 0) {
  RandomParams p;
  p.max_crossings = max_crossings;
  p.genus = genus;
  p.bottom = bottom;
  p.top = top;
  return random_diagram(seed, p);
}

bool has_strands(const SlicedDiagram& d) {
  const auto w = level_widths(d);
  return std::any_of(w.begin(), w.end(), [](int x) { return x > 0; });
}

SlicedDiagram nonempty(SlicedDiagram d) { return has_strands(d) ? d : disjoint_unknot(d); }

SlicedDiagram with_crossing(SlicedDiagram d) {
  d = nonempty(std::move(d));
  if (d.crossing_count() == 0) d = add_kink(d, first_strand_location(d), 1);
  return d;
}

std::vector<int> crossing_events(const SlicedDiagram& d) {
  std::vector<int> out;
  for (int i = 0; i < static_cast<int>(d.events.size()); ++i)
    if (d.events[i].kind == EventKind::cross) out.push_back(i);
  return out;
}

// A strand location chosen from the seed.
Location pick_location(const SlicedDiagram& d, std::uint64_t seed) {
  const auto widths = level_widths(d);
  std::vector<Location> all;
  for (int h = 0; h < static_cast<int>(widths.size()); ++h)
    for (int s = 0; s < widths[h]; ++s) all.push_back({h, s});
  return all[seed % all.size()];
}

// Manifold data with omega = 1 for every class, H_1 of rank g.
ManifoldHomologyData unit_omega_data(int g) {
  ManifoldHomologyData d;
  d.free_rank = g;
  d.h2_rank = 1;
  d.pairing.assign(g, std::vector<long>{0});
  d.base_pairing = {1};
  d.label = "unit-omega";
  return d;
}

long mod_or_plain(long x, long omega) { return omega > 0 ? ((x % (2 * omega)) + 2 * omega) % (2 * omega) : x; }

struct Instance {
  nlohmann::json diagram;
  std::string reason;
};

using Check = std::function<bool(std::uint64_t seed, int max_crossings, Instance& evidence)>;

bool check_kauffman_formula(std::uint64_t seed, int max_c, Instance& ev) {
  const SlicedDiagram d = nonempty(generate(seed, max_c, 0));
  ev.diagram = diagram_to_json(d);
  const auto [lhs, rhs] = kauffman_formula_sides(d);
  if (lhs == rhs) return true;
  ev.reason = "bracket side " + lhs.to_t_string() + " != Jones side " + rhs.to_t_string();
  return false;
}

bool check_skein(std::uint64_t seed, int max_c, Instance& ev) {
  const int g = static_cast<int>(seed % 3);
  const SlicedDiagram d = with_crossing(generate(seed, max_c, g));
  ev.diagram = diagram_to_json(d);
  const auto xs = crossing_events(d);
  const int e = xs[(seed / 3) % xs.size()];
  const SkeinTriple t = skein_triple(d, e);
  if (writhe(t.plus) != writhe(t.zero) + 1 || writhe(t.minus) != writhe(t.zero) - 1) {
    ev.reason = "writhe relation fails at event " + std::to_string(e);
    return false;
  }
  const ManifoldHomologyData data = handlebody(g);
  if (!jones_relation_check(t, [&](const SlicedDiagram& x) { return kappa(x, data).value; })) {
    ev.reason = "kappa relation fails at event " + std::to_string(e);
    return false;
  }
  if (g == 0 && !jones_relation_check(t, [](const SlicedDiagram& x) { return jones_in_a(x); })) {
    ev.reason = "Jones skein relation fails at event " + std::to_string(e);
    return false;
  }
  return true;
}

bool check_oracle(std::uint64_t seed, int max_c, Instance& ev) {
  const SlicedDiagram d = generate(seed, std::min(max_c, 14), static_cast<int>(seed % 3));
  ev.diagram = diagram_to_json(d);
  const BracketElement fast = bracket_resolve_uncached(d);
  const BracketElement slow = state_sum_oracle(d);
  if (fast == slow) return true;
  ev.reason = "resolution " + fast.to_string() + " != state sum " + slow.to_string();
  return false;
}

bool check_isotopy(std::uint64_t seed, int max_c, Instance& ev) {
  const int g = static_cast<int>(seed % 3);
  const SlicedDiagram d = disjoint_unknot(generate(seed, max_c, g));
  ev.diagram = diagram_to_json(d);
  const BracketElement base = bracket_resolve(d);
  const auto wind = winding_vector(d);

  // r2 on two adjacent strands, then back.
  const auto widths = level_widths(d);
  std::vector<Location> pairs;
  for (int h = 0; h < static_cast<int>(widths.size()); ++h)
    for (int s = 0; s + 1 < widths[h]; ++s) pairs.push_back({h, s});
  ReidemeisterMove r2;
  r2.kind = ReidemeisterMove::Kind::r2;
  r2.loc = pairs[seed % pairs.size()];
  r2.over = (seed / 7) % 2 ? Over::left : Over::right;
  const SlicedDiagram d2 = rmove(d, r2);
  if (bracket_resolve(d2) != base || winding_vector(d2) != wind) {
    ev.reason = "r2 changed the bracket or the class";
    return false;
  }
  ReidemeisterMove undo;
  undo.kind = ReidemeisterMove::Kind::r2_remove;
  undo.loc = {r2.loc.event_pos, 0};
  if (rmove(d2, undo) != d) {
    ev.reason = "r2_remove does not invert r2";
    return false;
  }
  for (int site : r3_sites(d)) {
    ReidemeisterMove r3;
    r3.kind = ReidemeisterMove::Kind::r3;
    r3.loc = {site, 0};
    const SlicedDiagram d3 = rmove(d, r3);
    if (bracket_resolve(d3) != base || winding_vector(d3) != wind) {
      ev.reason = "r3 at event " + std::to_string(site) + " changed the bracket or the class";
      return false;
    }
  }
  const int sign = (seed / 11) % 2 ? 1 : -1;
  const SlicedDiagram k = add_kink(d, pick_location(d, seed / 13), sign);
  if (bracket_resolve(k) != base.scaled(LaurentPoly::unit_power(3 * sign)) || winding_vector(k) != wind) {
    ev.reason = "r1 with sign " + std::to_string(sign) + " is not multiplication by -A^(3 sign)";
    return false;
  }
  return true;
}

bool check_przytycki(std::uint64_t seed, int max_c, Instance& ev) {
  const int g = static_cast<int>(seed % 3);
  const ManifoldHomologyData data = (seed / 3) % 2 ? unit_omega_data(g) : handlebody(g);
  const SlicedDiagram d = with_crossing(generate(seed, max_c, g));
  ev.diagram = diagram_to_json(d);
  const auto xs = crossing_events(d);
  const SkeinTriple t = skein_triple(d, xs[(seed / 6) % xs.size()]);
  const PrzytyckiClass plus = przytycki_class(t.plus, data);
  const PrzytyckiClass zero = przytycki_class(t.zero, data);
  if (plus.alpha != zero.alpha || plus.exponent != mod_or_plain(zero.exponent + 1, zero.omega)) {
    ev.reason = "exponent(K+) != exponent(K0) + 1";
    return false;
  }
  const PrzytyckiClass base = przytycki_class(d, data);
  const PrzytyckiClass kinked = przytycki_class(add_kink(d, pick_location(d, seed / 5), 1), data);
  if (kinked.exponent != mod_or_plain(base.exponent + 1, base.omega)) {
    ev.reason = "exponent(K^(+)) != exponent(K) + 1";
    return false;
  }
  if (przytycki_class(disjoint_unknot(d), data) != base) {
    ev.reason = "adding a split unknot changed the class";
    return false;
  }
  return true;
}

bool check_framing(std::uint64_t seed, int max_c, Instance& ev) {
  const SlicedDiagram d = nonempty(generate(seed, max_c, 0));
  ev.diagram = diagram_to_json(d);
  if (framing_insensitivity_check(d, pick_location(d, seed))) return true;
  ev.reason = "a kink changed the Jones polynomial";
  return false;
}

bool check_disjoint_union(std::uint64_t seed, int max_c, Instance& ev) {
  const SlicedDiagram d = generate(seed, max_c, static_cast<int>(seed % 3));
  ev.diagram = diagram_to_json(d);
  if (bracket_resolve(disjoint_unknot(d)) == bracket_resolve(d).scaled(LaurentPoly::delta())) return true;
  ev.reason = "<D u U> != delta <D>";
  return false;
}

bool check_glue(std::uint64_t seed, int max_c, Instance& ev) {
  const int half = std::max(1, max_c / 2);
  SlicedDiagram lower, upper;
  GlueMode mode = GlueMode::side_by_side;
  if (seed % 2 == 0) {
    lower = generate(seed, half, static_cast<int>((seed / 2) % 2));
    upper = generate(seed ^ 0x5bd1e995ULL, half, static_cast<int>((seed / 4) % 2));
  } else {
    mode = GlueMode::stack;
    const int b = 2 * static_cast<int>((seed / 2) % 2);
    const int top = 2 * static_cast<int>((seed / 4) % 2);
    // Retry until the upper tangle admits orientations matching the interface.
    for (std::uint64_t attempt = 0;; ++attempt) {
      lower = generate(seed * 31 + attempt, half, 0, b, 2);
      try {
        upper = orient_from_bottom(generate(seed * 37 + attempt, half, 0, 2, top), endpoint_directions(lower).second);
        break;
      } catch (const ValidationError&) {
        if (attempt > 64) throw;
      }
    }
  }
  ev.diagram = {{"lower", diagram_to_json(lower)}, {"upper", diagram_to_json(upper)},
                {"mode", mode == GlueMode::stack ? "stack" : "side_by_side"}};
  const GlueReport r = glue_compat_report(lower, upper, mode, handlebody(lower.puncture_count()),
                                          handlebody(upper.puncture_count()));
  if (r.ok) return true;
  ev.reason = r.detail;
  return false;
}

const std::vector<std::pair<std::string, Check>>& suites() {
  static const std::vector<std::pair<std::string, Check>> table = {
      {"kauffman-formula", check_kauffman_formula}, {"skein", check_skein},
      {"oracle", check_oracle},                     {"isotopy", check_isotopy},
      {"przytycki", check_przytycki},               {"framing", check_framing},
      {"disjoint-union", check_disjoint_union},     {"glue", check_glue},
  };
  return table;
}

// ---------------------------------------------------------------------------
// Command helpers

ManifoldHomologyData resolve_manifold(const std::string& preset, const std::string& data, int genus) {
  if (!preset.empty() && !data.empty()) throw ParseError("--manifold and --data are mutually exclusive");
  if (!data.empty()) {
    std::string text = data;
    if (data.front() != '{') {
      std::ifstream in(data);
      if (!in) throw ParseError("cannot open " + data);
      std::stringstream ss;
      ss << in.rdbuf();
      text = ss.str();
    }
    try {
      return homology_from_json(Json::parse(text));
    } catch (const Json::parse_error&) {
      throw ParseError("malformed manifold data JSON");
    }
  }
  if (!preset.empty()) {
    try {
      return parse_manifold_preset(preset);
    } catch (const SkeinError& e) {
      throw ParseError(e.what());
    }
  }
  return handlebody(genus);
}

std::vector<long> parse_int_list(const std::string& text, const char* what) {
  std::vector<long> out;
  if (text.empty()) return out;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    try {
      std::size_t used = 0;
      out.push_back(std::stol(item, &used));
      if (used != item.size()) throw std::invalid_argument(item);
    } catch (const std::exception&) {
      throw ParseError(std::string("invalid ") + what + " entry '" + item + "'");
    }
  }
  return out;
}

void emit(std::ostream& out, const Json& j) { out << j.dump(2) << "\n"; }

}  // namespace

nlohmann::json SuiteOutcome::to_json() const {
  return {{"suite", suite}, {"seed", seed},     {"count", count},
          {"passed", passed}, {"failed", failed}, {"failures", failures}};
}

const std::vector<std::string>& suite_names() {
  static const std::vector<std::string> names = [] {
    std::vector<std::string> v;
    for (const auto& [name, fn] : suites()) v.push_back(name);
    return v;
  }();
  return names;
}

SuiteOutcome run_suite(const std::string& name, std::uint64_t seed, int count, int max_crossings) {
  const auto& table = suites();
  const auto it = std::find_if(table.begin(), table.end(), [&](const auto& p) { return p.first == name; });
  if (it == table.end()) throw SkeinError("unknown suite '" + name + "'");
  SuiteOutcome o;
  o.suite = name;
  o.seed = seed;
  o.count = count;
  for (int k = 0; k < count; ++k) {
    const std::uint64_t s = instance_seed(seed, k);
    Instance ev;
    bool ok = false;
    try {
      ok = it->second(s, max_crossings, ev);
    } catch (const std::exception& e) {
      ev.reason = std::string("exception: ") + e.what();
    }
    if (ok) {
      ++o.passed;
      continue;
    }
    ++o.failed;
    o.failures.push_back({{"instance", k}, {"instance_seed", s}, {"reason", ev.reason}, {"diagram", ev.diagram}});
  }
  return o;
}

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Exact Kauffman bracket, Jones polynomial and skein-module computations", "skein"};
  app.require_subcommand(1, 1);
  std::string format = "json";
  app.add_option("--format", format, "Output format")->check(CLI::IsMember({"json", "pretty"}));
  app.fallthrough();

  std::string file, file2, preset, data, cls, torsion, mode = "stack", suite;
  int reduction = 0, max_crossings = 8, count = 100, genus = 0, bottom = 0, top = 0;
  std::uint64_t seed = 1;
  bool classical = false, oracle = false, unoriented = false;

  auto add_manifold = [&](CLI::App* sub) {
    sub->add_option("--manifold", preset, "Preset: handlebody:G, sigma-times-i:H[:MARKING], ball");
    sub->add_option("--data", data, "Custom homology data as a JSON file or inline object");
  };

  auto* bracket = app.add_subcommand("bracket", "Kauffman bracket in the crossingless basis");
  bracket->add_option("diagram", file, "Diagram JSON file, or - for stdin")->required();
  bracket->add_option("--reduction", reduction, "Reduce coefficients modulo A^-n - A^n")->check(CLI::NonNegativeNumber);
  bracket->add_flag("--classical", classical, "Divide out one loop factor so the unknot is 1");
  bracket->add_flag("--oracle", oracle, "Use the state-sum oracle");

  auto* jones = app.add_subcommand("jones", "Jones polynomial of a closed oriented planar diagram");
  jones->add_option("diagram", file, "Diagram JSON file, or - for stdin")->required();

  auto* kap = app.add_subcommand("kappa", "Kauffman map image");
  kap->add_option("diagram", file, "Diagram JSON file, or - for stdin")->required();
  add_manifold(kap);

  auto* prz = app.add_subcommand("przytycki", "Homology class and framing exponent");
  prz->add_option("diagram", file, "Diagram JSON file, or - for stdin")->required();
  add_manifold(prz);

  auto* om = app.add_subcommand("omega", "Writhe indeterminacy of a class");
  add_manifold(om);
  om->add_option("--class", cls, "Free part of the class, comma separated");
  om->add_option("--torsion", torsion, "Torsion residues, comma separated");

  auto* glue = app.add_subcommand("glue", "Glue two diagrams and check compatibility of the Kauffman map");
  glue->add_option("lower", file, "Lower (or left) diagram")->required();
  glue->add_option("upper", file2, "Upper (or right) diagram")->required();
  glue->add_option("--mode", mode, "stack or side_by_side")->check(CLI::IsMember({"stack", "side_by_side"}));

  auto* check = app.add_subcommand("check", "Run a randomized property suite");
  std::vector<std::string> suite_choices = suite_names();
  suite_choices.push_back("all");
  check->add_option("suite", suite, "Suite name")->required()->check(CLI::IsMember(suite_choices));
  check->add_option("--seed", seed, "Corpus seed");
  check->add_option("--count", count, "Instances per suite")->check(CLI::PositiveNumber);
  check->add_option("--max-crossings", max_crossings, "Crossing bound per diagram")->check(CLI::Range(0, 24));

  auto* gen = app.add_subcommand("generate", "Emit a random diagram");
  gen->add_option("--seed", seed, "Generator seed");
  gen->add_option("--crossings", max_crossings, "Crossing bound")->check(CLI::Range(0, 24));
  gen->add_option("--genus", genus, "Number of punctures")->check(CLI::NonNegativeNumber);
  gen->add_option("--bottom", bottom, "Bottom arity")->check(CLI::NonNegativeNumber);
  gen->add_option("--top", top, "Top arity")->check(CLI::NonNegativeNumber);
  gen->add_flag("--unoriented", unoriented, "Omit orientations");

  std::vector<std::string> argv_store{"skein"};
  argv_store.insert(argv_store.end(), args.begin(), args.end());
  std::vector<char*> argv;
  for (auto& a : argv_store) argv.push_back(a.data());
  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e, out, err);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e, out, err);
  } catch (const CLI::ParseError& e) {
    app.exit(e, out, err);
    return exit_usage;
  }
  const bool pretty = format == "pretty";

  try {
    if (bracket->parsed()) {
      const SlicedDiagram d = parse_diagram_file(file);
      const Normalization norm = classical ? Normalization::classical : Normalization::internal;
      BracketElement b = oracle ? state_sum_oracle(d) : bracket_resolve(d, 0, norm);
      if (oracle && classical) {
        BracketElement divided(0);
        for (const auto& [key, v] : b.terms()) {
          auto q = v.value().divide_exact(LaurentPoly::delta());
          if (!q) throw SkeinError("classical normalization: coefficient is not divisible by delta");
          divided.add(key, *q);
        }
        b = divided;
      }
      if (reduction > 0) b = b.projected(reduction);
      if (pretty) out << "bracket: " << b.to_string() << "\n";
      else emit(out, {{"normalization", classical ? "classical" : "internal"}, {"bracket", bracket_to_json(b)}});
      return exit_ok;
    }
    if (jones->parsed()) {
      const SlicedDiagram d = parse_diagram_file(file);
      const JonesPoly v = jones_polynomial(d);
      if (pretty) out << "V = " << v.to_t_string() << "\n";
      else emit(out, {{"s", poly_to_json(v.in_s())}, {"s_text", v.to_string()}, {"t_text", v.to_t_string()}});
      return exit_ok;
    }
    if (kap->parsed()) {
      const SlicedDiagram d = parse_diagram_file(file);
      const KappaImage k = kappa(d, resolve_manifold(preset, data, d.puncture_count()));
      if (pretty) {
        out << "class mod 2:";
        for (int x : k.tag) out << ' ' << x;
        out << "\nreduction index: " << k.reduction << "\nkappa = " << k.value.to_string() << "\n";
      } else {
        emit(out, kappa_to_json(k));
      }
      return exit_ok;
    }
    if (prz->parsed()) {
      const SlicedDiagram d = parse_diagram_file(file);
      const PrzytyckiClass p = przytycki_class(d, resolve_manifold(preset, data, d.puncture_count()));
      if (pretty) out << "exponent " << p.exponent << " (omega " << p.omega << ")\n";
      else emit(out, przytycki_to_json(p));
      return exit_ok;
    }
    if (om->parsed()) {
      const ManifoldHomologyData m = resolve_manifold(preset, data, 0);
      HomClass c = free_class(m, parse_int_list(cls, "class"));
      if (!torsion.empty()) c.torsion_part = parse_int_list(torsion, "torsion");
      const long w = omega(m, c);
      if (pretty) out << w << "\n";
      else emit(out, {{"manifold", m.label}, {"class", homclass_to_json(c)}, {"omega", w}});
      return exit_ok;
    }
    if (glue->parsed()) {
      const SlicedDiagram d1 = parse_diagram_file(file);
      const SlicedDiagram d2 = parse_diagram_file(file2);
      const GlueMode gm = mode == "stack" ? GlueMode::stack : GlueMode::side_by_side;
      const SlicedDiagram glued = glue_diagrams(d1, d2, gm);
      const GlueReport r =
          glue_compat_report(d1, d2, gm, handlebody(d1.puncture_count()), handlebody(d2.puncture_count()));
      if (pretty) {
        out << (r.ok ? "compatible" : "NOT compatible") << (r.detail.empty() ? "" : ": " + r.detail) << "\n";
      } else {
        emit(out, {{"glued", diagram_to_json(glued)},
                   {"writhe_additive", r.writhe_additive},
                   {"gcd_bound", r.gcd_bound},
                   {"kappa_commutes", r.commutes},
                   {"ok", r.ok},
                   {"detail", r.detail}});
      }
      return r.ok ? exit_ok : exit_failure;
    }
    if (check->parsed()) {
      const std::vector<std::string> names = suite == "all" ? suite_names() : std::vector<std::string>{suite};
      Json reports = Json::array();
      bool all_ok = true;
      for (const auto& name : names) {
        const SuiteOutcome o = run_suite(name, seed, count, max_crossings);
        all_ok = all_ok && o.failed == 0;
        if (pretty) {
          out << name << ": " << o.passed << "/" << o.count << " passed";
          if (o.failed > 0) out << ", rerun with --seed " << seed << "; first failure " << o.failures[0].dump();
          out << "\n";
        }
        reports.push_back(o.to_json());
      }
      if (!pretty) emit(out, names.size() == 1 ? reports[0] : Json{{"suites", reports}});
      return all_ok ? exit_ok : exit_failure;
    }
    if (gen->parsed()) {
      RandomParams p;
      p.max_crossings = max_crossings;
      p.genus = genus;
      p.bottom = bottom;
      p.top = top;
      p.oriented = !unoriented;
      SlicedDiagram d;
      try {
        d = random_diagram(seed, p);
      } catch (const SkeinError& e) {
        throw ParseError(e.what());
      }
      if (pretty) out << diagram_key(d) << "\n";
      else emit(out, diagram_to_json(d));
      return exit_ok;
    }
  } catch (const ParseError& e) {
    err << "error: " << e.what() << "\n";
    return exit_usage;
  } catch (const ValidationError& e) {
    err << "error: invalid diagram: " << e.what() << "\n";
    return exit_usage;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return exit_failure;
  }
  return exit_usage;
}

}  // namespace skein
