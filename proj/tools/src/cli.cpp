#include "quartic_cli/cli.hpp"

#include <openssl/evp.h>

#include <algorithm>
#include <atomic>
#include <cstdint>
#include <fstream>
#include <functional>
#include <iomanip>
#include <sstream>
#include <thread>

#include <CLI11.hpp>
#include <nlohmann/json.hpp>

#include "quartic/degree.hpp"
#include "quartic/elliptic.hpp"
#include "quartic/errors.hpp"
#include "quartic/json_io.hpp"
#include "quartic/lattice.hpp"
#include "quartic/quartic.hpp"
#include "quartic/untwist.hpp"
#include "quartic/words.hpp"

#ifndef QUARTIC_VERSION
#define QUARTIC_VERSION "0.0.0"
#endif

namespace quartic::cli {

std::string sha256_hex(const std::string& bytes) {
  unsigned char digest[EVP_MAX_MD_SIZE];
  unsigned int len = 0;
  if (EVP_Digest(bytes.data(), bytes.size(), digest, &len, EVP_sha256(), nullptr) != 1)
    throw std::runtime_error("SHA-256 failed");
  std::ostringstream s;
  for (unsigned int i = 0; i < len; ++i) s << std::hex << std::setw(2) << std::setfill('0') << int(digest[i]);
  return s.str();
}

namespace {

using nlohmann::json;

struct Options {
  std::string config, vector, word, w1, w2, in, marked, label, equation, coords, trace;
  std::string field = "p";
  long kprime = 0;
  std::size_t samples = 1000;
  std::size_t budget = kDefaultRewriteBudget;
  std::uint64_t seed = 0;
  unsigned jobs = 1;
};

struct Outcome {
  int code = kSuccess;
  std::string status = "ok";
  json result = json::object();
};

/// Reads input files and records their digests for the manifest.
class Inputs {
 public:
  json document(const std::string& flag, const std::string& path) {
    const std::string text = io::read_file(path);
    digests_[flag] = sha256_hex(text);
    return io::parse_text(text);
  }
  const json& digests() const { return digests_; }

 private:
  json digests_ = json::object();
};

json letters(const Word& w) { return io::word_to_json(w)["word"]; }

json strings(const std::vector<std::string>& v) { return json(v); }

json rationals(const std::vector<Rational>& v) {
  json out = json::array();
  for (const auto& x : v) out.push_back(to_string(x));
  return out;
}

json cluster_json(const ClusterElement& e) {
  json t = json::array();
  for (const auto& x : e.translation) t.push_back(x.get_str());
  return {{"line", e.line}, {"parity", e.parity}, {"translation", t}};
}

QuarticIncidence load_config(Inputs& in, const Options& o, bool validate_now = true) {
  auto c = io::config_from_json(in.document("config", o.config));
  if (validate_now) require_valid(c);
  return c;
}

Word load_word(Inputs& in, const std::string& flag, const std::string& path, const QuarticIncidence& c) {
  Word w = io::word_from_json(in.document(flag, path));
  for (const auto& g : w) check_generator(c, g);
  return w;
}

DegreeVector load_vector(Inputs& in, const Options& o, const QuarticIncidence& c) {
  DegreeVector v = io::vector_from_json(in.document("vector", o.vector));
  for (const auto& [id, value] : v.nu) {
    (void)value;
    if (!c.find_point(id) && !c.find_line(id)) throw InvalidInput("vector names unknown coordinate " + id);
  }
  if (v.mu <= 0) throw InvalidInput("mu must be positive");
  return v;
}

CurveConfig load_lattice(Inputs& in, const Options& o) {
  auto g = io::lattice_from_json(in.document("in", o.in));
  check_curve_config(g);
  return g;
}

json star_json(const StarVerdict& s) {
  return {{"holds", s.holds}, {"clause", s.clause}, {"witness", strings(s.witness)}};
}

json components_json(const DynkinClass& d) {
  json out = json::array();
  for (const auto& c : d.components) out.push_back({{"vertices", strings(c.vertices)}, {"label", c.label}});
  return out;
}

json trace_json(const DescentTrace& t) {
  json steps = json::array();
  for (const auto& s : t.steps)
    steps.push_back({{"generator", io::generator_to_json(s.generator)}, {"vector", io::vector_to_json(s.after)}});
  return {{"status", to_string(t.status)}, {"detail", t.detail}, {"steps", steps}, {"final", io::vector_to_json(t.final)}};
}

Outcome cmd_validate(Inputs& in, const Options& o) {
  const auto c = load_config(in, o, false);
  const auto violations = validate(c);
  Outcome r;
  json vs = json::array();
  for (const auto& v : violations) vs.push_back({{"id", v.id}, {"rule", v.rule}});
  r.result["valid"] = violations.empty();
  r.result["violations"] = vs;
  json cs = json::array();
  if (violations.empty()) {
    for (const auto& cl : clusters(c))
      cs.push_back({{"line", cl.line},
                    {"points", strings(cl.points)},
                    {"has_line_involution", cl.has_line_involution},
                    {"regular_only", cl.regular_only}});
  }
  r.result["clusters"] = cs;
  if (!violations.empty()) {
    r.code = kInputError;
    r.status = "invalid";
  }
  return r;
}

Outcome cmd_apply(Inputs& in, const Options& o) {
  const auto c = load_config(in, o);
  const auto v = load_vector(in, o, c);
  const auto w = load_word(in, "word", o.word, c);
  Outcome r;
  r.result["vector"] = io::vector_to_json(apply_word(c, w, v));
  return r;
}

Outcome cmd_compose(Inputs& in, const Options& o) {
  const auto c = load_config(in, o);
  const auto w = load_word(in, "word", o.word, c);
  const auto m = compose(c, w);
  Outcome r;
  r.result["basis"] = strings(m.basis);
  r.result["matrix"] = io::matrix_to_json(m.entries);
  r.result["untouched"] = json(m.untouched);
  return r;
}

Outcome cmd_untwist(Inputs& in, const Options& o) {
  const auto c = load_config(in, o);
  const auto v = load_vector(in, o, c);
  const auto t = untwist(c, v);
  Word recovered = t.generators();
  std::reverse(recovered.begin(), recovered.end());
  Outcome r;
  r.result = trace_json(t);
  r.result["word"] = letters(recovered);
  if (!o.trace.empty()) {
    std::ofstream f(o.trace);
    if (!f) throw ParseError("cannot write " + o.trace);
    f << trace_json(t).dump(2) << '\n';
  }
  if (t.status != DescentStatus::complete) {
    r.code = kDescentFailed;
    r.status = to_string(t.status);
  }
  return r;
}

Outcome cmd_normalize(Inputs& in, const Options& o) {
  const auto c = load_config(in, o);
  const auto w = load_word(in, "word", o.word, c);
  const Word reduced = free_reduce(w);
  const AutSplit split = push_auts(c, reduced);
  const Word body = free_reduce(split.body);
  Outcome r;
  r.result["reduced"] = letters(reduced);
  r.result["automorphisms"] = letters(split.automorphisms);
  r.result["body"] = letters(body);
  r.result["cluster"] = nullptr;
  r.result["shortest"] = nullptr;
  if (!body.empty() && !supporting_clusters(c, body).empty()) {
    const auto e = cluster_normal_form(c, body);
    r.result["cluster"] = cluster_json(e);
    r.result["shortest"] = letters(shortest_cluster_word(c, e, 12));
  }
  return r;
}

Outcome cmd_eq(Inputs& in, const Options& o) {
  const auto c = load_config(in, o);
  const auto a = load_word(in, "w1", o.w1, c);
  const auto b = load_word(in, "w2", o.w2, c);
  const auto e = equal(c, a, b, o.budget);
  Outcome r;
  r.result = {{"verdict", to_string(e.verdict)}, {"reason", e.reason}, {"explored", e.explored}};
  r.status = to_string(e.verdict);
  r.code = e.verdict == Verdict::equal ? kSuccess : e.verdict == Verdict::distinct ? kDistinct : kUndecided;
  return r;
}

Outcome cmd_verify_relations(Inputs& in, const Options& o) {
  const auto c = load_config(in, o);
  if (o.samples == 0) throw InvalidInput("--samples must be positive");
  const auto report =
      verify_relations(c, o.samples, o.seed, o.field == "Q" ? FieldChoice::rational : FieldChoice::prime);
  Outcome r;
  json checks = json::array();
  for (const auto& k : report.checks)
    checks.push_back({{"cluster", k.cluster},
                      {"shape", k.shape},
                      {"relation", k.relation},
                      {"samples", k.samples},
                      {"failures", k.failures}});
  r.result = {{"field", report.field}, {"ok", report.ok()}, {"checks", checks}};
  if (!report.ok()) {
    r.code = kViolation;
    r.status = "violation";
  }
  return r;
}

Outcome cmd_classify_lattice(Inputs& in, const Options& o) {
  const auto g = load_lattice(in, o);
  const auto d = classify_dynkin(g);
  const auto def = definiteness(intersection_matrix(g));
  Outcome r;
  json kernel = json::array();
  for (const auto& k : def.kernel) kernel.push_back(rationals(k));
  r.result = {{"components", components_json(d)},
              {"summary", d.summary()},
              {"definiteness", {{"kind", to_string(def.kind)}, {"kernel_dim", def.kernel_dim}, {"kernel", kernel}}}};
  return r;
}

std::vector<std::string> split_ids(const std::string& s) {
  std::vector<std::string> out;
  std::stringstream ss(s);
  std::string item;
  while (std::getline(ss, item, ','))
    if (!item.empty()) out.push_back(item);
  return out;
}

Outcome cmd_check_star(Inputs& in, const Options& o) {
  const auto g = load_lattice(in, o);
  const auto marked = split_ids(o.marked);
  for (const auto& m : marked) g.index(m);
  const auto s = check_star(g, marked);
  Outcome r;
  r.result = star_json(s);
  r.result["marked"] = strings(marked);
  if (!s.holds) {
    r.code = kViolation;
    r.status = "violation";
  }
  return r;
}

Outcome cmd_duval(Inputs&, const Options& o) {
  if (o.kprime < 1) throw InvalidInput("--kprime must be a positive integer");
  const auto a = chain_pullback(o.kprime);
  long k = 1;
  while (!integrality_bound(k, o.kprime)) ++k;
  json bounds = json::array();
  for (long n = 0; n <= 3; ++n) bounds.push_back({{"d", 4}, {"n", n}, {"bound", duval_point_bound(4, n)}});
  Outcome r;
  r.result = {{"k_prime", o.kprime}, {"pullback", rationals(a)}, {"smallest_integral_k", k}, {"point_bounds", bounds}};
  return r;
}

json corollary_json(const CorollaryResult& c) {
  return {{"label", c.data.label},
          {"description", c.data.description},
          {"expected", strings(c.data.expected)},
          {"found", c.found.summary()},
          {"components", components_json(c.found)},
          {"star", star_json(c.star)},
          {"type_matches", c.type_matches}};
}

Outcome cmd_corollary_case(Inputs&, const Options& o) {
  std::vector<std::string> labels;
  if (o.label.empty() || o.label == "all") {
    for (const auto& c : corollary_cases()) labels.push_back(c.label);
  } else {
    labels.push_back(o.label);
  }
  std::vector<CorollaryResult> results(labels.size());
  if (o.jobs <= 1 || labels.size() == 1) {
    for (std::size_t i = 0; i < labels.size(); ++i) results[i] = corollary_case(labels[i]);
  } else {
    std::atomic<std::size_t> next{0};
    std::vector<std::thread> pool;
    for (unsigned t = 0; t < std::min<std::size_t>(o.jobs, labels.size()); ++t)
      pool.emplace_back([&] {
        for (std::size_t i; (i = next++) < labels.size();) results[i] = corollary_case(labels[i]);
      });
    for (auto& t : pool) t.join();
  }
  Outcome r;
  json cases = json::array();
  bool all = true;
  for (const auto& c : results) {
    cases.push_back(corollary_json(c));
    all = all && c.type_matches && c.star.holds;
  }
  r.result["cases"] = cases;
  if (!all) {
    r.code = kViolation;
    r.status = "violation";
  }
  return r;
}

Outcome cmd_analyze_quartic(Inputs& in, const Options& o) {
  const auto eq = io::quartic_from_json(in.document("equation", o.equation));
  const auto c = load_config(in, o);
  const auto coords = io::coordinates_from_json(in.document("coords", o.coords));
  const auto report = verify_incidence(eq.poly, c, coords);
  Outcome r;
  json checks = json::array();
  for (const auto& k : report.checks)
    checks.push_back({{"id", k.id}, {"check", k.check}, {"passed", k.passed}, {"detail", k.detail}});
  r.result = {{"ok", report.ok()}, {"checks", checks}};
  if (!report.ok()) {
    r.code = kViolation;
    r.status = "violation";
  }
  return r;
}

using Handler = std::function<Outcome(Inputs&, const Options&)>;

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Computations in the birational automorphism group of a factorial nodal quartic threefold",
               "quartic-bir"};
  app.set_version_flag("--version", QUARTIC_VERSION);
  app.require_subcommand(1);

  Options o;
  std::vector<std::pair<CLI::App*, Handler>> commands;
  auto add = [&](const std::string& name, const std::string& about, Handler h) {
    CLI::App* s = app.add_subcommand(name, about);
    commands.emplace_back(s, std::move(h));
    return s;
  };
  auto file = [&](CLI::App* s, const std::string& flag, std::string& target, const std::string& about) {
    s->add_option(flag, target, about)->required();
  };

  auto* validate_cmd = add("validate", "Check a configuration and list its clusters", cmd_validate);
  file(validate_cmd, "--config", o.config, "configuration JSON");

  auto* apply_cmd = add("apply", "Apply a word to a degree vector", cmd_apply);
  file(apply_cmd, "--config", o.config, "configuration JSON");
  file(apply_cmd, "--vector", o.vector, "degree vector JSON");
  file(apply_cmd, "--word", o.word, "word JSON");

  auto* compose_cmd = add("compose", "Action matrix of a word", cmd_compose);
  file(compose_cmd, "--config", o.config, "configuration JSON");
  file(compose_cmd, "--word", o.word, "word JSON");

  auto* untwist_cmd = add("untwist", "Untwisting descent of a degree vector", cmd_untwist);
  file(untwist_cmd, "--config", o.config, "configuration JSON");
  file(untwist_cmd, "--vector", o.vector, "degree vector JSON");
  untwist_cmd->add_option("--trace", o.trace, "also write the trace to this file");

  auto* normalize_cmd = add("normalize", "Reduced word and cluster normal form", cmd_normalize);
  file(normalize_cmd, "--config", o.config, "configuration JSON");
  file(normalize_cmd, "--word", o.word, "word JSON");

  auto* eq_cmd = add("eq", "Decide equality of two words", cmd_eq);
  file(eq_cmd, "--config", o.config, "configuration JSON");
  file(eq_cmd, "--w1", o.w1, "first word JSON");
  file(eq_cmd, "--w2", o.w2, "second word JSON");
  eq_cmd->add_option("--budget", o.budget, "rewrite search budget")->check(CLI::PositiveNumber);

  auto* rel_cmd = add("verify-relations", "Check the relations on sampled cubic curves", cmd_verify_relations);
  file(rel_cmd, "--config", o.config, "configuration JSON");
  rel_cmd->add_option("--samples", o.samples, "samples per cluster")->check(CLI::PositiveNumber);
  rel_cmd->add_option("--seed", o.seed, "random seed")->required();
  rel_cmd->add_option("--field", o.field, "p (prime field) or Q")->check(CLI::IsMember({"p", "Q"}));

  auto* classify_cmd = add("classify-lattice", "Dynkin type and definiteness of a curve configuration",
                           cmd_classify_lattice);
  file(classify_cmd, "--in", o.in, "lattice JSON");

  auto* star_cmd = add("check-star", "Test condition (*) on the unmarked curves", cmd_check_star);
  file(star_cmd, "--in", o.in, "lattice JSON");
  star_cmd->add_option("--marked", o.marked, "comma-separated marked vertex ids");

  auto* duval_cmd = add("duval", "Du Val chain pullback coefficients", cmd_duval);
  duval_cmd->add_option("--kprime", o.kprime, "chain length")->required();

  auto* cor_cmd = add("corollary-case", "Maximal configuration of a center-exclusion case", cmd_corollary_case);
  cor_cmd->add_option("--label", o.label, "case label, or all");
  cor_cmd->add_option("--jobs", o.jobs, "worker threads")->check(CLI::PositiveNumber);

  auto* quartic_cmd = add("analyze-quartic", "Verify a configuration against a quartic equation",
                          cmd_analyze_quartic);
  file(quartic_cmd, "--equation", o.equation, "quartic JSON");
  file(quartic_cmd, "--config", o.config, "configuration JSON");
  file(quartic_cmd, "--coords", o.coords, "coordinates JSON");

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kSuccess : kInputError;
  }

  for (const auto& [sub, handler] : commands) {
    if (!sub->parsed()) continue;
    Inputs inputs;
    json doc;
    Outcome result;
    std::string error;
    try {
      result = handler(inputs, o);
    } catch (const Error& e) {
      error = e.what();
    } catch (const nlohmann::json::exception& e) {
      error = std::string("malformed input: ") + e.what();
    }
    json manifest = {{"subcommand", sub->get_name()},
                     {"inputs", inputs.digests()},
                     {"seed", sub->get_name() == "verify-relations" ? json(o.seed) : json(nullptr)},
                     {"version", QUARTIC_VERSION}};
    if (!error.empty()) {
      manifest["status"] = "error";
      doc = {{"manifest", manifest}, {"error", error}};
      out << doc.dump(2) << '\n';
      err << "quartic-bir " << sub->get_name() << ": " << error << '\n';
      return kInputError;
    }
    manifest["status"] = result.status;
    doc = {{"manifest", manifest}, {"result", result.result}};
    out << doc.dump(2) << '\n';
    if (result.code != kSuccess) err << "quartic-bir " << sub->get_name() << ": " << result.status << '\n';
    return result.code;
  }
  return kInputError;
}

}  // namespace quartic::cli
