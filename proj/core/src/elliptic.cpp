#include "quartic/elliptic.hpp"

#include <algorithm>
#include <functional>
#include <map>

#include "quartic/words.hpp"

namespace quartic {

bool RelationReport::ok() const {
  return std::all_of(checks.begin(), checks.end(), [](const RelationCheck& c) { return c.failures == 0; });
}

namespace {

template <class F>
struct Instance {
  const PlaneCubic<F>& curve;
  std::vector<CubicPoint<F>> sections;  // E_i in line order
  std::optional<CubicPoint<F>> line_section;  // E_L = -(E1 + E2) on a 2-node line

  CubicPoint<F> act(const QuarticIncidence& config, const LineMark& line, const Generator& g,
                    const CubicPoint<F>& x) const {
    if (const auto* p = std::get_if<PointGen>(&g)) {
      const auto i = static_cast<std::size_t>(std::find(line.points.begin(), line.points.end(), p->point) -
                                              line.points.begin());
      return curve.galois(sections[i], x);
    }
    if (std::holds_alternative<LineGen>(g)) {
      if (line.points.size() == 1) return curve.reflection(sections[0], x);
      return curve.galois(*line_section, x);
    }
    if (std::holds_alternative<PairGen>(g)) return curve.reflection(*line_section, x);
    (void)config;
    throw InvalidInput("automorphism letter in a cluster word");
  }

  CubicPoint<F> act_word(const QuarticIncidence& config, const LineMark& line, const Word& w,
                         CubicPoint<F> x) const {
    for (auto it = w.rbegin(); it != w.rend(); ++it) x = act(config, line, *it, x);
    return x;
  }

  CubicPoint<F> predicted(const ClusterElement& e, const CubicPoint<F>& x) const {
    CubicPoint<F> acc = e.parity == 1 ? normalize(x) : curve.neg(x);
    for (std::size_t i = 0; i < e.translation.size(); ++i)
      acc = curve.add(acc, curve.scalar(e.translation[i].get_si(), sections[i]));
    return acc;
  }
};

template <class F, class Sampler, class PointSampler>
void run(const QuarticIncidence& config, std::size_t samples, std::mt19937_64& rng, std::size_t max_word,
         Sampler&& new_curve, PointSampler&& new_point, RelationReport& report) {
  for (const auto& cl : clusters(config)) {
    const LineMark& line = *config.find_line(cl.line);
    if (line.eckardt) continue;
    if (std::any_of(line.points.begin(), line.points.end(),
                    [&](const std::string& p) { return config.find_point(p)->eckardt; }))
      continue;
    const std::string shape = std::to_string(line.points.size()) + "-node line";
    std::map<std::string, RelationCheck> checks;
    auto record = [&](const std::string& name, bool pass) {
      auto& c = checks.try_emplace(name, RelationCheck{cl.line, shape, name, 0, 0}).first->second;
      ++c.samples;
      if (!pass) ++c.failures;
    };
    const auto letters = [&] {
      auto l = cluster_letters(config, cl.line);
      if (line.points.size() == 2) l.push_back(PairGen{line.points[0], line.points[1], line.id});
      return l;
    }();
    std::uniform_int_distribution<std::size_t> pick(0, letters.size() - 1);
    std::uniform_int_distribution<std::size_t> length(1, max_word);

    for (std::size_t s = 0; s < samples; ++s) {
      auto sampled = new_curve(rng);
      const PlaneCubic<F>& c = sampled.curve;
      Instance<F> inst{c, {}, std::nullopt};
      const std::size_t free_sections = std::min<std::size_t>(line.points.size(), 2);
      for (std::size_t i = 0; i < free_sections; ++i) inst.sections.push_back(new_point(sampled, rng));
      if (line.points.size() >= 2) {
        const auto third = c.third_intersection(inst.sections[0], inst.sections[1]);
        if (line.points.size() == 3)
          inst.sections.push_back(third);
        else
          inst.line_section = third;
      }
      const auto x = new_point(sampled, rng);
      auto eval = [&](const Word& w) { return inst.act_word(config, line, w, x); };
      const auto nx = normalize(x);

      for (const auto& g : letters) record("involution " + to_string(g), eval({g, g}) == nx);
      record("galois equals chord", c.galois(inst.sections[0], x) == c.third_intersection(inst.sections[0], x));
      record("reflection equals 2p - x",
             c.reflection(inst.sections[0], x) == c.sub(c.add(inst.sections[0], inst.sections[0]), x));

      const auto& pts = line.points;
      if (pts.size() == 3) {
        const Word w{PointGen{pts[0]}, PointGen{pts[1]}, PointGen{pts[2]}};
        Word sq = w;
        sq.insert(sq.end(), w.begin(), w.end());
        record("(tau_P1 tau_P2 tau_P3)^2 = id", eval(sq) == nx);
        const auto would_be_line = c.add(c.add(inst.sections[0], inst.sections[1]), c.neg(x));
        record("tau_L coincides with tau_P3", would_be_line == c.galois(inst.sections[2], x));
      } else if (pts.size() == 2) {
        const Word w{PointGen{pts[0]}, PointGen{pts[1]}, LineGen{line.id}};
        Word sq = w;
        sq.insert(sq.end(), w.begin(), w.end());
        record("(tau_P1 tau_P2 tau_L)^2 = id", eval(sq) == nx);
        record("tau_P1P2 = tau_P1 tau_L tau_P2",
               eval({PairGen{pts[0], pts[1], line.id}}) == eval({PointGen{pts[0]}, LineGen{line.id}, PointGen{pts[1]}}));
      }

      Word random_word;
      const std::size_t len = length(rng);
      for (std::size_t i = 0; i < len; ++i) random_word.push_back(letters[pick(rng)]);
      const ClusterElement e = cluster_normal_form(config, cl.line, random_word);
      record("reflection model", eval(random_word) == inst.predicted(e, x));
    }
    for (auto& [name, c] : checks) report.checks.push_back(std::move(c));
  }
}

}  // namespace

RelationReport verify_relations(const QuarticIncidence& config, std::size_t samples, std::uint64_t seed,
                                FieldChoice field) {
  require_valid(config);
  std::mt19937_64 rng(seed);
  RelationReport report;
  if (field == FieldChoice::prime) {
    using F = DefaultField;
    report.field = "F_" + std::to_string(kDefaultPrime);
    run<F>(
        config, samples, rng, 8, [](std::mt19937_64& r) { return sample_curve<kDefaultPrime>(r); },
        [](const SampledCurve<F>& s, std::mt19937_64& r) { return random_point(s, r); }, report);
  } else {
    report.field = "Q";
    run<Rational>(
        config, samples, rng, 4, [](std::mt19937_64& r) { return sample_rational_curve(r); },
        [](const SampledCurve<Rational>& s, std::mt19937_64& r) { return random_point(s, r); }, report);
  }
  return report;
}

}  // namespace quartic
