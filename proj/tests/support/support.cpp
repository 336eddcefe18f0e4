#include "support.hpp"

#include <algorithm>
#include <functional>
#include <set>
#include <unordered_set>

#include "quartic/degree.hpp"
#include "quartic/errors.hpp"
#include "quartic/words.hpp"

namespace quartic::testing {

QuarticIncidence make_config(const std::vector<std::pair<std::string, bool>>& points,
                             const std::vector<std::tuple<std::string, std::vector<std::string>, bool>>& lines) {
  std::vector<SingularPoint> ps;
  for (const auto& [id, e] : points) ps.push_back({id, e});
  std::vector<LineMark> ls;
  for (const auto& [id, pts, e] : lines) ls.push_back({id, pts, e});
  return QuarticIncidence(std::move(ps), std::move(ls));
}

namespace {

std::string point_name(std::size_t i) { return "P" + std::to_string(i + 1); }

unsigned permute_mask(unsigned mask, const std::vector<std::size_t>& perm) {
  unsigned out = 0;
  for (std::size_t i = 0; i < perm.size(); ++i)
    if (mask & (1u << i)) out |= 1u << perm[i];
  return out;
}

std::uint64_t config_code(std::size_t n, unsigned point_flags, const std::vector<unsigned>& line_codes) {
  std::vector<std::size_t> perm(n);
  for (std::size_t i = 0; i < n; ++i) perm[i] = i;
  std::uint64_t best = ~0ULL;
  do {
    std::vector<unsigned> ls;
    for (unsigned c : line_codes) ls.push_back((permute_mask(c >> 1, perm) << 1) | (c & 1));
    std::sort(ls.begin(), ls.end());
    std::uint64_t code = n;
    code = (code << 4) | permute_mask(point_flags, perm);
    for (unsigned c : ls) code = (code << 5) | c;
    code = (code << 3) | ls.size();
    best = std::min(best, code);
  } while (std::next_permutation(perm.begin(), perm.end()));
  return best;
}

}  // namespace

std::vector<QuarticIncidence> all_small_configs(std::size_t max_points, std::size_t max_lines) {
  std::vector<QuarticIncidence> out;
  std::unordered_set<std::uint64_t> seen;
  for (std::size_t n = 1; n <= max_points; ++n) {
    std::vector<unsigned> subsets;
    for (unsigned m = 1; m < (1u << n); ++m)
      if (__builtin_popcount(m) <= 3) subsets.push_back(m);
    std::vector<std::size_t> chosen;
    std::function<void(std::size_t)> grow = [&](std::size_t from) {
      if (!chosen.empty()) {
        bool ok = true;
        for (std::size_t i = 0; i < chosen.size() && ok; ++i)
          for (std::size_t j = i + 1; j < chosen.size() && ok; ++j)
            ok = __builtin_popcount(subsets[chosen[i]] & subsets[chosen[j]]) <= 1;
        if (!ok) return;
        const std::size_t m = chosen.size();
        for (unsigned lf = 0; lf < (1u << m); ++lf) {
          for (unsigned pf = 0; pf < (1u << n); ++pf) {
            std::vector<unsigned> codes;
            for (std::size_t i = 0; i < m; ++i) codes.push_back((subsets[chosen[i]] << 1) | ((lf >> i) & 1));
            if (!seen.insert(config_code(n, pf, codes)).second) continue;
            std::vector<SingularPoint> ps;
            for (std::size_t i = 0; i < n; ++i) ps.push_back({point_name(i), bool((pf >> i) & 1)});
            std::vector<LineMark> ls;
            for (std::size_t i = 0; i < m; ++i) {
              LineMark l{"L" + std::to_string(i + 1), {}, bool((lf >> i) & 1)};
              for (std::size_t b = 0; b < n; ++b)
                if (subsets[chosen[i]] & (1u << b)) l.points.push_back(point_name(b));
              ls.push_back(std::move(l));
            }
            QuarticIncidence c(std::move(ps), std::move(ls));
            if (validate(c).empty()) out.push_back(std::move(c));
          }
        }
      }
      if (chosen.size() == max_lines) return;
      for (std::size_t s = from; s < subsets.size(); ++s) {
        chosen.push_back(s);
        grow(s);
        chosen.pop_back();
      }
    };
    grow(0);
  }
  return out;
}

QuarticIncidence random_config(Rng& rng) {
  std::uniform_int_distribution<std::size_t> count(1, 4);
  std::bernoulli_distribution rare(0.1);
  while (true) {
    const std::size_t n = count(rng), m = count(rng);
    std::vector<SingularPoint> ps;
    for (std::size_t i = 0; i < n; ++i) ps.push_back({point_name(i), rare(rng)});
    std::vector<LineMark> ls;
    std::uniform_int_distribution<unsigned> mask(1, (1u << n) - 1);
    for (std::size_t i = 0; i < m; ++i) {
      unsigned s = mask(rng);
      while (__builtin_popcount(s) > 3) s = mask(rng);
      LineMark l{"L" + std::to_string(i + 1), {}, rare(rng)};
      for (std::size_t b = 0; b < n; ++b)
        if (s & (1u << b)) l.points.push_back(point_name(b));
      std::shuffle(l.points.begin(), l.points.end(), rng);
      ls.push_back(std::move(l));
    }
    QuarticIncidence c(std::move(ps), std::move(ls));
    if (validate(c).empty()) return c;
  }
}

std::vector<Generator> involution_generators(const QuarticIncidence& config) {
  std::vector<Generator> candidates, out;
  for (const auto& p : config.points()) candidates.push_back(PointGen{p.id});
  for (const auto& l : config.lines()) {
    candidates.push_back(LineGen{l.id});
    if (l.points.size() == 2) candidates.push_back(PairGen{l.points[0], l.points[1], l.id});
  }
  for (const auto& g : candidates) {
    try {
      check_generator(config, g);
      out.push_back(g);
    } catch (const InvalidInput&) {
    }
  }
  return out;
}

Word random_admissible_word(const QuarticIncidence& config, std::size_t max_length, Rng& rng,
                            const std::optional<std::string>& line) {
  std::vector<Generator> letters = line ? cluster_letters(config, *line) : involution_generators(config);
  Word w;
  if (letters.empty()) return w;
  const std::size_t target = std::uniform_int_distribution<std::size_t>(1, max_length)(rng);
  DegreeVector v = DegreeVector::identity(config);
  while (w.size() < target) {
    std::shuffle(letters.begin(), letters.end(), rng);
    const Generator* pick = nullptr;
    for (const auto& g : letters) {
      if (!w.empty() && w.back() == g) continue;
      if (fully_known(config, g, v)) {
        pick = &g;
        break;
      }
    }
    if (!pick) break;
    v = apply(config, *pick, v);
    w.push_back(*pick);
  }
  return w;
}

CurveConfig graph_from_edges(std::size_t n, const std::vector<std::pair<std::size_t, std::size_t>>& edges) {
  CurveConfig g;
  for (std::size_t i = 0; i < n; ++i) g.vertices.push_back({"v" + std::to_string(i), -2});
  for (const auto& [a, b] : edges) g.edges.push_back({g.vertices[a].id, g.vertices[b].id, 1});
  return g;
}

namespace {

using Adjacency = std::vector<std::uint8_t>;

std::uint64_t canonical_code(const Adjacency& adj) {
  const std::size_t n = adj.size();
  std::vector<std::size_t> order(n);
  for (std::size_t i = 0; i < n; ++i) order[i] = i;
  auto deg = [&](std::size_t v) { return __builtin_popcount(adj[v]); };
  std::stable_sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) { return deg(a) > deg(b); });
  // Blocks of equal degree; only orderings inside blocks are tried.
  std::vector<std::pair<std::size_t, std::size_t>> blocks;
  for (std::size_t i = 0; i < n;) {
    std::size_t j = i;
    while (j < n && deg(order[j]) == deg(order[i])) ++j;
    blocks.emplace_back(i, j);
    i = j;
  }
  std::uint64_t best = ~0ULL;
  std::function<void(std::size_t)> rec = [&](std::size_t b) {
    if (b == blocks.size()) {
      std::uint64_t code = 0;
      for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = i + 1; j < n; ++j) code = (code << 1) | ((adj[order[i]] >> order[j]) & 1);
      best = std::min(best, code);
      return;
    }
    auto first = order.begin() + static_cast<long>(blocks[b].first);
    auto last = order.begin() + static_cast<long>(blocks[b].second);
    std::sort(first, last);
    do {
      rec(b + 1);
    } while (std::next_permutation(first, last));
  };
  rec(0);
  return best;
}

Adjacency extend(const Adjacency& adj, unsigned neighbours) {
  Adjacency out = adj;
  const std::size_t v = adj.size();
  out.push_back(static_cast<std::uint8_t>(neighbours));
  for (std::size_t i = 0; i < v; ++i)
    if (neighbours & (1u << i)) out[i] |= static_cast<std::uint8_t>(1u << v);
  return out;
}

CurveConfig to_config(const Adjacency& adj) {
  std::vector<std::pair<std::size_t, std::size_t>> edges;
  for (std::size_t i = 0; i < adj.size(); ++i)
    for (std::size_t j = i + 1; j < adj.size(); ++j)
      if ((adj[i] >> j) & 1) edges.emplace_back(i, j);
  return graph_from_edges(adj.size(), edges);
}

}  // namespace

std::vector<Adjacency> graph_classes(std::size_t n) {
  std::vector<Adjacency> level{Adjacency{}};
  for (std::size_t k = 1; k <= n; ++k) {
    std::vector<Adjacency> next;
    std::unordered_set<std::uint64_t> seen;
    for (const auto& g : level)
      for (unsigned s = 0; s < (1u << (k - 1)); ++s) {
        Adjacency h = extend(g, s);
        if (seen.insert(canonical_code(h)).second) next.push_back(std::move(h));
      }
    level = std::move(next);
  }
  return level;
}

std::vector<CurveConfig> exhaustive_graphs(std::size_t max_n) {
  std::vector<CurveConfig> out;
  for (std::size_t n = 1; n < max_n; ++n)
    for (const auto& g : graph_classes(n)) out.push_back(to_config(g));
  for (const auto& g : graph_classes(max_n - 1))
    for (unsigned s = 0; s < (1u << (max_n - 1)); ++s) out.push_back(to_config(extend(g, s)));
  return out;
}

}  // namespace quartic::testing
