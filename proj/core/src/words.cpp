#include "quartic/words.hpp"

#include <algorithm>
#include <deque>
#include <set>
#include <utility>

#include "quartic/degree.hpp"
#include "quartic/errors.hpp"

namespace quartic {

Word free_reduce(const Word& w) {
  Word out;
  for (const auto& g : w) {
    if (!out.empty()) {
      const Generator& top = out.back();
      const bool cancels = is_involution(g) ? top == g : top == inverse(g);
      if (cancels) {
        out.pop_back();
        continue;
      }
    }
    out.push_back(g);
  }
  return out;
}

Word expand_pairs(const Word& w) {
  Word out;
  for (const auto& g : w) {
    if (const auto* p = std::get_if<PairGen>(&g)) {
      out.push_back(PointGen{p->p1});
      out.push_back(LineGen{p->line});
      out.push_back(PointGen{p->p2});
    } else {
      out.push_back(g);
    }
  }
  return out;
}

bool ClusterElement::is_identity() const {
  return parity == 1 && std::all_of(translation.begin(), translation.end(), [](const Integer& x) { return x == 0; });
}

namespace {

const LineMark& line_of(const QuarticIncidence& config, const std::string& line) {
  const LineMark* l = config.find_line(line);
  if (!l) throw InvalidInput("unknown line " + line);
  return *l;
}

void reduce(ClusterElement& e) {
  if (e.translation.size() == 3) {
    const Integer shift = e.translation[2];
    for (auto& x : e.translation) x -= shift;
  }
}

std::size_t point_index(const LineMark& l, const std::string& p) {
  return static_cast<std::size_t>(std::find(l.points.begin(), l.points.end(), p) - l.points.begin());
}

bool on(const LineMark& l, const std::string& p) {
  return std::find(l.points.begin(), l.points.end(), p) != l.points.end();
}

}  // namespace

ClusterElement cluster_identity(const QuarticIncidence& config, const std::string& line) {
  return ClusterElement{line, 1, std::vector<Integer>(line_of(config, line).points.size(), 0)};
}

ClusterElement multiply(const ClusterElement& a, const ClusterElement& b) {
  if (a.line != b.line || a.translation.size() != b.translation.size())
    throw InvalidInput("mixed-cluster word");
  ClusterElement out{a.line, a.parity * b.parity, a.translation};
  for (std::size_t i = 0; i < out.translation.size(); ++i) out.translation[i] += a.parity * b.translation[i];
  reduce(out);
  return out;
}

std::vector<Generator> cluster_letters(const QuarticIncidence& config, const std::string& line) {
  const LineMark& l = line_of(config, line);
  std::vector<Generator> out;
  for (const auto& p : l.points)
    if (!config.find_point(p)->eckardt) out.push_back(PointGen{p});
  if (!l.eckardt && l.points.size() <= 2) out.push_back(LineGen{l.id});
  return out;
}

bool attached(const QuarticIncidence& config, const std::string& line, const Generator& g) {
  const LineMark& l = line_of(config, line);
  if (const auto* p = std::get_if<PointGen>(&g)) {
    const SingularPoint* sp = config.find_point(p->point);
    return sp && !sp->eckardt && on(l, p->point);
  }
  if (const auto* lg = std::get_if<LineGen>(&g)) return lg->line == l.id && !l.eckardt && l.points.size() <= 2;
  if (const auto* pp = std::get_if<PairGen>(&g))
    return pp->line == l.id && !l.eckardt && l.points.size() == 2 && on(l, pp->p1) && on(l, pp->p2) && pp->p1 != pp->p2;
  return false;
}

ClusterElement letter_image(const QuarticIncidence& config, const std::string& line, const Generator& g) {
  if (!attached(config, line, g)) throw InvalidInput("mixed-cluster word");
  const LineMark& l = line_of(config, line);
  ClusterElement e = cluster_identity(config, line);
  e.parity = -1;
  if (const auto* p = std::get_if<PointGen>(&g)) {
    e.translation[point_index(l, p->point)] = -1;
  } else if (std::holds_alternative<LineGen>(g)) {
    if (l.points.size() == 1)
      e.translation[0] = 2;
    else
      e.translation = {1, 1};
  } else {
    e.translation = {-2, -2};
  }
  reduce(e);
  return e;
}

std::vector<std::string> supporting_clusters(const QuarticIncidence& config, const Word& w) {
  std::vector<std::string> out;
  for (const auto& l : config.lines()) {
    if (std::all_of(w.begin(), w.end(), [&](const Generator& g) { return attached(config, l.id, g); }))
      out.push_back(l.id);
  }
  return out;
}

ClusterElement cluster_normal_form(const QuarticIncidence& config, const std::string& line, const Word& w) {
  ClusterElement e = cluster_identity(config, line);
  for (const auto& g : w) e = multiply(e, letter_image(config, line, g));
  return e;
}

ClusterElement cluster_normal_form(const QuarticIncidence& config, const Word& w) {
  const auto lines = supporting_clusters(config, w);
  if (lines.empty()) throw InvalidInput("mixed-cluster word");
  return cluster_normal_form(config, lines.front(), w);
}

namespace {

using ElementKey = std::pair<int, std::vector<Integer>>;

ElementKey key_of(const ClusterElement& e) { return {e.parity, e.translation}; }

/// Breadth-first exploration of one cluster's Cayley graph, grown on demand.
class CayleyBall {
 public:
  CayleyBall(const QuarticIncidence& config, const std::string& line)
      : config_(config), line_(line), letters_(cluster_letters(config, line)) {
    const ClusterElement id = cluster_identity(config, line);
    words_.emplace(key_of(id), Word{});
    frontier_.push_back(id);
  }

  std::optional<Word> find(const ClusterElement& target, std::size_t max_length) {
    const ElementKey key = key_of(target);
    while (true) {
      if (auto it = words_.find(key); it != words_.end()) return it->second;
      if (radius_ >= max_length || frontier_.empty()) return std::nullopt;
      grow();
    }
  }

 private:
  void grow() {
    std::vector<ClusterElement> next;
    for (const auto& e : frontier_) {
      const Word& base = words_.at(key_of(e));
      for (const auto& g : letters_) {
        ClusterElement f = multiply(e, letter_image(config_, line_, g));
        auto [it, inserted] = words_.try_emplace(key_of(f));
        if (!inserted) continue;
        it->second = base;
        it->second.push_back(g);
        next.push_back(std::move(f));
      }
    }
    frontier_ = std::move(next);
    ++radius_;
  }

  const QuarticIncidence& config_;
  std::string line_;
  std::vector<Generator> letters_;
  std::map<ElementKey, Word> words_;
  std::vector<ClusterElement> frontier_;
  std::size_t radius_ = 0;
};

}  // namespace

Word shortest_cluster_word(const QuarticIncidence& config, const ClusterElement& target, std::size_t max_length) {
  CayleyBall ball(config, target.line);
  auto w = ball.find(target, max_length);
  if (!w) throw PreconditionError("element not reachable within the length bound");
  return *w;
}

AutSplit push_auts(const QuarticIncidence& config, const Word& w) {
  AutSplit out;
  for (const auto& g : w) {
    if (const auto* a = std::get_if<AutGen>(&g)) {
      const Automorphism inv = resolve_automorphism(config, AutGen{a->label, !a->inverse});
      for (auto& b : out.body) b = conjugate(inv, b);
      out.automorphisms.push_back(g);
    } else {
      out.body.push_back(g);
    }
  }
  return out;
}

bool split_presentation(const QuarticIncidence& config) {
  for (const auto& l : config.lines()) {
    if (l.points.size() == 2 && l.eckardt) return false;
    if (l.points.size() == 3)
      for (const auto& p : l.points)
        if (config.find_point(p)->eckardt) return false;
  }
  return true;
}

std::string to_string(Verdict v) {
  switch (v) {
    case Verdict::equal: return "equal";
    case Verdict::distinct: return "distinct";
    case Verdict::undecided: return "undecided";
  }
  return "undecided";
}

namespace {

std::string letter_key(const Generator& g) {
  if (const auto* p = std::get_if<PointGen>(&g)) return "P:" + p->point;
  if (const auto* l = std::get_if<LineGen>(&g)) return "L:" + l->line;
  return to_string(g);
}

std::set<std::string> odd_letters(const Word& body) {
  std::set<std::string> odd;
  for (const auto& g : body) {
    const auto k = letter_key(g);
    if (!odd.erase(k)) odd.insert(k);
  }
  return odd;
}

std::map<std::string, std::string> permutation_of(const QuarticIncidence& config, const Word& auts) {
  std::map<std::string, std::string> perm;
  for (const auto& id : config.coordinates()) {
    std::string z = id;
    for (auto it = auts.rbegin(); it != auts.rend(); ++it)
      z = resolve_automorphism(config, std::get<AutGen>(*it)).image(z);
    perm[id] = z;
  }
  return perm;
}

using Rows = std::map<std::string, std::map<std::string, Rational>>;

Rows known_rows(const QuarticIncidence& config, const Word& w) {
  const ActionMatrix m = compose(config, w);
  std::vector<std::string> all{kMuCoordinate};
  for (const auto& c : config.coordinates()) all.push_back(c);
  Rows rows;
  for (const auto& c : all) {
    if (m.untouched.count(c)) continue;
    if (!m.tracks(c)) {
      rows[c] = {{c, Rational(1)}};
      continue;
    }
    const std::size_t i = m.index(c);
    auto& row = rows[c];
    for (std::size_t j = 0; j < m.basis.size(); ++j)
      if (m.entries(i, j) != 0) row[m.basis[j]] = m.entries(i, j);
  }
  return rows;
}

std::optional<std::string> degree_mismatch(const QuarticIncidence& config, const Word& w1, const Word& w2) {
  Rows a, b;
  try {
    a = known_rows(config, w1);
    b = known_rows(config, w2);
  } catch (const InsufficientData&) {
    return std::nullopt;
  }
  for (const auto& [c, row] : a) {
    auto it = b.find(c);
    if (it != b.end() && it->second != row) return c;
  }
  return std::nullopt;
}

std::vector<std::set<std::string>> relation_triples(const QuarticIncidence& config) {
  std::vector<std::set<std::string>> out;
  for (const auto& l : config.lines()) {
    const bool eck = std::any_of(l.points.begin(), l.points.end(),
                                 [&](const std::string& p) { return config.find_point(p)->eckardt; });
    if (eck) continue;
    if (l.points.size() == 3) {
      out.push_back({"P:" + l.points[0], "P:" + l.points[1], "P:" + l.points[2]});
    } else if (l.points.size() == 2 && !l.eckardt) {
      out.push_back({"P:" + l.points[0], "P:" + l.points[1], "L:" + l.id});
    }
  }
  return out;
}

class Normalizer {
 public:
  Normalizer(const QuarticIncidence& config, bool exact) : config_(config), exact_(exact) {}

  Word operator()(Word w) {
    for (int round = 0; round < 64; ++round) {
      w = free_reduce(w);
      if (!exact_) return w;
      Word next = canonical_segments(w);
      if (next == w) return w;
      w = std::move(next);
    }
    return w;
  }

 private:
  Word canonical_segments(const Word& w) {
    Word out;
    std::size_t i = 0;
    while (i < w.size()) {
      std::size_t j = i + 1;
      std::vector<std::string> support = supporting_clusters(config_, Word(w.begin() + i, w.begin() + j));
      while (j < w.size()) {
        auto s = supporting_clusters(config_, Word(w.begin() + i, w.begin() + j + 1));
        if (s.empty()) break;
        support = std::move(s);
        ++j;
      }
      Word segment(w.begin() + i, w.begin() + j);
      if (!support.empty() && segment.size() > 1) {
        const ClusterElement e = cluster_normal_form(config_, support.front(), segment);
        auto& ball = balls_.try_emplace(support.front(), config_, support.front()).first->second;
        if (auto shortest = ball.find(e, segment.size())) segment = *shortest;
      }
      out.insert(out.end(), segment.begin(), segment.end());
      i = j;
    }
    return out;
  }

  const QuarticIncidence& config_;
  bool exact_;
  std::map<std::string, CayleyBall> balls_;
};

}  // namespace

EqualityResult equal(const QuarticIncidence& config, const Word& w1, const Word& w2, std::size_t budget) {
  require_valid(config);
  for (const auto* w : {&w1, &w2})
    for (const auto& g : *w) check_generator(config, g);

  const bool exact = split_presentation(config);
  AutSplit s1 = push_auts(config, w1);
  AutSplit s2 = push_auts(config, w2);
  const Word a1 = free_reduce(s1.automorphisms);
  const Word a2 = free_reduce(s2.automorphisms);
  Normalizer normalize(config, exact);
  const Word b1 = normalize(expand_pairs(s1.body));
  const Word b2 = normalize(expand_pairs(s2.body));

  if (a1 == a2 && b1 == b2) return {Verdict::equal, "identical normal words", 0};

  if (exact) {
    if (permutation_of(config, a1) != permutation_of(config, a2))
      return {Verdict::distinct, "automorphism parts differ", 0};
    if (odd_letters(b1) != odd_letters(b2)) return {Verdict::distinct, "letter parities differ", 0};
    for (const auto& l : config.lines()) {
      auto project = [&](const Word& b) {
        Word p;
        for (const auto& g : b)
          if (attached(config, l.id, g)) p.push_back(g);
        return cluster_normal_form(config, l.id, p);
      };
      if (project(b1) != project(b2)) return {Verdict::distinct, "cluster " + l.id + " elements differ", 0};
    }
  }
  if (auto c = degree_mismatch(config, w1, w2)) return {Verdict::distinct, "degree action differs at " + *c, 0};
  if (a1 != a2) return {Verdict::undecided, "automorphism parts not comparable", 0};

  Word start = b1;
  for (auto it = b2.rbegin(); it != b2.rend(); ++it) start.push_back(*it);
  start = normalize(start);

  const auto triples = relation_triples(config);
  std::deque<Word> queue{start};
  std::set<std::string> seen{to_string(start)};
  std::size_t explored = 0;
  while (!queue.empty() && explored < budget) {
    Word cur = std::move(queue.front());
    queue.pop_front();
    ++explored;
    if (cur.empty()) return {Verdict::equal, "rewrites to the empty word", explored};
    if (exact) {
      const auto support = supporting_clusters(config, cur);
      if (!support.empty()) {
        const bool id = cluster_normal_form(config, support.front(), cur).is_identity();
        return {id ? Verdict::equal : Verdict::distinct, "single cluster " + support.front(), explored};
      }
    }
    for (std::size_t i = 0; i + 2 < cur.size(); ++i) {
      const std::set<std::string> letters{letter_key(cur[i]), letter_key(cur[i + 1]), letter_key(cur[i + 2])};
      if (letters.size() != 3 || std::find(triples.begin(), triples.end(), letters) == triples.end()) continue;
      Word next = cur;
      std::swap(next[i], next[i + 2]);
      next = normalize(next);
      if (seen.insert(to_string(next)).second) queue.push_back(std::move(next));
    }
  }
  return {Verdict::undecided, "rewrite budget exhausted", explored};
}

}  // namespace quartic
