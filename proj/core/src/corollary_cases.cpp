#include <algorithm>
#include <sstream>

#include "quartic/errors.hpp"
#include "quartic/lattice.hpp"

namespace quartic {
namespace {

struct RawCase {
  const char* label;
  const char* description;
  const char* vertices;
  const char* edges;
  std::vector<std::string> expected;
};

// Maximal dual graphs of the curves G on the resolved general hyperplane
// section. E* are exceptional curves, other names are proper transforms of lines/conics/cubics.
const std::vector<RawCase>& raw_cases() {
  static const std::vector<RawCase> table{
      // three point centers P1, P2, P3; residual line L in the plane <P1,P2,P3>
      {"3pts-residual-equals-side", "L = L12: A2 at P1, P2, A1 at P3 and at one more point of L12",
       "L12 E_P L13 L23", "L12-E_P", {"A1", "A1", "A2"}},
      {"3pts-residual-through-vertex-singular", "L through P1, X singular at L cap L23",
       "L E_P L23 L12 L13", "L-E_P E_P-L23", {"A1", "A1", "A3"}},
      {"3pts-residual-through-vertex-smooth", "L through P1, X smooth at L cap L23",
       "L L23 L12 L13", "L-L23", {"A1", "A1", "A2"}},
      {"3pts-generic-residual-line", "L through no P_i, A1 at the three points L cap L_ij",
       "L E12 E13 E23 L12 L13 L23", "L-E12 E12-L12 L-E13 E13-L13 L-E23 E23-L23", {"E6^(1)"}},

      // two line centers L1, L2 meeting at P; residual conic Q
      {"2lines-irreducible-conic-through-P", "Q irreducible through P: A2 at P, two A1 on Q",
       "Q E_P1 E_P2 E_1 E_2", "Q-E_P1 E_P1-E_P2 Q-E_1 Q-E_2", {"D5"}},
      {"2lines-irreducible-conic-avoiding-P", "Q irreducible avoiding P: four A1 on Q",
       "Q E_1 E_2 E_3 E_4", "Q-E_1 Q-E_2 Q-E_3 Q-E_4", {"D4^(1)"}},
      {"2lines-two-lines-meeting-off-singular", "Q = L3 + L4 avoiding P, L3 cap L4 off L1, L2 and singular",
       "L3 L4 E_34 E_31 E_32 E_41 E_42", "L3-E_34 E_34-L4 L3-E_31 L3-E_32 L4-E_41 L4-E_42", {"D6^(1)"}},
      {"2lines-two-lines-meeting-off-smooth", "Q = L3 + L4 avoiding P, L3 cap L4 off L1, L2 and smooth",
       "L3 L4 E_31 E_32 E_41 E_42", "L3-L4 L3-E_31 L3-E_32 L4-E_41 L4-E_42", {"D5^(1)"}},
      {"2lines-two-lines-meeting-on-L1", "Q = L3 + L4 avoiding P, L3 cap L4 on L1 with A2 there",
       "E_1 E_2 L3 L4 E_32 E_42", "E_1-E_2 E_1-L3 E_1-L4 L3-E_32 L4-E_42", {"E6"}},
      {"2lines-one-line-through-P", "Q = L3 + L4 with L3 through P, A2 at P",
       "L4 E_41 E_42 E_34 L3 E_P1 E_P2", "L4-E_41 L4-E_42 L4-E_34 E_34-L3 L3-E_P1 E_P1-E_P2", {"D7"}},
      {"2lines-two-lines-through-P", "Q = L3 + L4 both through P, A3 at P",
       "E_P1 E_P2 E_P3 L3 L4", "E_P1-E_P2 E_P2-E_P3 E_P1-L3 E_P1-L4", {"D5"}},
      {"2lines-double-line-avoiding-P", "Q = 2L avoiding P: A2 at L cap L1 and L cap L2, A1 on L",
       "L E_0 E_11 E_12 E_21 E_22", "L-E_0 L-E_11 E_11-E_12 L-E_21 E_21-E_22", {"E6"}},
      {"2lines-double-line-through-P", "Q = 2L through P: A3 at P, two A1 on L",
       "L E_1 E_2 E_P1 E_P2 E_P3", "L-E_1 L-E_2 L-E_P1 E_P1-E_P2 E_P2-E_P3", {"D6"}},
      {"2lines-L1-plus-line-avoiding-P", "Q = L1 + L avoiding P: A2 at P and at L cap L1, A1 on L1",
       "E_P1 E_P2 L L1 E_11 E_12", "E_P1-E_P2 L-E_11 E_11-E_12 E_12-L1", {"A2", "A4"}},
      {"2lines-L1-plus-line-through-P", "Q = L1 + L through P: A3 at P",
       "L E_P1 E_P2 E_P3", "L-E_P1 E_P1-E_P2 E_P2-E_P3", {"A4"}},

      // a line center L and a point center P outside it; residual cubic C in <L, P>
      {"line-point-irreducible-cubic", "C irreducible cubic singular at P, three A1 on C",
       "C E_1 E_2 E_3", "C-E_1 C-E_2 C-E_3", {"D4"}},
      {"line-point-conic-plus-line", "C = Q + L1 with L1 through P",
       "Q E_1 E_2 E_QL L1 E_L1", "Q-E_1 Q-E_2 Q-E_QL E_QL-L1 L1-E_L1", {"D6"}},
      {"line-point-three-concurrent-lines", "C = L1 + L2 + L3 through P, A1 where each meets L",
       "L1 L2 L3 E_1 E_2 E_3", "L1-E_1 L2-E_2 L3-E_3", {"A2", "A2", "A2"}},
      {"line-point-L3-through-L-cap-L1", "C = L1 + L2 + L3, L1, L2 through P, L3 through L cap L1 with A2 there",
       "L3 E_3 E_23 E_11 E_12 L1 E_1", "L3-E_3 L3-E_23 L3-E_11 E_11-E_12 E_12-L1 L1-E_1", {"D7"}},
      {"line-point-L3-general", "C = L1 + L2 + L3, L1, L2 through P, L3 general",
       "L3 E_3 E_13 L1 E_1 E_23 L2 E_2", "L3-E_3 L3-E_13 E_13-L1 L1-E_1 L3-E_23 E_23-L2 L2-E_2", {"E7^(1)"}},
      {"line-point-double-line-plus-line", "C = 2L1 + L2, A2 at P1 = L cap L1",
       "L1 E_2 E_11 E_12 E_21 L2 E_22", "L1-E_2 L1-E_11 E_11-E_12 L1-E_21 E_21-L2 L2-E_22", {"E7"}},
      {"line-point-2L-plus-L1", "C = 2L + L1: two chains",
       "E_11 E_12 E_13 E_14 E_21 E_22 E_23 E_24", "E_11-E_12 E_12-E_13 E_13-E_14 E_21-E_22 E_22-E_23 E_23-E_24",
       {"A4", "A4"}},
      {"line-point-2L1-plus-L", "C = 2L1 + L", "L1 E_1 E_2 E_3 E_4", "E_1-E_2 E_2-L1 L1-E_3 E_3-E_4", {"A5"}},
      {"line-point-triple-line", "C = 3L1", "L1 E_1 E_2 E_3 E_4 E_5",
       "E_1-E_2 E_2-E_3 E_3-L1 L1-E_4 E_4-E_5", {"A6"}},
  };
  return table;
}

CurveConfig build(const RawCase& r) {
  CurveConfig g;
  std::istringstream vs(r.vertices);
  for (std::string v; vs >> v;) g.vertices.push_back({v, -2});
  std::istringstream es(r.edges);
  for (std::string e; es >> e;) {
    const auto dash = e.find('-');
    g.edges.push_back({e.substr(0, dash), e.substr(dash + 1), 1});
  }
  check_curve_config(g);
  return g;
}

}  // namespace

const std::vector<CorollaryCase>& corollary_cases() {
  static const std::vector<CorollaryCase> cases = [] {
    std::vector<CorollaryCase> out;
    for (const auto& r : raw_cases()) {
      std::vector<std::string> expected = r.expected;
      std::sort(expected.begin(), expected.end());
      out.push_back({r.label, r.description, build(r), std::move(expected)});
    }
    return out;
  }();
  return cases;
}

CorollaryResult corollary_case(const std::string& label) {
  for (const auto& c : corollary_cases()) {
    if (c.label != label) continue;
    CorollaryResult r{c, classify_dynkin(c.config), check_star(c.config, {}), false};
    std::vector<std::string> found;
    for (const auto& comp : r.found.components) found.push_back(comp.label);
    std::sort(found.begin(), found.end());
    r.type_matches = found == c.expected;
    return r;
  }
  throw InvalidInput("unknown corollary case " + label);
}

}  // namespace quartic
