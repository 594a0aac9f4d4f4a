#include "minci/blocks.hpp"

#include <initializer_list>

namespace minci {

namespace {

struct StateSpec {
  std::vector<BasisTerm> determinants;
  const char *energy;
};

SymmetryBlock make_block(int electrons, const char *label,
                         std::initializer_list<StateSpec> states,
                         const char *cross = nullptr) {
  SymmetryBlock b;
  b.electrons = electrons;
  b.label = SymmetryLabel::parse(label);
  for (const StateSpec &s : states) {
    b.basis.push_back(BasisState{s.determinants});
    b.diagonal.push_back(SymbolicEnergy::parse(s.energy));
  }
  if (cross != nullptr) {
    b.cross = SymbolicEnergy::parse(cross);
  }
  return b;
}

std::map<int, std::vector<SymmetryBlock>> build() {
  std::map<int, std::vector<SymmetryBlock>> t;

  // Li
  t[3] = {
      make_block(3, "2S",
                 {{{{1, "1 1b 2"}}, "2(1|1) + (2|2) + (11|11) + 2(11|22) - (12|21)"}}),
      make_block(3, "2Po",
                 {{{{1, "1 1b 3"}}, "2(1|1) + (3|3) + (11|11) + 2(11|33) - (13|31)"}}),
  };

  // Be
  t[4] = {
      make_block(4, "1S",
                 {{{{1, "1 1b 2 2b"}},
                   "2(1|1) + 2(2|2) + (11|11) + 4(11|22) - 2(12|21) + (22|22)"},
                  {{{1, "1 1b 3 3b"}, {1, "1 1b 4 4b"}, {1, "1 1b 5 5b"}},
                   "2(1|1) + 2(3|3) + (11|11) + 4(11|33) - 2(13|31) + (33|33) + 2(34|43)"}},
                 "√3(23|32)"),
      make_block(4, "1Po",
                 {{{{1, "1 1b 2 3b"}, {-1, "1 1b 2b 3"}},
                   "2(1|1) + (2|2) + (3|3) + (11|11) + 2(11|22) - (12|21) + 2(11|33)"
                   " - (13|31) + (22|33) + (23|32)"}}),
      make_block(4, "3Po",
                 {{{{1, "1 1b 2 3"}},
                   "2(1|1) + (2|2) + (3|3) + (11|11) + 2(11|22) - (12|21) + 2(11|33)"
                   " - (13|31) + (22|33) - (23|32)"}}),
      make_block(4, "3P",
                 {{{{1, "1 1b 4 5"}},
                   "2(1|1) + 2(3|3) + (11|11) + 4(11|33) - 2(13|31) + (33|44) - (34|43)"}}),
      make_block(4, "1D",
                 {{{{2, "1 1b 3 3b"}, {-1, "1 1b 4 4b"}, {-1, "1 1b 5 5b"}},
                   "2(1|1) + 2(3|3) + (11|11) + 4(11|33) - 2(13|31) + (33|33) - (34|43)"}}),
  };

  // B
  t[5] = {
      make_block(5, "2S",
                 {{{{1, "1 1b 2 3 3b"}, {1, "1 1b 2 4 4b"}, {1, "1 1b 2 5 5b"}},
                   "2(1|1) + (2|2) + 2(3|3) + (11|11) + 2(11|22) - (12|21) + 4(11|33)"
                   " - 2(13|31) + 2(22|33) - (23|32) + (33|33) + 2(34|43)"}}),
      make_block(5, "4So",
                 {{{{1, "1 1b 3 4 5"}},
                   "2(1|1) + 3(3|3) + (11|11) + 6(11|33) - 3(13|31) + 3(33|44) - 3(34|43)"}}),
      make_block(5, "2Po",
                 {{{{1, "1 1b 2 2b 3"}},
                   "2(1|1) + 2(2|2) + (3|3) + (11|11) + 4(11|22) - 2(12|21) + 2(11|33)"
                   " - (13|31) + (22|22) + 2(22|33) - (23|32)"},
                  {{{1, "1 1b 3 4 4b"}, {1, "1 1b 3 5 5b"}},
                   "2(1|1) + 3(3|3) + (11|11) + 6(11|33) - 3(13|31) + (33|33) + 2(33|44)"}},
                 "√2(23|32)"),
      make_block(5, "2P",
                 {{{{2, "1 1b 2b 4 5"}, {-1, "1 1b 2 4b 5"}, {-1, "1 1b 2 4 5b"}},
                   "2(1|1) + (2|2) + 2(3|3) + (11|11) + 2(11|22) - (12|21) + 4(11|33)"
                   " - 2(13|31) + 2(22|33) + (23|32) + (33|44) - (34|43)"}}),
      make_block(5, "4P",
                 {{{{1, "1 1b 2 4 5"}},
                   "2(1|1) + (2|2) + 2(3|3) + (11|11) + 2(11|22) - (12|21) + 4(11|33)"
                   " - 2(13|31) + 2(22|33) - 2(23|32) + (33|44) - (34|43)"}}),
      make_block(5, "2D",
                 {{{{2, "1 1b 2 3 3b"}, {-1, "1 1b 2 4 4b"}, {-1, "1 1b 2 5 5b"}},
                   "2(1|1) + (2|2) + 2(3|3) + (11|11) + 2(11|22) - (12|21) + 4(11|33)"
                   " - 2(13|31) + 2(22|33) - (23|32) + (33|33) - (34|43)"}}),
      make_block(5, "2Do",
                 {{{{2, "1 1b 3b 4 5"}, {-1, "1 1b 3 4b 5"}, {-1, "1 1b 3 4 5b"}},
                   "2(1|1) + 3(3|3) + (11|11) + 6(11|33) - 3(13|31) + 3(33|44)"}}),
  };

  // C
  t[6] = {
      make_block(6, "1S",
                 {{{{1, "1 1b 2 2b 3 3b"}, {1, "1 1b 2 2b 4 4b"}, {1, "1 1b 2 2b 5 5b"}},
                   "2(1|1) + 2(2|2) + 2(3|3) + (11|11) + 4(11|22) - 2(12|21) + 4(11|33)"
                   " - 2(13|31) + (22|22) + 4(22|33) - 2(23|32) + (33|33) + 2(34|43)"},
                  {{{1, "1 1b 3 3b 4 4b"}, {1, "1 1b 3 3b 5 5b"}, {1, "1 1b 4 4b 5 5b"}},
                   "2(1|1) + 4(3|3) + (11|11) + 8(11|33) - 4(13|31) + 2(33|33) + 4(33|44)"}},
                 "2(23|32)"),
      make_block(6, "3So",
                 {{{{3, "1 1b 2b 3 4 5"},
                    {-1, "1 1b 2 3b 4 5"},
                    {-1, "1 1b 2 3 4b 5"},
                    {-1, "1 1b 2 3 4 5b"}},
                   "2(1|1) + (2|2) + 3(3|3) + (11|11) + 2(11|22) - (12|21) + 6(11|33)"
                   " - 3(13|31) + 3(22|33) + (23|32) + 3(33|44) - 3(34|43)"}}),
      make_block(6, "5So",
                 {{{{1, "1 1b 2 3 4 5"}},
                   "2(1|1) + (2|2) + 3(3|3) + (11|11) + 2(11|22) - (12|21) + 6(11|33)"
                   " - 3(13|31) + 3(22|33) - 3(23|32) + 3(33|44) - 3(34|43)"}}),
      make_block(6, "1Po",
                 {{{{1, "1 1b 2 3b 4 4b"},
                    {-1, "1 1b 2b 3 4 4b"},
                    {1, "1 1b 2 3b 5 5b"},
                    {-1, "1 1b 2b 3 5 5b"}},
                   "2(1|1) + (2|2) + 3(3|3) + (11|11) + 2(11|22) - (12|21) + 6(11|33)"
                   " - 3(13|31) + 3(22|33) + (33|33) + 2(33|44)"}}),
      make_block(6, "3P",
                 {{{{1, "1 1b 2 2b 4 5"}},
                   "2(1|1) + 2(2|2) + 2(3|3) + (11|11) + 4(11|22) - 2(12|21) + 4(11|33)"
                   " - 2(13|31) + (22|22) + 4(22|33) - 2(23|32) + (33|44) - (34|43)"},
                  {{{1, "1 1b 3 3b 4 5"}},
                   "2(1|1) + 4(3|3) + (11|11) + 8(11|33) - 4(13|31) + (33|33) + 5(33|44)"
                   " - 3(34|43)"}},
                 "(23|32)"),
      make_block(6, "3Po",
                 {{{{1, "1 1b 2 3 4 4b"}, {1, "1 1b 2 3 5 5b"}},
                   "2(1|1) + (2|2) + 3(3|3) + (11|11) + 2(11|22) - (12|21) + 6(11|33)"
                   " - 3(13|31) + 3(22|33) - 2(23|32) + (33|33) + 2(33|44)"}}),
      make_block(6, "1D",
                 {{{{2, "1 1b 2 2b 3 3b"}, {-1, "1 1b 2 2b 4 4b"}, {-1, "1 1b 2 2b 5 5b"}},
                   "2(1|1) + 2(2|2) + 2(3|3) + (11|11) + 4(11|22) - 2(12|21) + 4(11|33)"
                   " - 2(13|31) + (22|22) + 4(22|33) - 2(23|32) + (33|33) - (34|43)"},
                  {{{2, "1 1b 4 4b 5 5b"}, {-1, "1 1b 3 3b 4 4b"}, {-1, "1 1b 3 3b 5 5b"}},
                   "2(1|1) + 4(3|3) + (11|11) + 8(11|33) - 4(13|31) + 2(33|33) + 4(33|44)"
                   " - 3(34|43)"}},
                 "-(23|32)"),
      make_block(6, "1Do",
                 {{{{2, "1 1b 2 3 4b 5b"},
                    {-1, "1 1b 2 3b 4 5b"},
                    {-1, "1 1b 2 3b 4b 5"},
                    {2, "1 1b 2b 3b 4 5"},
                    {-1, "1 1b 2b 3 4 5b"},
                    {-1, "1 1b 2b 3 4b 5"}},
                   "2(1|1) + (2|2) + 3(3|3) + (11|11) + 2(11|22) - (12|21) + 6(11|33)"
                   " - 3(13|31) + 3(22|33) + 3(33|44)"}}),
      make_block(6, "3Do",
                 {{{{2, "1 1b 2 3b 4 5"}, {-1, "1 1b 2 3 4 5b"}, {-1, "1 1b 2 3 4b 5"}},
                   "2(1|1) + (2|2) + 3(3|3) + (11|11) + 2(11|22) - (12|21) + 6(11|33)"
                   " - 3(13|31) + 3(22|33) - 2(23|32) + 3(33|44)"}}),
  };

  // N
  t[7] = {
      make_block(7, "2S",
                 {{{{1, "1 1b 2 3 3b 4 4b"}, {1, "1 1b 2 3 3b 5 5b"}, {1, "1 1b 2 4 4b 5 5b"}},
                   "2(1|1) + (2|2) + 4(3|3) + (11|11) + 2(11|22) - (12|21) + 8(11|33)"
                   " - 4(13|31) + 4(22|33) - 2(23|32) + 2(33|33) + 4(33|44)"}}),
      make_block(7, "4So",
                 {{{{1, "1 1b 2 2b 3 4 5"}},
                   "2(1|1) + 2(2|2) + 3(3|3) + (11|11) + 4(11|22) - 2(12|21) + 6(11|33)"
                   " - 3(13|31) + (22|22) + 6(22|33) - 3(23|32) + 3(33|44) - 3(34|43)"}}),
      make_block(7, "2Po",
                 {{{{1, "1 1b 2 2b 3 4 4b"}, {1, "1 1b 2 2b 3 5 5b"}},
                   "2(1|1) + 2(2|2) + 3(3|3) + (11|11) + 4(11|22) - 2(12|21) + 6(11|33)"
                   " - 3(13|31) + (22|22) + 6(22|33) - 3(23|32) + (33|33) + 2(33|44)"},
                  {{{1, "1 1b 3 4 4b 5 5b"}},
                   "2(1|1) + 5(3|3) + (11|11) + 10(11|33) - 5(13|31) + 2(33|33)"
                   " + 8(33|44) - 4(34|43)"}},
                 "√2(23|32)"),
      make_block(7, "2P",
                 {{{{2, "1 1b 2b 3 3b 4 5"}, {-1, "1 1b 2 3 3b 4b 5"}, {-1, "1 1b 2 3 3b 4 5b"}},
                   "2(1|1) + (2|2) + 4(3|3) + (11|11) + 2(11|22) - (12|21) + 8(11|33)"
                   " - 4(13|31) + 4(22|33) + (33|33) + 5(33|44) - 3(34|43)"}}),
      make_block(7, "4P",
                 {{{{1, "1 1b 2 3 3b 4 5"}},
                   "2(1|1) + (2|2) + 4(3|3) + (11|11) + 2(11|22) - (12|21) + 8(11|33)"
                   " - 4(13|31) + 4(22|33) - 3(23|32) + (33|33) + 5(33|44) - 3(34|43)"}}),
      make_block(7, "2Do",
                 {{{{2, "1 1b 2 2b 3b 4 5"}, {-1, "1 1b 2 2b 3 4 5b"}, {-1, "1 1b 2 2b 3 4b 5"}},
                   "2(1|1) + 2(2|2) + 3(3|3) + (11|11) + 4(11|22) - 2(12|21) + 6(11|33)"
                   " - 3(13|31) + (22|22) + 6(22|33) - 3(23|32) + 3(33|44)"}}),
      make_block(7, "2D",
                 {{{{2, "1 1b 2 4 4b 5 5b"}, {-1, "1 1b 2 3 3b 4 4b"}, {-1, "1 1b 2 3 3b 5 5b"}},
                   "2(1|1) + (2|2) + 4(3|3) + (11|11) + 2(11|22) - (12|21) + 8(11|33)"
                   " - 4(13|31) + 4(22|33) - 2(23|32) + 2(33|33) + 4(33|44) - 3(34|43)"}}),
  };

  // O
  t[8] = {
      make_block(8, "1S",
                 {{{{1, "1 1b 2 2b 3 3b 4 4b"},
                    {1, "1 1b 2 2b 3 3b 5 5b"},
                    {1, "1 1b 2 2b 4 4b 5 5b"}},
                   "2(1|1) + 2(2|2) + 4(3|3) + (11|11) + 4(11|22) - 2(12|21) + 8(11|33)"
                   " - 4(13|31) + (22|22) + 8(22|33) - 4(23|32) + 2(33|33) + 4(33|44)"},
                  {{{1, "1 1b 3 3b 4 4b 5 5b"}},
                   "2(1|1) + 6(3|3) + (11|11) + 12(11|33) - 6(13|31) + 3(33|33)"
                   " + 12(33|44) - 6(34|43)"}},
                 "√3(23|32)"),
      make_block(8, "1Po",
                 {{{{1, "1 1b 2 3b 4 4b 5 5b"}, {-1, "1 1b 2b 3 4 4b 5 5b"}},
                   "2(1|1) + (2|2) + 5(3|3) + (11|11) + 2(11|22) - (12|21) + 10(11|33)"
                   " - 5(13|31) + 5(22|33) - (23|32) + 2(33|33) + 8(33|44) - 4(34|43)"}}),
      make_block(8, "3Po",
                 {{{{1, "1 1b 2 3 4 4b 5 5b"}},
                   "2(1|1) + (2|2) + 5(3|3) + (11|11) + 2(11|22) - (12|21) + 10(11|33)"
                   " - 5(13|31) + 5(22|33) - 3(23|32) + 2(33|33) + 8(33|44) - 4(34|43)"}}),
      make_block(8, "3P",
                 {{{{1, "1 1b 2 2b 3 3b 4 5"}},
                   "2(1|1) + 2(2|2) + 4(3|3) + (11|11) + 4(11|22) - 2(12|21) + 8(11|33)"
                   " - 4(13|31) + (22|22) + 8(22|33) - 4(23|32) + (33|33) + 5(33|44)"
                   " - 3(34|43)"}}),
      make_block(8, "1D",
                 {{{{2, "1 1b 2 2b 4 4b 5 5b"},
                    {-1, "1 1b 2 2b 3 3b 4 4b"},
                    {-1, "1 1b 2 2b 3 3b 5 5b"}},
                   "2(1|1) + 2(2|2) + 4(3|3) + (11|11) + 4(11|22) - 2(12|21) + 8(11|33)"
                   " - 4(13|31) + (22|22) + 8(22|33) - 4(23|32) + 2(33|33) + 4(33|44)"
                   " - 3(34|43)"}}),
  };

  // F
  t[9] = {
      make_block(9, "2S",
                 {{{{1, "1 1b 2 3 3b 4 4b 5 5b"}},
                   "2(1|1) + (2|2) + 6(3|3) + (11|11) + 2(11|22) - (12|21) + 12(11|33)"
                   " - 6(13|31) + 6(22|33) - 3(23|32) + 3(33|33) + 12(33|44) - 6(34|43)"}}),
      make_block(9, "2Po",
                 {{{{1, "1 1b 2 2b 3 4 4b 5 5b"}},
                   "2(1|1) + 2(2|2) + 5(3|3) + (11|11) + 4(11|22) - 2(12|21) + 10(11|33)"
                   " - 5(13|31) + (22|22) + 10(22|33) - 5(23|32) + 2(33|33) + 8(33|44)"
                   " - 4(34|43)"}}),
  };

  // Ne
  t[10] = {
      make_block(10, "1S",
                 {{{{1, "1 1b 2 2b 3 3b 4 4b 5 5b"}},
                   "2(1|1) + 2(2|2) + 6(3|3) + (11|11) + 4(11|22) - 2(12|21) + 12(11|33)"
                   " - 6(13|31) + (22|22) + 12(22|33) - 6(23|32) + 3(33|33) + 12(33|44)"
                   " - 6(34|43)"}}),
  };
  return t;
}

} // namespace

const BlockCatalog &default_catalog() {
  static const BlockCatalog catalog(build());
  return catalog;
}

} // namespace minci
