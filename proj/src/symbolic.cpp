#include "minci/symbolic.hpp"

#include <algorithm>
#include <array>
#include <cctype>
#include <cmath>
#include <stdexcept>

namespace minci {

namespace {

constexpr std::string_view letters = "SPDFGH";

constexpr std::array<std::string_view, 10> superscript_digits{"⁰", "¹", "²", "³", "⁴",
                                                              "⁵", "⁶", "⁷", "⁸", "⁹"};

[[noreturn]] void parse_error(std::string_view text, std::string_view why) {
  throw std::invalid_argument("cannot parse '" + std::string(text) + "': " + std::string(why));
}

} // namespace

std::string SymmetryLabel::term() const {
  std::string out;
  for (char ch : std::to_string(multiplicity())) {
    out += superscript_digits[static_cast<std::size_t>(ch - '0')];
  }
  out += letters.at(static_cast<std::size_t>(L));
  if (parity < 0) {
    out += "°";
  }
  return out;
}

std::string SymmetryLabel::ascii() const {
  std::string out = std::to_string(multiplicity());
  out += letters.at(static_cast<std::size_t>(L));
  if (parity < 0) {
    out += 'o';
  }
  return out;
}

SymmetryLabel SymmetryLabel::parse(std::string_view ascii) {
  std::size_t pos = 0;
  int mult = 0;
  while (pos < ascii.size() && std::isdigit(static_cast<unsigned char>(ascii[pos]))) {
    mult = mult * 10 + (ascii[pos] - '0');
    ++pos;
  }
  if (pos == 0 || mult < 1 || pos >= ascii.size()) {
    parse_error(ascii, "expected multiplicity followed by an L letter");
  }
  const char letter = static_cast<char>(std::toupper(static_cast<unsigned char>(ascii[pos])));
  const auto L = letters.find(letter);
  if (L == std::string_view::npos) {
    parse_error(ascii, "unknown L letter");
  }
  ++pos;
  int parity = 1;
  if (pos < ascii.size()) {
    if (pos + 1 != ascii.size() || (ascii[pos] != 'o' && ascii[pos] != 'O')) {
      parse_error(ascii, "only a trailing 'o' may follow the L letter");
    }
    parity = -1;
  }
  return {static_cast<int>(L), mult - 1, parity};
}

double Coefficient::to_double() const {
  return static_cast<double>(value) * std::sqrt(static_cast<double>(radicand));
}

std::string Coefficient::to_string() const {
  std::string out = value.str();
  if (radicand != 1) {
    out += "√" + std::to_string(radicand);
  }
  return out;
}

SymbolicEnergy::SymbolicEnergy(std::vector<SymbolicTerm> terms) {
  std::sort(terms.begin(), terms.end(), [](const SymbolicTerm &a, const SymbolicTerm &b) {
    return index_of(a.symbol) < index_of(b.symbol);
  });
  for (const SymbolicTerm &t : terms) {
    if (!terms_.empty() && terms_.back().symbol == t.symbol) {
      if (terms_.back().coefficient.radicand != t.coefficient.radicand) {
        throw std::invalid_argument("cannot merge terms with different radicals");
      }
      terms_.back().coefficient.value += t.coefficient.value;
    } else {
      terms_.push_back(t);
    }
  }
  std::erase_if(terms_, [](const SymbolicTerm &t) { return t.coefficient.value == 0; });
}

SymbolicEnergy SymbolicEnergy::parse(std::string_view text) {
  std::vector<SymbolicTerm> terms;
  std::size_t pos = 0;
  auto skip_space = [&] {
    while (pos < text.size() && std::isspace(static_cast<unsigned char>(text[pos]))) {
      ++pos;
    }
  };
  bool first = true;
  while (true) {
    skip_space();
    if (pos == text.size()) {
      break;
    }
    int sign = 1;
    if (text[pos] == '+' || text[pos] == '-') {
      sign = text[pos] == '-' ? -1 : 1;
      ++pos;
      skip_space();
    } else if (!first) {
      parse_error(text, "expected '+' or '-' between terms");
    }
    first = false;

    Rational value{1};
    const std::size_t num_start = pos;
    while (pos < text.size() &&
           (std::isdigit(static_cast<unsigned char>(text[pos])) || text[pos] == '/')) {
      ++pos;
    }
    if (pos > num_start) {
      value = Rational(std::string(text.substr(num_start, pos - num_start)));
    }
    int radicand = 1;
    constexpr std::string_view root = "√";
    if (text.substr(pos, root.size()) == root) {
      pos += root.size();
      if (pos >= text.size() || (text[pos] != '2' && text[pos] != '3')) {
        parse_error(text, "only √2 and √3 are supported");
      }
      radicand = text[pos] - '0';
      ++pos;
    }
    skip_space();
    const std::size_t close = text.find(')', pos);
    if (pos >= text.size() || text[pos] != '(' || close == std::string_view::npos) {
      parse_error(text, "expected an integral symbol");
    }
    const auto symbol = parse_symbol(text.substr(pos, close + 1 - pos));
    if (!symbol) {
      parse_error(text, "unknown integral symbol " + std::string(text.substr(pos, close + 1 - pos)));
    }
    pos = close + 1;
    terms.push_back({{sign * value, radicand}, *symbol});
  }
  return SymbolicEnergy(std::move(terms));
}

Coefficient SymbolicEnergy::coefficient(IntegralSymbol s) const {
  for (const SymbolicTerm &t : terms_) {
    if (t.symbol == s) {
      return t.coefficient;
    }
  }
  return {};
}

bool SymbolicEnergy::uses(IntegralSymbol s) const {
  return std::any_of(terms_.begin(), terms_.end(),
                     [s](const SymbolicTerm &t) { return t.symbol == s; });
}

bool SymbolicEnergy::has_radicals() const {
  return std::any_of(terms_.begin(), terms_.end(),
                     [](const SymbolicTerm &t) { return t.coefficient.radicand != 1; });
}

double SymbolicEnergy::evaluate(const IntegralSet &ints) const {
  double sum = 0.0;
  for (const SymbolicTerm &t : terms_) {
    sum += t.coefficient.to_double() * ints[t.symbol];
  }
  return sum;
}

Rational SymbolicEnergy::evaluate_exact(const std::array<Rational, symbol_count> &values) const {
  Rational sum{0};
  for (const SymbolicTerm &t : terms_) {
    if (t.coefficient.radicand != 1) {
      throw std::logic_error("exact evaluation of a term with a radical coefficient");
    }
    sum += t.coefficient.value * values[index_of(t.symbol)];
  }
  return sum;
}

std::string SymbolicEnergy::to_string() const {
  if (terms_.empty()) {
    return "0";
  }
  std::string out;
  for (const SymbolicTerm &t : terms_) {
    const Coefficient &c = t.coefficient;
    const bool negative = c.value < 0;
    if (out.empty()) {
      out += negative ? "-" : "";
    } else {
      out += negative ? " - " : " + ";
    }
    const Rational magnitude = negative ? Rational(-c.value) : c.value;
    if (magnitude != 1) {
      out += magnitude.str();
    }
    if (c.radicand != 1) {
      out += "√" + std::to_string(c.radicand);
    }
    out += notation(t.symbol);
  }
  return out;
}

} // namespace minci
