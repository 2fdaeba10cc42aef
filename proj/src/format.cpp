#include "domlab/format.hpp"

#include <fstream>
#include <sstream>

namespace domlab {

std::string print_monoid(FiniteMonoid const& m) {
  std::ostringstream out;
  out << "monoid " << (m.name().empty() ? "unnamed" : m.name()) << "\n";
  out << "order " << m.order() << "\n";
  out << "neutral " << m.neutral() << "\n";
  if (m.has_labels()) {
    out << "labels";
    for (std::string const& l : m.labels()) out << " " << l;
    out << "\n";
  }
  out << "table\n";
  for (std::size_t a = 0; a < m.order(); ++a) {
    for (std::size_t b = 0; b < m.order(); ++b)
      out << (b ? " " : "") << m.table()[a * m.order() + b];
    out << "\n";
  }
  out << "end\n";
  return out.str();
}

namespace {

struct LineReader {
  std::istream& in;
  std::size_t line_no = 0;

  // Next nonempty line; empty lines and lines starting with '#' are skipped.
  std::string next(std::string const& expecting) {
    std::string line;
    while (std::getline(in, line)) {
      ++line_no;
      std::size_t start = line.find_first_not_of(" \t\r");
      if (start == std::string::npos) continue;
      if (line[start] == '#') continue;
      return line;
    }
    throw ParseError(line_no + 1, "unexpected end of input, expected " + expecting);
  }
};

std::vector<std::string> tokens_of(std::string const& line) {
  std::istringstream ss(line);
  std::vector<std::string> out;
  std::string tok;
  while (ss >> tok) out.push_back(tok);
  return out;
}

std::size_t parse_index(std::string const& tok, std::size_t line_no) {
  std::size_t v = 0;
  if (tok.empty()) throw ParseError(line_no, "expected a number");
  for (char c : tok) {
    if (c < '0' || c > '9')
      throw ParseError(line_no, "expected a number, got '" + tok + "'");
    v = v * 10 + static_cast<std::size_t>(c - '0');
    if (v > 1'000'000) throw ParseError(line_no, "number too large: '" + tok + "'");
  }
  return v;
}

}  // namespace

FiniteMonoid parse_monoid(std::istream& in) {
  LineReader reader{in};

  auto expect_keyword = [&](std::string const& keyword) {
    auto toks = tokens_of(reader.next("'" + keyword + "'"));
    if (toks.empty() || toks[0] != keyword)
      throw ParseError(reader.line_no, "expected '" + keyword + "', got '" +
                                           (toks.empty() ? "" : toks[0]) + "'");
    return toks;
  };

  auto name_toks = expect_keyword("monoid");
  if (name_toks.size() != 2)
    throw ParseError(reader.line_no, "'monoid' takes exactly one name");
  std::string name = name_toks[1];

  auto order_toks = expect_keyword("order");
  if (order_toks.size() != 2)
    throw ParseError(reader.line_no, "'order' takes exactly one number");
  std::size_t order = parse_index(order_toks[1], reader.line_no);
  if (order == 0) throw ParseError(reader.line_no, "order must be positive");

  auto neutral_toks = expect_keyword("neutral");
  if (neutral_toks.size() != 2)
    throw ParseError(reader.line_no, "'neutral' takes exactly one number");
  std::size_t neutral = parse_index(neutral_toks[1], reader.line_no);

  std::vector<std::string> labels;
  auto toks = tokens_of(reader.next("'labels' or 'table'"));
  if (!toks.empty() && toks[0] == "labels") {
    labels.assign(toks.begin() + 1, toks.end());
    if (labels.size() != order)
      throw ParseError(reader.line_no,
                       "labels line has " + std::to_string(labels.size()) +
                           " entries, expected " + std::to_string(order));
    toks = tokens_of(reader.next("'table'"));
  }
  if (toks.empty() || toks[0] != "table")
    throw ParseError(reader.line_no, "expected 'table'");

  std::vector<ElementId> table;
  table.reserve(order * order);
  for (std::size_t row = 0; row < order; ++row) {
    auto row_toks = tokens_of(reader.next("table row " + std::to_string(row)));
    if (row_toks.size() != order)
      throw ParseError(reader.line_no,
                       "table row " + std::to_string(row) + " has " +
                           std::to_string(row_toks.size()) + " entries, expected " +
                           std::to_string(order));
    for (auto const& tok : row_toks) {
      std::size_t v = parse_index(tok, reader.line_no);
      if (v >= order)
        throw ParseError(reader.line_no, "table entry " + tok + " out of range");
      table.push_back(static_cast<ElementId>(v));
    }
  }

  auto end_toks = expect_keyword("end");
  if (end_toks.size() != 1) throw ParseError(reader.line_no, "'end' takes no arguments");

  if (neutral >= order) throw ParseError(reader.line_no, "neutral index out of range");
  return FiniteMonoid::validate(order, static_cast<ElementId>(neutral),
                                std::move(table), std::move(labels), std::move(name),
                                std::max(FiniteMonoid::kDefaultMaxOrder, order));
}

FiniteMonoid parse_monoid(std::string const& text) {
  std::istringstream in(text);
  return parse_monoid(in);
}

FiniteMonoid load_monoid_file(std::string const& path) {
  std::ifstream in(path);
  if (!in) throw ValidationError("cannot open file: " + path);
  return parse_monoid(in);
}

std::string print_congruence(Congruence const& theta, std::string const& name) {
  std::string s = "cong " + name + " blocks:";
  for (auto const& block : theta.blocks()) {
    s += " {";
    for (std::size_t i = 0; i < block.size(); ++i)
      s += (i ? "," : "") + std::to_string(block[i]);
    s += "}";
  }
  return s;
}

std::string print_homomorphism(Homomorphism const& h, std::string const& name) {
  std::string s = "hom " + name + " " +
                  (h.source.name().empty() ? "src" : h.source.name()) + " -> " +
                  (h.target.name().empty() ? "dst" : h.target.name()) + " map:";
  for (ElementId v : h.map) s += " " + std::to_string(v);
  return s;
}

}  // namespace domlab
