#include "fir/groupspec.hpp"

#include <algorithm>
#include <fstream>
#include <numeric>
#include <sstream>

#include "fir/builders.hpp"

namespace fir {

namespace {

int parse_int(const std::string& s, const std::string& what) {
  try {
    std::size_t pos = 0;
    const int v = std::stoi(s, &pos);
    if (pos != s.size()) fail(Err::ParseError, what + ": trailing characters in '" + s + "'");
    return v;
  } catch (const Error&) {
    throw;
  } catch (const std::exception&) {
    fail(Err::ParseError, what + ": not an integer: '" + s + "'");
  }
}

// One generator in cycle notation, e.g. "(1 2 3)(4 5)"; returns 0-based images.
std::vector<int> parse_cycles(const std::string& text) {
  std::vector<std::vector<int>> cycles;
  std::size_t i = 0;
  int max_point = 0;
  while (i < text.size()) {
    if (std::isspace(static_cast<unsigned char>(text[i]))) {
      ++i;
      continue;
    }
    if (text[i] != '(') fail(Err::ParseError, "expected '(' in cycle notation: " + text);
    const std::size_t close = text.find(')', i);
    if (close == std::string::npos) fail(Err::ParseError, "unbalanced '(' in: " + text);
    std::istringstream in(text.substr(i + 1, close - i - 1));
    std::vector<int> cyc;
    std::string tok;
    while (in >> tok) {
      const int pt = parse_int(tok, "cycle point");
      if (pt < 1) fail(Err::ParseError, "cycle points are 1-based");
      cyc.push_back(pt);
      max_point = std::max(max_point, pt);
    }
    if (!cyc.empty()) cycles.push_back(std::move(cyc));
    i = close + 1;
  }
  std::vector<int> images(std::max(max_point, 1));
  std::iota(images.begin(), images.end(), 0);
  for (const auto& cyc : cycles)
    for (std::size_t j = 0; j < cyc.size(); ++j) {
      const int from = cyc[j] - 1, to = cyc[(j + 1) % cyc.size()] - 1;
      if (images[from] != from && images[from] != to)
        fail(Err::ParseError, "point repeated across cycles");
      images[from] = to;
    }
  return images;
}

std::string cycles_to_string(const std::vector<int>& images) {
  std::vector<char> seen(images.size(), 0);
  std::string out;
  for (std::size_t start = 0; start < images.size(); ++start) {
    if (seen[start] || images[start] == static_cast<int>(start)) continue;
    out += '(';
    std::size_t x = start;
    bool first = true;
    do {
      if (!first) out += ' ';
      out += std::to_string(x + 1);
      seen[x] = 1;
      x = static_cast<std::size_t>(images[x]);
      first = false;
    } while (x != start);
    out += ')';
  }
  if (out.empty()) out = "()";
  return out;
}

}  // namespace

GroupSpec GroupSpec::parse(const std::string& text) {
  GroupSpec s;
  if (text == "burnside") {
    s.kind = Kind::Burnside;
    return s;
  }
  if (text == "isaacs") {
    s.kind = Kind::Isaacs;
    return s;
  }
  const auto colon = text.find(':');
  if (colon == std::string::npos) fail(Err::ParseError, "unrecognized group spec: '" + text + "'");
  const std::string tag = text.substr(0, colon);
  const std::string rest = text.substr(colon + 1);
  if (tag == "cyclic") {
    s.kind = Kind::Cyclic;
    s.n = parse_int(rest, "cyclic order");
    if (s.n < 1) fail(Err::ParseError, "cyclic order must be >= 1");
    return s;
  }
  if (tag == "perm") {
    s.kind = Kind::Perm;
    std::size_t pos = 0;
    while (pos <= rest.size()) {
      const auto sep = rest.find(';', pos);
      const std::string part =
          rest.substr(pos, sep == std::string::npos ? std::string::npos : sep - pos);
      if (!part.empty()) s.perm_gens.push_back(parse_cycles(part));
      if (sep == std::string::npos) break;
      pos = sep + 1;
    }
    if (s.perm_gens.empty()) fail(Err::ParseError, "perm spec needs at least one generator");
    return s;
  }
  if (tag == "cayley") {
    s.kind = Kind::Cayley;
    s.path = rest;
    if (s.path.empty()) fail(Err::ParseError, "cayley spec needs a path");
    return s;
  }
  if (tag == "gdq") {
    s.kind = Kind::Gdq;
    const auto comma = rest.find(',');
    if (comma == std::string::npos) fail(Err::ParseError, "gdq needs D,Q");
    s.d = parse_int(rest.substr(0, comma), "gdq dimension");
    s.q = parse_int(rest.substr(comma + 1), "gdq field size");
    return s;
  }
  if (tag == "gq") {
    s.kind = Kind::Gq;
    s.d = 1;
    s.q = parse_int(rest, "gq field size");
    return s;
  }
  if (tag == "product") {
    s.kind = Kind::Product;
    const auto star = rest.find('*');
    if (star == std::string::npos) fail(Err::ParseError, "product needs SPEC*SPEC");
    s.factors.push_back(parse(rest.substr(0, star)));
    s.factors.push_back(parse(rest.substr(star + 1)));
    return s;
  }
  fail(Err::ParseError, "unrecognized group spec tag: '" + tag + "'");
}

std::string GroupSpec::to_string() const {
  switch (kind) {
    case Kind::Cyclic: return "cyclic:" + std::to_string(n);
    case Kind::Perm: {
      std::string out = "perm:";
      for (std::size_t i = 0; i < perm_gens.size(); ++i) {
        if (i) out += ';';
        out += cycles_to_string(perm_gens[i]);
      }
      return out;
    }
    case Kind::Cayley: return "cayley:" + path;
    case Kind::Gdq: return "gdq:" + std::to_string(d) + "," + std::to_string(q);
    case Kind::Gq: return "gq:" + std::to_string(q);
    case Kind::Product: return "product:" + factors[0].to_string() + "*" + factors[1].to_string();
    case Kind::Burnside: return "burnside";
    case Kind::Isaacs: return "isaacs";
  }
  return "";
}

FiniteGroup GroupSpec::build(int order_cap) const {
  switch (kind) {
    case Kind::Cyclic:
      if (n > order_cap) fail(Err::OrderCapExceeded, "cyclic order exceeds cap");
      return cyclic(n);
    case Kind::Perm: return FiniteGroup::from_permutations(perm_gens, order_cap);
    case Kind::Cayley: {
      std::ifstream in(path);
      if (!in) fail(Err::ParseError, "cannot open cayley file: " + path);
      std::vector<std::vector<int>> table;
      std::string line;
      while (std::getline(in, line)) {
        if (line.empty()) continue;
        std::vector<int> row;
        std::string cell;
        std::istringstream ls(line);
        while (std::getline(ls, cell, ',')) row.push_back(parse_int(cell, "cayley entry"));
        table.push_back(std::move(row));
      }
      if (static_cast<int>(table.size()) > order_cap)
        fail(Err::OrderCapExceeded, "cayley table exceeds cap");
      return FiniteGroup::from_cayley(table);
    }
    case Kind::Gdq: return affine_scalar_group(d, q, order_cap);
    case Kind::Gq: return affine_scalar_group(1, q, order_cap);
    case Kind::Product: {
      FiniteGroup a = factors[0].build(order_cap);
      FiniteGroup b = factors[1].build(order_cap);
      if (static_cast<long long>(a.order()) * b.order() > order_cap)
        fail(Err::OrderCapExceeded, "product exceeds order cap");
      return direct_product(a, b);
    }
    case Kind::Burnside: return burnside_example();
    case Kind::Isaacs: return isaacs_example();
  }
  fail(Err::Internal, "unreachable");
}

}  // namespace fir
