#include "wedderkit/groupspec.hpp"

#include <vector>

#include "wedderkit/constructions.hpp"
#include "wedderkit/errors.hpp"

namespace wedderkit {

namespace {

[[noreturn]] void fail(size_t pos, const std::string& msg) {
  throw ParseError("group spec error at position " + std::to_string(pos) + ": " + msg);
}

// digits only; text positions index the full original spec
int parse_number(const std::string& s, size_t from, size_t to) {
  if (from >= to) fail(from, "expected a number");
  long long v = 0;
  for (size_t i = from; i < to; ++i) {
    if (s[i] < '0' || s[i] > '9') fail(i, "expected a digit");
    v = v * 10 + (s[i] - '0');
    if (v > 100'000'000) fail(from, "number out of range");
  }
  return static_cast<int>(v);
}

std::vector<Permutation> parse_generators(const std::string& s, size_t from, size_t to) {
  std::vector<std::vector<std::vector<int>>> gens;  // generator -> cycles -> points
  std::vector<std::vector<int>> cycles;
  int max_point = 0;
  size_t i = from;
  auto flush_generator = [&](size_t at) {
    if (cycles.empty()) fail(at, "empty generator");
    gens.push_back(std::move(cycles));
    cycles.clear();
  };
  while (i < to) {
    if (s[i] == ' ') {
      ++i;
    } else if (s[i] == ';') {
      flush_generator(i);
      ++i;
    } else if (s[i] == '(') {
      size_t open = i++;
      std::vector<int> cycle;
      while (true) {
        while (i < to && s[i] == ' ') ++i;
        size_t start = i;
        while (i < to && s[i] >= '0' && s[i] <= '9') ++i;
        int point = parse_number(s, start, i);
        if (point < 1) fail(start, "points are numbered from 1");
        cycle.push_back(point);
        max_point = std::max(max_point, point);
        while (i < to && s[i] == ' ') ++i;
        if (i >= to) fail(open, "unclosed cycle");
        if (s[i] == ',') {
          ++i;
          continue;
        }
        if (s[i] == ')') {
          ++i;
          break;
        }
        fail(i, "expected ',' or ')' in cycle");
      }
      cycles.push_back(std::move(cycle));
    } else {
      fail(i, "expected '(' starting a cycle");
    }
  }
  flush_generator(to);

  std::vector<Permutation> out;
  for (const auto& gen : gens) {
    Permutation p(static_cast<size_t>(max_point));
    for (int pt = 0; pt < max_point; ++pt) p[pt] = pt;
    std::vector<char> moved(static_cast<size_t>(max_point), 0);
    for (const auto& cycle : gen)
      for (size_t j = 0; j < cycle.size(); ++j) {
        int a = cycle[j] - 1;
        int b = cycle[(j + 1) % cycle.size()] - 1;
        if (moved[a]) fail(from, "point " + std::to_string(a + 1) + " moved twice");
        moved[a] = 1;
        p[a] = b;
      }
    out.push_back(std::move(p));
  }
  return out;
}

GroupPtr parse(const std::string& s, size_t from, size_t to, int max_order) {
  size_t colon = s.find(':', from);
  if (colon == std::string::npos || colon >= to) fail(from, "expected 'family:...'");
  std::string head = s.substr(from, colon - from);
  size_t body = colon + 1;

  if (head == "perm") {
    auto gens = parse_generators(s, body, to);
    return FiniteGroup::from_permutation_generators(
        gens, "perm<" + s.substr(body, to - body) + ">", max_order);
  }
  if (head == "cyclic") return FiniteGroup::cyclic(parse_number(s, body, to), max_order);
  if (head == "dihedral") return FiniteGroup::dihedral(parse_number(s, body, to), max_order);
  if (head == "sym") return FiniteGroup::symmetric(parse_number(s, body, to), max_order);
  if (head == "alt") return FiniteGroup::alternating(parse_number(s, body, to), max_order);
  if (head == "quaternion") {
    int n = parse_number(s, body, to);
    if (n < 8 || n % 4 != 0) fail(body, "quaternion order must be a multiple of 4, at least 8");
    return FiniteGroup::dicyclic(n, max_order);
  }
  if (head == "product") {
    size_t bar = s.rfind('|', to == 0 ? 0 : to - 1);
    if (bar == std::string::npos || bar < body) fail(body, "product needs '<spec>|<spec>'");
    GroupPtr a = parse(s, body, bar, max_order);
    GroupPtr b = parse(s, bar + 1, to, max_order);
    return direct_product(a, b, max_order).group;
  }
  if (head == "wreath") {
    size_t tilde = s.rfind('~', to == 0 ? 0 : to - 1);
    if (tilde == std::string::npos || tilde < body) fail(body, "wreath needs '<spec>~cyclic:p'");
    if (s.compare(tilde + 1, std::min<size_t>(7, to - tilde - 1), "cyclic:") != 0)
      fail(tilde + 1, "the acting factor must be 'cyclic:p'");
    int p = parse_number(s, tilde + 8, to);
    GroupPtr a = parse(s, body, tilde, max_order);
    return wreath_by_cyclic(a, p, max_order).group;
  }
  fail(from, "unknown family '" + head + "'");
}

}  // namespace

GroupPtr group_from_spec(const std::string& spec, int max_order) {
  if (spec.empty()) fail(0, "empty spec");
  return parse(spec, 0, spec.size(), max_order);
}

}  // namespace wedderkit
