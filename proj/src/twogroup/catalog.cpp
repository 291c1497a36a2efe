#include <algorithm>
#include <cctype>
#include <stdexcept>

#include "quadtower/twogroup.hpp"

namespace quadtower {

namespace {

struct CatalogEntry {
  const char* name;
  const char* generators;
};

constexpr CatalogEntry kCatalog[] = {
    {"trivial", ""},
    {"C2", "(1 2)"},
    {"C2^2", "(1 2),(3 4)"},
    {"C2^3", "(1 2),(3 4),(5 6)"},
    {"Z2", "(1 2)"},
    {"Z4", "(1 2 3 4)"},
    {"Z8", "(1 2 3 4 5 6 7 8)"},
    {"Z16", "(1 2 3 4 5 6 7 8 9 10 11 12 13 14 15 16)"},
    {"D4", "(1 2 3 4),(1 3)"},
    {"Q8", "(1 2 4 7)(3 6 8 5),(1 3 4 8)(2 5 7 6)"},
    {"SD16", "(1 2 3 4 5 6 7 8),(2 4)(3 7)(6 8)"},
    {"M4(2)", "(1 2 3 4 5 6 7 8),(2 6)(4 8)"},
    {"D4xZ2", "(1 2 3 4),(1 3),(5 6)"},
    {"Q8xZ2", "(1 2 4 7)(3 6 8 5),(1 3 4 8)(2 5 7 6),(9 10)"},
    {"Z4xZ4", "(1 2 3 4),(5 6 7 8)"},
};

bool iequals(std::string_view a, std::string_view b) {
  return a.size() == b.size() &&
         std::equal(a.begin(), a.end(), b.begin(), [](char x, char y) {
           return std::tolower(static_cast<unsigned char>(x)) == std::tolower(static_cast<unsigned char>(y));
         });
}

std::string_view trim(std::string_view s) {
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
  return s;
}

}  // namespace

std::vector<std::string> catalog_names() {
  std::vector<std::string> out;
  for (const auto& e : kCatalog) out.emplace_back(e.name);
  return out;
}

FiniteTwoGroup catalog_group(std::string_view name) {
  for (const auto& e : kCatalog)
    if (iequals(name, e.name)) return FiniteTwoGroup::from_permutations(parse_generators(e.generators), e.name);
  throw std::invalid_argument("unknown group '" + std::string(name) + "'");
}

std::vector<Permutation> parse_generators(std::string_view text) {
  // Each generator is a list of cycles; cycles are applied left to right.
  std::vector<std::vector<std::vector<unsigned>>> gens;
  std::vector<std::vector<unsigned>> current;
  bool any = false;
  std::size_t i = 0;
  unsigned degree = 0;
  auto fail = [&](const std::string& why) {
    throw std::invalid_argument("generators '" + std::string(text) + "': " + why);
  };
  while (i < text.size()) {
    const char c = text[i];
    if (std::isspace(static_cast<unsigned char>(c))) {
      ++i;
    } else if (c == ',' || c == ';') {
      if (!any) fail("empty generator");
      gens.push_back(std::move(current));
      current.clear();
      any = false;
      ++i;
    } else if (c == '(') {
      const std::size_t close = text.find(')', i);
      if (close == std::string_view::npos) fail("unbalanced '('");
      std::vector<unsigned> cycle;
      std::string_view body = text.substr(i + 1, close - i - 1);
      std::size_t j = 0;
      while (j < body.size()) {
        if (std::isspace(static_cast<unsigned char>(body[j])) || body[j] == ',') {
          ++j;
          continue;
        }
        if (!std::isdigit(static_cast<unsigned char>(body[j]))) fail("bad point in cycle");
        unsigned v = 0;
        while (j < body.size() && std::isdigit(static_cast<unsigned char>(body[j]))) {
          v = v * 10 + static_cast<unsigned>(body[j] - '0');
          if (v > kMaxPermutationDegree) fail("point exceeds 64");
          ++j;
        }
        if (v == 0) fail("points are numbered from 1");
        if (std::find(cycle.begin(), cycle.end(), v) != cycle.end()) fail("repeated point in a cycle");
        cycle.push_back(v);
        degree = std::max(degree, v);
      }
      current.push_back(std::move(cycle));
      any = true;
      i = close + 1;
    } else {
      fail(std::string("unexpected '") + c + "'");
    }
  }
  if (any) gens.push_back(std::move(current));

  std::vector<Permutation> out;
  for (const auto& cycles : gens) {
    Permutation p(std::max(degree, 1u));
    for (std::size_t x = 0; x < p.size(); ++x) p[x] = static_cast<std::uint8_t>(x);
    for (const auto& cyc : cycles) {
      Permutation step(p.size());
      for (std::size_t x = 0; x < p.size(); ++x) step[x] = static_cast<std::uint8_t>(x);
      for (std::size_t k = 0; k < cyc.size(); ++k)
        step[cyc[k] - 1] = static_cast<std::uint8_t>(cyc[(k + 1) % cyc.size()] - 1);
      Permutation next(p.size());
      for (std::size_t x = 0; x < p.size(); ++x) next[x] = step[p[x]];
      p = std::move(next);
    }
    out.push_back(std::move(p));
  }
  return out;
}

FiniteTwoGroup parse_group(std::string_view text) {
  text = trim(text);
  if (!text.empty() && text.front() == '(') return FiniteTwoGroup::from_permutations(parse_generators(text));
  return catalog_group(text);
}

std::string permutation_to_string(const Permutation& p) {
  std::string s;
  std::vector<bool> done(p.size());
  for (std::size_t x = 0; x < p.size(); ++x) {
    if (done[x] || p[x] == x) continue;
    s += "(";
    for (std::size_t y = x; !done[y]; y = p[y]) {
      done[y] = true;
      if (s.back() != '(') s += " ";
      s += std::to_string(y + 1);
    }
    s += ")";
  }
  return s.empty() ? "()" : s;
}

}  // namespace quadtower
