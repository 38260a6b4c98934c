// Copyright 2026 The dworkgeom Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "dworkgeom/named_groups.h"

#include <cctype>
#include <map>
#include <sstream>

#include "dworkgeom/errors.h"

namespace dworkgeom {

namespace {

struct Alias {
  const char* description;
  const char* generators;
};

// Generator lists in the parse_group_spec syntax, for n = 4.
const std::map<std::string, Alias>& quintic_aliases() {
  static const std::map<std::string, Alias> table = {
      {"A5", {"alternating group on the coordinates", "(123),(12345)"}},
      {"S5", {"symmetric group on the coordinates", "(12),(12345)"}},
      {"H4", {"diagonal group (Z/5)^3", "h(1,4,0,0,0),h(1,0,4,0,0),h(1,0,0,4,0)"}},
      {"A5xH4", {"semidirect product A5 x| H4", "(123),(12345),h(1,4,0,0,0),h(1,0,4,0,0),h(1,0,0,4,0)"}},
      {"S5xH4", {"semidirect product S5 x| H4", "(12),(12345),h(1,4,0,0,0),h(1,0,4,0,0),h(1,0,0,4,0)"}},
      {"A4", {"alternating group on four coordinates", "(12)(34),(123)"}},
      {"D5a", {"dihedral group of order 10 inside A5", "(12)(35),(12345)"}},
      {"S3", {"symmetric group on three letters inside A5", "(12)(45),(23)(45)"}},
      {"V4", {"Klein four-group inside A5", "(12)(34),(13)(24)"}},
      {"Z2", {"cyclic group of order 2", "(12)(34)"}},
      {"Z3", {"cyclic group of order 3", "(123)"}},
      {"Z5", {"cyclic permutation group of order 5", "(12345)"}},
      {"Z5a", {"diagonal Z/5 fixing a plane quintic", "h(0,1,4,0,0)"}},
      {"Z5b", {"diagonal Z/5 fixing ten points", "h(0,1,1,3,0)"}},
      {"Z5c", {"free diagonal Z/5", "h(0,1,2,3,4)"}},
      {"G1", {"(Z/5)^2 of type i", "h(1,4,0,0,0),h(0,0,1,4,0)"}},
      {"G2", {"(Z/5)^2 of type ii", "h(1,4,0,0,0),h(1,0,4,0,0)"}},
      {"G3", {"(Z/5)^2 of type iii", "h(1,1,0,0,3),h(1,3,1,0,0)"}},
      {"Z10", {"cyclic group of order 10", "h(0,0,1,1,3),(12)(34)"}},
      {"Z15", {"cyclic group of order 15", "h(0,0,0,1,4),(123)"}},
      {"D5b", {"dihedral group of order 10 mixing H4 and A5", "h(1,4,0,0,0),(12)(34)"}},
      {"Z5xZ5", {"free (Z/5)^2", "h(0,1,2,3,4),(12345)"}},
  };
  return table;
}

class SpecParser {
 public:
  SpecParser(int n, const std::string& s) : n_(n), s_(s) {}

  std::vector<GroupElement> parse() {
    std::vector<GroupElement> gens;
    skip();
    if (pos_ == s_.size()) return gens;
    for (;;) {
      gens.push_back(generator());
      skip();
      if (pos_ == s_.size()) break;
      if (s_[pos_] != ',') fail("expected ',' between generators");
      ++pos_;
    }
    return gens;
  }

 private:
  [[noreturn]] void fail(const std::string& why) {
    throw InputError("group spec \"" + s_ + "\": " + why + " at offset " + std::to_string(pos_));
  }

  void skip() {
    while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_]))) ++pos_;
  }

  GroupElement generator() {
    GroupElement g = factor();
    for (;;) {
      skip();
      if (pos_ < s_.size() && (s_[pos_] == '*' || s_[pos_] == '.')) {
        ++pos_;
        skip();
        g = g * factor();
      } else if (pos_ < s_.size() && (s_[pos_] == '(' || s_[pos_] == 'h')) {
        g = g * factor();
      } else {
        return g;
      }
    }
  }

  std::vector<int> int_list() {
    std::vector<int> out;
    size_t close = s_.find(')', pos_);
    if (close == std::string::npos) fail("unbalanced parenthesis");
    std::istringstream is(s_.substr(pos_, close - pos_));
    std::string tok;
    while (std::getline(is, tok, ',')) {
      size_t a = tok.find_first_not_of(' '), b = tok.find_last_not_of(' ');
      if (a == std::string::npos) fail("empty entry");
      tok = tok.substr(a, b - a + 1);
      if (tok.find_first_not_of("-0123456789") != std::string::npos) fail("bad integer '" + tok + "'");
      out.push_back(std::stoi(tok));
    }
    pos_ = close + 1;
    return out;
  }

  GroupElement factor() {
    skip();
    if (pos_ >= s_.size()) fail("missing generator");
    if (s_[pos_] == 'h') {
      ++pos_;
      skip();
      if (pos_ >= s_.size() || s_[pos_] != '(') fail("expected '(' after h");
      ++pos_;
      std::vector<int> a = int_list();
      if (static_cast<int>(a.size()) != n_ + 1) fail("diagonal needs n+1 entries");
      return GroupElement::diagonal(n_, a);
    }
    if (s_[pos_] != '(') fail("expected '(' or 'h'");
    const size_t start = pos_;
    while (pos_ < s_.size() && s_[pos_] == '(') {
      size_t close = s_.find(')', pos_);
      if (close == std::string::npos) fail("unbalanced parenthesis");
      pos_ = close + 1;
    }
    std::string cycles = s_.substr(start, pos_ - start);
    if (pos_ < s_.size() && s_[pos_] == ';') {
      // Full literal: the twist takes exactly n+1 comma separated integers.
      size_t end = pos_ + 1;
      int commas = 0;
      while (end < s_.size() && (std::isdigit(static_cast<unsigned char>(s_[end])) || s_[end] == '-' ||
                                 (s_[end] == ',' && commas < n_))) {
        if (s_[end] == ',') ++commas;
        ++end;
      }
      std::string lit = s_.substr(start, end - start);
      pos_ = end;
      GroupElement g = GroupElement::parse(lit);
      if (g.n() != n_) fail("literal has the wrong length");
      return g;
    }
    return GroupElement::permutation(n_, cycles == "()" ? "" : cycles);
  }

  int n_;
  std::string s_;
  size_t pos_ = 0;
};

}  // namespace

std::vector<GroupElement> h_generators(int n) {
  std::vector<GroupElement> gens;
  for (int k = 1; k < n; ++k) {
    std::vector<int> a(n + 1, 0);
    a[0] = 1;
    a[k] = n;
    gens.push_back(GroupElement::diagonal(n, a));
  }
  return gens;
}

std::optional<NamedGroup> named_group(int n, const std::string& name) {
  if (n == 4) {
    auto it = quintic_aliases().find(name);
    if (it != quintic_aliases().end())
      return NamedGroup{name, it->second.description, parse_group_spec(4, it->second.generators)};
  }
  if (name == "H" || name == "H" + std::to_string(n)) return NamedGroup{name, "diagonal group H_n", h_generators(n)};
  if (name == "trivial") return NamedGroup{name, "trivial group", {}};
  return std::nullopt;
}

std::vector<std::string> named_group_names() {
  std::vector<std::string> names;
  for (const auto& [k, v] : quintic_aliases()) names.push_back(k);
  names.push_back("trivial");
  return names;
}

std::vector<GroupElement> parse_group_spec(int n, const std::string& spec) { return SpecParser(n, spec).parse(); }

NamedGroup resolve_group(int n, const std::string& spec) {
  if (auto g = named_group(n, spec)) return *g;
  return NamedGroup{spec, "generated by " + spec, parse_group_spec(n, spec)};
}

}  // namespace dworkgeom
