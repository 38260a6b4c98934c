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

#include "dworkgeom/group.h"

#include <algorithm>
#include <cctype>
#include <deque>
#include <sstream>

#include "dworkgeom/errors.h"

namespace dworkgeom {

namespace {

int mod(long a, int m) {
  long r = a % m;
  return static_cast<int>(r < 0 ? r + m : r);
}

std::vector<int> parse_cycles(int size, const std::string& text) {
  std::vector<int> perm(size);
  for (int i = 0; i < size; ++i) perm[i] = i;
  std::vector<bool> seen(size, false);
  size_t pos = 0;
  auto skip_space = [&] {
    while (pos < text.size() && std::isspace(static_cast<unsigned char>(text[pos]))) ++pos;
  };
  skip_space();
  while (pos < text.size()) {
    if (text[pos] != '(') throw InputError("expected '(' in cycle notation: " + text);
    ++pos;
    size_t close = text.find(')', pos);
    if (close == std::string::npos) throw InputError("unbalanced parenthesis in cycle notation: " + text);
    std::string body = text.substr(pos, close - pos);
    pos = close + 1;
    std::vector<int> cyc;
    bool separated = body.find_first_of(" ,") != std::string::npos;
    if (separated) {
      std::string tok;
      std::istringstream is(body);
      while (std::getline(is, tok, ' ')) {
        std::istringstream ts(tok);
        std::string part;
        while (std::getline(ts, part, ',')) {
          if (part.empty()) continue;
          for (char c : part)
            if (!std::isdigit(static_cast<unsigned char>(c))) throw InputError("bad cycle entry: " + part);
          cyc.push_back(std::stoi(part));
        }
      }
    } else {
      if (size > 9 && body.size() > 1) throw InputError("compact cycle notation needs at most 9 points: " + text);
      for (char c : body) {
        if (!std::isdigit(static_cast<unsigned char>(c))) throw InputError("bad cycle entry in: " + text);
        cyc.push_back(c - '0');
      }
    }
    for (int x : cyc) {
      if (x < 1 || x > size) throw InputError("cycle entry out of range: " + std::to_string(x));
      if (seen[x - 1]) throw InputError("repeated point in cycle notation: " + text);
      seen[x - 1] = true;
    }
    for (size_t k = 0; k < cyc.size(); ++k) perm[cyc[k] - 1] = cyc[(k + 1) % cyc.size()] - 1;
    skip_space();
  }
  return perm;
}

}  // namespace

GroupElement::GroupElement(int n, std::vector<int> perm, std::vector<int> twist)
    : n_(n), perm_(std::move(perm)), twist_(std::move(twist)) {
  const int size = n + 1;
  if (n < 1) throw InputError("group elements need n >= 1");
  if (static_cast<int>(perm_.size()) != size || static_cast<int>(twist_.size()) != size)
    throw InputError("permutation and twist must have n+1 entries");
  std::vector<bool> hit(size, false);
  for (int x : perm_) {
    if (x < 0 || x >= size || hit[x]) throw InputError("not a permutation");
    hit[x] = true;
  }
  long sum = 0;
  for (int a : twist_) sum += a;
  if (mod(sum, size) != 0)
    throw InputError("twist sum must vanish mod n+1; the element is not an automorphism of the pencil");
  const int shift = twist_[0];
  for (auto& a : twist_) a = mod(static_cast<long>(a) - shift, size);
}

GroupElement GroupElement::identity(int n) {
  std::vector<int> p(n + 1);
  for (int i = 0; i <= n; ++i) p[i] = i;
  return GroupElement(n, p, std::vector<int>(n + 1, 0));
}

GroupElement GroupElement::diagonal(int n, const std::vector<int>& twist) {
  std::vector<int> p(n + 1);
  for (int i = 0; i <= n; ++i) p[i] = i;
  return GroupElement(n, p, twist);
}

GroupElement GroupElement::permutation(int n, const std::string& cycles) {
  return GroupElement(n, parse_cycles(n + 1, cycles), std::vector<int>(n + 1, 0));
}

GroupElement GroupElement::parse(const std::string& literal) {
  const size_t semi = literal.find(';');
  if (semi == std::string::npos) throw InputError("element literal needs ';' before the twist: " + literal);
  std::vector<int> twist;
  std::istringstream is(literal.substr(semi + 1));
  std::string tok;
  while (std::getline(is, tok, ',')) {
    if (tok.empty() || tok.find_first_not_of("-0123456789") != std::string::npos)
      throw InputError("bad twist entry in literal: " + literal);
    twist.push_back(std::stoi(tok));
  }
  if (twist.size() < 2) throw InputError("twist needs at least two entries: " + literal);
  const int n = static_cast<int>(twist.size()) - 1;
  std::string cyc = literal.substr(0, semi);
  if (cyc == "()") cyc.clear();
  return GroupElement(n, parse_cycles(n + 1, cyc), twist);
}

bool GroupElement::is_identity() const {
  for (int i = 0; i <= n_; ++i)
    if (perm_[i] != i || twist_[i] != 0) return false;
  return true;
}

bool GroupElement::is_diagonal() const {
  for (int i = 0; i <= n_; ++i)
    if (perm_[i] != i) return false;
  return true;
}

int GroupElement::order() const {
  GroupElement p = *this;
  int k = 1;
  while (!p.is_identity()) {
    p = p * *this;
    ++k;
  }
  return k;
}

int GroupElement::permutation_sign() const {
  std::vector<bool> seen(n_ + 1, false);
  int sign = 1;
  for (int i = 0; i <= n_; ++i) {
    if (seen[i]) continue;
    int len = 0;
    for (int j = i; !seen[j]; j = perm_[j]) {
      seen[j] = true;
      ++len;
    }
    if (len % 2 == 0) sign = -sign;
  }
  return sign;
}

GroupElement operator*(const GroupElement& g, const GroupElement& h) {
  if (g.n_ != h.n_) throw InputError("cannot compose elements with different n");
  // (P_s D_a)(P_t D_b) = P_(st) D_(a o t + b).
  const int size = g.n_ + 1;
  std::vector<int> p(size), a(size);
  for (int i = 0; i < size; ++i) {
    p[i] = g.perm_[h.perm_[i]];
    a[i] = g.twist_[h.perm_[i]] + h.twist_[i];
  }
  return GroupElement(g.n_, std::move(p), std::move(a));
}

GroupElement compose(const GroupElement& g, const GroupElement& h) { return g * h; }

int composition_scalar(const GroupElement& g, const GroupElement& h) {
  if (g.n() != h.n()) throw InputError("cannot compose elements with different n");
  return mod(g.twist()[h.perm()[0]] + h.twist()[0], g.n() + 1);
}

GroupElement GroupElement::inverse() const {
  const int size = n_ + 1;
  std::vector<int> p(size), a(size);
  for (int i = 0; i < size; ++i) p[perm_[i]] = i;
  for (int i = 0; i < size; ++i) a[i] = -twist_[p[i]];
  return GroupElement(n_, std::move(p), std::move(a));
}

GroupElement GroupElement::pow(long k) const {
  GroupElement base = k < 0 ? inverse() : *this;
  unsigned long e = static_cast<unsigned long>(k < 0 ? -k : k);
  GroupElement r = identity(n_);
  while (e) {
    if (e & 1) r = r * base;
    e >>= 1;
    if (e) base = base * base;
  }
  return r;
}

bool operator<(const GroupElement& a, const GroupElement& b) {
  if (a.n_ != b.n_) return a.n_ < b.n_;
  if (a.perm_ != b.perm_) return a.perm_ < b.perm_;
  return a.twist_ < b.twist_;
}

std::string GroupElement::cycle_string() const {
  std::ostringstream os;
  std::vector<bool> seen(n_ + 1, false);
  bool any = false;
  for (int i = 0; i <= n_; ++i) {
    if (seen[i] || perm_[i] == i) continue;
    os << "(";
    bool first = true;
    for (int j = i; !seen[j]; j = perm_[j]) {
      seen[j] = true;
      os << (first ? "" : " ") << j + 1;
      first = false;
    }
    os << ")";
    any = true;
  }
  return any ? os.str() : "()";
}

std::string GroupElement::to_string() const {
  std::ostringstream os;
  os << cycle_string() << ";";
  for (int i = 0; i <= n_; ++i) os << (i ? "," : "") << twist_[i];
  return os.str();
}

std::size_t GroupElement::hash() const {
  std::size_t h = static_cast<std::size_t>(n_);
  for (int x : perm_) h = h * 131 + static_cast<std::size_t>(x);
  for (int x : twist_) h = h * 131 + static_cast<std::size_t>(x);
  return h;
}

Subgroup Subgroup::generate(int n, const std::vector<GroupElement>& gens, std::size_t cap) {
  Subgroup s;
  s.n_ = n;
  s.gens_ = gens;
  for (const auto& g : gens)
    if (g.n() != n) throw InputError("generator " + g.to_string() + " has a different n");
  std::deque<GroupElement> queue;
  auto add = [&](const GroupElement& g) {
    if (s.index_.count(g)) return;
    if (s.elements_.size() >= cap)
      throw ComputationError("subgroup closure exceeds the cap of " + std::to_string(cap) + " elements");
    s.index_.emplace(g, static_cast<int>(s.elements_.size()));
    s.elements_.push_back(g);
    queue.push_back(g);
  };
  add(GroupElement::identity(n));
  while (!queue.empty()) {
    GroupElement x = queue.front();
    queue.pop_front();
    for (const auto& g : gens) add(x * g);
  }
  return s;
}

int Subgroup::index_of(const GroupElement& g) const {
  auto it = index_.find(g);
  return it == index_.end() ? -1 : it->second;
}

bool Subgroup::preserves_period() const {
  for (const auto& g : gens_)
    if (!g.preserves_period()) return false;
  return true;
}

std::vector<ConjugacyClass> conjugacy_classes(const Subgroup& g) {
  std::vector<ConjugacyClass> classes;
  std::vector<bool> done(g.order(), false);
  std::vector<GroupElement> gen_inv;
  for (const auto& x : g.generators()) gen_inv.push_back(x.inverse());
  for (std::size_t i = 0; i < g.order(); ++i) {
    if (done[i]) continue;
    ConjugacyClass c{g.elements()[i], 0, {}};
    std::deque<GroupElement> queue{g.elements()[i]};
    done[i] = true;
    while (!queue.empty()) {
      GroupElement y = queue.front();
      queue.pop_front();
      c.members.push_back(y);
      for (std::size_t k = 0; k < gen_inv.size(); ++k) {
        GroupElement z = g.generators()[k] * y * gen_inv[k];
        const int idx = g.index_of(z);
        if (!done[idx]) {
          done[idx] = true;
          queue.push_back(z);
        }
      }
    }
    c.size = c.members.size();
    classes.push_back(std::move(c));
  }
  return classes;
}

Subgroup centralizer(const GroupElement& s, const Subgroup& g) {
  if (!g.contains(s)) throw InputError("centralizer: element " + s.to_string() + " is not in the group");
  // Greedy generating set keeps later class computations cheap.
  std::vector<GroupElement> gens;
  Subgroup cur = Subgroup::generate(g.n(), gens);
  for (const auto& x : g.elements()) {
    if (x * s != s * x || cur.contains(x)) continue;
    gens.push_back(x);
    cur = Subgroup::generate(g.n(), gens, g.order());
  }
  return cur;
}

}  // namespace dworkgeom
