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

#ifndef DWORKGEOM_GROUP_H_
#define DWORKGEOM_GROUP_H_

#include <cstddef>
#include <string>
#include <unordered_map>
#include <vector>

namespace dworkgeom {

// The projectivity x -> P_sigma D_a x of P^n, where D_a = diag(xi^a_1, ...,
// xi^a_(n+1)) with xi = exp(2 pi i/(n+1)) and P_sigma e_i = e_sigma(i). The
// twist is normalized to a_1 = 0 and must satisfy sum a_i = 0 mod n+1.
class GroupElement {
 public:
  GroupElement(int n, std::vector<int> perm, std::vector<int> twist);

  static GroupElement identity(int n);
  static GroupElement diagonal(int n, const std::vector<int>& twist);
  // Permutation given in 1-based cycle notation, e.g. "(1 2)(3 4)" or "(12345)".
  static GroupElement permutation(int n, const std::string& cycles);
  // Literal "(1 2)(3 4);0,0,0,0,0"; n is read off the twist length.
  static GroupElement parse(const std::string& literal);

  int n() const { return n_; }
  int modulus() const { return n_ + 1; }
  // 0-based images: perm()[i] = sigma(i).
  const std::vector<int>& perm() const { return perm_; }
  const std::vector<int>& twist() const { return twist_; }

  bool is_identity() const;
  int order() const;
  int permutation_sign() const;
  bool preserves_period() const { return permutation_sign() == 1; }
  bool is_diagonal() const;

  GroupElement inverse() const;
  GroupElement pow(long k) const;
  friend GroupElement operator*(const GroupElement& g, const GroupElement& h);
  friend bool operator==(const GroupElement& a, const GroupElement& b) {
    return a.n_ == b.n_ && a.perm_ == b.perm_ && a.twist_ == b.twist_;
  }
  friend bool operator!=(const GroupElement& a, const GroupElement& b) { return !(a == b); }
  friend bool operator<(const GroupElement& a, const GroupElement& b);

  // Canonical literal; parse(to_string()) == *this.
  std::string to_string() const;
  std::string cycle_string() const;
  std::size_t hash() const;

 private:
  int n_;
  std::vector<int> perm_;
  std::vector<int> twist_;
};

struct GroupElementHash {
  std::size_t operator()(const GroupElement& g) const { return g.hash(); }
};

GroupElement compose(const GroupElement& g, const GroupElement& h);
// lin(g) lin(h) = xi^c lin(g h) for the normalized linear lifts; returns c mod n+1.
int composition_scalar(const GroupElement& g, const GroupElement& h);

class Subgroup {
 public:
  static constexpr std::size_t kDefaultCap = 1000000;

  // Closure of the generators by breadth-first search.
  static Subgroup generate(int n, const std::vector<GroupElement>& gens, std::size_t cap = kDefaultCap);

  int n() const { return n_; }
  const std::vector<GroupElement>& generators() const { return gens_; }
  const std::vector<GroupElement>& elements() const { return elements_; }
  std::size_t order() const { return elements_.size(); }
  bool contains(const GroupElement& g) const { return index_.count(g) > 0; }
  int index_of(const GroupElement& g) const;
  bool preserves_period() const;

 private:
  int n_ = 0;
  std::vector<GroupElement> gens_;
  std::vector<GroupElement> elements_;
  std::unordered_map<GroupElement, int, GroupElementHash> index_;
};

struct ConjugacyClass {
  GroupElement representative;
  std::size_t size = 0;
  std::vector<GroupElement> members;
};

std::vector<ConjugacyClass> conjugacy_classes(const Subgroup& g);
Subgroup centralizer(const GroupElement& s, const Subgroup& g);

}  // namespace dworkgeom

#endif  // DWORKGEOM_GROUP_H_
