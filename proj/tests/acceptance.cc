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

// Acceptance runner: one PASS/FAIL line per criterion.
// Usage: acceptance [--only N]

#include <cstring>
#include <exception>
#include <functional>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "dworkgeom/dwork.h"
#include "dworkgeom/fixed_locus.h"
#include "dworkgeom/k3.h"
#include "dworkgeom/named_groups.h"
#include "dworkgeom/orbifold.h"
#include "dworkgeom/wps.h"
#include "support/properties.h"

using namespace dworkgeom;

namespace {

struct Outcome {
  bool ok = true;
  std::vector<std::string> notes;

  void expect(bool cond, const std::string& what) {
    if (!cond) ok = false;
    notes.push_back(std::string(cond ? "" : "MISMATCH ") + what);
  }
};

std::string pair_str(long a, long b) { return "(" + std::to_string(a) + "," + std::to_string(b) + ")"; }

std::string factors(const std::vector<BigInt>& f) {
  std::string s;
  for (size_t i = 0; i < f.size(); ++i) s += (i ? "," : "") + f[i].get_str();
  return "(" + s + ")";
}

const DworkPencil& quintic() {
  static const DworkPencil p(4);
  return p;
}

void hodge_row(Outcome& o, const std::string& name, long h11, long h21) {
  const OrbifoldHodge h = chen_ruan(oracle::named(name), quintic());
  o.expect(h.h11() == h11 && h.h21() == h21,
           name + " " + pair_str(h.h11(), h.h21()) + " expected " + pair_str(h11, h21));
}

Outcome criterion1() {
  Outcome o;
  const auto q = hodge_diamond({3, 5}), s = hodge_diamond({4, 6}), k = hodge_diamond({2, 4});
  o.expect(q.h[2][1] == 101, "h21(quintic)=" + q.h[2][1].get_str());
  o.expect(s.h[3][1] == 426, "h31(sextic)=" + s.h[3][1].get_str());
  o.expect(s.h[2][2] == 1752, "h22(sextic)=" + s.h[2][2].get_str());
  o.expect(k.h[1][1] == 20, "h11(quartic)=" + k.h[1][1].get_str());
  return o;
}

Outcome criterion2() {
  Outcome o;
  const BigInt a = euler_characteristic({2, 4}), b = euler_characteristic({4, 6}), c = euler_characteristic({3, 5});
  o.expect(a == 24, "e(quartic surface)=" + a.get_str());
  o.expect(b == 2610, "e(sextic fourfold)=" + b.get_str());
  o.expect(c == -200, "e(quintic threefold)=" + c.get_str());
  return o;
}

Outcome criterion3() {
  Outcome o;
  bool counts = true;
  for (int n = 2; n <= 6; ++n) {
    const auto rep = singular_fibers(n);
    BigInt want;
    mpz_ui_pow_ui(want.get_mpz_t(), n + 1, n - 1);
    counts = counts && static_cast<int>(rep.fibers.size()) == n + 1;
    for (const auto& f : rep.fibers) counts = counts && f.node_count == want;
  }
  o.expect(counts, "n+1 fibers with (n+1)^(n-1) nodes for n=2..6");
  bool scan = true;
  for (const auto& f : singular_fibers(2, true).fibers) {
    const std::set<std::vector<int>> listed(f.nodes.begin(), f.nodes.end());
    scan = scan && listed == oracle::scan_cubic_nodes(f.r);
  }
  o.expect(scan, "n=2 nodes match the scan");
  return o;
}

Outcome criterion4() {
  Outcome o;
  const Subgroup g = oracle::named("A5xH4");
  const size_t classes = conjugacy_classes(g).size();
  const size_t cent = centralizer(GroupElement::permutation(4, "(12)(34)"), g).order();
  const size_t d5 = conjugacy_classes(oracle::named("D5a")).size();
  o.expect(g.order() == 7500, "|A5xH4|=" + std::to_string(g.order()));
  o.expect(classes == 25, "classes=" + std::to_string(classes));
  o.expect(cent == 20, "|C((12)(34))|=" + std::to_string(cent));
  o.expect(d5 == 4, "D5 classes=" + std::to_string(d5));
  return o;
}

Outcome criterion5() {
  Outcome o;
  const std::vector<std::pair<std::string, std::string>> want = {{"(12)(34)", "C0+C6"},
                                                                 {"h(0,0,1,1,3)", "P10"},
                                                                 {"h(0,0,0,1,4)(123)", "P2"},
                                                                 {"(12345)", "free"},
                                                                 {"h(0,1,2,3,4)", "free"}};
  for (const auto& [spec, sig] : want) {
    bool stable = true;
    std::string got;
    for (std::uint64_t seed : {0, 1, 2}) {
      LambdaPolicy p;
      p.seed = seed;
      got = fixed_locus(parse_group_spec(4, spec).at(0), quintic(), p).signature();
      stable = stable && got == sig;
    }
    o.expect(stable, spec + " -> " + got);
  }
  return o;
}

Outcome criterion6() {
  Outcome o;
  const std::vector<std::tuple<std::string, long, long>> rows = {
      {"Z2", 3, 59}, {"Z3", 5, 49}, {"Z5a", 5, 49}, {"Z5b", 21, 17}, {"Z5", 1, 21}, {"Z5c", 1, 21}};
  for (const auto& [name, h11, h21] : rows) {
    const Subgroup g = oracle::named(name);
    const auto r = fixed_locus(g.generators()[0], quintic());
    const auto q = prime_order_quotient(static_cast<int>(g.order()), r.point_count(), r.curve_count(), r.genera(), -200);
    o.expect(q.h11 == h11 && q.h12 == h21, name + " closed form " + pair_str(q.h11, q.h12));
    hodge_row(o, name, h11, h21);
  }
  return o;
}

Outcome criterion7() {
  Outcome o;
  hodge_row(o, "A5", 5, 15);
  hodge_row(o, "A4", 7, 29);
  hodge_row(o, "D5a", 3, 19);
  hodge_row(o, "S3", 5, 33);
  hodge_row(o, "Z5", 1, 21);
  hodge_row(o, "V4", 7, 41);
  hodge_row(o, "Z3", 5, 49);
  hodge_row(o, "Z2", 3, 59);
  return o;
}

Outcome criterion8() {
  Outcome o;
  hodge_row(o, "G1", 17, 21);
  hodge_row(o, "G2", 49, 5);
  hodge_row(o, "G3", 21, 1);
  for (const auto& [g, z] : std::vector<std::pair<std::string, std::string>>{{"G1", "Z5b"}, {"G2", "Z5a"}, {"G3", "Z5c"}}) {
    const auto a = chen_ruan(oracle::named(g), quintic()), b = chen_ruan(oracle::named(z), quintic());
    o.expect(a.h11() == b.h21() && a.h21() == b.h11(), "mirror " + g + " <-> " + z);
  }
  return o;
}

Outcome criterion9() {
  Outcome o;
  hodge_row(o, "Z10", 11, 11);
  hodge_row(o, "Z15", 17, 21);
  hodge_row(o, "A5xH4", 15, 5);
  return o;
}

Outcome criterion10() {
  Outcome o;
  const long z2 = invariant_h12(oracle::named("Z2"), quintic()).p12;
  const long free = invariant_h12(oracle::named("Z5xZ5"), quintic()).p12;
  o.expect(z2 == 53, "p12(<(12)(34)>)=" + std::to_string(z2));
  o.expect(free == 5, "p12(free (Z/5)^2)=" + std::to_string(free));
  int tested = 0;
  bool lefschetz = true;
  for (const auto& name : oracle::period_preserving_groups()) {
    const auto inv = invariant_h12(oracle::named(name), quintic());
    const BigRational lhs = 2 * (1 + inv.p11) - (2 + 2 * inv.p12);
    lefschetz = lefschetz && lhs == make_rational(inv.lefschetz_sum, static_cast<long>(inv.group_order));
    ++tested;
  }
  o.expect(lefschetz, "Lefschetz identity on " + std::to_string(tested) + " subgroups");
  return o;
}

Outcome criterion11() {
  Outcome o;
  bool wf = true, crepant = true, ages = true;
  for (int n = 2; n <= 30; ++n) {
    wf = wf && wellformed_check(WeightSystem::symmetric_quotient(n)).well_formed == (n >= 5);
    crepant = crepant && terminality_verdict(n).has_crepant_resolution == (n <= 4);
    const AgeQuery q = AgeQuery::make(n, 3);
    ages = ages && ageterm(q) == (q.t == 2 ? q.s + 1 : q.s);
  }
  o.expect(wf, "well-formed iff n >= 5 (n=2..30)");
  o.expect(ages, "k=3 age is s for t=0,1 and s+1 for t=2");
  o.expect(crepant, "crepant resolution iff n in {2,3,4}");
  return o;
}

Outcome criterion12() {
  Outcome o;
  o.expect(lines_on_fermat().size() == 48, "48 lines on F");
  const IntegralLattice ns = ns_fermat();
  o.expect(ns.det == -64 && factors(ns.discriminant_group) == "(8,8)",
           "NS(F) det " + ns.det.get_str() + " group " + factors(ns.discriminant_group));
  const auto h3 = coinvariant_lattice(h3_action()).lattice;
  o.expect(h3.rank() == 18, "Omega_H3 rank " + std::to_string(h3.rank()));
  const auto s4 = coinvariant_lattice(s4_action()).lattice;
  o.expect(s4.rank() == 17 && factors(s4.discriminant_group) == "(4,12,12)",
           "Omega_S4 rank " + std::to_string(s4.rank()) + " group " + factors(s4.discriminant_group));
  const auto a4 = coinvariant_lattice(a4_action()).lattice;
  o.expect(a4.rank() == 16 && factors(a4.discriminant_group) == "(2,2,12,12)",
           "Omega_A4 rank " + std::to_string(a4.rank()) + " group " + factors(a4.discriminant_group));
  const XLambdaReport x = ns_xlambda();
  o.expect(factors(x.ns.lattice.discriminant_group) == "(4,8,8)",
           "NS(X_lambda) group " + factors(x.ns.lattice.discriminant_group));
  o.expect(x.det_ratio == 4 && x.equals_v_perp, "index-2 overlattice (det ratio " + x.det_ratio.get_str() + ")");
  const HalvingResult k = twice_lattice_test(transcendental_xlambda());
  o.expect(k.halvable, std::string("Kummer halving ") + (k.halvable ? "passes" : "fails"));
  return o;
}

Outcome criterion13() {
  Outcome o;
  auto suite = [&](const std::string& name, const oracle::PropertyResult& r) {
    o.expect(r.ok(), name + " " + std::to_string(r.checked) + " checks, " + std::to_string(r.failures.size()) + " failures");
  };
  suite("age pairing", oracle::age_pairing());
  suite("conjugation invariance", oracle::conjugation_invariance(200, 2024));
  suite("SNF invariance", oracle::snf_unimodular_invariance(200, 5));
  suite("Jacobian ring d<=7", oracle::jacobian_against_enumeration(7));
  return o;
}

}  // namespace

int main(int argc, char** argv) {
  int only = 0;
  for (int i = 1; i < argc; ++i) {
    if (std::strcmp(argv[i], "--only") == 0 && i + 1 < argc) {
      only = std::stoi(argv[++i]);
    } else {
      std::cerr << "usage: acceptance [--only N]\n";
      return 2;
    }
  }
  const std::vector<std::function<Outcome()>> criteria = {criterion1, criterion2,  criterion3,  criterion4, criterion5,
                                                          criterion6, criterion7,  criterion8,  criterion9, criterion10,
                                                          criterion11, criterion12, criterion13};
  if (only < 0 || only > static_cast<int>(criteria.size())) {
    std::cerr << "no criterion " << only << "\n";
    return 2;
  }
  int failed = 0;
  for (size_t i = 0; i < criteria.size(); ++i) {
    if (only && static_cast<int>(i) + 1 != only) continue;
    Outcome out;
    try {
      out = criteria[i]();
    } catch (const std::exception& e) {
      out.ok = false;
      out.notes.push_back(std::string("error: ") + e.what());
    }
    std::ostringstream line;
    line << "criterion " << (i + 1) << ": " << (out.ok ? "PASS" : "FAIL");
    for (size_t k = 0; k < out.notes.size(); ++k) line << (k ? "; " : "  ") << out.notes[k];
    std::cout << line.str() << std::endl;
    failed += !out.ok;
  }
  return failed ? 1 : 0;
}
