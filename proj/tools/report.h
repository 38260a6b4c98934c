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

#ifndef DWORKGEOM_TOOLS_REPORT_H_
#define DWORKGEOM_TOOLS_REPORT_H_

#include <string>

#include "json.hpp"

#include "dworkgeom/dwork.h"
#include "dworkgeom/fixed_locus.h"
#include "dworkgeom/k3.h"
#include "dworkgeom/orbifold.h"
#include "dworkgeom/wps.h"

namespace dworkgeom::report {

using Json = nlohmann::ordered_json;

inline constexpr const char* kSchema = "dworkgeom.report/1";

// Every number leaves the tool wrapped with its provenance.
Json num(long v);
Json num(const BigInt& v);
Json num(const BigRational& v);

Json envelope(const std::string& command, Json inputs, std::uint64_t seed, Json results);

Json hodge_json(const HodgeDiamond& h);
std::string hodge_md(const HodgeDiamond& h);

Json singular_json(const SingularFiberReport& r);

Json fixed_json(const FixedLocusReport& r);
std::string fixed_md(const FixedLocusReport& r);

Json quotient_json(const OrbifoldHodge& h);
std::string quotient_md(const std::string& group, const OrbifoldHodge& h);

Json wps_json(const WellFormedReport& wf, const TerminalityWitness& tw);
std::string wps_md(int n, const WellFormedReport& wf, const TerminalityWitness& tw);

Json lattice_json(const IntegralLattice& l);
std::string lattice_md(const std::string& title, const IntegralLattice& l);

}  // namespace dworkgeom::report

#endif  // DWORKGEOM_TOOLS_REPORT_H_
