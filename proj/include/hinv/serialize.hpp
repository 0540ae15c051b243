#pragma once

#include <string>

#include "hinv/classify.hpp"
#include "hinv/orbits.hpp"
#include "hinv/realize.hpp"
#include "hinv/secthree.hpp"
#include "json.hpp"

namespace hinv {

using json = nlohmann::ordered_json;

// Maps are written as the list of generator images, in generator order.

json to_json(const RootOfUnity& r);
RootOfUnity root_from_json(const json& j);
/// {"M": M, "coeffs": ["p/q", ...]}, lowest terms, sign on the numerator.
json to_json(const CycNum& c);
CycNum cyc_from_json(const json& j);
json to_json(const GroupElem& g);
json to_json(const GroupMap& f);
GroupMap map_from_json(const FinAbGroup& source, const FinAbGroup& target, const json& images);
json to_json(const FactorSet& s);
json to_json(const ModMatrix2& m);
json to_json(const CycMatrix& m);
json to_json(const HomMapData& m);
HomMapData hom_map_from_json(const json& j);
json to_json(const WitnessData& w);

json to_json(const ExpectedClassification& e, int64_t n, int64_t M);
/// The "result" part of a classification document.
json result_to_json(const ClassificationReport& r);
/// orbit,lambda_a,lambda_b,iso_class,equiv_class with exponents in mu_M.
std::string report_to_csv(const ClassificationReport& r);
std::string report_to_text(const ClassificationReport& r);

/// {"G", "tau", "g0", "psi0", "gamma", "t_seq", "kind"}; psi0 null for D = F.
InvolutionDatum datum_from_json(const json& j);
json to_json(const InvolutionDatum& d);

}  // namespace hinv
