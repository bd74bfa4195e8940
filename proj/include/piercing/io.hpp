#pragma once

#include <string>
#include <variant>

#include <json.hpp>

#include "piercing/fractional.hpp"
#include "piercing/highdim.hpp"
#include "piercing/lab.hpp"
#include "piercing/transversal.hpp"

namespace piercing {

using Json = nlohmann::ordered_json;

// Instance files (UTF-8 JSON). Scalars are strings holding "p/q", an
// integer or a decimal literal, or JSON integers; JSON floats are rejected
// because their text is not preserved exactly.
//   {"kind":"grid","x":[...],"y":[...],"Z":[[...], ...]}
//   {"kind":"highdim","d":d,"x":[[a,b,c], ...],"z":{"t1,...,td":[d-1 values], ...}}
//   {"kind":"scene","A":[piece...],"B":[piece...]}
//     piece = {"vertices":[[x,y,z], ...],"plane":{"point":[x,y,z],"span":[[...],[...]]}}
using Instance = std::variant<GridInstance, HighDimInstance, GeneralScene>;

Rat rat_from_json(const Json& j);
Json to_json(const Rat& q);
Json to_json(const RatVec& v);
Json to_json(const RatMat& m);
Json to_json(const Point3& p);

Json to_json(const GridInstance& inst);
Json to_json(const HighDimInstance& inst);
Json to_json(const GeneralScene& scene);
Json to_json(const PlaneLine& line);
Json to_json(const Line3& line);
Json to_json(const ZInterval& interval);
Json to_json(const PierceReport& report);
Json to_json(const PiercingResult& result);
Json to_json(const DualCertificate& cert);
Json to_json(const ContradictionLedger& ledger);
Json to_json(const FuzzReport& report);
Json to_json(const Lemma33Trace& trace);
Json to_json(const FracResult& result);
Json to_json(const SplitWitness& witness);
Json to_json(const HighDimPierce& result);
Json to_json(const CounterexampleReport& report);

/// Throws Error(E_PARSE) on malformed documents; instance validation errors
/// (E_MONOTONE, E_DIMENSION, E_PLANE) propagate unchanged.
Instance instance_from_json(const Json& doc);
Instance load_instance(const std::string& path);
void save_json(const std::string& path, const Json& doc);

}  // namespace piercing
