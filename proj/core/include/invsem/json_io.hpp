#pragma once

#include <nlohmann/json.hpp>
#include <string>

#include "invsem/decide.hpp"
#include "invsem/matrix.hpp"
#include "invsem/measure.hpp"
#include "invsem/representation.hpp"
#include "invsem/witness.hpp"

namespace invsem {

using nlohmann::json;

json xset_to_json(const XSet& s);
XSet xset_from_json(const Universe& u, const json& j);

json measure_to_json(const RationalMeasure& m);
json feasibility_to_json(const FeasibilityResult& r);

json folner_to_json(const Representation& rep, const FolnerCertificate& c);
FolnerCertificate folner_from_json(const Representation& rep, const json& j);

json equi_witness_to_json(const Representation& rep, const EquiWitness& w);
EquiWitness equi_witness_from_json(const Representation& rep, const json& j);

json paradox_witness_to_json(const Representation& rep, const ParadoxWitness& w);
ParadoxWitness paradox_witness_from_json(const Representation& rep, const json& j);

json matrix_to_json(const RationalMatrix& m);

json leveled_set_to_json(const LeveledSet& s);
LeveledSet leveled_set_from_json(const Universe& u, const json& j);

}  // namespace invsem
