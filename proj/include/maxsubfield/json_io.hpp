/*
   Copyright 2026 the maxsubfield authors

   Licensed under the Apache License, Version 2.0 (the "License");
   you may not use this file except in compliance with the License.
   You may obtain a copy of the License at

        http://www.apache.org/licenses/LICENSE-2.0

   Unless required by applicable law or agreed to in writing, software
   distributed under the License is distributed on an "AS IS" BASIS,
   WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
   See the License for the specific language governing permissions and
   limitations under the License.
*/

#ifndef MAXSUBFIELD_JSON_IO_HPP
#define MAXSUBFIELD_JSON_IO_HPP

#include <json.hpp>

#include "maxsubfield/witness.hpp"

namespace msf {

/// Bumped on any breaking change to the documented encodings
/// (docs/schemas.md).
inline constexpr int kSchemaVersion = 1;

nlohmann::json field_to_json(const Field& f);
Field field_from_json(const nlohmann::json& j);

/// Q: decimal string "p/q" (or "p"); F_p: integer residue; F_{p^k}: array of
/// residues (polynomial-basis coefficients, constant first).
nlohmann::json element_to_json(const FieldElement& e);
FieldElement element_from_json(const nlohmann::json& j, const Field& f);

nlohmann::json matrix_to_json(const Matrix& m);
Matrix matrix_from_json(const nlohmann::json& j, const Field& f);

nlohmann::json poly_to_json(const Poly& p);
Poly poly_from_json(const nlohmann::json& j, const Field& f);

nlohmann::json quaternion_to_json(const Quaternion& q);
Quaternion quaternion_from_json(const nlohmann::json& j, const std::shared_ptr<const QuaternionAlgebra>& alg);

nlohmann::json certificate_to_json(const DegreeCertificate& c);
nlohmann::json model_to_json(const Model& m);
nlohmann::json witness_report_to_json(const WitnessReport& r);
nlohmann::json audit_report_to_json(const AuditReport& r);

// ---- input specs (shared by the CLI and the Python bindings) --------------

/// Shorthands identity<n>, zero<n>, e<i><j> (single digits), diag:a,b,...,
/// companion:c0,c1,..., or JSON ([[row],...] / {"n":..,"entries":[...]}).
Matrix parse_matrix_spec(const std::string& spec, const Field& f);

/// "t,x,y,z" with field-element literals.
Quaternion parse_quat_spec(const std::string& spec, const std::shared_ptr<const QuaternionAlgebra>& alg);

/// "matrix:<m>" or "quat:<a>,<b>"; the field applies to both.
Model parse_model_spec(const std::string& spec, const Field& field);

}  // namespace msf

#endif
