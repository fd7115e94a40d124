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

#include "maxsubfield/json_io.hpp"

namespace msf {

using nlohmann::json;

json field_to_json(const Field& f) {
    switch (f.kind()) {
        case FieldKind::rationals:
            return json{{"kind", "Q"}};
        case FieldKind::prime:
            return json{{"kind", "Fp"}, {"p", f.prime()}};
        case FieldKind::extension:
            return json{{"kind", "Fpk"}, {"p", f.prime()}, {"k", f.extension_degree()}, {"modulus", f.modulus()}};
    }
    throw math_error("bad field");
}

Field field_from_json(const json& j) {
    std::string kind = j.at("kind").get<std::string>();
    if (kind == "Q") return Field::rationals();
    if (kind == "Fp") return Field::prime(j.at("p").get<std::uint64_t>());
    if (kind == "Fpk")
        return Field::extension_with_modulus(j.at("p").get<std::uint64_t>(),
                                             j.at("modulus").get<std::vector<std::uint64_t>>());
    throw math_error("unknown field kind in JSON: " + kind);
}

json element_to_json(const FieldElement& e) {
    switch (e.kind()) {
        case FieldKind::rationals:
            return e.to_string();
        case FieldKind::prime:
            return e.residue();
        case FieldKind::extension:
            return e.ext_coeffs();
    }
    throw math_error("bad element");
}

FieldElement element_from_json(const json& j, const Field& f) {
    if (j.is_string()) return f.parse_element(j.get<std::string>());
    if (j.is_number_integer() || j.is_number_unsigned()) {
        if (j.is_number_unsigned() && f.kind() == FieldKind::prime) {
            std::uint64_t v = j.get<std::uint64_t>();
            return f.from_rational(mpq_class(std::to_string(v)));
        }
        return f.from_int(j.get<long long>());
    }
    if (j.is_array()) {
        if (f.kind() != FieldKind::extension) throw math_error("array element encoding needs an extension field");
        auto coeffs = j.get<std::vector<std::uint64_t>>();
        if (static_cast<int>(coeffs.size()) > f.extension_degree())
            throw math_error("too many coefficients for the extension degree");
        // assemble via the canonical index: sum c_i p^i
        mpz_class idx = 0;
        for (std::size_t i = coeffs.size(); i-- > 0;) {
            idx *= f.prime();
            idx += static_cast<unsigned long>(coeffs[i] % f.prime());
        }
        return f.element_at(idx);
    }
    throw math_error("unsupported field element encoding in JSON");
}

json matrix_to_json(const Matrix& m) {
    json entries = json::array();
    for (int i = 0; i < m.size(); ++i)
        for (int j = 0; j < m.size(); ++j) entries.push_back(element_to_json(m.at(i, j)));
    return json{{"n", m.size()}, {"entries", entries}};
}

Matrix matrix_from_json(const json& j, const Field& f) {
    if (j.is_array()) {
        // array-of-rows form
        int n = static_cast<int>(j.size());
        Matrix m(n, f);
        for (int i = 0; i < n; ++i) {
            if (!j[i].is_array() || static_cast<int>(j[i].size()) != n)
                throw math_error("matrix rows must all have length " + std::to_string(n));
            for (int c = 0; c < n; ++c) m.at(i, c) = element_from_json(j[i][c], f);
        }
        return m;
    }
    int n = j.at("n").get<int>();
    const json& entries = j.at("entries");
    if (static_cast<int>(entries.size()) != n * n) throw math_error("matrix entry count mismatch");
    Matrix m(n, f);
    for (int i = 0; i < n; ++i)
        for (int c = 0; c < n; ++c) m.at(i, c) = element_from_json(entries[i * n + c], f);
    return m;
}

json poly_to_json(const Poly& p) {
    json coeffs = json::array();
    for (const auto& c : p.coeffs()) coeffs.push_back(element_to_json(c));
    return json{{"coeffs", coeffs}, {"degree", p.degree()}, {"text", p.to_string()}};
}

Poly poly_from_json(const json& j, const Field& f) {
    std::vector<FieldElement> coeffs;
    for (const auto& c : j.at("coeffs")) coeffs.push_back(element_from_json(c, f));
    return Poly(f, std::move(coeffs));
}

json quaternion_to_json(const Quaternion& q) {
    return json{{"t", element_to_json(q.t())},
                {"x", element_to_json(q.x())},
                {"y", element_to_json(q.y())},
                {"z", element_to_json(q.z())}};
}

Quaternion quaternion_from_json(const json& j, const std::shared_ptr<const QuaternionAlgebra>& alg) {
    const Field& f = alg->field();
    return alg->element(element_from_json(j.at("t"), f), element_from_json(j.at("x"), f),
                        element_from_json(j.at("y"), f), element_from_json(j.at("z"), f));
}

json certificate_to_json(const DegreeCertificate& c) {
    return json{{"min_poly", poly_to_json(c.minimal_polynomial)}, {"degree", c.degree}};
}

json model_to_json(const Model& m) {
    if (std::holds_alternative<MatrixModel>(m)) {
        const auto& mm = std::get<MatrixModel>(m);
        return json{{"type", "matrix"},
                    {"m", mm.m},
                    {"field", field_to_json(mm.field)},
                    {"dim", mm.m * mm.m}};
    }
    const auto& qm = std::get<QuatModel>(m);
    return json{{"type", "quaternion"},
                {"a", element_to_json(qm.algebra->a())},
                {"b", element_to_json(qm.algebra->b())},
                {"field", field_to_json(qm.algebra->field())},
                {"dim", 4}};
}

json witness_report_to_json(const WitnessReport& r) {
    json assignment = json::array();
    if (std::holds_alternative<std::vector<Matrix>>(r.assignment)) {
        for (const auto& m : std::get<std::vector<Matrix>>(r.assignment)) assignment.push_back(matrix_to_json(m));
    } else {
        for (const auto& q : std::get<std::vector<Quaternion>>(r.assignment))
            assignment.push_back(quaternion_to_json(q));
    }
    json value = std::holds_alternative<Matrix>(r.value) ? matrix_to_json(std::get<Matrix>(r.value))
                                                         : quaternion_to_json(std::get<Quaternion>(r.value));
    json model = model_to_json(r.model);
    if (!r.division_evidence.empty()) model["division"] = r.division_evidence;
    return json{{"schema_version", kSchemaVersion},
                {"expression", r.expression},
                {"kind", r.kind},
                {"model", model},
                {"assignment", assignment},
                {"value", value},
                {"certificate", certificate_to_json(r.certificate)},
                {"maximal", r.maximal},
                {"seed", r.seed},
                {"budgets", json{{"trials", r.budgets.trials}, {"retries", r.budgets.retries}, {"budget", r.budgets.budget}}},
                {"caveats", r.caveats}};
}

json audit_report_to_json(const AuditReport& r) {
    return json{{"schema_version", kSchemaVersion},
                {"expression", r.expression},
                {"model", model_to_json(r.model)},
                {"trials", r.trials},
                {"seed", r.seed},
                {"max_degree_observed", r.max_degree_observed},
                {"dim", r.model_dim.get_ui()},
                {"bound_holds", r.bound_holds},
                {"equality", r.equality},
                {"insufficient_sampling", r.insufficient},
                {"degree_histogram", r.degree_histogram}};
}

// ---- input specs ------------------------------------------------------------

namespace {
std::vector<std::string> split_spec(const std::string& s, char sep) {
    std::vector<std::string> parts;
    std::size_t start = 0;
    while (true) {
        std::size_t at = s.find(sep, start);
        if (at == std::string::npos) {
            parts.push_back(s.substr(start));
            break;
        }
        parts.push_back(s.substr(start, at - start));
        start = at + 1;
    }
    return parts;
}
}  // namespace

Matrix parse_matrix_spec(const std::string& spec, const Field& f) {
    auto starts = [&](const char* pre) { return spec.rfind(pre, 0) == 0; };
    try {
        if (starts("identity")) return Matrix::identity(std::stoi(spec.substr(8)), f);
        if (starts("zero")) return Matrix::zero(std::stoi(spec.substr(4)), f);
        if (starts("diag:")) {
            std::vector<FieldElement> d;
            for (const auto& part : split_spec(spec.substr(5), ',')) d.push_back(f.parse_element(part));
            return Matrix::diagonal(f, d);
        }
        if (starts("companion:")) {
            std::vector<FieldElement> c;
            for (const auto& part : split_spec(spec.substr(10), ',')) c.push_back(f.parse_element(part));
            return Matrix::companion(f, c);
        }
        if (spec.size() == 3 && spec[0] == 'e' && std::isdigit(static_cast<unsigned char>(spec[1])) &&
            std::isdigit(static_cast<unsigned char>(spec[2]))) {
            int i = spec[1] - '0', j = spec[2] - '0';
            return Matrix::unit(std::max(i, j), f, i, j);
        }
        if (!spec.empty() && (spec[0] == '[' || spec[0] == '{'))
            return matrix_from_json(nlohmann::json::parse(spec), f);
    } catch (const nlohmann::json::exception& e) {
        throw parse_error(std::string("malformed matrix JSON: ") + e.what(), 0);
    } catch (const std::invalid_argument&) {
        throw parse_error("malformed matrix shorthand: " + spec, 0);
    }
    throw parse_error("unrecognized matrix spec: " + spec, 0);
}

Quaternion parse_quat_spec(const std::string& spec, const std::shared_ptr<const QuaternionAlgebra>& alg) {
    auto parts = split_spec(spec, ',');
    if (parts.size() != 4) throw parse_error("quaternion spec needs four components t,x,y,z", 0);
    const Field& f = alg->field();
    return alg->element(f.parse_element(parts[0]), f.parse_element(parts[1]), f.parse_element(parts[2]),
                        f.parse_element(parts[3]));
}

Model parse_model_spec(const std::string& spec, const Field& field) {
    auto starts = [&](const char* pre) { return spec.rfind(pre, 0) == 0; };
    try {
        if (starts("matrix:")) return MatrixModel{std::stoi(spec.substr(7)), field};
        if (starts("quat:")) {
            auto parts = split_spec(spec.substr(5), ',');
            if (parts.size() != 2) throw parse_error("quaternion model needs quat:<a>,<b>", 0);
            return QuatModel{QuaternionAlgebra::create(field, field.parse_element(parts[0]),
                                                       field.parse_element(parts[1]))};
        }
    } catch (const std::invalid_argument&) {
        throw parse_error("malformed model spec: " + spec, 0);
    }
    throw parse_error("unrecognized model spec: " + spec + " (expected matrix:<m> or quat:<a>,<b>)", 0);
}

}  // namespace msf
