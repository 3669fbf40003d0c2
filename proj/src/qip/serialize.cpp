// Copyright 2026 The fzq Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "fzq/qip/serialize.hpp"

#include <json.hpp>

#include "fzq/error.hpp"

namespace fzq::qip {

namespace {

using Json = nlohmann::ordered_json;

Json terms_json(const LinExpr& e) {
    Json terms = Json::array();
    for (const auto& t : e.terms) {
        Json j;
        j["var"] = t.var;
        j["coef"] = t.coef;
        terms.push_back(std::move(j));
    }
    return terms;
}

Json expr_json(const LinExpr& e) {
    Json j;
    j["terms"] = terms_json(e);
    j["constant"] = e.constant;
    return j;
}

Json origin_json(const Origin& o) {
    if (o.kind == Origin::Kind::Model) {
        return "model";
    }
    Json j;
    j["kind"] = "aux";
    j["builtin"] = o.builtin;
    j["ordinal"] = o.ordinal;
    j["role"] = o.role;
    return j;
}

Json provenance_json(const std::vector<Provenance>& ps) {
    Json arr = Json::array();
    for (const auto& p : ps) {
        Json j;
        j["builtin"] = p.builtin;
        j["constraint"] = p.constraint;
        arr.push_back(std::move(j));
    }
    return arr;
}

[[noreturn]] void schema(const std::string& path, const std::string& what) {
    throw Error(ErrorCode::SchemaError, path, path + ": " + what);
}

const Json& field(const Json& obj, const char* key, const std::string& path) {
    if (!obj.is_object()) {
        schema(path, "expected an object");
    }
    auto it = obj.find(key);
    if (it == obj.end()) {
        schema(path, std::string("missing key \"") + key + "\"");
    }
    return *it;
}

const Json& array_field(const Json& obj, const char* key, const std::string& path) {
    const Json& j = field(obj, key, path);
    if (!j.is_array()) {
        schema(path + "." + key, "expected an array");
    }
    return j;
}

std::int64_t int_field(const Json& obj, const char* key, const std::string& path) {
    const Json& j = field(obj, key, path);
    if (!j.is_number_integer()) {
        schema(path + "." + key, "expected an integer");
    }
    return j.get<std::int64_t>();
}

std::string string_field(const Json& obj, const char* key, const std::string& path) {
    const Json& j = field(obj, key, path);
    if (!j.is_string()) {
        schema(path + "." + key, "expected a string");
    }
    return j.get<std::string>();
}

LinExpr read_terms(const Json& obj, const std::string& path) {
    LinExpr e;
    const Json& terms = array_field(obj, "terms", path);
    for (std::size_t i = 0; i < terms.size(); ++i) {
        const std::string p = path + ".terms[" + std::to_string(i) + "]";
        // Kept as written; validate reports non-canonical input.
        e.terms.push_back({string_field(terms[i], "var", p), int_field(terms[i], "coef", p)});
    }
    e.constant = int_field(obj, "constant", path);
    return e;
}

Origin read_origin(const Json& j, const std::string& path) {
    if (j.is_string() && j.get<std::string>() == "model") {
        return Origin::model();
    }
    if (!j.is_object() || string_field(j, "kind", path) != "aux") {
        schema(path, "origin must be \"model\" or an aux object");
    }
    return Origin::aux(string_field(j, "builtin", path), int_field(j, "ordinal", path), string_field(j, "role", path));
}

std::vector<Provenance> read_provenance(const Json& meta, const char* key) {
    std::vector<Provenance> out;
    const Json& arr = array_field(meta, key, "meta");
    for (std::size_t i = 0; i < arr.size(); ++i) {
        const std::string p = std::string("meta.") + key + "[" + std::to_string(i) + "]";
        out.push_back({string_field(arr[i], "builtin", p), int_field(arr[i], "constraint", p)});
    }
    return out;
}

}  // namespace

std::string serialize(const QipProblem& problem) {
    Json root;
    Json vars = Json::array();
    for (const auto& v : problem.vars) {
        Json j;
        j["name"] = v.name;
        j["lo"] = v.domain.lo;
        j["hi"] = v.domain.hi;
        j["origin"] = origin_json(v.origin);
        vars.push_back(std::move(j));
    }
    root["variables"] = std::move(vars);

    Json obj;
    obj["sense"] = problem.objective.sense == Objective::Sense::Min ? "min" : "satisfy";
    obj["negated"] = problem.objective.negated;
    obj["terms"] = terms_json(problem.objective.expr);
    obj["constant"] = problem.objective.expr.constant;
    root["objective"] = std::move(obj);

    Json eqs = Json::array();
    for (const auto& e : problem.equalities) {
        eqs.push_back(expr_json(e));
    }
    root["equalities"] = std::move(eqs);
    Json ineqs = Json::array();
    for (const auto& e : problem.inequalities) {
        ineqs.push_back(expr_json(e));
    }
    root["inequalities"] = std::move(ineqs);

    Json prods = Json::array();
    for (const auto& p : problem.products) {
        Json j;
        j["result"] = p.result;
        j["left"] = p.left;
        j["right"] = p.right;
        prods.push_back(std::move(j));
    }
    root["products"] = std::move(prods);

    Json groups = Json::array();
    for (const auto& g : problem.onehot_groups) {
        Json j;
        j["int_var"] = g.int_var;
        Json bits = Json::array();
        for (const auto& b : g.bits) {
            Json bj;
            bj["var"] = b.var;
            bj["value"] = b.value;
            bits.push_back(std::move(bj));
        }
        j["bits"] = std::move(bits);
        groups.push_back(std::move(j));
    }
    root["onehot_groups"] = std::move(groups);

    Json meta;
    meta["equalities"] = provenance_json(problem.meta.equalities);
    meta["inequalities"] = provenance_json(problem.meta.inequalities);
    meta["products"] = provenance_json(problem.meta.products);
    meta["exclusive_results"] = problem.meta.exclusive_results;
    root["meta"] = std::move(meta);

    return root.dump(2) + "\n";
}

QipProblem deserialize(std::string_view text) {
    Json root;
    try {
        root = Json::parse(text.begin(), text.end());
    } catch (const Json::parse_error& e) {
        throw Error(ErrorCode::SchemaError, "<document>", std::string("not valid JSON: ") + e.what());
    }
    if (!root.is_object()) {
        schema("<document>", "expected an object at top level");
    }

    QipProblem p;
    const Json& vars = array_field(root, "variables", "<document>");
    for (std::size_t i = 0; i < vars.size(); ++i) {
        const std::string path = "variables[" + std::to_string(i) + "]";
        QipVar v;
        v.name = string_field(vars[i], "name", path);
        v.domain = {int_field(vars[i], "lo", path), int_field(vars[i], "hi", path)};
        v.origin = read_origin(field(vars[i], "origin", path), path + ".origin");
        p.vars.push_back(std::move(v));
    }

    const Json& obj = field(root, "objective", "<document>");
    const std::string sense = string_field(obj, "sense", "objective");
    if (sense == "min") {
        p.objective.sense = Objective::Sense::Min;
    } else if (sense != "satisfy") {
        schema("objective.sense", "expected \"min\" or \"satisfy\"");
    }
    const Json& neg = field(obj, "negated", "objective");
    if (!neg.is_boolean()) {
        schema("objective.negated", "expected a boolean");
    }
    p.objective.negated = neg.get<bool>();
    p.objective.expr = read_terms(obj, "objective");

    const Json& eqs = array_field(root, "equalities", "<document>");
    for (std::size_t i = 0; i < eqs.size(); ++i) {
        p.equalities.push_back(read_terms(eqs[i], "equalities[" + std::to_string(i) + "]"));
    }
    const Json& ineqs = array_field(root, "inequalities", "<document>");
    for (std::size_t i = 0; i < ineqs.size(); ++i) {
        p.inequalities.push_back(read_terms(ineqs[i], "inequalities[" + std::to_string(i) + "]"));
    }
    const Json& prods = array_field(root, "products", "<document>");
    for (std::size_t i = 0; i < prods.size(); ++i) {
        const std::string path = "products[" + std::to_string(i) + "]";
        p.products.push_back({string_field(prods[i], "result", path), string_field(prods[i], "left", path),
                              string_field(prods[i], "right", path)});
    }
    const Json& groups = array_field(root, "onehot_groups", "<document>");
    for (std::size_t i = 0; i < groups.size(); ++i) {
        const std::string path = "onehot_groups[" + std::to_string(i) + "]";
        OneHotGroup g;
        g.int_var = string_field(groups[i], "int_var", path);
        const Json& bits = array_field(groups[i], "bits", path);
        for (std::size_t k = 0; k < bits.size(); ++k) {
            const std::string bp = path + ".bits[" + std::to_string(k) + "]";
            g.bits.push_back({string_field(bits[k], "var", bp), int_field(bits[k], "value", bp)});
        }
        p.onehot_groups.push_back(std::move(g));
    }

    const Json& meta = field(root, "meta", "<document>");
    p.meta.equalities = read_provenance(meta, "equalities");
    p.meta.inequalities = read_provenance(meta, "inequalities");
    p.meta.products = read_provenance(meta, "products");
    const Json& ex = array_field(meta, "exclusive_results", "meta");
    for (const auto& e : ex) {
        if (!e.is_string()) {
            schema("meta.exclusive_results", "expected strings");
        }
        p.meta.exclusive_results.push_back(e.get<std::string>());
    }
    return p;
}

}  // namespace fzq::qip
