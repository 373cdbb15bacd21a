#include "grsdual/codespec.hpp"

#include <json.hpp>

namespace grsdual {

using ordered_json = nlohmann::ordered_json;

CodeSpecFile make_codespec(const Construction& built, CodeKind kind, bool with_matrix) {
    const Field& f = *built.plan.field;
    CodeSpecFile spec;
    spec.p = f.p();
    spec.m = f.m();
    spec.modulus = f.modulus();
    spec.g_enc = f.g().enc;
    spec.kind = kind;
    spec.tag = built.plan.tag;
    spec.r = built.plan.r;
    spec.s = built.plan.s;
    spec.t = built.plan.t;
    spec.n = static_cast<std::uint32_t>(built.code.length());
    spec.k = built.code.k;
    spec.extended = built.code.extended;
    for (Elem e : built.code.points.points()) spec.a_enc.push_back(e.enc);
    for (Elem e : built.code.scaling.values()) spec.v_enc.push_back(e.enc);
    if (with_matrix) {
        GenMatrix g = generator_matrix(built.code);
        std::vector<std::vector<std::uint32_t>> rows(g.rows());
        for (std::size_t rr = 0; rr < g.rows(); ++rr) {
            rows[rr].resize(g.cols());
            for (std::size_t cc = 0; cc < g.cols(); ++cc) rows[rr][cc] = g.at(rr, cc).enc;
        }
        spec.matrix = std::move(rows);
    }
    return spec;
}

std::string to_json(const CodeSpecFile& spec) {
    ordered_json j;
    j["format"] = "grs-code";
    j["version"] = spec.version;
    j["field"] = {{"p", spec.p}, {"m", spec.m}, {"modulus", spec.modulus}, {"g", spec.g_enc}};
    j["construction"] = {{"kind", to_string(spec.kind)},
                         {"case", to_string(spec.tag)},
                         {"r", spec.r},
                         {"s", spec.s},
                         {"t", spec.t}};
    j["code"] = {{"n", spec.n},
                 {"k", spec.k},
                 {"extended", spec.extended},
                 {"a", spec.a_enc},
                 {"v", spec.v_enc}};
    if (spec.matrix) j["generator_matrix"] = *spec.matrix;
    return j.dump(2) + "\n";
}

CodeSpecFile from_json(const std::string& text) {
    ordered_json j;
    try {
        j = ordered_json::parse(text);
    } catch (const std::exception& e) {
        throw SpecParseError(std::string("invalid JSON: ") + e.what());
    }
    try {
        CodeSpecFile spec;
        if (j.at("format").get<std::string>() != "grs-code")
            throw SpecParseError("not a grs-code file");
        spec.version = j.at("version").get<std::uint32_t>();
        if (spec.version != CodeSpecFile::kVersion)
            throw SpecParseError("unsupported format version " + std::to_string(spec.version));
        const auto& jf = j.at("field");
        spec.p = jf.at("p").get<std::uint32_t>();
        spec.m = jf.at("m").get<std::uint32_t>();
        spec.modulus = jf.at("modulus").get<std::vector<std::uint32_t>>();
        spec.g_enc = jf.at("g").get<std::uint32_t>();
        const auto& jc = j.at("construction");
        spec.kind = code_kind_from_string(jc.at("kind").get<std::string>());
        spec.tag = plan_case_from_string(jc.at("case").get<std::string>());
        spec.r = jc.at("r").get<std::uint32_t>();
        spec.s = jc.at("s").get<std::uint32_t>();
        spec.t = jc.at("t").get<std::uint32_t>();
        const auto& jk = j.at("code");
        spec.n = jk.at("n").get<std::uint32_t>();
        spec.k = jk.at("k").get<std::uint32_t>();
        spec.extended = jk.at("extended").get<bool>();
        spec.a_enc = jk.at("a").get<std::vector<std::uint32_t>>();
        spec.v_enc = jk.at("v").get<std::vector<std::uint32_t>>();
        if (j.contains("generator_matrix"))
            spec.matrix = j.at("generator_matrix").get<std::vector<std::vector<std::uint32_t>>>();
        return spec;
    } catch (const SpecParseError&) {
        throw;
    } catch (const std::exception& e) {
        throw SpecParseError(std::string("malformed grs-code file: ") + e.what());
    }
}

RealizedCode realize(const CodeSpecFile& spec) {
    RealizedCode out;
    try {
        out.field = std::make_unique<Field>(
            Field::from_spec(spec.p, spec.m, spec.modulus, spec.g_enc));
    } catch (const std::exception& e) {
        throw SpecParseError(std::string("invalid field spec: ") + e.what());
    }
    const Field& f = *out.field;
    if (spec.n != spec.a_enc.size() + (spec.extended ? 1 : 0))
        throw SpecParseError("declared length n does not match the point count");
    if (spec.v_enc.size() != spec.a_enc.size())
        throw SpecParseError("a and v must have the same length");
    try {
        std::vector<Elem> a, v;
        for (std::uint32_t e : spec.a_enc) a.push_back(f.element(e));
        for (std::uint32_t e : spec.v_enc) v.push_back(f.element(e));
        EvalPoints points(f, std::move(a));
        Scaling scaling(f, std::move(v));
        out.code.emplace(std::move(points), std::move(scaling), spec.k, spec.extended);
    } catch (const std::exception& e) {
        throw SpecParseError(std::string("invalid code data: ") + e.what());
    }
    return out;
}

}  // namespace grsdual
