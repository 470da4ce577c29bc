#include "cobordism/json_io.hpp"

#include "cobordism/errors.hpp"
#include "json.hpp"

namespace cobordism {

using nlohmann::json;
using nlohmann::ordered_json;

namespace {

json parse_json(const std::string& text, const char* what)
{
    try {
        return json::parse(text);
    } catch (const json::parse_error& e) {
        throw Error(ErrorKind::Parse, std::string("malformed ") + what + " JSON: " + e.what());
    }
}

[[noreturn]] void bad(const std::string& message)
{
    throw Error(ErrorKind::Parse, message);
}

} // namespace

std::string graph_to_json(const GKMGraph& g)
{
    ordered_json out;
    out["rank"] = g.rank();
    out["dim"] = g.dim();
    out["vertices"] = g.vertices();
    ordered_json edges = ordered_json::array();
    for (const auto& e : g.edges()) {
        ordered_json je;
        je["v"] = e.v;
        je["w"] = e.w;
        je["char"] = e.chi.weights();
        edges.push_back(je);
    }
    out["edges"] = edges;
    const GraphFamily& f = g.family();
    if (f.kind != GraphFamily::Kind::None) {
        ordered_json jf;
        switch (f.kind) {
        case GraphFamily::Kind::P1:
            jf["kind"] = "p1";
            jf["char"] = f.chi.weights();
            break;
        case GraphFamily::Kind::Pn:
            jf["kind"] = "pn";
            jf["n"] = f.n;
            break;
        default:
            jf["kind"] = "flag";
            jf["n"] = f.n;
            break;
        }
        out["family"] = jf;
    }
    return out.dump(2);
}

GKMGraph graph_from_json(const std::string& text)
{
    json j = parse_json(text, "graph");
    try {
        if (!j.is_object()) bad("graph JSON must be an object");
        for (const char* key : {"rank", "dim", "vertices", "edges"})
            if (!j.contains(key)) bad(std::string("graph JSON is missing \"") + key + "\"");
        long rank = j.at("rank").get<long>();
        if (rank < 0) bad("graph rank must be >= 0");
        int dim = j.at("dim").get<int>();
        auto vertices = j.at("vertices").get<std::vector<std::string>>();
        std::vector<GKMEdge> edges;
        for (const auto& je : j.at("edges")) {
            GKMEdge e;
            e.v = je.at("v").get<std::string>();
            e.w = je.at("w").get<std::string>();
            e.chi = Character(je.at("char").get<std::vector<long>>());
            edges.push_back(std::move(e));
        }
        GKMGraph g(static_cast<std::size_t>(rank), dim, std::move(vertices), std::move(edges));
        if (j.contains("family")) {
            const json& jf = j.at("family");
            std::string kind = jf.at("kind").get<std::string>();
            GKMGraph regenerated = kind == "p1" ? gkm_generate_p1(Character(jf.at("char").get<std::vector<long>>()))
                                                : gkm_generate(kind, {jf.at("n").get<long>()});
            // The family tag is trusted only if the graph really is the generated one.
            if (regenerated.rank() == g.rank() && regenerated.dim() == g.dim() &&
                regenerated.vertices() == g.vertices() && regenerated.edges().size() == g.edges().size()) {
                bool same = true;
                for (std::size_t i = 0; i < g.edges().size() && same; ++i) {
                    const auto& a = g.edges()[i];
                    const auto& b = regenerated.edges()[i];
                    same = a.v == b.v && a.w == b.w && a.chi == b.chi;
                }
                if (same) g.set_family(regenerated.family());
            }
        }
        return g;
    } catch (const json::exception& e) {
        bad(std::string("bad graph JSON: ") + e.what());
    }
}

namespace {

PiecewiseClass values_from_json(const json& values, const GKMGraph& g, const EvalContext& ctx)
{
    if (!values.is_object()) bad("class values must be an object mapping vertex ids to expressions");
    for (auto it = values.begin(); it != values.end(); ++it)
        if (!g.index_of(it.key())) bad("class mentions unknown vertex '" + it.key() + "'");
    std::vector<TruncSeries> out;
    for (const auto& id : g.vertices()) {
        if (!values.contains(id)) bad("class has no value at vertex '" + id + "'");
        const json& v = values.at(id);
        std::string text;
        if (v.is_string())
            text = v.get<std::string>();
        else if (v.is_number_integer())
            text = std::to_string(v.get<long>());
        else
            bad("value at vertex '" + id + "' must be a string");
        try {
            out.push_back(evaluate(text, ctx));
        } catch (const Error& e) {
            throw Error(e.kind(), "vertex '" + id + "': " + e.what());
        }
    }
    return PiecewiseClass(std::move(out));
}

ClassInput class_from_document(const json& j, const GKMGraph& g, EvalContext ctx)
{
    ClassInput in;
    if (j.is_object() && j.contains("values") && j.at("values").is_object()) {
        if (j.contains("truncation")) {
            in.truncation = j.at("truncation").get<int>();
            ctx.guarantee = *in.truncation;
        }
        in.value = values_from_json(j.at("values"), g, ctx);
    } else {
        in.value = values_from_json(j, g, ctx);
    }
    return in;
}

} // namespace

ClassInput class_from_json(const std::string& text, const GKMGraph& g, EvalContext ctx)
{
    json j = parse_json(text, "class");
    try {
        return class_from_document(j, g, std::move(ctx));
    } catch (const json::exception& e) {
        bad(std::string("bad class JSON: ") + e.what());
    }
}

std::vector<PiecewiseClass> classes_from_json(const std::string& text, const GKMGraph& g, const EvalContext& ctx)
{
    json j = parse_json(text, "basis");
    if (!j.is_array()) bad("basis JSON must be an array of classes");
    std::vector<PiecewiseClass> out;
    try {
        for (const auto& item : j) out.push_back(class_from_document(item, g, ctx).value);
    } catch (const json::exception& e) {
        bad(std::string("bad basis JSON: ") + e.what());
    }
    return out;
}

std::string class_to_json(const GKMGraph& g, const PiecewiseClass& a)
{
    ordered_json out;
    out["truncation"] = a.guarantee();
    ordered_json values;
    for (std::size_t i = 0; i < g.vertices().size(); ++i) values[g.vertices()[i]] = a[i].render();
    out["values"] = values;
    return out.dump(2);
}

} // namespace cobordism
