#ifndef COBORDISM_JSON_IO_HPP
#define COBORDISM_JSON_IO_HPP

#include <optional>
#include <string>
#include <vector>

#include "cobordism/expression.hpp"
#include "cobordism/gkm.hpp"

namespace cobordism {

// {"rank": n, "dim": d, "vertices": [...], "edges": [{"v", "w", "char"}]},
// plus "family" for generated graphs.
std::string graph_to_json(const GKMGraph& g);
GKMGraph graph_from_json(const std::string& text);

struct ClassInput {
    PiecewiseClass value;
    std::optional<int> truncation; // as given in the document
};

// Accepts {"truncation": D, "values": {id: text}} or a bare {id: text} map.
// Values are expressions in t1..tn; ctx.guarantee is replaced by the
// document's truncation when present.
ClassInput class_from_json(const std::string& text, const GKMGraph& g, EvalContext ctx);
// A JSON array of class documents.
std::vector<PiecewiseClass> classes_from_json(const std::string& text, const GKMGraph& g, const EvalContext& ctx);
std::string class_to_json(const GKMGraph& g, const PiecewiseClass& a);

} // namespace cobordism

#endif
