#pragma once

// Machine-readable output. Homology is a list of
// {"degree": k, "rank": r, "torsion": [t1, ...]} records.

#include <nlohmann/json.hpp>

#include "localhom/homology.hpp"
#include "localhom/mv.hpp"
#include "localhom/probe.hpp"

namespace localhom {

namespace detail {

inline nlohmann::json integer_json(const Integer& z) {
    if (z >= std::numeric_limits<long long>::min() && z <= std::numeric_limits<long long>::max())
        return z.convert_to<long long>();
    return z.str();
}

}  // namespace detail

inline nlohmann::json to_json(const HomologyGroup& g, int degree) {
    nlohmann::json torsion = nlohmann::json::array();
    for (const auto& t : g.torsion) torsion.push_back(detail::integer_json(t));
    return {{"degree", degree}, {"rank", g.free_rank}, {"torsion", std::move(torsion)}};
}

inline nlohmann::json to_json(const HomologySummary& h) {
    nlohmann::json groups = nlohmann::json::array();
    for (int k = h.first_degree; k <= h.last_degree(); ++k) {
        if (k < 0 && h.at(k).is_zero()) continue;
        groups.push_back(to_json(h.at(k), k));
    }
    return {{"reduced", h.reduced},
            {"euler_characteristic", h.euler_characteristic()},
            {"groups", std::move(groups)}};
}

inline const char* overall_name(Overall o) {
    switch (o) {
        case Overall::consistent_with_closed_n_manifold:
            return "consistent_with_closed_n_manifold";
        case Overall::consistent_with_n_manifold_with_boundary:
            return "consistent_with_n_manifold_with_boundary";
        case Overall::not_a_manifold:
            return "not_a_manifold";
    }
    return "";
}

inline nlohmann::json to_json(const ObstructionReport& r) {
    nlohmann::json verdicts = nlohmann::json::array();
    for (const auto& v : r.verdicts) {
        nlohmann::json item{{"vertex", v.vertex},
                            {"category", category_name(v)},
                            {"local_homology", to_json(v.local)["groups"]}};
        if (v.witness) item["witness"] = to_json(v.witness->group, v.witness->degree);
        verdicts.push_back(std::move(item));
    }
    nlohmann::json out{{"verdicts", std::move(verdicts)},
                       {"pseudomanifold",
                        {{"pure", r.pseudomanifold.pure},
                         {"ridge_condition", r.pseudomanifold.ridge_condition},
                         {"strongly_connected", r.pseudomanifold.strongly_connected}}},
                       {"overall", overall_name(r.overall)},
                       {"inferred_dimension", nullptr},
                       {"witness_vertex", nullptr}};
    if (r.inferred_dimension) out["inferred_dimension"] = *r.inferred_dimension;
    if (r.witness_vertex) {
        out["witness_vertex"] = *r.witness_vertex;
        out["witness"] = to_json(r.witness->group, r.witness->degree);
    }
    return out;
}

inline nlohmann::json to_json(const MvReport& r) {
    nlohmann::json nodes = nlohmann::json::array();
    for (const auto& n : r.nodes)
        nodes.push_back({{"group", n.name},
                         {"degree", n.degree},
                         {"dimension", n.dimension},
                         {"image_rank", n.incoming_rank},
                         {"kernel_dimension", n.kernel_dimension()},
                         {"exact", n.exact()}});
    return {{"max_degree", r.max_degree}, {"exact", r.exact()}, {"nodes", std::move(nodes)}};
}

}  // namespace localhom
