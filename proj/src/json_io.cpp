#include "torcat/json_io.hpp"

namespace torcat {

using nlohmann::json;

json to_json(const GradedGenerator& g) {
    json prefixes = json::array();
    for (const auto& p : g.prefixes) prefixes.push_back(to_string(p));
    return json{{"base", g.base}, {"prefixes", prefixes}, {"degree", g.degree}};
}

json to_json(const BlockAlgebra& b) {
    json out{{"kind", to_string(b.kind)}, {"generator", to_json(b.generator)}};
    if (b.kind == BlockAlgebra::Kind::Truncated) out["m"] = b.truncation;
    return out;
}

json to_json(const TensorAlgebra& A) {
    json blocks = json::array();
    for (const auto& b : A.blocks) blocks.push_back(to_json(b));
    return json{{"characteristic", A.characteristic}, {"cap", A.cap}, {"blocks", blocks}};
}

json to_json(const PoincareSeries& s) {
    return json{{"cap", s.cap}, {"coefficients", s.coefficients}};
}

json to_json(const RankTable& t) {
    json bids = json::array();
    for (const auto& b : t.by_bidegree)
        bids.push_back(json{{"s", b.s}, {"internal", b.internal}, {"rank", b.rank}});
    return json{{"total_cap", t.total_cap},
                {"by_total_degree", t.by_total},
                {"by_bidegree", bids}};
}

json to_json(const CatalogResult& r) {
    json out{{"entry", r.entry},
             {"provenance", r.provenance},
             {"multiplicity", r.multiplicity},
             {"algebra", to_json(r.algebra)},
             {"series", to_json(result_series(r, r.algebra.cap))}};
    if (r.reduced_route) out["reduced_route"] = to_json(*r.reduced_route);
    return out;
}

namespace {

const json& field(const json& j, const char* key) {
    if (!j.is_object() || !j.contains(key))
        throw InvalidInput(std::string("missing field '") + key + "'");
    return j.at(key);
}

}  // namespace

GradedGenerator generator_from_json(const json& j) {
    GradedGenerator g;
    g.base = field(j, "base").get<std::string>();
    g.degree = field(j, "degree").get<int>();
    for (const auto& entry : field(j, "prefixes")) {
        auto p = parse_prefix(entry.get<std::string>());
        if (!p) throw InvalidInput("unknown prefix token '" + entry.get<std::string>() + "'");
        g.prefixes.push_back(*p);
    }
    return g;
}

BlockAlgebra block_from_json(const json& j) {
    const std::string kind = field(j, "kind").get<std::string>();
    GradedGenerator g = generator_from_json(field(j, "generator"));
    if (kind == "polynomial") return make_polynomial(std::move(g));
    if (kind == "exterior") return make_exterior(std::move(g));
    if (kind == "truncated") return make_truncated(field(j, "m").get<int>(), std::move(g));
    if (kind == "divided_power") return make_divided_power(std::move(g));
    throw InvalidInput("unknown block kind '" + kind + "'");
}

TensorAlgebra algebra_from_json(const json& j) {
    std::vector<BlockAlgebra> blocks;
    for (const auto& b : field(j, "blocks")) blocks.push_back(block_from_json(b));
    return make_algebra(field(j, "characteristic").get<int>(), field(j, "cap").get<int>(),
                        std::move(blocks));
}

PoincareSeries series_from_json(const json& j) {
    PoincareSeries s;
    s.cap = field(j, "cap").get<int>();
    s.coefficients = field(j, "coefficients").get<std::vector<std::int64_t>>();
    if (s.cap < 0 || s.coefficients.size() != static_cast<std::size_t>(s.cap) + 1)
        throw InvalidInput("coefficients must have length cap + 1");
    for (auto c : s.coefficients)
        if (c < 0) throw InvalidInput("coefficients must be nonnegative");
    return s;
}

}  // namespace torcat
