#include "sandtile/io.hpp"

#include <sstream>

namespace sandtile {

namespace {

Int json_to_int(const json& j) {
    if (j.is_number_integer()) return Int(j.get<long>());
    if (j.is_string()) return Int(j.get<std::string>());
    throw parse_error("expected an integer, got " + j.dump());
}

json int_to_json(const Int& x) {
    if (x.fits_slong_p()) return json(x.get_si());
    return json(x.get_str());
}

}  // namespace

StandardRepMatrix matrix_from_json(const json& j) {
    if (!j.is_object() || !j.contains("r") || !j.contains("n") || !j.contains("M"))
        throw parse_error("matrix JSON needs fields r, n, M");
    std::size_t r = j.at("r").get<std::size_t>();
    std::size_t n = j.at("n").get<std::size_t>();
    const json& rows = j.at("M");
    if (!rows.is_array() || rows.size() != r)
        throw parse_error("M must be an array of r rows");
    IntMat m(r, n - r);
    for (std::size_t i = 0; i < r; ++i) {
        if (!rows[i].is_array() || rows[i].size() != n - r)
            throw parse_error("each row of M must have n-r entries");
        for (std::size_t k = 0; k < n - r; ++k) m(i, k) = json_to_int(rows[i][k]);
    }
    return StandardRepMatrix(r, n, m);
}

json matrix_to_json(const StandardRepMatrix& d) {
    json rows = json::array();
    for (std::size_t i = 0; i < d.r(); ++i) {
        json row = json::array();
        for (std::size_t k = 0; k < d.n() - d.r(); ++k) row.push_back(int_to_json(d.M()(i, k)));
        rows.push_back(row);
    }
    return json{{"r", d.r()}, {"n", d.n()}, {"M", rows}};
}

Graph graph_from_json(const json& j) {
    if (!j.is_object() || !j.contains("vertices") || !j.contains("edges"))
        throw parse_error("graph JSON needs fields vertices and edges");
    int vertices = j.at("vertices").get<int>();
    std::vector<std::pair<int, int>> edges;
    for (const auto& e : j.at("edges")) {
        if (!e.is_array() || e.size() != 2)
            throw parse_error("each edge must be a [tail, head] pair");
        edges.emplace_back(e[0].get<int>(), e[1].get<int>());
    }
    return Graph(vertices, std::move(edges));
}

std::optional<std::vector<int>> tree_from_json(const json& j) {
    if (!j.contains("tree")) return std::nullopt;
    return j.at("tree").get<std::vector<int>>();
}

RatVec parse_rational_vector(const std::string& s) {
    RatVec out;
    std::stringstream ss(s);
    std::string item;
    while (std::getline(ss, item, ',')) out.push_back(parse_rational(item));
    return out;
}

json basis_to_json(const Basis& b) { return json(b.indices); }

json int_vec_to_json(const IntVec& v) {
    json out = json::array();
    for (const auto& x : v) out.push_back(int_to_json(x));
    return out;
}

json analyze_report(const StandardRepMatrix& d) {
    json bases = json::array();
    for (const auto& e : d.enumerate_bases())
        bases.push_back(
            {{"basis", basis_to_json(e.basis)}, {"multiplicity", int_to_json(e.multiplicity)}});
    auto check = matrix_tree_check(d);
    return json{{"r", d.r()},
                {"n", d.n()},
                {"bases", bases},
                {"group_order", int_to_json(check.det_full)},
                {"sum_of_squared_multiplicities", int_to_json(check.sum_squares)},
                {"matrix_tree_check", check.equal}};
}

namespace {

json shifting_to_json(const ShiftingVector& w) {
    json out = json::array();
    for (const auto& q : w.full()) out.push_back(format_rational(q));
    return out;
}

json fibers_to_json(const std::vector<std::pair<Basis, std::vector<IntVec>>>& fibers) {
    json out = json::array();
    for (const auto& [b, pts] : fibers) {
        json points = json::array();
        for (const auto& p : pts) points.push_back(int_vec_to_json(p));
        json entry = {{"basis", basis_to_json(b)},
                      {"multiplicity", int_to_json(sqrt(Int(pts.size())))},
                      {"points", points}};
        out.push_back(entry);
    }
    return out;
}

}  // namespace

json fiber_report(const Multijection& f) {
    return json{{"shifting", shifting_to_json(f.shifting)},
                {"fibers", fibers_to_json(f.fibers)},
                {"group_order", int_to_json(f.group_order())}};
}

json lower_report(const StandardRepMatrix& d, const LowerTile& tile,
                  const ShiftingVector& w) {
    auto reps = lower_representatives(d, tile, w);
    Int total = 0;
    for (const auto& [b, pts] : reps) total += Int(pts.size());
    return json{{"kind", tile.kind == LowerKind::Prime ? "prime" : "double-prime"},
                {"shifting", shifting_to_json(w)},
                {"fibers", fibers_to_json(reps)},
                {"group_order", int_to_json(total)}};
}

namespace {

json signature_to_json(const ChamberSignature& sig) {
    std::string s;
    for (int x : sig.signs) s += x > 0 ? '+' : '-';
    return json(s);
}

}  // namespace

json chambers_report(const StandardRepMatrix& d, const ShiftingVector& w,
                     const ShiftingVector& wp) {
    CentralArrangement hd = arrangement_of(d);
    CentralArrangement hdual = arrangement_of_dual(d);
    return json{
        {"equivalent", shifting_equivalent(d, w, wp)},
        {"signatures",
         {{"first", {signature_to_json(signature(w.w, hd)),
                     signature_to_json(signature(wp.w, hd))}},
          {"second", {signature_to_json(signature(w.w_hat, hdual)),
                      signature_to_json(signature(wp.w_hat, hdual))}}}}};
}

json corners_report(const StandardRepMatrix& d, const ShiftingVector& w) {
    json corners = json::array();
    for (const auto& e : d.enumerate_bases()) {
        auto cp = corner_point(d, e.basis, w);
        corners.push_back({{"basis", basis_to_json(e.basis)},
                           {"corner", int_vec_to_json(cp.point)},
                           {"zero_one", int_vec_to_json(cp.zero_one)}});
    }
    return json{{"shifting", shifting_to_json(w)}, {"corners", corners}};
}

}  // namespace sandtile
