#include "resolv/closed_form.hpp"

#include <algorithm>
#include <map>
#include <sstream>
#include <stdexcept>

namespace resolv {

namespace {

constexpr Affine A(int cl, int cg, int c0) { return Affine{cl, cg, c0}; }

bool is_polytope(Family f) {
    return f == Family::double_antiprism || f == Family::s_poly || f == Family::t_poly;
}

void require_polytope(Family f) {
    if (!is_polytope(f))
        throw std::invalid_argument("closed-form data only covers antiprism2, spoly and tpoly");
}

int layer_count(Family f) { return f == Family::double_antiprism ? 3 : 4; }

Graph build(Family f, int n) {
    switch (f) {
        case Family::double_antiprism: return gen_double_antiprism(n);
        case Family::s_poly: return gen_s_poly(n);
        default: return gen_t_poly(n);
    }
}

FamilyWitness make_witness(Family f, int n, std::array<int, 4> positions) {
    FamilyWitness w;
    w.family = f;
    w.n = n;
    w.parity = parity_of(n);
    w.ring_positions = positions;
    FamilySpec spec{f, n, 0};
    for (int i = 0; i < 4; ++i) {
        w.ids.push_back(polytope_vertex(n, positions[i], 1));
        w.names[i] = vertex_name(spec, w.ids.back());
    }
    return w;
}

// ---------------------------------------------------------------------------
// printed tables; ranges and entries transcribed row by row
// ---------------------------------------------------------------------------

PiecewiseCodeTable antiprism_even() {
    PiecewiseCodeTable t{Family::double_antiprism, Parity::even, {}};
    t.layers.push_back(LayerTable{
        1,
        {
            {A(0, 0, 1), A(0, 0, 1), {A(1, 0, -1), A(0, 0, 1), A(-1, 1, 1), A(0, 1, -1)}},
            {A(0, 0, 2), A(0, 1, 1), {A(1, 0, -1), A(1, 0, -2), A(-1, 1, 1), A(-1, 1, 2)}},
            {A(0, 1, 2), A(0, 1, 2), {A(-1, 2, 1), A(1, 0, -2), A(1, -1, -1), A(-1, 1, 2)}},
            {A(0, 1, 3), A(0, 2, 0), {A(-1, 2, 1), A(-1, 2, 2), A(1, -1, -1), A(1, -1, -2)}},
        },
        0,
        0});
    t.layers.push_back(LayerTable{
        2,
        {
            {A(0, 0, 1), A(0, 0, 1), {A(1, 0, 0), A(0, 0, 1), A(-1, 1, 1), A(0, 1, 0)}},
            {A(0, 0, 2), A(0, 1, 0), {A(1, 0, 0), A(1, 0, -1), A(-1, 1, 1), A(-1, 1, 2)}},
            {A(0, 1, 1), A(0, 1, 1), {A(-1, 2, 1), A(1, 0, -1), A(1, -1, 0), A(-1, 1, 2)}},
            {A(0, 1, 2), A(0, 2, 0), {A(-1, 2, 1), A(-1, 2, 2), A(1, -1, 0), A(1, -1, -1)}},
        },
        0,
        0});
    t.layers.push_back(LayerTable{
        3,
        {
            {A(0, 0, 1), A(0, 0, 1), {A(1, 0, 1), A(0, 0, 2), A(-1, 1, 1), A(-1, 1, 2)}},
            {A(0, 0, 2), A(0, 1, -1), {A(1, 0, 1), A(1, 0, 0), A(-1, 1, 1), A(-1, 1, 2)}},
            {A(0, 1, 0), A(0, 1, 0), {A(1, 0, 1), A(1, 0, 0), A(0, 0, 2), A(-1, 1, 2)}},
            {A(0, 1, 1), A(0, 1, 1), {A(-1, 2, 1), A(1, 0, 2), A(1, -1, 1), A(0, 0, 2)}},
            {A(0, 1, 2), A(0, 2, -1), {A(-1, 2, 1), A(-1, 2, 2), A(1, -1, 1), A(1, -1, 0)}},
            {A(0, 2, 0), A(0, 2, 0), {A(0, 0, 2), A(-1, 2, 2), A(1, -1, 1), A(1, -1, 0)}},
        },
        0,
        0});
    return t;
}

PiecewiseCodeTable antiprism_odd() {
    PiecewiseCodeTable t{Family::double_antiprism, Parity::odd, {}};
    t.layers.push_back(LayerTable{
        1,
        {
            {A(0, 0, 1), A(0, 0, 1), {A(1, 0, -1), A(0, 0, 1), A(-1, 1, 1), A(0, 1, -1)}},
            {A(0, 0, 2), A(0, 0, 2), {A(1, 0, -1), A(1, 0, -2), A(-1, 1, 1), A(0, 1, 0)}},
            {A(0, 0, 3), A(0, 1, 1), {A(1, 0, -1), A(1, 0, -2), A(-1, 1, 1), A(-1, 1, 3)}},
            {A(0, 1, 2), A(0, 1, 2), {A(-1, 2, 2), A(1, 0, -2), A(1, -1, -1), A(-1, 1, 3)}},
            {A(0, 1, 3), A(0, 1, 3), {A(-1, 2, 2), A(-1, 2, 3), A(1, -1, -1), A(-1, 1, 3)}},
            {A(0, 1, 4), A(0, 2, 1), {A(-1, 2, 2), A(-1, 2, 3), A(1, -1, -1), A(1, -1, -3)}},
        },
        0,
        0});
    t.layers.push_back(LayerTable{
        2,
        {
            {A(0, 0, 1), A(0, 0, 1), {A(1, 0, 0), A(0, 0, 1), A(-1, 1, 1), A(0, 1, 0)}},
            {A(0, 0, 2), A(0, 1, 0), {A(1, 0, 0), A(1, 0, -1), A(-1, 1, 1), A(-1, 1, 3)}},
            {A(0, 1, 1), A(0, 1, 1), {A(-1, 2, 2), A(1, 0, -1), A(1, -1, 0), A(-1, 1, 3)}},
            {A(0, 1, 2), A(0, 1, 2), {A(-1, 2, 2), A(-1, 2, 3), A(1, -1, 0), A(-1, 1, 3)}},
            {A(0, 1, 3), A(0, 2, 1), {A(-1, 2, 2), A(-1, 2, 3), A(1, -1, 0), A(1, -1, -2)}},
        },
        0,
        0});
    // the outer layer prints two distinct rows for ring position g+1
    t.layers.push_back(LayerTable{
        3,
        {
            {A(0, 0, 1), A(0, 0, 1), {A(1, 0, 1), A(0, 0, 2), A(-1, 1, 1), A(0, 1, 1)}},
            {A(0, 0, 2), A(0, 1, -1), {A(1, 0, 1), A(1, 0, 0), A(-1, 1, 1), A(-1, 1, 3)}},
            {A(0, 1, 0), A(0, 1, 0), {A(1, 0, 1), A(1, 0, 0), A(0, 0, 2), A(-1, 1, 3)}},
            {A(0, 1, 1), A(0, 1, 1), {A(-1, 2, 2), A(1, 0, 0), A(1, -1, 1), A(-1, 1, 3)}},
            {A(0, 1, 1), A(0, 1, 1), {A(-1, 2, 2), A(-1, 2, 3), A(1, -1, 1), A(0, 0, 2)}},
            {A(0, 1, 2), A(0, 2, 0), {A(-1, 2, 2), A(-1, 2, 3), A(1, -1, 1), A(1, -1, -1)}},
            {A(0, 2, 1), A(0, 2, 1), {A(0, 0, 2), A(-1, 2, 3), A(0, 1, 1), A(1, -1, -1)}},
        },
        0,
        0});
    return t;
}

PiecewiseCodeTable spoly_even() {
    PiecewiseCodeTable t{Family::s_poly, Parity::even, {}};
    t.layers.push_back(LayerTable{
        1,
        {
            {A(0, 0, 1), A(0, 0, 1), {A(1, 0, -1), A(0, 0, 1), A(-1, 1, 1), A(0, 1, -1)}},
            {A(0, 0, 2), A(0, 1, 1), {A(1, 0, -1), A(1, 0, -2), A(-1, 1, 1), A(-1, 1, 2)}},
            {A(0, 1, 2), A(0, 1, 2), {A(-1, 2, 1), A(1, 0, -2), A(1, -1, -1), A(-1, 1, 2)}},
            {A(0, 1, 3), A(0, 2, 0), {A(-1, 2, 1), A(-1, 2, 2), A(1, -1, -1), A(1, -1, -2)}},
        },
        0,
        0});
    t.layers.push_back(LayerTable{2, {}, 1, 1});
    t.layers.push_back(LayerTable{
        3,
        {
            {A(0, 0, 1), A(0, 0, 1), {A(1, 0, 1), A(0, 0, 2), A(-1, 1, 2), A(0, 1, 1)}},
            {A(0, 0, 2), A(0, 1, 0), {A(1, 0, 1), A(1, 0, 0), A(-1, 1, 2), A(-1, 1, 3)}},
            {A(0, 1, 1), A(0, 1, 1), {A(-1, 2, 2), A(1, 0, 0), A(1, -1, 1), A(-1, 1, 3)}},
            {A(0, 1, 2), A(0, 2, 0), {A(-1, 2, 2), A(-1, 2, 3), A(1, -1, 1), A(1, -1, 0)}},
        },
        0,
        0});
    t.layers.push_back(LayerTable{4, {}, 3, 1});
    return t;
}

PiecewiseCodeTable spoly_odd() {
    PiecewiseCodeTable t{Family::s_poly, Parity::odd, {}};
    t.layers.push_back(LayerTable{
        1,
        {
            {A(0, 0, 1), A(0, 0, 1), {A(1, 0, -1), A(0, 0, 1), A(-1, 1, 1), A(0, 1, 0)}},
            {A(0, 0, 2), A(0, 1, 1), {A(1, 0, -1), A(1, 0, -2), A(-1, 1, 1), A(-1, 1, 2)}},
            {A(0, 1, 2), A(0, 1, 2), {A(-1, 2, 2), A(1, 0, -2), A(1, -1, -1), A(-1, 1, 2)}},
            {A(0, 1, 3), A(0, 2, 1), {A(-1, 2, 2), A(-1, 2, 3), A(1, -1, -1), A(1, -1, -2)}},
        },
        0,
        0});
    t.layers.push_back(LayerTable{2, {}, 1, 1});
    t.layers.push_back(LayerTable{
        3,
        {
            {A(0, 0, 1), A(0, 0, 1), {A(1, 0, 1), A(0, 0, 2), A(-1, 1, 2), A(-1, 1, 3)}},
            {A(0, 0, 2), A(0, 1, 0), {A(1, 0, 1), A(1, 0, 0), A(-1, 1, 2), A(-1, 1, 3)}},
            {A(0, 1, 1), A(0, 1, 1), {A(-1, 2, 3), A(1, 0, 0), A(1, -1, 1), A(-1, 1, 3)}},
            {A(0, 1, 2), A(0, 2, 1), {A(-1, 2, 3), A(-1, 2, 4), A(1, -1, 1), A(1, -1, 0)}},
        },
        0,
        0});
    t.layers.push_back(LayerTable{4, {}, 3, 1});
    return t;
}

PiecewiseCodeTable tpoly_even() {
    PiecewiseCodeTable t{Family::t_poly, Parity::even, {}};
    t.layers.push_back(LayerTable{
        1,
        {
            {A(0, 0, 1), A(0, 0, 1), {A(1, 0, -1), A(0, 0, 1), A(-1, 1, 1), A(0, 1, -1)}},
            {A(0, 0, 2), A(0, 1, 1), {A(1, 0, -1), A(1, 0, -2), A(-1, 1, 1), A(-1, 1, 2)}},
            {A(0, 1, 2), A(0, 1, 2), {A(-1, 2, 1), A(1, 0, -2), A(1, -1, -1), A(-1, 1, 2)}},
            {A(0, 1, 3), A(0, 2, 0), {A(-1, 2, 1), A(-1, 2, 2), A(1, -1, -1), A(1, -1, -2)}},
        },
        0,
        0});
    t.layers.push_back(LayerTable{
        2,
        {
            {A(0, 0, 1), A(0, 0, 1), {A(1, 0, 0), A(0, 0, 1), A(-1, 1, 1), A(0, 1, 0)}},
            {A(0, 0, 2), A(0, 1, 0), {A(1, 0, 0), A(1, 0, -1), A(-1, 1, 1), A(-1, 1, 2)}},
            {A(0, 1, 1), A(0, 1, 1), {A(-1, 2, 1), A(1, 0, -1), A(1, -1, 0), A(-1, 1, 2)}},
            {A(0, 1, 2), A(0, 2, 0), {A(-1, 2, 1), A(-1, 2, 2), A(1, -1, 0), A(1, -1, -1)}},
        },
        0,
        0});
    t.layers.push_back(LayerTable{
        3,
        {
            {A(0, 0, 1), A(0, 0, 1), {A(1, 0, 1), A(0, 0, 2), A(-1, 1, 1), A(-1, 1, 2)}},
            {A(0, 0, 2), A(0, 1, -1), {A(1, 0, 1), A(1, 0, 0), A(-1, 1, 1), A(-1, 1, 2)}},
            {A(0, 1, 0), A(0, 1, 0), {A(1, 0, 1), A(1, 0, 0), A(0, 0, 2), A(-1, 1, 2)}},
            {A(0, 1, 1), A(0, 1, 1), {A(-1, 2, 1), A(-1, 2, 2), A(1, -1, 1), A(0, 0, 2)}},
            {A(0, 1, 2), A(0, 2, -1), {A(-1, 2, 1), A(-1, 2, 2), A(1, -1, 1), A(1, -1, 0)}},
            {A(0, 2, 0), A(0, 2, 0), {A(0, 0, 2), A(-1, 2, 2), A(1, -1, 1), A(1, -1, 0)}},
        },
        0,
        0});
    t.layers.push_back(LayerTable{4, {}, 3, 1});
    return t;
}

PiecewiseCodeTable tpoly_odd() {
    PiecewiseCodeTable t{Family::t_poly, Parity::odd, {}};
    t.layers.push_back(LayerTable{
        1,
        {
            {A(0, 0, 1), A(0, 0, 1), {A(1, 0, -1), A(0, 0, 1), A(-1, 1, 1), A(0, 1, 0)}},
            {A(0, 0, 2), A(0, 1, 1), {A(1, 0, -1), A(1, 0, -2), A(-1, 1, 1), A(-1, 1, 2)}},
            {A(0, 1, 2), A(0, 1, 2), {A(-1, 2, 2), A(1, 0, -2), A(1, -1, -1), A(-1, 1, 2)}},
            {A(0, 1, 3), A(0, 2, 1), {A(-1, 2, 2), A(-1, 2, 3), A(1, -1, -1), A(1, -1, -2)}},
        },
        0,
        0});
    t.layers.push_back(LayerTable{
        2,
        {
            {A(0, 0, 1), A(0, 0, 1), {A(1, 0, 0), A(0, 0, 1), A(-1, 1, 1), A(0, 1, 0)}},
            {A(0, 0, 2), A(0, 1, 0), {A(1, 0, 0), A(1, 0, -1), A(-1, 1, 1), A(-1, 1, 3)}},
            {A(0, 1, 1), A(0, 1, 1), {A(-1, 2, 2), A(1, 0, -1), A(1, -1, 0), A(-1, 1, 3)}},
            {A(0, 1, 2), A(0, 1, 2), {A(-1, 2, 2), A(-1, 2, 3), A(1, -1, 0), A(-1, 1, 3)}},
            {A(0, 1, 3), A(0, 2, 1), {A(-1, 2, 2), A(-1, 2, 3), A(1, -1, 0), A(1, -1, -2)}},
        },
        0,
        0});
    t.layers.push_back(LayerTable{
        3,
        {
            {A(0, 0, 1), A(0, 0, 1), {A(1, 0, 1), A(0, 0, 2), A(-1, 1, 1), A(-1, 1, 2)}},
            {A(0, 0, 2), A(0, 1, -1), {A(1, 0, 1), A(1, 0, 0), A(-1, 1, 1), A(-1, 1, 2)}},
            {A(0, 1, 0), A(0, 1, 0), {A(1, 0, 1), A(1, 0, 0), A(0, 0, 2), A(-1, 1, 2)}},
            {A(0, 1, 1), A(0, 1, 1), {A(-1, 2, 2), A(1, 0, 0), A(1, -1, 1), A(0, 0, 2)}},
            {A(0, 1, 2), A(0, 2, 0), {A(-1, 2, 2), A(-1, 2, 3), A(1, -1, 1), A(1, -1, 0)}},
            {A(0, 2, 1), A(0, 2, 1), {A(0, 0, 2), A(-1, 2, 3), A(0, 1, 1), A(1, -1, 0)}},
        },
        0,
        0});
    t.layers.push_back(LayerTable{4, {}, 3, 1});
    return t;
}

}  // namespace

const PiecewiseCodeTable& code_table(Family f, Parity p) {
    require_polytope(f);
    static const PiecewiseCodeTable ae = antiprism_even();
    static const PiecewiseCodeTable ao = antiprism_odd();
    static const PiecewiseCodeTable se = spoly_even();
    static const PiecewiseCodeTable so = spoly_odd();
    static const PiecewiseCodeTable te = tpoly_even();
    static const PiecewiseCodeTable to = tpoly_odd();
    if (f == Family::double_antiprism) return p == Parity::even ? ae : ao;
    if (f == Family::s_poly) return p == Parity::even ? se : so;
    return p == Parity::even ? te : to;
}

FamilyWitness theorem_witness(Family f, int n) {
    require_polytope(f);
    if (n < 6)
        throw Error(Errc::param_too_small,
                    "theorem witnesses require n >= 6, got " + std::to_string(n));
    const int g = n / 2;
    if (n % 2 == 0 || f == Family::s_poly)
        return make_witness(f, n, {1, 2, g + 1, g + 2});
    return make_witness(f, n, {1, 2, g + 1, g + 3});
}

std::optional<FamilyWitness> theorem_witness_alternate(Family f, int n) {
    require_polytope(f);
    if (n < 6)
        throw Error(Errc::param_too_small,
                    "theorem witnesses require n >= 6, got " + std::to_string(n));
    if (f != Family::t_poly || n % 2 == 0) return std::nullopt;
    const int g = n / 2;
    return make_witness(f, n, {1, 2, g + 1, g + 2});
}

std::string WitnessReport::summary() const {
    std::ostringstream out;
    FamilySpec spec{primary.family, primary.n, 0};
    (void)spec;
    out << family_cli_name(primary.family) << " n=" << primary.n << " ("
        << parity_name(primary.parity) << ") witness";
    for (const auto& name : primary.names) out << ' ' << name;
    out << " : FT " << (primary_passes ? "PASS" : "FAIL");
    if (alternate) {
        out << " | alternate";
        for (const auto& name : alternate->names) out << ' ' << name;
        out << " : FT " << (*alternate_passes ? "PASS" : "FAIL");
    }
    return out.str();
}

WitnessReport verify_witness(Family f, int n) {
    WitnessReport rep;
    rep.primary = theorem_witness(f, n);
    Graph g = build(f, n);
    DistanceMatrix d = apsp(g);
    rep.primary_passes = ft_check_by_deletion(g, d, rep.primary.ids);
    rep.alternate = theorem_witness_alternate(f, n);
    if (rep.alternate) rep.alternate_passes = ft_check_by_deletion(g, d, rep.alternate->ids);
    return rep;
}

namespace {

std::vector<RowApplication> rows_for_position(const PiecewiseCodeTable& table, int n, int layer,
                                              int ring) {
    const int g = n / 2;
    const LayerTable& lt = table.layers[layer - 1];
    const LayerTable& base = lt.derived_from ? table.layers[lt.derived_from - 1] : lt;
    std::vector<RowApplication> out;
    for (std::size_t i = 0; i < base.rows.size(); ++i) {
        const TableRow& row = base.rows[i];
        if (row.lo.eval(ring, g) <= ring && ring <= row.hi.eval(ring, g)) {
            RowApplication app;
            app.layer = layer;
            app.row = static_cast<int>(i);
            app.shifted = lt.derived_from != 0;
            for (int c = 0; c < 4; ++c) app.code[c] = row.entries[c].eval(ring, g) + lt.shift;
            out.push_back(app);
        }
    }
    return out;
}

}  // namespace

std::vector<RowApplication> table_codes(Family f, int n, int vertex) {
    require_polytope(f);
    if (n < 6)
        throw Error(Errc::param_too_small, "code tables require n >= 6, got " + std::to_string(n));
    const int layers = layer_count(f);
    if (vertex < 0 || vertex >= layers * n)
        throw Error(Errc::invalid_landmark, "vertex " + std::to_string(vertex) + " out of range");
    const PiecewiseCodeTable& table = code_table(f, parity_of(n));
    const int layer = vertex / n + 1;
    const int ring = vertex % n + 1;
    auto rows = rows_for_position(table, n, layer, ring);
    if (rows.empty())
        throw Error(Errc::range_gap, "no printed row covers vertex " + std::to_string(vertex));
    return rows;
}

DiscrepancyReport verify_tables(Family f, int n) {
    require_polytope(f);
    if (n < 6)
        throw Error(Errc::param_too_small, "code tables require n >= 6, got " + std::to_string(n));
    DiscrepancyReport rep;
    rep.family = f;
    rep.n = n;
    rep.parity = parity_of(n);

    Graph g = build(f, n);
    DistanceMatrix d = apsp(g);
    FamilyWitness w = theorem_witness(f, n);
    const PiecewiseCodeTable& table = code_table(f, rep.parity);
    const int layers = layer_count(f);

    for (int layer = 1; layer <= layers; ++layer)
        for (int ring = 1; ring <= n; ++ring) {
            const int v = polytope_vertex(n, ring, layer);
            auto rows = rows_for_position(table, n, layer, ring);
            if (rows.empty()) {
                ++rep.gap_count;
                rep.gap_vertices.push_back(v);
                continue;
            }
            if (rows.size() > 1) {
                rep.overlap_count += static_cast<int>(rows.size()) - 1;
                rep.duplicated_positions.emplace_back(layer, ring);
            }
            for (const auto& app : rows)
                for (int c = 0; c < 4; ++c) {
                    CellRecord cell;
                    cell.vertex = v;
                    cell.layer = layer;
                    cell.ring = ring;
                    cell.row = app.row;
                    cell.landmark = c;
                    cell.printed = app.code[c];
                    cell.bfs = d(v, w.ids[c]);
                    cell.match = cell.printed == cell.bfs;
                    if (!cell.match) ++rep.mismatch_count;
                    rep.cells.push_back(cell);
                }
        }
    return rep;
}

std::string DiscrepancyReport::to_csv(bool header) const {
    std::ostringstream out;
    if (header) out << "family,n,parity,vertex,layer,ring,row,landmark,printed,bfs,verdict\n";
    FamilySpec spec{family, n, 0};
    for (const auto& c : cells)
        out << family_cli_name(family) << ',' << n << ',' << parity_name(parity) << ','
            << vertex_name(spec, c.vertex) << ',' << c.layer << ',' << c.ring << ',' << c.row << ','
            << c.landmark << ',' << c.printed << ',' << c.bfs << ','
            << (c.match ? "match" : "MISMATCH") << '\n';
    for (auto [layer, ring] : duplicated_positions)
        out << family_cli_name(family) << ',' << n << ',' << parity_name(parity) << ','
            << vertex_name(spec, polytope_vertex(n, ring, layer)) << ',' << layer << ',' << ring
            << ",-,-,-,-,DUPLICATE_ROW\n";
    for (int v : gap_vertices)
        out << family_cli_name(family) << ',' << n << ',' << parity_name(parity) << ','
            << vertex_name(spec, v) << ",-,-,-,-,-,-,RANGE_GAP\n";
    return out.str();
}

std::vector<ShiftRelation> shifted_code_layers(Family f) {
    require_polytope(f);
    if (f == Family::s_poly)
        return {{1, 2, {1, 1, 1, 1}}, {3, 4, {1, 1, 1, 1}}};
    if (f == Family::t_poly) return {{3, 4, {1, 1, 1, 1}}};
    return {};
}

bool verify_shift_relations(Family f, int n) {
    auto relations = shifted_code_layers(f);
    if (relations.empty()) return true;
    Graph g = build(f, n);
    DistanceMatrix d = apsp(g);
    FamilyWitness w = theorem_witness(f, n);
    for (const auto& rel : relations)
        for (int ring = 1; ring <= n; ++ring) {
            const int vb = polytope_vertex(n, ring, rel.base_layer);
            const int vd = polytope_vertex(n, ring, rel.derived_layer);
            for (int c = 0; c < 4; ++c)
                if (d(vd, w.ids[c]) != d(vb, w.ids[c]) + rel.offset[c]) return false;
        }
    return true;
}

}  // namespace resolv
