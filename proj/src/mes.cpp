#include "noncover/mes.hpp"

#include <algorithm>

#include <nlohmann/json.hpp>

#include "noncover/errors.hpp"

namespace noncover {

namespace {

RelabeledInstance build_instance(const Graph& g, VertexSet maximal_witness,
                                 DominationValue igamma_value) {
    int n = g.vertex_count();
    int i = maximal_witness.size();
    Permutation perm;
    perm.to_new.assign(static_cast<std::size_t>(n) + 1, 0);
    perm.to_old.assign(static_cast<std::size_t>(n) + 1, 0);
    int next = 0;
    for (int v : g.vertices() - maximal_witness) perm.to_new[static_cast<std::size_t>(v)] = ++next;
    for (int v : maximal_witness) perm.to_new[static_cast<std::size_t>(v)] = ++next;
    for (int v = 1; v <= n; ++v)
        perm.to_old[static_cast<std::size_t>(perm.apply(v))] = v;

    std::vector<Edge> edges;
    edges.reserve(g.edges().size());
    for (const Edge& e : g.edges()) edges.push_back({perm.apply(e.u), perm.apply(e.v)});
    return {g, Graph(n, std::move(edges)), std::move(perm), maximal_witness, i, igamma_value};
}

}  // namespace

RelabeledInstance normalize_instance(const Graph& g) {
    if (has_isolated_vertex(g))
        throw std::domain_error(
            "cannot normalize: independent domination number is infinite (isolated vertex)");
    DominationWitness w = igamma(g);
    return build_instance(g, w.independent_set, w.value);
}

RelabeledInstance normalize_instance(const Graph& g, VertexSet witness) {
    if (has_isolated_vertex(g))
        throw std::domain_error(
            "cannot normalize: independent domination number is infinite (isolated vertex)");
    if (!is_independent(g, witness))
        throw std::invalid_argument("witness is not an independent set");
    DominationValue target = igamma(g).value;
    if (gamma(g, witness).value != target)
        throw std::invalid_argument("witness does not attain igamma");
    // extend greedily to a maximal independent set; gamma is monotone in A,
    // so the extension still attains the maximum
    VertexSet extended = witness;
    for (int v = 1; v <= g.vertex_count(); ++v)
        if (!extended.contains(v) && !g.neighbors(v).intersects(extended)) extended.add(v);
    return build_instance(g, extended, target);
}

bool edge_order_lt(Edge a, Edge b) { return a.v != b.v ? a.v < b.v : a.u < b.u; }

FacetOrdering noncover_facet_ordering(const Graph& g) {
    if (g.edges().empty())
        throw std::invalid_argument("edgeless graph: the non-cover complex is void");
    std::vector<Edge> edges = g.edges();
    std::sort(edges.begin(), edges.end(), edge_order_lt);
    FacetOrdering ord{g.vertex_count(), {}};
    ord.facets.reserve(edges.size());
    for (const Edge& e : edges)
        ord.facets.push_back(VertexSet::of({e.u, e.v}).complement_in(g.vertex_count()));
    return ord;
}

MesRecord mes(const FacetOrdering& ord, VertexSet face) {
    int first = 0;
    for (std::size_t i = 0; i < ord.facets.size(); ++i)
        if (face.subset_of(ord.facets[i])) {
            first = static_cast<int>(i) + 1;
            break;
        }
    if (first == 0) throw std::invalid_argument("not a face of the ordered complex");
    MesRecord rec;
    rec.face = face;
    rec.first_index = first;
    // entry k prefers the smallest earlier entry still excluded by facet k,
    // falling back to the smallest excluded vertex overall
    for (int k = 1; k < first; ++k) {
        VertexSet excluded = face - ord.facets[static_cast<std::size_t>(k - 1)];
        VertexSet repeats = rec.support & excluded;
        int v = (repeats.empty() ? excluded : repeats).minimum();
        rec.sequence.push_back(v);
        rec.support.add(v);
    }
    return rec;
}

int d_prec(const FacetOrdering& ord, std::size_t face_budget) {
    int best = 0;
    for (VertexSet face : enumerate_faces(ord.complex(), face_budget))
        best = std::max(best, mes(ord, face).support.size());
    return best;
}

int beta_count(const RelabeledInstance& inst, VertexSet face_relabeled) {
    const Graph& g = inst.relabeled;
    VertexSet outside = face_relabeled.complement_in(inst.n());
    VertexSet outside_rest = outside & inst.relabeled_rest();
    return (neighborhood(g, outside_rest) & outside & inst.relabeled_witness()).size();
}

int collapsibility_bound(const Graph& g) {
    if (has_isolated_vertex(g))
        throw std::domain_error(
            "collapsibility bound undefined: independent domination number is infinite");
    return g.vertex_count() - igamma(g).value.value() - 1;
}

MesBoundReport verify_mes_bound(const Graph& g, std::size_t face_budget) {
    if (g.edges().empty())
        throw std::invalid_argument("edgeless graph: nothing to verify (void complex)");
    RelabeledInstance inst = normalize_instance(g);
    FacetOrdering ord = noncover_facet_ordering(inst.relabeled);

    MesBoundReport report;
    report.n = inst.n();
    report.igamma = inst.igamma_value.value();
    report.bound = report.n - report.igamma - 1;

    for (VertexSet face : enumerate_faces(ord.complex(), face_budget)) {
        MesRecord rec = mes(ord, face);
        if (rec.support.size() > report.d_prec || report.witness_record.first_index == 0) {
            report.d_prec = rec.support.size();
            report.witness_record = rec;
        }
    }
    report.pass = report.d_prec <= report.bound;
    report.witness_face = inst.perm.invert(report.witness_record.face);
    for (int v : report.witness_record.sequence)
        report.witness_sequence.push_back(inst.perm.invert(v));
    return report;
}

nlohmann::json mes_report_to_json(const MesBoundReport& r) {
    return {{"n", r.n},
            {"igamma", r.igamma},
            {"bound", r.bound},
            {"d_prec", r.d_prec},
            {"pass", r.pass},
            {"witness_face", r.witness_face.to_vector()},
            {"mes", r.witness_sequence}};
}

}  // namespace noncover
