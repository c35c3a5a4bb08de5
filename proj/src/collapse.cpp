#include "noncover/collapse.hpp"

#include <algorithm>
#include <unordered_set>

#include <nlohmann/json.hpp>

#include "noncover/errors.hpp"

namespace noncover {

int CollapseCertificate::max_free_size() const {
    int m = 0;
    for (const CollapseStep& s : steps) m = std::max(m, s.free_face.size());
    return m;
}

namespace {

// Facets containing sigma (there may be 0, 1, or more).
std::vector<VertexSet> containing_facets(const SimplicialComplex& x, VertexSet sigma) {
    std::vector<VertexSet> out;
    for (VertexSet f : x.facets())
        if (sigma.subset_of(f)) out.push_back(f);
    return out;
}

}  // namespace

std::vector<CollapseStep> free_faces(const SimplicialComplex& x, int d) {
    if (d < 0) throw std::invalid_argument("collapse dimension must be non-negative");
    std::vector<CollapseStep> out;
    for (VertexSet facet : x.facets()) {
        std::uint64_t m = facet.mask();
        std::uint64_t sub = m;
        while (true) {
            VertexSet sigma = VertexSet::from_mask(sub);
            if (sigma.size() <= d) {
                // a face in exactly one facet is collected once, from that facet
                int count = 0;
                for (VertexSet f : x.facets()) count += sigma.subset_of(f);
                if (count == 1) out.push_back({sigma, facet});
            }
            if (sub == 0) break;
            sub = (sub - 1) & m;
        }
    }
    std::sort(out.begin(), out.end(), [](const CollapseStep& a, const CollapseStep& b) {
        if (a.free_face.size() != b.free_face.size())
            return a.free_face.size() < b.free_face.size();
        return mask_less(a.free_face, b.free_face);
    });
    return out;
}

SimplicialComplex apply_collapse(const SimplicialComplex& x, VertexSet free) {
    std::vector<VertexSet> homes = containing_facets(x, free);
    if (homes.empty()) throw std::invalid_argument("collapse face is not a face of the complex");
    if (homes.size() > 1)
        throw std::invalid_argument("collapse face is not free: contained in " +
                                    std::to_string(homes.size()) + " facets");
    VertexSet tau = homes.front();
    std::vector<VertexSet> facets;
    for (VertexSet f : x.facets())
        if (f != tau) facets.push_back(f);
    for (int v : free) facets.push_back(tau.without(v));
    return {x.ground_n(), std::move(facets)};  // constructor restores the antichain
}

namespace {

struct StateKeyHash {
    std::size_t operator()(const std::vector<std::uint64_t>& key) const {
        std::size_t h = 1469598103934665603ull;
        for (std::uint64_t m : key) {
            h ^= m;
            h *= 1099511628211ull;
        }
        return h;
    }
};

std::vector<std::uint64_t> state_key(const SimplicialComplex& x) {
    std::vector<std::uint64_t> key;
    key.reserve(x.facets().size());
    for (VertexSet f : x.facets()) key.push_back(f.mask());
    return key;
}

enum class SearchOutcome { success, failure, budget };

struct Search {
    int d;
    std::size_t budget;
    std::size_t visited = 0;
    bool exhausted = false;
    std::unordered_set<std::vector<std::uint64_t>, StateKeyHash> failed;
    std::vector<CollapseStep> path;

    SearchOutcome run(const SimplicialComplex& x) {
        if (x.is_void()) return SearchOutcome::success;
        if (exhausted) return SearchOutcome::budget;
        std::vector<std::uint64_t> key = state_key(x);
        if (failed.count(key)) return SearchOutcome::failure;
        if (++visited > budget) {
            exhausted = true;
            return SearchOutcome::budget;
        }
        bool truncated = false;
        for (const CollapseStep& step : free_faces(x, d)) {
            path.push_back(step);
            SearchOutcome sub = run(apply_collapse(x, step.free_face));
            if (sub == SearchOutcome::success) return sub;
            path.pop_back();
            if (sub == SearchOutcome::budget) {
                truncated = true;
                break;
            }
        }
        if (truncated) return SearchOutcome::budget;
        failed.insert(std::move(key));  // fully explored, provably stuck
        return SearchOutcome::failure;
    }
};

}  // namespace

CollapseResult is_d_collapsible(const SimplicialComplex& x, int d, std::size_t state_budget) {
    if (d < 0) throw std::invalid_argument("collapse dimension must be non-negative");
    Search search{d, state_budget, 0, false, {}, {}};
    SearchOutcome out = search.run(x);
    CollapseResult result{CollapseStatus::not_collapsible, std::nullopt, search.visited};
    if (out == SearchOutcome::budget) {
        result.status = CollapseStatus::budget_exceeded;
    } else if (out == SearchOutcome::success) {
        CollapseCertificate cert{std::move(search.path)};
        ReplayResult replay = replay_certificate(x, cert, d);
        if (!replay.ok)
            throw std::logic_error("internal error: certificate failed replay at step " +
                                   std::to_string(replay.failed_step) + ": " + replay.reason);
        result.status = CollapseStatus::collapsible;
        result.certificate = std::move(cert);
    }
    return result;
}

std::optional<CollapseCertificate> greedy_collapse(const SimplicialComplex& x, int d) {
    SimplicialComplex current = x;
    CollapseCertificate cert;
    while (!current.is_void()) {
        std::vector<CollapseStep> moves = free_faces(current, d);
        if (moves.empty()) return std::nullopt;
        cert.steps.push_back(moves.front());
        current = apply_collapse(current, moves.front().free_face);
    }
    return cert;
}

ReplayResult replay_certificate(const SimplicialComplex& x, const CollapseCertificate& cert,
                                int d) {
    SimplicialComplex current = x;
    for (std::size_t i = 0; i < cert.steps.size(); ++i) {
        const CollapseStep& step = cert.steps[i];
        int idx = static_cast<int>(i);
        if (step.free_face.size() > d)
            return {false, idx, "free face larger than d"};
        std::vector<VertexSet> homes = containing_facets(current, step.free_face);
        if (homes.empty()) return {false, idx, "free face is not a face"};
        if (homes.size() > 1) return {false, idx, "face is not free"};
        if (homes.front() != step.containing_facet)
            return {false, idx, "recorded facet does not match"};
        current = apply_collapse(current, step.free_face);
    }
    if (!current.is_void()) return {false, static_cast<int>(cert.steps.size()), "end state is not void"};
    return {true, -1, ""};
}

int collapsibility_number(const SimplicialComplex& x, std::size_t state_budget) {
    if (x.is_void()) return 0;
    for (int d = 0; d <= x.max_facet_size(); ++d) {
        CollapseResult r = is_d_collapsible(x, d, state_budget);
        if (r.status == CollapseStatus::budget_exceeded)
            throw BudgetExceeded("collapsibility search at d=" + std::to_string(d), state_budget,
                                 r.states_visited);
        if (r.status == CollapseStatus::collapsible) return d;
    }
    // collapsing whole facets (size <= max facet size) always terminates
    throw std::logic_error("complex not collapsible at its facet size");
}

nlohmann::json certificate_to_json(const CollapseCertificate& cert) {
    nlohmann::json steps = nlohmann::json::array();
    for (const CollapseStep& s : cert.steps)
        steps.push_back({{"free", s.free_face.to_vector()}, {"facet", s.containing_facet.to_vector()}});
    return steps;
}

CollapseCertificate certificate_from_json(const nlohmann::json& j) {
    CollapseCertificate cert;
    for (const auto& step : j) {
        VertexSet free, facet;
        for (const auto& v : step.at("free")) free.add(v.get<int>());
        for (const auto& v : step.at("facet")) facet.add(v.get<int>());
        cert.steps.push_back({free, facet});
    }
    return cert;
}

}  // namespace noncover
