#include "noncover/homology.hpp"

#include <algorithm>
#include <cstdint>
#include <optional>
#include <vector>

#include <gmpxx.h>
#include <nlohmann/json.hpp>

#include "noncover/errors.hpp"

namespace noncover {

namespace {

// Rank over Q by fraction-free (Bareiss) elimination: all intermediates are
// exact integers, so no precision is ever lost.  The int64 path covers every
// desk-scale matrix; if an update would overflow we redo the whole
// computation with GMP integers.
std::optional<int> bareiss_rank_i64(std::vector<std::vector<long long>> m) {
    if (m.empty() || m[0].empty()) return 0;
    std::size_t rows = m.size(), cols = m[0].size();
    int rank = 0;
    std::size_t row = 0;
    long long prev = 1;
    for (std::size_t col = 0; col < cols && row < rows; ++col) {
        std::size_t pivot = row;
        while (pivot < rows && m[pivot][col] == 0) ++pivot;
        if (pivot == rows) continue;  // stays zero below under later updates
        std::swap(m[pivot], m[row]);
        long long piv = m[row][col];
        for (std::size_t r = row + 1; r < rows; ++r) {
            for (std::size_t c = col + 1; c < cols; ++c) {
                __int128 t = static_cast<__int128>(m[r][c]) * piv -
                             static_cast<__int128>(m[r][col]) * m[row][c];
                t /= prev;  // exact by the Sylvester identity
                if (t > INT64_MAX || t < INT64_MIN) return std::nullopt;
                m[r][c] = static_cast<long long>(t);
            }
            m[r][col] = 0;
        }
        prev = piv;
        ++row;
        ++rank;
    }
    return rank;
}

int bareiss_rank_mpz(std::vector<std::vector<mpz_class>> m) {
    if (m.empty() || m[0].empty()) return 0;
    std::size_t rows = m.size(), cols = m[0].size();
    int rank = 0;
    std::size_t row = 0;
    mpz_class prev = 1;
    for (std::size_t col = 0; col < cols && row < rows; ++col) {
        std::size_t pivot = row;
        while (pivot < rows && m[pivot][col] == 0) ++pivot;
        if (pivot == rows) continue;
        std::swap(m[pivot], m[row]);
        mpz_class piv = m[row][col];
        for (std::size_t r = row + 1; r < rows; ++r) {
            for (std::size_t c = col + 1; c < cols; ++c) {
                mpz_class t = m[r][c] * piv - m[r][col] * m[row][c];
                mpz_divexact(t.get_mpz_t(), t.get_mpz_t(), prev.get_mpz_t());
                m[r][c] = t;
            }
            m[r][col] = 0;
        }
        prev = piv;
        ++row;
        ++rank;
    }
    return rank;
}

// Faces bucketed by size, each bucket sorted by ascending mask: the face
// index that makes boundary matrices deterministic.
std::vector<std::vector<std::uint64_t>> face_buckets(const SimplicialComplex& x,
                                                     std::size_t face_budget) {
    std::vector<std::vector<std::uint64_t>> buckets(
        static_cast<std::size_t>(x.max_facet_size()) + 1);
    for (VertexSet f : enumerate_faces(x, face_budget))
        buckets[static_cast<std::size_t>(f.size())].push_back(f.mask());
    return buckets;  // enumerate_faces is mask-sorted already
}

// Rank of the boundary map from size-s faces to size-(s-1) faces (s >= 1);
// s = 1 is the augmentation onto the empty face.  Orientation: removing the
// j-th smallest vertex carries sign (-1)^j.
int boundary_rank(const std::vector<std::vector<std::uint64_t>>& buckets, std::size_t s) {
    if (s == 0 || s >= buckets.size() || buckets[s].empty()) return 0;
    const std::vector<std::uint64_t>& rows_faces = buckets[s - 1];
    const std::vector<std::uint64_t>& cols_faces = buckets[s];
    std::vector<std::vector<long long>> m(rows_faces.size(),
                                          std::vector<long long>(cols_faces.size(), 0));
    for (std::size_t c = 0; c < cols_faces.size(); ++c) {
        VertexSet sigma = VertexSet::from_mask(cols_faces[c]);
        int j = 0;
        for (int v : sigma) {
            std::uint64_t sub = sigma.without(v).mask();
            auto it = std::lower_bound(rows_faces.begin(), rows_faces.end(), sub);
            std::size_t r = static_cast<std::size_t>(it - rows_faces.begin());
            m[r][c] = (j % 2 == 0) ? 1 : -1;
            ++j;
        }
    }
    if (std::optional<int> rank = bareiss_rank_i64(m)) return *rank;
    std::vector<std::vector<mpz_class>> big(m.size());
    for (std::size_t r = 0; r < m.size(); ++r)
        for (long long v : m[r]) big[r].push_back(mpz_class(static_cast<long>(v)));
    return bareiss_rank_mpz(std::move(big));
}

std::map<int, long> betti_range(const SimplicialComplex& x, int from_dim,
                                std::size_t face_budget) {
    std::map<int, long> out;
    if (x.is_void()) return out;
    auto buckets = face_buckets(x, face_budget);
    std::size_t smax = buckets.size() - 1;
    std::size_t smin = from_dim < 0 ? 0 : static_cast<std::size_t>(from_dim + 1);
    if (smin > smax) return out;
    // ranks[s] = rank of the boundary map leaving size-s faces
    std::vector<int> ranks(smax + 2, 0);
    for (std::size_t s = smin; s <= smax; ++s) ranks[s] = boundary_rank(buckets, s);
    for (std::size_t s = smin; s <= smax; ++s) {
        long count = static_cast<long>(buckets[s].size());
        out[static_cast<int>(s) - 1] = count - ranks[s] - ranks[s + 1];
    }
    return out;
}

}  // namespace

HomologyProfile reduced_betti(const SimplicialComplex& x, std::size_t face_budget) {
    return {betti_range(x, -1, face_budget), x.is_void()};
}

std::map<int, long> reduced_betti_from(const SimplicialComplex& x, int from_dim,
                                       std::size_t face_budget) {
    return betti_range(x, from_dim, face_budget);
}

EtaValue eta(const SimplicialComplex& x, std::size_t face_budget) {
    if (x.is_void()) return {true, 0, true};
    HomologyProfile p = reduced_betti(x, face_budget);
    if (auto first = p.first_nonzero()) return {false, *first + 1, false};
    return {true, 0, false};
}

ConnectivityBoundReport check_connectivity_bound(const Graph& g, std::size_t face_budget) {
    ConnectivityBoundReport report;
    if (has_isolated_vertex(g)) {
        report.skipped = true;
        report.skip_reason = "isolated vertex: independent domination number is infinite";
        report.igamma_value = DominationValue::infinity();
        return report;
    }
    report.igamma_value = igamma(g).value;
    report.eta_value = eta(independence_complex(g), face_budget);
    report.pass = report.eta_value.at_least(report.igamma_value.value());
    return report;
}

VanishingReport check_vanishing(const Graph& g, bool check_induced, std::size_t face_budget) {
    if (g.edges().empty()) throw std::invalid_argument("vanishing check needs at least one edge");
    if (has_isolated_vertex(g))
        throw std::domain_error("vanishing check undefined for graphs with isolated vertices");
    VanishingReport report;
    report.bound = g.vertex_count() - igamma(g).value.value() - 1;
    report.pass = true;
    SimplicialComplex nc = noncover_complex(g);

    auto vanishing_from_bound = [&](const SimplicialComplex& x) -> std::optional<int> {
        for (const auto& [dim, b] : reduced_betti_from(x, report.bound, face_budget))
            if (b != 0) return dim;
        return std::nullopt;
    };

    if (auto bad = vanishing_from_bound(nc)) {
        report.pass = false;
        report.failing_dim = *bad;
        return report;
    }
    if (check_induced) {
        std::uint64_t full = VertexSet::full(g.vertex_count()).mask();
        for (std::uint64_t w = 0;; ++w) {
            if (auto bad = vanishing_from_bound(induced_subcomplex(nc, VertexSet::from_mask(w)))) {
                report.pass = false;
                report.failing_subset = VertexSet::from_mask(w);
                report.failing_dim = *bad;
                return report;
            }
            if (w == full) break;
        }
    }
    return report;
}

DualityReport check_alexander_duality(const SimplicialComplex& x, std::size_t face_budget) {
    int n = x.ground_n();
    if (x.contains_face(VertexSet::full(n)))
        throw std::invalid_argument("duality requires the full vertex set not be a face");
    HomologyProfile primal = reduced_betti(x, face_budget);
    HomologyProfile dual = reduced_betti(alexander_dual(x), face_budget);
    for (int i = -1; i <= n - 2; ++i) {
        long bd = dual.betti(i);
        long bp = primal.betti(n - i - 3);
        if (bd != bp) return {false, i, bd, bp};
    }
    return {true, 0, 0, 0};
}

int leray_number(const SimplicialComplex& x, std::size_t face_budget, int ground_guard) {
    int n = x.ground_n();
    if (n > ground_guard)
        throw BudgetExceeded("leray induced-subcomplex scan ground guard",
                             static_cast<std::size_t>(ground_guard), static_cast<std::size_t>(n));
    int d = 0;
    std::uint64_t full = VertexSet::full(n).mask();
    for (std::uint64_t w = 0;; ++w) {
        SimplicialComplex sub = induced_subcomplex(x, VertexSet::from_mask(w));
        for (const auto& [dim, b] : reduced_betti_from(sub, 0, face_budget))
            if (b != 0) d = std::max(d, dim + 1);
        if (w == full) break;
    }
    return d;
}

nlohmann::json profile_to_json(const HomologyProfile& p) {
    nlohmann::json betti = nlohmann::json::object();
    for (const auto& [dim, b] : p.entries()) betti[std::to_string(dim)] = b;
    nlohmann::json out{{"betti", std::move(betti)}};
    if (p.is_void()) out["void"] = true;
    return out;
}

}  // namespace noncover
