#ifndef NONCOVER_HOMOLOGY_HPP
#define NONCOVER_HOMOLOGY_HPP

#include <map>
#include <optional>
#include <string>

#include <nlohmann/json_fwd.hpp>

#include "noncover/domination.hpp"
#include "noncover/graph.hpp"
#include "noncover/simplicial_complex.hpp"

namespace noncover {

// Reduced Betti numbers over the rationals, indexed from dimension -1 up.
// For the void complex every group is zero by convention (flagged).
class HomologyProfile {
public:
    HomologyProfile() = default;
    HomologyProfile(std::map<int, long> betti, bool void_complex)
        : betti_(std::move(betti)), void_complex_(void_complex) {}

    long betti(int dim) const {
        auto it = betti_.find(dim);
        return it == betti_.end() ? 0 : it->second;
    }

    const std::map<int, long>& entries() const { return betti_; }
    bool is_void() const { return void_complex_; }

    bool all_zero() const {
        for (const auto& [dim, b] : betti_)
            if (b != 0) return false;
        return true;
    }

    // Smallest dimension with non-vanishing homology, if any.
    std::optional<int> first_nonzero() const {
        for (const auto& [dim, b] : betti_)
            if (b != 0) return dim;
        return std::nullopt;
    }

private:
    std::map<int, long> betti_;  // dims -1 .. max facet size - 1
    bool void_complex_ = false;
};

// Ranks of the reduced boundary maps over Q, computed by fraction-free
// integer elimination (exact, GMP-backed on overflow); no floating point
// anywhere.
HomologyProfile reduced_betti(const SimplicialComplex& x,
                              std::size_t face_budget = default_face_budget);

// Betti numbers for dimensions >= from_dim only (cheaper: only the top
// boundary ranks are computed).  Values agree with reduced_betti.
std::map<int, long> reduced_betti_from(const SimplicialComplex& x, int from_dim,
                                       std::size_t face_budget = default_face_budget);

// eta(X): the largest k with vanishing reduced homology in every dimension
// -1..k-2; unbounded when nothing survives.  eta(void) is reported
// unbounded with the degenerate flag set.
struct EtaValue {
    bool unbounded = false;
    int value = 0;  // meaningful when !unbounded
    bool degenerate_void = false;

    bool at_least(int k) const { return unbounded || value >= k; }
    std::string to_string() const { return unbounded ? "unbounded" : std::to_string(value); }
};

EtaValue eta(const SimplicialComplex& x, std::size_t face_budget = default_face_budget);

// eta(I(G)) >= igamma(G).  Graphs with isolated vertices are skipped: the
// left side is not defined by the source material when igamma is infinite.
struct ConnectivityBoundReport {
    bool skipped = false;
    std::string skip_reason;
    DominationValue igamma_value;
    EtaValue eta_value;
    bool pass = false;
};

ConnectivityBoundReport check_connectivity_bound(const Graph& g,
                                  std::size_t face_budget = default_face_budget);

// Vanishing of reduced homology of NC(G) in all dimensions >= n-igamma-1;
// with check_induced, the same for NC(G)[W] for every W (2^n subcomplexes).
struct VanishingReport {
    int bound = 0;
    bool pass = false;
    std::optional<VertexSet> failing_subset;  // only with check_induced
    int failing_dim = 0;
};

VanishingReport check_vanishing(const Graph& g, bool check_induced = false,
                    std::size_t face_budget = default_face_budget);

// betti(D(X), i) == betti(X, |V|-i-3) for all -1 <= i <= |V|-2.  Requires
// that the full vertex set is not a face of X.
struct DualityReport {
    bool pass = false;
    int failing_index = 0;
    long betti_dual = 0;
    long betti_primal = 0;
};

DualityReport check_alexander_duality(const SimplicialComplex& x,
                                      std::size_t face_budget = default_face_budget);

// Minimal d such that every induced subcomplex has vanishing reduced
// homology in all dimensions >= d.  Enumerates all 2^n induced
// subcomplexes; guarded on the ground-set size.
int leray_number(const SimplicialComplex& x, std::size_t face_budget = default_face_budget,
                 int ground_guard = 16);

nlohmann::json profile_to_json(const HomologyProfile& p);

}  // namespace noncover

#endif
