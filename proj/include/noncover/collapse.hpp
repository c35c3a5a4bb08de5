#ifndef NONCOVER_COLLAPSE_HPP
#define NONCOVER_COLLAPSE_HPP

#include <optional>
#include <string>
#include <vector>

#include <nlohmann/json_fwd.hpp>

#include "noncover/simplicial_complex.hpp"

namespace noncover {

inline constexpr std::size_t default_state_budget = std::size_t{1} << 20;

// One elementary collapse: delete every face containing `free_face`, which
// at the time of application lies in the unique facet `containing_facet`.
struct CollapseStep {
    VertexSet free_face;
    VertexSet containing_facet;

    friend bool operator==(const CollapseStep& a, const CollapseStep& b) {
        return a.free_face == b.free_face && a.containing_facet == b.containing_facet;
    }
};

// Ordered steps taking a complex all the way to the void complex.
struct CollapseCertificate {
    std::vector<CollapseStep> steps;

    // Largest free-face size used; the d this certificate witnesses.
    int max_free_size() const;
};

// All free faces of size <= d with their unique containing facet, ordered
// by size then ascending mask.  The void complex has none.
std::vector<CollapseStep> free_faces(const SimplicialComplex& x, int d);

// Applies one elementary collapse.  Throws if `free` is not a face or lies
// in more than one facet.
SimplicialComplex apply_collapse(const SimplicialComplex& x, VertexSet free);

enum class CollapseStatus { collapsible, not_collapsible, budget_exceeded };

struct CollapseResult {
    CollapseStatus status;
    std::optional<CollapseCertificate> certificate;  // present iff collapsible
    std::size_t states_visited = 0;
};

// Exact decision by depth-first search over free-face choices, memoizing
// states proven non-collapsible.  A budget_exceeded result means the state
// cap was hit before the search finished: it is NOT a "no".  Returned
// certificates are replay-validated before this function returns.
CollapseResult is_d_collapsible(const SimplicialComplex& x, int d,
                                std::size_t state_budget = default_state_budget);

// Fast path: always applies the first free face.  Its failure proves
// nothing; is_d_collapsible is the authority.
std::optional<CollapseCertificate> greedy_collapse(const SimplicialComplex& x, int d);

struct ReplayResult {
    bool ok = false;
    int failed_step = -1;  // 0-based; -1 when ok
    std::string reason;
};

// Re-runs a certificate from scratch, re-verifying freeness, the recorded
// facet, and the size bound d at every step, and voidness at the end.
ReplayResult replay_certificate(const SimplicialComplex& x, const CollapseCertificate& cert,
                                int d);

// Minimal d with is_d_collapsible(x, d); 0 for the void complex.  Throws
// BudgetExceeded if any level of the search hits the state cap.
int collapsibility_number(const SimplicialComplex& x,
                          std::size_t state_budget = default_state_budget);

// Certificate JSON: an ordered array [{"free":[...],"facet":[...]},...].
nlohmann::json certificate_to_json(const CollapseCertificate& cert);
CollapseCertificate certificate_from_json(const nlohmann::json& j);

}  // namespace noncover

#endif
