#pragma once

#include <optional>
#include <vector>

#include "qpoints/matrix.hpp"

namespace qpoints {

/// Graph on the indices != base whose edges are the pairs {j,l} with
/// coherent(q, base, j, l): a subset of indices containing base spans a
/// rank-one principal submatrix exactly when the rest of it is a clique here.
class CoherenceGraph {
public:
    CoherenceGraph(int base, std::vector<int> vertices);

    int base() const { return base_; }
    const std::vector<int>& vertices() const { return vertices_; }
    std::size_t vertex_count() const { return vertices_.size(); }

    bool edge(std::size_t a, std::size_t b) const;  // by vertex position
    void set_edge(std::size_t a, std::size_t b);

private:
    int base_;
    std::vector<int> vertices_;
    std::vector<char> adj_;
};

CoherenceGraph coherence_graph(const QuantumMatrix& q, int base);

/// All maximal cliques, reported in the graph's original index labels.
/// Isolated vertices come out as singletons. Bron-Kerbosch with pivoting,
/// outer level in degeneracy order. Throws ComponentLimitExceededError once
/// more than *limit* cliques have been emitted.
std::vector<IndexSubset> maximal_cliques(const CoherenceGraph& g,
                                         std::optional<std::size_t> limit = std::nullopt);

/// The irreducible components of the point variety: an inclusion-antichain of
/// index subsets, each spanning a maximal rank-one principal submatrix.
/// Canonical order: size descending, then lexicographic.
class PointVariety {
public:
    static PointVariety from_subsets(int n, std::vector<IndexSubset> subsets);

    int n() const { return n_; }
    const std::vector<IndexSubset>& components() const { return components_; }
    std::size_t component_count() const { return components_.size(); }

    /// max over components of |S| - 1.
    int dimension() const;
    bool is_full_space() const;

    bool operator==(const PointVariety& o) const {
        return n_ == o.n_ && components_ == o.components_;
    }
    bool operator!=(const PointVariety& o) const { return !(*this == o); }

private:
    int n_ = 0;
    std::vector<IndexSubset> components_;
};

struct ComponentsOptions {
    /// Hard cap on the number of components; the count of maximal cliques can
    /// be exponential in the matrix size, so callers exposed to untrusted
    /// input should set this.
    std::optional<std::size_t> max_components;
    /// Number of workers for the per-base clique enumeration. Any value
    /// produces identical output; 1 means fully sequential.
    int threads = 1;
};

/// Components via clique enumeration: every maximal clique C of the
/// coherence graph at base i yields the component {i} | C; deduplicate
/// across bases. The n = 0 variety is a single point.
PointVariety components(const QuantumMatrix& q, const ComponentsOptions& opts = {});

/// Independent oracle: enumerate all non-empty index subsets, keep the
/// maximal rank-one ones (all-triples test). Guarded to n <= 16.
PointVariety brute_force_components(const QuantumMatrix& q);

/// Which index the recursive algorithm eliminates at each level.
enum class EliminationOrder { highest_first, lowest_first };

/// Structural oracle following the zero/non-zero coordinate split: the
/// eliminated index e contributes {e} | C for cliques C of its coherence
/// graph, the rest comes from recursing on the matrix with e deleted; the
/// union is pruned to maximal subsets. Always equals components(q).
PointVariety recursive_components(const QuantumMatrix& q,
                                  EliminationOrder order = EliminationOrder::highest_first);

/// A point of projective space with exactly-known coordinates: each one is
/// either zero or a non-zero UnitMonomial. Membership in the point variety
/// only ever depends on the support.
class ProjectivePoint {
public:
    explicit ProjectivePoint(std::vector<std::optional<UnitMonomial>> coords);

    const std::vector<std::optional<UnitMonomial>>& coords() const { return coords_; }
    const IndexSubset& support() const { return support_; }

private:
    std::vector<std::optional<UnitMonomial>> coords_;
    IndexSubset support_;
};

/// True iff the point lies on the variety, i.e. its support spans a rank-one
/// principal submatrix.
bool membership(const QuantumMatrix& q, const ProjectivePoint& p);

/// Dimension of the point variety.
int dimension(const QuantumMatrix& q);

}  // namespace qpoints
