#pragma once

#include <cstdint>
#include <initializer_list>
#include <vector>

#include "qpoints/scalar.hpp"

namespace qpoints {

/// A sorted, duplicate-free set of row/column indices.
class IndexSubset {
public:
    IndexSubset() = default;
    explicit IndexSubset(std::vector<int> indices);
    IndexSubset(std::initializer_list<int> indices)
        : IndexSubset(std::vector<int>(indices)) {}

    const std::vector<int>& indices() const { return indices_; }
    std::size_t size() const { return indices_.size(); }
    bool empty() const { return indices_.empty(); }
    bool contains(int i) const;
    bool contains_all(const IndexSubset& other) const;
    int min() const { return indices_.front(); }
    int max() const { return indices_.back(); }

    bool operator==(const IndexSubset& o) const { return indices_ == o.indices_; }
    bool operator!=(const IndexSubset& o) const { return !(*this == o); }
    bool operator<(const IndexSubset& o) const { return indices_ < o.indices_; }

private:
    std::vector<int> indices_;
};

/// The parameter matrix of a quantum polynomial algebra: a square matrix of
/// non-zero UnitMonomials with unit diagonal and reciprocal symmetry
/// q[j][i] = q[i][j]^-1. Only the upper triangle carries information, and
/// construction enforces the symmetry, so invalid matrices are
/// unrepresentable through the public factories.
class QuantumMatrix {
public:
    /// The commutative matrix on n+1 variables (every entry 1).
    static QuantumMatrix all_ones(int n);

    /// Build from upper-triangle entries listed row-major:
    /// (0,1), (0,2), ..., (0,n), (1,2), ..., (n-1,n).
    static QuantumMatrix from_upper_triangle(int n, const std::vector<UnitMonomial>& upper);

    int n() const { return n_; }
    int size() const { return n_ + 1; }

    /// Entry q[i][j]; indices checked.
    const UnitMonomial& at(int i, int j) const;

    /// Checks the three defining invariants entry by entry; the factories
    /// make this true by construction, property tests call it anyway.
    bool is_valid() const;

    bool operator==(const QuantumMatrix& o) const {
        return n_ == o.n_ && entries_ == o.entries_;
    }
    bool operator!=(const QuantumMatrix& o) const { return !(*this == o); }

private:
    explicit QuantumMatrix(int n);
    void check_index(int i) const;

    int n_ = 0;
    std::vector<UnitMonomial> entries_;  // (n+1)^2 row-major
};

/// A matrix derived from another one by dropping an index, together with the
/// index map back to the original labels: kept[new_index] = old_index.
struct ReindexedMatrix {
    QuantumMatrix matrix;
    std::vector<int> kept;
};

/// Remove row and column i, reindexing the survivors densely.
ReindexedMatrix delete_index(const QuantumMatrix& q, int i);

/// The parameter matrix of the degree-zero localization at variable i:
/// r[j][l] = q[i][j] * q[j][l] * q[i][l]^-1 over the indices != i.
ReindexedMatrix localize(const QuantumMatrix& q, int i);

/// True iff the localized parameter r[j][l] at base i equals 1; symmetric in
/// all three arguments.
bool coherent(const QuantumMatrix& q, int i, int j, int l);

/// True iff the principal submatrix on s has rank one. Uses the base-point
/// reduction: fix b = min(s) and require every triple through b coherent.
bool is_rank_one_subset(const QuantumMatrix& q, const IndexSubset& s);

/// Same predicate, decided by testing every triple of s. Slower; kept as an
/// independent route for the brute-force oracle.
bool is_rank_one_subset_all_triples(const QuantumMatrix& q, const IndexSubset& s);

/// Rank-one test for the whole matrix.
bool is_rank_one(const QuantumMatrix& q);

/// The rank-one matrix q[i][j] = w[i] * w[j]^-1.
QuantumMatrix rank_one_from_weights(const std::vector<UnitMonomial>& weights);

/// Entrywise product with the rank-one matrix of the weights; preserves all
/// coherence values (the weight factors cancel in every r[j][l]).
QuantumMatrix gauge_twist(const QuantumMatrix& q, const std::vector<UnitMonomial>& weights);

/// Off-diagonal entries all -1.
QuantumMatrix sign_matrix(int n);

/// What random_matrix may put into an entry: phases with bounded denominator
/// and products of a fixed set of named symbols. With fresh_symbol_per_entry
/// the entry (i,j) is instead the single fresh symbol e<i>_<j>.
struct GeneratorPool {
    int max_phase_denominator = 6;
    int symbol_count = 0;
    bool fresh_symbol_per_entry = false;
};

/// Seed-deterministic random matrix over the pool.
QuantumMatrix random_matrix(int n, std::uint64_t seed, const GeneratorPool& pool);

}  // namespace qpoints
