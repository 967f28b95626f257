#pragma once

#include <memory>
#include <vector>

#include "hilbpoly/degrees.hpp"
#include "hilbpoly/rational.hpp"

namespace hilbpoly {

/// Weight-multiplicity table for the symmetric algebra of V_d: count(n, w)
/// is the number of monomials of total degree n in the coefficient
/// variables x_{i,j} (1 <= i <= s, 0 <= j <= d_i, weight d_i - 2j) whose
/// weights sum to w. For a single form this counts the solutions of
///     a_1 + 2 a_2 + ... + d a_d = (d n - w) / 2,   a_0 + ... + a_d = n,
/// which is the classical two-line system behind the Cayley-Sylvester
/// formula; the several-forms case is the same count on the direct sum.
///
/// Immutable once built; share freely across threads.
class WeightTable {
  public:
    static WeightTable build(const DegreeVector& d, int max_n);

    const DegreeVector& degree_vector() const { return d_; }
    int max_n() const { return max_n_; }

    /// count(n, w); zero whenever no monomial matches (including parity
    /// mismatches and |w| > n * max(d_i)). Requires n <= max_n.
    const Int& count(int n, int w) const;

  private:
    WeightTable(DegreeVector d, int max_n)
        : d_(std::move(d)), max_n_(max_n) {}

    DegreeVector d_;
    int max_n_;
    int offset_ = 0;  // stored index of weight 0
    int width_ = 0;   // number of stored weights per degree row
    std::vector<Int> cells_;  // (max_n+1) rows by width_, row-major
};

/// Builds (or reuses) the process-wide cached table for d, grown to cover
/// max_n. Tables only ever grow; a request past the current size triggers a
/// rebuild, never an error.
std::shared_ptr<const WeightTable> shared_weight_table(const DegreeVector& d,
                                                       int max_n);

/// Number of degree-n monomials of weight k in S^n(V_d); the count
/// omega_d(n, k) of the two-line system above.
Int omega(const DegreeVector& d, int n, int k);

/// dim (I_d)_n = omega(d, n, 0) - omega(d, n, 2). Throws if the difference
/// would be negative, which would mean the counting itself is broken.
Int hilbert_value(const DegreeVector& d, int n);

/// Bound handle over the shared cache; keeps one table hot across a pipeline
/// run instead of re-looking it up per call.
class HilbertOracle {
  public:
    explicit HilbertOracle(DegreeVector d);

    const DegreeVector& degree_vector() const { return d_; }
    /// Make sure values up to n are available without further rebuilds.
    void ensure(int n);
    Int omega(int n, int k);
    Int hilbert(int n);

  private:
    DegreeVector d_;
    std::shared_ptr<const WeightTable> table_;
};

}  // namespace hilbpoly
