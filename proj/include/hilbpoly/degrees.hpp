#pragma once

#include <algorithm>
#include <functional>
#include <numeric>
#include <string>
#include <vector>

#include "hilbpoly/rational.hpp"

namespace hilbpoly {

/// The tuple (d_1, ..., d_s) selecting the direct sum of binary-form spaces
/// whose joint invariants we study. Each degree is >= 1, s >= 1.
class DegreeVector {
  public:
    explicit DegreeVector(std::vector<int> degrees) : d_(std::move(degrees)) {
        if (d_.empty()) throw Error("DegreeVector: empty degree list");
        for (int d : d_) {
            if (d < 1) throw Error("DegreeVector: degrees must be >= 1");
        }
    }

    const std::vector<int>& degrees() const { return d_; }
    size_t size() const { return d_.size(); }
    int max_degree() const { return *std::max_element(d_.begin(), d_.end()); }
    /// dim V_d = sum of (d_i + 1); the number of coefficient variables.
    int ambient_dim() const {
        return std::accumulate(d_.begin(), d_.end(), 0) + static_cast<int>(d_.size());
    }

    /// Degrees sorted descending. The Hilbert function is invariant under
    /// permuting the forms, so this is the canonical cache/output order.
    DegreeVector canonical() const {
        std::vector<int> s = d_;
        std::sort(s.begin(), s.end(), std::greater<int>());
        return DegreeVector(std::move(s));
    }

    bool operator==(const DegreeVector& o) const { return d_ == o.d_; }
    bool operator<(const DegreeVector& o) const { return d_ < o.d_; }

    std::string str() const {
        std::string s;
        for (size_t i = 0; i < d_.size(); ++i) {
            if (i) s += ",";
            s += std::to_string(d_[i]);
        }
        return s;
    }

  private:
    std::vector<int> d_;
};

}  // namespace hilbpoly
