#include "hilbpoly/weight_table.hpp"

#include <map>
#include <mutex>
#include <string>

namespace hilbpoly {

namespace {
const Int kZeroInt(0);
}

WeightTable WeightTable::build(const DegreeVector& d, int max_n) {
    if (max_n < 0) throw Error("WeightTable: max_n must be >= 0");
    WeightTable t(d, max_n);
    t.offset_ = max_n * d.max_degree();
    t.width_ = 2 * t.offset_ + 1;
    t.cells_.assign(static_cast<size_t>(max_n + 1) * t.width_, Int(0));
    t.cells_[t.offset_] = 1;  // the empty monomial

    // One pass per coefficient variable. With T_k the table after k
    // variables, T_k(n, w) = T_{k-1}(n, w) + T_k(n-1, w - wt_k), so an
    // in-place sweep with n ascending does each variable in O(rows*width).
    for (int deg : d.degrees()) {
        for (int j = 0; j <= deg; ++j) {
            const int wt = deg - 2 * j;
            for (int n = 1; n <= max_n; ++n) {
                Int* row = t.cells_.data() + static_cast<size_t>(n) * t.width_;
                const Int* prev = row - t.width_;
                const int lo = std::max(0, wt);
                const int hi = t.width_ + std::min(0, wt);
                for (int w = lo; w < hi; ++w) row[w] += prev[w - wt];
            }
        }
    }
    return t;
}

const Int& WeightTable::count(int n, int w) const {
    if (n < 0) return kZeroInt;
    if (n > max_n_)
        throw Error("WeightTable: n = " + std::to_string(n) +
                    " beyond built range " + std::to_string(max_n_));
    const long idx = static_cast<long>(w) + offset_;
    if (idx < 0 || idx >= width_) return kZeroInt;
    return cells_[static_cast<size_t>(n) * width_ + idx];
}

namespace {

std::mutex g_cache_mutex;
std::map<std::vector<int>, std::shared_ptr<const WeightTable>> g_cache;

}  // namespace

std::shared_ptr<const WeightTable> shared_weight_table(const DegreeVector& d,
                                                       int max_n) {
    const DegreeVector key = d.canonical();
    std::lock_guard<std::mutex> lock(g_cache_mutex);
    auto& slot = g_cache[key.degrees()];
    if (!slot || slot->max_n() < max_n) {
        const int grown = slot ? std::max(2 * slot->max_n(), max_n) : max_n;
        slot = std::make_shared<const WeightTable>(WeightTable::build(key, grown));
    }
    return slot;
}

Int omega(const DegreeVector& d, int n, int k) {
    if (n < 0) throw Error("omega: n must be >= 0");
    return shared_weight_table(d, n)->count(n, k);
}

Int hilbert_value(const DegreeVector& d, int n) {
    HilbertOracle oracle(d);
    return oracle.hilbert(n);
}

HilbertOracle::HilbertOracle(DegreeVector d) : d_(d.canonical()) {}

void HilbertOracle::ensure(int n) {
    if (!table_ || table_->max_n() < n) table_ = shared_weight_table(d_, n);
}

Int HilbertOracle::omega(int n, int k) {
    if (n < 0) throw Error("omega: n must be >= 0");
    ensure(n);
    return table_->count(n, k);
}

Int HilbertOracle::hilbert(int n) {
    Int v = omega(n, 0) - omega(n, 2);
    if (v < 0)
        throw Error("hilbert_value(" + d_.str() + ", " + std::to_string(n) +
                    "): omega(n,0) < omega(n,2); the weight count is broken");
    return v;
}

}  // namespace hilbpoly
