#pragma once

#include <chrono>
#include <cstdint>
#include <memory>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

#include "polycss/galois.hpp"

namespace polycss {

using BigCount = boost::multiprecision::cpp_int;
using Word = std::vector<Elem>;
using Matrix = std::vector<Word>;

inline constexpr std::uint64_t kDefaultBudget = 100'000'000;

// Controls for exhaustive enumeration. `budget` caps the codewords visited by any single
// enumeration; `jobs` splits an enumeration across threads (results do not depend on it);
// `deadline`, when set, aborts long enumerations with Error(TimeLimit).
struct EnumOptions {
    std::uint64_t budget = kDefaultBudget;
    int jobs = 1;
    std::optional<std::chrono::steady_clock::time_point> deadline;
    std::uint64_t seed = 0;
};

// A_0..A_n: number of codewords of each Hamming weight.
class WeightEnumerator {
public:
    WeightEnumerator() = default;
    explicit WeightEnumerator(std::vector<BigCount> counts) : counts_(std::move(counts)) {}

    int length() const noexcept { return static_cast<int>(counts_.size()) - 1; }
    const std::vector<BigCount>& counts() const noexcept { return counts_; }
    const BigCount& operator[](int w) const { return counts_.at(static_cast<std::size_t>(w)); }
    BigCount total() const;
    // Smallest w > 0 with A_w > 0, or 0 for the zero code.
    int min_weight() const noexcept;

    friend bool operator==(const WeightEnumerator& a, const WeightEnumerator& b) {
        return a.counts_ == b.counts_;
    }

private:
    std::vector<BigCount> counts_;
};

// Classical [n, k] linear code over GF(q), stored as its reduced row-echelon generator matrix so
// that two codes are equal iff their generator matrices are equal.
class LinearCode {
public:
    // Row-reduces `rows`; dependent and zero rows are dropped. Rows must all have length n.
    static LinearCode from_rows(Field field, int n, const Matrix& rows);
    static LinearCode zero(Field field, int n) { return from_rows(field, n, {}); }
    static LinearCode full(Field field, int n);

    Field field() const noexcept { return field_; }
    int length() const noexcept { return n_; }
    int dimension() const noexcept { return static_cast<int>(rref_.size()); }
    const Matrix& generator() const noexcept { return rref_; }
    const std::vector<int>& pivots() const noexcept { return pivots_; }

    bool contains_word(std::span<const Elem> word) const;

    std::string describe() const;

    friend bool operator==(const LinearCode& a, const LinearCode& b) {
        return a.field_ == b.field_ && a.n_ == b.n_ && a.rref_ == b.rref_;
    }

    // Exact weight enumerator computed at most once per code value (copies share the slot).
    std::optional<WeightEnumerator> cached_enumerator() const;
    void cache_enumerator(const WeightEnumerator& we) const;

private:
    struct Cache;

    LinearCode(Field field, int n, Matrix rref, std::vector<int> pivots);

    Field field_;
    int n_ = 0;
    Matrix rref_;
    std::vector<int> pivots_;
    std::shared_ptr<Cache> cache_;
};

// Rank of a matrix over the field.
int rank(Field field, const Matrix& rows);

// Euclidean dual, dimension n - k.
LinearCode dual(const LinearCode& c);

// True iff every generator of `inner` lies in `outer`. Throws Error(Precondition) on length
// mismatch and Error(FieldMismatch) on field mismatch.
bool contains(const LinearCode& outer, const LinearCode& inner);

// q^e with saturation at UINT64_MAX.
std::uint64_t saturating_pow(std::uint64_t q, int e) noexcept;

// Exhaustive enumeration of all q^k codewords with a q-ary Gray code (each step adds one generator
// row). Throws BudgetExceeded when q^k > opts.budget.
WeightEnumerator weight_enumerator(const LinearCode& c, const EnumOptions& opts = {});

// Weight enumerator of the dual of an [n, k] code over GF(q). Throws Error(InvalidParams) when
// the input is not the enumerator of such a code (non-integral or negative output).
WeightEnumerator macwilliams(const WeightEnumerator& we, int q, int n, int k);

// Exact enumerator by the cheaper of direct enumeration and dual enumeration plus MacWilliams.
// Throws BudgetExceeded when neither side fits the budget.
WeightEnumerator exact_weight_enumerator(const LinearCode& c, const EnumOptions& opts = {});

struct DistanceResult {
    int d = 0;           // exact value, or a proven lower bound when !exact
    bool exact = false;
    int upper = 0;       // smallest weight actually seen (0 if none)
    std::string method;  // "direct", "dual+macwilliams", "enumerators", "information-sets"
};

// Minimum distance of a code with k >= 1 (Error(Precondition) otherwise). Enumerates the code if
// q^k fits the budget, else its dual plus MacWilliams if q^(n-k) fits, else falls back to
// information-set enumeration, which yields a lower bound and an upper bound (and exactness when
// the two meet).
DistanceResult min_distance(const LinearCode& c, const EnumOptions& opts = {});

// Minimum weight over outer \ inner, from the first weight where A_w(outer) > A_w(inner).
// Requires inner to be a proper subcode of outer (Error(Precondition) otherwise). When an
// enumerator is out of budget the result is min_distance(outer) as a lower bound, exact = false.
DistanceResult relative_min_weight(const LinearCode& outer, const LinearCode& inner,
                                   const EnumOptions& opts = {});

// Same, from enumerators that are already known exactly.
int relative_min_weight(const WeightEnumerator& outer, const WeightEnumerator& inner);

// Block-diagonal [n_a + n_b, k_a + k_b] code.
LinearCode direct_sum(const LinearCode& a, const LinearCode& b);

}  // namespace polycss
