#include "polycss/linear_code.hpp"

#include <algorithm>
#include <atomic>
#include <climits>
#include <mutex>
#include <numeric>
#include <thread>

#include "polycss/rng.hpp"

namespace polycss {

struct LinearCode::Cache {
    std::mutex mu;
    std::optional<WeightEnumerator> enumerator;
};

BigCount WeightEnumerator::total() const {
    BigCount t = 0;
    for (const auto& c : counts_) t += c;
    return t;
}

int WeightEnumerator::min_weight() const noexcept {
    for (std::size_t w = 1; w < counts_.size(); ++w)
        if (counts_[w] > 0) return static_cast<int>(w);
    return 0;
}

namespace {

// Row-reduces in place over the given column order; returns pivot columns (in that order).
std::vector<int> reduce(const FieldSpec& F, Matrix& m, const std::vector<int>& column_order) {
    std::vector<int> pivots;
    std::size_t r = 0;
    for (int c : column_order) {
        if (r == m.size()) break;
        std::size_t pr = r;
        while (pr < m.size() && m[pr][c] == 0) ++pr;
        if (pr == m.size()) continue;
        std::swap(m[r], m[pr]);
        const Elem inv = F.inv(m[r][c]);
        for (Elem& e : m[r]) e = F.mul(e, inv);
        for (std::size_t i = 0; i < m.size(); ++i) {
            if (i == r || m[i][c] == 0) continue;
            const Elem f = m[i][c];
            for (std::size_t j = 0; j < m[i].size(); ++j) m[i][j] = F.sub(m[i][j], F.mul(f, m[r][j]));
        }
        pivots.push_back(c);
        ++r;
    }
    m.resize(r);
    return pivots;
}

std::vector<int> identity_order(int n) {
    std::vector<int> order(static_cast<std::size_t>(n));
    std::iota(order.begin(), order.end(), 0);
    return order;
}

int hamming_weight(const Word& w) {
    int wt = 0;
    for (Elem e : w) wt += e != 0;
    return wt;
}

}  // namespace

LinearCode::LinearCode(Field field, int n, Matrix rref, std::vector<int> pivots)
    : field_(field),
      n_(n),
      rref_(std::move(rref)),
      pivots_(std::move(pivots)),
      cache_(std::make_shared<Cache>()) {}

LinearCode LinearCode::from_rows(Field field, int n, const Matrix& rows) {
    if (n < 0) throw Error(ErrorKind::Precondition, "code length must be nonnegative");
    for (const Word& r : rows) {
        if (static_cast<int>(r.size()) != n)
            throw Error(ErrorKind::Precondition, "ragged generator rows: expected length " +
                                                     std::to_string(n) + ", got " +
                                                     std::to_string(r.size()));
        for (Elem e : r)
            if (e >= field.q()) throw Error(ErrorKind::Precondition, "entry outside " + field->name());
    }
    Matrix m = rows;
    std::vector<int> pivots = reduce(field.spec(), m, identity_order(n));
    return LinearCode(field, n, std::move(m), std::move(pivots));
}

LinearCode LinearCode::full(Field field, int n) {
    Matrix rows(static_cast<std::size_t>(n), Word(static_cast<std::size_t>(n), 0));
    for (int i = 0; i < n; ++i) rows[i][i] = 1;
    return from_rows(field, n, rows);
}

bool LinearCode::contains_word(std::span<const Elem> word) const {
    if (static_cast<int>(word.size()) != n_)
        throw Error(ErrorKind::Precondition, "word length does not match code length");
    const FieldSpec& F = field_.spec();
    Word v(word.begin(), word.end());
    for (std::size_t i = 0; i < rref_.size(); ++i) {
        const Elem f = v[pivots_[i]];
        if (f == 0) continue;
        for (int j = 0; j < n_; ++j) v[j] = F.sub(v[j], F.mul(f, rref_[i][j]));
    }
    return std::all_of(v.begin(), v.end(), [](Elem e) { return e == 0; });
}

std::string LinearCode::describe() const {
    return "[" + std::to_string(n_) + "," + std::to_string(dimension()) + "] code over " +
           field_->name();
}

std::optional<WeightEnumerator> LinearCode::cached_enumerator() const {
    std::lock_guard lock(cache_->mu);
    return cache_->enumerator;
}

void LinearCode::cache_enumerator(const WeightEnumerator& we) const {
    std::lock_guard lock(cache_->mu);
    if (!cache_->enumerator) cache_->enumerator = we;
}

int rank(Field field, const Matrix& rows) {
    if (rows.empty()) return 0;
    Matrix m = rows;
    return static_cast<int>(reduce(field.spec(), m, identity_order(static_cast<int>(rows[0].size()))).size());
}

LinearCode dual(const LinearCode& c) {
    const FieldSpec& F = c.field().spec();
    const int n = c.length();
    const auto& pivots = c.pivots();
    std::vector<char> is_pivot(static_cast<std::size_t>(n), 0);
    for (int p : pivots) is_pivot[p] = 1;
    Matrix rows;
    for (int f = 0; f < n; ++f) {
        if (is_pivot[f]) continue;
        Word v(static_cast<std::size_t>(n), 0);
        v[f] = 1;
        for (std::size_t i = 0; i < pivots.size(); ++i) v[pivots[i]] = F.neg(c.generator()[i][f]);
        rows.push_back(std::move(v));
    }
    return LinearCode::from_rows(c.field(), n, rows);
}

bool contains(const LinearCode& outer, const LinearCode& inner) {
    require_same_field(outer.field(), inner.field());
    if (outer.length() != inner.length())
        throw Error(ErrorKind::Precondition, "containment test on codes of different lengths");
    if (inner.dimension() > outer.dimension()) return false;
    for (const Word& row : inner.generator())
        if (!outer.contains_word(row)) return false;
    return true;
}

std::uint64_t saturating_pow(std::uint64_t q, int e) noexcept {
    std::uint64_t r = 1;
    for (int i = 0; i < e; ++i) {
        if (r > UINT64_MAX / q) return UINT64_MAX;
        r *= q;
    }
    return r;
}

namespace {

struct SparseRow {
    std::vector<int> cols;
    std::vector<Elem> vals;
};

std::vector<SparseRow> sparse_rows(const Matrix& m) {
    std::vector<SparseRow> out(m.size());
    for (std::size_t i = 0; i < m.size(); ++i)
        for (std::size_t j = 0; j < m[i].size(); ++j)
            if (m[i][j] != 0) {
                out[i].cols.push_back(static_cast<int>(j));
                out[i].vals.push_back(m[i][j]);
            }
    return out;
}

void check_deadline(const EnumOptions& opts) {
    if (opts.deadline && std::chrono::steady_clock::now() > *opts.deadline)
        throw Error(ErrorKind::TimeLimit, "per-candidate time limit reached during enumeration");
}

// Visits start + every combination of rows[0..low) with the modular q-ary Gray code: when the
// counter increments digit j, only Gray digit j changes (by one, as an integer mod q), so the word
// gains (e_{g+1} - e_g) times row j, where e_i is the field element with index i.
void gray_walk(const FieldSpec& F, const std::vector<SparseRow>& rows, int low, Word word,
               const EnumOptions& opts, std::vector<std::uint64_t>& counts) {
    const int q = F.q();
    std::vector<Elem> step(static_cast<std::size_t>(q));
    for (int g = 0; g < q; ++g)
        step[g] = F.sub(static_cast<Elem>((g + 1) % q), static_cast<Elem>(g));
    int wt = hamming_weight(word);
    ++counts[wt];
    std::vector<int> digits(static_cast<std::size_t>(low) + 1, 0);
    std::vector<int> gray(static_cast<std::size_t>(low) + 1, 0);
    std::uint64_t steps = 0;
    for (;;) {
        int j = 0;
        while (j < low && digits[j] == q - 1) digits[j++] = 0;
        if (j == low) break;
        ++digits[j];
        const Elem delta = step[gray[j]];
        gray[j] = (gray[j] + 1) % q;
        const SparseRow& row = rows[j];
        for (std::size_t t = 0; t < row.cols.size(); ++t) {
            Elem& cell = word[row.cols[t]];
            const Elem before = cell;
            cell = F.add(before, delta == 1 ? row.vals[t] : F.mul(delta, row.vals[t]));
            wt += (cell != 0) - (before != 0);
        }
        ++counts[wt];
        if ((++steps & 0xFFFFu) == 0) check_deadline(opts);
    }
}

}  // namespace

WeightEnumerator weight_enumerator(const LinearCode& c, const EnumOptions& opts) {
    const FieldSpec& F = c.field().spec();
    const int n = c.length();
    const int k = c.dimension();
    const std::uint64_t q = static_cast<std::uint64_t>(F.q());
    const std::uint64_t required = saturating_pow(q, k);
    if (required > opts.budget) throw BudgetExceeded(required, opts.budget);

    const std::vector<SparseRow> rows = sparse_rows(c.generator());
    const int jobs = std::max(1, opts.jobs);
    // Top `split` rows are fixed per task; the rest are walked by the Gray code.
    int split = 0;
    if (jobs > 1)
        while (split < k && saturating_pow(q, split) < static_cast<std::uint64_t>(4 * jobs)) ++split;
    const int low = k - split;
    const std::uint64_t tasks = saturating_pow(q, split);

    std::vector<std::uint64_t> total(static_cast<std::size_t>(n) + 1, 0);
    std::mutex merge_mu;
    std::atomic<std::uint64_t> next_task{0};
    std::exception_ptr failure;
    auto worker = [&] {
        std::vector<std::uint64_t> counts(static_cast<std::size_t>(n) + 1, 0);
        try {
            for (std::uint64_t task; (task = next_task.fetch_add(1)) < tasks;) {
                Word start(static_cast<std::size_t>(n), 0);
                std::uint64_t rest = task;
                for (int r = low; r < k; ++r, rest /= q) {
                    const Elem coef = static_cast<Elem>(rest % q);
                    if (coef == 0) continue;
                    for (std::size_t t = 0; t < rows[r].cols.size(); ++t) {
                        Elem& cell = start[rows[r].cols[t]];
                        cell = F.add(cell, F.mul(coef, rows[r].vals[t]));
                    }
                }
                gray_walk(F, rows, low, std::move(start), opts, counts);
            }
        } catch (...) {
            std::lock_guard lock(merge_mu);
            if (!failure) failure = std::current_exception();
            next_task = tasks;
            return;
        }
        std::lock_guard lock(merge_mu);
        for (std::size_t w = 0; w < counts.size(); ++w) total[w] += counts[w];
    };

    if (jobs == 1 || tasks == 1) {
        worker();
    } else {
        std::vector<std::thread> pool;
        for (int i = 0; i < jobs; ++i) pool.emplace_back(worker);
        for (auto& t : pool) t.join();
    }
    if (failure) std::rethrow_exception(failure);

    std::vector<BigCount> counts(total.begin(), total.end());
    WeightEnumerator we(std::move(counts));
    c.cache_enumerator(we);
    return we;
}

WeightEnumerator macwilliams(const WeightEnumerator& we, int q, int n, int k) {
    if (we.length() != n)
        throw Error(ErrorKind::InvalidParams, "enumerator length " + std::to_string(we.length()) +
                                                  " does not match n = " + std::to_string(n));
    BigCount qk = 1;
    for (int i = 0; i < k; ++i) qk *= q;
    if (we[0] != 1 || we.total() != qk)
        throw Error(ErrorKind::InvalidParams, "not the weight enumerator of an [n,k] code");

    std::vector<BigCount> sums(static_cast<std::size_t>(n) + 1, 0);
    std::vector<BigCount> kraw(static_cast<std::size_t>(n) + 1);
    for (int w = 0; w <= n; ++w) {
        const BigCount& a = we[w];
        if (a < 0) throw Error(ErrorKind::InvalidParams, "negative weight count");
        if (a == 0) continue;
        // Krawtchouk polynomials K_j(w) via the three-term recurrence
        // (j+1) K_{j+1} = ((q-1)(n-j) + j - q w) K_j - (q-1)(n-j+1) K_{j-1}.
        kraw[0] = 1;
        if (n >= 1) kraw[1] = BigCount(q - 1) * n - BigCount(q) * w;
        for (int j = 1; j < n; ++j) {
            BigCount next = BigCount((q - 1) * (n - j) + j - q * w) * kraw[j] -
                            BigCount((q - 1) * (n - j + 1)) * kraw[j - 1];
            kraw[j + 1] = next / (j + 1);
        }
        for (int j = 0; j <= n; ++j) sums[j] += a * kraw[j];
    }
    for (auto& s : sums) {
        if (s < 0 || s % qk != 0)
            throw Error(ErrorKind::InvalidParams, "MacWilliams transform produced a non-integral count");
        s /= qk;
    }
    return WeightEnumerator(std::move(sums));
}

WeightEnumerator exact_weight_enumerator(const LinearCode& c, const EnumOptions& opts) {
    if (auto cached = c.cached_enumerator()) return *cached;
    const std::uint64_t q = static_cast<std::uint64_t>(c.field().q());
    const std::uint64_t direct = saturating_pow(q, c.dimension());
    const std::uint64_t via_dual = saturating_pow(q, c.length() - c.dimension());
    if (std::min(direct, via_dual) > opts.budget)
        throw BudgetExceeded(std::min(direct, via_dual), opts.budget);
    if (direct <= via_dual) return weight_enumerator(c, opts);
    const LinearCode d = dual(c);
    WeightEnumerator we =
        macwilliams(weight_enumerator(d, opts), c.field().q(), c.length(), d.dimension());
    c.cache_enumerator(we);
    return we;
}

namespace {

BigCount binomial(int n, int k) {
    if (k < 0 || k > n) return 0;
    BigCount r = 1;
    for (int i = 1; i <= k; ++i) r = r * (n - k + i) / i;
    return r;
}

// Systematic generator matrix with pivots taken from `order` first.
Matrix systematic(const LinearCode& c, const std::vector<int>& order, std::vector<int>& pivots) {
    Matrix m = c.generator();
    pivots = reduce(c.field().spec(), m, order);
    return m;
}

// Minimum weight over all combinations of exactly t rows of g with nonzero coefficients, the first
// coefficient fixed to 1 (scalar multiples share a weight). Partial sums are kept per level.
void combination_weights(const FieldSpec& F, const Matrix& g, int t, int& upper) {
    const int k = static_cast<int>(g.size());
    const int n = k == 0 ? 0 : static_cast<int>(g[0].size());
    const int q = F.q();
    std::vector<Word> partial(static_cast<std::size_t>(t) + 1, Word(static_cast<std::size_t>(n), 0));
    auto recurse = [&](auto& self, int level, int from) -> void {
        for (int i = from; i <= k - (t - level); ++i) {
            const int last_coef = level == 0 ? 1 : q - 1;
            for (int c = 1; c <= last_coef; ++c) {
                const Word& prev = partial[level];
                Word& next = partial[level + 1];
                const Word& row = g[i];
                const Elem coef = static_cast<Elem>(c);
                for (int j = 0; j < n; ++j)
                    next[j] = row[j] == 0 ? prev[j] : F.add(prev[j], F.mul(coef, row[j]));
                if (level + 1 == t)
                    upper = std::min(upper, hamming_weight(next));
                else
                    self(self, level + 1, i + 1);
            }
        }
    };
    recurse(recurse, 0, 0);
}

// Lower/upper bounds by enumerating low-weight information vectors on disjoint information sets:
// after all combinations of at most t rows are seen on r disjoint information sets, any unseen
// codeword has weight at least r (t + 1).
DistanceResult information_set_bounds(const LinearCode& c, const EnumOptions& opts) {
    const FieldSpec& F = c.field().spec();
    const int n = c.length();
    const int k = c.dimension();
    const int q = F.q();

    std::vector<Matrix> systems;
    std::vector<char> used(static_cast<std::size_t>(n), 0);
    for (;;) {
        std::vector<int> order;
        for (int j = 0; j < n; ++j)
            if (!used[j]) order.push_back(j);
        const std::size_t available = order.size();
        for (int j = 0; j < n; ++j)
            if (used[j]) order.push_back(j);
        std::vector<int> pivots;
        Matrix m = systematic(c, order, pivots);
        const bool disjoint = std::all_of(pivots.begin(), pivots.end(), [&](int p) {
            return std::find(order.begin(), order.begin() + static_cast<long>(available), p) !=
                   order.begin() + static_cast<long>(available);
        });
        if (!disjoint) break;
        for (int p : pivots) used[p] = 1;
        systems.push_back(std::move(m));
    }
    const int r = static_cast<int>(systems.size());

    int upper = INT_MAX;
    Rng rng(opts.seed);
    // Random information sets: each systematic row is a codeword.
    for (int s = 0; s < 8; ++s) {
        std::vector<int> order = identity_order(n);
        for (int i = n - 1; i > 0; --i)
            std::swap(order[i], order[rng.below(static_cast<std::uint64_t>(i) + 1)]);
        std::vector<int> pivots;
        for (const Word& row : systematic(c, order, pivots)) upper = std::min(upper, hamming_weight(row));
    }

    BigCount spent = 0;
    int completed = 0;
    for (int t = 1; t <= k; ++t) {
        BigCount cost = BigCount(r) * binomial(k, t);
        for (int i = 1; i < t; ++i) cost *= (q - 1);
        if (spent + cost > opts.budget) break;
        spent += cost;
        for (const Matrix& g : systems) {
            combination_weights(F, g, t, upper);
            check_deadline(opts);
        }
        completed = t;
        if (upper <= r * (t + 1)) break;
    }
    const int lower = std::min(upper, r * (completed + 1));
    DistanceResult res;
    res.d = lower;
    res.upper = upper == INT_MAX ? 0 : upper;
    res.exact = upper == lower;
    res.method = "information-sets";
    return res;
}

}  // namespace

DistanceResult min_distance(const LinearCode& c, const EnumOptions& opts) {
    if (c.dimension() == 0)
        throw Error(ErrorKind::Precondition, "minimum distance of the zero code is undefined");
    const std::uint64_t q = static_cast<std::uint64_t>(c.field().q());
    const std::uint64_t direct = saturating_pow(q, c.dimension());
    const std::uint64_t via_dual = saturating_pow(q, c.length() - c.dimension());
    if (c.cached_enumerator() || std::min(direct, via_dual) <= opts.budget) {
        const WeightEnumerator we = exact_weight_enumerator(c, opts);
        const int d = we.min_weight();
        return {d, true, d, direct <= via_dual ? "direct" : "dual+macwilliams"};
    }
    return information_set_bounds(c, opts);
}

int relative_min_weight(const WeightEnumerator& outer, const WeightEnumerator& inner) {
    if (outer.length() != inner.length())
        throw Error(ErrorKind::Precondition, "enumerators of different lengths");
    for (int w = 1; w <= outer.length(); ++w) {
        if (outer[w] < inner[w])
            throw Error(ErrorKind::Precondition, "inner enumerator exceeds outer; not a subcode");
        if (outer[w] > inner[w]) return w;
    }
    throw Error(ErrorKind::Precondition, "outer \\ inner is empty");
}

DistanceResult relative_min_weight(const LinearCode& outer, const LinearCode& inner,
                                   const EnumOptions& opts) {
    if (!contains(outer, inner))
        throw Error(ErrorKind::Precondition, "inner code is not contained in outer code");
    if (outer.dimension() <= inner.dimension())
        throw Error(ErrorKind::Precondition, "outer code must be strictly larger than inner code");
    if (inner.dimension() == 0) return min_distance(outer, opts);
    try {
        const WeightEnumerator a = exact_weight_enumerator(outer, opts);
        const WeightEnumerator b = exact_weight_enumerator(inner, opts);
        const int d = relative_min_weight(a, b);
        return {d, true, d, "enumerators"};
    } catch (const BudgetExceeded&) {
        DistanceResult bound = min_distance(outer, opts);
        bound.exact = false;
        bound.upper = 0;
        return bound;
    }
}

LinearCode direct_sum(const LinearCode& a, const LinearCode& b) {
    require_same_field(a.field(), b.field());
    const int n = a.length() + b.length();
    Matrix rows;
    for (const Word& r : a.generator()) {
        Word w(r);
        w.resize(static_cast<std::size_t>(n), 0);
        rows.push_back(std::move(w));
    }
    for (const Word& r : b.generator()) {
        Word w(static_cast<std::size_t>(a.length()), 0);
        w.insert(w.end(), r.begin(), r.end());
        rows.push_back(std::move(w));
    }
    return LinearCode::from_rows(a.field(), n, rows);
}

}  // namespace polycss
