#pragma once

// Exact rational scalars, sparse polynomials in the four epsilon-coordinates,
// and fraction-exact linear algebra (dense rref, incremental sparse echelon
// bases for span membership).

#include <gmpxx.h>

#include <algorithm>
#include <array>
#include <cstddef>
#include <map>
#include <optional>
#include <sstream>
#include <stdexcept>
#include <string>
#include <string_view>
#include <unordered_map>
#include <utility>
#include <vector>

namespace voakit {

/// The only scalar type in the toolkit. GMP keeps it in lowest terms with a
/// positive denominator after every arithmetic operation.
using Scalar = mpq_class;

/// Canonical "p/q" form, "/q" omitted when q == 1.
inline std::string to_string(const Scalar& x) { return x.get_str(); }

/// Parses "p", "p/q", "-p/q". The unicode minus sign U+2212 is accepted too.
inline Scalar parse_scalar(std::string_view text)
{
    std::string s;
    for (std::size_t i = 0; i < text.size(); ++i) {
        if (text.compare(i, 3, "\xE2\x88\x92") == 0) {
            s.push_back('-');
            i += 2;
        } else if (text[i] != ' ') {
            s.push_back(text[i]);
        }
    }
    if (s.empty()) throw std::invalid_argument("empty rational literal");
    std::size_t start = (s[0] == '-' || s[0] == '+') ? 1 : 0;
    bool seen_slash = false;
    bool digits_before = false, digits_after = false;
    for (std::size_t i = start; i < s.size(); ++i) {
        if (s[i] == '/') {
            if (seen_slash) throw std::invalid_argument("bad rational literal: " + s);
            seen_slash = true;
        } else if (s[i] >= '0' && s[i] <= '9') {
            (seen_slash ? digits_after : digits_before) = true;
        } else {
            throw std::invalid_argument("bad rational literal: " + s);
        }
    }
    if (!digits_before || (seen_slash && !digits_after))
        throw std::invalid_argument("bad rational literal: " + s);
    if (s[0] == '+') s.erase(0, 1);
    Scalar q(s, 10);
    if (q.get_den() == 0) throw std::invalid_argument("zero denominator: " + s);
    q.canonicalize();
    return q;
}

inline bool is_integer(const Scalar& x) { return x.get_den() == 1; }

/// Rational square root when it exists.
inline std::optional<Scalar> exact_sqrt(const Scalar& x)
{
    if (sgn(x) < 0) return std::nullopt;
    mpz_class n = x.get_num(), d = x.get_den();
    if (!mpz_perfect_square_p(n.get_mpz_t()) || !mpz_perfect_square_p(d.get_mpz_t()))
        return std::nullopt;
    mpz_class rn, rd;
    mpz_sqrt(rn.get_mpz_t(), n.get_mpz_t());
    mpz_sqrt(rd.get_mpz_t(), d.get_mpz_t());
    return Scalar(rn, rd);
}

inline Scalar factorial(unsigned n)
{
    mpz_class f;
    mpz_fac_ui(f.get_mpz_t(), n);
    return Scalar(f);
}

/// num/den in lowest terms.
inline Scalar rational(long num, long den)
{
    Scalar q{mpz_class(num), mpz_class(den)};
    q.canonicalize();
    return q;
}

// ---------------------------------------------------------------------------
// Sparse polynomials in x1..x4 (the epsilon-coordinates of a weight).

using Exponent = std::array<int, 4>;

/// Graded lexicographic order: total degree first, then lexicographic.
struct GradedLex {
    bool operator()(const Exponent& a, const Exponent& b) const
    {
        int da = a[0] + a[1] + a[2] + a[3];
        int db = b[0] + b[1] + b[2] + b[3];
        if (da != db) return da < db;
        return a < b;
    }
};

class SparsePoly {
public:
    using Terms = std::map<Exponent, Scalar, GradedLex>;

    SparsePoly() = default;
    explicit SparsePoly(const Scalar& c)
    {
        if (sgn(c) != 0) terms_[Exponent{0, 0, 0, 0}] = c;
    }

    static SparsePoly variable(int i)
    {
        SparsePoly p;
        Exponent e{0, 0, 0, 0};
        e.at(static_cast<std::size_t>(i)) = 1;
        p.terms_[e] = 1;
        return p;
    }

    /// a . x + c
    static SparsePoly linear(const std::array<Scalar, 4>& a, const Scalar& c)
    {
        SparsePoly p(c);
        for (int i = 0; i < 4; ++i) p.add_term(unit(i), a[static_cast<std::size_t>(i)]);
        return p;
    }

    const Terms& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }

    int degree() const
    {
        if (terms_.empty()) return -1;
        const auto& e = terms_.rbegin()->first;
        return e[0] + e[1] + e[2] + e[3];
    }

    Scalar coeff(const Exponent& e) const
    {
        auto it = terms_.find(e);
        return it == terms_.end() ? Scalar(0) : it->second;
    }

    /// Coefficient of the graded-lex greatest monomial.
    Scalar leading_coeff() const { return terms_.empty() ? Scalar(0) : terms_.rbegin()->second; }

    void add_term(const Exponent& e, const Scalar& c)
    {
        if (sgn(c) == 0) return;
        auto [it, inserted] = terms_.try_emplace(e, c);
        if (!inserted) {
            it->second += c;
            if (sgn(it->second) == 0) terms_.erase(it);
        }
    }

    SparsePoly& operator+=(const SparsePoly& o)
    {
        for (const auto& [e, c] : o.terms_) add_term(e, c);
        return *this;
    }
    SparsePoly& operator-=(const SparsePoly& o)
    {
        for (const auto& [e, c] : o.terms_) add_term(e, -c);
        return *this;
    }
    SparsePoly& operator*=(const Scalar& s)
    {
        if (sgn(s) == 0) {
            terms_.clear();
            return *this;
        }
        for (auto& [e, c] : terms_) c *= s;
        return *this;
    }
    friend SparsePoly operator+(SparsePoly a, const SparsePoly& b) { return a += b; }
    friend SparsePoly operator-(SparsePoly a, const SparsePoly& b) { return a -= b; }
    friend SparsePoly operator*(SparsePoly a, const Scalar& s) { return a *= s; }
    friend SparsePoly operator*(const SparsePoly& a, const SparsePoly& b)
    {
        SparsePoly r;
        for (const auto& [ea, ca] : a.terms_)
            for (const auto& [eb, cb] : b.terms_) {
                Exponent e;
                for (std::size_t i = 0; i < 4; ++i) e[i] = ea[i] + eb[i];
                r.add_term(e, ca * cb);
            }
        return r;
    }
    friend bool operator==(const SparsePoly& a, const SparsePoly& b) { return a.terms_ == b.terms_; }

    /// Exact substitution x_i := point[i].
    Scalar evaluate(const std::array<Scalar, 4>& point) const
    {
        Scalar total = 0;
        for (const auto& [e, c] : terms_) {
            Scalar m = c;
            for (std::size_t i = 0; i < 4; ++i)
                for (int k = 0; k < e[i]; ++k) m *= point[i];
            total += m;
        }
        return total;
    }

    /// Scaled so the leading coefficient is 1 (zero stays zero).
    SparsePoly monic() const
    {
        if (is_zero()) return *this;
        Scalar inv = 1 / leading_coeff();
        return *this * inv;
    }

    std::string to_string() const
    {
        if (terms_.empty()) return "0";
        std::ostringstream os;
        bool first = true;
        for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
            const auto& [e, c] = *it;
            Scalar mag = abs(c);
            bool constant = e == Exponent{0, 0, 0, 0};
            if (first) {
                if (sgn(c) < 0) os << "-";
            } else {
                os << (sgn(c) < 0 ? " - " : " + ");
            }
            first = false;
            if (constant || mag != 1) {
                os << voakit::to_string(mag);
                if (!constant) os << "*";
            }
            bool first_var = true;
            for (std::size_t i = 0; i < 4; ++i) {
                if (e[i] == 0) continue;
                if (!first_var) os << "*";
                first_var = false;
                os << "x" << (i + 1);
                if (e[i] > 1) os << "^" << e[i];
            }
        }
        return os.str();
    }

private:
    static Exponent unit(int i)
    {
        Exponent e{0, 0, 0, 0};
        e.at(static_cast<std::size_t>(i)) = 1;
        return e;
    }

    Terms terms_;
};

inline Scalar evaluate(const SparsePoly& p, const std::array<Scalar, 4>& point) { return p.evaluate(point); }

// ---------------------------------------------------------------------------
// Dense matrices.

class ExactMatrix {
public:
    ExactMatrix() = default;
    ExactMatrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols) {}
    ExactMatrix(std::initializer_list<std::initializer_list<Scalar>> init)
    {
        rows_ = init.size();
        cols_ = rows_ ? init.begin()->size() : 0;
        data_.reserve(rows_ * cols_);
        for (const auto& row : init) {
            if (row.size() != cols_) throw std::invalid_argument("ragged matrix literal");
            data_.insert(data_.end(), row.begin(), row.end());
        }
    }
    static ExactMatrix from_rows(const std::vector<std::vector<Scalar>>& rows)
    {
        ExactMatrix m(rows.size(), rows.empty() ? 0 : rows.front().size());
        for (std::size_t i = 0; i < rows.size(); ++i) {
            if (rows[i].size() != m.cols_) throw std::invalid_argument("ragged matrix rows");
            std::copy(rows[i].begin(), rows[i].end(), m.data_.begin() + static_cast<std::ptrdiff_t>(i * m.cols_));
        }
        return m;
    }
    static ExactMatrix identity(std::size_t n)
    {
        ExactMatrix m(n, n);
        for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
        return m;
    }

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }
    Scalar& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
    const Scalar& operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }

    std::vector<Scalar> row(std::size_t r) const
    {
        return {data_.begin() + static_cast<std::ptrdiff_t>(r * cols_),
                data_.begin() + static_cast<std::ptrdiff_t>((r + 1) * cols_)};
    }

    friend bool operator==(const ExactMatrix& a, const ExactMatrix& b)
    {
        return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.data_ == b.data_;
    }

    friend ExactMatrix operator*(const ExactMatrix& a, const ExactMatrix& b)
    {
        if (a.cols_ != b.rows_) throw std::invalid_argument("matrix product dimension mismatch");
        ExactMatrix r(a.rows_, b.cols_);
        for (std::size_t i = 0; i < a.rows_; ++i)
            for (std::size_t k = 0; k < a.cols_; ++k) {
                if (sgn(a(i, k)) == 0) continue;
                for (std::size_t j = 0; j < b.cols_; ++j) r(i, j) += a(i, k) * b(k, j);
            }
        return r;
    }

private:
    std::size_t rows_ = 0, cols_ = 0;
    std::vector<Scalar> data_;
};

struct RrefResult {
    ExactMatrix reduced;
    std::vector<std::size_t> pivots;
};

/// Gauss-Jordan elimination; pivots are 1 and pivot columns are otherwise zero.
inline RrefResult rref_with_pivots(ExactMatrix m)
{
    std::vector<std::size_t> pivots;
    std::size_t r = 0;
    for (std::size_t c = 0; c < m.cols() && r < m.rows(); ++c) {
        std::size_t p = r;
        while (p < m.rows() && sgn(m(p, c)) == 0) ++p;
        if (p == m.rows()) continue;
        if (p != r)
            for (std::size_t j = 0; j < m.cols(); ++j) std::swap(m(p, j), m(r, j));
        Scalar inv = 1 / m(r, c);
        for (std::size_t j = c; j < m.cols(); ++j) m(r, j) *= inv;
        for (std::size_t i = 0; i < m.rows(); ++i) {
            if (i == r || sgn(m(i, c)) == 0) continue;
            Scalar f = m(i, c);
            for (std::size_t j = c; j < m.cols(); ++j) m(i, j) -= f * m(r, j);
        }
        pivots.push_back(c);
        ++r;
    }
    return {std::move(m), std::move(pivots)};
}

inline ExactMatrix rref(const ExactMatrix& m) { return rref_with_pivots(m).reduced; }

inline std::size_t rank(const ExactMatrix& m) { return rref_with_pivots(m).pivots.size(); }

/// Basis of {x : m x = 0}.
inline std::vector<std::vector<Scalar>> nullspace(const ExactMatrix& m)
{
    auto [r, pivots] = rref_with_pivots(m);
    std::vector<bool> is_pivot(m.cols(), false);
    for (auto p : pivots) is_pivot[p] = true;
    std::vector<std::vector<Scalar>> basis;
    for (std::size_t free = 0; free < m.cols(); ++free) {
        if (is_pivot[free]) continue;
        std::vector<Scalar> v(m.cols());
        v[free] = 1;
        for (std::size_t i = 0; i < pivots.size(); ++i) v[pivots[i]] = -r(i, free);
        basis.push_back(std::move(v));
    }
    return basis;
}

/// Unique solution of a square nonsingular system, or nullopt.
inline std::optional<std::vector<Scalar>> solve(const ExactMatrix& a, const std::vector<Scalar>& b)
{
    if (a.rows() != b.size()) throw std::invalid_argument("solve: dimension mismatch");
    ExactMatrix aug(a.rows(), a.cols() + 1);
    for (std::size_t i = 0; i < a.rows(); ++i) {
        for (std::size_t j = 0; j < a.cols(); ++j) aug(i, j) = a(i, j);
        aug(i, a.cols()) = b[i];
    }
    auto [r, pivots] = rref_with_pivots(aug);
    if (pivots.size() != a.cols() || (!pivots.empty() && pivots.back() == a.cols())) return std::nullopt;
    std::vector<Scalar> x(a.cols());
    for (std::size_t i = 0; i < pivots.size(); ++i) x[pivots[i]] = r(i, a.cols());
    return x;
}

inline ExactMatrix inverse(const ExactMatrix& a)
{
    if (a.rows() != a.cols()) throw std::invalid_argument("inverse of non-square matrix");
    std::size_t n = a.rows();
    ExactMatrix aug(n, 2 * n);
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < n; ++j) aug(i, j) = a(i, j);
        aug(i, n + i) = 1;
    }
    auto [r, pivots] = rref_with_pivots(aug);
    if (pivots.size() < n || pivots[n - 1] != n - 1) throw std::domain_error("singular matrix");
    ExactMatrix inv(n, n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) inv(i, j) = r(i, n + j);
    return inv;
}

// ---------------------------------------------------------------------------
// Sparse vectors and incremental echelon bases.

/// Sorted (index, nonzero value) pairs.
using SparseVec = std::vector<std::pair<std::size_t, Scalar>>;

inline SparseVec to_sparse(const std::vector<Scalar>& dense)
{
    SparseVec v;
    for (std::size_t i = 0; i < dense.size(); ++i)
        if (sgn(dense[i]) != 0) v.emplace_back(i, dense[i]);
    return v;
}

/// a + f * b
inline SparseVec axpy(const SparseVec& a, const Scalar& f, const SparseVec& b)
{
    SparseVec out;
    out.reserve(a.size() + b.size());
    std::size_t i = 0, j = 0;
    while (i < a.size() || j < b.size()) {
        if (j == b.size() || (i < a.size() && a[i].first < b[j].first)) {
            out.push_back(a[i++]);
        } else if (i == a.size() || b[j].first < a[i].first) {
            out.emplace_back(b[j].first, f * b[j].second);
            ++j;
        } else {
            Scalar s = a[i].second + f * b[j].second;
            if (sgn(s) != 0) out.emplace_back(a[i].first, std::move(s));
            ++i;
            ++j;
        }
    }
    return out;
}

/// Reduced row-echelon basis maintained one vector at a time. Rows are kept
/// fully reduced, so reducing a new vector takes one pass over its entries.
class EchelonBasis {
public:
    std::size_t dim() const { return rows_.size(); }
    const std::vector<SparseVec>& rows() const { return rows_; }

    SparseVec reduce(const SparseVec& v) const
    {
        SparseVec out = v;
        for (const auto& [idx, val] : v) {
            auto it = pivot_row_.find(idx);
            if (it == pivot_row_.end()) continue;
            // rows vanish on every other pivot column, so val is still current
            out = axpy(out, -val, rows_[it->second]);
        }
        return out;
    }

    bool contains(const SparseVec& v) const { return reduce(v).empty(); }

    /// Adds v; returns false if it was already in the span.
    bool insert(const SparseVec& v)
    {
        SparseVec r = reduce(v);
        if (r.empty()) return false;
        std::size_t pivot = r.front().first;
        Scalar inv = 1 / r.front().second;
        for (auto& e : r) e.second *= inv;
        for (auto& row : rows_) {
            auto it = std::lower_bound(row.begin(), row.end(), pivot,
                                       [](const auto& e, std::size_t k) { return e.first < k; });
            if (it != row.end() && it->first == pivot) {
                Scalar f = it->second;
                row = axpy(row, -f, r);
            }
        }
        pivot_row_[pivot] = rows_.size();
        rows_.push_back(std::move(r));
        return true;
    }

private:
    std::vector<SparseVec> rows_;
    std::unordered_map<std::size_t, std::size_t> pivot_row_;
};

/// True iff v is a rational combination of the basis vectors.
inline bool span_contains(const std::vector<std::vector<Scalar>>& basis, const std::vector<Scalar>& v)
{
    for (const auto& b : basis)
        if (b.size() != v.size()) throw std::invalid_argument("span_contains: dimension mismatch");
    EchelonBasis e;
    for (const auto& b : basis) e.insert(to_sparse(b));
    return e.contains(to_sparse(v));
}

/// Assigns dense column indices to arbitrary ordered keys.
template <typename Key>
class Indexer {
public:
    std::size_t index(const Key& k)
    {
        auto [it, inserted] = map_.try_emplace(k, keys_.size());
        if (inserted) keys_.push_back(k);
        return it->second;
    }
    std::optional<std::size_t> find(const Key& k) const
    {
        auto it = map_.find(k);
        if (it == map_.end()) return std::nullopt;
        return it->second;
    }
    const Key& key(std::size_t i) const { return keys_[i]; }
    std::size_t size() const { return keys_.size(); }

private:
    std::map<Key, std::size_t> map_;
    std::vector<Key> keys_;
};

}  // namespace voakit
