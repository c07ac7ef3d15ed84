#include "gf2max/matrix.hpp"

#include <array>
#include <bit>
#include <random>
#include <stdexcept>
#include <utility>

namespace gf2max {

namespace {

void require_dimension(int n)
{
    if (n < 1 || n > kMaxDimension)
        throw std::invalid_argument("matrix dimension must be in [1, 64], got " + std::to_string(n));
}

void require_same_size(const Gf2Mat& a, const Gf2Mat& b)
{
    if (a.size() != b.size())
        throw std::invalid_argument("dimension mismatch: " + std::to_string(a.size()) + " vs " +
                                    std::to_string(b.size()));
}

bool parity(std::uint64_t bits)
{
    return std::popcount(bits) & 1;
}

// Incremental echelon basis that tracks, for each stored vector, which
// combination of the inserted vectors produced it.
class TrackedBasis {
public:
    // Reduces v (with combination `combo`) against the basis. Returns true
    // and stores it if it was independent; otherwise leaves the dependency
    // in `combo` and returns false.
    bool insert(Gf2Vec v, Gf2Poly& combo)
    {
        for (const auto& entry : entries_) {
            if ((v >> entry.pivot) & 1u) {
                v ^= entry.vec;
                combo += entry.combo;
            }
        }
        if (v == 0)
            return false;
        entries_.push_back({v, std::countr_zero(v), combo});
        return true;
    }

    int size() const { return static_cast<int>(entries_.size()); }

private:
    struct Entry {
        Gf2Vec vec;
        int pivot;
        Gf2Poly combo;
    };
    std::vector<Entry> entries_;
};

struct KrylovResult {
    Gf2Poly annihilator;
    int rank;
};

KrylovResult krylov(const Gf2Mat& m, Gf2Vec v)
{
    TrackedBasis basis;
    Gf2Vec current = v & low_mask(m.size());
    for (std::size_t k = 0;; ++k) {
        Gf2Poly combo = Gf2Poly::monomial(k);
        if (!basis.insert(current, combo))
            return {std::move(combo), basis.size()};
        current = mat_apply(m, current);
    }
}

}  // namespace

Gf2Mat::Gf2Mat(int n) : n_(n)
{
    require_dimension(n);
    rows_.assign(static_cast<std::size_t>(n), 0);
}

Gf2Mat Gf2Mat::identity(int n)
{
    Gf2Mat m(n);
    for (int i = 0; i < n; ++i)
        m.rows_[i] = std::uint64_t{1} << i;
    return m;
}

Gf2Mat Gf2Mat::from_rows(std::vector<std::uint64_t> rows)
{
    Gf2Mat m(static_cast<int>(rows.size()));
    for (int i = 0; i < m.n_; ++i)
        m.set_row(i, rows[i]);
    return m;
}

void Gf2Mat::set(int i, int j, bool value)
{
    const std::uint64_t mask = std::uint64_t{1} << j;
    rows_[i] = value ? (rows_[i] | mask) : (rows_[i] & ~mask);
}

void Gf2Mat::set_row(int i, std::uint64_t bits)
{
    if (bits & ~low_mask(n_))
        throw std::invalid_argument("row has bits beyond column " + std::to_string(n_ - 1));
    rows_[i] = bits;
}

bool Gf2Mat::is_zero() const
{
    for (auto r : rows_)
        if (r)
            return false;
    return true;
}

bool Gf2Mat::is_identity() const
{
    for (int i = 0; i < n_; ++i)
        if (rows_[i] != (std::uint64_t{1} << i))
            return false;
    return true;
}

Gf2Mat& Gf2Mat::operator+=(const Gf2Mat& other)
{
    require_same_size(*this, other);
    for (int i = 0; i < n_; ++i)
        rows_[i] ^= other.rows_[i];
    return *this;
}

std::strong_ordering operator<=>(const Gf2Mat& a, const Gf2Mat& b)
{
    if (auto c = a.n_ <=> b.n_; c != 0)
        return c;
    for (int i = a.n_; i-- > 0;) {
        if (auto c = a.rows_[i] <=> b.rows_[i]; c != 0)
            return c;
    }
    return std::strong_ordering::equal;
}

Gf2Mat mat_add(const Gf2Mat& a, const Gf2Mat& b)
{
    Gf2Mat sum = a;
    sum += b;
    return sum;
}

namespace kernels {

Gf2Mat mul_rowwise(const Gf2Mat& a, const Gf2Mat& b)
{
    require_same_size(a, b);
    const int n = a.size();
    Gf2Mat c(n);
    for (int i = 0; i < n; ++i) {
        std::uint64_t sel = a.row(i);
        std::uint64_t acc = 0;
        while (sel) {
            acc ^= b.row(std::countr_zero(sel));
            sel &= sel - 1;
        }
        c.set_row(i, acc);
    }
    return c;
}

Gf2Mat mul_four_russians(const Gf2Mat& a, const Gf2Mat& b)
{
    require_same_size(a, b);
    const int n = a.size();
    const int groups = (n + 7) / 8;
    std::vector<std::array<std::uint64_t, 256>> tables(static_cast<std::size_t>(groups));
    for (int g = 0; g < groups; ++g) {
        auto& table = tables[g];
        table[0] = 0;
        // Gray-code fill: each entry differs from the previous one by a single row of B.
        for (unsigned idx = 1; idx < 256; ++idx) {
            const int bit = std::countr_zero(idx);
            const int row = g * 8 + bit;
            const std::uint64_t contribution = row < n ? b.row(row) : 0;
            const unsigned gray = idx ^ (idx >> 1);
            const unsigned prev = (idx - 1) ^ ((idx - 1) >> 1);
            table[gray] = table[prev] ^ contribution;
        }
    }
    Gf2Mat c(n);
    for (int i = 0; i < n; ++i) {
        const std::uint64_t sel = a.row(i);
        std::uint64_t acc = 0;
        for (int g = 0; g < groups; ++g)
            acc ^= tables[g][(sel >> (8 * g)) & 0xffu];
        c.set_row(i, acc);
    }
    return c;
}

}  // namespace kernels

Gf2Mat mat_mul(const Gf2Mat& a, const Gf2Mat& b)
{
    if (a.size() >= 32)
        return kernels::mul_four_russians(a, b);
    return kernels::mul_rowwise(a, b);
}

Gf2Mat transpose(const Gf2Mat& m)
{
    const int n = m.size();
    Gf2Mat t(n);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j)
            if (m.get(i, j))
                t.set(j, i, true);
    return t;
}

Gf2Vec mat_apply(const Gf2Mat& m, Gf2Vec v)
{
    Gf2Vec out = 0;
    for (int i = 0; i < m.size(); ++i)
        if (parity(m.row(i) & v))
            out |= Gf2Vec{1} << i;
    return out;
}

int mat_rank(const Gf2Mat& m)
{
    std::vector<std::uint64_t> rows(m.rows().begin(), m.rows().end());
    int rank = 0;
    for (int col = 0; col < m.size() && rank < m.size(); ++col) {
        const std::uint64_t mask = std::uint64_t{1} << col;
        int pivot = -1;
        for (int r = rank; r < m.size(); ++r) {
            if (rows[r] & mask) {
                pivot = r;
                break;
            }
        }
        if (pivot < 0)
            continue;
        std::swap(rows[rank], rows[pivot]);
        for (int r = rank + 1; r < m.size(); ++r)
            if (rows[r] & mask)
                rows[r] ^= rows[rank];
        ++rank;
    }
    return rank;
}

bool is_invertible(const Gf2Mat& m)
{
    return mat_rank(m) == m.size();
}

Gf2Mat mat_inverse(const Gf2Mat& m)
{
    const int n = m.size();
    std::vector<std::uint64_t> left(m.rows().begin(), m.rows().end());
    std::vector<std::uint64_t> right(static_cast<std::size_t>(n));
    for (int i = 0; i < n; ++i)
        right[i] = std::uint64_t{1} << i;

    for (int col = 0; col < n; ++col) {
        const std::uint64_t mask = std::uint64_t{1} << col;
        int pivot = -1;
        for (int r = col; r < n; ++r) {
            if (left[r] & mask) {
                pivot = r;
                break;
            }
        }
        if (pivot < 0)
            throw SingularMatrix();
        std::swap(left[col], left[pivot]);
        std::swap(right[col], right[pivot]);
        for (int r = 0; r < n; ++r) {
            if (r != col && (left[r] & mask)) {
                left[r] ^= left[col];
                right[r] ^= right[col];
            }
        }
    }
    return Gf2Mat::from_rows(std::move(right));
}

Gf2Mat mat_pow(const Gf2Mat& m, std::uint64_t exponent)
{
    Gf2Mat result = Gf2Mat::identity(m.size());
    Gf2Mat base = m;
    while (exponent) {
        if (exponent & 1u)
            result = result * base;
        exponent >>= 1;
        if (exponent)
            base = base * base;
    }
    return result;
}

Gf2Mat mat_pow(const Gf2Mat& m, const BigInt& exponent)
{
    if (exponent < 0)
        throw std::invalid_argument("negative exponent");
    Gf2Mat result = Gf2Mat::identity(m.size());
    if (exponent == 0)
        return result;
    for (std::size_t i = boost::multiprecision::msb(exponent) + 1; i-- > 0;) {
        result = result * result;
        if (boost::multiprecision::bit_test(exponent, static_cast<unsigned>(i)))
            result = result * m;
    }
    return result;
}

Gf2Mat companion(const Gf2Poly& f)
{
    const auto d = f.degree();
    if (!d || *d == 0)
        throw std::invalid_argument("companion matrix needs a polynomial of positive degree");
    if (*d > static_cast<std::size_t>(kMaxDimension))
        throw std::invalid_argument("companion matrix dimension exceeds 64");
    const int n = static_cast<int>(*d);
    Gf2Mat c(n);
    for (int i = 0; i < n; ++i) {
        if (i > 0)
            c.set(i, i - 1, true);
        if (f.coeff(static_cast<std::size_t>(i)))
            c.set(i, n - 1, true);
    }
    return c;
}

Gf2Poly char_poly(const Gf2Mat& m)
{
    const int n = m.size();
    std::vector<std::uint64_t> h(m.rows().begin(), m.rows().end());
    auto bit = [&](int i, int j) -> bool { return (h[i] >> j) & 1u; };

    // Similarity transforms down to upper Hessenberg form.
    for (int j = 0; j + 2 < n; ++j) {
        int p = -1;
        for (int i = j + 1; i < n; ++i) {
            if (bit(i, j)) {
                p = i;
                break;
            }
        }
        if (p < 0)
            continue;
        const int t = j + 1;
        if (p != t) {
            std::swap(h[p], h[t]);
            for (auto& row : h) {
                const bool bp = (row >> p) & 1u, bt = (row >> t) & 1u;
                if (bp != bt)
                    row ^= (std::uint64_t{1} << p) | (std::uint64_t{1} << t);
            }
        }
        for (int k = t + 1; k < n; ++k) {
            if (!bit(k, j))
                continue;
            h[k] ^= h[t];  // row_k += row_t
            for (auto& row : h)  // col_t += col_k
                if ((row >> k) & 1u)
                    row ^= std::uint64_t{1} << t;
        }
    }

    // p_m = (x + h_{m-1,m-1}) p_{m-1} + sum_i h_{m-1-i,m-1} prod(subdiag) p_{m-1-i}
    std::vector<Gf2Poly> p(static_cast<std::size_t>(n) + 1);
    p[0] = Gf2Poly::one();
    for (int mm = 1; mm <= n; ++mm) {
        Gf2Poly next = p[mm - 1];
        next.shift_left(1);
        if (bit(mm - 1, mm - 1))
            next += p[mm - 1];
        for (int i = 1; i < mm; ++i) {
            if (!bit(mm - i, mm - i - 1))
                break;
            if (bit(mm - 1 - i, mm - 1))
                next += p[mm - 1 - i];
        }
        p[mm] = std::move(next);
    }
    return p[n];
}

Gf2Poly krylov_annihilator(const Gf2Mat& m, Gf2Vec v)
{
    return krylov(m, v).annihilator;
}

int krylov_rank(const Gf2Mat& m, Gf2Vec v)
{
    return krylov(m, v).rank;
}

Gf2Poly min_poly(const Gf2Mat& m)
{
    Gf2Poly result = Gf2Poly::one();
    for (int i = 0; i < m.size(); ++i)
        result = poly_lcm(result, krylov_annihilator(m, Gf2Vec{1} << i));
    return result;
}

bool is_cyclic(const Gf2Mat& m)
{
    return char_poly(m) == min_poly(m);
}

std::optional<Gf2Vec> find_cyclic_vector(const Gf2Mat& m)
{
    if (!is_cyclic(m))
        return std::nullopt;
    const int n = m.size();
    for (int i = 0; i < n; ++i)
        if (krylov_rank(m, Gf2Vec{1} << i) == n)
            return Gf2Vec{1} << i;

    std::mt19937_64 rng(0x9e3779b97f4a7c15ull);
    for (int trial = 0; trial < 256; ++trial) {
        const Gf2Vec v = rng() & low_mask(n);
        if (v && krylov_rank(m, v) == n)
            return v;
    }
    if (n <= 16) {
        for (Gf2Vec v = 1; v <= low_mask(n); ++v)
            if (krylov_rank(m, v) == n)
                return v;
    }
    return std::nullopt;
}

Gf2Mat poly_eval_at_matrix(const Gf2Poly& g, const Gf2Mat& m)
{
    const int n = m.size();
    Gf2Mat result(n);
    const auto d = g.degree();
    if (!d)
        return result;
    const Gf2Mat id = Gf2Mat::identity(n);
    for (std::size_t i = *d + 1; i-- > 0;) {
        result = result * m;
        if (g.coeff(i))
            result += id;
    }
    return result;
}

std::optional<std::uint64_t> mat_order(const Gf2Mat& m, const MersenneFactorization& fact,
                                       const Limits& limits)
{
    if (fact.n != m.size())
        throw std::invalid_argument("factorization is for 2^" + std::to_string(fact.n) +
                                    "-1 but the matrix is " + std::to_string(m.size()) + "x" +
                                    std::to_string(m.size()));
    if (!is_invertible(m))
        return std::nullopt;
    if (!mat_pow(m, fact.value).is_identity())
        return mat_order(m, limits);

    std::uint64_t order = fact.value;
    for (auto [p, e] : fact.factors) {
        for (int i = 0; i < e; ++i) {
            if (order % p != 0 || !mat_pow(m, order / p).is_identity())
                break;
            order /= p;
        }
    }
    return order;
}

std::optional<std::uint64_t> mat_order(const Gf2Mat& m, const Limits& limits)
{
    if (!is_invertible(m))
        return std::nullopt;
    Gf2Mat power = m;
    std::uint64_t k = 1;
    while (!power.is_identity()) {
        if (k >= limits.order_steps)
            throw CapExceeded("order cap exceeded");
        power = power * m;
        ++k;
    }
    return k;
}

}  // namespace gf2max
