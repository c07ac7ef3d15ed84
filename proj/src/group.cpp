#include "gf2max/group.hpp"

#include <algorithm>
#include <bit>
#include <unordered_set>

namespace gf2max {

namespace {

void require_positive(int n)
{
    if (n < 1)
        throw std::invalid_argument("n must be positive");
}

void require_exhaustive(int n, const Limits& limits)
{
    require_positive(n);
    if (n > limits.exhaustive || n > 8)
        throw CapExceeded("exhaustive cap exceeded (n=" + std::to_string(n) + " > " +
                          std::to_string(std::min(limits.exhaustive, 8)) + ")");
}

// Marks matrix codes for n <= 8; a bitmap while the code space is small.
class CodeSet {
public:
    explicit CodeSet(int n)
    {
        if (n * n <= 28)
            bitmap_.assign(std::size_t{1} << (n * n), false);
    }

    bool contains(std::uint64_t code) const
    {
        return bitmap_.empty() ? hashed_.contains(code) : bool(bitmap_[code]);
    }

    void insert(std::uint64_t code)
    {
        if (bitmap_.empty())
            hashed_.insert(code);
        else
            bitmap_[code] = true;
    }

private:
    std::vector<bool> bitmap_;
    std::unordered_set<std::uint64_t> hashed_;
};

std::uint64_t uniform_below(std::mt19937_64& rng, std::uint64_t bound)
{
    const std::uint64_t limit = ~std::uint64_t{0} - (~std::uint64_t{0} % bound);
    std::uint64_t draw;
    do {
        draw = rng();
    } while (draw >= limit);
    return draw % bound;
}

Gf2Mat conjugate(const Gf2Mat& a, const Gf2Mat& r)
{
    return mat_inverse(r) * a * r;
}

void require_primitive(const Gf2Poly& f, const MersenneFactorization& fact)
{
    if (auto why = primitivity_failure(f, fact))
        throw std::invalid_argument("polynomial must be primitive: " + to_string(f) + " fails (" + *why + ")");
}

int degree_as_dimension(const Gf2Poly& f)
{
    const auto d = f.degree();
    if (!d || *d == 0)
        throw std::invalid_argument("polynomial must be primitive: degree must be positive");
    if (*d > static_cast<std::size_t>(kMaxDimension))
        throw CapExceeded("dimension cap exceeded (degree " + std::to_string(*d) + " > 64)");
    return static_cast<int>(*d);
}

}  // namespace

BigInt gl_order(int n)
{
    require_positive(n);
    const BigInt full = BigInt(1) << n;
    BigInt order = 1;
    for (int i = 0; i < n; ++i)
        order *= full - (BigInt(1) << i);
    return order;
}

BigInt class_size(int n)
{
    require_positive(n);
    const BigInt full = BigInt(1) << n;
    BigInt size = 1;
    for (int i = 1; i < n; ++i)
        size *= full - (BigInt(1) << i);
    return size;
}

BigInt total_max_order_count(int n, const Limits& limits)
{
    return class_size(n) * count_primitive(n, limits);
}

void for_each_gl(int n, const std::function<void(const Gf2Mat&)>& visit, const Limits& limits)
{
    require_exhaustive(n, limits);
    const std::size_t space = std::size_t{1} << n;
    Gf2Mat m(n);
    // spans[d] marks the span of the d rows chosen so far.
    std::vector<std::vector<char>> spans(static_cast<std::size_t>(n) + 1, std::vector<char>(space, 0));
    spans[0][0] = 1;

    // Row n-1 is the most significant part of the code, so it is chosen first.
    auto recurse = [&](auto& self, int depth) -> void {
        if (depth == n) {
            visit(m);
            return;
        }
        const int row = n - 1 - depth;
        const auto& span = spans[depth];
        for (std::uint64_t r = 1; r < space; ++r) {
            if (span[r])
                continue;
            m.set_row(row, r);
            if (depth + 1 < n) {
                auto& next = spans[depth + 1];
                next = span;
                for (std::uint64_t v = 0; v < space; ++v)
                    if (span[v])
                        next[v ^ r] = 1;
            }
            self(self, depth + 1);
        }
    };
    recurse(recurse, 0);
}

std::vector<Gf2Mat> enumerate_gl(int n, const Limits& limits)
{
    std::vector<Gf2Mat> out;
    for_each_gl(n, [&](const Gf2Mat& m) { out.push_back(m); }, limits);
    return out;
}

Centralizer::Centralizer(Gf2Mat base, std::vector<Gf2Mat> elements)
    : base_(std::move(base)), elements_(std::move(elements))
{
    std::sort(elements_.begin(), elements_.end());
}

bool Centralizer::contains(const Gf2Mat& m) const
{
    return std::binary_search(elements_.begin(), elements_.end(), m);
}

Centralizer centralizer_of_cyclic(const Gf2Mat& a, const Limits& limits)
{
    const int n = a.size();
    if (n > limits.centralizer)
        throw CapExceeded("centralizer cap exceeded (n=" + std::to_string(n) + " > " +
                          std::to_string(limits.centralizer) + ")");
    const Gf2Poly chi = char_poly(a);
    if (!is_invertible(a) || !is_irreducible(chi) || chi != min_poly(a))
        throw std::invalid_argument(
            "centralizer formula requires cyclic matrix with irreducible characteristic polynomial");

    std::vector<Gf2Mat> powers;
    powers.reserve(static_cast<std::size_t>(n));
    powers.push_back(Gf2Mat::identity(n));
    for (int k = 1; k < n; ++k)
        powers.push_back(powers.back() * a);

    // Gray-code walk over the nonzero coefficient vectors of g with deg g < n.
    std::vector<Gf2Mat> elements;
    const std::uint64_t count = low_mask(n);
    elements.reserve(count);
    Gf2Mat current(n);
    for (std::uint64_t i = 1; i <= count; ++i) {
        current += powers[static_cast<std::size_t>(std::countr_zero(i))];
        elements.push_back(current);
    }
    return Centralizer(a, std::move(elements));
}

bool verify_centralizer(const Gf2Mat& a, const Limits& limits)
{
    const Centralizer h = centralizer_of_cyclic(a, limits);
    std::vector<Gf2Mat> commuting;
    for_each_gl(
        a.size(),
        [&](const Gf2Mat& m) {
            if (m * a == a * m)
                commuting.push_back(m);
        },
        limits);
    return commuting == h.elements();
}

std::vector<Gf2Mat> CosetDecomposition::coset(std::size_t index) const
{
    const Gf2Mat& r = representatives.at(index);
    std::vector<Gf2Mat> members;
    members.reserve(subgroup.size());
    for (const auto& h : subgroup.elements())
        members.push_back(h * r);
    std::sort(members.begin(), members.end());
    return members;
}

CosetDecomposition coset_decomposition(const Centralizer& h, const Limits& limits)
{
    const int n = h.base().size();
    require_exhaustive(n, limits);

    CodeSet covered(n);
    std::vector<Gf2Mat> reps;
    for_each_gl(
        n,
        [&](const Gf2Mat& m) {
            if (covered.contains(encode_u64(m)))
                return;
            reps.push_back(m);
            for (const auto& e : h.elements())
                covered.insert(encode_u64(e * m));
        },
        limits);

    BigInt count = gl_order(n) / BigInt(h.size());
    return CosetDecomposition{h, std::move(reps), std::move(count)};
}

std::string to_string(GenerationMode mode)
{
    return mode == GenerationMode::exhaustive ? "exhaustive" : "sampled";
}

GenerationMode parse_generation_mode(std::string_view text)
{
    if (text == "exhaustive")
        return GenerationMode::exhaustive;
    if (text == "sampled")
        return GenerationMode::sampled;
    throw std::invalid_argument("mode must be 'exhaustive' or 'sampled'");
}

ConjClassReport conjugacy_class(const Gf2Poly& f, const Limits& limits)
{
    const int n = degree_as_dimension(f);
    require_exhaustive(n, limits);
    require_primitive(f, factor_mersenne(n, limits));

    const Gf2Mat a = companion(f);
    const CosetDecomposition cosets = coset_decomposition(centralizer_of_cyclic(a, limits), limits);

    ConjClassReport report;
    report.polynomial = f;
    report.n = n;
    report.mode = GenerationMode::exhaustive;
    report.expected_size = class_size(n);
    report.matrices.reserve(cosets.representatives.size());
    for (const auto& r : cosets.representatives)
        report.matrices.push_back(conjugate(a, r));
    std::sort(report.matrices.begin(), report.matrices.end());
    const auto distinct = std::unique(report.matrices.begin(), report.matrices.end());
    report.duplicates = static_cast<std::size_t>(report.matrices.end() - distinct);
    report.matrices.erase(distinct, report.matrices.end());
    return report;
}

Gf2Mat random_invertible(int n, std::mt19937_64& rng)
{
    const std::uint64_t mask = low_mask(n);
    if (n <= 8) {
        std::vector<std::uint64_t> rows(static_cast<std::size_t>(n));
        for (;;) {
            for (auto& row : rows)
                row = rng() & mask;
            Gf2Mat m = Gf2Mat::from_rows(rows);
            if (is_invertible(m))
                return m;
        }
    }

    Gf2Mat lower(n), upper(n), perm(n);
    for (int i = 0; i < n; ++i) {
        const std::uint64_t diag = std::uint64_t{1} << i;
        lower.set_row(i, (rng() & low_mask(i)) | diag);
        upper.set_row(i, (rng() & mask & ~low_mask(i + 1)) | diag);
    }
    std::vector<int> order(static_cast<std::size_t>(n));
    for (int i = 0; i < n; ++i)
        order[i] = i;
    for (int i = n - 1; i > 0; --i)
        std::swap(order[i], order[uniform_below(rng, static_cast<std::uint64_t>(i) + 1)]);
    for (int i = 0; i < n; ++i)
        perm.set_row(i, std::uint64_t{1} << order[i]);
    return lower * upper * perm;
}

ConjClassReport sample_conjugates(const Gf2Poly& f, std::size_t count, std::uint64_t seed,
                                  const Limits& limits)
{
    const int n = degree_as_dimension(f);
    require_primitive(f, factor_mersenne(n, limits));

    ConjClassReport report;
    report.polynomial = f;
    report.n = n;
    report.mode = GenerationMode::sampled;
    report.seed = seed;
    report.expected_size = class_size(n);

    const Gf2Mat a = companion(f);
    std::mt19937_64 rng(seed);
    report.matrices.reserve(count);
    for (std::size_t i = 0; i < count; ++i)
        report.matrices.push_back(conjugate(a, random_invertible(n, rng)));

    std::vector<Gf2Mat> sorted = report.matrices;
    std::sort(sorted.begin(), sorted.end());
    report.duplicates = static_cast<std::size_t>(sorted.end() - std::unique(sorted.begin(), sorted.end()));
    return report;
}

}  // namespace gf2max
