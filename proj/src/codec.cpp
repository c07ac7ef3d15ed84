#include <algorithm>

#include "gf2max/matrix.hpp"

namespace gf2max {

namespace {

constexpr int kSmallCodeDimension = 8;

}  // namespace

std::uint64_t encode_u64(const Gf2Mat& m)
{
    const int n = m.size();
    if (n > kSmallCodeDimension)
        throw std::invalid_argument("64-bit codes only cover n <= 8");
    std::uint64_t code = 0;
    for (int i = 0; i < n; ++i)
        code |= m.row(i) << (i * n);
    return code;
}

Gf2Mat decode_u64(int n, std::uint64_t code)
{
    if (n < 1 || n > kSmallCodeDimension)
        throw std::invalid_argument("64-bit codes only cover 1 <= n <= 8");
    if (n < 8 && (code >> (n * n)) != 0)
        throw std::out_of_range("code out of range for n=" + std::to_string(n));
    Gf2Mat m(n);
    const std::uint64_t mask = low_mask(n);
    for (int i = 0; i < n; ++i)
        m.set_row(i, (code >> (i * n)) & mask);
    return m;
}

MatCode encode(const Gf2Mat& m)
{
    const int n = m.size();
    if (n <= kSmallCodeDimension)
        return {n, BigInt(encode_u64(m))};
    BigInt code = 0;
    for (int i = n; i-- > 0;) {
        code <<= n;
        code |= m.row(i);
    }
    return {n, code};
}

Gf2Mat decode(const MatCode& c)
{
    const int n = c.n;
    if (n < 1 || n > kMaxDimension)
        throw std::invalid_argument("matrix dimension must be in [1, 64], got " + std::to_string(n));
    if (c.code < 0 || (c.code != 0 && boost::multiprecision::msb(c.code) >= static_cast<std::size_t>(n * n)))
        throw std::out_of_range("code out of range for n=" + std::to_string(n));
    if (n <= kSmallCodeDimension)
        return decode_u64(n, static_cast<std::uint64_t>(c.code));
    Gf2Mat m(n);
    BigInt rest = c.code;
    const BigInt mask = BigInt(low_mask(n));
    for (int i = 0; i < n; ++i) {
        m.set_row(i, static_cast<std::uint64_t>(rest & mask));
        rest >>= n;
    }
    return m;
}

std::string format_code(const MatCode& c)
{
    return c.n <= kSmallCodeDimension ? to_decimal(c.code) : to_hex(c.code);
}

std::string format_code(const Gf2Mat& m)
{
    return format_code(encode(m));
}

std::string format_grid(const Gf2Mat& m, std::string_view row_separator)
{
    std::string out;
    for (int i = 0; i < m.size(); ++i) {
        if (i)
            out += row_separator;
        for (int j = 0; j < m.size(); ++j)
            out += m.get(i, j) ? '1' : '0';
    }
    return out;
}

Gf2Mat parse_matrix(std::string_view text, std::optional<int> n)
{
    text = trim(text);
    std::vector<std::string_view> tokens;
    std::size_t pos = 0;
    auto is_sep = [](char ch) { return ch == '\n' || ch == '\r' || ch == '\t' || ch == ' ' || ch == '/' || ch == ';' || ch == ','; };
    while (pos < text.size()) {
        while (pos < text.size() && is_sep(text[pos]))
            ++pos;
        const std::size_t start = pos;
        while (pos < text.size() && !is_sep(text[pos]))
            ++pos;
        if (pos > start)
            tokens.push_back(text.substr(start, pos - start));
    }
    if (tokens.empty())
        throw std::invalid_argument("empty matrix");

    if (tokens.size() == 1) {
        const BigInt code = parse_bigint(tokens[0]);
        int dim = n.value_or(0);
        if (!n) {
            dim = 1;
            while (dim < kMaxDimension && code >= (BigInt(1) << (dim * dim)))
                ++dim;
        }
        return decode({dim, code});
    }

    const int dim = static_cast<int>(tokens.size());
    if (n && *n != dim)
        throw std::invalid_argument("grid has " + std::to_string(dim) + " rows but n=" + std::to_string(*n));
    Gf2Mat m(dim);
    for (int i = 0; i < dim; ++i) {
        const auto row = tokens[i];
        if (static_cast<int>(row.size()) != dim ||
            !std::all_of(row.begin(), row.end(), [](char ch) { return ch == '0' || ch == '1'; }))
            throw std::invalid_argument("grid row '" + std::string(row) + "' must be " + std::to_string(dim) +
                                        " characters of 0/1");
        for (int j = 0; j < dim; ++j)
            m.set(i, j, row[j] == '1');
    }
    return m;
}

}  // namespace gf2max
