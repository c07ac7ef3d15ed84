#include <algorithm>
#include <sstream>

#include "gf2max/group.hpp"

namespace gf2max {

namespace reference {

const std::vector<std::uint64_t> kCentralizer396 = {106, 157, 247, 273, 379, 396, 486};

const std::vector<std::uint64_t> kClassOf172 = {95,  335, 187, 485, 442, 500, 102, 142,
                                                172, 226, 106, 204, 115, 397, 157, 355,
                                                370, 412, 247, 431, 253, 491, 382, 478};

const std::vector<std::uint64_t> kClassOf396 = {244, 426, 229, 171, 334, 94,  156, 354,
                                                99,  141, 396, 114, 492, 250, 486, 190,
                                                207, 111, 379, 477, 415, 375, 499, 445};

}  // namespace reference

namespace {

std::vector<std::uint64_t> codes_of(const std::vector<Gf2Mat>& matrices)
{
    std::vector<std::uint64_t> codes;
    codes.reserve(matrices.size());
    for (const auto& m : matrices)
        codes.push_back(encode_u64(m));
    std::sort(codes.begin(), codes.end());
    return codes;
}

std::string join(const std::vector<std::uint64_t>& values)
{
    std::ostringstream out;
    out << '{';
    for (std::size_t i = 0; i < values.size(); ++i)
        out << (i ? "," : "") << values[i];
    out << '}';
    return out.str();
}

// Set comparison with a readable description of any divergence.
CheckResult compare_sets(std::string name, std::vector<std::uint64_t> expected, std::vector<std::uint64_t> actual,
                         std::string_view expected_label, std::string_view actual_label)
{
    std::sort(expected.begin(), expected.end());
    std::sort(actual.begin(), actual.end());
    CheckResult result{std::move(name), expected == actual, {}};
    if (result.passed) {
        result.detail = std::to_string(actual.size()) + " codes agree";
        return result;
    }
    std::vector<std::uint64_t> missing, extra;
    std::set_difference(expected.begin(), expected.end(), actual.begin(), actual.end(), std::back_inserter(missing));
    std::set_difference(actual.begin(), actual.end(), expected.begin(), expected.end(), std::back_inserter(extra));
    result.detail = std::string("only in ") + std::string(expected_label) + ": " + join(missing) + "; only in " +
                    std::string(actual_label) + ": " + join(extra);
    return result;
}

CheckResult compare_counts(std::string name, const BigInt& expected, const BigInt& actual)
{
    return {std::move(name), expected == actual, to_decimal(actual) + " = " + to_decimal(expected)};
}

}  // namespace

bool VerificationReport::passed() const
{
    return std::all_of(checks.begin(), checks.end(), [](const CheckResult& c) { return c.passed; });
}

VerificationReport verify_dimension(int n, const Limits& limits, unsigned threads)
{
    if (n < 1)
        throw std::invalid_argument("n must be positive");
    if (n > limits.brute_force)
        throw CapExceeded("brute-force cap exceeded (n=" + std::to_string(n) + " > " +
                          std::to_string(limits.brute_force) +
                          "); use sampled generation (gen --mode sampled) for larger n");

    VerificationReport report;
    report.n = n;
    auto& checks = report.checks;
    const BigInt mersenne = (BigInt(1) << n) - 1;

    checks.push_back(compare_counts("class size times 2^n-1 equals |GL_n|", gl_order(n), class_size(n) * mersenne));

    std::uint64_t gl_count = 0;
    for_each_gl(n, [&](const Gf2Mat&) { ++gl_count; }, limits);
    checks.push_back(compare_counts("enumerated GL_n matches |GL_n|", gl_order(n), BigInt(gl_count)));

    const Census census = brute_force_census(n, limits, threads);
    checks.push_back(compare_counts("census count matches counting formula", total_max_order_count(n, limits),
                                    BigInt(census.total)));

    const auto fact = factor_mersenne(n, limits);
    {
        bool keys_primitive = true;
        for (const auto& [poly, count] : census.buckets)
            keys_primitive = keys_primitive && is_primitive(poly, fact);
        const auto expected = count_primitive(n, limits);
        checks.push_back({"census buckets are the primitive polynomials",
                          keys_primitive && census.buckets.size() == expected,
                          std::to_string(census.buckets.size()) + " buckets, " + std::to_string(expected) +
                              " primitive polynomials" + (keys_primitive ? "" : ", non-primitive key found")});
    }
    {
        const BigInt expected = class_size(n);
        bool equal = true;
        std::string sizes;
        for (const auto& [poly, count] : census.buckets) {
            equal = equal && BigInt(count) == expected;
            sizes += (sizes.empty() ? "" : ", ") + to_string(poly) + ": " + std::to_string(count);
        }
        checks.push_back({"every bucket has the class size", equal,
                          sizes + " (expected " + to_decimal(expected) + " each)"});
    }

    const std::uint64_t subgroup_size = fact.value;
    for (const auto& f : enumerate_primitive(n, limits)) {
        const Gf2Mat a = companion(f);
        const Centralizer h = centralizer_of_cyclic(a, limits);
        const bool matches = verify_centralizer(a, limits);
        checks.push_back({"centralizer of companion(" + to_string(f) + ") equals commuting scan",
                          matches && h.size() == subgroup_size,
                          std::to_string(h.size()) + " elements, expected " + std::to_string(subgroup_size)});

        const ConjClassReport cls = conjugacy_class(f, limits);
        auto found = census.members.find(f);
        const std::vector<std::uint64_t> oracle = found == census.members.end() ? std::vector<std::uint64_t>{}
                                                                                : found->second;
        checks.push_back(compare_sets("coset-walk class of " + to_string(f) + " equals census bucket", oracle,
                                      codes_of(cls.matrices), "census", "coset walk"));
    }

    if (n == 3) {
        const auto h396 = centralizer_of_cyclic(decode_u64(3, 396), limits);
        checks.push_back(compare_sets("reference centralizer of 396", reference::kCentralizer396,
                                      codes_of(h396.elements()), "reference list", "computed"));
        auto oracle = [&](std::uint64_t bits) {
            auto it = census.members.find(Gf2Poly(bits));
            return it == census.members.end() ? std::vector<std::uint64_t>{} : it->second;
        };
        checks.push_back(compare_sets("reference class list for x^3+x+1", reference::kClassOf172, oracle(0b1011),
                                      "reference list", "full scan"));
        checks.push_back(compare_sets("reference class list for x^3+x^2+1", reference::kClassOf396, oracle(0b1101),
                                      "reference list", "full scan"));
    }
    return report;
}

}  // namespace gf2max
