#pragma once

#include <cstdint>
#include <functional>
#include <map>
#include <optional>
#include <random>
#include <string>
#include <vector>

#include "gf2max/matrix.hpp"
#include "gf2max/poly.hpp"

namespace gf2max {

/// |GL_n(GF(2))| = prod_{i=0}^{n-1} (2^n - 2^i).
BigInt gl_order(int n);

/// Size of the conjugacy class of a maximal-order matrix,
/// prod_{i=1}^{n-1} (2^n - 2^i) = |GL_n| / (2^n - 1).
BigInt class_size(int n);

/// class_size(n) * count_primitive(n): all n x n matrices of order 2^n - 1.
BigInt total_max_order_count(int n, const Limits& limits = {});

/// Visits every invertible n x n matrix exactly once, in ascending code order.
/// The matrix passed to the visitor is reused between calls.
void for_each_gl(int n, const std::function<void(const Gf2Mat&)>& visit, const Limits& limits = {});
std::vector<Gf2Mat> enumerate_gl(int n, const Limits& limits = {});

/// Centralizer of a cyclic matrix with irreducible characteristic polynomial:
/// the 2^n - 1 nonzero polynomials in the base matrix of degree < n.
class Centralizer {
public:
    Centralizer(Gf2Mat base, std::vector<Gf2Mat> elements);

    const Gf2Mat& base() const { return base_; }
    // Sorted in code order.
    const std::vector<Gf2Mat>& elements() const { return elements_; }
    std::size_t size() const { return elements_.size(); }
    bool contains(const Gf2Mat& m) const;

private:
    Gf2Mat base_;
    std::vector<Gf2Mat> elements_;
};

Centralizer centralizer_of_cyclic(const Gf2Mat& a, const Limits& limits = {});

/// Compares centralizer_of_cyclic(a) against {M in GL_n : MA = AM} found by
/// full enumeration.
bool verify_centralizer(const Gf2Mat& a, const Limits& limits = {});

/// Right cosets H r of the centralizer in GL_n. Under b = r^-1 a r every
/// member of one coset yields the same conjugate.
struct CosetDecomposition {
    Centralizer subgroup;
    std::vector<Gf2Mat> representatives;
    BigInt coset_count;

    /// The coset H * representatives[index], sorted.
    std::vector<Gf2Mat> coset(std::size_t index) const;
};

/// Greedy sweep over GL_n in code order; a matrix becomes a representative
/// when it lies in none of the cosets seen so far.
CosetDecomposition coset_decomposition(const Centralizer& h, const Limits& limits = {});

enum class GenerationMode { exhaustive, sampled };

std::string to_string(GenerationMode mode);
GenerationMode parse_generation_mode(std::string_view text);

struct ConjClassReport {
    Gf2Poly polynomial;
    int n = 0;
    GenerationMode mode = GenerationMode::exhaustive;
    std::optional<std::uint64_t> seed;
    // Exhaustive: sorted and distinct. Sampled: generation order.
    std::vector<Gf2Mat> matrices;
    BigInt expected_size;
    std::size_t duplicates = 0;
};

/// Every matrix conjugate to companion(f), via the coset walk.
ConjClassReport conjugacy_class(const Gf2Poly& f, const Limits& limits = {});

/// `count` conjugates r^-1 A r of A = companion(f) with random invertible r.
/// Deterministic for a given seed.
ConjClassReport sample_conjugates(const Gf2Poly& f, std::size_t count, std::uint64_t seed,
                                  const Limits& limits = {});

/// Uniform by rejection for n <= 8; above that a product L U P of random
/// unit-triangular factors and a random permutation.
Gf2Mat random_invertible(int n, std::mt19937_64& rng);

/// Full scan of all 2^(n*n) codes, keeping matrices of order 2^n - 1 and
/// bucketing them by characteristic polynomial.
struct Census {
    int n = 0;
    std::uint64_t scanned = 0;
    std::uint64_t total = 0;
    std::map<Gf2Poly, std::uint64_t> buckets;
    std::map<Gf2Poly, std::vector<std::uint64_t>> members;  // ascending codes
};

/// The code range is split across `threads` workers; the merged result does
/// not depend on the thread count.
Census brute_force_census(int n, const Limits& limits = {}, unsigned threads = 1);

// ---------------------------------------------------------------------------

struct CheckResult {
    std::string name;
    bool passed = false;
    std::string detail;
};

struct VerificationReport {
    int n = 0;
    std::vector<CheckResult> checks;

    bool passed() const;
};

/// Runs the brute-force census, centralizer scans, coset-walk classes and the
/// counting identities for dimension n, plus the reference n = 3 lists.
VerificationReport verify_dimension(int n, const Limits& limits = {}, unsigned threads = 1);

namespace reference {
// Reference data for n = 3.
extern const std::vector<std::uint64_t> kCentralizer396;
extern const std::vector<std::uint64_t> kClassOf172;  // x^3+x+1
extern const std::vector<std::uint64_t> kClassOf396;  // x^3+x^2+1
}  // namespace reference

}  // namespace gf2max
