#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "regtri/graph.hpp"
#include "regtri/rational.hpp"

namespace regtri {

enum class ParamError {
    ok,
    parity,   // n not a positive odd integer, or k not a positive even integer
    k_low,    // k <= 2n/5
    k_high,   // k >= n/2
};

const char* param_error_name(ParamError e);

struct ParamValidationError : std::invalid_argument {
    ParamValidationError(ParamError code, const std::string& what)
        : std::invalid_argument(what), code(code) {}
    ParamError code;
};

// Validated (n, k): n odd, k even, 2n/5 < k < n/2. Carries the derived
// factor degrees of the extremal construction.
struct ExtremalParams {
    long long n = 0;
    long long k = 0;

    long long half() const { return (n - 1) / 2; }       // |X| = |Y|
    long long r1() const { return (n - 2 * k + 1) / 2; }  // factor degree inside A x B
    long long r2() const { return (n - 2 * k - 1) / 2; }  // factor degree outside
};

ParamError check_params(long long n, long long k);
ExtremalParams validate_params(long long n, long long k);  // throws ParamValidationError

// Exact k(3k-n-1)/4 evaluated as (k/2) * ((3k-n-1)/2); overflow throws.
long long formula_t(const ExtremalParams& p);

struct CorollaryFloor {
    Rat value;                   // (n+1)^2 / 50
    bool equality_attainable;    // 5 | (n+1)
    long long k_star;            // 2(n+1)/5 when attainable, 0 otherwise
};

CorollaryFloor corollary_floor(long long n);  // n odd

// Bipartite r-regular factor between two parts of size m (local indices:
// left i, right j, both in [0, m)).
struct FactorSpec {
    enum class Mode { circulant, random };

    int m = 0;
    int r = 0;
    Mode mode = Mode::circulant;
    std::vector<int> offsets;  // circulant: r distinct residues mod m
    std::uint64_t seed = 0;    // random mode

    static FactorSpec circulant(int m, int r);  // default offsets 0..r-1
    static FactorSpec circulant(int m, int r, std::vector<int> offsets);
    static FactorSpec random(int m, int r, std::uint64_t seed);
};

// Edges of the factor in part-local coordinates: (left, right).
std::vector<VertexPair> bipartite_factor(const FactorSpec& spec);

// Member of the extremal family. Vertex layout: X = [0, (n-1)/2),
// Y = [(n-1)/2, n-1), apex = n-1, A = first k/2 of X, B = first k/2 of Y.
// The result is checked to be k-regular with exactly formula_t(p) triangles.
Graph build_extremal(const ExtremalParams& p, const FactorSpec& factor1, const FactorSpec& factor2);
Graph build_extremal(const ExtremalParams& p);  // circulant factors
Graph build_extremal_random(const ExtremalParams& p, std::uint64_t seed);

int apex_vertex(const ExtremalParams& p);

// k-regular simple graph on n vertices: pairing model with restart, falling
// back to switch-repair after the retry cap. Deterministic given seed.
Graph random_regular(int n, int k, std::uint64_t seed);

}  // namespace regtri
