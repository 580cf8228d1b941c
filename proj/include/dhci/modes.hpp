#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "dhci/dynamics.hpp"

namespace dhci {

ModeInstance negation_mode(int n);  // 1 <= n <= kMaxTableBits
ModeInstance identity_mode(int n);
ModeInstance zero_mode(int n);  // constant-zero map; the negative control

// f_k(x) = x_k XOR g_k(x with bit k removed). The remaining bits keep their
// order and g_k is indexed by their decimal value, so each table has length
// 2^(n-1). Every direction map F_f(k, .) is then a bijection, which makes the
// transition matrix an average of permutation matrices: doubly stochastic by
// construction.
ModeInstance instantiate_xor_mode(const std::vector<std::vector<std::uint8_t>>& g, int n);

// A mode: a size-indexed family of Boolean maps. Parametric kinds accept any
// size; table-backed kinds only their own n.
class Mode {
public:
    enum class Kind { Negation, Identity, Zero, Table, XorFamily };

    static Mode negation();
    static Mode identity();
    static Mode zero();
    static Mode table(ModeInstance instance);
    static Mode xor_family(int n, std::vector<std::vector<std::uint8_t>> g);

    Kind kind() const { return kind_; }
    bool size_parametric() const;
    bool accepts(int n) const;
    int native_size() const { return native_n_; }  // 0 for parametric kinds

    // f_n,i(x); evaluated without materializing a table, so parametric kinds
    // work at sizes far beyond kMaxTableBits.
    bool component(int n, int i, const Configuration& x) const;

    // Materialized truth table at size n.
    ModeInstance instantiate(int n) const;

    std::string name() const;

private:
    Mode(Kind kind, int native_n) : kind_(kind), native_n_(native_n) {}

    Kind kind_;
    int native_n_;
    ModeInstance instance_;                     // Table
    std::vector<std::vector<std::uint8_t>> g_;  // XorFamily
};

// Asynchronous iteration directly on the mode's component function.
Configuration iterate(const Mode& mode, IndexSource& s, Configuration x0, std::uint64_t q);

struct GeneratedMode {
    ModeInstance instance;
    int tries = 0;
};

// Rejection-samples xor-family modes from one continuous raw stream until a
// candidate has a strongly connected iteration graph and (n >= 2) a primitive
// transition matrix. At n = 1 strong connectivity alone decides: with a
// single update direction every transition matrix is a permutation, so no
// primitive candidate exists and the negation map is the only valid one.
// Deterministic in (n, seed).
GeneratedMode generate_valid_mode(int n, std::uint64_t seed, int max_tries);

// Mode file: UTF-8 JSON {"n": <int>, "truth_table": [<int>, ...]}.
void save_mode(const ModeInstance& f, const std::string& path);
ModeInstance load_mode(const std::string& path);

}  // namespace dhci
