#include "dhci/modes.hpp"

#include <fstream>
#include <stdexcept>
#include <utility>

#include <json.hpp>

#include "dhci/errors.hpp"
#include "dhci/markov.hpp"

namespace dhci {

namespace {

void check_size(int n, int max, const char* what) {
    if (n < 1 || n > max)
        throw std::out_of_range(std::string(what) + " size " + std::to_string(n) +
                                " outside [1, " + std::to_string(max) + "]");
}

}  // namespace

ModeInstance negation_mode(int n) {
    check_size(n, kMaxTableBits, "negation mode");
    const std::uint64_t states = std::uint64_t{1} << n;
    ModeInstance f{n, {}};
    f.truth_table.reserve(states);
    for (std::uint64_t j = 0; j < states; ++j)
        f.truth_table.push_back(static_cast<std::uint32_t>(states - 1 - j));
    return f;
}

ModeInstance identity_mode(int n) {
    check_size(n, kMaxTableBits, "identity mode");
    const std::uint64_t states = std::uint64_t{1} << n;
    ModeInstance f{n, {}};
    f.truth_table.reserve(states);
    for (std::uint64_t j = 0; j < states; ++j) f.truth_table.push_back(static_cast<std::uint32_t>(j));
    return f;
}

ModeInstance zero_mode(int n) {
    check_size(n, kMaxTableBits, "zero mode");
    ModeInstance f{n, std::vector<std::uint32_t>(std::size_t{1} << n, 0)};
    return f;
}

namespace {

// Decimal index of x with bit k removed, remaining bits in original order.
std::uint64_t drop_bit(std::uint64_t j, int k) {
    const std::uint64_t low = j & ((std::uint64_t{1} << (k - 1)) - 1);
    const std::uint64_t high = j >> k;
    return low | (high << (k - 1));
}

void validate_xor_tables(const std::vector<std::vector<std::uint8_t>>& g, int n) {
    check_size(n, kMaxTableBits, "xor-family mode");
    if (static_cast<int>(g.size()) != n)
        throw std::invalid_argument("xor family needs exactly n = " + std::to_string(n) +
                                    " tables, got " + std::to_string(g.size()));
    const std::size_t expected = std::size_t{1} << (n - 1);
    for (const auto& table : g)
        if (table.size() != expected)
            throw std::invalid_argument("xor table length " + std::to_string(table.size()) +
                                        ", expected 2^(n-1) = " + std::to_string(expected));
}

}  // namespace

ModeInstance instantiate_xor_mode(const std::vector<std::vector<std::uint8_t>>& g, int n) {
    validate_xor_tables(g, n);
    const std::uint64_t states = std::uint64_t{1} << n;
    ModeInstance f{n, {}};
    f.truth_table.reserve(states);
    for (std::uint64_t j = 0; j < states; ++j) {
        std::uint64_t value = 0;
        for (int k = 1; k <= n; ++k) {
            const std::uint64_t own = (j >> (k - 1)) & 1u;
            const std::uint64_t bit = own ^ (g[k - 1][drop_bit(j, k)] ? 1u : 0u);
            value |= bit << (k - 1);
        }
        f.truth_table.push_back(static_cast<std::uint32_t>(value));
    }
    return f;
}

Mode Mode::negation() { return Mode(Kind::Negation, 0); }
Mode Mode::identity() { return Mode(Kind::Identity, 0); }
Mode Mode::zero() { return Mode(Kind::Zero, 0); }

Mode Mode::table(ModeInstance instance) {
    validate_instance(instance);
    Mode m(Kind::Table, instance.n);
    m.instance_ = std::move(instance);
    return m;
}

Mode Mode::xor_family(int n, std::vector<std::vector<std::uint8_t>> g) {
    validate_xor_tables(g, n);
    Mode m(Kind::XorFamily, n);
    m.g_ = std::move(g);
    return m;
}

bool Mode::size_parametric() const {
    return kind_ == Kind::Negation || kind_ == Kind::Identity || kind_ == Kind::Zero;
}

bool Mode::accepts(int n) const { return size_parametric() ? n >= 1 : n == native_n_; }

bool Mode::component(int n, int i, const Configuration& x) const {
    if (!accepts(n))
        throw ContractError("mode " + name() + " does not instantiate at size " +
                            std::to_string(n));
    if (x.length() != n) throw std::invalid_argument("configuration length != instantiation size");
    if (i < 1 || i > n) throw std::out_of_range("direction outside [1, n]");
    switch (kind_) {
        case Kind::Negation:
            return !x.bit(i);
        case Kind::Identity:
            return x.bit(i);
        case Kind::Zero:
            return false;
        case Kind::Table:
            return component_bit(instance_, i, x);
        case Kind::XorFamily: {
            std::uint64_t rest = 0;
            int pos = 0;
            for (int b = 1; b <= n; ++b) {
                if (b == i) continue;
                rest |= (x.bit(b) ? std::uint64_t{1} : 0) << pos;
                ++pos;
            }
            return x.bit(i) != (g_[i - 1][rest] != 0);
        }
    }
    return false;
}

ModeInstance Mode::instantiate(int n) const {
    if (!accepts(n))
        throw ContractError("mode " + name() + " does not instantiate at size " +
                            std::to_string(n));
    switch (kind_) {
        case Kind::Negation:
            return negation_mode(n);
        case Kind::Identity:
            return identity_mode(n);
        case Kind::Zero:
            return zero_mode(n);
        case Kind::Table:
            return instance_;
        case Kind::XorFamily:
            return instantiate_xor_mode(g_, n);
    }
    throw std::logic_error("unreachable");
}

std::string Mode::name() const {
    switch (kind_) {
        case Kind::Negation:
            return "negation";
        case Kind::Identity:
            return "identity";
        case Kind::Zero:
            return "zero";
        case Kind::Table:
            return "table[n=" + std::to_string(native_n_) + "]";
        case Kind::XorFamily:
            return "xor-family[n=" + std::to_string(native_n_) + "]";
    }
    return "?";
}

Configuration iterate(const Mode& mode, IndexSource& s, Configuration x0, std::uint64_t q) {
    const int n = x0.length();
    if (!mode.accepts(n))
        throw ContractError("mode " + mode.name() + " does not instantiate at size " +
                            std::to_string(n));
    return iterate_with([&mode, n](int i, const Configuration& x) { return mode.component(n, i, x); },
                        s, std::move(x0), q);
}

GeneratedMode generate_valid_mode(int n, std::uint64_t seed, int max_tries) {
    check_size(n, kMaxAnalysisBits, "generated mode");
    if (max_tries < 1) throw std::invalid_argument("max_tries must be >= 1");

    RawStream raw(seed);
    const std::size_t table_len = std::size_t{1} << (n - 1);
    for (int tries = 1; tries <= max_tries; ++tries) {
        std::vector<std::vector<std::uint8_t>> g(static_cast<std::size_t>(n));
        for (auto& table : g) {
            table.resize(table_len);
            for (auto& bit : table) bit = raw.next_bit() ? 1 : 0;
        }
        ModeInstance candidate = instantiate_xor_mode(g, n);
        if (!is_strongly_connected(build_iteration_graph(candidate))) continue;
        if (n >= 2 && !period_and_primitivity(build_markov(candidate)).primitive) continue;
        return {std::move(candidate), tries};
    }
    throw GenerationError("no valid mode after " + std::to_string(max_tries) + " tries",
                          max_tries);
}

void save_mode(const ModeInstance& f, const std::string& path) {
    validate_instance(f);
    nlohmann::ordered_json doc;
    doc["n"] = f.n;
    doc["truth_table"] = f.truth_table;
    std::ofstream out(path, std::ios::binary);
    if (!out) throw IoError("cannot open " + path + " for writing");
    out << doc.dump() << '\n';
    if (!out) throw IoError("write failed: " + path);
}

ModeInstance load_mode(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw IoError("cannot open " + path);
    nlohmann::json doc;
    try {
        in >> doc;
    } catch (const nlohmann::json::exception& e) {
        throw FormatError("mode file " + path + ": " + e.what());
    }
    if (!doc.is_object() || !doc.contains("n") || !doc.contains("truth_table") ||
        !doc["n"].is_number_integer() || !doc["truth_table"].is_array())
        throw FormatError("mode file " + path + ": expected {\"n\", \"truth_table\"}");
    const std::int64_t n = doc["n"].get<std::int64_t>();
    if (n < 1 || n > kMaxTableBits)
        throw FormatError("mode file " + path + ": n outside [1, " +
                          std::to_string(kMaxTableBits) + "]");
    const std::uint64_t states = std::uint64_t{1} << n;
    const auto& table = doc["truth_table"];
    if (table.size() != states)
        throw FormatError("mode file " + path + ": table length " + std::to_string(table.size()) +
                          ", expected " + std::to_string(states));
    ModeInstance f{static_cast<int>(n), {}};
    f.truth_table.reserve(states);
    for (const auto& entry : table) {
        if (!entry.is_number_integer())
            throw FormatError("mode file " + path + ": non-integer table entry");
        const std::int64_t value = entry.get<std::int64_t>();
        if (value < 0 || static_cast<std::uint64_t>(value) >= states)
            throw std::out_of_range("mode file " + path + ": entry " + std::to_string(value) +
                                    " outside [0, 2^n)");
        f.truth_table.push_back(static_cast<std::uint32_t>(value));
    }
    return f;
}

}  // namespace dhci
