#ifndef CYCLEX_CORE_HPP
#define CYCLEX_CORE_HPP

#include <cstdint>
#include <cstdlib>
#include <stdexcept>
#include <string>
#include <vector>

namespace cyclex {

using VertexId = int;
using EdgeId = int;

// Thrown when an input exceeds the exhaustive-search vertex cap.
struct CapExceeded : std::runtime_error {
    explicit CapExceeded(const std::string& what) : std::runtime_error(what) {}
};

// Thrown when an operation's precondition is violated (bad shore, wrong degree, ...).
struct PreconditionError : std::invalid_argument {
    explicit PreconditionError(const std::string& what) : std::invalid_argument(what) {}
};

// Thrown on malformed input files.
struct ParseError : std::runtime_error {
    explicit ParseError(const std::string& what) : std::runtime_error(what) {}
};

// Thrown when an internal consistency check fails (bug sentinel, never user error).
struct InternalError : std::logic_error {
    explicit InternalError(const std::string& what) : std::logic_error(what) {}
};

// Vertex cap for the exhaustive operations. Overridable via CYCLEX_DESK_CAP.
inline int desk_cap() {
    static const int cap = [] {
        if (const char* s = std::getenv("CYCLEX_DESK_CAP")) {
            int v = std::atoi(s);
            if (v > 0 && v <= 64) return v;
        }
        return 24;
    }();
    return cap;
}

inline void require_desk_cap(int n, const char* op) {
    if (n > desk_cap())
        throw CapExceeded(std::string(op) + ": " + std::to_string(n) +
                          " vertices exceeds cap " + std::to_string(desk_cap()));
}

// ---- vertex masks (n <= 64) ----

using VertexMask = std::uint64_t;

inline VertexMask vbit(VertexId v) { return VertexMask{1} << v; }
inline bool mask_has(VertexMask m, VertexId v) { return (m >> v) & 1; }
inline int mask_count(VertexMask m) { return __builtin_popcountll(m); }
inline VertexId mask_first(VertexMask m) { return __builtin_ctzll(m); }
inline VertexMask full_mask(int n) { return n >= 64 ? ~VertexMask{0} : (VertexMask{1} << n) - 1; }

// ---- growable bit row (edge sets, GF(2) rows) ----

struct BitRow {
    std::vector<std::uint64_t> w;

    BitRow() = default;
    explicit BitRow(int nbits) : w((nbits + 63) / 64, 0) {}

    void ensure(int bit) {
        if (bit / 64 >= (int)w.size()) w.resize(bit / 64 + 1, 0);
    }
    void set(int bit) {
        ensure(bit);
        w[bit / 64] |= std::uint64_t{1} << (bit % 64);
    }
    void reset(int bit) {
        if (bit / 64 < (int)w.size()) w[bit / 64] &= ~(std::uint64_t{1} << (bit % 64));
    }
    bool test(int bit) const {
        return bit / 64 < (int)w.size() && ((w[bit / 64] >> (bit % 64)) & 1);
    }
    bool any() const {
        for (auto x : w)
            if (x) return true;
        return false;
    }
    int count() const {
        int c = 0;
        for (auto x : w) c += __builtin_popcountll(x);
        return c;
    }
    void operator^=(const BitRow& o) {
        if (o.w.size() > w.size()) w.resize(o.w.size(), 0);
        for (size_t i = 0; i < o.w.size(); ++i) w[i] ^= o.w[i];
    }
    bool intersects(const BitRow& o) const {
        size_t k = std::min(w.size(), o.w.size());
        for (size_t i = 0; i < k; ++i)
            if (w[i] & o.w[i]) return true;
        return false;
    }
    int lowest() const {  // -1 if empty
        for (size_t i = 0; i < w.size(); ++i)
            if (w[i]) return (int)(i * 64) + __builtin_ctzll(w[i]);
        return -1;
    }
    friend bool operator==(const BitRow& a, const BitRow& b) {
        size_t k = std::max(a.w.size(), b.w.size());
        for (size_t i = 0; i < k; ++i) {
            std::uint64_t x = i < a.w.size() ? a.w[i] : 0;
            std::uint64_t y = i < b.w.size() ? b.w[i] : 0;
            if (x != y) return false;
        }
        return true;
    }
};

}  // namespace cyclex

#endif
