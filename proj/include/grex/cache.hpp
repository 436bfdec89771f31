#pragma once

#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include "seed.hpp"

namespace grex {

struct CacheError : std::runtime_error {
    explicit CacheError(const std::string& what) : std::runtime_error(what) {}
};

// ---- length-prefixed record stream ------------------------------------------
//
// A cache file is a flat sequence of UTF-8 records, each written as the
// decimal byte length, a newline, the payload, and a trailing newline.  The
// first record identifies the schema.

inline void write_record(std::ostream& out, const std::string& payload) {
    out << payload.size() << "\n" << payload << "\n";
}

inline bool read_record(std::istream& in, std::string& payload) {
    std::string len_line;
    if (!std::getline(in, len_line)) return false;
    std::size_t len = 0;
    try {
        len = std::stoul(len_line);
    } catch (...) {
        throw CacheError("bad record length: " + len_line);
    }
    payload.resize(len);
    in.read(payload.data(), static_cast<std::streamsize>(len));
    if (static_cast<std::size_t>(in.gcount()) != len) throw CacheError("truncated record");
    char nl = 0;
    in.get(nl);
    if (nl != '\n') throw CacheError("record not newline-terminated");
    return true;
}

// ---- exchange-graph cache ----------------------------------------------------

inline constexpr const char* kCacheSchema = "grex-graph 1";

struct SeedRecord {
    std::vector<std::string> cluster;          // variable names, column order
    std::vector<std::string> coeffs;           // frozen variable names, row order
    std::vector<std::vector<int>> mat;         // full extended matrix
    bool operator==(const SeedRecord&) const = default;
};

struct GraphCache {
    int k = 0, n = 0;
    bool closed = false;
    // canonical Laurent expansion of every variable, in registry order
    std::vector<std::pair<std::string, std::string>> variables;
    std::vector<SeedRecord> seeds;
    std::vector<std::vector<int>> adj;  // seed adjacency, index-aligned
    bool operator==(const GraphCache&) const = default;
};

inline GraphCache make_cache(const ExchangeGraph& g, const Registry& reg) {
    GraphCache c;
    c.k = reg.k;
    c.n = reg.n;
    c.closed = g.closed;
    for (VarId v : reg.all_variables()) c.variables.push_back({v.to_string(), lp_to_string(reg.value(v))});
    for (auto& s : g.seeds) {
        SeedRecord r;
        for (VarId v : s.cluster) r.cluster.push_back(v.to_string());
        for (VarId v : s.coeffs) r.coeffs.push_back(v.to_string());
        r.mat = s.mat.e;
        c.seeds.push_back(std::move(r));
    }
    c.adj = g.adj;
    return c;
}

namespace detail {

inline std::string join(const std::vector<std::string>& parts, char sep) {
    std::string s;
    for (std::size_t i = 0; i < parts.size(); ++i) {
        if (i) s += sep;
        s += parts[i];
    }
    return s;
}

inline std::vector<std::string> split_ws(const std::string& s) {
    std::istringstream in(s);
    std::vector<std::string> out;
    std::string tok;
    while (in >> tok) out.push_back(tok);
    return out;
}

}  // namespace detail

inline void write_cache(const std::string& path, const GraphCache& c) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw CacheError("cannot open for writing: " + path);
    write_record(out, kCacheSchema);
    write_record(out, "k " + std::to_string(c.k) + " n " + std::to_string(c.n) + " closed " +
                          (c.closed ? "1" : "0"));
    for (auto& [name, poly] : c.variables) write_record(out, "var " + name + " " + poly);
    for (auto& s : c.seeds) {
        std::string rec = "seed " + detail::join(s.cluster, ' ') + " ; " + detail::join(s.coeffs, ' ') + " ;";
        for (auto& row : s.mat)
            for (int e : row) rec += " " + std::to_string(e);
        write_record(out, rec);
    }
    for (auto& nb : c.adj) {
        std::string rec = "adj";
        for (int j : nb) rec += " " + std::to_string(j);
        write_record(out, rec);
    }
    if (!out) throw CacheError("write failed: " + path);
}

inline GraphCache read_cache(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw CacheError("cannot open for reading: " + path);
    std::string rec;
    if (!read_record(in, rec) || rec != kCacheSchema) throw CacheError("unknown schema: " + rec);
    GraphCache c;
    if (!read_record(in, rec)) throw CacheError("missing header");
    {
        auto toks = detail::split_ws(rec);
        if (toks.size() != 6 || toks[0] != "k" || toks[2] != "n" || toks[4] != "closed")
            throw CacheError("bad header: " + rec);
        c.k = std::stoi(toks[1]);
        c.n = std::stoi(toks[3]);
        c.closed = toks[5] == "1";
    }
    while (read_record(in, rec)) {
        auto sp = rec.find(' ');
        std::string kind = rec.substr(0, sp);
        std::string rest = sp == std::string::npos ? "" : rec.substr(sp + 1);
        if (kind == "var") {
            auto sp2 = rest.find(' ');
            if (sp2 == std::string::npos) throw CacheError("bad var record: " + rec);
            c.variables.push_back({rest.substr(0, sp2), rest.substr(sp2 + 1)});
        } else if (kind == "seed") {
            SeedRecord s;
            auto toks = detail::split_ws(rest);
            std::size_t i = 0;
            for (; i < toks.size() && toks[i] != ";"; ++i) s.cluster.push_back(toks[i]);
            if (i == toks.size()) throw CacheError("bad seed record: " + rec);
            for (++i; i < toks.size() && toks[i] != ";"; ++i) s.coeffs.push_back(toks[i]);
            if (i == toks.size()) throw CacheError("bad seed record: " + rec);
            std::vector<int> flat;
            for (++i; i < toks.size(); ++i) flat.push_back(std::stoi(toks[i]));
            std::size_t nrows = s.cluster.size() + s.coeffs.size();
            std::size_t ncols = s.cluster.size();
            if (flat.size() != nrows * ncols) throw CacheError("bad seed matrix: " + rec);
            s.mat.assign(nrows, std::vector<int>(ncols));
            for (std::size_t r = 0; r < nrows; ++r)
                for (std::size_t col = 0; col < ncols; ++col) s.mat[r][col] = flat[r * ncols + col];
            c.seeds.push_back(std::move(s));
        } else if (kind == "adj") {
            std::vector<int> nb;
            for (auto& t : detail::split_ws(rest)) nb.push_back(std::stoi(t));
            c.adj.push_back(std::move(nb));
        } else {
            throw CacheError("unknown record kind: " + kind);
        }
    }
    return c;
}

}  // namespace grex
