#pragma once

// Facet-list (".scx") reading and canonical writing.
//
// Format: UTF-8 text, '#' starts a comment running to end of line, every
// remaining non-blank line lists the whitespace-separated labels of one facet.

#include <algorithm>
#include <filesystem>
#include <fstream>
#include <set>
#include <sstream>
#include <string>
#include <string_view>
#include <vector>

#include "localhom/complex.hpp"
#include "localhom/error.hpp"

namespace localhom {

/// Parses a facet-list document. An empty document yields the empty complex.
inline SimplicialComplex parse_complex(std::string_view text) {
    std::vector<std::vector<std::string>> facets;
    std::size_t line_no = 0;
    std::size_t pos = 0;
    while (pos <= text.size()) {
        auto end = text.find('\n', pos);
        if (end == std::string_view::npos) end = text.size();
        auto line = text.substr(pos, end - pos);
        pos = end + 1;
        ++line_no;
        if (auto hash = line.find('#'); hash != std::string_view::npos) line = line.substr(0, hash);

        std::istringstream tokens{std::string(line)};
        std::vector<std::string> facet;
        std::set<std::string> seen;
        for (std::string tok; tokens >> tok;) {
            if (!seen.insert(tok).second)
                throw MalformedFacet("line " + std::to_string(line_no) + ": vertex '" + tok +
                                     "' repeated within one facet");
            facet.push_back(std::move(tok));
        }
        if (!facet.empty()) facets.push_back(std::move(facet));
        if (end == text.size()) break;
    }
    return SimplicialComplex::from_labeled_facets(facets);
}

inline SimplicialComplex read_complex(const std::filesystem::path& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw Error("cannot open '" + path.string() + "'");
    std::ostringstream buf;
    buf << in.rdbuf();
    return parse_complex(buf.str());
}

/// Facets as sorted label lists, sorted lexicographically.
inline std::vector<std::vector<std::string>> canonical_facets(const SimplicialComplex& k) {
    std::vector<std::vector<std::string>> out;
    for (const auto& f : k.facets()) {
        std::vector<std::string> row;
        for (auto v : f.vertices()) row.push_back(k.label(v));
        std::sort(row.begin(), row.end());
        out.push_back(std::move(row));
    }
    std::sort(out.begin(), out.end());
    return out;
}

/// Canonical serialization: one facet per line, byte-for-byte reproducible.
inline std::string serialize(const SimplicialComplex& k) {
    std::string out;
    for (const auto& row : canonical_facets(k)) {
        for (std::size_t i = 0; i < row.size(); ++i) {
            if (i) out += ' ';
            out += row[i];
        }
        out += '\n';
    }
    return out;
}

inline void write_complex(const std::filesystem::path& path, const SimplicialComplex& k) {
    std::ofstream out(path, std::ios::binary | std::ios::trunc);
    if (!out) throw Error("cannot write '" + path.string() + "'");
    out << serialize(k);
}

}  // namespace localhom
