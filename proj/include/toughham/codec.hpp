#pragma once

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <string_view>

#include "toughham/graph.hpp"

namespace toughham {

enum class WireFormat { graph6, sparse6, edgelist };

std::string to_string(WireFormat f);

struct GraphRecord {
    Graph graph;
    std::optional<int> source_line; // 1-based line in the source stream
    WireFormat format = WireFormat::graph6;
};

// graph6, bit-exact per the published format: size prefix N(n), then the
// upper triangle of the adjacency matrix column-major, 6 bits per byte,
// each byte offset by 63. An optional ">>graph6<<" header is stripped.
Graph parse_graph6(std::string_view line);
std::string encode_graph6(const Graph& g);

// sparse6 (read-only): ':' prefix, size, then (b, x) pair stream.
Graph parse_sparse6(std::string_view line);

// The shared size prefix N(n): 1 byte for n <= 62, 4 bytes for n <= 258047,
// 8 bytes up to 68719476735. parse advances `pos`.
std::string encode_size_prefix(std::uint64_t n);
std::uint64_t parse_size_prefix(std::string_view text, std::size_t& pos);

// Plain edge list: an "n m" header line, then m lines "u v". Blank lines and
// lines starting with '#' are skipped. Errors carry 1-based line numbers.
Graph parse_edgelist(std::string_view text);
std::string encode_edgelist(const Graph& g);

// Lazy reader over a byte stream. Auto-detects per record by first byte
// ('>' header, ':' sparse6, ASCII digit for an edge list, size byte for
// graph6) unless a format is forced. An edge list is a single record.
class GraphStream {
public:
    explicit GraphStream(std::istream& in, std::optional<WireFormat> format = {});

    // Next record, or nullopt at end of stream. Throws ParseError (with the
    // offending line number) on the first malformed record.
    std::optional<GraphRecord> next();

private:
    std::istream& in_;
    std::optional<WireFormat> forced_;
    int line_ = 0;
    bool done_ = false;
};

} // namespace toughham
