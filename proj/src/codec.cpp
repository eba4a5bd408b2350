#include "toughham/codec.hpp"

#include <algorithm>
#include <bit>
#include <cctype>
#include <istream>
#include <sstream>
#include <vector>

#include "toughham/errors.hpp"

namespace toughham {

namespace {

constexpr std::string_view kGraph6Header = ">>graph6<<";
constexpr std::string_view kSparse6Header = ">>sparse6<<";

// Decoding builds an n x n bit matrix, so refuse sizes that would not fit
// in memory anyway.
constexpr std::uint64_t kMaxDecodableN = 32768;

int byte_at(std::string_view text, std::size_t pos) {
    return static_cast<unsigned char>(text[pos]);
}

void check_data_byte(std::string_view text, std::size_t pos) {
    if (pos >= text.size()) throw ParseError("truncated input", 0, static_cast<int>(text.size()));
    const int c = byte_at(text, pos);
    if (c < 63 || c > 126)
        throw ParseError("byte out of graph6 range [63,126]", 0, static_cast<int>(pos));
}

std::string_view strip_header(std::string_view line, std::string_view header) {
    if (line.substr(0, header.size()) == header) line.remove_prefix(header.size());
    return line;
}

// Reads groups of 6 bits from characters offset by 63.
class BitReader {
public:
    BitReader(std::string_view text, std::size_t start) : text_(text), pos_(start) {}

    std::size_t byte_pos() const { return pos_; }
    std::uint64_t bits_left() const { return (text_.size() - pos_) * 6 - used_; }

    std::uint64_t take(int count) {
        std::uint64_t out = 0;
        for (int i = 0; i < count; ++i) {
            if (used_ == 0) check_data_byte(text_, pos_);
            const int c = byte_at(text_, pos_) - 63;
            out = (out << 1) | ((c >> (5 - used_)) & 1);
            if (++used_ == 6) {
                used_ = 0;
                ++pos_;
            }
        }
        return out;
    }

private:
    std::string_view text_;
    std::size_t pos_;
    int used_ = 0;
};

class BitWriter {
public:
    void push(std::uint64_t bits, int count) {
        for (int i = count - 1; i >= 0; --i) {
            cur_ = (cur_ << 1) | ((bits >> i) & 1);
            if (++used_ == 6) flush_byte();
        }
    }

    // Zero-pads the last partial byte.
    std::string finish() {
        if (used_ > 0) {
            cur_ <<= (6 - used_);
            used_ = 6;
            flush_byte();
        }
        return std::move(out_);
    }

private:
    void flush_byte() {
        out_.push_back(static_cast<char>(cur_ + 63));
        cur_ = 0;
        used_ = 0;
    }

    std::string out_;
    int cur_ = 0;
    int used_ = 0;
};

void check_decodable(std::uint64_t n) {
    if (n > kMaxDecodableN)
        throw ParseError("graph too large to decode (n = " + std::to_string(n) + ", cap " +
                         std::to_string(kMaxDecodableN) + ")");
}

} // namespace

std::string to_string(WireFormat f) {
    switch (f) {
    case WireFormat::graph6: return "graph6";
    case WireFormat::sparse6: return "sparse6";
    case WireFormat::edgelist: return "edgelist";
    }
    return "?";
}

std::string encode_size_prefix(std::uint64_t n) {
    std::string out;
    if (n <= 62) {
        out.push_back(static_cast<char>(n + 63));
    } else if (n <= 258047) {
        out.push_back(126);
        for (int shift = 12; shift >= 0; shift -= 6)
            out.push_back(static_cast<char>(((n >> shift) & 63) + 63));
    } else if (n <= 68719476735ULL) {
        out.push_back(126);
        out.push_back(126);
        for (int shift = 30; shift >= 0; shift -= 6)
            out.push_back(static_cast<char>(((n >> shift) & 63) + 63));
    } else {
        throw std::invalid_argument("vertex count exceeds the 8-byte size prefix (max 68719476735)");
    }
    return out;
}

std::uint64_t parse_size_prefix(std::string_view text, std::size_t& pos) {
    check_data_byte(text, pos);
    int c = byte_at(text, pos);
    if (c < 126) {
        ++pos;
        return static_cast<std::uint64_t>(c - 63);
    }
    ++pos; // first 126
    check_data_byte(text, pos);
    int groups = 3;
    if (byte_at(text, pos) == 126) {
        ++pos;
        groups = 6;
    }
    std::uint64_t n = 0;
    for (int i = 0; i < groups; ++i) {
        check_data_byte(text, pos);
        n = (n << 6) | static_cast<std::uint64_t>(byte_at(text, pos) - 63);
        ++pos;
    }
    return n;
}

Graph parse_graph6(std::string_view line) {
    line = strip_header(line, kGraph6Header);
    if (line.empty()) throw ParseError("empty graph6 line", 0, 0);
    std::size_t pos = 0;
    const std::uint64_t n64 = parse_size_prefix(line, pos);
    check_decodable(n64);
    const int n = static_cast<int>(n64);

    const std::uint64_t bits = n64 * (n64 - 1) / 2;
    const std::size_t body_bytes = static_cast<std::size_t>((bits + 5) / 6);
    if (line.size() < pos + body_bytes)
        throw ParseError("truncated graph6 bit stream", 0, static_cast<int>(line.size()));
    if (line.size() > pos + body_bytes)
        throw ParseError("trailing garbage after graph6 data", 0, static_cast<int>(pos + body_bytes));

    BitReader reader(line, pos);
    GraphBuilder b(n);
    for (int v = 1; v < n; ++v)
        for (int u = 0; u < v; ++u)
            if (reader.take(1)) b.add_edge(u, v);
    return b.build();
}

std::string encode_graph6(const Graph& g) {
    const int n = g.vertex_count();
    std::string out = encode_size_prefix(static_cast<std::uint64_t>(n));
    BitWriter w;
    for (int v = 1; v < n; ++v)
        for (int u = 0; u < v; ++u)
            w.push(g.has_edge(u, v) ? 1 : 0, 1);
    out += w.finish();
    return out;
}

Graph parse_sparse6(std::string_view line) {
    line = strip_header(line, kSparse6Header);
    if (line.empty() || line[0] != ':')
        throw ParseError("sparse6 line must start with ':'", 0, 0);
    std::size_t pos = 1;
    const std::uint64_t n64 = parse_size_prefix(line, pos);
    check_decodable(n64);
    const int n = static_cast<int>(n64);
    const int k = n <= 1 ? 1 : std::bit_width(n64 - 1);

    // Remaining bytes must all be in data range; partial trailing groups and
    // out-of-range x values are padding.
    for (std::size_t i = pos; i < line.size(); ++i) check_data_byte(line, i);

    BitReader reader(line, pos);
    GraphBuilder b(n);
    std::uint64_t v = 0;
    while (reader.bits_left() >= static_cast<std::uint64_t>(k) + 1) {
        const std::uint64_t bit = reader.take(1);
        const std::uint64_t x = reader.take(k);
        if (bit) ++v;
        if (v >= n64) break;
        if (x >= n64) break;
        if (x > v) {
            v = x;
        } else if (x == v) {
            throw ParseError("sparse6 stream encodes a loop; only simple graphs are supported", 0,
                             static_cast<int>(reader.byte_pos()));
        } else if (!b.has_edge(static_cast<int>(x), static_cast<int>(v))) {
            b.add_edge(static_cast<int>(x), static_cast<int>(v));
        }
    }
    return b.build();
}

namespace {

struct Token {
    long long value;
};

// Splits into significant lines, dropping blanks and '#' comments but
// remembering original 1-based numbers.
std::vector<std::pair<int, std::string_view>> significant_lines(std::string_view text) {
    std::vector<std::pair<int, std::string_view>> out;
    int line_no = 0;
    std::size_t start = 0;
    while (start <= text.size()) {
        std::size_t end = text.find('\n', start);
        if (end == std::string_view::npos) end = text.size();
        std::string_view line = text.substr(start, end - start);
        ++line_no;
        if (!line.empty() && line.back() == '\r') line.remove_suffix(1);
        const auto first = line.find_first_not_of(" \t");
        if (first != std::string_view::npos && line[first] != '#')
            out.emplace_back(line_no, line);
        if (end == text.size()) break;
        start = end + 1;
    }
    return out;
}

std::vector<long long> parse_ints(std::string_view line, int line_no, std::size_t expect) {
    std::istringstream in{std::string(line)};
    std::vector<long long> out;
    long long x;
    while (in >> x) out.push_back(x);
    std::string rest;
    in.clear();
    in >> rest;
    if (!rest.empty() || out.size() != expect)
        throw ParseError("expected " + std::to_string(expect) + " integers", line_no);
    return out;
}

} // namespace

Graph parse_edgelist(std::string_view text) {
    const auto lines = significant_lines(text);
    if (lines.empty()) throw ParseError("missing \"n m\" header line", 1);

    const auto header = parse_ints(lines[0].second, lines[0].first, 2);
    const long long n = header[0];
    const long long m = header[1];
    if (n < 0 || m < 0) throw ParseError("negative count in header", lines[0].first);
    check_decodable(static_cast<std::uint64_t>(n));
    if (lines.size() - 1 < static_cast<std::size_t>(m))
        throw ParseError("edge list ends after " + std::to_string(lines.size() - 1) + " of " +
                             std::to_string(m) + " edges",
                         lines.back().first);
    if (lines.size() - 1 > static_cast<std::size_t>(m))
        throw ParseError("trailing garbage after " + std::to_string(m) + " edges",
                         lines[1 + static_cast<std::size_t>(m)].first);

    GraphBuilder b(static_cast<int>(n));
    for (long long i = 0; i < m; ++i) {
        const auto& [line_no, line] = lines[1 + static_cast<std::size_t>(i)];
        const auto uv = parse_ints(line, line_no, 2);
        const long long u = uv[0], v = uv[1];
        if (u < 0 || u >= n || v < 0 || v >= n)
            throw ParseError("vertex id out of range [0, " + std::to_string(n) + ")", line_no);
        if (u == v) throw ParseError("loop rejected", line_no);
        if (b.has_edge(static_cast<int>(u), static_cast<int>(v)))
            throw ParseError("duplicate edge", line_no);
        b.add_edge(static_cast<int>(u), static_cast<int>(v));
    }
    return b.build();
}

std::string encode_edgelist(const Graph& g) {
    std::string out = std::to_string(g.vertex_count()) + " " + std::to_string(g.edge_count()) + "\n";
    for (int u = 0; u < g.vertex_count(); ++u)
        for (int v = u + 1; v < g.vertex_count(); ++v)
            if (g.has_edge(u, v)) out += std::to_string(u) + " " + std::to_string(v) + "\n";
    return out;
}

GraphStream::GraphStream(std::istream& in, std::optional<WireFormat> format)
    : in_(in), forced_(format) {}

std::optional<GraphRecord> GraphStream::next() {
    if (done_) return std::nullopt;

    if (forced_ == WireFormat::edgelist) {
        std::ostringstream all;
        all << in_.rdbuf();
        done_ = true;
        return GraphRecord{parse_edgelist(all.str()), 1, WireFormat::edgelist};
    }

    std::string line;
    while (std::getline(in_, line)) {
        ++line_;
        if (!line.empty() && line.back() == '\r') line.pop_back();
        std::string_view view = line;
        if (view.substr(0, kSparse6Header.size()) == kSparse6Header)
            view.remove_prefix(kSparse6Header.size());
        else if (view.substr(0, kGraph6Header.size()) == kGraph6Header)
            view.remove_prefix(kGraph6Header.size());
        if (view.empty()) continue;
        if (!forced_ && view[0] == '#') continue;

        const unsigned char first = static_cast<unsigned char>(view[0]);
        try {
            if (forced_ == WireFormat::sparse6 || (!forced_ && first == ':'))
                return GraphRecord{parse_sparse6(view), line_, WireFormat::sparse6};
            if (!forced_ && std::isdigit(first)) {
                // An edge list spans the rest of the stream.
                std::ostringstream all;
                all << std::string(view) << "\n" << in_.rdbuf();
                done_ = true;
                Graph g = parse_edgelist(all.str());
                return GraphRecord{std::move(g), line_, WireFormat::edgelist};
            }
            return GraphRecord{parse_graph6(view), line_, WireFormat::graph6};
        } catch (const ParseError& e) {
            throw ParseError(e.raw(), line_, e.byte_offset());
        }
    }
    done_ = true;
    return std::nullopt;
}

} // namespace toughham
