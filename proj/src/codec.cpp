#include "treehost/codec.hpp"

#include <algorithm>
#include <unordered_set>

namespace treehost {

namespace {

constexpr std::int64_t kG6Lo = 63;
constexpr std::int64_t kG6Hi = 126;

void append_bits(std::string& out, std::uint64_t value, int bits) {
    for (int shift = bits - 6; shift >= 0; shift -= 6)
        out.push_back(static_cast<char>(((value >> shift) & 63) + kG6Lo));
}

}  // namespace

std::string graph6_encode(const Graph& g) {
    const std::int64_t n = g.vertex_count();
    std::string out;
    if (n <= 62) {
        out.push_back(static_cast<char>(n + kG6Lo));
    } else if (n <= 258047) {
        out.push_back(126);
        append_bits(out, static_cast<std::uint64_t>(n), 18);
    } else {
        out.push_back(126);
        out.push_back(126);
        append_bits(out, static_cast<std::uint64_t>(n), 36);
    }
    const std::int64_t nbits = n * (n - 1) / 2;
    std::int64_t bit = 0;
    int acc = 0, filled = 0;
    std::string body;
    body.reserve(static_cast<std::size_t>((nbits + 5) / 6));
    for (int j = 1; j < n; ++j) {
        for (int i = 0; i < j; ++i) {
            acc = (acc << 1) | (g.has_edge(i, j) ? 1 : 0);
            if (++filled == 6) {
                body.push_back(static_cast<char>(acc + kG6Lo));
                acc = 0;
                filled = 0;
            }
            ++bit;
        }
    }
    if (filled > 0) body.push_back(static_cast<char>((acc << (6 - filled)) + kG6Lo));
    return out + body;
}

Graph graph6_decode(const std::string& line) {
    std::size_t pos = 0;
    auto need = [&](std::size_t k) {
        if (line.size() - pos < k) throw MalformedGraph6("truncated input");
    };
    auto sixbits = [&]() -> std::int64_t {
        need(1);
        const unsigned char c = static_cast<unsigned char>(line[pos++]);
        if (c < kG6Lo || c > kG6Hi) throw MalformedGraph6("byte outside 63..126");
        return c - kG6Lo;
    };
    std::int64_t n;
    need(1);
    if (static_cast<unsigned char>(line[0]) != 126) {
        n = sixbits();
    } else {
        ++pos;
        need(1);
        if (static_cast<unsigned char>(line[pos]) != 126) {
            n = (sixbits() << 12);
            n |= (sixbits() << 6);
            n |= sixbits();
        } else {
            ++pos;
            n = 0;
            for (int k = 0; k < 6; ++k) n = (n << 6) | sixbits();
        }
    }
    if (n < 0 || n > (1LL << 36)) throw MalformedGraph6("vertex count out of range");
    const std::int64_t nbits = n * (n - 1) / 2;
    const std::size_t want = static_cast<std::size_t>((nbits + 5) / 6);
    if (line.size() - pos != want) throw MalformedGraph6("body length mismatch");
    GraphBuilder b(static_cast<int>(n));
    std::int64_t bit = 0;
    int acc = 0, left = 0;
    for (int j = 1; j < n; ++j) {
        for (int i = 0; i < j; ++i) {
            if (left == 0) {
                acc = static_cast<int>(sixbits());
                left = 6;
            }
            if (acc & (1 << (left - 1))) b.add_edge(i, j);
            --left;
            ++bit;
        }
    }
    return b.freeze();
}

namespace {

const std::string kPlanarHeader = ">>planar_code<<";

struct ByteReader {
    const std::vector<std::uint8_t>& bytes;
    std::size_t pos = 0;

    bool done() const { return pos >= bytes.size(); }

    int u8() {
        if (done()) throw MalformedPlanarCode("unexpected end of stream", pos);
        return bytes[pos++];
    }

    int u16le() {
        if (bytes.size() - pos < 2) throw MalformedPlanarCode("unexpected end of stream", pos);
        int v = bytes[pos] | (bytes[pos + 1] << 8);
        pos += 2;
        return v;
    }
};

}  // namespace

std::vector<std::pair<Graph, RotationSystem>> planar_code_decode(
    const std::vector<std::uint8_t>& bytes) {
    ByteReader r{bytes};
    if (bytes.size() >= kPlanarHeader.size() &&
        std::equal(kPlanarHeader.begin(), kPlanarHeader.end(), bytes.begin()))
        r.pos = kPlanarHeader.size();

    std::vector<std::pair<Graph, RotationSystem>> out;
    while (!r.done()) {
        const std::size_t rec_start = r.pos;
        bool wide = false;
        int n = r.u8();
        if (n == 0) {
            wide = true;
            n = r.u16le();
        }
        if (n == 0) throw MalformedPlanarCode("zero vertex count", rec_start);
        RotationSystem rot;
        rot.order.resize(n);
        GraphBuilder b(n);
        for (int v = 0; v < n; ++v) {
            std::unordered_set<int> seen;
            while (true) {
                const std::size_t at = r.pos;
                const int w = wide ? r.u16le() : r.u8();
                if (w == 0) break;
                if (w > n) throw MalformedPlanarCode("neighbor index out of range", at);
                if (w - 1 == v) throw NonSimpleGraph("self-loop in planar_code record");
                if (!seen.insert(w - 1).second)
                    throw NonSimpleGraph("repeated neighbor in planar_code record");
                rot.order[v].push_back(w - 1);
            }
        }
        for (int v = 0; v < n; ++v)
            for (int w : rot.order[v]) {
                if (std::find(rot.order[w].begin(), rot.order[w].end(), v) == rot.order[w].end())
                    throw MalformedPlanarCode("asymmetric adjacency lists", rec_start);
                if (v < w) b.add_edge(v, w);
            }
        out.emplace_back(b.freeze(), std::move(rot));
    }
    return out;
}

std::vector<std::uint8_t> planar_code_encode(
    const std::vector<std::pair<Graph, RotationSystem>>& graphs, bool with_header) {
    std::vector<std::uint8_t> out;
    if (with_header) out.insert(out.end(), kPlanarHeader.begin(), kPlanarHeader.end());
    for (const auto& [g, rot] : graphs) {
        const int n = g.vertex_count();
        insist(n >= 1 && (int)rot.order.size() == n, "planar_code_encode: bad rotation");
        const bool wide = n > 255;
        auto put = [&](int v) {
            if (wide) {
                out.push_back(static_cast<std::uint8_t>(v & 0xff));
                out.push_back(static_cast<std::uint8_t>((v >> 8) & 0xff));
            } else {
                out.push_back(static_cast<std::uint8_t>(v));
            }
        };
        if (wide) out.push_back(0);
        put(n);
        for (int v = 0; v < n; ++v) {
            for (int w : rot.order[v]) put(w + 1);
            put(0);
        }
    }
    return out;
}

}  // namespace treehost
