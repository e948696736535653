#include "camoe/huffman.hpp"

#include <algorithm>
#include <queue>

#include "camoe/errors.hpp"

namespace camoe {

namespace {

struct TreeNode {
    std::uint64_t count = 0;
    int min_symbol = 0;  // lowest symbol in the subtree, the merge tie-break
    int left = -1;
    int right = -1;
    int symbol = -1;  // >= 0 for leaves
};

void assign_codes(const std::vector<TreeNode>& nodes, int idx, BitStream& prefix,
                  HuffmanCodebook& book) {
    const TreeNode& n = nodes[static_cast<std::size_t>(idx)];
    if (n.symbol >= 0) {
        book.codes[static_cast<std::size_t>(n.symbol)] = prefix;
        return;
    }
    prefix.push_back(0);
    assign_codes(nodes, n.left, prefix, book);
    prefix.back() = 1;
    assign_codes(nodes, n.right, prefix, book);
    prefix.pop_back();
}

// Flat decode trie; children[b] < 0 means no edge.
struct DecodeTrie {
    struct Node {
        int child[2] = {-1, -1};
        int symbol = -1;
    };
    std::vector<Node> nodes;

    explicit DecodeTrie(const HuffmanCodebook& book) {
        nodes.emplace_back();
        for (int s = 0; s < 256; ++s) {
            const BitStream& code = book.codes[static_cast<std::size_t>(s)];
            if (code.empty()) continue;
            int cur = 0;
            for (std::uint8_t b : code) {
                int& next = nodes[static_cast<std::size_t>(cur)].child[b & 1];
                if (next < 0) {
                    next = static_cast<int>(nodes.size());
                    nodes.emplace_back();
                }
                cur = next;
            }
            nodes[static_cast<std::size_t>(cur)].symbol = s;
        }
    }
};

}  // namespace

HuffmanCodebook huffman_build(const std::array<std::uint64_t, 256>& byte_counts) {
    std::vector<TreeNode> nodes;
    auto order = [&nodes](int a, int b) {
        const TreeNode& na = nodes[static_cast<std::size_t>(a)];
        const TreeNode& nb = nodes[static_cast<std::size_t>(b)];
        if (na.count != nb.count) return na.count > nb.count;
        return na.min_symbol > nb.min_symbol;
    };
    std::priority_queue<int, std::vector<int>, decltype(order)> heap(order);
    for (int s = 0; s < 256; ++s) {
        if (byte_counts[static_cast<std::size_t>(s)] == 0) continue;
        nodes.push_back({byte_counts[static_cast<std::size_t>(s)], s, -1, -1, s});
        heap.push(static_cast<int>(nodes.size()) - 1);
    }
    if (nodes.empty()) throw InvalidArgumentError("huffman_build: all-zero histogram");

    HuffmanCodebook book;
    if (nodes.size() == 1) {
        book.codes[static_cast<std::size_t>(nodes[0].symbol)] = BitStream{0};
        return book;
    }
    while (heap.size() > 1) {
        const int a = heap.top();
        heap.pop();
        const int b = heap.top();
        heap.pop();
        TreeNode merged;
        merged.count = nodes[static_cast<std::size_t>(a)].count +
                       nodes[static_cast<std::size_t>(b)].count;
        merged.min_symbol = std::min(nodes[static_cast<std::size_t>(a)].min_symbol,
                                     nodes[static_cast<std::size_t>(b)].min_symbol);
        merged.left = a;
        merged.right = b;
        nodes.push_back(merged);
        heap.push(static_cast<int>(nodes.size()) - 1);
    }
    BitStream prefix;
    assign_codes(nodes, heap.top(), prefix, book);
    return book;
}

BitStream huffman_encode(const std::vector<std::uint8_t>& bytes, const HuffmanCodebook& book) {
    BitStream out;
    for (std::uint8_t b : bytes) {
        const BitStream& code = book.codes[b];
        if (code.empty()) {
            throw InvalidArgumentError("huffman_encode: symbol " + std::to_string(b) +
                                       " not in codebook");
        }
        out.insert(out.end(), code.begin(), code.end());
    }
    return out;
}

namespace {

std::vector<std::uint8_t> decode_impl(const BitStream& bits, const HuffmanCodebook& book,
                                      std::size_t count, bool strict) {
    DecodeTrie trie(book);
    std::vector<std::uint8_t> out;
    out.reserve(count);
    std::size_t pos = 0;
    while (out.size() < count) {
        int cur = 0;
        bool bad = false;
        while (trie.nodes[static_cast<std::size_t>(cur)].symbol < 0) {
            if (pos >= bits.size()) {
                if (strict) throw DecodeError("huffman_decode: truncated bitstream");
                bad = true;
                break;
            }
            const int next = trie.nodes[static_cast<std::size_t>(cur)].child[bits[pos] & 1];
            if (next < 0) {
                if (strict) throw DecodeError("huffman_decode: invalid code path");
                bad = true;
                break;
            }
            ++pos;
            cur = next;
        }
        if (bad) break;
        out.push_back(static_cast<std::uint8_t>(trie.nodes[static_cast<std::size_t>(cur)].symbol));
    }
    out.resize(count, 0);  // lossy path pads missing symbols with 0
    return out;
}

}  // namespace

std::vector<std::uint8_t> huffman_decode(const BitStream& bits, const HuffmanCodebook& book,
                                         std::size_t count) {
    return decode_impl(bits, book, count, true);
}

std::vector<std::uint8_t> huffman_decode_lossy(const BitStream& bits, const HuffmanCodebook& book,
                                               std::size_t count) {
    return decode_impl(bits, book, count, false);
}

}  // namespace camoe
